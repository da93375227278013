//! Sparse-grid quadrature with optimal weights on products of the unit sphere.
//!
//! The library builds quadrature rules for weighted tensor products of
//! reproducing kernel Hilbert spaces on `(S^2)^d`. Per coordinate, nested
//! point sets come from unions of spherical designs; optimal weights are
//! obtained by solving the kernel linear system, and the resulting
//! incremental rules feed two index-set construction strategies:
//!
//! * a dimension-adaptive greedy solver for the down-set-constrained
//!   knapsack problem ([`da::run_da`]), and
//! * an a-priori ordering by a norm-bound surrogate ([`ww::run_ww`]),
//!   together with its explicit cost bound ([`ww::ww_cost_bound`]).
//!
//! Index sets can be materialized into explicit point/weight rules on the
//! product domain ([`assembly::materialize`]) and re-verified against the
//! kernel quadratic form ([`assembly::verify_error`]).

pub mod assembly;
pub mod da;
pub mod design;
pub mod error;
pub mod kernel;
pub mod lattice;
pub mod rules;
pub mod ww;

mod builtin_data;

pub use error::{Error, Result};
pub use kernel::{KernelParams, SpaceParams, SpherePoint};
pub use lattice::{IndexSet, MultiIndex};
