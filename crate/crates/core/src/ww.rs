//! The a-priori ordered variant: indices enter in nonincreasing order of
//! the norm-bound surrogate `b(d,j)/xi(d,j)`, cut off at a count derived
//! from the target error, with explicit error/cost bounds.
//!
//! With the default `xi_k = C D` the surrogate is monotone along the
//! lattice, so every prefix of the order is a down-set.

use crate::da::{DaStep, DaTrace, RunLimits, TerminalReason};
use crate::error::{Error, Result};
use crate::kernel::SpaceParams;
use crate::lattice::{IndexSet, MultiIndex};
use crate::rules::{CalibrationResult, LadderProfile};

/// Cancellation guard factor, as in the dimension-adaptive run.
const CANCEL_FACTOR: f64 = 1e3 * f64::EPSILON;

/// Enumeration guard for the error-count and order construction.
const MAX_ENUMERATION: usize = 10_000_000;

/// Decay and weight parameters driving the a-priori order.
#[derive(Debug, Clone)]
pub struct WwParams {
    /// Norm-bound constant `C > 0`.
    pub c: f64,
    /// Contraction factor `D` in (0, 1).
    pub d: f64,
    /// Rate exponent `rho > 0`.
    pub rho: f64,
    /// Interpolation parameter `eta` in (0, 1).
    pub eta: f64,
    /// Per-coordinate ordering weights `xi_k > 0`.
    pub xi: Vec<f64>,
    /// Per-coordinate space weights `gamma_k`.
    pub gammas: Vec<f64>,
    criteria2_ok: bool,
}

impl WwParams {
    /// Parameters with explicit ordering weights.
    pub fn new(
        c: f64,
        d: f64,
        rho: f64,
        eta: f64,
        gammas: Vec<f64>,
        xi: Vec<f64>,
    ) -> Result<Self> {
        if !(c > 0.0) {
            return Err(Error::Contract(format!("C must be positive, got {c}")));
        }
        if !(d > 0.0 && d < 1.0) {
            return Err(Error::Contract(format!("D must lie in (0, 1), got {d}")));
        }
        if !(rho > 0.0) {
            return Err(Error::Contract(format!("rho must be positive, got {rho}")));
        }
        if !(eta > 0.0 && eta < 1.0) {
            return Err(Error::Contract(format!("eta must lie in (0, 1), got {eta}")));
        }
        if gammas.is_empty() || gammas.len() != xi.len() {
            return Err(Error::Contract(
                "gammas and xi must be nonempty and of equal length".into(),
            ));
        }
        if gammas.iter().any(|&g| !(g > 0.0 && g <= 1.0)) {
            return Err(Error::Contract("every gamma_k must lie in (0, 1]".into()));
        }
        if xi.iter().any(|&x| !(x > 0.0)) {
            return Err(Error::Contract("every xi_k must be positive".into()));
        }
        // criterion (j+1) D^{j rho} <= 1 over the working depth
        let criteria2_ok =
            (1..=64).all(|j| (j as f64 + 1.0) * d.powf(j as f64 * rho) <= 1.0 + 1e-12);
        Ok(Self {
            c,
            d,
            rho,
            eta,
            xi,
            gammas,
            criteria2_ok,
        })
    }

    /// The default choice `xi_k = C D` for every coordinate.
    pub fn with_default_xi(
        c: f64,
        d: f64,
        rho: f64,
        eta: f64,
        gammas: Vec<f64>,
    ) -> Result<Self> {
        let xi = vec![c * d; gammas.len()];
        Self::new(c, d, rho, eta, gammas, xi)
    }

    /// Parameters from a single-sphere calibration.
    pub fn from_calibration(
        cal: &CalibrationResult,
        eta: f64,
        gammas: Vec<f64>,
    ) -> Result<Self> {
        Self::with_default_xi(cal.c, cal.d, cal.rho, eta, gammas)
    }

    /// Problem dimension.
    pub fn dim(&self) -> usize {
        self.gammas.len()
    }

    /// Whether `(j+1) D^{j rho} <= 1` held at every checked level.
    pub fn criteria2_ok(&self) -> bool {
        self.criteria2_ok
    }

    /// Same parameters at a different eta (the ordering weights do not
    /// depend on eta).
    fn with_eta(&self, eta: f64) -> Self {
        let mut p = self.clone();
        p.eta = eta;
        p
    }
}

/// Ordering key `b(d,j) / xi(d,j)`: the product over active coordinates
/// (`j_k >= 1`) of `sqrt(gamma_k) C D^{j_k} / xi_k`; the empty product for
/// `j = 0` is 1.
pub fn b_over_xi(j: &MultiIndex, params: &WwParams) -> f64 {
    let mut key = 1.0;
    for k in 0..j.d() {
        let jk = j.get(k);
        if jk >= 1 {
            key *= params.gammas[k].sqrt() * params.c * params.d.powi(jk as i32)
                / params.xi[k];
        }
    }
    key
}

/// The a-priori order with its keys.
#[derive(Debug, Clone)]
pub struct WwOrder {
    pub indices: Vec<MultiIndex>,
    pub keys: Vec<f64>,
    /// Indices at which the popped key rose above its predecessor,
    /// evidence that `xi` is not compatible with the lattice order.
    pub order_violations: Vec<MultiIndex>,
}

/// Best-first frontier walk in nonincreasing key order; prefixes are
/// down-sets by construction.
struct KeyEnumerator<'a> {
    params: &'a WwParams,
    set: IndexSet,
}

impl<'a> KeyEnumerator<'a> {
    fn new(params: &'a WwParams) -> Self {
        Self {
            params,
            // enumeration does no cost arithmetic; don't cap components
            set: IndexSet::with_component_cap(params.dim(), u32::MAX),
        }
    }

    fn peek(&self) -> Option<(MultiIndex, f64)> {
        let mut best: Option<(MultiIndex, f64)> = None;
        for j in self.set.frontier() {
            let key = b_over_xi(j, self.params);
            let replace = match &best {
                None => true,
                Some((_, bk)) => key > *bk, // lexicographic tie-break via order
            };
            if replace {
                best = Some((j.clone(), key));
            }
        }
        best
    }

    fn advance(&mut self, j: MultiIndex) -> Result<()> {
        self.set.insert(j)
    }
}

/// Builds the first `n` indices of the order.
pub fn build_order(space: &SpaceParams, params: &WwParams, n: usize) -> Result<WwOrder> {
    if space.d() != params.dim() {
        return Err(Error::Contract(format!(
            "space dimension {} does not match params dimension {}",
            space.d(),
            params.dim()
        )));
    }
    if n == 0 {
        return Err(Error::Contract("order length must be at least 1".into()));
    }
    if n > MAX_ENUMERATION {
        return Err(Error::Capacity(format!(
            "order length {n} exceeds enumeration cap {MAX_ENUMERATION}"
        )));
    }
    let mut enumerator = KeyEnumerator::new(params);
    let mut order = WwOrder {
        indices: Vec::with_capacity(n),
        keys: Vec::with_capacity(n),
        order_violations: Vec::new(),
    };
    while order.indices.len() < n {
        let Some((j, key)) = enumerator.peek() else {
            break;
        };
        if let Some(&prev) = order.keys.last() {
            if key > prev + 1e-12 * prev.abs().max(1.0) {
                order.order_violations.push(j.clone());
            }
        }
        enumerator.advance(j.clone())?;
        order.indices.push(j);
        order.keys.push(key);
    }
    Ok(order)
}

/// `C_1(d, eta)` exactly as printed.
pub fn c1(params: &WwParams) -> f64 {
    let eta = params.eta;
    let d2 = params.d * params.d;
    let d2eta = params.d.powf(2.0 * eta);
    let mut inner = params.xi[0].powf(2.0 * (1.0 - eta)) / (1.0 - d2);
    for k in 1..params.dim() {
        let gamma = params.gammas[k];
        inner *= 1.0
            + (params.c * params.c * gamma).powf(eta)
                * params.xi[k].powf(2.0 * (1.0 - eta))
                * d2eta
                / (1.0 - d2eta);
    }
    inner.sqrt()
}

/// The cutoff count `N(eps, d)`: indices whose key exceeds
/// `(eps / C_1)^{1/(1-eta)}`, and at least 1 so the rule contains the
/// base increment.
pub fn n_eps(eps: f64, params: &WwParams) -> Result<usize> {
    if !(eps > 0.0 && eps < 1.0) {
        return Err(Error::Contract(format!(
            "eps must lie in (0, 1), got {eps}"
        )));
    }
    let tau = threshold(eps, params);
    if tau >= 1.0 {
        return Ok(1);
    }
    let mut enumerator = KeyEnumerator::new(params);
    let mut count = 0usize;
    while let Some((j, key)) = enumerator.peek() {
        if key <= tau {
            break;
        }
        count += 1;
        if count > MAX_ENUMERATION {
            return Err(Error::Capacity(format!(
                "N(eps, d) exceeds enumeration cap {MAX_ENUMERATION} at eps {eps}"
            )));
        }
        enumerator.advance(j)?;
    }
    Ok(count.max(1))
}

fn threshold(eps: f64, params: &WwParams) -> f64 {
    (eps / c1(params)).powf(1.0 / (1.0 - params.eta))
}

/// `f(i, eps)` of the cost bound (1-based coordinate `i >= 2`).
fn f_factor(params: &WwParams, i: usize) -> f64 {
    let eta = params.eta;
    let d2eta = params.d.powf(2.0 * eta);
    let gamma = params.gammas[i - 1];
    let xi = params.xi[i - 1];
    (1.0 + params.c.powf(2.0 * eta) * gamma.powf(eta) * xi.powf(2.0 * (1.0 - eta)) * d2eta
        / (1.0 - d2eta))
        .powf(1.0 / (2.0 * (1.0 - eta)))
}

/// `g(k, eps)` of the cost bound; the outer bracket is the positive part.
fn g_factor(params: &WwParams, k: usize, eps: f64) -> f64 {
    let eta = params.eta;
    let gamma = params.gammas[k - 1];
    let xi = params.xi[k - 1];
    let mut argument = params.c * gamma.sqrt()
        / (xi * (1.0 - params.d * params.d)).powf(1.0 / (2.0 * (1.0 - eta)));
    for i in 2..=k {
        argument *= f_factor(params, i);
    }
    argument *= eps.powf(-1.0 / (1.0 - eta));
    (argument.ln() / (1.0 / params.d).ln()).max(0.0)
}

/// Cost bound `C(d, eps) (1/eps)^{rho/(1-eta)}` at the params' eta.
pub fn ww_cost_bound(eps: f64, params: &WwParams) -> Result<f64> {
    if !(eps > 0.0 && eps < 1.0) {
        return Err(Error::Contract(format!(
            "eps must lie in (0, 1), got {eps}"
        )));
    }
    let rho = params.rho;
    let eta = params.eta;
    let mut numerator = params.xi[0].powf(rho);
    for k in 2..=params.dim() {
        let gamma = params.gammas[k - 1];
        let xi = params.xi[k - 1];
        numerator *= (1.0
            + params.c.powf(rho) * gamma.powf(rho / 2.0) / xi.powf(rho)
                * g_factor(params, k, eps))
            * f_factor(params, k).powf(rho);
    }
    let denominator = (1.0 - params.d.powf(rho))
        * (1.0 - params.d * params.d).powf(rho / (2.0 * (1.0 - eta)));
    Ok(numerator / denominator * (1.0 / eps).powf(rho / (1.0 - eta)))
}

/// Standard eta grid 0.05, 0.10, ..., 0.95 used for the bound curve.
pub fn eta_grid() -> Vec<f64> {
    (1..=19).map(|i| i as f64 * 0.05).collect()
}

/// The bound minimized over the eta grid; returns (bound, argmin eta).
pub fn ww_cost_bound_eta_min(eps: f64, params: &WwParams) -> Result<(f64, f64)> {
    let mut best: Option<(f64, f64)> = None;
    for eta in eta_grid() {
        let bound = ww_cost_bound(eps, &params.with_eta(eta))?;
        if best.map_or(true, |(b, _)| bound < b) {
            best = Some((bound, eta));
        }
    }
    Ok(best.expect("eta grid is nonempty"))
}

/// Accumulates increments in the a-priori order up to `N(eps, d)`,
/// subject to the same budget, exhaustion and cancellation guards as the
/// adaptive run. The trace shape matches the adaptive trace.
pub fn run_ww(
    space: &SpaceParams,
    profiles: &[LadderProfile],
    params: &WwParams,
    limits: &RunLimits,
) -> Result<(IndexSet, DaTrace)> {
    crate::da::validate_profiles(space, profiles)?;
    if profiles.len() != params.dim() {
        return Err(Error::Contract(format!(
            "params dimension {} does not match {} profiles",
            params.dim(),
            profiles.len()
        )));
    }
    let d = profiles.len();
    let tau = threshold(limits.eps(), params);

    let mut set = IndexSet::new(d);
    let mut steps: Vec<DaStep> = Vec::new();
    let zero = MultiIndex::zero(d);
    let first = crate::da::item(&zero, profiles)?;
    let mut p_cum = first.p;
    let mut nu_cum = first.nu;
    set.insert(zero.clone())?;
    steps.push(DaStep {
        index: zero,
        p: first.p,
        nu: first.nu,
        p_cum,
        nu_cum,
        error: (1.0 - p_cum).max(0.0).sqrt(),
    });

    let terminal = loop {
        // best available frontier index by key, ties lexicographic
        let mut best: Option<(MultiIndex, f64, crate::da::KnapsackItem)> = None;
        for j in set.frontier() {
            if let Some(cap) = limits.max_norm() {
                if j.norm_1() > cap {
                    continue;
                }
            }
            let Ok(it) = crate::da::item(j, profiles) else {
                continue;
            };
            let key = b_over_xi(j, params);
            let replace = match &best {
                None => true,
                Some((_, bk, _)) => key > *bk,
            };
            if replace {
                best = Some((j.clone(), key, it));
            }
        }
        let Some((index, key, it)) = best else {
            break TerminalReason::LadderExhausted;
        };
        if key <= tau {
            // the order's eps-cutoff: all N(eps, d) available increments
            // are in place
            break TerminalReason::ErrorTargetMet;
        }
        let error2 = (1.0 - p_cum).max(0.0);
        if it.p < CANCEL_FACTOR * error2 {
            break TerminalReason::CancellationGuard;
        }
        if nu_cum.saturating_add(it.nu) > limits.max_points() {
            break TerminalReason::PointBudget;
        }
        set.insert(index.clone())?;
        p_cum += it.p;
        nu_cum += it.nu;
        steps.push(DaStep {
            index,
            p: it.p,
            nu: it.nu,
            p_cum,
            nu_cum,
            error: (1.0 - p_cum).max(0.0).sqrt(),
        });
    };

    Ok((set, DaTrace { steps, terminal }))
}
