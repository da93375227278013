//! Multi-index lattice machinery: the componentwise partial order on N^d,
//! down-sets, forward neighbourhoods and frontier maintenance.
//!
//! The frontier of an index set is the set of minimal elements of its
//! complement; the greedy solvers only ever inspect frontier indices.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};

/// Guard on individual index components; cost products overflow far below
/// this in practice.
pub const COMPONENT_CAP: u32 = 64;

/// An element of N^d.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MultiIndex {
    components: Vec<u32>,
}

impl MultiIndex {
    pub fn new(components: Vec<u32>) -> Self {
        Self { components }
    }

    /// The zero index of dimension `d`.
    pub fn zero(d: usize) -> Self {
        Self {
            components: vec![0; d],
        }
    }

    pub fn d(&self) -> usize {
        self.components.len()
    }

    pub fn components(&self) -> &[u32] {
        &self.components
    }

    pub fn get(&self, k: usize) -> u32 {
        self.components[k]
    }

    pub fn norm_1(&self) -> u32 {
        self.components.iter().sum()
    }

    /// Componentwise comparison `self <= other`.
    pub fn leq(&self, other: &MultiIndex) -> Result<bool> {
        if self.d() != other.d() {
            return Err(Error::Contract(format!(
                "cannot compare indices of dimension {} and {}",
                self.d(),
                other.d()
            )));
        }
        Ok(self
            .components
            .iter()
            .zip(&other.components)
            .all(|(a, b)| a <= b))
    }

    fn bumped(&self, k: usize) -> MultiIndex {
        let mut c = self.components.clone();
        c[k] += 1;
        MultiIndex::new(c)
    }

    fn lowered(&self, k: usize) -> MultiIndex {
        let mut c = self.components.clone();
        c[k] -= 1;
        MultiIndex::new(c)
    }
}

impl fmt::Display for MultiIndex {
    /// Renders as "j1,j2,...,jd".
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for c in &self.components {
            if !first {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
            first = false;
        }
        Ok(())
    }
}

/// Componentwise partial order as a free function.
pub fn leq(i: &MultiIndex, j: &MultiIndex) -> Result<bool> {
    i.leq(j)
}

/// The forward neighbourhood `S(i) = { i + e_k | k = 1..d }`: the minimal
/// elements strictly above `i`.
pub fn forward_neighborhood(i: &MultiIndex) -> Vec<MultiIndex> {
    (0..i.d()).map(|k| i.bumped(k)).collect()
}

/// The full box below `i`, of cardinality `prod_k (i_k + 1)`.
pub fn down_set(i: &MultiIndex) -> Result<Vec<MultiIndex>> {
    const CAP: usize = 10_000_000;
    let mut size: usize = 1;
    for &c in i.components() {
        size = size
            .checked_mul(c as usize + 1)
            .filter(|&s| s <= CAP)
            .ok_or_else(|| {
                Error::Capacity(format!("down-set of {i} exceeds {CAP} elements"))
            })?;
    }
    let d = i.d();
    let mut out = Vec::with_capacity(size);
    let mut current = vec![0u32; d];
    loop {
        out.push(MultiIndex::new(current.clone()));
        // odometer increment bounded by i
        let mut k = 0;
        loop {
            if k == d {
                return Ok(out);
            }
            if current[k] < i.get(k) {
                current[k] += 1;
                break;
            }
            current[k] = 0;
            k += 1;
        }
    }
}

/// A finite down-set of N^d together with its maintained frontier.
///
/// The frontier is kept exactly equal to the minimal elements of the
/// complement: a forward neighbour enters only once all of its immediate
/// predecessors are members.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IndexSet {
    d: usize,
    cap: u32,
    members: BTreeSet<MultiIndex>,
    frontier: BTreeSet<MultiIndex>,
}

impl IndexSet {
    /// The empty down-set; its frontier is `{0}`.
    pub fn new(d: usize) -> Self {
        Self::with_component_cap(d, COMPONENT_CAP)
    }

    /// Empty down-set with an explicit component cap (pure enumeration
    /// may need to exceed the cost-arithmetic default).
    pub fn with_component_cap(d: usize, cap: u32) -> Self {
        let mut frontier = BTreeSet::new();
        frontier.insert(MultiIndex::zero(d));
        Self {
            d,
            cap,
            members: BTreeSet::new(),
            frontier,
        }
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, j: &MultiIndex) -> bool {
        self.members.contains(j)
    }

    pub fn members(&self) -> impl Iterator<Item = &MultiIndex> {
        self.members.iter()
    }

    pub fn frontier(&self) -> impl Iterator<Item = &MultiIndex> {
        self.frontier.iter()
    }

    pub fn in_frontier(&self, j: &MultiIndex) -> bool {
        self.frontier.contains(j)
    }

    /// Inserts a frontier index, updating the frontier.
    ///
    /// Inserting anything other than a frontier index would break the
    /// down-set property and is rejected.
    pub fn insert(&mut self, j: MultiIndex) -> Result<()> {
        if j.d() != self.d {
            return Err(Error::Contract(format!(
                "index dimension {} does not match set dimension {}",
                j.d(),
                self.d
            )));
        }
        if !self.frontier.contains(&j) {
            return Err(Error::Admissibility(format!(
                "index {j} is not a minimal element of the complement"
            )));
        }
        if j.components().iter().any(|&c| c > self.cap) {
            return Err(Error::Capacity(format!(
                "index component exceeds cap {}: {j}",
                self.cap
            )));
        }
        self.frontier.remove(&j);
        self.members.insert(j.clone());
        for s in forward_neighborhood(&j) {
            let ready = (0..self.d)
                .all(|k| s.get(k) == 0 || self.members.contains(&s.lowered(k)));
            if ready {
                self.frontier.insert(s);
            }
        }
        Ok(())
    }
}
