//! Materialization of an index set into an explicit quadrature rule on
//! the product domain, plus independent verification of its worst-case
//! error through the kernel quadratic form.
//!
//! The sum of product difference rules over a down-set telescopes into a
//! signed combination of full tensor rules; expanding that combination
//! over the union grid gives one point/weight list. Per-dimension optimal
//! weights are used directly, which avoids differencing noise.

use std::collections::BTreeMap;

use crate::design::DesignLadder;
use crate::error::{Error, Result};
use crate::kernel::{ArSeries, SpaceParams, SpherePoint};
use crate::lattice::{IndexSet, MultiIndex};
use crate::rules::LadderProfile;

/// Default cap on the number of expanded grid tuples.
pub const DEFAULT_GRID_CAP: usize = 10_000_000;

/// Weights below `1e-15 * max |w|` are pruned after merging.
const PRUNE_FACTOR: f64 = 1e-15;

/// An explicit quadrature rule on `(S^2)^d`.
#[derive(Debug, Clone)]
pub struct ProductRule {
    points: Vec<Vec<SpherePoint>>,
    weights: Vec<f64>,
    declared_e2: f64,
    index_set: IndexSet,
    point_ids: Vec<Vec<u32>>,
    pruned: usize,
}

impl ProductRule {
    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    pub fn points(&self) -> &[Vec<SpherePoint>] {
        &self.points
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    /// `1 - p(I)` accumulated by the solver that built the index set.
    pub fn declared_e2(&self) -> f64 {
        self.declared_e2
    }

    pub fn index_set(&self) -> &IndexSet {
        &self.index_set
    }

    /// Number of merged weights dropped as numerically zero.
    pub fn pruned(&self) -> usize {
        self.pruned
    }

    /// CSV export: `w,x_1,y_1,z_1,...,x_d,y_d,z_d` rows at 17 significant
    /// digits.
    pub fn to_csv(&self) -> String {
        let d = self.index_set.d();
        let mut header = String::from("w");
        for k in 1..=d {
            header.push_str(&format!(",x_{k},y_{k},z_{k}"));
        }
        header.push('\n');
        let mut out = header;
        for (tuple, w) in self.points.iter().zip(&self.weights) {
            out.push_str(&format!("{w:.16e}"));
            for p in tuple {
                out.push_str(&format!(",{:.16e},{:.16e},{:.16e}", p.x(), p.y(), p.z()));
            }
            out.push('\n');
        }
        out
    }
}

/// Inclusion-exclusion coefficients of a down-set:
/// `c_j = sum_{z in {0,1}^d, j+z in I} (-1)^{|z|}`, nonzero entries only.
///
/// They satisfy `sum_{j in I} Delta_j = sum_j c_j (tensor of q_{j_k})`.
pub fn combination_coefficients(index_set: &IndexSet) -> BTreeMap<MultiIndex, i64> {
    let d = index_set.d();
    let mut coefficients = BTreeMap::new();
    for j in index_set.members() {
        let mut c = 0i64;
        for bits in 0u32..(1 << d) {
            let mut neighbor = j.components().to_vec();
            let mut parity = 0u32;
            for (k, comp) in neighbor.iter_mut().enumerate() {
                if bits >> k & 1 == 1 {
                    *comp += 1;
                    parity ^= 1;
                }
            }
            if index_set.contains(&MultiIndex::new(neighbor)) {
                c += if parity == 1 { -1 } else { 1 };
            }
        }
        if c != 0 {
            coefficients.insert(j.clone(), c);
        }
    }
    coefficients
}

/// Expands the combination of tensor rules over the union grid into a
/// single point/weight list. Coincident tuples (bit-identical, since all
/// coordinates come from shared ladder storage) are merged by summation.
pub fn materialize(
    index_set: &IndexSet,
    profiles: &[LadderProfile],
    ladders: &[&DesignLadder],
    grid_cap: Option<usize>,
) -> Result<ProductRule> {
    let d = index_set.d();
    if profiles.len() != d || ladders.len() != d {
        return Err(Error::Contract(format!(
            "need {d} profiles and ladders, got {} and {}",
            profiles.len(),
            ladders.len()
        )));
    }
    if index_set.is_empty() {
        return Err(Error::Contract("cannot materialize an empty index set".into()));
    }
    for (k, (profile, ladder)) in profiles.iter().zip(ladders).enumerate() {
        let usable = profile.usable_levels().min(ladder.levels());
        for j in index_set.members() {
            let level = j.get(k) as usize;
            if level >= usable {
                return Err(Error::Exhausted(format!(
                    "index {j} needs level {level} in dimension {} ({usable} usable)",
                    k + 1
                )));
            }
            if profile.n()[level] != ladder.n()[level] {
                return Err(Error::Contract(format!(
                    "profile and ladder disagree on n_{level} in dimension {}",
                    k + 1
                )));
            }
        }
    }

    let coefficients = combination_coefficients(index_set);
    let cap = grid_cap.unwrap_or(DEFAULT_GRID_CAP);
    let mut expanded: usize = 0;
    for j in coefficients.keys() {
        let grid: usize = (0..d)
            .map(|k| profiles[k].n()[j.get(k) as usize])
            .product();
        expanded = expanded.saturating_add(grid);
        if expanded > cap {
            return Err(Error::Capacity(format!(
                "expanded grid exceeds {cap} tuples"
            )));
        }
    }

    // accumulate merged weights keyed by per-dimension point indices
    let mut merged: BTreeMap<Vec<u32>, f64> = BTreeMap::new();
    for (j, &c) in &coefficients {
        let sizes: Vec<usize> = (0..d)
            .map(|k| profiles[k].n()[j.get(k) as usize])
            .collect();
        let level_weights: Vec<&[f64]> = (0..d)
            .map(|k| profiles[k].weights(j.get(k) as usize))
            .collect();
        let mut cursor = vec![0usize; d];
        loop {
            let mut weight = c as f64;
            for k in 0..d {
                weight *= level_weights[k][cursor[k]];
            }
            let key: Vec<u32> = cursor.iter().map(|&i| i as u32).collect();
            *merged.entry(key).or_insert(0.0) += weight;
            let mut k = 0;
            loop {
                if k == d {
                    break;
                }
                cursor[k] += 1;
                if cursor[k] < sizes[k] {
                    break;
                }
                cursor[k] = 0;
                k += 1;
            }
            if k == d {
                break;
            }
        }
    }

    let max_weight = merged.values().fold(0.0f64, |m, w| m.max(w.abs()));
    let threshold = PRUNE_FACTOR * max_weight;
    let mut points = Vec::with_capacity(merged.len());
    let mut weights = Vec::with_capacity(merged.len());
    let mut point_ids = Vec::with_capacity(merged.len());
    let mut pruned = 0usize;
    for (ids, weight) in merged {
        if weight.abs() < threshold {
            pruned += 1;
            continue;
        }
        let tuple: Vec<SpherePoint> = ids
            .iter()
            .enumerate()
            .map(|(k, &i)| ladders[k].all_points()[i as usize])
            .collect();
        points.push(tuple);
        weights.push(weight);
        point_ids.push(ids);
    }

    let declared_p: f64 = index_set
        .members()
        .map(|j| {
            (0..d)
                .map(|k| profiles[k].delta2()[j.get(k) as usize])
                .product::<f64>()
        })
        .sum();

    Ok(ProductRule {
        points,
        weights,
        declared_e2: (1.0 - declared_p).max(0.0),
        index_set: index_set.clone(),
        point_ids,
        pruned,
    })
}

/// Recomputes the squared worst-case error directly:
/// `e^2 = 1 - 2 sum_i w_i + sum_{i,i'} w_i w_{i'} K_d(x_i, x_{i'})`.
///
/// Kernel values are tabulated per dimension over the distinct points the
/// rule actually uses, so the quadratic form costs `O(n^2 d)` lookups.
pub fn verify_error(rule: &ProductRule, space: &SpaceParams) -> Result<f64> {
    let d = space.d();
    if rule.index_set.d() != d {
        return Err(Error::Contract(format!(
            "rule dimension {} does not match space dimension {d}",
            rule.index_set.d()
        )));
    }
    let n = rule.len();
    // compact per-dimension ids and kernel tables
    let mut tables: Vec<Vec<f64>> = Vec::with_capacity(d);
    let mut compact: Vec<Vec<usize>> = vec![vec![0; n]; d];
    for k in 0..d {
        let mut remap: BTreeMap<u32, usize> = BTreeMap::new();
        let mut distinct: Vec<SpherePoint> = Vec::new();
        for (i, ids) in rule.point_ids.iter().enumerate() {
            let id = ids[k];
            let next = remap.len();
            let slot = *remap.entry(id).or_insert(next);
            if slot == distinct.len() {
                distinct.push(rule.points[i][k]);
            }
            compact[k][i] = slot;
        }
        let params = space.dim_params(k);
        let series = ArSeries::for_params(params);
        let m = distinct.len();
        let mut table = vec![0.0; m * m];
        for a in 0..m {
            for b in a..m {
                let value = 1.0 + params.gamma() * series.eval(distinct[a].dot(&distinct[b]));
                table[a * m + b] = value;
                table[b * m + a] = value;
            }
        }
        tables.push(table);
    }
    let sizes: Vec<usize> = (0..d)
        .map(|k| (tables[k].len() as f64).sqrt() as usize)
        .collect();

    let weight_sum: f64 = rule.weights.iter().sum();
    let mut quad = 0.0;
    for i in 0..n {
        for j in i..n {
            let mut kernel = 1.0;
            for k in 0..d {
                kernel *= tables[k][compact[k][i] * sizes[k] + compact[k][j]];
            }
            let term = rule.weights[i] * rule.weights[j] * kernel;
            quad += if i == j { term } else { 2.0 * term };
        }
    }
    Ok(1.0 - 2.0 * weight_sum + quad)
}

/// Applies the rule to an integrand: `sum_i w_i f(x_i)`.
pub fn integrate(rule: &ProductRule, f: impl Fn(&[SpherePoint]) -> f64) -> f64 {
    rule.points
        .iter()
        .zip(&rule.weights)
        .map(|(tuple, w)| w * f(tuple))
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::da::{run_da, RunLimits};
    use crate::design::builtin_ladder;
    use crate::kernel::{a_r_truncated, KernelParams};
    use crate::rules::profile_ladder;
    use approx::assert_abs_diff_eq;

    fn downset(d: usize, picks: &[&[u32]]) -> IndexSet {
        let mut set = IndexSet::new(d);
        set.insert(MultiIndex::zero(d)).unwrap();
        for p in picks {
            set.insert(MultiIndex::new(p.to_vec())).unwrap();
        }
        set
    }

    #[test]
    fn coefficients_of_full_box() {
        let set = downset(2, &[&[1, 0], &[0, 1], &[1, 1]]);
        let c = combination_coefficients(&set);
        assert_eq!(c.len(), 1);
        assert_eq!(c[&MultiIndex::new(vec![1, 1])], 1);
    }

    #[test]
    fn coefficients_of_l_shape() {
        let set = downset(2, &[&[1, 0], &[0, 1]]);
        let c = combination_coefficients(&set);
        assert_eq!(c.len(), 3);
        assert_eq!(c[&MultiIndex::new(vec![0, 0])], -1);
        assert_eq!(c[&MultiIndex::new(vec![1, 0])], 1);
        assert_eq!(c[&MultiIndex::new(vec![0, 1])], 1);
    }

    #[test]
    fn coefficients_sum_to_one_on_random_downsets() {
        let mut state = 0x7777_1234_5678_9abcu64;
        let mut rand = move |m: usize| {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            (state >> 33) as usize % m
        };
        for d in 1..=3usize {
            for _ in 0..20 {
                let mut set = IndexSet::new(d);
                set.insert(MultiIndex::zero(d)).unwrap();
                for _ in 0..rand(12) {
                    let f: Vec<MultiIndex> = set.frontier().cloned().collect();
                    set.insert(f[rand(f.len())].clone()).unwrap();
                }
                let c = combination_coefficients(&set);
                let total: i64 = c.values().sum();
                assert_eq!(total, 1, "coefficients must sum to 1");
                // support: c_j = 0 whenever the whole unit cube above j
                // stays inside I
                for j in set.members() {
                    let cube_inside = (0u32..(1 << d)).all(|bits| {
                        let mut comps = j.components().to_vec();
                        for (k, comp) in comps.iter_mut().enumerate() {
                            if bits >> k & 1 == 1 {
                                *comp += 1;
                            }
                        }
                        set.contains(&MultiIndex::new(comps))
                    });
                    if cube_inside {
                        assert!(!c.contains_key(j));
                    }
                }
            }
        }
    }

    #[test]
    fn one_dimensional_chain_reproduces_ladder_rule() {
        let ladder = builtin_ladder(3).unwrap();
        let params = KernelParams::new(3.0, 1.0).unwrap();
        let profile = profile_ladder(&ladder, &params).unwrap();
        let mut set = IndexSet::new(1);
        for j in 0..=2u32 {
            set.insert(MultiIndex::new(vec![j])).unwrap();
        }
        let rule = materialize(&set, &[profile.clone()], &[&ladder], None).unwrap();
        assert_eq!(rule.len(), profile.n()[2]);
        // weights must match the level-2 optimal weights, point by point
        for (ids, w) in rule.point_ids.iter().zip(rule.weights()) {
            let expected = profile.weights(2)[ids[0] as usize];
            assert_abs_diff_eq!(*w, expected, epsilon = 1e-12);
        }
        assert_abs_diff_eq!(rule.declared_e2(), profile.e2()[2], epsilon = 1e-12);
    }

    #[test]
    fn singleton_index_set_is_level_zero_tensor() {
        let ladder = builtin_ladder(2).unwrap();
        let params = KernelParams::new(3.0, 0.5).unwrap();
        let profile = profile_ladder(&ladder, &params).unwrap();
        let mut set = IndexSet::new(2);
        set.insert(MultiIndex::zero(2)).unwrap();
        let rule = materialize(
            &set,
            &[profile.clone(), profile.clone()],
            &[&ladder, &ladder],
            None,
        )
        .unwrap();
        assert_eq!(rule.len(), 1);
        let w0 = profile.weights(0)[0];
        assert_abs_diff_eq!(rule.weights()[0], w0 * w0, epsilon = 1e-14);
    }

    #[test]
    fn declared_error_matches_direct_quadratic_form() {
        let ladder = builtin_ladder(3).unwrap();
        let space = SpaceParams::geometric(3.0, 0.5, 2).unwrap();
        let profiles: Vec<_> = (0..2)
            .map(|k| profile_ladder(&ladder, space.dim_params(k)).unwrap())
            .collect();
        let limits = RunLimits::new(0.05, 2_000).unwrap();
        let (set, trace) = run_da(&space, &profiles, &limits).unwrap();
        let rule = materialize(&set, &profiles, &[&ladder, &ladder], None).unwrap();
        let direct = verify_error(&rule, &space).unwrap();
        assert_abs_diff_eq!(direct, rule.declared_e2(), epsilon = 1e-8);
        assert_abs_diff_eq!(
            rule.declared_e2(),
            trace.steps.last().unwrap().error.powi(2),
            epsilon = 1e-12
        );
        assert!(direct >= -1e-10, "squared norm cannot be negative");
    }

    #[test]
    fn enlarging_the_index_set_keeps_existing_points() {
        let ladder = builtin_ladder(3).unwrap();
        let space = SpaceParams::geometric(3.0, 0.5, 2).unwrap();
        let profiles: Vec<_> = (0..2)
            .map(|k| profile_ladder(&ladder, space.dim_params(k)).unwrap())
            .collect();
        let mut set = IndexSet::new(2);
        set.insert(MultiIndex::zero(2)).unwrap();
        set.insert(MultiIndex::new(vec![1, 0])).unwrap();
        let small = materialize(&set, &profiles, &[&ladder, &ladder], None).unwrap();
        set.insert(MultiIndex::new(vec![0, 1])).unwrap();
        let large = materialize(&set, &profiles, &[&ladder, &ladder], None).unwrap();
        for ids in &small.point_ids {
            assert!(
                large.point_ids.contains(ids),
                "point {ids:?} lost when enlarging"
            );
        }
    }

    #[test]
    fn integrate_constant_gives_weight_sum() {
        let ladder = builtin_ladder(2).unwrap();
        let params = KernelParams::new(3.0, 1.0).unwrap();
        let profile = profile_ladder(&ladder, &params).unwrap();
        let mut set = IndexSet::new(1);
        set.insert(MultiIndex::zero(1)).unwrap();
        set.insert(MultiIndex::new(vec![1])).unwrap();
        let rule = materialize(&set, &[profile], &[&ladder], None).unwrap();
        let total = integrate(&rule, |_| 1.0);
        let wsum: f64 = rule.weights().iter().sum();
        assert_abs_diff_eq!(total, wsum, epsilon = 1e-15);
    }

    #[test]
    fn integrate_odd_zonal_integrand_at_d2() {
        // f(x) = prod_k (1 + z_k) has exact integral 1 (odd part vanishes)
        // and norm_k^2 = 1 + 2^r/(3 gamma_k); the quadrature error must
        // respect |Q(f) - 1| <= e(q) * ||f||.
        let ladder = builtin_ladder(4).unwrap();
        let space = SpaceParams::geometric(3.0, 0.5, 2).unwrap();
        let profiles: Vec<_> = (0..2)
            .map(|k| profile_ladder(&ladder, space.dim_params(k)).unwrap())
            .collect();
        let limits = RunLimits::new(0.02, 5_000).unwrap();
        let (set, _) = run_da(&space, &profiles, &limits).unwrap();
        let rule = materialize(&set, &profiles, &[&ladder, &ladder], None).unwrap();
        let value = integrate(&rule, |x| (1.0 + x[0].z()) * (1.0 + x[1].z()));
        let norm: f64 = (0..2)
            .map(|k| 1.0 + 8.0 / (3.0 * space.dim_params(k).gamma()))
            .product::<f64>()
            .sqrt();
        let bound = rule.declared_e2().sqrt() * norm;
        assert!(
            (value - 1.0).abs() <= bound * 1.1,
            "|{value} - 1| exceeds e(q)*||f|| = {bound}"
        );
    }

    #[test]
    fn zonal_series_integrand_matches_product_integral() {
        // f(x) = prod_k (1 + A_r-partial(x_k . pole)) integrates to 1
        // because each zonal factor has zero mean
        let ladder = builtin_ladder(4).unwrap();
        let space = SpaceParams::geometric(3.0, 0.5, 2).unwrap();
        let profiles: Vec<_> = (0..2)
            .map(|k| profile_ladder(&ladder, space.dim_params(k)).unwrap())
            .collect();
        let limits = RunLimits::new(0.01, 5_000).unwrap();
        let (set, _) = run_da(&space, &profiles, &limits).unwrap();
        let rule = materialize(&set, &profiles, &[&ladder, &ladder], None).unwrap();
        let pole = crate::kernel::NORTH_POLE;
        let value = integrate(&rule, |x| {
            (1.0 + a_r_truncated(x[0].dot(&pole), 3.0, 12))
                * (1.0 + a_r_truncated(x[1].dot(&pole), 3.0, 12))
        });
        assert_abs_diff_eq!(value, 1.0, epsilon = 2e-2);
    }

    #[test]
    fn grid_cap_is_enforced() {
        let ladder = builtin_ladder(4).unwrap();
        let params = KernelParams::new(3.0, 1.0).unwrap();
        let profile = profile_ladder(&ladder, &params).unwrap();
        let profiles = vec![profile.clone(), profile.clone(), profile];
        let mut set = IndexSet::new(3);
        set.insert(MultiIndex::zero(3)).unwrap();
        for k in 0..3u32 {
            let mut c = vec![0u32; 3];
            c[k as usize] = 1;
            set.insert(MultiIndex::new(c)).unwrap();
        }
        let err = materialize(
            &set,
            &profiles,
            &[&ladder, &ladder, &ladder],
            Some(3),
        );
        assert!(matches!(err, Err(Error::Capacity(_))));
    }

    #[test]
    fn materialize_rejects_exhausted_levels() {
        let ladder = builtin_ladder(1).unwrap();
        let params = KernelParams::new(3.0, 1.0).unwrap();
        let profile = profile_ladder(&ladder, &params).unwrap();
        let mut set = IndexSet::new(1);
        set.insert(MultiIndex::zero(1)).unwrap();
        set.insert(MultiIndex::new(vec![1])).unwrap();
        set.insert(MultiIndex::new(vec![2])).unwrap();
        let err = materialize(&set, &[profile], &[&ladder], None);
        assert!(matches!(err, Err(Error::Exhausted(_))));
    }
}
