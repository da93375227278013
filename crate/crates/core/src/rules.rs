//! Optimal-weight quadrature rules on the ladder levels of a single
//! sphere, their worst-case errors, incremental squared norms, and the
//! calibration of the decay constants.
//!
//! For points `x_1..x_n` the optimal rule solves `K w = 1` with
//! `K_hi = 1 + gamma A_r(x_h . x_i)`; its squared worst-case error is
//! `e^2 = 1 - sum_i w_i`. Successive levels are nested, so the squared
//! norms of the increments telescope: `e^2(q_{j-1}) = e^2(q_j) + |delta_j|^2`.

use nalgebra::{DMatrix, DVector};

use crate::design::DesignLadder;
use crate::error::{Error, Result};
use crate::kernel::{ArSeries, KernelParams, SpherePoint};

/// Residual threshold above which the SPD solve falls back to
/// least squares.
const RESIDUAL_SWITCH: f64 = 1e-6;

/// Relative singular-value cutoff for the least-squares fallback.
const SV_CUTOFF: f64 = 1e-12;

/// Per-level solver diagnostics.
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct LevelDiag {
    /// Least-squares fallback was used for the weights.
    pub least_squares: bool,
    /// The computed error left [0, 1] and was clamped.
    pub clamped: bool,
    /// The error failed to decrease at this level.
    pub degenerate: bool,
    /// Profiling stopped at this level (cancellation guard).
    pub terminal: bool,
    /// Max-norm residual of `K w - 1` after the solve.
    pub residual: f64,
}

impl LevelDiag {
    pub fn label(&self) -> String {
        let mut tags = Vec::new();
        if self.least_squares {
            tags.push("lsq");
        }
        if self.clamped {
            tags.push("clamped");
        }
        if self.degenerate {
            tags.push("degenerate");
        }
        if self.terminal {
            tags.push("terminal");
        }
        if tags.is_empty() {
            "ok".to_string()
        } else {
            tags.join("+")
        }
    }
}

/// Result of one optimal-weight solve.
#[derive(Debug, Clone)]
pub struct WeightSolve {
    pub weights: Vec<f64>,
    pub e2: f64,
    pub diag: LevelDiag,
}

/// Per-level rules of a ladder at one coordinate weight.
#[derive(Debug, Clone)]
pub struct LadderProfile {
    r: f64,
    gamma: f64,
    weights: Vec<Vec<f64>>,
    e2: Vec<f64>,
    delta2: Vec<f64>,
    nu: Vec<usize>,
    n: Vec<usize>,
    flags: Vec<LevelDiag>,
}

impl LadderProfile {
    /// Assembles a profile from explicit per-level data, mainly for
    /// synthetic solver instances. Slices must agree in length.
    #[allow(clippy::too_many_arguments)]
    pub fn from_parts(
        r: f64,
        gamma: f64,
        weights: Vec<Vec<f64>>,
        e2: Vec<f64>,
        delta2: Vec<f64>,
        nu: Vec<usize>,
        n: Vec<usize>,
        flags: Vec<LevelDiag>,
    ) -> Self {
        assert!(
            e2.len() == delta2.len()
                && e2.len() == nu.len()
                && e2.len() == n.len()
                && e2.len() == flags.len()
                && e2.len() == weights.len(),
            "per-level vectors must agree in length"
        );
        Self {
            r,
            gamma,
            weights,
            e2,
            delta2,
            nu,
            n,
            flags,
        }
    }

    pub fn r(&self) -> f64 {
        self.r
    }

    pub fn gamma(&self) -> f64 {
        self.gamma
    }

    /// Number of profiled levels (a terminal level, if any, is last).
    pub fn levels(&self) -> usize {
        self.e2.len()
    }

    /// Levels usable as knapsack items: everything before the first level
    /// whose increment collapsed to zero.
    pub fn usable_levels(&self) -> usize {
        self.delta2
            .iter()
            .position(|&d| d <= 0.0)
            .unwrap_or(self.delta2.len())
    }

    pub fn weights(&self, j: usize) -> &[f64] {
        &self.weights[j]
    }

    pub fn e2(&self) -> &[f64] {
        &self.e2
    }

    pub fn delta2(&self) -> &[f64] {
        &self.delta2
    }

    pub fn nu(&self) -> &[usize] {
        &self.nu
    }

    pub fn n(&self) -> &[usize] {
        &self.n
    }

    pub fn flags(&self) -> &[LevelDiag] {
        &self.flags
    }

    /// CSV export: `j,n_j,nu_j,e2,delta2,flag`, LF-terminated rows,
    /// 17 significant digits.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("j,n_j,nu_j,e2,delta2,flag\n");
        for j in 0..self.levels() {
            out.push_str(&format!(
                "{},{},{},{:.16e},{:.16e},{}\n",
                j,
                self.n[j],
                self.nu[j],
                self.e2[j],
                self.delta2[j],
                self.flags[j].label()
            ));
        }
        out
    }
}

/// Solves `K w = 1`, preferring the SPD factorization with iterative
/// refinement and falling back to a minimum-norm least-squares solve.
fn solve_unit_rhs(kmat: &DMatrix<f64>) -> (DVector<f64>, f64, bool) {
    let n = kmat.nrows();
    let ones = DVector::from_element(n, 1.0);
    let inf_residual = |w: &DVector<f64>| -> f64 { (kmat * w - &ones).amax() };

    if let Some(chol) = kmat.clone().cholesky() {
        let mut w = chol.solve(&ones);
        for _ in 0..2 {
            let r = &ones - kmat * &w;
            w += chol.solve(&r);
        }
        let residual = inf_residual(&w);
        if residual <= RESIDUAL_SWITCH {
            return (w, residual, false);
        }
    }

    let svd = kmat.clone().svd(true, true);
    let sigma_max = svd.singular_values.max();
    let w = svd
        .solve(&ones, SV_CUTOFF * sigma_max)
        .expect("svd requested with both factors");
    let residual = inf_residual(&w);
    (w, residual, true)
}

/// Optimal weights and squared worst-case error for a point set.
pub fn optimal_weights(points: &[SpherePoint], params: &KernelParams) -> Result<WeightSolve> {
    if points.is_empty() {
        return Err(Error::Contract(
            "optimal_weights needs at least one point".into(),
        ));
    }
    let n = points.len();
    let series = ArSeries::for_params(params);
    let kmat = DMatrix::from_fn(n, n, |h, i| {
        1.0 + params.gamma() * series.eval(points[h].dot(&points[i]))
    });
    let (w, residual, least_squares) = solve_unit_rhs(&kmat);
    let raw_e2 = 1.0 - w.sum();
    let e2 = raw_e2.clamp(0.0, 1.0);
    Ok(WeightSolve {
        weights: w.iter().cloned().collect(),
        e2,
        diag: LevelDiag {
            least_squares,
            clamped: raw_e2 != e2,
            degenerate: false,
            terminal: false,
            residual,
        },
    })
}

/// Squared worst-case error of the equal-weight rule:
/// `gamma / m^2 * sum_{h,i} A_r(x_h . x_i)`.
pub fn qmc_error(points: &[SpherePoint], params: &KernelParams) -> f64 {
    let m = points.len();
    let series = ArSeries::for_params(params);
    let mut sum = 0.0;
    for h in 0..m {
        for i in h..m {
            let a = series.eval(points[h].dot(&points[i]));
            sum += if h == i { a } else { 2.0 * a };
        }
    }
    params.gamma() * sum / (m * m) as f64
}

/// Precomputed kernel-series values on a ladder's cumulative point set.
///
/// The `A_r` Gram matrix does not depend on the coordinate weight, so one
/// assembly serves every `gamma`; per-level systems are its leading
/// principal blocks shifted by `1 + gamma A`.
#[derive(Debug, Clone)]
pub struct LadderGram {
    r: f64,
    truncation_tol: f64,
    n: Vec<usize>,
    nu: Vec<usize>,
    /// packed lower triangle of `A_r(x_h . x_i)`
    a: Vec<f64>,
}

impl LadderGram {
    pub fn new(ladder: &DesignLadder, r: f64, truncation_tol: f64) -> Result<Self> {
        // parameter validation via a throwaway construction
        let params = KernelParams::with_tolerance(r, 1.0, truncation_tol)?;
        let series = ArSeries::for_params(&params);
        let points = ladder.all_points();
        let total = points.len();
        let mut a = vec![0.0; total * (total + 1) / 2];
        for i in 0..total {
            for j in 0..=i {
                a[i * (i + 1) / 2 + j] = series.eval(points[i].dot(&points[j]));
            }
        }
        Ok(Self {
            r,
            truncation_tol,
            n: ladder.n().to_vec(),
            nu: ladder.nu().to_vec(),
            a,
        })
    }

    pub fn r(&self) -> f64 {
        self.r
    }

    pub fn levels(&self) -> usize {
        self.n.len()
    }

    fn a_entry(&self, i: usize, j: usize) -> f64 {
        let (hi, lo) = if i >= j { (i, j) } else { (j, i) };
        self.a[hi * (hi + 1) / 2 + lo]
    }

    /// Profiles every ladder level at coordinate weight `gamma`.
    ///
    /// A level whose increment cancels to a nonpositive value is clamped
    /// to zero, marked terminal, and ends the profile.
    pub fn profile(&self, gamma: f64) -> Result<LadderProfile> {
        let params = KernelParams::with_tolerance(self.r, gamma, self.truncation_tol)?;
        let mut profile = LadderProfile {
            r: self.r,
            gamma,
            weights: Vec::new(),
            e2: Vec::new(),
            delta2: Vec::new(),
            nu: Vec::new(),
            n: Vec::new(),
            flags: Vec::new(),
        };
        for j in 0..self.levels() {
            let nj = self.n[j];
            let kmat =
                DMatrix::from_fn(nj, nj, |h, i| 1.0 + params.gamma() * self.a_entry(h, i));
            let (w, residual, least_squares) = solve_unit_rhs(&kmat);
            let raw_e2 = 1.0 - w.sum();
            let e2 = raw_e2.clamp(0.0, 1.0);
            let mut diag = LevelDiag {
                least_squares,
                clamped: raw_e2 != e2,
                degenerate: false,
                terminal: false,
                residual,
            };
            let delta2 = if j == 0 {
                1.0 - e2
            } else {
                profile.e2[j - 1] - e2
            };
            if delta2 <= 0.0 {
                diag.degenerate = true;
                diag.terminal = true;
                profile.weights.push(w.iter().cloned().collect());
                profile.e2.push(e2);
                profile.delta2.push(0.0);
                profile.nu.push(self.nu[j]);
                profile.n.push(nj);
                profile.flags.push(diag);
                break;
            }
            profile.weights.push(w.iter().cloned().collect());
            profile.e2.push(e2);
            profile.delta2.push(delta2);
            profile.nu.push(self.nu[j]);
            profile.n.push(nj);
            profile.flags.push(diag);
        }
        Ok(profile)
    }
}

/// One-shot profile of a ladder (assembles the Gram matrix internally).
pub fn profile_ladder(ladder: &DesignLadder, params: &KernelParams) -> Result<LadderProfile> {
    LadderGram::new(ladder, params.r(), params.truncation_tol())?.profile(params.gamma())
}

/// Re-profiles the same ladder at a different coordinate weight. No
/// closed-form rescaling is assumed; the kernel systems are re-solved.
pub fn delta_norm_scaling(gram: &LadderGram, gamma: f64) -> Result<LadderProfile> {
    gram.profile(gamma)
}

/// Calibrated decay constants for the norm-bound criteria.
#[derive(Debug, Clone)]
pub struct CalibrationResult {
    /// Smallest constant with `|delta_j| <= sqrt(gamma) C D^j` over the
    /// profiled levels.
    pub c: f64,
    /// `D = 2^{-r/2}`.
    pub d: f64,
    /// `rho = 2/r`.
    pub rho: f64,
    /// `|delta_j| / (sqrt(gamma) D^j)` for j >= 1.
    pub per_level_ratios: Vec<f64>,
    /// `(j+1) D^{j rho} <= 1` held at every checked level.
    pub criteria_ok: bool,
}

/// Fits the decay constants from a profile (normally taken at gamma = 1).
pub fn calibrate(profile: &LadderProfile, r: f64) -> Result<CalibrationResult> {
    let usable = profile.usable_levels();
    if usable < 2 {
        return Err(Error::Contract(
            "calibration needs at least two usable ladder levels".into(),
        ));
    }
    let d = 2.0f64.powf(-r / 2.0);
    let rho = 2.0 / r;
    let sqrt_gamma = profile.gamma().sqrt();
    let mut ratios = Vec::with_capacity(usable - 1);
    for j in 1..usable {
        ratios.push(profile.delta2()[j].sqrt() / (sqrt_gamma * d.powi(j as i32)));
    }
    let c = ratios.iter().cloned().fold(0.0, f64::max);
    let criteria_ok = (1..=profile.levels())
        .all(|j| (j as f64 + 1.0) * d.powf(j as f64 * rho) <= 1.0 + 1e-12);
    Ok(CalibrationResult {
        c,
        d,
        rho,
        per_level_ratios: ratios,
        criteria_ok,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::design::builtin_ladder;
    use crate::kernel::{kernel_1, NORTH_POLE};
    use approx::assert_abs_diff_eq;

    // frozen from the direct-summation oracle for A_3
    const A3_AT_1: f64 = 0.4041138063191886;
    const A3_AT_M1: f64 = -0.35506593315177354;

    #[test]
    fn single_point_weight_and_error() {
        let params = KernelParams::new(3.0, 1.0).unwrap();
        let solve = optimal_weights(&[NORTH_POLE], &params).unwrap();
        assert_abs_diff_eq!(solve.weights[0], 1.0 / (1.0 + A3_AT_1), epsilon = 1e-12);
        assert_abs_diff_eq!(solve.e2, A3_AT_1 / (1.0 + A3_AT_1), epsilon = 1e-12);
        assert!(!solve.diag.least_squares);
    }

    #[test]
    fn antipodal_weights_are_symmetric() {
        let params = KernelParams::new(3.0, 1.0).unwrap();
        let south = SpherePoint::new(0.0, 0.0, -1.0).unwrap();
        let solve = optimal_weights(&[NORTH_POLE, south], &params).unwrap();
        assert_abs_diff_eq!(solve.weights[0], solve.weights[1], epsilon = 1e-14);
        // frozen scalar solution: w = 1 / (2 + A(1) + A(-1))
        let expected = 1.0 / (2.0 + A3_AT_1 + A3_AT_M1);
        assert_abs_diff_eq!(solve.weights[0], expected, epsilon = 1e-12);
    }

    #[test]
    fn qmc_error_single_point() {
        let params = KernelParams::new(3.0, 0.25).unwrap();
        assert_abs_diff_eq!(
            qmc_error(&[NORTH_POLE], &params),
            0.25 * A3_AT_1,
            epsilon = 1e-12
        );
    }

    #[test]
    fn qmc_error_antipodal_pair() {
        let params = KernelParams::new(3.0, 1.0).unwrap();
        let south = SpherePoint::new(0.0, 0.0, -1.0).unwrap();
        let expected = (2.0 * A3_AT_1 + 2.0 * A3_AT_M1) / 4.0;
        assert_abs_diff_eq!(
            qmc_error(&[NORTH_POLE, south], &params),
            expected,
            epsilon = 1e-12
        );
    }

    #[test]
    fn optimal_error_below_qmc_on_ladder_levels() {
        let ladder = builtin_ladder(4).unwrap();
        for &gamma in &[0.1, 0.5, 1.0] {
            let params = KernelParams::new(3.0, gamma).unwrap();
            for j in 0..ladder.levels() {
                let pts = ladder.level_points(j);
                let opt = optimal_weights(pts, &params).unwrap();
                let qmc = qmc_error(pts, &params);
                assert!(
                    opt.e2 <= qmc + 1e-12,
                    "level {j} gamma {gamma}: optimal {} vs qmc {qmc}",
                    opt.e2
                );
            }
        }
    }

    #[test]
    fn profile_telescopes_and_decreases() {
        let ladder = builtin_ladder(5).unwrap();
        let params = KernelParams::new(3.0, 1.0).unwrap();
        let profile = profile_ladder(&ladder, &params).unwrap();
        assert_eq!(profile.levels(), 6);
        assert_eq!(profile.usable_levels(), 6);
        for j in 1..profile.levels() {
            assert!(
                profile.e2()[j] < profile.e2()[j - 1],
                "e2 must strictly decrease"
            );
        }
        let total: f64 = profile.delta2().iter().sum();
        assert_abs_diff_eq!(total + profile.e2().last().unwrap(), 1.0, epsilon = 1e-10);
        // delta2[0] = 1 - e2[0]
        assert_abs_diff_eq!(
            profile.delta2()[0],
            1.0 - profile.e2()[0],
            epsilon = 1e-15
        );
    }

    #[test]
    fn profile_single_level_ladder() {
        let ladder = builtin_ladder(0).unwrap();
        let params = KernelParams::new(3.0, 1.0).unwrap();
        let profile = profile_ladder(&ladder, &params).unwrap();
        assert_eq!(profile.levels(), 1);
        assert_abs_diff_eq!(
            profile.delta2()[0],
            1.0 - profile.e2()[0],
            epsilon = 1e-15
        );
    }

    #[test]
    fn weight_solve_residual_is_small() {
        let ladder = builtin_ladder(5).unwrap();
        let params = KernelParams::new(3.0, 0.5).unwrap();
        let profile = profile_ladder(&ladder, &params).unwrap();
        for (j, diag) in profile.flags().iter().enumerate() {
            let n = profile.n()[j] as f64;
            assert!(
                diag.residual <= 1e-8 * n,
                "level {j}: residual {} too large",
                diag.residual
            );
        }
    }

    #[test]
    fn e2_two_evaluation_routes_agree() {
        // 1 - sum(w)  vs  1 - 2 sum(w) + w' K w at the optimum
        let ladder = builtin_ladder(4).unwrap();
        let params = KernelParams::new(3.0, 0.7).unwrap();
        for j in 0..ladder.levels() {
            let pts = ladder.level_points(j);
            let solve = optimal_weights(pts, &params).unwrap();
            let n = pts.len();
            let mut quad = 0.0;
            for h in 0..n {
                for i in 0..n {
                    quad += solve.weights[h]
                        * solve.weights[i]
                        * kernel_1(&pts[h], &pts[i], &params);
                }
            }
            let direct = 1.0 - 2.0 * solve.weights.iter().sum::<f64>() + quad;
            assert_abs_diff_eq!(direct, solve.e2, epsilon = 1e-8);
        }
    }

    #[test]
    fn adding_points_never_increases_error() {
        let ladder = builtin_ladder(5).unwrap();
        let params = KernelParams::new(3.0, 0.3).unwrap();
        let profile = profile_ladder(&ladder, &params).unwrap();
        for j in 1..profile.levels() {
            assert!(profile.e2()[j] <= profile.e2()[j - 1] + 1e-12);
        }
    }

    #[test]
    fn gamma_one_profile_matches_gram_route() {
        let ladder = builtin_ladder(3).unwrap();
        let params = KernelParams::new(3.0, 1.0).unwrap();
        let direct = profile_ladder(&ladder, &params).unwrap();
        let gram = LadderGram::new(&ladder, 3.0, params.truncation_tol()).unwrap();
        let via_gram = delta_norm_scaling(&gram, 1.0).unwrap();
        for j in 0..direct.levels() {
            assert_abs_diff_eq!(direct.e2()[j], via_gram.e2()[j], epsilon = 1e-14);
        }
    }

    #[test]
    fn small_gamma_level_zero_error_formula() {
        let ladder = builtin_ladder(0).unwrap();
        let gram = LadderGram::new(&ladder, 3.0, 1e-14).unwrap();
        for &gamma in &[1e-3, 1e-2, 0.1] {
            let profile = gram.profile(gamma).unwrap();
            let expected = gamma * A3_AT_1 / (1.0 + gamma * A3_AT_1);
            assert_abs_diff_eq!(profile.e2()[0], expected, epsilon = 1e-12);
        }
    }

    #[test]
    fn delta2_scales_roughly_linearly_in_gamma() {
        // |delta_j|^2(gamma) <= gamma * C3 * 2^{-rj} with C3 fitted at
        // gamma = 1 and a generous safety factor.
        let ladder = builtin_ladder(5).unwrap();
        let gram = LadderGram::new(&ladder, 3.0, 1e-14).unwrap();
        let base = gram.profile(1.0).unwrap();
        let c3 = (0..base.usable_levels())
            .map(|j| base.delta2()[j] * 2.0f64.powi(3 * j as i32))
            .fold(0.0, f64::max);
        for &gamma in &[0.1, 0.5] {
            let profile = gram.profile(gamma).unwrap();
            for j in 1..profile.usable_levels() {
                let bound = gamma * 4.0 * c3 * 2.0f64.powi(-3 * (j as i32));
                assert!(
                    profile.delta2()[j] <= bound,
                    "gamma {gamma} level {j}: {} > {bound}",
                    profile.delta2()[j]
                );
            }
        }
    }

    #[test]
    fn calibration_constants() {
        let ladder = builtin_ladder(5).unwrap();
        let params = KernelParams::new(3.0, 1.0).unwrap();
        let profile = profile_ladder(&ladder, &params).unwrap();
        let cal = calibrate(&profile, 3.0).unwrap();
        assert_abs_diff_eq!(cal.d, 2.0f64.powf(-1.5), epsilon = 1e-15);
        assert_abs_diff_eq!(cal.rho, 2.0 / 3.0, epsilon = 1e-15);
        assert!(cal.criteria_ok);
        assert!(cal.c > 0.0);
        let max_ratio = cal.per_level_ratios.iter().cloned().fold(0.0, f64::max);
        assert_eq!(cal.c, max_ratio);
    }

    #[test]
    fn calibration_on_synthetic_geometric_profile() {
        // delta2[j] = c * 4^{-j} with r = 2 gives ratios sqrt(c) exactly:
        // D = 2^{-1} and |delta_j| = sqrt(c) 2^{-j}.
        let profile = LadderProfile {
            r: 2.0,
            gamma: 1.0,
            weights: vec![vec![]; 5],
            e2: vec![0.0; 5],
            delta2: (0..5).map(|j| 0.09 * 0.25f64.powi(j)).collect(),
            nu: vec![1; 5],
            n: (1..=5).collect(),
            flags: vec![LevelDiag::default(); 5],
        };
        let cal = calibrate(&profile, 2.0).unwrap();
        for ratio in &cal.per_level_ratios {
            assert_abs_diff_eq!(*ratio, 0.3, epsilon = 1e-12);
        }
        assert_abs_diff_eq!(cal.c, 0.3, epsilon = 1e-12);
    }

    #[test]
    fn calibrate_needs_two_levels() {
        let ladder = builtin_ladder(0).unwrap();
        let params = KernelParams::new(3.0, 1.0).unwrap();
        let profile = profile_ladder(&ladder, &params).unwrap();
        assert!(calibrate(&profile, 3.0).is_err());
    }

    #[test]
    fn profile_csv_shape() {
        let ladder = builtin_ladder(2).unwrap();
        let params = KernelParams::new(3.0, 1.0).unwrap();
        let profile = profile_ladder(&ladder, &params).unwrap();
        let csv = profile.to_csv();
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines[0], "j,n_j,nu_j,e2,delta2,flag");
        assert_eq!(lines.len(), 4);
        assert!(csv.ends_with('\n'));
        assert!(lines[1].starts_with("0,1,1,"));
    }

    #[test]
    fn empty_point_set_is_rejected() {
        let params = KernelParams::new(3.0, 1.0).unwrap();
        assert!(optimal_weights(&[], &params).is_err());
    }
}
