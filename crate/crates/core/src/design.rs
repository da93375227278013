//! Loading, validation and assembly of nested point-set ladders on the
//! sphere, built from spherical designs.
//!
//! A ladder stacks designs so that the cumulative point sets are nested
//! and all designs share exactly one point, the north pole. The file
//! format is one point per line ("x y z", `#` comments), matching the
//! de-facto format of published spherical-design collections.

use std::fmt;
use std::path::Path;

use crate::builtin_data::{BUILTIN_DESIGNS, LADDER_ORDER};
use crate::error::{Error, Result};
use crate::kernel::{legendre_sequence, SpherePoint, NORTH_POLE};

/// Two points closer than this (in radians) count as duplicates.
pub const DUPLICATE_ANGLE: f64 = 1e-10;

/// Tolerance for recognizing the north pole in a loaded design.
const POLE_TOL: f64 = 1e-12;

/// A point set with a declared equal-weight exactness strength.
#[derive(Debug, Clone)]
pub struct SphericalDesign {
    points: Vec<SpherePoint>,
    strength: u32,
    label: String,
    source: String,
}

impl SphericalDesign {
    /// Validates cardinality and pairwise separation.
    pub fn new(
        points: Vec<SpherePoint>,
        strength: u32,
        label: impl Into<String>,
        source: impl Into<String>,
    ) -> Result<Self> {
        if points.is_empty() {
            return Err(Error::Contract("a design needs at least one point".into()));
        }
        for (i, p) in points.iter().enumerate() {
            for q in &points[..i] {
                if p.angle_to(q) <= DUPLICATE_ANGLE {
                    return Err(Error::Contract(format!(
                        "duplicate design points ({:.6}, {:.6}, {:.6})",
                        p.x(),
                        p.y(),
                        p.z()
                    )));
                }
            }
        }
        Ok(Self {
            points,
            strength,
            label: label.into(),
            source: source.into(),
        })
    }

    pub fn points(&self) -> &[SpherePoint] {
        &self.points
    }

    pub fn cardinality(&self) -> usize {
        self.points.len()
    }

    pub fn strength(&self) -> u32 {
        self.strength
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn source(&self) -> &str {
        &self.source
    }

    /// Index of the point matching the north pole within tolerance.
    fn pole_index(&self) -> Option<usize> {
        self.points.iter().position(|p| {
            p.x().abs() <= POLE_TOL && p.y().abs() <= POLE_TOL && (p.z() - 1.0).abs() <= POLE_TOL
        })
    }

    /// Rigidly rotates the design so that its first point moves to the
    /// north pole. Rotation preserves design strength.
    fn rotated_to_pole(&self) -> SphericalDesign {
        let p = self.points[0];
        // Rodrigues rotation taking p to e3, about the axis p x e3.
        let (vx, vy) = (p.y(), -p.x()); // p x e3 = (py, -px, 0)
        let s2 = vx * vx + vy * vy;
        let c = p.z();
        let rotate = |q: &SpherePoint| -> SpherePoint {
            if s2 < 1e-30 {
                // already at a pole; flip through the x-axis if antipodal
                if c > 0.0 {
                    return *q;
                }
                return SpherePoint::new(q.x(), -q.y(), -q.z()).expect("unit norm preserved");
            }
            let k = (1.0 - c) / s2;
            // R = I + [v]_x + k [v]_x^2 with v = (vx, vy, 0)
            let (x, y, z) = (q.x(), q.y(), q.z());
            let rx = x * (1.0 + k * -vy * vy) + y * (k * vx * vy) + z * vy;
            let ry = x * (k * vx * vy) + y * (1.0 + k * -vx * vx) + z * -vx;
            let rz = x * -vy + y * vx + z * (1.0 - k * s2);
            let norm = (rx * rx + ry * ry + rz * rz).sqrt();
            SpherePoint::new(rx / norm, ry / norm, rz / norm).expect("normalized")
        };
        let mut points: Vec<SpherePoint> = self.points.iter().map(rotate).collect();
        points[0] = NORTH_POLE;
        SphericalDesign {
            points,
            strength: self.strength,
            label: self.label.clone(),
            source: format!("{} (rotated to pole)", self.source),
        }
    }
}

/// Parses design text (one "x y z" row per line, `#` comments).
fn parse_design(
    text: &str,
    declared_strength: u32,
    source: &str,
    label: &str,
) -> Result<SphericalDesign> {
    let mut points = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.trim_end_matches('\r').trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        if fields.len() != 3 {
            return Err(Error::Load {
                path: source.into(),
                line: lineno + 1,
                msg: format!("expected 3 coordinates, found {}", fields.len()),
            });
        }
        let mut coords = [0.0f64; 3];
        for (slot, field) in coords.iter_mut().zip(&fields) {
            *slot = field.parse().map_err(|_| Error::Load {
                path: source.into(),
                line: lineno + 1,
                msg: format!("cannot parse '{field}' as a number"),
            })?;
        }
        let point =
            SpherePoint::new(coords[0], coords[1], coords[2]).map_err(|_| Error::Load {
                path: source.into(),
                line: lineno + 1,
                msg: "point not on unit sphere".into(),
            })?;
        for (i, q) in points.iter().enumerate() {
            if point.angle_to(q) <= DUPLICATE_ANGLE {
                return Err(Error::Load {
                    path: source.into(),
                    line: lineno + 1,
                    msg: format!("duplicate of point on line {}", i + 1),
                });
            }
        }
        points.push(point);
    }
    if points.is_empty() {
        return Err(Error::Load {
            path: source.into(),
            line: 0,
            msg: "no points in file".into(),
        });
    }
    SphericalDesign::new(points, declared_strength, label, source)
}

/// Loads and validates a design file.
pub fn load_design(path: impl AsRef<Path>, declared_strength: u32) -> Result<SphericalDesign> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path)?;
    parse_design(
        &text,
        declared_strength,
        &path.display().to_string(),
        "file",
    )
}

/// Per-degree residuals of the equal-weight rule on a design.
///
/// `R_l = (1/m^2) sum_{h,i} P_l(x_h . x_i)` vanishes exactly when the
/// design integrates all degree-l spherical harmonics; it is a sum of
/// squared moments, hence nonnegative up to rounding.
#[derive(Debug, Clone)]
pub struct StrengthReport {
    pub residuals: Vec<f64>,
    pub tol: f64,
    pub passed: bool,
}

impl StrengthReport {
    pub fn max_residual(&self) -> f64 {
        self.residuals.iter().cloned().fold(0.0, f64::max)
    }
}

impl fmt::Display for StrengthReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "strength check ({}): max residual {:.3e} (tol {:.1e})",
            if self.passed { "pass" } else { "FAIL" },
            self.max_residual(),
            self.tol
        )
    }
}

/// Checks the design's declared strength via the addition theorem.
pub fn verify_strength(design: &SphericalDesign, tol: f64) -> StrengthReport {
    let t = design.strength() as usize;
    let m = design.cardinality() as f64;
    let points = design.points();
    let mut residuals = vec![0.0; t];
    if t > 0 {
        for i in 0..points.len() {
            for j in i..points.len() {
                let values =
                    legendre_sequence(points[i].dot(&points[j]), t).expect("dot is clamped");
                // off-diagonal pairs appear twice in the double sum
                let mult = if i == j { 1.0 } else { 2.0 };
                for l in 1..=t {
                    residuals[l - 1] += mult * values[l];
                }
            }
        }
        for r in residuals.iter_mut() {
            *r /= m * m;
        }
    }
    let passed = residuals.iter().all(|&r| r <= tol);
    StrengthReport {
        residuals,
        tol,
        passed,
    }
}

/// A nested sequence of point sets `S_0 c S_1 c ...` built from designs.
///
/// Points are stored in insertion order so that `S_j` is the prefix of
/// length `n_j`.
#[derive(Debug, Clone)]
pub struct DesignLadder {
    designs: Vec<SphericalDesign>,
    points: Vec<SpherePoint>,
    n: Vec<usize>,
    nu: Vec<usize>,
    warnings: Vec<String>,
}

impl DesignLadder {
    /// Number of levels J + 1.
    pub fn levels(&self) -> usize {
        self.n.len()
    }

    /// Cumulative point set `S_j`.
    pub fn level_points(&self, j: usize) -> &[SpherePoint] {
        &self.points[..self.n[j]]
    }

    /// All points of the deepest level, in ladder order.
    pub fn all_points(&self) -> &[SpherePoint] {
        &self.points
    }

    /// Cumulative cardinalities `n_j`.
    pub fn n(&self) -> &[usize] {
        &self.n
    }

    /// Incremental costs `nu_j = n_j - n_{j-1}` (`nu_0 = n_0`).
    pub fn nu(&self) -> &[usize] {
        &self.nu
    }

    pub fn designs(&self) -> &[SphericalDesign] {
        &self.designs
    }

    pub fn warnings(&self) -> &[String] {
        &self.warnings
    }
}

/// Assembles a ladder of cumulative unions from an ordered design list.
///
/// Each design must contain the north pole; one that does not is rotated
/// so that its first point lands there (recorded as a warning). The pole
/// is deduplicated across levels; any other coincidence between designs
/// breaks the cost accounting and is an error.
pub fn build_ladder(designs: Vec<SphericalDesign>) -> Result<DesignLadder> {
    if designs.is_empty() {
        return Err(Error::Ladder("no designs supplied".into()));
    }
    let mut warnings = Vec::new();
    let mut fixed: Vec<SphericalDesign> = Vec::with_capacity(designs.len());
    for (j, design) in designs.into_iter().enumerate() {
        match design.pole_index() {
            Some(i) => {
                let mut d = design;
                // snap so pole dedup can be exact
                d.points[i] = NORTH_POLE;
                fixed.push(d);
            }
            None => {
                warnings.push(format!(
                    "design {} ({}) lacks the north pole; rotated its first point there",
                    j,
                    fixed.len()
                ));
                fixed.push(design.rotated_to_pole());
            }
        }
    }

    let mut points: Vec<SpherePoint> = Vec::new();
    let mut n = Vec::with_capacity(fixed.len());
    let mut nu = Vec::with_capacity(fixed.len());
    for (j, design) in fixed.iter().enumerate() {
        let before = points.len();
        for p in design.points() {
            if p.is_north_pole() {
                if j == 0 {
                    points.push(*p);
                }
                continue;
            }
            for q in &points {
                if !q.is_north_pole() && p.angle_to(q) <= DUPLICATE_ANGLE {
                    return Err(Error::Ladder(format!(
                        "design {j} repeats a non-pole point ({:.6}, {:.6}, {:.6}) from an earlier level",
                        p.x(),
                        p.y(),
                        p.z()
                    )));
                }
            }
            points.push(*p);
        }
        let added = points.len() - before;
        if j > 0 && added == 0 {
            return Err(Error::Ladder(format!(
                "design {j} adds no new points; cardinalities must increase"
            )));
        }
        n.push(points.len());
        nu.push(if j == 0 { points.len() } else { added });
    }
    Ok(DesignLadder {
        designs: fixed,
        points,
        n,
        nu,
        warnings,
    })
}

fn builtin_entry(name: &str) -> Option<(&'static str, u32, &'static [[f64; 3]])> {
    BUILTIN_DESIGNS
        .iter()
        .find(|(n, _, _)| *n == name)
        .copied()
}

/// A design from the embedded catalogue, by name.
pub fn builtin_design(name: &str) -> Result<SphericalDesign> {
    let stripped = name.strip_prefix("builtin:").unwrap_or(name);
    let (n, strength, coords) = builtin_entry(stripped).ok_or_else(|| {
        Error::Capability(format!(
            "no built-in design named '{stripped}' (available: {})",
            builtin_names().join(", ")
        ))
    })?;
    let points = coords
        .iter()
        .map(|c| SpherePoint::new(c[0], c[1], c[2]))
        .collect::<Result<Vec<_>>>()?;
    SphericalDesign::new(points, strength, "builtin", n)
}

/// Names of all embedded designs.
pub fn builtin_names() -> Vec<&'static str> {
    BUILTIN_DESIGNS.iter().map(|(n, _, _)| *n).collect()
}

/// Depth of the built-in ladder catalogue (maximum level index).
pub fn builtin_ladder_depth() -> usize {
    LADDER_ORDER.len() - 1
}

/// The default nested ladder from embedded designs, levels `0..=max_level`.
pub fn builtin_ladder(max_level: usize) -> Result<DesignLadder> {
    let depth = builtin_ladder_depth();
    if max_level > depth {
        return Err(Error::Capability(format!(
            "built-in ladder has {} levels (0..={depth}), requested {max_level}"
        , depth + 1)));
    }
    let designs = LADDER_ORDER[..=max_level]
        .iter()
        .map(|name| builtin_design(name))
        .collect::<Result<Vec<_>>>()?;
    build_ladder(designs)
}

/// Reads a ladder manifest: one design per line, "<path-or-builtin> <strength>".
///
/// A first token naming an embedded design resolves to the catalogue; any
/// other token is read as a file path. Line order is ladder order.
pub fn load_manifest(path: impl AsRef<Path>) -> Result<Vec<SphericalDesign>> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path)?;
    let base = path.parent().unwrap_or_else(|| Path::new("."));
    let mut designs = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.trim_end_matches('\r').trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut parts = line.split_whitespace();
        let name = parts.next().expect("nonempty line");
        let strength: u32 = parts
            .next()
            .ok_or_else(|| Error::Load {
                path: path.display().to_string(),
                line: lineno + 1,
                msg: "expected '<path-or-builtin-name> <strength>'".into(),
            })?
            .parse()
            .map_err(|_| Error::Load {
                path: path.display().to_string(),
                line: lineno + 1,
                msg: "strength must be a nonnegative integer".into(),
            })?;
        let stripped = name.strip_prefix("builtin:").unwrap_or(name);
        if builtin_entry(stripped).is_some() {
            let mut d = builtin_design(stripped)?;
            d.strength = strength.min(d.strength);
            designs.push(d);
        } else {
            let file = base.join(name);
            designs.push(load_design(&file, strength)?);
        }
    }
    if designs.is_empty() {
        return Err(Error::Load {
            path: path.display().to_string(),
            line: 0,
            msg: "manifest lists no designs".into(),
        });
    }
    Ok(designs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn parse_single_pole() {
        let d = parse_design("0 0 1\n", 0, "mem", "L").unwrap();
        assert_eq!(d.cardinality(), 1);
        assert_eq!(d.strength(), 0);
    }

    #[test]
    fn parse_antipodal_pair() {
        let d = parse_design("0 0 1\n0 0 -1\n", 1, "mem", "L").unwrap();
        assert_eq!(d.cardinality(), 2);
        let report = verify_strength(&d, 1e-12);
        assert!(report.passed);
        assert_abs_diff_eq!(report.residuals[0], 0.0, epsilon = 1e-15);
    }

    #[test]
    fn parse_rejects_off_sphere_point() {
        let err = parse_design("0 0 2\n", 0, "mem", "L").unwrap_err();
        let msg = err.to_string();
        assert!(msg.contains("not on unit sphere"), "{msg}");
        assert!(msg.contains(":1"), "line number missing: {msg}");
    }

    #[test]
    fn parse_rejects_garbage_and_duplicates() {
        assert!(parse_design("0 0\n", 0, "mem", "L").is_err());
        assert!(parse_design("a b c\n", 0, "mem", "L").is_err());
        assert!(parse_design("0 0 1\n0 0 1\n", 0, "mem", "L").is_err());
    }

    #[test]
    fn parse_accepts_comments_and_crlf() {
        let d = parse_design("# header\r\n0 0 1\r\n\r\n0 0 -1\r\n", 1, "mem", "L").unwrap();
        assert_eq!(d.cardinality(), 2);
    }

    #[test]
    fn single_point_fails_strength_one() {
        let d = parse_design("0 0 1\n", 1, "mem", "L").unwrap();
        let report = verify_strength(&d, 1e-9);
        assert!(!report.passed);
        assert_abs_diff_eq!(report.residuals[0], 1.0, epsilon = 1e-15);
    }

    #[test]
    fn octahedron_is_a_three_design() {
        let d = builtin_design("octahedron").unwrap();
        assert_eq!(d.strength(), 3);
        let report = verify_strength(&d, 1e-13);
        assert!(report.passed, "{report}");
        for r in &report.residuals {
            assert!(*r >= -1e-13, "residual analytically nonnegative: {r}");
        }
    }

    #[test]
    fn all_builtin_designs_pass_their_strength() {
        for name in builtin_names() {
            let d = builtin_design(name).unwrap();
            let report = verify_strength(&d, 1e-9);
            assert!(report.passed, "{name}: {report}");
        }
    }

    #[test]
    fn builtin_ladder_levels() {
        let l0 = builtin_ladder(0).unwrap();
        assert_eq!(l0.n(), &[1]);
        assert!(l0.all_points()[0].is_north_pole());

        let l1 = builtin_ladder(1).unwrap();
        assert_eq!(l1.n(), &[1, 2]);
        assert_eq!(l1.nu(), &[1, 1]);
        assert_eq!(l1.all_points()[1].z(), -1.0);

        let l3 = builtin_ladder(3).unwrap();
        // within a factor 2 of 2^4
        assert!(l3.n()[3] >= 8 && l3.n()[3] <= 32, "n_3 = {}", l3.n()[3]);
    }

    #[test]
    fn builtin_ladder_cost_accounting() {
        let ladder = builtin_ladder(builtin_ladder_depth()).unwrap();
        let total: usize = ladder.nu().iter().sum();
        assert_eq!(total, *ladder.n().last().unwrap());
        for j in 1..ladder.levels() {
            assert!(ladder.n()[j] > ladder.n()[j - 1]);
        }
        // shared pole appears exactly once in every level
        for j in 0..ladder.levels() {
            let poles = ladder
                .level_points(j)
                .iter()
                .filter(|p| p.is_north_pole())
                .count();
            assert_eq!(poles, 1);
        }
    }

    #[test]
    fn builtin_ladder_rejects_excess_depth() {
        let err = builtin_ladder(99).unwrap_err();
        assert!(matches!(err, Error::Capability(_)));
        assert!(err.to_string().contains("levels"));
    }

    #[test]
    fn ladder_from_single_design() {
        let d = builtin_design("tetrahedron").unwrap();
        let ladder = build_ladder(vec![d]).unwrap();
        assert_eq!(ladder.n(), &[4]);
        assert_eq!(ladder.nu(), &[4]);
    }

    #[test]
    fn ladder_rejects_duplicate_non_pole_points() {
        let a = builtin_design("tetrahedron").unwrap();
        let b = builtin_design("tetrahedron").unwrap();
        let err = build_ladder(vec![a, b]).unwrap_err();
        assert!(matches!(err, Error::Ladder(_)), "{err}");
    }

    #[test]
    fn ladder_rotates_poleless_design() {
        // tetrahedron with the pole vertex dropped, plus a fourth point:
        // rotate-to-pole path
        let q = 1.0 / 3.0f64.sqrt();
        let d = SphericalDesign::new(
            vec![
                SpherePoint::new(q, q, q).unwrap(),
                SpherePoint::new(-q, -q, q).unwrap(),
            ],
            0,
            "test",
            "mem",
        )
        .unwrap();
        let ladder = build_ladder(vec![d]).unwrap();
        assert_eq!(ladder.warnings().len(), 1);
        assert!(ladder.all_points()[0].is_north_pole());
        // rotation preserves angles
        let angle = ladder.all_points()[0].angle_to(&ladder.all_points()[1]);
        let orig = SpherePoint::new(q, q, q)
            .unwrap()
            .angle_to(&SpherePoint::new(-q, -q, q).unwrap());
        assert_abs_diff_eq!(angle, orig, epsilon = 1e-12);
    }

    #[test]
    fn table_style_cardinality_formula() {
        // n_j = 1 + sum_{i<=j} (m_i - 1) for pole-sharing designs
        let ladder = builtin_ladder(builtin_ladder_depth()).unwrap();
        let mut expected = 0usize;
        for (j, d) in ladder.designs().iter().enumerate() {
            if j == 0 {
                expected = d.cardinality();
            } else {
                expected += d.cardinality() - 1;
            }
            assert_eq!(ladder.n()[j], expected);
        }
        // cardinalities approximately double: 2^j <= m_j <= 2^j + 1
        for (j, d) in ladder.designs().iter().enumerate() {
            assert!(d.cardinality() >= 1 << j);
            assert!(d.cardinality() <= (1 << j) + 1);
        }
    }

    #[test]
    fn manifest_round_trip() {
        let dir = std::env::temp_dir().join(format!("spherequad-test-{}", std::process::id()));
        std::fs::create_dir_all(&dir).unwrap();
        let design_path = dir.join("pair.txt");
        std::fs::write(&design_path, "0 0 1\n0 0 -1\n").unwrap();
        let manifest_path = dir.join("ladder.txt");
        std::fs::write(
            &manifest_path,
            "# demo ladder\npole 0\npair.txt 1\ntetrahedron 2\n",
        )
        .unwrap();
        let designs = load_manifest(&manifest_path).unwrap();
        assert_eq!(designs.len(), 3);
        assert_eq!(designs[1].cardinality(), 2);
        let ladder = build_ladder(designs).unwrap();
        assert_eq!(ladder.n(), &[1, 2, 5]);
        std::fs::remove_dir_all(&dir).ok();
    }

    #[test]
    fn design_file_round_trips_bit_exactly() {
        let d = builtin_design("design-16-t4").unwrap();
        let mut text = String::new();
        for p in d.points() {
            text.push_str(&format!("{:.16e} {:.16e} {:.16e}\n", p.x(), p.y(), p.z()));
        }
        let reloaded = parse_design(&text, d.strength(), "mem", "L").unwrap();
        for (a, b) in d.points().iter().zip(reloaded.points()) {
            assert_eq!(a, b);
        }
    }
}
