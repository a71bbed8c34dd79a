use std::f64::consts::{FRAC_PI_2, PI};
use std::fmt;
use std::str::FromStr;

use super::{
    certify_with, check_inclusion, pn_alpha_bound, pn_cd_disk, CheckMode, InclusionRelation,
    OracleGrid, VerificationReport, TOUCH_TOL,
};
use crate::error::{domain, Error, Result};
use crate::extremal::sharpness_witness;
use crate::kernel::{rho, sinh_c, ComplexValue, ASINH_ONE};
use crate::petal::{
    bounds, contains, disk_in_petal, inclusion_geometry, sample_circle_image, symmetry_residuals,
    ConicSpec,
};
use crate::radii::{radius, radius_f, radius_sn, ClassId, NamedClass, RatioClass};

/// Which group of claims [`run_suite`] checks.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Scope {
    All,
    Radii,
    Inclusions,
    Geometry,
}

impl Scope {
    pub fn id(&self) -> &'static str {
        match self {
            Self::All => "all",
            Self::Radii => "radii",
            Self::Inclusions => "inclusions",
            Self::Geometry => "geometry",
        }
    }
}

impl fmt::Display for Scope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Scope {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        [Self::All, Self::Radii, Self::Inclusions, Self::Geometry]
            .into_iter()
            .find(|sc| sc.id() == s)
            .ok_or_else(|| Error::Unknown {
                kind: "scope",
                name: s.to_string(),
            })
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SuiteOptions {
    /// Boundary samples for the inclusion and geometry checks.
    pub samples: usize,
    /// Bisection tolerance of the radius oracle.
    pub r_tol: f64,
    pub grid: OracleGrid,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        Self {
            samples: crate::petal::DEFAULT_BOUNDARY_SAMPLES,
            r_tol: 1e-6,
            grid: OracleGrid::default(),
        }
    }
}

/// Every radius the suite certifies, in output order.
pub fn radius_claims() -> Vec<ClassId> {
    let mut out = Vec::new();
    out.extend([0.05, 0.2, 0.5, 0.8].map(|alpha| ClassId::SAlpha { alpha }));
    out.extend([1.2, 1.5, 1.8, 2.0].map(|beta| ClassId::MBeta { beta }));
    out.extend([0.5, 1.0, 2.0].map(|k| ClassId::KSt { k }));
    out.extend([0.0, 0.3].map(|alpha| ClassId::KAlpha { alpha }));
    out.extend((1..=3).map(|n| ClassId::Sn { n }));
    out.extend([(1, 0.0), (2, 0.25), (3, 0.5)].map(|(n, alpha)| ClassId::CSn { n, alpha }));
    out.extend(
        [
            (1, 1.0, -1.0),
            (1, 0.5, -0.5),
            (2, 0.8, -0.2),
            (1, 1.0, 0.0),
            (2, 1.0, 0.5),
            (1, 0.9, 0.1),
            (1, 0.5, -0.1),
        ]
        .map(|(n, c, d)| ClassId::JanowskiN { n, c, d }),
    );
    out.extend(
        [
            NamedClass::Lemniscate,
            NamedClass::Rl,
            NamedClass::Cardioid,
            NamedClass::Exponential,
            NamedClass::Crescent,
            NamedClass::Booth { alpha: 1.0 },
            NamedClass::Booth { alpha: 0.5 },
            NamedClass::Booth { alpha: 0.0 },
        ]
        .map(ClassId::Named),
    );
    out.push(ClassId::F);
    for kind in [RatioClass::F1, RatioClass::F2, RatioClass::F3] {
        out.extend((1..=2).map(|n| ClassId::Ratio { kind, n }));
    }
    out
}

/// Runs the checks of `scope` in a fixed order.
pub fn run_suite(scope: Scope, opts: &SuiteOptions) -> Result<Vec<VerificationReport>> {
    if opts.samples < 4 {
        return Err(domain("samples", opts.samples as f64, "[4, inf)"));
    }
    let mut rows = Vec::new();
    if matches!(scope, Scope::All | Scope::Radii) {
        rows.extend(radii_rows(opts)?);
    }
    if matches!(scope, Scope::All | Scope::Inclusions) {
        for rel in InclusionRelation::ALL {
            rows.push(check_inclusion(rel, opts.samples)?);
        }
    }
    if matches!(scope, Scope::All | Scope::Geometry) {
        rows.extend(geometry_rows(opts)?);
    }
    Ok(rows)
}

fn radii_rows(opts: &SuiteOptions) -> Result<Vec<VerificationReport>> {
    let mut rows = Vec::new();
    let mut touches = Vec::new();
    for class in radius_claims() {
        let result = match class {
            ClassId::F => radius_f(),
            other => radius(other)?,
        };
        rows.push(certify_with(&result, opts.grid, opts.r_tol)?);
        if result.sharp {
            let residual = sharpness_witness(&result)?.residual()?;
            touches.push(VerificationReport::new(
                format!("touch:{class}"),
                0.0,
                residual,
                CheckMode::Equal,
                1,
                TOUCH_TOL,
            ));
        }
    }
    rows.extend(touches);
    for n in 1..=3 {
        let r = radius_sn(n)?.value;
        rows.push(VerificationReport::new(
            format!("quadratic_bound:s-n(n={n})"),
            ASINH_ONE,
            pn_alpha_bound(n, 0.0, r)?,
            CheckMode::Equal,
            1,
            1e-10,
        ));
    }
    Ok(rows)
}

fn geometry_rows(opts: &SuiteOptions) -> Result<Vec<VerificationReport>> {
    let n = opts.samples;
    let mut rows = Vec::new();

    // sinh(ρ(z) - 1) = z and ρ(z) in the petal, on a polar grid of |z| < 1
    let mut defect = 0.0_f64;
    for i in 1..=64 {
        let r = 0.999 * i as f64 / 64.0;
        for (_, w) in sample_circle_image(r, 256) {
            if !contains(w, 0.0) {
                defect = f64::INFINITY;
            }
        }
        for j in 0..256 {
            let z = ComplexValue::from_polar(r, 2.0 * PI * j as f64 / 256.0);
            defect = defect.max((sinh_c(rho(z)? - 1.0) - z).norm());
        }
    }
    rows.push(VerificationReport::new(
        "geometry:membership_identity",
        0.0,
        defect,
        CheckMode::Equal,
        64 * 256,
        1e-12,
    ));

    let sym = symmetry_residuals(n)?;
    rows.push(VerificationReport::new(
        "geometry:conjugation_symmetry",
        0.0,
        sym.conj_residual,
        CheckMode::Equal,
        n,
        1e-9,
    ));
    rows.push(VerificationReport::new(
        "geometry:vertical_symmetry",
        0.0,
        sym.vertical_residual,
        CheckMode::Equal,
        n,
        1e-9,
    ));

    // Re(1/(1 + z^2)) > 0 on a 100 x 100 polar grid
    let mut min_re = f64::INFINITY;
    for i in 0..100 {
        let r = (i as f64 + 0.5) / 100.0;
        for j in 0..100 {
            let z = ComplexValue::from_polar(r, 2.0 * PI * j as f64 / 100.0);
            min_re = min_re.min((1.0 / (1.0 + z * z)).re);
        }
    }
    rows.push(VerificationReport::new(
        "geometry:convexity",
        0.0,
        min_re,
        CheckMode::ClaimBelowOracle,
        10_000,
        0.0,
    ));

    let max_dist = sample_circle_image(1.0, n)
        .into_iter()
        .map(|(_, w)| (w - 1.0).norm())
        .fold(f64::NEG_INFINITY, f64::max);
    rows.push(VerificationReport::new(
        "geometry:outer_disk",
        FRAC_PI_2,
        max_dist,
        CheckMode::OracleBelowClaim,
        n,
        1e-12,
    ));

    for r in [0.25, 0.5, 0.75, 1.0] {
        let left = ComplexValue::new(1.0 - f64::asinh(r), 0.0);
        let dist = sample_circle_image(r, n)
            .into_iter()
            .map(|(_, w)| (w - left).norm())
            .fold(f64::INFINITY, f64::min);
        rows.push(VerificationReport::new(
            format!("geometry:maximal_disk(r={r})"),
            0.0,
            dist,
            CheckMode::Equal,
            n,
            TOUCH_TOL,
        ));
    }

    let mut min_step = f64::INFINITY;
    let mut prev = bounds(0.0)?;
    for i in 1..=64 {
        let b = bounds(i as f64 / 64.0)?;
        min_step = min_step
            .min(b.re_max - prev.re_max)
            .min(prev.re_min - b.re_min);
        prev = b;
    }
    rows.push(VerificationReport::new(
        "geometry:monotone_bounds",
        0.0,
        min_step,
        CheckMode::ClaimBelowOracle,
        64,
        0.0,
    ));

    let geo = inclusion_geometry();
    let ConicSpec::Ellipse { center, semi_x, .. } = geo.ellipse_at(geo.k_min)? else {
        unreachable!("ellipse_at returns an ellipse")
    };
    rows.push(VerificationReport::new(
        "geometry:ellipse_tangency",
        1.0 + ASINH_ONE,
        center + semi_x,
        CheckMode::Equal,
        1,
        1e-12,
    ));

    for (c, d, r) in [
        (0.5, 0.2, 0.999_999),
        (ASINH_ONE, 0.0, 0.999_999),
        (1.0, -1.0, 0.2),
    ] {
        let disk = pn_cd_disk(1, c, d, r)?;
        let limit = disk_in_petal(disk.center)?.radius;
        let excess = (0..n)
            .map(|j| sinh_c(disk.boundary_point(2.0 * PI * j as f64 / n as f64) - 1.0).norm() - 1.0)
            .fold(f64::NEG_INFINITY, f64::max);
        let fits = disk.radius <= limit;
        rows.push(VerificationReport::new(
            format!("geometry:janowski_disk(C={c:.4};D={d:.4};r={r})"),
            0.0,
            if fits { excess } else { f64::INFINITY },
            CheckMode::OracleBelowClaim,
            n,
            1e-9,
        ));
    }

    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn scopes_parse() {
        assert_eq!("all".parse::<Scope>().unwrap(), Scope::All);
        assert!("everything".parse::<Scope>().is_err());
    }

    #[test]
    fn inclusions_scope_has_five_rows() {
        let rows = run_suite(Scope::Inclusions, &SuiteOptions::default()).unwrap();
        assert_eq!(rows.len(), 5);
        assert!(rows.iter().all(|r| r.passed));
    }

    #[test]
    fn geometry_scope_passes() {
        let rows = run_suite(Scope::Geometry, &SuiteOptions::default()).unwrap();
        for r in &rows {
            assert!(r.passed, "{r:?}");
        }
    }

    #[test]
    fn radii_scope_passes() {
        let rows = run_suite(Scope::Radii, &SuiteOptions::default()).unwrap();
        assert!(rows.len() >= 20);
        for r in &rows {
            assert!(r.passed, "{r:?}");
        }
        let lem = rows
            .iter()
            .find(|r| r.claim == "radius:lemniscate")
            .unwrap();
        assert!(lem.abs_diff < 1e-4);
    }
}
