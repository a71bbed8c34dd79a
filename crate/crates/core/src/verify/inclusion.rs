use std::fmt;
use std::str::FromStr;

use super::{CheckMode, VerificationReport};
use crate::error::{Error, Result};
use crate::kernel::{rho, sinh_c, ComplexValue};
use crate::petal::{boundary_point, inclusion_geometry, uniform_angles, ConicSpec};

/// The inclusion relations between the petal and comparison regions.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InclusionRelation {
    /// `Re w > 1 - asinh 1`, with equality attained.
    HalfPlaneLower,
    /// `Re w < 1 + asinh 1`, with equality attained.
    HalfPlaneUpper,
    /// `|arg w| < atan(1/t)`.
    Sector,
    /// The bounding parabola passes through the peaks `1 ± iπ/2`.
    Parabola,
    /// The ellipse of `k`-starlikeness at the least admissible `k` lies inside.
    EllipseKmin,
}

impl InclusionRelation {
    pub const ALL: [Self; 5] = [
        Self::HalfPlaneLower,
        Self::HalfPlaneUpper,
        Self::Sector,
        Self::Parabola,
        Self::EllipseKmin,
    ];

    pub fn id(&self) -> &'static str {
        match self {
            Self::HalfPlaneLower => "half_plane_lower",
            Self::HalfPlaneUpper => "half_plane_upper",
            Self::Sector => "sector",
            Self::Parabola => "parabola",
            Self::EllipseKmin => "ellipse_kmin",
        }
    }
}

impl fmt::Display for InclusionRelation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for InclusionRelation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|r| r.id() == s)
            .ok_or_else(|| Error::Unknown {
                kind: "inclusion relation",
                name: s.to_string(),
            })
    }
}

fn boundary_samples(samples: usize) -> impl Iterator<Item = ComplexValue> {
    uniform_angles(samples).map(boundary_point)
}

fn fold_max(it: impl Iterator<Item = f64>) -> f64 {
    it.fold(f64::NEG_INFINITY, f64::max)
}

/// Samples the petal boundary (or the comparison conic) and reports the
/// extreme value that decides the relation.
pub fn check_inclusion(relation: InclusionRelation, samples: usize) -> Result<VerificationReport> {
    if samples < 4 {
        return Err(crate::error::domain("samples", samples as f64, "[4, inf)"));
    }
    let geo = inclusion_geometry();
    let claim = format!("inclusion:{relation}");
    let report = match relation {
        InclusionRelation::HalfPlaneLower => {
            let min_re = -fold_max(boundary_samples(samples).map(|w| -w.re));
            VerificationReport::new(
                claim,
                geo.alpha_max,
                min_re,
                CheckMode::Equal,
                samples,
                1e-9,
            )
        }
        InclusionRelation::HalfPlaneUpper => {
            let max_re = fold_max(boundary_samples(samples).map(|w| w.re));
            VerificationReport::new(claim, geo.beta_min, max_re, CheckMode::Equal, samples, 1e-9)
        }
        InclusionRelation::Sector => {
            let ConicSpec::Sector { half_angle } = geo.sector else {
                unreachable!("inclusion geometry always carries a sector")
            };
            let max_arg = fold_max(boundary_samples(samples).map(|w| w.arg().abs()));
            VerificationReport::new(
                claim,
                half_angle,
                max_arg,
                CheckMode::OracleBelowClaim,
                samples,
                1e-9,
            )
        }
        InclusionRelation::Parabola => {
            let mut worst = 0.0_f64;
            for peak in [ComplexValue::new(0.0, 1.0), ComplexValue::new(0.0, -1.0)] {
                worst = worst.max(geo.parabola.violation(rho(peak)?).abs());
            }
            VerificationReport::new(claim, 0.0, worst, CheckMode::Equal, 2, 1e-9)
        }
        InclusionRelation::EllipseKmin => {
            let ellipse = geo.ellipse_at(geo.k_min)?;
            let excess = fold_max(uniform_angles(samples).map(|t| {
                let u = ellipse.boundary_point(t) - 1.0;
                if u.im.abs() > std::f64::consts::FRAC_PI_2 {
                    f64::INFINITY
                } else {
                    sinh_c(u).norm() - 1.0
                }
            }));
            VerificationReport::new(
                claim,
                0.0,
                excess,
                CheckMode::OracleBelowClaim,
                samples,
                1e-9,
            )
        }
    };
    Ok(report)
}

/// `max (Y^2 - 4a(X - b))` over sampled boundary points of the petal against
/// the bounding parabola through the peaks.
///
/// This is positive (about `6.5e-4`, near `θ ≈ 2.64`): close to its left
/// vertex the petal is flatter than the parabola, so containment holds only
/// away from the vertex. The peak touch reported by [`check_inclusion`] is exact.
pub fn parabola_containment_violation(samples: usize) -> f64 {
    let parabola = inclusion_geometry().parabola;
    fold_max(boundary_samples(samples).map(|w| parabola.violation(w)))
}
