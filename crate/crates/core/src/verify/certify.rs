use serde::Serialize;

use super::{sup_radius_oracle, CheckMode, OracleGrid, VerificationReport, AGREEMENT_TOL};
use crate::error::{domain, Result};
use crate::extremal::{sharpness_witness, ClosedForm, FunctionSpec};
use crate::kernel::{asinh_principal, ComplexValue};
use crate::petal::contains;
use crate::radii::{convex_order_radius, ClassId, NamedClass, RadiusResult, RatioClass};

/// `1 + z f0''/f0'` for the petal extremal, `q + z q'/q` with `q = 1 + asinh z`.
pub fn f0_convexity_map(z: ComplexValue) -> Result<ComplexValue> {
    let q = 1.0 + asinh_principal(z)?;
    let dq = 1.0 / (1.0 + z * z).sqrt();
    Ok(q + z * dq / q)
}

type Target = Box<dyn Fn(ComplexValue) -> bool>;

enum WMap {
    LogDerivative(FunctionSpec),
    Convexity,
}

struct Plan {
    map: WMap,
    target: Target,
    mode: CheckMode,
}

fn petal_target() -> Target {
    Box::new(|w| contains(w, 0.0))
}

fn plan_for(result: &RadiusResult) -> Result<Plan> {
    let f0 = FunctionSpec::closed(ClosedForm::F0Petal);
    let petal = |f: ClosedForm, mode| Plan {
        map: WMap::LogDerivative(f.into()),
        target: petal_target(),
        mode,
    };
    let plan = match result.subject() {
        ClassId::SAlpha { alpha } => Plan {
            map: WMap::LogDerivative(f0),
            target: Box::new(move |w| w.re > alpha),
            mode: CheckMode::Equal,
        },
        ClassId::MBeta { beta } => Plan {
            map: WMap::LogDerivative(f0),
            target: Box::new(move |w| w.re < beta),
            mode: CheckMode::Equal,
        },
        ClassId::KSt { k } => Plan {
            map: WMap::LogDerivative(f0),
            target: Box::new(move |w| w.re > k * (w - 1.0).norm()),
            mode: CheckMode::Equal,
        },
        ClassId::KAlpha { alpha } => Plan {
            map: WMap::Convexity,
            target: Box::new(move |w| w.re > alpha),
            mode: CheckMode::ClaimBelowOracle,
        },
        ClassId::Sn { n } => petal(ClosedForm::SnExt { n }, CheckMode::Equal),
        // f/z ∈ P is the n = 1 case of S_n; the reported constant is a lower bound.
        ClassId::F => petal(ClosedForm::SnExt { n: 1 }, CheckMode::ClaimBelowOracle),
        ClassId::CSn { n, alpha } => petal(ClosedForm::CsnExt { n, alpha }, CheckMode::Equal),
        ClassId::JanowskiN { n, c, d } => {
            petal(ClosedForm::JanowskiExt { n, c, d }, CheckMode::Equal)
        }
        ClassId::Named(named) => {
            let f = match named {
                NamedClass::Lemniscate => ClosedForm::LemniscateExt,
                NamedClass::Rl => ClosedForm::RlExt,
                NamedClass::Cardioid => ClosedForm::CardioidExt,
                NamedClass::Exponential => ClosedForm::ExpExt,
                NamedClass::Crescent => ClosedForm::CrescentExt,
                NamedClass::Booth { alpha } => ClosedForm::BoothExt { alpha },
            };
            petal(f, CheckMode::Equal)
        }
        ClassId::Ratio { kind, n } => {
            let f = match kind {
                RatioClass::F1 => ClosedForm::F1Pair { n },
                RatioClass::F2 => ClosedForm::F2Pair { n },
                RatioClass::F3 => ClosedForm::F3Pair { n },
            };
            petal(f, CheckMode::Equal)
        }
        ClassId::SRho => {
            return Err(crate::Error::Unsupported(
                "no oracle is registered for the petal class against itself".into(),
            ))
        }
    };
    Ok(plan)
}

/// Re-derives `result.value` with [`sup_radius_oracle`] on the default grid.
pub fn certify(result: &RadiusResult, r_tol: f64) -> Result<VerificationReport> {
    certify_with(result, OracleGrid::default(), r_tol)
}

/// [`certify`] on an explicit grid. Sharp results also get their touch
/// point evaluated; non-sharp bounds are checked one-sidedly where the
/// constant is known not to be optimal.
pub fn certify_with(
    result: &RadiusResult,
    grid: OracleGrid,
    r_tol: f64,
) -> Result<VerificationReport> {
    let plan = plan_for(result)?;
    let target = &plan.target;
    let sup = match &plan.map {
        WMap::LogDerivative(f) => sup_radius_oracle(
            |r, t| f.log_derivative(ComplexValue::from_polar(r, t)),
            target,
            grid,
            r_tol,
        )?,
        WMap::Convexity => sup_radius_oracle(
            |r, t| f0_convexity_map(ComplexValue::from_polar(r, t)),
            target,
            grid,
            r_tol,
        )?,
    };
    let mut report = VerificationReport::new(
        format!("radius:{}", result.subject()),
        result.value,
        sup.radius,
        plan.mode,
        grid.angles,
        AGREEMENT_TOL.max(r_tol),
    );
    report.regime = Some(sup.regime);
    if result.sharp {
        let residual = sharpness_witness(result)?.residual()?;
        report = report.with_touch(residual);
    }
    Ok(report)
}

/// A numerical estimate without a certificate.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct K0Estimate {
    /// Largest sampled `r` with `min Re(1 + z f0''/f0') >= 0` on `|z| = r`.
    pub radius: f64,
    /// The certified (non-sharp) convexity radius.
    pub certified_lower_bound: f64,
    /// Always `true`: the estimate is not backed by a proof.
    pub experimental: bool,
}

/// Experimental estimate of the exact convexity radius of the petal extremal.
pub fn estimate_k0_radius(samples: usize) -> Result<K0Estimate> {
    if samples < 1024 {
        return Err(domain("samples", samples as f64, "[1024, inf)"));
    }
    let grid = OracleGrid {
        radii: 64,
        angles: samples,
    };
    let sup = sup_radius_oracle(
        |r, t| f0_convexity_map(ComplexValue::from_polar(r, t)),
        |w| w.re >= 0.0,
        grid,
        1e-9,
    )?;
    Ok(K0Estimate {
        radius: sup.radius,
        certified_lower_bound: convex_order_radius(0.0)?.value,
        experimental: true,
    })
}
