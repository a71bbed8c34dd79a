//! Extremal and test functions: integral representations built from a
//! generator `q`, closed forms for every sharpness witness, exact Taylor
//! coefficients of the petal extremal, and touch points on `|z| = R`.

mod function;
mod generator;

use std::f64::consts::PI;

use num_traits::{FromPrimitive, Num};
use serde::Serialize;

pub use function::{ClosedForm, Companion, FunctionSpec};
pub use generator::{table1_generators, GeneratorSpec};

use crate::error::{domain, Error, Result};
use crate::kernel::{asinh_series, series_exp, series_integrate, ComplexValue, PowerSeries};
use crate::radii::{ClassId, NamedClass, RadiusResult, RatioClass};

/// `f(z) = z exp(∫_0^z (q(t) - 1)/t dt)` for a validated generator.
pub fn build_integral_rep(q: GeneratorSpec) -> Result<FunctionSpec> {
    q.validate()?;
    Ok(FunctionSpec::IntegralRep { generator: q })
}

/// Taylor coefficients `a_0..=a_order` of the petal extremal function
/// `z exp(∫_0^z asinh(t)/t dt)`, in any field (use `BigRational` for exact values).
pub fn f0_coefficients<T>(order: usize) -> Result<PowerSeries<T>>
where
    T: Clone + Num + FromPrimitive,
{
    if order < 1 {
        return Err(domain("order", order as f64, "integers >= 1"));
    }
    let log_part = series_integrate(&asinh_series::<T>(order - 1))?;
    Ok(series_exp(&log_part)?.shift_up())
}

/// Taylor coefficients `a_0..=a_order` of any function by a discrete Cauchy
/// integral on `|z| = 0.9`. Accurate to roughly `1e-16 / 0.9^k`.
pub fn cauchy_coefficients(f: &FunctionSpec, order: usize) -> Result<Vec<f64>> {
    const RADIUS: f64 = 0.9;
    let m = (8 * (order + 1)).max(1024);
    let values = (0..m)
        .map(|j| {
            let theta = 2.0 * PI * j as f64 / m as f64;
            f.evaluate(ComplexValue::from_polar(RADIUS, theta))
        })
        .collect::<Result<Vec<_>>>()?;
    let coeffs = (0..=order)
        .map(|k| {
            let sum: ComplexValue = values
                .iter()
                .enumerate()
                .map(|(j, v)| {
                    let theta = 2.0 * PI * ((j * k) % m) as f64 / m as f64;
                    v * ComplexValue::from_polar(1.0, -theta)
                })
                .sum();
            sum.re / m as f64 / RADIUS.powi(k as i32)
        })
        .collect();
    Ok(coeffs)
}

/// A function attaining a sharp radius: `zf'/f` at `z_star` (with
/// `|z_star| = R`) equals `expected_w`, a boundary point of the target region.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SharpnessWitness {
    pub function: FunctionSpec,
    pub z_star: ComplexValue,
    pub expected_w: ComplexValue,
}

impl SharpnessWitness {
    /// `|zf'/f(z_star) - expected_w|`.
    pub fn residual(&self) -> Result<f64> {
        Ok((self.function.log_derivative(self.z_star)? - self.expected_w).norm())
    }
}

/// The extremal function and touch point for a sharp radius.
pub fn sharpness_witness(result: &RadiusResult) -> Result<SharpnessWitness> {
    if !result.sharp {
        return Err(Error::Unsupported(format!(
            "{} is not a sharp radius, there is no extremal function",
            result.subject()
        )));
    }
    let r = result.value;
    let a = crate::kernel::ASINH_ONE;
    let real = |x: f64| ComplexValue::new(x, 0.0);
    let f0 = FunctionSpec::closed(ClosedForm::F0Petal);
    let (function, z_star, w) = match result.subject() {
        ClassId::SAlpha { alpha } => (f0, real(-r), real(alpha)),
        ClassId::MBeta { beta } => (f0, real(r), real(beta)),
        ClassId::KSt { k } => (f0, real(-r), real(k / (k + 1.0))),
        ClassId::Sn { n } => (ClosedForm::SnExt { n }.into(), real(r), real(1.0 + a)),
        ClassId::CSn { n, alpha } => (
            ClosedForm::CsnExt { n, alpha }.into(),
            real(r),
            real(1.0 + a),
        ),
        ClassId::Named(named) => {
            let (id, z) = match named {
                NamedClass::Lemniscate => (ClosedForm::LemniscateExt, -r),
                NamedClass::Rl => (ClosedForm::RlExt, -r),
                NamedClass::Cardioid => (ClosedForm::CardioidExt, r),
                NamedClass::Exponential => (ClosedForm::ExpExt, r),
                NamedClass::Crescent => (ClosedForm::CrescentExt, r),
                NamedClass::Booth { alpha } => (ClosedForm::BoothExt { alpha }, -r),
            };
            (id.into(), real(z), real(1.0 + a * z.signum()))
        }
        ClassId::Ratio { kind, n } => {
            let rotated = ComplexValue::from_polar(r, PI / n as f64);
            match kind {
                RatioClass::F1 => (ClosedForm::F1Pair { n }.into(), rotated, real(1.0 - a)),
                RatioClass::F2 => (ClosedForm::F2Pair { n }.into(), real(r), real(1.0 + a)),
                RatioClass::F3 => (ClosedForm::F3Pair { n }.into(), rotated, real(1.0 - a)),
            }
        }
        other => {
            return Err(Error::Unsupported(format!(
                "no extremal function recorded for {other}"
            )))
        }
    };
    Ok(SharpnessWitness {
        function,
        z_star,
        expected_w: w,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::radii::radius;
    use num_rational::BigRational;

    fn c(re: f64, im: f64) -> ComplexValue {
        ComplexValue::new(re, im)
    }

    #[test]
    fn exact_leading_coefficients() {
        let s = f0_coefficients::<BigRational>(6).unwrap();
        let expect = [(0, 1), (1, 1), (1, 1), (1, 2), (1, 9), (-1, 72), (-1, 225)];
        for (k, (p, q)) in expect.iter().enumerate() {
            let want = BigRational::new((*p).into(), (*q).into());
            assert_eq!(s.coeff(k), want, "a_{k}");
        }
    }

    #[test]
    fn series_and_quadrature_agree() {
        let series = f0_coefficients::<f64>(64).unwrap();
        let f = build_integral_rep(GeneratorSpec::Petal).unwrap();
        for z in [c(0.3, 0.0), c(-0.2, 0.25), c(0.0, 0.4)] {
            let diff = (series.eval(z) - f.evaluate(z).unwrap()).norm();
            assert!(diff < 1e-12, "{z}: {diff:e}");
        }
        let at = f.evaluate(c(0.4, 0.0)).unwrap();
        assert!((at.re - 0.594_697_546_008_726).abs() < 1e-13);
    }

    #[test]
    fn tabulated_closed_forms_match_integral_rep() {
        let forms = [
            ClosedForm::Table1F1,
            ClosedForm::Table1F2,
            ClosedForm::Table1F3,
        ];
        for (q, id) in table1_generators().into_iter().zip(forms) {
            let f = build_integral_rep(q).unwrap();
            for z in [c(0.5, 0.1), c(-0.7, -0.3), c(0.1, 0.9)] {
                let a = f.evaluate(z).unwrap();
                let b = FunctionSpec::closed(id).evaluate(z).unwrap();
                assert!((a - b).norm() < 1e-12, "{id:?} at {z}");
            }
        }
    }

    #[test]
    fn closed_forms_match_their_generators() {
        let pairs = [
            (ClosedForm::LemniscateExt, GeneratorSpec::Lemniscate),
            (ClosedForm::CardioidExt, GeneratorSpec::Cardioid),
            (ClosedForm::ExpExt, GeneratorSpec::Exponential),
            (ClosedForm::CrescentExt, GeneratorSpec::Crescent),
            (
                ClosedForm::BoothExt { alpha: 0.5 },
                GeneratorSpec::Booth { alpha: 0.5 },
            ),
            (
                ClosedForm::BoothExt { alpha: 1.0 },
                GeneratorSpec::Booth { alpha: 1.0 },
            ),
            (
                ClosedForm::JanowskiExt {
                    n: 1,
                    c: 0.8,
                    d: -0.3,
                },
                GeneratorSpec::Janowski { c: 0.8, d: -0.3 },
            ),
        ];
        for (id, q) in pairs {
            let rep = build_integral_rep(q).unwrap();
            for z in [c(0.45, 0.2), c(-0.6, 0.1)] {
                let a = FunctionSpec::closed(id).evaluate(z).unwrap();
                let b = rep.evaluate(z).unwrap();
                assert!((a - b).norm() < 1e-12, "{id:?} at {z}: {a} vs {b}");
            }
        }
    }

    #[test]
    fn log_derivatives_match_finite_differences() {
        let ids = [
            ClosedForm::SnExt { n: 2 },
            ClosedForm::CsnExt { n: 2, alpha: 0.3 },
            ClosedForm::F1Pair { n: 2 },
            ClosedForm::F2Pair { n: 1 },
            ClosedForm::F3Pair { n: 3 },
            ClosedForm::JanowskiExt {
                n: 2,
                c: 0.5,
                d: 0.0,
            },
            ClosedForm::JanowskiExt {
                n: 3,
                c: 1.0,
                d: -1.0,
            },
            ClosedForm::RlExt,
        ];
        let h = 1e-6;
        for id in ids {
            let f = FunctionSpec::closed(id);
            let z = c(0.35, 0.2);
            let df = (f.evaluate(z + h).unwrap() - f.evaluate(z - h).unwrap()) / (2.0 * h);
            let want = z * df / f.evaluate(z).unwrap();
            let got = f.log_derivative(z).unwrap();
            assert!((want - got).norm() < 1e-8, "{id:?}: {want} vs {got}");
        }
    }

    #[test]
    fn pair_quotients_have_positive_real_part() {
        let z = c(0.2, 0.6);
        for id in [
            ClosedForm::F1Pair { n: 2 },
            ClosedForm::F2Pair { n: 2 },
            ClosedForm::CsnExt { n: 2, alpha: 0.4 },
        ] {
            let g = id.companion().unwrap();
            let q = FunctionSpec::closed(id).evaluate(z).unwrap() / g.eval(z).unwrap();
            assert!(q.re > 0.0, "{id:?}");
        }
        let g = ClosedForm::F3Pair { n: 1 }.companion().unwrap();
        let q = FunctionSpec::closed(ClosedForm::F3Pair { n: 1 })
            .evaluate(z)
            .unwrap()
            / g.eval(z).unwrap();
        assert!((q - 1.0).norm() < 1.0);
    }

    #[test]
    fn normalization_near_the_origin() {
        let z = c(1e-6, 0.0);
        for q in table1_generators()
            .into_iter()
            .chain([GeneratorSpec::Petal])
        {
            let f = build_integral_rep(q).unwrap();
            assert!((f.evaluate(z).unwrap() / z - 1.0).norm() < 2e-6);
        }
        assert_eq!(
            FunctionSpec::closed(ClosedForm::F0Petal).log_derivative(c(0.0, 0.0)),
            Ok(c(1.0, 0.0))
        );
    }

    #[test]
    fn cauchy_coefficients_recover_f0() {
        let exact = f0_coefficients::<f64>(12).unwrap();
        let f = FunctionSpec::closed(ClosedForm::F0Petal);
        let got = cauchy_coefficients(&f, 12).unwrap();
        for (k, c) in got.iter().enumerate() {
            assert!((c - exact.coeff(k)).abs() < 1e-11, "a_{k}");
        }
    }

    #[test]
    fn witnesses_touch_for_every_sharp_family() {
        let classes = [
            ClassId::SAlpha { alpha: 0.5 },
            ClassId::SAlpha {
                alpha: 1.0 - crate::kernel::ASINH_ONE,
            },
            ClassId::MBeta { beta: 1.5 },
            ClassId::KSt { k: 2.0 },
            ClassId::Sn { n: 3 },
            ClassId::CSn { n: 2, alpha: 0.25 },
            ClassId::Named(NamedClass::Lemniscate),
            ClassId::Named(NamedClass::Rl),
            ClassId::Named(NamedClass::Cardioid),
            ClassId::Named(NamedClass::Exponential),
            ClassId::Named(NamedClass::Crescent),
            ClassId::Named(NamedClass::Booth { alpha: 0.0 }),
            ClassId::Named(NamedClass::Booth { alpha: 0.7 }),
            ClassId::Ratio {
                kind: RatioClass::F1,
                n: 2,
            },
            ClassId::Ratio {
                kind: RatioClass::F2,
                n: 1,
            },
            ClassId::Ratio {
                kind: RatioClass::F3,
                n: 3,
            },
        ];
        for class in classes {
            let w = sharpness_witness(&radius(class).unwrap()).unwrap();
            assert!(
                w.residual().unwrap() < 1e-12,
                "{class}: {:e}",
                w.residual().unwrap()
            );
        }
        assert!(sharpness_witness(&crate::radii::radius_f()).is_err());
    }

    #[test]
    fn integral_rep_rejects_the_boundary() {
        let f = build_integral_rep(GeneratorSpec::Petal).unwrap();
        assert!(f.evaluate(c(1.0, 0.0)).is_err());
    }
}
