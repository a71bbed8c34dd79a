use serde::Serialize;

use super::GeneratorSpec;
use crate::error::{domain, Error, Result};
use crate::kernel::{integrate_segment, ComplexValue, PowerSeries, QuadOptions};

/// Functions with an explicit formula (or a formula plus one quadrature).
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(tag = "id", rename_all = "snake_case")]
pub enum ClosedForm {
    /// `z exp(∫_0^z asinh(t)/t dt)`
    F0Petal,
    /// `z e^{z/5}`
    Table1F1,
    /// `z + z^2/5`
    Table1F2,
    /// `z (1 + z/7)^3`
    Table1F3,
    /// `4z e^{2(sqrt(1+z) - 1)} / (1 + sqrt(1+z))^2`
    LemniscateExt,
    /// integral representation of the RL generator
    RlExt,
    /// `z exp((4z + z^2)/3)`
    CardioidExt,
    /// `z exp(∫_0^z (e^t - 1)/t dt)`
    ExpExt,
    /// `2z e^{z + sqrt(1+z^2) - 1} / (1 + sqrt(1+z^2))`
    CrescentExt,
    /// `z ((1 + sqrt(α) z)/(1 - sqrt(α) z))^{1/(2 sqrt α)}`; `α = 0` is `z e^z`
    BoothExt { alpha: f64 },
    /// `z (1 + z^n)/(1 - z^n)`
    SnExt { n: u32 },
    /// `z (1 + z^n)/(1 - z^n)^{(n + 2 - 2α)/n}`
    CsnExt { n: u32, alpha: f64 },
    /// `z ((1 + z^n)/(1 - z^n))^2`
    F1Pair { n: u32 },
    /// `z (1 + z^n)/(1 - z^n)^2`
    F2Pair { n: u32 },
    /// `z (1 + z^n)^2/(1 - z^n)`
    F3Pair { n: u32 },
    /// `z (1 + D z^n)^{(C - D)/(nD)}`, or `z exp(C z^n / n)` when `D = 0`
    JanowskiExt { n: u32, c: f64, d: f64 },
}

/// An analytic function normalized by `f(0) = 0`, `f'(0) = 1`.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "form", rename_all = "snake_case")]
pub enum FunctionSpec {
    /// `z exp(∫_0^z (q(t) - 1)/t dt)`
    IntegralRep {
        generator: GeneratorSpec,
    },
    ClosedForm {
        id: ClosedForm,
    },
    /// Taylor coefficients about 0, `c_0 = 0`, `c_1 = 1`.
    Series {
        series: PowerSeries<f64>,
    },
}

impl From<ClosedForm> for FunctionSpec {
    fn from(id: ClosedForm) -> Self {
        Self::ClosedForm { id }
    }
}

fn c1() -> ComplexValue {
    ComplexValue::new(1.0, 0.0)
}

fn check_open_disk(z: ComplexValue) -> Result<()> {
    let r = z.norm();
    if r < 1.0 {
        Ok(())
    } else {
        Err(domain("|z|", r, "[0, 1)"))
    }
}

fn finite(w: ComplexValue, what: &str, z: ComplexValue) -> Result<ComplexValue> {
    if w.re.is_finite() && w.im.is_finite() {
        Ok(w)
    } else {
        Err(Error::Computation(format!(
            "{what} is not finite at z = {z}"
        )))
    }
}

/// `∫_0^z (q(t) - 1)/t dt` along the segment, as `∫_0^1 (q(sz) - 1)/s ds`.
pub(crate) fn log_integral(q: &GeneratorSpec, z: ComplexValue) -> Result<ComplexValue> {
    if z.norm() == 0.0 {
        return Ok(ComplexValue::new(0.0, 0.0));
    }
    let failure = std::cell::Cell::new(None);
    let value = integrate_segment(
        |s| match q.log_integrand(s * z) {
            Ok(v) => v * z,
            Err(e) => {
                failure.set(Some(e));
                ComplexValue::new(0.0, 0.0)
            }
        },
        0.0,
        1.0,
        QuadOptions::default(),
    )?;
    if let Some(e) = failure.into_inner() {
        return Err(e);
    }
    Ok(value)
}

// Ein(z) = ∫_0^z (e^t - 1)/t dt = Σ z^k / (k k!)
fn ein(z: ComplexValue) -> ComplexValue {
    let mut term = c1();
    let mut sum = ComplexValue::new(0.0, 0.0);
    for k in 1..200 {
        term *= z / k as f64;
        let add = term / k as f64;
        sum += add;
        if add.norm() < 1e-18 * sum.norm().max(1e-300) {
            break;
        }
    }
    sum
}

impl ClosedForm {
    /// The `n` of `A_n` this function belongs to.
    pub fn order(&self) -> u32 {
        match *self {
            Self::SnExt { n }
            | Self::CsnExt { n, .. }
            | Self::F1Pair { n }
            | Self::F2Pair { n }
            | Self::F3Pair { n }
            | Self::JanowskiExt { n, .. } => n,
            _ => 1,
        }
    }

    pub fn validate(&self) -> Result<()> {
        match *self {
            Self::BoothExt { alpha } if !(0.0..=1.0).contains(&alpha) => {
                return Err(domain("Booth alpha", alpha, "[0, 1]"))
            }
            Self::CsnExt { alpha, .. } if !(0.0..1.0).contains(&alpha) => {
                return Err(domain("alpha", alpha, "[0, 1)"))
            }
            Self::JanowskiExt { c, d, .. } => {
                GeneratorSpec::Janowski { c, d }.validate()?;
            }
            _ => {}
        }
        if self.order() == 0 {
            return Err(domain("n", 0.0, "integers >= 1"));
        }
        Ok(())
    }

    fn eval(&self, z: ComplexValue) -> Result<ComplexValue> {
        let zn = |n: u32| z.powu(n);
        let w = match *self {
            Self::F0Petal => z * log_integral(&GeneratorSpec::Petal, z)?.exp(),
            Self::Table1F1 => z * (z / 5.0).exp(),
            Self::Table1F2 => z + z * z / 5.0,
            Self::Table1F3 => z * (1.0 + z / 7.0).powu(3),
            Self::LemniscateExt => {
                let s = (1.0 + z).sqrt();
                4.0 * z * (2.0 * (s - 1.0)).exp() / ((1.0 + s) * (1.0 + s))
            }
            Self::RlExt => z * log_integral(&GeneratorSpec::Rl, z)?.exp(),
            Self::CardioidExt => z * ((4.0 * z + z * z) / 3.0).exp(),
            Self::ExpExt => z * ein(z).exp(),
            Self::CrescentExt => {
                let s = (1.0 + z * z).sqrt();
                2.0 * z * (z + s - 1.0).exp() / (1.0 + s)
            }
            Self::BoothExt { alpha } => {
                if alpha == 0.0 {
                    let q = GeneratorSpec::Booth { alpha: 0.0 };
                    z * log_integral(&q, z)?.exp()
                } else {
                    let s = alpha.sqrt();
                    z * ((1.0 + s * z) / (1.0 - s * z)).powf(0.5 / s)
                }
            }
            Self::SnExt { n } => z * (1.0 + zn(n)) / (1.0 - zn(n)),
            Self::CsnExt { n, alpha } => {
                let p = (n as f64 + 2.0 - 2.0 * alpha) / n as f64;
                z * (1.0 + zn(n)) / (1.0 - zn(n)).powf(p)
            }
            Self::F1Pair { n } => {
                let r = (1.0 + zn(n)) / (1.0 - zn(n));
                z * r * r
            }
            Self::F2Pair { n } => z * (1.0 + zn(n)) / ((1.0 - zn(n)) * (1.0 - zn(n))),
            Self::F3Pair { n } => z * (1.0 + zn(n)) * (1.0 + zn(n)) / (1.0 - zn(n)),
            Self::JanowskiExt { n, c, d } => {
                if d == 0.0 {
                    z * (c * zn(n) / n as f64).exp()
                } else {
                    z * (1.0 + d * zn(n)).powf((c - d) / (n as f64 * d))
                }
            }
        };
        Ok(w)
    }

    fn log_derivative(&self, z: ComplexValue) -> Result<ComplexValue> {
        let zn = |n: u32| z.powu(n);
        let w = match *self {
            Self::F0Petal => GeneratorSpec::Petal.eval(z)?,
            Self::Table1F1 => 1.0 + z / 5.0,
            Self::Table1F2 => (5.0 + 2.0 * z) / (5.0 + z),
            Self::Table1F3 => (7.0 + 4.0 * z) / (7.0 + z),
            Self::LemniscateExt => GeneratorSpec::Lemniscate.eval(z)?,
            Self::RlExt => GeneratorSpec::Rl.eval(z)?,
            Self::CardioidExt => GeneratorSpec::Cardioid.eval(z)?,
            Self::ExpExt => GeneratorSpec::Exponential.eval(z)?,
            Self::CrescentExt => GeneratorSpec::Crescent.eval(z)?,
            Self::BoothExt { alpha } => GeneratorSpec::Booth { alpha }.eval(z)?,
            Self::SnExt { n } => {
                let nf = n as f64;
                1.0 + 2.0 * nf * zn(n) / (1.0 - zn(2 * n))
            }
            Self::CsnExt { n, alpha } => {
                let nf = n as f64;
                (1.0 + 2.0 * (nf - alpha + 1.0) * zn(n) + (1.0 - 2.0 * alpha) * zn(2 * n))
                    / (1.0 - zn(2 * n))
            }
            Self::F1Pair { n } => 1.0 + 4.0 * n as f64 * zn(n) / (1.0 - zn(2 * n)),
            Self::F2Pair { n } => {
                let nf = n as f64;
                1.0 + (3.0 * nf * zn(n) + nf * zn(2 * n)) / (1.0 - zn(2 * n))
            }
            Self::F3Pair { n } => {
                let nf = n as f64;
                1.0 + (3.0 * nf * zn(n) - nf * zn(2 * n)) / (1.0 - zn(2 * n))
            }
            Self::JanowskiExt { n, c, d } => (1.0 + c * zn(n)) / (1.0 + d * zn(n)),
        };
        Ok(w)
    }

    /// The second function `g` of a pair construction, where one exists.
    pub fn companion(&self) -> Option<Companion> {
        match *self {
            Self::CsnExt { n, alpha } => Some(Companion::StarlikeOrder { n, alpha }),
            Self::F1Pair { n } | Self::F3Pair { n } => Some(Companion::Caratheodory { n }),
            Self::F2Pair { n } => Some(Companion::HalfPlane { n }),
            _ => None,
        }
    }
}

/// The `g` in `f/g` constructions.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Companion {
    /// `z / (1 - z^n)^{2(1 - α)/n}`
    StarlikeOrder { n: u32, alpha: f64 },
    /// `z (1 + z^n)/(1 - z^n)`
    Caratheodory { n: u32 },
    /// `z / (1 - z^n)`
    HalfPlane { n: u32 },
}

impl Companion {
    pub fn eval(&self, z: ComplexValue) -> Result<ComplexValue> {
        check_open_disk(z)?;
        let w = match *self {
            Self::StarlikeOrder { n, alpha } => {
                z / (1.0 - z.powu(n)).powf(2.0 * (1.0 - alpha) / n as f64)
            }
            Self::Caratheodory { n } => z * (1.0 + z.powu(n)) / (1.0 - z.powu(n)),
            Self::HalfPlane { n } => z / (1.0 - z.powu(n)),
        };
        finite(w, "g(z)", z)
    }
}

impl FunctionSpec {
    pub fn closed(id: ClosedForm) -> Self {
        Self::ClosedForm { id }
    }

    /// `f(z)` for `|z| < 1`.
    pub fn evaluate(&self, z: ComplexValue) -> Result<ComplexValue> {
        check_open_disk(z)?;
        if z.norm() == 0.0 {
            return Ok(ComplexValue::new(0.0, 0.0));
        }
        let w = match self {
            Self::IntegralRep { generator } => z * log_integral(generator, z)?.exp(),
            Self::ClosedForm { id } => id.eval(z)?,
            Self::Series { series } => series.eval(z),
        };
        finite(w, "f(z)", z)
    }

    /// `z f'(z)/f(z)`; `1` at the origin. Accepts the closed disk wherever
    /// the expression is finite, so boundary touch points can be evaluated.
    pub fn log_derivative(&self, z: ComplexValue) -> Result<ComplexValue> {
        let r = z.norm();
        if !(r <= 1.0) {
            return Err(domain("|z|", r, "[0, 1]"));
        }
        if r == 0.0 {
            return Ok(c1());
        }
        let w = match self {
            Self::IntegralRep { generator } => generator.eval(z)?,
            Self::ClosedForm { id } => id.log_derivative(z)?,
            Self::Series { series } => z * series.eval_derivative(z) / series.eval(z),
        };
        finite(w, "zf'(z)/f(z)", z)
    }
}
