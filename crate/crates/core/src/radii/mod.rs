//! Radius constants: for a pair of classes `(G2, G1)`, the largest `R` such
//! that every `f ∈ G2` satisfies the defining condition of `G1` in `|z| < R`.
//!
//! Each constant comes back as a [`RadiusResult`] recording how it was
//! obtained (closed form or least positive root) and whether it is sharp.

mod class;
mod solve;

use std::collections::BTreeMap;
use std::f64::consts::{E, SQRT_2};

use serde::Serialize;

pub use class::{ClassId, NamedClass, RatioClass};
pub use solve::solve_bracketed;

use crate::error::{domain, Error, Result};
use crate::kernel::ASINH_ONE;

use class::{check_janowski, check_n, check_order};

const A: f64 = ASINH_ONE;

/// Residual bound every root-defined radius is certified to.
pub const ROOT_RESIDUAL_TOL: f64 = 1e-10;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    ClosedForm,
    RootOfEquation,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RadiusResult {
    pub value: f64,
    pub source_class: ClassId,
    pub target_class: ClassId,
    pub params: BTreeMap<String, f64>,
    pub method: Method,
    pub sharp: bool,
    /// The inequality the constant comes from.
    #[serde(rename = "ref")]
    pub reference: String,
}

impl RadiusResult {
    fn new(
        value: f64,
        source_class: ClassId,
        target_class: ClassId,
        method: Method,
        sharp: bool,
        reference: &str,
    ) -> Self {
        let subject = if source_class == ClassId::SRho {
            target_class
        } else {
            source_class
        };
        let params = subject
            .params()
            .into_iter()
            .map(|(k, v)| (k.to_string(), v))
            .collect();
        Self {
            value,
            source_class,
            target_class,
            params,
            method,
            sharp,
            reference: reference.to_string(),
        }
    }

    /// The class other than the petal class in the pair.
    pub fn subject(&self) -> ClassId {
        if self.source_class == ClassId::SRho {
            self.target_class
        } else {
            self.source_class
        }
    }

    /// `value == 1`: the relation holds on the whole disk.
    pub fn is_whole_disk(&self) -> bool {
        self.value >= 1.0
    }
}

/// Radius for any supported pair, keyed by the non-petal class.
pub fn radius(class: ClassId) -> Result<RadiusResult> {
    match class {
        ClassId::SAlpha { alpha } => starlike_order_radius(alpha),
        ClassId::MBeta { beta } => m_beta_radius(beta),
        ClassId::KSt { k } => k_st_radius(k),
        ClassId::KAlpha { alpha } => convex_order_radius(alpha),
        ClassId::Sn { n } => radius_sn(n),
        ClassId::CSn { n, alpha } => radius_csn(n, alpha),
        ClassId::JanowskiN { n, c, d } => radius_janowski(n, c, d),
        ClassId::Named(named) => named_class_radius(named),
        ClassId::F => Ok(radius_f()),
        ClassId::Ratio { kind, n } => ratio_class_radius(kind, n),
        ClassId::SRho => Err(Error::Unsupported(
            "the petal class paired with itself has no radius".into(),
        )),
    }
}

/// Starlikeness of order `α` for the petal class: `sinh(1 - α)`, or the whole
/// disk once `α <= 1 - asinh 1`.
pub fn starlike_order_radius(alpha: f64) -> Result<RadiusResult> {
    check_order(alpha)?;
    let target = ClassId::SAlpha { alpha };
    if alpha < 1.0 - A {
        return Ok(RadiusResult::new(
            1.0,
            ClassId::SRho,
            target,
            Method::ClosedForm,
            false,
            "Re w >= 1 - asinh 1 on the whole petal",
        ));
    }
    Ok(RadiusResult::new(
        (1.0 - alpha).sinh().min(1.0),
        ClassId::SRho,
        target,
        Method::ClosedForm,
        true,
        "Re w >= 1 - asinh r on |z| = r",
    ))
}

/// `Re(zf'/f) < β`: `sinh(β - 1)`, or the whole disk once `β > 1 + asinh 1`.
pub fn m_beta_radius(beta: f64) -> Result<RadiusResult> {
    let target = ClassId::MBeta { beta };
    target.validate()?;
    if beta > 1.0 + A {
        return Ok(RadiusResult::new(
            1.0,
            ClassId::SRho,
            target,
            Method::ClosedForm,
            false,
            "Re w <= 1 + asinh 1 on the whole petal",
        ));
    }
    Ok(RadiusResult::new(
        (beta - 1.0).sinh().min(1.0),
        ClassId::SRho,
        target,
        Method::ClosedForm,
        true,
        "Re w <= 1 + asinh r on |z| = r",
    ))
}

/// k-starlikeness: `sinh(1/(k + 1))`, or the whole disk once
/// `k <= 1/asinh 1 - 1`.
pub fn k_st_radius(k: f64) -> Result<RadiusResult> {
    if !(k > 0.0 && k.is_finite()) {
        return Err(domain("k", k, "(0, inf)"));
    }
    let value = (1.0 / (k + 1.0)).sinh();
    Ok(RadiusResult::new(
        value.min(1.0),
        ClassId::SRho,
        ClassId::KSt { k },
        Method::ClosedForm,
        value <= 1.0,
        "1 - asinh r >= k asinh r",
    ))
}

/// Left side of the convexity-radius equation
/// `(1 - r^2) sqrt(1 + r^2) (1 - asinh r)(1 - α - asinh r) - r`.
pub fn convexity_equation(r: f64, alpha: f64) -> f64 {
    let s = r.asinh();
    (1.0 - r * r) * (1.0 + r * r).sqrt() * (1.0 - s) * (1.0 - alpha - s) - r
}

/// Convexity of order `α`: least root in `(0, 1)` of [`convexity_equation`].
/// The bound is not sharp.
pub fn convex_order_radius(alpha: f64) -> Result<RadiusResult> {
    check_order(alpha)?;
    let g = |r: f64| convexity_equation(r, alpha);
    const PANELS: usize = 64;
    let mut lo = 0.0;
    let mut g_lo = g(lo);
    let mut bracket = None;
    for i in 1..=PANELS {
        let hi = i as f64 / PANELS as f64;
        let g_hi = g(hi);
        if g_lo == 0.0 && lo > 0.0 {
            bracket = Some((lo, lo));
            break;
        }
        if g_lo.signum() != g_hi.signum() {
            bracket = Some((lo, hi));
            break;
        }
        lo = hi;
        g_lo = g_hi;
    }
    let (lo, hi) = bracket.ok_or_else(|| {
        Error::Computation(format!(
            "no sign change of the convexity equation for alpha = {alpha}"
        ))
    })?;
    let root = if lo == hi {
        lo
    } else {
        solve_bracketed(g, lo, hi, 1e-15)?
    };
    let residual = g(root).abs();
    if residual >= ROOT_RESIDUAL_TOL {
        return Err(Error::Computation(format!(
            "convexity root residual {residual:e} above {ROOT_RESIDUAL_TOL:e}"
        )));
    }
    Ok(RadiusResult::new(
        root,
        ClassId::SRho,
        ClassId::KAlpha { alpha },
        Method::RootOfEquation,
        false,
        "Re(1 + zf''/f') >= 1 - asinh r - r/((1 - asinh r)(1 - r^2) sqrt(1 + r^2))",
    ))
}

/// `f/z ∈ P_n`: `(asinh1 / (n + sqrt(n^2 + asinh1^2)))^{1/n}`.
pub fn radius_sn(n: u32) -> Result<RadiusResult> {
    check_n(n)?;
    let nf = n as f64;
    let x = A / (nf + (nf * nf + A * A).sqrt());
    Ok(RadiusResult::new(
        x.powf(1.0 / nf),
        ClassId::Sn { n },
        ClassId::SRho,
        Method::ClosedForm,
        true,
        "2n r^n / (1 - r^2n) <= asinh 1",
    ))
}

/// The constant `-e + sqrt(1 + e^2)` reported for the class `f/z ∈ P`.
///
/// This is a valid radius but not the largest one: the class coincides with
/// `S_1`, whose sharp radius [`radius_sn`]`(1)` is about twice as large.
/// It is therefore flagged as not sharp.
pub fn radius_f() -> RadiusResult {
    RadiusResult::new(
        -E + (1.0 + E * E).sqrt(),
        ClassId::F,
        ClassId::SRho,
        Method::ClosedForm,
        false,
        "root of r^2 + 2er - 1 = 0, i.e. 2r/(1 - r^2) = 1/e",
    )
}

/// `f/g ∈ P_n` with `g` starlike of order `α` in `A_n`.
pub fn radius_csn(n: u32, alpha: f64) -> Result<RadiusResult> {
    check_n(n)?;
    check_order(alpha)?;
    let nf = n as f64;
    let b = nf - alpha + 1.0;
    let x = A / (b + (b * b + (A + 2.0 * (1.0 - alpha)) * A).sqrt());
    Ok(RadiusResult::new(
        x.powf(1.0 / nf),
        ClassId::CSn { n, alpha },
        ClassId::SRho,
        Method::ClosedForm,
        true,
        "(1 + 2(n - α + 1) r^n + (1 - 2α) r^2n) / (1 - r^2n) <= 1 + asinh 1",
    ))
}

/// Janowski class `S*_n[C, D]`, clamped to the whole disk.
pub fn radius_janowski(n: u32, c: f64, d: f64) -> Result<RadiusResult> {
    check_n(n)?;
    check_janowski(c, d)?;
    let nf = n as f64;
    let (x, reference) = if d < 0.0 {
        let disc = (c - d).powi(2) + 4.0 * (d * d * (1.0 + A) - c * d) * A;
        (
            2.0 * A / (c - d + disc.sqrt()),
            "right end of the disk (1 + C r^n)/(1 + D r^n) <= 1 + asinh 1",
        )
    } else if d == 0.0 {
        (A / c, "C r^n <= asinh 1")
    } else {
        let disc = (c - d).powi(2) + 4.0 * (d * d * (A - 1.0) + c * d) * A;
        (
            2.0 * A / (c - d + disc.sqrt()),
            "left end of the disk (1 - C r^n)/(1 - D r^n) >= 1 - asinh 1",
        )
    };
    Ok(RadiusResult::new(
        x.powf(1.0 / nf).min(1.0),
        ClassId::JanowskiN { n, c, d },
        ClassId::SRho,
        Method::ClosedForm,
        false,
        reference,
    ))
}

/// The six named Ma–Minda classes.
pub fn named_class_radius(class: NamedClass) -> Result<RadiusResult> {
    class.validate()?;
    let (value, reference) = match class {
        NamedClass::Lemniscate => (A * (2.0 - A), "1 - sqrt(1 - r) <= asinh 1"),
        NamedClass::Rl => (
            (2.0 + (1.0 + SQRT_2) * A) * A
                / (5.0 - 3.0 * SQRT_2 + (4.0 * (SQRT_2 - 1.0) + 2.0 * A) * A),
            "1 - sqrt 2 + (sqrt 2 - 1) sqrt((1 + r)/(1 - 2(sqrt 2 - 1) r)) <= asinh 1",
        ),
        NamedClass::Cardioid => (
            0.5 * ((2.0 * (2.0 + 3.0 * A)).sqrt() - 2.0),
            "4r/3 + 2r^2/3 <= asinh 1",
        ),
        NamedClass::Exponential => ((1.0 + A).ln(), "e^r - 1 <= asinh 1"),
        NamedClass::Crescent => (
            A * (2.0 + A) / (2.0 * (1.0 + A)),
            "r + sqrt(1 + r^2) - 1 <= asinh 1",
        ),
        NamedClass::Booth { alpha } => {
            let v = if alpha == 0.0 {
                A
            } else {
                (-1.0 + (1.0 + 4.0 * alpha * A * A).sqrt()) / (2.0 * alpha * A)
            };
            (v, "r / (1 - α r^2) <= asinh 1")
        }
    };
    Ok(RadiusResult::new(
        value,
        ClassId::Named(class),
        ClassId::SRho,
        Method::ClosedForm,
        true,
        reference,
    ))
}

/// Ratio classes `F1`, `F2`, `F3` in `A_n`.
pub fn ratio_class_radius(kind: RatioClass, n: u32) -> Result<RadiusResult> {
    check_n(n)?;
    let nf = n as f64;
    let (x, reference) = match kind {
        RatioClass::F1 => (
            ((4.0 * nf * nf + A * A).sqrt() - 2.0 * nf) / A,
            "4n r^n / (1 - r^2n) <= asinh 1",
        ),
        RatioClass::F2 | RatioClass::F3 => (
            ((9.0 * nf * nf + 4.0 * A * (nf + A)).sqrt() - 3.0 * nf) / (2.0 * (nf + A)),
            "(3n r^n + n r^2n) / (1 - r^2n) <= asinh 1",
        ),
    };
    Ok(RadiusResult::new(
        x.powf(1.0 / nf),
        ClassId::Ratio { kind, n },
        ClassId::SRho,
        Method::ClosedForm,
        true,
        reference,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn starlike_order_examples() {
        let at_edge = starlike_order_radius(1.0 - A).unwrap();
        assert!((at_edge.value - 1.0).abs() < 1e-15);
        assert!(at_edge.sharp);
        let half = starlike_order_radius(0.5).unwrap();
        assert!((half.value - 0.521_095_305_493_747_4).abs() < 1e-15);
        let whole = starlike_order_radius(0.05).unwrap();
        assert_eq!(whole.value, 1.0);
        assert!(whole.is_whole_disk());
        assert!(starlike_order_radius(1.0).is_err());
        assert!(starlike_order_radius(-0.1).is_err());
    }

    #[test]
    fn m_beta_examples() {
        assert!((m_beta_radius(1.0 + A).unwrap().value - 1.0).abs() < 1e-15);
        assert!((m_beta_radius(1.5).unwrap().value - 0.521_095_305_493_747_4).abs() < 1e-15);
        assert_eq!(m_beta_radius(3.0).unwrap().value, 1.0);
        assert!(m_beta_radius(1.0).is_err());
    }

    #[test]
    fn k_st_examples() {
        assert!((k_st_radius(1.0).unwrap().value - 0.521095).abs() < 1e-6);
        assert!((k_st_radius(2.0).unwrap().value - 0.339_540_557_256_150_1).abs() < 1e-15);
        assert!(k_st_radius(1e6).unwrap().value < 1e-5);
        assert!(k_st_radius(0.0).is_err());
        let small = k_st_radius(0.05).unwrap();
        assert_eq!(small.value, 1.0);
        assert!(!small.sharp);
    }

    #[test]
    fn convex_order_examples() {
        let r0 = convex_order_radius(0.0).unwrap();
        assert!((r0.value - 0.37198).abs() < 5e-5);
        assert_eq!(r0.method, Method::RootOfEquation);
        assert!(!r0.sharp);
        assert!(convexity_equation(r0.value, 0.0).abs() < ROOT_RESIDUAL_TOL);
        assert!(convexity_equation(0.37198, 0.0).abs() < 5e-5);
        let r9 = convex_order_radius(0.9).unwrap();
        assert!(r9.value > 0.0 && r9.value < r0.value);
        assert!(convexity_equation(r9.value, 0.9).abs() < ROOT_RESIDUAL_TOL);
        // the closer to 1, the smaller the root; still found in the first panel
        let r = convex_order_radius(0.9999).unwrap();
        assert!(r.value > 0.0 && r.value < 1.0 / 64.0);
    }

    #[test]
    fn root_from_bracketing_matches_direct_solve() {
        let direct = solve_bracketed(|r| convexity_equation(r, 0.0), 0.1, 0.9, 1e-14).unwrap();
        assert!((direct - 0.37198).abs() < 5e-5);
        assert!((direct - convex_order_radius(0.0).unwrap().value).abs() < 1e-13);
    }

    #[test]
    fn sn_examples() {
        assert!((radius_sn(1).unwrap().value - 0.377_789_734_208_599_8).abs() < 1e-14);
        let r2 = radius_sn(2).unwrap().value;
        let x = r2 * r2;
        assert!((A * x * x + 4.0 * x - A).abs() < 1e-12);
        assert!(radius_sn(10_000).unwrap().value > 0.998);
        assert!(radius_sn(0).is_err());
    }

    #[test]
    fn f_constant() {
        let f = radius_f();
        assert!((f.value - 0.178105).abs() < 1e-6);
        assert!(f.value < radius_sn(1).unwrap().value);
        assert!(!f.sharp);
    }

    #[test]
    fn csn_examples() {
        let r = radius_csn(1, 0.0).unwrap().value;
        assert!((r - 0.193_399_991_626_780_8).abs() < 1e-14);
        for (n, alpha) in [(1, 0.0), (2, 0.3), (3, 0.7)] {
            let x = radius_csn(n, alpha).unwrap().value.powi(n as i32);
            let resid = (2.0 - 2.0 * alpha + A) * x * x + 2.0 * (n as f64 - alpha + 1.0) * x - A;
            assert!(resid.abs() < 1e-12);
        }
        assert!(radius_csn(1, 1.0).is_err());
        assert!(radius_csn(0, 0.5).is_err());
    }

    #[test]
    fn janowski_examples() {
        let r = radius_janowski(1, 1.0, -1.0).unwrap().value;
        assert!((r - 0.305_886_605_954_219_5).abs() < 1e-14);
        assert_eq!(radius_janowski(1, 0.9 * A, 0.0).unwrap().value, 1.0);
        assert!(radius_janowski(1, 0.2, 0.5).is_err());
        assert!(radius_janowski(1, 0.5, 0.5).is_err());
        assert!(radius_janowski(1, 0.5, -1.5).is_err());
    }

    #[test]
    fn janowski_is_continuous_at_d_zero() {
        for n in [1, 2, 3] {
            let mid = radius_janowski(n, 1.0, 0.0).unwrap().value;
            let below = radius_janowski(n, 1.0, -1e-9).unwrap().value;
            let above = radius_janowski(n, 1.0, 1e-9).unwrap().value;
            assert!((below - mid).abs() < 1e-8, "n={n}");
            assert!((above - mid).abs() < 1e-8, "n={n}");
            // first order in D
            for d in [1e-6, 1e-4] {
                assert!((radius_janowski(n, 1.0, -d).unwrap().value - mid).abs() < 2.0 * d);
                assert!((radius_janowski(n, 1.0, d).unwrap().value - mid).abs() < 2.0 * d);
            }
        }
    }

    #[test]
    fn named_values() {
        let v = |c| named_class_radius(c).unwrap().value;
        assert!((v(NamedClass::Lemniscate) - 0.985928).abs() < 1e-6);
        assert!((v(NamedClass::Rl) - 0.964694).abs() < 1e-6);
        assert!((v(NamedClass::Cardioid) - 0.523831).abs() < 1e-6);
        assert!((v(NamedClass::Exponential) - 0.632002).abs() < 1e-6);
        assert!((v(NamedClass::Crescent) - 0.674924).abs() < 1e-6);
        assert!((v(NamedClass::Booth { alpha: 1.0 }) - 0.58241).abs() < 1e-5);
        assert!((v(NamedClass::Booth { alpha: 0.0 }) - 0.881374).abs() < 1e-6);
        assert!(named_class_radius(NamedClass::Booth { alpha: 1.5 }).is_err());
    }

    #[test]
    fn ratio_values() {
        let v = |k, n| ratio_class_radius(k, n).unwrap().value;
        assert!((v(RatioClass::F1, 1) - 0.210_573_139_798_185).abs() < 1e-12);
        assert!((v(RatioClass::F2, 1) - 0.253_492_990_927_725_7).abs() < 1e-12);
        assert_eq!(v(RatioClass::F3, 3), v(RatioClass::F2, 3));
        assert!(ratio_class_radius(RatioClass::F1, 0).is_err());
    }

    #[test]
    fn dispatch_rejects_self_pair() {
        assert!(matches!(radius(ClassId::SRho), Err(Error::Unsupported(_))));
        assert_eq!(
            radius(ClassId::Named(NamedClass::Cardioid)).unwrap(),
            named_class_radius(NamedClass::Cardioid).unwrap()
        );
    }
}
