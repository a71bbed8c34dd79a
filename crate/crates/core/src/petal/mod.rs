//! Geometry of the petal `Ω = ρ(𝔻) = {w : |sinh(w - 1)| < 1, |Im w| < π/2}`:
//! membership, boundary sampling, inscribed disks, real/imaginary/modulus and
//! argument bounds, symmetry residuals and the conics behind the inclusions.

mod conic;

use std::f64::consts::{FRAC_PI_2, PI};

use serde::Serialize;

pub use conic::{ConicSpec, Side};

use crate::error::{domain, Result};
use crate::kernel::{asinh_principal, rho, sinh_c, ComplexValue, ASINH_ONE};

/// Default number of uniformly spaced boundary samples.
pub const DEFAULT_BOUNDARY_SAMPLES: usize = 4096;

/// Membership in the petal, strict at tolerance `tol`.
///
/// `|sinh(w - 1)| < 1 - tol`, restricted to the strip `|Im(w - 1)| <= π/2`.
/// The strip picks the component containing `w = 1`; outside it the equation
/// `|sinh| < 1` also holds on translated copies of the petal. A negative `tol`
/// enlarges the region, which is how touching claims are checked.
pub fn contains(w: ComplexValue, tol: f64) -> bool {
    let u = w - 1.0;
    u.im.abs() <= FRAC_PI_2 && sinh_c(u).norm() < 1.0 - tol
}

/// `ρ(r e^{iθ})` for `0 <= r <= 1`.
pub fn circle_image(r: f64, theta: f64) -> ComplexValue {
    // |Im z| <= r <= 1 so the cut check cannot fire.
    rho(ComplexValue::from_polar(r, theta)).expect("closed unit disk avoids the asinh cuts")
}

/// Point of the boundary curve `γ0 = ρ(e^{iθ})`.
pub fn boundary_point(theta: f64) -> ComplexValue {
    circle_image(1.0, theta)
}

/// `n` uniformly spaced angles `2πj/n`.
pub fn uniform_angles(n: usize) -> impl Iterator<Item = f64> + Clone {
    (0..n).map(move |j| 2.0 * PI * j as f64 / n as f64)
}

/// `(θ, ρ(r e^{iθ}))` on a uniform angular grid.
pub fn sample_circle_image(r: f64, n: usize) -> Vec<(f64, ComplexValue)> {
    uniform_angles(n).map(|t| (t, circle_image(r, t))).collect()
}

/// A disk with real center.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct DiskSpec {
    pub center: f64,
    pub radius: f64,
}

impl DiskSpec {
    pub fn new(center: f64, radius: f64) -> Result<Self> {
        if !(radius >= 0.0) {
            return Err(domain("disk radius", radius, "[0, inf)"));
        }
        Ok(Self { center, radius })
    }

    pub fn boundary_point(&self, theta: f64) -> ComplexValue {
        ComplexValue::new(self.center, 0.0) + ComplexValue::from_polar(self.radius, theta)
    }
}

fn check_unit(r: f64) -> Result<()> {
    if (0.0..=1.0).contains(&r) {
        Ok(())
    } else {
        Err(domain("r", r, "[0, 1]"))
    }
}

/// Radius `asinh(r)` of the largest disk about 1 inside `ρ(|z| <= r)`.
pub fn inscribed_disk_radius(r: f64) -> Result<f64> {
    check_unit(r)?;
    Ok(r.asinh())
}

/// The largest disk centred at real `a` that the petal is known to contain.
pub fn disk_in_petal(a: f64) -> Result<DiskSpec> {
    let lo = 1.0 - ASINH_ONE;
    let hi = 1.0 + ASINH_ONE;
    if !(a > lo && a < hi) {
        return Err(domain("disk center", a, "(1 - asinh 1, 1 + asinh 1)"));
    }
    let radius = if a <= 1.0 { a - lo } else { hi - a };
    DiskSpec::new(a, radius)
}

/// `t = (4/π) sqrt(asinh1 (1 - asinh1))`, the tangency parameter of the
/// bounding parabola; the sector half-angle is `atan(1/t)`.
pub fn tangent_parameter() -> f64 {
    4.0 / PI * (ASINH_ONE * (1.0 - ASINH_ONE)).sqrt()
}

/// Extremes of `ρ` over `|z| <= r`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Bounds {
    pub re_min: f64,
    pub re_max: f64,
    pub im_max: f64,
    pub mod_min: f64,
    pub mod_max: f64,
    /// Disk-wide bound `atan(1/t)`, independent of `r`.
    pub arg_max: f64,
}

pub fn bounds(r: f64) -> Result<Bounds> {
    check_unit(r)?;
    let s = r.asinh();
    Ok(Bounds {
        re_min: 1.0 - s,
        re_max: 1.0 + s,
        im_max: im_sup(r),
        mod_min: 1.0 - s,
        mod_max: 1.0 + s,
        arg_max: (1.0 / tangent_parameter()).atan(),
    })
}

// sup of Im ρ(r e^{iθ}) over θ ∈ [0, π/2]; by real symmetry this is the sup
// over the whole circle.
fn im_sup(r: f64) -> f64 {
    if r == 1.0 {
        return FRAC_PI_2;
    }
    let im = |t: f64| circle_image(r, t).im;
    let grid: Vec<f64> = (0..=64).map(|j| im(FRAC_PI_2 * j as f64 / 64.0)).collect();
    let monotone = grid.windows(2).all(|w| w[1] >= w[0]);
    if monotone {
        golden_max(im, 0.0, FRAC_PI_2, 1e-12)
    } else {
        (0..=DEFAULT_BOUNDARY_SAMPLES)
            .map(|j| im(FRAC_PI_2 * j as f64 / DEFAULT_BOUNDARY_SAMPLES as f64))
            .fold(f64::NEG_INFINITY, f64::max)
    }
}

fn golden_max<F: Fn(f64) -> f64>(f: F, mut a: f64, mut b: f64, tol: f64) -> f64 {
    let inv_phi = (5f64.sqrt() - 1.0) / 2.0;
    let mut c = b - inv_phi * (b - a);
    let mut d = a + inv_phi * (b - a);
    let (mut fc, mut fd) = (f(c), f(d));
    while b - a > tol {
        if fc > fd {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = f(d);
        }
    }
    [f(a), f(b), fc, fd]
        .into_iter()
        .fold(f64::NEG_INFINITY, f64::max)
}

/// Maximal residuals of the two reflection symmetries of `ρ` on `|z| = 1 - 1e-6`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SymmetryResiduals {
    /// `max |ρ(conj z) - conj ρ(z)|`
    pub conj_residual: f64,
    /// reflection through `Re w = 1`: `θ ↦ π - θ`
    pub vertical_residual: f64,
}

/// Residuals on `samples` equispaced angles in `[0, π/2]` (endpoints included).
pub fn symmetry_residuals(samples: usize) -> Result<SymmetryResiduals> {
    if samples < 2 {
        return Err(domain("samples", samples as f64, "[2, inf)"));
    }
    let r = 1.0 - 1e-6;
    let mut conj_residual = 0.0_f64;
    let mut vertical_residual = 0.0_f64;
    for j in 0..samples {
        let theta = FRAC_PI_2 * j as f64 / (samples - 1) as f64;
        let z = ComplexValue::from_polar(r, theta);
        let w = rho(z)?;
        conj_residual = conj_residual.max((rho(z.conj())? - w.conj()).norm());
        let mirror = circle_image(r, PI - theta);
        vertical_residual = vertical_residual
            .max((w.re + mirror.re - 2.0).abs())
            .max((w.im - mirror.im).abs());
    }
    Ok(SymmetryResiduals {
        conj_residual,
        vertical_residual,
    })
}

/// Thresholds and comparison regions of the inclusion relations.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct InclusionGeometry {
    /// Largest starlikeness order containing the class: `1 - asinh 1`.
    pub alpha_max: f64,
    /// Smallest `β` with the class inside `M(β)`: `1 + asinh 1`.
    pub beta_min: f64,
    /// Smallest `k` with `k-ST` inside the class: `1 + 1/asinh 1`.
    pub k_min: f64,
    /// Smallest strong-starlikeness order: `(2/π) atan(1/t)`.
    pub gamma_min: f64,
    pub tangent_param: f64,
    /// `Y^2 = 4a(X - b)` through the peaks `1 ± iπ/2` with vertex `1 - asinh 1`.
    pub parabola: ConicSpec,
    pub sector: ConicSpec,
    pub lower_half_plane: ConicSpec,
    pub upper_half_plane: ConicSpec,
}

impl InclusionGeometry {
    /// Boundary ellipse of the conic domain `Re w > k|w - 1|`.
    pub fn ellipse_at(&self, k: f64) -> Result<ConicSpec> {
        ellipse_at(k)
    }
}

pub fn ellipse_at(k: f64) -> Result<ConicSpec> {
    if !(k > 1.0) {
        return Err(domain("k", k, "(1, inf)"));
    }
    let k2 = k * k;
    ConicSpec::ellipse(k2 / (k2 - 1.0), k / (k2 - 1.0), 1.0 / (k2 - 1.0).sqrt())
}

pub fn inclusion_geometry() -> InclusionGeometry {
    let t = tangent_parameter();
    let half_angle = (1.0 / t).atan();
    InclusionGeometry {
        alpha_max: 1.0 - ASINH_ONE,
        beta_min: 1.0 + ASINH_ONE,
        k_min: 1.0 + 1.0 / ASINH_ONE,
        gamma_min: 2.0 / PI * half_angle,
        tangent_param: t,
        parabola: ConicSpec::Parabola {
            focus_param: PI * PI / (16.0 * ASINH_ONE),
            vertex: 1.0 - ASINH_ONE,
        },
        sector: ConicSpec::Sector { half_angle },
        lower_half_plane: ConicSpec::HalfPlane {
            threshold: 1.0 - ASINH_ONE,
            side: Side::Right,
        },
        upper_half_plane: ConicSpec::HalfPlane {
            threshold: 1.0 + ASINH_ONE,
            side: Side::Left,
        },
    }
}

/// `sinh(ρ(z) - 1) - z`, the membership round-trip defect.
pub fn membership_defect(z: ComplexValue) -> Result<f64> {
    Ok((sinh_c(asinh_principal(z)?) - z).norm())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn membership_examples() {
        assert!(contains(ComplexValue::new(1.0, 0.0), 0.0));
        assert!(!contains(ComplexValue::new(1.0 + ASINH_ONE, 0.0), 0.0));
        assert!(!contains(ComplexValue::new(1.0, 1.6), 0.0));
        // sinh(1.6i) has modulus < 1; only the strip excludes it.
        assert!(sinh_c(ComplexValue::new(0.0, 1.6)).norm() < 1.0);
        assert!(contains(ComplexValue::new(1.0, 1.5), 0.0));
    }

    #[test]
    fn boundary_point_examples() {
        assert!((boundary_point(0.0) - ComplexValue::new(1.0 + ASINH_ONE, 0.0)).norm() < 1e-15);
        assert!((boundary_point(PI) - ComplexValue::new(1.0 - ASINH_ONE, 0.0)).norm() < 1e-15);
        assert!((boundary_point(FRAC_PI_2).im - FRAC_PI_2).abs() < 1e-7);
    }

    #[test]
    fn inscribed_disk_examples() {
        assert_eq!(inscribed_disk_radius(0.0).unwrap(), 0.0);
        assert!((inscribed_disk_radius(1.0).unwrap() - 0.881374).abs() < 1e-6);
        // ln(0.5 + sqrt(1.25))
        assert!((inscribed_disk_radius(0.5).unwrap() - 0.481_211_825_059_603_4).abs() < 1e-15);
        assert!(inscribed_disk_radius(1.01).is_err());
        assert!(inscribed_disk_radius(-0.1).is_err());
    }

    #[test]
    fn disk_in_petal_examples() {
        assert!((disk_in_petal(1.0).unwrap().radius - ASINH_ONE).abs() < 1e-15);
        assert!((disk_in_petal(1.2).unwrap().radius - 0.681_373_587_019_543).abs() < 1e-12);
        assert!(disk_in_petal(0.3).unwrap().radius > 0.0);
        assert!(disk_in_petal(0.1).is_err());
        assert!(disk_in_petal(1.0 + ASINH_ONE).is_err());
    }

    #[test]
    fn disk_in_petal_is_inside() {
        for a in [0.2, 0.5, 0.9, 1.0, 1.3, 1.8] {
            let d = disk_in_petal(a).unwrap();
            for t in uniform_angles(512) {
                let w = d.boundary_point(t);
                assert!(contains(w, -1e-9), "a={a} t={t} w={w}");
            }
        }
    }

    #[test]
    fn bounds_at_one() {
        let b = bounds(1.0).unwrap();
        assert!((b.re_min - 0.118_626_412_980_457).abs() < 1e-12);
        assert!((b.re_max - 1.881_373_587_019_543).abs() < 1e-12);
        assert_eq!(b.im_max, FRAC_PI_2);
        let t = tangent_parameter();
        assert!((t - 0.411_699_968_309_945_9).abs() < 1e-12);
        assert!((b.arg_max - (1.0 / t).atan()).abs() < 1e-15);
        assert!(bounds(1.5).is_err());
    }

    #[test]
    fn im_sup_below_one_is_arcsin() {
        // Im ρ(ir) = asin r, attained at θ = π/2.
        for r in [0.1, 0.5, 0.9, 0.99] {
            let b = bounds(r).unwrap();
            assert!((b.im_max - f64::asin(r)).abs() < 1e-10, "r={r}");
        }
    }

    #[test]
    fn symmetry_residual_examples() {
        let s = symmetry_residuals(128).unwrap();
        assert!(s.conj_residual < 1e-12);
        assert!(s.vertical_residual < 1e-9);
        let s2 = symmetry_residuals(2).unwrap();
        assert!(s2.conj_residual < 1e-9 && s2.vertical_residual < 1e-9);
        assert!(symmetry_residuals(1).is_err());
    }

    #[test]
    fn inclusion_geometry_values() {
        let g = inclusion_geometry();
        assert!((g.alpha_max - 0.118626).abs() < 1e-6);
        assert!((g.k_min - 2.134593).abs() < 1e-6);
        match g.parabola {
            ConicSpec::Parabola {
                focus_param,
                vertex,
            } => {
                assert!((focus_param - 0.699_873_792_626_380_6).abs() < 1e-14);
                assert!((vertex - g.alpha_max).abs() < 1e-15);
            }
            _ => unreachable!(),
        }
        assert!((g.gamma_min - 0.751_367_072_080_388).abs() < 1e-12);
        assert!(g.ellipse_at(1.0).is_err());
        match g.ellipse_at(g.k_min).unwrap() {
            ConicSpec::Ellipse { center, semi_x, .. } => {
                assert!((center + semi_x - (1.0 + ASINH_ONE)).abs() < 1e-12);
            }
            _ => unreachable!(),
        }
    }
}
