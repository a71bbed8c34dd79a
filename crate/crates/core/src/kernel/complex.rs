use num_complex::Complex64;

use crate::error::{Error, Result};

/// A point of the complex plane.
pub type ComplexValue = Complex64;

/// `asinh(1) = ln(1 + sqrt 2)`, the half-width of the petal along the real axis.
pub const ASINH_ONE: f64 = 0.881_373_587_019_543;

/// Principal inverse hyperbolic sine, `log(z + sqrt(1 + z^2))` with principal
/// `log` and `sqrt`.
///
/// The branch cuts are the rays of the imaginary axis beyond `±i`. The branch
/// points `±i` themselves evaluate to `±iπ/2`. The result is analytic on the
/// open unit disk and commutes with conjugation there.
pub fn asinh_principal(z: ComplexValue) -> Result<ComplexValue> {
    if !(z.re.is_finite() && z.im.is_finite()) {
        return Err(Error::Contract(format!("non-finite argument {z}")));
    }
    if z.re == 0.0 && z.im.abs() > 1.0 {
        return Err(Error::BranchCut { re: z.re, im: z.im });
    }
    // Odd symmetry keeps z + sqrt(1 + z^2) away from cancellation.
    if z.re < 0.0 {
        return Ok(-raw_asinh(-z));
    }
    Ok(raw_asinh(z))
}

fn raw_asinh(z: ComplexValue) -> ComplexValue {
    let one = ComplexValue::new(1.0, 0.0);
    (z + (one + z * z).sqrt()).ln()
}

/// `rho(z) = 1 + asinh(z)`, the function whose image of the unit disk is the petal.
pub fn rho(z: ComplexValue) -> Result<ComplexValue> {
    Ok(1.0 + asinh_principal(z)?)
}

/// Complex hyperbolic sine.
pub fn sinh_c(w: ComplexValue) -> ComplexValue {
    ComplexValue::new(w.re.sinh() * w.im.cos(), w.re.cosh() * w.im.sin())
}
