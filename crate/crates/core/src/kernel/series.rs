use num_traits::{FromPrimitive, Num};

use crate::error::{Error, Result};

/// Truncation order used by every series-based oracle.
pub const DEFAULT_ORDER: usize = 64;

/// Truncated Taylor expansion about 0: coefficients `c_0..=c_N`.
///
/// The coefficient type is generic so the same code runs in `f64` and in exact
/// rational arithmetic (`num_rational::BigRational`).
#[derive(Debug, Clone, PartialEq, serde::Serialize)]
pub struct PowerSeries<T = f64> {
    coeffs: Vec<T>,
}

impl<T> PowerSeries<T>
where
    T: Clone + Num + FromPrimitive,
{
    /// Builds a series from its coefficients; the order is `coeffs.len() - 1`.
    pub fn new(coeffs: Vec<T>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::Contract("a power series needs at least c_0".into()));
        }
        Ok(Self { coeffs })
    }

    pub fn zero(order: usize) -> Self {
        Self {
            coeffs: vec![T::zero(); order + 1],
        }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<T> {
        self.coeffs
    }

    pub fn coeff(&self, k: usize) -> T {
        self.coeffs.get(k).cloned().unwrap_or_else(T::zero)
    }

    /// Product truncated to `min(self.order, other.order)`.
    pub fn mul(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        let mut out = vec![T::zero(); order + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(order + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(order + 1 - i) {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Self { coeffs: out }
    }

    /// Multiplies by `z`, raising the order by one.
    pub fn shift_up(&self) -> Self {
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + 1);
        coeffs.push(T::zero());
        coeffs.extend(self.coeffs.iter().cloned());
        Self { coeffs }
    }

    fn require_zero_constant(&self, op: &str) -> Result<()> {
        if self.coeffs[0].is_zero() {
            Ok(())
        } else {
            Err(Error::Contract(format!(
                "{op} requires a zero constant term"
            )))
        }
    }
}

impl PowerSeries<f64> {
    /// Horner evaluation at a complex point.
    pub fn eval(&self, z: num_complex::Complex64) -> num_complex::Complex64 {
        self.coeffs
            .iter()
            .rev()
            .fold(num_complex::Complex64::new(0.0, 0.0), |acc, &c| acc * z + c)
    }

    /// Evaluation of the termwise derivative.
    pub fn eval_derivative(&self, z: num_complex::Complex64) -> num_complex::Complex64 {
        self.coeffs
            .iter()
            .enumerate()
            .skip(1)
            .rev()
            .fold(num_complex::Complex64::new(0.0, 0.0), |acc, (k, &c)| {
                acc * z + c * k as f64
            })
    }
}

fn from_usize<T: FromPrimitive>(k: usize) -> T {
    T::from_usize(k).expect("coefficient type must represent small integers")
}

/// Coefficients of `asinh z` up to `z^order`:
/// `c_{2m+1} = (-1)^m (2m-1)!! / ((2m)!! (2m+1))`, even coefficients vanish.
pub fn asinh_series<T>(order: usize) -> PowerSeries<T>
where
    T: Clone + Num + FromPrimitive,
{
    let mut coeffs = vec![T::zero(); order + 1];
    // term = (-1)^m (2m-1)!! / (2m)!!
    let mut term = T::one();
    let mut m = 0usize;
    while 2 * m < order {
        if m > 0 {
            term = T::zero() - term * from_usize::<T>(2 * m - 1) / from_usize::<T>(2 * m);
        }
        coeffs[2 * m + 1] = term.clone() / from_usize::<T>(2 * m + 1);
        m += 1;
    }
    PowerSeries { coeffs }
}

/// `exp(s)` for a series with zero constant term, via
/// `b_0 = 1`, `k b_k = sum_{j=1..k} j c_j b_{k-j}`.
pub fn series_exp<T>(s: &PowerSeries<T>) -> Result<PowerSeries<T>>
where
    T: Clone + Num + FromPrimitive,
{
    s.require_zero_constant("series_exp")?;
    let n = s.order();
    let mut b = vec![T::zero(); n + 1];
    b[0] = T::one();
    for k in 1..=n {
        let mut acc = T::zero();
        for j in 1..=k {
            let c = &s.coeffs[j];
            if c.is_zero() {
                continue;
            }
            acc = acc + from_usize::<T>(j) * c.clone() * b[k - j].clone();
        }
        b[k] = acc / from_usize::<T>(k);
    }
    Ok(PowerSeries { coeffs: b })
}

/// Termwise `∫_0^z s(t)/t dt`: the coefficient at `z^k` becomes `c_k / k`.
pub fn series_integrate<T>(s: &PowerSeries<T>) -> Result<PowerSeries<T>>
where
    T: Clone + Num + FromPrimitive,
{
    s.require_zero_constant("series_integrate")?;
    let coeffs = s
        .coeffs
        .iter()
        .enumerate()
        .map(|(k, c)| {
            if k == 0 {
                T::zero()
            } else {
                c.clone() / from_usize::<T>(k)
            }
        })
        .collect();
    Ok(PowerSeries { coeffs })
}
