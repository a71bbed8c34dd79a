//! Complex special functions with explicit branch handling, a truncated
//! power-series engine and adaptive Gauss quadrature along straight segments.

mod complex;
mod quad;
mod series;

pub use complex::{asinh_principal, rho, sinh_c, ComplexValue, ASINH_ONE};
pub use quad::{integrate_segment, GaussLegendre, QuadOptions};
pub use series::{asinh_series, series_exp, series_integrate, PowerSeries, DEFAULT_ORDER};
