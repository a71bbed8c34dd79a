//! Radius problems for the class of starlike functions whose logarithmic
//! derivative `zf'/f` is subordinate to `1 + asinh z`.
//!
//! The image of the unit disk under `1 + asinh z` is a bounded petal-shaped
//! region symmetric about the real axis. This crate provides
//!
//! * [`kernel`]: principal `asinh` and `sinh`, truncated power series in any
//!   numeric field, and adaptive Gauss–Legendre quadrature;
//! * [`petal`]: membership, boundary parametrisations, inscribed and
//!   circumscribed disks, and the conics that bound the petal;
//! * [`radii`]: closed-form and root-defined radius constants;
//! * [`extremal`]: extremal and test functions, exact Taylor coefficients;
//! * [`verify`]: sampling oracles that certify every constant independently;
//! * [`cli`]: the `petal` command-line front end.
//!
//! ```
//! use petal_radius::radii::{named_class_radius, NamedClass};
//! use petal_radius::verify::certify;
//!
//! let r = named_class_radius(NamedClass::Cardioid)?;
//! assert!((r.value - 0.523_831).abs() < 1e-6);
//!
//! let report = certify(&r, 1e-6)?;
//! assert!(report.passed && report.abs_diff < 1e-4);
//! # Ok::<(), petal_radius::Error>(())
//! ```

// Negated comparisons reject NaN parameters along with out-of-range ones.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod cli;
pub mod error;
pub mod extremal;
pub mod kernel;
pub mod petal;
pub mod radii;
pub mod verify;

pub use error::{Error, Result};
