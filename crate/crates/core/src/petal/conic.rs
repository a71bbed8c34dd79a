use std::f64::consts::PI;

use serde::Serialize;

use crate::error::{domain, Result};
use crate::kernel::ComplexValue;

/// Which side of a vertical line a half-plane keeps.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Side {
    /// `Re w > threshold`
    Right,
    /// `Re w < threshold`
    Left,
}

/// The comparison regions used by the inclusion relations.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ConicSpec {
    /// `Y^2 = 4 a (X - b)`, opening to the right.
    Parabola {
        focus_param: f64,
        vertex: f64,
    },
    /// `(X - x0)^2 / a^2 + Y^2 / b^2 = 1`.
    Ellipse {
        center: f64,
        semi_x: f64,
        semi_y: f64,
    },
    /// `|arg w| < half_angle`.
    Sector {
        half_angle: f64,
    },
    HalfPlane {
        threshold: f64,
        side: Side,
    },
}

impl ConicSpec {
    pub fn parabola(focus_param: f64, vertex: f64) -> Result<Self> {
        if !(focus_param > 0.0) {
            return Err(domain("parabola focus parameter", focus_param, "(0, inf)"));
        }
        Ok(Self::Parabola {
            focus_param,
            vertex,
        })
    }

    pub fn ellipse(center: f64, semi_x: f64, semi_y: f64) -> Result<Self> {
        if !(semi_x > 0.0) {
            return Err(domain("ellipse semi-axis", semi_x, "(0, inf)"));
        }
        if !(semi_y > 0.0) {
            return Err(domain("ellipse semi-axis", semi_y, "(0, inf)"));
        }
        Ok(Self::Ellipse {
            center,
            semi_x,
            semi_y,
        })
    }

    pub fn sector(half_angle: f64) -> Result<Self> {
        if !(half_angle > 0.0 && half_angle <= PI / 2.0) {
            return Err(domain("sector half-angle", half_angle, "(0, pi/2]"));
        }
        Ok(Self::Sector { half_angle })
    }

    /// Signed violation of membership in the closed region: `<= 0` inside,
    /// `> 0` outside. The scale is the natural one for each kind.
    pub fn violation(&self, w: ComplexValue) -> f64 {
        match *self {
            Self::Parabola {
                focus_param,
                vertex,
            } => w.im * w.im - 4.0 * focus_param * (w.re - vertex),
            Self::Ellipse {
                center,
                semi_x,
                semi_y,
            } => {
                let dx = (w.re - center) / semi_x;
                let dy = w.im / semi_y;
                dx * dx + dy * dy - 1.0
            }
            Self::Sector { half_angle } => w.arg().abs() - half_angle,
            Self::HalfPlane { threshold, side } => match side {
                Side::Right => threshold - w.re,
                Side::Left => w.re - threshold,
            },
        }
    }

    pub fn contains(&self, w: ComplexValue, tol: f64) -> bool {
        self.violation(w) <= tol
    }

    /// Points on the boundary curve, parameterised by `param`:
    /// ordinate for the parabola and half-plane, angle for the ellipse,
    /// distance from the origin for the sector rays.
    pub fn boundary_point(&self, param: f64) -> ComplexValue {
        match *self {
            Self::Parabola {
                focus_param,
                vertex,
            } => ComplexValue::new(vertex + param * param / (4.0 * focus_param), param),
            Self::Ellipse {
                center,
                semi_x,
                semi_y,
            } => ComplexValue::new(center + semi_x * param.cos(), semi_y * param.sin()),
            Self::Sector { half_angle } => {
                ComplexValue::from_polar(param.abs(), half_angle.copysign(param))
            }
            Self::HalfPlane { threshold, .. } => ComplexValue::new(threshold, param),
        }
    }
}
