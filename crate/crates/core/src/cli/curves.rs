use std::f64::consts::FRAC_PI_2;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::kernel::{ComplexValue, ASINH_ONE};
use crate::petal::{boundary_point, inclusion_geometry, uniform_angles, DiskSpec};

/// The eight comparison curves `γ0` to `γ7`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Curve {
    /// Petal boundary `1 + asinh(e^{iθ})`.
    Petal,
    /// `Re w = 1 - asinh 1`.
    LowerLine,
    /// `Re w = 1 + asinh 1`.
    UpperLine,
    /// Rays `arg w = ±atan(1/t)`.
    SectorRays,
    /// Parabola through the peaks with vertex `1 - asinh 1`.
    Parabola,
    /// Ellipse of `k`-starlikeness at the least admissible `k`.
    Ellipse,
    /// `|w - 1| = asinh 1`.
    InnerDisk,
    /// `|w - 1| = π/2`.
    OuterDisk,
}

impl Curve {
    pub const ALL: [Self; 8] = [
        Self::Petal,
        Self::LowerLine,
        Self::UpperLine,
        Self::SectorRays,
        Self::Parabola,
        Self::Ellipse,
        Self::InnerDisk,
        Self::OuterDisk,
    ];

    pub fn index(&self) -> usize {
        Self::ALL
            .iter()
            .position(|c| c == self)
            .expect("ALL lists every curve")
    }

    pub fn is_closed(&self) -> bool {
        matches!(
            self,
            Self::Petal | Self::Ellipse | Self::InnerDisk | Self::OuterDisk
        )
    }

    /// `(parameter, point)` pairs. Closed curves use `samples` angles `2πj/samples`;
    /// open curves use `samples` equispaced parameters, endpoints included.
    pub fn sample(&self, samples: usize) -> Result<Vec<(f64, ComplexValue)>> {
        if samples < 2 {
            return Err(crate::error::domain("samples", samples as f64, "[2, inf)"));
        }
        let geo = inclusion_geometry();
        let open = |lo: f64, hi: f64| -> Vec<f64> {
            (0..samples)
                .map(|j| lo + (hi - lo) * j as f64 / (samples - 1) as f64)
                .collect()
        };
        let points = match self {
            Self::Petal => uniform_angles(samples)
                .map(|t| (t, boundary_point(t)))
                .collect(),
            Self::LowerLine => open(-2.0, 2.0)
                .into_iter()
                .map(|y| (y, geo.lower_half_plane.boundary_point(y)))
                .collect(),
            Self::UpperLine => open(-2.0, 2.0)
                .into_iter()
                .map(|y| (y, geo.upper_half_plane.boundary_point(y)))
                .collect(),
            Self::SectorRays => open(-3.0, 3.0)
                .into_iter()
                .map(|s| (s, geo.sector.boundary_point(s)))
                .collect(),
            Self::Parabola => open(-2.0, 2.0)
                .into_iter()
                .map(|y| (y, geo.parabola.boundary_point(y)))
                .collect(),
            Self::Ellipse => {
                let e = geo.ellipse_at(geo.k_min)?;
                uniform_angles(samples)
                    .map(|t| (t, e.boundary_point(t)))
                    .collect()
            }
            Self::InnerDisk | Self::OuterDisk => {
                let r = if *self == Self::InnerDisk {
                    ASINH_ONE
                } else {
                    FRAC_PI_2
                };
                let disk = DiskSpec::new(1.0, r)?;
                uniform_angles(samples)
                    .map(|t| (t, disk.boundary_point(t)))
                    .collect()
            }
        };
        Ok(points)
    }
}

impl FromStr for Curve {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let digits = s
            .strip_prefix("gamma")
            .or_else(|| s.strip_prefix('γ'))
            .or_else(|| s.strip_prefix('g'))
            .unwrap_or(s);
        digits
            .parse::<usize>()
            .ok()
            .and_then(|i| Self::ALL.get(i).copied())
            .ok_or_else(|| Error::Unknown {
                kind: "curve",
                name: s.to_string(),
            })
    }
}
