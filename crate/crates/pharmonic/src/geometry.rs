//! Admissible domains (spherical caps, planar sectors), their boundary
//! distance and the axisymmetric metric weight shared by all solvers.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Geodesic ball of half-angle `half_angle` in the unit sphere S^d.
///
/// The cone over the cap lives in ambient dimension N = d + 1.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CapDomain {
    pub sphere_dim: u32,
    pub half_angle: f64,
}

impl CapDomain {
    pub fn new(sphere_dim: u32, half_angle: f64) -> Result<Self> {
        if sphere_dim < 1 {
            return Err(Error::Domain("sphere dimension d must be >= 1".into()));
        }
        if !(half_angle > 0.0 && half_angle < std::f64::consts::PI) {
            return Err(Error::Domain(format!(
                "cap half-angle must lie in (0, pi), got {half_angle}"
            )));
        }
        Ok(Self {
            sphere_dim,
            half_angle,
        })
    }

    /// Ambient Euclidean dimension N = d + 1 of the cone.
    pub fn ambient_dim(&self) -> u32 {
        self.sphere_dim + 1
    }
}

/// Planar sector (arc) of opening `opening` in (0, 2*pi).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SectorDomain {
    pub opening: f64,
}

impl SectorDomain {
    pub fn new(opening: f64) -> Result<Self> {
        if !(opening > 0.0 && opening < 2.0 * std::f64::consts::PI) {
            return Err(Error::Domain(format!(
                "sector opening must lie in (0, 2*pi), got {opening}"
            )));
        }
        Ok(Self { opening })
    }
}

/// Exponent family: singular (u = r^-beta blows up at the vertex) or
/// regular (u = r^beta~ vanishes at the vertex).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Branch {
    Singular,
    Regular,
}

impl std::fmt::Display for Branch {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Branch::Singular => write!(f, "singular"),
            Branch::Regular => write!(f, "regular"),
        }
    }
}

/// Geodesic distance from the polar angle `theta` to the cap boundary.
pub fn boundary_distance(domain: &CapDomain, theta: f64) -> Result<f64> {
    if !(0.0..=domain.half_angle).contains(&theta) {
        return Err(Error::Domain(format!(
            "theta = {theta} outside [0, {}]",
            domain.half_angle
        )));
    }
    Ok(domain.half_angle - theta)
}

/// Axisymmetric volume element sin(theta)^(d-1); identically 1 for d = 1.
pub fn metric_weight(domain: &CapDomain, theta: f64) -> Result<f64> {
    if !(0.0..=domain.half_angle).contains(&theta) {
        return Err(Error::Domain(format!(
            "theta = {theta} outside [0, {}]",
            domain.half_angle
        )));
    }
    if domain.sphere_dim == 1 {
        return Ok(1.0);
    }
    Ok(theta.sin().powi(domain.sphere_dim as i32 - 1))
}
