//! External electromagnetic fields in Gaussian units: E in statvolt/cm,
//! B in gauss, plus the field tensor for the relativistic steppers.

use nalgebra::{Matrix4, Vector3};

/// An external electromagnetic field evaluated at lab time t (s) and
/// position (cm).
pub trait EMField {
    /// Electric field in statvolt/cm.
    fn electric(&self, t: f64, position: &Vector3<f64>) -> Vector3<f64>;

    /// Magnetic field in gauss.
    fn magnetic(&self, t: f64, position: &Vector3<f64>) -> Vector3<f64>;

    /// Field tensor F_mu_nu (lower indices, signature (-,+,+,+), x0 = ct):
    /// F_i0 = E_i, F_ij = eps_ijk B_k. Antisymmetric by construction.
    fn faraday(&self, t: f64, position: &Vector3<f64>) -> Matrix4<f64> {
        let e = self.electric(t, position);
        let b = self.magnetic(t, position);
        let mut f = Matrix4::zeros();
        for i in 0..3 {
            f[(i + 1, 0)] = e[i];
            f[(0, i + 1)] = -e[i];
        }
        // F_12 = B_z, F_23 = B_x, F_31 = B_y
        f[(1, 2)] = b[2];
        f[(2, 1)] = -b[2];
        f[(2, 3)] = b[0];
        f[(3, 2)] = -b[0];
        f[(3, 1)] = b[1];
        f[(1, 3)] = -b[1];
        f
    }
}

/// No field.
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct ZeroField;

impl EMField for ZeroField {
    fn electric(&self, _t: f64, _position: &Vector3<f64>) -> Vector3<f64> {
        Vector3::zeros()
    }

    fn magnetic(&self, _t: f64, _position: &Vector3<f64>) -> Vector3<f64> {
        Vector3::zeros()
    }
}

/// Constant, uniform E and B.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct UniformField {
    pub e: Vector3<f64>,
    pub b: Vector3<f64>,
}

impl UniformField {
    pub fn electric_only(e: Vector3<f64>) -> Self {
        UniformField {
            e,
            b: Vector3::zeros(),
        }
    }

    pub fn magnetic_only(b: Vector3<f64>) -> Self {
        UniformField {
            e: Vector3::zeros(),
            b,
        }
    }
}

impl EMField for UniformField {
    fn electric(&self, _t: f64, _position: &Vector3<f64>) -> Vector3<f64> {
        self.e
    }

    fn magnetic(&self, _t: f64, _position: &Vector3<f64>) -> Vector3<f64> {
        self.b
    }
}

/// Spatially uniform electric pulse with a half-sine time profile:
/// E(t) = amplitude * sin(pi (t - onset)/duration) for onset <= t <= onset +
/// duration, zero outside. The profile vanishes at both endpoints.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HalfSinePulse {
    pub onset: f64,
    pub duration: f64,
    pub amplitude: Vector3<f64>,
}

impl EMField for HalfSinePulse {
    fn electric(&self, t: f64, _position: &Vector3<f64>) -> Vector3<f64> {
        if t < self.onset || t > self.onset + self.duration {
            return Vector3::zeros();
        }
        let phase = std::f64::consts::PI * (t - self.onset) / self.duration;
        self.amplitude * phase.sin()
    }

    fn magnetic(&self, _t: f64, _position: &Vector3<f64>) -> Vector3<f64> {
        Vector3::zeros()
    }
}

/// Elastic restoring force F = -k x along the x axis, expressed as the
/// effective electric field E = -(k/q) x so that qE reproduces the force.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ElasticField {
    /// Spring constant in dyn/cm.
    pub k_spring: f64,
    /// The charge the field is tailored to, esu.
    pub charge: f64,
}

impl EMField for ElasticField {
    fn electric(&self, _t: f64, position: &Vector3<f64>) -> Vector3<f64> {
        Vector3::new(-self.k_spring * position.x / self.charge, 0.0, 0.0)
    }

    fn magnetic(&self, _t: f64, _position: &Vector3<f64>) -> Vector3<f64> {
        Vector3::zeros()
    }
}
