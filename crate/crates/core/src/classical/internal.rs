//! The circular internal solution of the free-particle transmission law and
//! the anomalous magnetic moment it implies.
//!
//! A free particle admits the periodic internal motion
//! vx = -beta0 c sin(2 pi T / tau0), vy = -beta0 c cos(2 pi T / tau0);
//! requiring the kinetic energy of this rotation to equal the rest energy
//! m0 c^2 fixes beta0^2 = 3/4 (Lorentz factor 2). The magnetic moment of the
//! circulating charge is mu_a = q^3 / (4 pi m0 c^2), whose ratio to the Bohr
//! magneton reduces to alpha / (2 pi) - with no hbar anywhere in the
//! derivation.

use nalgebra::Vector3;

use super::ParticleParams;
use crate::constants::{C_CM_PER_S, ERG_PER_EV, HBAR_EV_S};

/// Amplitude and energy bookkeeping of the internal circular solution.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct InternalSolution {
    /// Speed of the circular motion in units of c: sqrt(3)/2.
    pub beta0: f64,
    /// Lorentz factor of the internal motion: exactly 2 at beta0^2 = 3/4.
    pub gamma_lorentz: f64,
    /// (gamma - 1) m0 c^2 / (m0 c^2); the defining condition makes this 1.
    pub kinetic_energy_ratio: f64,
}

/// The internal rotation velocity at internal time T (s), for sampling the
/// solution.
pub fn internal_velocity(params: &ParticleParams, t: f64) -> Vector3<f64> {
    let beta0 = (3.0_f64).sqrt() / 2.0;
    let phase = 2.0 * std::f64::consts::PI * t / params.tau0();
    Vector3::new(
        -beta0 * C_CM_PER_S * phase.sin(),
        -beta0 * C_CM_PER_S * phase.cos(),
        0.0,
    )
}

/// Construct the circular internal solution and verify its energy balance.
pub fn internal_solution_check(params: &ParticleParams) -> InternalSolution {
    let _ = params; // the amplitude is particle-independent
    let beta0_sq: f64 = 3.0 / 4.0;
    let beta0 = beta0_sq.sqrt();
    let gamma_lorentz = 1.0 / (1.0 - beta0_sq).sqrt();
    InternalSolution {
        beta0,
        gamma_lorentz,
        kinetic_energy_ratio: gamma_lorentz - 1.0,
    }
}

/// The classical anomalous magnetic moment.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AnomalousMoment {
    /// mu_a = q^3 / (4 pi m0 c^2) in erg/gauss.
    pub mu_a: f64,
    /// mu_a / (q hbar / 2 m0 c), algebraically q^2/(2 pi hbar c) =
    /// alpha / (2 pi) for the elementary charge.
    pub ratio_to_bohr: f64,
}

pub fn anomalous_moment(params: &ParticleParams) -> AnomalousMoment {
    let q = params.charge().abs();
    let m = params.mass();
    let c = C_CM_PER_S;
    let hbar_erg_s = HBAR_EV_S * ERG_PER_EV;
    let mu_a = q.powi(3) / (4.0 * std::f64::consts::PI * m * c * c);
    let bohr = q * hbar_erg_s / (2.0 * m * c);
    AnomalousMoment {
        mu_a,
        ratio_to_bohr: mu_a / bohr,
    }
}
