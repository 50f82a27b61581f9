//! Classical finite-difference dynamics of a radiating charge, in
//! Gaussian-cgs units.
//!
//! The velocity of a charge with chronon tau0 changes by finite jumps: the
//! retarded scheme relates v(t - tau0) and v(t) and loses energy to
//! radiation, the advanced scheme gains it, and the symmetric scheme
//! conserves it. The Abraham-Lorentz equation is included as the
//! continuous-time baseline whose free solutions run away exponentially;
//! the finite-difference retarded equation has no such solutions and no
//! response before a force is applied.

mod abraham_lorentz;
mod field;
mod internal;
mod nonrel;
mod rel;
mod scenario;

pub use abraham_lorentz::{runaway_rate, step_abraham_lorentz, ALState};
pub use field::{ElasticField, EMField, HalfSinePulse, UniformField, ZeroField};
pub use internal::{
    anomalous_moment, internal_solution_check, internal_velocity, AnomalousMoment,
    InternalSolution,
};
pub use nonrel::{
    step_nonrel, step_nonrel_advanced, step_nonrel_retarded, step_nonrel_symmetric,
    TransmissionLaw, WorldlinePoint,
};
pub use rel::{
    step_rel, step_rel_advanced, step_rel_retarded, step_rel_symmetric, FourVelocity,
    RelWorldlinePoint,
};
pub use scenario::{simulate, simulate_abraham_lorentz, simulate_rel, Scenario};

use crate::error::{Error, Result};

/// Charge (esu), rest mass (g), and the particle chronon tau0 (s).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ParticleParams {
    charge: f64,
    mass: f64,
    tau0: f64,
}

impl ParticleParams {
    pub fn new(charge_esu: f64, mass_g: f64, tau0_s: f64) -> Result<Self> {
        if !(mass_g > 0.0) {
            return Err(Error::NonPositive {
                name: "mass",
                value: mass_g,
            });
        }
        if !(tau0_s > 0.0) {
            return Err(Error::NonPositive {
                name: "tau0",
                value: tau0_s,
            });
        }
        Ok(ParticleParams {
            charge: charge_esu,
            mass: mass_g,
            tau0: tau0_s,
        })
    }

    /// The electron with its full chronon 2 theta0 = (4/3) e^2/(m c^3).
    pub fn electron() -> Self {
        let tau0 = crate::constants::chronon_of(
            crate::constants::E_ESU,
            crate::constants::M_E_G,
            true,
        )
        .expect("electron constants are valid");
        ParticleParams {
            charge: crate::constants::E_ESU,
            mass: crate::constants::M_E_G,
            tau0,
        }
    }

    /// Same charge and mass, different chronon.
    pub fn with_tau0(self, tau0_s: f64) -> Result<Self> {
        Self::new(self.charge, self.mass, tau0_s)
    }

    pub fn charge(&self) -> f64 {
        self.charge
    }

    pub fn mass(&self) -> f64 {
        self.mass
    }

    pub fn tau0(&self) -> f64 {
        self.tau0
    }

    /// Radiation-reaction time theta0 = (2/3) q^2/(m c^3) of this particle.
    pub fn theta0(&self) -> f64 {
        crate::constants::chronon_of(self.charge, self.mass, false)
            .expect("validated at construction")
    }
}
