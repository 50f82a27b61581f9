//! Physical constants and the chronon formula.
//!
//! Quantum modules use eV for energy and seconds for time; the classical
//! module uses Gaussian-cgs so that the force laws carry their usual
//! factors of 1/c and the Coulomb constant is 1.

use crate::error::{Error, Result};

/// Reduced Planck constant in eV s (CODATA 2018).
pub const HBAR_EV_S: f64 = 6.582119569e-16;

/// Speed of light in cm/s (exact).
pub const C_CM_PER_S: f64 = 2.99792458e10;

/// Elementary charge in Gaussian esu (statcoulomb).
pub const E_ESU: f64 = 4.803204712e-10;

/// Electron rest mass in grams (CODATA 2018).
pub const M_E_G: f64 = 9.1093837015e-28;

/// Fine-structure constant (CODATA 2018).
pub const ALPHA: f64 = 7.2973525693e-3;

/// Conversion factor: 1 eV in erg (exact in the 2019 SI).
pub const ERG_PER_EV: f64 = 1.602176634e-12;

/// Validated bundle of the constants above.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Constants {
    /// Reduced Planck constant, eV s.
    pub hbar_ev_s: f64,
    /// Speed of light, cm/s.
    pub c_cm_per_s: f64,
    /// Elementary charge, esu.
    pub e_esu: f64,
    /// Electron rest mass, g.
    pub m_e_g: f64,
    /// Fine-structure constant.
    pub alpha: f64,
}

impl Constants {
    /// The CODATA values used throughout this crate.
    ///
    /// Checks that all values are positive and that the fine-structure
    /// constant is consistent with e^2/(hbar c) in Gaussian units to 1e-6
    /// relative.
    pub fn codata() -> Self {
        let c = Constants {
            hbar_ev_s: HBAR_EV_S,
            c_cm_per_s: C_CM_PER_S,
            e_esu: E_ESU,
            m_e_g: M_E_G,
            alpha: ALPHA,
        };
        c.validate().expect("CODATA constants are consistent");
        c
    }

    /// Reduced Planck constant in erg s.
    pub fn hbar_erg_s(&self) -> f64 {
        self.hbar_ev_s * ERG_PER_EV
    }

    fn validate(&self) -> Result<()> {
        for (name, value) in [
            ("hbar_ev_s", self.hbar_ev_s),
            ("c_cm_per_s", self.c_cm_per_s),
            ("e_esu", self.e_esu),
            ("m_e_g", self.m_e_g),
            ("alpha", self.alpha),
        ] {
            if !(value > 0.0) {
                return Err(Error::NonPositive { name, value });
            }
        }
        let alpha_gauss = self.e_esu * self.e_esu / (self.hbar_erg_s() * self.c_cm_per_s);
        let rel = ((alpha_gauss - self.alpha) / self.alpha).abs();
        if rel > 1e-6 {
            return Err(Error::NotNormalized {
                name: "alpha (Gaussian-unit consistency)",
                sum: alpha_gauss,
            });
        }
        Ok(())
    }
}

impl Default for Constants {
    fn default() -> Self {
        Self::codata()
    }
}

/// Characteristic radiation-reaction time of a charge: (2/3) q^2 / (m c^3),
/// in seconds, from the charge in esu and the mass in grams.
///
/// The particle chronon is conventionally twice this value; pass
/// `full_chronon = true` to get it doubled.
pub fn chronon_of(charge_esu: f64, mass_g: f64, full_chronon: bool) -> Result<f64> {
    if charge_esu == 0.0 {
        return Err(Error::ZeroValue { name: "charge" });
    }
    if !(mass_g > 0.0) {
        return Err(Error::NonPositive {
            name: "mass",
            value: mass_g,
        });
    }
    let c3 = C_CM_PER_S * C_CM_PER_S * C_CM_PER_S;
    let theta0 = (2.0 / 3.0) * charge_esu * charge_esu / (mass_g * c3);
    Ok(if full_chronon { 2.0 * theta0 } else { theta0 })
}
