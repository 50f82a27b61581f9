//! Discretization choice: which finite difference replaces d/dt, and the
//! size of the fundamental interval.

use crate::error::{Error, Result};

/// The three ways to discretize a first time derivative over an interval tau.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SchemeVariant {
    /// Difference over (t - tau, t): dissipative.
    Retarded,
    /// Difference over (t - tau, t + tau): conservative.
    Symmetric,
    /// Difference over (t, t + tau): amplifying.
    Advanced,
}

impl std::fmt::Display for SchemeVariant {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            SchemeVariant::Retarded => write!(f, "retarded"),
            SchemeVariant::Symmetric => write!(f, "symmetric"),
            SchemeVariant::Advanced => write!(f, "advanced"),
        }
    }
}

/// A discretization variant together with the chronon value tau (seconds).
///
/// tau is a free input: it is system-dependent, not universal, so nothing in
/// this crate hard-wires it to the electron value.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ChrononScheme {
    tau: f64,
    variant: SchemeVariant,
}

impl ChrononScheme {
    pub fn new(tau: f64, variant: SchemeVariant) -> Result<Self> {
        if !(tau > 0.0) || !tau.is_finite() {
            return Err(Error::NonPositive {
                name: "tau",
                value: tau,
            });
        }
        Ok(ChrononScheme { tau, variant })
    }

    pub fn retarded(tau: f64) -> Result<Self> {
        Self::new(tau, SchemeVariant::Retarded)
    }

    pub fn symmetric(tau: f64) -> Result<Self> {
        Self::new(tau, SchemeVariant::Symmetric)
    }

    pub fn advanced(tau: f64) -> Result<Self> {
        Self::new(tau, SchemeVariant::Advanced)
    }

    /// The chronon, in seconds.
    pub fn tau(&self) -> f64 {
        self.tau
    }

    pub fn variant(&self) -> SchemeVariant {
        self.variant
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_non_positive_tau() {
        assert!(ChrononScheme::retarded(0.0).is_err());
        assert!(ChrononScheme::retarded(-1e-24).is_err());
        assert!(ChrononScheme::retarded(f64::NAN).is_err());
        assert!(ChrononScheme::retarded(6.26e-24).is_ok());
    }
}
