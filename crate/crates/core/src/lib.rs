//! Finite-difference time evolution with a fundamental interval (chronon).
//!
//! Replacing the time derivative in the Schrodinger and Liouville-von Neumann
//! equations with a finite difference over an interval `tau` gives three
//! distinct discretizations (retarded, symmetric, advanced) with genuinely
//! different physics: the retarded forms dissipate, the advanced forms absorb,
//! and the symmetric form conserves. This crate implements all three for
//! state vectors and density matrices, the closed-form decay/phase rates of
//! the retarded density-matrix evolution, and the corresponding classical
//! finite-difference equations for a radiating charge (with the
//! Abraham-Lorentz equation as a runaway-prone baseline).
//!
//! Unit conventions: quantum modules work in eV and seconds
//! (`hbar` = [`constants::HBAR_EV_S`]); the classical module works in
//! Gaussian-cgs units (cm, g, s, statvolt/cm, gauss).

pub mod classical;
pub mod constants;
pub mod error;
pub mod liouville;
pub mod scheme;
pub mod schrodinger;
pub mod spectral;
pub mod state;

pub use error::{Error, Result};
pub use scheme::{ChrononScheme, SchemeVariant};
pub use spectral::SpectralSystem;
pub use state::{BasisTag, DensityMatrix, StateVector};

#[cfg(test)]
pub(crate) mod testutil {
    use nalgebra::DMatrix;
    use num_complex::Complex64;
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    use crate::state::{BasisTag, DensityMatrix};

    pub fn random_hermitian(n: usize, seed: u64) -> DMatrix<Complex64> {
        let mut rng = StdRng::seed_from_u64(seed);
        let a = DMatrix::from_fn(n, n, |_, _| {
            Complex64::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0))
        });
        (&a + a.adjoint()).scale(0.5)
    }

    pub fn random_density(n: usize, seed: u64) -> DensityMatrix {
        let mut rng = StdRng::seed_from_u64(seed);
        let a = DMatrix::from_fn(n, n, |_, _| {
            Complex64::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0))
        });
        let p = &a * a.adjoint();
        let tr = p.diagonal().iter().map(|z| z.re).sum::<f64>();
        DensityMatrix::new(p.scale(1.0 / tr), BasisTag::Custom("test".into())).unwrap()
    }
}
