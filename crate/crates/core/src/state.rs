//! Validated quantum-state containers: complex amplitude vectors and
//! density matrices.

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::spectral::{hermitian_min_eigenvalue, hermiticity_deviation, SpectralSystem};

/// Which basis a state's components refer to.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum BasisTag {
    PositionGrid,
    Energy,
    Custom(String),
}

impl std::fmt::Display for BasisTag {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            BasisTag::PositionGrid => write!(f, "position-grid"),
            BasisTag::Energy => write!(f, "energy"),
            BasisTag::Custom(name) => write!(f, "{name}"),
        }
    }
}

/// A complex amplitude vector over a chosen basis.
///
/// The squared norm is tracked, not forced to 1: the retarded evolution
/// makes it decay, the advanced one makes it grow.
#[derive(Debug, Clone, PartialEq)]
pub struct StateVector {
    amplitudes: DVector<Complex64>,
    basis: BasisTag,
}

impl StateVector {
    pub fn new(amplitudes: DVector<Complex64>, basis: BasisTag) -> Result<Self> {
        for (index, a) in amplitudes.iter().enumerate() {
            if !a.re.is_finite() || !a.im.is_finite() {
                return Err(Error::NonFiniteAmplitude { index });
            }
        }
        Ok(StateVector { amplitudes, basis })
    }

    /// Basis vector `index` of an `dim`-dimensional space.
    pub fn basis_state(dim: usize, index: usize, basis: BasisTag) -> Self {
        let amplitudes = DVector::from_fn(dim, |i, _| {
            if i == index {
                Complex64::new(1.0, 0.0)
            } else {
                Complex64::new(0.0, 0.0)
            }
        });
        StateVector { amplitudes, basis }
    }

    pub fn dim(&self) -> usize {
        self.amplitudes.len()
    }

    pub fn amplitudes(&self) -> &DVector<Complex64> {
        &self.amplitudes
    }

    pub fn basis(&self) -> &BasisTag {
        &self.basis
    }

    /// Sum of |c_n|^2.
    pub fn norm_sq(&self) -> f64 {
        self.amplitudes.iter().map(|a| a.norm_sqr()).sum()
    }

    pub(crate) fn with_amplitudes(&self, amplitudes: DVector<Complex64>) -> Self {
        StateVector {
            amplitudes,
            basis: self.basis.clone(),
        }
    }

    /// Outer product |psi><psi| as a raw matrix (not trace-normalized).
    pub fn outer_product(&self) -> DMatrix<Complex64> {
        let n = self.dim();
        DMatrix::from_fn(n, n, |r, s| self.amplitudes[r] * self.amplitudes[s].conj())
    }
}

/// Construction tolerances for [`DensityMatrix`].
pub const DENSITY_HERMITICITY_TOL: f64 = 1e-12;
pub const DENSITY_TRACE_TOL: f64 = 1e-12;
pub const DENSITY_POSITIVITY_FLOOR: f64 = -1e-10;

/// A Hermitian, unit-trace, positive-semidefinite complex matrix.
///
/// The invariants are enforced at construction; evolution routines that
/// preserve them analytically build results without re-validation.
#[derive(Debug, Clone, PartialEq)]
pub struct DensityMatrix {
    rho: DMatrix<Complex64>,
    basis: BasisTag,
}

impl DensityMatrix {
    pub fn new(rho: DMatrix<Complex64>, basis: BasisTag) -> Result<Self> {
        if rho.nrows() != rho.ncols() {
            return Err(Error::NotSquare {
                rows: rho.nrows(),
                cols: rho.ncols(),
            });
        }
        let dev = hermiticity_deviation(&rho);
        if dev > DENSITY_HERMITICITY_TOL {
            return Err(Error::NotHermitian { max_dev: dev });
        }
        let trace = rho.diagonal().iter().map(|z| z.re).sum::<f64>();
        if (trace - 1.0).abs() > DENSITY_TRACE_TOL {
            return Err(Error::InvalidTrace {
                trace,
                tol: DENSITY_TRACE_TOL,
            });
        }
        let min_eig = hermitian_min_eigenvalue(&rho);
        if min_eig < DENSITY_POSITIVITY_FLOOR {
            return Err(Error::NotPositiveSemidefinite { min_eig });
        }
        Ok(DensityMatrix { rho, basis })
    }

    /// Pure state |psi><psi| / <psi|psi>.
    pub fn from_pure(psi: &StateVector) -> Result<Self> {
        let norm_sq = psi.norm_sq();
        if norm_sq <= 0.0 {
            return Err(Error::NotNormalized {
                name: "state vector",
                sum: norm_sq,
            });
        }
        let rho = psi.outer_product().scale(1.0 / norm_sq);
        Ok(DensityMatrix {
            rho,
            basis: psi.basis().clone(),
        })
    }

    /// Maximally mixed state I/dim.
    pub fn maximally_mixed(dim: usize, basis: BasisTag) -> Self {
        let rho = DMatrix::from_fn(dim, dim, |r, s| {
            if r == s {
                Complex64::new(1.0 / dim as f64, 0.0)
            } else {
                Complex64::new(0.0, 0.0)
            }
        });
        DensityMatrix { rho, basis }
    }

    /// Build without re-checking invariants; for evolution steps that
    /// preserve them analytically.
    pub(crate) fn from_raw(rho: DMatrix<Complex64>, basis: BasisTag) -> Self {
        DensityMatrix { rho, basis }
    }

    pub fn dim(&self) -> usize {
        self.rho.nrows()
    }

    pub fn matrix(&self) -> &DMatrix<Complex64> {
        &self.rho
    }

    pub fn basis(&self) -> &BasisTag {
        &self.basis
    }

    /// Real part of the trace (the imaginary part is zero for Hermitian
    /// matrices up to roundoff).
    pub fn trace(&self) -> f64 {
        self.rho.diagonal().iter().map(|z| z.re).sum()
    }

    /// Real diagonal entries (populations).
    pub fn diagonal(&self) -> Vec<f64> {
        self.rho.diagonal().iter().map(|z| z.re).collect()
    }

    /// Frobenius norm of the off-diagonal part.
    pub fn offdiagonal_norm(&self) -> f64 {
        offdiagonal_norm(&self.rho)
    }

    pub fn min_eigenvalue(&self) -> f64 {
        hermitian_min_eigenvalue(&self.rho)
    }

    /// Ascending spectrum.
    pub fn eigenvalues(&self) -> Vec<f64> {
        crate::spectral::hermitian_eigenvalues(&self.rho)
    }
}

/// Frobenius norm of the off-diagonal part of a square matrix.
pub fn offdiagonal_norm(m: &DMatrix<Complex64>) -> f64 {
    let mut sum = 0.0;
    for r in 0..m.nrows() {
        for s in 0..m.ncols() {
            if r != s {
                sum += m[(r, s)].norm_sqr();
            }
        }
    }
    sum.sqrt()
}

/// U^dagger rho U: rewrite a density matrix in the energy basis of `sys`.
/// Trace and spectrum are unchanged.
pub fn to_energy_basis(rho: &DensityMatrix, sys: &SpectralSystem) -> Result<DensityMatrix> {
    let m = sys.matrix_to_energy_basis(rho.matrix())?;
    Ok(DensityMatrix::from_raw(m, BasisTag::Energy))
}

/// U rho U^dagger: inverse of [`to_energy_basis`].
pub fn from_energy_basis(rho: &DensityMatrix, sys: &SpectralSystem) -> Result<DensityMatrix> {
    let m = sys.matrix_from_energy_basis(rho.matrix())?;
    Ok(DensityMatrix::from_raw(m, rho.basis().clone()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testutil::{random_density, random_hermitian};
    use approx::assert_relative_eq;

    #[test]
    fn pure_state_density() {
        let psi = StateVector::new(
            DVector::from_vec(vec![
                Complex64::new(1.0 / 2.0_f64.sqrt(), 0.0),
                Complex64::new(1.0 / 2.0_f64.sqrt(), 0.0),
            ]),
            BasisTag::Energy,
        )
        .unwrap();
        let rho = DensityMatrix::from_pure(&psi).unwrap();
        assert_relative_eq!(rho.trace(), 1.0, epsilon = 1e-14);
        for r in 0..2 {
            for s in 0..2 {
                assert_relative_eq!(rho.matrix()[(r, s)].re, 0.5, epsilon = 1e-14);
            }
        }
    }

    #[test]
    fn rejects_bad_trace() {
        let m = DMatrix::from_row_slice(
            2,
            2,
            &[
                Complex64::new(0.7, 0.0),
                Complex64::new(0.0, 0.0),
                Complex64::new(0.0, 0.0),
                Complex64::new(0.7, 0.0),
            ],
        );
        assert!(matches!(
            DensityMatrix::new(m, BasisTag::Energy),
            Err(Error::InvalidTrace { .. })
        ));
    }

    #[test]
    fn rejects_negative_eigenvalue() {
        let m = DMatrix::from_row_slice(
            2,
            2,
            &[
                Complex64::new(1.5, 0.0),
                Complex64::new(0.0, 0.0),
                Complex64::new(0.0, 0.0),
                Complex64::new(-0.5, 0.0),
            ],
        );
        assert!(matches!(
            DensityMatrix::new(m, BasisTag::Energy),
            Err(Error::NotPositiveSemidefinite { .. })
        ));
    }

    #[test]
    fn rejects_non_finite_amplitudes() {
        let v = DVector::from_vec(vec![Complex64::new(f64::NAN, 0.0)]);
        assert!(StateVector::new(v, BasisTag::Energy).is_err());
    }

    #[test]
    fn maximally_mixed_commutes_with_any_basis_change() {
        let sys =
            SpectralSystem::new(random_hermitian(4, 3)).unwrap();
        let rho = DensityMatrix::maximally_mixed(4, BasisTag::Custom("h".into()));
        let out = to_energy_basis(&rho, &sys).unwrap();
        for r in 0..4 {
            for s in 0..4 {
                let expect = if r == s { 0.25 } else { 0.0 };
                assert_relative_eq!(out.matrix()[(r, s)].re, expect, epsilon = 1e-13);
                assert_relative_eq!(out.matrix()[(r, s)].im, 0.0, epsilon = 1e-13);
            }
        }
    }

    #[test]
    fn diagonal_system_leaves_rho_unchanged() {
        let sys = SpectralSystem::from_energies(&[0.0, 1.0, 2.5]);
        let rho = random_density(3, 11);
        let out = to_energy_basis(&rho, &sys).unwrap();
        for r in 0..3 {
            for s in 0..3 {
                assert_relative_eq!(
                    out.matrix()[(r, s)].re,
                    rho.matrix()[(r, s)].re,
                    epsilon = 1e-13
                );
                assert_relative_eq!(
                    out.matrix()[(r, s)].im,
                    rho.matrix()[(r, s)].im,
                    epsilon = 1e-13
                );
            }
        }
    }

    #[test]
    fn basis_round_trip_preserves_entries_trace_spectrum() {
        let sys =
            SpectralSystem::new(random_hermitian(5, 9)).unwrap();
        let rho = random_density(5, 21);
        let there = to_energy_basis(&rho, &sys).unwrap();
        assert_relative_eq!(there.trace(), rho.trace(), epsilon = 1e-12);
        let spec_a = rho.eigenvalues();
        let spec_b = there.eigenvalues();
        for (a, b) in spec_a.iter().zip(spec_b.iter()) {
            assert_relative_eq!(a, b, epsilon = 1e-10);
        }
        let back = from_energy_basis(&there, &sys).unwrap();
        for r in 0..5 {
            for s in 0..5 {
                assert!((back.matrix()[(r, s)] - rho.matrix()[(r, s)]).norm() < 1e-12);
            }
        }
    }

    #[test]
    fn dimension_mismatch_is_reported() {
        let sys = SpectralSystem::from_energies(&[0.0, 1.0]);
        let rho = DensityMatrix::maximally_mixed(3, BasisTag::Energy);
        assert!(matches!(
            to_energy_basis(&rho, &sys),
            Err(Error::DimensionMismatch { .. })
        ));
    }
}
