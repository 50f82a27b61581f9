//! Hermitian spectral decomposition and energy-basis transforms.
//!
//! Everything downstream (discrete Schrodinger steps, density-matrix decay
//! factors) is diagonal in the energy basis, so the Hamiltonian is
//! diagonalized once and reused.

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;

use crate::error::{Error, Result};

/// Tolerance for accepting an input matrix as Hermitian.
pub const HERMITICITY_TOL: f64 = 1e-10;

/// Max entrywise deviation between `m` and its conjugate transpose.
pub fn hermiticity_deviation(m: &DMatrix<Complex64>) -> f64 {
    let mut max_dev: f64 = 0.0;
    for r in 0..m.nrows() {
        for s in 0..m.ncols() {
            max_dev = max_dev.max((m[(r, s)] - m[(s, r)].conj()).norm());
        }
    }
    max_dev
}

/// Eigenvalues of a Hermitian matrix, ascending.
pub fn hermitian_eigenvalues(m: &DMatrix<Complex64>) -> Vec<f64> {
    let mut vals: Vec<f64> = m
        .clone()
        .symmetric_eigen()
        .eigenvalues
        .iter()
        .copied()
        .collect();
    vals.sort_by(|a, b| a.total_cmp(b));
    vals
}

/// Smallest eigenvalue of a Hermitian matrix.
pub fn hermitian_min_eigenvalue(m: &DMatrix<Complex64>) -> f64 {
    m.clone()
        .symmetric_eigen()
        .eigenvalues
        .iter()
        .fold(f64::INFINITY, |a, &b| a.min(b))
}

/// A Hermitian Hamiltonian (entries in eV) together with its spectral
/// decomposition: ascending eigenvalues `W_n` and a unitary matrix whose
/// columns are the eigenvectors `u_n`.
#[derive(Debug, Clone, PartialEq)]
pub struct SpectralSystem {
    hamiltonian: DMatrix<Complex64>,
    eigenvalues: DVector<f64>,
    eigenvectors: DMatrix<Complex64>,
}

impl SpectralSystem {
    /// Diagonalize a Hermitian matrix.
    ///
    /// Eigenvalues come out ascending; each eigenvector's phase is fixed by
    /// making its largest-magnitude component real and positive, so repeated
    /// runs produce identical output.
    pub fn new(hamiltonian: DMatrix<Complex64>) -> Result<Self> {
        if hamiltonian.nrows() != hamiltonian.ncols() {
            return Err(Error::NotSquare {
                rows: hamiltonian.nrows(),
                cols: hamiltonian.ncols(),
            });
        }
        let dev = hermiticity_deviation(&hamiltonian);
        if dev > HERMITICITY_TOL {
            return Err(Error::NotHermitian { max_dev: dev });
        }
        let n = hamiltonian.nrows();

        // Work on the exactly Hermitian average so roundoff in the input
        // cannot leak into the eigensolver.
        let herm = (&hamiltonian + hamiltonian.adjoint()).scale(0.5);
        let eig = herm.symmetric_eigen();

        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by(|&a, &b| eig.eigenvalues[a].total_cmp(&eig.eigenvalues[b]));

        let mut eigenvalues = DVector::zeros(n);
        let mut eigenvectors = DMatrix::zeros(n, n);
        for (dst, &src) in order.iter().enumerate() {
            eigenvalues[dst] = eig.eigenvalues[src];
            let mut col = eig.eigenvectors.column(src).clone_owned();
            fix_phase(&mut col);
            eigenvectors.set_column(dst, &col);
        }

        Ok(SpectralSystem {
            hamiltonian,
            eigenvalues,
            eigenvectors,
        })
    }

    /// Build directly from known energies (diagonal Hamiltonian, identity
    /// eigenvectors).
    pub fn from_energies(energies_ev: &[f64]) -> Self {
        let n = energies_ev.len();
        let h = DMatrix::from_fn(n, n, |r, s| {
            if r == s {
                Complex64::new(energies_ev[r], 0.0)
            } else {
                Complex64::new(0.0, 0.0)
            }
        });
        Self::new(h).expect("diagonal real matrix is Hermitian")
    }

    /// A two-level system with energies 0 and `delta_e_ev`.
    pub fn two_level(delta_e_ev: f64) -> Self {
        Self::from_energies(&[0.0, delta_e_ev])
    }

    pub fn dim(&self) -> usize {
        self.eigenvalues.len()
    }

    pub fn hamiltonian(&self) -> &DMatrix<Complex64> {
        &self.hamiltonian
    }

    /// Eigenvalues W_n in eV, ascending.
    pub fn eigenvalues(&self) -> &DVector<f64> {
        &self.eigenvalues
    }

    /// Unitary matrix of eigenvector columns.
    pub fn eigenvectors(&self) -> &DMatrix<Complex64> {
        &self.eigenvectors
    }

    /// U diag(W) U^dagger; equals the Hamiltonian up to roundoff.
    pub fn reconstruct(&self) -> DMatrix<Complex64> {
        let d = DMatrix::from_fn(self.dim(), self.dim(), |r, s| {
            if r == s {
                Complex64::new(self.eigenvalues[r], 0.0)
            } else {
                Complex64::new(0.0, 0.0)
            }
        });
        &self.eigenvectors * d * self.eigenvectors.adjoint()
    }

    /// Max entrywise |U diag(W) U^dagger - H|.
    pub fn reconstruction_error(&self) -> f64 {
        let rec = self.reconstruct();
        let mut max_dev: f64 = 0.0;
        for r in 0..self.dim() {
            for s in 0..self.dim() {
                max_dev = max_dev.max((rec[(r, s)] - self.hamiltonian[(r, s)]).norm());
            }
        }
        max_dev
    }

    /// Max entrywise |U^dagger U - I|.
    pub fn unitarity_error(&self) -> f64 {
        let p = self.eigenvectors.adjoint() * &self.eigenvectors;
        let mut max_dev: f64 = 0.0;
        for r in 0..self.dim() {
            for s in 0..self.dim() {
                let expect = if r == s { 1.0 } else { 0.0 };
                max_dev = max_dev.max((p[(r, s)] - Complex64::new(expect, 0.0)).norm());
            }
        }
        max_dev
    }

    /// Transform a matrix written in the Hamiltonian's basis into the energy
    /// basis: U^dagger M U.
    pub fn matrix_to_energy_basis(&self, m: &DMatrix<Complex64>) -> Result<DMatrix<Complex64>> {
        self.check_dim(m.nrows())?;
        self.check_dim(m.ncols())?;
        Ok(self.eigenvectors.adjoint() * m * &self.eigenvectors)
    }

    /// Inverse of [`Self::matrix_to_energy_basis`]: U M U^dagger.
    pub fn matrix_from_energy_basis(&self, m: &DMatrix<Complex64>) -> Result<DMatrix<Complex64>> {
        self.check_dim(m.nrows())?;
        self.check_dim(m.ncols())?;
        Ok(&self.eigenvectors * m * self.eigenvectors.adjoint())
    }

    /// Expansion coefficients c_n = u_n^dagger psi of a vector in the energy
    /// basis.
    pub fn coefficients(&self, psi: &DVector<Complex64>) -> Result<DVector<Complex64>> {
        self.check_dim(psi.len())?;
        Ok(self.eigenvectors.adjoint() * psi)
    }

    /// Reassemble a vector from its energy-basis coefficients.
    pub fn from_coefficients(&self, coeffs: &DVector<Complex64>) -> Result<DVector<Complex64>> {
        self.check_dim(coeffs.len())?;
        Ok(&self.eigenvectors * coeffs)
    }

    pub(crate) fn check_dim(&self, found: usize) -> Result<()> {
        if found != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found,
            });
        }
        Ok(())
    }
}

/// Rotate a vector's global phase so its largest-magnitude component is real
/// and positive.
fn fix_phase(v: &mut DVector<Complex64>) {
    let mut idx = 0;
    let mut best = 0.0_f64;
    for (i, a) in v.iter().enumerate() {
        let mag = a.norm();
        if mag > best {
            best = mag;
            idx = i;
        }
    }
    if best == 0.0 {
        return;
    }
    let phase = v[idx] / Complex64::new(best, 0.0);
    let rot = phase.conj();
    for a in v.iter_mut() {
        *a *= rot;
    }
}
