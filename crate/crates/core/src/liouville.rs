//! Discretized (retarded) Liouville-von Neumann evolution of the density
//! matrix, its non-unitary semigroup, and the decay/phase rates.
//!
//! In the energy basis the retarded difference equation
//! [rho(t) - rho(t - tau)] / tau = -i L rho(t) acts entrywise:
//!
//! rho_rs(k tau) = rho_rs(0) (1 + i omega_rs tau)^{-k}
//!              = rho_rs(0) e^{-gamma_rs k tau} e^{-i nu_rs k tau}
//!
//! with omega_rs = (E_r - E_s)/hbar,
//! gamma_rs = ln(1 + omega_rs^2 tau^2) / (2 tau) and
//! nu_rs = atan(omega_rs tau) / tau. Diagonal factors are exactly 1, so the
//! trace is preserved and populations never move; every off-diagonal entry
//! decays monotonically, which makes the state reduction exponential rather
//! than instantaneous.
//!
//! The symmetric version of the same discretization has unimodular
//! characteristic multipliers and therefore never decoheres; the retarded
//! Schrodinger evolution, by contrast, damps the diagonal as well. Both
//! contrasts are implemented here.

use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::constants::HBAR_EV_S;
use crate::error::{Error, Result};
use crate::schrodinger::SchrodingerTrajectory;
use crate::spectral::{hermitian_min_eigenvalue, SpectralSystem};
use crate::state::{offdiagonal_norm, BasisTag, DensityMatrix};

/// Bohr transition frequencies omega_rs = (E_r - E_s)/hbar in rad/s.
///
/// Exactly antisymmetric with a zero diagonal by construction.
#[derive(Debug, Clone, PartialEq)]
pub struct TransitionFrequencies {
    omega: DMatrix<f64>,
}

impl TransitionFrequencies {
    pub fn from_energies(energies_ev: &[f64]) -> Self {
        let n = energies_ev.len();
        let omega = DMatrix::from_fn(n, n, |r, s| {
            if r == s {
                0.0
            } else {
                (energies_ev[r] - energies_ev[s]) / HBAR_EV_S
            }
        });
        TransitionFrequencies { omega }
    }

    pub fn from_system(sys: &SpectralSystem) -> Self {
        Self::from_energies(sys.eigenvalues().as_slice())
    }

    pub fn dim(&self) -> usize {
        self.omega.nrows()
    }

    /// omega_rs in rad/s.
    pub fn get(&self, r: usize, s: usize) -> f64 {
        self.omega[(r, s)]
    }

    pub fn matrix(&self) -> &DMatrix<f64> {
        &self.omega
    }
}

/// Decay rates gamma_rs (1/s, symmetric) and oscillation frequencies nu_rs
/// (rad/s, antisymmetric) of the retarded density-matrix evolution.
#[derive(Debug, Clone, PartialEq)]
pub struct DecoherenceRates {
    gamma: DMatrix<f64>,
    nu: DMatrix<f64>,
}

impl DecoherenceRates {
    pub fn new(omega: &TransitionFrequencies, tau: f64) -> Result<Self> {
        check_tau(tau)?;
        let n = omega.dim();
        let gamma = DMatrix::from_fn(n, n, |r, s| decay_rate_unchecked(omega.get(r, s), tau));
        let nu = DMatrix::from_fn(n, n, |r, s| {
            oscillation_frequency_unchecked(omega.get(r, s), tau)
        });
        Ok(DecoherenceRates { gamma, nu })
    }

    /// gamma_rs in 1/s.
    pub fn gamma(&self) -> &DMatrix<f64> {
        &self.gamma
    }

    /// nu_rs in rad/s.
    pub fn nu(&self) -> &DMatrix<f64> {
        &self.nu
    }
}

/// Diagnostics of a density-matrix evolution, recorded in the energy basis
/// on the grid t = k tau.
#[derive(Debug, Clone, PartialEq)]
pub struct ReductionProfile {
    pub times: Vec<f64>,
    /// Frobenius norm of the off-diagonal part of rho(t).
    pub offdiag_norm: Vec<f64>,
    /// Real diagonal entries (populations) per time.
    pub diagonal: Vec<Vec<f64>>,
    /// Smallest eigenvalue of rho(t).
    pub min_eigenvalue: Vec<f64>,
    /// Re tr rho(t); constant 1 for the retarded density evolution, decaying
    /// for the retarded-Schrodinger-induced density.
    pub trace: Vec<f64>,
}

/// Object amplitudes c_r, classical branch weights C_M, and the pointer
/// eigenvalues labelling the outcomes.
#[derive(Debug, Clone, PartialEq)]
pub struct MeasurementSetup {
    object_amplitudes: Vec<Complex64>,
    classical_weights: Vec<f64>,
    pointer_labels: Vec<f64>,
}

impl MeasurementSetup {
    pub fn new(
        object_amplitudes: Vec<Complex64>,
        classical_weights: Vec<f64>,
        pointer_labels: Vec<f64>,
    ) -> Result<Self> {
        let norm_sq: f64 = object_amplitudes.iter().map(|c| c.norm_sqr()).sum();
        if (norm_sq - 1.0).abs() > 1e-12 {
            return Err(Error::NotNormalized {
                name: "object amplitudes",
                sum: norm_sq,
            });
        }
        for (index, &w) in classical_weights.iter().enumerate() {
            if w < 0.0 {
                return Err(Error::NegativeWeight { index, value: w });
            }
        }
        let total: f64 = classical_weights.iter().sum();
        if (total - 1.0).abs() > 1e-12 {
            return Err(Error::NotNormalized {
                name: "classical weights",
                sum: total,
            });
        }
        if pointer_labels.len() != object_amplitudes.len() {
            return Err(Error::DimensionMismatch {
                expected: object_amplitudes.len(),
                found: pointer_labels.len(),
            });
        }
        Ok(MeasurementSetup {
            object_amplitudes,
            classical_weights,
            pointer_labels,
        })
    }

    pub fn object_amplitudes(&self) -> &[Complex64] {
        &self.object_amplitudes
    }

    pub fn classical_weights(&self) -> &[f64] {
        &self.classical_weights
    }

    pub fn pointer_labels(&self) -> &[f64] {
        &self.pointer_labels
    }

    /// Dimension of the post-interaction density matrix: one block of
    /// object states per classical branch.
    pub fn dim(&self) -> usize {
        self.object_amplitudes.len() * self.classical_weights.len()
    }
}

fn check_tau(tau: f64) -> Result<()> {
    if !(tau > 0.0) || !tau.is_finite() {
        return Err(Error::NonPositive {
            name: "tau",
            value: tau,
        });
    }
    Ok(())
}

fn decay_rate_unchecked(omega_rs: f64, tau: f64) -> f64 {
    let x = omega_rs * tau;
    (x * x).ln_1p() / (2.0 * tau)
}

fn oscillation_frequency_unchecked(omega_rs: f64, tau: f64) -> f64 {
    (omega_rs * tau).atan() / tau
}

/// Decay rate gamma_rs = ln(1 + omega_rs^2 tau^2) / (2 tau) in 1/s.
///
/// Monotone increasing in |omega| and, at fixed omega != 0, in tau: the
/// larger the chronon, the faster off-diagonal terms die.
pub fn decay_rate(omega_rs: f64, tau: f64) -> Result<f64> {
    check_tau(tau)?;
    Ok(decay_rate_unchecked(omega_rs, tau))
}

/// Oscillation frequency nu_rs = atan(omega_rs tau) / tau in rad/s
/// (principal branch); tends to omega_rs as tau -> 0.
pub fn oscillation_frequency(omega_rs: f64, tau: f64) -> Result<f64> {
    check_tau(tau)?;
    Ok(oscillation_frequency_unchecked(omega_rs, tau))
}

/// Small-(omega tau) form of the decay factor: exp(-omega^2 tau t / 2).
///
/// This is |evolution_factor| to first order in (omega tau)^2.
pub fn first_order_decay(omega_nm: f64, tau: f64, t: f64) -> f64 {
    (-omega_nm * omega_nm * tau * t / 2.0).exp()
}

/// The elementwise k-step factor (1 + i omega_rs tau)^{-k}, computed in
/// log-polar form e^{-(gamma + i nu) k tau} so powers up to k ~ 10^6 stay
/// exact to roundoff.
pub fn evolution_factor(omega_rs: f64, tau: f64, k: u64) -> Complex64 {
    if k == 0 {
        return Complex64::new(1.0, 0.0);
    }
    let t = k as f64 * tau;
    let gamma = decay_rate_unchecked(omega_rs, tau);
    let nu = oscillation_frequency_unchecked(omega_rs, tau);
    Complex64::from_polar((-gamma * t).exp(), -nu * t)
}

/// Matrix of [`evolution_factor`] values for every (r, s) pair.
pub fn factor_matrix(omega: &TransitionFrequencies, tau: f64, k: u64) -> DMatrix<Complex64> {
    let n = omega.dim();
    DMatrix::from_fn(n, n, |r, s| evolution_factor(omega.get(r, s), tau, k))
}

/// One retarded step: rho_rs(t) = rho_rs(t - tau) / (1 + i omega_rs tau).
///
/// `rho` must be written in the energy basis matching `omega`. Hermiticity
/// and the trace are preserved exactly (diagonal factors are 1), so the
/// result is built without re-validation.
pub fn lvn_step_retarded(
    rho: &DensityMatrix,
    omega: &TransitionFrequencies,
    tau: f64,
) -> Result<DensityMatrix> {
    check_tau(tau)?;
    if rho.dim() != omega.dim() {
        return Err(Error::DimensionMismatch {
            expected: omega.dim(),
            found: rho.dim(),
        });
    }
    let n = rho.dim();
    let out = DMatrix::from_fn(n, n, |r, s| {
        rho.matrix()[(r, s)] / Complex64::new(1.0, omega.get(r, s) * tau)
    });
    Ok(DensityMatrix::from_raw(out, rho.basis().clone()))
}

/// One step of the symmetric three-term recurrence
/// rho_rs(t + tau) = rho_rs(t - tau) - 2 i omega_rs tau rho_rs(t).
///
/// Its characteristic multipliers are unimodular for |omega_rs tau| < 1, so
/// unlike the retarded step it produces no decay.
pub fn lvn_step_symmetric(
    rho_prev: &DensityMatrix,
    rho_curr: &DensityMatrix,
    omega: &TransitionFrequencies,
    tau: f64,
) -> Result<DensityMatrix> {
    check_tau(tau)?;
    for dim in [rho_prev.dim(), rho_curr.dim()] {
        if dim != omega.dim() {
            return Err(Error::DimensionMismatch {
                expected: omega.dim(),
                found: dim,
            });
        }
    }
    let n = omega.dim();
    let out = DMatrix::from_fn(n, n, |r, s| {
        rho_prev.matrix()[(r, s)]
            - Complex64::new(0.0, 2.0 * omega.get(r, s) * tau) * rho_curr.matrix()[(r, s)]
    });
    Ok(DensityMatrix::from_raw(out, rho_curr.basis().clone()))
}

/// Roots of lambda^2 + 2 i omega tau lambda - 1 = 0, the characteristic
/// multipliers of the symmetric recurrence: lambda = -i omega tau
/// +/- sqrt(1 - omega^2 tau^2). Both have |lambda| = 1 iff |omega tau| <= 1.
pub fn symmetric_multipliers(omega_rs: f64, tau: f64) -> (Complex64, Complex64) {
    let x = Complex64::new(omega_rs * tau, 0.0);
    let root = (Complex64::new(1.0, 0.0) - x * x).sqrt();
    let minus_ix = Complex64::new(0.0, -omega_rs * tau);
    (minus_ix + root, minus_ix - root)
}

/// rho(k tau) from the closed-form factors: transform to the energy basis,
/// apply the k-step factor entrywise, transform back.
pub fn density_at(
    rho0: &DensityMatrix,
    sys: &SpectralSystem,
    tau: f64,
    k: u64,
) -> Result<DensityMatrix> {
    check_tau(tau)?;
    let omega = TransitionFrequencies::from_system(sys);
    let rho_e = sys.matrix_to_energy_basis(rho0.matrix())?;
    let n = rho_e.nrows();
    let evolved = DMatrix::from_fn(n, n, |r, s| {
        rho_e[(r, s)] * evolution_factor(omega.get(r, s), tau, k)
    });
    let back = sys.matrix_from_energy_basis(&evolved)?;
    Ok(DensityMatrix::from_raw(back, rho0.basis().clone()))
}

fn profile_push(profile: &mut ReductionProfile, t: f64, m: &DMatrix<Complex64>) {
    profile.times.push(t);
    profile.offdiag_norm.push(offdiagonal_norm(m));
    profile
        .diagonal
        .push(m.diagonal().iter().map(|z| z.re).collect());
    profile.min_eigenvalue.push(hermitian_min_eigenvalue(m));
    profile.trace.push(m.diagonal().iter().map(|z| z.re).sum());
}

fn empty_profile(capacity: usize) -> ReductionProfile {
    ReductionProfile {
        times: Vec::with_capacity(capacity),
        offdiag_norm: Vec::with_capacity(capacity),
        diagonal: Vec::with_capacity(capacity),
        min_eigenvalue: Vec::with_capacity(capacity),
        trace: Vec::with_capacity(capacity),
    }
}

/// Run the retarded density evolution for `steps` intervals, recording
/// energy-basis diagnostics at every t = k tau.
///
/// Populations stay constant, the off-diagonal norm decreases monotonically,
/// and the state tends to the diagonal mixture sum_n rho_nn(0) |n><n|.
pub fn evolve_density(
    rho0: &DensityMatrix,
    sys: &SpectralSystem,
    tau: f64,
    steps: usize,
) -> Result<ReductionProfile> {
    Ok(evolve_density_series(rho0, sys, tau, steps, false)?.profile)
}

/// Output of [`evolve_density_series`].
#[derive(Debug, Clone)]
pub struct DensitySeries {
    pub profile: ReductionProfile,
    /// Energy-basis rho(k tau) for every step, present when requested.
    /// Memory scales as steps * dim^2.
    pub states_energy: Vec<DMatrix<Complex64>>,
}

/// Like [`evolve_density`] but optionally keeping the full energy-basis
/// matrix at every step (for serialization).
pub fn evolve_density_series(
    rho0: &DensityMatrix,
    sys: &SpectralSystem,
    tau: f64,
    steps: usize,
    keep_states: bool,
) -> Result<DensitySeries> {
    check_tau(tau)?;
    let omega = TransitionFrequencies::from_system(sys);
    let rho_e = sys.matrix_to_energy_basis(rho0.matrix())?;
    let n = rho_e.nrows();

    let mut profile = empty_profile(steps + 1);
    let mut states_energy = Vec::with_capacity(if keep_states { steps + 1 } else { 0 });
    for k in 0..=steps {
        let m = if k == 0 {
            rho_e.clone()
        } else {
            DMatrix::from_fn(n, n, |r, s| {
                rho_e[(r, s)] * evolution_factor(omega.get(r, s), tau, k as u64)
            })
        };
        profile_push(&mut profile, k as f64 * tau, &m);
        if keep_states {
            states_energy.push(m);
        }
    }
    Ok(DensitySeries {
        profile,
        states_energy,
    })
}

/// Max entrywise deviation |V(k tau) V(m tau) - V((k+m) tau)| over the factor
/// matrices; the semigroup law says this is zero.
pub fn semigroup_check(omega: &TransitionFrequencies, tau: f64, k: u64, m: u64) -> f64 {
    let n = omega.dim();
    let mut max_dev: f64 = 0.0;
    for r in 0..n {
        for s in 0..n {
            let w = omega.get(r, s);
            let composed = evolution_factor(w, tau, k) * evolution_factor(w, tau, m);
            let direct = evolution_factor(w, tau, k + m);
            max_dev = max_dev.max((composed - direct).norm());
        }
    }
    max_dev
}

/// The post-interaction object-plus-apparatus density matrix in the
/// pointer/energy basis: within each classical branch M (weight C_M) the
/// entries are rho_{r1 r2} = C_M conj(c_{r1}) c_{r2}; branches occupy
/// orthogonal blocks, index = M * num_outcomes + r.
///
/// The off-diagonal entries are exactly the coherences an instantaneous
/// reduction postulate would erase; here they are handed to the retarded
/// evolution instead.
pub fn build_measurement_state(setup: &MeasurementSetup) -> Result<DensityMatrix> {
    let r_dim = setup.object_amplitudes().len();
    let m_dim = setup.classical_weights().len();
    let dim = r_dim * m_dim;
    let mut rho = DMatrix::zeros(dim, dim);
    for (m, &weight) in setup.classical_weights().iter().enumerate() {
        for r1 in 0..r_dim {
            for r2 in 0..r_dim {
                rho[(m * r_dim + r1, m * r_dim + r2)] = setup.object_amplitudes()[r1].conj()
                    * setup.object_amplitudes()[r2]
                    * weight;
            }
        }
    }
    DensityMatrix::new(rho, BasisTag::Energy)
}

/// Density diagnostics of a retarded-Schrodinger trajectory: rho(t) =
/// |psi(t)><psi(t)| per step, deliberately not renormalized.
///
/// Unlike the retarded density evolution, the damping acts on the diagonal
/// too: rho_nn(t) = |c_n|^2 e^{-gamma_n t}, and the trace decays with the
/// squared norm.
pub fn schrodinger_induced_density(traj: &SchrodingerTrajectory) -> ReductionProfile {
    let mut profile = empty_profile(traj.len());
    for (t, st) in traj.times().iter().zip(traj.states().iter()) {
        let m = st.outer_product();
        profile_push(&mut profile, *t, &m);
    }
    profile
}

/// Time for an off-diagonal magnitude to halve, ln 2 / gamma_rs.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum CoherenceHalfTime {
    Finite(f64),
    /// omega_rs = 0: the entry never decays.
    NeverDecays,
}

impl CoherenceHalfTime {
    pub fn seconds(&self) -> Option<f64> {
        match self {
            CoherenceHalfTime::Finite(t) => Some(*t),
            CoherenceHalfTime::NeverDecays => None,
        }
    }
}

pub fn coherence_half_time(omega_rs: f64, tau: f64) -> Result<CoherenceHalfTime> {
    check_tau(tau)?;
    if omega_rs == 0.0 {
        return Ok(CoherenceHalfTime::NeverDecays);
    }
    let gamma = decay_rate_unchecked(omega_rs, tau);
    Ok(CoherenceHalfTime::Finite(std::f64::consts::LN_2 / gamma))
}
