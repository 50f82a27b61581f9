//! Property tests for the structural invariants: spectral round-trips,
//! norm monotonicity of the discrete evolutions, and rate monotonicity.

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;
use proptest::prelude::*;

use chronon_core::constants::{chronon_of, HBAR_EV_S};
use chronon_core::liouville::{decay_rate, evolution_factor, TransitionFrequencies};
use chronon_core::schrodinger::{step_advanced, step_retarded};
use chronon_core::spectral::SpectralSystem;
use chronon_core::state::{from_energy_basis, to_energy_basis, BasisTag, DensityMatrix, StateVector};

fn hermitian_from(parts: &[(f64, f64)], n: usize) -> DMatrix<Complex64> {
    let raw = DMatrix::from_fn(n, n, |r, s| {
        let (re, im) = parts[r * n + s];
        Complex64::new(re, im)
    });
    (&raw + raw.adjoint()).scale(0.5)
}

fn density_from(parts: &[(f64, f64)], n: usize) -> Option<DensityMatrix> {
    let a = DMatrix::from_fn(n, n, |r, s| {
        let (re, im) = parts[r * n + s];
        Complex64::new(re, im)
    });
    let p = &a * a.adjoint();
    let tr: f64 = p.diagonal().iter().map(|z| z.re).sum();
    if tr < 1e-6 {
        return None;
    }
    DensityMatrix::new(p.scale(1.0 / tr), BasisTag::Custom("prop".into())).ok()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn spectral_reconstruction_round_trips(
        n in 1usize..=8,
        parts in proptest::collection::vec((-5.0f64..5.0, -5.0f64..5.0), 64),
    ) {
        let h = hermitian_from(&parts, n);
        let sys = SpectralSystem::new(h).unwrap();
        prop_assert!(sys.reconstruction_error() < 1e-10);
        prop_assert!(sys.unitarity_error() < 1e-10);
    }

    #[test]
    fn basis_transforms_preserve_trace_and_spectrum(
        n in 2usize..=6,
        hparts in proptest::collection::vec((-3.0f64..3.0, -3.0f64..3.0), 36),
        rparts in proptest::collection::vec((-1.0f64..1.0, -1.0f64..1.0), 36),
    ) {
        let sys = SpectralSystem::new(hermitian_from(&hparts, n)).unwrap();
        let Some(rho) = density_from(&rparts, n) else { return Ok(()) };
        let energy = to_energy_basis(&rho, &sys).unwrap();
        prop_assert!((energy.trace() - rho.trace()).abs() < 1e-12);
        for (a, b) in rho.eigenvalues().iter().zip(energy.eigenvalues().iter()) {
            prop_assert!((a - b).abs() < 1e-10);
        }
        let back = from_energy_basis(&energy, &sys).unwrap();
        for r in 0..n {
            for s in 0..n {
                prop_assert!((back.matrix()[(r, s)] - rho.matrix()[(r, s)]).norm() < 1e-12);
            }
        }
    }

    #[test]
    fn chronon_is_quadratic_in_charge(
        q in 1e-12f64..1e-8,
        m in 1e-29f64..1e-24,
        lambda in 0.1f64..10.0,
    ) {
        let base = chronon_of(q, m, false).unwrap();
        let scaled = chronon_of(lambda * q, m, false).unwrap();
        prop_assert!((scaled / (lambda * lambda * base) - 1.0).abs() < 1e-14);
    }

    #[test]
    fn retarded_never_gains_advanced_never_loses(
        energies in proptest::collection::vec(-10.0f64..10.0, 2..6),
        amps in proptest::collection::vec((-1.0f64..1.0, -1.0f64..1.0), 6),
        tau_exp in -21.0f64..-15.0,
    ) {
        let tau = 10f64.powf(tau_exp);
        let n = energies.len();
        let sys = SpectralSystem::from_energies(&energies);
        let psi = StateVector::new(
            DVector::from_fn(n, |i, _| Complex64::new(amps[i].0, amps[i].1)),
            BasisTag::Energy,
        ).unwrap();
        let before = psi.norm_sq();
        let ret = step_retarded(&psi, &sys, tau).unwrap();
        let adv = step_advanced(&psi, &sys, tau).unwrap();
        prop_assert!(ret.norm_sq() <= before * (1.0 + 1e-12));
        prop_assert!(adv.norm_sq() >= before * (1.0 - 1e-12));

        // exact per-mode factors in the energy basis (the system is diagonal)
        for i in 0..n {
            let x = energies[i] * tau / HBAR_EV_S;
            let expect_ret = psi.amplitudes()[i].norm_sqr() / (1.0 + x * x);
            prop_assert!((ret.amplitudes()[i].norm_sqr() - expect_ret).abs()
                <= 1e-12 * before.max(1.0));
            let expect_adv = psi.amplitudes()[i].norm_sqr() * (1.0 + x * x);
            prop_assert!((adv.amplitudes()[i].norm_sqr() - expect_adv).abs()
                <= 1e-12 * (before.max(1.0) * (1.0 + x * x)));
        }
    }

    #[test]
    fn offdiagonal_decay_is_monotone_and_hermitian(
        delta_e in 1e-3f64..10.0,
        tau_exp in -21.0f64..-16.0,
    ) {
        let tau = 10f64.powf(tau_exp);
        let omega = TransitionFrequencies::from_energies(&[0.0, delta_e]);
        let w = omega.get(1, 0);
        let mut prev_mag = 1.0f64;
        for k in [1u64, 2, 5, 10, 100, 1000] {
            let f = evolution_factor(w, tau, k);
            // conjugate pairing is exact
            prop_assert_eq!(f.conj(), evolution_factor(-w, tau, k));
            prop_assert!(f.norm() <= prev_mag);
            prop_assert!(f.norm() < 1.0);
            prev_mag = f.norm();
        }
    }

    #[test]
    fn decay_rate_monotone_in_tau(
        omega in 1e8f64..1e18,
        x2 in 1e-6f64..1.5,
    ) {
        // gamma grows with tau while omega tau stays below ~2 (the formula
        // turns over near omega tau = 1.98; the physical regime sits well
        // below that)
        let tau2 = x2 / omega;
        let tau1 = tau2 / 2.0;
        let g1 = decay_rate(omega, tau1).unwrap();
        let g2 = decay_rate(omega, tau2).unwrap();
        prop_assert!(g2 > g1);
    }

    #[test]
    fn factor_tends_to_pure_phase_linearly_in_tau(
        omega in 1e10f64..1e15,
        x in 1e-5f64..3e-3,
    ) {
        // fixed physical time t, tau -> tau/2 halves 1 - |factor| (first order)
        let k1 = 1u64 << 12;
        let tau1 = x / omega;
        let defect1 = 1.0 - evolution_factor(omega, tau1, k1).norm();
        let defect2 = 1.0 - evolution_factor(omega, tau1 / 2.0, 2 * k1).norm();
        prop_assert!(defect1 > 0.0 && defect2 > 0.0);
        let ratio = defect1 / defect2;
        prop_assert!((1.7..=2.3).contains(&ratio), "ratio {}", ratio);
    }
}
