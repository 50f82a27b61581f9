//! The Abraham-Lorentz equation as a continuous-time baseline:
//! m0 dv/dt - m0 theta0 d2v/dt2 = q [E + v x B / c],
//! theta0 = (2/3) q^2/(m0 c^3).
//!
//! Rewritten first-order in (r, v, a) with da/dt = (m0 a - F)/(m0 theta0)
//! and integrated with fixed-step classical RK4. A free particle with any
//! nonzero initial acceleration runs away as a(t) = a(0) e^{t/theta0};
//! demonstrating that, and contrasting it with the finite-difference
//! retarded equation (which has no such solutions), is the point of this
//! module.

use nalgebra::Vector3;

use super::field::EMField;
use super::ParticleParams;
use crate::constants::C_CM_PER_S;
use crate::error::{Error, Result};

/// State of the third-order equation: position (cm), velocity (cm/s) and
/// acceleration (cm/s^2) all evolve.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ALState {
    pub position: Vector3<f64>,
    pub velocity: Vector3<f64>,
    pub acceleration: Vector3<f64>,
}

impl ALState {
    pub fn at_rest() -> Self {
        ALState {
            position: Vector3::zeros(),
            velocity: Vector3::zeros(),
            acceleration: Vector3::zeros(),
        }
    }
}

fn lorentz_force(
    field: &dyn EMField,
    t: f64,
    state: &ALState,
    params: &ParticleParams,
) -> Vector3<f64> {
    let e = field.electric(t, &state.position);
    let b = field.magnetic(t, &state.position);
    (e + state.velocity.cross(&b) / C_CM_PER_S) * params.charge()
}

fn derivative(
    field: &dyn EMField,
    t: f64,
    state: &ALState,
    params: &ParticleParams,
    theta0: f64,
) -> ALState {
    let f = lorentz_force(field, t, state, params);
    ALState {
        position: state.velocity,
        velocity: state.acceleration,
        acceleration: (state.acceleration * params.mass() - f) / (params.mass() * theta0),
    }
}

fn axpy(state: &ALState, k: &ALState, h: f64) -> ALState {
    ALState {
        position: state.position + k.position * h,
        velocity: state.velocity + k.velocity * h,
        acceleration: state.acceleration + k.acceleration * h,
    }
}

/// One classical fourth-order Runge-Kutta step of size `dt` (an ordinary
/// integrator step, not the chronon).
pub fn step_abraham_lorentz(
    state: &ALState,
    field: &dyn EMField,
    t: f64,
    dt: f64,
    params: &ParticleParams,
) -> Result<ALState> {
    if !(dt > 0.0) || !dt.is_finite() {
        return Err(Error::NonPositive {
            name: "dt",
            value: dt,
        });
    }
    let theta0 = params.theta0();
    let k1 = derivative(field, t, state, params, theta0);
    let k2 = derivative(field, t + dt / 2.0, &axpy(state, &k1, dt / 2.0), params, theta0);
    let k3 = derivative(field, t + dt / 2.0, &axpy(state, &k2, dt / 2.0), params, theta0);
    let k4 = derivative(field, t + dt, &axpy(state, &k3, dt), params, theta0);
    Ok(ALState {
        position: state.position
            + (k1.position + k2.position * 2.0 + k3.position * 2.0 + k4.position) * (dt / 6.0),
        velocity: state.velocity
            + (k1.velocity + k2.velocity * 2.0 + k3.velocity * 2.0 + k4.velocity) * (dt / 6.0),
        acceleration: state.acceleration
            + (k1.acceleration + k2.acceleration * 2.0 + k3.acceleration * 2.0 + k4.acceleration)
                * (dt / 6.0),
    })
}

/// Least-squares slope of ln |a| vs t over a worldline sampled at spacing
/// `dt`. Needs at least 10 samples with |a| > 0.
pub fn runaway_rate(worldline: &[ALState], dt: f64) -> Result<f64> {
    if !(dt > 0.0) {
        return Err(Error::NonPositive {
            name: "dt",
            value: dt,
        });
    }
    let samples: Vec<(f64, f64)> = worldline
        .iter()
        .enumerate()
        .filter(|(_, s)| s.acceleration.norm() > 0.0)
        .map(|(k, s)| (k as f64 * dt, s.acceleration.norm().ln()))
        .collect();
    if samples.len() < 10 {
        return Err(Error::InsufficientData {
            needed: 10,
            got: samples.len(),
        });
    }
    let n = samples.len() as f64;
    let tbar = samples.iter().map(|(t, _)| t).sum::<f64>() / n;
    let ybar = samples.iter().map(|(_, y)| y).sum::<f64>() / n;
    let num: f64 = samples
        .iter()
        .map(|(t, y)| (t - tbar) * (y - ybar))
        .sum();
    let den: f64 = samples.iter().map(|(t, _)| (t - tbar) * (t - tbar)).sum();
    Ok(num / den)
}
