//! Non-relativistic finite-difference steppers:
//! (m0/tau0)[v(t) - v(t - tau0)] = e [E(t) + v(t) x B(t) / c] and its
//! advanced and symmetric counterparts.

use nalgebra::{Matrix3, Vector3};

use super::field::EMField;
use super::ParticleParams;
use crate::constants::C_CM_PER_S;
use crate::error::{Error, Result};
use crate::scheme::SchemeVariant;

/// How discrete positions are connected to velocities.
///
/// The retarded transmission law as printed relates the displacement to the
/// velocity *difference*, which gives zero displacement for free motion; the
/// averaged form uses the mean of the two velocities and reproduces free
/// translation. Both are kept: `Averaged` is the default, `Printed` exists
/// for fidelity experiments.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum TransmissionLaw {
    #[default]
    Averaged,
    Printed,
}

/// Classical particle state at a discrete tick.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WorldlinePoint {
    pub tick: u64,
    /// Lab time in seconds, tick * tau0.
    pub time: f64,
    /// Position in cm.
    pub position: Vector3<f64>,
    /// Velocity in cm/s.
    pub velocity: Vector3<f64>,
}

impl WorldlinePoint {
    pub fn start(position: Vector3<f64>, velocity: Vector3<f64>) -> Self {
        WorldlinePoint {
            tick: 0,
            time: 0.0,
            position,
            velocity,
        }
    }

    /// Kinetic energy m |v|^2 / 2 in erg.
    pub fn kinetic_energy(&self, params: &ParticleParams) -> f64 {
        0.5 * params.mass() * self.velocity.norm_squared()
    }
}

/// Displacement over one interval under the chosen transmission law.
fn displacement(law: TransmissionLaw, tau0: f64, v_old: &Vector3<f64>, v_new: &Vector3<f64>) -> Vector3<f64> {
    match law {
        TransmissionLaw::Averaged => (v_new + v_old) * (tau0 / 2.0),
        TransmissionLaw::Printed => (v_new - v_old) * (tau0 / 2.0),
    }
}

/// Retarded step: solve
/// (I - (e tau0 / m c) [v -> v x B]) v(t) = v(t - tau0) + (e tau0 / m) E(t)
/// for v(t). The force is evaluated at the new time and, for
/// position-dependent fields, at the last known position.
pub fn step_nonrel_retarded(
    state: &WorldlinePoint,
    field: &dyn EMField,
    params: &ParticleParams,
    law: TransmissionLaw,
) -> WorldlinePoint {
    let tau0 = params.tau0();
    let t_new = state.time + tau0;
    let e = field.electric(t_new, &state.position);
    let b = field.magnetic(t_new, &state.position);
    let coef = params.charge() * tau0 / params.mass();

    let v_new = if b == Vector3::zeros() {
        // pure electric update is explicit; keeps v bit-identical when E = 0
        state.velocity + e * coef
    } else {
        // v - alpha v x B = rhs with alpha = e tau0 / (m c)
        let alpha = coef / C_CM_PER_S;
        // matrix of v -> v x B is the skew form of -B
        let m = Matrix3::identity()
            - alpha
                * Matrix3::new(
                    0.0, b.z, -b.y, //
                    -b.z, 0.0, b.x, //
                    b.y, -b.x, 0.0,
                );
        let rhs = state.velocity + e * coef;
        // det = 1 + alpha^2 |B|^2 > 0: always solvable
        m.lu().solve(&rhs).expect("matrix I - a[Bx] is nonsingular")
    };

    WorldlinePoint {
        tick: state.tick + 1,
        time: t_new,
        position: state.position + displacement(law, tau0, &state.velocity, &v_new),
        velocity: v_new,
    }
}

/// Advanced step: explicit update
/// v(t + tau0) = v(t) + (e tau0 / m)[E(t) + v(t) x B(t) / c],
/// with the position advanced by tau0 v(t).
pub fn step_nonrel_advanced(
    state: &WorldlinePoint,
    field: &dyn EMField,
    params: &ParticleParams,
) -> WorldlinePoint {
    let tau0 = params.tau0();
    let e = field.electric(state.time, &state.position);
    let b = field.magnetic(state.time, &state.position);
    let coef = params.charge() * tau0 / params.mass();
    let force_dir = e + state.velocity.cross(&b) / C_CM_PER_S;
    let v_new = state.velocity + force_dir * coef;
    WorldlinePoint {
        tick: state.tick + 1,
        time: state.time + tau0,
        position: state.position + state.velocity * tau0,
        velocity: v_new,
    }
}

/// Symmetric (leapfrog) step:
/// v(t + tau0) = v(t - tau0) + (2 e tau0 / m)[E(t) + v(t) x B(t) / c],
/// x(t + tau0) = x(t - tau0) + 2 tau0 v(t).
pub fn step_nonrel_symmetric(
    prev: &WorldlinePoint,
    curr: &WorldlinePoint,
    field: &dyn EMField,
    params: &ParticleParams,
) -> WorldlinePoint {
    let tau0 = params.tau0();
    let e = field.electric(curr.time, &curr.position);
    let b = field.magnetic(curr.time, &curr.position);
    let coef = 2.0 * params.charge() * tau0 / params.mass();
    let force_dir = e + curr.velocity.cross(&b) / C_CM_PER_S;
    WorldlinePoint {
        tick: curr.tick + 1,
        time: curr.time + tau0,
        position: prev.position + curr.velocity * (2.0 * tau0),
        velocity: prev.velocity + force_dir * coef,
    }
}

/// Scheme dispatcher. The symmetric scheme needs the previous point as well;
/// passing `None` for it is an error.
pub fn step_nonrel(
    variant: SchemeVariant,
    prev: Option<&WorldlinePoint>,
    state: &WorldlinePoint,
    field: &dyn EMField,
    params: &ParticleParams,
    law: TransmissionLaw,
) -> Result<WorldlinePoint> {
    match variant {
        SchemeVariant::Retarded => Ok(step_nonrel_retarded(state, field, params, law)),
        SchemeVariant::Advanced => Ok(step_nonrel_advanced(state, field, params)),
        SchemeVariant::Symmetric => {
            let prev = prev.ok_or(Error::InsufficientData { needed: 2, got: 1 })?;
            Ok(step_nonrel_symmetric(prev, state, field, params))
        }
    }
}
