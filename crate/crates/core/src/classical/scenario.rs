//! Named simulation scenarios and the worldline drivers.

use nalgebra::Vector3;

use super::abraham_lorentz::{step_abraham_lorentz, ALState};
use super::field::{ElasticField, EMField, HalfSinePulse, UniformField, ZeroField};
use super::nonrel::{
    step_nonrel_advanced, step_nonrel_retarded, step_nonrel_symmetric, TransmissionLaw,
    WorldlinePoint,
};
use super::rel::{
    step_rel_advanced, step_rel_retarded, step_rel_symmetric, FourVelocity, RelWorldlinePoint,
};
use super::ParticleParams;
use crate::error::Result;
use crate::scheme::SchemeVariant;

/// The scenarios exercised by the chronon steppers. All positions in cm,
/// velocities in cm/s, fields in statvolt/cm and gauss.
#[derive(Debug, Clone, PartialEq)]
pub enum Scenario {
    FreeMotion {
        x0: Vector3<f64>,
        v0: Vector3<f64>,
    },
    UniformB {
        b: Vector3<f64>,
        x0: Vector3<f64>,
        v0: Vector3<f64>,
    },
    ConstantE {
        e: Vector3<f64>,
        x0: Vector3<f64>,
        v0: Vector3<f64>,
    },
    /// Restoring force -k x along the x axis.
    ElasticLine {
        k_spring: f64,
        x0: f64,
        v0: f64,
    },
    /// Half-sine electric pulse switched on at `onset_tick`, lasting
    /// `duration_ticks` chronons.
    EMPulse {
        onset_tick: u64,
        duration_ticks: u64,
        amplitude: Vector3<f64>,
        x0: Vector3<f64>,
        v0: Vector3<f64>,
    },
}

impl Scenario {
    fn build(&self, params: &ParticleParams) -> (Box<dyn EMField>, Vector3<f64>, Vector3<f64>) {
        match self {
            Scenario::FreeMotion { x0, v0 } => (Box::new(ZeroField), *x0, *v0),
            Scenario::UniformB { b, x0, v0 } => {
                (Box::new(UniformField::magnetic_only(*b)), *x0, *v0)
            }
            Scenario::ConstantE { e, x0, v0 } => {
                (Box::new(UniformField::electric_only(*e)), *x0, *v0)
            }
            Scenario::ElasticLine { k_spring, x0, v0 } => (
                Box::new(ElasticField {
                    k_spring: *k_spring,
                    charge: params.charge(),
                }),
                Vector3::new(*x0, 0.0, 0.0),
                Vector3::new(*v0, 0.0, 0.0),
            ),
            Scenario::EMPulse {
                onset_tick,
                duration_ticks,
                amplitude,
                x0,
                v0,
            } => (
                Box::new(HalfSinePulse {
                    onset: *onset_tick as f64 * params.tau0(),
                    duration: *duration_ticks as f64 * params.tau0(),
                    amplitude: *amplitude,
                }),
                *x0,
                *v0,
            ),
        }
    }
}

/// Run `steps` chronon intervals non-relativistically; the returned
/// worldline has steps + 1 points.
///
/// Symmetric runs seed their second level with one advanced step.
pub fn simulate(
    scenario: &Scenario,
    variant: SchemeVariant,
    params: &ParticleParams,
    steps: usize,
    law: TransmissionLaw,
) -> Result<Vec<WorldlinePoint>> {
    let (field, x0, v0) = scenario.build(params);
    let field = field.as_ref();
    let mut worldline = Vec::with_capacity(steps + 1);
    worldline.push(WorldlinePoint::start(x0, v0));

    match variant {
        SchemeVariant::Retarded => {
            for _ in 0..steps {
                let next =
                    step_nonrel_retarded(worldline.last().unwrap(), field, params, law);
                worldline.push(next);
            }
        }
        SchemeVariant::Advanced => {
            for _ in 0..steps {
                let next = step_nonrel_advanced(worldline.last().unwrap(), field, params);
                worldline.push(next);
            }
        }
        SchemeVariant::Symmetric => {
            if steps >= 1 {
                let first = step_nonrel_advanced(&worldline[0], field, params);
                worldline.push(first);
                for _ in 1..steps {
                    let n = worldline.len();
                    let next = step_nonrel_symmetric(
                        &worldline[n - 2],
                        &worldline[n - 1],
                        field,
                        params,
                    );
                    worldline.push(next);
                }
            }
        }
    }
    Ok(worldline)
}

/// Relativistic counterpart of [`simulate`]; the initial four-velocity is
/// lifted from the coordinate velocity of the scenario.
pub fn simulate_rel(
    scenario: &Scenario,
    variant: SchemeVariant,
    params: &ParticleParams,
    steps: usize,
    law: TransmissionLaw,
) -> Result<Vec<RelWorldlinePoint>> {
    let (field, x0, v0) = scenario.build(params);
    let field = field.as_ref();
    let u0 = FourVelocity::from_coordinate_velocity(v0)?;
    let mut worldline = Vec::with_capacity(steps + 1);
    worldline.push(RelWorldlinePoint::start(x0, u0));

    match variant {
        SchemeVariant::Retarded => {
            for _ in 0..steps {
                let next =
                    step_rel_retarded(worldline.last().unwrap(), field, params, law)?;
                worldline.push(next);
            }
        }
        SchemeVariant::Advanced => {
            for _ in 0..steps {
                let next = step_rel_advanced(worldline.last().unwrap(), field, params)?;
                worldline.push(next);
            }
        }
        SchemeVariant::Symmetric => {
            if steps >= 1 {
                let first = step_rel_advanced(&worldline[0], field, params)?;
                worldline.push(first);
                for _ in 1..steps {
                    let n = worldline.len();
                    let next = step_rel_symmetric(
                        &worldline[n - 2],
                        &worldline[n - 1],
                        field,
                        params,
                    )?;
                    worldline.push(next);
                }
            }
        }
    }
    Ok(worldline)
}

/// Integrate the Abraham-Lorentz baseline over the same scenario fields with
/// an RK4 step `dt` and initial acceleration `a0`; steps + 1 samples.
pub fn simulate_abraham_lorentz(
    scenario: &Scenario,
    params: &ParticleParams,
    dt: f64,
    steps: usize,
    a0: Vector3<f64>,
) -> Result<Vec<ALState>> {
    let (field, x0, v0) = scenario.build(params);
    let field = field.as_ref();
    let mut state = ALState {
        position: x0,
        velocity: v0,
        acceleration: a0,
    };
    let mut worldline = Vec::with_capacity(steps + 1);
    worldline.push(state);
    for k in 0..steps {
        state = step_abraham_lorentz(&state, field, k as f64 * dt, dt, params)?;
        worldline.push(state);
    }
    Ok(worldline)
}
