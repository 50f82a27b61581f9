//! Relativistic finite-difference steppers for the four-velocity.
//!
//! The retarded equation
//!
//! (m0/tau0) { u_mu(T) - u_mu(T - tau0)
//!             + u_mu(T) u_nu(T) [u_nu(T) - u_nu(T - tau0)] / c^2 }
//!     = (e/c) F_mu_nu(T) u_nu(T)
//!
//! determines only the component of the velocity jump orthogonal to u
//! (contracting with u^mu gives 0 = 0), so the time component is eliminated
//! through the mass shell u0 = sqrt(c^2 + |u_vec|^2) and the three spatial
//! equations are solved by damped fixed-point iteration. The advanced and
//! symmetric forms evaluate the nonlinear coefficients at the current tick
//! and are solved the same way.

use nalgebra::{Matrix3, Vector3, Vector4};

use super::field::EMField;
use super::ParticleParams;
use crate::constants::C_CM_PER_S;
use crate::error::{Error, Result};
use crate::scheme::SchemeVariant;

/// Contravariant four-velocity, signature (-,+,+,+), components in cm/s.
/// u0 >= c on the mass shell.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FourVelocity {
    u: Vector4<f64>,
}

impl FourVelocity {
    /// Lift a spatial four-velocity u_vec = gamma v onto the mass shell.
    pub fn from_spatial(u_vec: Vector3<f64>) -> Self {
        let c = C_CM_PER_S;
        let u0 = (c * c + u_vec.norm_squared()).sqrt();
        FourVelocity {
            u: Vector4::new(u0, u_vec.x, u_vec.y, u_vec.z),
        }
    }

    /// From a coordinate velocity v (|v| < c): u = gamma (c, v).
    pub fn from_coordinate_velocity(v: Vector3<f64>) -> Result<Self> {
        let c = C_CM_PER_S;
        let beta_sq = v.norm_squared() / (c * c);
        if beta_sq >= 1.0 {
            return Err(Error::NonPositive {
                name: "1 - v^2/c^2",
                value: 1.0 - beta_sq,
            });
        }
        let gamma = 1.0 / (1.0 - beta_sq).sqrt();
        Ok(FourVelocity {
            u: Vector4::new(gamma * c, gamma * v.x, gamma * v.y, gamma * v.z),
        })
    }

    pub fn time_component(&self) -> f64 {
        self.u.x
    }

    pub fn spatial(&self) -> Vector3<f64> {
        Vector3::new(self.u.y, self.u.z, self.u.w)
    }

    pub fn as_vector4(&self) -> Vector4<f64> {
        self.u
    }

    /// Minkowski square u_mu u^mu = -(u0)^2 + |u_vec|^2; -c^2 on shell.
    pub fn minkowski_norm_sq(&self) -> f64 {
        -self.u.x * self.u.x + self.spatial().norm_squared()
    }

    /// |u_mu u^mu + c^2| / c^2.
    pub fn mass_shell_residual(&self) -> f64 {
        let c2 = C_CM_PER_S * C_CM_PER_S;
        (self.minkowski_norm_sq() + c2).abs() / c2
    }

    /// Lorentz factor u0/c.
    pub fn gamma(&self) -> f64 {
        self.u.x / C_CM_PER_S
    }

    /// Coordinate velocity v = c u_vec / u0.
    pub fn coordinate_velocity(&self) -> Vector3<f64> {
        self.spatial() * (C_CM_PER_S / self.u.x)
    }
}

/// Relativistic worldline sample: proper time tick, four-position
/// (x0 = ct, x, y, z in cm) and four-velocity.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RelWorldlinePoint {
    pub tick: u64,
    /// Proper time in seconds, tick * tau0.
    pub proper_time: f64,
    pub position: Vector4<f64>,
    pub velocity: FourVelocity,
}

impl RelWorldlinePoint {
    pub fn start(position: Vector3<f64>, velocity: FourVelocity) -> Self {
        RelWorldlinePoint {
            tick: 0,
            proper_time: 0.0,
            position: Vector4::new(0.0, position.x, position.y, position.z),
            velocity,
        }
    }

    /// Lab time x0/c at this sample.
    pub fn lab_time(&self) -> f64 {
        self.position.x / C_CM_PER_S
    }

    pub fn spatial_position(&self) -> Vector3<f64> {
        Vector3::new(self.position.y, self.position.z, self.position.w)
    }

    /// Kinetic energy (gamma - 1) m c^2 in erg.
    pub fn kinetic_energy(&self, params: &ParticleParams) -> f64 {
        (self.velocity.gamma() - 1.0) * params.mass() * C_CM_PER_S * C_CM_PER_S
    }
}

const MAX_ITERATIONS: usize = 50;
const REL_TOL: f64 = 1e-12;

/// Spatial part of (tau_factor e / (m c)) F_mu_nu u^nu at the contraction
/// velocity `u`: tau_factor e/(m c) [E u0 + u_vec x B].
fn force_term(
    e_field: &Vector3<f64>,
    b_field: &Vector3<f64>,
    u: &FourVelocity,
    coef: f64,
) -> Vector3<f64> {
    (e_field * u.time_component() + u.spatial().cross(b_field)) * coef
}

/// Matrix form of w -> w x B.
fn cross_with(b: &Vector3<f64>) -> Matrix3<f64> {
    Matrix3::new(
        0.0, b.z, -b.y, //
        -b.z, 0.0, b.x, //
        b.y, -b.x, 0.0,
    )
}

/// Lower the index of a contravariant four-vector: (u0, u) -> (-u0, u).
fn lower(u: Vector4<f64>) -> Vector4<f64> {
    Vector4::new(-u.x, u.y, u.z, u.w)
}

/// Minkowski inner product of two lower-index four-vectors.
fn mdot_low(a: &Vector4<f64>, b: &Vector4<f64>) -> f64 {
    -a.x * b.x + a.y * b.y + a.z * b.z + a.w * b.w
}

/// Lower-index force term phi_mu = coef F_mu_nu u^nu.
fn phi_low(
    field: &dyn EMField,
    t: f64,
    position: &Vector3<f64>,
    u: &FourVelocity,
    coef: f64,
) -> Vector4<f64> {
    field.faraday(t, position) * u.as_vector4() * coef
}

/// Damped Newton on the three spatial residual equations, with the time
/// component eliminated via the mass shell. Relative tolerance 1e-12 on the
/// residual, at most 50 iterations.
fn solve_newton<R, J>(mut w: Vector3<f64>, residual: R, jacobian: J) -> Result<Vector3<f64>>
where
    R: Fn(&Vector3<f64>) -> Vector3<f64>,
    J: Fn(&Vector3<f64>) -> Matrix3<f64>,
{
    let mut g = residual(&w);
    for _ in 0..MAX_ITERATIONS {
        let scale = C_CM_PER_S.max(w.norm());
        if g.norm() <= REL_TOL * scale {
            return Ok(w);
        }
        let fail = Error::StepNotConverged {
            iterations: MAX_ITERATIONS,
            residual: g.norm() / scale,
        };
        let delta = match jacobian(&w).lu().solve(&(-g)) {
            Some(delta) => delta,
            None => return Err(fail),
        };
        // halve the step until the residual shrinks
        let mut step = 1.0;
        let mut improved = false;
        for _ in 0..30 {
            let w_trial = w + delta * step;
            let g_trial = residual(&w_trial);
            if g_trial.norm() < g.norm() {
                w = w_trial;
                g = g_trial;
                improved = true;
                break;
            }
            step *= 0.5;
        }
        if !improved {
            return Err(fail);
        }
    }
    let scale = C_CM_PER_S.max(w.norm());
    if g.norm() <= REL_TOL * scale {
        Ok(w)
    } else {
        Err(Error::StepNotConverged {
            iterations: MAX_ITERATIONS,
            residual: g.norm() / scale,
        })
    }
}

/// Retarded relativistic step: solves for u(T) given u(T - tau0) and the
/// field at the new tick, then advances the four-position by the chosen
/// transmission law (averaged by default; see the non-relativistic stepper
/// for the printed variant).
pub fn step_rel_retarded(
    state: &RelWorldlinePoint,
    field: &dyn EMField,
    params: &ParticleParams,
    law: super::nonrel::TransmissionLaw,
) -> Result<RelWorldlinePoint> {
    let tau0 = params.tau0();
    let c2 = C_CM_PER_S * C_CM_PER_S;
    let coef = params.charge() * tau0 / (params.mass() * C_CM_PER_S);
    let t_new = state.proper_time + tau0;
    let pos3 = state.spatial_position();
    let e_field = field.electric(t_new, &pos3);
    let b_field = field.magnetic(t_new, &pos3);

    let u_prev = state.velocity;
    let w_prev = u_prev.spatial();
    let u0_prev = u_prev.time_component();

    // unknowns are the new spatial components; u0 rides the mass shell.
    // s = u^mu (u_mu - u_prev,mu) with the lowered time component.
    let s_of = move |w: &Vector3<f64>, u0: f64| {
        u0 * (-u0 + u0_prev) + w.dot(&(w - w_prev))
    };
    let residual = |w: &Vector3<f64>| {
        let u = FourVelocity::from_spatial(*w);
        let s = s_of(w, u.time_component());
        let phi = force_term(&e_field, &b_field, &u, coef);
        (w - w_prev) + w * (s / c2) - phi
    };
    let jacobian = |w: &Vector3<f64>| {
        let u0 = FourVelocity::from_spatial(*w).time_component();
        let s = s_of(w, u0);
        let du0 = w / u0; // gradient of u0
        let ds = du0 * (-2.0 * u0 + u0_prev) + (2.0 * w - w_prev);
        Matrix3::identity() * (1.0 + s / c2) + w * ds.transpose() / c2
            - (e_field * du0.transpose() + cross_with(&b_field)) * coef
    };
    let w_new = solve_newton(w_prev, residual, jacobian)?;

    let u_new = FourVelocity::from_spatial(w_new);
    let displacement = match law {
        super::nonrel::TransmissionLaw::Averaged => {
            (u_new.as_vector4() + u_prev.as_vector4()) * (tau0 / 2.0)
        }
        super::nonrel::TransmissionLaw::Printed => {
            (u_new.as_vector4() - u_prev.as_vector4()) * (tau0 / 2.0)
        }
    };
    Ok(RelWorldlinePoint {
        tick: state.tick + 1,
        proper_time: t_new,
        position: state.position + displacement,
        velocity: u_new,
    })
}

/// Advanced relativistic step: u(T + tau0) from u(T) with the field and the
/// nonlinear coefficients at the current tick; position advances by
/// tau0 u(T).
///
/// The equation is linear in the new four-velocity up to a free component
/// along u(T) (the projector annihilates that direction), so the step is
/// solved in closed form: u_new = u + phi - u alpha/c^2 with alpha fixed by
/// the mass shell. No iteration, no spurious roots at large gamma.
pub fn step_rel_advanced(
    state: &RelWorldlinePoint,
    field: &dyn EMField,
    params: &ParticleParams,
) -> Result<RelWorldlinePoint> {
    let tau0 = params.tau0();
    let c2 = C_CM_PER_S * C_CM_PER_S;
    let coef = params.charge() * tau0 / (params.mass() * C_CM_PER_S);
    let pos3 = state.spatial_position();

    let u_curr = state.velocity;
    let u_curr_low = lower(u_curr.as_vector4());
    let phi = phi_low(field, state.proper_time, &pos3, &u_curr, coef);

    // shell condition: alpha^2/c^2 - 2 alpha - <phi,phi> = 0, branch
    // continuous with phi -> 0
    let phi_sq = mdot_low(&phi, &phi);
    let disc = 1.0 + phi_sq / c2;
    if disc < 0.0 {
        return Err(Error::StepNotConverged {
            iterations: 0,
            residual: disc.abs().sqrt(),
        });
    }
    let alpha = c2 * (1.0 - disc.sqrt());

    let u_new_low = u_curr_low + phi - u_curr_low * (alpha / c2);
    let u_new = FourVelocity::from_spatial(Vector3::new(u_new_low.y, u_new_low.z, u_new_low.w));
    Ok(RelWorldlinePoint {
        tick: state.tick + 1,
        proper_time: state.proper_time + tau0,
        position: state.position + u_curr.as_vector4() * tau0,
        velocity: u_new,
    })
}

/// Symmetric relativistic step: u(T + tau0) from u(T - tau0) and u(T), the
/// field at the current tick; position advances by
/// x(T + tau0) = x(T - tau0) + 2 tau0 u(T).
///
/// Linear in the unknown like the advanced step: u_new = u_prev + phi
/// - u_curr alpha/c^2 with alpha from the mass-shell quadratic.
pub fn step_rel_symmetric(
    prev: &RelWorldlinePoint,
    curr: &RelWorldlinePoint,
    field: &dyn EMField,
    params: &ParticleParams,
) -> Result<RelWorldlinePoint> {
    let tau0 = params.tau0();
    let c2 = C_CM_PER_S * C_CM_PER_S;
    let coef = 2.0 * params.charge() * tau0 / (params.mass() * C_CM_PER_S);
    let pos3 = curr.spatial_position();

    let u_prev = prev.velocity;
    let u_curr = curr.velocity;
    let u_prev_low = lower(u_prev.as_vector4());
    let u_curr_low = lower(u_curr.as_vector4());
    let phi = phi_low(field, curr.proper_time, &pos3, &u_curr, coef);

    // a = u_prev + phi; shell gives
    // alpha^2 + 2 alpha <u_prev, u_curr> - c^2 (<a,a> + c^2) = 0
    let a = u_prev_low + phi;
    let a_sq = mdot_low(&a, &a);
    let p = mdot_low(&u_prev_low, &u_curr_low);
    let disc = p * p + c2 * (a_sq + c2);
    if disc < 0.0 {
        return Err(Error::StepNotConverged {
            iterations: 0,
            residual: disc.abs().sqrt() / c2,
        });
    }
    let alpha = -p - disc.sqrt();

    let u_new_low = a - u_curr_low * (alpha / c2);
    let u_new = FourVelocity::from_spatial(Vector3::new(u_new_low.y, u_new_low.z, u_new_low.w));
    Ok(RelWorldlinePoint {
        tick: curr.tick + 1,
        proper_time: curr.proper_time + tau0,
        position: prev.position + u_curr.as_vector4() * (2.0 * tau0),
        velocity: u_new,
    })
}

/// Scheme dispatcher; the symmetric scheme needs the previous point too.
pub fn step_rel(
    variant: SchemeVariant,
    prev: Option<&RelWorldlinePoint>,
    state: &RelWorldlinePoint,
    field: &dyn EMField,
    params: &ParticleParams,
    law: super::nonrel::TransmissionLaw,
) -> Result<RelWorldlinePoint> {
    match variant {
        SchemeVariant::Retarded => step_rel_retarded(state, field, params, law),
        SchemeVariant::Advanced => step_rel_advanced(state, field, params),
        SchemeVariant::Symmetric => {
            let prev = prev.ok_or(Error::InsufficientData { needed: 2, got: 1 })?;
            step_rel_symmetric(prev, curr_ref(state), field, params)
        }
    }
}

fn curr_ref(state: &RelWorldlinePoint) -> &RelWorldlinePoint {
    state
}
