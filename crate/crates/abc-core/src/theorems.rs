//! The system's physical identities as machine-checkable propositions.
//!
//! Everything here is stated over engine or oracle outputs:
//!
//! * virial theorem `2<T> = <r dV/dr>` with the centrifugal term counted
//!   as kinetic energy, and its Coulomb corollaries `<T> = -E`, `<V> = 2E`;
//! * the generalized Schwinger identity `Z <r^-2> = alpha(alpha+1) <r^-3>`
//!   (in units `hbar^2/m = e^2 a0`), valid only for `alpha > 0` since the
//!   flux removes the s-wave;
//! * modified-Bohr-orbit statistics for nodeless states: most probable
//!   radius, mean radius, fluctuation, and the ratio `1/sqrt(2 n_eff + 1)`;
//! * the kinetic-energy split between centrifugal and radial motion;
//! * flux sweeps with their documented monotonicities.

use crate::error::{Error, Result};
use crate::model::{state_3d, QuantumState3D};
use crate::moments::{moment, Moment};
use crate::oracle::{kinetic_weighted_integral, oracle_moment};
use crate::report::{CheckReport, MomentRow, MomentTable, RowStatus};
use crate::scalar::{FloatScalar, Scalar};

/// Radial statistics of a nodeless (modified-Bohr-orbit) state.
#[derive(Debug, Clone, PartialEq)]
pub struct OrbitStats<S: Scalar> {
    /// Maximizer of the radial probability density, `n_eff^2` in `a0/Z`.
    pub r_most: S,
    /// `<r> = n_eff^2 + n_eff/2`.
    pub r_mean: S,
    /// `sqrt(<r^2> - <r>^2) = sqrt(n_eff^3/2 + n_eff^2/4)`.
    pub delta_r: S,
    /// `delta_r / r_mean = 1/sqrt(2 n_eff + 1)`.
    pub ratio: S,
}

/// Energy fractions `<T>/E` and `<V>/E` for a homogeneous potential of
/// degree `nu`: `(nu/(nu+2), 2/(nu+2))`. The Coulomb case is `nu = -1`;
/// `nu = 2` gives the equal-split oscillator values. Documented identity
/// only; nothing outside `nu = -1` is solved here.
pub fn homogeneous_virial_fractions<S: Scalar>(nu: i64) -> Result<(S, S)> {
    if nu == -2 {
        return Err(Error::domain("virial fractions are singular at nu = -2"));
    }
    Ok((S::from_ratio(nu, nu + 2), S::from_ratio(2, nu + 2)))
}

/// Virial suite for one state, with the kinetic side assembled from
/// oracle integrals (never from the energy):
/// `<T> = Z^2 [K_0/2 + alpha(alpha+1) <r^-2>/2]`.
pub fn virial_checks<S: FloatScalar>(
    state: &QuantumState3D<S>,
    tol: f64,
) -> Result<Vec<CheckReport>> {
    let label = state.label();
    let alpha = state.alpha();
    let z_sq = *state.z() * *state.z();
    let k0 = kinetic_weighted_integral(state, 0)?;
    let m_minus1 = oracle_moment(state, -S::one())?;
    let m_minus2 = oracle_moment(state, -S::from_int(2))?;
    let two = S::from_int(2);

    let kinetic = z_sq * (k0 / two + alpha * (alpha + S::one()) * m_minus2 / two);
    let potential = -z_sq * m_minus1;
    let r_dv_dr = z_sq * m_minus1;
    let energy = state.energy();

    Ok(vec![
        CheckReport::compare("virial-2T-equals-r-dVdr", &label, &(two * kinetic), &r_dv_dr, tol),
        CheckReport::compare("virial-kinetic-equals-minus-E", &label, &kinetic, &(-energy), tol),
        CheckReport::compare(
            "virial-potential-equals-2E",
            &label,
            &potential,
            &(two * energy),
            tol,
        ),
    ])
}

/// Generalized Schwinger identity over engine closed forms:
/// `Z <r^-2> = alpha(alpha+1) <r^-3>`, both sides in units `e^2 Z^2/a0^2`.
pub fn schwinger_check<S: Scalar>(state: &QuantumState3D<S>, tol: f64) -> Result<CheckReport> {
    let alpha = state.alpha();
    if !(alpha > S::zero()) {
        return Err(Error::SWaveExcluded);
    }
    let z_cubed = state.z().clone() * state.z().clone() * state.z().clone();
    let lhs = z_cubed.clone() * moment(state, -2)?.value;
    let rhs = alpha.clone() * (alpha + S::one()) * z_cubed * moment(state, -3)?.value;
    Ok(CheckReport::compare(
        "schwinger-identity",
        state.label(),
        &lhs,
        &rhs,
        tol,
    ))
}

/// Schwinger identity over oracle moments (numeric, integral-based).
pub fn schwinger_check_oracle<S: FloatScalar>(
    state: &QuantumState3D<S>,
    tol: f64,
) -> Result<CheckReport> {
    let alpha = state.alpha();
    if !(alpha > S::zero()) {
        return Err(Error::SWaveExcluded);
    }
    let z_cubed = *state.z() * *state.z() * *state.z();
    let lhs = z_cubed * oracle_moment(state, -S::from_int(2))?;
    let rhs = alpha * (alpha + S::one()) * z_cubed * oracle_moment(state, -S::from_int(3))?;
    Ok(CheckReport::compare(
        "schwinger-identity-oracle",
        state.label(),
        &lhs,
        &rhs,
        tol,
    ))
}

/// Orbit statistics of a nodeless state (`n = 0`, where
/// `alpha = n_eff - 1`); errors with `NotCircular` otherwise.
pub fn orbit_stats<S: FloatScalar>(state: &QuantumState3D<S>) -> Result<OrbitStats<S>> {
    if state.n() != 0 {
        return Err(Error::NotCircular { n: state.n() });
    }
    let n_eff = state.n_eff();
    let two = S::from_int(2);
    let four = S::from_int(4);
    let r_most = n_eff * n_eff;
    let r_mean = n_eff * n_eff + n_eff / two;
    let delta_r = (n_eff * n_eff * n_eff / two + n_eff * n_eff / four).sqrt();
    let ratio = S::one() / (two * n_eff + S::one()).sqrt();
    Ok(OrbitStats {
        r_most,
        r_mean,
        delta_r,
        ratio,
    })
}

/// The same statistics squared, exact in any scalar: returns
/// `(r_most, r_mean, delta_r^2, ratio^2)`. Useful where square roots are
/// not available (rational mode); `ratio^2 (2 n_eff + 1) = 1` is the
/// algebraic form of the fluctuation-ratio law.
pub fn orbit_stats_squared<S: Scalar>(state: &QuantumState3D<S>) -> Result<(S, S, S, S)> {
    if state.n() != 0 {
        return Err(Error::NotCircular { n: state.n() });
    }
    let n_eff = state.n_eff();
    let two = S::from_int(2);
    let four = S::from_int(4);
    let r_most = n_eff.clone() * n_eff.clone();
    let r_mean = n_eff.clone() * n_eff.clone() + n_eff.clone() / two.clone();
    let delta_sq = n_eff.clone() * n_eff.clone() * n_eff.clone() / two.clone()
        + n_eff.clone() * n_eff.clone() / four;
    let ratio_sq = delta_sq.clone() / (r_mean.clone() * r_mean.clone());
    Ok((r_most, r_mean, delta_sq, ratio_sq))
}

/// Closed-form kinetic split of a nodeless state: the centrifugal fraction
/// `r_c = alpha(alpha+1)/((alpha+1/2) n_eff)` and the radial fraction
/// `r_r = 1/(2 n_eff - 1)` of the total kinetic energy. Their sum is 1,
/// which is a theorem (not a construction) since the two are computed
/// independently.
pub fn kinetic_ratios<S: Scalar>(state: &QuantumState3D<S>) -> Result<(S, S)> {
    if state.n() != 0 {
        return Err(Error::NotCircular { n: state.n() });
    }
    let alpha = state.alpha();
    let n_eff = state.n_eff();
    let half = S::from_ratio(1, 2);
    let r_c = alpha.clone() * (alpha.clone() + S::one()) / ((alpha + half) * n_eff.clone());
    let r_r = S::one() / (S::from_int(2) * n_eff - S::one());
    Ok((r_c, r_r))
}

/// Kinetic split recomputed from oracle integrals:
/// `r_c = <V_cf>/<T>` and `r_r = <p_r^2/2m>/<T>`.
pub fn kinetic_ratios_oracle<S: FloatScalar>(state: &QuantumState3D<S>) -> Result<(S, S)> {
    if state.n() != 0 {
        return Err(Error::NotCircular { n: state.n() });
    }
    let alpha = state.alpha();
    let two = S::from_int(2);
    let k0 = kinetic_weighted_integral(state, 0)?;
    let m_minus2 = oracle_moment(state, -two)?;
    let radial = k0 / two;
    let centrifugal = alpha * (alpha + S::one()) * m_minus2 / two;
    let total = radial + centrifugal;
    Ok((centrifugal / total, radial / total))
}

/// Engine moments of `(n, q, k, Z)` across a grid of flux values.
/// Divergent or out-of-window rows are reported in their status field.
pub fn flux_sweep<S: Scalar>(
    n: u32,
    q: u32,
    k: i32,
    z: S,
    mu0_grid: &[S],
    lambda: i32,
) -> Result<MomentTable<S>> {
    let mut table = MomentTable::default();
    for mu0 in mu0_grid {
        let state = state_3d(n, q, k, mu0.clone(), z.clone())?;
        let (engine, status) = match moment(&state, lambda) {
            Ok(Moment { value, .. }) => (Some(value), RowStatus::Ok),
            Err(e) => (None, RowStatus::from_error(&e)),
        };
        table.rows.push(MomentRow {
            n,
            q: Some(q),
            k,
            mu0: mu0.clone(),
            z: z.clone(),
            lambda,
            engine,
            oracle: None,
            rel_err: None,
            status,
        });
    }
    Ok(table)
}
