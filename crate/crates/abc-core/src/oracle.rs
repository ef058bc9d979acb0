//! Independent ground truth: explicit normalized eigenfunctions and
//! brute-force moment integrals that never touch the recurrence.
//!
//! In dimensionless units `x = Z r / a0` the normalized radial function is
//!
//! ```text
//! u(x) = N x^(alpha+1) e^(-x/n_eff) L_n^(2alpha+1)(2x/n_eff)
//! N^2  = s^(2alpha+3) n! / (2 n_eff Gamma(n + 2alpha + 2)),  s = 2/n_eff
//! ```
//!
//! (the 2D function is the same expression under `alpha = alpha_tilde - 1/2`,
//! `n_eff = n_eff2`, with `integral chi^2 d rho = 1` as the normalization
//! measure; any azimuthal 2 pi factor is absorbed into `N`).
//!
//! Moments are evaluated along two independent routes that cross-check
//! each other:
//!
//! * **Gamma series**: expanding `L_n^2` in monomials gives
//!   `<x^lambda> = s^-lambda * [Sum_ij c_i c_j Gamma(lambda+2alpha+3+i+j)]
//!   / [Sum_ij c_i c_j Gamma(2alpha+3+i+j)]`. For integer `lambda` the
//!   Gamma ratios collapse to rising factorials and the whole expression
//!   is a rational function of `(alpha, n_eff)`, evaluated here in exact
//!   arithmetic (the alternating monomial sum cancels catastrophically in
//!   floating point for large `n`, the exact route does not). Non-integer
//!   `lambda` falls back to log-gamma floating point.
//! * **Quadrature**: with the weight `t^(lambda+2alpha+2) e^(-t)` absorbed
//!   into a generalized Gauss-Laguerre rule the remaining integrand is the
//!   degree-2n polynomial `L_n^2`, integrated exactly by any rule with
//!   more than n nodes; every summand is positive, so no cancellation.

use num::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::model::{QuantumState2D, QuantumState3D, RadialParams};
use crate::moments::AdmissibilityWindow;
use crate::scalar::{int_pow, rising_factorial, FloatScalar, Scalar};
use crate::specfun::{
    gauss_laguerre, laguerre_deriv, laguerre_eval, laguerre_second_deriv, log_gamma,
    LaguerreBasis,
};

/// Relative agreement demanded of the two oracle routes (scaled up for
/// scalar types coarser than f64).
const PATH_AGREEMENT_TOL: f64 = 1e-10;

/// A normalized bound-state radial function in closed form.
#[derive(Debug, Clone)]
pub struct RadialWavefunction<S: FloatScalar> {
    params: RadialParams<S>,
    z: S,
    norm: S,
    basis: LaguerreBasis<S>,
}

impl<S: FloatScalar> RadialWavefunction<S> {
    fn build(params: RadialParams<S>, z: S) -> Result<Self> {
        let two = S::from_int(2);
        let a = two * params.alpha + S::one();
        let norm = normalization_constant(&params)?;
        let basis = LaguerreBasis::new(params.n, a)?;
        Ok(RadialWavefunction {
            params,
            z,
            norm,
            basis,
        })
    }

    pub fn params(&self) -> &RadialParams<S> {
        &self.params
    }

    pub fn basis(&self) -> &LaguerreBasis<S> {
        &self.basis
    }

    /// Exponential scale `s = 2Z/(n_eff a0)` of the physical profile.
    pub fn scale(&self) -> S {
        S::from_int(2) * self.z / self.params.n_eff
    }

    /// Normalization constant of the dimensionless profile in `x = Zr/a0`.
    pub fn norm_constant(&self) -> S {
        self.norm
    }

    /// u(x), normalized so that `integral u^2 dx = 1`.
    pub fn eval(&self, x: S) -> S {
        let s = S::from_int(2) / self.params.n_eff;
        let t = s * x;
        let a = self.basis.parameter();
        self.norm
            * x.powf(self.params.alpha + S::one())
            * (-t / S::from_int(2)).exp()
            * laguerre_eval(self.params.n, a, &t)
    }

    /// du/dx from the Laguerre differentiation identity.
    pub fn eval_derivative(&self, x: S) -> S {
        let s = S::from_int(2) / self.params.n_eff;
        let t = s * x;
        let a = self.basis.parameter();
        let l = laguerre_eval(self.params.n, a, &t);
        let dl = laguerre_deriv(self.params.n, a, &t);
        let bracket = (self.params.alpha + S::one() - t / S::from_int(2)) * l + t * dl;
        self.norm
            * x.powf(self.params.alpha)
            * (-t / S::from_int(2)).exp()
            * bracket
    }

    /// d2u/dx2, fully analytic.
    pub fn eval_second_derivative(&self, x: S) -> S {
        let two = S::from_int(2);
        let s = two / self.params.n_eff;
        let t = s * x;
        let a = self.basis.parameter();
        let alpha = self.params.alpha;
        let l = laguerre_eval(self.params.n, a, &t);
        let dl = laguerre_deriv(self.params.n, a, &t);
        let ddl = laguerre_second_deriv(self.params.n, a, &t);
        // u = N x^(alpha+1) e^(-t/2) L(t); differentiate twice in x (t = s x)
        let ap1 = alpha + S::one();
        let poly = ap1 * (ap1 - S::one()) / (x * x) * l
            + two * ap1 / x * (dl * s - s / two * l)
            + s * s * (ddl - dl + l / S::from_int(4));
        self.norm * x.powf(ap1) * (-t / two).exp() * poly
    }

    /// Scaled residual of `u'' + [2/x - alpha(alpha+1)/x^2 - 1/n_eff^2] u = 0`
    /// at `x`: the identity holds when this is ~0 relative to the largest
    /// participating term.
    pub fn ode_residual(&self, x: S) -> S {
        let u = self.eval(x);
        let ddu = self.eval_second_derivative(x);
        let coulomb = S::from_int(2) / x * u;
        let centrifugal = -(self.params.alpha * (self.params.alpha + S::one())) / (x * x) * u;
        let energy = -u / (self.params.n_eff * self.params.n_eff);
        let residual = ddu + coulomb + centrifugal + energy;
        let scale = ddu.abs() + coulomb.abs() + centrifugal.abs() + energy.abs();
        if scale > S::zero() {
            residual / scale
        } else {
            residual
        }
    }

    /// Sign changes of u on a fine grid: the number of radial nodes.
    pub fn count_nodes(&self, x_max: S, samples: usize) -> usize {
        let mut nodes = 0;
        let mut prev = S::zero();
        for i in 1..=samples {
            let x = x_max * S::from_f64(i as f64 / samples as f64).unwrap();
            let v = self.eval(x);
            if v != S::zero() && prev != S::zero() && (v > S::zero()) != (prev > S::zero()) {
                nodes += 1;
            }
            if v != S::zero() {
                prev = v;
            }
        }
        nodes
    }
}

/// `ln` of the squared normalization constant, then exponentiated:
/// `N^2 = s^(2alpha+3) n! / (2 n_eff Gamma(n+2alpha+2))`.
fn normalization_constant<S: FloatScalar>(params: &RadialParams<S>) -> Result<S> {
    let two = S::from_int(2);
    let s = two / params.n_eff;
    let n_f = S::from_f64(params.n as f64).unwrap();
    let exponent = two * params.alpha + S::from_int(3);
    let ln_norm_sq = exponent * s.ln() + log_gamma(n_f + S::one())?
        - (two * params.n_eff).ln()
        - log_gamma(n_f + two * params.alpha + two)?;
    Ok((ln_norm_sq / two).exp())
}

/// `n!/(2 n_eff Gamma(n+2alpha+2))`: the dimensionless prefactor
/// `N^2 s^-(2alpha+3)` shared by all quadrature-path integrals.
fn dimensionless_prefactor<S: FloatScalar>(params: &RadialParams<S>) -> Result<S> {
    let two = S::from_int(2);
    let n_f = S::from_f64(params.n as f64).unwrap();
    let ln = log_gamma(n_f + S::one())? - (two * params.n_eff).ln()
        - log_gamma(n_f + two * params.alpha + two)?;
    Ok(ln.exp())
}

pub fn build_wavefunction<S: FloatScalar>(state: &QuantumState3D<S>) -> Result<RadialWavefunction<S>> {
    RadialWavefunction::build(state.radial(), *state.z())
}

pub fn build_wavefunction_2d<S: FloatScalar>(
    state: &QuantumState2D<S>,
) -> Result<RadialWavefunction<S>> {
    RadialWavefunction::build(state.radial(), *state.z())
}

/// Default node count: exactness needs n+1 nodes, the margin covers the
/// kinetic integrand (degree 2n+2) and rounding.
fn node_count(n: u32, lambda: f64) -> usize {
    (n as usize + 8 + (lambda.abs() / 2.0).ceil() as usize).clamp(20, 200)
}

/// `<r^lambda>` by the Gamma series, exact arithmetic, integer `lambda`.
pub fn moment_series_exact(
    params: &RadialParams<BigRational>,
    lambda: i32,
) -> Result<BigRational> {
    let window = AdmissibilityWindow::from_alpha(params.alpha.clone());
    let lam = BigRational::from_int(lambda as i64);
    if !window.moment_exists(&lam) {
        return Err(Error::DivergentMoment {
            lambda: lambda as f64,
            bound: window.finite_bound().to_f64_lossy(),
        });
    }
    let two = BigRational::from_int(2);
    let a = two.clone() * params.alpha.clone() + BigRational::one();
    let basis = LaguerreBasis::new(params.n, a)?;
    let d = pairwise_coefficient_sums(basis.coefficients());

    let base = two.clone() * params.alpha.clone() + BigRational::from_int(3);
    let shifted = base.clone() + lam;
    let numerator = pochhammer_series(&d, &shifted);
    let denominator = pochhammer_series(&d, &base);

    // Gamma(base + lambda) / Gamma(base) as a rising-factorial ratio
    let gamma_ratio = if lambda >= 0 {
        rising_factorial(&base, lambda as u32)
    } else {
        BigRational::one() / rising_factorial(&shifted, (-lambda) as u32)
    };

    // s^-lambda with s = 2/n_eff
    let scale_power = int_pow(&(params.n_eff.clone() / two), lambda);
    Ok(scale_power * gamma_ratio * numerator / denominator)
}

/// `Sum_m d_m (x)_m` with `d_m = Sum_{i+j=m} c_i c_j`.
fn pochhammer_series(d: &[BigRational], x: &BigRational) -> BigRational {
    let mut acc = BigRational::zero();
    let mut rising = BigRational::one();
    for (m, dm) in d.iter().enumerate() {
        if m > 0 {
            rising = rising * (x.clone() + BigRational::from_int(m as i64 - 1));
        }
        acc = acc + dm.clone() * rising.clone();
    }
    acc
}

fn pairwise_coefficient_sums(c: &[BigRational]) -> Vec<BigRational> {
    let n = c.len();
    let mut d = vec![BigRational::zero(); 2 * n - 1];
    for (i, ci) in c.iter().enumerate() {
        for (j, cj) in c.iter().enumerate() {
            d[i + j] = d[i + j].clone() + ci.clone() * cj.clone();
        }
    }
    d
}

/// Gamma-series moment on float parameters. Integer `lambda` routes
/// through exact arithmetic; non-integer `lambda` uses log-gamma floats
/// (adequate for moderate `n`; the cross-check against quadrature guards
/// the ill-conditioned corners).
pub fn moment_series<S: FloatScalar>(params: &RadialParams<S>, lambda: S) -> Result<S> {
    if lambda.fract() == S::zero() && lambda.abs() < S::from_f64(1e6).unwrap() {
        let exact = RadialParams {
            n: params.n,
            alpha: to_exact(params.alpha)?,
            n_eff: to_exact(params.n_eff)?,
        };
        let lam = lambda.to_f64_lossy() as i32;
        return Ok(S::from_f64(moment_series_exact(&exact, lam)?.to_f64_lossy())
            .expect("moment fits in the scalar type"));
    }

    let window = AdmissibilityWindow::from_alpha(params.alpha);
    if !window.moment_exists(&lambda) {
        return Err(Error::DivergentMoment {
            lambda: lambda.to_f64_lossy(),
            bound: window.finite_bound().to_f64_lossy(),
        });
    }
    let two = S::from_int(2);
    let a = two * params.alpha + S::one();
    let basis = LaguerreBasis::new(params.n, a)?;
    let c = basis.coefficients();
    let base = two * params.alpha + S::from_int(3);
    let series = |x: S| -> S {
        let mut acc = S::zero();
        for (i, ci) in c.iter().enumerate() {
            for (j, cj) in c.iter().enumerate() {
                acc = acc + *ci * *cj * rising_factorial(&x, (i + j) as u32);
            }
        }
        acc
    };
    let gamma_ratio = (log_gamma(base + lambda)? - log_gamma(base)?).exp();
    let s = two / params.n_eff;
    let scale_power = (-lambda * s.ln()).exp();
    Ok(scale_power * gamma_ratio * series(base + lambda) / series(base))
}

/// `<r^lambda>` by generalized Gauss-Laguerre quadrature.
pub fn moment_quadrature<S: FloatScalar>(params: &RadialParams<S>, lambda: S) -> Result<S> {
    let window = AdmissibilityWindow::from_alpha(params.alpha);
    if !window.moment_exists(&lambda) {
        return Err(Error::DivergentMoment {
            lambda: lambda.to_f64_lossy(),
            bound: window.finite_bound().to_f64_lossy(),
        });
    }
    let two = S::from_int(2);
    let beta = lambda + two * params.alpha + two;
    let rule = gauss_laguerre(beta, node_count(params.n, lambda.to_f64_lossy()))?;
    let a = two * params.alpha + S::one();
    let integral = rule.integrate(|t| {
        let l = laguerre_eval(params.n, &a, t);
        l * l
    });
    let s = two / params.n_eff;
    let prefactor = dimensionless_prefactor(params)?;
    Ok(prefactor * (-lambda * s.ln()).exp() * integral)
}

/// Two-path oracle moment for a 3D state; the routes must agree.
pub fn oracle_moment<S: FloatScalar>(state: &QuantumState3D<S>, lambda: S) -> Result<S> {
    oracle_moment_reduced(&state.radial(), lambda)
}

/// Two-path oracle moment for a 2D state.
pub fn oracle_moment_2d<S: FloatScalar>(state: &QuantumState2D<S>, lambda: S) -> Result<S> {
    oracle_moment_reduced(&state.radial(), lambda)
}

pub fn oracle_moment_reduced<S: FloatScalar>(params: &RadialParams<S>, lambda: S) -> Result<S> {
    let series = moment_series(params, lambda)?;
    let quadrature = moment_quadrature(params, lambda)?;
    let tol = S::from_f64(PATH_AGREEMENT_TOL)
        .unwrap()
        .max(S::epsilon() * S::from_f64(1e3).unwrap());
    let scale = series.abs().max(quadrature.abs());
    let rel = (series - quadrature).abs() / scale;
    if rel > tol {
        return Err(Error::OracleMismatch {
            series: series.to_f64_lossy(),
            quadrature: quadrature.to_f64_lossy(),
            rel: rel.to_f64_lossy(),
        });
    }
    Ok(series)
}

/// Exact-arithmetic oracle moment for a 3D state.
pub fn oracle_moment_exact(
    state: &QuantumState3D<BigRational>,
    lambda: i32,
) -> Result<BigRational> {
    moment_series_exact(&state.radial(), lambda)
}

/// Exact-arithmetic oracle moment for a 2D state.
pub fn oracle_moment_exact_2d(
    state: &QuantumState2D<BigRational>,
    lambda: i32,
) -> Result<BigRational> {
    moment_series_exact(&state.radial(), lambda)
}

/// `K_lambda = integral x^lambda (du/dx)^2 dx` from the analytic
/// derivative; defined for `lambda > -(2 alpha + 1)`.
///
/// For a true eigenfunction this equals
/// `[lambda(lambda-1)/2 - alpha(alpha+1)] M_{lambda-2} + 2 M_{lambda-1}
///  - M_lambda / n_eff^2`, which the theorem checks exercise.
pub fn kinetic_weighted_integral<S: FloatScalar>(
    state: &QuantumState3D<S>,
    lambda: i32,
) -> Result<S> {
    kinetic_weighted_integral_reduced(&state.radial(), lambda)
}

pub fn kinetic_weighted_integral_reduced<S: FloatScalar>(
    params: &RadialParams<S>,
    lambda: i32,
) -> Result<S> {
    let window = AdmissibilityWindow::from_alpha(params.alpha);
    let lam = S::from_int(lambda as i64);
    if !window.step_in_window(&lam) {
        return Err(Error::RecurrenceWindow {
            step: lambda as f64,
            bound: window.recurrence_bound().to_f64_lossy(),
        });
    }
    let two = S::from_int(2);
    let beta = lam + two * params.alpha;
    let rule = gauss_laguerre(beta, node_count(params.n, lambda as f64))?;
    let a = two * params.alpha + S::one();
    // du/dx = N x^alpha e^(-t/2) P(t), P = (alpha+1-t/2) L + t L'
    let integral = rule.integrate(|t| {
        let l = laguerre_eval(params.n, &a, t);
        let dl = laguerre_deriv(params.n, &a, t);
        let p = (params.alpha + S::one() - *t / two) * l + *t * dl;
        p * p
    });
    // K = N^2 s^-(lambda+2alpha+1) integral = prefactor * s^(2-lambda) * integral
    let s = two / params.n_eff;
    let prefactor = dimensionless_prefactor(params)?;
    Ok(prefactor * ((two - lam) * s.ln()).exp() * integral)
}

/// Overlap `integral u_a u_b dx` of two states sharing `alpha` (and hence
/// the Laguerre parameter) but with arbitrary degrees and scales.
pub fn overlap<S: FloatScalar>(
    a: &RadialWavefunction<S>,
    b: &RadialWavefunction<S>,
) -> Result<S> {
    let two = S::from_int(2);
    let alpha = a.params.alpha;
    let s_a = two / a.params.n_eff;
    let s_b = two / b.params.n_eff;
    let c = (s_a + s_b) / two;
    let beta = two * alpha + two;
    let rule = gauss_laguerre(beta, node_count(a.params.n + b.params.n, 0.0))?;
    let pa = a.basis.parameter();
    let pb = b.basis.parameter();
    let integral = rule.integrate(|t| {
        laguerre_eval(a.params.n, pa, &(s_a / c * *t))
            * laguerre_eval(b.params.n, pb, &(s_b / c * *t))
    });
    let log_c_power = -(two * alpha + S::from_int(3)) * c.ln();
    Ok(a.norm * b.norm * log_c_power.exp() * integral)
}

fn to_exact<S: FloatScalar>(value: S) -> Result<BigRational> {
    value
        .to_rational_exact()
        .ok_or(Error::NotRational { value: value.to_f64_lossy() })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::{state_2d, state_3d};
    use crate::moments::moment;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::from_ratio(n, d)
    }

    #[test]
    fn hydrogen_ground_state_profile() {
        // u(x) = 2 x e^-x
        let s = state_3d(0, 0, 0, 0.0f64, 1.0).unwrap();
        let wf = build_wavefunction(&s).unwrap();
        assert!((wf.norm_constant() - 2.0).abs() < 1e-14);
        assert!((wf.scale() - 2.0).abs() < 1e-15);
        for x in [0.3, 1.0, 4.7] {
            assert!((wf.eval(x) - 2.0 * x * (-x as f64).exp()).abs() < 1e-14);
            let want_d = 2.0 * (1.0 - x) * (-x as f64).exp();
            assert!((wf.eval_derivative(x) - want_d).abs() < 1e-13);
        }
    }

    #[test]
    fn normalization_holds_by_quadrature() {
        for (n, q, k, mu0) in [
            (0u32, 0u32, 0i32, 0.5f64),
            (3, 1, -1, 0.25),
            (6, 2, 2, -0.99),
            (5, 6, 0, 0.77),
        ] {
            let s = state_3d(n, q, k, mu0, 1.0).unwrap();
            let m0 = moment_quadrature(&s.radial(), 0.0).unwrap();
            assert!(
                (m0 - 1.0).abs() < 1e-12,
                "norm for (n={n},q={q},k={k},mu0={mu0}): {m0}"
            );
        }
    }

    #[test]
    fn ode_residual_small_on_sample_grid() {
        for (n, q, k, mu0) in [(0u32, 0u32, 0i32, 0.0f64), (2, 1, -1, 0.5), (4, 0, 2, 0.9)] {
            let s = state_3d(n, q, k, mu0, 1.0).unwrap();
            let wf = build_wavefunction(&s).unwrap();
            let n_eff = s.n_eff();
            let x_max = 50.0 * n_eff * n_eff;
            let x_min: f64 = 1e-3;
            for i in 0..=60 {
                let x = x_min * (x_max / x_min).powf(i as f64 / 60.0);
                let r = wf.ode_residual(x).abs();
                assert!(r < 1e-8, "residual {r:e} at x={x} for {}", s.label());
            }
        }
    }

    #[test]
    fn node_count_equals_radial_quantum_number() {
        for n in [0u32, 1, 3, 5] {
            let s = state_3d(n, 1, 0, 0.3, 1.0).unwrap();
            let wf = build_wavefunction(&s).unwrap();
            let n_eff = s.n_eff();
            assert_eq!(wf.count_nodes(30.0 * n_eff * n_eff, 4000), n as usize);
        }
    }

    #[test]
    fn states_with_different_n_are_orthogonal() {
        let mk = |n| {
            let s = state_3d(n, 1, -1, 0.25f64, 1.0).unwrap();
            build_wavefunction(&s).unwrap()
        };
        for (na, nb) in [(0u32, 1u32), (0, 3), (2, 5), (1, 4)] {
            let o = overlap(&mk(na), &mk(nb)).unwrap();
            assert!(o.abs() < 1e-10, "overlap {na},{nb} = {o:e}");
        }
        // same state: overlap is the norm
        let o = overlap(&mk(2), &mk(2)).unwrap();
        assert!((o - 1.0).abs() < 1e-12);
    }

    #[test]
    fn oracle_moment_examples() {
        let s = state_3d(0, 0, 0, 0.0f64, 1.0).unwrap();
        assert!((oracle_moment(&s, 1.0).unwrap() - 1.5).abs() < 1e-13);
        let s = state_3d(0, 0, 0, 0.5f64, 1.0).unwrap();
        assert!((oracle_moment(&s, 1.0).unwrap() - 3.0).abs() < 1e-13);
        let s = state_3d(1, 0, 0, 0.0f64, 1.0).unwrap();
        assert!((oracle_moment(&s, -2.0).unwrap() - 0.25).abs() < 1e-14);
    }

    #[test]
    fn oracle_agrees_with_engine_on_a_hard_state() {
        let s = state_3d(4, 4, 2, 0.9f64, 1.0).unwrap();
        for lambda in [-4i32, -3, -1, 2, 6] {
            let engine = moment(&s, lambda).unwrap().value;
            let o = oracle_moment(&s, lambda as f64).unwrap();
            let rel = ((engine - o) / o).abs();
            assert!(rel < 1e-10, "lambda={lambda}: engine {engine} oracle {o}");
        }
    }

    #[test]
    fn exact_oracle_equals_exact_engine() {
        let sf = state_3d(3, 2, -2, 0.9f64, 2.0).unwrap();
        let se = sf.to_exact().unwrap();
        for lambda in [-4i32, -2, 1, 3, 5] {
            let engine = moment(&se, lambda).unwrap().value;
            let o = oracle_moment_exact(&se, lambda).unwrap();
            assert_eq!(engine, o, "lambda={lambda}");
        }
    }

    #[test]
    fn non_integer_lambda_paths_agree() {
        let s = state_3d(2, 1, 0, 0.25f64, 1.0).unwrap();
        for lambda in [0.5f64, -1.5, 2.25, -3.3] {
            let v = oracle_moment(&s, lambda).unwrap();
            assert!(v > 0.0);
        }
        // closed Gamma-ratio for the nodeless case: <x^l> = s^-l G(l+2a+3)/G(2a+3)
        let s = state_3d(0, 0, 0, 0.0f64, 1.0).unwrap();
        let lam = 0.5f64;
        let want = (log_gamma(3.5f64).unwrap() - log_gamma(3.0f64).unwrap()).exp()
            * 2f64.powf(-lam);
        assert!((oracle_moment(&s, lam).unwrap() - want).abs() < 1e-13);
    }

    #[test]
    fn divergent_moments_rejected_by_both_paths() {
        let s = state_3d(0, 0, 0, 0.0f64, 1.0).unwrap();
        assert!(matches!(
            moment_series(&s.radial(), -3.0),
            Err(Error::DivergentMoment { .. })
        ));
        assert!(matches!(
            moment_quadrature(&s.radial(), -3.0),
            Err(Error::DivergentMoment { .. })
        ));
        // real lambda right at the edge diverges too
        assert!(oracle_moment(&s, -2.9999).is_ok());
    }

    // frozen from direct symbolic integration
    #[test]
    fn kinetic_integrals_match_frozen_values() {
        let s = state_3d(0, 0, 0, 0.0f64, 1.0).unwrap();
        assert!((kinetic_weighted_integral(&s, 0).unwrap() - 1.0).abs() < 1e-13);
        let s = state_3d(0, 1, 0, 0.0f64, 1.0).unwrap();
        assert!((kinetic_weighted_integral(&s, 2).unwrap() - 1.5).abs() < 1e-13);
        assert!(
            (kinetic_weighted_integral(&s, 0).unwrap() - 1.0 / 12.0).abs() < 1e-14
        );
        let s = state_3d(1, 0, 0, 0.5f64, 1.0).unwrap();
        assert!(
            (kinetic_weighted_integral(&s, 0).unwrap() - 14.0 / 125.0).abs() < 1e-14
        );
        assert!((kinetic_weighted_integral(&s, 2).unwrap() - 3.25).abs() < 1e-12);
    }

    #[test]
    fn kinetic_window_violation_is_reported() {
        let s = state_3d(0, 0, 0, 0.0f64, 1.0).unwrap(); // alpha = 0, bound -1
        assert!(matches!(
            kinetic_weighted_integral(&s, -1),
            Err(Error::RecurrenceWindow { .. })
        ));
        assert!(kinetic_weighted_integral(&s, 0).is_ok());
    }

    #[test]
    fn kinetic_equals_moment_combination() {
        // K_lambda = [l(l-1)/2 - alpha(alpha+1)] M_{l-2} + 2 M_{l-1} - M_l / n_eff^2
        for (n, q, k, mu0, lambda) in [
            (0u32, 1u32, 0i32, 0.0f64, 2i32),
            (2, 0, 1, 0.25, 1),
            (1, 2, -1, 0.9, 3),
        ] {
            let s = state_3d(n, q, k, mu0, 1.0).unwrap();
            let alpha = s.alpha();
            let n_eff = s.n_eff();
            let m = |l: i32| moment(&s, l).unwrap().value;
            let want = (lambda as f64 * (lambda as f64 - 1.0) / 2.0
                - alpha * (alpha + 1.0))
                * m(lambda - 2)
                + 2.0 * m(lambda - 1)
                - m(lambda) / (n_eff * n_eff);
            let got = kinetic_weighted_integral(&s, lambda).unwrap();
            assert!(
                ((got - want) / want).abs() < 1e-10,
                "state ({n},{q},{k},{mu0}), lambda={lambda}: {got} vs {want}"
            );
        }
    }

    #[test]
    fn two_d_oracle_matches_engine_and_frozen_values() {
        let s = state_2d(0, 0, 0.0f64, 1.0).unwrap();
        assert!((oracle_moment_2d(&s, -1.0).unwrap() - 4.0).abs() < 1e-13);
        let s = state_2d(1, 1, 0.25f64, 1.0).unwrap();
        assert!(
            (oracle_moment_2d(&s, -3.0).unwrap() - 4096.0 / 139_755.0).abs() < 1e-14
        );
        assert!((oracle_moment_2d(&s, 2.0).unwrap() - 33_759.0 / 256.0).abs() < 1e-10);
        let se = state_2d(1, 1, rat(1, 4), rat(1, 1)).unwrap();
        assert_eq!(oracle_moment_exact_2d(&se, -2).unwrap(), rat(256, 6655));
    }

    #[test]
    fn two_d_normalization_and_ode() {
        let s = state_2d(2, -1, 0.3f64, 1.0).unwrap();
        let m0 = moment_quadrature(&s.radial(), 0.0).unwrap();
        assert!((m0 - 1.0).abs() < 1e-12);
        let wf = build_wavefunction_2d(&s).unwrap();
        // chi ~ x^(alpha_tilde + 1/2) near zero with the mapped alpha
        for x in [0.5, 2.0, 9.0] {
            assert!(wf.ode_residual(x).abs() < 1e-9);
        }
    }
}
