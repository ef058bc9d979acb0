//! Quantum numbers, flux conversion and exact energy spectra.
//!
//! A bound state of the Aharonov-Bohm-Coulomb system is labelled by
//! `(n, q, k)` in 3D or `(n, k)` in 2D, together with the dimensionless
//! flux factor `mu0` and the central charge `Z`. The flux enters every
//! observable only through the effective angular quantum number
//! `alpha = q + |k + mu0|` (3D) or `alpha_tilde = |k + mu0|` (2D), and the
//! spectrum only through the effective principal quantum number
//! `n_eff = n + alpha + 1` (3D) or `n_eff2 = n + alpha_tilde + 1/2` (2D):
//!
//! ```text
//! E = -Z^2 / (2 n_eff^2)          (units of e^2/a0)
//! ```
//!
//! # Units
//!
//! Everything in this crate is dimensionless: lengths in `a0/Z`, energies
//! in `e^2/a0`, and `hbar^2/m = e^2 a0` (from `a0 = hbar^2/(m e^2)`)
//! wherever `hbar^2/m` appears. Moments `<r^lambda>` are magnitudes in
//! units `(a0/Z)^lambda`. Physical scales are applied only at the
//! presentation layer.

use num::BigRational;

use crate::error::{Error, Result};
use crate::scalar::{int_pow, FloatScalar, Scalar};

/// Dimensionless flux factor `mu0`.
///
/// `mu0` equals minus the magnetic flux in units of the single-charge
/// flux quantum `hc/e`; the sign is a labelling convention. Periodicity
/// `mu0 -> mu0 + 1, k -> k - 1` is *not* applied automatically: states
/// are labelled exactly as given, so both labels of a gauge-equivalent
/// pair exist as distinct values.
#[derive(Debug, Clone, PartialEq)]
pub struct FluxParam<S: Scalar> {
    mu0: S,
}

impl<S: Scalar> FluxParam<S> {
    pub fn from_mu0(mu0: S) -> Result<Self> {
        if !mu0.is_finite_value() {
            return Err(Error::domain("flux parameter mu0 must be finite"));
        }
        Ok(FluxParam { mu0 })
    }

    /// Construct from the flux in units of `hc/e`: `mu0 = -flux_quanta`.
    pub fn from_flux_quanta(flux_quanta: S) -> Result<Self> {
        Ok(FluxParam {
            mu0: flux_to_mu0(flux_quanta)?,
        })
    }

    pub fn mu0(&self) -> &S {
        &self.mu0
    }
}

/// Convert a magnetic flux in units of `hc/e` into the flux factor:
/// `mu0 = -flux_quanta`.
pub fn flux_to_mu0<S: Scalar>(flux_quanta: S) -> Result<S> {
    if !flux_quanta.is_finite_value() {
        return Err(Error::domain("flux_quanta must be finite"));
    }
    Ok(-flux_quanta)
}

/// Scale and degree parameters of a radial problem, common to 3D and 2D.
///
/// The 2D system maps onto the 3D radial machinery through
/// `alpha = alpha_tilde - 1/2`, `n_eff = n_eff2`; constructing this once
/// and routing both dimensions through it keeps every window check and
/// recurrence coefficient consistent between the engine and the oracle.
#[derive(Debug, Clone, PartialEq)]
pub struct RadialParams<S: Scalar> {
    /// Number of radial nodes (Laguerre degree).
    pub n: u32,
    /// Effective angular quantum number in the `alpha(alpha+1)/r^2` term.
    pub alpha: S,
    /// Effective principal quantum number.
    pub n_eff: S,
}

/// A 3D bound state `(n, q, k)` with flux and central charge.
#[derive(Debug, Clone, PartialEq)]
pub struct QuantumState3D<S: Scalar> {
    n: u32,
    q: u32,
    k: i32,
    flux: FluxParam<S>,
    z: S,
}

impl<S: Scalar> QuantumState3D<S> {
    pub fn new(n: u32, q: u32, k: i32, flux: FluxParam<S>, z: S) -> Result<Self> {
        if !z.is_finite_value() || !(z > S::zero()) {
            return Err(Error::domain("central charge Z must be positive and finite"));
        }
        Ok(QuantumState3D { n, q, k, flux, z })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn k(&self) -> i32 {
        self.k
    }

    pub fn mu0(&self) -> &S {
        self.flux.mu0()
    }

    pub fn z(&self) -> &S {
        &self.z
    }

    /// Effective angular quantum number `alpha = q + |k + mu0|`.
    pub fn alpha(&self) -> S {
        S::from_int(self.q as i64) + (S::from_int(self.k as i64) + self.flux.mu0.clone()).abs()
    }

    /// Effective principal quantum number `n_eff = n + q + |k + mu0| + 1`.
    ///
    /// Evaluated as `(n + q + 1) + |k + mu0|` so that states sharing the
    /// same `|k + mu0|` and the same `n + q` produce bit-identical values
    /// in float mode.
    pub fn n_eff(&self) -> S {
        S::from_int(self.n as i64 + self.q as i64 + 1)
            + (S::from_int(self.k as i64) + self.flux.mu0.clone()).abs()
    }

    /// Bound-state energy `-Z^2 / (2 n_eff^2)` in units `e^2/a0`.
    pub fn energy(&self) -> S {
        let n_eff = self.n_eff();
        -(self.z.clone() * self.z.clone())
            / (S::from_int(2) * n_eff.clone() * n_eff)
    }

    pub fn radial(&self) -> RadialParams<S> {
        RadialParams {
            n: self.n,
            alpha: self.alpha(),
            n_eff: self.n_eff(),
        }
    }

    /// The gauge-shifted label `(k + m, mu0 - m)` of the same physical state.
    pub fn gauge_shifted(&self, m: i32) -> Result<Self> {
        let mu0 = self.flux.mu0.clone() - S::from_int(m as i64);
        QuantumState3D::new(self.n, self.q, self.k + m, FluxParam::from_mu0(mu0)?, self.z.clone())
    }

    /// Compact `(n,q,k,mu0,Z)` label for reports.
    pub fn label(&self) -> String {
        format!(
            "3d(n={},q={},k={},mu0={},Z={})",
            self.n, self.q, self.k, self.flux.mu0, self.z
        )
    }
}

impl QuantumState3D<f64> {
    /// Exact-rational copy of this state (every finite f64 is rational).
    pub fn to_exact(&self) -> Result<QuantumState3D<BigRational>> {
        QuantumState3D::new(
            self.n,
            self.q,
            self.k,
            FluxParam::from_mu0(exact_rational(*self.flux.mu0())?)?,
            exact_rational(self.z)?,
        )
    }
}

/// A 2D bound state `(n, k)` with flux and central charge.
#[derive(Debug, Clone, PartialEq)]
pub struct QuantumState2D<S: Scalar> {
    n: u32,
    k: i32,
    flux: FluxParam<S>,
    z: S,
}

impl<S: Scalar> QuantumState2D<S> {
    pub fn new(n: u32, k: i32, flux: FluxParam<S>, z: S) -> Result<Self> {
        if !z.is_finite_value() || !(z > S::zero()) {
            return Err(Error::domain("central charge Z must be positive and finite"));
        }
        Ok(QuantumState2D { n, k, flux, z })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn k(&self) -> i32 {
        self.k
    }

    pub fn mu0(&self) -> &S {
        self.flux.mu0()
    }

    pub fn z(&self) -> &S {
        &self.z
    }

    /// Effective angular quantum number `alpha_tilde = |k + mu0|`.
    pub fn alpha_tilde(&self) -> S {
        (S::from_int(self.k as i64) + self.flux.mu0.clone()).abs()
    }

    /// Effective principal quantum number `n_eff2 = n + |k + mu0| + 1/2`.
    pub fn n_eff2(&self) -> S {
        S::from_ratio(2 * self.n as i64 + 1, 2) + self.alpha_tilde()
    }

    /// Bound-state energy `-Z^2 / (2 n_eff2^2)` in units `e^2/a0`.
    pub fn energy(&self) -> S {
        let n_eff = self.n_eff2();
        -(self.z.clone() * self.z.clone())
            / (S::from_int(2) * n_eff.clone() * n_eff)
    }

    /// 3D-equivalent radial parameters: `alpha = alpha_tilde - 1/2`.
    pub fn radial(&self) -> RadialParams<S> {
        RadialParams {
            n: self.n,
            alpha: self.alpha_tilde() - S::from_ratio(1, 2),
            n_eff: self.n_eff2(),
        }
    }

    pub fn gauge_shifted(&self, m: i32) -> Result<Self> {
        let mu0 = self.flux.mu0.clone() - S::from_int(m as i64);
        QuantumState2D::new(self.n, self.k + m, FluxParam::from_mu0(mu0)?, self.z.clone())
    }

    pub fn label(&self) -> String {
        format!(
            "2d(n={},k={},mu0={},Z={})",
            self.n, self.k, self.flux.mu0, self.z
        )
    }
}

impl QuantumState2D<f64> {
    pub fn to_exact(&self) -> Result<QuantumState2D<BigRational>> {
        QuantumState2D::new(
            self.n,
            self.k,
            FluxParam::from_mu0(exact_rational(*self.flux.mu0())?)?,
            exact_rational(self.z)?,
        )
    }
}

fn exact_rational<S: FloatScalar>(value: S) -> Result<BigRational> {
    value
        .to_rational_exact()
        .ok_or(Error::NotRational { value: value.to_f64_lossy() })
}

/// Convenience constructor used heavily in tests and by the CLI.
pub fn state_3d<S: Scalar>(n: u32, q: u32, k: i32, mu0: S, z: S) -> Result<QuantumState3D<S>> {
    QuantumState3D::new(n, q, k, FluxParam::from_mu0(mu0)?, z)
}

pub fn state_2d<S: Scalar>(n: u32, k: i32, mu0: S, z: S) -> Result<QuantumState2D<S>> {
    QuantumState2D::new(n, k, FluxParam::from_mu0(mu0)?, z)
}

impl<S: Scalar> RadialParams<S> {
    /// `int_pow(n_eff, p)` shows up everywhere; keep it terse.
    pub fn n_eff_pow(&self, p: i32) -> S {
        int_pow(&self.n_eff, p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num::BigRational;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::from_ratio(n, d)
    }

    #[test]
    fn flux_to_mu0_negates() {
        assert_eq!(flux_to_mu0(0.0f64).unwrap(), 0.0);
        assert_eq!(flux_to_mu0(0.5f64).unwrap(), -0.5);
        assert_eq!(flux_to_mu0(1.0f64).unwrap(), -1.0);
        assert!(flux_to_mu0(f64::INFINITY).is_err());
        assert!(flux_to_mu0(f64::NAN).is_err());
    }

    #[test]
    fn alpha_examples() {
        let s = state_3d(0, 0, 0, 0.0f64, 1.0).unwrap();
        assert_eq!(s.alpha(), 0.0);
        let s = state_3d(0, 0, 0, 0.5f64, 1.0).unwrap();
        assert_eq!(s.alpha(), 0.5);
        let s = state_3d(1, 2, -1, 0.3f64, 1.0).unwrap();
        assert!((s.alpha() - 2.7).abs() < 1e-15);
    }

    #[test]
    fn energy_3d_examples() {
        let s = state_3d(0, 0, 0, 0.0f64, 1.0).unwrap();
        assert_eq!(s.energy(), -0.5);
        let s = state_3d(0, 0, 0, 0.5f64, 1.0).unwrap();
        assert!((s.energy() - (-1.0 / 4.5)).abs() < 1e-15);
        let s = state_3d(1, 1, -1, 0.5f64, 2.0).unwrap();
        assert!((s.energy() - (-4.0 / (2.0 * 3.5 * 3.5))).abs() < 1e-15);
    }

    #[test]
    fn energy_2d_examples() {
        let s = state_2d(0, 0, 0.0f64, 1.0).unwrap();
        assert_eq!(s.energy(), -2.0);
        let s = state_2d(1, 0, 0.0f64, 1.0).unwrap();
        assert!((s.energy() - (-2.0 / 9.0)).abs() < 1e-15);
        // |k + mu0| = 0 reproduces the k = 0, mu0 = 0 level exactly.
        let s = state_2d(0, 1, -1.0f64, 1.0).unwrap();
        assert_eq!(s.energy(), -2.0);
    }

    #[test]
    fn energy_degeneracy_is_bit_identical() {
        // same n + q and same |k + mu0| => identical n_eff, bit for bit
        let a = state_3d(1, 0, 0, 0.1f64, 1.0).unwrap();
        let b = state_3d(0, 1, 0, 0.1f64, 1.0).unwrap();
        assert_eq!(a.energy().to_bits(), b.energy().to_bits());
        assert_eq!(a.n_eff().to_bits(), b.n_eff().to_bits());
    }

    #[test]
    fn gauge_shift_exact_in_rational_mode() {
        let s = state_3d(1, 2, -1, rat(3, 10), rat(2, 1)).unwrap();
        for m in [-3, -1, 1, 2, 5] {
            let t = s.gauge_shifted(m).unwrap();
            assert_eq!(s.alpha(), t.alpha());
            assert_eq!(s.n_eff(), t.n_eff());
            assert_eq!(s.energy(), t.energy());
        }
    }

    #[test]
    fn flux_monotonicity_of_binding() {
        let mut prev = f64::NEG_INFINITY;
        for i in 0..20 {
            let mu0 = i as f64 * 0.05;
            let e = state_3d(1, 1, 0, mu0, 1.0).unwrap().energy();
            assert!(e > prev, "energy must increase with mu0 on [0,1)");
            prev = e;
        }
    }

    #[test]
    fn flux_free_reduction_to_hydrogen() {
        // mu0 = 0: n_eff = n + l + 1 with l = q + |k|
        for (n, q, k) in [(0u32, 0u32, 0i32), (1, 0, 0), (0, 1, -1), (2, 1, 1)] {
            let s = state_3d(n, q, k, 0.0, 1.0).unwrap();
            let l = q as f64 + k.unsigned_abs() as f64;
            let n_principal = n as f64 + l + 1.0;
            assert_eq!(s.energy(), -1.0 / (2.0 * n_principal * n_principal));
        }
    }

    #[test]
    fn invalid_charge_rejected() {
        assert!(state_3d(0, 0, 0, 0.0f64, 0.0).is_err());
        assert!(state_3d(0, 0, 0, 0.0f64, -1.0).is_err());
        assert!(state_3d(0, 0, 0, 0.0f64, f64::NAN).is_err());
    }

    #[test]
    fn two_d_mapping_shifts_alpha_by_half() {
        let s = state_2d(1, 1, rat(1, 4), rat(1, 1)).unwrap();
        let p = s.radial();
        assert_eq!(p.alpha, rat(3, 4));
        assert_eq!(p.n_eff, rat(11, 4));
    }
}
