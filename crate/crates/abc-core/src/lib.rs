//! Bound states of a Coulomb charge threaded by an idealized magnetic
//! flux line, in 3D and 2D: exact spectra, radial-operator expectation
//! values `<r^lambda>` for any admissible integer power, and a
//! verification layer that rederives every number from explicit
//! wavefunctions and checks the system's theorems (virial, generalized
//! Schwinger, orbit statistics).
//!
//! The flux enters only through the dimensionless factor `mu0`, which
//! shifts angular quantum numbers by a fractional amount; all closed
//! forms are rational functions of the resulting effective quantum
//! numbers, so every computation runs either in floating point or in
//! exact rational arithmetic (see [`scalar::Scalar`]).
//!
//! Quantities are dimensionless: lengths in `a0/Z`, energies in `e^2/a0`,
//! moments in `(a0/Z)^lambda`.

pub mod error;
pub mod model;
pub mod moments;
pub mod oracle;
pub mod report;
pub mod scalar;
pub mod specfun;
pub mod theorems;
pub mod verify;

pub use error::{Error, Result};
pub use model::{
    flux_to_mu0, state_2d, state_3d, FluxParam, QuantumState2D, QuantumState3D, RadialParams,
};
pub use moments::{
    closed_form_moment, closed_form_moment_with, moment, moment_2d, recurrence_residual,
    AdmissibilityWindow, ClosedFormCoefficients, Moment,
};
pub use oracle::{
    build_wavefunction, build_wavefunction_2d, kinetic_weighted_integral, oracle_moment,
    oracle_moment_2d, oracle_moment_exact, oracle_moment_exact_2d, RadialWavefunction,
};
pub use report::{CheckReport, MomentRow, MomentTable, RowStatus};
pub use scalar::{FloatScalar, Scalar};
pub use theorems::{
    flux_sweep, homogeneous_virial_fractions, kinetic_ratios, orbit_stats, schwinger_check,
    virial_checks, OrbitStats,
};

/// Default floating-point scalar.
pub type Real = f64;

/// Exact rational scalar; any finite float converts into it losslessly.
pub type Rational = num::BigRational;
