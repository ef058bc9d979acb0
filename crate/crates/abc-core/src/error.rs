//! Error type shared by the model, engine and oracle.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// lambda is at or below the existence bound -(2*alpha+3): the
    /// integral defining the moment does not converge at the origin.
    #[error("moment <r^{lambda}> diverges: existence requires lambda > {bound}")]
    DivergentMoment { lambda: f64, bound: f64 },

    /// A recurrence step sits at or outside the window where the
    /// integrated-by-parts boundary terms vanish; the step coefficient
    /// (2*alpha+1)^2 - lambda^2 vanishes exactly at the edge.
    #[error("recurrence step lambda = {step} violates the boundary window lambda > {bound}")]
    RecurrenceWindow { step: f64, bound: f64 },

    /// Exact-rational mode was requested for a value that has no exact
    /// rational representation (NaN or infinite input).
    #[error("value {value} is not representable as an exact rational")]
    NotRational { value: f64 },

    /// alpha = 0: the state behaves like an s-wave at the origin and the
    /// generalized Schwinger identity does not apply.
    #[error("s-wave excluded: the identity requires alpha > 0")]
    SWaveExcluded,

    /// The operation is defined only for nodeless (n = 0) states.
    #[error("not a circular state: n = {n} but the operation requires n = 0")]
    NotCircular { n: u32 },

    /// Invalid argument outside any specific window (non-finite input,
    /// non-positive charge, out-of-range special-function parameter...).
    #[error("domain error: {0}")]
    Domain(String),

    /// The oracle's two internal evaluation routes disagree; one of them
    /// is numerically unreliable for this input.
    #[error(
        "oracle paths disagree: series = {series}, quadrature = {quadrature} (rel {rel:.3e})"
    )]
    OracleMismatch {
        series: f64,
        quadrature: f64,
        rel: f64,
    },
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}
