//! Result-reporting types: identity checks and moment tables.

use serde::Serialize;

use crate::error::Error;
use crate::scalar::Scalar;

/// Outcome of one identity check.
///
/// Invariant: `pass` iff `rel_err <= tol` or `abs_err <= tol * max(1, |lhs|)`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CheckReport {
    pub name: String,
    pub state: String,
    pub lhs: f64,
    pub rhs: f64,
    pub abs_err: f64,
    pub rel_err: f64,
    pub tol: f64,
    pub pass: bool,
}

impl CheckReport {
    /// Compare two scalars; errors are computed in the scalar type (exact
    /// for rationals) and recorded lossily.
    pub fn compare<S: Scalar>(
        name: impl Into<String>,
        state: impl Into<String>,
        lhs: &S,
        rhs: &S,
        tol: f64,
    ) -> Self {
        let abs = (lhs.clone() - rhs.clone()).abs();
        let scale = if lhs.abs() > rhs.abs() { lhs.abs() } else { rhs.abs() };
        let rel = if scale.is_zero() {
            S::zero()
        } else {
            abs.clone() / scale
        };
        let lhs_f = lhs.to_f64_lossy();
        let tol_s = S::from_ratio((tol * 1e18) as i64, 1_000_000_000_000_000_000);
        let unit_scale = if lhs.abs() > S::one() { lhs.abs() } else { S::one() };
        let pass = rel <= tol_s || abs <= tol_s * unit_scale;
        CheckReport {
            name: name.into(),
            state: state.into(),
            lhs: lhs_f,
            rhs: rhs.to_f64_lossy(),
            abs_err: abs.to_f64_lossy(),
            rel_err: rel.to_f64_lossy(),
            tol,
            pass,
        }
    }

    /// A check counting discrete violations: passes iff `violations == 0`.
    pub fn violations(
        name: impl Into<String>,
        state: impl Into<String>,
        violations: usize,
    ) -> Self {
        CheckReport {
            name: name.into(),
            state: state.into(),
            lhs: violations as f64,
            rhs: 0.0,
            abs_err: violations as f64,
            rel_err: if violations == 0 { 0.0 } else { 1.0 },
            tol: 0.0,
            pass: violations == 0,
        }
    }

    /// A check that failed before producing numbers (an unexpected error).
    pub fn failure(name: impl Into<String>, state: impl Into<String>, err: &Error) -> Self {
        CheckReport {
            name: format!("{} [{err}]", name.into()),
            state: state.into(),
            lhs: f64::NAN,
            rhs: f64::NAN,
            abs_err: f64::INFINITY,
            rel_err: f64::INFINITY,
            tol: 0.0,
            pass: false,
        }
    }
}

/// Row status for moment tables; errors are explicit, never skipped.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum RowStatus {
    Ok,
    Divergent,
    Window,
    SWave,
    Failed,
}

impl RowStatus {
    pub fn from_error(err: &Error) -> Self {
        match err {
            Error::DivergentMoment { .. } => RowStatus::Divergent,
            Error::RecurrenceWindow { .. } => RowStatus::Window,
            Error::SWaveExcluded => RowStatus::SWave,
            _ => RowStatus::Failed,
        }
    }

    pub fn as_str(&self) -> &'static str {
        match self {
            RowStatus::Ok => "ok",
            RowStatus::Divergent => "divergent",
            RowStatus::Window => "window",
            RowStatus::SWave => "s-wave",
            RowStatus::Failed => "failed",
        }
    }
}

/// One `(state, lambda)` cell of a moment table.
#[derive(Debug, Clone, PartialEq)]
pub struct MomentRow<S: Scalar> {
    pub n: u32,
    /// `None` for 2D states (which have no q).
    pub q: Option<u32>,
    pub k: i32,
    pub mu0: S,
    pub z: S,
    pub lambda: i32,
    pub engine: Option<S>,
    pub oracle: Option<S>,
    pub rel_err: Option<f64>,
    pub status: RowStatus,
}

/// Set of moment rows, ready for serialization by the caller.
#[derive(Debug, Clone, PartialEq)]
pub struct MomentTable<S: Scalar> {
    pub rows: Vec<MomentRow<S>>,
}

impl<S: Scalar> Default for MomentTable<S> {
    fn default() -> Self {
        MomentTable { rows: Vec::new() }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num::BigRational;

    #[test]
    fn compare_pass_iff_invariant() {
        let r = CheckReport::compare("x", "s", &1.0f64, &(1.0 + 1e-10), 1e-8);
        assert!(r.pass);
        let r = CheckReport::compare("x", "s", &1.0f64, &1.01, 1e-8);
        assert!(!r.pass);
        // absolute branch: tiny lhs, tiny abs error
        let r = CheckReport::compare("x", "s", &0.0f64, &1e-12, 1e-8);
        assert!(r.pass);
    }

    #[test]
    fn exact_compare_with_zero_tolerance() {
        let a = BigRational::from_ratio(1, 3);
        let b = BigRational::from_ratio(1, 3);
        assert!(CheckReport::compare("eq", "s", &a, &b, 0.0).pass);
        let c = BigRational::from_ratio(1, 3) + BigRational::from_ratio(1, 1_000_000_000_000);
        assert!(!CheckReport::compare("eq", "s", &a, &c, 0.0).pass);
    }

    #[test]
    fn violation_counts() {
        assert!(CheckReport::violations("m", "s", 0).pass);
        assert!(!CheckReport::violations("m", "s", 3).pass);
    }
}
