//! Generalized Laguerre polynomials L_n^(a) with real parameter a > -1.
//!
//! Evaluation goes through the three-term recurrence in the degree, which
//! is stable in the dominant direction used here. The monomial form is
//! kept as an explicit coefficient table because the oracle's
//! Gamma-series moment formula consumes it term by term.

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Monomial form of L_n^(a): coefficients c_j of Sum_j c_j t^j with
///
/// ```text
/// c_j = (-1)^j C(n+a, n-j) / j!,   C(n+a, n-j) = prod_{m=j+1..n} (a+m) / (n-j)!
/// ```
///
/// The product form keeps the table exact for rational scalars.
#[derive(Debug, Clone, PartialEq)]
pub struct LaguerreBasis<S: Scalar> {
    n: u32,
    a: S,
    coefficients: Vec<S>,
}

impl<S: Scalar> LaguerreBasis<S> {
    pub fn new(n: u32, a: S) -> Result<Self> {
        if a <= S::from_int(-1) {
            return Err(Error::domain(format!(
                "Laguerre parameter must exceed -1, got {a}"
            )));
        }
        let mut coefficients = Vec::with_capacity(n as usize + 1);
        for j in 0..=n {
            // prod_{m=j+1..n} (a+m)
            let mut c = S::one();
            for m in (j + 1)..=n {
                c = c * (a.clone() + S::from_int(m as i64));
            }
            // / (n-j)! / j!, with sign (-1)^j
            for d in 1..=(n - j) {
                c = c / S::from_int(d as i64);
            }
            for d in 1..=j {
                c = c / S::from_int(d as i64);
            }
            if j % 2 == 1 {
                c = -c;
            }
            coefficients.push(c);
        }
        Ok(LaguerreBasis { n, a, coefficients })
    }

    pub fn degree(&self) -> u32 {
        self.n
    }

    pub fn parameter(&self) -> &S {
        &self.a
    }

    pub fn coefficients(&self) -> &[S] {
        &self.coefficients
    }

    /// Horner evaluation of the monomial form.
    pub fn eval_monomial(&self, t: &S) -> S {
        let mut acc = S::zero();
        for c in self.coefficients.iter().rev() {
            acc = acc * t.clone() + c.clone();
        }
        acc
    }

    /// Scale of the monomial sum, Sum_j |c_j| t^j; the natural error
    /// yardstick for float evaluation of an alternating polynomial.
    pub fn monomial_condition(&self, t: &S) -> S {
        let mut acc = S::zero();
        for c in self.coefficients.iter().rev() {
            acc = acc * t.clone() + c.abs();
        }
        acc
    }
}

/// L_n^(a)(t) via the degree recurrence
/// `(k+1) L_{k+1} = (2k + 1 + a - t) L_k - (k + a) L_{k-1}`.
pub fn laguerre_eval<S: Scalar>(n: u32, a: &S, t: &S) -> S {
    if n == 0 {
        return S::one();
    }
    let mut prev = S::one();
    let mut cur = S::one() + a.clone() - t.clone();
    for k in 1..n {
        let kf = S::from_int(k as i64);
        let next = ((S::from_int(2 * k as i64 + 1) + a.clone() - t.clone()) * cur.clone()
            - (kf.clone() + a.clone()) * prev)
            / (kf + S::one());
        prev = cur;
        cur = next;
    }
    cur
}

/// d/dt L_n^(a)(t) = -L_{n-1}^(a+1)(t).
pub fn laguerre_deriv<S: Scalar>(n: u32, a: &S, t: &S) -> S {
    if n == 0 {
        return S::zero();
    }
    -laguerre_eval(n - 1, &(a.clone() + S::one()), t)
}

/// d^2/dt^2 L_n^(a)(t) = L_{n-2}^(a+2)(t).
pub fn laguerre_second_deriv<S: Scalar>(n: u32, a: &S, t: &S) -> S {
    if n < 2 {
        return S::zero();
    }
    laguerre_eval(n - 2, &(a.clone() + S::from_int(2)), t)
}
