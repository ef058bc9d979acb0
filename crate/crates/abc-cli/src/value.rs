//! Number parsing and deterministic formatting for both arithmetic modes.
//!
//! Command-line numbers are decimals or `p/q` fractions. Rational mode
//! accepts any fraction but only decimals that are exact binary fractions
//! (0.25 is fine, 0.1 is not: its float reading would silently change the
//! value); everything else must be spelled as a fraction.

use num::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::Serialize;

use abc_core::scalar::Scalar;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Mode {
    Float,
    Rational,
}

impl Mode {
    pub fn as_str(self) -> &'static str {
        match self {
            Mode::Float => "float",
            Mode::Rational => "rational",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

impl Format {
    pub fn as_str(self) -> &'static str {
        match self {
            Format::Csv => "csv",
            Format::Json => "json",
        }
    }
}

/// A serialized scalar: float mode renders JSON numbers, rational mode
/// exact strings.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(untagged)]
pub enum Num {
    Float(f64),
    Exact(String),
}

/// Scalars the CLI can parse and render deterministically.
pub trait CliScalar: Scalar {
    fn parse_cli(text: &str) -> Result<Self, String>;
    fn csv_string(&self) -> String;
    fn json_num(&self) -> Num;
}

impl CliScalar for f64 {
    fn parse_cli(text: &str) -> Result<Self, String> {
        if let Some((p, q)) = text.split_once('/') {
            let p: f64 = p.trim().parse().map_err(|e| format!("bad numerator {p:?}: {e}"))?;
            let q: f64 = q.trim().parse().map_err(|e| format!("bad denominator {q:?}: {e}"))?;
            if q == 0.0 {
                return Err(format!("zero denominator in {text:?}"));
            }
            return Ok(p / q);
        }
        text.trim()
            .parse()
            .map_err(|e| format!("bad number {text:?}: {e}"))
    }

    fn csv_string(&self) -> String {
        format_sig12(*self)
    }

    fn json_num(&self) -> Num {
        Num::Float(*self)
    }
}

impl CliScalar for BigRational {
    fn parse_cli(text: &str) -> Result<Self, String> {
        parse_exact_rational(text)
    }

    fn csv_string(&self) -> String {
        self.to_string()
    }

    fn json_num(&self) -> Num {
        Num::Exact(self.to_string())
    }
}

/// 12 significant digits, scientific: the CSV float convention.
pub fn format_sig12(x: f64) -> String {
    format!("{x:.11e}")
}

fn parse_exact_rational(text: &str) -> Result<BigRational, String> {
    let text = text.trim();
    if let Some((p, q)) = text.split_once('/') {
        let p: i64 = p.trim().parse().map_err(|e| format!("bad numerator {p:?}: {e}"))?;
        let q: i64 = q.trim().parse().map_err(|e| format!("bad denominator {q:?}: {e}"))?;
        if q == 0 {
            return Err(format!("zero denominator in {text:?}"));
        }
        return Ok(BigRational::from_ratio(p, q));
    }
    let (sign, digits) = match text.strip_prefix('-') {
        Some(rest) => (-1i64, rest),
        None => (1, text),
    };
    let (int_part, frac_part) = match digits.split_once('.') {
        Some((i, f)) => (i, f),
        None => (digits, ""),
    };
    if int_part.is_empty() && frac_part.is_empty() {
        return Err(format!("empty number {text:?}"));
    }
    if !int_part.chars().all(|c| c.is_ascii_digit())
        || !frac_part.chars().all(|c| c.is_ascii_digit())
    {
        return Err(format!(
            "rational mode takes decimals or p/q fractions, got {text:?}"
        ));
    }
    let mut value = BigRational::zero();
    let ten = BigRational::from_int(10);
    for c in int_part.chars().chain(frac_part.chars()) {
        value = value * ten.clone() + BigRational::from_int((c as u8 - b'0') as i64);
    }
    for _ in 0..frac_part.len() {
        value = value / ten.clone();
    }
    value = value * BigRational::from_int(sign);
    // exactness rule: only decimals a float could also represent exactly
    // are allowed, so float and rational runs of the same flags agree
    let denom = value.denom();
    let mut d = denom.clone();
    while (&d % num::BigInt::from(2)) == num::BigInt::from(0) {
        d /= 2;
    }
    if d != num::BigInt::from(1) {
        return Err(format!(
            "{text:?} is not an exact binary fraction; write it as a fraction (e.g. {}/{})",
            value.numer(),
            denom
        ));
    }
    Ok(value)
}

/// Relative difference used for table rows.
pub fn rel_err<S: Scalar>(a: &S, b: &S) -> f64 {
    let abs = (a.clone() - b.clone()).abs();
    let scale = if a.abs() > b.abs() { a.abs() } else { b.abs() };
    if scale.is_zero() {
        0.0
    } else {
        (abs / scale).to_f64_lossy()
    }
}

/// `start:stop:step` (inclusive) or a comma list.
pub fn parse_grid<S: CliScalar>(text: &str) -> Result<Vec<S>, String> {
    if text.contains(':') {
        let parts: Vec<&str> = text.split(':').collect();
        if parts.len() != 3 {
            return Err(format!("grid {text:?} must be start:stop:step or a comma list"));
        }
        let start = S::parse_cli(parts[0])?;
        let stop = S::parse_cli(parts[1])?;
        let step = S::parse_cli(parts[2])?;
        if !(step > S::zero()) {
            return Err("grid step must be positive".into());
        }
        // slack of step/2^20 absorbs float endpoint rounding
        let slack = step.clone() / S::from_int(1 << 20);
        let mut values = Vec::new();
        let mut v = start;
        while v <= stop.clone() + slack.clone() {
            values.push(v.clone());
            v = v + step.clone();
        }
        if values.is_empty() {
            return Err(format!("grid {text:?} is empty"));
        }
        Ok(values)
    } else {
        let values: Result<Vec<S>, String> = text.split(',').map(S::parse_cli).collect();
        let values = values?;
        if values.is_empty() {
            return Err(format!("grid {text:?} is empty"));
        }
        Ok(values)
    }
}

/// Inclusive `a..b` range or a single integer.
pub fn parse_int_range(text: &str) -> Result<Vec<i32>, String> {
    if let Some((a, b)) = text.split_once("..") {
        let a: i32 = a.trim().parse().map_err(|e| format!("bad range start {a:?}: {e}"))?;
        let b: i32 = b.trim().parse().map_err(|e| format!("bad range end {b:?}: {e}"))?;
        if a > b {
            return Err(format!("empty range {text:?}"));
        }
        Ok((a..=b).collect())
    } else {
        let v: i32 = text.trim().parse().map_err(|e| format!("bad integer {text:?}: {e}"))?;
        Ok(vec![v])
    }
}
