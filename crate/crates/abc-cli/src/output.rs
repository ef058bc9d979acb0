//! Deterministic CSV and JSON rendering.
//!
//! JSON carries full-precision numbers (shortest round-trip encoding);
//! CSV renders floats at 12 significant digits for human tables. Rational
//! values are exact `p/q` strings in both. Row order is the computation
//! order, so identical configurations produce byte-identical output.

use std::collections::BTreeMap;

use serde::Serialize;

use abc_core::report::CheckReport;

use crate::value::{format_sig12, Num};

#[derive(Debug, Serialize)]
pub struct Summary {
    pub pass: bool,
    pub n_checks: usize,
    pub max_rel_err: f64,
}

#[derive(Debug, Serialize)]
pub struct Envelope<R: Serialize> {
    pub config: BTreeMap<&'static str, String>,
    pub rows: Vec<R>,
    pub summary: Summary,
}

pub trait CsvRow {
    fn csv_header() -> &'static str;
    fn csv_line(&self) -> String;
}

impl<R: Serialize + CsvRow> Envelope<R> {
    pub fn render(&self, format: crate::value::Format) -> String {
        match format {
            crate::value::Format::Json => {
                let mut text =
                    serde_json::to_string_pretty(self).expect("serializable envelope");
                text.push('\n');
                text
            }
            crate::value::Format::Csv => {
                let mut text = String::from(R::csv_header());
                text.push('\n');
                for row in &self.rows {
                    text.push_str(&row.csv_line());
                    text.push('\n');
                }
                text
            }
        }
    }
}

fn csv_num(value: &Option<Num>) -> String {
    match value {
        None => String::new(),
        Some(Num::Float(x)) => format_sig12(*x),
        Some(Num::Exact(s)) => s.clone(),
    }
}

fn csv_opt_f64(value: &Option<f64>) -> String {
    value.map(format_sig12).unwrap_or_default()
}

/// One `(state, lambda)` row of a moment table.
#[derive(Debug, Serialize)]
pub struct MomentRowOut {
    pub n: u32,
    pub q: Option<u32>,
    pub k: i32,
    pub mu0: Num,
    pub z: Num,
    pub lambda: i32,
    pub engine: Option<Num>,
    pub oracle: Option<Num>,
    pub rel_err: Option<f64>,
    pub status: &'static str,
    pub unit: String,
}

impl CsvRow for MomentRowOut {
    fn csv_header() -> &'static str {
        "state_n,state_q,state_k,mu0,Z,lambda,engine_value,oracle_value,rel_err,status"
    }

    fn csv_line(&self) -> String {
        format!(
            "{},{},{},{},{},{},{},{},{},{}",
            self.n,
            self.q.map(|q| q.to_string()).unwrap_or_default(),
            self.k,
            csv_num(&Some(self.mu0.clone())),
            csv_num(&Some(self.z.clone())),
            self.lambda,
            csv_num(&self.engine),
            csv_num(&self.oracle),
            csv_opt_f64(&self.rel_err),
            self.status,
        )
    }
}

/// One state of a spectrum table.
#[derive(Debug, Serialize)]
pub struct SpectrumRowOut {
    pub n: u32,
    pub q: Option<u32>,
    pub k: i32,
    pub mu0: Num,
    pub z: Num,
    pub n_eff: Num,
    pub alpha: Num,
    pub energy: Num,
}

impl CsvRow for SpectrumRowOut {
    fn csv_header() -> &'static str {
        "state_n,state_q,state_k,mu0,Z,n_eff,alpha,energy"
    }

    fn csv_line(&self) -> String {
        format!(
            "{},{},{},{},{},{},{},{}",
            self.n,
            self.q.map(|q| q.to_string()).unwrap_or_default(),
            self.k,
            csv_num(&Some(self.mu0.clone())),
            csv_num(&Some(self.z.clone())),
            csv_num(&Some(self.n_eff.clone())),
            csv_num(&Some(self.alpha.clone())),
            csv_num(&Some(self.energy.clone())),
        )
    }
}

impl CsvRow for CheckReport {
    fn csv_header() -> &'static str {
        "name,state,lhs,rhs,abs_err,rel_err,tol,pass"
    }

    fn csv_line(&self) -> String {
        format!(
            "{},{},{},{},{},{},{},{}",
            self.name,
            self.state.replace(',', ";"),
            format_sig12(self.lhs),
            format_sig12(self.rhs),
            format_sig12(self.abs_err),
            format_sig12(self.rel_err),
            format_sig12(self.tol),
            self.pass,
        )
    }
}
