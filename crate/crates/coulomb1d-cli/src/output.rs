//! Deterministic JSON and CSV rendering.

use std::io::Write;

use coulomb1d::Complex64;
use serde::Serialize;
use serde_json::value::RawValue;

use crate::config::RunConfig;

pub const SCHEMA: &str = "coulomb1d/1";

/// A number already rendered with a fixed count of significant digits.
#[derive(Debug, Clone)]
pub struct Sci(Box<RawValue>);

impl Sci {
    pub fn new(x: f64, digits: usize) -> Self {
        Sci(RawValue::from_string(render(x, digits)).expect("rendered number is valid JSON"))
    }

    pub fn as_str(&self) -> &str {
        self.0.get()
    }
}

impl Serialize for Sci {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.0.serialize(s)
    }
}

/// `d.ddde±x` with `digits` significant digits; non-finite values become `null`.
pub fn render(x: f64, digits: usize) -> String {
    if x.is_finite() {
        format!("{:.*e}", digits.saturating_sub(1), x)
    } else {
        "null".to_string()
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Cplx {
    pub re: Sci,
    pub im: Sci,
}

impl Cplx {
    pub fn new(z: Complex64, digits: usize) -> Self {
        Cplx { re: Sci::new(z.re, digits), im: Sci::new(z.im, digits) }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ConfigEcho {
    pub unitarity_tol: Sci,
    pub residual_tol: Sci,
    pub energy_tol: Sci,
    pub digits: usize,
    pub series_max_terms: usize,
    pub series_rel_tol: Sci,
    pub asymptotic_threshold: Sci,
    pub log_expansion_threshold: Sci,
    pub min_accuracy: Sci,
}

impl ConfigEcho {
    pub fn new(c: &RunConfig) -> Self {
        let d = 17;
        ConfigEcho {
            unitarity_tol: Sci::new(c.unitarity_tol, d),
            residual_tol: Sci::new(c.residual_tol, d),
            energy_tol: Sci::new(c.energy_tol, d),
            digits: c.digits,
            series_max_terms: c.policy.series_max_terms,
            series_rel_tol: Sci::new(c.policy.series_rel_tol, d),
            asymptotic_threshold: Sci::new(c.policy.asymptotic_threshold, d),
            log_expansion_threshold: Sci::new(c.policy.log_expansion_threshold, d),
            min_accuracy: Sci::new(c.policy.min_accuracy, d),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Meta {
    pub command: &'static str,
    pub version: &'static str,
    pub config: ConfigEcho,
}

#[derive(Debug, Serialize)]
struct Document<'a, D: Serialize> {
    schema: &'static str,
    meta: &'a Meta,
    data: &'a D,
}

pub fn write_json<D: Serialize>(out: &mut dyn Write, meta: &Meta, data: &D) -> std::io::Result<()> {
    serde_json::to_writer_pretty(&mut *out, &Document { schema: SCHEMA, meta, data })?;
    out.write_all(b"\n")
}

/// Header row then one record per row.
pub fn write_csv(out: &mut dyn Write, header: &[&str], rows: &[Vec<String>]) -> std::io::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(header)?;
    for r in rows {
        w.write_record(r)?;
    }
    w.flush()
}
