//! Reports and bit-stable JSON/CSV export.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Deserializer, Serialize, Serializer};
use serde_json::Value;

use crate::error::{Error, Result};
use crate::nahm::path::{NahmPath, Quad, TangentVector};

use super::scenario::Scenario;

/// Outcome of a scenario run.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Report {
    pub scenario: Scenario,
    #[serde(with = "float_map")]
    pub results: BTreeMap<String, f64>,
    /// File names relative to the output directory.
    pub artifacts: Vec<String>,
    /// Assertion label to verdict.
    pub status: BTreeMap<String, bool>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.status.values().all(|&s| s)
    }

    /// Canonical JSON text: sorted keys, floats in `{:.16e}`, non-finite
    /// values as the strings `"inf"`, `"-inf"` and `"nan"`.
    pub fn to_json(&self) -> Result<String> {
        let v = serde_json::to_value(self)?;
        let mut out = String::new();
        write_value(&v, 0, &mut out);
        out.push('\n');
        Ok(out)
    }

    pub fn from_json(text: &str) -> Result<Report> {
        Ok(serde_json::from_str(text)?)
    }
}

/// Output format of [`export_report`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
}

/// Write `report` into `dir` as `<name>.json` or `<name>_results.csv`.
pub fn export_report(report: &Report, format: Format, dir: &Path) -> Result<PathBuf> {
    let (file, text) = match format {
        Format::Json => (format!("{}.json", report.scenario.name), report.to_json()?),
        Format::Csv => (format!("{}_results.csv", report.scenario.name), results_csv(report)),
    };
    let path = dir.join(file);
    std::fs::write(&path, text)?;
    Ok(path)
}

/// `key,value` rows of the results table.
pub fn results_csv(report: &Report) -> String {
    let mut s = String::from("key,value\n");
    for (k, v) in &report.results {
        let _ = writeln!(s, "{k},{}", float_text(*v));
    }
    s
}

/// Every float in the exports is printed this way.
pub fn float_text(x: f64) -> String {
    if x.is_nan() {
        "nan".into()
    } else if x.is_infinite() {
        if x > 0.0 { "inf".into() } else { "-inf".into() }
    } else {
        format!("{x:.16e}")
    }
}

fn quad_csv(grid: &[f64], samples: &[Quad], prefix: char) -> String {
    let n = samples.first().map_or(0, |q| q[0].dim());
    let mut s = String::from("t");
    for i in 0..4 {
        for r in 0..n {
            for c in 0..n {
                let _ = write!(s, ",{prefix}{i}_{r}{c}_re,{prefix}{i}_{r}{c}_im");
            }
        }
    }
    s.push('\n');
    for (t, q) in grid.iter().zip(samples) {
        s.push_str(&float_text(*t));
        for x in q {
            let m = x.matrix();
            for r in 0..n {
                for c in 0..n {
                    let _ = write!(s, ",{},{}", float_text(m[(r, c)].re), float_text(m[(r, c)].im));
                }
            }
        }
        s.push('\n');
    }
    s
}

/// CSV of a path: `t,T0_00_re,T0_00_im,T0_01_re,...`, matrices row-major.
pub fn path_csv(t: &NahmPath) -> String {
    quad_csv(t.grid().nodes(), t.samples(), 'T')
}

/// CSV of a tangent vector with columns `X0_00_re, ...`.
pub fn tangent_csv(x: &TangentVector) -> String {
    quad_csv(x.grid().nodes(), x.samples(), 'X')
}

fn write_value(v: &Value, indent: usize, out: &mut String) {
    let pad = |k: usize| "  ".repeat(k);
    match v {
        Value::Null => out.push_str("null"),
        Value::Bool(b) => out.push_str(if *b { "true" } else { "false" }),
        Value::Number(n) => {
            if n.is_f64() {
                out.push_str(&n.as_f64().map(float_text).unwrap_or_default());
            } else {
                out.push_str(&n.to_string());
            }
        }
        Value::String(s) => out.push_str(&Value::String(s.clone()).to_string()),
        Value::Array(a) if a.is_empty() => out.push_str("[]"),
        Value::Array(a) => {
            out.push_str("[\n");
            for (i, x) in a.iter().enumerate() {
                out.push_str(&pad(indent + 1));
                write_value(x, indent + 1, out);
                out.push_str(if i + 1 < a.len() { ",\n" } else { "\n" });
            }
            out.push_str(&pad(indent));
            out.push(']');
        }
        Value::Object(m) if m.is_empty() => out.push_str("{}"),
        Value::Object(m) => {
            out.push_str("{\n");
            let mut keys: Vec<&String> = m.keys().collect();
            keys.sort();
            for (i, k) in keys.iter().enumerate() {
                out.push_str(&pad(indent + 1));
                out.push_str(&Value::String((*k).clone()).to_string());
                out.push_str(": ");
                write_value(&m[*k], indent + 1, out);
                out.push_str(if i + 1 < keys.len() { ",\n" } else { "\n" });
            }
            out.push_str(&pad(indent));
            out.push('}');
        }
    }
}

/// Floats that may be non-finite, stored as JSON numbers or strings.
mod float_map {
    use super::*;

    #[derive(Serialize, Deserialize)]
    #[serde(untagged)]
    enum Num {
        F(f64),
        S(String),
    }

    pub fn serialize<S: Serializer>(m: &BTreeMap<String, f64>, s: S) -> std::result::Result<S::Ok, S::Error> {
        let out: BTreeMap<&String, Num> =
            m.iter().map(|(k, &v)| (k, if v.is_finite() { Num::F(v) } else { Num::S(float_text(v)) })).collect();
        out.serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<BTreeMap<String, f64>, D::Error> {
        let m: BTreeMap<String, Num> = BTreeMap::deserialize(d)?;
        m.into_iter()
            .map(|(k, v)| {
                let x = match v {
                    Num::F(x) => x,
                    Num::S(s) => match s.as_str() {
                        "inf" => f64::INFINITY,
                        "-inf" => f64::NEG_INFINITY,
                        "nan" => f64::NAN,
                        _ => return Err(serde::de::Error::custom(format!("bad float {s:?}"))),
                    },
                };
                Ok((k, x))
            })
            .collect()
    }
}

/// Reject files that would be written outside `dir`.
pub fn artifact_path(dir: &Path, name: &str) -> Result<PathBuf> {
    if name.contains('/') || name.contains('\\') || name.starts_with('.') {
        return Err(Error::Scenario(format!("bad artifact name {name:?}")));
    }
    Ok(dir.join(name))
}
