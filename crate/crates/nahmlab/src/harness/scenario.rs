//! Scenario files: a versioned JSON schema with fail-closed parsing.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::nahm::grid::{Grid, DEFAULT_INTERVALS, DEFAULT_TMAX};

/// The only schema version understood.
pub const SCHEMA_VERSION: u32 = 1;
/// Largest matrix size accepted.
pub const MAX_N: usize = 8;
/// Largest `b` accepted.
pub const MAX_B: f64 = 100.0;
/// Largest grid size accepted.
pub const MAX_NODES: usize = 1_000_000;

/// What a scenario computes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    Lie,
    Nahm,
    Gauge,
    Metric,
    Implode,
    Acceptance,
}

/// An assertion `min <= results[key] <= max`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Bound {
    pub key: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub min: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub max: Option<f64>,
}

impl Bound {
    pub fn max(key: &str, max: f64) -> Bound {
        Bound { key: key.into(), min: None, max: Some(max) }
    }

    pub fn min(key: &str, min: f64) -> Bound {
        Bound { key: key.into(), min: Some(min), max: None }
    }

    /// Stable label used in the report's status table.
    pub fn label(&self) -> String {
        match (self.min, self.max) {
            (Some(a), Some(b)) => format!("{a:e} <= {} <= {b:e}", self.key),
            (Some(a), None) => format!("{} >= {a:e}", self.key),
            (None, Some(b)) => format!("{} <= {b:e}", self.key),
            (None, None) => format!("{} is finite", self.key),
        }
    }

    /// Whether `value` satisfies the bound. NaN never does.
    pub fn holds(&self, value: f64) -> bool {
        if value.is_nan() {
            return false;
        }
        match (self.min, self.max) {
            (None, None) => value.is_finite(),
            (a, b) => a.is_none_or(|a| value >= a) && b.is_none_or(|b| value <= b),
        }
    }
}

/// A parsed scenario file.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Scenario {
    pub schema: u32,
    pub name: String,
    pub kind: Kind,
    #[serde(default = "empty_object")]
    pub params: serde_json::Value,
    /// Assertions added to the kind's defaults.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub checks: Vec<Bound>,
}

fn empty_object() -> serde_json::Value {
    serde_json::Value::Object(Default::default())
}

/// Command-line overrides applied on top of a scenario.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct Overrides {
    pub seed: Option<u64>,
    pub grid_nodes: Option<usize>,
    pub tmax: Option<f64>,
}

/// Grid description inside scenario parameters.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GridSpec {
    #[serde(default = "halfline")]
    pub kind: GridShape,
    /// Number of nodes.
    pub nodes: usize,
    /// Half-line truncation or interval length.
    pub tmax: f64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum GridShape {
    Halfline,
    Interval,
}

fn halfline() -> GridShape {
    GridShape::Halfline
}

impl GridSpec {
    pub fn halfline_default() -> GridSpec {
        GridSpec { kind: GridShape::Halfline, nodes: DEFAULT_INTERVALS + 1, tmax: DEFAULT_TMAX }
    }

    pub fn interval(length: f64, nodes: usize) -> GridSpec {
        GridSpec { kind: GridShape::Interval, nodes, tmax: length }
    }

    /// Apply `--grid-nodes` and `--tmax`.
    pub fn overridden(&self, o: &Overrides) -> GridSpec {
        GridSpec { kind: self.kind, nodes: o.grid_nodes.unwrap_or(self.nodes), tmax: o.tmax.unwrap_or(self.tmax) }
    }

    pub fn validate(&self) -> Result<()> {
        if self.nodes > MAX_NODES {
            return Err(Error::Scenario(format!("{} grid nodes exceed {MAX_NODES}", self.nodes)));
        }
        if !(self.tmax.is_finite() && self.tmax > 0.0) {
            return Err(Error::Scenario(format!("tmax {} must be positive", self.tmax)));
        }
        Ok(())
    }

    pub fn build(&self) -> Result<Grid> {
        self.validate()?;
        match self.kind {
            GridShape::Halfline => Grid::halfline(self.tmax, self.nodes.saturating_sub(1)),
            GridShape::Interval => Grid::interval(self.tmax, self.nodes),
        }
    }
}

/// Parameters of a `lie` scenario.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LieParams {
    /// Diagonals of `tau_1, tau_2, tau_3`; missing ones are zero.
    pub tau: Vec<Vec<f64>>,
    /// Partition per block; the principal triple when absent.
    #[serde(default)]
    pub partition: Option<Vec<Vec<usize>>>,
    #[serde(default = "ten")]
    pub conjugations: usize,
    #[serde(default)]
    pub seed: u64,
}

/// Parameters of a `nahm` scenario.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct NahmParams {
    pub mode: NahmMode,
    /// Diagonals of the limiting triple (`model`) or matrix size source (`ivp`).
    #[serde(default)]
    pub tau: Vec<Vec<f64>>,
    /// Diagonal of `tau_0` (`model`).
    #[serde(default)]
    pub tau0: Option<Vec<f64>>,
    #[serde(default)]
    pub partition: Option<Vec<Vec<usize>>>,
    /// Matrix size for `ivp`.
    #[serde(default)]
    pub n: Option<usize>,
    /// Size of the random initial data for `ivp`.
    #[serde(default = "default_scale")]
    pub scale: f64,
    #[serde(default)]
    pub grid: Option<GridSpec>,
    #[serde(default)]
    pub seed: u64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum NahmMode {
    Model,
    Ivp,
}

/// Parameters of a `gauge` scenario.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GaugeParams {
    pub mode: GaugeMode,
    #[serde(default = "two")]
    pub n: usize,
    /// Number of random based gauges (`kronheimer`).
    #[serde(default = "ten")]
    pub gauges: usize,
    /// `(b, c)` of the centering gauge (`center`).
    #[serde(default = "unit_pair")]
    pub bc: [f64; 2],
    #[serde(default)]
    pub tau: Vec<Vec<f64>>,
    #[serde(default)]
    pub tau0: Option<Vec<f64>>,
    #[serde(default = "default_scale")]
    pub scale: f64,
    #[serde(default)]
    pub grid: Option<GridSpec>,
    #[serde(default)]
    pub seed: u64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum GaugeMode {
    Kronheimer,
    Center,
}

/// Parameters of a `metric` scenario.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MetricParams {
    pub mode: MetricMode,
    /// Diagonals of the limiting triple fixing the stratum.
    pub tau: Vec<Vec<f64>>,
    pub b: f64,
    /// Rate of `X_1 = delta_1 (1 - e^{-eta t})` (`signed_norm`).
    #[serde(default = "one")]
    pub eta: f64,
    #[serde(default)]
    pub grid: Option<GridSpec>,
    #[serde(default)]
    pub seed: u64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MetricMode {
    /// Constant `(0, delta_1, delta_2, delta_3)` with `delta` in `Z(c)`.
    NullVector,
    /// `X_1 = delta_1 (1 - e^{-eta t})`.
    SignedNorm,
}

/// Parameters of an `implode` scenario.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ImplodeParams {
    /// Diagonal of `tau_1`, non-increasing.
    pub face: Vec<f64>,
    pub b: f64,
    #[serde(default = "ten")]
    pub samples: usize,
    #[serde(default)]
    pub grid: Option<GridSpec>,
    #[serde(default)]
    pub seed: u64,
}

/// Parameters of an `acceptance` scenario.
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AcceptanceParams {
    #[serde(default)]
    pub filter: Option<String>,
}

fn ten() -> usize {
    10
}
fn two() -> usize {
    2
}
fn one() -> f64 {
    1.0
}
fn unit_pair() -> [f64; 2] {
    [1.0, 1.0]
}
fn default_scale() -> f64 {
    0.3
}

/// Typed parameters, one variant per kind.
#[derive(Clone, Debug, PartialEq)]
pub enum Params {
    Lie(LieParams),
    Nahm(NahmParams),
    Gauge(GaugeParams),
    Metric(MetricParams),
    Implode(ImplodeParams),
    Acceptance(AcceptanceParams),
}

fn tau_size(tau: &[Vec<f64>]) -> Result<Option<usize>> {
    if tau.len() > 3 {
        return Err(Error::Scenario("tau has at most three diagonals".into()));
    }
    let n = tau.first().map(|d| d.len());
    if tau.iter().any(|d| Some(d.len()) != n) {
        return Err(Error::Scenario("tau diagonals differ in length".into()));
    }
    Ok(n)
}

fn check_n(n: usize) -> Result<()> {
    if n == 0 || n > MAX_N {
        return Err(Error::Scenario(format!("n = {n} outside 1..={MAX_N}")));
    }
    Ok(())
}

fn check_b(b: f64) -> Result<()> {
    if !(b > 0.0 && b <= MAX_B) {
        return Err(Error::Scenario(format!("b = {b} outside (0, {MAX_B}]")));
    }
    Ok(())
}

fn check_grid(g: &Option<GridSpec>) -> Result<()> {
    g.as_ref().map_or(Ok(()), |g| g.validate())
}

impl Scenario {
    /// Parse and validate scenario text; every failure is a parse error.
    pub fn parse(text: &str) -> Result<(Scenario, Params)> {
        let sc: Scenario = serde_json::from_str(text).map_err(|e| Error::Scenario(e.to_string()))?;
        let params = sc.typed_params()?;
        Ok((sc, params))
    }

    /// Decode `params` for the declared kind and check documented ranges.
    pub fn typed_params(&self) -> Result<Params> {
        if self.schema != SCHEMA_VERSION {
            return Err(Error::Scenario(format!("schema {} is not {SCHEMA_VERSION}", self.schema)));
        }
        if self.name.is_empty() || !self.name.chars().all(|c| c.is_ascii_alphanumeric() || c == '_' || c == '-') {
            return Err(Error::Scenario(format!("name {:?} must be [A-Za-z0-9_-]+", self.name)));
        }
        let v = self.params.clone();
        let de = |e: serde_json::Error| Error::Scenario(format!("params: {e}"));
        let p = match self.kind {
            Kind::Lie => {
                let p: LieParams = serde_json::from_value(v).map_err(de)?;
                check_n(tau_size(&p.tau)?.unwrap_or(0))?;
                Params::Lie(p)
            }
            Kind::Nahm => {
                let p: NahmParams = serde_json::from_value(v).map_err(de)?;
                match p.mode {
                    NahmMode::Model => check_n(tau_size(&p.tau)?.unwrap_or(0))?,
                    NahmMode::Ivp => check_n(p.n.unwrap_or(0))?,
                }
                check_grid(&p.grid)?;
                Params::Nahm(p)
            }
            Kind::Gauge => {
                let p: GaugeParams = serde_json::from_value(v).map_err(de)?;
                match p.mode {
                    GaugeMode::Kronheimer => check_n(p.n)?,
                    GaugeMode::Center => {
                        check_n(tau_size(&p.tau)?.unwrap_or(0))?;
                        check_b(p.bc[0])?;
                    }
                }
                check_grid(&p.grid)?;
                Params::Gauge(p)
            }
            Kind::Metric => {
                let p: MetricParams = serde_json::from_value(v).map_err(de)?;
                check_n(tau_size(&p.tau)?.unwrap_or(0))?;
                if p.mode == MetricMode::SignedNorm {
                    check_b(p.b)?;
                } else if !(p.b >= 0.0 && p.b <= MAX_B) {
                    return Err(Error::Scenario(format!("b = {} outside [0, {MAX_B}]", p.b)));
                }
                if !(p.eta > 0.0 && p.eta.is_finite()) {
                    return Err(Error::Scenario(format!("eta = {} must be positive", p.eta)));
                }
                check_grid(&p.grid)?;
                Params::Metric(p)
            }
            Kind::Implode => {
                let p: ImplodeParams = serde_json::from_value(v).map_err(de)?;
                check_n(p.face.len())?;
                check_b(p.b)?;
                check_grid(&p.grid)?;
                Params::Implode(p)
            }
            Kind::Acceptance => Params::Acceptance(serde_json::from_value(v).map_err(de)?),
        };
        Ok(p)
    }
}
