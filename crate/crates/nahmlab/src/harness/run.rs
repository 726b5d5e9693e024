//! Scenario dispatch and the exit-code contract.

use std::collections::BTreeMap;
use std::path::Path;

use crate::error::{Error, Result};
use crate::gauge::{apply_gauge, center_tau0_gauge, kronheimer_map};
use crate::implosion::{baby_geometry, baby_omega, ImplosionTangent, TangentCoords, WeylFace};
use crate::lie::element::LieElement;
use crate::lie::matrix;
use crate::lie::stability::stability_constants;
use crate::lie::stratum::centralizer_blocks;
use crate::lie::triple::{bracket_defect, su2_triple_from_partition, Su2Triple};
use crate::metric::{bielawski_pair, MetricConfig};
use crate::nahm::{
    integrate_ivp, model_solution, nahm_residual_sup, zero_quad, Grid, T0Source, TangentAsymptotics,
    TangentVector,
};

use super::acceptance::{centralizer_relation_defect, run_acceptance};
use super::fixtures::*;
use super::report::{artifact_path, path_csv, tangent_csv, Report};
use super::scenario::*;

/// Why a run did not produce a passing report.
#[derive(Debug)]
pub enum RunError {
    /// Unreadable or invalid scenario; nothing was written.
    Parse(String),
    /// The integrator diverged.
    BlowUp(String),
    /// Any other failure during computation or output.
    Failed(String),
}

impl RunError {
    pub fn exit_code(&self) -> i32 {
        match self {
            RunError::Parse(_) => 2,
            RunError::BlowUp(_) => 3,
            RunError::Failed(_) => 1,
        }
    }
}

impl std::fmt::Display for RunError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            RunError::Parse(m) => write!(f, "parse error: {m}"),
            RunError::BlowUp(m) => write!(f, "numeric blow-up: {m}"),
            RunError::Failed(m) => write!(f, "failed: {m}"),
        }
    }
}

fn classify(e: Error) -> RunError {
    match e {
        Error::BlowUp { .. } => RunError::BlowUp(e.to_string()),
        Error::Scenario(m) => RunError::Parse(m),
        e => RunError::Failed(e.to_string()),
    }
}

/// Exit status of a finished run: 0 iff every assertion passed.
pub fn exit_code(outcome: &std::result::Result<Report, RunError>) -> i32 {
    match outcome {
        Ok(r) if r.passed() => 0,
        Ok(_) => 1,
        Err(e) => e.exit_code(),
    }
}

/// Numbers, CSV siblings and default assertions produced by a kind.
#[derive(Default)]
struct Computation {
    results: BTreeMap<String, f64>,
    csv: Vec<(String, String)>,
    checks: Vec<Bound>,
}

impl Computation {
    fn put(&mut self, k: &str, v: f64) {
        self.results.insert(k.to_string(), v);
    }
}

/// Compute the report for already-parsed input without touching the disk.
pub fn evaluate(sc: &Scenario, params: &Params, o: &Overrides) -> std::result::Result<(Report, Vec<(String, String)>), RunError> {
    let c = compute(params, o).map_err(classify)?;
    let mut status = BTreeMap::new();
    for b in c.checks.iter().chain(&sc.checks) {
        let ok = c.results.get(&b.key).is_some_and(|&v| b.holds(v));
        status.insert(b.label(), ok);
    }
    let csv: Vec<(String, String)> = c.csv.into_iter().map(|(n, t)| (format!("{}_{n}.csv", sc.name), t)).collect();
    let mut artifacts: Vec<String> = csv.iter().map(|(n, _)| n.clone()).collect();
    artifacts.insert(0, format!("{}.json", sc.name));
    let mut echo = sc.clone();
    apply_echo(&mut echo, o);
    Ok((Report { scenario: echo, results: c.results, artifacts, status }, csv))
}

/// Record command-line overrides in the echoed scenario.
fn apply_echo(sc: &mut Scenario, o: &Overrides) {
    if let Some(p) = sc.params.as_object_mut() {
        if let Some(s) = o.seed {
            if sc.kind != Kind::Acceptance {
                p.insert("seed".into(), s.into());
            }
        }
        if o.grid_nodes.is_some() || o.tmax.is_some() {
            if let Some(g) = p.get_mut("grid").and_then(|g| g.as_object_mut()) {
                if let Some(n) = o.grid_nodes {
                    g.insert("nodes".into(), n.into());
                }
                if let Some(t) = o.tmax {
                    g.insert("tmax".into(), t.into());
                }
            }
        }
    }
}

/// Load `path`, run it and write the report and CSV siblings into `out_dir`.
/// Nothing is written unless the computation finishes.
pub fn run_scenario(path: &Path, out_dir: &Path, o: &Overrides) -> std::result::Result<Report, RunError> {
    let text = std::fs::read_to_string(path).map_err(|e| RunError::Parse(format!("{}: {e}", path.display())))?;
    let (sc, params) = Scenario::parse(&text).map_err(|e| RunError::Parse(e.to_string()))?;
    if let Some(g) = o.grid_nodes {
        if g > MAX_NODES {
            return Err(RunError::Parse(format!("{g} grid nodes exceed {MAX_NODES}")));
        }
    }
    let (report, csv) = evaluate(&sc, &params, o)?;
    let io = |e: std::io::Error| RunError::Failed(e.to_string());
    std::fs::create_dir_all(out_dir).map_err(io)?;
    for (name, text) in &csv {
        std::fs::write(artifact_path(out_dir, name).map_err(classify)?, text).map_err(io)?;
    }
    let json = report.to_json().map_err(classify)?;
    std::fs::write(out_dir.join(&report.artifacts[0]), json).map_err(io)?;
    Ok(report)
}

fn compute(p: &Params, o: &Overrides) -> Result<Computation> {
    match p {
        Params::Lie(p) => lie(p, o),
        Params::Nahm(p) => nahm(p, o),
        Params::Gauge(p) => gauge(p, o),
        Params::Metric(p) => metric(p, o),
        Params::Implode(p) => implode(p, o),
        Params::Acceptance(p) => acceptance(p),
    }
}

fn triple_of(tau: &[Vec<f64>]) -> Result<[LieElement; 3]> {
    let n = tau.first().map_or(0, |d| d.len());
    diagonal_triple(tau, n)
}

fn sigma_of(s: &crate::lie::StratumData, partition: &Option<Vec<Vec<usize>>>) -> Result<Su2Triple> {
    match partition {
        Some(p) => su2_triple_from_partition(s, p),
        None => principal_triple(s),
    }
}

fn grid_of(g: &Option<GridSpec>, default: GridSpec, o: &Overrides) -> Result<Grid> {
    g.clone().unwrap_or(default).overridden(o).build()
}

fn lie(p: &LieParams, o: &Overrides) -> Result<Computation> {
    let tau = triple_of(&p.tau)?;
    let s = centralizer_blocks(&tau)?;
    let sigma = sigma_of(&s, &p.partition)?;
    let sc = stability_constants(&sigma, &s)?;
    let mut c = Computation::default();
    c.put("n", s.n() as f64);
    c.put("blocks", s.num_blocks() as f64);
    c.put("dim_c", s.dim_c() as f64);
    c.put("dim_perp", s.dim_perp() as f64);
    c.put("stratum_zeta", s.zeta());
    c.put("stratum_eta", s.eta());
    c.put("zeta_bound", sc.zeta_bound);
    let (h0, h1) = lo_hi(&sc.hess_spectrum);
    let (c0, c1) = lo_hi(&sc.casimir_spectrum);
    c.put("hess_min", h0);
    c.put("hess_max", h1);
    c.put("casimir_min", c0);
    c.put("casimir_max", c1);
    c.put("triple_defect", bracket_defect(sigma.sigma())?);
    let mut r = seeded(o.seed.unwrap_or(p.seed));
    let mut drift: f64 = 0.0;
    for _ in 0..p.conjugations {
        let u = s.random_group_element(&mut r);
        let k = stability_constants(&sigma.conjugate(&u), &s)?;
        for (a, b) in sc.hess_spectrum.iter().zip(&k.hess_spectrum).chain(sc.casimir_spectrum.iter().zip(&k.casimir_spectrum)) {
            drift = drift.max((a - b).abs());
        }
    }
    c.put("conjugation_drift", drift);
    let mut rel: f64 = 0.0;
    for _ in 0..p.conjugations.max(1) {
        rel = rel.max(centralizer_relation_defect(&s, &mut r)?);
    }
    c.put("relation_defect", rel);
    c.checks = vec![
        Bound::max("triple_defect", 1e-10),
        Bound::max("conjugation_drift", 1e-8),
        Bound::max("relation_defect", 1e-10),
    ];
    Ok(c)
}

fn lo_hi(v: &[f64]) -> (f64, f64) {
    (v.iter().cloned().fold(f64::INFINITY, f64::min), v.iter().cloned().fold(f64::NEG_INFINITY, f64::max))
}

fn nahm(p: &NahmParams, o: &Overrides) -> Result<Computation> {
    let mut c = Computation::default();
    let t = match p.mode {
        NahmMode::Model => {
            let tau = triple_of(&p.tau)?;
            let n = tau[0].dim();
            let s = centralizer_blocks(&tau)?;
            let sigma = sigma_of(&s, &p.partition)?;
            let tau0 = match &p.tau0 {
                Some(d) => LieElement::diagonal(d)?,
                None => LieElement::zeros(n),
            };
            let g = grid_of(&p.grid, GridSpec::halfline_default(), o)?;
            model_solution(&tau0, &tau, &sigma, &g)?
        }
        NahmMode::Ivp => {
            let n = p.n.unwrap_or(2);
            let mut r = seeded(o.seed.unwrap_or(p.seed));
            let init: [LieElement; 3] = std::array::from_fn(|_| &LieElement::random(n, &mut r) * p.scale);
            let t0 = &LieElement::random(n, &mut r) * p.scale;
            let g = grid_of(&p.grid, GridSpec::interval(1.0, 1025), o)?;
            integrate_ivp(&init, &T0Source::Constant(t0), &g)?
        }
    };
    c.put("max_residual", nahm_residual_sup(&t)?);
    c.put("nodes", t.grid().len() as f64);
    c.put("t_max", t.grid().t_max());
    let end = t.samples().last().unwrap();
    c.put("end_norm", end.iter().map(|x| x.norm_sq()).sum::<f64>().sqrt());
    c.csv.push(("path".into(), path_csv(&t)));
    c.checks = vec![Bound::max("max_residual", 1e-8)];
    Ok(c)
}

fn gauge(p: &GaugeParams, o: &Overrides) -> Result<Computation> {
    let mut c = Computation::default();
    let mut r = seeded(o.seed.unwrap_or(p.seed));
    match p.mode {
        GaugeMode::Kronheimer => {
            let g = grid_of(&p.grid, GridSpec::interval(1.0, 1025), o)?;
            let init: [LieElement; 3] = std::array::from_fn(|_| &LieElement::random(p.n, &mut r) * p.scale);
            let t0 = &LieElement::random(p.n, &mut r) * p.scale;
            let t = integrate_ivp(&init, &T0Source::Constant(t0), &g)?;
            let k = kronheimer_map(&t)?;
            let mut drift: f64 = 0.0;
            for _ in 0..p.gauges {
                let u = sine_gauge(&g, &LieElement::random(p.n, &mut r), &LieElement::random(p.n, &mut r))?;
                let q = kronheimer_map(&apply_gauge(&u, &t)?)?;
                drift = drift.max(matrix::fro(&(&k.g_end - &q.g_end)) + matrix::fro(&(&k.beta0 - &q.beta0)));
            }
            c.put("invariance_drift", drift);
            c.put("nahm_residual", k.nahm_residual);
            c.put("det_defect", (matrix::det(&k.g_end) - matrix::C64::new(1.0, 0.0)).norm());
            c.put("g_end_norm", matrix::fro(&k.g_end));
            c.put("beta0_norm", matrix::fro(&k.beta0));
            c.checks = vec![Bound::max("invariance_drift", 1e-8)];
        }
        GaugeMode::Center => {
            let tau = triple_of(&p.tau)?;
            let n = tau[0].dim();
            let s = centralizer_blocks(&tau)?;
            let sigma = principal_triple(&s)?;
            let tau0 = match &p.tau0 {
                Some(d) => LieElement::diagonal(d)?,
                None => LieElement::zeros(n),
            };
            let g = grid_of(&p.grid, GridSpec::halfline_default(), o)?;
            let t = model_solution(&tau0, &tau, &sigma, &g)?;
            let [b, cc] = p.bc;
            let cg = center_tau0_gauge(&t, b, cc)?;
            let dev = g
                .nodes()
                .iter()
                .zip(cg.path.samples())
                .map(|(tk, q)| (&q[0] - &(&tau0 * (cc * b * (-cc * tk).exp()))).norm())
                .fold(0.0, f64::max);
            c.put("centering_deviation", dev);
            c.put("residual_after", nahm_residual_sup(&cg.path)?);
            c.csv.push(("path".into(), path_csv(&cg.path)));
            c.checks = vec![Bound::max("centering_deviation", 1e-9)];
        }
    }
    Ok(c)
}

fn metric(p: &MetricParams, o: &Overrides) -> Result<Computation> {
    let tau = triple_of(&p.tau)?;
    let n = tau[0].dim();
    let s = centralizer_blocks(&tau)?;
    let mut r = seeded(o.seed.unwrap_or(p.seed));
    let mut c = Computation::default();
    let mut delta = zero_quad(n);
    match p.mode {
        MetricMode::NullVector => {
            let g = grid_of(&p.grid, GridSpec::halfline_default(), o)?;
            for d in delta.iter_mut().skip(1) {
                *d = s.random_z(&mut r);
            }
            let dd: f64 = delta.iter().map(|d| d.norm_sq()).sum();
            let asym = TangentAsymptotics { delta: delta.clone(), ..TangentAsymptotics::zero(n) };
            let x = TangentVector::from_fn(&g, |_| delta.clone(), Some(asym))?;
            let v = bielawski_pair(&x, &x, &MetricConfig::new(p.b))?.value;
            c.put("bielawski_value", v);
            c.put("delta_norm_sq", dd);
            c.put("expected", p.b * dd);
            c.put("abs_error_ratio", (v - p.b * dd).abs() / dd);
            c.checks = vec![Bound::max("abs_error_ratio", 1e-8)];
        }
        MetricMode::SignedNorm => {
            let g = grid_of(&p.grid, GridSpec { kind: GridShape::Halfline, nodes: 16385, tmax: 40.0 }, o)?;
            let d1 = s.random_z(&mut r);
            delta[1] = d1.clone();
            let eta = p.eta;
            let x = TangentVector::from_fn(
                &g,
                |t| {
                    let mut q = zero_quad(n);
                    q[1] = &d1 * (1.0 - (-eta * t).exp());
                    q
                },
                Some(TangentAsymptotics { delta, ..TangentAsymptotics::zero(n) }),
            )?;
            let rep = bielawski_pair(&x, &x, &MetricConfig::new(p.b))?;
            let dd = d1.norm_sq();
            let want = dd * (p.b - 1.5 / eta);
            let err = if want == 0.0 { rep.value.abs() / dd } else { ((rep.value - want) / want).abs() };
            c.put("bielawski_value", rep.value);
            c.put("delta1_norm_sq", dd);
            c.put("expected", want);
            c.put("ratio", rep.value / dd);
            c.put("error", err);
            c.put("interval_part", rep.interval_part);
            c.put("tail_part", rep.tail_part);
            c.put("boundary_part", rep.boundary_part);
            c.csv.push(("tangent".into(), tangent_csv(&x)));
            c.checks = vec![Bound::max("error", 1e-6)];
        }
    }
    Ok(c)
}

fn implode(p: &ImplodeParams, o: &Overrides) -> Result<Computation> {
    let face = WeylFace::from_values(&p.face)?;
    let geo = baby_geometry(&face, p.b)?;
    let g = grid_of(&p.grid, GridSpec { kind: GridShape::Halfline, nodes: 8193, tmax: 40.0 }, o)?;
    let mut r = seeded(o.seed.unwrap_or(p.seed));
    let cfg = MetricConfig::new(p.b);
    let (mut norm_err, mut omega_err, mut kahler, mut min_ratio): (f64, f64, f64, f64) = (0.0, 0.0, 0.0, f64::INFINITY);
    let mut first: Option<TangentVector> = None;
    for _ in 0..p.samples {
        let cx = TangentCoords::random(&face, &mut r);
        let cy = TangentCoords::random(&face, &mut r);
        let tx = ImplosionTangent::from_coords(&face, &cx, p.b)?;
        let ty = ImplosionTangent::from_coords(&face, &cy, p.b)?;
        let x = tx.sample(&g)?;
        let y = ty.sample(&g)?;
        let closed = tx.closed_norm_sq();
        let sampled = bielawski_pair(&x, &x, &cfg)?.value;
        norm_err = norm_err.max(((sampled - closed) / closed).abs());
        let w = geo.symplectic(&cx, &cy);
        omega_err = omega_err.max((baby_omega(&x, &y, &cfg)? - w).abs() / (1.0 + w.abs()));
        kahler = kahler.max((geo.symplectic_from_metric(&cx, &cy)? - w).abs());
        let size = cx.v.norm_sq() + cx.v_perp.norm_sq() + cx.w.norm_sq();
        min_ratio = min_ratio.min(geo.metric(&cx, &cx)? / size);
        if first.is_none() {
            first = Some(x);
        }
    }
    let mut c = Computation::default();
    c.put("norm_relative_error", norm_err);
    c.put("omega_relative_error", omega_err);
    c.put("kahler_gap", kahler);
    c.put("min_metric_ratio", min_ratio);
    c.put("roots", face.roots().len() as f64);
    for (i, a) in face.alpha_values().iter().enumerate() {
        c.put(&format!("alpha_{i}"), *a);
    }
    if let Some(x) = first {
        c.csv.push(("tangent".into(), tangent_csv(&x)));
    }
    c.checks = vec![
        Bound::max("norm_relative_error", 1e-5),
        Bound::max("omega_relative_error", 1e-5),
        Bound::max("kahler_gap", 1e-10),
        Bound::min("min_metric_ratio", 1e-12),
    ];
    Ok(c)
}

fn acceptance(p: &AcceptanceParams) -> Result<Computation> {
    let mut c = Computation::default();
    for (o, _) in run_acceptance(p.filter.as_deref()) {
        let key = format!("c{:02}_{}", o.id, o.name);
        c.put(&format!("{key}.passed"), if o.passed { 1.0 } else { 0.0 });
        c.put(&format!("{key}.worst"), o.worst);
        c.put(&format!("{key}.bound"), o.bound);
        c.checks.push(Bound::min(&format!("{key}.passed"), 1.0));
    }
    Ok(c)
}
