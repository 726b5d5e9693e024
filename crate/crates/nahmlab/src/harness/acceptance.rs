//! The acceptance suite: fourteen numbered criteria, each a self-contained
//! deterministic computation with a pass/fail verdict.

use std::time::Instant;

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gauge::{apply_gauge, center_tau0_gauge, fundamental_vector_field, kronheimer_map};
use crate::implosion::{baby_geometry, ImplosionTangent, TangentCoords, WeylFace};
use crate::lie::element::LieElement;
use crate::lie::matrix::{self, I};
use crate::lie::stability::stability_constants;
use crate::lie::stratum::{centralizer_blocks, StratumData};
use crate::lie::triple::{stratum_partitions, su2_triple_from_partition, Su2Triple};
use crate::metric::{
    bielawski_norm_sq, bielawski_pair, glue_paths, quaternion_act, symplectic_pair, Axis, MetricConfig,
};
use crate::nahm::{
    decay_diagnostics, integrate_ivp, model_solution, model_solution_offset, nahm_residual, nahm_residual_sup,
    zero_quad, Grid, NahmPath, T0Source, TangentAsymptotics, TangentVector,
};

use super::fixtures::*;

/// Verdict on one criterion.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CriterionOutcome {
    pub id: usize,
    pub name: String,
    pub passed: bool,
    /// Worst observed value of the checked quantity.
    pub worst: f64,
    /// Bound it was checked against.
    pub bound: f64,
    pub detail: String,
}

/// A criterion: number, short name and the check itself.
pub struct Criterion {
    pub id: usize,
    pub name: &'static str,
    run: fn() -> Result<Check>,
}

/// Raw result of a check before it is labelled.
struct Check {
    worst: f64,
    bound: f64,
    passed: bool,
    detail: String,
}

impl Check {
    /// Pass iff `worst < bound`.
    fn below(worst: f64, bound: f64, detail: impl Into<String>) -> Check {
        Check { worst, bound, passed: worst < bound, detail: detail.into() }
    }

    /// Combine with another check; both must pass.
    /// The reported value is that of the first failing check, else of `self`.
    fn and(self, other: Check) -> Check {
        let (w, b) = if self.passed && !other.passed { (other.worst, other.bound) } else { (self.worst, self.bound) };
        Check { worst: w, bound: b, passed: self.passed && other.passed, detail: format!("{}; {}", self.detail, other.detail) }
    }
}

impl Criterion {
    /// Run and label the check. Errors count as failures.
    pub fn run(&self) -> CriterionOutcome {
        let (passed, worst, bound, detail) = match (self.run)() {
            Ok(c) => (c.passed, c.worst, c.bound, c.detail),
            Err(e) => (false, f64::NAN, f64::NAN, format!("error: {e}")),
        };
        CriterionOutcome { id: self.id, name: self.name.to_string(), passed, worst, bound, detail }
    }
}

/// All criteria in order.
pub fn criteria() -> Vec<Criterion> {
    vec![
        Criterion { id: 1, name: "model_solution_residual", run: model_solution_residual },
        Criterion { id: 2, name: "null_vector", run: null_vector },
        Criterion { id: 3, name: "signed_norm", run: signed_norm },
        Criterion { id: 4, name: "quaternion_algebra", run: quaternion_algebra },
        Criterion { id: 5, name: "moment_map_duality", run: moment_map_duality },
        Criterion { id: 6, name: "stability_spectra", run: stability_spectra },
        Criterion { id: 7, name: "tau0_centering", run: tau0_centering },
        Criterion { id: 8, name: "kronheimer_map", run: kronheimer },
        Criterion { id: 9, name: "gluing_b_shift", run: gluing_b_shift },
        Criterion { id: 10, name: "baby_nahm_metric", run: baby_nahm_metric },
        Criterion { id: 11, name: "symplectic_b_independence", run: symplectic_b_independence },
        Criterion { id: 12, name: "kahler_compatibility", run: kahler_compatibility },
        Criterion { id: 13, name: "centralizer_relations", run: centralizer_relations },
        Criterion { id: 14, name: "decay_diagnostics", run: decay_classes },
    ]
}

/// Criteria whose name contains `filter`, or all of them.
pub fn select(filter: Option<&str>) -> Vec<Criterion> {
    criteria().into_iter().filter(|c| filter.is_none_or(|f| c.name.contains(f) || c.id.to_string() == f)).collect()
}

/// Run the selected criteria, returning outcomes and wall-clock seconds.
pub fn run_acceptance(filter: Option<&str>) -> Vec<(CriterionOutcome, f64)> {
    select(filter)
        .iter()
        .map(|c| {
            let start = Instant::now();
            let o = c.run();
            (o, start.elapsed().as_secs_f64())
        })
        .collect()
}

/// One line per criterion: `PASS  3 signed_norm  worst 1.2e-9 < 1e-6  (0.41 s)`.
pub fn format_line(o: &CriterionOutcome, seconds: f64) -> String {
    format!(
        "{} {:>2} {:<26} worst {:.3e} < {:.1e}  ({:.2} s)  {}",
        if o.passed { "PASS" } else { "FAIL" },
        o.id,
        o.name,
        o.worst,
        o.bound,
        seconds,
        o.detail
    )
}

fn strata(values: &[&[f64]]) -> Result<Vec<StratumData>> {
    values.iter().map(|a| Ok(stratum_of(a)?.1)).collect()
}

fn model_solution_residual() -> Result<Check> {
    let start = Instant::now();
    let g = Grid::halfline_default();
    let mut worst: f64 = 0.0;
    let mut count = 0;
    for a in [&[0.0, 0.0][..], &[0.4, -0.4], &[0.0, 0.0, 0.0], &[0.5, 0.5, -1.0], &[1.0, 0.0, -1.0]] {
        let (tau, s) = stratum_of(a)?;
        for parts in stratum_partitions(&s) {
            let sigma = su2_triple_from_partition(&s, &parts)?;
            let t = model_solution(&LieElement::zeros(a.len()), &tau, &sigma, &g)?;
            worst = worst.max(nahm_residual_sup(&t)?);
            count += 1;
        }
    }
    let secs = start.elapsed().as_secs_f64();
    let c = Check::below(worst, 1e-10, format!("{count} model solutions"));
    Ok(Check { passed: c.passed && secs < 5.0, ..c })
}

fn su3_center_stratum() -> Result<StratumData> {
    centralizer_blocks(&diagonal_triple(&[vec![1.0, 1.0, -2.0], vec![0.5, 0.5, -1.0]], 3)?)
}

fn null_vector() -> Result<Check> {
    let s = su3_center_stratum()?;
    let g = Grid::halfline_default();
    let mut worst: f64 = 0.0;
    for seed in 0..10 {
        let mut r = seeded(seed);
        let mut delta = zero_quad(3);
        for d in delta.iter_mut().skip(1) {
            *d = s.random_z(&mut r);
        }
        let dd: f64 = delta.iter().map(|d| d.norm_sq()).sum();
        let asym = TangentAsymptotics { delta: delta.clone(), ..TangentAsymptotics::zero(3) };
        let x = TangentVector::from_fn(&g, |_| delta.clone(), Some(asym))?;
        let v = bielawski_pair(&x, &x, &MetricConfig::new(0.0))?.value;
        worst = worst.max(v.abs() / dd);
    }
    Ok(Check::below(worst, 1e-8, "|value| / |delta|^2 over 10 constant Z(c) vectors at b = 0"))
}

/// `X_1(t) = delta_1 (1 - e^{-eta t})` and its norm at `b`.
pub fn signed_norm_example(b: f64, eta: f64, nodes: usize, seed: u64) -> Result<(f64, f64, f64)> {
    let s = su3_center_stratum()?;
    let g = Grid::halfline(40.0, nodes)?;
    let d1 = s.random_z(&mut seeded(seed));
    let mut delta = zero_quad(3);
    delta[1] = d1.clone();
    let x = TangentVector::from_fn(
        &g,
        |t| {
            let mut q = zero_quad(3);
            q[1] = &d1 * (1.0 - (-eta * t).exp());
            q
        },
        Some(TangentAsymptotics { delta, ..TangentAsymptotics::zero(3) }),
    )?;
    let v = bielawski_norm_sq(&x, &MetricConfig::new(b))?;
    Ok((v, d1.norm_sq() * (b - 1.5 / eta), d1.norm_sq()))
}

fn signed_norm() -> Result<Check> {
    let mut worst: f64 = 0.0;
    for (b, eta) in [(1.0, 1.0), (1.0, 0.5), (2.0, 3.0), (1.0, 1.5)] {
        let (v, want, dd) = signed_norm_example(b, eta, 16384, 2)?;
        let err = if want == 0.0 { v.abs() / dd } else { ((v - want) / want).abs() };
        worst = worst.max(err);
    }
    Ok(Check::below(worst, 1e-6, "relative error, absolute / |delta_1|^2 at the zero crossing"))
}

fn quaternion_algebra() -> Result<Check> {
    let s = su3_center_stratum()?;
    let g = Grid::halfline_default();
    let cfg = MetricConfig::new(1.3);
    let mut exact = true;
    let mut worst: f64 = 0.0;
    for seed in 0..5 {
        let mut r = seeded(100 + seed);
        let x = halfline_tangent(&g, &s, &mut r)?;
        let y = halfline_tangent(&g, &s, &mut r)?;
        let neg = x.map(|q| std::array::from_fn(|i| -&q[i]));
        for a in Axis::ALL {
            exact &= quaternion_act(a, &quaternion_act(a, &x)) == neg;
        }
        exact &= quaternion_act(Axis::I, &quaternion_act(Axis::J, &x)) == quaternion_act(Axis::K, &x);
        let base = bielawski_pair(&x, &y, &cfg)?.value;
        for a in Axis::ALL {
            let v = bielawski_pair(&quaternion_act(a, &x), &quaternion_act(a, &y), &cfg)?.value;
            worst = worst.max((v - base).abs());
        }
    }
    let c = Check::below(worst, 1e-9, "|<IX,IY> - <X,Y>| over I, J, K");
    Ok(Check { passed: c.passed && exact, detail: format!("{}; relations exact: {exact}", c.detail), ..c })
}

fn moment_map_duality() -> Result<Check> {
    let g = Grid::interval(3.0, 3001)?;
    let cfg = MetricConfig::new(1.0);
    let mut worst: f64 = 0.0;
    for seed in 0..20 {
        let mut r = seeded(200 + seed);
        // Small data keeps the solution away from its blow-up time on [0, 3].
        let init: [LieElement; 3] = std::array::from_fn(|_| &LieElement::random(2, &mut r) * 0.15);
        let w = 0.2 + 0.1 * (seed % 3) as f64;
        let t0 = move |t: f64| LieElement::diagonal(&[w * t.sin(), -w * t.sin()]).unwrap();
        let t = integrate_ivp(&init, &T0Source::Function(&t0), &g)?;
        let x = smooth_interval_tangent(&g, 2, &mut r)?;
        let xi = bump_algebra_path(&g, &LieElement::random(2, &mut r), 0.5, 2.5)?;
        let omega = symplectic_pair(Axis::I, &fundamental_vector_field(&xi, &t)?, &x, &cfg)?;
        // mu_I = -(first residual); central difference of <mu_I, xi> along X.
        let theta = 1e-5;
        let moved = |s: f64| {
            NahmPath::new(
                g.clone(),
                t.samples().iter().zip(x.samples()).map(|(p, q)| std::array::from_fn(|i| &p[i] + &(&q[i] * s))).collect(),
                None,
            )
        };
        let rp = nahm_residual(&moved(theta)?)?;
        let rm = nahm_residual(&moved(-theta)?)?;
        let fd: Vec<f64> = (0..g.len())
            .map(|k| -xi.samples()[k].dot(&(&rp[0][k] - &rm[0][k])) / (2.0 * theta))
            .collect();
        worst = worst.max((g.trapezoid(&fd) - omega).abs());
    }
    Ok(Check::below(worst, 1e-4, "20 su(2) backgrounds with bump xi"))
}

fn stability_spectra() -> Result<Check> {
    let mut hess: f64 = 0.0;
    for s in strata(&[&[0.0, 0.0], &[0.5, 0.5, -1.0], &[0.0, 0.0, 0.0]])? {
        let c = stability_constants(&Su2Triple::zero(s.n()), &s)?;
        if c.hess_spectrum.len() != 3 * s.dim_c() {
            return Err(Error::Parameter("Hessian spectrum has the wrong multiplicity".into()));
        }
        hess = hess.max(c.hess_spectrum.iter().map(|e| (e - 2.0).abs()).fold(0.0, f64::max));
    }
    let (_, s2) = stratum_of(&[0.0, 0.0])?;
    let cas = stability_constants(&principal_triple(&s2)?, &s2)?;
    let casimir = cas.casimir_spectrum.iter().map(|e| (e - 8.0).abs()).fold(0.0, f64::max);
    let mut drift: f64 = 0.0;
    let mut r = seeded(300);
    for s in strata(&[&[0.0, 0.0], &[0.0, 0.0, 0.0], &[0.5, 0.5, -1.0]])? {
        for parts in stratum_partitions(&s) {
            let sig = su2_triple_from_partition(&s, &parts)?;
            let base = stability_constants(&sig, &s)?;
            for _ in 0..10 {
                let c = stability_constants(&sig.conjugate(&s.random_group_element(&mut r)), &s)?;
                for (a, b) in base.hess_spectrum.iter().zip(&c.hess_spectrum).chain(base.casimir_spectrum.iter().zip(&c.casimir_spectrum)) {
                    drift = drift.max((a - b).abs());
                }
            }
        }
    }
    Ok(Check::below(hess.max(casimir), 1e-10, "Hessian spectrum {2}, Casimir spectrum {8}")
        .and(Check::below(drift, 1e-8, "conjugation drift")))
}

fn tau0_centering() -> Result<Check> {
    let (tau, s) = stratum_of(&[1.0, 1.0, -2.0])?;
    let sigma = principal_triple(&s)?;
    let g = Grid::halfline_default();
    let tau0 = LieElement::diagonal(&[0.4, 0.4, -0.8])?;
    let t = model_solution(&tau0, &tau, &sigma, &g)?;
    let mut worst: f64 = 0.0;
    for (b, c) in [(1.0, 1.0), (2.0, 0.5)] {
        let cg = center_tau0_gauge(&t, b, c)?;
        for (tk, q) in g.nodes().iter().zip(cg.path.samples()) {
            worst = worst.max((&q[0] - &(&tau0 * (c * b * (-c * tk).exp()))).norm());
        }
    }
    Ok(Check::below(worst, 1e-9, "sup |T0' - c b e^{-ct} tau0|"))
}

fn kronheimer() -> Result<Check> {
    let g = Grid::interval(1.0, 201)?;
    let b2 = LieElement::diagonal(&[0.3, -0.1, -0.2])?;
    let b3 = LieElement::diagonal(&[-0.5, 0.2, 0.3])?;
    let z = LieElement::zeros(3);
    let t = NahmPath::from_fn(&g, |_| [z.clone(), z.clone(), b2.clone(), b3.clone()], None)?;
    let p = kronheimer_map(&t)?;
    let mut closed = matrix::fro(&(&p.g_end - matrix::identity(3))) + matrix::fro(&(&p.beta0 - (b2.matrix() + b3.matrix() * I)));
    let a = LieElement::random(3, &mut seeded(400));
    let t = NahmPath::from_fn(&g, |_| [a.clone(), z.clone(), z.clone(), z.clone()], None)?;
    let p = kronheimer_map(&t)?;
    closed = closed.max(matrix::fro(&(&p.g_end - matrix::expm(a.matrix()))) + matrix::fro(&p.beta0));

    let g = Grid::interval(1.0, 1025)?;
    let mut r = seeded(401);
    let init: [LieElement; 3] = std::array::from_fn(|_| &LieElement::random(2, &mut r) * 0.3);
    let t0 = &LieElement::random(2, &mut r) * 0.3;
    let t = integrate_ivp(&init, &T0Source::Constant(t0), &g)?;
    let p = kronheimer_map(&t)?;
    let mut drift: f64 = 0.0;
    for _ in 0..10 {
        let u = sine_gauge(&g, &LieElement::random(2, &mut r), &LieElement::random(2, &mut r))?;
        let q = kronheimer_map(&apply_gauge(&u, &t)?)?;
        drift = drift.max(matrix::fro(&(&p.g_end - &q.g_end)) + matrix::fro(&(&p.beta0 - &q.beta0)));
    }
    Ok(Check::below(closed, 1e-9, "closed forms").and(Check::below(drift, 1e-8, "10 based gauges")))
}

fn gluing_b_shift() -> Result<Check> {
    let (tau, s) = stratum_of(&[0.0, 0.0])?;
    let sigma = principal_triple(&s)?;
    let gi = Grid::interval(1.0, 257)?;
    let gh = Grid::halfline(40.0, 2048)?;
    let zero = LieElement::zeros(2);
    let ti = NahmPath::from_fn(
        &gi,
        |t| {
            let w = 0.5 / (1.0 + t);
            [zero.clone(), &sigma.sigma()[0] * w, &sigma.sigma()[1] * w, &sigma.sigma()[2] * w]
        },
        None,
    )?;
    let th = model_solution_offset(&zero, &tau, &sigma, &gh, -1.0)?;
    let mut r = seeded(500);
    let mut pairs = Vec::new();
    for _ in 0..4 {
        let eps: [LieElement; 4] = std::array::from_fn(|i| if i == 0 { LieElement::zeros(2) } else { s.random_cc(&mut r) });
        let a: [LieElement; 4] = std::array::from_fn(|_| LieElement::random(2, &mut r));
        let rate = r_rate(&mut r);
        let xbar =
            |t: f64| -> [LieElement; 4] { std::array::from_fn(|i| &(&eps[i] * (0.5 / (1.0 + t))) + &(&a[i] * (-rate * t).exp())) };
        let xi = TangentVector::from_fn(&gi, xbar, None)?;
        let xh = TangentVector::from_fn(
            &gh,
            |t| xbar(t + 1.0),
            Some(TangentAsymptotics { epsilon: eps.clone(), t_offset: -1.0, ..TangentAsymptotics::zero(2) }),
        )?;
        pairs.push((xi, xh));
    }
    let mut worst: f64 = 0.0;
    for b in [0.5, 1.0, 2.0] {
        let (_, rep) = glue_paths(&ti, &th, &MetricConfig::new(b), &pairs)?;
        for c in &rep.checks {
            worst = worst.max((c.lhs - c.rhs).abs());
        }
    }
    Ok(Check::below(worst, 1e-8, "4 matched pairs on the principal su(2) model"))
}

fn r_rate<R: rand::Rng>(r: &mut R) -> f64 {
    r.gen_range(0.5..1.5)
}

fn baby_nahm_metric() -> Result<Check> {
    let g = Grid::halfline(40.0, 8192)?;
    let mut faces: Vec<WeylFace> = [0.3, 0.7, 1.2].iter().map(|&th| WeylFace::from_values(&[th, -th])).collect::<Result<_>>()?;
    faces.push(WeylFace::from_values(&[1.0, 0.2, -1.2])?);
    faces.push(WeylFace::from_values(&[0.9, -0.3, -0.6])?);
    let mut worst: f64 = 0.0;
    for (i, f) in faces.iter().enumerate() {
        for b in [0.5, 1.0, 2.0] {
            let mut r = seeded(600 + i as u64);
            let s = f.stratum();
            let t = ImplosionTangent::new(f, s.random_z(&mut r), s.random_z(&mut r), root_coeffs(f.roots().len(), &mut r), b)?;
            let x = t.sample(&g)?;
            let num = bielawski_pair(&x, &x, &MetricConfig::new(b))?.value;
            let exact = t.closed_norm_sq();
            worst = worst.max(((num - exact) / exact).abs());
        }
    }
    let mut r = seeded(601);
    let mut min_ratio = f64::INFINITY;
    for k in 0..1000 {
        let f = &faces[k % faces.len()];
        let geo = baby_geometry(f, r.gen_range(0.1..10.0))?;
        let x = TangentCoords::random(f, &mut r);
        let size = x.v.norm_sq() + x.v_perp.norm_sq() + x.w.norm_sq();
        min_ratio = min_ratio.min(geo.metric(&x, &x)? / size);
    }
    let pos = Check { worst: min_ratio, bound: 0.0, passed: min_ratio > 0.0, detail: format!("min |X|^2/|coords|^2 = {min_ratio:.3e}") };
    Ok(Check::below(worst, 1e-5, "sampled vs closed form on 5 faces x 3 b").and(pos))
}

fn implosion_faces() -> Result<Vec<WeylFace>> {
    [&[0.7, -0.7][..], &[1.0, 0.2, -1.2], &[0.5, 0.5, -1.0], &[1.1, 0.4, -0.2, -1.3], &[0.6, 0.6, -0.6, -0.6]]
        .iter()
        .map(|v| WeylFace::from_values(v))
        .collect()
}

fn symplectic_b_independence() -> Result<Check> {
    let faces = implosion_faces()?;
    let mut r = seeded(700);
    let mut spread: f64 = 0.0;
    let mut kks: f64 = 0.0;
    for k in 0..100 {
        let f = &faces[k % faces.len()];
        let x = TangentCoords::random(f, &mut r);
        let y = TangentCoords::random(f, &mut r);
        let vals = [0.5, 1.0, 2.0].map(|b| baby_geometry(f, b).and_then(|g| g.symplectic_from_metric(&x, &y)));
        let vals = vals.into_iter().collect::<Result<Vec<_>>>()?;
        spread = spread.max(vals.iter().map(|v| (v - vals[0]).abs()).fold(0.0, f64::max));
        let geo = baby_geometry(f, 1.0)?;
        kks = kks.max((geo.kks(&x, &y) - geo.kks_from_roots(&x, &y)).abs());
    }
    Ok(Check::below(spread, 1e-10, "g_b(I_b X, Y) over b in {0.5, 1, 2}")
        .and(Check::below(kks, 1e-10, "c-perp part vs <tau_1, [v1, v2]>")))
}

fn kahler_compatibility() -> Result<Check> {
    let faces = implosion_faces()?;
    let mut r = seeded(800);
    let mut worst: f64 = 0.0;
    for k in 0..200 {
        let f = &faces[k % faces.len()];
        let geo = baby_geometry(f, r.gen_range(0.2..5.0))?;
        let x = TangentCoords::random(f, &mut r);
        let y = TangentCoords::random(f, &mut r);
        worst = worst.max((geo.symplectic(&x, &y) - geo.symplectic_from_metric(&x, &y)?).abs());
        let ii = geo.complex_structure(&geo.complex_structure(&x)?)?;
        worst = worst.max(ii.distance(&TangentCoords { v: -&x.v, v_perp: -&x.v_perp, w: -&x.w }));
    }
    Ok(Check::below(worst, 1e-10, "omega(X, Y) vs g(IX, Y) and I^2 + 1 on 200 pairs"))
}

/// Largest violation of the five bracket relations between `Z(c)`, `[c,c]`,
/// `c` and `tau` for random `delta` in `Z(c)` and `epsilon` in `[c,c]`.
pub fn centralizer_relation_defect<R: Rng + ?Sized>(s: &StratumData, rng: &mut R) -> Result<f64> {
    let delta: Vec<LieElement> = (0..4).map(|_| s.random_z(rng)).collect();
    let eps: Vec<LieElement> = (0..4).map(|_| s.random_cc(rng)).collect();
    let basis = s.basis_c();
    let mut worst: f64 = 0.0;
    for d in &delta {
        for g in &basis {
            worst = worst.max(d.bracket(g)?.max_abs());
        }
        for e in &eps {
            worst = worst.max(d.bracket(e)?.max_abs());
        }
        for g1 in &basis {
            for g2 in &basis {
                worst = worst.max(g1.bracket(g2)?.inner(d)?.abs());
            }
        }
    }
    for t in s.tau() {
        for e in &eps {
            worst = worst.max(t.bracket(e)?.max_abs());
        }
    }
    for (d, e) in delta.iter().zip(&eps) {
        worst = worst.max(d.inner(e)?.abs());
    }
    Ok(worst)
}

fn centralizer_relations() -> Result<Check> {
    let patterns = [
        diagonal_triple(&[vec![0.5, 0.5, -1.0]], 3)?,
        diagonal_triple(&[vec![1.0, 1.0, -2.0], vec![0.0; 3], vec![0.3, 0.3, -0.6]], 3)?,
        diagonal_triple(&[vec![0.5, 0.5, -0.5, -0.5]], 4)?,
        diagonal_triple(&[vec![1.0, 1.0, 1.0, -3.0]], 4)?,
        diagonal_triple(&[vec![0.4, 0.4, -0.4, -0.4], vec![1.0, -1.0, 0.0, 0.0]], 4)?,
        diagonal_triple(&[vec![0.0; 4]], 4)?,
    ];
    let strata = patterns.iter().map(centralizer_blocks).collect::<Result<Vec<_>>>()?;
    let mut r = seeded(900);
    let mut worst: f64 = 0.0;
    for k in 0..100 {
        worst = worst.max(centralizer_relation_defect(&strata[k % strata.len()], &mut r)?);
    }
    Ok(Check::below(worst, 1e-10, "100 configurations over 6 block patterns"))
}

fn decay_classes() -> Result<Check> {
    let g = Grid::halfline_default();
    let (_, s) = stratum_of(&[0.5, 0.5, -1.0])?;
    let mut r = seeded(1000);
    let series = |x: &LieElement, f: &dyn Fn(f64) -> f64| -> Vec<LieElement> { g.nodes().iter().map(|&t| x * f(t)).collect() };
    let mut fit_err: f64 = 0.0;
    for zeta in [0.5, 1.0, 2.0] {
        let rep = decay_diagnostics(&series(&s.random_c(&mut r), &|t| (1.0 + t).powf(-1.0 - zeta)), &g, &s)?;
        fit_err = fit_err.max((rep.zeta_fit - zeta).abs());
    }
    for eta in [0.5, 1.0, 3.0] {
        let rep = decay_diagnostics(&series(&s.random_perp(&mut r), &|t| (-eta * t).exp()), &g, &s)?;
        fit_err = fit_err.max((rep.eta_fit - eta).abs());
    }
    let (zeta, eta) = (0.7, 1.5);
    let z1 = series(&s.random_cc(&mut r), &|t| (1.0 + t).powf(-1.0 - zeta));
    let z2 = series(&s.random_cc(&mut r), &|t| (1.0 + t).powf(-1.0 - zeta));
    let e1 = series(&s.random_perp(&mut r), &|t| (-eta * t).exp());
    let e2 = series(&s.random_perp(&mut r), &|t| (-eta * t).exp());
    let br = |a: &[LieElement], b: &[LieElement]| a.iter().zip(b).map(|(x, y)| x.bracket(y)).collect::<Result<Vec<_>>>();
    // Shortfall of a fitted exponent below the class exponent; zero when inside.
    let short = |fit: f64, want: f64| (want - 0.05 - fit).max(0.0);
    let zz = decay_diagnostics(&br(&z1, &z2)?, &g, &s)?;
    let ze = decay_diagnostics(&br(&z1, &e1)?, &g, &s)?;
    let ee = decay_diagnostics(&br(&e1, &e2)?, &g, &s)?;
    let mut class = short(zz.zeta_fit, zeta);
    class = class.max(if zz.eta_fit.is_infinite() { 0.0 } else { 1.0 });
    class = class.max(short(ze.eta_fit, eta)).max(if ze.zeta_fit.is_infinite() { 0.0 } else { 1.0 });
    class = class.max(short(ee.eta_fit, eta)).max(short(ee.zeta_fit, zeta));
    Ok(Check::below(fit_err, 0.05, "exponent recovery").and(Check {
        worst: class,
        bound: 0.0,
        passed: class == 0.0,
        detail: "bracket classes".into(),
    }))
}
