mod common;

use common::*;
use common::bump;
use nahmlab::gauge::{apply_gauge, fundamental_vector_field, gauge_tangent, Flavor, GaugeAlgebraPath, GaugePath};
use nahmlab::metric::*;
use nahmlab::nahm::{
    integrate_ivp, linearized_residual, model_solution, model_solution_offset, nahm_residual, nahm_residual_sup,
    zero_quad, NahmPath, T0Source, TangentAsymptotics,
};
use nahmlab::{Grid, LieElement, Su2Triple, TangentVector};
use proptest::prelude::*;

fn su3_stratum() -> ([LieElement; 3], nahmlab::StratumData) {
    let tau = tau3(&[1.0, 1.0, -2.0], &[0.5, 0.5, -1.0], &[0.0, 0.0, 0.0]);
    let s = stratum(&tau);
    (tau, s)
}

#[test]
fn constant_center_directions_are_null_at_b_zero() {
    let (_, s) = su3_stratum();
    let g = Grid::halfline_default();
    let mut r = rng(1);
    let d: [LieElement; 3] = std::array::from_fn(|_| s.random_z(&mut r));
    let mut delta = zero_quad(3);
    delta[1..].clone_from_slice(&d);
    let x = TangentVector::from_fn(
        &g,
        |_| delta.clone(),
        Some(TangentAsymptotics { delta: delta.clone(), ..TangentAsymptotics::zero(3) }),
    )
    .unwrap();
    let rep = bielawski_pair(&x, &x, &MetricConfig::new(0.0)).unwrap();
    assert!(rep.value.abs() < 1e-8);
    let rep1 = bielawski_pair(&x, &x, &MetricConfig::new(1.0)).unwrap();
    let dd: f64 = d.iter().map(|v| v.norm_sq()).sum();
    assert!((rep1.value - dd).abs() < 1e-12);
}

#[test]
fn negative_norm_example() {
    let (_, s) = su3_stratum();
    let g = Grid::halfline(40.0, 16384).unwrap();
    let d1 = s.random_z(&mut rng(2));
    for (b, eta) in [(1.0, 1.0), (1.0, 0.5), (2.0, 3.0)] {
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
        )
        .unwrap();
        let v = bielawski_norm_sq(&x, &MetricConfig::new(b)).unwrap();
        let want = d1.norm_sq() * (b - 1.5 / eta);
        assert!(((v - want) / want).abs() < 1e-6, "{b} {eta}: {v} vs {want}");
    }
}

#[test]
fn compactly_supported_vectors_get_plain_l2() {
    let (_, s) = su3_stratum();
    let g = Grid::halfline(40.0, 4096).unwrap();
    let mut r = rng(3);
    let a: [LieElement; 4] = std::array::from_fn(|_| LieElement::random(3, &mut r));
    let x = TangentVector::from_fn(
        &g,
        |t| std::array::from_fn(|i| &a[i] * bump(t, 1.0, 4.0).0),
        Some(TangentAsymptotics::zero(3)),
    )
    .unwrap();
    let l2 = g.trapezoid(&pointwise_inner(&x, &x).unwrap());
    for b in [-3.0, 0.0, 1.0, 5.0] {
        let v = bielawski_norm_sq(&x, &MetricConfig::new(b)).unwrap();
        assert!((v - l2).abs() < 1e-12);
    }
    let _ = s;
}

#[test]
fn analytic_tail_matches_closed_form() {
    let tau = tau_from(&[0.0, 0.0]);
    let s = stratum(&tau);
    let g = Grid::halfline(40.0, 8192).unwrap();
    let e = s.random_cc(&mut rng(4));
    let mut eps = zero_quad(2);
    eps[2] = e.clone();
    let x = TangentVector::from_fn(
        &g,
        |t| {
            let mut q = zero_quad(2);
            q[2] = &e * (0.5 / (1.0 + t));
            q
        },
        Some(TangentAsymptotics { epsilon: eps, ..TangentAsymptotics::zero(2) }),
    )
    .unwrap();
    let want = e.norm_sq() / 4.0;
    for ts in [5.0, 20.0, 39.0] {
        let rep = bielawski_pair(&x, &x, &MetricConfig::new(1.0).with_tail_start(ts)).unwrap();
        // Trapezoid error on the geometric grid is about (ln 41 / N)^2 / 2 relative.
        assert!((rep.value - want).abs() < 3e-7 * want, "{ts}: {} vs {want}", rep.value);
        assert!(rep.remainder_bound < 1e-12);
        assert_eq!(rep.value, rep.interval_part + rep.tail_part + rep.boundary_part);
    }
}

#[test]
fn cross_terms_are_rejected() {
    let tau = tau_from(&[0.0, 0.0]);
    let s = stratum(&tau);
    let g = Grid::halfline(40.0, 256).unwrap();
    let mut r = rng(5);
    let x = random_halfline_tangent(&g, &s, false, true, &mut r);
    // su(2) at tau = 0 has Z(c) = 0, so a delta parallel to epsilon is illegal.
    let a = x.asymptotics().unwrap().clone();
    let bad = x.clone().with_asymptotics(Some(TangentAsymptotics { delta: a.epsilon.clone(), ..a })).unwrap();
    assert!(matches!(bielawski_pair(&bad, &x, &MetricConfig::new(1.0)), Err(nahmlab::Error::CrossTerm(_))));
    let none = x.clone().with_asymptotics(None).unwrap();
    assert!(matches!(bielawski_pair(&none, &x, &MetricConfig::new(1.0)), Err(nahmlab::Error::MissingAsymptotics)));
}

#[test]
fn quaternion_relations_are_exact() {
    let (_, s) = su3_stratum();
    let g = Grid::halfline(40.0, 128).unwrap();
    let x = random_halfline_tangent(&g, &s, true, true, &mut rng(6));
    let neg = x.map(|q| std::array::from_fn(|i| -&q[i]));
    for a in Axis::ALL {
        assert_eq!(quaternion_act(a, &quaternion_act(a, &x)), neg);
    }
    let ij = quaternion_act(Axis::I, &quaternion_act(Axis::J, &x));
    let jk = quaternion_act(Axis::J, &quaternion_act(Axis::K, &x));
    let ki = quaternion_act(Axis::K, &quaternion_act(Axis::I, &x));
    assert_eq!(ij, quaternion_act(Axis::K, &x));
    assert_eq!(jk, quaternion_act(Axis::I, &x));
    assert_eq!(ki, quaternion_act(Axis::J, &x));
}

#[test]
fn complex_structures_are_orthogonal_and_forms_antisymmetric() {
    let (_, s) = su3_stratum();
    let g = Grid::halfline_default();
    let mut r = rng(7);
    let x = random_halfline_tangent(&g, &s, true, true, &mut r);
    let y = random_halfline_tangent(&g, &s, true, true, &mut r);
    let cfg = MetricConfig::new(1.3);
    let base = bielawski_pair(&x, &y, &cfg).unwrap().value;
    for a in Axis::ALL {
        let v = bielawski_pair(&quaternion_act(a, &x), &quaternion_act(a, &y), &cfg).unwrap().value;
        assert!((v - base).abs() < 1e-9);
        assert!(symplectic_pair(a, &x, &x, &cfg).unwrap().abs() < 1e-9);
        let w1 = symplectic_pair(a, &x, &y, &cfg).unwrap();
        let w2 = symplectic_pair(a, &y, &x, &cfg).unwrap();
        assert!((w1 + w2).abs() < 1e-9);
    }
}

fn ivp_background(nodes: usize) -> NahmPath {
    let g = Grid::interval(3.0, nodes).unwrap();
    let mut r = rng(8);
    let init: [LieElement; 3] = std::array::from_fn(|_| &LieElement::random(2, &mut r) * 0.3);
    let t0 = |t: f64| LieElement::diagonal(&[0.2 * t.sin(), -0.2 * t.sin()]).unwrap();
    integrate_ivp(&init, &T0Source::Function(&t0), &g).unwrap()
}

#[test]
fn moment_map_duality() {
    let t = ivp_background(3001);
    let g = t.grid().clone();
    let mut r = rng(9);
    let x = random_interval_tangent(&g, 2, &mut r);
    let a = LieElement::random(2, &mut r);
    let xi = GaugeAlgebraPath::from_fn(
        &g,
        |s| &a * bump(s, 0.5, 2.5).0,
        Some(&|s| &a * bump(s, 0.5, 2.5).1),
        None,
    )
    .unwrap();
    let xf = fundamental_vector_field(&xi, &t).unwrap();
    let cfg = MetricConfig::new(1.0);
    let omega = symplectic_pair(Axis::I, &xf, &x, &cfg).unwrap();
    let lr = linearized_residual(&t, &x).unwrap();
    let dual: Vec<f64> = xi.samples().iter().zip(&lr[0]).map(|(z, l)| -z.inner(l).unwrap()).collect();
    let dual = g.trapezoid(&dual);
    assert!((omega - dual).abs() < 1e-5, "{omega} vs {dual}");

    // <mu_I(T + theta X) - mu_I(T), xi> / theta with mu_I = -residual_1.
    let theta = 1e-5;
    let moved = NahmPath::new(
        g.clone(),
        t.samples().iter().zip(x.samples()).map(|(p, q)| std::array::from_fn(|i| &p[i] + &(&q[i] * theta))).collect(),
        None,
    )
    .unwrap();
    let r1 = nahm_residual(&moved).unwrap();
    let r0 = nahm_residual(&t).unwrap();
    let fd: Vec<f64> = (0..g.len())
        .map(|k| -xi.samples()[k].inner(&(&r1[0][k] - &r0[0][k])).unwrap() / theta)
        .collect();
    let fd = g.trapezoid(&fd);
    assert!((fd - omega).abs() < 1e-4 + 10.0 * theta, "{fd} vs {omega}");
}

#[test]
fn moment_maps_on_model_solutions() {
    let (tau, s) = su3_stratum();
    let sigma = principal(&s);
    let g = Grid::halfline(40.0, 512).unwrap();
    let tau0 = LieElement::diagonal(&[0.1, 0.1, -0.2]).unwrap();
    let t = model_solution(&tau0, &tau, &sigma, &g).unwrap();
    assert_eq!(moment_torus(&t).unwrap(), tau);
    let mb = moment_boundary(&t);
    for i in 0..3 {
        let want = -&(&tau[i] + &(&sigma.sigma()[i] * 0.5));
        assert!((&mb[i] - &want).norm() < 1e-15);
    }
    let t_abel = model_solution(&LieElement::zeros(3), &tau, &Su2Triple::zero(3), &g).unwrap();
    let mb = moment_boundary(&t_abel);
    for i in 0..3 {
        assert!((&mb[i] + &tau[i]).norm() == 0.0);
    }
    // A compactly supported gauge transformation keeps tau.
    let mut r = rng(10);
    let u = bump_gauge(&g, &LieElement::random(3, &mut r), &LieElement::random(3, &mut r), 0.5, 5.0);
    let ut = apply_gauge(&u, &t).unwrap();
    assert_eq!(moment_torus(&ut).unwrap(), tau);
    // Tail values approach tau at the rate sigma / (2(t_max + 1)).
    let last = &t.samples()[g.len() - 1];
    for i in 0..3 {
        let gap = (&last[i + 1] - &tau[i]).norm();
        let rate = sigma.sigma()[i].norm() / (2.0 * (g.t_max() + 1.0));
        assert!((gap - rate).abs() < 1e-14);
    }
}

#[test]
fn boundary_moment_map_is_equivariant() {
    let (tau, s) = su3_stratum();
    let sigma = principal(&s);
    let g = Grid::halfline(40.0, 256).unwrap();
    let t = model_solution(&LieElement::zeros(3), &tau, &sigma, &g).unwrap();
    let mut r = rng(11);
    let u0 = s.random_group_element(&mut r);
    let u = GaugePath::constant(&g, &u0, Flavor::Unitary).unwrap();
    let ut = apply_gauge(&u, &t).unwrap();
    let a = moment_boundary(&t);
    let b = moment_boundary(&ut);
    for i in 0..3 {
        assert!((&b[i] - &a[i].ad_unitary(&u0)).norm() < 1e-14);
    }
}

#[test]
fn gluing_constant_data_is_exact() {
    let tau = tau3(&[0.5, -0.5], &[0.2, -0.2], &[0.0, 0.0]);
    let s = stratum(&tau);
    let gi = Grid::interval(1.0, 101).unwrap();
    let gh = Grid::halfline(40.0, 256).unwrap();
    let ti = NahmPath::from_fn(&gi, |_| [LieElement::zeros(2), tau[0].clone(), tau[1].clone(), tau[2].clone()], None)
        .unwrap();
    let th = model_solution(&LieElement::zeros(2), &tau, &Su2Triple::zero(2), &gh).unwrap();
    let mut r = rng(12);
    let d: [LieElement; 4] = std::array::from_fn(|_| s.random_z(&mut r));
    let xi = TangentVector::from_fn(&gi, |_| d.clone(), None).unwrap();
    let xh = TangentVector::from_fn(
        &gh,
        |_| d.clone(),
        Some(TangentAsymptotics { delta: d.clone(), ..TangentAsymptotics::zero(2) }),
    )
    .unwrap();
    let (glued, rep) = glue_paths(&ti, &th, &MetricConfig::new(0.7), &[(xi, xh)]).unwrap();
    assert!(nahm_residual_sup(&glued).unwrap() < 1e-12);
    assert_eq!(rep.glued_config.b, 1.7);
    let c = &rep.checks[0];
    assert!((c.lhs - c.rhs).abs() < 1e-12);
    let dd: f64 = d.iter().map(|v| v.norm_sq()).sum();
    assert!((c.rhs - 1.7 * dd).abs() < 1e-12);
}

#[test]
fn gluing_metric_identity_on_model_background() {
    let tau = tau_from(&[0.0, 0.0]);
    let s = stratum(&tau);
    let sigma = principal(&s);
    let gi = Grid::interval(1.0, 257).unwrap();
    let gh = Grid::halfline(40.0, 2048).unwrap();
    let zero = LieElement::zeros(2);
    let ti = NahmPath::from_fn(
        &gi,
        |t| {
            let w = 0.5 / (1.0 + t);
            [zero.clone(), &sigma.sigma()[0] * w, &sigma.sigma()[1] * w, &sigma.sigma()[2] * w]
        },
        None,
    )
    .unwrap();
    let th = model_solution_offset(&zero, &tau, &sigma, &gh, -1.0).unwrap();
    let mut r = rng(13);
    let eps: [LieElement; 4] = std::array::from_fn(|i| if i == 0 { LieElement::zeros(2) } else { s.random_cc(&mut r) });
    let a: [LieElement; 4] = std::array::from_fn(|_| LieElement::random(2, &mut r));
    let xbar = |t: f64| -> [LieElement; 4] {
        std::array::from_fn(|i| &(&eps[i] * (0.5 / (1.0 + t))) + &(&a[i] * (-0.7 * t).exp()))
    };
    let xi = TangentVector::from_fn(&gi, &xbar, None).unwrap();
    let xh = TangentVector::from_fn(
        &gh,
        |t| xbar(t + 1.0),
        Some(TangentAsymptotics { epsilon: eps.clone(), t_offset: -1.0, ..TangentAsymptotics::zero(2) }),
    )
    .unwrap();
    let (glued, rep) = glue_paths(&ti, &th, &MetricConfig::new(0.5), &[(xi, xh)]).unwrap();
    let model = model_solution(&zero, &tau, &sigma, glued.grid()).unwrap();
    assert!(glued.sup_distance(&model).unwrap() < 1e-15);
    assert_eq!(glued.asymptotics().unwrap().t_offset, 0.0);
    let c = &rep.checks[0];
    assert!((c.lhs - c.rhs).abs() < 1e-8, "{} vs {}", c.lhs, c.rhs);
}

#[test]
fn junction_mismatch_is_rejected() {
    let tau = tau_from(&[0.0, 0.0]);
    let gi = Grid::interval(1.0, 101).unwrap();
    let gh = Grid::halfline(40.0, 256).unwrap();
    let ti = NahmPath::from_fn(&gi, |_| zero_quad(2), None).unwrap();
    let sigma = principal(&stratum(&tau));
    let th = model_solution(&LieElement::zeros(2), &tau, &sigma, &gh).unwrap();
    assert!(matches!(
        glue_paths(&ti, &th, &MetricConfig::new(0.0), &[]),
        Err(nahmlab::Error::Junction(_))
    ));
}

#[test]
fn homothety_scales_solutions_and_norms() {
    let (tau, s) = su3_stratum();
    let sigma = principal(&s);
    let g = Grid::halfline(40.0, 2048).unwrap();
    let t = model_solution(&LieElement::zeros(3), &tau, &sigma, &g).unwrap();
    let mut r = rng(14);
    let x = random_halfline_tangent(&g, &s, true, true, &mut r);
    for sc in [0.5, 2.0, 3.0] {
        let st = homothety(&t, sc).unwrap();
        assert!(nahm_residual_sup(&st).unwrap() < 1e-9);
        let a = st.asymptotics().unwrap();
        let q = &st.samples()[17];
        let want = a.model_at(st.grid().nodes()[17]);
        for i in 0..4 {
            assert!((&q[i] - &want[i]).norm() < 1e-13);
        }
        let b = 1.5;
        let lhs = bielawski_norm_sq(
            &homothety_tangent(&x, sc).unwrap(),
            &MetricConfig::new(b / sc).with_tail_start(20.0 / sc),
        )
        .unwrap();
        let rhs = sc * bielawski_norm_sq(&x, &MetricConfig::new(b).with_tail_start(20.0)).unwrap();
        assert!((lhs - rhs).abs() < 1e-10 * rhs.abs().max(1.0), "{sc}: {lhs} vs {rhs}");
    }
}

#[test]
fn orthogonal_decomposition_of_the_norm() {
    let (_, s) = su3_stratum();
    let g = Grid::halfline_default();
    let x = random_halfline_tangent(&g, &s, true, true, &mut rng(15));
    let d = decomposed_norm(&x, &s, &MetricConfig::new(0.8)).unwrap();
    assert!((d.perp + d.semisimple + d.center - d.total).abs() < 1e-8);
    assert!(d.perp > 0.0 && d.semisimple > 0.0);
}

#[test]
fn vectors_vanishing_at_infinity_ignore_b() {
    let (_, s) = su3_stratum();
    let g = Grid::halfline_default();
    let mut r = rng(16);
    for eps in [false, true] {
        let x = random_halfline_tangent(&g, &s, false, eps, &mut r);
        let y = random_halfline_tangent(&g, &s, false, eps, &mut r);
        let v0 = bielawski_pair(&x, &y, &MetricConfig::new(0.0)).unwrap().value;
        let v1 = bielawski_pair(&x, &y, &MetricConfig::new(7.0)).unwrap().value;
        assert!((v0 - v1).abs() < 1e-12);
    }
}

#[test]
fn nondegeneracy_probe_is_positive() {
    let (_, s) = su3_stratum();
    let g = Grid::halfline_default();
    let mut r = rng(17);
    for _ in 0..5 {
        let x = random_halfline_tangent(&g, &s, true, true, &mut r);
        let p = nondegeneracy_probe(&x, (0.5, 3.0), &MetricConfig::new(-2.0)).unwrap();
        assert!(p.positive, "{p:?}");
    }
}

#[test]
fn gauge_action_is_an_isometry() {
    let (tau, s) = su3_stratum();
    let g = Grid::halfline_default();
    let mut r = rng(18);
    let x = random_halfline_tangent(&g, &s, true, true, &mut r);
    let y = random_halfline_tangent(&g, &s, true, true, &mut r);
    let cfg = MetricConfig::new(0.9);
    let base = bielawski_pair(&x, &y, &cfg).unwrap().value;
    let u = bump_gauge(&g, &LieElement::random(3, &mut r), &LieElement::random(3, &mut r), 0.3, 8.0);
    let v = bielawski_pair(&gauge_tangent(&u, &x).unwrap(), &gauge_tangent(&u, &y).unwrap(), &cfg).unwrap().value;
    assert!((v - base).abs() < 1e-8);
    // A constant element of C with a slope in Z(c) fixes delta and rotates epsilon.
    let c0 = s.random_group_element(&mut r);
    let z = s.random_z(&mut r);
    let f = |t: f64| t;
    let df = |_t: f64| 1.0;
    let w = GaugePath::exp_product(
        &g,
        &[
            (nahmlab::gauge::Profile { f: &f, df: &df }, z.matrix().clone()),
        ],
        Flavor::Unitary,
    )
    .unwrap()
    .with_slope(z.clone());
    let cw = GaugePath::constant(&g, &c0, Flavor::Unitary).unwrap().with_slope(LieElement::zeros(3));
    let w = w.compose(&cw).unwrap();
    let v = bielawski_pair(&gauge_tangent(&w, &x).unwrap(), &gauge_tangent(&w, &y).unwrap(), &cfg).unwrap().value;
    assert!((v - base).abs() < 1e-8, "{v} vs {base}");
    let _ = tau;
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]
    #[test]
    fn pairing_is_symmetric_and_bilinear(seed in 0u64..1_000_000, a in -2.0f64..2.0, b in -2.0f64..2.0) {
        let (_, s) = su3_stratum();
        let g = Grid::halfline(40.0, 512).unwrap();
        let mut r = rng(seed);
        let x = random_halfline_tangent(&g, &s, true, true, &mut r);
        let y = random_halfline_tangent(&g, &s, true, true, &mut r);
        let z = random_halfline_tangent(&g, &s, true, true, &mut r);
        let cfg = MetricConfig::new(1.1);
        let p = |u: &TangentVector, v: &TangentVector| bielawski_pair(u, v, &cfg).unwrap().value;
        prop_assert!((p(&x, &y) - p(&y, &x)).abs() < 1e-10);
        let lin = x.combine(a, &y, b).unwrap();
        let lhs = p(&lin, &z);
        let rhs = a * p(&x, &z) + b * p(&y, &z);
        prop_assert!((lhs - rhs).abs() < 1e-10 * (1.0 + lhs.abs()));
    }
}
