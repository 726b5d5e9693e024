mod common;

use common::*;
use nahmlab::gauge::{apply_gauge, fundamental_vector_field, AlgebraAsymptotics, GaugeAlgebraPath};
use nahmlab::implosion::{baby_tangent, WeylFace};
use nahmlab::lie::triple::stratum_partitions;
use nahmlab::lie::*;
use nahmlab::metric::{bielawski_pair, MetricConfig};
use nahmlab::nahm::*;
use proptest::prelude::*;

fn residual_sup3(r: &[Vec<LieElement>; 3]) -> f64 {
    r.iter().map(|c| sup_norm(c)).fold(0.0, f64::max)
}

fn all_models(a: &[f64]) -> Vec<NahmPath> {
    models_on(a, &Grid::halfline_default())
}

fn models_on(a: &[f64], g: &Grid) -> Vec<NahmPath> {
    let tau = tau_from(a);
    let s = stratum(&tau);
    stratum_partitions(&s)
        .into_iter()
        .map(|p| {
            let sig = su2_triple_from_partition(&s, &p).unwrap();
            model_solution(&LieElement::zeros(a.len()), &tau, &sig, g).unwrap()
        })
        .collect()
}

fn su2_principal_model(g: &Grid) -> NahmPath {
    let tau = tau_from(&[0.0, 0.0]);
    let sig = principal(&stratum(&tau));
    model_solution(&LieElement::zeros(2), &tau, &sig, g).unwrap()
}

#[test]
fn model_solutions_are_exact() {
    let mut count = 0;
    for a in [vec![0.0, 0.0], vec![0.4, -0.4], vec![0.0; 3], vec![0.5, 0.5, -1.0], vec![0.0; 4], vec![0.5, 0.5, -0.5, -0.5]] {
        for t in all_models(&a) {
            assert!(nahm_residual_sup(&t).unwrap() < 1e-10);
            count += 1;
        }
    }
    assert!(count >= 12);
}

#[test]
fn constant_model_is_constant() {
    let g = Grid::halfline_default();
    let tau = tau3(&[0.3, -0.3], &[0.1, -0.1], &[0.0, 0.0]);
    let t = model_solution(&LieElement::zeros(2), &tau, &Su2Triple::zero(2), &g).unwrap();
    assert!(t.samples().iter().all(|q| q[0].norm() == 0.0 && (0..3).all(|i| q[i + 1] == tau[i])));
    // Differentiation weights on the stretched grid round at the 1e-13 level.
    assert!(nahm_residual_sup(&t).unwrap() < 1e-11);
}

#[test]
fn principal_su2_model_closed_form() {
    let g = Grid::halfline_default();
    let t = su2_principal_model(&g);
    let sig = principal(&stratum(&tau_from(&[0.0, 0.0])));
    for (&s, q) in g.nodes().iter().zip(t.samples()) {
        for i in 0..3 {
            assert!((&q[i + 1] - &(&sig.sigma()[i] * (0.5 / (1.0 + s)))).max_abs() < 1e-15);
        }
    }
    assert!(nahm_residual_sup(&t).unwrap() < 1e-10);
}

#[test]
fn model_rejects_bad_input() {
    let g = Grid::halfline_default();
    let tau = tau_from(&[0.5, 0.5, -1.0]);
    let s = stratum(&tau);
    let sig = su2_triple_from_partition(&s, &[vec![2], vec![1]]).unwrap();
    let mut r = rng(1);
    assert!(model_solution(&s.random_perp(&mut r), &tau, &sig, &g).is_err());
    let reg = tau_from(&[1.0, 0.0, -1.0]);
    assert!(model_solution(&LieElement::zeros(3), &reg, &sig, &g).is_err());
    assert!(model_solution(&LieElement::zeros(3), &tau, &sig, &Grid::interval(1.0, 64).unwrap()).is_err());
}

#[test]
fn model_family_closure() {
    for a in [vec![0.0; 3], vec![0.5, 0.5, -1.0]] {
        for t in all_models(&a) {
            let asym = t.asymptotics().unwrap().clone();
            for (&s, q) in t.grid().nodes().iter().zip(t.samples()) {
                for i in 0..3 {
                    let (_, d1, h) = asym.stratum.split(&q[i + 1]);
                    assert!(h.max_abs() < 1e-15);
                    assert!((&d1 - &(&asym.sigma.sigma()[i] * (0.5 / (1.0 + s)))).max_abs() < 1e-14);
                }
            }
        }
    }
}

#[test]
fn constant_residual_is_minus_bracket() {
    let g = Grid::interval(1.0, 64).unwrap();
    let mut r = rng(2);
    let a = LieElement::random(3, &mut r);
    let b = LieElement::random(3, &mut r);
    let t = NahmPath::from_fn(&g, |_| [LieElement::zeros(3), a.clone(), b.clone(), LieElement::zeros(3)], None).unwrap();
    let res = nahm_residual(&t).unwrap();
    let want = -&bracket(&a, &b).unwrap();
    assert!(res[2].iter().all(|x| (x - &want).max_abs() < 1e-13));
}

#[test]
fn gauge_transformed_model_solves() {
    let g = Grid::halfline(40.0, 8192).unwrap();
    let mut r = rng(3);
    let t = su2_principal_model(&g);
    let u = bump_gauge(&g, &(&LieElement::random(2, &mut r) * 0.5), &(&LieElement::random(2, &mut r) * 0.5), 0.5, 4.0);
    let ut = apply_gauge(&u, &t).unwrap();
    assert!(nahm_residual_sup(&ut).unwrap() < 1e-8);
}

#[test]
fn residual_is_gauge_covariant() {
    let g = Grid::interval(1.0, 1601).unwrap();
    let mut r = rng(4);
    let c: Vec<LieElement> = (0..8).map(|_| LieElement::random(3, &mut r)).collect();
    let t = NahmPath::from_fn(&g, |s| std::array::from_fn(|i| &c[i] + &(&c[4 + i] * s.sin())), None).unwrap();
    let u = sine_gauge(&g, &(&LieElement::random(3, &mut r) * 0.5), &(&LieElement::random(3, &mut r) * 0.5));
    let a = nahm_residual(&t).unwrap();
    let b = nahm_residual(&apply_gauge(&u, &t).unwrap()).unwrap();
    for i in 0..3 {
        for (x, y) in a[i].iter().zip(&b[i]) {
            assert!((x.norm() - y.norm()).abs() < 1e-8);
        }
    }
}

#[test]
fn ivp_recovers_principal_model() {
    let g = Grid::interval(5.0, 2001).unwrap();
    let sig = principal(&stratum(&tau_from(&[0.0, 0.0])));
    let init = std::array::from_fn(|i| &sig.sigma()[i] * 0.5);
    let t = integrate_ivp(&init, &T0Source::Constant(LieElement::zeros(2)), &g).unwrap();
    for (&s, q) in g.nodes().iter().zip(t.samples()) {
        for i in 0..3 {
            assert!((&q[i + 1] - &(&sig.sigma()[i] * (0.5 / (1.0 + s)))).max_abs() < 1e-8);
        }
    }
}

#[test]
fn ivp_of_commuting_constants_is_constant() {
    let g = Grid::interval(1.0, 101).unwrap();
    let init = tau3(&[0.3, -0.3], &[1.0, -1.0], &[-0.2, 0.2]);
    let t = integrate_ivp(&init, &T0Source::Constant(LieElement::zeros(2)), &g).unwrap();
    assert!(t.samples().iter().all(|q| (0..3).all(|i| (&q[i + 1] - &init[i]).max_abs() < 1e-15)));
}

fn ivp_residual(steps: usize, seed: u64) -> f64 {
    let mut r = rng(seed);
    let init: [LieElement; 3] = std::array::from_fn(|_| &LieElement::random(2, &mut r) * 0.5);
    let a = &LieElement::random(2, &mut r) * 0.5;
    let f = move |t: f64| &a * t.cos();
    let g = Grid::interval(1.0, steps + 1).unwrap();
    let t = integrate_ivp(&init, &T0Source::Function(&f), &g).unwrap();
    nahm_residual_sup(&t).unwrap()
}

#[test]
fn ivp_self_consistency_and_order() {
    assert!(ivp_residual(1024, 5) < 1e-8);
    let coarse = ivp_residual(128, 6);
    let fine = ivp_residual(256, 6);
    assert!(coarse / fine >= 12.0, "{coarse} / {fine}");
}

#[test]
fn ivp_blow_up_is_reported() {
    // T_i = -sigma_i / (2(t - 1)) style data blows up at t = 1.
    let sig = principal(&stratum(&tau_from(&[0.0, 0.0])));
    let init = std::array::from_fn(|i| &sig.sigma()[i] * -0.5);
    let g = Grid::interval(2.0, 4001).unwrap();
    assert!(matches!(
        integrate_ivp(&init, &T0Source::Constant(LieElement::zeros(2)), &g),
        Err(nahmlab::Error::BlowUp { .. })
    ));
}

fn bump_xi(grid: &Grid, a: &LieElement, lo: f64, hi: f64) -> GaugeAlgebraPath {
    let n = a.dim();
    let a1 = a.clone();
    let a2 = a.clone();
    GaugeAlgebraPath::from_fn(
        grid,
        move |t| &a1 * bump(t, lo, hi).0,
        Some(&move |t| &a2 * bump(t, lo, hi).1),
        Some(AlgebraAsymptotics { slope: LieElement::zeros(n), limit: LieElement::zeros(n), b: 0.0 }),
    )
    .unwrap()
}

#[test]
fn fundamental_field_is_linearized_solution() {
    let g = Grid::halfline(40.0, 8192).unwrap();
    let mut r = rng(7);
    for t in models_on(&[0.5, 0.5, -1.0], &g) {
        let xi = bump_xi(&g, &LieElement::random(3, &mut r), 0.2, 3.0);
        let x = fundamental_vector_field(&xi, &t).unwrap();
        assert!(residual_sup3(&linearized_residual(&t, &x).unwrap()) < 1e-7);
        let z = TangentVector::zero(&g, 3);
        assert_eq!(residual_sup3(&linearized_residual(&t, &z).unwrap()), 0.0);
    }
}

#[test]
fn linearization_matches_finite_difference() {
    let g = Grid::interval(1.0, 201).unwrap();
    let mut r = rng(8);
    let c: Vec<LieElement> = (0..8).map(|_| LieElement::random(3, &mut r)).collect();
    let t = NahmPath::from_fn(&g, |s| std::array::from_fn(|i| &c[i] + &(&c[4 + i] * (s * s))), None).unwrap();
    let x = random_interval_tangent(&g, 3, &mut r);
    let theta = 1e-5;
    let shifted = NahmPath::new(
        g.clone(),
        t.samples().iter().zip(x.samples()).map(|(p, q)| std::array::from_fn(|i| &p[i] + &(&q[i] * theta))).collect(),
        None,
    )
    .unwrap();
    let a = nahm_residual(&t).unwrap();
    let b = nahm_residual(&shifted).unwrap();
    let l = linearized_residual(&t, &x).unwrap();
    let scale = residual_sup3(&l);
    for i in 0..3 {
        for k in 0..g.len() {
            let fd = &(&b[i][k] - &a[i][k]) * (1.0 / theta);
            assert!((&fd - &l[i][k]).max_abs() < 1e-4 * scale);
        }
    }
}

#[test]
fn horizontality_of_central_shift() {
    let g = Grid::halfline_default();
    let mut r = rng(9);
    for t in all_models(&[0.5, 0.5, -1.0]) {
        let s = t.asymptotics().unwrap().stratum.clone();
        let d: [LieElement; 3] = std::array::from_fn(|_| s.random_z(&mut r));
        let x = TangentVector::from_fn(&g, |_| [LieElement::zeros(3), d[0].clone(), d[1].clone(), d[2].clone()], None).unwrap();
        assert!(sup_norm(&horizontality_residual(&t, &x).unwrap()) < 1e-13);
        assert_eq!(sup_norm(&horizontality_residual(&t, &TangentVector::zero(&g, 3)).unwrap()), 0.0);
    }
}

#[test]
fn horizontal_vectors_are_orthogonal_to_gauge_orbits() {
    let g = Grid::halfline(40.0, 8192).unwrap();
    let mut r = rng(10);
    let face = WeylFace::from_values(&[0.6, -0.6]).unwrap();
    let tau = [face.tau1().clone(), LieElement::zeros(2), LieElement::zeros(2)];
    let t = model_solution(&LieElement::zeros(2), &tau, &Su2Triple::zero(2), &g).unwrap();
    let s = face.stratum();
    let (_, x) = baby_tangent(&face, s.random_z(&mut r), s.random_z(&mut r), vec![[0.7, -0.4]], 1.0, &g).unwrap();
    assert!(sup_norm(&horizontality_residual(&t, &x).unwrap()) < 1e-9);
    for _ in 0..3 {
        let xi = bump_xi(&g, &LieElement::random(2, &mut r), 0.1, 4.0);
        let xx = fundamental_vector_field(&xi, &t).unwrap();
        let v = bielawski_pair(&xx, &x, &MetricConfig::new(1.0)).unwrap().value;
        assert!(v.abs() < 1e-6, "{v}");
    }
}

#[test]
fn decay_fit_examples() {
    let g = Grid::halfline_default();
    let s = stratum(&tau_from(&[0.5, 0.5, -1.0]));
    let mut r = rng(11);
    let c = s.random_c(&mut r);
    let f: Vec<LieElement> = g.nodes().iter().map(|&t| &c * (1.0 + t).powi(-2)).collect();
    let rep = decay_diagnostics(&f, &g, &s).unwrap();
    assert!((rep.zeta_fit - 1.0).abs() < 0.05);
    assert!(rep.eta_fit.is_infinite());
    let h = s.random_perp(&mut r);
    let f: Vec<LieElement> = g.nodes().iter().map(|&t| &h * (-3.0 * t).exp()).collect();
    let rep = decay_diagnostics(&f, &g, &s).unwrap();
    assert!((rep.eta_fit - 3.0).abs() < 0.05);
    assert!(rep.zeta_fit.is_infinite());
    let rep = decay_diagnostics(&vec![LieElement::zeros(3); g.len()], &g, &s).unwrap();
    assert!(rep.zeta_fit.is_infinite() && rep.eta_fit.is_infinite());
    assert!(decay_diagnostics(&f, &Grid::halfline(10.0, 512).unwrap(), &s).is_err());
}

#[test]
fn brackets_land_in_predicted_class() {
    let g = Grid::halfline_default();
    let s = stratum(&tau_from(&[0.5, 0.5, -1.0]));
    let mut r = rng(12);
    let zeta = 0.7;
    let eta = 1.5;
    let (a, b, h) = (s.random_cc(&mut r), s.random_cc(&mut r), s.random_perp(&mut r));
    let fz1: Vec<LieElement> = g.nodes().iter().map(|&t| &a * (1.0 + t).powf(-1.0 - zeta)).collect();
    let fz2: Vec<LieElement> = g.nodes().iter().map(|&t| &b * (1.0 + t).powf(-1.0 - zeta)).collect();
    let fe: Vec<LieElement> = g.nodes().iter().map(|&t| &h * (-eta * t).exp()).collect();
    // Omega_zeta(c) x Omega_exp(c^perp) lands in Omega_exp(c^perp).
    let m: Vec<LieElement> = fz1.iter().zip(&fe).map(|(x, y)| bracket(x, y).unwrap()).collect();
    let rep = decay_diagnostics(&m, &g, &s).unwrap();
    assert!(rep.zeta_fit.is_infinite() && rep.eta_fit > eta - 0.05);
    // Omega_zeta(c) x Omega_zeta(c) lands in Omega_zeta(c).
    let m: Vec<LieElement> = fz1.iter().zip(&fz2).map(|(x, y)| bracket(x, y).unwrap()).collect();
    let rep = decay_diagnostics(&m, &g, &s).unwrap();
    assert!(rep.eta_fit.is_infinite() && rep.zeta_fit > zeta - 0.05);
    // Omega_exp x Omega_exp lands in Omega_exp.
    let h2 = s.random_perp(&mut r);
    let m: Vec<LieElement> = fe.iter().map(|y| bracket(y, &(&h2 * (-eta * 0.0f64).exp())).unwrap()).collect();
    let m: Vec<LieElement> = m.iter().zip(g.nodes()).map(|(x, &t)| x * (-eta * t).exp()).collect();
    let rep = decay_diagnostics(&m, &g, &s).unwrap();
    assert!(rep.eta_fit > eta - 0.05 || rep.eta_fit.is_infinite());
    assert!(rep.zeta_fit > zeta - 0.05);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]
    #[test]
    fn linearized_residual_is_linear(seed in 0u64..100_000, a in -2.0f64..2.0) {
        let g = Grid::interval(1.0, 64).unwrap();
        let mut r = rng(seed);
        let t = NahmPath::from_fn(&g, |_| std::array::from_fn(|_| LieElement::random(2, &mut rng(seed ^ 7))), None).unwrap();
        let x = random_interval_tangent(&g, 2, &mut r);
        let y = random_interval_tangent(&g, 2, &mut r);
        let xy = x.combine(a, &y, 1.0).unwrap();
        let lx = linearized_residual(&t, &x).unwrap();
        let ly = linearized_residual(&t, &y).unwrap();
        let lxy = linearized_residual(&t, &xy).unwrap();
        for i in 0..3 {
            for k in 0..g.len() {
                let want = &(&lx[i][k] * a) + &ly[i][k];
                prop_assert!((&want - &lxy[i][k]).max_abs() < 1e-9);
            }
        }
    }
}
