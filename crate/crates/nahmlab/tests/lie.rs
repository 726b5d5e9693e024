mod common;

use common::*;
use nahmlab::lie::matrix::{self, CMat, C64};
use nahmlab::lie::stability::{chern_simons_gradient, hessian_form};
use nahmlab::lie::stratum::project_stratum;
use nahmlab::lie::triple::{bracket_defect, stratum_partitions};
use nahmlab::lie::*;
use nalgebra::DMatrix;
use proptest::prelude::*;

fn triple_norm(x: &[LieElement; 3]) -> f64 {
    x.iter().map(|e| e.norm_sq()).sum::<f64>().sqrt()
}

/// Eigenvalues of `-ad(tau1)^2` on `su(n)`, by assembling the matrix in the
/// standard basis.
fn ad_square_spectrum(tau1: &LieElement) -> Vec<f64> {
    let basis = LieElement::basis(tau1.dim());
    let d = basis.len();
    let m = DMatrix::from_fn(d, d, |a, b| {
        let x = bracket(tau1, &bracket(tau1, &basis[b]).unwrap()).unwrap();
        -inner(&basis[a], &x).unwrap()
    });
    let mut ev: Vec<f64> = m.symmetric_eigen().eigenvalues.iter().cloned().collect();
    ev.sort_by(|a, b| a.partial_cmp(b).unwrap());
    ev
}

#[test]
fn bracket_examples() {
    let mut r = rng(1);
    let x = LieElement::random(3, &mut r);
    assert_eq!(bracket(&x, &x).unwrap().max_abs(), 0.0);
    let s = stratum(&tau_from(&[0.0, 0.0]));
    let sig = principal(&s);
    let [s1, s2, s3] = sig.sigma();
    assert!((&bracket(s1, s2).unwrap() + &(s3 * 2.0)).max_abs() < 1e-12);
    assert!(bracket(&x, &LieElement::zeros(2)).is_err());
}

#[test]
fn jacobi_identity() {
    let mut r = rng(2);
    for _ in 0..100 {
        let [x, y, z] = [0, 1, 2].map(|_| LieElement::random(4, &mut r));
        let b = |a: &LieElement, c: &LieElement| bracket(a, c).unwrap();
        let j = &(&b(&x, &b(&y, &z)) + &b(&y, &b(&z, &x))) + &b(&z, &b(&x, &y));
        assert!(j.norm() < 1e-10);
    }
}

#[test]
fn ad_skewness_and_invariance() {
    let mut r = rng(3);
    for _ in 0..100 {
        let [x, y, z] = [0, 1, 2].map(|_| LieElement::random(3, &mut r));
        let lhs = inner(&bracket(&x, &y).unwrap(), &z).unwrap() + inner(&y, &bracket(&x, &z).unwrap()).unwrap();
        assert!(lhs.abs() < 1e-10);
        let u = random_su(3, &mut r);
        let a = inner(&x.ad_unitary(&u), &y.ad_unitary(&u)).unwrap();
        assert!((a - inner(&x, &y).unwrap()).abs() < 1e-12);
        assert!(inner(&x, &x).unwrap() > 0.0);
    }
}

#[test]
fn inner_of_standard_triple() {
    let s1 = LieElement::diagonal(&[1.0, -1.0]).unwrap();
    assert!((inner(&s1, &s1).unwrap() - 2.0).abs() < 1e-15);
    let sig = principal(&stratum(&tau_from(&[0.0, 0.0])));
    for x in sig.sigma() {
        assert!((x.norm_sq() - 2.0).abs() < 1e-12);
    }
}

#[test]
fn centralizer_examples() {
    let r6 = 6f64.sqrt();
    let s = stratum(&tau_from(&[2.0 / r6, -1.0 / r6, -1.0 / r6]));
    assert_eq!(s.blocks(), vec![1, 2]);
    assert_eq!(stratum(&tau_from(&[0.0; 4])).blocks(), vec![4]);
    assert_eq!(stratum(&tau_from(&[0.9, 0.3, -0.1, -1.1])).blocks(), vec![1, 1, 1, 1]);
    let off = LieElement::random(3, &mut rng(4));
    assert!(centralizer_blocks(&[off, LieElement::zeros(3), LieElement::zeros(3)]).is_err());
}

#[test]
fn centralizer_dimension_matches_kernel_of_ad() {
    let mut r = rng(5);
    for a in [vec![2.0, -1.0, -1.0], vec![0.5, 0.5, -0.5, -0.5], vec![1.0, 0.2, -0.3, -0.9], vec![0.0; 3]] {
        let s = stratum(&tau_from(&a));
        let kernel = ad_square_spectrum(&LieElement::diagonal(&a).unwrap()).iter().filter(|e| e.abs() < 1e-9).count();
        assert_eq!(kernel, s.dim_c());
        for g in &s.basis_c() {
            let tau = &s.tau()[0];
            assert!(bracket(tau, g).unwrap().max_abs() < 1e-14);
        }
        let _ = s.random_c(&mut r);
    }
}

#[test]
fn projection_examples() {
    let mut r = rng(6);
    let s = stratum(&tau_from(&[0.5, 0.5, -1.0]));
    let z = s.random_z(&mut r);
    let (a, b, c) = project_stratum(&z, &s).unwrap();
    assert!((&a - &z).max_abs() < 1e-15 && b.max_abs() < 1e-15 && c.max_abs() < 1e-15);
    let parts = vec![vec![2], vec![1]];
    let sig = su2_triple_from_partition(&s, &parts).unwrap();
    let (a, b, c) = project_stratum(&sig.sigma()[0], &s).unwrap();
    assert!(a.max_abs() < 1e-15 && c.max_abs() < 1e-15 && (&b - &sig.sigma()[0]).max_abs() < 1e-15);
    for _ in 0..20 {
        let x = LieElement::random(3, &mut r);
        let (a, b, c) = project_stratum(&x, &s).unwrap();
        assert!((&(&(&a + &b) + &c) - &x).max_abs() < 1e-12);
        for (p, q) in [(&a, &b), (&a, &c), (&b, &c)] {
            assert!(inner(p, q).unwrap().abs() < 1e-12);
        }
    }
}

#[test]
fn root_space_examples() {
    let theta = 0.8;
    let s = stratum(&tau_from(&[theta, -theta]));
    let roots = root_spaces(&s.tau()[0], &s).unwrap();
    assert_eq!(roots.len(), 1);
    assert!((roots[0].alpha_value - 2.0 * theta).abs() < 1e-15);
    let (a, b, c) = (0.9, 0.2, -1.1);
    let s = stratum(&tau_from(&[a, b, c]));
    let roots = root_spaces(&s.tau()[0], &s).unwrap();
    let mut got: Vec<f64> = roots.iter().map(|r| r.alpha_value).collect();
    got.sort_by(|x, y| x.partial_cmp(y).unwrap());
    let mut want = vec![a - b, b - c, a - c];
    want.sort_by(|x, y| x.partial_cmp(y).unwrap());
    for (g, w) in got.iter().zip(&want) {
        assert!((g - w).abs() < 1e-14);
    }
    // Brute force: non-zero eigenvalues of -ad^2 are alpha^2, each twice.
    let ev: Vec<f64> = ad_square_spectrum(&s.tau()[0]).into_iter().filter(|e| *e > 1e-9).collect();
    let mut sq: Vec<f64> = want.iter().flat_map(|w| [w * w, w * w]).collect();
    sq.sort_by(|x, y| x.partial_cmp(y).unwrap());
    assert_eq!(ev.len(), sq.len());
    for (e, q) in ev.iter().zip(&sq) {
        assert!((e - q).abs() < 1e-12);
    }
}

#[test]
fn root_space_invariants() {
    for a in [vec![1.0, 0.2, -1.2], vec![0.5, 0.5, -1.0], vec![1.0, 1.0, -1.0, -1.0], vec![1.5, 0.5, -0.5, -1.5]] {
        let s = stratum(&tau_from(&a));
        let tau1 = &s.tau()[0];
        let roots = root_spaces(tau1, &s).unwrap();
        assert_eq!(2 * roots.len(), s.dim_perp());
        assert!(roots.windows(2).all(|w| w[0].alpha_value >= w[1].alpha_value));
        for r in &roots {
            for (i, e) in r.basis.iter().enumerate() {
                let mut c = [0.0; 2];
                c[i] = 1.0;
                let lhs = bracket(tau1, e).unwrap();
                let rhs = &r.element(r.apply_i0(c)) * r.alpha_value;
                assert!((&lhs - &rhs).max_abs() < 1e-10);
                let ii = r.apply_i0(r.apply_i0(c));
                assert!((ii[0] + c[0]).abs() < 1e-15 && (ii[1] + c[1]).abs() < 1e-15);
            }
        }
    }
}

#[test]
fn inconsistent_stratum_is_rejected() {
    let s = stratum(&tau3(&[0.5, 0.5, -1.0], &[1.0, -1.0, 0.0], &[0.0; 3]));
    let tau1 = LieElement::diagonal(&[0.5, 0.5, -1.0]).unwrap();
    assert!(root_spaces(&tau1, &s).is_err());
}

#[test]
fn triple_examples() {
    let s = stratum(&tau_from(&[0.0; 3]));
    let t = su2_triple_from_partition(&s, &[vec![1, 1, 1]]).unwrap();
    assert!(t.is_zero());
    let t = su2_triple_from_partition(&s, &[vec![3]]).unwrap();
    assert!(bracket_defect(t.sigma()).unwrap() < 1e-10);
    assert!(su2_triple_from_partition(&s, &[vec![2]]).is_err());
    let s = stratum(&tau_from(&[0.5, 0.5, -1.0]));
    for parts in stratum_partitions(&s) {
        let t = su2_triple_from_partition(&s, &parts).unwrap();
        assert!(bracket_defect(t.sigma()).unwrap() < 1e-10);
        t.check_in(&s).unwrap();
    }
}

#[test]
fn chern_simons_examples() {
    let s = stratum(&tau_from(&[0.0, 0.0]));
    let z = [LieElement::zeros(2), LieElement::zeros(2), LieElement::zeros(2)];
    assert_eq!(chern_simons(&z, &s).unwrap(), 0.0);
    let sig = principal(&s);
    assert!((chern_simons(sig.sigma(), &s).unwrap() - 2.0).abs() < 1e-12);
    let s3 = stratum(&tau_from(&[0.0; 3]));
    for parts in [vec![vec![3]], vec![vec![2, 1]]] {
        let sig = su2_triple_from_partition(&s3, &parts).unwrap();
        // Central differences along a basis of c^3.
        let h = 1e-6;
        let basis = s3.basis_c();
        let mut g2 = 0.0;
        for i in 0..3 {
            for e in &basis {
                let shift = |sgn: f64| {
                    let mut x = sig.sigma().clone();
                    x[i] = &x[i] + &(e * (sgn * h));
                    chern_simons(&x, &s3).unwrap()
                };
                g2 += ((shift(1.0) - shift(-1.0)) / (2.0 * h)).powi(2);
            }
        }
        assert!(g2.sqrt() < 1e-6, "{}", g2.sqrt());
        assert!(triple_norm(&chern_simons_gradient(sig.sigma())) < 1e-10);
    }
    let perp = s.basis_perp();
    let mut r = rng(7);
    let s_reg = stratum(&tau_from(&[0.5, -0.5]));
    let bad = [s_reg.random_perp(&mut r), LieElement::zeros(2), LieElement::zeros(2)];
    assert!(chern_simons(&bad, &s_reg).is_err());
    assert!(perp.is_empty());
}

#[test]
fn stability_examples() {
    let s = stratum(&tau_from(&[0.0, 0.0]));
    let zero = su2_triple_from_partition(&s, &[vec![1, 1]]).unwrap();
    let c0 = stability_constants(&zero, &s).unwrap();
    assert_eq!(c0.hess_spectrum.len(), 3 * s.dim_c());
    assert!(c0.hess_spectrum.iter().all(|e| (e - 2.0).abs() < 1e-12));
    assert!(c0.casimir_spectrum.iter().all(|e| e.abs() < 1e-12));
    assert!((c0.zeta_bound - 2.0).abs() < 1e-12);
    let c1 = stability_constants(&principal(&s), &s).unwrap();
    assert_eq!(c1.casimir_spectrum.len(), 3);
    assert!(c1.casimir_spectrum.iter().all(|e| (e - 8.0).abs() < 1e-10));
}

#[test]
fn spectra_are_conjugation_invariant() {
    let mut r = rng(8);
    let s = stratum(&tau_from(&[0.5, 0.5, -0.5, -0.5]));
    for parts in stratum_partitions(&s) {
        let sig = su2_triple_from_partition(&s, &parts).unwrap();
        let base = stability_constants(&sig, &s).unwrap();
        for _ in 0..10 {
            let u = s.random_group_element(&mut r);
            let c = stability_constants(&sig.conjugate(&u), &s).unwrap();
            for (a, b) in base.hess_spectrum.iter().zip(&c.hess_spectrum) {
                assert!((a - b).abs() < 1e-8);
            }
            for (a, b) in base.casimir_spectrum.iter().zip(&c.casimir_spectrum) {
                assert!((a - b).abs() < 1e-8);
            }
        }
    }
}

#[test]
fn hessian_conjugation() {
    let mut r = rng(9);
    let s = stratum(&tau_from(&[0.0; 3]));
    let sig = su2_triple_from_partition(&s, &[vec![3]]).unwrap();
    for _ in 0..20 {
        let u = s.random_group_element(&mut r);
        let xi: [LieElement; 3] = std::array::from_fn(|_| s.random_c(&mut r));
        let psi: [LieElement; 3] = std::array::from_fn(|_| s.random_c(&mut r));
        let conj = sig.conjugate(&u);
        let lhs = hessian_form(conj.sigma(), &xi, &psi);
        let ui = u.adjoint();
        let rhs = hessian_form(sig.sigma(), &xi.clone().map(|x| x.ad_unitary(&ui)), &psi.clone().map(|x| x.ad_unitary(&ui)));
        assert!((lhs - rhs).abs() < 1e-10);
    }
}

fn centralizer_relations(s: &StratumData, rng: &mut impl rand::Rng) -> f64 {
    let delta: Vec<LieElement> = (0..4).map(|_| s.random_z(rng)).collect();
    let eps: Vec<LieElement> = (0..4).map(|_| s.random_cc(rng)).collect();
    let basis = s.basis_c();
    let mut worst: f64 = 0.0;
    let b = |x: &LieElement, y: &LieElement| bracket(x, y).unwrap();
    for d in &delta {
        for g in &basis {
            worst = worst.max(b(d, g).max_abs());
        }
        for e in &eps {
            worst = worst.max(b(d, e).max_abs());
        }
        for g1 in &basis {
            for g2 in &basis {
                worst = worst.max(inner(&b(g1, g2), d).unwrap().abs());
            }
        }
    }
    for t in s.tau() {
        for e in &eps {
            worst = worst.max(b(t, e).max_abs());
        }
    }
    for i in 0..4 {
        worst = worst.max(inner(&delta[i], &eps[i]).unwrap().abs());
    }
    worst
}

#[test]
fn centralizer_relations_on_block_patterns() {
    let mut r = rng(10);
    let patterns: Vec<[LieElement; 3]> = vec![
        tau_from(&[0.5, 0.5, -1.0]),
        tau3(&[1.0, 1.0, -2.0], &[0.0; 3], &[0.3, 0.3, -0.6]),
        tau_from(&[0.5, 0.5, -0.5, -0.5]),
        tau3(&[1.0, 1.0, 1.0, -3.0], &[0.0; 4], &[0.0; 4]),
        tau3(&[0.4, 0.4, -0.4, -0.4], &[1.0, -1.0, 0.0, 0.0], &[0.0; 4]),
        tau_from(&[0.0; 4]),
    ];
    for i in 0..100 {
        let s = stratum(&patterns[i % patterns.len()]);
        assert!(centralizer_relations(&s, &mut r) < 1e-10);
    }
}

#[test]
fn group_elements_are_special_unitary() {
    let mut r = rng(11);
    let s = stratum(&tau_from(&[0.5, 0.5, -1.0]));
    for _ in 0..5 {
        let u = s.random_group_element(&mut r);
        assert!(matrix::unitarity_defect(&u) < 1e-12);
        assert!((matrix::det(&u) - C64::new(1.0, 0.0)).norm() < 1e-12);
        let x = s.random_c(&mut r);
        let y = x.ad_unitary(&u);
        assert!(s.proj_perp(&y).norm() < 1e-12);
        let _: &CMat = &u;
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]
    #[test]
    fn projectors_split_orthogonally(seed in 0u64..100_000, pattern in 0usize..4) {
        let mut r = rng(seed);
        let a = [vec![0.5, 0.5, -1.0], vec![1.0, 0.1, -1.1], vec![0.0; 3], vec![0.3, -0.3, 0.3, -0.3]][pattern].clone();
        let s = stratum(&tau_from(&a));
        let x = LieElement::random(a.len(), &mut r);
        let (z, c, h) = s.split(&x);
        prop_assert!((&(&(&z + &c) + &h) - &x).max_abs() < 1e-12);
        prop_assert!(inner(&z, &c).unwrap().abs() < 1e-12);
        prop_assert!(inner(&z, &h).unwrap().abs() < 1e-12);
        prop_assert!(inner(&c, &h).unwrap().abs() < 1e-12);
        prop_assert!((&s.proj_z(&z) - &z).max_abs() < 1e-12);
    }

    #[test]
    fn bracket_is_antisymmetric_bilinear(seed in 0u64..100_000, a in -2.0f64..2.0) {
        let mut r = rng(seed);
        let [x, y, z] = [0, 1, 2].map(|_| LieElement::random(3, &mut r));
        let lhs = bracket(&(&(&x * a) + &z), &y).unwrap();
        let rhs = &(&bracket(&x, &y).unwrap() * a) + &bracket(&z, &y).unwrap();
        prop_assert!((&lhs - &rhs).max_abs() < 1e-12);
        prop_assert!((&bracket(&x, &y).unwrap() + &bracket(&y, &x).unwrap()).max_abs() < 1e-14);
    }
}
