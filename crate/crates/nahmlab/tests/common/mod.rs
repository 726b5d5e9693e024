//! Shared helpers for the integration tests.
#![allow(dead_code)]

use nahmlab::gauge::{Flavor, GaugePath, Profile};
use nahmlab::lie::matrix::{self, CMat, C64};
use nahmlab::lie::{centralizer_blocks, su2_triple_from_partition, StratumData};
use nahmlab::{Grid, LieElement, Su2Triple};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Smooth bump supported on `[a, b]` with peak 1, and its derivative.
pub fn bump(t: f64, a: f64, b: f64) -> (f64, f64) {
    if t <= a || t >= b {
        return (0.0, 0.0);
    }
    let w = b - a;
    let x = (t - a) / w;
    let q = x * (1.0 - x);
    let v = (4.0 - 1.0 / q).exp();
    (v, v * (1.0 - 2.0 * x) / (q * q) / w)
}

/// Diagonal commuting triple with first entry `diag(a)` and the others zero.
pub fn tau_from(a: &[f64]) -> [LieElement; 3] {
    let n = a.len();
    [LieElement::diagonal(a).unwrap(), LieElement::zeros(n), LieElement::zeros(n)]
}

/// Generic diagonal commuting triple.
pub fn tau3(a: &[f64], b: &[f64], c: &[f64]) -> [LieElement; 3] {
    [LieElement::diagonal(a).unwrap(), LieElement::diagonal(b).unwrap(), LieElement::diagonal(c).unwrap()]
}

pub fn stratum(tau: &[LieElement; 3]) -> StratumData {
    centralizer_blocks(tau).unwrap()
}

/// The triple of the one-block partition `[n]`.
pub fn principal(s: &StratumData) -> Su2Triple {
    let parts: Vec<Vec<usize>> = s.blocks().iter().map(|&d| vec![d]).collect();
    su2_triple_from_partition(s, &parts).unwrap()
}

/// Unitary path `exp(phi_1(t) A_1) exp(phi_2(t) A_2)` with bump profiles on
/// `[a, b]` and exact velocity.
pub fn bump_gauge(grid: &Grid, a1: &LieElement, a2: &LieElement, a: f64, b: f64) -> GaugePath {
    let f = move |t: f64| bump(t, a, b).0;
    let df = move |t: f64| bump(t, a, b).1;
    let g = move |t: f64| bump(t, a + 0.1 * (b - a), b).0;
    let dg = move |t: f64| bump(t, a + 0.1 * (b - a), b).1;
    GaugePath::exp_product(
        grid,
        &[
            (Profile { f: &f, df: &df }, a1.matrix().clone()),
            (Profile { f: &g, df: &dg }, a2.matrix().clone()),
        ],
        Flavor::Unitary,
    )
    .unwrap()
    .with_slope(LieElement::zeros(a1.dim()))
}

/// Unitary path `exp(sin(pi t / L) A_1) exp(sin(2 pi t / L) A_2)`, equal to
/// the identity at both ends of `[0, L]`.
pub fn sine_gauge(grid: &Grid, a1: &LieElement, a2: &LieElement) -> GaugePath {
    let l = grid.t_max();
    let w = std::f64::consts::PI / l;
    let f = move |t: f64| (w * t).sin();
    let df = move |t: f64| w * (w * t).cos();
    let g = move |t: f64| (2.0 * w * t).sin();
    let dg = move |t: f64| 2.0 * w * (2.0 * w * t).cos();
    GaugePath::exp_product(
        grid,
        &[
            (Profile { f: &f, df: &df }, a1.matrix().clone()),
            (Profile { f: &g, df: &dg }, a2.matrix().clone()),
        ],
        Flavor::Unitary,
    )
    .unwrap()
}

/// Random element of `sl(n, C)` with entries of size `scale`.
pub fn random_sl<R: rand::Rng>(n: usize, scale: f64, rng: &mut R) -> CMat {
    let mut m = CMat::from_fn(n, n, |_, _| C64::new(rng.gen_range(-scale..scale), rng.gen_range(-scale..scale)));
    let tr = m.trace() / C64::new(n as f64, 0.0);
    for i in 0..n {
        m[(i, i)] -= tr;
    }
    m
}

/// Random element of `SU(n)`.
pub fn random_su<R: rand::Rng>(n: usize, rng: &mut R) -> CMat {
    matrix::expm(LieElement::random(n, rng).matrix())
}

pub fn fro(a: &CMat) -> f64 {
    matrix::fro(a)
}

/// Random half-line tangent vector
/// `X_i = delta_i + epsilon_i/(2(1+t)) + e^{-t} A_i + (1+t)^{-3} B_i`
/// with `delta_i` in `Z(c)`, `epsilon_i` in `[c,c]` (`epsilon_0 = 0`),
/// `A_i` arbitrary and `B_i` in `c`.
pub fn random_halfline_tangent<R: rand::Rng>(
    grid: &Grid,
    s: &StratumData,
    with_delta: bool,
    with_eps: bool,
    rng: &mut R,
) -> nahmlab::TangentVector {
    use nahmlab::nahm::{TangentAsymptotics, Quad};
    let n = s.n();
    let delta: Quad = std::array::from_fn(|_| if with_delta { s.random_z(rng) } else { LieElement::zeros(n) });
    let epsilon: Quad =
        std::array::from_fn(|i| if with_eps && i > 0 { s.random_cc(rng) } else { LieElement::zeros(n) });
    let a: Quad = std::array::from_fn(|_| LieElement::random(n, rng));
    let b: Quad = std::array::from_fn(|_| s.random_c(rng));
    let asym = TangentAsymptotics { delta: delta.clone(), epsilon: epsilon.clone(), t_offset: 0.0 };
    nahmlab::TangentVector::from_fn(
        grid,
        |t| {
            std::array::from_fn(|i| {
                let mut x = &delta[i] + &(&epsilon[i] * (0.5 / (1.0 + t)));
                x += &(&a[i] * (-t).exp());
                x += &(&b[i] * (1.0 + t).powi(-3));
                x
            })
        },
        Some(asym),
    )
    .unwrap()
}

/// Random smooth interval tangent vector.
pub fn random_interval_tangent<R: rand::Rng>(grid: &Grid, n: usize, rng: &mut R) -> nahmlab::TangentVector {
    let a: Vec<LieElement> = (0..12).map(|_| LieElement::random(n, rng)).collect();
    nahmlab::TangentVector::from_fn(
        grid,
        |t| std::array::from_fn(|i| &(&a[i] + &(&a[4 + i] * t.cos())) + &(&a[8 + i] * (t * t))),
        None,
    )
    .unwrap()
}
