//! Deterministic sample data shared by scenarios and the acceptance suite.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::Result;
use crate::gauge::{Flavor, GaugeAlgebraPath, GaugePath, Profile};
use crate::lie::element::LieElement;
use crate::lie::stratum::{centralizer_blocks, StratumData};
use crate::lie::triple::{su2_triple_from_partition, Su2Triple};
use crate::metric::bump;
use crate::nahm::grid::Grid;
use crate::nahm::path::{Quad, TangentAsymptotics, TangentVector};

/// Seeded generator used everywhere randomness appears.
pub fn seeded(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `(diag(a), diag(b), diag(c))`, with missing entries read as zero.
pub fn diagonal_triple(entries: &[Vec<f64>], n: usize) -> Result<[LieElement; 3]> {
    let zero = vec![0.0; n];
    let mut out: [LieElement; 3] = std::array::from_fn(|_| LieElement::zeros(n));
    for (i, slot) in out.iter_mut().enumerate() {
        *slot = LieElement::diagonal(entries.get(i).unwrap_or(&zero))?;
    }
    Ok(out)
}

/// Stratum of a diagonal `tau_1` with `tau_2 = tau_3 = 0`.
pub fn stratum_of(a: &[f64]) -> Result<([LieElement; 3], StratumData)> {
    let tau = diagonal_triple(&[a.to_vec()], a.len())?;
    let s = centralizer_blocks(&tau)?;
    Ok((tau, s))
}

/// The triple whose every block is a single irreducible part.
pub fn principal_triple(s: &StratumData) -> Result<Su2Triple> {
    let parts: Vec<Vec<usize>> = s.blocks().iter().map(|&d| vec![d]).collect();
    su2_triple_from_partition(s, &parts)
}

/// Smooth bump `phi(t)` on `[a, b]` with its derivative.
pub fn bump_pair(t: f64, a: f64, b: f64) -> (f64, f64) {
    let v = bump(t, a, b);
    if v == 0.0 {
        return (0.0, 0.0);
    }
    let w = b - a;
    let x = (t - a) / w;
    let q = x * (1.0 - x);
    (v, v * (1.0 - 2.0 * x) / (q * q) / w)
}

/// `exp(sin(pi t/L) A_1) exp(sin(2 pi t/L) A_2)`: identity at both ends.
pub fn sine_gauge(grid: &Grid, a1: &LieElement, a2: &LieElement) -> Result<GaugePath> {
    let w = std::f64::consts::PI / grid.t_max();
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
}

/// `xi(t) = phi(t) A` with `phi` a bump on `[lo, hi]`.
pub fn bump_algebra_path(grid: &Grid, a: &LieElement, lo: f64, hi: f64) -> Result<GaugeAlgebraPath> {
    let a1 = a.clone();
    let a2 = a.clone();
    GaugeAlgebraPath::from_fn(grid, move |t| &a1 * bump_pair(t, lo, hi).0, Some(&move |t| &a2 * bump_pair(t, lo, hi).1), None)
}

/// `X_i = a_i + b_i cos t + c_i t^2` on an interval grid.
pub fn smooth_interval_tangent<R: Rng + ?Sized>(grid: &Grid, n: usize, rng: &mut R) -> Result<TangentVector> {
    let a: Vec<LieElement> = (0..12).map(|_| LieElement::random(n, rng)).collect();
    TangentVector::from_fn(grid, |t| std::array::from_fn(|i| &(&a[i] + &(&a[4 + i] * t.cos())) + &(&a[8 + i] * (t * t))), None)
}

/// `X_i = delta_i + epsilon_i/(2(1+t)) + e^{-t} A_i + (1+t)^{-3} B_i` on a
/// half-line grid, with `delta` in `Z(c)`, `epsilon` in `[c,c]` and `B` in `c`.
pub fn halfline_tangent<R: Rng + ?Sized>(grid: &Grid, s: &StratumData, rng: &mut R) -> Result<TangentVector> {
    let n = s.n();
    let delta: Quad = std::array::from_fn(|_| s.random_z(rng));
    let epsilon: Quad = std::array::from_fn(|i| if i > 0 { s.random_cc(rng) } else { LieElement::zeros(n) });
    let a: Quad = std::array::from_fn(|_| LieElement::random(n, rng));
    let b: Quad = std::array::from_fn(|_| s.random_c(rng));
    let asym = TangentAsymptotics { delta: delta.clone(), epsilon: epsilon.clone(), t_offset: 0.0 };
    TangentVector::from_fn(
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
}

/// Random coefficients for every root space of a face.
pub fn root_coeffs<R: Rng + ?Sized>(count: usize, rng: &mut R) -> Vec<[f64; 2]> {
    (0..count).map(|_| [rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)]).collect()
}
