//! Nahm residuals, the linearized system, horizontality, and a classic RK4
//! integrator for prescribed `T_0`.

use crate::error::{Error, Result};
use crate::lie::element::LieElement;

use super::grid::Grid;
use super::path::{NahmPath, Quad, TangentVector};

/// Blow-up guard on `|T_i|`.
pub const BLOWUP_NORM: f64 = 1e6;

/// Cyclic index triples `(i, j, k)` for `i = 1, 2, 3`.
const CYCLIC: [(usize, usize, usize); 3] = [(1, 2, 3), (2, 3, 1), (3, 1, 2)];

/// Largest pointwise norm of a sampled series.
pub fn sup_norm(f: &[LieElement]) -> f64 {
    f.iter().map(|x| x.norm()).fold(0.0, f64::max)
}

/// `dT_i/dt + [T_0, T_i] - [T_j, T_k]` for `i = 1, 2, 3`; this is `-mu` for
/// the hyperkahler moment map.
pub fn nahm_residual(t: &NahmPath) -> Result<[Vec<LieElement>; 3]> {
    let g = t.grid();
    let s = t.samples();
    Ok(CYCLIC.map(|(i, j, k)| {
        let comp: Vec<LieElement> = s.iter().map(|q| q[i].clone()).collect();
        let d = g.derivative(&comp);
        d.into_iter()
            .zip(s)
            .map(|(di, q)| &(&di + &q[0].br(&q[i])) - &q[j].br(&q[k]))
            .collect()
    }))
}

/// Largest norm over the three residual series.
pub fn nahm_residual_sup(t: &NahmPath) -> Result<f64> {
    Ok(nahm_residual(t)?.iter().map(|r| sup_norm(r)).fold(0.0, f64::max))
}

fn same_grid(t: &NahmPath, x: &TangentVector) -> Result<()> {
    if t.grid() != x.grid() || t.dim() != x.dim() {
        return Err(Error::GridMismatch);
    }
    Ok(())
}

/// `dX_i/dt + [T_0, X_i] + [X_0, T_i] - [T_j, X_k] - [X_j, T_k]`.
pub fn linearized_residual(t: &NahmPath, x: &TangentVector) -> Result<[Vec<LieElement>; 3]> {
    same_grid(t, x)?;
    let g = t.grid();
    let ts = t.samples();
    let xs = x.samples();
    Ok(CYCLIC.map(|(i, j, k)| {
        let comp: Vec<LieElement> = xs.iter().map(|q| q[i].clone()).collect();
        let d = g.derivative(&comp);
        d.into_iter()
            .zip(ts.iter().zip(xs))
            .map(|(di, (tq, xq))| {
                let mut r = di;
                r += &tq[0].br(&xq[i]);
                r += &xq[0].br(&tq[i]);
                r -= &tq[j].br(&xq[k]);
                r -= &xq[j].br(&tq[k]);
                r
            })
            .collect()
    }))
}

/// `dX_0/dt + sum_{i=0..3} [T_i, X_i]`.
pub fn horizontality_residual(t: &NahmPath, x: &TangentVector) -> Result<Vec<LieElement>> {
    same_grid(t, x)?;
    let d = t.grid().derivative(&x.component(0));
    Ok(d.into_iter()
        .zip(t.samples().iter().zip(x.samples()))
        .map(|(d0, (tq, xq))| {
            let mut r = d0;
            for i in 0..4 {
                r += &tq[i].br(&xq[i]);
            }
            r
        })
        .collect())
}

/// Prescribed `T_0` for the initial-value problem.
pub enum T0Source<'a> {
    /// `T_0` constant in time.
    Constant(LieElement),
    /// `T_0` as a function of `t`, evaluated at RK4 stages.
    Function(&'a (dyn Fn(f64) -> LieElement + Sync)),
}

impl T0Source<'_> {
    fn at(&self, t: f64) -> LieElement {
        match self {
            T0Source::Constant(c) => c.clone(),
            T0Source::Function(f) => f(t),
        }
    }
}

fn rhs(t0: &LieElement, y: &[LieElement; 3]) -> [LieElement; 3] {
    // dT_i/dt = -[T_0, T_i] + [T_j, T_k]
    let f = |i: usize, j: usize, k: usize| &y[j].br(&y[k]) - &t0.br(&y[i]);
    [f(0, 1, 2), f(1, 2, 0), f(2, 0, 1)]
}

fn axpy3(y: &[LieElement; 3], h: f64, k: &[LieElement; 3]) -> [LieElement; 3] {
    std::array::from_fn(|i| &y[i] + &(&k[i] * h))
}

/// Integrate `dT_i/dt + [T_0, T_i] = [T_j, T_k]` from `initial = (T_1, T_2, T_3)(0)`
/// with RK4 between consecutive grid nodes.
pub fn integrate_ivp(initial: &[LieElement; 3], t0: &T0Source<'_>, grid: &Grid) -> Result<NahmPath> {
    let n = initial[0].dim();
    for x in initial.iter() {
        if x.dim() != n {
            return Err(Error::DimensionMismatch(n, x.dim()));
        }
    }
    let nodes = grid.nodes();
    let mut samples: Vec<Quad> = Vec::with_capacity(nodes.len());
    let mut y = initial.clone();
    let mut t0_now = t0.at(0.0);
    samples.push([t0_now.clone(), y[0].clone(), y[1].clone(), y[2].clone()]);
    for w in nodes.windows(2) {
        let (ta, tb) = (w[0], w[1]);
        let h = tb - ta;
        let t0_mid = t0.at(ta + 0.5 * h);
        let t0_end = t0.at(tb);
        let k1 = rhs(&t0_now, &y);
        let k2 = rhs(&t0_mid, &axpy3(&y, 0.5 * h, &k1));
        let k3 = rhs(&t0_mid, &axpy3(&y, 0.5 * h, &k2));
        let k4 = rhs(&t0_end, &axpy3(&y, h, &k3));
        for i in 0..3 {
            let mut inc = k1[i].clone();
            inc += &(&k2[i] * 2.0);
            inc += &(&k3[i] * 2.0);
            inc += &k4[i];
            y[i] += &(&inc * (h / 6.0));
        }
        let norm = y.iter().map(|x| x.norm()).fold(0.0, f64::max);
        if !(norm <= BLOWUP_NORM) {
            return Err(Error::BlowUp { t: tb, norm });
        }
        t0_now = t0_end;
        samples.push([t0_now.clone(), y[0].clone(), y[1].clone(), y[2].clone()]);
    }
    NahmPath::new(grid.clone(), samples, None)
}
