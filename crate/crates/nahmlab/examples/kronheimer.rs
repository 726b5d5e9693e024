//! Kronheimer's map `(alpha, beta) -> (g(L), beta(0))`, complex gauge
//! orbits and polar decomposition.

use nahmlab::gauge::*;
use nahmlab::harness::fixtures::{principal_triple, seeded, sine_gauge, stratum_of};
use nahmlab::lie::matrix;
use nahmlab::nahm::*;
use nahmlab::LieElement;

fn main() -> nahmlab::Result<()> {
    let g = Grid::interval(1.0, 1025)?;
    let mut r = seeded(7);
    let init = std::array::from_fn(|_| &LieElement::random(2, &mut r) * 0.3);
    let t = integrate_ivp(&init, &T0Source::Constant(&LieElement::random(2, &mut r) * 0.3), &g)?;
    let p = kronheimer_map(&t)?;
    println!("g(1) has det {:.12}", matrix::det(&p.g_end));
    for _ in 0..3 {
        let u = sine_gauge(&g, &LieElement::random(2, &mut r), &LieElement::random(2, &mut r))?;
        let q = kronheimer_map(&apply_gauge(&u, &t)?)?;
        println!("after a based gauge: |dg| = {:.1e}, |dbeta| = {:.1e}", matrix::fro(&(&p.g_end - &q.g_end)), matrix::fro(&(&p.beta0 - &q.beta0)));
    }

    let pol = polar_decompose(&p.g_end)?;
    println!("g(1) = k exp(i xi): |xi| = {:.4}, rebuild error {:.1e}", pol.xi.norm(), matrix::fro(&(&pol.reconstruct() - &p.g_end)));

    let (tau, s) = stratum_of(&[0.0, 0.0])?;
    let sigma = principal_triple(&s)?;
    let gh = Grid::halfline_default();
    let pair = model_pair(&LieElement::zeros(2), &tau, &sigma, &gh)?;
    println!("complex model pair residual {:.2e}", pair.residual_sup());
    Ok(())
}
