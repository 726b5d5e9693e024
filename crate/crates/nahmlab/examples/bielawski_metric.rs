//! The regularized Bielawski pairing: null vectors and signed norms.

use nahmlab::harness::acceptance::signed_norm_example;
use nahmlab::harness::fixtures::{diagonal_triple, seeded};
use nahmlab::lie::centralizer_blocks;
use nahmlab::metric::{bielawski_pair, decomposed_norm, MetricConfig};
use nahmlab::nahm::*;

fn main() -> nahmlab::Result<()> {
    let s = centralizer_blocks(&diagonal_triple(&[vec![1.0, 1.0, -2.0], vec![0.5, 0.5, -1.0]], 3)?)?;
    let g = Grid::halfline_default();
    let mut delta = zero_quad(3);
    for d in delta.iter_mut().skip(1) {
        *d = s.random_z(&mut seeded(1));
    }
    let x = TangentVector::from_fn(&g, |_| delta.clone(), Some(TangentAsymptotics { delta: delta.clone(), ..TangentAsymptotics::zero(3) }))?;
    for b in [0.0, 1.0] {
        let rep = bielawski_pair(&x, &x, &MetricConfig::new(b))?;
        println!("constant (0, d1, d2, d3) at b = {b}: |X|^2 = {:.3e}", rep.value);
    }
    let parts = decomposed_norm(&x, &s, &MetricConfig::new(1.0))?;
    println!("split into c_perp {:.3e}, [c,c] {:.3e}, Z(c) {:.3e}", parts.perp, parts.semisimple, parts.center);

    println!("X_1 = d (1 - e^(-eta t)):");
    for (b, eta) in [(1.0, 1.0), (1.0, 0.5), (2.0, 3.0), (1.0, 1.5)] {
        let (v, want, dd) = signed_norm_example(b, eta, 16384, 2)?;
        println!("  b = {b}, eta = {eta}: |X|^2/|d|^2 = {:+.8} (b - 3/(2 eta) = {:+.8})", v / dd, want / dd);
    }
    Ok(())
}
