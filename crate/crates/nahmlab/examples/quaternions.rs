//! I, J, K on tangent vectors, the three symplectic forms and the moment
//! map identity `d<mu_I, xi>(X) = omega_I(X^xi, X)`.

use nahmlab::gauge::fundamental_vector_field;
use nahmlab::harness::fixtures::*;
use nahmlab::metric::*;
use nahmlab::nahm::*;
use nahmlab::LieElement;

fn main() -> nahmlab::Result<()> {
    let (_, s) = stratum_of(&[0.5, 0.5, -1.0])?;
    let g = Grid::halfline_default();
    let mut r = seeded(8);
    let x = halfline_tangent(&g, &s, &mut r)?;
    let y = halfline_tangent(&g, &s, &mut r)?;
    let cfg = MetricConfig::new(1.0);
    let ij = quaternion_act(Axis::I, &quaternion_act(Axis::J, &x));
    println!("IJ = K exactly: {}", ij == quaternion_act(Axis::K, &x));
    for a in Axis::ALL {
        println!("omega_{a:?}(X, Y) = {:+.6}, omega_{a:?}(Y, X) = {:+.6}", symplectic_pair(a, &x, &y, &cfg)?, symplectic_pair(a, &y, &x, &cfg)?);
    }

    let gi = Grid::interval(3.0, 3001)?;
    let init = std::array::from_fn(|_| &LieElement::random(2, &mut r) * 0.15);
    let t = integrate_ivp(&init, &T0Source::Constant(LieElement::zeros(2)), &gi)?;
    let v = smooth_interval_tangent(&gi, 2, &mut r)?;
    let xi = bump_algebra_path(&gi, &LieElement::random(2, &mut r), 0.5, 2.5)?;
    let omega = symplectic_pair(Axis::I, &fundamental_vector_field(&xi, &t)?, &v, &cfg)?;
    let h = 1e-5;
    let shift = |e: f64| NahmPath::new(gi.clone(), t.samples().iter().zip(v.samples()).map(|(p, q)| std::array::from_fn(|i| &p[i] + &(&q[i] * e))).collect(), None);
    let (rp, rm) = (nahm_residual(&shift(h)?)?, nahm_residual(&shift(-h)?)?);
    let fd = (0..gi.len())
        .map(|k| xi.samples()[k].inner(&(&rp[0][k] - &rm[0][k])).map(|d| -d / (2.0 * h)))
        .collect::<nahmlab::Result<Vec<f64>>>()?;
    println!("d<mu_I, xi>(X) = {:+.10}, omega_I(X^xi, X) = {omega:+.10}", gi.trapezoid(&fd));
    Ok(())
}
