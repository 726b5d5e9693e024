//! Gauge actions, the temporal gauge `T_0 = 0` and the centering gauge.

use nahmlab::gauge::{apply_gauge, center_tau0_gauge, gauge_t0_to_zero};
use nahmlab::harness::fixtures::{principal_triple, seeded, sine_gauge, stratum_of};
use nahmlab::lie::matrix;
use nahmlab::nahm::*;
use nahmlab::LieElement;

fn main() -> nahmlab::Result<()> {
    let g = Grid::interval(1.0, 1025)?;
    let mut r = seeded(6);
    let init = std::array::from_fn(|_| &LieElement::random(2, &mut r) * 0.3);
    let t0 = &LieElement::random(2, &mut r) * 0.3;
    let t = integrate_ivp(&init, &T0Source::Constant(t0), &g)?;
    let u = sine_gauge(&g, &LieElement::random(2, &mut r), &LieElement::random(2, &mut r))?;
    let ut = apply_gauge(&u, &t)?;
    println!("residual before {:.2e}, after a gauge {:.2e}", nahm_residual_sup(&t)?, nahm_residual_sup(&ut)?);

    let (w, fixed, rep) = gauge_t0_to_zero(&t)?;
    println!("temporal gauge: sup |T0| = {:.2e}, w(0) = 1 to {:.1e}", rep.t0_sup, matrix::fro(&(w.boundary().0 - matrix::identity(2))));
    println!("residual in temporal gauge {:.2e}", nahm_residual_sup(&fixed)?);

    let (tau, s) = stratum_of(&[1.0, 1.0, -2.0])?;
    let tau0 = LieElement::diagonal(&[0.4, 0.4, -0.8])?;
    let gh = Grid::halfline_default();
    let m = model_solution(&tau0, &tau, &principal_triple(&s)?, &gh)?;
    let cg = center_tau0_gauge(&m, 2.0, 0.5)?;
    let dev = gh
        .nodes()
        .iter()
        .zip(cg.path.samples())
        .map(|(t, q)| (&q[0] - &(&tau0 * (0.5 * 2.0 * (-0.5 * t).exp()))).norm())
        .fold(0.0, f64::max);
    println!("centering (b, c) = (2, 0.5): sup |T0 - cb e^(-ct) tau0| = {dev:.2e}");
    Ok(())
}
