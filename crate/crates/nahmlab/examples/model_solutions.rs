//! Model solutions on the half-line and the initial-value integrator.

use nahmlab::harness::fixtures::{principal_triple, seeded, stratum_of};
use nahmlab::lie::triple::{stratum_partitions, su2_triple_from_partition};
use nahmlab::nahm::*;
use nahmlab::LieElement;

fn main() -> nahmlab::Result<()> {
    let g = Grid::halfline_default();
    for a in [vec![0.0, 0.0, 0.0], vec![0.5, 0.5, -1.0]] {
        let (tau, s) = stratum_of(&a)?;
        for parts in stratum_partitions(&s) {
            let sigma = su2_triple_from_partition(&s, &parts)?;
            let t = model_solution(&LieElement::zeros(3), &tau, &sigma, &g)?;
            println!("tau_1 = {a:?}, partition {parts:?}: residual {:.2e}", nahm_residual_sup(&t)?);
        }
    }

    // tau + sigma/(2(t+1)) from its value at t = 0.
    let (tau, s) = stratum_of(&[0.0, 0.0])?;
    let sigma = principal_triple(&s)?;
    let init = std::array::from_fn(|i| &tau[i] + &(&sigma.sigma()[i] * 0.5));
    let gi = Grid::interval(5.0, 2001)?;
    let t = integrate_ivp(&init, &T0Source::Constant(LieElement::zeros(2)), &gi)?;
    let end = &t.samples().last().unwrap()[1];
    println!("IVP T1(5) = {:.12} sigma_1, exact 1/12 = {:.12}", end.norm() / sigma.sigma()[0].norm(), 1.0 / 12.0);

    // Generic data may blow up in finite time.
    let mut r = seeded(3);
    let big = std::array::from_fn(|_| &LieElement::random(2, &mut r) * 3.0);
    match integrate_ivp(&big, &T0Source::Constant(LieElement::zeros(2)), &Grid::interval(10.0, 2001)?) {
        Err(e) => println!("large data: {e}"),
        Ok(_) => println!("large data stayed bounded"),
    }
    Ok(())
}
