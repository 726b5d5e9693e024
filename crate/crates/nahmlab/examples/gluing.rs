//! Gluing an interval onto a half-line shifts b by the interval length;
//! homotheties rescale solutions and norms.

use nahmlab::harness::fixtures::{principal_triple, seeded, stratum_of};
use nahmlab::metric::*;
use nahmlab::nahm::*;
use nahmlab::LieElement;

fn main() -> nahmlab::Result<()> {
    let (tau, s) = stratum_of(&[0.0, 0.0])?;
    let sigma = principal_triple(&s)?;
    let gi = Grid::interval(1.0, 257)?;
    let gh = Grid::halfline(40.0, 2048)?;
    let zero = LieElement::zeros(2);
    let ti = NahmPath::from_fn(&gi, |t| {
        let w = 0.5 / (1.0 + t);
        [zero.clone(), &sigma.sigma()[0] * w, &sigma.sigma()[1] * w, &sigma.sigma()[2] * w]
    }, None)?;
    let th = model_solution_offset(&zero, &tau, &sigma, &gh, -1.0)?;
    let mut r = seeded(9);
    let eps: [LieElement; 4] = std::array::from_fn(|i| if i == 0 { zero.clone() } else { s.random_cc(&mut r) });
    let a: [LieElement; 4] = std::array::from_fn(|_| LieElement::random(2, &mut r));
    let xbar = |t: f64| -> [LieElement; 4] { std::array::from_fn(|i| &(&eps[i] * (0.5 / (1.0 + t))) + &(&a[i] * (-t).exp())) };
    let xi = TangentVector::from_fn(&gi, xbar, None)?;
    let xh = TangentVector::from_fn(&gh, |t| xbar(t + 1.0), Some(TangentAsymptotics { epsilon: eps.clone(), t_offset: -1.0, ..TangentAsymptotics::zero(2) }))?;
    for b in [0.5, 1.0, 2.0] {
        let (glued, rep) = glue_paths(&ti, &th, &MetricConfig::new(b), &[(xi.clone(), xh.clone())])?;
        let c = &rep.checks[0];
        println!("b = {b}: L2 + B,b = {:.10}, B,{} of glued = {:.10}, residual {:.1e}", c.lhs, rep.glued_config.b, c.rhs, nahm_residual_sup(&glued)?);
    }

    let m = model_solution(&zero, &tau, &sigma, &gh)?;
    let m2 = homothety(&m, 2.0)?;
    println!("homothety r = 2: residual {:.2e}, new t_max {}", nahm_residual_sup(&m2)?, m2.grid().t_max());
    Ok(())
}
