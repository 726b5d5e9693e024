//! Decay-rate fits for the c and c_perp parts of a sampled function.

use nahmlab::harness::fixtures::{seeded, stratum_of};
use nahmlab::nahm::{decay_diagnostics, Grid};
use nahmlab::LieElement;

fn main() -> nahmlab::Result<()> {
    let g = Grid::halfline_default();
    let (_, s) = stratum_of(&[0.5, 0.5, -1.0])?;
    let mut r = seeded(4);
    let (c, h) = (s.random_c(&mut r), s.random_perp(&mut r));
    let f: Vec<LieElement> =
        g.nodes().iter().map(|&t| &(&c * (1.0 + t).powf(-1.7)) + &(&h * (-2.0 * t).exp())).collect();
    let rep = decay_diagnostics(&f, &g, &s)?;
    println!("(1+t)^(-1.7) c + e^(-2t) h: zeta = {:.4}, eta = {:.4}", rep.zeta_fit, rep.eta_fit);
    println!("fit window {:?} with {} nodes", rep.window, rep.nodes_in_window);

    // Bracketing with a constant of c keeps both classes.
    let k = s.random_cc(&mut r);
    let b = f.iter().map(|x| x.bracket(&k)).collect::<nahmlab::Result<Vec<_>>>()?;
    let rep = decay_diagnostics(&b, &g, &s)?;
    println!("[f, k] with k in [c,c]: zeta = {:.4}, eta = {:.4}", rep.zeta_fit, rep.eta_fit);
    Ok(())
}
