//! The Baby Nahm equation and the maps to `K x k` on an interval and to
//! `(K x t+)/~` on the half-line.

use nahmlab::gauge::apply_gauge;
use nahmlab::harness::fixtures::{seeded, sine_gauge};
use nahmlab::implosion::*;
use nahmlab::lie::matrix;
use nahmlab::{Grid, LieElement, NahmPath};

fn main() -> nahmlab::Result<()> {
    let g = Grid::interval(1.0, 1601)?;
    let mut r = seeded(10);
    let k = matrix::expm(LieElement::random(3, &mut r).matrix());
    let xi = LieElement::random(3, &mut r);
    let t = baby_psi_interval(&g, &k, &xi)?;
    println!("Psi(k, xi): Baby Nahm residual {:.2e}", baby_residual_sup(&t)?);
    let p = baby_phi_interval(&t)?;
    println!("Phi(Psi(k, xi)) = (k, xi) to {:.1e} and {:.1e}", matrix::fro(&(&p.k - &k)), (&p.xi - &xi).norm());
    let u = sine_gauge(&g, &LieElement::random(3, &mut r), &LieElement::random(3, &mut r))?;
    let q = baby_phi_interval(&apply_gauge(&u, &t)?)?;
    println!("after a based gauge Phi moves by {:.1e}", matrix::fro(&(&p.k - &q.k)));

    let face = weyl_face(&LieElement::diagonal(&[-0.6, 0.3, 0.3])?)?;
    println!("face: {:?}", face.summary());
    let gh = Grid::halfline_default();
    let n = face.n();
    let model = NahmPath::baby(&gh, vec![LieElement::zeros(n); gh.len()], vec![face.tau1().clone(); gh.len()])?;
    let h = baby_phi_halfline(&model, &face)?;
    println!("half-line Phi of the constant solution: |k - 1| = {:.1e}", matrix::fro(&(&h.k - matrix::identity(n))));
    let cc = matrix::expm(face.stratum().random_cc(&mut r).matrix());
    let c = face.stratum().random_group_element(&mut r);
    println!("k ~ k c for c in [C,C]: {}", cc_equivalent(&face, &h.k, &(&h.k * &cc))?.equivalent);
    println!("k ~ k c for generic c in C: {}", cc_equivalent(&face, &h.k, &(&h.k * &c))?.equivalent);
    Ok(())
}
