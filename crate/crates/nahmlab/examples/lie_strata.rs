//! Centralizer strata, root spaces, su(2)-triples and stability spectra.

use nahmlab::harness::fixtures::seeded;
use nahmlab::lie::triple::{bracket_defect, stratum_partitions};
use nahmlab::lie::*;

fn main() -> nahmlab::Result<()> {
    let tau = [
        LieElement::diagonal(&[0.5, 0.5, -0.5, -0.5])?,
        LieElement::diagonal(&[1.0, 1.0, -1.0, -1.0])?,
        LieElement::zeros(4),
    ];
    let s = centralizer_blocks(&tau)?;
    println!("blocks {:?}, dim c = {}, dim c_perp = {}", s.blocks(), s.dim_c(), s.dim_perp());
    println!("zeta = {}, eta = {}", s.zeta(), s.eta());

    let x = LieElement::random(4, &mut seeded(1));
    let (z, cc, perp) = project_stratum(&x, &s)?;
    println!("|x|^2 = {:.6} = {:.6} + {:.6} + {:.6}", x.norm_sq(), z.norm_sq(), cc.norm_sq(), perp.norm_sq());

    for r in root_spaces(&tau[0], &s)? {
        println!("root space at {:?}: alpha = {:.3}", r.position, r.alpha_value);
    }

    for parts in stratum_partitions(&s) {
        let sigma = su2_triple_from_partition(&s, &parts)?;
        let k = stability_constants(&sigma, &s)?;
        let top = k.casimir_spectrum.iter().cloned().fold(0.0, f64::max);
        println!(
            "partition {parts:?}: bracket defect {:.1e}, Hessian spectrum size {}, top Casimir {top:.3}, zeta bound {:.3}",
            bracket_defect(sigma.sigma())?,
            k.hess_spectrum.len(),
            k.zeta_bound
        );
    }
    Ok(())
}
