//! Closed-form metric, complex structure and symplectic form on a stratum of
//! the implosion, checked against sampled tangent vectors.

use nahmlab::harness::fixtures::seeded;
use nahmlab::implosion::*;
use nahmlab::metric::{bielawski_pair, MetricConfig};
use nahmlab::Grid;

fn main() -> nahmlab::Result<()> {
    let face = WeylFace::from_values(&[1.0, 0.2, -1.2])?;
    println!("alpha values {:?}", face.alpha_values());
    let g = Grid::halfline(40.0, 8192)?;
    let mut r = seeded(11);
    let cx = TangentCoords::random(&face, &mut r);
    let cy = TangentCoords::random(&face, &mut r);
    for b in [0.5, 1.0, 2.0] {
        let geo = baby_geometry(&face, b)?;
        let tx = ImplosionTangent::from_coords(&face, &cx, b)?;
        let x = tx.sample(&g)?;
        let y = ImplosionTangent::from_coords(&face, &cy, b)?.sample(&g)?;
        let cfg = MetricConfig::new(b);
        println!(
            "b = {b}: |X|^2 closed {:.8} sampled {:.8}; omega closed {:+.8} sampled {:+.8}; g(IX, Y) {:+.8}",
            geo.metric(&cx, &cx)?,
            bielawski_pair(&x, &x, &cfg)?.value,
            geo.symplectic(&cx, &cy),
            baby_omega(&x, &y, &cfg)?,
            geo.symplectic_from_metric(&cx, &cy)?
        );
        let d = tx.diagnostics(&g)?;
        println!("        ode defect {:.1e}, linearized residual {:.1e}", d.ode_defect, d.linearized_residual);
    }
    Ok(())
}
