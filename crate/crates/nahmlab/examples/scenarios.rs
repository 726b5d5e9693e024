//! Run the shipped scenario files and print their reports.

use std::path::Path;

use nahmlab::harness::{exit_code, run_scenario, Overrides};

fn main() {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("scenarios");
    let out = std::env::temp_dir().join("nahmlab-scenarios");
    for name in ["model_residual", "negative_norm", "stability_su3", "implode_su3", "blow_up"] {
        let r = run_scenario(&dir.join(format!("{name}.json")), &out, &Overrides::default());
        println!("{name}: exit {}", exit_code(&r));
        match r {
            Ok(rep) => {
                for (k, v) in &rep.results {
                    println!("  {k} = {v:.6e}");
                }
            }
            Err(e) => println!("  {e}"),
        }
    }
    println!("reports in {}", out.display());
}
