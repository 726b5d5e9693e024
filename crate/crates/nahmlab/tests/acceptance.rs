//! One pass/fail line per acceptance criterion; exits non-zero if any fails.

use nahmlab::harness::{format_line, run_acceptance};

fn main() {
    let filter = std::env::args().skip(1).find(|a| !a.starts_with('-'));
    let rows = run_acceptance(filter.as_deref());
    let mut total = 0.0;
    for (o, s) in &rows {
        println!("{}", format_line(o, *s));
        total += s;
    }
    let failed = rows.iter().filter(|(o, _)| !o.passed).count();
    println!("{}/{} criteria pass in {total:.1} s", rows.len() - failed, rows.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
