use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use nahmlab::harness::{exit_code, format_line, run_acceptance, run_scenario, Overrides};

#[derive(Parser)]
#[command(name = "nahmlab", about = "Scenario runner for Nahm data, Bielawski metrics and the Baby Nahm implosion")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run one scenario file and write its report into a directory.
    Run {
        scenario: PathBuf,
        #[arg(long)]
        out: PathBuf,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long)]
        grid_nodes: Option<usize>,
        #[arg(long)]
        tmax: Option<f64>,
    },
    /// Run the acceptance criteria, one line each.
    Acceptance {
        /// Substring of a criterion name, or its number.
        #[arg(long)]
        filter: Option<String>,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match cli.command {
        Command::Run { scenario, out, seed, grid_nodes, tmax } => {
            let outcome = run_scenario(&scenario, &out, &Overrides { seed, grid_nodes, tmax });
            match &outcome {
                Ok(r) => {
                    for (label, ok) in &r.status {
                        println!("{} {label}", if *ok { "PASS" } else { "FAIL" });
                    }
                    for a in &r.artifacts {
                        println!("wrote {}", out.join(a).display());
                    }
                }
                Err(e) => eprintln!("{e}"),
            }
            ExitCode::from(exit_code(&outcome) as u8)
        }
        Command::Acceptance { filter } => {
            let rows = run_acceptance(filter.as_deref());
            if rows.is_empty() {
                eprintln!("no criterion matches {filter:?}");
                return ExitCode::from(2);
            }
            let mut total = 0.0;
            for (o, s) in &rows {
                println!("{}", format_line(o, *s));
                total += s;
            }
            let passed = rows.iter().filter(|(o, _)| o.passed).count();
            println!("{passed}/{} criteria pass in {total:.1} s", rows.len());
            ExitCode::from(if passed == rows.len() { 0 } else { 1 })
        }
    }
}
