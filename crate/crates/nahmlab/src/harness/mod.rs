//! Scenario-driven front end: JSON scenario files in, canonical JSON and CSV
//! reports out, plus the numbered acceptance suite.
//!
//! A scenario names a `kind` (`lie`, `nahm`, `gauge`, `metric`, `implode`,
//! `acceptance`) and kind-specific `params`. Unknown fields are rejected.
//! Exit codes: 0 all assertions pass, 1 an assertion or computation failed,
//! 2 the scenario did not parse (nothing is written), 3 numeric blow-up.

pub mod acceptance;
pub mod fixtures;
pub mod report;
pub mod run;
pub mod scenario;

pub use acceptance::{criteria, format_line, run_acceptance, CriterionOutcome};
pub use report::{export_report, path_csv, tangent_csv, Format, Report};
pub use run::{evaluate, exit_code, run_scenario, RunError};
pub use scenario::{Bound, Kind, Overrides, Params, Scenario, SCHEMA_VERSION};
