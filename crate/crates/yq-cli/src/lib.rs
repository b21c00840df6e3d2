//! Command-line front end: run configuration, verification suites, reports
//! and the `eval` calculator.

pub mod calc;
pub mod config;
pub mod report;
pub mod suites;

pub use calc::{CalcError, Calculator};
pub use config::{ConfigError, Format, RunConfig, SuiteName};
pub use report::{run, ExitCode, Report};
pub use suites::{run_suite, CheckRecord, SuiteError, SuiteOutput};
