//! Runner for the named verification suites: configuration, execution and reports.

pub mod config;
pub mod error;
pub mod render;
pub mod suites;

pub use config::{ConnectionType, PartialConfig, RunConfig, Suite};
pub use error::{CliError, Result};
pub use render::report_render;
pub use suites::{run_suite, Report, SCHEMA};
