//! Front end for `bcshift-core`: run configuration, the subcommands, the
//! verification suites and JSON/CSV output.
//!
//! Complex numbers are written as `[re, im]` and multiplicities as
//! `[m_s, m_m, m_l]`.

pub mod commands;
pub mod config;
pub mod error;
pub mod output;
pub mod verify;

pub use commands::run;
pub use config::{Command, Format, Route, RunConfig, Suite, TransformRoute};
pub use error::CliError;
pub use output::Rendered;
