//! Command line front end: the setting text format, and the `smq` commands
//! that drive the library queries.

pub mod commands;
pub mod document;

pub use commands::{export_dot, run, Cli, CliError, Output};
pub use document::{parse, ParseError, SettingDocument};
