//! Command-line front end: subcommands, the script language and the reproduction checks.

pub mod checks;
pub mod commands;
pub mod dsl;
pub mod report;

pub use commands::run_command;
