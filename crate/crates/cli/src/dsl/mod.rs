//! A small statement language over the library: rings, ideals, bindings and printed invariants.

pub mod ast;
pub mod interp;
pub mod lexer;
pub mod parser;
pub mod printer;

use std::fmt;

pub use interp::{run_script, Interpreter, Value};
pub use parser::parse_script;
pub use printer::{print_expr, print_script};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScriptError {
    pub message: String,
    pub line: usize,
    pub col: usize,
    /// Set when the script parsed but a computation failed.
    pub runtime: bool,
}

impl ScriptError {
    pub fn new(message: impl Into<String>, line: usize, col: usize) -> ScriptError {
        ScriptError { message: message.into(), line, col, runtime: false }
    }

    pub fn runtime(message: impl Into<String>, line: usize, col: usize) -> ScriptError {
        ScriptError { runtime: true, ..ScriptError::new(message, line, col) }
    }
}

impl fmt::Display for ScriptError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}, column {}: {}", self.line, self.col, self.message)
    }
}

impl std::error::Error for ScriptError {}
