//! Text formats and command-line plumbing.
//!
//! * set expressions: `{ {}, omega }`, `3`, `R(B({}))`,
//!   `x0 where x0 = {x0}`;
//! * operator expressions: `(I - R).B`, `K[{omega}]`, `Kdiag`;
//! * systems of equations (`a = { b, {} }; point a;`) and graph files
//!   (`a -> b; label a = {omega};`);
//! * network files with `neurons:`, `synapses:`, `voltages:`, `params:` and
//!   `point:` sections.
//!
//! Every parse error carries a 1-based line and column.

pub mod cli;
mod dot;
mod expr;
mod lexer;
mod network;
mod system;

use std::fmt;

pub use dot::{graph_to_dot, network_to_dot, set_to_dot};
pub use expr::{
    builtins, eval_setexpr, eval_setexpr_with, parse_opexpr, parse_setexpr, Binding, Env, OpAst,
    SetExpr,
};
pub use network::{parse_network, NetworkSpec};
pub use system::{parse_graph_file, parse_system, GraphSpec, SystemSpec};

/// 1-based source position.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Pos {
    pub line: usize,
    pub col: usize,
}

impl fmt::Display for Pos {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.line, self.col)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("line {}, column {}: {message}", pos.line, pos.col)]
pub struct ParseError {
    pub pos: Pos,
    pub message: String,
}

impl ParseError {
    pub fn new(pos: Pos, message: String) -> Self {
        ParseError { pos, message }
    }
}

/// A text input that failed to parse or whose evaluation failed.
#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum SurfaceError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Eval(#[from] crate::Error),
}
