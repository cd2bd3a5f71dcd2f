//! Finite non-well-founded sets, represented as minimized pointed graphs.
//!
//! A [`SetValue`] is the canonical picture of a set: every node reachable
//! from the point, no two nodes bisimilar, nodes numbered canonically. Two
//! values are equal as sets exactly when they are equal as Rust values, so
//! the quine atom Ω = {Ω} and the ordinal 2 are ordinary, hashable data.
//!
//! - [`kernel`]: graphs, bisimulation, canonical forms, set operations.
//! - [`encodings`]: naturals, pairs, exact rationals and histograms as sets.
//! - [`operators`]: the Russell operator and its relatives, composable
//!   operator expressions, and an axiom checker for selector-like operators.
//! - [`decoration`]: plain and labeled decorations of arbitrary graphs.
//! - [`neural`]: Hebbian threshold networks whose states decorate to sets.
//! - [`surface`]: the text formats, DOT export and the CLI commands.
//!
//! ```
//! use hyperset::kernel::make_set;
//! use hyperset::SetValue;
//!
//! let omega = SetValue::quine_atom();
//! assert_eq!(make_set([&omega]), omega);
//! assert_eq!(omega.to_string(), "x0 where x0 = {x0}");
//! ```

pub mod decoration;
pub mod encodings;
pub mod error;
pub mod kernel;
pub mod neural;
pub mod operators;
pub mod surface;

pub use error::{Error, Result};
pub use kernel::{NodeId, SetGraph, SetValue};
