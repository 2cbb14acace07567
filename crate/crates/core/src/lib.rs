//! Positive braid monoid at desk scale.
//!
//! Words over the generators `x_1 .. x_{n-1}` are identified under far
//! commutation and the braid relation. On top of that rewriting core the
//! crate provides Garside divisor enumeration, simple braids and their
//! conjugacy classes, the associated counting sequences, and the simple
//! graph on simple braids with a certifying planarity test.

pub mod cli;
pub mod counting;
pub mod error;
pub mod garside;
pub mod graph;
pub mod simple;
pub mod verify;
pub mod word;

pub use error::{Error, Result};
pub use word::{BraidWord, CanonicalBraid, Canonicalizer, Permutation};
