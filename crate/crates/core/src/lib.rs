//! Exact tools for bad sequences of monomial ideals.
//!
//! A sequence of monomial ideals `I_0, I_1, …` is *bad* when no ideal
//! contains a later one. Every such sequence in a fixed polynomial ring is
//! finite, and when the degrees are held to `deg(I_i) ≤ l + f(i)` the longest
//! bad sequence has some finite length `M_d^f(l)`. This crate builds bad
//! sequences that certify lower bounds on that length, verifies them, finds
//! the exact value by exhaustive search on tiny instances, and translates bad
//! sequences into colorings for the adjacent Ramsey theorem.
//!
//! Modules:
//! - [`ordinals`]: Cantor normal forms below ω^ω and fundamental sequences.
//! - [`hierarchy`]: the fast-growing hierarchy with capped evaluation,
//!   parameter functions, and closed-form upper bounds.
//! - [`ideals`]: monomials and monomial ideals as exponent vectors.
//! - [`constructions`]: the bad-sequence families and their verifiers.
//! - [`ramsey`]: colorings, monotone adjacent triples, tiny Ramsey numbers.
//! - [`search`]: exhaustive computation of `M_d^f(l)`.
//! - [`cli`]: the command-line driver behind the `maclagan` binary.

pub mod cli;
pub mod constructions;
pub mod error;
pub mod hierarchy;
pub mod ideals;
pub mod ordinals;
pub mod ramsey;
pub mod search;

pub use error::{Error, Result};
