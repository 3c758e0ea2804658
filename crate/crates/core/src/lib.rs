//! Exact arithmetic for Tribonacci and Tribonacci-Lucas quaternions.
//!
//! The crate is organised bottom-up:
//!
//! - [`seqcore`]: the integer sequences `T`, `K` and their auxiliaries over all indices.
//! - [`quat`]: quaternions with big-integer components and the sequence quaternions.
//! - [`binet`]: high-precision closed forms over the roots of `x^3 - x^2 - x - 1`.
//! - [`series`]: rational generating functions and exact coefficient extraction.
//! - [`matrices`]: companion-matrix powers and the 2x2 complex representation.
//! - [`audit`]: a catalog of identities with an exhaustive checker and JSON reports.
//! - [`cli`]: the `tribq` command-line front end.

pub mod audit;
pub mod binet;
pub mod cli;
mod error;
pub mod gaussian;
pub mod matrices;
pub mod quat;
pub mod seqcore;
pub mod series;

pub use error::{Error, Result};
pub use num_bigint::BigInt;
pub use quat::{QuatSeqKind, Quaternion, RationalQuaternion};
pub use seqcore::SequenceKind;
