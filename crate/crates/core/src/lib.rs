//! Rainbow domination on torus grids `C_m □ C_n`.
//!
//! The crate is `no_std` (it only needs `alloc`) and splits into:
//!
//! - [`grid`]: torus geometry, color sets and assignments,
//! - [`verify`]: rainbow-domination checks, column profiles and the
//!   column-sum inequality,
//! - [`patterns`]: the periodic weight-`mn/3` patterns and the row/column
//!   union constructions built on them,
//! - [`bounds`]: closed-form lower and upper bounds plus a registry of known
//!   exact values,
//! - [`oracle`]: exact values by exhaustive enumeration and by a cyclic
//!   transfer dynamic program.
//!
//! File formats, timing, parallel execution and the command line live in the
//! companion `rainbow-torus-cli` crate.

#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod bounds;
mod error;
pub mod grid;
pub mod oracle;
pub mod patterns;
pub mod verify;

pub use error::{Error, Result};
pub use grid::{neighbors, Assignment, ColorSet, Dims};
pub use verify::{lemma33_check, verify, ColumnProfile, VerificationReport, Violation};
