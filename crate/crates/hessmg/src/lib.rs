//! Exact-arithmetic tools for Hessenberg subvarieties of the full flag variety
//! of GL_n: torus fixed points, one-dimensional orbit closures, moment graphs,
//! and polynomial-ideal cross-checks, all over the rationals.
//!
//! Every combinatorial criterion exposed here is paired with an independent
//! membership oracle built on exact linear algebra; the [`verify`] module runs
//! the full battery of cross-checks and is what the `hessmg verify` subcommand
//! drives.

pub mod cli;
pub mod flag;
pub mod ideal;
pub mod linalg;
pub mod perm;
pub mod poly;
pub mod torus;
pub mod verify;

pub use flag::{FlagMatrix, LinearOperator};
pub use linalg::{RMatrix, Rational};
pub use perm::{HessenbergFunction, Permutation, Transposition};
pub use torus::MomentGraph;
