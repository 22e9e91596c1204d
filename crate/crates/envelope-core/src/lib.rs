//! Exact-arithmetic computer algebra for universal enveloping algebras.
//!
//! Everything here is computed over arbitrary-precision rationals; the only
//! floating-point path in the whole crate is the non-nilpotent branch of
//! [`findim::matrix_exp`]. The crate is `no_std` (with `alloc`); file formats,
//! expression parsing and the CLI live in the companion `envelope-cli` crate.
//!
//! Modules:
//! - [`lie`]: structure-constant Lie algebras, ideals, quotients, adapted bases
//! - [`pbw`]: the enveloping algebra on PBW monomials with its Hopf structure
//! - [`trunc`]: weight-graded truncations with exp/log/BCH
//! - [`findim`]: finite-dimensional unital algebras and matrix span closure
//! - [`tower`]: inverse systems of enveloping-algebra stages and threads
//! - [`abelian`]: the dual function Hopf algebra on exp-polynomial functions
//! - [`corpus`]: the bundled test algebras
//! - [`verify`]: the named invariant suites, reusable from tests and the CLI

#![no_std]
// index-based loops are the clearer idiom for the dense matrix kernels here
#![allow(clippy::needless_range_loop)]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod abelian;
pub mod corpus;
pub mod error;
pub mod findim;
pub mod lie;
pub mod linalg;
pub mod pbw;
pub mod scalar;
pub mod tower;
pub mod trunc;
pub mod verify;

pub use error::Error;
pub use scalar::Rat;
