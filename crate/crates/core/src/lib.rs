//! Combinatorics of Eulerian-type polynomials.
//!
//! The crate computes ascent statistics on s-inversion sequences, descent
//! statistics on signed permutations of multisets, linear extensions of
//! signed labeled plane forests and their type B partitions, and checks the
//! generating-function identities tying them together. Everything is exact:
//! polynomials carry arbitrary-precision integer coefficients and series are
//! compared coefficient by coefficient.
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod dist;
pub mod error;
pub mod families;
pub mod forest;
pub mod genfunc;
pub mod inversion;
pub mod ppartition;
pub mod signedperm;

pub use dist::Distribution;
pub use error::{Error, Result};
pub use families::{family_polynomial, Family};
pub use genfunc::Polynomial;
