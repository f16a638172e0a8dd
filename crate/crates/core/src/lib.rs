//! Exact symbolic machinery for pointed Hopf algebras over finite abelian
//! groups: cyclotomic scalars, q-combinatorics, Yetter-Drinfeld data of
//! Cartan type A2/B2, PBW rewriting, coproducts, and lifting constructions.
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod abelian;
pub mod error;
pub mod exactnum;
pub mod hopf;
pub mod liftings;
pub mod qcalc;
pub mod rewrite;

#[cfg(test)]
mod testdata;

pub use error::{Error, Result};
pub use exactnum::{Cyclotomic, Rational};
