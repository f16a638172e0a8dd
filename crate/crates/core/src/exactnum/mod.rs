//! Exact arithmetic in ℚ and in cyclotomic fields ℚ(ζ_N).

mod cyclotomic;
mod field;
pub mod parse;
mod rational;

pub use cyclotomic::Cyclotomic;
pub use field::{cyclotomic_polynomial, gcd, lcm, totient, CycloField};
pub use rational::Rational;
