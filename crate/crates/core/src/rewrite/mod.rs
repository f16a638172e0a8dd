//! Noncommutative rewriting: presentations by ordered generators and
//! straightening rules, normal forms, confluence and bases.

mod algebra;
mod basis;
mod builders;
mod confluence;
mod element;
mod presentation;

pub use algebra::Algebra;
pub use basis::{enumerate_basis, Basis};
pub use builders::{
    a2_free, expansion_algebra, b2_uplus, biproduct, corrupted_expansion, lifting_quotient, lifting_relations,
    s_variant_algebra, with_relations, VCoefficient,
};
pub use confluence::{confluence_check, ConfluenceReport, OverlapFailure, OverlapKind};
pub use element::{Element, Monomial, Word};
pub use presentation::{CoproductRule, Generator, PowerRule, Presentation, Symbol, SwapRule};

#[cfg(test)]
mod tests;
