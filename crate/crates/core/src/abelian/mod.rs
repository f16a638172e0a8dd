//! Finite abelian groups, characters, Yetter-Drinfeld data of rank two and
//! the admissibility predicates for lifting parameters.

mod datum;
mod group;

pub use datum::{admissible, cartan_type, datum_search, CartanType, LiftingSpec, YDDatum};
pub use group::{AbelianGroup, Character, GroupElem};
