//! Lifted Hopf algebras of type B2 and A2: construction with Hopf-ideal
//! checks, relation reports, dimensions, conjugation witnesses between
//! liftings of one datum, and the non-isomorphism probe for the order-49
//! cyclic example.

mod probe;
mod report;
mod witness;


pub use probe::{a2_isomorphism_probe, is_z49_datum};
pub use report::{build_lifting, dimension, expected_dimension, verify_relations, Check, Lifting, VerificationReport};
pub use witness::{quasi_iso_witness, ChainStep, QuasiIso, QuasiIsoWitness, WitnessBuilder, WitnessStep};
