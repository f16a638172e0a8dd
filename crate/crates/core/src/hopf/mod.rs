//! Coproduct, counit and antipode on bosonized presentations, Hopf-ideal
//! checks for lifting quotients, and conjugation of ideals by algebra maps
//! on commutative Hopf subalgebras.

mod coalgebra;
mod conjugation;
mod ideal;
mod tensor;

#[cfg(test)]
mod tests;

pub use coalgebra::{apply_left, apply_right, Coalgebra};
pub use conjugation::{conjugate_by, convolution, left_translate, AlgebraMap, KTerm, Subalgebra};
pub use ideal::{
    adjudicate_v, b2_omega, b2_upsilon, hopf_ideal_check, hopf_ideal_check_with, vcoefficient_for, GeneratorCheck,
    HopfIdealReport, IdealCheck, VAdjudication,
};
pub use tensor::{TensorElement, TensorSquare};
