//! Operator-expression engine and the concrete Fock-type module
//! actions of the corner algebras: the abelian oscillator
//! representation, the su(2) induced modules in their several
//! polarizations, the free-field realization of affine sl(2), and the
//! quantized constraint actions.

pub mod constraint;
pub mod op;
pub mod rep;
pub mod wakimoto;

pub use op::{naive_apply, op_apply, Bound, EvalConfig, OperatorExpr, SumFamily};
pub use rep::{
    element_op, number_op_apply, rep_commutator_defect, rep_op, Polarization, RepAlgebra,
    RepContext,
};

use thiserror::Error;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum FockError {
    #[error("divergent action of sum family `{family}`: {reason}")]
    DivergentAction { family: String, reason: String },
    #[error("unknown label: {0}")]
    UnknownLabel(String),
    #[error("bad representation context: {0}")]
    BadContext(String),
    #[error(transparent)]
    Lie(#[from] corner_lie::LieError),
}
