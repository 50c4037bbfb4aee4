//! Generic layer for finitely supported Lie algebra elements over a
//! countable generator set, with bracket evaluation from pluggable
//! structure-constant tables and property-test drivers.

mod bracket;
mod element;
mod label;
pub mod verify;

pub use bracket::{bracket, jacobi_defect, map_defect, BracketTable, FnMap, GeneratorMap};
pub use element::AlgebraElement;
pub use label::{AlgebraKind, GeneratorLabel, Modes, Symbol};

use thiserror::Error;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum LieError {
    #[error("element of {found:?} used with {expected:?}")]
    MixedAlgebras {
        expected: AlgebraKind,
        found: AlgebraKind,
    },
    #[error("map undefined on generator {0}")]
    UndefinedOnGenerator(String),
    #[error("label out of range: {0}")]
    LabelOutOfRange(String),
    #[error("malformed label {0}")]
    MalformedLabel(String),
    #[error("{0}")]
    Invalid(String),
}
