//! Symbol algebras `(a, b / K, ζ)`, their automorphisms, and the norm
//! equations that control when a field automorphism extends.
//!
//! The [`QAlgebra`] trait is the common interface the factor-set and
//! twisted-ring layers are written against.

mod aut;
mod example;
mod norm;
mod qalgebra;
mod scalar_ext;
mod symbol;

pub use example::{build_quaternion_example, QuaternionExample};
pub use aut::{extend_aut_special, AlgAutomorphism, Side};
pub use norm::{norm_equation_search, norm_in_ki, norm_in_kj, SearchBasis, SearchConfig};
pub use qalgebra::{field_aut_linear, rel_aut_linear, LinearAut, QAlgebra};
pub use scalar_ext::{ScalarExt, SxElem};
pub use symbol::{AlgElem, SymbolAlgebra};

use thiserror::Error;

use crate::numfield::NumFieldError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("invalid symbol algebra: {0}")]
    BadSymbol(&'static str),
    #[error("coefficient array has the wrong shape")]
    Shape,
    #[error("element is zero or a zero divisor")]
    NotInvertible,
    #[error("automorphism relation fails: {0}")]
    Relation(&'static str),
    #[error("element does not lie in the required subfield {0}")]
    NotInSubfield(&'static str),
    #[error("norm condition fails")]
    NormMismatch,
    #[error("base automorphism must fix {0}")]
    NotFixed(&'static str),
    #[error(transparent)]
    Field(#[from] NumFieldError),
}
