//! Number fields `Q[x]/(f)`, their automorphisms and norms, and relative
//! extensions kept as free modules over a base field.

mod aut;
mod builders;
mod field;
mod relative;

pub use aut::{cyclic_group, generated_group, rational_norm, relative_norm, NFAutomorphism};
pub use builders::{
    build_biquadratic, build_cubic_tower, build_cyclic_cubic, build_cyclic_quartic, galois_closure, quadratic,
    Biquadratic, CubicTower, CyclicCubic, CyclicQuartic,
};
pub use field::{same_field, NFElem, NumberField, SubfieldElement};
pub use relative::{
    cubic_discriminant, rel_discriminant_by_norm, rel_norm_to_base, RelAutomorphism, RelElem, RelativeExtension,
};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NumFieldError {
    #[error("invalid minimal polynomial: {0}")]
    BadMinPoly(String),
    #[error("operands belong to different fields")]
    MixedFields,
    #[error("inverse of zero")]
    ZeroInverse,
    #[error("element is a zero divisor")]
    ZeroDivisor,
    #[error("image is not a root of the minimal polynomial")]
    NotARoot,
    #[error("norm is not fixed by the given automorphisms")]
    NotFixed,
    #[error("tagged radical `{0}` does not square to its value")]
    TagMismatch(String),
}
