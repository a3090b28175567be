//! Finite fields, verified reduction maps from number fields, Frobenius
//! checks and the quadratic tame symbol.

mod finite;
mod map;
mod symbol;

pub use finite::{FFElem, FiniteField, SmallExtension};
pub use map::{ResidueMap, TowerResidueMap};
pub use symbol::tame_symbol;

use thiserror::Error;

use crate::exact::ExactError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ResidueError {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("modulus is not irreducible")]
    Reducible,
    #[error("supplied residue is not a root of the reduced minimal polynomial")]
    NotARoot,
    #[error("element has {0} in a denominator")]
    NotIntegral(u64),
    #[error("zero residue where a unit is required")]
    Zero,
    #[error("characteristic 2 is not supported")]
    EvenCharacteristic,
    #[error("inconsistent residue data: {0}")]
    Inconsistent(&'static str),
    #[error("unsupported: {0}")]
    Unsupported(&'static str),
    #[error(transparent)]
    Exact(#[from] ExactError),
}
