//! Places, local-invariant vectors and the global index/exponent formulas.
//!
//! Invariants live in Q/Z and are stored as reduced fractions in `[0, 1)`.

mod formulas;
mod invariants;

pub use formulas::{
    exp_inertially_split, global_index_bounds, lcm_exponent_transfer, local_index_bounds, IndexBounds,
};
pub use invariants::{
    deuring_criterion, exponent, extend_scalars, sum_zero, ExtensionLocalData, InvariantVector, Place, PlaceKind,
    TopPlace,
};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BrauerError {
    #[error("residue size {0} is not a prime power")]
    NotPrimePower(u64),
    #[error("invariant at archimedean place `{0}` is not allowed")]
    Archimedean(String),
    #[error("local invariants do not sum to zero")]
    SumNonzero,
    #[error("unknown place `{0}`")]
    MissingPlace(String),
    #[error("permutation does not preserve the data of place `{0}`")]
    KindMismatch(String),
    #[error("arguments must be positive")]
    NonPositive,
}
