//! Factor sets `(ω, f)`, their cyclic and abelian parameterizations, the
//! relation verifiers, cohomology, and generalized crossed products built
//! from structure constants.
//!
//! Everything is generic over [`QAlgebra`](crate::algebra::QAlgebra), so a
//! symbol algebra, a number field and a relative extension all go through
//! the same verifiers. Verifiers return a [`Report`] rather than a
//! boolean so that single-relation failures can be located.

mod abelian;
mod crossed;
mod example;
mod general;
mod group;

pub use abelian::{twisted_norm, verify_abelian_general, verify_abelian_r2, verify_cyclic, AbelianFactorSet, CyclicFactorSet};
pub use crossed::GenCrossedProduct;
pub use example::{cubic_crossed_product_data, extended_factor_set, quaternion_factor_set, trivial_biquadratic_data, CrossedProductData};
pub use general::{
    are_cohomologous, cyclic_normal_form, extract_cocycle, first_disagreement, normalization_witness, twist, verify_factor_set,
    CenterAction, FactorSet,
};
pub use group::GroupTable;

use thiserror::Error;

use crate::report::Report;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FactorSetError {
    #[error("parameter arrays have inconsistent sizes")]
    Shape,
    #[error("a parameter that must be a unit is not invertible")]
    NotUnit,
    #[error("{0}")]
    Mismatch(&'static str),
    #[error("factor set fails {} relation(s)", .0.failed_ids().len())]
    Verification(Report),
}

#[cfg(test)]
mod tests;
