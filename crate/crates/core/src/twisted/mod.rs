//! Iterated twisted polynomial rings `A(x₁,…,x_r; σ̃; u)` with
//! `x_i a = σ̃_i(a) x_i` and `x_i x_j = u_ij x_j x_i`.
//!
//! Elements are kept in the normal form `Σ a_e x₁^{e₁}⋯x_r^{e_r}`. The
//! Laurent series ring obeys the same polynomial identities, so every check
//! here applies to it verbatim; its index and exponent are reported by
//! [`numerics_report`].

mod center;
mod extend;
mod numerics;
mod ring;

pub use center::{central_params, free_rank, CentralParams, FreeRank};
pub use extend::{adjoin_conjugation, adjoin_generator, linearly_disjoint_quadratic, scalar_extension};
pub use numerics::{numerics_report, ExpRoute, Numerics, NumericsInput};
pub use ring::{TwistedElem, TwistedRing};

use thiserror::Error;

use crate::factorset::FactorSetError;
use crate::report::Report;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TwistedError {
    #[error(transparent)]
    FactorSet(#[from] FactorSetError),
    #[error("t_i fails centrality: {}", .0.failed_ids().join(", "))]
    NotCentral(Report),
    #[error("insufficient local data: {0}")]
    Numerics(&'static str),
    #[error("√{0} is not linearly disjoint from the coefficient field")]
    NotDisjoint(i64),
}
