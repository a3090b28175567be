//! Checkers for the arithmetic hypotheses of the non-embeddability lemmas
//! and for the valuation criteria on radical extensions.
//!
//! Ramification and inertia data enter as certificate fields. The
//! [`cross`] submodule recomputes what it can from residue arithmetic.

pub mod cross;
mod obstruction;
mod radical;

pub use obstruction::{check_biquadratic_obstruction, check_cyclic_obstruction, BiquadraticObstructionCert, CyclicObstructionCert, Verdict};
pub use radical::{distinct_radical_fields, embedding_guarantee, radical_irreducible_by_valuation, AlgebraKind, Guarantee, RadicalDecision};

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CertError {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("residue size {0} is not a prime power")]
    NotPrimePower(u64),
    #[error("residue size {q} is not coprime to {p}")]
    NotCoprime { q: u64, p: u64 },
    #[error("exponent must be positive")]
    ZeroExponent,
    #[error("precondition violated: {0}")]
    Precondition(&'static str),
}

#[cfg(test)]
mod tests;
