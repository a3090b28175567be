use serde::{Deserialize, Serialize};

use super::CertError;
use crate::exact::is_prime;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum RadicalDecision {
    /// `x^{p^m} − a` is irreducible and every root generates a totally
    /// ramified extension of this degree.
    IrreducibleTotallyRamified { degree: u64 },
    /// `k(α) ∩ k(β) = k`.
    Distinct,
    CriterionNotApplicable,
}

/// Valuation criterion for `x^{p^m} − a`. Only the positive direction is
/// implemented: `p | v(a)` never yields a verdict on reducibility.
pub fn radical_irreducible_by_valuation(p: u64, m: u32, va: i64) -> Result<RadicalDecision, CertError> {
    if !is_prime(p) {
        return Err(CertError::NotPrime(p));
    }
    if va.rem_euclid(p as i64) == 0 {
        return Ok(RadicalDecision::CriterionNotApplicable);
    }
    let degree = p.checked_pow(m).ok_or(CertError::Precondition("p^m overflows"))?;
    Ok(RadicalDecision::IrreducibleTotallyRamified { degree })
}

/// `k(α) ∩ k(β) = k` for roots of `x^p − a`, `x^p − b`, given
/// `p ∤ v(a)` and `p | v(b)`. Needs `μ_p ⊂ k` and residue characteristic
/// different from `p`.
pub fn distinct_radical_fields(p: u64, va: i64, vb: i64, mu_p_in_base: bool, residue_char: u64) -> Result<RadicalDecision, CertError> {
    if !is_prime(p) {
        return Err(CertError::NotPrime(p));
    }
    if !mu_p_in_base {
        return Err(CertError::Precondition("μ_p is not contained in the base field"));
    }
    if residue_char == p {
        return Err(CertError::Precondition("residue characteristic equals p"));
    }
    let p = p as i64;
    if va.rem_euclid(p) != 0 && vb.rem_euclid(p) == 0 {
        Ok(RadicalDecision::Distinct)
    } else {
        Ok(RadicalDecision::CriterionNotApplicable)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum AlgebraKind {
    Symbol,
    PAlgebra,
    Other,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Guarantee {
    CrossedProductGuaranteed,
    NoGuarantee,
}

/// Whether the embedding theorem applies. `NoGuarantee` is not a claim
/// that the algebra is a noncrossed product.
pub fn embedding_guarantee(m0_roots_present: bool, cyclic: bool, kind: AlgebraKind) -> Guarantee {
    let applies = cyclic
        && match kind {
            AlgebraKind::Symbol => m0_roots_present,
            AlgebraKind::PAlgebra => true,
            AlgebraKind::Other => false,
        };
    if applies {
        Guarantee::CrossedProductGuaranteed
    } else {
        Guarantee::NoGuarantee
    }
}
