use std::sync::Arc;

use super::schema::{BiquadCoords, FactorSetBundle, InvariantTable, QuatCoords, RelCoords, SideSpec};
use super::BundleError;
use crate::algebra::{extend_aut_special, AlgAutomorphism, AlgElem, AlgebraError, Side, SymbolAlgebra};
use crate::brauer::InvariantVector;
use crate::exact::{parse_rational, rat, Rational};
use crate::factorset::AbelianFactorSet;
use crate::numfield::{build_biquadratic, Biquadratic, NFAutomorphism, NFElem, RelElem, RelativeExtension};

fn q(s: &str) -> Result<Rational, BundleError> {
    parse_rational(s).ok_or_else(|| BundleError::Rational(s.to_string()))
}

pub fn biquad_elem(bq: &Biquadratic, c: &BiquadCoords) -> Result<NFElem, BundleError> {
    let s3 = &bq.sqrt3.value;
    let s7 = &bq.sqrtm7.value;
    let basis = [NFElem::one(&bq.field), s3.clone(), s7.clone(), s3 * s7];
    let mut x = NFElem::zero(&bq.field);
    for (b, s) in basis.iter().zip(c) {
        x = &x + &b.scale(&q(s)?);
    }
    Ok(x)
}

pub fn quat_elem(alg: &Arc<SymbolAlgebra>, bq: &Biquadratic, c: &QuatCoords) -> Result<AlgElem, BundleError> {
    let mut x = AlgElem::zero(alg);
    for (key, coords) in c {
        let (s, t) = match key.as_str() {
            "1" => (0, 0),
            "i" => (1, 0),
            "j" => (0, 1),
            "k" => (1, 1),
            other => return Err(BundleError::Invalid(format!("unknown quaternion key {other:?}"))),
        };
        x = &x + &AlgElem::monomial(alg, biquad_elem(bq, coords)?, s, t);
    }
    Ok(x)
}

pub fn rel_elem(ext: &Arc<RelativeExtension>, c: &RelCoords) -> RelElem {
    let k = ext.base();
    RelElem::new(ext, c.iter().map(|v| NFElem::from_ints(k, v)).collect())
}

/// The automorphism with `√3 ↦ s₀√3`, `√−7 ↦ s₁√−7`.
pub fn base_aut(bq: &Biquadratic, signs: [i8; 2]) -> Result<NFAutomorphism, BundleError> {
    if signs.iter().any(|s| s.abs() != 1) {
        return Err(BundleError::Invalid("automorphism signs must be ±1".into()));
    }
    let img = &bq.sqrt3.value.scale(&Rational::from_integer(signs[0].into()))
        + &bq.sqrtm7.value.scale(&Rational::from_integer(signs[1].into()));
    NFAutomorphism::new(&bq.field, img).map_err(|e| BundleError::Invalid(e.to_string()))
}

/// A factor-set bundle in algebra form. Extensions `σ̃` are built lazily so
/// that a failing norm condition is reported rather than raised.
#[derive(Clone, Debug)]
pub struct QuaternionData {
    pub field: Biquadratic,
    pub alg: Arc<SymbolAlgebra>,
    pub base: Vec<NFAutomorphism>,
    pub lambda: Vec<(AlgElem, Side)>,
    pub n: Vec<u32>,
    pub alpha: Vec<AlgElem>,
    pub u: AlgElem,
}

impl QuaternionData {
    pub fn sigma_tilde(&self, k: usize) -> Result<AlgAutomorphism, AlgebraError> {
        let (l, side) = &self.lambda[k];
        extend_aut_special(&self.alg, &self.base[k], l, *side)
    }

    pub fn factor_set(&self) -> Result<AbelianFactorSet<AlgElem>, AlgebraError> {
        let s1 = self.sigma_tilde(0)?.to_linear();
        let s2 = self.sigma_tilde(1)?.to_linear();
        AbelianFactorSet::r2(&self.alg, [self.n[0], self.n[1]], [s1, s2], [self.alpha[0].clone(), self.alpha[1].clone()], self.u.clone())
            .map_err(|_| AlgebraError::NotInvertible)
    }
}

pub fn build_quaternion_bundle(b: &FactorSetBundle) -> Result<QuaternionData, BundleError> {
    if b.radicands != [3, -7] {
        return Err(BundleError::Invalid("only Q(√3, √−7) is supported".into()));
    }
    if b.n.len() != 2 || b.sigma_tilde.len() != 2 || b.alpha.len() != 2 {
        return Err(BundleError::Invalid("exactly two generators are supported".into()));
    }
    let field = build_biquadratic();
    let alg = SymbolAlgebra::quaternion(&field.field, biquad_elem(&field, &b.a)?, biquad_elem(&field, &b.b)?)
        .map_err(|e| BundleError::Invalid(e.to_string()))?;
    let base = b.sigma_tilde.iter().map(|s| base_aut(&field, s.base)).collect::<Result<Vec<_>, _>>()?;
    let lambda = b
        .sigma_tilde
        .iter()
        .map(|s| {
            let side = match s.side {
                SideSpec::Kj => Side::KJ,
                SideSpec::Ki => Side::KI,
            };
            Ok((quat_elem(&alg, &field, &s.lambda)?, side))
        })
        .collect::<Result<Vec<_>, BundleError>>()?;
    let alpha = b.alpha.iter().map(|a| quat_elem(&alg, &field, a)).collect::<Result<Vec<_>, _>>()?;
    let u = quat_elem(&alg, &field, &b.u)?;
    Ok(QuaternionData { field, alg, base, lambda, n: b.n.clone(), alpha, u })
}

pub fn invariant_vector(t: &InvariantTable) -> Result<InvariantVector, BundleError> {
    let mut iv = InvariantVector::new();
    for p in &t.places {
        p.validate().map_err(|e| BundleError::Invalid(e.to_string()))?;
        let (n, d) = t.entries.get(&p.label).copied().unwrap_or((0, 1));
        if d == 0 {
            return Err(BundleError::Invalid(format!("zero denominator at {}", p.label)));
        }
        iv.insert(p.clone(), rat(n, d)).map_err(|e| BundleError::Invalid(e.to_string()))?;
    }
    if let Some(l) = t.entries.keys().find(|l| !t.places.iter().any(|p| &p.label == *l)) {
        return Err(BundleError::Invalid(format!("entry for unlisted place {l}")));
    }
    Ok(iv)
}
