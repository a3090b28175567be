use std::sync::Arc;

use super::aut::{extend_aut_special, AlgAutomorphism, Side};
use super::symbol::{AlgElem, SymbolAlgebra};
use crate::exact::{int, rat};
use crate::numfield::{build_biquadratic, Biquadratic, NFAutomorphism, NFElem};

/// The quaternion algebra `D = (3+√3, (−7+√−7)/2 / Q(√3,√−7))` together
/// with the extensions `σ̃₁, σ̃₂` and the factor-set parameters.
#[derive(Clone, Debug)]
pub struct QuaternionExample {
    pub field: Biquadratic,
    pub alg: Arc<SymbolAlgebra>,
    pub sqrt3: NFElem,
    pub sqrtm7: NFElem,
    pub sigma1: NFAutomorphism,
    pub sigma2: NFAutomorphism,
    /// `1 + √3`
    pub pi1: NFElem,
    /// `(1 + √−7)/2`
    pub pi2: NFElem,
    /// `σ₁(π₁)(−1 + i)`
    pub lambda0: AlgElem,
    /// `π₂ + j`
    pub mu0: AlgElem,
    /// `λ₀/π₂ ∈ K(i)`
    pub lambda: AlgElem,
    /// `μ₀/π₁ ∈ K(j)`
    pub mu: AlgElem,
    /// `i ↦ μi`, `j ↦ j`
    pub sigma1_tilde: AlgAutomorphism,
    /// `i ↦ i`, `j ↦ λj`
    pub sigma2_tilde: AlgAutomorphism,
    /// `√−7 + j`
    pub alpha1: AlgElem,
    /// `−6 + (3 − √3)i`
    pub alpha2: AlgElem,
    /// `¼(1 + 2√3 − √−7 + (1 + √−7)i + 2j − 2k)`
    pub u: AlgElem,
}

pub fn build_quaternion_example() -> QuaternionExample {
    let bq = build_biquadratic();
    let k = bq.field.clone();
    let s3 = bq.sqrt3.value.clone();
    let s7 = bq.sqrtm7.value.clone();
    let one = NFElem::one(&k);
    let c = |q: i64| NFElem::from_rational(&k, int(q));
    let a = &c(3) + &s3;
    let b = (&c(-7) + &s7).scale(&rat(1, 2));
    let alg = SymbolAlgebra::quaternion(&k, a, b).expect("nonzero parameters");
    let base = |x: NFElem| AlgElem::from_base(&alg, x);
    let i = AlgElem::i(&alg);
    let j = AlgElem::j(&alg);
    let kk = AlgElem::k(&alg);

    let pi1 = &one + &s3;
    let pi2 = (&one + &s7).scale(&rat(1, 2));
    let lambda0 = (&base(-&one) + &i).scale(&bq.sigma1.apply(&pi1));
    let mu0 = &base(pi2.clone()) + &j;
    let lambda = lambda0.scale(&pi2.inv().expect("π₂ ≠ 0"));
    let mu = mu0.scale(&pi1.inv().expect("π₁ ≠ 0"));
    let sigma1_tilde = extend_aut_special(&alg, &bq.sigma1, &mu, Side::KJ).expect("σ̃₁ is an automorphism");
    let sigma2_tilde = extend_aut_special(&alg, &bq.sigma2, &lambda, Side::KI).expect("σ̃₂ is an automorphism");

    let alpha1 = &base(s7.clone()) + &j;
    let alpha2 = &base(c(-6)) + &i.scale(&(&c(3) - &s3));
    let u = {
        let c0 = &(&one + &s3.scale(&int(2))) - &s7;
        let c1 = &one + &s7;
        let sum = &(&(&base(c0) + &i.scale(&c1)) + &j.scale(&c(2))) - &kk.scale(&c(2));
        sum.scale(&NFElem::from_rational(&k, rat(1, 4)))
    };
    QuaternionExample {
        sqrt3: s3,
        sqrtm7: s7,
        sigma1: bq.sigma1.clone(),
        sigma2: bq.sigma2.clone(),
        field: bq,
        alg,
        pi1,
        pi2,
        lambda0,
        mu0,
        lambda,
        mu,
        sigma1_tilde,
        sigma2_tilde,
        alpha1,
        alpha2,
        u,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parameters_are_as_printed() {
        let ex = build_quaternion_example();
        let k = ex.alg.field().clone();
        assert_eq!(ex.alg.a(), &(&NFElem::from_ints(&k, &[3]) + &ex.sqrt3));
        assert_eq!(ex.alg.a(), &(&ex.sqrt3 * &ex.pi1));
        // α₁ = μ₀j/π₂ and α₂ = √3λ₀i
        let alpha1 = (&ex.mu0 * &AlgElem::j(&ex.alg)).scale(&ex.pi2.inv().unwrap());
        assert_eq!(alpha1, ex.alpha1);
        let alpha2 = (&ex.lambda0 * &AlgElem::i(&ex.alg)).scale(&ex.sqrt3);
        assert_eq!(alpha2, ex.alpha2);
        assert_eq!(ex.sigma1.apply(&ex.sqrt3), -&ex.sqrt3);
        assert_eq!(ex.sigma1.apply(&ex.sqrtm7), ex.sqrtm7);
    }
}
