use num_bigint::BigInt;
use num_traits::Signed;

use super::ring::TwistedRing;
use super::TwistedError;
use crate::algebra::{LinearAut, QAlgebra, ScalarExt};
use crate::factorset::AbelianFactorSet;

fn is_square(n: &BigInt) -> bool {
    !n.is_negative() && {
        let s = n.sqrt();
        &s * &s == *n
    }
}

/// `Q(√d)` is linearly disjoint from a multiquadratic `K = Q(√r₁, …, √r_m)`
/// iff no product `d·∏_{s∈S} r_s` is a rational square.
pub fn linearly_disjoint_quadratic(d: i64, radicands: &[i64]) -> bool {
    (0u32..1 << radicands.len()).all(|mask| {
        let prod = radicands
            .iter()
            .enumerate()
            .filter(|(k, _)| mask >> k & 1 == 1)
            .fold(BigInt::from(d), |acc, (_, &r)| acc * r);
        !is_square(&prod)
    })
}

/// `(A ⊗ Q(√d))(x; σ̃ ⊗ id; u ⊗ 1)`; `radicands` describe `K` as in
/// [`linearly_disjoint_quadratic`].
pub fn scalar_extension<A: QAlgebra + Clone>(
    ring: &TwistedRing<A>,
    d: i64,
    radicands: &[i64],
) -> Result<TwistedRing<ScalarExt<A>>, TwistedError> {
    if !linearly_disjoint_quadratic(d, radicands) {
        return Err(TwistedError::NotDisjoint(d));
    }
    let e = ScalarExt::new(ring.algebra().clone(), d);
    let fs = ring.factor_set();
    let lifted = AbelianFactorSet {
        n: fs.n.clone(),
        sigma: fs.sigma.iter().map(|s| e.lift(s)).collect(),
        u: fs.u.iter().map(|row| row.iter().map(|x| e.embed(x)).collect()).collect(),
        alpha: fs.alpha.iter().map(|x| e.embed(x)).collect(),
    };
    Ok(TwistedRing::new(e, lifted)?)
}

/// Appends `x_{r+1}` acting by `sigma` of order `n`, with `u_{r+1,i} = 1`
/// and `α_{r+1} = alpha`.
pub fn adjoin_generator<A: QAlgebra + Clone>(
    ring: &TwistedRing<A>,
    sigma: LinearAut,
    n: u32,
    alpha: A::Elem,
) -> Result<TwistedRing<A>, TwistedError> {
    let alg = ring.algebra();
    let mut fs = ring.factor_set().clone();
    let one = alg.one();
    for row in fs.u.iter_mut() {
        row.push(one.clone());
    }
    fs.u.push(vec![one; fs.n.len() + 1]);
    fs.n.push(n);
    fs.sigma.push(sigma);
    fs.alpha.push(alpha);
    Ok(TwistedRing::new(alg.clone(), fs)?)
}

/// Adjoins `x_{r+1}` with `σ̃_{r+1} = id ⊗ (√d ↦ −√d)`.
pub fn adjoin_conjugation<A: QAlgebra + Clone>(ring: &TwistedRing<ScalarExt<A>>) -> Result<TwistedRing<ScalarExt<A>>, TwistedError> {
    let e = ring.algebra();
    adjoin_generator(ring, e.conj(), 2, e.one())
}
