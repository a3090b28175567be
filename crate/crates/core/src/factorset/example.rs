use std::sync::Arc;

use super::abelian::AbelianFactorSet;
use super::general::{CenterAction, FactorSet};
use super::group::GroupTable;
use crate::algebra::{field_aut_linear, rel_aut_linear, AlgElem, LinearAut, QAlgebra, QuaternionExample, ScalarExt, SxElem, SymbolAlgebra};
use crate::numfield::{build_biquadratic, build_cubic_tower, NFElem, NumberField, RelElem, RelativeExtension};

/// `(σ̃₁, σ̃₂; α₁, α₂; u)` on the quaternion example.
pub fn quaternion_factor_set(ex: &QuaternionExample) -> AbelianFactorSet<AlgElem> {
    AbelianFactorSet::r2(
        &ex.alg,
        [2, 2],
        [ex.sigma1_tilde.to_linear(), ex.sigma2_tilde.to_linear()],
        [ex.alpha1.clone(), ex.alpha2.clone()],
        ex.u.clone(),
    )
    .expect("u is a unit")
}

/// Coefficient algebra, factor set and center action of a crossed product.
pub struct CrossedProductData<A: QAlgebra> {
    pub alg: A,
    pub fs: FactorSet<A::Elem>,
    pub center: CenterAction<A::Elem>,
    /// Q-dimension of the fixed field.
    pub fixed_q_dim: usize,
}

/// `(K, Gal(K/Q), f ≡ 1)` for `K = Q(√3, √−7)`.
pub fn trivial_biquadratic_data() -> CrossedProductData<Arc<NumberField>> {
    let b = build_biquadratic();
    let k = b.field.clone();
    let maps: Vec<LinearAut> = b.gal.iter().map(field_aut_linear).collect();
    let group = GroupTable::from_maps(&maps).expect("Galois group is closed");
    let center = CenterAction::from_maps(&k, vec![NFElem::gen(&k)], &maps);
    let fs = FactorSet::trivial(&k, group, maps);
    CrossedProductData { alg: k, fs, center, fixed_q_dim: 1 }
}

/// `(L/K, τ, 2π)` with `π = α² + 2α − 1`, over the cubic tower; `f` is the
/// cyclic factor set with parameter `2π`.
pub fn cubic_crossed_product_data(alpha_param: Option<RelElem>) -> CrossedProductData<Arc<RelativeExtension>> {
    let t = build_cubic_tower();
    let l = t.ext.clone();
    let k = &t.base.field;
    let pi = NFElem::from_ints(k, &[-1, 2, 1]);
    let two_pi = alpha_param.unwrap_or_else(|| RelElem::from_base(&l, pi.scale(&crate::exact::int(2))));
    let tau = rel_aut_linear(&t.tau);
    let fs = FactorSet::cyclic(&l, &tau, &two_pi, 3);
    let center = CenterAction::from_maps(&l, l.generators(), &fs.omega);
    CrossedProductData { alg: l, fs, center, fixed_q_dim: 3 }
}

/// The quaternion factor set tensored with `Q(√d)` plus a third generator
/// `σ̃₃ = id ⊗ (√d ↦ −√d)` with `u₃ᵢ = 1` and `α₃ = 1`.
pub fn extended_factor_set(ex: &QuaternionExample, d: i64) -> (ScalarExt<Arc<SymbolAlgebra>>, AbelianFactorSet<SxElem<AlgElem>>) {
    let e = ScalarExt::new(ex.alg.clone(), d);
    let base = quaternion_factor_set(ex);
    let sigma = vec![e.lift(&base.sigma[0]), e.lift(&base.sigma[1]), e.conj()];
    let emb = |x: &AlgElem| e.embed(x);
    let one = e.one();
    let mut u = vec![vec![one.clone(); 3]; 3];
    for i in 0..2 {
        for j in 0..2 {
            u[i][j] = emb(&base.u[i][j]);
        }
    }
    let alpha = vec![emb(&base.alpha[0]), emb(&base.alpha[1]), one];
    let fs = AbelianFactorSet { n: vec![2, 2, 2], sigma, u, alpha };
    (e, fs)
}
