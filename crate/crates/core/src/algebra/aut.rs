use std::fmt;
use std::sync::Arc;

use super::norm::{norm_in_ki, norm_in_kj};
use super::qalgebra::LinearAut;
use super::symbol::{AlgElem, SymbolAlgebra};
use super::AlgebraError;
use crate::numfield::{NFAutomorphism, NFElem};

/// `σ`-semilinear automorphism of a symbol algebra, fixed by its base
/// automorphism and the images of `i` and `j`.
#[derive(Clone)]
pub struct AlgAutomorphism {
    alg: Arc<SymbolAlgebra>,
    base: NFAutomorphism,
    image_i: AlgElem,
    image_j: AlgElem,
    // monos[s·n + t] = image_i^s · image_j^t
    monos: Vec<AlgElem>,
}

impl AlgAutomorphism {
    /// Checks `i′ⁿ = σ(a)`, `j′ⁿ = σ(b)` and `j′i′ = σ(ζ)i′j′`.
    pub fn new(alg: &Arc<SymbolAlgebra>, base: NFAutomorphism, image_i: AlgElem, image_j: AlgElem) -> Result<Self, AlgebraError> {
        if !crate::numfield::same_field(base.field(), alg.field()) {
            return Err(AlgebraError::Relation("base automorphism acts on another field"));
        }
        if !Arc::ptr_eq(image_i.algebra(), alg) || !Arc::ptr_eq(image_j.algebra(), alg) {
            return Err(AlgebraError::Relation("images lie in another algebra"));
        }
        let n = alg.n() as u64;
        if image_i.pow(n) != AlgElem::from_base(alg, base.apply(alg.a())) {
            return Err(AlgebraError::Relation("i′ⁿ ≠ σ(a)"));
        }
        if image_j.pow(n) != AlgElem::from_base(alg, base.apply(alg.b())) {
            return Err(AlgebraError::Relation("j′ⁿ ≠ σ(b)"));
        }
        let lhs = &image_j * &image_i;
        let rhs = (&image_i * &image_j).scale(&base.apply(alg.zeta()));
        if lhs != rhs {
            return Err(AlgebraError::Relation("j′i′ ≠ σ(ζ)i′j′"));
        }
        Ok(Self::assemble(alg, base, image_i, image_j))
    }

    fn assemble(alg: &Arc<SymbolAlgebra>, base: NFAutomorphism, image_i: AlgElem, image_j: AlgElem) -> Self {
        let n = alg.n();
        let ipow: Vec<AlgElem> = (0..n as u64).map(|s| image_i.pow(s)).collect();
        let jpow: Vec<AlgElem> = (0..n as u64).map(|t| image_j.pow(t)).collect();
        let monos = ipow.iter().flat_map(|x| jpow.iter().map(move |y| x * y)).collect();
        AlgAutomorphism { alg: alg.clone(), base, image_i, image_j, monos }
    }

    pub fn identity(alg: &Arc<SymbolAlgebra>) -> Self {
        Self::assemble(alg, NFAutomorphism::identity(alg.field()), AlgElem::i(alg), AlgElem::j(alg))
    }

    /// `ι_c: x ↦ c·x·c⁻¹`.
    pub fn inner(c: &AlgElem) -> Result<Self, AlgebraError> {
        let alg = c.algebra();
        let ci = c.inv()?;
        let conj = |x: AlgElem| &(c * &x) * &ci;
        Ok(Self::assemble(alg, NFAutomorphism::identity(alg.field()), conj(AlgElem::i(alg)), conj(AlgElem::j(alg))))
    }

    pub fn algebra(&self) -> &Arc<SymbolAlgebra> {
        &self.alg
    }

    pub fn base(&self) -> &NFAutomorphism {
        &self.base
    }

    pub fn image_i(&self) -> &AlgElem {
        &self.image_i
    }

    pub fn image_j(&self) -> &AlgElem {
        &self.image_j
    }

    /// `Σ σ(c_{st}) i′^s j′^t`.
    pub fn apply(&self, x: &AlgElem) -> AlgElem {
        let n = self.alg.n();
        let mut out = AlgElem::zero(&self.alg);
        for s in 0..n {
            for t in 0..n {
                let c = x.coeff(s, t);
                if !c.is_zero() {
                    out = &out + &self.monos[s * n + t].scale(&self.base.apply(c));
                }
            }
        }
        out
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &AlgAutomorphism) -> AlgAutomorphism {
        Self::assemble(&self.alg, self.base.compose(&other.base), self.apply(&other.image_i), self.apply(&other.image_j))
    }

    pub fn pow(&self, e: u32) -> AlgAutomorphism {
        (0..e).fold(Self::identity(&self.alg), |acc, _| acc.compose(self))
    }

    /// Agreement on the generator of `K`, on `i` and on `j`, which
    /// determines a semilinear map completely.
    pub fn equal_on_generators(&self, other: &AlgAutomorphism) -> bool {
        self.base == other.base && self.image_i == other.image_i && self.image_j == other.image_j
    }

    pub fn is_identity(&self) -> bool {
        self.equal_on_generators(&Self::identity(&self.alg))
    }

    /// The map as a Q-linear operator on the Q-basis of the algebra.
    pub fn to_linear(&self) -> LinearAut {
        LinearAut::from_fn(&self.alg, |x| self.apply(x))
    }
}

impl PartialEq for AlgAutomorphism {
    fn eq(&self, o: &Self) -> bool {
        Arc::ptr_eq(&self.alg, &o.alg) && self.equal_on_generators(o)
    }
}

impl fmt::Debug for AlgAutomorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("AlgAutomorphism")
            .field("base", &self.base)
            .field("i", &self.image_i)
            .field("j", &self.image_j)
            .finish()
    }
}

/// Which generator is rescaled when extending a field automorphism.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    /// `σ(b) = b`, `λ ∈ K(j)`, `i ↦ λi`, `j ↦ j`.
    KJ,
    /// `σ(a) = a`, `λ ∈ K(i)`, `i ↦ i`, `j ↦ λj`.
    KI,
}

/// Extension of `σ` with one generator fixed and the other rescaled by `λ`.
///
/// The norm of `λ` from `K(j)` (or `K(i)`) must equal `σ(a)/a` (or `σ(b)/b`).
pub fn extend_aut_special(alg: &Arc<SymbolAlgebra>, sigma: &NFAutomorphism, lambda: &AlgElem, side: Side) -> Result<AlgAutomorphism, AlgebraError> {
    if !sigma.fixes(alg.zeta()) {
        return Err(AlgebraError::NotFixed("ζ"));
    }
    let (fixed, moved, norm, name) = match side {
        Side::KJ => (alg.b(), alg.a(), norm_in_kj(lambda)?, "b"),
        Side::KI => (alg.a(), alg.b(), norm_in_ki(lambda)?, "a"),
    };
    if !sigma.fixes(fixed) {
        return Err(AlgebraError::NotFixed(name));
    }
    let target = sigma.apply(moved).div(moved)?;
    if norm != target {
        return Err(AlgebraError::NormMismatch);
    }
    let (ii, jj) = match side {
        Side::KJ => (lambda * &AlgElem::i(alg), AlgElem::j(alg)),
        Side::KI => (AlgElem::i(alg), lambda * &AlgElem::j(alg)),
    };
    AlgAutomorphism::new(alg, sigma.clone(), ii, jj)
}

/// `σ(x)/x`, the target of the norm equation for `σ` on the given side.
pub(crate) fn norm_target(alg: &SymbolAlgebra, sigma: &NFAutomorphism, side: Side) -> Result<NFElem, AlgebraError> {
    let moved = match side {
        Side::KJ => alg.a(),
        Side::KI => alg.b(),
    };
    Ok(sigma.apply(moved).div(moved)?)
}
