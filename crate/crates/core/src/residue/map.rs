use std::sync::Arc;

use super::finite::{FFElem, FiniteField, SmallExtension};
use super::ResidueError;
use crate::exact::{reduce_mod_p, ModPoly};
use crate::numfield::{NFElem, NumberField, RelAutomorphism, RelElem, RelativeExtension};

/// Reduction `Q[x]/(f) → F_q` sending the generator to a root of `f mod p`.
#[derive(Clone, Debug)]
pub struct ResidueMap {
    field: Arc<NumberField>,
    codomain: Arc<FiniteField>,
    gen_image: FFElem,
}

impl ResidueMap {
    /// Checks `f(root) = 0` in the codomain.
    pub fn new(field: &Arc<NumberField>, codomain: &Arc<FiniteField>, root: FFElem) -> Result<Self, ResidueError> {
        let p = codomain.p();
        let f = ModPoly::from_unipoly(field.min_poly(), p).map_err(|_| ResidueError::NotIntegral(p))?;
        let val = f.coeffs().iter().rev().fold(FFElem::zero(codomain), |acc, &c| acc.mul(&root).add(&FFElem::from_int(codomain, c as i64)));
        if !val.is_zero() {
            return Err(ResidueError::NotARoot);
        }
        Ok(ResidueMap { field: field.clone(), codomain: codomain.clone(), gen_image: root })
    }

    pub fn p(&self) -> u64 {
        self.codomain.p()
    }

    pub fn codomain(&self) -> &Arc<FiniteField> {
        &self.codomain
    }

    pub fn field(&self) -> &Arc<NumberField> {
        &self.field
    }

    pub fn gen_image(&self) -> &FFElem {
        &self.gen_image
    }

    /// Image of a `p`-integral element (in power-basis coordinates).
    pub fn apply(&self, x: &NFElem) -> Result<FFElem, ResidueError> {
        let p = self.p();
        x.coeffs().iter().rev().try_fold(FFElem::zero(&self.codomain), |acc, c| {
            let r = reduce_mod_p(c, p).ok_or(ResidueError::NotIntegral(p))?;
            Ok(acc.mul(&self.gen_image).add(&FFElem::from_int(&self.codomain, r as i64)))
        })
    }
}

/// Reduction of a relative extension `L = K(y)` on top of a reduction of `K`,
/// with `L̄ = K̄[y]/(ḡ)`.
#[derive(Debug)]
pub struct TowerResidueMap {
    base: ResidueMap,
    ext: Arc<RelativeExtension>,
    residue: SmallExtension,
}

impl TowerResidueMap {
    /// Reduces the relative polynomial and checks that it stays irreducible.
    pub fn new(base: ResidueMap, ext: &Arc<RelativeExtension>) -> Result<Self, ResidueError> {
        if !crate::numfield::same_field(base.field(), ext.base()) {
            return Err(ResidueError::Inconsistent("base map is not defined on the base field"));
        }
        let g = ext.min_poly().iter().map(|c| base.apply(c)).collect::<Result<Vec<_>, _>>()?;
        let residue = SmallExtension::new(base.codomain(), g)?;
        Ok(TowerResidueMap { base, ext: ext.clone(), residue })
    }

    pub fn base(&self) -> &ResidueMap {
        &self.base
    }

    pub fn residue(&self) -> &SmallExtension {
        &self.residue
    }

    /// Size of the bottom residue field `K̄`.
    pub fn base_size(&self) -> u128 {
        self.base.codomain().size()
    }

    pub fn apply(&self, x: &RelElem) -> Result<Vec<FFElem>, ResidueError> {
        let c = x.coeffs().iter().map(|c| self.base.apply(c)).collect::<Result<Vec<_>, _>>()?;
        Ok(self.residue.reduce(c))
    }

    /// `ȳ^q` with `q = |K̄|`.
    pub fn frobenius_of_gen(&self) -> Vec<FFElem> {
        self.residue.pow(&self.residue.gen(), self.base_size())
    }

    /// True iff the candidate acts on the residue field as `z ↦ z^q`.
    ///
    /// Both maps are `K̄`-linear field automorphisms of `L̄`, so agreement on
    /// the class of `y` suffices.
    pub fn frobenius_match(&self, candidate: &RelAutomorphism) -> Result<bool, ResidueError> {
        if !candidate.base().is_identity() {
            return Err(ResidueError::Inconsistent("candidate does not fix the base field"));
        }
        if !Arc::ptr_eq(candidate.gen_image().ext(), &self.ext) {
            return Err(ResidueError::Inconsistent("candidate acts on a different extension"));
        }
        Ok(self.apply(candidate.gen_image())? == self.frobenius_of_gen())
    }
}
