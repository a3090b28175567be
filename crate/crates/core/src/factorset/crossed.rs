use super::general::{verify_factor_set, CenterAction, FactorSet};
use super::FactorSetError;
use crate::algebra::QAlgebra;
use crate::exact::Rational;

/// `⊕_σ A·z_σ` with `az_σ · bz_τ = aω_σ(b)f(σ,τ)z_{στ}`.
///
/// Elements are coefficient vectors indexed by the group table.
pub struct GenCrossedProduct<A: QAlgebra> {
    alg: A,
    fs: FactorSet<A::Elem>,
    // f(id, id)⁻¹
    unit: A::Elem,
}

impl<A: QAlgebra> GenCrossedProduct<A> {
    /// Verifies the factor set first; the failing report is returned as the error.
    pub fn build(alg: A, fs: FactorSet<A::Elem>, center: &CenterAction<A::Elem>) -> Result<Self, FactorSetError> {
        let report = verify_factor_set(&alg, &fs, center);
        if !report.passed() {
            return Err(FactorSetError::Verification(report));
        }
        let id = fs.group.identity();
        let unit = alg.inv(&fs.f[id][id]).ok_or(FactorSetError::NotUnit)?;
        Ok(GenCrossedProduct { alg, fs, unit })
    }

    pub fn coefficients(&self) -> &A {
        &self.alg
    }

    pub fn factor_set(&self) -> &FactorSet<A::Elem> {
        &self.fs
    }

    /// `1·z_σ`.
    pub fn z(&self, s: usize) -> Vec<A::Elem> {
        let mut v = vec![self.alg.zero(); self.fs.order()];
        v[s] = self.alg.one();
        v
    }

    /// `a ↦ a·f(id,id)⁻¹·z_id`, the embedding of `A`.
    pub fn embed(&self, a: &A::Elem) -> Vec<A::Elem> {
        let mut v = vec![self.alg.zero(); self.fs.order()];
        v[self.fs.group.identity()] = self.alg.mul(a, &self.unit);
        v
    }

    /// Dimension over a center of the given Q-dimension.
    pub fn dim_over(&self, center_q_dim: usize) -> usize {
        self.dim() / center_q_dim
    }

    /// True iff `z_σ·c·z_σ⁻¹ = σ(c)` for every listed center generator.
    pub fn conjugation_restricts(&self, s: usize, center: &CenterAction<A::Elem>) -> bool {
        let z = self.z(s);
        let Some(zi) = self.inv(&z) else { return false };
        center
            .gens
            .iter()
            .zip(&center.images[s])
            .all(|(c, img)| self.mul(&self.mul(&z, &self.embed(c)), &zi) == self.embed(img))
    }

    /// Associativity on all triples of basis vectors.
    pub fn associative_on_basis(&self) -> bool {
        let basis = self.basis();
        let prods: Vec<Vec<Vec<A::Elem>>> = basis.iter().map(|x| basis.iter().map(|y| self.mul(x, y)).collect()).collect();
        (0..basis.len()).all(|a| {
            (0..basis.len()).all(|b| (0..basis.len()).all(|c| self.mul(&prods[a][b], &basis[c]) == self.mul(&basis[a], &prods[b][c])))
        })
    }
}

impl<A: QAlgebra> QAlgebra for GenCrossedProduct<A> {
    type Elem = Vec<A::Elem>;

    fn dim(&self) -> usize {
        self.fs.order() * self.alg.dim()
    }

    fn coords(&self, x: &Self::Elem) -> Vec<Rational> {
        x.iter().flat_map(|c| self.alg.coords(c)).collect()
    }

    fn from_coords(&self, c: &[Rational]) -> Self::Elem {
        c.chunks(self.alg.dim()).map(|ch| self.alg.from_coords(ch)).collect()
    }

    fn one(&self) -> Self::Elem {
        self.embed(&self.alg.one())
    }

    fn mul(&self, x: &Self::Elem, y: &Self::Elem) -> Self::Elem {
        let g = &self.fs.group;
        let mut out = vec![self.alg.zero(); g.order()];
        for (s, a) in x.iter().enumerate() {
            if self.alg.is_zero(a) {
                continue;
            }
            for (t, b) in y.iter().enumerate() {
                if self.alg.is_zero(b) {
                    continue;
                }
                let st = g.mul(s, t);
                let term = self.alg.mul(&self.alg.mul(a, &self.fs.omega[s].apply(&self.alg, b)), &self.fs.f[s][t]);
                out[st] = self.alg.add(&out[st], &term);
            }
        }
        out
    }

    fn generators(&self) -> Vec<Self::Elem> {
        let mut g: Vec<Self::Elem> = self.alg.generators().iter().map(|a| self.embed(a)).collect();
        g.extend((0..self.fs.order()).map(|s| self.z(s)));
        g
    }
}
