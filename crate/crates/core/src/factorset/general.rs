use super::group::GroupTable;
use super::FactorSetError;
use crate::algebra::{LinearAut, QAlgebra};
use crate::report::Report;

/// A pair `(ω, f)`: `ω_σ` a Q-linear automorphism of `A` for each group
/// element and `f(σ, τ)` a unit of `A` for each pair.
#[derive(Clone, Debug)]
pub struct FactorSet<E> {
    pub group: GroupTable,
    pub omega: Vec<LinearAut>,
    pub f: Vec<Vec<E>>,
}

/// The action of the group on the center `K` of `A`: `images[σ][k] = σ(gens[k])`.
#[derive(Clone, Debug)]
pub struct CenterAction<E> {
    pub gens: Vec<E>,
    pub images: Vec<Vec<E>>,
}

impl<E: Clone> CenterAction<E> {
    /// Action read off from automorphisms of `A` that restrict to the group.
    pub fn from_maps<A: QAlgebra<Elem = E>>(alg: &A, gens: Vec<E>, maps: &[LinearAut]) -> Self {
        let images = maps.iter().map(|m| gens.iter().map(|g| m.apply(alg, g)).collect()).collect();
        CenterAction { gens, images }
    }
}

/// Index of the first algebra generator on which the maps differ.
pub fn first_disagreement<A: QAlgebra>(alg: &A, f: &LinearAut, g: &LinearAut) -> Option<usize> {
    alg.generators().iter().position(|x| f.apply(alg, x) != g.apply(alg, x))
}

pub(crate) fn agree_detail<A: QAlgebra>(alg: &A, f: &LinearAut, g: &LinearAut) -> (bool, String) {
    match first_disagreement(alg, f, g) {
        None => (true, "maps agree on generators".into()),
        Some(k) => (false, format!("maps differ on generator {k}")),
    }
}

pub(crate) fn inner_or_err<A: QAlgebra>(alg: &A, c: &A::Elem) -> Result<LinearAut, FactorSetError> {
    LinearAut::inner(alg, c).ok_or(FactorSetError::NotUnit)
}

impl<E: Clone + PartialEq + std::fmt::Debug> FactorSet<E> {
    /// `ω_{σ^i} = σ̃^i`, `f(σ^i, σ^j) = 1` if `i + j < n` and `α` otherwise.
    pub fn cyclic<A: QAlgebra<Elem = E>>(alg: &A, sigma: &LinearAut, alpha: &E, n: usize) -> Self {
        let group = GroupTable::cyclic(n);
        let omega = (0..n).map(|i| sigma.pow(i as u32)).collect();
        let f = (0..n).map(|i| (0..n).map(|j| if i + j < n { alg.one() } else { alpha.clone() }).collect()).collect();
        FactorSet { group, omega, f }
    }

    /// `f ≡ 1` over the given group of automorphisms.
    pub fn trivial<A: QAlgebra<Elem = E>>(alg: &A, group: GroupTable, omega: Vec<LinearAut>) -> Self {
        let g = group.order();
        FactorSet { group, omega, f: vec![vec![alg.one(); g]; g] }
    }

    pub fn order(&self) -> usize {
        self.group.order()
    }
}

/// The three factor-set relations:
/// `ω_σ|_K = σ`, `ω_σω_τ = ι_{f(σ,τ)}ω_{στ}` and
/// `ω_ρ(f(σ,τ))f(ρ,στ) = f(ρ,σ)f(ρσ,τ)`.
pub fn verify_factor_set<A: QAlgebra>(alg: &A, fs: &FactorSet<A::Elem>, center: &CenterAction<A::Elem>) -> Report {
    let mut r = Report::new();
    let g = &fs.group;
    let n = g.order();
    for s in 0..n {
        let bad = center.gens.iter().zip(&center.images[s]).position(|(c, img)| fs.omega[s].apply(alg, c) != *img);
        r.check(
            format!("restrict[{s}]"),
            bad.is_none(),
            bad.map_or("ω restricts to the group element on K".into(), |k| format!("differs on center generator {k}")),
        );
    }
    for s in 0..n {
        for t in 0..n {
            let lhs = fs.omega[s].compose(&fs.omega[t]);
            let (ok, detail) = match LinearAut::inner(alg, &fs.f[s][t]) {
                Some(inner) => agree_detail(alg, &lhs, &inner.compose(&fs.omega[g.mul(s, t)])),
                None => (false, "f(σ,τ) is not a unit".into()),
            };
            r.check(format!("compose[{s},{t}]"), ok, detail);
        }
    }
    for p in 0..n {
        for s in 0..n {
            for t in 0..n {
                let lhs = alg.mul(&fs.omega[p].apply(alg, &fs.f[s][t]), &fs.f[p][g.mul(s, t)]);
                let rhs = alg.mul(&fs.f[p][s], &fs.f[g.mul(p, s)][t]);
                r.check(format!("cocycle[{p},{s},{t}]"), lhs == rhs, if lhs == rhs { "holds" } else { "sides differ" });
            }
        }
    }
    r
}

/// `(η, g)` with `η_σ = ι_{m_σ}ω_σ` and `g(σ,τ) = m_σ ω_σ(m_τ) f(σ,τ) m_{στ}⁻¹`.
pub fn twist<A: QAlgebra>(alg: &A, fs: &FactorSet<A::Elem>, m: &[A::Elem]) -> Result<FactorSet<A::Elem>, FactorSetError> {
    let n = fs.order();
    if m.len() != n {
        return Err(FactorSetError::Shape);
    }
    let minv = m.iter().map(|x| alg.inv(x).ok_or(FactorSetError::NotUnit)).collect::<Result<Vec<_>, _>>()?;
    let omega = (0..n).map(|s| Ok(inner_or_err(alg, &m[s])?.compose(&fs.omega[s]))).collect::<Result<Vec<_>, FactorSetError>>()?;
    let f = (0..n)
        .map(|s| {
            (0..n)
                .map(|t| {
                    let x = alg.mul(&m[s], &fs.omega[s].apply(alg, &m[t]));
                    alg.mul(&alg.mul(&x, &fs.f[s][t]), &minv[fs.group.mul(s, t)])
                })
                .collect()
        })
        .collect();
    Ok(FactorSet { group: fs.group.clone(), omega, f })
}

/// Checks that `m` witnesses `(ω, f) ~ (η, g)`.
pub fn are_cohomologous<A: QAlgebra>(alg: &A, a: &FactorSet<A::Elem>, b: &FactorSet<A::Elem>, m: &[A::Elem]) -> bool {
    if a.group != b.group || m.len() != a.order() {
        return false;
    }
    match twist(alg, a, m) {
        Ok(t) => {
            (0..a.order()).all(|s| first_disagreement(alg, &t.omega[s], &b.omega[s]).is_none()) && t.f == b.f
        }
        Err(_) => false,
    }
}

/// `m_id = f(id,id)⁻¹` and `m_σ = 1` otherwise; twisting by it normalizes.
pub fn normalization_witness<A: QAlgebra>(alg: &A, fs: &FactorSet<A::Elem>) -> Result<Vec<A::Elem>, FactorSetError> {
    let id = fs.group.identity();
    let mut m = vec![alg.one(); fs.order()];
    m[id] = alg.inv(&fs.f[id][id]).ok_or(FactorSetError::NotUnit)?;
    Ok(m)
}

/// `c(σ,τ) = f(σ,τ)⁻¹g(σ,τ)` for two factor sets with the same `ω`;
/// every value is checked to commute with `A`.
pub fn extract_cocycle<A: QAlgebra>(alg: &A, a: &FactorSet<A::Elem>, b: &FactorSet<A::Elem>) -> Result<Vec<Vec<A::Elem>>, FactorSetError> {
    if a.group != b.group || (0..a.order()).any(|s| first_disagreement(alg, &a.omega[s], &b.omega[s]).is_some()) {
        return Err(FactorSetError::Mismatch("factor sets differ in ω"));
    }
    let gens = alg.generators();
    let n = a.order();
    let mut c = Vec::with_capacity(n);
    for s in 0..n {
        let mut row = Vec::with_capacity(n);
        for t in 0..n {
            let x = alg.mul(&alg.inv(&a.f[s][t]).ok_or(FactorSetError::NotUnit)?, &b.f[s][t]);
            if gens.iter().any(|g| !alg.is_zero(&alg.commutator(&x, g))) {
                return Err(FactorSetError::Mismatch("quotient is not central"));
            }
            row.push(x);
        }
        c.push(row);
    }
    Ok(c)
}

/// `(σ̃, α)` with `σ̃ = ω_σ` and `α = f(σ⁰,σ)f(σ¹,σ)⋯f(σ^{n−1},σ)`, for a
/// cyclic table whose element `k` is `σ^k`.
pub fn cyclic_normal_form<A: QAlgebra>(alg: &A, fs: &FactorSet<A::Elem>) -> Result<(LinearAut, A::Elem), FactorSetError> {
    let n = fs.order();
    if fs.group != GroupTable::cyclic(n) {
        return Err(FactorSetError::Mismatch("group table is not the standard cyclic table"));
    }
    let sigma = fs.omega[1 % n].clone();
    for i in 0..n {
        if first_disagreement(alg, &fs.omega[i], &sigma.pow(i as u32)).is_some() {
            return Err(FactorSetError::Mismatch("ω is not of the form ω_{σ^i} = σ̃^i"));
        }
    }
    let alpha = (0..n).fold(alg.one(), |acc, i| alg.mul(&acc, &fs.f[i][1 % n]));
    Ok((sigma, alpha))
}
