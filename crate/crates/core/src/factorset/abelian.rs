use super::general::{agree_detail, inner_or_err};
use super::FactorSetError;
use crate::algebra::{LinearAut, QAlgebra};
use crate::report::Report;

/// `(σ̃, α)` for a cyclic group of order `n`.
#[derive(Clone, Debug)]
pub struct CyclicFactorSet<E> {
    pub n: u32,
    pub sigma: LinearAut,
    pub alpha: E,
}

/// `(σ̃_i, u_ij, α_i)` for `Z/n₁ × … × Z/n_r`.
#[derive(Clone, Debug)]
pub struct AbelianFactorSet<E> {
    pub n: Vec<u32>,
    pub sigma: Vec<LinearAut>,
    pub u: Vec<Vec<E>>,
    pub alpha: Vec<E>,
}

impl<E: Clone> AbelianFactorSet<E> {
    /// Two generators, `u = u₂₁`, `u₁₂ = u⁻¹`.
    pub fn r2<A: QAlgebra<Elem = E>>(
        alg: &A,
        n: [u32; 2],
        sigma: [LinearAut; 2],
        alpha: [E; 2],
        u: E,
    ) -> Result<Self, FactorSetError> {
        let uinv = alg.inv(&u).ok_or(FactorSetError::NotUnit)?;
        Ok(AbelianFactorSet {
            n: n.to_vec(),
            sigma: sigma.to_vec(),
            u: vec![vec![alg.one(), uinv], vec![u, alg.one()]],
            alpha: alpha.to_vec(),
        })
    }

    pub fn r(&self) -> usize {
        self.n.len()
    }

    /// The element `u = u₂₁` of a two-generator factor set.
    pub fn u21(&self) -> &E {
        &self.u[1][0]
    }
}

/// `N_i(x) = x·σ̃_i(x)⋯σ̃_i^{n_i−1}(x)`.
pub fn twisted_norm<A: QAlgebra>(alg: &A, sigma: &LinearAut, n: u32, x: &A::Elem) -> A::Elem {
    let mut acc = alg.one();
    let mut cur = x.clone();
    for _ in 0..n {
        acc = alg.mul(&acc, &cur);
        cur = sigma.apply(alg, &cur);
    }
    acc
}

fn eq_detail(ok: bool) -> &'static str {
    if ok {
        "holds"
    } else {
        "sides differ"
    }
}

fn power_inner<A: QAlgebra>(alg: &A, sigma: &LinearAut, n: u32, alpha: &A::Elem) -> (bool, String) {
    match inner_or_err(alg, alpha) {
        Ok(inner) => agree_detail(alg, &sigma.pow(n), &inner),
        Err(_) => (false, "α is not a unit".into()),
    }
}

/// `σ̃ⁿ = ι_α` and `σ̃(α) = α`.
pub fn verify_cyclic<A: QAlgebra>(alg: &A, fs: &CyclicFactorSet<A::Elem>) -> Report {
    let mut r = Report::new();
    let (ok, detail) = power_inner(alg, &fs.sigma, fs.n, &fs.alpha);
    r.check("power_inner", ok, detail);
    let fixed = fs.sigma.apply(alg, &fs.alpha) == fs.alpha;
    r.check("fixed", fixed, eq_detail(fixed));
    r
}

/// The five relations of a two-generator abelian factor set, with ids
/// `rel1.*` … `rel5.*`:
/// `σ̃₁^{n₁} = ι_{α₁}`, `σ̃₁(α₁) = α₁`; `σ̃₂^{n₂} = ι_{α₂}`, `σ̃₂(α₂) = α₂`;
/// `σ̃₂σ̃₁ = ι_u σ̃₁σ̃₂`; `σ̃₁(α₂) = N₂(u⁻¹)α₂`; `σ̃₂(α₁) = N₁(u)α₁`.
pub fn verify_abelian_r2<A: QAlgebra>(alg: &A, fs: &AbelianFactorSet<A::Elem>) -> Result<Report, FactorSetError> {
    if fs.r() != 2 {
        return Err(FactorSetError::Shape);
    }
    let (s1, s2) = (&fs.sigma[0], &fs.sigma[1]);
    let (a1, a2) = (&fs.alpha[0], &fs.alpha[1]);
    let u = fs.u21();
    let mut r = Report::new();
    for (k, (s, a)) in [(s1, a1), (s2, a2)].into_iter().enumerate() {
        let (ok, detail) = power_inner(alg, s, fs.n[k], a);
        r.check(format!("rel{}.power", k + 1), ok, detail);
        let fixed = s.apply(alg, a) == *a;
        r.check(format!("rel{}.fixed", k + 1), fixed, eq_detail(fixed));
    }
    let (ok, detail) = match inner_or_err(alg, u) {
        Ok(iu) => agree_detail(alg, &s2.compose(s1), &iu.compose(&s1.compose(s2))),
        Err(_) => (false, "u is not a unit".into()),
    };
    r.check("rel3.commute", ok, detail);
    let ok4 = match alg.inv(u) {
        Some(ui) => s1.apply(alg, a2) == alg.mul(&twisted_norm(alg, s2, fs.n[1], &ui), a2),
        None => false,
    };
    r.check("rel4.norm", ok4, eq_detail(ok4));
    let ok5 = s2.apply(alg, a1) == alg.mul(&twisted_norm(alg, s1, fs.n[0], u), a1);
    r.check("rel5.norm", ok5, eq_detail(ok5));
    Ok(r)
}

/// The full relation set for any `r` (indices 1-based in the ids):
/// `u_ii = 1`, `u_ij = u_ji⁻¹`, `σ̃_i^{n_i} = ι_{α_i}`,
/// `σ̃_iσ̃_j = ι_{u_ij}σ̃_jσ̃_i`, `σ̃_j(α_i) = N_i(u_ji)α_i`, and
/// `σ̃_k(u_ij)u_kj σ̃_j(u_ki)u_ji σ̃_i(u_jk)u_ik = 1`.
pub fn verify_abelian_general<A: QAlgebra>(alg: &A, fs: &AbelianFactorSet<A::Elem>) -> Result<Report, FactorSetError> {
    let r = fs.r();
    if fs.sigma.len() != r || fs.alpha.len() != r || fs.u.len() != r || fs.u.iter().any(|row| row.len() != r) {
        return Err(FactorSetError::Shape);
    }
    let one = alg.one();
    let mut rep = Report::new();
    for i in 0..r {
        let ok = fs.u[i][i] == one;
        rep.check(format!("u_diag[{}]", i + 1), ok, eq_detail(ok));
    }
    for i in 0..r {
        for j in 0..r {
            if i != j {
                let ok = alg.mul(&fs.u[i][j], &fs.u[j][i]) == one;
                rep.check(format!("u_inverse[{},{}]", i + 1, j + 1), ok, eq_detail(ok));
            }
        }
    }
    for i in 0..r {
        let (ok, detail) = power_inner(alg, &fs.sigma[i], fs.n[i], &fs.alpha[i]);
        rep.check(format!("power_inner[{}]", i + 1), ok, detail);
    }
    for i in 0..r {
        for j in 0..r {
            let (ok, detail) = match inner_or_err(alg, &fs.u[i][j]) {
                Ok(iu) => agree_detail(alg, &fs.sigma[i].compose(&fs.sigma[j]), &iu.compose(&fs.sigma[j].compose(&fs.sigma[i]))),
                Err(_) => (false, "u_ij is not a unit".into()),
            };
            rep.check(format!("commute[{},{}]", i + 1, j + 1), ok, detail);
        }
    }
    for i in 0..r {
        for j in 0..r {
            let lhs = fs.sigma[j].apply(alg, &fs.alpha[i]);
            let rhs = alg.mul(&twisted_norm(alg, &fs.sigma[i], fs.n[i], &fs.u[j][i]), &fs.alpha[i]);
            rep.check(format!("alpha_norm[{},{}]", i + 1, j + 1), lhs == rhs, eq_detail(lhs == rhs));
        }
    }
    for i in 0..r {
        for j in 0..r {
            for k in 0..r {
                let s = |m: usize, x: &A::Elem| fs.sigma[m].apply(alg, x);
                let factors = [
                    s(k, &fs.u[i][j]),
                    fs.u[k][j].clone(),
                    s(j, &fs.u[k][i]),
                    fs.u[j][i].clone(),
                    s(i, &fs.u[j][k]),
                    fs.u[i][k].clone(),
                ];
                let prod = factors.iter().fold(one.clone(), |acc, x| alg.mul(&acc, x));
                let ok = prod == one;
                rep.check(format!("six_factor[{},{},{}]", i + 1, j + 1, k + 1), ok, eq_detail(ok));
            }
        }
    }
    Ok(rep)
}
