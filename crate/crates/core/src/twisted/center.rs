use super::ring::{TwistedElem, TwistedRing};
use super::TwistedError;
use crate::algebra::QAlgebra;
use num_traits::Zero;

use crate::exact::{QMatrix, Rational};
use crate::report::Report;

/// `t_i = α_i⁻¹ x_i^{n_i}` with the checks that certify them central.
pub struct CentralParams<E> {
    pub t: Vec<TwistedElem<E>>,
    pub report: Report,
}

fn verdict(ok: bool) -> &'static str {
    if ok {
        "commutes"
    } else {
        "nonzero commutator"
    }
}

/// Builds every `t_i` and checks, with 1-based ids: commutation with the
/// generators of `A` (`t[i].coeff[g]`) and with each `x_j` (`t[i].x[j]`),
/// `t_i t_j = t_j t_i`, `x_i^{n_i} = α_i t_i`, and the identity
/// `σ*_j(t_i) = σ̃_j(α_i)⁻¹ (u_ji x_i)^{n_i} = t_i` for `j ≠ i`.
pub fn central_params<A: QAlgebra>(ring: &TwistedRing<A>) -> Result<CentralParams<A::Elem>, TwistedError> {
    let alg = ring.algebra();
    let fs = ring.factor_set();
    let r = ring.r();
    let mut t = Vec::with_capacity(r);
    for i in 0..r {
        let ai = alg.inv(&fs.alpha[i]).ok_or(crate::factorset::FactorSetError::NotUnit)?;
        t.push(ring.mul(&ring.constant(&ai), &ring.pow(&ring.x(i), fs.n[i])));
    }
    let gens: Vec<TwistedElem<A::Elem>> = alg.generators().iter().map(|g| ring.constant(g)).collect();
    let mut rep = Report::new();
    for i in 0..r {
        for (g, c) in gens.iter().enumerate() {
            let ok = ring.commute(&t[i], c);
            rep.check(format!("t[{}].coeff[{g}]", i + 1), ok, verdict(ok));
        }
        for j in 0..r {
            let ok = ring.commute(&t[i], &ring.x(j));
            rep.check(format!("t[{}].x[{}]", i + 1, j + 1), ok, verdict(ok));
        }
        let lhs = ring.pow(&ring.x(i), fs.n[i]);
        let rhs = ring.mul(&ring.constant(&fs.alpha[i]), &t[i]);
        rep.check(format!("t[{}].power", i + 1), lhs == rhs, if lhs == rhs { "x^n = αt" } else { "x^n ≠ αt" });
    }
    for i in 0..r {
        for j in i + 1..r {
            let ok = ring.commute(&t[i], &t[j]);
            rep.check(format!("t[{}].t[{}]", i + 1, j + 1), ok, verdict(ok));
        }
    }
    for i in 0..r {
        for j in 0..r {
            if i == j {
                continue;
            }
            let s_alpha = fs.sigma[j].apply(alg, &fs.alpha[i]);
            let Some(s_alpha_inv) = alg.inv(&s_alpha) else {
                rep.check(format!("sigma_star[{}](t[{}])", j + 1, i + 1), false, "σ̃_j(α_i) is not a unit");
                continue;
            };
            let uxi = ring.mul(&ring.constant(&fs.u[j][i]), &ring.x(i));
            let image = ring.mul(&ring.constant(&s_alpha_inv), &ring.pow(&uxi, fs.n[i]));
            let ok = image == t[i];
            rep.check(format!("sigma_star[{}](t[{}])", j + 1, i + 1), ok, if ok { "fixed" } else { "moved" });
        }
    }
    if !rep.passed() {
        return Err(TwistedError::NotCentral(rep));
    }
    Ok(CentralParams { t, report: rep })
}

/// Rank of the ring over `A(t₁,…,t_r)` and over `K(t₁,…,t_r)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FreeRank {
    /// Number of monomials `x^e` with `0 ≤ e_i < n_i`.
    pub monomials: usize,
    /// `dim_K A`.
    pub coeff_rank: usize,
    /// `monomials · coeff_rank`.
    pub rank: usize,
    /// Q-rank of `{b x^e}` for `b` in a Q-basis of `A` and reduced `e`.
    pub q_span: usize,
    /// Every `x^e` with `e_i < 2n_i` equals a unit times `t^q x^{e mod n}`.
    pub reduces: bool,
}

fn exponent_box(bounds: &[u32]) -> Vec<Vec<u32>> {
    let mut out = vec![vec![]];
    for &b in bounds {
        out = out.into_iter().flat_map(|p| (0..b).map(move |k| [p.clone(), vec![k]].concat())).collect();
    }
    out
}

/// Rank bookkeeping; `k_dim` is the Q-dimension of the center `K` of `A`.
pub fn free_rank<A: QAlgebra>(ring: &TwistedRing<A>, t: &[TwistedElem<A::Elem>], k_dim: usize) -> FreeRank {
    let alg = ring.algebra();
    let n = &ring.factor_set().n;
    let reduced = exponent_box(n);
    let basis = alg.basis();
    let d = alg.dim();
    let mut cols = Vec::new();
    for (slot, e) in reduced.iter().enumerate() {
        for b in &basis {
            let m = ring.monomial(b, e);
            let mut col = vec![Rational::zero(); d * reduced.len()];
            for (f, c) in m.terms() {
                debug_assert_eq!(f, e);
                col[slot * d..(slot + 1) * d].clone_from_slice(&alg.coords(c));
            }
            cols.push(col);
        }
    }
    let q_span = QMatrix::from_columns(d * reduced.len(), &cols).rank();
    let doubled: Vec<u32> = n.iter().map(|k| 2 * k).collect();
    let reduces = exponent_box(&doubled).iter().all(|e| {
        let mut rhs = ring.one();
        for (i, &ei) in e.iter().enumerate() {
            rhs = ring.mul(&rhs, &ring.pow(&t[i], ei / n[i]));
        }
        let rem: Vec<u32> = e.iter().zip(n).map(|(a, b)| a % b).collect();
        rhs = ring.mul(&rhs, &ring.monomial(&alg.one(), &rem));
        let lhs = ring.monomial(&alg.one(), e);
        matches!((lhs.coeff(e), rhs.coeff(e)), (Some(_), Some(c)) if rhs.num_terms() == 1 && alg.inv(c).is_some())
    });
    let monomials = reduced.len();
    let coeff_rank = d / k_dim;
    FreeRank { monomials, coeff_rank, rank: monomials * coeff_rank, q_span, reduces }
}
