use std::collections::HashMap;
use std::sync::Arc;

use super::aut::{norm_target, Side};
use super::symbol::{AlgElem, SymbolAlgebra};
use super::AlgebraError;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive};

use crate::exact::{int, Rational};
use crate::numfield::{NFAutomorphism, NFElem};

/// Product of the conjugates `λ(ζ^k j)`, `0 ≤ k < n`, for `λ ∈ K(j)`.
pub fn norm_in_kj(lambda: &AlgElem) -> Result<NFElem, AlgebraError> {
    if !lambda.in_kj() {
        return Err(AlgebraError::NotInSubfield("K(j)"));
    }
    norm_along(lambda, |_, t| t)
}

/// Product of the conjugates `λ(ζ^k i)`, `0 ≤ k < n`, for `λ ∈ K(i)`.
pub fn norm_in_ki(lambda: &AlgElem) -> Result<NFElem, AlgebraError> {
    if !lambda.in_ki() {
        return Err(AlgebraError::NotInSubfield("K(i)"));
    }
    norm_along(lambda, |s, _| s)
}

fn norm_along(lambda: &AlgElem, weight: impl Fn(usize, usize) -> usize) -> Result<NFElem, AlgebraError> {
    let alg = lambda.algebra();
    let n = alg.n();
    let mut zk = NFElem::one(alg.field());
    let mut prod = AlgElem::one(alg);
    for _ in 0..n {
        let mut conj = AlgElem::zero(alg);
        for s in 0..n {
            for t in 0..n {
                let c = lambda.coeff(s, t);
                if !c.is_zero() {
                    let w = zk.pow(weight(s, t) as i64)?;
                    conj = &conj + &AlgElem::monomial(alg, c * &w, s, t);
                }
            }
        }
        prod = &prod * &conj;
        zk = &zk * alg.zeta();
    }
    prod.as_base().ok_or(AlgebraError::NotInSubfield("K"))
}

/// Coordinates the search box ranges over.
#[derive(Clone, Debug)]
pub enum SearchBasis {
    /// Powers of the field generator.
    Power,
    /// An arbitrary Q-basis of `K`.
    Custom(Vec<NFElem>),
}

#[derive(Clone, Debug)]
pub struct SearchConfig {
    /// Numerators range over `[−bound, bound]` on each coordinate.
    pub bound: i64,
    /// Denominators `m` range over the positive divisors of this integer.
    pub denominator: u64,
    pub basis: SearchBasis,
}

impl SearchConfig {
    pub fn new(bound: i64) -> Self {
        SearchConfig { bound, denominator: 1, basis: SearchBasis::Power }
    }
}

/// Exhaustive search for `λ = (c + d·g)/m` with `N(λ) = σ(x)/x`, where
/// `g = j, x = a` on the `KJ` side and `g = i, x = b` on the `KI` side.
///
/// Only quaternion algebras are searched. Candidates are visited in order
/// of `m`, then `d`, then `c`; on each coordinate the numerators run
/// `0, 1, −1, 2, −2, …` so the first hit is reproducible. Every returned
/// `λ` has its norm re-verified exactly.
pub fn norm_equation_search(
    alg: &Arc<SymbolAlgebra>,
    sigma: &NFAutomorphism,
    side: Side,
    cfg: &SearchConfig,
) -> Result<Option<AlgElem>, AlgebraError> {
    if alg.n() != 2 {
        return Err(AlgebraError::BadSymbol("norm search handles quaternion algebras only"));
    }
    if !sigma.fixes(alg.zeta()) {
        return Err(AlgebraError::NotFixed("ζ"));
    }
    let (fixed, name) = match side {
        Side::KJ => (alg.b(), "b"),
        Side::KI => (alg.a(), "a"),
    };
    if !sigma.fixes(fixed) {
        return Err(AlgebraError::NotFixed(name));
    }
    let target = norm_target(alg, sigma, side)?;
    let k = alg.field();
    let basis: Vec<NFElem> = match &cfg.basis {
        SearchBasis::Power => (0..k.degree()).map(|e| NFElem::gen(k).pow(e as i64)).collect::<Result<_, _>>()?,
        SearchBasis::Custom(v) => v.clone(),
    };
    let form = IntForms::new(&basis, fixed, &target);
    let vectors = enumerate_box(basis.len(), cfg.bound.max(0));
    let mut squares: HashMap<Vec<i128>, usize> = HashMap::new();
    for (idx, c) in vectors.iter().enumerate() {
        squares.entry(form.eval(&form.square, c)).or_insert(idx);
    }
    let denom = cfg.denominator.max(1);
    for m in (1..=denom).filter(|m| denom % m == 0) {
        let mm = (m * m) as i128;
        for d in &vectors {
            let mut rhs = form.eval(&form.twisted, d);
            for (r, t) in rhs.iter_mut().zip(&form.target) {
                *r += mm * t;
            }
            let Some(&ci) = squares.get(&rhs) else { continue };
            let minv = Rational::new(1.into(), m.into());
            let c = combine(&basis, &vectors[ci]).scale(&minv);
            let d = combine(&basis, d).scale(&minv);
            let lambda = match side {
                Side::KJ => &AlgElem::from_base(alg, c) + &AlgElem::monomial(alg, d, 0, 1),
                Side::KI => &AlgElem::from_base(alg, c) + &AlgElem::monomial(alg, d, 1, 0),
            };
            let norm = match side {
                Side::KJ => norm_in_kj(&lambda)?,
                Side::KI => norm_in_ki(&lambda)?,
            };
            if norm == target {
                return Ok(Some(lambda));
            }
        }
    }
    Ok(None)
}

/// The quadratic maps `n ↦ (Σ n_k e_k)²` and `n ↦ w·(Σ n_k e_k)²` and the
/// target, all scaled by one common denominator so that the search runs on
/// integer vectors.
struct IntForms {
    // [k][l] -> coordinate vector
    square: Vec<Vec<Vec<i128>>>,
    twisted: Vec<Vec<Vec<i128>>>,
    target: Vec<i128>,
}

impl IntForms {
    fn new(basis: &[NFElem], w: &NFElem, target: &NFElem) -> Self {
        let prods: Vec<Vec<NFElem>> = basis.iter().map(|x| basis.iter().map(|y| x * y).collect()).collect();
        let tw: Vec<Vec<NFElem>> = prods.iter().map(|row| row.iter().map(|p| p * w).collect()).collect();
        let mut den = BigInt::one();
        let all = prods.iter().chain(&tw).flatten().chain(std::iter::once(target));
        for e in all {
            for c in e.coeffs() {
                den = den.lcm(c.denom());
            }
        }
        let scale = |e: &NFElem| -> Vec<i128> {
            e.coeffs()
                .iter()
                .map(|c| (c.numer() * (&den / c.denom())).to_i128().expect("search coordinates fit in i128"))
                .collect()
        };
        IntForms {
            square: prods.iter().map(|row| row.iter().map(scale).collect()).collect(),
            twisted: tw.iter().map(|row| row.iter().map(scale).collect()).collect(),
            target: scale(target),
        }
    }

    fn eval(&self, form: &[Vec<Vec<i128>>], n: &[i64]) -> Vec<i128> {
        let mut out = vec![0i128; self.target.len()];
        for (k, &nk) in n.iter().enumerate() {
            if nk == 0 {
                continue;
            }
            for (l, &nl) in n.iter().enumerate() {
                if nl == 0 {
                    continue;
                }
                let f = (nk * nl) as i128;
                for (o, v) in out.iter_mut().zip(&form[k][l]) {
                    *o += f * v;
                }
            }
        }
        out
    }
}

fn combine(basis: &[NFElem], n: &[i64]) -> NFElem {
    basis.iter().zip(n).fold(NFElem::zero(basis[0].field()), |acc, (e, &v)| &acc + &e.scale(&int(v)))
}

/// All integer vectors with entries in `[−bound, bound]`, first coordinate
/// most significant, each coordinate running `0, 1, −1, 2, −2, …`.
fn enumerate_box(len: usize, bound: i64) -> Vec<Vec<i64>> {
    let vals: Vec<i64> = std::iter::once(0).chain((1..=bound).flat_map(|v| [v, -v])).collect();
    let mut out: Vec<Vec<i64>> = vec![Vec::new()];
    for _ in 0..len {
        out = out.iter().flat_map(|prefix| vals.iter().map(move |&v| {
            let mut p = prefix.clone();
            p.push(v);
            p
        })).collect();
    }
    out
}
