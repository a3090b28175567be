use std::collections::{BTreeMap, HashMap};
use std::sync::Mutex;

use crate::algebra::{LinearAut, QAlgebra};
use crate::exact::Rational;
use crate::factorset::{verify_abelian_general, AbelianFactorSet, FactorSetError};

/// `A(x₁,…,x_r; σ̃; u)` built from a verified abelian factor set.
pub struct TwistedRing<A: QAlgebra> {
    alg: A,
    fs: AbelianFactorSet<A::Elem>,
    // σ̃₁^{e₁}∘⋯∘σ̃_r^{e_r}
    conj: Mutex<HashMap<Vec<u32>, LinearAut>>,
    // x^e · x_k = c · x^{e + ε_k}
    step: Mutex<HashMap<(Vec<u32>, usize), A::Elem>>,
}

/// `Σ a_e x^e`, no zero coefficients stored.
#[derive(Clone, Debug, PartialEq)]
pub struct TwistedElem<E> {
    terms: BTreeMap<Vec<u32>, E>,
}

impl<E> TwistedElem<E> {
    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &E)> {
        self.terms.iter()
    }

    pub fn coeff(&self, e: &[u32]) -> Option<&E> {
        self.terms.get(e)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn support(&self) -> Vec<Vec<u32>> {
        self.terms.keys().cloned().collect()
    }
}

impl<A: QAlgebra> TwistedRing<A> {
    /// Checks every relation of the factor set first.
    pub fn new(alg: A, fs: AbelianFactorSet<A::Elem>) -> Result<Self, FactorSetError> {
        let report = verify_abelian_general(&alg, &fs)?;
        if !report.passed() {
            return Err(FactorSetError::Verification(report));
        }
        Ok(TwistedRing { alg, fs, conj: Mutex::new(HashMap::new()), step: Mutex::new(HashMap::new()) })
    }

    pub fn algebra(&self) -> &A {
        &self.alg
    }

    pub fn factor_set(&self) -> &AbelianFactorSet<A::Elem> {
        &self.fs
    }

    pub fn r(&self) -> usize {
        self.fs.r()
    }

    /// `n = n₁⋯n_r`.
    pub fn n(&self) -> u64 {
        self.fs.n.iter().map(|&k| k as u64).product()
    }

    pub fn zero(&self) -> TwistedElem<A::Elem> {
        TwistedElem { terms: BTreeMap::new() }
    }

    pub fn monomial(&self, a: &A::Elem, e: &[u32]) -> TwistedElem<A::Elem> {
        assert_eq!(e.len(), self.r());
        let mut terms = BTreeMap::new();
        if !self.alg.is_zero(a) {
            terms.insert(e.to_vec(), a.clone());
        }
        TwistedElem { terms }
    }

    pub fn constant(&self, a: &A::Elem) -> TwistedElem<A::Elem> {
        self.monomial(a, &vec![0; self.r()])
    }

    pub fn one(&self) -> TwistedElem<A::Elem> {
        self.constant(&self.alg.one())
    }

    /// The indeterminate `x_i` (0-based).
    pub fn x(&self, i: usize) -> TwistedElem<A::Elem> {
        let mut e = vec![0; self.r()];
        e[i] = 1;
        self.monomial(&self.alg.one(), &e)
    }

    pub fn from_terms(&self, terms: impl IntoIterator<Item = (Vec<u32>, A::Elem)>) -> TwistedElem<A::Elem> {
        terms.into_iter().fold(self.zero(), |acc, (e, a)| self.add(&acc, &self.monomial(&a, &e)))
    }

    fn accumulate(&self, terms: &mut BTreeMap<Vec<u32>, A::Elem>, e: Vec<u32>, a: A::Elem) {
        let sum = match terms.remove(&e) {
            Some(old) => self.alg.add(&old, &a),
            None => a,
        };
        if !self.alg.is_zero(&sum) {
            terms.insert(e, sum);
        }
    }

    pub fn add(&self, x: &TwistedElem<A::Elem>, y: &TwistedElem<A::Elem>) -> TwistedElem<A::Elem> {
        let mut terms = x.terms.clone();
        for (e, a) in &y.terms {
            self.accumulate(&mut terms, e.clone(), a.clone());
        }
        TwistedElem { terms }
    }

    pub fn neg(&self, x: &TwistedElem<A::Elem>) -> TwistedElem<A::Elem> {
        TwistedElem { terms: x.terms.iter().map(|(e, a)| (e.clone(), self.alg.neg(a))).collect() }
    }

    pub fn sub(&self, x: &TwistedElem<A::Elem>, y: &TwistedElem<A::Elem>) -> TwistedElem<A::Elem> {
        self.add(x, &self.neg(y))
    }

    pub fn scale(&self, x: &TwistedElem<A::Elem>, q: &Rational) -> TwistedElem<A::Elem> {
        let terms = x.terms.iter().map(|(e, a)| (e.clone(), self.alg.scale(a, q))).filter(|(_, a)| !self.alg.is_zero(a));
        TwistedElem { terms: terms.collect() }
    }

    /// `σ̃₁^{e₁}∘⋯∘σ̃_r^{e_r}`, the map `b ↦ x^e b x^{−e}` on `A`.
    pub fn conj_map(&self, e: &[u32]) -> LinearAut {
        if let Some(m) = self.conj.lock().unwrap().get(e) {
            return m.clone();
        }
        let m = e
            .iter()
            .zip(&self.fs.sigma)
            .fold(LinearAut::identity(self.alg.dim()), |acc, (&k, s)| acc.compose(&s.pow(k)));
        self.conj.lock().unwrap().insert(e.to_vec(), m.clone());
        m
    }

    // x_j^m x_k = P x_k x_j^m with P = σ̃_j^{m−1}(u_jk)⋯σ̃_j(u_jk)u_jk
    fn swap_factor(&self, j: usize, k: usize, m: u32) -> A::Elem {
        let s = &self.fs.sigma[j];
        let mut p = self.alg.one();
        let mut cur = self.fs.u[j][k].clone();
        for _ in 0..m {
            p = self.alg.mul(&cur, &p);
            cur = s.apply(&self.alg, &cur);
        }
        p
    }

    /// `c` with `x^e · x_k = c · x^{e+ε_k}`.
    fn step_factor(&self, e: &[u32], k: usize) -> A::Elem {
        let key = (e.to_vec(), k);
        if let Some(c) = self.step.lock().unwrap().get(&key) {
            return c.clone();
        }
        let r = self.r();
        let mut q = self.alg.one();
        for j in (k + 1..r).rev() {
            if e[j] > 0 {
                let moved = self.fs.sigma[j].pow(e[j]).apply(&self.alg, &q);
                q = self.alg.mul(&moved, &self.swap_factor(j, k, e[j]));
            }
        }
        let mut prefix = e.to_vec();
        prefix[k + 1..].iter_mut().for_each(|v| *v = 0);
        let c = self.conj_map(&prefix).apply(&self.alg, &q);
        self.step.lock().unwrap().insert(key, c.clone());
        c
    }

    /// `c` with `x^e x^f = c x^{e+f}`.
    pub fn monomial_product(&self, e: &[u32], f: &[u32]) -> A::Elem {
        let mut c = self.alg.one();
        let mut cur = e.to_vec();
        for (k, &fk) in f.iter().enumerate() {
            for _ in 0..fk {
                c = self.alg.mul(&c, &self.step_factor(&cur, k));
                cur[k] += 1;
            }
        }
        c
    }

    /// `(a x^e)(b x^f) = a σ̃^e(b) c(e,f) x^{e+f}`.
    pub fn mul(&self, x: &TwistedElem<A::Elem>, y: &TwistedElem<A::Elem>) -> TwistedElem<A::Elem> {
        let mut terms = BTreeMap::new();
        for (e, a) in &x.terms {
            let conj = self.conj_map(e);
            for (f, b) in &y.terms {
                let coeff = self.alg.mul(&self.alg.mul(a, &conj.apply(&self.alg, b)), &self.monomial_product(e, f));
                let ef: Vec<u32> = e.iter().zip(f).map(|(p, q)| p + q).collect();
                self.accumulate(&mut terms, ef, coeff);
            }
        }
        TwistedElem { terms }
    }

    pub fn pow(&self, x: &TwistedElem<A::Elem>, k: u32) -> TwistedElem<A::Elem> {
        (0..k).fold(self.one(), |acc, _| self.mul(&acc, x))
    }

    pub fn commutator(&self, x: &TwistedElem<A::Elem>, y: &TwistedElem<A::Elem>) -> TwistedElem<A::Elem> {
        self.sub(&self.mul(x, y), &self.mul(y, x))
    }

    pub fn commute(&self, x: &TwistedElem<A::Elem>, y: &TwistedElem<A::Elem>) -> bool {
        self.commutator(x, y).is_zero()
    }
}
