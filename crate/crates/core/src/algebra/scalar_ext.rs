use std::fmt;

use num_traits::Zero;

use super::qalgebra::{LinearAut, QAlgebra};
use crate::exact::{int, QMatrix, Rational};

/// `A ⊗_Q Q(√d)` for a squarefree `d`, elements `x + y√d`.
///
/// The new square root is central. Automorphisms of `A` lift as
/// `φ ⊗ id`, and `id ⊗ (√d ↦ −√d)` is available as [`ScalarExt::conj`].
#[derive(Clone)]
pub struct ScalarExt<A: QAlgebra> {
    inner: A,
    d: i64,
}

/// `x + y√d`.
#[derive(Clone, PartialEq)]
pub struct SxElem<E> {
    pub x: E,
    pub y: E,
}

impl<E: fmt::Debug> fmt::Debug for SxElem<E> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{:?}] + [{:?}]·√d", self.x, self.y)
    }
}

impl<A: QAlgebra> ScalarExt<A> {
    pub fn new(inner: A, d: i64) -> Self {
        ScalarExt { inner, d }
    }

    pub fn inner(&self) -> &A {
        &self.inner
    }

    pub fn d(&self) -> i64 {
        self.d
    }

    /// `x ⊗ 1`.
    pub fn embed(&self, x: &A::Elem) -> SxElem<A::Elem> {
        SxElem { x: x.clone(), y: self.inner.zero() }
    }

    /// `1 ⊗ √d`.
    pub fn sqrt(&self) -> SxElem<A::Elem> {
        SxElem { x: self.inner.zero(), y: self.inner.one() }
    }

    /// `φ ⊗ id`.
    pub fn lift(&self, phi: &LinearAut) -> LinearAut {
        let n = self.inner.dim();
        let mut m = QMatrix::zeros(2 * n, 2 * n);
        for r in 0..n {
            for c in 0..n {
                let v = phi.matrix()[(r, c)].clone();
                if !v.is_zero() {
                    m[(r, c)] = v.clone();
                    m[(n + r, n + c)] = v;
                }
            }
        }
        LinearAut::from_matrix(m)
    }

    /// `id ⊗ (√d ↦ −√d)`.
    pub fn conj(&self) -> LinearAut {
        let n = self.inner.dim();
        let mut m = QMatrix::identity(2 * n);
        for k in n..2 * n {
            m[(k, k)] = int(-1);
        }
        LinearAut::from_matrix(m)
    }
}

impl<A: QAlgebra> QAlgebra for ScalarExt<A> {
    type Elem = SxElem<A::Elem>;

    fn dim(&self) -> usize {
        2 * self.inner.dim()
    }

    fn coords(&self, e: &Self::Elem) -> Vec<Rational> {
        let mut c = self.inner.coords(&e.x);
        c.extend(self.inner.coords(&e.y));
        c
    }

    fn from_coords(&self, c: &[Rational]) -> Self::Elem {
        let n = self.inner.dim();
        SxElem { x: self.inner.from_coords(&c[..n]), y: self.inner.from_coords(&c[n..]) }
    }

    fn one(&self) -> Self::Elem {
        self.embed(&self.inner.one())
    }

    fn mul(&self, p: &Self::Elem, q: &Self::Elem) -> Self::Elem {
        let a = &self.inner;
        let yy = a.scale(&a.mul(&p.y, &q.y), &int(self.d));
        SxElem {
            x: a.add(&a.mul(&p.x, &q.x), &yy),
            y: a.add(&a.mul(&p.x, &q.y), &a.mul(&p.y, &q.x)),
        }
    }

    fn generators(&self) -> Vec<Self::Elem> {
        let mut g: Vec<Self::Elem> = self.inner.generators().iter().map(|x| self.embed(x)).collect();
        g.push(self.sqrt());
        g
    }

    fn add(&self, p: &Self::Elem, q: &Self::Elem) -> Self::Elem {
        SxElem { x: self.inner.add(&p.x, &q.x), y: self.inner.add(&p.y, &q.y) }
    }

    fn sub(&self, p: &Self::Elem, q: &Self::Elem) -> Self::Elem {
        SxElem { x: self.inner.sub(&p.x, &q.x), y: self.inner.sub(&p.y, &q.y) }
    }

    fn neg(&self, p: &Self::Elem) -> Self::Elem {
        SxElem { x: self.inner.neg(&p.x), y: self.inner.neg(&p.y) }
    }

    fn scale(&self, p: &Self::Elem, q: &Rational) -> Self::Elem {
        SxElem { x: self.inner.scale(&p.x, q), y: self.inner.scale(&p.y, q) }
    }

    fn is_zero(&self, p: &Self::Elem) -> bool {
        self.inner.is_zero(&p.x) && self.inner.is_zero(&p.y)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::build_quaternion_example;

    #[test]
    fn sqrt_is_central_and_squares_to_d() {
        let ex = build_quaternion_example();
        let e = ScalarExt::new(ex.alg.clone(), 37);
        let s = e.sqrt();
        assert_eq!(e.mul(&s, &s), e.from_rational(&int(37)));
        for g in e.generators() {
            assert!(e.is_zero(&e.commutator(&s, &g)));
        }
        assert_eq!(e.dim(), 32);
    }

    #[test]
    fn lifted_automorphisms_and_conjugation() {
        let ex = build_quaternion_example();
        let e = ScalarExt::new(ex.alg.clone(), 37);
        let s1 = e.lift(&ex.sigma1_tilde.to_linear());
        let c = e.conj();
        assert_eq!(c.apply(&e, &e.sqrt()), e.neg(&e.sqrt()));
        assert_eq!(s1.apply(&e, &e.sqrt()), e.sqrt());
        let x = e.embed(&ex.u);
        assert_eq!(c.apply(&e, &x), x);
        assert_eq!(s1.apply(&e, &x), e.embed(&ex.sigma1_tilde.apply(&ex.u)));
        assert_eq!(s1.compose(&c), c.compose(&s1));
    }
}
