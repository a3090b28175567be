use std::fmt;
use std::sync::Arc;

use num_traits::{One, Zero};

use crate::exact::{QMatrix, Rational};
use crate::numfield::{NFAutomorphism, NFElem, NumberField, RelAutomorphism, RelElem, RelativeExtension};

/// A finite-dimensional associative Q-algebra with a fixed Q-basis.
///
/// Factor-set verification and twisted rings only need this interface, so
/// symbol algebras, number fields, relative extensions and scalar extensions
/// all share one implementation of those layers.
pub trait QAlgebra {
    type Elem: Clone + PartialEq + fmt::Debug;

    fn dim(&self) -> usize;
    fn coords(&self, x: &Self::Elem) -> Vec<Rational>;
    fn from_coords(&self, c: &[Rational]) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn mul(&self, x: &Self::Elem, y: &Self::Elem) -> Self::Elem;
    /// Generators as a Q-algebra; automorphisms and centrality are decided on these.
    fn generators(&self) -> Vec<Self::Elem>;

    fn zero(&self) -> Self::Elem {
        self.from_coords(&vec![Rational::zero(); self.dim()])
    }

    fn add(&self, x: &Self::Elem, y: &Self::Elem) -> Self::Elem {
        let c: Vec<Rational> = self.coords(x).iter().zip(self.coords(y)).map(|(a, b)| a + b).collect();
        self.from_coords(&c)
    }

    fn sub(&self, x: &Self::Elem, y: &Self::Elem) -> Self::Elem {
        let c: Vec<Rational> = self.coords(x).iter().zip(self.coords(y)).map(|(a, b)| a - b).collect();
        self.from_coords(&c)
    }

    fn neg(&self, x: &Self::Elem) -> Self::Elem {
        let c: Vec<Rational> = self.coords(x).iter().map(|a| -a).collect();
        self.from_coords(&c)
    }

    fn scale(&self, x: &Self::Elem, q: &Rational) -> Self::Elem {
        let c: Vec<Rational> = self.coords(x).iter().map(|a| a * q).collect();
        self.from_coords(&c)
    }

    fn is_zero(&self, x: &Self::Elem) -> bool {
        self.coords(x).iter().all(Zero::is_zero)
    }

    fn from_rational(&self, q: &Rational) -> Self::Elem {
        self.scale(&self.one(), q)
    }

    fn basis_elem(&self, k: usize) -> Self::Elem {
        let mut c = vec![Rational::zero(); self.dim()];
        c[k] = Rational::one();
        self.from_coords(&c)
    }

    fn basis(&self) -> Vec<Self::Elem> {
        (0..self.dim()).map(|k| self.basis_elem(k)).collect()
    }

    /// Matrix of `y ↦ x·y`.
    fn left_mul_matrix(&self, x: &Self::Elem) -> QMatrix {
        let cols: Vec<Vec<Rational>> = self.basis().iter().map(|b| self.coords(&self.mul(x, b))).collect();
        QMatrix::from_columns(self.dim(), &cols)
    }

    /// Matrix of `y ↦ y·x`.
    fn right_mul_matrix(&self, x: &Self::Elem) -> QMatrix {
        let cols: Vec<Vec<Rational>> = self.basis().iter().map(|b| self.coords(&self.mul(b, x))).collect();
        QMatrix::from_columns(self.dim(), &cols)
    }

    /// Two-sided inverse, `None` for zero divisors.
    fn inv(&self, x: &Self::Elem) -> Option<Self::Elem> {
        let sol = self.left_mul_matrix(x).solve(&self.coords(&self.one()))?;
        let y = self.from_coords(&sol);
        (self.mul(&y, x) == self.one()).then_some(y)
    }

    fn pow(&self, x: &Self::Elem, e: u64) -> Self::Elem {
        (0..e).fold(self.one(), |acc, _| self.mul(&acc, x))
    }

    /// `x·y − y·x`.
    fn commutator(&self, x: &Self::Elem, y: &Self::Elem) -> Self::Elem {
        self.sub(&self.mul(x, y), &self.mul(y, x))
    }
}

/// Q-linear self-map of an algebra, stored as a matrix on the Q-basis.
///
/// Algebra automorphisms in the factor-set layer are of this form; equality
/// is equality of matrices, hence of maps.
#[derive(Clone, PartialEq, Eq)]
pub struct LinearAut {
    matrix: QMatrix,
}

impl LinearAut {
    pub fn from_matrix(matrix: QMatrix) -> Self {
        assert_eq!(matrix.rows(), matrix.cols());
        LinearAut { matrix }
    }

    /// Map with the given images of the basis vectors.
    pub fn from_basis_images<A: QAlgebra>(alg: &A, images: &[A::Elem]) -> Self {
        let cols: Vec<Vec<Rational>> = images.iter().map(|x| alg.coords(x)).collect();
        LinearAut { matrix: QMatrix::from_columns(alg.dim(), &cols) }
    }

    pub fn from_fn<A: QAlgebra>(alg: &A, f: impl Fn(&A::Elem) -> A::Elem) -> Self {
        let imgs: Vec<A::Elem> = alg.basis().iter().map(f).collect();
        Self::from_basis_images(alg, &imgs)
    }

    pub fn identity(dim: usize) -> Self {
        LinearAut { matrix: QMatrix::identity(dim) }
    }

    pub fn matrix(&self) -> &QMatrix {
        &self.matrix
    }

    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }

    pub fn apply<A: QAlgebra>(&self, alg: &A, x: &A::Elem) -> A::Elem {
        alg.from_coords(&self.matrix.mul_vec(&alg.coords(x)))
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &LinearAut) -> LinearAut {
        LinearAut { matrix: self.matrix.mul(&other.matrix) }
    }

    pub fn pow(&self, e: u32) -> LinearAut {
        (0..e).fold(Self::identity(self.dim()), |acc, _| acc.compose(self))
    }

    pub fn is_identity(&self) -> bool {
        self.matrix == QMatrix::identity(self.dim())
    }

    /// Inverse map, `None` if singular.
    pub fn inverse(&self) -> Option<LinearAut> {
        let n = self.dim();
        let cols = (0..n)
            .map(|k| {
                let mut e = vec![Rational::zero(); n];
                e[k] = Rational::one();
                self.matrix.solve(&e)
            })
            .collect::<Option<Vec<_>>>()?;
        Some(LinearAut { matrix: QMatrix::from_columns(n, &cols) })
    }

    /// `ι_c: x ↦ c·x·c⁻¹`, `None` when `c` is not invertible.
    pub fn inner<A: QAlgebra>(alg: &A, c: &A::Elem) -> Option<LinearAut> {
        let ci = alg.inv(c)?;
        let m = alg.left_mul_matrix(c).mul(&alg.right_mul_matrix(&ci));
        Some(LinearAut { matrix: m })
    }

    /// Multiplicativity on all pairs of basis vectors.
    pub fn is_algebra_hom<A: QAlgebra>(&self, alg: &A) -> bool {
        let basis = alg.basis();
        let imgs: Vec<A::Elem> = basis.iter().map(|b| self.apply(alg, b)).collect();
        self.apply(alg, &alg.one()) == alg.one()
            && basis.iter().enumerate().all(|(i, x)| {
                basis.iter().enumerate().all(|(j, y)| self.apply(alg, &alg.mul(x, y)) == alg.mul(&imgs[i], &imgs[j]))
            })
    }
}

impl fmt::Debug for LinearAut {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LinearAut(dim {})", self.dim())
    }
}

impl QAlgebra for Arc<NumberField> {
    type Elem = NFElem;

    fn dim(&self) -> usize {
        self.degree()
    }

    fn coords(&self, x: &NFElem) -> Vec<Rational> {
        x.coeffs().to_vec()
    }

    fn from_coords(&self, c: &[Rational]) -> NFElem {
        NFElem::new(self, c.to_vec()).expect("coordinate length")
    }

    fn one(&self) -> NFElem {
        NFElem::one(self)
    }

    fn mul(&self, x: &NFElem, y: &NFElem) -> NFElem {
        x * y
    }

    fn generators(&self) -> Vec<NFElem> {
        vec![NFElem::gen(self)]
    }

    fn inv(&self, x: &NFElem) -> Option<NFElem> {
        x.inv().ok()
    }
}

impl QAlgebra for Arc<RelativeExtension> {
    type Elem = RelElem;

    fn dim(&self) -> usize {
        self.abs_degree()
    }

    fn coords(&self, x: &RelElem) -> Vec<Rational> {
        x.q_coords()
    }

    fn from_coords(&self, c: &[Rational]) -> RelElem {
        RelElem::from_q_coords(self, c)
    }

    fn one(&self) -> RelElem {
        RelElem::one(self)
    }

    fn mul(&self, x: &RelElem, y: &RelElem) -> RelElem {
        x * y
    }

    fn generators(&self) -> Vec<RelElem> {
        vec![RelElem::from_base(self, NFElem::gen(self.base())), RelElem::gen(self)]
    }
}

/// Field automorphism as a linear map on the power basis.
pub fn field_aut_linear(s: &NFAutomorphism) -> LinearAut {
    LinearAut::from_matrix(s.matrix().clone())
}

pub fn rel_aut_linear(s: &RelAutomorphism) -> LinearAut {
    LinearAut::from_matrix(s.matrix())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::int;
    use crate::numfield::{build_biquadratic, build_cubic_tower};

    #[test]
    fn field_inverse_and_inner_maps() {
        let b = build_biquadratic();
        let k = b.field.clone();
        let x = NFElem::from_ints(&k, &[1, 2, 0, -1]);
        assert_eq!(k.mul(&x, &k.inv(&x).unwrap()), k.one());
        let inner = LinearAut::inner(&k, &x).unwrap();
        assert!(inner.is_identity());
        let s1 = field_aut_linear(&b.sigma1);
        assert!(s1.is_algebra_hom(&k));
        assert!(s1.pow(2).is_identity());
        assert_eq!(s1.inverse().unwrap(), s1);
    }

    #[test]
    fn relative_extension_as_algebra() {
        let t = build_cubic_tower();
        let l = t.ext.clone();
        assert_eq!(l.dim(), 9);
        let tau = rel_aut_linear(&t.tau);
        assert!(tau.is_algebra_hom(&l));
        assert!(tau.pow(3).is_identity());
        let x = l.add(&t.beta, &l.from_rational(&int(2)));
        let xi = l.inv(&x).unwrap();
        assert_eq!(l.mul(&x, &xi), l.one());
    }
}
