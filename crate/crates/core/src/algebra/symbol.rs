use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use super::qalgebra::QAlgebra;
use super::AlgebraError;
use crate::exact::Rational;
use crate::numfield::{same_field, NFElem, NumberField};

/// The symbol algebra `(a, b / K, ζ)`: generated over `K` by `i, j` with
/// `iⁿ = a`, `jⁿ = b` and `ji = ζij`.
#[derive(Debug)]
pub struct SymbolAlgebra {
    field: Arc<NumberField>,
    n: usize,
    zeta: NFElem,
    a: NFElem,
    b: NFElem,
    // zeta_pows[k] = ζ^k for k < n
    zeta_pows: Vec<NFElem>,
}

impl SymbolAlgebra {
    pub fn new(field: &Arc<NumberField>, n: usize, zeta: NFElem, a: NFElem, b: NFElem) -> Result<Arc<Self>, AlgebraError> {
        if n < 2 {
            return Err(AlgebraError::BadSymbol("degree must be at least 2"));
        }
        if [&zeta, &a, &b].iter().any(|x| !same_field(x.field(), field)) {
            return Err(AlgebraError::BadSymbol("parameters must lie in the base field"));
        }
        if a.is_zero() || b.is_zero() {
            return Err(AlgebraError::BadSymbol("a and b must be nonzero"));
        }
        let mut zeta_pows = vec![NFElem::one(field)];
        for k in 1..n {
            let z = &zeta_pows[k - 1] * &zeta;
            if z.is_one() {
                return Err(AlgebraError::BadSymbol("ζ is not a primitive root of unity"));
            }
            zeta_pows.push(z);
        }
        if !(&zeta_pows[n - 1] * &zeta).is_one() {
            return Err(AlgebraError::BadSymbol("ζⁿ ≠ 1"));
        }
        Ok(Arc::new(SymbolAlgebra { field: field.clone(), n, zeta, a, b, zeta_pows }))
    }

    /// `(a, b / K)` with `ζ = −1`.
    pub fn quaternion(field: &Arc<NumberField>, a: NFElem, b: NFElem) -> Result<Arc<Self>, AlgebraError> {
        Self::new(field, 2, -NFElem::one(field), a, b)
    }

    pub fn field(&self) -> &Arc<NumberField> {
        &self.field
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn zeta(&self) -> &NFElem {
        &self.zeta
    }

    pub fn a(&self) -> &NFElem {
        &self.a
    }

    pub fn b(&self) -> &NFElem {
        &self.b
    }

    fn zeta_pow(&self, k: usize) -> &NFElem {
        &self.zeta_pows[k % self.n]
    }
}

/// Element `Σ c_{st} i^s j^t` of a symbol algebra.
#[derive(Clone)]
pub struct AlgElem {
    alg: Arc<SymbolAlgebra>,
    // index s·n + t
    coeffs: Vec<NFElem>,
}

impl AlgElem {
    pub fn zero(alg: &Arc<SymbolAlgebra>) -> Self {
        AlgElem { alg: alg.clone(), coeffs: vec![NFElem::zero(&alg.field); alg.n * alg.n] }
    }

    /// `c·i^s·j^t`.
    pub fn monomial(alg: &Arc<SymbolAlgebra>, c: NFElem, s: usize, t: usize) -> Self {
        let mut x = Self::zero(alg);
        x.coeffs[s * alg.n + t] = c;
        x
    }

    pub fn from_base(alg: &Arc<SymbolAlgebra>, c: NFElem) -> Self {
        Self::monomial(alg, c, 0, 0)
    }

    pub fn one(alg: &Arc<SymbolAlgebra>) -> Self {
        Self::from_base(alg, NFElem::one(&alg.field))
    }

    pub fn i(alg: &Arc<SymbolAlgebra>) -> Self {
        Self::monomial(alg, NFElem::one(&alg.field), 1, 0)
    }

    pub fn j(alg: &Arc<SymbolAlgebra>) -> Self {
        Self::monomial(alg, NFElem::one(&alg.field), 0, 1)
    }

    /// `k = ij`.
    pub fn k(alg: &Arc<SymbolAlgebra>) -> Self {
        Self::monomial(alg, NFElem::one(&alg.field), 1, 1)
    }

    /// Element with `coeffs[s][t]` on `i^s j^t`.
    pub fn from_grid(alg: &Arc<SymbolAlgebra>, grid: Vec<Vec<NFElem>>) -> Result<Self, AlgebraError> {
        if grid.len() != alg.n || grid.iter().any(|r| r.len() != alg.n) {
            return Err(AlgebraError::Shape);
        }
        if grid.iter().flatten().any(|c| !same_field(c.field(), &alg.field)) {
            return Err(AlgebraError::BadSymbol("coefficient outside the base field"));
        }
        Ok(AlgElem { alg: alg.clone(), coeffs: grid.into_iter().flatten().collect() })
    }

    pub fn algebra(&self) -> &Arc<SymbolAlgebra> {
        &self.alg
    }

    pub fn coeff(&self, s: usize, t: usize) -> &NFElem {
        &self.coeffs[s * self.alg.n + t]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(NFElem::is_zero)
    }

    /// `Some(c)` when the element lies in `K`.
    pub fn as_base(&self) -> Option<NFElem> {
        self.coeffs[1..].iter().all(NFElem::is_zero).then(|| self.coeffs[0].clone())
    }

    /// True when only `i^0 j^t` carry coefficients.
    pub fn in_kj(&self) -> bool {
        let n = self.alg.n;
        (0..n * n).all(|k| k < n || self.coeffs[k].is_zero())
    }

    /// True when only `i^s j^0` carry coefficients.
    pub fn in_ki(&self) -> bool {
        let n = self.alg.n;
        (0..n * n).all(|k| k % n == 0 || self.coeffs[k].is_zero())
    }

    pub fn scale(&self, c: &NFElem) -> Self {
        AlgElem { alg: self.alg.clone(), coeffs: self.coeffs.iter().map(|x| x * c).collect() }
    }

    pub fn map_coeffs(&self, f: impl Fn(&NFElem) -> NFElem) -> Self {
        AlgElem { alg: self.alg.clone(), coeffs: self.coeffs.iter().map(f).collect() }
    }

    pub fn inv(&self) -> Result<AlgElem, AlgebraError> {
        if self.is_zero() {
            return Err(AlgebraError::NotInvertible);
        }
        self.alg.inv(self).ok_or(AlgebraError::NotInvertible)
    }

    pub fn pow(&self, e: u64) -> AlgElem {
        self.alg.pow(self, e)
    }
}

impl PartialEq for AlgElem {
    fn eq(&self, o: &Self) -> bool {
        Arc::ptr_eq(&self.alg, &o.alg) && self.coeffs == o.coeffs
    }
}

impl Eq for AlgElem {}

impl Add for &AlgElem {
    type Output = AlgElem;
    fn add(self, o: &AlgElem) -> AlgElem {
        AlgElem { alg: self.alg.clone(), coeffs: self.coeffs.iter().zip(&o.coeffs).map(|(a, b)| a + b).collect() }
    }
}

impl Sub for &AlgElem {
    type Output = AlgElem;
    fn sub(self, o: &AlgElem) -> AlgElem {
        AlgElem { alg: self.alg.clone(), coeffs: self.coeffs.iter().zip(&o.coeffs).map(|(a, b)| a - b).collect() }
    }
}

impl Neg for &AlgElem {
    type Output = AlgElem;
    fn neg(self) -> AlgElem {
        AlgElem { alg: self.alg.clone(), coeffs: self.coeffs.iter().map(|a| -a).collect() }
    }
}

impl Mul for &AlgElem {
    type Output = AlgElem;
    /// `(c i^s j^t)(d i^u j^v) = cd·ζ^{tu}·i^{s+u} j^{t+v}`, then `iⁿ = a`, `jⁿ = b`.
    fn mul(self, o: &AlgElem) -> AlgElem {
        assert!(Arc::ptr_eq(&self.alg, &o.alg), "operands in different symbol algebras");
        let alg = &self.alg;
        let n = alg.n;
        let mut out = AlgElem::zero(alg);
        for (x, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let (s, t) = (x / n, x % n);
            for (y, d) in o.coeffs.iter().enumerate() {
                if d.is_zero() {
                    continue;
                }
                let (u, v) = (y / n, y % n);
                let mut coef = c * d;
                if (t * u) % n != 0 {
                    coef = &coef * alg.zeta_pow(t * u);
                }
                if s + u >= n {
                    coef = &coef * &alg.a;
                }
                if t + v >= n {
                    coef = &coef * &alg.b;
                }
                let idx = ((s + u) % n) * n + (t + v) % n;
                out.coeffs[idx] = &out.coeffs[idx] + &coef;
            }
        }
        out
    }
}

macro_rules! owned_binop {
    ($tr:ident, $m:ident) => {
        impl $tr for AlgElem {
            type Output = AlgElem;
            fn $m(self, o: AlgElem) -> AlgElem {
                (&self).$m(&o)
            }
        }
        impl $tr<&AlgElem> for AlgElem {
            type Output = AlgElem;
            fn $m(self, o: &AlgElem) -> AlgElem {
                (&self).$m(o)
            }
        }
    };
}
owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);

impl fmt::Debug for AlgElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.alg.n;
        let mut parts = Vec::new();
        for (x, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let (s, t) = (x / n, x % n);
            let mono = match (s, t) {
                (0, 0) => String::new(),
                _ => {
                    let p = |g: &str, e: usize| match e {
                        0 => String::new(),
                        1 => g.to_string(),
                        _ => format!("{g}^{e}"),
                    };
                    format!("·{}{}", p("i", s), p("j", t))
                }
            };
            parts.push(format!("({c}){mono}"));
        }
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

impl QAlgebra for Arc<SymbolAlgebra> {
    type Elem = AlgElem;

    fn dim(&self) -> usize {
        self.n * self.n * self.field.degree()
    }

    fn coords(&self, x: &AlgElem) -> Vec<Rational> {
        x.coeffs.iter().flat_map(|c| c.coeffs().to_vec()).collect()
    }

    fn from_coords(&self, c: &[Rational]) -> AlgElem {
        let d = self.field.degree();
        AlgElem {
            alg: self.clone(),
            coeffs: c.chunks(d).map(|ch| NFElem::new(&self.field, ch.to_vec()).expect("chunk length")).collect(),
        }
    }

    fn one(&self) -> AlgElem {
        AlgElem::one(self)
    }

    fn mul(&self, x: &AlgElem, y: &AlgElem) -> AlgElem {
        x * y
    }

    fn generators(&self) -> Vec<AlgElem> {
        vec![AlgElem::from_base(self, NFElem::gen(&self.field)), AlgElem::i(self), AlgElem::j(self)]
    }

    fn add(&self, x: &AlgElem, y: &AlgElem) -> AlgElem {
        x + y
    }

    fn sub(&self, x: &AlgElem, y: &AlgElem) -> AlgElem {
        x - y
    }

    fn neg(&self, x: &AlgElem) -> AlgElem {
        -x
    }

    fn is_zero(&self, x: &AlgElem) -> bool {
        x.is_zero()
    }

    fn scale(&self, x: &AlgElem, q: &Rational) -> AlgElem {
        x.map_coeffs(|c| c.scale(q))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, rat};
    use crate::numfield::build_biquadratic;

    fn quaternion() -> Arc<SymbolAlgebra> {
        let bq = build_biquadratic();
        let k = bq.field.clone();
        let s3 = bq.sqrt3.value.clone();
        let s7 = bq.sqrtm7.value.clone();
        let a = &NFElem::from_rational(&k, int(3)) + &s3;
        let b = (&NFElem::from_rational(&k, int(-7)) + &s7).scale(&rat(1, 2));
        SymbolAlgebra::quaternion(&k, a, b).unwrap()
    }

    #[test]
    fn defining_relations() {
        let d = quaternion();
        let i = AlgElem::i(&d);
        let j = AlgElem::j(&d);
        assert_eq!(&i * &i, AlgElem::from_base(&d, d.a().clone()));
        assert_eq!(&j * &i, -&(&i * &j));
        let k = AlgElem::k(&d);
        let ab = d.a() * d.b();
        assert_eq!(&k * &k, AlgElem::from_base(&d, -&ab));
        let x = &i + &AlgElem::from_base(&d, NFElem::gen(d.field()));
        assert_eq!(&AlgElem::one(&d) * &x, x);
    }

    #[test]
    fn inverse_in_division_algebra() {
        let d = quaternion();
        let x = &(&AlgElem::i(&d) + &AlgElem::j(&d)) + &AlgElem::one(&d);
        let xi = x.inv().unwrap();
        assert_eq!(&x * &xi, AlgElem::one(&d));
        assert_eq!(AlgElem::zero(&d).inv().err(), Some(AlgebraError::NotInvertible));
    }

    #[test]
    fn bad_root_of_unity_rejected() {
        let bq = build_biquadratic();
        let k = bq.field.clone();
        let one = NFElem::one(&k);
        assert!(SymbolAlgebra::new(&k, 2, one.clone(), one.clone(), one.clone()).is_err());
        assert!(SymbolAlgebra::new(&k, 2, -&one, NFElem::zero(&k), one.clone()).is_err());
    }
}
