use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::NumFieldError;
use crate::exact::{factor_degrees_mod_p, poly_xgcd, QMatrix, Rational, UniPoly};

/// `Q[x]/(f)` for a monic `f`.
///
/// Handles are shared as `Arc<NumberField>`; elements keep a handle to
/// their field so that mixing fields is caught at the operation.
#[derive(Debug)]
pub struct NumberField {
    label: String,
    var: String,
    min_poly: UniPoly,
    degree: usize,
    // powers[k] = x^k mod f for k < 2n - 1
    powers: Vec<Vec<Rational>>,
}

impl NumberField {
    pub fn new(label: &str, var: &str, min_poly: UniPoly) -> Result<Arc<Self>, NumFieldError> {
        let degree = match min_poly.degree() {
            Some(d) if d >= 1 => d,
            _ => return Err(NumFieldError::BadMinPoly("degree must be positive".into())),
        };
        if !min_poly.is_monic() {
            return Err(NumFieldError::BadMinPoly("not monic".into()));
        }
        if degree > 1 {
            if let Some(r) = rational_root(&min_poly) {
                return Err(NumFieldError::BadMinPoly(format!("rational root {r}")));
            }
        }
        let mut powers = Vec::with_capacity(2 * degree);
        let mut cur = vec![Rational::zero(); degree];
        cur[0] = Rational::one();
        for _ in 0..2 * degree - 1 {
            powers.push(cur.clone());
            // multiply by x and reduce with x^n = -(c_0 + ... + c_{n-1} x^{n-1})
            let top = cur[degree - 1].clone();
            for k in (1..degree).rev() {
                cur[k] = cur[k - 1].clone();
            }
            cur[0] = Rational::zero();
            if !top.is_zero() {
                for (k, c) in cur.iter_mut().enumerate() {
                    *c -= &top * min_poly.coeff(k);
                }
            }
        }
        Ok(Arc::new(NumberField { label: label.to_string(), var: var.to_string(), min_poly, degree, powers }))
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn var(&self) -> &str {
        &self.var
    }

    pub fn min_poly(&self) -> &UniPoly {
        &self.min_poly
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Irreducibility certificate: `f mod p` is irreducible of full degree.
    pub fn irreducible_mod(&self, p: u64) -> bool {
        factor_degrees_mod_p(&self.min_poly, p).map(|d| d == vec![self.degree]).unwrap_or(false)
    }
}

/// Same field when the handles coincide or the defining data agrees.
pub fn same_field(a: &NumberField, b: &NumberField) -> bool {
    std::ptr::eq(a, b) || (a.min_poly == b.min_poly && a.label == b.label)
}

fn rational_root(f: &UniPoly) -> Option<Rational> {
    // Clear denominators, then apply the rational root theorem.
    let den = f.coeffs().iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> = f.coeffs().iter().map(|c| (c * Rational::from(den.clone())).to_integer()).collect();
    if ints[0].is_zero() {
        return Some(Rational::zero());
    }
    let divisors = |n: &BigInt| -> Vec<BigInt> {
        let n = n.abs();
        let mut out = Vec::new();
        let mut d = BigInt::one();
        while &d * &d <= n {
            if (&n % &d).is_zero() {
                out.push(d.clone());
                out.push(&n / &d);
            }
            d += 1;
        }
        out
    };
    for p in divisors(&ints[0]) {
        for q in divisors(ints.last().unwrap()) {
            for s in [Rational::new(p.clone(), q.clone()), -Rational::new(p.clone(), q.clone())] {
                if f.eval(&s).is_zero() {
                    return Some(s);
                }
            }
        }
    }
    None
}

/// Element of a number field as coordinates in the power basis.
#[derive(Clone)]
pub struct NFElem {
    field: Arc<NumberField>,
    coeffs: Vec<Rational>,
}

impl NFElem {
    pub fn new(field: &Arc<NumberField>, mut coeffs: Vec<Rational>) -> Result<Self, NumFieldError> {
        if coeffs.len() > field.degree {
            let p = UniPoly::new(coeffs).rem(&field.min_poly).expect("monic modulus");
            coeffs = p.coeffs().to_vec();
        }
        coeffs.resize(field.degree, Rational::zero());
        Ok(NFElem { field: field.clone(), coeffs })
    }

    pub fn from_poly(field: &Arc<NumberField>, p: &UniPoly) -> Self {
        Self::new(field, p.coeffs().to_vec()).expect("reduction cannot fail")
    }

    pub fn from_ints(field: &Arc<NumberField>, c: &[i64]) -> Self {
        Self::from_poly(field, &UniPoly::from_ints(c))
    }

    pub fn from_rational(field: &Arc<NumberField>, q: Rational) -> Self {
        let mut coeffs = vec![Rational::zero(); field.degree];
        coeffs[0] = q;
        NFElem { field: field.clone(), coeffs }
    }

    pub fn zero(field: &Arc<NumberField>) -> Self {
        Self::from_rational(field, Rational::zero())
    }

    pub fn one(field: &Arc<NumberField>) -> Self {
        Self::from_rational(field, Rational::one())
    }

    /// The generator `x mod f`.
    pub fn gen(field: &Arc<NumberField>) -> Self {
        Self::from_poly(field, &UniPoly::x())
    }

    pub fn field(&self) -> &Arc<NumberField> {
        &self.field
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn to_poly(&self) -> UniPoly {
        UniPoly::new(self.coeffs.clone())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(Zero::is_zero)
    }

    /// `Some(q)` when the element is the rational `q`.
    pub fn as_rational(&self) -> Option<Rational> {
        self.coeffs[1..].iter().all(Zero::is_zero).then(|| self.coeffs[0].clone())
    }

    pub fn scale(&self, q: &Rational) -> Self {
        NFElem { field: self.field.clone(), coeffs: self.coeffs.iter().map(|c| c * q).collect() }
    }

    fn check_same(&self, o: &NFElem) {
        assert!(same_field(&self.field, &o.field), "operands live in different number fields");
    }

    pub fn try_mul(&self, o: &NFElem) -> Result<NFElem, NumFieldError> {
        if !same_field(&self.field, &o.field) {
            return Err(NumFieldError::MixedFields);
        }
        Ok(self * o)
    }

    pub fn inv(&self) -> Result<NFElem, NumFieldError> {
        if self.is_zero() {
            return Err(NumFieldError::ZeroInverse);
        }
        let (g, s, _) = poly_xgcd(&self.to_poly(), &self.field.min_poly);
        if g.degree() != Some(0) {
            return Err(NumFieldError::ZeroDivisor);
        }
        Ok(NFElem::from_poly(&self.field, &s))
    }

    pub fn pow(&self, e: i64) -> Result<NFElem, NumFieldError> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut e = e.unsigned_abs();
        let mut acc = NFElem::one(&self.field);
        let mut b = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &b;
            }
            b = &b * &b;
            e >>= 1;
        }
        Ok(acc)
    }

    pub fn div(&self, o: &NFElem) -> Result<NFElem, NumFieldError> {
        Ok(self * &o.inv()?)
    }

    /// Matrix of `y ↦ self·y` on the power basis.
    pub fn mul_matrix(&self) -> QMatrix {
        let n = self.field.degree;
        let cols: Vec<Vec<Rational>> = (0..n)
            .map(|k| {
                let mut e = vec![Rational::zero(); n];
                e[k] = Rational::one();
                (self * &NFElem { field: self.field.clone(), coeffs: e }).coeffs
            })
            .collect();
        QMatrix::from_columns(n, &cols)
    }

    /// Absolute norm, the determinant of multiplication.
    pub fn norm(&self) -> Rational {
        self.mul_matrix().det()
    }

    pub fn trace(&self) -> Rational {
        self.mul_matrix().trace()
    }

    /// Evaluates a rational polynomial at this element.
    pub fn eval_poly(&self, p: &UniPoly) -> NFElem {
        p.coeffs().iter().rev().fold(NFElem::zero(&self.field), |acc, c| {
            let mut r = &acc * self;
            r.coeffs[0] += c;
            r
        })
    }
}

impl PartialEq for NFElem {
    fn eq(&self, o: &Self) -> bool {
        same_field(&self.field, &o.field) && self.coeffs == o.coeffs
    }
}

impl Eq for NFElem {}

impl Add for &NFElem {
    type Output = NFElem;
    fn add(self, o: &NFElem) -> NFElem {
        self.check_same(o);
        NFElem { field: self.field.clone(), coeffs: self.coeffs.iter().zip(&o.coeffs).map(|(a, b)| a + b).collect() }
    }
}

impl Sub for &NFElem {
    type Output = NFElem;
    fn sub(self, o: &NFElem) -> NFElem {
        self.check_same(o);
        NFElem { field: self.field.clone(), coeffs: self.coeffs.iter().zip(&o.coeffs).map(|(a, b)| a - b).collect() }
    }
}

impl Neg for &NFElem {
    type Output = NFElem;
    fn neg(self) -> NFElem {
        NFElem { field: self.field.clone(), coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Mul for &NFElem {
    type Output = NFElem;
    fn mul(self, o: &NFElem) -> NFElem {
        self.check_same(o);
        let n = self.field.degree;
        let mut raw = vec![Rational::zero(); 2 * n - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    raw[i + j] += a * b;
                }
            }
        }
        let mut coeffs = raw[..n].to_vec();
        for (k, c) in raw.iter().enumerate().skip(n) {
            if c.is_zero() {
                continue;
            }
            for (m, p) in self.field.powers[k].iter().enumerate() {
                if !p.is_zero() {
                    coeffs[m] += c * p;
                }
            }
        }
        NFElem { field: self.field.clone(), coeffs }
    }
}

macro_rules! owned_binop {
    ($tr:ident, $m:ident) => {
        impl $tr for NFElem {
            type Output = NFElem;
            fn $m(self, o: NFElem) -> NFElem {
                (&self).$m(&o)
            }
        }
        impl $tr<&NFElem> for NFElem {
            type Output = NFElem;
            fn $m(self, o: &NFElem) -> NFElem {
                (&self).$m(o)
            }
        }
    };
}
owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);

impl Neg for NFElem {
    type Output = NFElem;
    fn neg(self) -> NFElem {
        -&self
    }
}

impl fmt::Display for NFElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_poly().display_with(&self.field.var))
    }
}

impl fmt::Debug for NFElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[{}]", self.field.label, self)
    }
}

/// A named element whose square is a known rational, checked on creation.
#[derive(Clone, Debug)]
pub struct SubfieldElement {
    pub tag: String,
    pub value: NFElem,
    pub square: Rational,
}

impl SubfieldElement {
    pub fn new(tag: &str, value: NFElem, square: Rational) -> Result<Self, NumFieldError> {
        if (&value * &value).as_rational().as_ref() != Some(&square) {
            return Err(NumFieldError::TagMismatch(tag.to_string()));
        }
        Ok(SubfieldElement { tag: tag.to_string(), value, square })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, rat};

    pub(crate) fn cubic() -> Arc<NumberField> {
        NumberField::new("K", "a", UniPoly::from_ints(&[-1, -2, 1, 1])).unwrap()
    }

    #[test]
    fn cubic_products_reduce() {
        let k = cubic();
        let a = NFElem::gen(&k);
        let a2 = &a * &a;
        assert_eq!(&a * &a2, NFElem::from_ints(&k, &[1, 2, -1]));
        assert_eq!(&NFElem::one(&k) * &a, a);
    }

    #[test]
    fn inverse_of_generator() {
        let k = cubic();
        let a = NFElem::gen(&k);
        let inv = a.inv().unwrap();
        assert_eq!(inv, NFElem::from_ints(&k, &[-2, 1, 1]));
        assert!((&a * &inv).is_one());
        assert_eq!(NFElem::zero(&k).inv(), Err(NumFieldError::ZeroInverse));
    }

    #[test]
    fn norms_in_the_cubic_field() {
        let k = cubic();
        assert_eq!(NFElem::from_ints(&k, &[-1, 2, 1]).norm(), int(7));
        assert_eq!(NFElem::from_ints(&k, &[7, -1, 1]).norm(), int(673));
        assert_eq!(NFElem::gen(&k).trace(), int(-1));
    }

    #[test]
    fn quadratic_norms() {
        let q3 = NumberField::new("Q(sqrt3)", "s", UniPoly::from_ints(&[-3, 0, 1])).unwrap();
        assert_eq!(NFElem::from_ints(&q3, &[1, 1]).norm(), int(-2));
        let q7 = NumberField::new("Q(sqrt-7)", "r", UniPoly::from_ints(&[7, 0, 1])).unwrap();
        let pi2 = NFElem::new(&q7, vec![rat(1, 2), rat(1, 2)]).unwrap();
        assert_eq!(pi2.norm(), int(2));
    }

    #[test]
    fn rejects_reducible_and_non_monic() {
        assert!(NumberField::new("bad", "x", UniPoly::from_ints(&[-1, 0, 1])).is_err());
        assert!(NumberField::new("bad", "x", UniPoly::from_ints(&[1, 0, 2])).is_err());
        assert!(NumberField::new("bad", "x", UniPoly::from_ints(&[0, 1, 1])).is_err());
    }

    #[test]
    fn mixed_fields_rejected() {
        let k = cubic();
        let q = NumberField::new("Q(i)", "i", UniPoly::from_ints(&[1, 0, 1])).unwrap();
        let r = NFElem::gen(&k).try_mul(&NFElem::gen(&q));
        assert_eq!(r.err(), Some(NumFieldError::MixedFields));
    }

    #[test]
    fn display_uses_field_variable() {
        let k = cubic();
        assert_eq!(NFElem::from_ints(&k, &[-1, 2, 1]).to_string(), "a^2 + 2a - 1");
    }
}
