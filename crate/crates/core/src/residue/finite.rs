use std::fmt;
use std::sync::Arc;

use super::ResidueError;
use crate::exact::{factor_degrees, ModPoly};

/// `F_p[x]/(m)` for an irreducible `m` of degree `deg`.
#[derive(Debug, PartialEq, Eq)]
pub struct FiniteField {
    p: u64,
    deg: usize,
    modulus: ModPoly,
}

impl FiniteField {
    pub fn new(modulus: ModPoly) -> Result<Arc<Self>, ResidueError> {
        let deg = modulus.degree().unwrap_or(0);
        if deg == 0 {
            return Err(ResidueError::Reducible);
        }
        if factor_degrees(&modulus)? != vec![deg] {
            return Err(ResidueError::Reducible);
        }
        Ok(Arc::new(FiniteField { p: modulus.p(), deg, modulus: modulus.monic() }))
    }

    /// The prime field `F_p`.
    pub fn prime(p: u64) -> Result<Arc<Self>, ResidueError> {
        if !crate::exact::is_prime(p) {
            return Err(ResidueError::NotPrime(p));
        }
        Self::new(ModPoly::x(p))
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn deg(&self) -> usize {
        self.deg
    }

    pub fn modulus(&self) -> &ModPoly {
        &self.modulus
    }

    pub fn size(&self) -> u128 {
        (self.p as u128).pow(self.deg as u32)
    }
}

/// Element of a finite field.
#[derive(Clone, PartialEq, Eq)]
pub struct FFElem {
    field: Arc<FiniteField>,
    poly: ModPoly,
}

impl FFElem {
    pub fn new(field: &Arc<FiniteField>, poly: ModPoly) -> Self {
        assert_eq!(poly.p(), field.p, "characteristic mismatch");
        let poly = poly.rem(&field.modulus);
        FFElem { field: field.clone(), poly }
    }

    pub fn from_coeffs(field: &Arc<FiniteField>, c: &[i64]) -> Self {
        Self::new(field, ModPoly::from_i64(field.p, c))
    }

    pub fn from_int(field: &Arc<FiniteField>, c: i64) -> Self {
        Self::from_coeffs(field, &[c])
    }

    pub fn zero(field: &Arc<FiniteField>) -> Self {
        FFElem { field: field.clone(), poly: ModPoly::zero(field.p) }
    }

    pub fn one(field: &Arc<FiniteField>) -> Self {
        Self::from_int(field, 1)
    }

    /// The class of `x` (zero in a prime field, whose modulus is `x`).
    pub fn gen(field: &Arc<FiniteField>) -> Self {
        Self::new(field, ModPoly::x(field.p))
    }

    pub fn field(&self) -> &Arc<FiniteField> {
        &self.field
    }

    pub fn coeffs(&self) -> Vec<u64> {
        (0..self.field.deg).map(|k| self.poly.coeff(k)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.poly.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.poly == ModPoly::one(self.field.p)
    }

    pub fn add(&self, o: &Self) -> Self {
        FFElem { field: self.field.clone(), poly: self.poly.add(&o.poly) }
    }

    pub fn sub(&self, o: &Self) -> Self {
        FFElem { field: self.field.clone(), poly: self.poly.sub(&o.poly) }
    }

    pub fn neg(&self) -> Self {
        Self::zero(&self.field).sub(self)
    }

    pub fn mul(&self, o: &Self) -> Self {
        assert_eq!(self.field, o.field, "operands in different finite fields");
        FFElem { field: self.field.clone(), poly: self.poly.mul(&o.poly).rem(&self.field.modulus) }
    }

    pub fn scale(&self, c: u64) -> Self {
        FFElem { field: self.field.clone(), poly: self.poly.scale(c % self.field.p) }
    }

    pub fn pow(&self, e: u128) -> Self {
        FFElem { field: self.field.clone(), poly: self.poly.pow_mod(e, &self.field.modulus) }
    }

    pub fn inv(&self) -> Result<Self, ResidueError> {
        if self.is_zero() {
            return Err(ResidueError::Zero);
        }
        Ok(self.pow(self.field.size() - 2))
    }

    /// Euler's criterion `x^{(q-1)/2} = 1`.
    pub fn is_square(&self) -> Result<bool, ResidueError> {
        if self.field.p == 2 {
            return Err(ResidueError::EvenCharacteristic);
        }
        if self.is_zero() {
            return Err(ResidueError::Zero);
        }
        Ok(self.pow((self.field.size() - 1) / 2).is_one())
    }

    /// All elements, in lexicographic order of coordinates.
    pub fn all(field: &Arc<FiniteField>) -> Vec<FFElem> {
        let q = field.size() as u64;
        (0..q)
            .map(|mut n| {
                let c: Vec<u64> = (0..field.deg)
                    .map(|_| {
                        let d = n % field.p;
                        n /= field.p;
                        d
                    })
                    .collect();
                FFElem::new(field, ModPoly::new(field.p, c))
            })
            .collect()
    }
}

impl fmt::Debug for FFElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F{}^{}{:?}", self.field.p, self.field.deg, self.coeffs())
    }
}

/// Degree-`m` extension `k[y]/(h)` of a finite field `k`, for `m ≤ 3` where
/// irreducibility is the absence of roots in `k`.
#[derive(Debug)]
pub struct SmallExtension {
    base: Arc<FiniteField>,
    // monic, lowest degree first
    modulus: Vec<FFElem>,
}

impl SmallExtension {
    pub fn new(base: &Arc<FiniteField>, modulus: Vec<FFElem>) -> Result<Self, ResidueError> {
        let m = modulus.len().saturating_sub(1);
        if m == 0 || !modulus[m].is_one() {
            return Err(ResidueError::Reducible);
        }
        if m > 3 {
            return Err(ResidueError::Unsupported("residue extensions of degree above 3"));
        }
        let ext = SmallExtension { base: base.clone(), modulus };
        if m > 1 && FFElem::all(base).iter().any(|r| ext.eval_modulus(r).is_zero()) {
            return Err(ResidueError::Reducible);
        }
        Ok(ext)
    }

    fn eval_modulus(&self, r: &FFElem) -> FFElem {
        self.modulus.iter().rev().fold(FFElem::zero(&self.base), |acc, c| acc.mul(r).add(c))
    }

    pub fn base(&self) -> &Arc<FiniteField> {
        &self.base
    }

    pub fn degree(&self) -> usize {
        self.modulus.len() - 1
    }

    pub fn reduce(&self, mut c: Vec<FFElem>) -> Vec<FFElem> {
        let m = self.degree();
        while c.len() > m {
            let top = c.pop().unwrap();
            let off = c.len() - m;
            for k in 0..m {
                c[off + k] = c[off + k].sub(&top.mul(&self.modulus[k]));
            }
        }
        c.resize(m, FFElem::zero(&self.base));
        c
    }

    pub fn mul(&self, a: &[FFElem], b: &[FFElem]) -> Vec<FFElem> {
        let mut raw = vec![FFElem::zero(&self.base); a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            for (j, y) in b.iter().enumerate() {
                raw[i + j] = raw[i + j].add(&x.mul(y));
            }
        }
        self.reduce(raw)
    }

    pub fn pow(&self, a: &[FFElem], mut e: u128) -> Vec<FFElem> {
        let mut acc = self.reduce(vec![FFElem::one(&self.base)]);
        let mut b = self.reduce(a.to_vec());
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &b);
            }
            b = self.mul(&b, &b);
            e >>= 1;
        }
        acc
    }

    /// The class of `y`.
    pub fn gen(&self) -> Vec<FFElem> {
        self.reduce(vec![FFElem::zero(&self.base), FFElem::one(&self.base)])
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn squares_in_prime_fields() {
        let f3 = FiniteField::prime(3).unwrap();
        assert!(!FFElem::from_int(&f3, -1).is_square().unwrap());
        assert!(FFElem::one(&f3).is_square().unwrap());
        let f7 = FiniteField::prime(7).unwrap();
        assert!(FFElem::from_int(&f7, 2).is_square().unwrap());
        assert_eq!(FFElem::zero(&f7).is_square(), Err(ResidueError::Zero));
        let f2 = FiniteField::prime(2).unwrap();
        assert_eq!(FFElem::one(&f2).is_square(), Err(ResidueError::EvenCharacteristic));
    }

    #[test]
    fn f9_norm_minus_one_is_nonsquare() {
        let f9 = FiniteField::new(ModPoly::from_i64(3, &[1, 0, 1])).unwrap();
        let eta = FFElem::gen(&f9);
        let x = FFElem::one(&f9).sub(&eta);
        assert!(!x.is_square().unwrap());
        assert!(x.mul(&x.inv().unwrap()).is_one());
        assert_eq!(FFElem::all(&f9).len(), 9);
    }

    #[test]
    fn reducible_modulus_rejected() {
        assert_eq!(FiniteField::new(ModPoly::from_i64(3, &[2, 0, 1])), Err(ResidueError::Reducible));
    }
}
