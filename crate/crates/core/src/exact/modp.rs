use std::fmt;

use super::poly::UniPoly;
use super::rational::{inv_mod, is_prime, mul_mod, reduce_mod_p};
use super::ExactError;

/// Dense polynomial over the prime field F_p, lowest degree first.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ModPoly {
    p: u64,
    coeffs: Vec<u64>,
}

impl ModPoly {
    pub fn new(p: u64, coeffs: Vec<u64>) -> Self {
        let mut coeffs: Vec<u64> = coeffs.into_iter().map(|c| c % p).collect();
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        ModPoly { p, coeffs }
    }

    /// Reduction of a p-integral rational polynomial.
    pub fn from_unipoly(f: &UniPoly, p: u64) -> Result<Self, ExactError> {
        if !is_prime(p) {
            return Err(ExactError::NotPrime(p));
        }
        let coeffs = f
            .coeffs()
            .iter()
            .map(|c| reduce_mod_p(c, p).ok_or(ExactError::NotIntegral(p)))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Self::new(p, coeffs))
    }

    pub fn from_i64(p: u64, c: &[i64]) -> Self {
        let pi = p as i64;
        Self::new(p, c.iter().map(|&x| x.rem_euclid(pi) as u64).collect())
    }

    pub fn zero(p: u64) -> Self {
        ModPoly { p, coeffs: Vec::new() }
    }

    pub fn one(p: u64) -> Self {
        Self::new(p, vec![1])
    }

    pub fn x(p: u64) -> Self {
        Self::new(p, vec![0, 1])
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> u64 {
        self.coeffs.get(k).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> u64 {
        self.coeffs.last().copied().unwrap_or(0)
    }

    pub fn monic(&self) -> Self {
        match inv_mod(self.leading(), self.p) {
            Some(inv) => self.scale(inv),
            None => self.clone(),
        }
    }

    pub fn scale(&self, c: u64) -> Self {
        Self::new(self.p, self.coeffs.iter().map(|&x| mul_mod(x, c, self.p)).collect())
    }

    pub fn add(&self, o: &Self) -> Self {
        let len = self.coeffs.len().max(o.coeffs.len());
        Self::new(self.p, (0..len).map(|k| (self.coeff(k) + o.coeff(k)) % self.p).collect())
    }

    pub fn sub(&self, o: &Self) -> Self {
        let len = self.coeffs.len().max(o.coeffs.len());
        Self::new(
            self.p,
            (0..len).map(|k| (self.coeff(k) + self.p - o.coeff(k)) % self.p).collect(),
        )
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero(self.p);
        }
        let mut out = vec![0u64; self.coeffs.len() + o.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in o.coeffs.iter().enumerate() {
                out[i + j] = (out[i + j] + mul_mod(a, b, self.p)) % self.p;
            }
        }
        Self::new(self.p, out)
    }

    pub fn div_rem(&self, d: &Self) -> (Self, Self) {
        let dd = d.degree().expect("division by zero polynomial");
        let inv = inv_mod(d.leading(), self.p).unwrap();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (Self::zero(self.p), self.clone());
        }
        let mut quot = vec![0u64; rem.len() - dd];
        for k in (dd..rem.len()).rev() {
            let c = mul_mod(rem[k], inv, self.p);
            if c == 0 {
                continue;
            }
            for (i, &dc) in d.coeffs.iter().enumerate() {
                let t = mul_mod(c, dc, self.p);
                rem[k - dd + i] = (rem[k - dd + i] + self.p - t) % self.p;
            }
            quot[k - dd] = c;
        }
        rem.truncate(dd);
        (Self::new(self.p, quot), Self::new(self.p, rem))
    }

    pub fn rem(&self, d: &Self) -> Self {
        self.div_rem(d).1
    }

    pub fn eval(&self, x: u64) -> u64 {
        self.coeffs
            .iter()
            .rev()
            .fold(0, |acc, &c| (mul_mod(acc, x, self.p) + c) % self.p)
    }

    /// `self^e mod m`.
    pub fn pow_mod(&self, mut e: u128, m: &Self) -> Self {
        let mut acc = Self::one(self.p).rem(m);
        let mut base = self.rem(m);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base).rem(m);
            }
            base = base.mul(&base).rem(m);
            e >>= 1;
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.p,
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, &c)| mul_mod(c, k as u64 % self.p, self.p))
                .collect(),
        )
    }
}

/// Monic gcd over F_p.
pub fn modpoly_gcd(f: &ModPoly, g: &ModPoly) -> ModPoly {
    let (mut a, mut b) = (f.clone(), g.clone());
    while !b.is_zero() {
        let r = a.rem(&b);
        a = b;
        b = r;
    }
    a.monic()
}

/// Degrees of the irreducible factors of `f mod p`, with multiplicity, in
/// nondecreasing order.
///
/// Distinct-degree splitting: once all factors of degree `< d` are removed,
/// `gcd(f, x^{p^d} - x)` is the product of the distinct degree-`d` factors.
/// Repeating the step at the same `d` peels off repeated factors.
pub fn factor_degrees_mod_p(f: &UniPoly, p: u64) -> Result<Vec<usize>, ExactError> {
    let n = f.degree().ok_or(ExactError::ConstantPolynomial)?;
    let fp = ModPoly::from_unipoly(f, p)?;
    if fp.degree() != Some(n) {
        return Err(ExactError::LeadingVanishes(p));
    }
    factor_degrees(&fp)
}

/// Factor degrees of an F_p polynomial of positive degree.
pub fn factor_degrees(f: &ModPoly) -> Result<Vec<usize>, ExactError> {
    let p = f.p();
    if f.degree().unwrap_or(0) == 0 {
        return Err(ExactError::ConstantPolynomial);
    }
    let mut rest = f.monic();
    let mut out = Vec::new();
    let x = ModPoly::x(p);
    let mut d = 1;
    while rest.degree().unwrap() > 0 {
        if 2 * d > rest.degree().unwrap() {
            // What remains is a single irreducible factor.
            out.push(rest.degree().unwrap());
            break;
        }
        let q = (p as u128).pow(d as u32);
        loop {
            let frob = x.pow_mod(q, &rest);
            let g = modpoly_gcd(&rest, &frob.sub(&x));
            let dg = g.degree().unwrap();
            if dg == 0 {
                break;
            }
            out.extend(std::iter::repeat_n(d, dg / d));
            rest = rest.div_rem(&g).0.monic();
            if rest.degree().unwrap() == 0 {
                break;
            }
        }
        d += 1;
    }
    out.sort_unstable();
    Ok(out)
}

/// True when `f mod p` is irreducible of full degree.
pub fn is_irreducible_mod_p(f: &UniPoly, p: u64) -> Result<bool, ExactError> {
    Ok(factor_degrees_mod_p(f, p)?.len() == 1)
}

impl fmt::Debug for ModPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ModPoly(p={}, {:?})", self.p, self.coeffs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cubic() -> UniPoly {
        UniPoly::from_ints(&[-1, -2, 1, 1])
    }

    #[test]
    fn cubic_irreducible_mod_2() {
        assert_eq!(factor_degrees_mod_p(&cubic(), 2).unwrap(), vec![3]);
    }

    #[test]
    fn cubic_is_cube_of_linear_mod_7() {
        assert_eq!(factor_degrees_mod_p(&cubic(), 7).unwrap(), vec![1, 1, 1]);
        let lin = ModPoly::from_i64(7, &[-2, 1]);
        let cube = lin.mul(&lin).mul(&lin);
        assert_eq!(ModPoly::from_unipoly(&cubic(), 7).unwrap(), cube);
    }

    #[test]
    fn quartic_irreducible_mod_3() {
        let f = UniPoly::from_ints(&[2, 0, -4, 0, 1]);
        assert_eq!(factor_degrees_mod_p(&f, 3).unwrap(), vec![4]);
    }

    #[test]
    fn leading_coefficient_vanishing() {
        let f = UniPoly::from_ints(&[1, 1, 7]);
        assert_eq!(factor_degrees_mod_p(&f, 7), Err(ExactError::LeadingVanishes(7)));
    }

    #[test]
    fn mixed_multiplicities() {
        // (x+1)^2 (x^2+x+1) over F_2 and x^4 + 8x^2 + 100 = (x^2+1)^2 over F_3.
        let f = ModPoly::from_i64(2, &[1, 0, 1]).mul(&ModPoly::from_i64(2, &[1, 1, 1]));
        assert_eq!(factor_degrees(&f).unwrap(), vec![1, 1, 2]);
        let g = UniPoly::from_ints(&[100, 0, 8, 0, 1]);
        assert_eq!(factor_degrees_mod_p(&g, 3).unwrap(), vec![2, 2]);
    }
}
