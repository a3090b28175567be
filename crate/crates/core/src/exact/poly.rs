use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::rational::{fmt_rational, int, Rational};
use super::ExactError;

/// Dense univariate polynomial over Q, lowest degree first.
///
/// The coefficient vector never ends in a zero; the zero polynomial is the
/// empty vector.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct UniPoly {
    coeffs: Vec<Rational>,
}

impl UniPoly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn from_ints(c: &[i64]) -> Self {
        Self::new(c.iter().map(|&x| int(x)).collect())
    }

    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    /// The monomial `c·x^k`.
    pub fn monomial(c: Rational, k: usize) -> Self {
        let mut v = vec![Rational::zero(); k + 1];
        v[k] = c;
        Self::new(v)
    }

    pub fn x() -> Self {
        Self::monomial(Rational::one(), 1)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficient of `x^k` (zero beyond the degree).
    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Rational {
        self.coeffs.last().cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_one()
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let lc = self.leading();
        Self::new(self.coeffs.iter().map(|c| c / &lc).collect())
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::new(self.coeffs.iter().map(|x| x * c).collect())
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * int(k as i64))
                .collect(),
        )
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x + c)
    }

    /// Euclidean division; `divisor` must be nonzero.
    pub fn div_rem(&self, divisor: &UniPoly) -> Result<(UniPoly, UniPoly), ExactError> {
        let dd = divisor.degree().ok_or(ExactError::DivisionByZero)?;
        let lc = divisor.leading();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((UniPoly::zero(), self.clone()));
        }
        let mut quot = vec![Rational::zero(); rem.len() - dd];
        for k in (dd..rem.len()).rev() {
            let c = &rem[k] / &lc;
            if c.is_zero() {
                continue;
            }
            for (i, dc) in divisor.coeffs.iter().enumerate() {
                rem[k - dd + i] -= &c * dc;
            }
            quot[k - dd] = c;
        }
        rem.truncate(dd);
        Ok((UniPoly::new(quot), UniPoly::new(rem)))
    }

    pub fn rem(&self, divisor: &UniPoly) -> Result<UniPoly, ExactError> {
        Ok(self.div_rem(divisor)?.1)
    }

    /// True when every coefficient is an integer.
    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }
}

/// Monic greatest common divisor; `gcd(0, 0) = 0`.
pub fn poly_gcd(f: &UniPoly, g: &UniPoly) -> UniPoly {
    let (mut a, mut b) = (f.clone(), g.clone());
    while !b.is_zero() {
        let r = a.rem(&b).expect("nonzero divisor");
        a = b;
        b = r;
    }
    a.monic()
}

/// Extended Euclid: `(g, s, t)` with `s·f + t·g = g` and `g` monic.
pub fn poly_xgcd(f: &UniPoly, g: &UniPoly) -> (UniPoly, UniPoly, UniPoly) {
    let (mut r0, mut r1) = (f.clone(), g.clone());
    let (mut s0, mut s1) = (UniPoly::one(), UniPoly::zero());
    let (mut t0, mut t1) = (UniPoly::zero(), UniPoly::one());
    while !r1.is_zero() {
        let (q, r) = r0.div_rem(&r1).expect("nonzero divisor");
        let s = &s0 - &(&q * &s1);
        let t = &t0 - &(&q * &t1);
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s);
        t0 = std::mem::replace(&mut t1, t);
    }
    if r0.is_zero() {
        return (r0, s0, t0);
    }
    let lc = r0.leading().recip();
    (r0.scale(&lc), s0.scale(&lc), t0.scale(&lc))
}

/// Resultant via the Euclidean remainder sequence.
pub fn resultant(f: &UniPoly, g: &UniPoly) -> Rational {
    let (Some(m), Some(n)) = (f.degree(), g.degree()) else {
        return Rational::zero();
    };
    if n == 0 {
        return num_traits::pow(g.leading(), m);
    }
    if m == 0 {
        return num_traits::pow(f.leading(), n);
    }
    if m < n {
        let sign = if (m * n) % 2 == 1 { -Rational::one() } else { Rational::one() };
        return sign * resultant(g, f);
    }
    // res(f, g) = (-1)^{mn} res(g, f) and res(g, f) = lc(g)^{m - deg r} res(g, r).
    let r = f.rem(g).expect("nonzero divisor");
    let Some(dr) = r.degree() else {
        return Rational::zero();
    };
    let sign = if (m * n) % 2 == 1 { -Rational::one() } else { Rational::one() };
    sign * num_traits::pow(g.leading(), m - dr) * resultant(g, &r)
}

/// `disc(f) = (-1)^{n(n-1)/2} res(f, f') / lc(f)`.
pub fn poly_discriminant(f: &UniPoly) -> Result<Rational, ExactError> {
    let n = match f.degree() {
        Some(n) if n >= 1 => n,
        _ => return Err(ExactError::ConstantPolynomial),
    };
    if n == 1 {
        return Ok(Rational::one());
    }
    let r = resultant(f, &f.derivative()) / f.leading();
    Ok(if (n * (n - 1) / 2) % 2 == 1 { -r } else { r })
}

impl Add for &UniPoly {
    type Output = UniPoly;
    fn add(self, rhs: &UniPoly) -> UniPoly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        UniPoly::new((0..len).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl Sub for &UniPoly {
    type Output = UniPoly;
    fn sub(self, rhs: &UniPoly) -> UniPoly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        UniPoly::new((0..len).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl Neg for &UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        UniPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Mul for &UniPoly {
    type Output = UniPoly;
    fn mul(self, rhs: &UniPoly) -> UniPoly {
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        UniPoly::new(out)
    }
}

impl UniPoly {
    /// Renders the polynomial with `var` as the indeterminate.
    pub fn display_with(&self, var: &str) -> String {
        let mut s = String::new();
        self.write_with(&mut s, var).expect("writing to a String");
        s
    }

    fn write_with<W: fmt::Write>(&self, f: &mut W, var: &str) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let abs = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            first = false;
            let show_coeff = !abs.is_one() || k == 0;
            if show_coeff {
                write!(f, "{}", fmt_rational(&abs))?;
            }
            match k {
                0 => {}
                1 => write!(f, "{var}")?,
                _ => write!(f, "{var}^{k}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write_with(f, "x")
    }
}

impl fmt::Debug for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "UniPoly({self})")
    }
}
