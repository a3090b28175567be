use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_traits::Zero;

use super::aut::NFAutomorphism;
use super::field::{same_field, NFElem, NumberField};
use super::NumFieldError;
use crate::exact::{QMatrix, Rational};

/// `L = K[y]/(g)` for a monic `g` over `K`, kept as a free `K`-module on
/// `1, y, …, y^{m-1}` instead of an absolute field.
#[derive(Debug)]
pub struct RelativeExtension {
    label: String,
    var: String,
    base: Arc<NumberField>,
    // monic, lowest degree first, length m + 1
    min_poly: Vec<NFElem>,
}

impl RelativeExtension {
    pub fn new(label: &str, var: &str, base: &Arc<NumberField>, min_poly: Vec<NFElem>) -> Result<Arc<Self>, NumFieldError> {
        if min_poly.len() < 2 || !min_poly.last().unwrap().is_one() {
            return Err(NumFieldError::BadMinPoly("relative polynomial must be monic of positive degree".into()));
        }
        if min_poly.iter().any(|c| !same_field(c.field(), base)) {
            return Err(NumFieldError::MixedFields);
        }
        Ok(Arc::new(RelativeExtension { label: label.to_string(), var: var.to_string(), base: base.clone(), min_poly }))
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn base(&self) -> &Arc<NumberField> {
        &self.base
    }

    pub fn rel_degree(&self) -> usize {
        self.min_poly.len() - 1
    }

    /// Dimension over Q.
    pub fn abs_degree(&self) -> usize {
        self.rel_degree() * self.base.degree()
    }

    pub fn min_poly(&self) -> &[NFElem] {
        &self.min_poly
    }

    /// `g(z)` for `z` in `L`, with the coefficients of `g` optionally moved by
    /// an automorphism of `K` first.
    pub fn eval_min_poly(self: &Arc<Self>, z: &RelElem, twist: Option<&NFAutomorphism>) -> RelElem {
        self.min_poly.iter().rev().fold(RelElem::zero(self), |acc, c| {
            let c = twist.map_or_else(|| c.clone(), |s| s.apply(c));
            &(&acc * z) + &RelElem::from_base(self, c)
        })
    }
}

/// Element of a relative extension as `K`-coordinates on powers of `y`.
#[derive(Clone)]
pub struct RelElem {
    ext: Arc<RelativeExtension>,
    coeffs: Vec<NFElem>,
}

impl RelElem {
    pub fn new(ext: &Arc<RelativeExtension>, mut coeffs: Vec<NFElem>) -> Self {
        let m = ext.rel_degree();
        coeffs.resize(m.max(coeffs.len()), NFElem::zero(&ext.base));
        let mut r = RelElem { ext: ext.clone(), coeffs };
        r.reduce();
        r
    }

    fn reduce(&mut self) {
        let m = self.ext.rel_degree();
        while self.coeffs.len() > m {
            let top = self.coeffs.pop().unwrap();
            if top.is_zero() {
                continue;
            }
            let off = self.coeffs.len() - m;
            for (k, g) in self.ext.min_poly[..m].iter().enumerate() {
                self.coeffs[off + k] = &self.coeffs[off + k] - &(&top * g);
            }
        }
    }

    pub fn from_base(ext: &Arc<RelativeExtension>, c: NFElem) -> Self {
        Self::new(ext, vec![c])
    }

    pub fn zero(ext: &Arc<RelativeExtension>) -> Self {
        Self::new(ext, vec![])
    }

    pub fn one(ext: &Arc<RelativeExtension>) -> Self {
        Self::from_base(ext, NFElem::one(&ext.base))
    }

    /// The generator `y`.
    pub fn gen(ext: &Arc<RelativeExtension>) -> Self {
        Self::new(ext, vec![NFElem::zero(&ext.base), NFElem::one(&ext.base)])
    }

    pub fn ext(&self) -> &Arc<RelativeExtension> {
        &self.ext
    }

    pub fn coeffs(&self) -> &[NFElem] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(NFElem::is_zero)
    }

    /// `Some(c)` when the element lies in `K`.
    pub fn as_base(&self) -> Option<NFElem> {
        self.coeffs[1..].iter().all(NFElem::is_zero).then(|| self.coeffs[0].clone())
    }

    pub fn scale(&self, c: &NFElem) -> Self {
        RelElem { ext: self.ext.clone(), coeffs: self.coeffs.iter().map(|x| x * c).collect() }
    }

    /// Coordinates over Q: `K`-coordinates of `y^0`, then of `y^1`, and so on.
    pub fn q_coords(&self) -> Vec<Rational> {
        self.coeffs.iter().flat_map(|c| c.coeffs().to_vec()).collect()
    }

    pub fn from_q_coords(ext: &Arc<RelativeExtension>, v: &[Rational]) -> Self {
        let n = ext.base.degree();
        let coeffs = v.chunks(n).map(|c| NFElem::new(&ext.base, c.to_vec()).expect("chunk has field degree")).collect();
        Self::new(ext, coeffs)
    }

    /// Inverse by solving the Q-linear system for `self·z = 1`.
    pub fn inv(&self) -> Result<RelElem, NumFieldError> {
        if self.is_zero() {
            return Err(NumFieldError::ZeroInverse);
        }
        let d = self.ext.abs_degree();
        let cols: Vec<Vec<Rational>> = (0..d)
            .map(|k| {
                let mut e = vec![Rational::zero(); d];
                e[k] = num_traits::One::one();
                (self * &RelElem::from_q_coords(&self.ext, &e)).q_coords()
            })
            .collect();
        let one = RelElem::one(&self.ext).q_coords();
        let sol = QMatrix::from_columns(d, &cols).solve(&one).ok_or(NumFieldError::ZeroDivisor)?;
        Ok(RelElem::from_q_coords(&self.ext, &sol))
    }

    pub fn pow(&self, mut e: u64) -> RelElem {
        let mut acc = RelElem::one(&self.ext);
        let mut b = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &b;
            }
            b = &b * &b;
            e >>= 1;
        }
        acc
    }
}

impl PartialEq for RelElem {
    fn eq(&self, o: &Self) -> bool {
        Arc::ptr_eq(&self.ext, &o.ext) && self.coeffs == o.coeffs
    }
}

impl Eq for RelElem {}

impl Add for &RelElem {
    type Output = RelElem;
    fn add(self, o: &RelElem) -> RelElem {
        RelElem { ext: self.ext.clone(), coeffs: self.coeffs.iter().zip(&o.coeffs).map(|(a, b)| a + b).collect() }
    }
}

impl Sub for &RelElem {
    type Output = RelElem;
    fn sub(self, o: &RelElem) -> RelElem {
        RelElem { ext: self.ext.clone(), coeffs: self.coeffs.iter().zip(&o.coeffs).map(|(a, b)| a - b).collect() }
    }
}

impl Neg for &RelElem {
    type Output = RelElem;
    fn neg(self) -> RelElem {
        RelElem { ext: self.ext.clone(), coeffs: self.coeffs.iter().map(|a| -a).collect() }
    }
}

impl Mul for &RelElem {
    type Output = RelElem;
    fn mul(self, o: &RelElem) -> RelElem {
        assert!(Arc::ptr_eq(&self.ext, &o.ext), "operands live in different extensions");
        let m = self.ext.rel_degree();
        let mut raw = vec![NFElem::zero(&self.ext.base); 2 * m - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    raw[i + j] = &raw[i + j] + &(a * b);
                }
            }
        }
        RelElem::new(&self.ext, raw)
    }
}

impl fmt::Debug for RelElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| match k {
                0 => format!("({c})"),
                1 => format!("({c}){}", self.ext.var),
                _ => format!("({c}){}^{k}", self.ext.var),
            })
            .collect();
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

/// Automorphism of `L` restricting to `base` on `K`, given by the image of `y`.
#[derive(Clone)]
pub struct RelAutomorphism {
    ext: Arc<RelativeExtension>,
    base: NFAutomorphism,
    gen_image: RelElem,
}

impl RelAutomorphism {
    /// Verifies `g^σ(image) = 0`.
    pub fn new(ext: &Arc<RelativeExtension>, base: NFAutomorphism, gen_image: RelElem) -> Result<Self, NumFieldError> {
        if !ext.eval_min_poly(&gen_image, Some(&base)).is_zero() {
            return Err(NumFieldError::NotARoot);
        }
        Ok(RelAutomorphism { ext: ext.clone(), base, gen_image })
    }

    pub fn identity(ext: &Arc<RelativeExtension>) -> Self {
        RelAutomorphism { ext: ext.clone(), base: NFAutomorphism::identity(&ext.base), gen_image: RelElem::gen(ext) }
    }

    pub fn base(&self) -> &NFAutomorphism {
        &self.base
    }

    pub fn gen_image(&self) -> &RelElem {
        &self.gen_image
    }

    pub fn apply(&self, x: &RelElem) -> RelElem {
        x.coeffs.iter().rev().fold(RelElem::zero(&self.ext), |acc, c| {
            &(&acc * &self.gen_image) + &RelElem::from_base(&self.ext, self.base.apply(c))
        })
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &RelAutomorphism) -> RelAutomorphism {
        RelAutomorphism { ext: self.ext.clone(), base: self.base.compose(&other.base), gen_image: self.apply(&other.gen_image) }
    }

    pub fn is_identity(&self) -> bool {
        self.base.is_identity() && self.gen_image == RelElem::gen(&self.ext)
    }

    pub fn pow(&self, k: u32) -> RelAutomorphism {
        (0..k).fold(Self::identity(&self.ext), |acc, _| acc.compose(self))
    }

    pub fn order(&self) -> u32 {
        let mut cur = self.clone();
        let mut k = 1;
        while !cur.is_identity() {
            cur = cur.compose(self);
            k += 1;
            assert!(k as usize <= self.ext.abs_degree(), "automorphism order exceeds the degree");
        }
        k
    }

    /// Q-linear matrix on `q_coords`.
    pub fn matrix(&self) -> QMatrix {
        let d = self.ext.abs_degree();
        let cols: Vec<Vec<Rational>> = (0..d)
            .map(|k| {
                let mut e = vec![Rational::zero(); d];
                e[k] = num_traits::One::one();
                self.apply(&RelElem::from_q_coords(&self.ext, &e)).q_coords()
            })
            .collect();
        QMatrix::from_columns(d, &cols)
    }
}

impl PartialEq for RelAutomorphism {
    fn eq(&self, o: &Self) -> bool {
        self.base == o.base && self.gen_image == o.gen_image
    }
}

impl fmt::Debug for RelAutomorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}; {} ↦ {:?}", self.base, self.ext.var, self.gen_image)
    }
}

/// `N_{L/K}(x) = ∏ τ(x)`, required to land in `K`.
pub fn rel_norm_to_base(x: &RelElem, gal: &[RelAutomorphism]) -> Result<NFElem, NumFieldError> {
    gal.iter()
        .fold(RelElem::one(x.ext()), |acc, t| &acc * &t.apply(x))
        .as_base()
        .ok_or(NumFieldError::NotFixed)
}

/// `disc(g) = (-1)^{m(m-1)/2} N_{L/K}(g'(y))` along the full group of `L/K`.
pub fn rel_discriminant_by_norm(ext: &Arc<RelativeExtension>, gal: &[RelAutomorphism]) -> Result<NFElem, NumFieldError> {
    let m = ext.rel_degree();
    let y = RelElem::gen(ext);
    let mut deriv = RelElem::zero(ext);
    let mut ypow = RelElem::one(ext);
    for k in 1..=m {
        deriv = &deriv + &ypow.scale(&ext.min_poly[k].scale(&Rational::from_integer((k as i64).into())));
        ypow = &ypow * &y;
    }
    let n = rel_norm_to_base(&deriv, gal)?;
    Ok(if (m * (m - 1) / 2) % 2 == 1 { -n } else { n })
}

/// Discriminant of the monic cubic `y^3 + p y^2 + q y + r` over `K`.
pub fn cubic_discriminant(coeffs: &[NFElem]) -> NFElem {
    assert_eq!(coeffs.len(), 4, "cubic expected");
    assert!(coeffs[3].is_one(), "monic cubic expected");
    let (r, q, p) = (&coeffs[0], &coeffs[1], &coeffs[2]);
    let k = |c: i64| Rational::from_integer(c.into());
    let p2 = p * p;
    let q2 = q * q;
    (&p2 * &q2) - (&q2 * q).scale(&k(4)) - (&(&p2 * p) * r).scale(&k(4)) - (r * r).scale(&k(27))
        + (&(p * q) * r).scale(&k(18))
}
