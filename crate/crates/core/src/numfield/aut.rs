use std::fmt;
use std::sync::Arc;

use num_traits::Zero;

use super::field::{same_field, NFElem, NumberField};
use super::NumFieldError;
use crate::exact::{QMatrix, Rational};

/// Field automorphism given by the image of the generator.
#[derive(Clone)]
pub struct NFAutomorphism {
    field: Arc<NumberField>,
    gen_image: NFElem,
    matrix: QMatrix,
}

impl NFAutomorphism {
    /// Verifies that `gen_image` is a root of the minimal polynomial.
    pub fn new(field: &Arc<NumberField>, gen_image: NFElem) -> Result<Self, NumFieldError> {
        if !same_field(field, gen_image.field()) {
            return Err(NumFieldError::MixedFields);
        }
        if !gen_image.eval_poly(field.min_poly()).is_zero() {
            return Err(NumFieldError::NotARoot);
        }
        let n = field.degree();
        let mut cols = Vec::with_capacity(n);
        let mut p = NFElem::one(field);
        for _ in 0..n {
            cols.push(p.coeffs().to_vec());
            p = &p * &gen_image;
        }
        let matrix = QMatrix::from_columns(n, &cols);
        if matrix.det().is_zero() {
            return Err(NumFieldError::NotARoot);
        }
        Ok(NFAutomorphism { field: field.clone(), gen_image, matrix })
    }

    pub fn identity(field: &Arc<NumberField>) -> Self {
        Self::new(field, NFElem::gen(field)).expect("generator is a root")
    }

    pub fn field(&self) -> &Arc<NumberField> {
        &self.field
    }

    pub fn gen_image(&self) -> &NFElem {
        &self.gen_image
    }

    /// Matrix on the power basis.
    pub fn matrix(&self) -> &QMatrix {
        &self.matrix
    }

    pub fn apply(&self, x: &NFElem) -> NFElem {
        assert!(same_field(&self.field, x.field()), "automorphism applied to a foreign element");
        NFElem::new(&self.field, self.matrix.mul_vec(x.coeffs())).expect("length matches")
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &NFAutomorphism) -> NFAutomorphism {
        let img = self.apply(&other.gen_image);
        NFAutomorphism { field: self.field.clone(), gen_image: img, matrix: self.matrix.mul(&other.matrix) }
    }

    pub fn pow(&self, k: u32) -> NFAutomorphism {
        (0..k).fold(Self::identity(&self.field), |acc, _| acc.compose(self))
    }

    pub fn is_identity(&self) -> bool {
        self.gen_image == NFElem::gen(&self.field)
    }

    /// Least `k ≥ 1` with `σ^k = id`.
    pub fn order(&self) -> u32 {
        let mut cur = self.clone();
        let mut k = 1;
        while !cur.is_identity() {
            cur = cur.compose(self);
            k += 1;
            assert!(k as usize <= self.field.degree(), "automorphism order exceeds the field degree");
        }
        k
    }

    pub fn inverse(&self) -> NFAutomorphism {
        self.pow(self.order() - 1)
    }

    pub fn fixes(&self, x: &NFElem) -> bool {
        &self.apply(x) == x
    }
}

impl PartialEq for NFAutomorphism {
    fn eq(&self, o: &Self) -> bool {
        self.gen_image == o.gen_image
    }
}

impl fmt::Debug for NFAutomorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} ↦ {}", self.field.var(), self.gen_image)
    }
}

/// `∏_{σ ∈ gal} σ(x)`, required to be fixed by every `σ ∈ gal`.
pub fn relative_norm(x: &NFElem, gal: &[NFAutomorphism]) -> Result<NFElem, NumFieldError> {
    let n = gal.iter().fold(NFElem::one(x.field()), |acc, s| &acc * &s.apply(x));
    if gal.iter().all(|s| s.fixes(&n)) {
        Ok(n)
    } else {
        Err(NumFieldError::NotFixed)
    }
}

/// The cyclic group generated by `σ`, starting from the identity.
pub fn cyclic_group(sigma: &NFAutomorphism) -> Vec<NFAutomorphism> {
    let mut out = vec![NFAutomorphism::identity(sigma.field())];
    let mut cur = sigma.clone();
    while !cur.is_identity() {
        out.push(cur.clone());
        cur = cur.compose(sigma);
    }
    out
}

/// Rational value of a relative norm that lands in Q.
pub fn rational_norm(x: &NFElem, gal: &[NFAutomorphism]) -> Result<Rational, NumFieldError> {
    relative_norm(x, gal)?.as_rational().ok_or(NumFieldError::NotFixed)
}

/// Closure of a set of generators under composition.
pub fn generated_group(gens: &[NFAutomorphism], field: &Arc<NumberField>) -> Vec<NFAutomorphism> {
    let mut out = vec![NFAutomorphism::identity(field)];
    let mut i = 0;
    while i < out.len() {
        for g in gens {
            let h = g.compose(&out[i]);
            if !out.contains(&h) {
                out.push(h);
            }
        }
        i += 1;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, UniPoly};

    fn cubic() -> Arc<NumberField> {
        NumberField::new("K", "a", UniPoly::from_ints(&[-1, -2, 1, 1])).unwrap()
    }

    #[test]
    fn cubic_automorphism_has_order_three() {
        let k = cubic();
        let sigma = NFAutomorphism::new(&k, NFElem::from_ints(&k, &[-2, 0, 1])).unwrap();
        assert_eq!(sigma.order(), 3);
        assert!(sigma.pow(3).is_identity());
        assert_eq!(sigma.inverse().compose(&sigma), NFAutomorphism::identity(&k));
    }

    #[test]
    fn non_root_rejected() {
        let k = cubic();
        assert_eq!(
            NFAutomorphism::new(&k, NFElem::from_ints(&k, &[1, 1])).err(),
            Some(NumFieldError::NotARoot)
        );
    }

    #[test]
    fn identity_acts_trivially() {
        let k = cubic();
        let x = NFElem::from_ints(&k, &[3, -1, 4]);
        assert_eq!(NFAutomorphism::identity(&k).apply(&x), x);
    }

    #[test]
    fn norm_along_the_full_group() {
        let k = cubic();
        let sigma = NFAutomorphism::new(&k, NFElem::from_ints(&k, &[-2, 0, 1])).unwrap();
        let gal = cyclic_group(&sigma);
        let pi = NFElem::from_ints(&k, &[-1, 2, 1]);
        assert_eq!(rational_norm(&pi, &gal).unwrap(), int(7));
        let x = NFElem::from_ints(&k, &[0, 5]);
        assert_eq!(relative_norm(&x, &[NFAutomorphism::identity(&k)]).unwrap(), x);
        assert_eq!(relative_norm(&x, &gal[..2]).err(), Some(NumFieldError::NotFixed));
    }
}
