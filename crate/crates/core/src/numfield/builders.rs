//! The concrete fields of the worked examples, each built from its defining
//! polynomial and checked on construction.

use std::sync::Arc;

use super::aut::{generated_group, NFAutomorphism};
use super::field::{NFElem, NumberField, SubfieldElement};
use super::relative::{RelAutomorphism, RelElem, RelativeExtension};
use crate::exact::{int, rat, UniPoly};

/// `Q(√d)` with generator `√d`.
pub fn quadratic(label: &str, d: i64) -> Arc<NumberField> {
    NumberField::new(label, "s", UniPoly::from_ints(&[-d, 0, 1])).expect("d is not a square")
}

/// `K = Q(√3, √−7)` with primitive element `t = √3 + √−7`.
#[derive(Clone, Debug)]
pub struct Biquadratic {
    pub field: Arc<NumberField>,
    pub sqrt3: SubfieldElement,
    pub sqrtm7: SubfieldElement,
    /// `√3 ↦ −√3`, `√−7 ↦ √−7`.
    pub sigma1: NFAutomorphism,
    /// `√3 ↦ √3`, `√−7 ↦ −√−7`.
    pub sigma2: NFAutomorphism,
    /// `id, σ1, σ2, σ1σ2`.
    pub gal: Vec<NFAutomorphism>,
}

pub fn build_biquadratic() -> Biquadratic {
    let field = NumberField::new("Q(sqrt3,sqrt-7)", "t", UniPoly::from_ints(&[100, 0, 8, 0, 1]))
        .expect("x^4 + 8x^2 + 100 has no rational root");
    let s3 = NFElem::new(&field, vec![int(0), rat(1, 10), int(0), rat(-1, 20)]).unwrap();
    let s7 = NFElem::new(&field, vec![int(0), rat(9, 10), int(0), rat(1, 20)]).unwrap();
    let sqrt3 = SubfieldElement::new("sqrt3", s3.clone(), int(3)).expect("tag verifies");
    let sqrtm7 = SubfieldElement::new("sqrt-7", s7.clone(), int(-7)).expect("tag verifies");
    assert_eq!(&s3 + &s7, NFElem::gen(&field), "t = sqrt3 + sqrt-7");
    let sigma1 = NFAutomorphism::new(&field, &s7 - &s3).expect("conjugate of t");
    let sigma2 = NFAutomorphism::new(&field, &s3 - &s7).expect("conjugate of t");
    let gal = vec![
        NFAutomorphism::identity(&field),
        sigma1.clone(),
        sigma2.clone(),
        sigma1.compose(&sigma2),
    ];
    Biquadratic { field, sqrt3, sqrtm7, sigma1, sigma2, gal }
}

/// `K = Q(α)` with `α³ + α² − 2α − 1 = 0` and `σ(α) = α² − 2`.
#[derive(Clone, Debug)]
pub struct CyclicCubic {
    pub field: Arc<NumberField>,
    pub alpha: NFElem,
    pub sigma: NFAutomorphism,
}

pub fn build_cyclic_cubic() -> CyclicCubic {
    let field = NumberField::new("Q(alpha)", "α", UniPoly::from_ints(&[-1, -2, 1, 1])).expect("no rational root");
    let alpha = NFElem::gen(&field);
    let sigma = NFAutomorphism::new(&field, NFElem::from_ints(&field, &[-2, 0, 1])).expect("α² − 2 is a root");
    CyclicCubic { field, alpha, sigma }
}

/// `L = K(β)` over the cyclic cubic, `β³ + (α−2)β² − (α+1)β + 1 = 0`, with
/// `τ(β) = β² + (α−2)β − α` fixing `K`.
#[derive(Clone, Debug)]
pub struct CubicTower {
    pub base: CyclicCubic,
    pub ext: Arc<RelativeExtension>,
    pub beta: RelElem,
    pub tau: RelAutomorphism,
}

pub fn build_cubic_tower() -> CubicTower {
    let base = build_cyclic_cubic();
    let k = &base.field;
    let c = |v: &[i64]| NFElem::from_ints(k, v);
    let g = vec![c(&[1]), c(&[-1, -1]), c(&[-2, 1]), c(&[1])];
    let ext = RelativeExtension::new("L", "β", k, g).expect("monic over K");
    let beta = RelElem::gen(&ext);
    let img = RelElem::new(&ext, vec![c(&[0, -1]), c(&[-2, 1]), c(&[1])]);
    let tau = RelAutomorphism::new(&ext, NFAutomorphism::identity(k), img).expect("τ(β) is a root of g");
    CubicTower { base, ext, beta, tau }
}

/// `L = Q(α)` with `α⁴ − 4α² + 2 = 0` and `φ(α) = α³ − 3α`.
#[derive(Clone, Debug)]
pub struct CyclicQuartic {
    pub field: Arc<NumberField>,
    pub phi: NFAutomorphism,
    /// `α² − 2`, a square root of 2.
    pub sqrt2: SubfieldElement,
}

pub fn build_cyclic_quartic() -> CyclicQuartic {
    let field = NumberField::new("Q(alpha4)", "α", UniPoly::from_ints(&[2, 0, -4, 0, 1])).expect("no rational root");
    let phi = NFAutomorphism::new(&field, NFElem::from_ints(&field, &[0, -3, 0, 1])).expect("α³ − 3α is a root");
    let sqrt2 = SubfieldElement::new("sqrt2", NFElem::from_ints(&field, &[-2, 0, 1]), int(2)).expect("(α²−2)² = 2");
    CyclicQuartic { field, phi, sqrt2 }
}

/// All automorphisms generated by `σ1, σ2`.
pub fn galois_closure(b: &Biquadratic) -> Vec<NFAutomorphism> {
    generated_group(&[b.sigma1.clone(), b.sigma2.clone()], &b.field)
}
