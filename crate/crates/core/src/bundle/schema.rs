use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::brauer::{ExtensionLocalData, Place};
use crate::certify::{BiquadraticObstructionCert, CyclicObstructionCert};
use crate::twisted::{Numerics, NumericsInput};

/// Element of `Q(√3, √−7)` by coordinates on `1, √3, √−7, √3·√−7`.
pub type BiquadCoords = [String; 4];

/// Quaternion element: keys among `"1"`, `"i"`, `"j"`, `"k"`, absent keys zero.
pub type QuatCoords = BTreeMap<String, BiquadCoords>;

/// Element of a relative extension `K(β)`: coefficients of `β⁰, β¹, …`,
/// each an integer polynomial in the generator of `K`.
pub type RelCoords = Vec<Vec<i64>>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SideSpec {
    /// `i ↦ λi`, `j ↦ j` with `λ ∈ K(j)`.
    Kj,
    /// `i ↦ i`, `j ↦ λj` with `λ ∈ K(i)`.
    Ki,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct AutSpec {
    /// Signs of the base automorphism on `√3`, `√−7`.
    pub base: [i8; 2],
    pub side: SideSpec,
    pub lambda: QuatCoords,
}

/// A two-generator abelian factor set on `(a, b / Q(√3, √−7))`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FactorSetBundle {
    pub radicands: [i64; 2],
    pub a: BiquadCoords,
    pub b: BiquadCoords,
    pub sigma_tilde: Vec<AutSpec>,
    pub n: Vec<u32>,
    pub alpha: Vec<QuatCoords>,
    pub u: QuatCoords,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NumericsSpec {
    pub input: NumericsInput,
    pub expected: Numerics,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BiquadCertBundle {
    #[serde(flatten)]
    pub cert: BiquadraticObstructionCert,
    /// `K = k(√d1, √d2)`.
    pub radicands: [i64; 2],
    /// `k = Q(√e, …)`; empty for `Q`.
    pub base: Vec<i64>,
    pub primes: [u64; 2],
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CyclicCertBundle {
    #[serde(flatten)]
    pub cert: CyclicObstructionCert,
    /// Minimal polynomial of `K/Q`, low degree first.
    pub min_poly: Vec<i64>,
    pub primes: [u64; 2],
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "lowercase")]
pub enum CertificateBundle {
    Cyclic(CyclicCertBundle),
    Biquadratic(BiquadCertBundle),
}

/// `x = π^valuation · unit`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Valued {
    pub valuation: i64,
    pub unit: BiquadCoords,
}

/// Residue data at a prime of `Q(√3, √−7)`: residue field `F_p[x]/(modulus)`
/// and the image of the primitive element `√3 + √−7`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct LocalSpec {
    pub prime: u64,
    pub modulus: Vec<i64>,
    pub gen_image: Vec<i64>,
    pub uniformizer: BiquadCoords,
    pub a: Valued,
    pub b: Valued,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Norms {
    pub pi1: String,
    pub pi2: String,
    pub lambda0: String,
    pub mu0: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Example8Bundle {
    #[serde(flatten)]
    pub factor_set: FactorSetBundle,
    pub pi1: BiquadCoords,
    pub pi2: BiquadCoords,
    pub lambda0: QuatCoords,
    pub mu0: QuatCoords,
    pub norms: Norms,
    pub certificate: BiquadCertBundle,
    pub local: Vec<LocalSpec>,
    pub numerics: NumericsSpec,
}

/// `{"places": [...], "entries": {"label": [num, den]}}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantTable {
    pub places: Vec<Place>,
    pub entries: BTreeMap<String, (i64, i64)>,
}

/// Invariant table with an optional place permutation for the Deuring test.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantsBundle {
    #[serde(flatten)]
    pub table: InvariantTable,
    #[serde(default)]
    pub permutation: Option<BTreeMap<String, String>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FrobeniusSpec {
    pub place: String,
    pub prime: u64,
    /// Modulus of the residue field of `K` over `F_p`; `[0, 1]` for `F_p` itself.
    pub modulus: Vec<i64>,
    /// Residue of the generator of `K`.
    pub alpha_image: Vec<i64>,
    /// The candidate is `τ^tau_power`.
    pub tau_power: u32,
    /// `β̄^q` written as an element of `L`.
    pub beta_power: RelCoords,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LiftSpec {
    pub invariants: InvariantTable,
    pub local: ExtensionLocalData,
    pub exponent: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Example9Bundle {
    pub f: Vec<i64>,
    pub sigma: Vec<i64>,
    pub irreducible_mod: u64,
    /// `f ≡ (x − root)^deg f mod prime`.
    pub cube_mod: (u64, i64),
    pub g: RelCoords,
    pub tau: RelCoords,
    pub tau_squared: RelCoords,
    pub pi: Vec<i64>,
    pub norm_pi: i64,
    pub disc: Vec<i64>,
    pub disc_root: Vec<i64>,
    pub disc_root_norm: u64,
    pub frobenius: Vec<FrobeniusSpec>,
    pub invariants: InvariantTable,
    pub invariant_exponent: u64,
    pub deuring: BTreeMap<String, String>,
    pub lift: LiftSpec,
    pub certificate: CyclicCertBundle,
    pub numerics: NumericsSpec,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Example16Bundle {
    pub d: i64,
    pub radicands: Vec<i64>,
    pub certificate: BiquadCertBundle,
    pub numerics: NumericsSpec,
}

/// Input for `check --kind normsearch`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct NormSearchBundle {
    pub radicands: [i64; 2],
    pub a: BiquadCoords,
    pub b: BiquadCoords,
    pub base: [i8; 2],
    pub side: SideSpec,
    #[serde(default = "one")]
    pub denominator: u64,
    #[serde(default)]
    pub basis: BasisSpec,
}

/// Q-basis of `K` whose integer combinations are searched.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum BasisSpec {
    /// `1, √3, √−7, √3·√−7`.
    #[default]
    Radical,
    /// Powers of the primitive element.
    Power,
}

fn one() -> u64 {
    1
}
