use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::BrauerError;
use crate::exact::{fmt_rational, frac_mod1, int, lcm_all, order_mod1, prime_power, rat, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PlaceKind {
    Real,
    Complex,
    Finite,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Place {
    pub label: String,
    pub kind: PlaceKind,
    /// Residue field size; finite places only.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub q: Option<u64>,
}

impl Place {
    pub fn real(label: &str) -> Self {
        Place { label: label.into(), kind: PlaceKind::Real, q: None }
    }

    pub fn complex(label: &str) -> Self {
        Place { label: label.into(), kind: PlaceKind::Complex, q: None }
    }

    pub fn finite(label: &str, q: u64) -> Result<Self, BrauerError> {
        prime_power(q).ok_or(BrauerError::NotPrimePower(q))?;
        Ok(Place { label: label.into(), kind: PlaceKind::Finite, q: Some(q) })
    }

    /// Checks the kind/residue-size invariants of a deserialized place.
    pub fn validate(&self) -> Result<(), BrauerError> {
        match (self.kind, self.q) {
            (PlaceKind::Finite, Some(q)) => prime_power(q).map(|_| ()).ok_or(BrauerError::NotPrimePower(q)),
            (PlaceKind::Finite, None) => Err(BrauerError::NotPrimePower(0)),
            (_, None) => Ok(()),
            (_, Some(_)) => Err(BrauerError::KindMismatch(self.label.clone())),
        }
    }

    /// Local invariants allowed here: all of Q/Z, `{0, 1/2}` or `{0}`.
    fn admits(&self, x: &Rational) -> bool {
        match self.kind {
            PlaceKind::Finite => true,
            PlaceKind::Real => x.is_zero() || *x == rat(1, 2),
            PlaceKind::Complex => x.is_zero(),
        }
    }
}

/// Finitely supported map from places to Q/Z; unlisted places carry 0.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct InvariantVector {
    entries: BTreeMap<String, (Place, Rational)>,
}

impl InvariantVector {
    pub fn new() -> Self {
        Self::default()
    }

    /// Sets the invariant at `place`, reducing it into `[0, 1)`. Signed input
    /// such as `−1/9` is accepted and stored as `8/9`.
    pub fn insert(&mut self, place: Place, value: Rational) -> Result<(), BrauerError> {
        place.validate()?;
        let v = frac_mod1(&value);
        if !place.admits(&v) {
            return Err(BrauerError::Archimedean(place.label));
        }
        self.entries.insert(place.label.clone(), (place, v));
        Ok(())
    }

    pub fn with(mut self, place: Place, value: Rational) -> Result<Self, BrauerError> {
        self.insert(place, value)?;
        Ok(self)
    }

    pub fn get(&self, label: &str) -> Rational {
        self.entries.get(label).map_or_else(Rational::zero, |(_, v)| v.clone())
    }

    pub fn place(&self, label: &str) -> Option<&Place> {
        self.entries.get(label).map(|(p, _)| p)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Place, &Rational)> {
        self.entries.values().map(|(p, v)| (p, v))
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Sum of all entries in Q/Z.
    pub fn total(&self) -> Rational {
        frac_mod1(&self.entries.values().fold(Rational::zero(), |acc, (_, v)| acc + v))
    }

    /// Entrywise sum; places present in both must agree.
    pub fn add(&self, other: &Self) -> Result<Self, BrauerError> {
        let mut out = self.clone();
        for (label, (p, v)) in &other.entries {
            if let Some((q, _)) = self.entries.get(label) {
                if q != p {
                    return Err(BrauerError::KindMismatch(label.clone()));
                }
            }
            out.insert(p.clone(), self.get(label) + v)?;
        }
        Ok(out)
    }
}

impl fmt::Display for InvariantVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.iter().map(|(p, v)| format!("{}: {}", p.label, fmt_rational(v))).collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

pub fn sum_zero(iv: &InvariantVector) -> bool {
    iv.total().is_zero()
}

/// lcm of the orders of the entries; the common value of index and exponent.
pub fn exponent(iv: &InvariantVector) -> Result<u64, BrauerError> {
    if !sum_zero(iv) {
        return Err(BrauerError::SumNonzero);
    }
    Ok(lcm_all(iv.iter().map(|(_, v)| order_mod1(v))))
}

/// A place `w` of the top field with the place `below` it and the local degree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TopPlace {
    pub place: Place,
    pub below: String,
    pub local_degree: u32,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtensionLocalData {
    pub top: Vec<TopPlace>,
}

impl ExtensionLocalData {
    /// True iff all places over a fixed bottom place share one local degree.
    pub fn is_galois_consistent(&self) -> bool {
        let mut seen: BTreeMap<&str, u32> = BTreeMap::new();
        self.top.iter().all(|t| *seen.entry(&t.below).or_insert(t.local_degree) == t.local_degree)
    }
}

/// `inv_w A^K = n_w · inv_v A` for each listed `w | v`.
pub fn extend_scalars(iv: &InvariantVector, data: &ExtensionLocalData) -> Result<InvariantVector, BrauerError> {
    let mut out = InvariantVector::new();
    for t in &data.top {
        if t.local_degree == 0 {
            return Err(BrauerError::NonPositive);
        }
        if iv.place(&t.below).is_none() {
            return Err(BrauerError::MissingPlace(t.below.clone()));
        }
        out.insert(t.place.clone(), iv.get(&t.below) * int(t.local_degree as i64))?;
    }
    Ok(out)
}

/// True iff `inv_v = inv_{perm(v)}` for every listed place. Places missing
/// from `perm` are fixed; the permutation must preserve kind and `q`.
pub fn deuring_criterion(iv: &InvariantVector, perm: &BTreeMap<String, String>) -> Result<bool, BrauerError> {
    for (from, to) in perm {
        match (iv.place(from), iv.place(to)) {
            (Some(p), Some(q)) if p.kind == q.kind && p.q == q.q => {}
            (Some(_), Some(_)) => return Err(BrauerError::KindMismatch(from.clone())),
            (None, _) => return Err(BrauerError::MissingPlace(from.clone())),
            (_, None) => return Err(BrauerError::MissingPlace(to.clone())),
        }
    }
    Ok(iv.iter().all(|(p, v)| {
        let image = perm.get(&p.label).unwrap_or(&p.label);
        iv.get(image) == *v
    }))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn nine() -> InvariantVector {
        InvariantVector::new()
            .with(Place::finite("v1", 7).unwrap(), rat(1, 9))
            .unwrap()
            .with(Place::finite("v2", 2).unwrap(), rat(-1, 9))
            .unwrap()
    }

    fn three() -> InvariantVector {
        InvariantVector::new()
            .with(Place::finite("w1", 7).unwrap(), rat(1, 3))
            .unwrap()
            .with(Place::finite("w2", 8).unwrap(), rat(2, 3))
            .unwrap()
    }

    #[test]
    fn signed_input_is_normalized() {
        assert_eq!(nine().get("v2"), rat(8, 9));
        assert_eq!(nine().get("elsewhere"), Rational::zero());
    }

    #[test]
    fn exponents() {
        assert_eq!(exponent(&three()), Ok(3));
        assert_eq!(exponent(&nine()), Ok(9));
        assert_eq!(exponent(&InvariantVector::new()), Ok(1));
        let bad = InvariantVector::new()
            .with(Place::finite("a", 7).unwrap(), rat(1, 3))
            .unwrap()
            .with(Place::finite("b", 2).unwrap(), rat(1, 3))
            .unwrap();
        assert!(!sum_zero(&bad));
        assert_eq!(exponent(&bad), Err(BrauerError::SumNonzero));
    }

    #[test]
    fn four_place_design_sums_to_zero() {
        // a places over each of v0..v3 with ±1/m
        let (m, a) = (6i64, 3usize);
        let mut iv = InvariantVector::new();
        for (vi, sign) in [(0, 1), (1, 1), (2, -1), (3, -1)] {
            for k in 0..a {
                iv.insert(Place::finite(&format!("w{vi}.{k}"), 13).unwrap(), rat(sign, m)).unwrap();
            }
        }
        assert!(sum_zero(&iv));
        assert_eq!(exponent(&iv), Ok(6));
    }

    #[test]
    fn archimedean_entries_are_restricted() {
        let mut iv = InvariantVector::new();
        assert!(iv.insert(Place::real("inf"), rat(1, 2)).is_ok());
        assert_eq!(iv.insert(Place::real("inf"), rat(1, 3)), Err(BrauerError::Archimedean("inf".into())));
        assert_eq!(iv.insert(Place::complex("c"), rat(1, 2)), Err(BrauerError::Archimedean("c".into())));
        assert_eq!(Place::finite("x", 6), Err(BrauerError::NotPrimePower(6)));
    }

    #[test]
    fn scalar_extension_multiplies_by_local_degree() {
        let data = ExtensionLocalData {
            top: vec![
                TopPlace { place: Place::finite("w1", 7).unwrap(), below: "v1".into(), local_degree: 3 },
                TopPlace { place: Place::finite("w2", 8).unwrap(), below: "v2".into(), local_degree: 3 },
            ],
        };
        assert!(data.is_galois_consistent());
        let ext = extend_scalars(&nine(), &data).unwrap();
        assert_eq!(ext, three());

        let trivial = ExtensionLocalData {
            top: vec![
                TopPlace { place: Place::finite("v1", 7).unwrap(), below: "v1".into(), local_degree: 1 },
                TopPlace { place: Place::finite("v2", 2).unwrap(), below: "v2".into(), local_degree: 1 },
            ],
        };
        assert_eq!(extend_scalars(&nine(), &trivial).unwrap(), nine());

        let real = InvariantVector::new().with(Place::real("inf"), rat(1, 2)).unwrap();
        let to_complex =
            ExtensionLocalData { top: vec![TopPlace { place: Place::complex("c"), below: "inf".into(), local_degree: 2 }] };
        assert_eq!(extend_scalars(&real, &to_complex).unwrap().get("c"), Rational::zero());
    }

    #[test]
    fn deuring() {
        let iv = three();
        assert_eq!(deuring_criterion(&iv, &BTreeMap::new()), Ok(true));
        let fixed: BTreeMap<String, String> = [("w1", "w1"), ("w2", "w2")].iter().map(|(a, b)| (a.to_string(), b.to_string())).collect();
        assert_eq!(deuring_criterion(&iv, &fixed), Ok(true));

        let swappable = InvariantVector::new()
            .with(Place::finite("p", 7).unwrap(), rat(1, 3))
            .unwrap()
            .with(Place::finite("p'", 7).unwrap(), rat(2, 3))
            .unwrap();
        let swap: BTreeMap<String, String> = [("p", "p'"), ("p'", "p")].iter().map(|(a, b)| (a.to_string(), b.to_string())).collect();
        assert_eq!(deuring_criterion(&swappable, &swap), Ok(false));
        let cross: BTreeMap<String, String> = [("w1", "w2"), ("w2", "w1")].iter().map(|(a, b)| (a.to_string(), b.to_string())).collect();
        assert_eq!(deuring_criterion(&iv, &cross), Err(BrauerError::KindMismatch("w1".into())));
    }

    fn vector(vals: &[(i64, i64)]) -> InvariantVector {
        let mut iv = InvariantVector::new();
        for (k, &(n, d)) in vals.iter().enumerate() {
            iv.insert(Place::finite(&format!("p{k}"), 5).unwrap(), rat(n, d)).unwrap();
        }
        // balance at one extra place so the sum is zero
        let t = iv.total();
        iv.insert(Place::finite("bal", 5).unwrap(), -t).unwrap();
        iv
    }

    proptest::proptest! {
        #[test]
        fn exponent_of_a_sum_divides_the_lcm(
            a in proptest::collection::vec((-20i64..20, 1i64..13), 0..5),
            b in proptest::collection::vec((-20i64..20, 1i64..13), 0..5),
        ) {
            let (x, y) = (vector(&a), vector(&b));
            let s = x.add(&y).unwrap();
            let l = crate::exact::lcm_u64(exponent(&x).unwrap(), exponent(&y).unwrap());
            proptest::prop_assert_eq!(l % exponent(&s).unwrap(), 0);
        }

        #[test]
        fn scalar_extension_is_additive(
            a in proptest::collection::vec((-20i64..20, 1i64..13), 3),
            b in proptest::collection::vec((-20i64..20, 1i64..13), 3),
            degs in proptest::collection::vec(1u32..5, 3),
        ) {
            let (x, y) = (vector(&a), vector(&b));
            let data = ExtensionLocalData {
                top: (0..3).map(|k| TopPlace {
                    place: Place::finite(&format!("w{k}"), 25).unwrap(),
                    below: format!("p{k}"),
                    local_degree: degs[k],
                }).collect(),
            };
            let lhs = extend_scalars(&x.add(&y).unwrap(), &data).unwrap();
            let rhs = extend_scalars(&x, &data).unwrap().add(&extend_scalars(&y, &data).unwrap()).unwrap();
            proptest::prop_assert_eq!(lhs, rhs);
        }
    }
}
