//! Recomputes certificate flags from residue arithmetic over `Q`.

use serde::Serialize;

use super::{BiquadraticObstructionCert, CyclicObstructionCert};
use crate::exact::{factor_degrees_mod_p, poly_discriminant, reduce_mod_p, ModPoly, UniPoly};
use crate::report::Report;
use crate::residue::{FFElem, FiniteField};

/// Behaviour of an odd prime in a quadratic field `Q(√d)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Splitting {
    Ramified,
    Inert,
    Split,
}

/// Legendre-symbol test; `p` odd prime, `d` squarefree.
pub fn quadratic_splitting(d: i64, p: u64) -> Splitting {
    let f = FiniteField::prime(p).expect("prime");
    let x = FFElem::from_int(&f, d);
    if x.is_zero() {
        Splitting::Ramified
    } else if x.is_square().expect("odd nonzero") {
        Splitting::Split
    } else {
        Splitting::Inert
    }
}

/// Local picture of an odd prime in `Q(√d1, √d2)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BiquadraticLocal {
    /// `[d1, d2, d1·d2]`, behaviour in each quadratic subfield.
    pub subfields: [Splitting; 3],
    pub unique: bool,
    /// Index into the subfields of the inertia field, when it is quadratic.
    pub inertia_field: Option<usize>,
}

pub fn biquadratic_local(d1: i64, d2: i64, p: u64) -> BiquadraticLocal {
    let subfields = [d1, d2, d1 * d2].map(|d| quadratic_splitting(d, p));
    let unique = !subfields.contains(&Splitting::Split);
    let unram: Vec<usize> = (0..3).filter(|&i| subfields[i] != Splitting::Ramified).collect();
    let inertia_field = if unram.len() == 1 { Some(unram[0]) } else { None };
    BiquadraticLocal { subfields, unique, inertia_field }
}

fn agree(r: &mut Report, id: &str, computed: bool, claimed: bool) {
    r.check(id, computed == claimed, format!("computed {computed}, certificate {claimed}"));
}

/// Cross-checks a `Z/2 × Z/2` certificate for `K = k(√d1, √d2)`,
/// `k = Q(√e)` for the listed `e` (empty for `k = Q`), at primes `p1`, `p2`.
/// Base radicands must be nonzero squares mod each prime, so that
/// `k_v = Q_p` and residue sizes are `p`.
pub fn cross_check_biquadratic(cert: &BiquadraticObstructionCert, radicands: [i64; 2], base: &[i64], primes: [u64; 2]) -> Report {
    let mut r = Report::new();
    for p in primes {
        let split = base.iter().all(|&e| quadratic_splitting(e, p) == Splitting::Split);
        r.check(format!("base_split[{p}]"), split, if split { "k_v = Q_p" } else { "k_v ≠ Q_p" });
    }
    agree(&mut r, "q[v1]", primes[0] == cert.q1, true);
    agree(&mut r, "q[v2]", primes[1] == cert.q2, true);
    let loc = primes.map(|p| biquadratic_local(radicands[0], radicands[1], p));
    agree(&mut r, "unique[v1]", loc[0].unique, cert.unique_ext[0]);
    agree(&mut r, "unique[v2]", loc[1].unique, cert.unique_ext[1]);
    let distinct = matches!((loc[0].inertia_field, loc[1].inertia_field), (Some(a), Some(b)) if a != b);
    agree(&mut r, "inertia_distinct", distinct, cert.inertia_fields_distinct);
    agree(&mut r, "k_real", base.iter().all(|&e| e > 0), cert.k_real);
    let not_real = radicands[0] < 0 || radicands[1] < 0;
    agree(&mut r, "K_not_real", not_real, cert.big_k_not_real);
    r
}

/// `f ≡ (x − c)^n mod p` for some `c`.
fn is_linear_power_mod(f: &UniPoly, p: u64) -> bool {
    let Ok(fp) = ModPoly::from_unipoly(f, p) else { return false };
    let Some(n) = fp.degree() else { return false };
    (0..p).any(|c| {
        let lin = ModPoly::new(p, vec![(p - c) % p, 1]);
        let mut acc = ModPoly::one(p);
        for _ in 0..n {
            acc = acc.mul(&lin);
        }
        acc == fp.monic()
    })
}

/// Cross-checks a cyclic certificate for `K = Q[x]/(f)` at primes `p1`, `p2`.
/// Total ramification at `p1` is read as `p1 | disc f` and
/// `f ≡ (x − c)^n`; inertia at `p2` as `p2 ∤ disc f` and `f` irreducible.
pub fn cross_check_cyclic(cert: &CyclicObstructionCert, f: &UniPoly, primes: [u64; 2]) -> Report {
    let mut r = Report::new();
    agree(&mut r, "q[v1]", primes[0] == cert.q1, true);
    agree(&mut r, "q[v2]", primes[1] == cert.q2, true);
    let disc = poly_discriminant(f).expect("nonzero polynomial");
    let divides = |p: u64| reduce_mod_p(&disc, p) == Some(0);
    let ram = divides(primes[0]) && is_linear_power_mod(f, primes[0]);
    agree(&mut r, "v1_totally_ramified", ram, cert.v1_totally_ramified);
    let n = f.degree().unwrap_or(0);
    let inert = !divides(primes[1]) && factor_degrees_mod_p(f, primes[1]).map(|d| d == vec![n]).unwrap_or(false);
    agree(&mut r, "v2_inertial", inert, cert.v2_inertial);
    r
}
