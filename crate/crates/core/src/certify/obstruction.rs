use serde::{Deserialize, Serialize};

use super::CertError;
use crate::exact::{gcd_u64, is_prime, prime_power};
use crate::report::Report;

/// Data for the cyclic obstruction: `K/k` cyclic of degree `p^{n0}`,
/// `L/K` of degree `p^{m0}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CyclicObstructionCert {
    pub p: u64,
    pub n0: u32,
    pub m0: u32,
    pub q1: u64,
    pub q2: u64,
    /// `v1` totally ramified in `K/k`.
    pub v1_totally_ramified: bool,
    /// `v2` inertial in `K/k`.
    pub v2_inertial: bool,
    /// Unique extension of `v1`, `v2` to `L`.
    pub unique_ext: [bool; 2],
}

/// Data for the `Z/2 × Z/2` obstruction.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BiquadraticObstructionCert {
    pub q1: u64,
    pub q2: u64,
    pub inertia_fields_distinct: bool,
    pub k_real: bool,
    #[serde(rename = "K_not_real")]
    pub big_k_not_real: bool,
    /// Unique extension of `v1`, `v2` to `K`.
    pub unique_ext: [bool; 2],
}

/// Per-hypothesis report plus the conclusion a pass licenses.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub report: Report,
    pub conclusion: String,
    /// Hypotheses that a weaker form of the lemma would drop.
    pub relaxations: Vec<String>,
}

impl Verdict {
    pub fn passed(&self) -> bool {
        self.report.passed()
    }
}

fn residue_size(q: u64, p: Option<u64>) -> Result<(), CertError> {
    prime_power(q).ok_or(CertError::NotPrimePower(q))?;
    match p {
        Some(p) if gcd_u64(p, q) != 1 => Err(CertError::NotCoprime { q, p }),
        _ => Ok(()),
    }
}

fn flag(ok: bool, yes: &str) -> String {
    if ok {
        yes.to_string()
    } else {
        format!("not {yes}")
    }
}

/// Hypotheses (1)–(5) of the cyclic lemma plus unique extension to `L`.
///
/// Line ids: `h1`, `h2`, `h3`, `h4.v1_totally_ramified`, `h5.v2_inertial`,
/// `unique_ext[v1]`, `unique_ext[v2]`.
pub fn check_cyclic_obstruction(cert: &CyclicObstructionCert) -> Result<Verdict, CertError> {
    let p = cert.p;
    if !is_prime(p) {
        return Err(CertError::NotPrime(p));
    }
    if cert.n0 == 0 || cert.m0 == 0 {
        return Err(CertError::ZeroExponent);
    }
    residue_size(cert.q1, Some(p))?;
    residue_size(cert.q2, Some(p))?;
    let pk = |k: u32| p.checked_pow(k).ok_or(CertError::Precondition("p^n overflows"));
    let (a, b, c) = (pk(cert.n0)?, pk(cert.n0 + 1)?, pk(cert.m0)?);
    let mut r = Report::new();
    let ok = cert.q1 % a == 1 % a;
    r.check("h1", ok, format!("{} mod {a} = {}", cert.q1, cert.q1 % a));
    let ok = cert.q1 % b != 1 % b;
    r.check("h2", ok, format!("{} mod {b} = {}", cert.q1, cert.q1 % b));
    let ok = cert.q2 % c != 1 % c;
    r.check("h3", ok, format!("{} mod {c} = {}", cert.q2, cert.q2 % c));
    r.check("h4.v1_totally_ramified", cert.v1_totally_ramified, flag(cert.v1_totally_ramified, "totally ramified"));
    r.check("h5.v2_inertial", cert.v2_inertial, flag(cert.v2_inertial, "inertial"));
    let [u1, u2] = cert.unique_ext;
    r.check("unique_ext[v1]", u1, format!("{}; the argument also goes through without it", flag(u1, "unique")));
    r.check("unique_ext[v2]", u2, flag(u2, "unique"));
    let mut conclusion = format!(
        "no L ⊇ K with [L:K] = {c} and v1, v2 extending uniquely is abelian over k"
    );
    if a == p && c == p {
        conclusion.push_str(&format!("; [L:k] = {}, groups of order p² are abelian, so no such L is Galois", p * p));
    }
    Ok(Verdict {
        report: r,
        conclusion,
        relaxations: vec!["unique extension of v1 to L is not needed for the conclusion".into()],
    })
}

/// Hypotheses of the `Z/2 × Z/2` lemma.
///
/// Line ids: `h1.q1`, `h1.q2`, `h2.unique[v1]`, `h2.unique[v2]`,
/// `h3.inertia_distinct`, `k_real`, `K_not_real`.
pub fn check_biquadratic_obstruction(cert: &BiquadraticObstructionCert) -> Result<Verdict, CertError> {
    residue_size(cert.q1, None)?;
    residue_size(cert.q2, None)?;
    let mut r = Report::new();
    for (id, q) in [("h1.q1", cert.q1), ("h1.q2", cert.q2)] {
        r.check(id, q % 4 == 3, format!("{q} mod 4 = {}", q % 4));
    }
    for (k, u) in cert.unique_ext.iter().enumerate() {
        r.check(format!("h2.unique[v{}]", k + 1), *u, flag(*u, "unique"));
    }
    r.check("h3.inertia_distinct", cert.inertia_fields_distinct, flag(cert.inertia_fields_distinct, "distinct"));
    r.check("k_real", cert.k_real, flag(cert.k_real, "real"));
    r.check("K_not_real", cert.big_k_not_real, if cert.big_k_not_real { "K has no real embedding" } else { "K is real" });
    Ok(Verdict {
        report: r,
        conclusion: "no quadratic L/K with v1, v2 extending uniquely is Galois over k: a dihedral group forces equal \
                     inertia fields, a quaternion group has a single subgroup of order 2 against a real index-2 subfield, \
                     and an abelian group makes v1 totally ramified of degree 4, so |k̄_v1| ≡ 1 mod 4"
            .into(),
        relaxations: vec![],
    })
}
