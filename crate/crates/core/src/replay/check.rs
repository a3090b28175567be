use std::str::FromStr;

use crate::algebra::{norm_equation_search, AlgElem, Side, SearchBasis, SearchConfig, SymbolAlgebra};
use crate::brauer::{deuring_criterion, exponent, sum_zero};
use crate::bundle::{
    base_aut, biquad_elem, BasisSpec, build_quaternion_bundle, invariant_vector, parse, BundleError, CertificateBundle, FactorSetBundle,
    InvariantsBundle, NormSearchBundle, SideSpec,
};
use crate::certify::cross::{cross_check_biquadratic, cross_check_cyclic};
use crate::certify::{check_biquadratic_obstruction, check_cyclic_obstruction};
use crate::exact::UniPoly;
use crate::factorset::{verify_abelian_general, verify_abelian_r2};
use crate::numfield::build_biquadratic;
use crate::report::Report;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CheckKind {
    FactorSet,
    Invariants,
    Certificate,
    NormSearch,
}

impl CheckKind {
    pub const ALL: [CheckKind; 4] = [CheckKind::FactorSet, CheckKind::Invariants, CheckKind::Certificate, CheckKind::NormSearch];

    pub fn name(self) -> &'static str {
        match self {
            CheckKind::FactorSet => "factorset",
            CheckKind::Invariants => "invariants",
            CheckKind::Certificate => "certificate",
            CheckKind::NormSearch => "normsearch",
        }
    }
}

impl FromStr for CheckKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        CheckKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| format!("unknown kind {s:?}; expected factorset, invariants, certificate or normsearch"))
    }
}

fn invalid(e: impl std::fmt::Display) -> BundleError {
    BundleError::Invalid(e.to_string())
}

fn fmt_quat(x: &AlgElem) -> String {
    let names = [((0, 0), ""), ((1, 0), "·i"), ((0, 1), "·j"), ((1, 1), "·k")];
    let parts: Vec<String> = names
        .iter()
        .filter(|((s, t), _)| !x.coeff(*s, *t).is_zero())
        .map(|((s, t), n)| format!("({}){n}", x.coeff(*s, *t)))
        .collect();
    if parts.is_empty() {
        "0".into()
    } else {
        parts.join(" + ")
    }
}

fn factorset(text: &str) -> Result<Report, BundleError> {
    let b: FactorSetBundle = parse(text)?;
    let data = build_quaternion_bundle(&b)?;
    let mut r = Report::new();
    let mut ok = true;
    for k in 0..2 {
        let s = data.sigma_tilde(k);
        ok &= s.is_ok();
        r.check(format!("sigma_tilde[{}].valid", k + 1), s.is_ok(), s.map_or_else(|e| e.to_string(), |_| "automorphism".into()));
    }
    if ok {
        let fs = data.factor_set().map_err(invalid)?;
        r.absorb("abel", verify_abelian_r2(&data.alg, &fs).map_err(invalid)?);
        r.absorb("general", verify_abelian_general(&data.alg, &fs).map_err(invalid)?);
    }
    Ok(r)
}

fn invariants(text: &str) -> Result<Report, BundleError> {
    let b: InvariantsBundle = parse(text)?;
    let iv = invariant_vector(&b.table)?;
    let mut r = Report::new();
    r.check("sum_zero", sum_zero(&iv), format!("Σ inv = {}", iv.total()));
    if let Ok(e) = exponent(&iv) {
        r.check("exponent", true, format!("ind = exp = {e}"));
    }
    if let Some(p) = &b.permutation {
        let d = deuring_criterion(&iv, p).map_err(invalid)?;
        r.check("deuring", d, if d { "invariants are permutation invariant" } else { "permutation moves an invariant" });
    }
    Ok(r)
}

fn certificate(text: &str) -> Result<Report, BundleError> {
    let b: CertificateBundle = parse(text)?;
    let mut r = Report::new();
    match b {
        CertificateBundle::Cyclic(c) => {
            let v = check_cyclic_obstruction(&c.cert).map_err(invalid)?;
            r.absorb("cert", v.report);
            r.absorb("cross", cross_check_cyclic(&c.cert, &UniPoly::from_ints(&c.min_poly), c.primes));
            for note in v.relaxations {
                r.check("note", true, note);
            }
        }
        CertificateBundle::Biquadratic(c) => {
            let v = check_biquadratic_obstruction(&c.cert).map_err(invalid)?;
            r.absorb("cert", v.report);
            r.absorb("cross", cross_check_biquadratic(&c.cert, c.radicands, &c.base, c.primes));
        }
    }
    Ok(r)
}

fn normsearch(text: &str, bound: i64) -> Result<Report, BundleError> {
    let b: NormSearchBundle = parse(text)?;
    if b.radicands != [3, -7] {
        return Err(invalid("only Q(√3, √−7) is supported"));
    }
    let bq = build_biquadratic();
    let alg = SymbolAlgebra::quaternion(&bq.field, biquad_elem(&bq, &b.a)?, biquad_elem(&bq, &b.b)?).map_err(invalid)?;
    let sigma = base_aut(&bq, b.base)?;
    let side = match b.side {
        SideSpec::Kj => Side::KJ,
        SideSpec::Ki => Side::KI,
    };
    let (s3, s7) = (&bq.sqrt3.value, &bq.sqrtm7.value);
    let basis = match b.basis {
        BasisSpec::Radical => SearchBasis::Custom(vec![crate::numfield::NFElem::one(&bq.field), s3.clone(), s7.clone(), s3 * s7]),
        BasisSpec::Power => SearchBasis::Power,
    };
    let cfg = SearchConfig { bound, denominator: b.denominator, basis };
    let found = norm_equation_search(&alg, &sigma, side, &cfg).map_err(invalid)?;
    let mut r = Report::new();
    r.check(
        "solution",
        found.is_some(),
        match &found {
            Some(l) => format!("λ = {}", fmt_quat(l)),
            None => format!("none found with bound {bound}"),
        },
    );
    Ok(r)
}

/// Runs the verifier of `kind` on a JSON bundle.
pub fn check(kind: CheckKind, text: &str, bound: i64) -> Result<Report, BundleError> {
    match kind {
        CheckKind::FactorSet => factorset(text),
        CheckKind::Invariants => invariants(text),
        CheckKind::Certificate => certificate(text),
        CheckKind::NormSearch => normsearch(text, bound),
    }
}
