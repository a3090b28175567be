use std::sync::Arc;

use super::{eq_line, numerics_lines};
use crate::algebra::{norm_in_ki, norm_in_kj, AlgAutomorphism, AlgElem, SymbolAlgebra};
use crate::bundle::{biquad_elem, build_quaternion_bundle, quat_elem, BiquadCertBundle, BundleError, Example8Bundle, LocalSpec};
use crate::certify::{check_biquadratic_obstruction, cross::cross_check_biquadratic};
use crate::exact::{int, parse_rational, ModPoly};
use crate::factorset::verify_abelian_r2;
use crate::numfield::{generated_group, Biquadratic, NFElem};
use crate::report::Report;
use crate::residue::{tame_symbol, FFElem, FiniteField, ResidueMap};
use crate::twisted::{central_params, free_rank, TwistedRing};

/// `x̄` for `x ∈ K(i)` or `x ∈ K(j)`: the `i`- or `j`-coefficient negated.
fn bar(x: &AlgElem) -> AlgElem {
    let alg = x.algebra();
    let c = |s, t| AlgElem::monomial(alg, x.coeff(s, t).clone(), s, t);
    &(&c(0, 0) - &c(1, 0)) - &c(0, 1)
}

pub(super) fn certificate_lines(r: &mut Report, c: &BiquadCertBundle) {
    match check_biquadratic_obstruction(&c.cert) {
        Ok(v) => r.absorb("cert", v.report),
        Err(e) => {
            r.check("cert", false, e.to_string());
        }
    }
    r.absorb("cross", cross_check_biquadratic(&c.cert, c.radicands, &c.base, c.primes));
}

fn local_lines(r: &mut Report, bq: &Biquadratic, a: &NFElem, b: &NFElem, l: &LocalSpec) -> Result<(), BundleError> {
    let p = l.prime;
    let invalid = |e: &dyn std::fmt::Display| BundleError::Invalid(format!("local data at {p}: {e}"));
    let ff = FiniteField::new(ModPoly::from_i64(p, &l.modulus)).map_err(|e| invalid(&e))?;
    let map = ResidueMap::new(&bq.field, &ff, FFElem::from_coeffs(&ff, &l.gen_image)).map_err(|e| invalid(&e))?;
    let pi = biquad_elem(bq, &l.uniformizer)?;
    let res = |x: &NFElem| map.apply(x).map_err(|e| invalid(&e));
    r.check(format!("local[{p}].uniformizer"), res(&pi)?.is_zero(), "uniformizer reduces to 0");
    let mut units = Vec::new();
    for (name, x, v) in [("a", a, &l.a), ("b", b, &l.b)] {
        let unit = biquad_elem(bq, &v.unit)?;
        let ok = pi.pow(v.valuation).map(|pv| &pv * &unit == *x).unwrap_or(false);
        r.check(format!("local[{p}].{name}"), ok, format!("{name} = π^{} · unit", v.valuation));
        let ur = res(&unit)?;
        r.check(format!("local[{p}].{name}_unit"), !ur.is_zero(), "unit residue is nonzero");
        units.push((v.valuation, ur));
    }
    let sym = if units.iter().any(|(_, u)| u.is_zero()) {
        None
    } else {
        tame_symbol(units[0].0, &units[0].1, units[1].0, &units[1].1).ok()
    };
    r.check(
        format!("local[{p}].nonsplit"),
        sym == Some(-1),
        match sym {
            Some(s) => format!("tame symbol (a, b) = {s}"),
            None => "symbol undefined".into(),
        },
    );
    Ok(())
}

struct Hand<'a> {
    alg: &'a Arc<SymbolAlgebra>,
    s1: &'a AlgAutomorphism,
    s2: &'a AlgAutomorphism,
}

impl Hand<'_> {
    fn k(&self, x: &NFElem) -> AlgElem {
        AlgElem::from_base(self.alg, x.clone())
    }
}

#[allow(clippy::too_many_arguments)]
fn hand_identities(r: &mut Report, h: &Hand, bq: &Biquadratic, pi1: &NFElem, pi2: &NFElem, l0: &AlgElem, m0: &AlgElem, alpha: &[AlgElem], u: &AlgElem) {
    let alg = h.alg;
    let (i, j) = (AlgElem::i(alg), AlgElem::j(alg));
    let two = NFElem::from_rational(&bq.field, int(2));
    let s1pi1 = bq.sigma1.apply(pi1);
    let inv = |x: &NFElem| x.inv().expect("nonzero field element");
    let ainv = |x: &AlgElem| x.inv().ok();

    let lhs = h.s2.apply(m0);
    let rhs = (&h.k(&two) + &(l0 * &j)).scale(&inv(pi2));
    eq_line(r, "hand.tau_mu0", lhs == rhs);
    let lhs = h.s1.apply(&bar(l0));
    let rhs = -&(&h.k(pi1) + &(m0 * &i));
    eq_line(r, "hand.tau_lambda0_bar", lhs == rhs);

    let lhs = &h.s2.apply(m0) * &(&(l0 * m0) - &h.k(&two));
    let rhs = (l0 - m0).scale(&two);
    eq_line(r, "hand.commutator", lhs == rhs);

    let rhs = (&(l0 - &j) * &j).scale(&inv(pi2));
    eq_line(r, "hand.right_side[1]", h.s2.apply(&alpha[0]) == rhs);
    let s1a2 = h.s1.apply(&alpha[1]);
    let rhs = (&(m0 + &i.scale(&s1pi1)) * &i).scale(&bq.sqrt3.value);
    eq_line(r, "hand.right_side[2]", s1a2 == rhs);
    let c = inv(&(&(&s1pi1 * &s1pi1) * &bq.sqrt3.value));
    let rhs = ainv(&i).map(|ii| (&ii * &(&i.scale(&s1pi1) - &bar(m0))).scale(&c));
    eq_line(r, "hand.right_side_inv", ainv(&s1a2).is_some() && ainv(&s1a2) == rhs);

    let lhs = &(u * &h.s1.apply(u)) * &alpha[0];
    eq_line(r, "hand.(2)-1", lhs == h.s2.apply(&alpha[0]));
    let lhs = ainv(&alpha[1]).map(|a| &(&a * &h.s2.apply(u)) * u);
    eq_line(r, "hand.(2)-2", lhs.is_some() && lhs == ainv(&s1a2));

    let formula = (&(l0 * &bar(m0)) - &h.k(&two)).scale(&inv(&(&two * &s1pi1)));
    eq_line(r, "hand.u_formula", *u == formula);
    let up = (&(&bar(l0) * m0) + &h.k(&two)).scale(&-&inv(&(&two * pi2)));
    let a = h.s1.apply(&h.s2.apply(&up));
    let b = h.s2.apply(&h.s1.apply(&up));
    eq_line(r, "hand.u_prime", a == *u && b == *u);
}

/// Replay of the index-8 exponent-8 example.
pub fn example8(b: &Example8Bundle) -> Result<Report, BundleError> {
    let data = build_quaternion_bundle(&b.factor_set)?;
    let bq = &data.field;
    let alg = &data.alg;
    let mut r = Report::new();
    let q = |s: &str| parse_rational(s).ok_or_else(|| BundleError::Rational(s.to_string()));

    let group = generated_group(&data.base, &bq.field);
    let orders_ok = data.base.iter().all(|s| s.order() == 2);
    r.check("field.galois", group.len() == 4 && orders_ok, format!("⟨σ1, σ2⟩ has order {}", group.len()));
    let pi1 = biquad_elem(bq, &b.pi1)?;
    let pi2 = biquad_elem(bq, &b.pi2)?;
    eq_line(&mut r, "field.a = √3·π1", *alg.a() == &bq.sqrt3.value * &pi1);
    eq_line(&mut r, "field.b = √−7·π2", *alg.b() == &bq.sqrtm7.value * &pi2);

    let n1 = &pi1 * &data.base[0].apply(&pi1);
    r.check("norm_pi[1]", n1.as_rational() == Some(q(&b.norms.pi1)?), format!("π1·σ1(π1) = {n1}"));
    let n2 = &pi2 * &data.base[1].apply(&pi2);
    r.check("norm_pi[2]", n2.as_rational() == Some(q(&b.norms.pi2)?), format!("π2·σ2(π2) = {n2}"));
    let l0 = quat_elem(alg, bq, &b.lambda0)?;
    let m0 = quat_elem(alg, bq, &b.mu0)?;
    let nl = norm_in_ki(&l0).ok();
    r.check(
        "norm0.lambda0",
        nl.as_ref().and_then(|x| x.as_rational()) == Some(q(&b.norms.lambda0)?) && (&l0 * &bar(&l0)).as_base() == nl,
        format!("N(λ0) = {}", nl.as_ref().map_or("undefined".into(), |x| x.to_string())),
    );
    let nm = norm_in_kj(&m0).ok();
    r.check(
        "norm0.mu0",
        nm.as_ref().and_then(|x| x.as_rational()) == Some(q(&b.norms.mu0)?) && (&m0 * &bar(&m0)).as_base() == nm,
        format!("N(μ0) = {}", nm.as_ref().map_or("undefined".into(), |x| x.to_string())),
    );
    eq_line(&mut r, "lambda = λ0/π2", data.lambda[1].0 == l0.scale(&pi2.inv().map_err(|e| BundleError::Invalid(e.to_string()))?));
    eq_line(&mut r, "mu = μ0/π1", data.lambda[0].0 == m0.scale(&pi1.inv().map_err(|e| BundleError::Invalid(e.to_string()))?));

    let sig: Vec<_> = (0..2).map(|k| data.sigma_tilde(k)).collect();
    for (k, s) in sig.iter().enumerate() {
        r.check(
            format!("sigma_tilde[{}].valid", k + 1),
            s.is_ok(),
            match s {
                Ok(_) => "extends σ to an automorphism of D".to_string(),
                Err(e) => e.to_string(),
            },
        );
    }
    if let (Ok(s1), Ok(s2)) = (&sig[0], &sig[1]) {
        let fs = data.factor_set().map_err(|e| BundleError::Invalid(e.to_string()))?;
        r.absorb("abel", verify_abelian_r2(alg, &fs).map_err(|e| BundleError::Invalid(e.to_string()))?);
        hand_identities(&mut r, &Hand { alg, s1, s2 }, bq, &pi1, &pi2, &l0, &m0, &data.alpha, &data.u);

        certificate_lines(&mut r, &b.certificate);
        for l in &b.local {
            local_lines(&mut r, bq, alg.a(), alg.b(), l)?;
        }

        match TwistedRing::new(alg.clone(), fs) {
            Ok(ring) => {
                r.check("twisted.ring", true, "factor set accepted");
                match central_params(&ring) {
                    Ok(c) => {
                        r.absorb("twisted.center", c.report);
                        r.check("twisted.t1t2", ring.commute(&c.t[0], &c.t[1]), "t1·t2 = t2·t1");
                        let fr = free_rank(&ring, &c.t, bq.field.degree());
                        r.check(
                            "twisted.rank",
                            fr.reduces && fr.rank == fr.monomials * fr.coeff_rank,
                            format!("{} monomials × {} = {} over the center", fr.monomials, fr.coeff_rank, fr.rank),
                        );
                    }
                    Err(e) => {
                        r.check("twisted.center", false, e.to_string());
                    }
                }
            }
            Err(e) => {
                r.check("twisted.ring", false, e.to_string());
            }
        }
    } else {
        r.check("abel", false, "relations not evaluated: σ̃ is undefined");
        certificate_lines(&mut r, &b.certificate);
    }

    numerics_lines(&mut r, &b.numerics);
    Ok(r)
}
