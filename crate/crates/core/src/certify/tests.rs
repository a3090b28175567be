use proptest::prelude::*;

use super::cross::{biquadratic_local, cross_check_biquadratic, cross_check_cyclic, quadratic_splitting, Splitting};
use super::*;
use crate::exact::UniPoly;
use crate::report::Status;

fn kq_cyclic() -> CyclicObstructionCert {
    CyclicObstructionCert { p: 3, n0: 1, m0: 1, q1: 7, q2: 2, v1_totally_ramified: true, v2_inertial: true, unique_ext: [true, true] }
}

fn not_embed_abel() -> BiquadraticObstructionCert {
    BiquadraticObstructionCert { q1: 3, q2: 7, inertia_fields_distinct: true, k_real: true, big_k_not_real: true, unique_ext: [true, true] }
}

fn failed(v: &Verdict) -> Vec<String> {
    v.report.failed_ids().into_iter().map(String::from).collect()
}

#[test]
fn cyclic_certificate_passes() {
    let v = check_cyclic_obstruction(&kq_cyclic()).unwrap();
    assert!(v.passed());
    assert_eq!(v.report.len(), 7);
    assert!(v.conclusion.contains("no such L is Galois"));
    assert_eq!(v.relaxations.len(), 1);
}

#[test]
fn cyclic_single_mutations() {
    let cases: Vec<(Box<dyn Fn(&mut CyclicObstructionCert)>, &str)> = vec![
        (Box::new(|c| c.n0 = 2), "h1"),
        (Box::new(|c| c.q1 = 5), "h1"),
        (Box::new(|c| c.q1 = 19), "h2"),
        (Box::new(|c| c.q2 = 7), "h3"),
        (Box::new(|c| c.q2 = 4), "h3"),
        (Box::new(|c| c.v1_totally_ramified = false), "h4.v1_totally_ramified"),
        (Box::new(|c| c.v2_inertial = false), "h5.v2_inertial"),
        (Box::new(|c| c.unique_ext[0] = false), "unique_ext[v1]"),
        (Box::new(|c| c.unique_ext[1] = false), "unique_ext[v2]"),
    ];
    for (m, id) in cases {
        let mut c = kq_cyclic();
        m(&mut c);
        assert_eq!(failed(&check_cyclic_obstruction(&c).unwrap()), vec![id.to_string()]);
    }
}

#[test]
fn cyclic_rejects_malformed_data() {
    let mut c = kq_cyclic();
    c.q1 = 6;
    assert_eq!(check_cyclic_obstruction(&c).err(), Some(CertError::NotPrimePower(6)));
    c.q1 = 9;
    assert_eq!(check_cyclic_obstruction(&c).err(), Some(CertError::NotCoprime { q: 9, p: 3 }));
    c = kq_cyclic();
    c.p = 4;
    assert_eq!(check_cyclic_obstruction(&c).err(), Some(CertError::NotPrime(4)));
}

#[test]
fn biquadratic_certificates() {
    assert!(check_biquadratic_obstruction(&not_embed_abel()).unwrap().passed());
    let cases: Vec<(Box<dyn Fn(&mut BiquadraticObstructionCert)>, &str)> = vec![
        (Box::new(|c| c.q1 = 5), "h1.q1"),
        (Box::new(|c| c.q2 = 13), "h1.q2"),
        (Box::new(|c| c.unique_ext[0] = false), "h2.unique[v1]"),
        (Box::new(|c| c.unique_ext[1] = false), "h2.unique[v2]"),
        (Box::new(|c| c.inertia_fields_distinct = false), "h3.inertia_distinct"),
        (Box::new(|c| c.k_real = false), "k_real"),
        (Box::new(|c| c.big_k_not_real = false), "K_not_real"),
    ];
    for (m, id) in cases {
        let mut c = not_embed_abel();
        m(&mut c);
        assert_eq!(failed(&check_biquadratic_obstruction(&c).unwrap()), vec![id.to_string()]);
    }
}

#[test]
fn cross_checks_agree_with_certificates() {
    let f = UniPoly::from_ints(&[-1, -2, 1, 1]);
    let r = cross_check_cyclic(&kq_cyclic(), &f, [7, 2]);
    assert!(r.passed(), "{:?}", r.failed_ids());
    let mut wrong = kq_cyclic();
    wrong.v2_inertial = false;
    assert_eq!(cross_check_cyclic(&wrong, &f, [7, 2]).failed_ids(), vec!["v2_inertial"]);

    let r = cross_check_biquadratic(&not_embed_abel(), [3, -7], &[], [3, 7]);
    assert!(r.passed(), "{:?}", r.failed_ids());
    let r = cross_check_biquadratic(&not_embed_abel(), [3, -7], &[37], [3, 7]);
    assert!(r.passed(), "{:?}", r.failed_ids());
    assert_eq!(cross_check_biquadratic(&not_embed_abel(), [3, -7], &[5], [3, 7]).status_of("base_split[3]"), Some(Status::Fail));
}

#[test]
fn local_pictures() {
    assert_eq!(quadratic_splitting(-7, 3), Splitting::Inert);
    assert_eq!(quadratic_splitting(3, 7), Splitting::Inert);
    assert_eq!(quadratic_splitting(37, 3), Splitting::Split);
    assert_eq!(quadratic_splitting(37, 7), Splitting::Split);
    let at3 = biquadratic_local(3, -7, 3);
    assert_eq!(at3.subfields, [Splitting::Ramified, Splitting::Inert, Splitting::Ramified]);
    assert_eq!(at3.inertia_field, Some(1));
    assert_eq!(biquadratic_local(3, -7, 7).inertia_field, Some(0));
    assert!(!biquadratic_local(3, -7, 5).unique);
}

#[test]
fn radical_criteria() {
    assert_eq!(radical_irreducible_by_valuation(2, 3, 1), Ok(RadicalDecision::IrreducibleTotallyRamified { degree: 8 }));
    assert_eq!(radical_irreducible_by_valuation(2, 3, 2), Ok(RadicalDecision::CriterionNotApplicable));
    assert_eq!(radical_irreducible_by_valuation(3, 1, 0), Ok(RadicalDecision::CriterionNotApplicable));
    assert_eq!(distinct_radical_fields(2, 1, 0, true, 3), Ok(RadicalDecision::Distinct));
    assert_eq!(distinct_radical_fields(2, 1, 1, true, 3), Ok(RadicalDecision::CriterionNotApplicable));
    assert_eq!(distinct_radical_fields(3, 3, 0, true, 2), Ok(RadicalDecision::CriterionNotApplicable));
    assert!(distinct_radical_fields(2, 1, 0, false, 3).is_err());
    assert!(distinct_radical_fields(3, 1, 0, true, 3).is_err());
}

#[test]
fn embedding_guarantees() {
    assert_eq!(embedding_guarantee(true, true, AlgebraKind::Symbol), Guarantee::CrossedProductGuaranteed);
    assert_eq!(embedding_guarantee(true, false, AlgebraKind::Symbol), Guarantee::NoGuarantee);
    assert_eq!(embedding_guarantee(false, true, AlgebraKind::PAlgebra), Guarantee::CrossedProductGuaranteed);
    assert_eq!(embedding_guarantee(false, true, AlgebraKind::Symbol), Guarantee::NoGuarantee);
    assert_eq!(embedding_guarantee(true, true, AlgebraKind::Other), Guarantee::NoGuarantee);
}

proptest! {
    #[test]
    fn positive_radical_verdict_needs_coprime_valuation(p in prop::sample::select(vec![2u64, 3, 5, 7]), m in 1u32..4, va in -30i64..30) {
        let d = radical_irreducible_by_valuation(p, m, va).unwrap();
        if va % p as i64 == 0 {
            prop_assert_eq!(d, RadicalDecision::CriterionNotApplicable);
        } else {
            prop_assert_eq!(d, RadicalDecision::IrreducibleTotallyRamified { degree: p.pow(m) });
        }
    }

    #[test]
    fn cyclic_flags_fail_one_line(which in 0usize..4) {
        let mut c = kq_cyclic();
        match which {
            0 => c.v1_totally_ramified = false,
            1 => c.v2_inertial = false,
            2 => c.unique_ext[0] = false,
            _ => c.unique_ext[1] = false,
        }
        prop_assert_eq!(check_cyclic_obstruction(&c).unwrap().report.failed_ids().len(), 1);
    }
}
