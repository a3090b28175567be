use proptest::prelude::*;

use super::*;
use crate::algebra::{build_quaternion_example, field_aut_linear, AlgElem, LinearAut, QAlgebra};
use crate::exact::int;
use crate::numfield::{build_biquadratic, NFElem, RelElem};
use crate::report::Status;

#[test]
fn quaternion_factor_set_passes_all_five() {
    let ex = build_quaternion_example();
    let fs = quaternion_factor_set(&ex);
    let r = verify_abelian_r2(&ex.alg, &fs).unwrap();
    assert_eq!(r.len(), 7);
    assert!(r.passed(), "{:?}", r.failed_ids());
    let g = verify_abelian_general(&ex.alg, &fs).unwrap();
    assert!(g.passed(), "{:?}", g.failed_ids());
    assert!(g.checks.iter().any(|c| c.id == "six_factor[1,2,1]"));
}

#[test]
fn doubling_u_keeps_the_commutation_but_breaks_the_norms() {
    let ex = build_quaternion_example();
    let mut fs = quaternion_factor_set(&ex);
    let two_u = ex.alg.scale(&ex.u, &int(2));
    fs = AbelianFactorSet::r2(&ex.alg, [2, 2], [fs.sigma[0].clone(), fs.sigma[1].clone()], [fs.alpha[0].clone(), fs.alpha[1].clone()], two_u).unwrap();
    let r = verify_abelian_r2(&ex.alg, &fs).unwrap();
    assert_eq!(r.status_of("rel3.commute"), Some(Status::Pass));
    assert_eq!(r.status_of("rel5.norm"), Some(Status::Fail));
    assert_eq!(r.status_of("rel4.norm"), Some(Status::Fail));
}

#[test]
fn split_case_over_the_field() {
    let b = build_biquadratic();
    let k = b.field.clone();
    let fs = AbelianFactorSet::r2(
        &k,
        [2, 2],
        [field_aut_linear(&b.sigma1), field_aut_linear(&b.sigma2)],
        [NFElem::one(&k), NFElem::one(&k)],
        NFElem::one(&k),
    )
    .unwrap();
    assert!(verify_abelian_r2(&k, &fs).unwrap().passed());
    assert!(verify_abelian_general(&k, &fs).unwrap().passed());
}

#[test]
fn cyclic_relations() {
    let ex = build_quaternion_example();
    let d = &ex.alg;
    let s1 = ex.sigma1_tilde.to_linear();
    let good = CyclicFactorSet { n: 2, sigma: s1.clone(), alpha: ex.alpha1.clone() };
    assert!(verify_cyclic(d, &good).passed());
    let id = CyclicFactorSet { n: 2, sigma: LinearAut::identity(d.dim()), alpha: d.one() };
    assert!(verify_cyclic(d, &id).passed());
    let bad = CyclicFactorSet { n: 2, sigma: s1, alpha: d.add(&ex.alpha1, &d.one()) };
    let r = verify_cyclic(d, &bad);
    assert_eq!(r.status_of("power_inner"), Some(Status::Fail));
}

#[test]
fn one_generator_reduces_to_the_cyclic_relations() {
    let ex = build_quaternion_example();
    let d = &ex.alg;
    let s1 = ex.sigma1_tilde.to_linear();
    for alpha in [ex.alpha1.clone(), d.add(&ex.alpha1, &d.one())] {
        let ab = AbelianFactorSet { n: vec![2], sigma: vec![s1.clone()], u: vec![vec![d.one()]], alpha: vec![alpha.clone()] };
        let cy = CyclicFactorSet { n: 2, sigma: s1.clone(), alpha };
        assert_eq!(verify_abelian_general(d, &ab).unwrap().passed(), verify_cyclic(d, &cy).passed());
    }
}

#[test]
fn three_generators_after_scalar_extension() {
    let ex = build_quaternion_example();
    let (e, fs) = extended_factor_set(&ex, 37);
    let r = verify_abelian_general(&e, &fs).unwrap();
    assert!(r.passed(), "{:?}", r.failed_ids());
    let mut bad = fs.clone();
    bad.u[0][2] = e.scale(&bad.u[0][2], &int(2));
    let rb = verify_abelian_general(&e, &bad).unwrap();
    assert!(!rb.passed());
    assert_eq!(rb.status_of("u_inverse[1,3]"), Some(Status::Fail));
}

#[test]
fn trivial_biquadratic_crossed_product() {
    let data = trivial_biquadratic_data();
    let cp = GenCrossedProduct::build(data.alg.clone(), data.fs.clone(), &data.center).unwrap();
    assert_eq!(cp.dim_over(data.fixed_q_dim), 16);
    assert_eq!(cp.one(), cp.z(cp.factor_set().group.identity()));
    assert!(cp.associative_on_basis());
    for s in 0..4 {
        assert!(cp.conjugation_restricts(s, &data.center));
    }
}

#[test]
fn cubic_cyclic_crossed_product() {
    let data = cubic_crossed_product_data(None);
    let cp = GenCrossedProduct::build(data.alg.clone(), data.fs.clone(), &data.center).unwrap();
    assert_eq!(cp.dim_over(data.fixed_q_dim), 9);
    assert!(cp.associative_on_basis());
    for s in 0..3 {
        assert!(cp.conjugation_restricts(s, &data.center));
    }
    // z³ = 2π
    let z = cp.z(1);
    let z3 = cp.pow(&z, 3);
    assert_eq!(z3, cp.embed(&data.fs.f[2][1]));
}

#[test]
fn non_cocycle_is_rejected() {
    let data = cubic_crossed_product_data(None);
    let mut fs = data.fs.clone();
    let l = &data.alg;
    fs.f[1][1] = l.from_rational(&int(5));
    assert!(matches!(GenCrossedProduct::build(l.clone(), fs, &data.center), Err(FactorSetError::Verification(_))));
}

#[test]
fn cyclic_normal_form_recovers_parameters() {
    let data = cubic_crossed_product_data(None);
    let l = &data.alg;
    let (sigma, alpha) = cyclic_normal_form(l, &data.fs).unwrap();
    assert_eq!(alpha, data.fs.f[2][1]);
    assert!(verify_cyclic(l, &CyclicFactorSet { n: 3, sigma: sigma.clone(), alpha }).passed());
    let triv = FactorSet::cyclic(l, &data.fs.omega[1], &l.one(), 3);
    let (_, one) = cyclic_normal_form(l, &triv).unwrap();
    assert_eq!(one, l.one());
    // a cohomologous twist by central units keeps ω in power form
    let m: Vec<RelElem> = vec![l.from_rational(&int(3)), l.add(&l.generators()[1], &l.one()), l.generators()[0].clone()];
    let tw = twist(l, &data.fs, &m).unwrap();
    assert!(are_cohomologous(l, &data.fs, &tw, &m));
    let (s2, a2) = cyclic_normal_form(l, &tw).unwrap();
    assert!(verify_cyclic(l, &CyclicFactorSet { n: 3, sigma: s2, alpha: a2 }).passed());
    assert!(verify_factor_set(l, &tw, &data.center).passed());
}

#[test]
fn cohomology_witnesses() {
    let data = cubic_crossed_product_data(None);
    let l = &data.alg;
    let ones = vec![l.one(); 3];
    assert!(are_cohomologous(l, &data.fs, &data.fs, &ones));
    let m = vec![l.from_rational(&int(2)), l.one(), l.one()];
    let unnormalized = twist(l, &data.fs, &m).unwrap();
    assert_ne!(unnormalized.f[0][0], l.one());
    let w = normalization_witness(l, &unnormalized).unwrap();
    let normalized = twist(l, &unnormalized, &w).unwrap();
    assert_eq!(normalized.f[0][0], l.one());
    assert!(are_cohomologous(l, &unnormalized, &normalized, &w));
    let wrong = vec![l.from_rational(&int(3)), l.one(), l.one()];
    assert!(!are_cohomologous(l, &unnormalized, &normalized, &wrong));
}

#[test]
fn cocycle_extraction_returns_a_coboundary() {
    let data = cubic_crossed_product_data(None);
    let l = &data.alg;
    let m: Vec<RelElem> = vec![l.one(), l.add(&l.generators()[1], &l.one()), l.from_rational(&int(7))];
    let tw = twist(l, &data.fs, &m).unwrap();
    let c = extract_cocycle(l, &data.fs, &tw).unwrap();
    let g = &data.fs.group;
    for s in 0..3 {
        for t in 0..3 {
            let expect = l.mul(&l.mul(&m[s], &data.fs.omega[s].apply(l, &m[t])), &l.inv(&m[g.mul(s, t)]).unwrap());
            assert_eq!(c[s][t], expect);
        }
    }
}

#[test]
fn commuting_factor_set_on_a_noncommutative_algebra_rejects_cocycle_extraction() {
    let ex = build_quaternion_example();
    let d = &ex.alg;
    let fs = FactorSet::cyclic(d, &ex.sigma1_tilde.to_linear(), &ex.alpha1, 2);
    let mut other = fs.clone();
    other.f[1][1] = AlgElem::i(d);
    assert!(extract_cocycle(d, &fs, &other).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn six_factor_relation_is_automatic_for_two_generators(c in proptest::collection::vec(-2i64..=2, 16)) {
        let ex = build_quaternion_example();
        let d = &ex.alg;
        let u = d.from_coords(&c.into_iter().map(int).collect::<Vec<_>>());
        prop_assume!(d.inv(&u).is_some());
        let base = quaternion_factor_set(&ex);
        let fs = AbelianFactorSet::r2(d, [2, 2], [base.sigma[0].clone(), base.sigma[1].clone()], [base.alpha[0].clone(), base.alpha[1].clone()], u).unwrap();
        let r = verify_abelian_general(d, &fs).unwrap();
        for c in r.checks.iter().filter(|c| c.id.starts_with("six_factor")) {
            prop_assert_eq!(c.status, Status::Pass, "{}", c.id);
        }
    }
}
