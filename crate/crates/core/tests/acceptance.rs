//! The ten acceptance criteria. Each prints one `pass`/`FAIL` line; the
//! target exits nonzero if any criterion fails. Runs without the libtest
//! harness so the lines are always shown.

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use noncrossed::algebra::{build_quaternion_example, norm_in_ki, norm_in_kj, QAlgebra};
use noncrossed::brauer::{deuring_criterion, exponent, global_index_bounds, lcm_exponent_transfer, InvariantVector, Place};
use noncrossed::bundle::{parse, Example16Bundle, Example8Bundle, Example9Bundle, FactorSetBundle, EXAMPLE16, EXAMPLE8, EXAMPLE9};
use noncrossed::certify::{check_biquadratic_obstruction, check_cyclic_obstruction, BiquadraticObstructionCert, CyclicObstructionCert};
use noncrossed::exact::{factor_degrees_mod_p, fmt_rational, int, order_mod1, parse_rational, rat, UniPoly};
use noncrossed::factorset::{cubic_crossed_product_data, quaternion_factor_set, trivial_biquadratic_data, CrossedProductData, GenCrossedProduct};
use noncrossed::numfield::{build_cyclic_quartic, NFElem};
use noncrossed::replay::{check, cmd_example16, cmd_example8, cmd_example9, CheckKind};
use noncrossed::report::{Status, VerificationReport};
use noncrossed::residue::{tame_symbol, FFElem, FiniteField};
use noncrossed::twisted::{central_params, free_rank, numerics_report, FreeRank, Numerics, TwistedElem, TwistedRing};

type Outcome = Result<(), String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn lines_pass(r: &VerificationReport, ids: &[&str]) -> Outcome {
    for id in ids {
        let c = r.checks.iter().find(|c| c.id == *id).ok_or_else(|| format!("{}: no line {id}", r.command))?;
        ensure!(c.status == Status::Pass, "{}: {id} failed: {}", r.command, c.detail);
    }
    Ok(())
}

fn c1_norm_identities() -> Outcome {
    let ex = build_quaternion_example();
    let k = &ex.field.field;
    let q = |n: i64| NFElem::from_rational(k, int(n));
    ensure!(&ex.pi1 * &ex.sigma1.apply(&ex.pi1) == q(-2), "N(1+√3) ≠ −2");
    ensure!(&ex.pi2 * &ex.sigma2.apply(&ex.pi2) == q(2), "N((1+√−7)/2) ≠ 2");
    ensure!(norm_in_ki(&ex.lambda0).map_err(|e| e.to_string())? == q(-2), "N(λ0) ≠ −2");
    ensure!(norm_in_kj(&ex.mu0).map_err(|e| e.to_string())? == q(2), "N(μ0) ≠ 2");
    lines_pass(&cmd_example8(None).map_err(|e| e.to_string())?, &["norm_pi[1]", "norm_pi[2]", "norm0.lambda0", "norm0.mu0"])
}

type QuatCoords = BTreeMap<String, [String; 4]>;

fn map_coords(q: &mut QuatCoords, f: impl Fn(&[noncrossed::exact::Rational; 4]) -> [noncrossed::exact::Rational; 4]) {
    for v in q.values_mut() {
        let c: [_; 4] = std::array::from_fn(|k| parse_rational(&v[k]).unwrap());
        *v = f(&c).map(|x| fmt_rational(&x));
    }
}

fn scale(q: &mut QuatCoords, s: i64) {
    map_coords(q, |c| c.clone().map(|x| x * int(s)));
}

/// Multiplication by `√3` or `√−7` on coordinates over `1, √3, √−7, √3·√−7`.
fn times_root(q: &mut QuatCoords, r: i64) {
    map_coords(q, |c| match r {
        3 => [&c[1] * int(3), c[0].clone(), &c[3] * int(3), c[2].clone()],
        _ => [&c[2] * int(-7), &c[3] * int(-7), c[0].clone(), c[1].clone()],
    });
}

fn add_one(q: &mut QuatCoords) {
    let e = q.entry("1".into()).or_insert_with(|| std::array::from_fn(|_| "0".to_string()));
    e[0] = fmt_rational(&(parse_rational(&e[0]).unwrap() + int(1)));
}

fn flagged(b: &FactorSetBundle) -> Result<Vec<String>, String> {
    let r = check(CheckKind::FactorSet, &serde_json::to_string(b).unwrap(), 0).map_err(|e| e.to_string())?;
    Ok(r.failed_ids().into_iter().filter(|id| !id.starts_with("general.")).map(String::from).collect())
}

fn c2_factor_set() -> Outcome {
    let base = parse::<Example8Bundle>(EXAMPLE8).map_err(|e| e.to_string())?.factor_set;
    let r = check(CheckKind::FactorSet, &serde_json::to_string(&base).unwrap(), 0).map_err(|e| e.to_string())?;
    for id in ["abel.rel1.power", "abel.rel1.fixed", "abel.rel2.power", "abel.rel2.fixed", "abel.rel3.commute", "abel.rel4.norm", "abel.rel5.norm"] {
        ensure!(r.status_of(id) == Some(Status::Pass), "{id} fails on the printed data");
    }
    ensure!(r.passed(), "factor set report: {:?}", r.failed_ids());
    type M = fn(&mut FactorSetBundle);
    let suite: [(&str, M, &[&str]); 10] = [
        ("u·2", |b| scale(&mut b.u, 2), &["abel.rel4.norm", "abel.rel5.norm"]),
        ("u+1", |b| add_one(&mut b.u), &["abel.rel3.commute", "abel.rel4.norm", "abel.rel5.norm"]),
        ("α1·√3", |b| times_root(&mut b.alpha[0], 3), &["abel.rel1.fixed"]),
        ("α1+1", |b| add_one(&mut b.alpha[0]), &["abel.rel1.power", "abel.rel5.norm"]),
        ("α2·√−7", |b| times_root(&mut b.alpha[1], -7), &["abel.rel2.fixed"]),
        ("α2+1", |b| add_one(&mut b.alpha[1]), &["abel.rel2.power", "abel.rel4.norm"]),
        ("λ·(−1)", |b| scale(&mut b.sigma_tilde[1].lambda, -1), &["abel.rel3.commute", "abel.rel4.norm", "abel.rel5.norm"]),
        ("λ·2", |b| scale(&mut b.sigma_tilde[1].lambda, 2), &["sigma_tilde[2].valid"]),
        ("μ·(−1)", |b| scale(&mut b.sigma_tilde[0].lambda, -1), &["abel.rel3.commute", "abel.rel4.norm", "abel.rel5.norm"]),
        ("μ·2", |b| scale(&mut b.sigma_tilde[0].lambda, 2), &["sigma_tilde[1].valid"]),
    ];
    for (name, m, ids) in suite {
        let mut b = base.clone();
        m(&mut b);
        let got = flagged(&b)?;
        ensure!(got == ids, "mutation {name}: flagged {got:?}, expected {ids:?}");
    }
    Ok(())
}

fn random_elem<A: QAlgebra>(ring: &TwistedRing<A>, rng: &mut ChaCha8Rng) -> TwistedElem<A::Elem> {
    let alg = ring.algebra();
    let mut x = ring.zero();
    for _ in 0..rng.gen_range(1..=2) {
        let e: Vec<u32> = ring.factor_set().n.iter().map(|&k| rng.gen_range(0..=2 * k)).collect();
        let mut c = vec![int(0); alg.dim()];
        for _ in 0..3 {
            c[rng.gen_range(0..alg.dim())] = int(rng.gen_range(-2..=2));
        }
        x = ring.add(&x, &ring.monomial(&alg.from_coords(&c), &e));
    }
    x
}

fn c3_twisted_ring() -> Outcome {
    let ex = build_quaternion_example();
    let ring = TwistedRing::new(ex.alg.clone(), quaternion_factor_set(&ex)).map_err(|e| e.to_string())?;
    let c = central_params(&ring).map_err(|e| e.to_string())?;
    ensure!(c.report.passed(), "centrality: {:?}", c.report.failed_ids());
    ensure!(ring.commute(&c.t[0], &c.t[1]), "t1 t2 ≠ t2 t1");
    let mut rng = ChaCha8Rng::seed_from_u64(0xacce);
    for n in 0..100 {
        let (a, b, d) = (random_elem(&ring, &mut rng), random_elem(&ring, &mut rng), random_elem(&ring, &mut rng));
        ensure!(ring.mul(&ring.mul(&a, &b), &d) == ring.mul(&a, &ring.mul(&b, &d)), "associativity fails on triple {n}");
        ensure!(ring.mul(&a, &ring.add(&b, &d)) == ring.add(&ring.mul(&a, &b), &ring.mul(&a, &d)), "left distributivity fails on triple {n}");
        ensure!(ring.mul(&ring.add(&a, &b), &d) == ring.add(&ring.mul(&a, &d), &ring.mul(&b, &d)), "right distributivity fails on triple {n}");
    }
    let rank = free_rank(&ring, &c.t, 4);
    ensure!(rank == FreeRank { monomials: 4, coeff_rank: 4, rank: 16, q_span: 64, reduces: true }, "rank bookkeeping {rank:?}");
    Ok(())
}

fn c4_numerics() -> Outcome {
    let b8: Example8Bundle = parse(EXAMPLE8).map_err(|e| e.to_string())?;
    let b9: Example9Bundle = parse(EXAMPLE9).map_err(|e| e.to_string())?;
    let b16: Example16Bundle = parse(EXAMPLE16).map_err(|e| e.to_string())?;
    let want = [(&b8.numerics, 8, 8), (&b9.numerics, 9, 9), (&b16.numerics, 16, 8)];
    for (spec, ind, exp) in want {
        let n = numerics_report(&spec.input).map_err(|e| e.to_string())?;
        ensure!(n.ind == ind && n.exp == exp, "numerics {n:?}, expected ind {ind} exp {exp}");
        ensure!(n == spec.expected, "bundle expectation {:?} ≠ computed {n:?}", spec.expected);
    }
    ensure!(global_index_bounds(4, 2, &[(4, 2)]).map_err(|e| e.to_string())? == Some((8, 8)), "local bounds do not pin ind = 8");
    let n16 = numerics_report(&b16.numerics.input).map_err(|e| e.to_string())?;
    ensure!(n16 == Numerics { deg: 16, ind: 16, exp: 8 }, "example16 numerics {n16:?}");
    for r in [cmd_example8(None), cmd_example9(None), cmd_example16(None)] {
        lines_pass(&r.map_err(|e| e.to_string())?, &["numerics.deg", "numerics.ind", "numerics.exp"])?;
    }
    Ok(())
}

fn c5_cyclic_example() -> Outcome {
    let f = UniPoly::from_ints(&[-1, -2, 1, 1]);
    ensure!(factor_degrees_mod_p(&f, 2).map_err(|e| e.to_string())? == vec![3], "f reducible mod 2");
    ensure!(factor_degrees_mod_p(&f, 7).map_err(|e| e.to_string())? == vec![1, 1, 1], "f does not split mod 7");
    let mut iv = InvariantVector::new();
    iv.insert(Place::finite("w1", 7).map_err(|e| e.to_string())?, rat(1, 3)).map_err(|e| e.to_string())?;
    iv.insert(Place::finite("w2", 8).map_err(|e| e.to_string())?, rat(2, 3)).map_err(|e| e.to_string())?;
    ensure!(exponent(&iv).map_err(|e| e.to_string())? == 3, "invariant exponent ≠ 3");
    ensure!(order_mod1(&rat(1, 9)) == 9, "lifted invariant order ≠ 9");
    let r = cmd_example9(None).map_err(|e| e.to_string())?;
    lines_pass(
        &r,
        &[
            "f.irreducible_mod_2",
            "f.power_mod_7",
            "tau.root",
            "tau.order",
            "frobenius[w1].beta_power",
            "frobenius[w2].beta_power",
            "norm_pi",
            "disc.root_norm",
            "disc.square",
            "inv.exponent",
            "lift.exponent",
        ],
    )?;
    ensure!(r.passed(), "example9 failures: {:?}", r.failed_ids());
    Ok(())
}

fn c6_exponent_discrepancy() -> Outcome {
    let q = build_cyclic_quartic();
    ensure!(factor_degrees_mod_p(q.field.min_poly(), 3).map_err(|e| e.to_string())? == vec![4], "x⁴−4x²+2 reducible mod 3");
    ensure!(q.phi.order() == 4, "φ has order {}", q.phi.order());
    let phi2 = q.phi.pow(2);
    ensure!(phi2.apply(&q.sqrt2.value) == q.sqrt2.value, "φ² moves α²−2");
    ensure!(q.phi.apply(&q.sqrt2.value) == -&q.sqrt2.value, "φ fixes α²−2");
    // (L/Q, φ, 3) with 3 inertial of degree 4: local invariant v(3)/4.
    let exp_b = order_mod1(&rat(1, 4));
    ensure!(exp_b == 4, "exp (L/Q, φ, 3) = {exp_b}");
    ensure!(!lcm_exponent_transfer(2, 2, exp_b), "lcm(2, 2) = lcm(2, 4)");
    ensure!(noncrossed::exact::lcm_u64(2, 2) == 2 && noncrossed::exact::lcm_u64(2, exp_b) == 4, "lcm values");
    Ok(())
}

/// Local solvability of `a x² + b y² = z²` over `Q_p` for `a, b` of
/// valuation at most 1, by a primitive solution modulo `p²`.
fn conic_solvable(a: i64, b: i64, p: i64) -> bool {
    let m = p * p;
    (0..m).any(|x| {
        (0..m).any(|y| {
            (0..m).any(|z| (x % p != 0 || y % p != 0 || z % p != 0) && (a * x * x + b * y * y - z * z).rem_euclid(m) == 0)
        })
    })
}

fn c7_tame_symbol_oracle() -> Outcome {
    for p in [3i64, 5, 7] {
        let ff = FiniteField::prime(p as u64).map_err(|e| e.to_string())?;
        for va in 0..2 {
            for vb in 0..2 {
                for u in 1..p {
                    for w in 1..p {
                        let s = tame_symbol(va, &FFElem::from_int(&ff, u), vb, &FFElem::from_int(&ff, w)).map_err(|e| e.to_string())?;
                        let a = p.pow(va as u32) * u;
                        let b = p.pow(vb as u32) * w;
                        let oracle = if conic_solvable(a, b, p) { 1 } else { -1 };
                        ensure!(s == oracle, "p = {p}, a = {a}, b = {b}: tame symbol {s}, conic {oracle}");
                    }
                }
            }
        }
    }
    Ok(())
}

fn crossed<A: QAlgebra>(name: &str, d: CrossedProductData<A>) -> Outcome {
    let center = d.center.clone();
    let cp = GenCrossedProduct::build(d.alg, d.fs, &center).map_err(|e| format!("{name}: {e}"))?;
    ensure!(cp.associative_on_basis(), "{name}: not associative on basis triples");
    for s in 0..cp.factor_set().order() {
        ensure!(cp.conjugation_restricts(s, &center), "{name}: z_σ conjugation ≠ σ for σ #{s}");
    }
    Ok(())
}

fn c8_certificates() -> Outcome {
    let kq = CyclicObstructionCert { p: 3, n0: 1, m0: 1, q1: 7, q2: 2, v1_totally_ramified: true, v2_inertial: true, unique_ext: [true, true] };
    ensure!(check_cyclic_obstruction(&kq).map_err(|e| e.to_string())?.passed(), "cyclic certificate fails");
    let abel = BiquadraticObstructionCert { q1: 3, q2: 7, inertia_fields_distinct: true, k_real: true, big_k_not_real: true, unique_ext: [true, true] };
    ensure!(check_biquadratic_obstruction(&abel).map_err(|e| e.to_string())?.passed(), "biquadratic certificate fails");
    for r in [cmd_example8(None), cmd_example9(None), cmd_example16(None)] {
        let r = r.map_err(|e| e.to_string())?;
        let bad: Vec<_> = r.failed_ids().into_iter().filter(|id| id.starts_with("cert.") || id.starts_with("cross.")).collect();
        ensure!(bad.is_empty(), "{}: {bad:?}", r.command);
    }
    lines_pass(&cmd_example16(None).map_err(|e| e.to_string())?, &["cross.base_split[3]", "cross.base_split[7]"])?;
    type CM = fn(&mut CyclicObstructionCert);
    let cyc: [(CM, &str); 9] = [
        (|c| c.n0 = 2, "h1"),
        (|c| c.q1 = 5, "h1"),
        (|c| c.q1 = 19, "h2"),
        (|c| c.q2 = 7, "h3"),
        (|c| c.q2 = 4, "h3"),
        (|c| c.v1_totally_ramified = false, "h4.v1_totally_ramified"),
        (|c| c.v2_inertial = false, "h5.v2_inertial"),
        (|c| c.unique_ext[0] = false, "unique_ext[v1]"),
        (|c| c.unique_ext[1] = false, "unique_ext[v2]"),
    ];
    for (m, id) in cyc {
        let mut c = kq.clone();
        m(&mut c);
        let v = check_cyclic_obstruction(&c).map_err(|e| e.to_string())?;
        ensure!(v.report.failed_ids() == [id], "cyclic mutation → {:?}, expected [{id}]", v.report.failed_ids());
    }
    type BM = fn(&mut BiquadraticObstructionCert);
    let bq: [(BM, &str); 7] = [
        (|c| c.q1 = 5, "h1.q1"),
        (|c| c.q2 = 13, "h1.q2"),
        (|c| c.unique_ext[0] = false, "h2.unique[v1]"),
        (|c| c.unique_ext[1] = false, "h2.unique[v2]"),
        (|c| c.inertia_fields_distinct = false, "h3.inertia_distinct"),
        (|c| c.k_real = false, "k_real"),
        (|c| c.big_k_not_real = false, "K_not_real"),
    ];
    for (m, id) in bq {
        let mut c = abel.clone();
        m(&mut c);
        let v = check_biquadratic_obstruction(&c).map_err(|e| e.to_string())?;
        ensure!(v.report.failed_ids() == [id], "biquadratic mutation → {:?}, expected [{id}]", v.report.failed_ids());
    }
    Ok(())
}

fn c9_crossed_products() -> Outcome {
    crossed("(L/K, τ, 2π)", cubic_crossed_product_data(None))?;
    crossed("trivial biquadratic", trivial_biquadratic_data())
}

fn c10_deuring() -> Outcome {
    let mut iv = InvariantVector::new();
    for (label, q, inv) in [("w1", 7, rat(1, 3)), ("w1'", 7, rat(0, 1)), ("w2", 8, rat(2, 3))] {
        iv.insert(Place::finite(label, q).map_err(|e| e.to_string())?, inv).map_err(|e| e.to_string())?;
    }
    let perm = |pairs: &[(&str, &str)]| pairs.iter().map(|(a, b)| (a.to_string(), b.to_string())).collect::<BTreeMap<_, _>>();
    ensure!(deuring_criterion(&iv, &perm(&[])).map_err(|e| e.to_string())?, "identity permutation rejected");
    ensure!(
        !deuring_criterion(&iv, &perm(&[("w1", "w1'"), ("w1'", "w1")])).map_err(|e| e.to_string())?,
        "swapping w1 with a place of invariant 0 accepted"
    );
    let r = check(CheckKind::Invariants, include_str!("../data/sigma_extends.json"), 0).map_err(|e| e.to_string())?;
    ensure!(r.status_of("deuring") == Some(Status::Pass), "bundled place data: {:?}", r.failed_ids());
    Ok(())
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 10] = [
        ("1 norm identities", c1_norm_identities),
        ("2 factor set and 10-mutation suite", c2_factor_set),
        ("3 twisted ring", c3_twisted_ring),
        ("4 numerics", c4_numerics),
        ("5 cyclic cubic re-derivations", c5_cyclic_example),
        ("6 exponent discrepancy", c6_exponent_discrepancy),
        ("7 tame symbol vs conic oracle", c7_tame_symbol_oracle),
        ("8 certificates", c8_certificates),
        ("9 crossed-product builder", c9_crossed_products),
        ("10 Deuring criterion", c10_deuring),
    ];
    let mut failed = Vec::new();
    for (name, f) in criteria {
        match f() {
            Ok(()) => println!("pass criterion {name}"),
            Err(e) => {
                println!("FAIL criterion {name}: {e}");
                failed.push(name);
            }
        }
    }
    println!("acceptance: {} of 10 criteria pass", 10 - failed.len());
    if !failed.is_empty() {
        eprintln!("failed criteria: {failed:?}");
        std::process::exit(1);
    }
}
