use super::{eq_line, numerics_lines};
use crate::brauer::{deuring_criterion, exponent, extend_scalars, sum_zero};
use crate::bundle::{invariant_vector, rel_elem, BundleError, Example9Bundle, FrobeniusSpec};
use crate::certify::{check_cyclic_obstruction, cross::cross_check_cyclic};
use crate::exact::{factor_degrees_mod_p, int, is_prime, ModPoly, UniPoly};
use crate::numfield::{
    cubic_discriminant, cyclic_group, rational_norm, rel_discriminant_by_norm, NFAutomorphism, NFElem, NumberField, RelAutomorphism,
    RelativeExtension,
};
use crate::report::Report;
use crate::residue::{FFElem, FiniteField, ResidueMap, TowerResidueMap};

fn invalid(e: impl std::fmt::Display) -> BundleError {
    BundleError::Invalid(e.to_string())
}

fn frobenius_lines(r: &mut Report, ext: &std::sync::Arc<RelativeExtension>, tau: &RelAutomorphism, f: &FrobeniusSpec) -> Result<(), BundleError> {
    let ff = if f.modulus.is_empty() {
        FiniteField::prime(f.prime)
    } else {
        FiniteField::new(ModPoly::from_i64(f.prime, &f.modulus))
    }
    .map_err(invalid)?;
    let base = ResidueMap::new(ext.base(), &ff, FFElem::from_coeffs(&ff, &f.alpha_image)).map_err(invalid)?;
    let tower = TowerResidueMap::new(base, ext).map_err(invalid)?;
    let q = tower.base_size();
    let expected = tower.apply(&rel_elem(ext, &f.beta_power)).map_err(invalid)?;
    let place = &f.place;
    r.check(format!("frobenius[{place}].beta_power"), tower.frobenius_of_gen() == expected, format!("β̄^{q} as listed"));
    let candidate = tau.pow(f.tau_power);
    let ok = tower.frobenius_match(&candidate).map_err(invalid)?;
    r.check(format!("frobenius[{place}].match"), ok, format!("τ^{} is the Frobenius at {place}", f.tau_power));
    Ok(())
}

/// Replay of the cyclic index-9 exponent-9 example.
pub fn example9(b: &Example9Bundle) -> Result<Report, BundleError> {
    let mut r = Report::new();
    let f = UniPoly::from_ints(&b.f);
    let n = f.degree().unwrap_or(0);
    let degs = factor_degrees_mod_p(&f, b.irreducible_mod).map_err(invalid)?;
    r.check(format!("f.irreducible_mod_{}", b.irreducible_mod), degs == vec![n], format!("factor degrees {degs:?}"));
    let (p, root) = b.cube_mod;
    let fp = ModPoly::from_unipoly(&f, p).map_err(invalid)?;
    let lin = ModPoly::from_i64(p, &[-root, 1]);
    let power = (0..n).fold(ModPoly::one(p), |acc, _| acc.mul(&lin));
    eq_line(&mut r, &format!("f.power_mod_{p}"), fp == power);

    let k = NumberField::new("K", "α", f.clone()).map_err(invalid)?;
    let sigma = NFAutomorphism::new(&k, NFElem::from_ints(&k, &b.sigma));
    r.check("sigma.automorphism", sigma.as_ref().is_ok_and(|s| s.order() as usize == n), "σ(α) is a root of f of full order");
    let sigma = sigma.map_err(invalid)?;
    let gal = cyclic_group(&sigma);

    let g: Vec<NFElem> = b.g.iter().map(|c| NFElem::from_ints(&k, c)).collect();
    let ext = RelativeExtension::new("L", "β", &k, g.clone()).map_err(invalid)?;
    let tau = RelAutomorphism::new(&ext, NFAutomorphism::identity(&k), rel_elem(&ext, &b.tau));
    r.check("tau.root", tau.is_ok(), "g(τ(β)) = 0");
    let tau = tau.map_err(invalid)?;
    r.check("tau.order", tau.order() == 3, format!("τ has order {}", tau.order()));
    eq_line(&mut r, "tau.square", *tau.pow(2).gen_image() == rel_elem(&ext, &b.tau_squared));
    for fr in &b.frobenius {
        frobenius_lines(&mut r, &ext, &tau, fr)?;
    }

    let npi = rational_norm(&NFElem::from_ints(&k, &b.pi), &gal).map_err(invalid)?;
    r.check("norm_pi", npi == int(b.norm_pi), format!("N(π) = {npi}"));
    let disc = NFElem::from_ints(&k, &b.disc);
    eq_line(&mut r, "disc.formula", cubic_discriminant(&g) == disc);
    let rel_gal: Vec<_> = (0..3).map(|e| tau.pow(e)).collect();
    eq_line(&mut r, "disc.by_norm", rel_discriminant_by_norm(&ext, &rel_gal).map_err(invalid)? == disc);
    let root = NFElem::from_ints(&k, &b.disc_root);
    eq_line(&mut r, "disc.square", &root * &root == disc);
    let nr = rational_norm(&root, &gal).map_err(invalid)?;
    r.check(
        "disc.root_norm",
        nr == int(b.disc_root_norm as i64) && is_prime(b.disc_root_norm),
        format!("N = {nr}, prime: {}", is_prime(b.disc_root_norm)),
    );

    let iv = invariant_vector(&b.invariants)?;
    r.check("inv.sum_zero", sum_zero(&iv), format!("Σ inv = {}", iv.total()));
    let e = exponent(&iv);
    r.check("inv.exponent", e.as_ref().ok() == Some(&b.invariant_exponent), exp_detail(&e, b.invariant_exponent));
    let d = deuring_criterion(&iv, &b.deuring);
    r.check(
        "deuring",
        matches!(d, Ok(true)),
        match &d {
            Ok(true) => "invariants constant on the permutation orbits".to_string(),
            Ok(false) => "an invariant moves under the permutation".to_string(),
            Err(e) => e.to_string(),
        },
    );
    let lift = invariant_vector(&b.lift.invariants)?;
    let ext_iv = extend_scalars(&lift, &b.lift.local).map_err(invalid)?;
    let agree = ext_iv.iter().all(|(p, v)| iv.get(&p.label) == *v);
    r.check("lift.extend", agree && b.lift.local.is_galois_consistent(), format!("extended: {ext_iv}"));
    let le = exponent(&lift);
    r.check("lift.exponent", le.as_ref().ok() == Some(&b.lift.exponent), exp_detail(&le, b.lift.exponent));

    match check_cyclic_obstruction(&b.certificate.cert) {
        Ok(v) => r.absorb("cert", v.report),
        Err(e) => {
            r.check("cert", false, e.to_string());
        }
    }
    let minp = UniPoly::from_ints(&b.certificate.min_poly);
    r.absorb("cross", cross_check_cyclic(&b.certificate.cert, &minp, b.certificate.primes));
    numerics_lines(&mut r, &b.numerics);
    Ok(r)
}

fn exp_detail<E: std::fmt::Display>(e: &Result<u64, E>, expected: u64) -> String {
    match e {
        Ok(x) => format!("exp = {x}, expected {expected}"),
        Err(err) => err.to_string(),
    }
}
