use super::example8::certificate_lines;
use super::numerics_lines;
use crate::algebra::{LinearAut, QAlgebra};
use crate::bundle::{build_quaternion_bundle, BundleError, Example16Bundle, Example8Bundle};
use crate::report::Report;
use crate::twisted::{adjoin_conjugation, adjoin_generator, central_params, linearly_disjoint_quadratic, scalar_extension, TwistedRing};

fn invalid(e: impl std::fmt::Display) -> BundleError {
    BundleError::Invalid(e.to_string())
}

/// Replay of the index-16 exponent-8 example. With `sign_flip` false the
/// third generator is adjoined with trivial action, which must be caught.
pub fn example16(b8: &Example8Bundle, b: &Example16Bundle, sign_flip: bool) -> Result<Report, BundleError> {
    let mut r = Report::new();
    let data = build_quaternion_bundle(&b8.factor_set)?;
    let fs = data.factor_set().map_err(invalid)?;
    let base = TwistedRing::new(data.alg.clone(), fs).map_err(invalid)?;
    let d = b.d;
    let disjoint = linearly_disjoint_quadratic(d, &b.radicands);
    r.check("extend.disjoint", disjoint, format!("Q(√{d}) is linearly disjoint from Q({:?})", b.radicands));
    let ext = match scalar_extension(&base, d, &b.radicands) {
        Ok(e) => e,
        Err(e) => {
            r.check("extend.ring", false, e.to_string());
            return Ok(r);
        }
    };
    let e = ext.algebra();
    let gens = data.alg.generators();
    for k in 0..2 {
        let sig = &base.factor_set().sigma[k];
        let ok = gens.iter().all(|g| ext.factor_set().sigma[k].apply(e, &e.embed(g)) == e.embed(&sig.apply(&data.alg, g)));
        r.check(format!("extend.sigma_lift[{}]", k + 1), ok, "σ̃ ⊗ id agrees with σ̃ on D ⊗ 1");
    }
    let big = if sign_flip {
        adjoin_conjugation(&ext)
    } else {
        adjoin_generator(&ext, LinearAut::identity(e.dim()), 2, e.one())
    };
    let big = match big {
        Ok(x) => x,
        Err(err) => {
            r.check("x3.adjoin", false, err.to_string());
            return Ok(r);
        }
    };
    r.check("x3.adjoin", true, "three-generator factor set accepted");
    let be = big.algebra();
    let x3 = big.x(2);
    r.check("x3.commutes[x1]", big.commute(&x3, &big.x(0)), "x3·x1 = x1·x3");
    r.check("x3.commutes[x2]", big.commute(&x3, &big.x(1)), "x3·x2 = x2·x3");
    let on_d = gens.iter().all(|g| big.commute(&x3, &big.constant(&be.embed(g))));
    r.check("x3.commutes[D]", on_d, "x3 commutes with D ⊗ 1");
    let s = big.constant(&be.sqrt());
    let flipped = big.mul(&x3, &s) == big.neg(&big.mul(&s, &x3));
    r.check("x3.sign_flip", flipped, format!("x3·√{d} = −√{d}·x3"));
    match central_params(&big) {
        Ok(c) => r.absorb("center", c.report),
        Err(err) => {
            r.check("center", false, err.to_string());
        }
    }
    certificate_lines(&mut r, &b.certificate);
    numerics_lines(&mut r, &b.numerics);
    Ok(r)
}
