//! Exact scalars and polynomials: rationals, dense polynomials over Q and
//! over prime fields, and small dense linear algebra over Q.

mod linalg;
mod modp;
mod poly;
mod rational;

pub use linalg::QMatrix;
pub use modp::{factor_degrees, factor_degrees_mod_p, is_irreducible_mod_p, modpoly_gcd, ModPoly};
pub use poly::{poly_discriminant, poly_gcd, poly_xgcd, resultant, UniPoly};
pub use rational::{
    fmt_rational, frac_mod1, gcd_u64, int, inv_mod, is_prime, lcm_all, lcm_u64, mul_mod,
    order_mod1, parse_rational, pow_mod, prime_power, rat, reduce_mod_p, Rational,
};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExactError {
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("operation needs a polynomial of positive degree")]
    ConstantPolynomial,
    #[error("leading coefficient vanishes modulo {0}")]
    LeadingVanishes(u64),
    #[error("coefficient denominator divisible by {0}")]
    NotIntegral(u64),
    #[error("{0} is not prime")]
    NotPrime(u64),
}
