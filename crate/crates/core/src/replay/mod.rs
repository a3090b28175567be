//! End-to-end replays of the worked examples and the `check` dispatcher.
//! Every command returns an ordered [`Report`]; the CLI wraps it in a
//! [`VerificationReport`].

mod check;
mod example16;
mod example8;
mod example9;

pub use check::{check, CheckKind};
pub use example16::example16;
pub use example8::example8;
pub use example9::example9;

use std::fmt;
use std::str::FromStr;

use crate::bundle::{parse, BundleError, Example16Bundle, Example8Bundle, Example9Bundle, NumericsSpec, EXAMPLE16, EXAMPLE8, EXAMPLE9};
use crate::exact::{fmt_rational, int, parse_rational};
use crate::report::{Report, VerificationReport};
use crate::brauer::global_index_bounds;
use crate::twisted::{numerics_report, ExpRoute};

/// Named single-point perturbations of the bundled data.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mutation {
    /// Example 8: replace `u` by `2u`.
    UTimesTwo,
    /// Example 9: offer `τ²` as the Frobenius at `w1`.
    FrobeniusTauSquared,
    /// Example 9: set the invariant at `w2` to `1/3`.
    W2OneThird,
    /// Example 16: let `x3` commute with `√d`.
    NoSignFlip,
}

impl Mutation {
    pub const ALL: [Mutation; 4] = [Mutation::UTimesTwo, Mutation::FrobeniusTauSquared, Mutation::W2OneThird, Mutation::NoSignFlip];

    pub fn name(self) -> &'static str {
        match self {
            Mutation::UTimesTwo => "u-times-2",
            Mutation::FrobeniusTauSquared => "frobenius-tau-squared",
            Mutation::W2OneThird => "w2-one-third",
            Mutation::NoSignFlip => "no-sign-flip",
        }
    }

    /// The example command the mutation applies to.
    pub fn command(self) -> &'static str {
        match self {
            Mutation::UTimesTwo => "example8",
            Mutation::FrobeniusTauSquared | Mutation::W2OneThird => "example9",
            Mutation::NoSignFlip => "example16",
        }
    }
}

impl fmt::Display for Mutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Mutation {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        Mutation::ALL.into_iter().find(|m| m.name() == s).ok_or_else(|| format!("unknown mutation {s:?}"))
    }
}

fn command_name(base: &str, m: Option<Mutation>) -> String {
    match m {
        Some(m) => format!("{base} --mutate {m}"),
        None => base.to_string(),
    }
}

fn wrong_target(m: Mutation) -> BundleError {
    BundleError::Invalid(format!("mutation {m} applies to {}", m.command()))
}

pub fn cmd_example8(m: Option<Mutation>) -> Result<VerificationReport, BundleError> {
    let mut b: Example8Bundle = parse(EXAMPLE8)?;
    match m {
        None => {}
        Some(Mutation::UTimesTwo) => {
            for x in b.factor_set.u.values_mut().flat_map(|c| c.iter_mut()) {
                let v = parse_rational(x).ok_or_else(|| BundleError::Rational(x.clone()))?;
                *x = fmt_rational(&(v * int(2)));
            }
        }
        Some(other) => return Err(wrong_target(other)),
    }
    Ok(VerificationReport::new(&command_name("example8", m), EXAMPLE8.as_bytes(), example8(&b)?))
}

pub fn cmd_example9(m: Option<Mutation>) -> Result<VerificationReport, BundleError> {
    let mut b: Example9Bundle = parse(EXAMPLE9)?;
    match m {
        None => {}
        Some(Mutation::FrobeniusTauSquared) => b.frobenius[0].tau_power = 2,
        Some(Mutation::W2OneThird) => {
            b.invariants.entries.insert("w2".into(), (1, 3));
        }
        Some(other) => return Err(wrong_target(other)),
    }
    Ok(VerificationReport::new(&command_name("example9", m), EXAMPLE9.as_bytes(), example9(&b)?))
}

pub fn cmd_example16(m: Option<Mutation>) -> Result<VerificationReport, BundleError> {
    let b8: Example8Bundle = parse(EXAMPLE8)?;
    let b: Example16Bundle = parse(EXAMPLE16)?;
    let flip = match m {
        None => true,
        Some(Mutation::NoSignFlip) => false,
        Some(other) => return Err(wrong_target(other)),
    };
    let mut input = EXAMPLE16.as_bytes().to_vec();
    input.extend_from_slice(EXAMPLE8.as_bytes());
    Ok(VerificationReport::new(&command_name("example16", m), &input, example16(&b8, &b, flip)?))
}

fn numerics_lines(r: &mut Report, spec: &NumericsSpec) {
    if let ExpRoute::LocalBounds { local } = &spec.input.route {
        let n = spec.input.orders.iter().product();
        let b = global_index_bounds(n, spec.input.ind_a, local);
        let detail = match &b {
            Ok(Some((lo, hi))) => format!("{lo} | ind | {hi}"),
            Ok(None) => "no local data".into(),
            Err(e) => e.to_string(),
        };
        r.check("numerics.index_bounds", matches!(b, Ok(Some((lo, hi))) if lo == hi), detail);
    }
    match numerics_report(&spec.input) {
        Ok(n) => {
            let e = &spec.expected;
            r.check("numerics.deg", n.deg == e.deg, format!("deg = {}, expected {}", n.deg, e.deg));
            r.check("numerics.ind", n.ind == e.ind, format!("ind = {}, expected {}", n.ind, e.ind));
            r.check("numerics.exp", n.exp == e.exp, format!("exp = {}, expected {}", n.exp, e.exp));
        }
        Err(err) => {
            r.check("numerics", false, err.to_string());
        }
    }
}

fn eq_line(r: &mut Report, id: &str, ok: bool) {
    r.check(id, ok, if ok { "holds" } else { "sides differ" });
}
