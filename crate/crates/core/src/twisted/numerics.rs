use serde::{Deserialize, Serialize};

use super::TwistedError;
use crate::brauer::{exp_inertially_split, global_index_bounds};
use crate::exact::{lcm_all, lcm_u64};

/// Which formula supplies the exponent.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ExpRoute {
    /// One generator over a global field: `exp = lcm(n, n_w ind A_w)`.
    GlobalResidue { local: Vec<(u64, u64)> },
    /// `exp = lcm(exp G, ind A')` where the index of the abelian crossed
    /// product `A'` is pinned by the local bounds `(n_w, ind A_w)`.
    LocalBounds { local: Vec<(u64, u64)> },
    /// `A = B ⊗ K` with `σ̃ = id ⊗ σ`: `exp = lcm(n, exp B)`.
    ScalarExtended { exp_b: u64 },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NumericsInput {
    /// Orders `n_i` of the cyclic factors of `G`.
    pub orders: Vec<u64>,
    pub deg_a: u64,
    pub ind_a: u64,
    pub route: ExpRoute,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Numerics {
    pub deg: u64,
    pub ind: u64,
    pub exp: u64,
}

/// `deg = n deg A`, `ind = n ind A` and the exponent by the chosen route.
pub fn numerics_report(input: &NumericsInput) -> Result<Numerics, TwistedError> {
    if input.orders.is_empty() || input.orders.contains(&0) || input.deg_a == 0 || input.ind_a == 0 {
        return Err(TwistedError::Numerics("orders and degrees must be positive"));
    }
    let n: u64 = input.orders.iter().product();
    let exp_g = lcm_all(input.orders.iter().copied());
    let exp = match &input.route {
        ExpRoute::GlobalResidue { local } => {
            if input.orders.len() != 1 {
                return Err(TwistedError::Numerics("the residue formula needs a cyclic group"));
            }
            exp_inertially_split(n, local).map_err(|_| TwistedError::Numerics("local data must be positive"))?
        }
        ExpRoute::LocalBounds { local } => {
            if local.is_empty() {
                return Err(TwistedError::Numerics("no local data"));
            }
            let bounds = global_index_bounds(n, input.ind_a, local)
                .map_err(|_| TwistedError::Numerics("local data must be positive"))?
                .ok_or(TwistedError::Numerics("local upper bound does not divide n·ind A"))?;
            if bounds.0 != bounds.1 {
                return Err(TwistedError::Numerics("local bounds do not pin the index"));
            }
            lcm_u64(exp_g, bounds.0)
        }
        ExpRoute::ScalarExtended { exp_b } => lcm_u64(n, *exp_b),
    };
    Ok(Numerics { deg: n * input.deg_a, ind: n * input.ind_a, exp })
}
