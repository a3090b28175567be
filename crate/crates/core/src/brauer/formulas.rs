use super::BrauerError;
use crate::exact::{gcd_u64, lcm_all, lcm_u64, prime_power};

/// `lower | ind A | upper` for `A` over a local field whose scalar extension
/// of degree `n_w` has index `ind_D`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct IndexBounds {
    /// Greatest divisor of `n_w` prime to `ind_D`.
    pub l: u64,
    pub lower: u64,
    pub upper: u64,
}

impl IndexBounds {
    pub fn exact(&self) -> Option<u64> {
        (self.lower == self.upper).then_some(self.lower)
    }
}

fn greatest_coprime_divisor(n: u64, m: u64) -> u64 {
    let mut l = n;
    loop {
        let g = gcd_u64(l, m);
        if g == 1 {
            return l;
        }
        l /= g;
    }
}

/// `(n_w ind_D / l, n_w ind_D)` with `l` the greatest divisor of `n_w`
/// prime to `ind_D`. When `n_w` is a `p`-power and `p | ind_D`, `l = 1`.
pub fn local_index_bounds(n_w: u64, ind_d: u64) -> Result<IndexBounds, BrauerError> {
    if n_w == 0 || ind_d == 0 {
        return Err(BrauerError::NonPositive);
    }
    let l = greatest_coprime_divisor(n_w, ind_d);
    if let Some((p, _)) = prime_power(n_w) {
        debug_assert!(ind_d % p != 0 || l == 1);
    }
    let upper = n_w * ind_d;
    Ok(IndexBounds { l, lower: upper / l, upper })
}

/// Global bounds from local data `(n_w, ind D_w)`: the lcm of the local
/// lower and upper bounds. `None` if the upper bound fails to divide `n·ind D`.
pub fn global_index_bounds(n: u64, ind_d: u64, local: &[(u64, u64)]) -> Result<Option<(u64, u64)>, BrauerError> {
    let bounds = local.iter().map(|&(nw, iw)| local_index_bounds(nw, iw)).collect::<Result<Vec<_>, _>>()?;
    let lower = lcm_all(bounds.iter().map(|b| b.lower));
    let upper = lcm_all(bounds.iter().map(|b| b.upper));
    Ok(((n * ind_d) % upper == 0).then_some((lower, upper)))
}

/// `lcm(n, n_w ind D_w)` over the listed places.
pub fn exp_inertially_split(n: u64, local: &[(u64, u64)]) -> Result<u64, BrauerError> {
    if n == 0 || local.iter().any(|&(a, b)| a == 0 || b == 0) {
        return Err(BrauerError::NonPositive);
    }
    Ok(local.iter().fold(n, |acc, &(nw, iw)| lcm_u64(acc, nw * iw)))
}

/// `lcm(n, exp A) == lcm(n, exp B)`: must hold whenever `A_K ≅ B_K` for a
/// degree-`n` extension `K`.
pub fn lcm_exponent_transfer(n: u64, exp_a: u64, exp_b: u64) -> bool {
    lcm_u64(n, exp_a) == lcm_u64(n, exp_b)
}
