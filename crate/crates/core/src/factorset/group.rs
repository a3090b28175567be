use super::super::algebra::LinearAut;

/// Finite group given by its multiplication table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupTable {
    mul: Vec<Vec<usize>>,
    identity: usize,
}

impl GroupTable {
    /// Validates closure, identity, inverses and associativity.
    pub fn from_table(mul: Vec<Vec<usize>>) -> Option<Self> {
        let n = mul.len();
        if n == 0 || mul.iter().any(|r| r.len() != n || r.iter().any(|&x| x >= n)) {
            return None;
        }
        let identity = (0..n).find(|&e| (0..n).all(|a| mul[e][a] == a && mul[a][e] == a))?;
        let has_inverses = (0..n).all(|a| (0..n).any(|b| mul[a][b] == identity));
        let assoc = (0..n).all(|a| (0..n).all(|b| (0..n).all(|c| mul[mul[a][b]][c] == mul[a][mul[b][c]])));
        (has_inverses && assoc).then_some(GroupTable { mul, identity })
    }

    /// `Z/n`, element `k` standing for `σ^k`.
    pub fn cyclic(n: usize) -> Self {
        Self::abelian(&[n])
    }

    /// `Z/n₁ × … × Z/n_r`; element index `Σ e_k·s_k` with `s_1 = 1`,
    /// `s_{k+1} = s_k·n_k`, standing for `σ₁^{e₁}⋯σ_r^{e_r}`.
    pub fn abelian(orders: &[usize]) -> Self {
        let size: usize = orders.iter().product();
        let decode = |mut x: usize| -> Vec<usize> {
            orders
                .iter()
                .map(|&n| {
                    let e = x % n;
                    x /= n;
                    e
                })
                .collect()
        };
        let encode = |e: &[usize]| -> usize { e.iter().zip(orders).rev().fold(0, |acc, (&ek, &n)| acc * n + ek) };
        let mul = (0..size)
            .map(|a| {
                let ea = decode(a);
                (0..size)
                    .map(|b| {
                        let eb = decode(b);
                        let s: Vec<usize> = ea.iter().zip(&eb).zip(orders).map(|((x, y), n)| (x + y) % n).collect();
                        encode(&s)
                    })
                    .collect()
            })
            .collect();
        GroupTable { mul, identity: 0 }
    }

    /// The group formed by a list of pairwise distinct maps closed under
    /// composition, `None` otherwise.
    pub fn from_maps(maps: &[LinearAut]) -> Option<Self> {
        let mul = maps
            .iter()
            .map(|a| maps.iter().map(|b| maps.iter().position(|c| *c == a.compose(b))).collect::<Option<Vec<_>>>())
            .collect::<Option<Vec<_>>>()?;
        Self::from_table(mul)
    }

    pub fn order(&self) -> usize {
        self.mul.len()
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a][b]
    }

    pub fn inverse(&self, a: usize) -> usize {
        (0..self.order()).find(|&b| self.mul[a][b] == self.identity).expect("validated group")
    }

    /// `a^k`.
    pub fn pow(&self, a: usize, k: usize) -> usize {
        (0..k).fold(self.identity, |acc, _| self.mul(acc, a))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn klein_four_and_cyclic() {
        let v = GroupTable::abelian(&[2, 2]);
        assert_eq!(v.order(), 4);
        assert!((0..4).all(|a| v.mul(a, a) == 0));
        assert_eq!(v.mul(1, 2), 3);
        let c = GroupTable::cyclic(3);
        assert_eq!(c.pow(1, 3), c.identity());
        assert_eq!(c.inverse(1), 2);
        assert!(GroupTable::from_table(vec![vec![0, 1], vec![1, 1]]).is_none());
    }
}
