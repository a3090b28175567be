use num_traits::{One, Zero};

use super::rational::Rational;

/// Dense row-major matrix over Q.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl QMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        QMatrix { rows, cols, data: vec![Rational::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Rational::one();
        }
        m
    }

    /// Matrix whose `k`-th column is `cols[k]`.
    pub fn from_columns(rows: usize, cols: &[Vec<Rational>]) -> Self {
        let mut m = Self::zeros(rows, cols.len());
        for (j, c) in cols.iter().enumerate() {
            assert_eq!(c.len(), rows);
            for (i, v) in c.iter().enumerate() {
                m[(i, j)] = v.clone();
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| {
                let mut acc = Rational::zero();
                for (j, x) in v.iter().enumerate() {
                    let a = &self.data[i * self.cols + j];
                    if !a.is_zero() && !x.is_zero() {
                        acc += a * x;
                    }
                }
                acc
            })
            .collect()
    }

    pub fn mul(&self, o: &QMatrix) -> QMatrix {
        assert_eq!(self.cols, o.rows);
        let mut out = QMatrix::zeros(self.rows, o.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self.data[i * self.cols + k];
                if a.is_zero() {
                    continue;
                }
                for j in 0..o.cols {
                    let b = &o.data[k * o.cols + j];
                    if !b.is_zero() {
                        out.data[i * o.cols + j] += a * b;
                    }
                }
            }
        }
        out
    }

    pub fn trace(&self) -> Rational {
        (0..self.rows.min(self.cols)).map(|i| self[(i, i)].clone()).sum()
    }

    /// Determinant by Gaussian elimination.
    pub fn det(&self) -> Rational {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut a = self.data.clone();
        let mut det = Rational::one();
        for c in 0..n {
            let Some(piv) = (c..n).find(|&r| !a[r * n + c].is_zero()) else {
                return Rational::zero();
            };
            if piv != c {
                for j in 0..n {
                    a.swap(piv * n + j, c * n + j);
                }
                det = -det;
            }
            let pv = a[c * n + c].clone();
            det *= &pv;
            for r in c + 1..n {
                if a[r * n + c].is_zero() {
                    continue;
                }
                let f = &a[r * n + c] / &pv;
                for j in c..n {
                    let t = &f * &a[c * n + j];
                    a[r * n + j] -= t;
                }
            }
        }
        det
    }

    /// Unique solution of `self · x = b` for square nonsingular `self`.
    pub fn solve(&self, b: &[Rational]) -> Option<Vec<Rational>> {
        assert_eq!(self.rows, self.cols);
        assert_eq!(b.len(), self.rows);
        let n = self.rows;
        let w = n + 1;
        let mut a: Vec<Rational> = Vec::with_capacity(n * w);
        for i in 0..n {
            a.extend_from_slice(&self.data[i * n..(i + 1) * n]);
            a.push(b[i].clone());
        }
        for c in 0..n {
            let piv = (c..n).find(|&r| !a[r * w + c].is_zero())?;
            if piv != c {
                for j in 0..w {
                    a.swap(piv * w + j, c * w + j);
                }
            }
            let inv = a[c * w + c].recip();
            for j in c..w {
                a[c * w + j] *= &inv;
            }
            for r in 0..n {
                if r == c || a[r * w + c].is_zero() {
                    continue;
                }
                let f = a[r * w + c].clone();
                for j in c..w {
                    let t = &f * &a[c * w + j];
                    a[r * w + j] -= t;
                }
            }
        }
        Some((0..n).map(|i| a[i * w + n].clone()).collect())
    }

    pub fn rank(&self) -> usize {
        let (n, m) = (self.rows, self.cols);
        let mut a = self.data.clone();
        let mut rank = 0;
        for c in 0..m {
            let Some(piv) = (rank..n).find(|&r| !a[r * m + c].is_zero()) else {
                continue;
            };
            for j in 0..m {
                a.swap(piv * m + j, rank * m + j);
            }
            let pv = a[rank * m + c].clone();
            for r in rank + 1..n {
                if a[r * m + c].is_zero() {
                    continue;
                }
                let f = &a[r * m + c] / &pv;
                for j in c..m {
                    let t = &f * &a[rank * m + j];
                    a[r * m + j] -= t;
                }
            }
            rank += 1;
        }
        rank
    }
}

impl std::ops::Index<(usize, usize)> for QMatrix {
    type Output = Rational;
    fn index(&self, (i, j): (usize, usize)) -> &Rational {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for QMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rational {
        &mut self.data[i * self.cols + j]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::int;

    fn m(rows: &[&[i64]]) -> QMatrix {
        let n = rows.len();
        let mut out = QMatrix::zeros(n, rows[0].len());
        for (i, r) in rows.iter().enumerate() {
            for (j, &v) in r.iter().enumerate() {
                out[(i, j)] = int(v);
            }
        }
        out
    }

    #[test]
    fn det_and_solve() {
        let a = m(&[&[2, 1, 0], &[1, 3, 1], &[0, 1, 4]]);
        assert_eq!(a.det(), int(18));
        let x = a.solve(&[int(1), int(2), int(3)]).unwrap();
        assert_eq!(a.mul_vec(&x), vec![int(1), int(2), int(3)]);
        assert_eq!(a.rank(), 3);
    }

    #[test]
    fn singular() {
        let a = m(&[&[1, 2], &[2, 4]]);
        assert_eq!(a.det(), int(0));
        assert!(a.solve(&[int(1), int(0)]).is_none());
        assert_eq!(a.rank(), 1);
    }
}
