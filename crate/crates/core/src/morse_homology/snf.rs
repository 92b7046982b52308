//! Smith normal form over the integers.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::IntegerMatrix;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SmithForm {
    /// Nonzero invariant factors `d_1 | d_2 | ... | d_k`, all positive.
    pub factors: Vec<BigInt>,
    pub rank: usize,
}

impl SmithForm {
    /// Invariant factors greater than one.
    pub fn torsion(&self) -> Vec<BigInt> {
        self.factors.iter().filter(|f| **f > BigInt::from(1)).cloned().collect()
    }
}

struct Work {
    a: Vec<Vec<BigInt>>,
    m: usize,
    n: usize,
}

impl Work {
    fn min_abs_in(&self, t: usize) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize)> = None;
        for i in t..self.m {
            for j in t..self.n {
                let v = &self.a[i][j];
                if !v.is_zero() && best.is_none_or(|(bi, bj)| v.abs() < self.a[bi][bj].abs()) {
                    best = Some((i, j));
                }
            }
        }
        best
    }

    fn swap_cols(&mut self, x: usize, y: usize) {
        for row in &mut self.a {
            row.swap(x, y);
        }
    }

    /// `row_i -= q * row_t`
    fn row_sub(&mut self, i: usize, t: usize, q: &BigInt) {
        for j in 0..self.n {
            let d = q * &self.a[t][j];
            self.a[i][j] -= d;
        }
    }

    fn col_sub(&mut self, j: usize, t: usize, q: &BigInt) {
        for i in 0..self.m {
            let d = q * &self.a[i][t];
            self.a[i][j] -= d;
        }
    }

    /// Clear column `t` below the pivot; false if a smaller remainder was
    /// moved into the pivot position instead.
    fn clear_column(&mut self, t: usize) -> bool {
        let mut clean = true;
        for i in t + 1..self.m {
            if self.a[i][t].is_zero() {
                continue;
            }
            let q = self.a[i][t].div_floor(&self.a[t][t]);
            self.row_sub(i, t, &q);
            if !self.a[i][t].is_zero() {
                clean = false;
            }
        }
        if !clean {
            let i = (t + 1..self.m)
                .filter(|&i| !self.a[i][t].is_zero())
                .min_by(|&x, &y| self.a[x][t].abs().cmp(&self.a[y][t].abs()))
                .expect("a remainder is nonzero");
            self.a.swap(t, i);
        }
        clean
    }

    fn clear_row(&mut self, t: usize) -> bool {
        let mut clean = true;
        for j in t + 1..self.n {
            if self.a[t][j].is_zero() {
                continue;
            }
            let q = self.a[t][j].div_floor(&self.a[t][t]);
            self.col_sub(j, t, &q);
            if !self.a[t][j].is_zero() {
                clean = false;
            }
        }
        if !clean {
            let j = (t + 1..self.n)
                .filter(|&j| !self.a[t][j].is_zero())
                .min_by(|&x, &y| self.a[t][x].abs().cmp(&self.a[t][y].abs()))
                .expect("a remainder is nonzero");
            self.swap_cols(t, j);
        }
        clean
    }
}

/// Invariant factors by elementary row and column operations, always pivoting
/// on an entry of least absolute value.
pub fn smith_normal_form(matrix: &IntegerMatrix) -> SmithForm {
    let mut w = Work {
        a: (0..matrix.rows()).map(|i| matrix.row(i).to_vec()).collect(),
        m: matrix.rows(),
        n: matrix.cols(),
    };
    let mut t = 0;
    while t < w.m.min(w.n) {
        let Some((pi, pj)) = w.min_abs_in(t) else {
            break;
        };
        w.a.swap(t, pi);
        w.swap_cols(t, pj);
        loop {
            if !w.clear_column(t) || !w.clear_row(t) {
                continue;
            }
            // the pivot must divide the rest of the block
            let offender = (t + 1..w.m)
                .find(|&i| (t + 1..w.n).any(|j| !w.a[i][j].is_multiple_of(&w.a[t][t])));
            match offender {
                Some(i) => {
                    for j in t..w.n {
                        let v = w.a[i][j].clone();
                        w.a[t][j] += v;
                    }
                }
                None => break,
            }
        }
        t += 1;
    }
    let factors: Vec<BigInt> = (0..t).map(|k| w.a[k][k].abs()).collect();
    SmithForm {
        rank: factors.len(),
        factors,
    }
}
