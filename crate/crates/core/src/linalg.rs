//! Exact Gauss-Jordan elimination over `Q`.

use num_traits::{One, Zero};

use crate::rational::{Rational, RationalVector};

pub type Matrix = Vec<RationalVector>;

/// Reduced row echelon form of a matrix with `ncols` columns.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Echelon {
    pub ncols: usize,
    /// Nonzero rows only, each with a leading 1 in its pivot column.
    pub rows: Matrix,
    pub pivots: Vec<usize>,
}

impl Echelon {
    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Basis of the right nullspace, one vector per free column.
    pub fn nullspace(&self) -> Matrix {
        let mut is_pivot = vec![false; self.ncols];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        (0..self.ncols)
            .filter(|&c| !is_pivot[c])
            .map(|free| {
                let mut v = vec![Rational::zero(); self.ncols];
                v[free] = Rational::one();
                for (row, &p) in self.rows.iter().zip(&self.pivots) {
                    v[p] = -row[free].clone();
                }
                v
            })
            .collect()
    }

    /// Reduces `v` against the rows so it is zero in every pivot column.
    pub fn reduce(&self, v: &[Rational]) -> RationalVector {
        let mut out = v.to_vec();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if out[p].is_zero() {
                continue;
            }
            let f = out[p].clone();
            for (o, r) in out.iter_mut().zip(row) {
                if !r.is_zero() {
                    *o -= &f * r;
                }
            }
        }
        out
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        self.reduce(v).iter().all(Zero::is_zero)
    }
}

pub fn rref(rows: &[RationalVector], ncols: usize) -> Echelon {
    let mut m: Matrix = rows.to_vec();
    for r in &m {
        assert_eq!(r.len(), ncols, "ragged matrix");
    }
    let mut pivots = Vec::new();
    let mut top = 0;
    for col in 0..ncols {
        if top == m.len() {
            break;
        }
        let Some(found) = (top..m.len()).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(top, found);
        let inv = m[top][col].recip();
        for x in m[top].iter_mut() {
            if !x.is_zero() {
                *x *= &inv;
            }
        }
        let pivot_row = m[top].clone();
        for (r, row) in m.iter_mut().enumerate() {
            if r == top || row[col].is_zero() {
                continue;
            }
            let f = row[col].clone();
            for (x, p) in row.iter_mut().zip(&pivot_row) {
                if !p.is_zero() {
                    *x -= &f * p;
                }
            }
        }
        pivots.push(col);
        top += 1;
    }
    m.truncate(top);
    Echelon {
        ncols,
        rows: m,
        pivots,
    }
}

pub fn rank(rows: &[RationalVector], ncols: usize) -> usize {
    rref(rows, ncols).rank()
}

/// Solution set of `A x = b`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Solution {
    Inconsistent,
    /// A particular solution (zero in every free coordinate) plus a basis of
    /// the homogeneous solutions.
    Affine {
        particular: RationalVector,
        kernel: Matrix,
    },
}

pub fn solve(a: &[RationalVector], b: &[Rational], ncols: usize) -> Solution {
    assert_eq!(a.len(), b.len());
    let augmented: Matrix = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    let ech = rref(&augmented, ncols + 1);
    if ech.pivots.last() == Some(&ncols) {
        return Solution::Inconsistent;
    }
    let mut particular = vec![Rational::zero(); ncols];
    for (row, &p) in ech.rows.iter().zip(&ech.pivots) {
        particular[p] = row[ncols].clone();
    }
    let coeffs = rref(a, ncols);
    Solution::Affine {
        particular,
        kernel: coeffs.nullspace(),
    }
}

/// Unique solution of a square nonsingular system.
pub fn solve_unique(a: &[RationalVector], b: &[Rational]) -> Option<RationalVector> {
    match solve(a, b, a.len()) {
        Solution::Affine { particular, kernel } if kernel.is_empty() => Some(particular),
        _ => None,
    }
}

pub fn determinant(a: &[RationalVector]) -> Rational {
    let n = a.len();
    let mut m: Matrix = a.to_vec();
    let mut det = Rational::one();
    for col in 0..n {
        let Some(p) = (col..n).find(|&r| !m[r][col].is_zero()) else {
            return Rational::zero();
        };
        if p != col {
            m.swap(p, col);
            det = -det;
        }
        det *= &m[col][col];
        let inv = m[col][col].recip();
        for r in col + 1..n {
            if m[r][col].is_zero() {
                continue;
            }
            let f = &m[r][col] * &inv;
            for c in col..n {
                let delta = &f * &m[col][c];
                m[r][c] -= delta;
            }
        }
    }
    det
}

pub fn transpose(a: &[RationalVector], ncols: usize) -> Matrix {
    (0..ncols)
        .map(|c| a.iter().map(|row| row[c].clone()).collect())
        .collect()
}

pub fn mat_mul(a: &[RationalVector], b: &[RationalVector]) -> Matrix {
    let inner = b.len();
    let ncols = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| {
            assert_eq!(row.len(), inner);
            (0..ncols)
                .map(|c| (0..inner).map(|k| &row[k] * &b[k][c]).sum())
                .collect()
        })
        .collect()
}

pub fn mat_vec(a: &[RationalVector], v: &[Rational]) -> RationalVector {
    a.iter()
        .map(|row| row.iter().zip(v).map(|(x, y)| x * y).sum())
        .collect()
}

pub fn identity(n: usize) -> Matrix {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { Rational::one() } else { Rational::zero() })
                .collect()
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, int};

    fn m(rows: &[&[i64]]) -> Matrix {
        rows.iter()
            .map(|r| r.iter().map(|&x| int(x)).collect())
            .collect()
    }

    #[test]
    fn rref_and_nullspace() {
        let a = m(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
        let e = rref(&a, 3);
        assert_eq!(e.rank(), 2);
        assert_eq!(e.pivots, vec![0, 1]);
        let ns = e.nullspace();
        assert_eq!(ns.len(), 1);
        assert!(mat_vec(&a, &ns[0]).iter().all(Zero::is_zero));
    }

    #[test]
    fn solve_cases() {
        let a = m(&[&[1, 1], &[1, -1]]);
        assert_eq!(
            solve_unique(&a, &[int(3), int(1)]),
            Some(vec![int(2), int(1)])
        );
        let par = m(&[&[1, 1], &[1, 1]]);
        assert_eq!(solve(&par, &[int(0), int(1)], 2), Solution::Inconsistent);
        match solve(&par, &[int(2), int(2)], 2) {
            Solution::Affine { particular, kernel } => {
                assert_eq!(particular, vec![int(2), int(0)]);
                assert_eq!(kernel.len(), 1);
            }
            _ => panic!(),
        }
    }

    #[test]
    fn determinants() {
        assert_eq!(determinant(&m(&[&[0, 1], &[1, 0]])), int(-1));
        assert_eq!(determinant(&m(&[&[2, 0, 0], &[0, 3, 0], &[1, 1, 4]])), int(24));
        assert_eq!(determinant(&m(&[&[1, 2], &[2, 4]])), int(0));
        let r = vec![
            vec![frac(3, 5), frac(-4, 5)],
            vec![frac(4, 5), frac(3, 5)],
        ];
        assert_eq!(determinant(&r), int(1));
    }
}
