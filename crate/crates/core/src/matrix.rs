//! Dense square matrices over the dyadic rationals.

use std::fmt;
use std::ops::{Index, IndexMut};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::dyadic::Dyadic;

/// A square matrix with exact dyadic entries, stored row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactMatrix {
    dim: usize,
    entries: Vec<Dyadic>,
}

impl ExactMatrix {
    pub fn zeros(dim: usize) -> Self {
        ExactMatrix {
            dim,
            entries: vec![Dyadic::zero(); dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            m[(i, i)] = Dyadic::one();
        }
        m
    }

    /// Panics if the rows do not form a square matrix.
    pub fn from_rows<T: Into<Dyadic> + Clone>(rows: &[Vec<T>]) -> Self {
        let dim = rows.len();
        let mut entries = Vec::with_capacity(dim * dim);
        for row in rows {
            assert_eq!(row.len(), dim, "matrix is not square");
            entries.extend(row.iter().cloned().map(Into::into));
        }
        ExactMatrix { dim, entries }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn row(&self, i: usize) -> &[Dyadic] {
        &self.entries[i * self.dim..(i + 1) * self.dim]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[Dyadic]> {
        (0..self.dim).map(move |i| self.row(i))
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.dim).all(|i| (0..i).all(|j| self[(i, j)] == self[(j, i)]))
    }

    /// The matrix with row `i` and column `i` removed.
    pub fn minor(&self, i: usize) -> ExactMatrix {
        assert!(
            i < self.dim,
            "minor index {i} out of range for dimension {}",
            self.dim
        );
        let keep: Vec<usize> = (0..self.dim).filter(|&k| k != i).collect();
        let mut m = ExactMatrix::zeros(self.dim - 1);
        for (r, &src_r) in keep.iter().enumerate() {
            for (c, &src_c) in keep.iter().enumerate() {
                m[(r, c)] = self[(src_r, src_c)].clone();
            }
        }
        m
    }

    /// Exact determinant. See [`det_exact`].
    pub fn det(&self) -> Dyadic {
        det_exact(self)
    }
}

impl Index<(usize, usize)> for ExactMatrix {
    type Output = Dyadic;
    fn index(&self, (i, j): (usize, usize)) -> &Dyadic {
        &self.entries[i * self.dim + j]
    }
}

impl IndexMut<(usize, usize)> for ExactMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Dyadic {
        &mut self.entries[i * self.dim + j]
    }
}

impl fmt::Display for ExactMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, row) in self.rows().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "[")?;
            for (j, x) in row.iter().enumerate() {
                if j > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{x}")?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

/// Exact determinant of a dyadic matrix.
///
/// Every entry is scaled by `2^e`, where `e` is the largest exponent in the
/// matrix, giving an integer matrix whose determinant is computed with
/// Bareiss' fraction-free elimination; the result is then divided by
/// `2^(e * dim)`. The 0x0 determinant is 1.
pub fn det_exact(m: &ExactMatrix) -> Dyadic {
    let n = m.dim;
    if n == 0 {
        return Dyadic::one();
    }
    let e = m.entries.iter().map(Dyadic::exponent).max().unwrap_or(0);
    let mut a: Vec<Vec<BigInt>> = (0..n)
        .map(|i| m.row(i).iter().map(|x| x.numerator_at(e)).collect())
        .collect();
    let det = bareiss(&mut a);
    Dyadic::new(det, e * n as u32)
}

/// Determinant of an integer matrix by fraction-free elimination.
/// Every division is exact.
pub fn bareiss(a: &mut [Vec<BigInt>]) -> BigInt {
    let n = a.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut negate = false;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(k, i);
                    negate = !negate;
                }
                None => return BigInt::zero(),
            }
        }
        let (top, bottom) = a.split_at_mut(k + 1);
        let pivot_row = &top[k];
        for row in bottom.iter_mut() {
            for j in k + 1..n {
                let v = &row[j] * &pivot_row[k] - &row[k] * &pivot_row[j];
                row[j] = v / &prev;
            }
            row[k] = BigInt::zero();
        }
        prev = a[k][k].clone();
    }
    let det = a[n - 1][n - 1].clone();
    if negate {
        -det
    } else {
        det
    }
}
