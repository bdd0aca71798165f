//! Square matrices with polynomial entries, and their exact determinants.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::polyring::{Polynomial, VarId};

/// A square matrix whose entries are polynomials (symbolic variables,
/// constants, or anything in between). Indices are 1-based throughout, to
/// match the variable labels `a[i,j]`.
#[derive(Clone, PartialEq, Eq)]
pub struct GenericMatrix {
    size: usize,
    entries: Vec<Polynomial>,
}

impl GenericMatrix {
    /// The fully generic matrix with entries `a[i,j]`, 1 ≤ i,j ≤ size.
    pub fn generic(size: usize) -> Self {
        Self::generic_offset(size, 0)
    }

    /// A generic matrix whose entry labels are shifted: entry (i, j) is the
    /// variable `a[offset+i, offset+j]`. Useful for diagonal blocks of a
    /// larger generic matrix.
    pub fn generic_offset(size: usize, offset: usize) -> Self {
        Self::from_fn(size, |i, j| {
            Polynomial::variable(VarId::entry(offset + i, offset + j))
        })
    }

    /// Builds a matrix from a closure over 1-based (row, col) indices.
    pub fn from_fn(size: usize, mut f: impl FnMut(usize, usize) -> Polynomial) -> Self {
        let mut entries = Vec::with_capacity(size * size);
        for i in 1..=size {
            for j in 1..=size {
                entries.push(f(i, j));
            }
        }
        GenericMatrix { size, entries }
    }

    /// Builds a matrix from rows, which must form a square array.
    pub fn from_rows(rows: Vec<Vec<Polynomial>>) -> Result<Self> {
        let size = rows.len();
        if rows.iter().any(|r| r.len() != size) {
            return Err(Error::SizeMismatch(format!(
                "expected a square {size}x{size} array"
            )));
        }
        Ok(GenericMatrix { size, entries: rows.into_iter().flatten().collect() })
    }

    pub fn identity(size: usize) -> Self {
        Self::from_fn(size, |i, j| {
            if i == j {
                Polynomial::one()
            } else {
                Polynomial::zero()
            }
        })
    }

    /// Block-diagonal assembly; the result's size is the sum of block sizes.
    /// Entry labels inside the blocks are taken as-is, so blocks built with
    /// matching offsets reproduce a block-diagonal generic matrix.
    pub fn block_diagonal(blocks: &[GenericMatrix]) -> Self {
        let size = blocks.iter().map(|b| b.size).sum();
        let mut out = Self::from_fn(size, |_, _| Polynomial::zero());
        let mut base = 0;
        for b in blocks {
            for i in 1..=b.size {
                for j in 1..=b.size {
                    out.entries[(base + i - 1) * size + (base + j - 1)] =
                        b.entry(i, j).clone();
                }
            }
            base += b.size;
        }
        out
    }

    pub fn size(&self) -> usize {
        self.size
    }

    /// The entry at 1-based (i, j).
    pub fn entry(&self, i: usize, j: usize) -> &Polynomial {
        assert!(i >= 1 && i <= self.size && j >= 1 && j <= self.size);
        &self.entries[(i - 1) * self.size + (j - 1)]
    }

    /// The principal submatrix on the given 1-based row/column indices.
    pub fn principal_submatrix(&self, indices: &[usize]) -> GenericMatrix {
        Self::from_fn(indices.len(), |i, j| {
            self.entry(indices[i - 1], indices[j - 1]).clone()
        })
    }

    /// Exact matrix product.
    pub fn matmul(&self, rhs: &GenericMatrix) -> GenericMatrix {
        assert_eq!(self.size, rhs.size);
        Self::from_fn(self.size, |i, j| {
            let mut acc = Polynomial::zero();
            for k in 1..=self.size {
                acc += &(self.entry(i, k) * rhs.entry(k, j));
            }
            acc
        })
    }

    pub fn trace(&self) -> Polynomial {
        let mut acc = Polynomial::zero();
        for i in 1..=self.size {
            acc += self.entry(i, i);
        }
        acc
    }

    /// Exact determinant by Laplace expansion along the first remaining row,
    /// memoized on the set of remaining columns. Division-free, which matters
    /// because the coefficient ring is ℤ. The empty matrix has determinant 1.
    pub fn det(&self) -> Polynomial {
        assert!(self.size <= 64, "determinant mask is a u64");
        if self.size == 0 {
            return Polynomial::one();
        }
        let full: u64 = if self.size == 64 {
            u64::MAX
        } else {
            (1u64 << self.size) - 1
        };
        let mut memo: HashMap<u64, Polynomial> = HashMap::new();
        self.det_rec(full, &mut memo)
    }

    fn det_rec(&self, cols: u64, memo: &mut HashMap<u64, Polynomial>) -> Polynomial {
        let k = cols.count_ones() as usize;
        if k == 0 {
            return Polynomial::one();
        }
        if let Some(p) = memo.get(&cols) {
            return p.clone();
        }
        let row = self.size - k + 1; // 1-based row to expand along
        let mut acc = Polynomial::zero();
        let mut negative = false;
        for j in 1..=self.size {
            let bit = 1u64 << (j - 1);
            if cols & bit == 0 {
                continue;
            }
            let e = self.entry(row, j);
            if !e.is_zero() {
                let minor = self.det_rec(cols & !bit, memo);
                let term = e * &minor;
                if negative {
                    acc -= &term;
                } else {
                    acc += &term;
                }
            }
            negative = !negative;
        }
        memo.insert(cols, acc.clone());
        acc
    }
}

impl std::fmt::Debug for GenericMatrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "GenericMatrix({}x{}) [", self.size, self.size)?;
        for i in 1..=self.size {
            write!(f, "  ")?;
            for j in 1..=self.size {
                write!(f, "{}{}", self.entry(i, j), if j < self.size { ", " } else { "" })?;
            }
            writeln!(f)?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a(i: usize, j: usize) -> Polynomial {
        Polynomial::variable(VarId::entry(i, j))
    }

    #[test]
    fn det_2x2_generic() {
        let m = GenericMatrix::generic(2);
        let expected = &(&a(1, 1) * &a(2, 2)) - &(&a(1, 2) * &a(2, 1));
        assert_eq!(m.det(), expected);
    }

    #[test]
    fn det_of_triangular_e_matrix() {
        // rows (e2, 0, 0), (e1, e2, 0), (0, e0, e1) over two generic variables
        let e1 = &a(1, 1) + &a(2, 2);
        let e2 = &(&a(1, 1) * &a(2, 2)) - &(&a(1, 2) * &a(2, 1));
        let m = GenericMatrix::from_rows(vec![
            vec![e2.clone(), Polynomial::zero(), Polynomial::zero()],
            vec![e1.clone(), e2.clone(), Polynomial::zero()],
            vec![Polynomial::zero(), Polynomial::one(), e1.clone()],
        ])
        .unwrap();
        assert_eq!(m.det(), &(&e2 * &e2) * &e1);
    }

    #[test]
    fn det_identity_and_empty() {
        assert_eq!(GenericMatrix::identity(4).det(), Polynomial::one());
        assert_eq!(GenericMatrix::from_rows(vec![]).unwrap().det(), Polynomial::one());
    }

    #[test]
    fn from_rows_requires_square() {
        assert!(GenericMatrix::from_rows(vec![vec![Polynomial::one()], vec![]]).is_err());
    }

    #[test]
    fn block_diagonal_entries() {
        let blocks = [
            GenericMatrix::generic_offset(2, 0),
            GenericMatrix::generic_offset(1, 2),
        ];
        let m = GenericMatrix::block_diagonal(&blocks);
        assert_eq!(m.size(), 3);
        assert_eq!(m.entry(1, 2), &a(1, 2));
        assert_eq!(m.entry(3, 3), &a(3, 3));
        assert!(m.entry(1, 3).is_zero());
        assert!(m.entry(3, 1).is_zero());
    }

    #[test]
    fn matmul_and_trace() {
        let m = GenericMatrix::generic(2);
        let sq = m.matmul(&m);
        let expected =
            &(&(&a(1, 1) * &a(1, 1)) + &(&Polynomial::constant(2) * &(&a(1, 2) * &a(2, 1))))
                + &(&a(2, 2) * &a(2, 2));
        assert_eq!(sq.trace(), expected);
    }
}
