//! Independent oracles shared by the integration suites.
//!
//! Everything here recomputes values by a route different from the library
//! code it is used to check: determinants by literal permutation sums with
//! inversion-counted signs, permanents by Ryser's inclusion-exclusion, and
//! border strips by breadth-first search over the actual cells.

#![allow(dead_code)]

use itertools::Itertools;
use num_bigint::BigInt;
use num_traits::Zero;

use charforge_core::{GenericMatrix, Polynomial, SkewShape};

/// (−1)^inversions of a one-line permutation.
pub fn sign_by_inversions(images: &[usize]) -> i64 {
    let mut inversions = 0;
    for i in 0..images.len() {
        for j in i + 1..images.len() {
            if images[i] > images[j] {
                inversions += 1;
            }
        }
    }
    if inversions % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Determinant as the literal signed sum over all permutations.
pub fn det_permutation_sum(m: &GenericMatrix) -> Polynomial {
    let n = m.size();
    let mut acc = Polynomial::zero();
    for images in (1..=n).permutations(n) {
        let mut term = Polynomial::constant(sign_by_inversions(&images));
        for (i, &j) in images.iter().enumerate() {
            term = &term * m.entry(i + 1, j);
        }
        acc += &term;
    }
    acc
}

/// Integer determinant by the same permutation sum.
pub fn det_int_permutation_sum(entries: &[Vec<BigInt>]) -> BigInt {
    let n = entries.len();
    let mut acc = BigInt::zero();
    for images in (1..=n).permutations(n) {
        let mut term = BigInt::from(sign_by_inversions(&images));
        for (i, &j) in images.iter().enumerate() {
            term *= &entries[i][j - 1];
        }
        acc += term;
    }
    acc
}

/// Integer permanent by Ryser's inclusion-exclusion over column subsets.
pub fn ryser_permanent(entries: &[Vec<BigInt>]) -> BigInt {
    let n = entries.len();
    let mut total = BigInt::zero();
    for subset in 0u32..(1 << n) {
        let popcount = subset.count_ones() as usize;
        let mut product = BigInt::from(1);
        for row in entries {
            let mut row_sum = BigInt::zero();
            for (j, v) in row.iter().enumerate() {
                if subset & (1 << j) != 0 {
                    row_sum += v;
                }
            }
            product *= row_sum;
        }
        if (n - popcount) % 2 == 0 {
            total += product;
        } else {
            total -= product;
        }
    }
    total
}

/// Border-strip test straight from the definition: the cells must be
/// edge-connected and contain no 2×2 block.
pub fn is_border_strip_by_cells(shape: &SkewShape) -> bool {
    let cells = shape.cells();
    if cells.is_empty() {
        return false;
    }
    let has = |r: usize, c: usize| cells.contains(&(r, c));
    for &(r, c) in &cells {
        if has(r, c + 1) && has(r + 1, c) && has(r + 1, c + 1) {
            return false;
        }
    }
    // breadth-first search over edge adjacency
    let mut seen = vec![false; cells.len()];
    let mut queue = vec![0usize];
    seen[0] = true;
    while let Some(idx) = queue.pop() {
        let (r, c) = cells[idx];
        for (nr, nc) in [
            (r + 1, c),
            (r.wrapping_sub(1), c),
            (r, c + 1),
            (r, c.wrapping_sub(1)),
        ] {
            if let Some(pos) = cells.iter().position(|&cell| cell == (nr, nc)) {
                if !seen[pos] {
                    seen[pos] = true;
                    queue.push(pos);
                }
            }
        }
    }
    seen.into_iter().all(|v| v)
}

/// The count characterization on the occupied sub-shape: number of cells
/// equals occupied rows + spanned columns − 1. Only meaningful together with
/// connectivity; see the callers.
pub fn strip_count_characterization(shape: &SkewShape) -> bool {
    let cells = shape.cells();
    if cells.is_empty() {
        return false;
    }
    let rows = {
        let min = cells.iter().map(|&(r, _)| r).min().unwrap();
        let max = cells.iter().map(|&(r, _)| r).max().unwrap();
        max - min + 1
    };
    let cols = {
        let min = cells.iter().map(|&(_, c)| c).min().unwrap();
        let max = cells.iter().map(|&(_, c)| c).max().unwrap();
        max - min + 1
    };
    cells.len() == rows + cols - 1
}

/// Edge connectivity alone (no 2×2 exclusion).
pub fn is_connected_by_cells(shape: &SkewShape) -> bool {
    let cells = shape.cells();
    if cells.is_empty() {
        return false;
    }
    let mut seen = vec![false; cells.len()];
    let mut queue = vec![0usize];
    seen[0] = true;
    while let Some(idx) = queue.pop() {
        let (r, c) = cells[idx];
        for (nr, nc) in [
            (r + 1, c),
            (r.wrapping_sub(1), c),
            (r, c + 1),
            (r, c.wrapping_sub(1)),
        ] {
            if let Some(pos) = cells.iter().position(|&cell| cell == (nr, nc)) {
                if !seen[pos] {
                    seen[pos] = true;
                    queue.push(pos);
                }
            }
        }
    }
    seen.into_iter().all(|v| v)
}
