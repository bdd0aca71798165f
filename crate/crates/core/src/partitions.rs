//! Integer partitions, skew shapes, and border strips.
//!
//! Partitions are stored without trailing zeros; indexing past the last part
//! reads as 0, which keeps the usual padding conventions implicit.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// An integer partition: a weakly decreasing sequence of positive parts.
///
/// The derived order compares part sequences lexicographically; restricted to
/// partitions of the same weight this is the reverse-lexicographic table
/// order, with `(n)` largest and `(1^n)` smallest.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<usize>,
    n: usize,
}

impl Partition {
    /// Builds a partition, stripping trailing zeros.
    ///
    /// Rejects sequences that increase anywhere or contain an interior zero.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!(
                "parts must be weakly decreasing, got {parts:?}"
            )));
        }
        if parts.contains(&0) {
            return Err(Error::InvalidPartition(format!(
                "interior zero part in {parts:?}"
            )));
        }
        let n = parts.iter().sum();
        Ok(Partition { parts, n })
    }

    /// The empty partition of 0.
    pub fn empty() -> Self {
        Partition { parts: Vec::new(), n: 0 }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// The i-th part (0-based); 0 beyond the last stored part.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// Number of (positive) parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// The weight |λ| (sum of parts).
    pub fn n(&self) -> usize {
        self.n
    }

    /// The conjugate partition: part j counts the parts of `self` that are > j.
    pub fn conjugate(&self) -> Partition {
        let cols = self.part(0);
        let parts: Vec<usize> = (0..cols)
            .map(|j| self.parts.iter().take_while(|&&p| p > j).count())
            .collect();
        let n = self.n;
        Partition { parts, n }
    }

    /// Componentwise containment (Young diagram inclusion).
    pub fn contains(&self, inner: &Partition) -> bool {
        (0..inner.len()).all(|i| inner.part(i) <= self.part(i))
    }

    /// All partitions ν ⊆ λ (componentwise), including the empty one and λ itself.
    pub fn subpartitions(&self) -> Vec<Partition> {
        fn rec(lam: &[usize], max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            match lam.split_first() {
                None => {
                    let parts: Vec<usize> =
                        cur.iter().copied().take_while(|&v| v > 0).collect();
                    let n = parts.iter().sum();
                    out.push(Partition { parts, n });
                }
                Some((&row, rest)) => {
                    for v in (0..=row.min(max)).rev() {
                        cur.push(v);
                        rec(rest, v, cur, out);
                        cur.pop();
                    }
                }
            }
        }
        let mut out = Vec::new();
        rec(&self.parts, usize::MAX, &mut Vec::new(), &mut out);
        out
    }

    /// All ways to remove a border strip of `size` cells, as `(ν, height)`
    /// pairs sorted by ν in descending table order. Empty when no strip of
    /// that size can be removed.
    ///
    /// Each strip is determined by the range of rows it occupies: every row of
    /// the range except the last is cut down to one cell right of where the
    /// next row ends, and the last row absorbs whatever the size still needs.
    pub fn border_strip_removals(&self, size: usize) -> Vec<(Partition, usize)> {
        assert!(size >= 1, "border strips have at least one cell");
        let p = self.parts.len();
        let mut out = Vec::new();
        for top in 0..p {
            for bottom in top..p {
                // Rows top..bottom-1 are forced; the bottom row closes the strip.
                let forced: usize = (top..bottom)
                    .map(|j| self.parts[j] - (self.parts[j + 1] - 1))
                    .sum();
                if forced >= size && bottom > top {
                    break; // deeper bottoms only grow the strip
                }
                let last = self.parts[top] + (bottom - top);
                if last < size {
                    continue; // strip cannot reach `size` ending here
                }
                let last_part = last - size;
                if last_part > self.parts[bottom] - 1 || last_part < self.part(bottom + 1) {
                    continue;
                }
                let mut parts = self.parts.clone();
                for j in top..bottom {
                    parts[j] = self.parts[j + 1] - 1;
                }
                parts[bottom] = last_part;
                let nu = Partition::new(parts).expect("strip removal yields a partition");
                out.push((nu, bottom - top));
            }
        }
        out.sort_by(|a, b| b.0.cmp(&a.0));
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for p in &self.parts {
            if !first {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
            first = false;
        }
        Ok(())
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self)
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Parses the comma-separated text form, e.g. `"3,2,2"`; the empty string
    /// is the empty partition.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|tok| {
                tok.trim()
                    .parse::<usize>()
                    .map_err(|e| Error::Parse(format!("bad partition part {tok:?}: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        if parts.contains(&0) {
            return Err(Error::Parse("partition parts must be positive".into()));
        }
        Partition::new(parts).map_err(|e| Error::Parse(e.to_string()))
    }
}

/// All partitions of `n` in reverse-lexicographic (table) order, `(n)` first.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    fn rec(n: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if n == 0 {
            let parts = cur.clone();
            let n = parts.iter().sum();
            out.push(Partition { parts, n });
            return;
        }
        for k in (1..=n.min(max)).rev() {
            cur.push(k);
            rec(n - k, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

/// The number of ordered partitions (B_1, …, B_p) of μ's part indices whose
/// block sums realize λ, i.e. λ_j = Σ_{i ∈ B_j} μ_i for every j.
///
/// Counts by assigning each part of μ to a block while tracking remaining
/// block capacities; equal parts of μ are distinct indices and count
/// separately. Returns 0 when |μ| ≠ |λ|.
pub fn count_ordered_refinements(mu: &Partition, lam: &Partition) -> u128 {
    if mu.n() != lam.n() {
        return 0;
    }
    fn rec(parts: &[usize], remaining: &mut [usize]) -> u128 {
        let Some((&first, rest)) = parts.split_first() else {
            return 1; // capacities sum to zero, so all blocks are exactly filled
        };
        let mut total = 0;
        for j in 0..remaining.len() {
            if remaining[j] >= first {
                remaining[j] -= first;
                total += rec(rest, remaining);
                remaining[j] += first;
            }
        }
        total
    }
    let mut remaining = lam.parts().to_vec();
    rec(mu.parts(), &mut remaining)
}

/// A skew shape λ/ν with ν ⊆ λ.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SkewShape {
    outer: Partition,
    inner: Partition,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self> {
        if !outer.contains(&inner) {
            return Err(Error::NotContained);
        }
        Ok(SkewShape { outer, inner })
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    /// Number of cells |λ| − |ν|.
    pub fn size(&self) -> usize {
        self.outer.n() - self.inner.n()
    }

    /// The cells of the shape as 1-based (row, column) pairs.
    pub fn cells(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 0..self.outer.len() {
            for j in self.inner.part(i)..self.outer.part(i) {
                out.push((i + 1, j + 1));
            }
        }
        out
    }

    /// Whether the shape is a border strip: edge-connected with no 2×2 block.
    ///
    /// Checked on the occupied row range: every row there must be nonempty and
    /// each row must start exactly one column right of where the next row
    /// ends (`λ_i = ν_{i−1} + 1`). An empty row inside the range disconnects
    /// the shape. The empty shape is not a border strip.
    pub fn is_border_strip(&self) -> bool {
        let rows = self.outer.len();
        let occupied: Vec<usize> = (0..rows)
            .filter(|&i| self.outer.part(i) > self.inner.part(i))
            .collect();
        let Some((&first, &last)) = occupied.first().zip(occupied.last()) else {
            return false;
        };
        if occupied.len() != last - first + 1 {
            return false;
        }
        (first + 1..=last).all(|i| self.outer.part(i) == self.inner.part(i - 1) + 1)
    }

    /// One less than the number of occupied rows.
    ///
    /// Errors unless the shape is a border strip.
    pub fn height(&self) -> Result<usize> {
        if !self.is_border_strip() {
            return Err(Error::NotBorderStrip);
        }
        let rows = (0..self.outer.len())
            .filter(|&i| self.outer.part(i) > self.inner.part(i))
            .count();
        Ok(rows - 1)
    }
}

impl fmt::Debug for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})/({})", self.outer, self.inner)
    }
}
