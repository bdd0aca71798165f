//! Permutations in one-line notation, cycle types, and the class constants
//! derived from them (centralizer order and sign).

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::partitions::Partition;
use crate::polyring::{Monomial, VarId};

/// A permutation of {1..n} in one-line notation: `images[i] = π(i+1)`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    /// Validates that `images` is a bijection on {1..n}.
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &v in &images {
            if v == 0 || v > n || seen[v - 1] {
                return Err(Error::InvalidPermutation(format!(
                    "{images:?} is not a bijection on 1..={n}"
                )));
            }
            seen[v - 1] = true;
        }
        Ok(Permutation { images })
    }

    pub fn identity(n: usize) -> Self {
        Permutation { images: (1..=n).collect() }
    }

    /// The canonical representative of the class with cycle type `mu`:
    /// consecutive cycles (1 … μ_1)(μ_1+1 … μ_1+μ_2)⋯.
    pub fn canonical_of_type(mu: &Partition) -> Self {
        let mut images = vec![0; mu.n()];
        let mut start = 0;
        for &len in mu.parts() {
            for off in 0..len {
                images[start + off] = start + (off + 1) % len + 1;
            }
            start += len;
        }
        Permutation { images }
    }

    /// Size n of the underlying set.
    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// π(i) for 1-based i.
    pub fn image(&self, i: usize) -> usize {
        self.images[i - 1]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// The cycles of the permutation, each starting at its smallest element.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut cycles = Vec::new();
        for start in 1..=n {
            if seen[start - 1] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut cur = start;
            while !seen[cur - 1] {
                seen[cur - 1] = true;
                cycle.push(cur);
                cur = self.image(cur);
            }
            cycles.push(cycle);
        }
        cycles
    }

    pub fn cycle_type(&self) -> CycleType {
        let mut lens: Vec<usize> = self.cycles().iter().map(Vec::len).collect();
        lens.sort_unstable_by(|a, b| b.cmp(a));
        let partition = Partition::new(lens).expect("sorted cycle lengths");
        CycleType::from_partition(partition)
    }

    /// The monomial a_{1π(1)} a_{2π(2)} ⋯ a_{nπ(n)}.
    pub fn matrix_monomial(&self) -> Monomial {
        Monomial::from_exponents(
            (1..=self.degree()).map(|i| (VarId::entry(i, self.image(i)), 1)),
        )
    }

    /// The sign of the permutation.
    pub fn sign(&self) -> i64 {
        self.cycle_type().sign()
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for v in &self.images {
            if !first {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
            first = false;
        }
        Ok(())
    }
}

impl FromStr for Permutation {
    type Err = Error;

    /// Parses the comma-separated one-line form, e.g. `"2,3,1"`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Permutation::identity(0));
        }
        let images = s
            .split(',')
            .map(|tok| {
                tok.trim()
                    .parse::<usize>()
                    .map_err(|e| Error::Parse(format!("bad image {tok:?}: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Permutation::new(images).map_err(|e| Error::Parse(e.to_string()))
    }
}

/// A cycle type: the partition of cycle lengths plus part multiplicities j_i.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CycleType {
    partition: Partition,
    multiplicities: BTreeMap<usize, usize>,
}

impl CycleType {
    pub fn from_partition(partition: Partition) -> Self {
        let mut multiplicities = BTreeMap::new();
        for &part in partition.parts() {
            *multiplicities.entry(part).or_insert(0) += 1;
        }
        CycleType { partition, multiplicities }
    }

    pub fn partition(&self) -> &Partition {
        &self.partition
    }

    pub fn n(&self) -> usize {
        self.partition.n()
    }

    /// Multiplicity j_i of parts of size `part`.
    pub fn multiplicity(&self, part: usize) -> usize {
        self.multiplicities.get(&part).copied().unwrap_or(0)
    }

    pub fn multiplicities(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.multiplicities.iter().map(|(&k, &v)| (k, v))
    }

    /// The centralizer order z = ∏ i^{j_i} j_i!.
    pub fn centralizer_order(&self) -> u128 {
        self.multiplicities()
            .map(|(part, mult)| {
                (part as u128).pow(mult as u32) * factorial(mult)
            })
            .product()
    }

    /// The sign ε = (−1)^{j_2 + j_4 + …} of any permutation of this type.
    pub fn sign(&self) -> i64 {
        let even_parts: usize = self
            .multiplicities()
            .filter(|(part, _)| part % 2 == 0)
            .map(|(_, mult)| mult)
            .sum();
        if even_parts % 2 == 0 {
            1
        } else {
            -1
        }
    }
}

pub(crate) fn factorial(n: usize) -> u128 {
    (1..=n as u128).product()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn cycle_type_examples() {
        let pi = Permutation::new(vec![2, 3, 1, 5, 4, 7, 6]).unwrap();
        assert_eq!(pi.cycle_type().partition(), &p(&[3, 2, 2]));
        assert_eq!(
            Permutation::identity(4).cycle_type().partition(),
            &p(&[1, 1, 1, 1])
        );
        let tau = Permutation::new(vec![2, 1, 3]).unwrap();
        assert_eq!(tau.cycle_type().partition(), &p(&[2, 1]));
    }

    #[test]
    fn canonical_representative_matches_consecutive_cycles() {
        let pi = Permutation::canonical_of_type(&p(&[3, 2, 2]));
        assert_eq!(pi.images(), &[2, 3, 1, 5, 4, 7, 6]);
        assert_eq!(Permutation::canonical_of_type(&p(&[1, 1])).images(), &[1, 2]);
    }

    #[test]
    fn bijection_is_validated() {
        assert!(Permutation::new(vec![1, 1]).is_err());
        assert!(Permutation::new(vec![0]).is_err());
        assert!(Permutation::new(vec![3, 1]).is_err());
        assert!("2,2".parse::<Permutation>().is_err());
        assert_eq!(
            "2,3,1".parse::<Permutation>().unwrap(),
            Permutation::new(vec![2, 3, 1]).unwrap()
        );
    }

    #[test]
    fn centralizer_order_examples() {
        let z = |parts: &[usize]| CycleType::from_partition(p(parts)).centralizer_order();
        assert_eq!(z(&[1, 1, 1]), 6);
        assert_eq!(z(&[2, 1]), 2);
        assert_eq!(z(&[3, 2, 2]), 24);
        assert_eq!(z(&[]), 1);
    }

    #[test]
    fn sign_examples() {
        let eps = |parts: &[usize]| CycleType::from_partition(p(parts)).sign();
        assert_eq!(eps(&[2]), -1);
        assert_eq!(eps(&[3, 2, 2]), 1);
        assert_eq!(eps(&[1, 1]), 1);
    }
}
