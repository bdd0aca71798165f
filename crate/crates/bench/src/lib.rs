//! Benchmark-only crate; see `benches/characters.rs`.
//!
//! Shared inputs for the benchmarks live here so they stay consistent across
//! benchmark groups.

use charforge_core::{Partition, Permutation};

/// A mid-sized character query that exercises the border-strip recursion.
pub fn deep_query() -> (Partition, Partition) {
    (
        Partition::new(vec![6, 4, 2]).unwrap(),
        Partition::new(vec![3, 3, 2, 2, 1, 1]).unwrap(),
    )
}

/// The worked 7-point example: λ = (2,2,2,1), μ = (3,2,2), π = (123)(45)(67).
pub fn worked_example() -> (Partition, Partition, Permutation) {
    (
        Partition::new(vec![2, 2, 2, 1]).unwrap(),
        Partition::new(vec![3, 2, 2]).unwrap(),
        Permutation::new(vec![2, 3, 1, 5, 4, 7, 6]).unwrap(),
    )
}
