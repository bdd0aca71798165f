//! Exact computation of irreducible symmetric-group characters, Schur and
//! skew Schur polynomials in the entries of a generic matrix, and matrix
//! immanants.
//!
//! Everything is exact: coefficients are arbitrary-precision integers and
//! identities are checked by structural equality of sparse polynomials. The
//! crate is organized around four layers:
//!
//! * [`partitions`] / [`permutations`] — the combinatorial ground floor:
//!   partitions, conjugates, border strips, cycle types, class constants;
//! * [`polyring`] — sparse multivariate polynomials over `BigInt` and
//!   polynomial-matrix determinants;
//! * [`symfun`] — elementary/homogeneous/power-sum/Schur evaluations of the
//!   eigenvalues of a matrix, written directly in the matrix entries;
//! * [`characters`] — χ^λ(μ) by three independent routes, character tables,
//!   scalar-product identities, and immanants.
//!
//! All values are immutable after construction and all operations are pure,
//! so everything here can be used concurrently without restriction.

pub mod characters;
pub mod error;
pub mod partitions;
pub mod permutations;
pub mod polyring;
pub mod symfun;

pub use characters::{
    build_f, character_table, character_table_with_bound, chi_gj, chi_mn, chi_mn_unmemoized,
    chi_oracle, coeff_p, immanant, immanant_int, inner_e_p, CharacterQuery, CharacterTable,
    FSequence, DEFAULT_TABLE_BOUND,
};
pub use error::{Error, Result};
pub use partitions::{count_ordered_refinements, partitions_of, Partition, SkewShape};
pub use permutations::{CycleType, Permutation};
pub use polyring::{GenericMatrix, Monomial, Polynomial, VarId};
pub use symfun::{
    char_poly, coeff_via_blocks, companion_matrix, cycle_block_diagonal, cycle_matrix,
    elementary_sym, homogeneous_sym, is_balanced, power_sum, schur_dual_jt, schur_jt,
    skew_schur, SymmetricEvaluation,
};
