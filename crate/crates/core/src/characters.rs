//! Irreducible characters of the symmetric group by three independent
//! methods, scalar-product identities, and immanants.
//!
//! * [`chi_mn`] — the Murnaghan-Nakayama recursion over border-strip
//!   removals, memoized per evaluation;
//! * [`chi_gj`] — the determinantal description: expand
//!   ∏ (t^{μ_k} − u_k), form the dual Jacobi-Trudi determinant in the
//!   resulting coefficient polynomials, then take the coefficient of
//!   u_1⋯u_q;
//! * [`chi_oracle`] — brute force: the coefficient of a_{1π(1)}⋯a_{nπ(n)}
//!   in the full symbolic expansion of s_λ over a generic n×n matrix.
//!
//! The three agree; the test suites check this at every feasible size.

use std::collections::HashMap;

use itertools::Itertools;
use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::partitions::{count_ordered_refinements, partitions_of, Partition};
use crate::permutations::{CycleType, Permutation};
use crate::polyring::{GenericMatrix, Monomial, Polynomial, VarId};
use crate::symfun::{power_sum, schur_jt};

/// Default cap on n for character tables and immanants.
pub const DEFAULT_TABLE_BOUND: usize = 8;

/// A validated (λ, μ) pair with |λ| = |μ|.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CharacterQuery {
    lam: Partition,
    mu: Partition,
}

impl CharacterQuery {
    pub fn new(lam: Partition, mu: Partition) -> Result<Self> {
        if lam.n() != mu.n() {
            return Err(Error::SizeMismatch(format!(
                "|λ| = {} but |μ| = {}",
                lam.n(),
                mu.n()
            )));
        }
        Ok(CharacterQuery { lam, mu })
    }

    pub fn lam(&self) -> &Partition {
        &self.lam
    }

    pub fn mu(&self) -> &Partition {
        &self.mu
    }
}

struct MnEvaluator {
    memo: HashMap<(Partition, Partition), i64>,
}

impl MnEvaluator {
    fn new() -> Self {
        MnEvaluator { memo: HashMap::new() }
    }

    /// Consumes `mu_rest[0]` first; remaining parts keyed as a multiset.
    fn eval(&mut self, lam: &Partition, mu_rest: &[usize]) -> i64 {
        let Some((&strip, rest)) = mu_rest.split_first() else {
            return if lam.is_empty() { 1 } else { 0 };
        };
        let mut sorted = mu_rest.to_vec();
        sorted.sort_unstable_by(|a, b| b.cmp(a));
        let key = (
            lam.clone(),
            Partition::new(sorted).expect("positive parts"),
        );
        if let Some(&v) = self.memo.get(&key) {
            return v;
        }
        let mut total = 0;
        for (nu, height) in lam.border_strip_removals(strip) {
            let sign = if height % 2 == 0 { 1 } else { -1 };
            total += sign * self.eval(&nu, rest);
        }
        self.memo.insert(key, total);
        total
    }
}

/// χ^λ(μ) by the Murnaghan-Nakayama recursion, memoized on
/// (λ, multiset of remaining parts). μ's parts are consumed in stored
/// (weakly decreasing) order.
pub fn chi_mn(query: &CharacterQuery) -> i64 {
    MnEvaluator::new().eval(query.lam(), query.mu().parts())
}

/// The Murnaghan-Nakayama recursion without memoization, consuming the given
/// parts list front to back in exactly the order supplied. The result does
/// not depend on the order; tests assert that independently of the memoized
/// path.
pub fn chi_mn_unmemoized(lam: &Partition, mu_parts: &[usize]) -> i64 {
    let Some((&strip, rest)) = mu_parts.split_first() else {
        return if lam.is_empty() { 1 } else { 0 };
    };
    let mut total = 0;
    for (nu, height) in lam.border_strip_removals(strip) {
        let sign = if height % 2 == 0 { 1 } else { -1 };
        total += sign * chi_mn_unmemoized(&nu, rest);
    }
    total
}

/// The coefficient sequence of ∏_k (t^{μ_k} − u_k) written as
/// f_0 t^m − f_1 t^{m−1} + … ± f_m:  f_i = (−1)^i · (coefficient of t^{m−i}).
/// Each f_i is a multilinear polynomial in u_1 … u_q; f_0 = 1.
#[derive(Clone, Debug)]
pub struct FSequence {
    mu: Partition,
    f: Vec<Polynomial>,
}

impl FSequence {
    pub fn mu(&self) -> &Partition {
        &self.mu
    }

    /// The total degree m = |μ|.
    pub fn m(&self) -> usize {
        self.mu.n()
    }

    /// f_idx, with out-of-range indices (idx < 0 or idx > m) reading as 0.
    pub fn poly(&self, idx: isize) -> Polynomial {
        if idx < 0 || idx as usize >= self.f.len() {
            Polynomial::zero()
        } else {
            self.f[idx as usize].clone()
        }
    }
}

/// Expands ∏_k (t^{μ_k} − u_k) over subsets of parts: a subset S drops the
/// t-degree by Σ_{k∈S} μ_k and contributes ∏_{k∈S} (−u_k).
pub fn build_f(mu: &Partition) -> FSequence {
    let m = mu.n();
    let q = mu.len();
    let mut t_coeff = vec![Polynomial::zero(); m + 1]; // by power of t
    for subset in 0u32..(1 << q) {
        let mut drop = 0;
        let mut vars = Vec::new();
        for k in 0..q {
            if subset & (1 << k) != 0 {
                drop += mu.part(k);
                vars.push((VarId::u(k + 1), 1));
            }
        }
        let sign = if vars.len() % 2 == 0 { 1 } else { -1 };
        t_coeff[m - drop].add_term(Monomial::from_exponents(vars), BigInt::from(sign));
    }
    let f = (0..=m)
        .map(|i| {
            let c = t_coeff[m - i].clone();
            if i % 2 == 0 {
                c
            } else {
                -c
            }
        })
        .collect();
    FSequence { mu: mu.clone(), f }
}

/// χ^λ(μ) as the coefficient of u_1⋯u_q in det(f_{λ'_i − i + j}), the
/// determinant of order λ_1 built from [`build_f`].
pub fn chi_gj(query: &CharacterQuery) -> i64 {
    let lam = query.lam();
    let mu = query.mu();
    if lam.is_empty() {
        return 1;
    }
    let fs = build_f(mu);
    let conj = lam.conjugate();
    let size = lam.part(0);
    let mat = GenericMatrix::from_fn(size, |i, j| {
        fs.poly(conj.part(i - 1) as isize - i as isize + j as isize)
    });
    let uvars: Vec<VarId> = (1..=mu.len()).map(VarId::u).collect();
    let coeff = mat
        .det()
        .multilinear_coeff(&uvars)
        .expect("u variables are distinct");
    debug_assert!(coeff.is_constant());
    big_to_i64(coeff.constant_term())
}

/// χ^λ(π) as the coefficient of a_{1π(1)}⋯a_{nπ(n)} in the full symbolic
/// Schur expansion over a generic n×n matrix. Exponential in n; the ground
/// truth the faster methods are checked against.
pub fn chi_oracle(lam: &Partition, perm: &Permutation) -> Result<i64> {
    let n = perm.degree();
    if lam.n() != n {
        return Err(Error::SizeMismatch(format!(
            "|λ| = {} but the permutation acts on {n} points",
            lam.n()
        )));
    }
    let expansion = schur_jt(&GenericMatrix::generic(n), lam);
    Ok(big_to_i64(expansion.coeff(&perm.matrix_monomial())))
}

/// The coefficient of a_{1π(1)}⋯a_{nπ(n)} in p_λ = ∏ p_{λ_i} of a generic
/// n×n matrix; equals z_λ when π has cycle type λ and 0 otherwise.
pub fn coeff_p(lam: &Partition, perm: &Permutation) -> Result<BigInt> {
    let n = perm.degree();
    if lam.n() != n {
        return Err(Error::SizeMismatch(format!(
            "|λ| = {} but the permutation acts on {n} points",
            lam.n()
        )));
    }
    let a = GenericMatrix::generic(n);
    let mut prod = Polynomial::one();
    for &part in lam.parts() {
        prod = &prod * &power_sum(&a, part).expect("parts are positive");
    }
    Ok(prod.coeff(&perm.matrix_monomial()))
}

/// The scalar product ⟨e_λ, p_μ⟩ = ε_μ · R_{μλ}; 0 when |λ| ≠ |μ|.
pub fn inner_e_p(lam: &Partition, mu: &Partition) -> i128 {
    if lam.n() != mu.n() {
        return 0;
    }
    let sign = CycleType::from_partition(mu.clone()).sign() as i128;
    sign * count_ordered_refinements(mu, lam) as i128
}

/// The full character table of S_n: rows λ, columns μ, both in
/// reverse-lexicographic order ((n) first, (1^n) last).
#[derive(Clone, Debug)]
pub struct CharacterTable {
    n: usize,
    partitions: Vec<Partition>,
    values: Vec<Vec<i64>>,
}

impl CharacterTable {
    pub fn n(&self) -> usize {
        self.n
    }

    /// Row and column labels, in table order.
    pub fn partitions(&self) -> &[Partition] {
        &self.partitions
    }

    /// χ^λ(μ), or None when either label is not a partition of n.
    pub fn value(&self, lam: &Partition, mu: &Partition) -> Option<i64> {
        let row = self.partitions.iter().position(|p| p == lam)?;
        let col = self.partitions.iter().position(|p| p == mu)?;
        Some(self.values[row][col])
    }

    /// The row of χ^λ values in column order.
    pub fn row(&self, idx: usize) -> &[i64] {
        &self.values[idx]
    }
}

/// Builds the character table of S_n via the Murnaghan-Nakayama recursion,
/// sharing one memo across all cells. n is capped by `bound`.
pub fn character_table_with_bound(n: usize, bound: usize) -> Result<CharacterTable> {
    if n == 0 || n > bound {
        return Err(Error::OutOfRange(format!(
            "character tables are built for 1 <= n <= {bound}, got {n}"
        )));
    }
    let partitions = partitions_of(n);
    let mut evaluator = MnEvaluator::new();
    let values = partitions
        .iter()
        .map(|lam| {
            partitions
                .iter()
                .map(|mu| evaluator.eval(lam, mu.parts()))
                .collect()
        })
        .collect();
    Ok(CharacterTable { n, partitions, values })
}

/// [`character_table_with_bound`] at the default bound.
pub fn character_table(n: usize) -> Result<CharacterTable> {
    character_table_with_bound(n, DEFAULT_TABLE_BOUND)
}

fn class_values(lam: &Partition) -> HashMap<Partition, i64> {
    let mut evaluator = MnEvaluator::new();
    partitions_of(lam.n())
        .into_iter()
        .map(|mu| {
            let v = evaluator.eval(lam, mu.parts());
            (mu, v)
        })
        .collect()
}

/// The symbolic immanant Σ_π χ^λ(π) · a_{1π(1)}⋯a_{nπ(n)} of an n×n matrix,
/// n = |λ| ≤ `DEFAULT_TABLE_BOUND`. Characters come from the
/// Murnaghan-Nakayama recursion, one value per cycle type.
pub fn immanant(a: &GenericMatrix, lam: &Partition) -> Result<Polynomial> {
    let n = a.size();
    check_immanant_args(lam, n)?;
    let chi = class_values(lam);
    let mut acc = Polynomial::zero();
    for images in (1..=n).permutations(n) {
        let perm = Permutation::new(images).expect("permutations are bijections");
        let c = chi[perm.cycle_type().partition()];
        if c == 0 {
            continue;
        }
        let mut term = Polynomial::constant(c);
        for i in 1..=n {
            term = &term * a.entry(i, perm.image(i));
        }
        acc += &term;
    }
    Ok(acc)
}

/// The exact immanant of a numeric matrix given as rows of `BigInt`s.
pub fn immanant_int(entries: &[Vec<BigInt>], lam: &Partition) -> Result<BigInt> {
    let n = entries.len();
    if entries.iter().any(|row| row.len() != n) {
        return Err(Error::SizeMismatch("matrix must be square".into()));
    }
    check_immanant_args(lam, n)?;
    let chi = class_values(lam);
    let mut acc = BigInt::zero();
    for images in (1..=n).permutations(n) {
        let perm = Permutation::new(images).expect("permutations are bijections");
        let c = chi[perm.cycle_type().partition()];
        if c == 0 {
            continue;
        }
        let mut term = BigInt::from(c);
        for i in 1..=n {
            term *= &entries[i - 1][perm.image(i) - 1];
        }
        acc += term;
    }
    Ok(acc)
}

fn check_immanant_args(lam: &Partition, n: usize) -> Result<()> {
    if lam.n() != n {
        return Err(Error::SizeMismatch(format!(
            "|λ| = {} but the matrix is {n}x{n}",
            lam.n()
        )));
    }
    if n > DEFAULT_TABLE_BOUND {
        return Err(Error::OutOfRange(format!(
            "immanants are computed for n <= {DEFAULT_TABLE_BOUND}, got {n}"
        )));
    }
    Ok(())
}

fn big_to_i64(v: BigInt) -> i64 {
    v.to_i64().expect("character value exceeds i64")
}
