//! Symmetric functions of the eigenvalues of a matrix, evaluated exactly as
//! polynomials in the matrix entries.
//!
//! The eigenvalues themselves are never computed. Instead:
//!
//! * `e_i` is the sum of the principal i×i minors;
//! * `h_i` is the MacMahon master theorem expansion: a sum over all index
//!   sequences of length i, each contributing a product of entries;
//! * `p_k` is the trace of the k-th matrix power;
//! * Schur and skew Schur functions are Jacobi-Trudi determinants whose
//!   entries are the `h_i` or `e_i` above.
//!
//! All arithmetic stays in the exact polynomial ring, so an identity between
//! two of these evaluations is checked by structural equality.

use std::collections::HashMap;

use itertools::Itertools;
use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::partitions::{partitions_of, Partition, SkewShape};
use crate::polyring::{GenericMatrix, Monomial, Polynomial, VarId};

/// The elementary symmetric function e_i of the eigenvalues: the sum of all
/// principal i×i minors. Returns 1 for i = 0 and 0 for i > size.
pub fn elementary_sym(a: &GenericMatrix, i: usize) -> Polynomial {
    if i == 0 {
        return Polynomial::one();
    }
    if i > a.size() {
        return Polynomial::zero();
    }
    let mut acc = Polynomial::zero();
    for subset in (1..=a.size()).combinations(i) {
        acc += &a.principal_submatrix(&subset).det();
    }
    acc
}

/// The complete homogeneous symmetric function h_i of the eigenvalues,
/// expanded over all size^i index sequences: a sequence w contributes the
/// product of entries (sorted(w)_t, w_t). Returns 1 for i = 0.
pub fn homogeneous_sym(a: &GenericMatrix, i: usize) -> Polynomial {
    if i == 0 {
        return Polynomial::one();
    }
    let m = a.size();
    if m == 0 {
        return Polynomial::zero();
    }
    // Entries of a generic matrix are single terms; multiply those directly
    // instead of going through full polynomial products.
    let single: Option<Vec<(Monomial, BigInt)>> = (1..=m)
        .cartesian_product(1..=m)
        .map(|(r, c)| {
            let e = a.entry(r, c);
            match e.num_terms() {
                0 => Some((Monomial::unit(), BigInt::zero())),
                1 => e.terms().next().map(|(mo, co)| (mo.clone(), co.clone())),
                _ => None,
            }
        })
        .collect();

    let mut acc = Polynomial::zero();
    let mut seq = vec![1usize; i];
    let mut sorted = vec![1usize; i];
    loop {
        sorted.copy_from_slice(&seq);
        sorted.sort_unstable();
        match &single {
            Some(terms) => {
                let mut coeff = BigInt::from(1);
                let mut pairs = Vec::with_capacity(i);
                for t in 0..i {
                    let (mo, co) = &terms[(sorted[t] - 1) * m + (seq[t] - 1)];
                    if co.is_zero() {
                        coeff = BigInt::zero();
                        break;
                    }
                    coeff *= co;
                    pairs.extend(mo.iter());
                }
                if !coeff.is_zero() {
                    acc.add_term(Monomial::from_exponents(pairs), coeff);
                }
            }
            None => {
                let mut term = Polynomial::one();
                for t in 0..i {
                    term = &term * a.entry(sorted[t], seq[t]);
                }
                acc += &term;
            }
        }
        // odometer over sequences in 1..=m
        let mut pos = 0;
        loop {
            if pos == i {
                return acc;
            }
            if seq[pos] < m {
                seq[pos] += 1;
                break;
            }
            seq[pos] = 1;
            pos += 1;
        }
    }
}

/// The power sum p_k of the eigenvalues: the trace of the k-th matrix power.
/// Rejects k = 0.
pub fn power_sum(a: &GenericMatrix, k: usize) -> Result<Polynomial> {
    if k == 0 {
        return Err(Error::OutOfRange("power sums need k >= 1".into()));
    }
    let mut pow = a.clone();
    for _ in 1..k {
        pow = pow.matmul(a);
    }
    Ok(pow.trace())
}

/// The characteristic polynomial det(tI − A) in the indeterminate `t`.
pub fn char_poly(a: &GenericMatrix) -> Polynomial {
    let t = Polynomial::variable(VarId::T);
    GenericMatrix::from_fn(a.size(), |i, j| {
        if i == j {
            &t - a.entry(i, j)
        } else {
            -a.entry(i, j)
        }
    })
    .det()
}

fn indexed(cache: &mut HashMap<usize, Polynomial>, a: &GenericMatrix, idx: isize, elem: bool) -> Polynomial {
    if idx < 0 {
        return Polynomial::zero();
    }
    let idx = idx as usize;
    cache
        .entry(idx)
        .or_insert_with(|| {
            if elem {
                elementary_sym(a, idx)
            } else {
                homogeneous_sym(a, idx)
            }
        })
        .clone()
}

/// The Schur function s_λ of the eigenvalues via the Jacobi-Trudi determinant
/// det(h_{λ_i − i + j}) of order len(λ). Negative indices give 0, index 0
/// gives 1; the empty partition gives 1.
pub fn schur_jt(a: &GenericMatrix, lam: &Partition) -> Polynomial {
    let p = lam.len();
    let mut cache = HashMap::new();
    let mut rows = Vec::with_capacity(p);
    for i in 1..=p {
        let mut row = Vec::with_capacity(p);
        for j in 1..=p {
            let idx = lam.part(i - 1) as isize - i as isize + j as isize;
            row.push(indexed(&mut cache, a, idx, false));
        }
        rows.push(row);
    }
    GenericMatrix::from_rows(rows).expect("square by construction").det()
}

/// The Schur function s_λ via the dual Jacobi-Trudi determinant
/// det(e_{λ'_i − i + j}) of order λ_1.
pub fn schur_dual_jt(a: &GenericMatrix, lam: &Partition) -> Polynomial {
    skew_schur_inner(a, lam, &Partition::empty())
}

/// The skew Schur function s_{λ/ν} via det(e_{λ'_i − ν'_j − i + j}) of order
/// λ_1. Reduces to `schur_dual_jt` when the inner shape is empty; containment
/// is enforced by the `SkewShape` type.
pub fn skew_schur(a: &GenericMatrix, shape: &SkewShape) -> Polynomial {
    skew_schur_inner(a, shape.outer(), shape.inner())
}

fn skew_schur_inner(a: &GenericMatrix, outer: &Partition, inner: &Partition) -> Polynomial {
    let size = outer.part(0);
    let oc = outer.conjugate();
    let ic = inner.conjugate();
    let mut cache = HashMap::new();
    let mut rows = Vec::with_capacity(size);
    for i in 1..=size {
        let mut row = Vec::with_capacity(size);
        for j in 1..=size {
            let idx = oc.part(i - 1) as isize - ic.part(j - 1) as isize - i as isize
                + j as isize;
            row.push(indexed(&mut cache, a, idx, true));
        }
        rows.push(row);
    }
    GenericMatrix::from_rows(rows).expect("square by construction").det()
}

/// The companion-style matrix of a cycle: entries b_1 … b_{l−1} on the
/// superdiagonal and b_l in the bottom-left corner, zeros elsewhere. Its
/// characteristic polynomial is ±(t^l − b_1⋯b_l), so e_1 … e_{l−1} of its
/// eigenvalues vanish. Rejects an empty entry list.
pub fn companion_matrix(b: &[Polynomial]) -> Result<GenericMatrix> {
    let l = b.len();
    if l == 0 {
        return Err(Error::EmptyCompanion);
    }
    Ok(GenericMatrix::from_fn(l, |i, j| {
        if i + 1 == j {
            b[i - 1].clone()
        } else if i == l && j == 1 {
            b[l - 1].clone()
        } else {
            Polynomial::zero()
        }
    }))
}

/// The companion matrix of an l-cycle on {offset+1, …, offset+l} with its
/// natural entry variables: a[offset+1, offset+2], …, a[offset+l, offset+1].
/// With offset 0 this is the top-left block of the block-diagonal matrix of a
/// permutation with consecutive cycles; nonzero offsets produce the deeper
/// blocks.
pub fn cycle_matrix(len: usize, offset: usize) -> Result<GenericMatrix> {
    let b: Vec<Polynomial> = (1..=len)
        .map(|i| {
            let next = if i == len { 1 } else { i + 1 };
            Polynomial::variable(VarId::entry(offset + i, offset + next))
        })
        .collect();
    companion_matrix(&b)
}

/// The block-diagonal matrix of the canonical permutation of cycle type μ:
/// one cycle block per part, on consecutive index ranges.
pub fn cycle_block_diagonal(mu: &Partition) -> GenericMatrix {
    let mut blocks = Vec::with_capacity(mu.len());
    let mut offset = 0;
    for &len in mu.parts() {
        blocks.push(cycle_matrix(len, offset).expect("parts are positive"));
        offset += len;
    }
    GenericMatrix::block_diagonal(&blocks)
}

/// Whether every index occurs as often among the row indices as among the
/// column indices of the monomial's entry variables (with multiplicity).
/// Rejects monomials containing `t` or `u` variables.
pub fn is_balanced(m: &Monomial) -> Result<bool> {
    let mut counts: HashMap<u32, (u64, u64)> = HashMap::new();
    for (v, e) in m.iter() {
        let VarId::Entry(r, c) = v else {
            return Err(Error::NonMatrixVariable);
        };
        counts.entry(r).or_default().0 += e as u64;
        counts.entry(c).or_default().1 += e as u64;
    }
    Ok(counts.values().all(|&(rows, cols)| rows == cols))
}

/// The coefficient of `mono_c · mono_d` in s_λ(ω_1, …, ω_m), computed by the
/// block recursion for a split into C = {1..k} and D = {k+1..m}:
///
///   Σ_ν [mono_c] s_ν(block C) · [mono_d] s_{λ/ν}(block D)
///
/// with ν ranging over the partitions of deg(mono_c) contained in λ. The
/// monomials must respect the split: `mono_c` may only use entries with both
/// indices in 1..=k, `mono_d` only entries with both indices in k+1..=m.
pub fn coeff_via_blocks(
    lam: &Partition,
    mono_c: &Monomial,
    mono_d: &Monomial,
    k: usize,
    m: usize,
) -> Result<BigInt> {
    check_block(mono_c, 1, k)?;
    check_block(mono_d, k + 1, m)?;
    let block_c = GenericMatrix::generic(k);
    let block_d = GenericMatrix::generic_offset(m - k, k);
    let mut total = BigInt::zero();
    for nu in partitions_of(mono_c.degree()) {
        if !lam.contains(&nu) {
            continue;
        }
        let c_coeff = schur_dual_jt(&block_c, &nu).coeff(mono_c);
        if c_coeff.is_zero() {
            continue;
        }
        let shape = SkewShape::new(lam.clone(), nu).expect("containment checked");
        let d_coeff = skew_schur(&block_d, &shape).coeff(mono_d);
        total += c_coeff * d_coeff;
    }
    Ok(total)
}

fn check_block(m: &Monomial, lo: usize, hi: usize) -> Result<()> {
    for (v, _) in m.iter() {
        let VarId::Entry(r, c) = v else {
            return Err(Error::NonMatrixVariable);
        };
        let (r, c) = (r as usize, c as usize);
        if r < lo || r > hi || c < lo || c > hi {
            return Err(Error::BlockSplit(format!(
                "a[{r},{c}] is outside rows/columns {lo}..={hi}"
            )));
        }
    }
    Ok(())
}

/// A symmetric-function value tied to the matrix it was evaluated on. The
/// value may only involve entry variables that exist in the matrix.
#[derive(Clone, Debug)]
pub struct SymmetricEvaluation {
    matrix: GenericMatrix,
    value: Polynomial,
}

impl SymmetricEvaluation {
    pub fn new(matrix: GenericMatrix, value: Polynomial) -> Result<Self> {
        let supported: std::collections::HashSet<VarId> = (1..=matrix.size())
            .cartesian_product(1..=matrix.size())
            .flat_map(|(i, j)| matrix.entry(i, j).terms().flat_map(|(m, _)| m.iter()))
            .map(|(v, _)| v)
            .collect();
        for (m, _) in value.terms() {
            for (v, _) in m.iter() {
                if !supported.contains(&v) {
                    return Err(Error::BlockSplit(format!(
                        "value uses {v}, which does not occur in the matrix"
                    )));
                }
            }
        }
        Ok(SymmetricEvaluation { matrix, value })
    }

    pub fn elementary(matrix: &GenericMatrix, i: usize) -> Self {
        let value = elementary_sym(matrix, i);
        SymmetricEvaluation { matrix: matrix.clone(), value }
    }

    pub fn homogeneous(matrix: &GenericMatrix, i: usize) -> Self {
        let value = homogeneous_sym(matrix, i);
        SymmetricEvaluation { matrix: matrix.clone(), value }
    }

    pub fn schur(matrix: &GenericMatrix, lam: &Partition) -> Self {
        let value = schur_jt(matrix, lam);
        SymmetricEvaluation { matrix: matrix.clone(), value }
    }

    pub fn matrix(&self) -> &GenericMatrix {
        &self.matrix
    }

    pub fn value(&self) -> &Polynomial {
        &self.value
    }
}
