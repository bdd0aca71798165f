//! Invariant and property suites: ring axioms on randomized inputs, oracle
//! cross-checks for determinants and coefficients, and the exhaustive
//! small-size identity checks that back the faster code paths.

mod common;

use itertools::Itertools;
use num_bigint::BigInt;
use num_traits::Zero;
use proptest::prelude::*;

use charforge_core::{
    build_f, char_poly, chi_gj, chi_mn, chi_mn_unmemoized, coeff_via_blocks,
    cycle_block_diagonal, elementary_sym, homogeneous_sym, is_balanced, partitions_of,
    power_sum, schur_dual_jt, schur_jt, CharacterQuery, CycleType, GenericMatrix, Monomial,
    Partition, Permutation, Polynomial, VarId,
};

use common::{det_permutation_sum, sign_by_inversions};

fn p(parts: &[usize]) -> Partition {
    Partition::new(parts.to_vec()).unwrap()
}

fn arb_var() -> impl Strategy<Value = VarId> {
    prop_oneof![
        1 => Just(VarId::T),
        2 => (1u32..=3).prop_map(VarId::U),
        4 => (1u32..=3, 1u32..=3).prop_map(|(i, j)| VarId::Entry(i, j)),
    ]
}

fn arb_monomial() -> impl Strategy<Value = Monomial> {
    prop::collection::vec((arb_var(), 1u32..=4), 0..=4).prop_map(Monomial::from_exponents)
}

fn arb_poly() -> impl Strategy<Value = Polynomial> {
    prop::collection::vec((arb_monomial(), -100i64..=100), 0..=20).prop_map(|terms| {
        Polynomial::from_terms(terms.into_iter().map(|(m, c)| (m, BigInt::from(c))))
    })
}

/// Sparse polynomial entries for determinant matrices: mostly zeros and
/// single variables so the permutation-sum oracle stays cheap.
fn arb_entry() -> impl Strategy<Value = Polynomial> {
    prop_oneof![
        3 => Just(Polynomial::zero()),
        2 => (-4i64..=4).prop_map(Polynomial::constant),
        4 => (1u32..=5, 1u32..=5).prop_map(|(i, j)| Polynomial::variable(VarId::Entry(i, j))),
        1 => ((1u32..=5, 1u32..=5), -3i64..=3).prop_map(|((i, j), c)| {
            &Polynomial::variable(VarId::Entry(i, j)) + &Polynomial::constant(c)
        }),
    ]
}

fn arb_matrix(size: usize) -> impl Strategy<Value = GenericMatrix> {
    prop::collection::vec(arb_entry(), size * size).prop_map(move |entries| {
        let mut it = entries.into_iter();
        GenericMatrix::from_fn(size, |_, _| it.next().unwrap())
    })
}

proptest! {
    #[test]
    fn ring_axioms(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a + &Polynomial::zero(), a.clone());
        prop_assert_eq!(&a * &Polynomial::one(), a.clone());
        prop_assert!((&a - &a).is_zero());
        prop_assert!((&a * &Polynomial::zero()).is_zero());
    }

    #[test]
    fn product_coefficients_are_convolutions(a in arb_poly(), b in arb_poly()) {
        let prod = &a * &b;
        // check a handful of monomials of the product (and one that may be absent)
        let targets: Vec<Monomial> = prod
            .terms()
            .map(|(m, _)| m.clone())
            .take(5)
            .chain([Monomial::var(VarId::Entry(9, 9))])
            .collect();
        for target in targets {
            let mut convolution = BigInt::zero();
            for (m1, c1) in a.terms() {
                if let Some(m2) = target.try_div(m1) {
                    convolution += c1 * b.coeff(&m2);
                }
            }
            prop_assert_eq!(prod.coeff(&target), convolution);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn det_matches_permutation_sum_4x4(m in arb_matrix(4)) {
        prop_assert_eq!(m.det(), det_permutation_sum(&m));
    }

    #[test]
    fn det_matches_permutation_sum_5x5(m in arb_matrix(5)) {
        prop_assert_eq!(m.det(), det_permutation_sum(&m));
    }

    #[test]
    fn block_diagonal_det_is_product_of_blocks(
        a in (1usize..=3).prop_flat_map(arb_matrix),
        b in (1usize..=3).prop_flat_map(arb_matrix),
    ) {
        let combined = GenericMatrix::block_diagonal(&[a.clone(), b.clone()]);
        prop_assert_eq!(combined.det(), &a.det() * &b.det());
    }
}

#[test]
fn coefficients_stay_exact_beyond_machine_words() {
    // (2^40 a11 + 3^25 a22)^4: the a11^2 a22^2 coefficient is 6·2^80·3^50,
    // far outside u64/i128 range.
    let big1 = BigInt::from(2).pow(40);
    let big2 = BigInt::from(3).pow(25);
    let base = Polynomial::from_terms([
        (Monomial::var(VarId::Entry(1, 1)), big1),
        (Monomial::var(VarId::Entry(2, 2)), big2),
    ]);
    let fourth = base.pow(4);
    let target = Monomial::from_exponents([(VarId::Entry(1, 1), 2), (VarId::Entry(2, 2), 2)]);
    let expected = BigInt::from(6) * BigInt::from(2).pow(80) * BigInt::from(3).pow(50);
    assert_eq!(fourth.coeff(&target), expected);
    assert!(expected > BigInt::from(u128::MAX));
}

#[test]
fn conjugation_is_an_involution_up_to_weight_30() {
    for n in 0..=30 {
        for lam in partitions_of(n) {
            let conj = lam.conjugate();
            assert_eq!(conj.n(), n);
            assert_eq!(conj.conjugate(), lam);
        }
    }
}

#[test]
fn class_sizes_match_centralizer_orders_up_to_s6() {
    for n in 1..=6 {
        let mut counts: std::collections::HashMap<Partition, u128> =
            std::collections::HashMap::new();
        for images in (1..=n).permutations(n) {
            let perm = Permutation::new(images).unwrap();
            *counts.entry(perm.cycle_type().partition().clone()).or_insert(0) += 1;
        }
        let factorial: u128 = (1..=n as u128).product();
        for lam in partitions_of(n) {
            let z = CycleType::from_partition(lam.clone()).centralizer_order();
            assert_eq!(counts[&lam], factorial / z, "class {lam:?} in S_{n}");
        }
    }
}

#[test]
fn cycle_type_sign_matches_inversions_and_permutation_matrix_det() {
    for n in 1..=6 {
        for images in (1..=n).permutations(n) {
            let perm = Permutation::new(images.clone()).unwrap();
            let by_type = perm.cycle_type().sign();
            assert_eq!(by_type, sign_by_inversions(&images));
            if n <= 5 {
                let matrix = GenericMatrix::from_fn(n, |i, j| {
                    if perm.image(i) == j {
                        Polynomial::one()
                    } else {
                        Polynomial::zero()
                    }
                });
                assert_eq!(matrix.det(), Polynomial::constant(by_type));
            }
        }
    }
}

#[test]
fn jacobi_trudi_and_dual_agree() {
    for m in 2..=4 {
        let a = GenericMatrix::generic(m);
        for n in 1..=5 {
            for lam in partitions_of(n) {
                assert_eq!(
                    schur_jt(&a, &lam),
                    schur_dual_jt(&a, &lam),
                    "λ = {lam:?}, m = {m}"
                );
            }
        }
    }
}

#[test]
fn schur_expansions_are_balanced() {
    for m in 2..=4 {
        let a = GenericMatrix::generic(m);
        for n in 1..=5 {
            for lam in partitions_of(n) {
                for (mono, _) in schur_jt(&a, &lam).terms() {
                    assert!(
                        is_balanced(mono).unwrap(),
                        "unbalanced {mono} in s_{lam:?} over {m} variables"
                    );
                }
            }
        }
    }
}

fn t_coefficient(poly: &Polynomial, power: u32) -> Polynomial {
    let t_power = Monomial::from_exponents([(VarId::T, power)]);
    Polynomial::from_terms(poly.terms().filter_map(|(m, c)| {
        (m.exponent(VarId::T) == power).then(|| (m.try_div(&t_power).unwrap(), c.clone()))
    }))
}

#[test]
fn characteristic_polynomial_coefficients_are_signed_minor_sums() {
    for m in 1..=4 {
        let a = GenericMatrix::generic(m);
        let cp = char_poly(&a);
        for i in 0..=m {
            let mut expected = elementary_sym(&a, i);
            if i % 2 == 1 {
                expected = -expected;
            }
            assert_eq!(t_coefficient(&cp, (m - i) as u32), expected, "m = {m}, i = {i}");
        }
    }
}

#[test]
fn newton_identity_power_sums_vs_minor_sums() {
    // p_k - e_1 p_{k-1} + e_2 p_{k-2} - ... + (-1)^k k e_k = 0
    for m in 1..=3 {
        let a = GenericMatrix::generic(m);
        for k in 1..=5usize {
            let mut acc = Polynomial::zero();
            for r in 0..k {
                let term = &elementary_sym(&a, r) * &power_sum(&a, k - r).unwrap();
                if r % 2 == 0 {
                    acc += &term;
                } else {
                    acc -= &term;
                }
            }
            let last = &Polynomial::constant(k as i64) * &elementary_sym(&a, k);
            if k % 2 == 0 {
                acc += &last;
            } else {
                acc -= &last;
            }
            assert!(acc.is_zero(), "m = {m}, k = {k}");
        }
    }
}

#[test]
fn murnaghan_nakayama_is_order_invariant() {
    for n in 1..=6 {
        for lam in partitions_of(n) {
            for mu in partitions_of(n) {
                let descending = mu.parts().to_vec();
                let ascending: Vec<usize> = descending.iter().rev().copied().collect();
                let by_desc = chi_mn_unmemoized(&lam, &descending);
                let by_asc = chi_mn_unmemoized(&lam, &ascending);
                assert_eq!(by_desc, by_asc, "λ = {lam:?}, μ = {mu:?}");
                if n <= 5 {
                    let query = CharacterQuery::new(lam.clone(), mu.clone()).unwrap();
                    assert_eq!(chi_mn(&query), by_desc, "memoized vs plain");
                }
            }
        }
    }
}

#[test]
fn mn_and_gj_agree_at_weights_5_and_6() {
    for n in 5..=6 {
        for lam in partitions_of(n) {
            for mu in partitions_of(n) {
                let query = CharacterQuery::new(lam.clone(), mu.clone()).unwrap();
                assert_eq!(chi_mn(&query), chi_gj(&query), "λ = {lam:?}, μ = {mu:?}");
            }
        }
    }
}

#[test]
fn block_recursion_matches_full_expansion_on_split_monomials() {
    let m = 4;
    let k = 2;
    let a = GenericMatrix::generic(m);
    for n in 2..=5 {
        for lam in partitions_of(n) {
            let full = schur_jt(&a, &lam);
            let mut checked = 0;
            for (mono, coeff) in full.terms() {
                let mut c_pairs = Vec::new();
                let mut d_pairs = Vec::new();
                let mut splits = true;
                for (v, e) in mono.iter() {
                    let VarId::Entry(r, c) = v else { unreachable!() };
                    if r as usize <= k && c as usize <= k {
                        c_pairs.push((v, e));
                    } else if r as usize > k && c as usize > k {
                        d_pairs.push((v, e));
                    } else {
                        splits = false;
                        break;
                    }
                }
                if !splits {
                    continue;
                }
                let mono_c = Monomial::from_exponents(c_pairs);
                let mono_d = Monomial::from_exponents(d_pairs);
                let via_blocks = coeff_via_blocks(&lam, &mono_c, &mono_d, k, m).unwrap();
                assert_eq!(&via_blocks, coeff, "λ = {lam:?}, monomial {mono}");
                checked += 1;
            }
            // λ with more rows than variables expands to 0 and has no terms
            assert!(checked > 0 || full.is_zero(), "no split monomials for λ = {lam:?}");
        }
    }
}

#[test]
fn f_sequence_is_multilinear_with_subset_degrees() {
    for n in 1..=6 {
        for mu in partitions_of(n) {
            let fs = build_f(&mu);
            assert_eq!(fs.poly(0), Polynomial::one());
            for i in 0..=n {
                for (mono, _) in fs.poly(i as isize).terms() {
                    let mut subset_weight = 0;
                    for (v, e) in mono.iter() {
                        let VarId::U(idx) = v else {
                            panic!("non-u variable {v} in f_{i}")
                        };
                        assert_eq!(e, 1, "f_{i} is multilinear");
                        subset_weight += mu.part(idx as usize - 1);
                    }
                    assert_eq!(subset_weight, i, "μ = {mu:?}");
                }
            }
        }
    }
}

#[test]
fn minor_sums_of_cycle_blocks_match_f_sequences() {
    for mu in [p(&[3, 2, 2]), p(&[2, 1]), p(&[4]), p(&[1, 1, 1])] {
        let a = cycle_block_diagonal(&mu);
        let fs = build_f(&mu);
        // u_k stands for the product of the k-th cycle's entries
        let mut cycle_monos = Vec::new();
        let mut offset = 0;
        for &len in mu.parts() {
            let pairs = (1..=len).map(|i| {
                let next = if i == len { 1 } else { i + 1 };
                (VarId::entry(offset + i, offset + next), 1)
            });
            cycle_monos.push(Monomial::from_exponents(pairs));
            offset += len;
        }
        for i in 0..=mu.n() {
            let substituted = Polynomial::from_terms(fs.poly(i as isize).terms().map(|(m, c)| {
                let mut out = Monomial::unit();
                for (v, _) in m.iter() {
                    let VarId::U(idx) = v else { unreachable!() };
                    out = out.mul(&cycle_monos[idx as usize - 1]);
                }
                (out, c.clone())
            }));
            assert_eq!(elementary_sym(&a, i), substituted, "μ = {mu:?}, i = {i}");
        }
    }
}

#[test]
fn homogeneous_sym_counts_all_sequences() {
    // the number of length-i sequences over m letters is m^i
    for m in 1..=3usize {
        let a = GenericMatrix::generic(m);
        for i in 1..=4usize {
            let h = homogeneous_sym(&a, i);
            let total: BigInt = h.terms().map(|(_, c)| c.clone()).sum();
            assert_eq!(total, BigInt::from(m.pow(i as u32)));
        }
    }
}
