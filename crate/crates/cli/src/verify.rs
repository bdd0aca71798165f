//! Identity verification suites: batch runners over the library's exact
//! identities, printing one PASS/FAIL line per instance.

use clap::ValueEnum;
use num_bigint::BigInt;

use charforge_core::{
    character_table_with_bound, chi_gj, chi_mn, chi_oracle, coeff_p, cycle_matrix,
    elementary_sym, homogeneous_sym, inner_e_p, partitions_of, power_sum, schur_dual_jt,
    schur_jt, skew_schur, CharacterQuery, CycleType, GenericMatrix, Monomial, Permutation,
    Polynomial, SkewShape, VarId,
};

#[derive(Clone, Copy, ValueEnum)]
pub enum Suite {
    /// Jacobi-Trudi vs dual Jacobi-Trudi Schur expansions
    Jt,
    /// Border-strip recursion vs determinantal extraction (plus the oracle for n <= 4)
    MnGj,
    /// Column orthogonality of the character table
    Orthogonality,
    /// Skew Schur functions on cycle matrices vanish unless the shape is a border strip
    Prop2,
    /// Entry-monomial coefficients of e_lambda and p_lambda against class constants
    Prop3,
    /// Alternating e/h convolution and Newton's power-sum identity
    Psum,
}

impl Suite {
    pub fn name(self) -> &'static str {
        match self {
            Suite::Jt => "jt",
            Suite::MnGj => "mn-gj",
            Suite::Orthogonality => "orthogonality",
            Suite::Prop2 => "prop2",
            Suite::Prop3 => "prop3",
            Suite::Psum => "psum",
        }
    }

    fn bound(self) -> usize {
        match self {
            Suite::Jt => 6,
            Suite::MnGj => 6,
            Suite::Orthogonality => 8,
            Suite::Prop2 => 7,
            Suite::Prop3 => 4,
            Suite::Psum => 6,
        }
    }
}

pub struct Outcome {
    pub passed: usize,
    pub failed: usize,
}

impl Outcome {
    fn new() -> Self {
        Outcome { passed: 0, failed: 0 }
    }

    fn check(&mut self, ok: bool, detail: std::fmt::Arguments<'_>) {
        if ok {
            self.passed += 1;
            println!("PASS {detail}");
        } else {
            self.failed += 1;
            println!("FAIL {detail}");
        }
    }
}

/// Runs a suite at the given n. Errs (for exit code 2) when n is outside the
/// suite's bounds.
pub fn run(suite: Suite, n: usize) -> Result<Outcome, String> {
    if n == 0 || n > suite.bound() {
        return Err(format!(
            "suite {} runs for 1 <= n <= {}, got {n}",
            suite.name(),
            suite.bound()
        ));
    }
    let mut outcome = Outcome::new();
    match suite {
        Suite::Jt => jt(n, &mut outcome),
        Suite::MnGj => mn_gj(n, &mut outcome),
        Suite::Orthogonality => orthogonality(n, &mut outcome),
        Suite::Prop2 => prop2(n, &mut outcome),
        Suite::Prop3 => prop3(n, &mut outcome),
        Suite::Psum => psum(n, &mut outcome),
    }
    Ok(outcome)
}

fn jt(n: usize, outcome: &mut Outcome) {
    for m in 2..=4 {
        let a = GenericMatrix::generic(m);
        for lam in partitions_of(n) {
            let direct = schur_jt(&a, &lam);
            let dual = schur_dual_jt(&a, &lam);
            outcome.check(
                direct == dual,
                format_args!("jt m={m} lambda={lam} ({} terms)", direct.num_terms()),
            );
        }
    }
}

fn mn_gj(n: usize, outcome: &mut Outcome) {
    for lam in partitions_of(n) {
        for mu in partitions_of(n) {
            let query = CharacterQuery::new(lam.clone(), mu.clone())
                .expect("partitions of the same n");
            let mn = chi_mn(&query);
            let gj = chi_gj(&query);
            if n <= 4 {
                let pi = Permutation::canonical_of_type(&mu);
                let oracle = chi_oracle(&lam, &pi).expect("sizes match");
                outcome.check(
                    mn == gj && mn == oracle,
                    format_args!(
                        "mn-gj lambda={lam} mu={mu} mn={mn} gj={gj} oracle={oracle}"
                    ),
                );
            } else {
                outcome.check(
                    mn == gj,
                    format_args!("mn-gj lambda={lam} mu={mu} mn={mn} gj={gj}"),
                );
            }
        }
    }
}

fn orthogonality(n: usize, outcome: &mut Outcome) {
    let table = character_table_with_bound(n, 8).expect("n validated");
    let partitions = table.partitions().to_vec();
    for lam in &partitions {
        let z = CycleType::from_partition(lam.clone()).centralizer_order() as i128;
        for mu in &partitions {
            let dot: i128 = partitions
                .iter()
                .map(|rho| {
                    table.value(rho, lam).unwrap() as i128
                        * table.value(rho, mu).unwrap() as i128
                })
                .sum();
            let expected = if lam == mu { z } else { 0 };
            outcome.check(
                dot == expected,
                format_args!(
                    "orthogonality lambda={lam} mu={mu} dot={dot} expected={expected}"
                ),
            );
        }
    }
}

fn prop2(n: usize, outcome: &mut Outcome) {
    for lam in partitions_of(n) {
        for nu in lam.subpartitions() {
            let strip_size = lam.n() - nu.n();
            if strip_size == 0 {
                continue;
            }
            let shape = SkewShape::new(lam.clone(), nu.clone()).expect("contained");
            let block = cycle_matrix(strip_size, 0).expect("positive size");
            let actual = skew_schur(&block, &shape);
            let expected = if shape.is_border_strip() {
                let entries = (1..=strip_size).map(|i| {
                    let next = if i == strip_size { 1 } else { i + 1 };
                    (VarId::entry(i, next), 1)
                });
                let sign = if shape.height().expect("border strip") % 2 == 0 {
                    1
                } else {
                    -1
                };
                Polynomial::from_term(Monomial::from_exponents(entries), sign)
            } else {
                Polynomial::zero()
            };
            outcome.check(
                actual == expected,
                format_args!(
                    "prop2 outer={lam} inner={nu} {}",
                    if shape.is_border_strip() { "strip" } else { "non-strip" }
                ),
            );
        }
    }
}

fn prop3(n: usize, outcome: &mut Outcome) {
    let generic = GenericMatrix::generic(n);
    for lam in partitions_of(n) {
        let mut e_lam = Polynomial::one();
        for &part in lam.parts() {
            e_lam = &e_lam * &elementary_sym(&generic, part);
        }
        let z = CycleType::from_partition(lam.clone()).centralizer_order();
        for mu in partitions_of(n) {
            let pi = Permutation::canonical_of_type(&mu);
            let brute = e_lam.coeff(&pi.matrix_monomial());
            let formula = BigInt::from(inner_e_p(&lam, &mu));
            outcome.check(
                brute == formula,
                format_args!("prop3-e lambda={lam} mu={mu} coeff={brute} formula={formula}"),
            );

            let p_coeff = coeff_p(&lam, &pi).expect("sizes match");
            let expected = if lam == mu { BigInt::from(z) } else { BigInt::from(0) };
            outcome.check(
                p_coeff == expected,
                format_args!(
                    "prop3-p lambda={lam} mu={mu} coeff={p_coeff} expected={expected}"
                ),
            );
        }
    }
}

fn psum(n: usize, outcome: &mut Outcome) {
    for m in 1..=3 {
        let a = GenericMatrix::generic(m);
        for degree in 1..=n {
            let mut acc = Polynomial::zero();
            for k in 0..=degree {
                let term = &elementary_sym(&a, k) * &homogeneous_sym(&a, degree - k);
                if k % 2 == 0 {
                    acc += &term;
                } else {
                    acc -= &term;
                }
            }
            outcome.check(
                acc.is_zero(),
                format_args!("psum-convolution m={m} i={degree}"),
            );
        }
        for k in 1..=n {
            let mut acc = Polynomial::zero();
            for r in 0..k {
                let term = &elementary_sym(&a, r) * &power_sum(&a, k - r).expect("k > r");
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
            outcome.check(acc.is_zero(), format_args!("psum-newton m={m} k={k}"));
        }
    }
}
