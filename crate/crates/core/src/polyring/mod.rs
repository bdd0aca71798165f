//! Exact sparse multivariate polynomial arithmetic over arbitrary-precision
//! integers.
//!
//! Every symbolic object in this crate (minor sums, complete homogeneous
//! expansions, Jacobi-Trudi determinants, characteristic polynomials) is a
//! [`Polynomial`]: a map from canonical [`Monomial`]s to nonzero `BigInt`
//! coefficients. Structural equality of the term maps is the equality used by
//! every identity check, so both types maintain a strict canonical form: no
//! zero exponents, no zero coefficients, variables in their total order.

mod matrix;

pub use matrix::GenericMatrix;

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use smallvec::SmallVec;

use crate::error::{Error, Result};

/// A polynomial variable.
///
/// The derived order is the total order used for canonical monomials: `t`
/// before every `u_k`, every `u_k` before every matrix entry, `u` variables by
/// index, and entries by `(row, col)`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum VarId {
    /// The characteristic-polynomial indeterminate `t`.
    T,
    /// The auxiliary variable `u_k`, 1-based.
    U(u32),
    /// The matrix entry `a[row, col]`, 1-based.
    Entry(u32, u32),
}

impl VarId {
    /// The entry variable `a[row, col]` (both 1-based).
    pub fn entry(row: usize, col: usize) -> VarId {
        debug_assert!(row >= 1 && col >= 1);
        VarId::Entry(row as u32, col as u32)
    }

    /// The auxiliary variable `u_k` (1-based).
    pub fn u(k: usize) -> VarId {
        debug_assert!(k >= 1);
        VarId::U(k as u32)
    }
}

impl fmt::Display for VarId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VarId::T => write!(f, "t"),
            VarId::U(k) => write!(f, "u{k}"),
            VarId::Entry(i, j) => write!(f, "a[{i},{j}]"),
        }
    }
}

type ExpList = SmallVec<[(VarId, u32); 8]>;

/// A power product of variables in canonical form: strictly increasing
/// variables, all exponents positive. The empty monomial is the unit.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Monomial {
    exps: ExpList,
}

impl Monomial {
    /// The unit monomial (empty product).
    pub fn unit() -> Self {
        Monomial::default()
    }

    /// The monomial consisting of a single variable.
    pub fn var(v: VarId) -> Self {
        let mut exps = ExpList::new();
        exps.push((v, 1));
        Monomial { exps }
    }

    /// Builds a monomial from (variable, exponent) pairs in any order;
    /// duplicates are merged and zero exponents dropped.
    pub fn from_exponents(pairs: impl IntoIterator<Item = (VarId, u32)>) -> Self {
        let mut exps: ExpList = pairs.into_iter().filter(|&(_, e)| e > 0).collect();
        exps.sort_unstable_by_key(|&(v, _)| v);
        let mut merged = ExpList::new();
        for (v, e) in exps {
            match merged.last_mut() {
                Some((last, acc)) if *last == v => *acc += e,
                _ => merged.push((v, e)),
            }
        }
        Monomial { exps: merged }
    }

    pub fn is_unit(&self) -> bool {
        self.exps.is_empty()
    }

    /// The exponent of `v` (0 when absent).
    pub fn exponent(&self, v: VarId) -> u32 {
        self.exps
            .binary_search_by_key(&v, |&(w, _)| w)
            .map(|idx| self.exps[idx].1)
            .unwrap_or(0)
    }

    /// The (variable, exponent) pairs in canonical order.
    pub fn iter(&self) -> impl Iterator<Item = (VarId, u32)> + '_ {
        self.exps.iter().copied()
    }

    /// Total degree.
    pub fn degree(&self) -> usize {
        self.exps.iter().map(|&(_, e)| e as usize).sum()
    }

    /// The product of two monomials.
    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut exps = ExpList::with_capacity(self.exps.len() + other.exps.len());
        let (mut a, mut b) = (self.exps.iter().peekable(), other.exps.iter().peekable());
        loop {
            match (a.peek(), b.peek()) {
                (Some(&&(va, ea)), Some(&&(vb, eb))) => {
                    if va < vb {
                        exps.push((va, ea));
                        a.next();
                    } else if vb < va {
                        exps.push((vb, eb));
                        b.next();
                    } else {
                        exps.push((va, ea + eb));
                        a.next();
                        b.next();
                    }
                }
                (Some(&&x), None) => {
                    exps.push(x);
                    a.next();
                }
                (None, Some(&&x)) => {
                    exps.push(x);
                    b.next();
                }
                (None, None) => break,
            }
        }
        Monomial { exps }
    }

    /// Divides by `other` when every exponent allows it.
    pub fn try_div(&self, other: &Monomial) -> Option<Monomial> {
        let mut exps = ExpList::new();
        let mut rest = self.exps.iter().peekable();
        for &(v, e) in &other.exps {
            loop {
                let &&(w, f) = rest.peek()?;
                if w < v {
                    exps.push((w, f));
                    rest.next();
                } else if w == v {
                    if f < e {
                        return None;
                    }
                    if f > e {
                        exps.push((w, f - e));
                    }
                    rest.next();
                    break;
                } else {
                    return None;
                }
            }
        }
        exps.extend(rest.copied());
        Some(Monomial { exps })
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_unit() {
            return write!(f, "1");
        }
        let mut first = true;
        for (v, e) in self.iter() {
            if !first {
                write!(f, "*")?;
            }
            write!(f, "{v}")?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
            first = false;
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// A sparse polynomial with exact `BigInt` coefficients.
///
/// Immutable in practice: all arithmetic produces new values, so sharing
/// across threads is safe.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct Polynomial {
    terms: BTreeMap<Monomial, BigInt>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial::default()
    }

    pub fn one() -> Self {
        Polynomial::constant(1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Monomial::unit(), c);
        }
        Polynomial { terms }
    }

    pub fn variable(v: VarId) -> Self {
        Polynomial::from_term(Monomial::var(v), BigInt::from(1))
    }

    pub fn from_term(m: Monomial, c: impl Into<BigInt>) -> Self {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Polynomial { terms }
    }

    /// Builds a polynomial from (monomial, coefficient) pairs, accumulating
    /// duplicates and dropping zero totals.
    pub fn from_terms(pairs: impl IntoIterator<Item = (Monomial, BigInt)>) -> Self {
        let mut out = Polynomial::zero();
        for (m, c) in pairs {
            out.add_term(m, c);
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Total degree; 0 for the zero polynomial.
    pub fn degree(&self) -> usize {
        self.terms.keys().map(Monomial::degree).max().unwrap_or(0)
    }

    /// The exact coefficient of `m` (0 when absent).
    pub fn coeff(&self, m: &Monomial) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_else(BigInt::zero)
    }

    /// The coefficient of the unit monomial.
    pub fn constant_term(&self) -> BigInt {
        self.coeff(&Monomial::unit())
    }

    /// True when the polynomial is a constant (possibly zero).
    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(Monomial::is_unit)
    }

    /// The terms in canonical monomial order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    pub(crate) fn add_term(&mut self, m: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// The coefficient of ∏ vars (each to the first power), as a polynomial in
    /// the remaining variables. Rejects duplicate entries in `vars`.
    pub fn multilinear_coeff(&self, vars: &[VarId]) -> Result<Polynomial> {
        let mut sorted = vars.to_vec();
        sorted.sort_unstable();
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::DuplicateVariable);
        }
        let mut out = Polynomial::zero();
        'terms: for (m, c) in &self.terms {
            let mut stripped = m.clone();
            for &v in &sorted {
                if m.exponent(v) != 1 {
                    continue 'terms;
                }
                stripped = stripped
                    .try_div(&Monomial::var(v))
                    .expect("exponent checked above");
            }
            out.add_term(stripped, c.clone());
        }
        Ok(out)
    }

    /// Non-negative integer power by repeated multiplication.
    pub fn pow(&self, e: u32) -> Polynomial {
        let mut acc = Polynomial::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl AddAssign<&Polynomial> for Polynomial {
    fn add_assign(&mut self, rhs: &Polynomial) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), c.clone());
        }
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl SubAssign<&Polynomial> for Polynomial {
    fn sub_assign(&mut self, rhs: &Polynomial) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), -c);
        }
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(mut self) -> Polynomial {
        for c in self.terms.values_mut() {
            *c = -std::mem::take(c);
        }
        self
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        let mut out = Polynomial::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }
}

impl Add for Polynomial {
    type Output = Polynomial;
    fn add(mut self, rhs: Polynomial) -> Polynomial {
        self += &rhs;
        self
    }
}

impl Sub for Polynomial {
    type Output = Polynomial;
    fn sub(mut self, rhs: Polynomial) -> Polynomial {
        self -= &rhs;
        self
    }
}

impl Mul for Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: Polynomial) -> Polynomial {
        &self * &rhs
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in &self.terms {
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if m.is_unit() {
                write!(f, "{mag}")?;
            } else if mag == BigInt::from(1) {
                write!(f, "{m}")?;
            } else {
                write!(f, "{mag}*{m}")?;
            }
            first = false;
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a(i: usize, j: usize) -> Polynomial {
        Polynomial::variable(VarId::entry(i, j))
    }

    fn am(i: usize, j: usize) -> Monomial {
        Monomial::var(VarId::entry(i, j))
    }

    #[test]
    fn add_cancels_and_merges() {
        let x = a(1, 1);
        assert!((&x + &-&x).is_zero());

        let sum = &(&a(1, 1) + &a(2, 2)) + &a(2, 2);
        assert_eq!(sum.coeff(&am(1, 1)), BigInt::from(1));
        assert_eq!(sum.coeff(&am(2, 2)), BigInt::from(2));
        assert_eq!(sum.num_terms(), 2);

        assert_eq!(&Polynomial::zero() + &x, x);
    }

    #[test]
    fn mul_expands_exactly() {
        let sum = &a(1, 1) + &a(2, 2);
        let diff = &a(1, 1) - &a(2, 2);
        let prod = &sum * &diff;
        let expected = &(&a(1, 1) * &a(1, 1)) - &(&a(2, 2) * &a(2, 2));
        assert_eq!(prod, expected);

        assert_eq!(&sum * &Polynomial::one(), sum);
    }

    #[test]
    fn schur_32_coefficient_by_direct_product() {
        // (a11 a22 - a12 a21)^2 (a11 + a22), the 2-variable Schur expansion
        // whose a11 a12 a21 a22^2 coefficient is -2.
        let det = &(&a(1, 1) * &a(2, 2)) - &(&a(1, 2) * &a(2, 1));
        let prod = &det.pow(2) * &(&a(1, 1) + &a(2, 2));
        let target = Monomial::from_exponents([
            (VarId::entry(1, 1), 1),
            (VarId::entry(1, 2), 1),
            (VarId::entry(2, 1), 1),
            (VarId::entry(2, 2), 2),
        ]);
        assert_eq!(prod.coeff(&target), BigInt::from(-2));
    }

    #[test]
    fn coeff_examples() {
        // h_2 in two variables with entries relabelled 3,4.
        let h2 = Polynomial::from_terms([
            (
                Monomial::from_exponents([(VarId::entry(3, 3), 2)]),
                BigInt::from(1),
            ),
            (am(3, 3).mul(&am(4, 4)), BigInt::from(1)),
            (am(3, 4).mul(&am(4, 3)), BigInt::from(1)),
            (
                Monomial::from_exponents([(VarId::entry(4, 4), 2)]),
                BigInt::from(1),
            ),
        ]);
        assert_eq!(h2.coeff(&am(3, 4).mul(&am(4, 3))), BigInt::from(1));
        assert_eq!(
            Polynomial::zero().coeff(&Monomial::unit()),
            BigInt::from(0)
        );
    }

    #[test]
    fn multilinear_extraction() {
        let u = |k: usize| Polynomial::variable(VarId::u(k));
        let uvars = [VarId::u(1), VarId::u(2), VarId::u(3)];

        let p = &(&(&u(1) * &u(2)) * &u(3)) * &Polynomial::constant(5);
        assert_eq!(
            p.multilinear_coeff(&uvars).unwrap(),
            Polynomial::constant(5)
        );

        let q = &(&u(1) * &u(1)) + &u(2);
        assert!(q.multilinear_coeff(&[VarId::u(1)]).unwrap().is_zero());

        assert_eq!(
            q.multilinear_coeff(&[VarId::u(1), VarId::u(1)]),
            Err(Error::DuplicateVariable)
        );

        // Mixed variables stay in the result.
        let r = &(&u(1) * &a(1, 1)) + &u(2);
        assert_eq!(r.multilinear_coeff(&[VarId::u(1)]).unwrap(), a(1, 1));
    }

    #[test]
    fn display_matches_documented_rendering() {
        let det = &(&a(1, 1) * &a(2, 2)) - &(&a(1, 2) * &a(2, 1));
        assert_eq!(det.to_string(), "a[1,1]*a[2,2] - a[1,2]*a[2,1]");
        assert_eq!(Polynomial::zero().to_string(), "0");
        assert_eq!(Polynomial::constant(-7).to_string(), "-7");
        let sq = &a(1, 2) * &a(1, 2);
        assert_eq!(
            (&sq + &sq).to_string(),
            "2*a[1,2]^2"
        );
        assert_eq!(Polynomial::variable(VarId::u(2)).to_string(), "u2");
        assert_eq!(Polynomial::variable(VarId::T).to_string(), "t");
    }

    #[test]
    fn monomial_division() {
        let m = Monomial::from_exponents([
            (VarId::entry(1, 1), 2),
            (VarId::entry(1, 2), 1),
        ]);
        assert_eq!(
            m.try_div(&am(1, 1)).unwrap(),
            Monomial::from_exponents([(VarId::entry(1, 1), 1), (VarId::entry(1, 2), 1)])
        );
        assert_eq!(m.try_div(&am(2, 1)), None);
        assert_eq!(m.try_div(&m).unwrap(), Monomial::unit());
        assert_eq!(
            m.try_div(&Monomial::from_exponents([(VarId::entry(1, 2), 2)])),
            None
        );
    }

    #[test]
    fn variable_order_is_t_then_u_then_entries() {
        assert!(VarId::T < VarId::u(1));
        assert!(VarId::u(7) < VarId::entry(1, 1));
        assert!(VarId::entry(1, 9) < VarId::entry(2, 1));
    }
}
