//! Sparse multivariate polynomials used by the symbolic rank engine, and the
//! [`PolyMatrix`] carrier whose entries are affine-linear in the indeterminates.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::rational::Rational;
use crate::error::{Error, Result};

/// Maximum number of indeterminates a packed [`Monomial`] can hold.
pub const MAX_PACKED_VARS: usize = 16;

/// Exponent vector packed into a `u128`, eight bits per variable, variable 0
/// in the most significant byte, so integer order is lexicographic order.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default)]
pub struct Monomial(u128);

impl Monomial {
    pub const ONE: Monomial = Monomial(0);

    pub fn var(i: usize) -> Self {
        assert!(i < MAX_PACKED_VARS, "variable index {i} exceeds packed capacity");
        Monomial(1u128 << (8 * (MAX_PACKED_VARS - 1 - i)))
    }

    pub fn exponent(self, i: usize) -> u8 {
        (self.0 >> (8 * (MAX_PACKED_VARS - 1 - i))) as u8
    }

    pub fn degree(self) -> u32 {
        self.0.to_le_bytes().iter().map(|&b| b as u32).sum()
    }

    #[inline]
    fn mul(self, other: Self) -> Self {
        Monomial(self.0 + other.0)
    }

    #[inline]
    fn divides(self, other: Self) -> bool {
        let a = self.0.to_le_bytes();
        let b = other.0.to_le_bytes();
        a.iter().zip(b.iter()).all(|(x, y)| x <= y)
    }

    #[inline]
    fn div(self, other: Self) -> Self {
        Monomial(self.0 - other.0)
    }
}

/// Coefficient rings the polynomial arithmetic runs over.
pub trait Coeff: Clone + PartialEq + fmt::Debug {
    fn zero() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn neg(&self) -> Self;
    /// Exact quotient, or `None` when `o` does not divide `self`.
    fn div_exact(&self, o: &Self) -> Option<Self>;
}

impl Coeff for BigInt {
    fn zero() -> Self {
        Zero::zero()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn neg(&self) -> Self {
        -self
    }
    fn div_exact(&self, o: &Self) -> Option<Self> {
        let (q, r) = self.div_rem(o);
        Zero::is_zero(&r).then_some(q)
    }
}

impl Coeff for Rational {
    fn zero() -> Self {
        Rational::zero()
    }
    fn is_zero(&self) -> bool {
        Rational::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn neg(&self) -> Self {
        -self
    }
    fn div_exact(&self, o: &Self) -> Option<Self> {
        (!o.is_zero()).then(|| self / o)
    }
}

/// Sparse polynomial: terms sorted by ascending monomial, no zero coefficients.
#[derive(Clone, PartialEq, Debug)]
pub struct Poly<C: Coeff> {
    terms: Vec<(Monomial, C)>,
}

impl<C: Coeff> Poly<C> {
    pub fn zero() -> Self {
        Poly { terms: Vec::new() }
    }

    pub fn constant(c: C) -> Self {
        Self::term(Monomial::ONE, c)
    }

    pub fn term(m: Monomial, c: C) -> Self {
        if c.is_zero() {
            Self::zero()
        } else {
            Poly { terms: vec![(m, c)] }
        }
    }

    pub fn from_terms(mut terms: Vec<(Monomial, C)>) -> Self {
        terms.sort_by(|a, b| a.0.cmp(&b.0));
        let mut out: Vec<(Monomial, C)> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            match out.last_mut() {
                Some((lm, lc)) if *lm == m => *lc = lc.add(&c),
                _ => out.push((m, c)),
            }
        }
        out.retain(|(_, c)| !c.is_zero());
        Poly { terms: out }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> &[(Monomial, C)] {
        &self.terms
    }

    pub fn degree(&self) -> u32 {
        self.terms.iter().map(|(m, _)| m.degree()).max().unwrap_or(0)
    }

    fn merge(&self, other: &Self, negate_other: bool) -> Self {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.terms, &other.terms);
        while i < a.len() || j < b.len() {
            let ord = match (a.get(i), b.get(j)) {
                (Some(x), Some(y)) => x.0.cmp(&y.0),
                (Some(_), None) => Ordering::Less,
                (None, _) => Ordering::Greater,
            };
            match ord {
                Ordering::Less => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Greater => {
                    let c = if negate_other { b[j].1.neg() } else { b[j].1.clone() };
                    out.push((b[j].0, c));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate_other { a[i].1.sub(&b[j].1) } else { a[i].1.add(&b[j].1) };
                    if !c.is_zero() {
                        out.push((a[i].0, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        Poly { terms: out }
    }

    pub fn add(&self, other: &Self) -> Self {
        self.merge(other, false)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.merge(other, true)
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        if other.terms.len() == 1 {
            return self.mul_term(other.terms[0].0, &other.terms[0].1);
        }
        if self.terms.len() == 1 {
            return other.mul_term(self.terms[0].0, &self.terms[0].1);
        }
        let mut prods = Vec::with_capacity(self.terms.len() * other.terms.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                prods.push((ma.mul(*mb), ca.mul(cb)));
            }
        }
        Self::from_terms(prods)
    }

    fn mul_term(&self, m: Monomial, c: &C) -> Self {
        Poly { terms: self.terms.iter().map(|(tm, tc)| (tm.mul(m), tc.mul(c))).collect() }
    }

    /// Exact quotient `self / d`, or `None` when `d` does not divide `self`.
    /// Division proceeds on lexicographic leading terms; if the leading term
    /// of `d` fails to divide the current remainder's, no exact quotient exists.
    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        let (lm, lc) = d.terms.last()?.clone();
        if d.terms.len() == 1 {
            let mut out = Vec::with_capacity(self.terms.len());
            for (m, c) in &self.terms {
                if !lm.divides(*m) {
                    return None;
                }
                out.push((m.div(lm), c.div_exact(&lc)?));
            }
            return Some(Poly { terms: out });
        }
        let mut rem = self.clone();
        let mut quot = Vec::new();
        while let Some((rm, rc)) = rem.terms.last().cloned() {
            if !lm.divides(rm) {
                return None;
            }
            let qm = rm.div(lm);
            let qc = rc.div_exact(&lc)?;
            rem = rem.sub(&d.mul_term(qm, &qc));
            quot.push((qm, qc));
        }
        Some(Self::from_terms(quot))
    }
}

/// An affine-linear form `c₀ + Σ cᵢ·xᵢ` over the rationals.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct LinearForm {
    pub constant: Rational,
    /// `(variable index, coefficient)` sorted by index, no zero coefficients.
    pub terms: Vec<(usize, Rational)>,
}

impl LinearForm {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn var(i: usize) -> Self {
        LinearForm { constant: Rational::zero(), terms: vec![(i, Rational::one())] }
    }

    pub fn from_terms(constant: Rational, terms: Vec<(usize, Rational)>) -> Self {
        let mut terms = terms;
        terms.sort_by_key(|t| t.0);
        let mut out: Vec<(usize, Rational)> = Vec::with_capacity(terms.len());
        for (i, c) in terms {
            match out.last_mut() {
                Some((li, lc)) if *li == i => *lc += &c,
                _ => out.push((i, c)),
            }
        }
        out.retain(|(_, c)| !c.is_zero());
        LinearForm { constant, terms: out }
    }

    pub fn is_zero(&self) -> bool {
        self.constant.is_zero() && self.terms.is_empty()
    }

    pub fn degree(&self) -> u32 {
        u32::from(!self.terms.is_empty())
    }

    pub fn max_var(&self) -> Option<usize> {
        self.terms.last().map(|t| t.0)
    }

    pub fn eval(&self, point: &[Rational]) -> Rational {
        let mut acc = self.constant.clone();
        for (i, c) in &self.terms {
            if !point[*i].is_zero() {
                acc += &(c * &point[*i]);
            }
        }
        acc
    }

    pub fn eval_int(&self, point: &[BigInt]) -> Rational {
        let mut acc = self.constant.clone();
        for (i, c) in &self.terms {
            acc += &(c * &Rational::from(point[*i].clone()));
        }
        acc
    }

    pub fn to_poly(&self) -> Poly<Rational> {
        let mut terms = vec![(Monomial::ONE, self.constant.clone())];
        terms.extend(self.terms.iter().map(|(i, c)| (Monomial::var(*i), c.clone())));
        Poly::from_terms(terms)
    }
}

/// Matrix with affine-linear polynomial entries in named indeterminates.
#[derive(Clone, Debug, PartialEq)]
pub struct PolyMatrix {
    rows: usize,
    cols: usize,
    vars: Vec<String>,
    entries: Vec<LinearForm>,
}

impl PolyMatrix {
    pub fn new(rows: usize, cols: usize, vars: Vec<String>, entries: Vec<LinearForm>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::Shape(format!("{} entries for a {rows}x{cols} poly matrix", entries.len())));
        }
        if let Some(bad) = entries.iter().filter_map(LinearForm::max_var).find(|&v| v >= vars.len()) {
            return Err(Error::Shape(format!("entry uses undeclared indeterminate #{bad}")));
        }
        Ok(PolyMatrix { rows, cols, vars, entries })
    }

    /// Indeterminates named `x0, x1, …`.
    pub fn with_anonymous_vars(rows: usize, cols: usize, nvars: usize, entries: Vec<LinearForm>) -> Result<Self> {
        Self::new(rows, cols, (0..nvars).map(|i| format!("x{i}")).collect(), entries)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn get(&self, i: usize, j: usize) -> &LinearForm {
        &self.entries[i * self.cols + j]
    }

    pub fn max_degree(&self) -> u32 {
        self.entries.iter().map(LinearForm::degree).max().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(LinearForm::is_zero)
    }

    /// `min(#nonzero rows, #nonzero cols)`: no specialization can exceed it.
    pub fn structural_rank_bound(&self) -> usize {
        let nz_rows = (0..self.rows).filter(|&i| (0..self.cols).any(|j| !self.get(i, j).is_zero())).count();
        let nz_cols = (0..self.cols).filter(|&j| (0..self.rows).any(|i| !self.get(i, j).is_zero())).count();
        nz_rows.min(nz_cols)
    }

    /// Integer matrix obtained by substituting an integer point; rows are
    /// rescaled to clear denominators, which preserves rank.
    pub fn eval_integer(&self, point: &[BigInt]) -> Vec<Vec<BigInt>> {
        (0..self.rows)
            .map(|i| {
                let vals: Vec<Rational> = (0..self.cols).map(|j| self.get(i, j).eval_int(point)).collect();
                let l = vals.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
                vals.iter().map(|x| x.numer() * (&l / x.denom())).collect()
            })
            .collect()
    }

    /// Entries as integer-coefficient polynomials, each row scaled by the lcm
    /// of its coefficient denominators.
    pub(crate) fn integer_polys(&self) -> Vec<Vec<Poly<BigInt>>> {
        (0..self.rows)
            .map(|i| {
                let row: Vec<&LinearForm> = (0..self.cols).map(|j| self.get(i, j)).collect();
                let mut l = BigInt::one();
                for f in &row {
                    l = l.lcm(f.constant.denom());
                    for (_, c) in &f.terms {
                        l = l.lcm(c.denom());
                    }
                }
                let to_int = |c: &Rational| c.numer() * (&l / c.denom());
                row.iter()
                    .map(|f| {
                        let mut terms = vec![(Monomial::ONE, to_int(&f.constant))];
                        terms.extend(f.terms.iter().map(|(v, c)| (Monomial::var(*v), to_int(c))));
                        Poly::from_terms(terms)
                    })
                    .collect()
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(n: i64) -> BigInt {
        BigInt::from(n)
    }

    fn x(i: usize) -> Poly<BigInt> {
        Poly::term(Monomial::var(i), z(1))
    }

    #[test]
    fn monomial_order_is_lex() {
        assert!(Monomial::var(0) > Monomial::var(1));
        assert!(Monomial::var(1).mul(Monomial::var(1)) < Monomial::var(0));
        assert_eq!(Monomial::var(3).mul(Monomial::var(3)).exponent(3), 2);
        assert_eq!(Monomial::var(2).mul(Monomial::var(5)).degree(), 2);
    }

    #[test]
    fn exact_division() {
        // (x0 + x1)(x0 - x1) / (x0 - x1)
        let a = x(0).add(&x(1));
        let b = x(0).sub(&x(1));
        let p = a.mul(&b);
        assert_eq!(p.div_exact(&b), Some(a.clone()));
        assert_eq!(p.div_exact(&a), Some(b));
        assert_eq!(x(0).div_exact(&x(1)), None);
        let c3 = Poly::constant(z(3));
        assert_eq!(p.mul(&c3).div_exact(&c3), Some(p.clone()));
        assert_eq!(p.div_exact(&Poly::constant(z(2))), None);
    }

    #[test]
    fn linear_form_eval() {
        let f = LinearForm::from_terms(Rational::from(1), vec![(0, Rational::from(2)), (1, Rational::new(1, 2)), (0, Rational::from(1))]);
        assert_eq!(f.terms.len(), 2);
        assert_eq!(f.eval(&[Rational::from(1), Rational::from(4)]), Rational::from(6));
    }
}
