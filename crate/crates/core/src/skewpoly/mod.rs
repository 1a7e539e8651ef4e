//! Words, monomial orders and left-coefficient skew polynomials.

mod text;
mod word;

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use crate::ring::{DivisionRing, Twist};
use crate::{Error, Result};

pub use word::{MonomialOrder, Word};

/// Degree of a polynomial; the zero polynomial has degree [`Degree::NegInf`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Degree {
    NegInf,
    Finite(usize),
}

impl Degree {
    pub fn finite(self) -> Option<usize> {
        match self {
            Degree::NegInf => None,
            Degree::Finite(d) => Some(d),
        }
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Degree::NegInf => f.write_str("-inf"),
            Degree::Finite(d) => write!(f, "{d}"),
        }
    }
}

/// Coefficient map keyed by words, without zero entries.
pub type Terms<E> = BTreeMap<Word, E>;

/// `F = Σ F_m m` with coefficients on the left of the words.
pub struct SkewPoly<R: DivisionRing> {
    twist: Twist<R>,
    terms: Terms<R::Elem>,
}

impl<R: DivisionRing> Clone for SkewPoly<R> {
    fn clone(&self) -> Self {
        SkewPoly {
            twist: self.twist.clone(),
            terms: self.terms.clone(),
        }
    }
}

impl<R: DivisionRing> fmt::Debug for SkewPoly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SkewPoly({self})")
    }
}

impl<R: DivisionRing> PartialEq for SkewPoly<R> {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.twist, &other.twist) && self.terms == other.terms
    }
}

impl<R: DivisionRing> Eq for SkewPoly<R> {}

pub(crate) fn add_into<R: DivisionRing>(r: &R, terms: &mut Terms<R::Elem>, w: Word, c: R::Elem) {
    if r.is_zero(&c) {
        return;
    }
    match terms.entry(w) {
        std::collections::btree_map::Entry::Vacant(e) => {
            e.insert(c);
        }
        std::collections::btree_map::Entry::Occupied(mut e) => {
            let s = r.add(e.get(), &c);
            if r.is_zero(&s) {
                e.remove();
            } else {
                *e.get_mut() = s;
            }
        }
    }
}

/// Rewrites `w · c` in left-coefficient form by pushing `c` leftwards with
/// `x_i c = Σ_j σ_ij(c) x_j + δ_i(c)`.
pub(crate) fn word_times_scalar<R: DivisionRing>(tw: &Twist<R>, w: &[usize], c: &R::Elem) -> Terms<R::Elem> {
    let r = tw.ring();
    let mut states: Terms<R::Elem> = Terms::new();
    add_into(r, &mut states, Word::empty(), c.clone());
    for &i in w.iter().rev() {
        let mut next = Terms::new();
        for (tail, c) in states {
            let (row, d) = tw.commute(i, &c);
            for (j, s) in row {
                add_into(r, &mut next, tail.prepend(j), s);
            }
            add_into(r, &mut next, tail, d);
        }
        states = next;
    }
    states
}

/// Rewrites `c · w` in right-coefficient form by pushing `c` rightwards with
/// `λ x_i = Σ_j x_j σ̃_ji(λ) + δ̃_i(λ)`.
pub(crate) fn scalar_times_word<R: DivisionRing>(tw: &Twist<R>, c: &R::Elem, w: &[usize]) -> Result<Terms<R::Elem>> {
    let r = tw.ring();
    let mut states: Terms<R::Elem> = Terms::new();
    add_into(r, &mut states, Word::empty(), c.clone());
    for &i in w {
        let mut next = Terms::new();
        for (head, c) in states {
            let (col, d) = tw.tilde_column(i, &c)?;
            for (j, s) in col {
                add_into(r, &mut next, head.append(j), s);
            }
            add_into(r, &mut next, head, d);
        }
        states = next;
    }
    Ok(states)
}

impl<R: DivisionRing> SkewPoly<R> {
    pub fn zero(twist: &Twist<R>) -> Self {
        SkewPoly {
            twist: twist.clone(),
            terms: Terms::new(),
        }
    }

    pub fn one(twist: &Twist<R>) -> Self {
        Self::constant(twist, twist.ring().one())
    }

    pub fn constant(twist: &Twist<R>, c: R::Elem) -> Self {
        Self::monomial(twist, Word::empty(), c)
    }

    /// `c · w`.
    pub fn monomial(twist: &Twist<R>, w: Word, c: R::Elem) -> Self {
        let mut p = Self::zero(twist);
        assert!(
            w.max_letter().is_none_or(|l| l < twist.n()),
            "variable index out of range"
        );
        add_into(twist.ring(), &mut p.terms, w, c);
        p
    }

    /// The variable `x_{i+1}` (0-based index `i`).
    pub fn var(twist: &Twist<R>, i: usize) -> Self {
        Self::monomial(twist, Word::letter(i), twist.ring().one())
    }

    /// `Σ c_w w` with left coefficients; repeated words are summed.
    pub fn from_terms(twist: &Twist<R>, terms: impl IntoIterator<Item = (Word, R::Elem)>) -> Self {
        let mut p = Self::zero(twist);
        for (w, c) in terms {
            assert!(
                w.max_letter().is_none_or(|l| l < twist.n()),
                "variable index out of range"
            );
            add_into(twist.ring(), &mut p.terms, w, c);
        }
        p
    }

    /// `Σ w c_w` from right coefficients.
    pub fn from_right_coefficients(twist: &Twist<R>, terms: &Terms<R::Elem>) -> Self {
        let r = twist.ring();
        let mut p = Self::zero(twist);
        for (w, c) in terms {
            for (v, d) in word_times_scalar(twist, &w.0, c) {
                add_into(r, &mut p.terms, v, d);
            }
        }
        p
    }

    /// `x_{i1} − a` (0-based `i`).
    pub fn linear(twist: &Twist<R>, i: usize, a: &R::Elem) -> Self {
        let r = twist.ring();
        Self::from_terms(twist, [(Word::letter(i), r.one()), (Word::empty(), r.neg(a))])
    }

    pub fn twist(&self) -> &Twist<R> {
        &self.twist
    }

    pub fn ring(&self) -> &R {
        self.twist.ring()
    }

    pub fn terms(&self) -> &Terms<R::Elem> {
        &self.terms
    }

    pub fn into_terms(self) -> Terms<R::Elem> {
        self.terms
    }

    pub fn coeff(&self, w: &Word) -> R::Elem {
        self.terms.get(w).cloned().unwrap_or_else(|| self.ring().zero())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn degree(&self) -> Degree {
        self.terms
            .keys()
            .map(Word::deg)
            .max()
            .map_or(Degree::NegInf, Degree::Finite)
    }

    pub fn same_ring(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.twist, &other.twist)
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.same_ring(other) {
            Ok(())
        } else {
            Err(Error::TwistMismatch)
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut out = self.clone();
        for (w, c) in &other.terms {
            add_into(self.ring(), &mut out.terms, w.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.checked_add(&-other)
    }

    /// The ring product, appending words and rewriting each
    /// `x_i c` with the commutation rule.
    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let r = self.ring();
        let mut out = Self::zero(&self.twist);
        for (u, a) in &self.terms {
            for (w, b) in &other.terms {
                for (v, d) in word_times_scalar(&self.twist, &u.0, b) {
                    add_into(r, &mut out.terms, v.concat(w), r.mul(a, &d));
                }
            }
        }
        Ok(out)
    }

    /// `λ F`: every left coefficient is multiplied by `λ` on the left.
    pub fn scalar_left_mul(&self, lambda: &R::Elem) -> Self {
        let r = self.ring();
        let mut out = Self::zero(&self.twist);
        for (w, c) in &self.terms {
            add_into(r, &mut out.terms, w.clone(), r.mul(lambda, c));
        }
        out
    }

    /// `F λ`, the ring product with a constant.
    pub fn scalar_right_mul(&self, lambda: &R::Elem) -> Self {
        let r = self.ring();
        let mut out = Self::zero(&self.twist);
        for (u, a) in &self.terms {
            for (v, d) in word_times_scalar(&self.twist, &u.0, lambda) {
                add_into(r, &mut out.terms, v, r.mul(a, &d));
            }
        }
        out
    }

    /// The `order`-largest word and its coefficient.
    pub fn leading_term(&self, order: MonomialOrder) -> Result<(Word, R::Elem)> {
        self.terms
            .iter()
            .max_by(|a, b| order.cmp(a.0, b.0))
            .map(|(w, c)| (w.clone(), c.clone()))
            .ok_or(Error::ZeroPolynomial)
    }

    pub fn leading_monomial(&self, order: MonomialOrder) -> Result<Word> {
        Ok(self.leading_term(order)?.0)
    }

    /// Coefficients `F'_m` with `F = Σ m F'_m`.
    pub fn to_right_coefficients(&self) -> Result<Terms<R::Elem>> {
        let r = self.ring();
        let mut out = Terms::new();
        for (w, c) in &self.terms {
            for (v, d) in scalar_times_word(&self.twist, c, &w.0)? {
                add_into(r, &mut out, v, d);
            }
        }
        Ok(out)
    }

    /// The homogeneous part of degree `d`.
    pub fn homogeneous_part(&self, d: usize) -> Self {
        SkewPoly {
            twist: self.twist.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(w, _)| w.deg() == d)
                .map(|(w, c)| (w.clone(), c.clone()))
                .collect(),
        }
    }

    /// Terms sorted descending in `order`.
    pub fn sorted_terms(&self, order: MonomialOrder) -> Vec<(&Word, &R::Elem)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| order.cmp(b.0, a.0));
        v
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(&self.twist), |acc, _| &acc * self)
    }

    pub fn cmp_degree(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree())
    }
}

impl<R: DivisionRing> Add for &SkewPoly<R> {
    type Output = SkewPoly<R>;

    fn add(self, rhs: &SkewPoly<R>) -> SkewPoly<R> {
        self.checked_add(rhs).expect("polynomials over different rings")
    }
}

impl<R: DivisionRing> Sub for &SkewPoly<R> {
    type Output = SkewPoly<R>;

    fn sub(self, rhs: &SkewPoly<R>) -> SkewPoly<R> {
        self.checked_sub(rhs).expect("polynomials over different rings")
    }
}

impl<R: DivisionRing> Mul for &SkewPoly<R> {
    type Output = SkewPoly<R>;

    fn mul(self, rhs: &SkewPoly<R>) -> SkewPoly<R> {
        self.checked_mul(rhs).expect("polynomials over different rings")
    }
}

impl<R: DivisionRing> Neg for &SkewPoly<R> {
    type Output = SkewPoly<R>;

    fn neg(self) -> SkewPoly<R> {
        let r = self.ring();
        SkewPoly {
            twist: self.twist.clone(),
            terms: self.terms.iter().map(|(w, c)| (w.clone(), r.neg(c))).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl<R: DivisionRing> $tr for SkewPoly<R> {
            type Output = SkewPoly<R>;

            fn $m(self, rhs: SkewPoly<R>) -> SkewPoly<R> {
                (&self).$m(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl<R: DivisionRing> Neg for SkewPoly<R> {
    type Output = SkewPoly<R>;

    fn neg(self) -> SkewPoly<R> {
        -&self
    }
}
