//! Division by `{x_i − a_i}` on either side, evaluation, the fundamental
//! functions `N_m`, `M_m` and `(σ,δ)`-conjugation of points.

use std::collections::HashMap;

use crate::ring::{DivisionRing, Twist};
use crate::skewpoly::{add_into, scalar_times_word, word_times_scalar, SkewPoly, Terms, Word};
use crate::{Error, Result, Side};

/// Quotients and remainder of a division by `{x_i − a_i}`.
///
/// Right: `F = Σ G_i (x_i − a_i) + b`. Left: `F = Σ (x_i − a_i) G_i + b`.
#[derive(Clone, Debug)]
pub struct DivisionResult<R: DivisionRing> {
    pub quotients: Vec<SkewPoly<R>>,
    pub remainder: R::Elem,
    pub side: Side,
}

impl<R: DivisionRing> DivisionResult<R> {
    /// Recomposes the dividend from quotients, divisors and remainder.
    pub fn reassemble(&self, a: &[R::Elem]) -> SkewPoly<R> {
        let twist = self.quotients[0].twist();
        let mut out = SkewPoly::constant(twist, self.remainder.clone());
        for (i, g) in self.quotients.iter().enumerate() {
            let lin = SkewPoly::linear(twist, i, &a[i]);
            let prod = match self.side {
                Side::Right => g * &lin,
                Side::Left => &lin * g,
            };
            out = &out + &prod;
        }
        out
    }
}

fn check_point<R: DivisionRing>(tw: &Twist<R>, a: &[R::Elem]) {
    assert_eq!(
        a.len(),
        tw.n(),
        "point has {} coordinates, ring has {} variables",
        a.len(),
        tw.n()
    );
}

fn buckets<E: Clone>(terms: &Terms<E>) -> Vec<Terms<E>> {
    let top = terms.keys().map(Word::deg).max().unwrap_or(0);
    let mut b = vec![Terms::new(); top + 1];
    for (w, c) in terms {
        b[w.deg()].insert(w.clone(), c.clone());
    }
    b
}

/// Right division: repeatedly peels the last letter `x_j` of `w x_j`,
/// moves the term into `G_j` and reinserts `w a_j` rewritten in
/// left-coefficient form.
pub fn right_divide<R: DivisionRing>(f: &SkewPoly<R>, a: &[R::Elem]) -> DivisionResult<R> {
    let tw = f.twist();
    check_point(tw, a);
    let r = tw.ring();
    let mut work = buckets(f.terms());
    let mut quot = vec![Terms::new(); tw.n()];
    for d in (1..work.len()).rev() {
        for (w, c) in std::mem::take(&mut work[d]) {
            let (&j, head) = w.0.split_last().expect("positive degree");
            add_into(r, &mut quot[j], Word(head.to_vec()), c.clone());
            for (v, e) in word_times_scalar(tw, head, &a[j]) {
                let deg = v.deg();
                add_into(r, &mut work[deg], v, r.mul(&c, &e));
            }
        }
    }
    let remainder = work[0].remove(&Word::empty()).unwrap_or_else(|| r.zero());
    DivisionResult {
        quotients: quot.into_iter().map(|t| SkewPoly::from_terms(tw, t)).collect(),
        remainder,
        side: Side::Right,
    }
}

/// Left division: converts to right coefficients, peels the first letter
/// and pushes `a_i` rightwards through the rest of the word.
pub fn left_divide<R: DivisionRing>(f: &SkewPoly<R>, a: &[R::Elem]) -> Result<DivisionResult<R>> {
    let tw = f.twist();
    check_point(tw, a);
    let r = tw.ring();
    let mut work = buckets(&f.to_right_coefficients()?);
    let mut quot = vec![Terms::new(); tw.n()];
    for d in (1..work.len()).rev() {
        for (w, c) in std::mem::take(&mut work[d]) {
            let (&i, tail) = w.0.split_first().expect("positive degree");
            add_into(r, &mut quot[i], Word(tail.to_vec()), c.clone());
            for (v, e) in scalar_times_word(tw, &a[i], tail)? {
                let deg = v.deg();
                add_into(r, &mut work[deg], v, r.mul(&e, &c));
            }
        }
    }
    let remainder = work[0].remove(&Word::empty()).unwrap_or_else(|| r.zero());
    Ok(DivisionResult {
        quotients: quot.iter().map(|t| SkewPoly::from_right_coefficients(tw, t)).collect(),
        remainder,
        side: Side::Left,
    })
}

pub fn divide<R: DivisionRing>(f: &SkewPoly<R>, a: &[R::Elem], side: Side) -> Result<DivisionResult<R>> {
    match side {
        Side::Right => Ok(right_divide(f, a)),
        Side::Left => left_divide(f, a),
    }
}

/// `N_m(a)`: `N_o = 1`, `N_{x_i m}(a) = Σ_j σ_ij(N_m(a)) a_j + δ_i(N_m(a))`.
pub fn fundamental_n<R: DivisionRing>(tw: &Twist<R>, m: &Word, a: &[R::Elem]) -> R::Elem {
    check_point(tw, a);
    let r = tw.ring();
    m.0.iter().rev().fold(r.one(), |val, &i| n_step(tw, i, &val, a))
}

fn n_step<R: DivisionRing>(tw: &Twist<R>, i: usize, val: &R::Elem, a: &[R::Elem]) -> R::Elem {
    let r = tw.ring();
    let (row, d) = tw.commute(i, val);
    row.iter().fold(d, |acc, (j, s)| r.add(&acc, &r.mul(s, &a[*j])))
}

/// `M_m(a)`: `M_o = 1`, `M_{m x_i}(a) = Σ_j a_j σ̃_ji(M_m(a)) + δ̃_i(M_m(a))`.
pub fn fundamental_m<R: DivisionRing>(tw: &Twist<R>, m: &Word, a: &[R::Elem]) -> Result<R::Elem> {
    check_point(tw, a);
    let r = tw.ring();
    m.0.iter().try_fold(r.one(), |val, &i| m_step(tw, i, &val, a))
}

fn m_step<R: DivisionRing>(tw: &Twist<R>, i: usize, val: &R::Elem, a: &[R::Elem]) -> Result<R::Elem> {
    let r = tw.ring();
    let (col, d) = tw.tilde_column(i, val)?;
    Ok(col.iter().fold(d, |acc, (j, s)| r.add(&acc, &r.mul(&a[*j], s))))
}

/// `F(a) = Σ F_m N_m(a)`, sharing the `N` values of common suffixes.
pub fn right_eval<R: DivisionRing>(f: &SkewPoly<R>, a: &[R::Elem]) -> R::Elem {
    let tw = f.twist();
    check_point(tw, a);
    let r = tw.ring();
    let mut cache: HashMap<&[usize], R::Elem> = HashMap::new();
    let mut total = r.zero();
    for (w, c) in f.terms() {
        let letters = w.letters();
        let (start, mut val) = (0..letters.len())
            .find_map(|k| cache.get(&letters[k..]).map(|v| (k, v.clone())))
            .unwrap_or((letters.len(), r.one()));
        for k in (0..start).rev() {
            val = n_step(tw, letters[k], &val, a);
            cache.insert(&letters[k..], val.clone());
        }
        total = r.add(&total, &r.mul(c, &val));
    }
    total
}

/// `F_L(a) = Σ M_m(a) F'_m` over the right coefficients of `F`.
pub fn left_eval<R: DivisionRing>(f: &SkewPoly<R>, a: &[R::Elem]) -> Result<R::Elem> {
    let tw = f.twist();
    check_point(tw, a);
    let r = tw.ring();
    let mut cache: HashMap<Vec<usize>, R::Elem> = HashMap::new();
    let mut total = r.zero();
    for (w, c) in f.to_right_coefficients()? {
        let letters = w.letters();
        let mut val = r.one();
        for k in 0..letters.len() {
            if let Some(v) = cache.get(&letters[..=k]) {
                val = v.clone();
                continue;
            }
            val = m_step(tw, letters[k], &val, a)?;
            cache.insert(letters[..=k].to_vec(), val.clone());
        }
        total = r.add(&total, &r.mul(&val, &c));
    }
    Ok(total)
}

pub fn eval<R: DivisionRing>(f: &SkewPoly<R>, a: &[R::Elem], side: Side) -> Result<R::Elem> {
    match side {
        Side::Right => Ok(right_eval(f, a)),
        Side::Left => left_eval(f, a),
    }
}

/// `a^c = σ(c)ᵗa c⁻¹ + δ(c) c⁻¹`.
pub fn conjugate_right<R: DivisionRing>(tw: &Twist<R>, a: &[R::Elem], c: &R::Elem) -> Result<Vec<R::Elem>> {
    check_point(tw, a);
    let r = tw.ring();
    let c_inv = r.inv(c).ok_or(Error::ZeroConjugator)?;
    Ok((0..tw.n()).map(|i| r.mul(&n_step(tw, i, c, a), &c_inv)).collect())
}

/// `ᶜa = c⁻¹ a σ̃(c) + c⁻¹ δ̃(c)`.
pub fn conjugate_left<R: DivisionRing>(tw: &Twist<R>, a: &[R::Elem], c: &R::Elem) -> Result<Vec<R::Elem>> {
    check_point(tw, a);
    let r = tw.ring();
    let c_inv = r.inv(c).ok_or(Error::ZeroConjugator)?;
    (0..tw.n()).map(|i| Ok(r.mul(&c_inv, &m_step(tw, i, c, a)?))).collect()
}

pub fn conjugate<R: DivisionRing>(tw: &Twist<R>, a: &[R::Elem], c: &R::Elem, side: Side) -> Result<Vec<R::Elem>> {
    match side {
        Side::Right => conjugate_right(tw, a, c),
        Side::Left => conjugate_left(tw, a, c),
    }
}
