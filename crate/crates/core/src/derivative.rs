//! Right and left `(σ,δ)`-partial derivatives, their chains, and Taylor
//! expansion.

use std::collections::BTreeMap;

use crate::evaldiv::{divide, eval};
use crate::ring::{DivisionRing, Twist};
use crate::skewpoly::{SkewPoly, Word};
use crate::{Result, Side};

/// `Δ^{x_i}_a F`, the `i`-th quotient of dividing `F` by `{x_j − a_j}` on
/// `side` (0-based `i`).
pub fn partial<R: DivisionRing>(f: &SkewPoly<R>, a: &[R::Elem], i: usize, side: Side) -> Result<SkewPoly<R>> {
    assert!(i < f.twist().n(), "variable index out of range");
    Ok(divide(f, a, side)?.quotients.swap_remove(i))
}

pub fn partial_right<R: DivisionRing>(f: &SkewPoly<R>, a: &[R::Elem], i: usize) -> SkewPoly<R> {
    partial(f, a, i, Side::Right).expect("right division is always defined")
}

pub fn partial_left<R: DivisionRing>(f: &SkewPoly<R>, a: &[R::Elem], i: usize) -> Result<SkewPoly<R>> {
    partial(f, a, i, Side::Left)
}

/// Letters of `m` in the order the single partials are applied: for
/// `m = x_{i1} ⋯ x_{is}` the right chain applies `x_{is}` first, the left
/// chain applies `x_{i1}` first.
fn application_order(m: &Word, side: Side) -> Vec<usize> {
    match side {
        Side::Right => m.0.iter().rev().copied().collect(),
        Side::Left => m.0.clone(),
    }
}

/// The chain derivative `Δ^m_a F` (or `Δ^m_{a,L} F`) and its value at `a`
/// on the same side.
pub fn partial_chain<R: DivisionRing>(
    f: &SkewPoly<R>,
    a: &[R::Elem],
    m: &Word,
    side: Side,
) -> Result<(SkewPoly<R>, R::Elem)> {
    let mut p = f.clone();
    for i in application_order(m, side) {
        p = partial(&p, a, i, side)?;
    }
    let v = eval(&p, a, side)?;
    Ok((p, v))
}

/// Values of the derivatives along the constraint chain of `m`: the
/// suffixes `o, x_{j1}, x_{j2}x_{j1}, …, m` of `m = x_{js} ⋯ x_{j1}` on the
/// right, the prefixes `o, x_{js}, x_{js}x_{j(s−1)}, …, m` on the left.
pub fn chain_values<R: DivisionRing>(f: &SkewPoly<R>, a: &[R::Elem], m: &Word, side: Side) -> Result<Vec<R::Elem>> {
    let mut p = f.clone();
    let mut out = Vec::with_capacity(m.deg() + 1);
    for i in application_order(m, side) {
        let mut div = divide(&p, a, side)?;
        out.push(div.remainder);
        p = div.quotients.swap_remove(i);
    }
    out.push(eval(&p, a, side)?);
    Ok(out)
}

/// The words `o, …, m` of the constraint chain of `m` on `side`.
pub fn chain_words(m: &Word, side: Side) -> Vec<Word> {
    (0..=m.deg())
        .map(|k| match side {
            Side::Right => m.suffix(k),
            Side::Left => m.prefix(k),
        })
        .collect()
}

/// All derivative values `Δ^w F(a)` (right) or `(Δ^w_L F)_L(a)` (left) for
/// words `w` with `deg w ≤ deg F`.
#[derive(Clone, Debug)]
pub struct TaylorTable<R: DivisionRing> {
    pub twist: Twist<R>,
    pub center: Vec<R::Elem>,
    pub side: Side,
    pub entries: BTreeMap<Word, R::Elem>,
}

pub fn taylor<R: DivisionRing>(f: &SkewPoly<R>, a: &[R::Elem], side: Side) -> Result<TaylorTable<R>> {
    let depth = f.degree().finite().unwrap_or(0);
    let mut entries = BTreeMap::new();
    fill(f, a, side, Word::empty(), depth, &mut entries)?;
    Ok(TaylorTable {
        twist: f.twist().clone(),
        center: a.to_vec(),
        side,
        entries,
    })
}

fn fill<R: DivisionRing>(
    p: &SkewPoly<R>,
    a: &[R::Elem],
    side: Side,
    w: Word,
    depth: usize,
    entries: &mut BTreeMap<Word, R::Elem>,
) -> Result<()> {
    if p.is_zero() {
        for k in 0..=depth - w.deg() {
            for ext in Word::all_of_degree(p.twist().n(), k) {
                let word = match side {
                    Side::Right => ext.concat(&w),
                    Side::Left => w.concat(&ext),
                };
                entries.insert(word, p.ring().zero());
            }
        }
        return Ok(());
    }
    let div = divide(p, a, side)?;
    let at_leaf = w.deg() == depth;
    entries.insert(w.clone(), div.remainder);
    if at_leaf {
        return Ok(());
    }
    for (i, q) in div.quotients.iter().enumerate() {
        let next = match side {
            Side::Right => w.prepend(i),
            Side::Left => w.append(i),
        };
        fill(q, a, side, next, depth, entries)?;
    }
    Ok(())
}

/// Rebuilds `F` from its Taylor table: on the right
/// `F = Σ_w Δ^w F(a) (x_{w1} − a_{w1}) ⋯ (x_{wk} − a_{wk})`, on the left
/// `F = Σ_w (x_{w1} − a_{w1}) ⋯ (x_{wk} − a_{wk}) (Δ^w_L F)_L(a)`.
pub fn taylor_reconstruct<R: DivisionRing>(table: &TaylorTable<R>) -> SkewPoly<R> {
    let tw = &table.twist;
    let r = tw.ring();
    let mut products: BTreeMap<Word, SkewPoly<R>> = BTreeMap::new();
    products.insert(Word::empty(), SkewPoly::one(tw));
    let mut out = SkewPoly::zero(tw);
    for (w, c) in &table.entries {
        if r.is_zero(c) {
            continue;
        }
        let basis = linear_product(tw, &table.center, w, &mut products);
        let term = match table.side {
            Side::Right => basis.scalar_left_mul(c),
            Side::Left => basis.scalar_right_mul(c),
        };
        out = &out + &term;
    }
    out
}

fn linear_product<R: DivisionRing>(
    tw: &Twist<R>,
    a: &[R::Elem],
    w: &Word,
    cache: &mut BTreeMap<Word, SkewPoly<R>>,
) -> SkewPoly<R> {
    if let Some(p) = cache.get(w) {
        return p.clone();
    }
    let (&last, head) = w.0.split_last().expect("empty word is cached");
    let head = linear_product(tw, a, &Word(head.to_vec()), cache);
    let p = &head * &SkewPoly::linear(tw, last, &a[last]);
    cache.insert(w.clone(), p.clone());
    p
}
