use super::ConstraintSpec;
use crate::derivative::partial_chain;
use crate::evaldiv::conjugate;
use crate::ring::DivisionRing;
use crate::skewpoly::{MonomialOrder, SkewPoly, Word};
use crate::{Error, Result, Side};

/// Walks the constraints in order and, at each one, multiplies the current
/// polynomial by a linear factor in the next variable. The factor is
/// `x_l − (conjugated point)_l` when the constraint is not yet met and `x_l`
/// otherwise (or nothing, when `skip_satisfied`). Factors go on the left
/// for the right side and on the right for the left side.
fn build<R: DivisionRing>(
    spec: &ConstraintSpec<R>,
    mut letter: impl FnMut() -> usize,
    skip_satisfied: bool,
) -> Result<SkewPoly<R>> {
    let tw = spec.twist();
    let r = tw.ring();
    let side = spec.side();
    let mut g = SkewPoly::one(tw);
    for (j, a) in spec.points().iter().enumerate() {
        for w in spec.chain_words(j) {
            let (_, v) = partial_chain(&g, a, &w, side)?;
            let factor = if r.is_zero(&v) {
                if skip_satisfied {
                    continue;
                }
                SkewPoly::var(tw, letter())
            } else {
                let l = letter();
                let b = conjugate(tw, a, &v, side)?;
                SkewPoly::linear(tw, l, &b[l])
            };
            g = match side {
                Side::Right => &factor * &g,
                Side::Left => &g * &factor,
            };
        }
    }
    Ok(g)
}

/// A monic element of the constraint ideal of degree `N` whose leading
/// monomial is `target` (under `≺` on the right, `≺_L` on the left).
///
/// On the right the letters of `target` are used from its right end, since
/// each new factor is multiplied on the left; on the left they are used
/// from the left end.
pub fn algorithm1<R: DivisionRing>(spec: &ConstraintSpec<R>, target: &Word) -> Result<SkewPoly<R>> {
    if target.deg() != spec.total() {
        return Err(Error::BadLeadingMonomial {
            word: target.to_string(),
            got: target.deg(),
            expected: spec.total(),
        });
    }
    if target.max_letter().is_some_and(|l| l >= spec.twist().n()) {
        return Err(Error::InvalidSpec(format!("target {target} uses an unknown variable")));
    }
    let letters: Vec<usize> = match spec.side() {
        Side::Right => target.0.iter().rev().copied().collect(),
        Side::Left => target.0.clone(),
    };
    let mut it = letters.into_iter();
    let f = build(spec, || it.next().expect("one letter per constraint"), false)?;
    debug_assert_eq!(
        f.leading_monomial(MonomialOrder::for_side(spec.side())).ok().as_ref(),
        Some(target)
    );
    Ok(f)
}

/// An element of the constraint ideal of degree `≤ N` built from linear
/// factors in the single variable `x_{t+1}` (0-based `t`), skipping
/// constraints that already hold.
pub fn algorithm2<R: DivisionRing>(spec: &ConstraintSpec<R>, t: usize) -> Result<SkewPoly<R>> {
    if t >= spec.twist().n() {
        return Err(Error::InvalidSpec(format!("variable index {} out of range", t + 1)));
    }
    build(spec, || t, true)
}
