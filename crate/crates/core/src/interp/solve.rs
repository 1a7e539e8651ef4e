use super::algorithms::{algorithm1, algorithm2};
use super::vandermonde::{build_vandermonde, combine, ideal_basis, is_dp_independent};
use super::{ConstraintSpec, InterpProblem};
use crate::dlinalg;
use crate::ring::{DivisionRing, Twist};
use crate::skewpoly::{MonomialOrder, SkewPoly, Word};
use crate::{Error, Result, Side};

/// Solves the Hermite-type problem through the confluent Vandermonde system
/// of order `N`, returning a polynomial of degree `< N`.
///
/// The result is always checked against every constraint. When the points
/// are DP-independent the dual-basis construction is run as well and
/// checked; for one variable both must agree, the interpolant being unique.
pub fn hermite_interpolate<R: DivisionRing>(problem: &InterpProblem<R>) -> Result<SkewPoly<R>> {
    let spec = &problem.spec;
    let f = vandermonde_solve(problem)?;
    if !problem.is_satisfied_by(&f)? {
        return Err(Error::Verification("Vandermonde solution misses a target".into()));
    }
    if spec.k() > 0 && is_dp_independent(spec)? {
        let g = hermite_dual_basis(problem)?;
        if spec.twist().n() == 1 && g != f {
            return Err(Error::Verification(format!(
                "univariate interpolants differ: {f} vs {g}"
            )));
        }
    }
    Ok(f)
}

fn vandermonde_solve<R: DivisionRing>(problem: &InterpProblem<R>) -> Result<SkewPoly<R>> {
    let spec = &problem.spec;
    let r = spec.twist().ring();
    let v = build_vandermonde(spec, spec.total())?;
    let b = problem.flat_targets();
    let sol = match spec.side() {
        Side::Right => dlinalg::solve_row_system(r, &v.matrix, &b),
        Side::Left => dlinalg::solve_col_system(r, &v.matrix, &b),
    };
    let z = sol.particular.ok_or(Error::Infeasible)?;
    Ok(v.combine(spec, &z))
}

/// Solves the Hermite-type problem by building, for every constraint, a
/// polynomial whose constraint vector is the matching unit vector, then
/// combining them with the targets. Needs DP-independent points; otherwise
/// fails with [`Error::Infeasible`].
pub fn hermite_dual_basis<R: DivisionRing>(problem: &InterpProblem<R>) -> Result<SkewPoly<R>> {
    let spec = &problem.spec;
    let tw = spec.twist();
    let r = tw.ring();
    let side = spec.side();
    let positions = spec.positions();

    // Triangular family: H_p vanishes on every earlier constraint and has
    // value 1 at constraint p.
    let mut family: Vec<(SkewPoly<R>, Vec<R::Elem>)> = Vec::with_capacity(positions.len());
    for (p, &(j, i)) in positions.iter().enumerate() {
        let sub = spec.truncated(j, i);
        let (h, values) = first_separating(spec, &sub, p)?.ok_or(Error::Infeasible)?;
        let inv = r.inv(&values[p]).expect("separating value is nonzero");
        let (h, values) = match side {
            Side::Right => (h.scalar_left_mul(&inv), values.iter().map(|v| r.mul(&inv, v)).collect()),
            Side::Left => (
                h.scalar_right_mul(&inv),
                values.iter().map(|v| r.mul(v, &inv)).collect(),
            ),
        };
        family.push((h, values));
    }

    let count = family.len();
    let mut dual: Vec<Option<SkewPoly<R>>> = vec![None; count];
    for p in (0..count).rev() {
        let (h, values) = &family[p];
        let mut g = h.clone();
        for (q, dq) in dual.iter().enumerate().skip(p + 1) {
            let c = &values[q];
            if r.is_zero(c) {
                continue;
            }
            let dq = dq.as_ref().expect("later duals are built first");
            let term = match side {
                Side::Right => dq.scalar_left_mul(c),
                Side::Left => dq.scalar_right_mul(c),
            };
            g = &g - &term;
        }
        dual[p] = Some(g);
    }

    let mut f = SkewPoly::zero(tw);
    for (g, b) in dual.iter().zip(problem.flat_targets()) {
        let g = g.as_ref().expect("all duals built");
        let term = match side {
            Side::Right => g.scalar_left_mul(&b),
            Side::Left => g.scalar_right_mul(&b),
        };
        f = &f + &term;
    }
    if !problem.is_satisfied_by(&f)? {
        return Err(Error::Verification("dual-basis solution misses a target".into()));
    }
    Ok(f)
}

/// An element of the ideal of `sub` whose full constraint vector is
/// nonzero at position `p`. Tries Algorithm 1 for every leading monomial,
/// then Algorithm 2 for every variable, then a basis of the ideal elements
/// of degree `≤ deg`.
#[allow(clippy::type_complexity)]
fn first_separating<R: DivisionRing>(
    spec: &ConstraintSpec<R>,
    sub: &ConstraintSpec<R>,
    p: usize,
) -> Result<Option<(SkewPoly<R>, Vec<R::Elem>)>> {
    let tw = spec.twist();
    let r = tw.ring();
    let degree = sub.total();
    let accept = |h: SkewPoly<R>| -> Result<Option<(SkewPoly<R>, Vec<R::Elem>)>> {
        let values = spec.constraint_values(&h)?;
        Ok((!r.is_zero(&values[p])).then_some((h, values)))
    };
    for target in Word::all_below(tw.n(), degree + 1, MonomialOrder::for_side(sub.side())) {
        if target.deg() != degree {
            continue;
        }
        if let Some(found) = accept(algorithm1(sub, &target)?)? {
            return Ok(Some(found));
        }
    }
    for t in 0..tw.n() {
        if let Some(found) = accept(algorithm2(sub, t)?)? {
            return Ok(Some(found));
        }
    }
    let (words, basis) = ideal_basis(sub, degree + 1)?;
    for z in basis {
        if let Some(found) = accept(combine(sub, &words, &z))? {
            return Ok(Some(found));
        }
    }
    Ok(None)
}

/// Lagrange-type interpolation: `F(a_j) = b_j` (or `F_L(a_j) = b_j`) with
/// `deg F < k`.
pub fn lagrange_interpolate<R: DivisionRing>(
    twist: &Twist<R>,
    points: Vec<Vec<R::Elem>>,
    values: Vec<R::Elem>,
    side: Side,
) -> Result<SkewPoly<R>> {
    let spec = ConstraintSpec::plain(twist, points, side)?;
    let targets = values.into_iter().map(|v| vec![v]).collect();
    hermite_interpolate(&InterpProblem::new(spec, targets)?)
}

/// The monic generator of the constraint ideal in one variable: the ideal
/// element of least degree, normalized to leading coefficient 1.
pub fn univariate_minimal_polynomial<R: DivisionRing>(spec: &ConstraintSpec<R>) -> Result<SkewPoly<R>> {
    let tw = spec.twist();
    if tw.n() != 1 {
        return Err(Error::InvalidSpec(
            "the minimal polynomial needs exactly one variable".into(),
        ));
    }
    let r = tw.ring();
    for d in 0..=spec.total() {
        let (words, basis) = ideal_basis(spec, d + 1)?;
        let top = words.iter().position(|w| w.deg() == d).expect("x^d is enumerated");
        let Some(z) = basis.into_iter().find(|z| !r.is_zero(&z[top])) else {
            continue;
        };
        let inv = r.inv(&z[top]).expect("nonzero");
        let f = combine(spec, &words, &z);
        // On the right the ideal is a left ideal and `z` holds left
        // coefficients; on the left it is a right ideal and `z` holds right
        // coefficients. Either way normalize on the side the ideal absorbs.
        return Ok(match spec.side() {
            Side::Right => f.scalar_left_mul(&inv),
            Side::Left => f.scalar_right_mul(&inv),
        });
    }
    unreachable!("the ideal has an element of degree at most N")
}
