use super::ConstraintSpec;
use crate::dlinalg::{self, Matrix};
use crate::ring::DivisionRing;
use crate::skewpoly::{MonomialOrder, SkewPoly, Word};
use crate::{Result, Side};

/// The confluent Vandermonde matrix of order `d`: derivative values of all
/// monomials of degree `< d` along the constraint chains.
///
/// On the right it is `r × N` (one row per monomial) and interpolation
/// solves `z · V = b`; on the left it is `N × r` and interpolation solves
/// `V_L · z = b`.
#[derive(Clone, Debug)]
pub struct VandermondeMatrix<R: DivisionRing> {
    pub order: usize,
    pub monomials: Vec<Word>,
    pub matrix: Matrix<R::Elem>,
    pub side: Side,
}

impl<R: DivisionRing> VandermondeMatrix<R> {
    pub fn is_square(&self) -> bool {
        self.matrix.rows() == self.matrix.cols()
    }

    /// The polynomial `Σ z_t m'_t` (right) or `Σ m'_t z_t` (left).
    pub fn combine(&self, spec: &ConstraintSpec<R>, z: &[R::Elem]) -> SkewPoly<R> {
        combine(spec, &self.monomials, z)
    }
}

pub(crate) fn combine<R: DivisionRing>(spec: &ConstraintSpec<R>, monomials: &[Word], z: &[R::Elem]) -> SkewPoly<R> {
    let tw = spec.twist();
    match spec.side() {
        Side::Right => SkewPoly::from_terms(tw, monomials.iter().cloned().zip(z.iter().cloned())),
        Side::Left => {
            let terms = monomials
                .iter()
                .cloned()
                .zip(z.iter().cloned())
                .filter(|(_, c)| !tw.ring().is_zero(c))
                .collect();
            SkewPoly::from_right_coefficients(tw, &terms)
        }
    }
}

fn monomials<R: DivisionRing>(spec: &ConstraintSpec<R>, d: usize) -> Vec<Word> {
    Word::all_below(spec.twist().n(), d, MonomialOrder::for_side(spec.side()))
}

/// Constraint values of each monomial, one vector per monomial.
fn value_table<R: DivisionRing>(spec: &ConstraintSpec<R>, words: &[Word]) -> Result<Vec<Vec<R::Elem>>> {
    let tw = spec.twist();
    let one = tw.ring().one();
    words
        .iter()
        .map(|w| spec.constraint_values(&SkewPoly::monomial(tw, w.clone(), one.clone())))
        .collect()
}

fn orient<R: DivisionRing>(side: Side, n_constraints: usize, table: Vec<Vec<R::Elem>>) -> Matrix<R::Elem> {
    match side {
        Side::Right => {
            if table.is_empty() {
                Matrix::new(0, n_constraints, vec![])
            } else {
                Matrix::from_rows(table)
            }
        }
        Side::Left => Matrix::from_cols(n_constraints, table),
    }
}

pub fn build_vandermonde<R: DivisionRing>(spec: &ConstraintSpec<R>, d: usize) -> Result<VandermondeMatrix<R>> {
    let words = monomials(spec, d);
    let table = value_table(spec, &words)?;
    Ok(VandermondeMatrix {
        order: d,
        monomials: words,
        matrix: orient::<R>(spec.side(), spec.total(), table),
        side: spec.side(),
    })
}

/// Coefficient vectors, one per basis element.
type Basis<E> = Vec<Vec<E>>;

/// Homogeneous solutions of the order-`d` system, as polynomials of degree
/// `< d` in the constraint ideal.
pub(crate) fn ideal_basis<R: DivisionRing>(spec: &ConstraintSpec<R>, d: usize) -> Result<(Vec<Word>, Basis<R::Elem>)> {
    let v = build_vandermonde(spec, d)?;
    let r = spec.twist().ring();
    let sol = match spec.side() {
        Side::Right => dlinalg::solve_row_system(r, &v.matrix, &vec![r.zero(); v.matrix.cols()]),
        Side::Left => dlinalg::solve_col_system(r, &v.matrix, &vec![r.zero(); v.matrix.rows()]),
    };
    Ok((v.monomials, sol.nullspace))
}

/// `dim V_{≤d}`: the dimension of the elements of degree `≤ d` in the
/// constraint ideal (a left space on the right side, a right space on the
/// left side).
pub fn dim_v<R: DivisionRing>(spec: &ConstraintSpec<R>, d: usize) -> Result<usize> {
    let v = build_vandermonde(spec, d + 1)?;
    Ok(v.monomials.len() - dlinalg::rank(spec.twist().ring(), &v.matrix, spec.side()))
}

/// `dim V_d`, computed independently of [`dim_v`] as the rank of the
/// degree-`d` parts of a basis of `V_{≤d}`.
pub fn dim_v_top_degree<R: DivisionRing>(spec: &ConstraintSpec<R>, d: usize) -> Result<usize> {
    let (words, basis) = ideal_basis(spec, d + 1)?;
    let top: Vec<usize> = (0..words.len()).filter(|&t| words[t].deg() == d).collect();
    if basis.is_empty() {
        return Ok(0);
    }
    let blocks: Vec<Vec<R::Elem>> = basis
        .iter()
        .map(|z| top.iter().map(|&t| z[t].clone()).collect())
        .collect();
    let r = spec.twist().ring();
    Ok(match spec.side() {
        Side::Right => dlinalg::left_row_rank(r, &Matrix::from_rows(blocks)),
        Side::Left => dlinalg::right_col_rank(r, &Matrix::from_cols(top.len(), blocks)),
    })
}

/// Decides DP-independence by the dimension criterion: for every `j`,
/// dropping point `j` must enlarge `V_{≤N}` by exactly `deg m_j + 1`.
pub fn is_dp_independent<R: DivisionRing>(spec: &ConstraintSpec<R>) -> Result<bool> {
    let n_total = spec.total();
    let base = dim_v(spec, n_total)?;
    for j in 0..spec.k() {
        if dim_v(&spec.without(j), n_total)? != base + spec.chains()[j].deg() + 1 {
            return Ok(false);
        }
    }
    Ok(true)
}

/// A polynomial of degree `≤ N` meeting every constraint except the value
/// at `a_j` itself, with `F(a_j) ≠ 0` (right) or `F_L(a_j) ≠ 0` (left).
pub fn dp_witness<R: DivisionRing>(spec: &ConstraintSpec<R>, j: usize) -> Result<Option<SkewPoly<R>>> {
    let r = spec.twist().ring();
    let d = spec.total() + 1;
    let words = monomials(spec, d);
    let others = spec.without(j);
    let here = spec.select(&[j]);
    let other_vals = value_table(&others, &words)?;
    let here_vals = value_table(&here, &words)?;
    let rows: Vec<Vec<R::Elem>> = other_vals
        .iter()
        .zip(&here_vals)
        .map(|(o, h)| o.iter().chain(&h[1..]).cloned().collect())
        .collect();
    let width = others.total() + spec.chains()[j].deg();
    let m = orient::<R>(spec.side(), width, rows);
    let sol = match spec.side() {
        Side::Right => dlinalg::solve_row_system(r, &m, &vec![r.zero(); m.cols()]),
        Side::Left => dlinalg::solve_col_system(r, &m, &vec![r.zero(); m.rows()]),
    };
    for z in sol.nullspace {
        let value = z.iter().zip(&here_vals).fold(r.zero(), |acc, (c, h)| {
            let term = match spec.side() {
                Side::Right => r.mul(c, &h[0]),
                Side::Left => r.mul(&h[0], c),
            };
            r.add(&acc, &term)
        });
        if !r.is_zero(&value) {
            return Ok(Some(combine(spec, &words, &z)));
        }
    }
    Ok(None)
}

/// DP-independence via witnesses: every point admits a [`dp_witness`].
pub fn is_dp_independent_by_witness<R: DivisionRing>(spec: &ConstraintSpec<R>) -> Result<bool> {
    for j in 0..spec.k() {
        if dp_witness(spec, j)?.is_none() {
            return Ok(false);
        }
    }
    Ok(true)
}
