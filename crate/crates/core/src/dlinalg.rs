//! Dense linear algebra over a division ring.
//!
//! Two kinds of systems are solved:
//!
//! * `z · A = b`: the unknowns multiply the entries of `A` from the left.
//!   Each column of `A` is one equation `Σ_t z_t A_tc = b_c`, and equations
//!   may only be scaled on the right.
//! * `A · z = b`: the unknowns multiply from the right. Each row is one
//!   equation, scaled on the left.
//!
//! Pivots are the first nonzero entry in scan order; there is no magnitude
//! pivoting since arithmetic is exact.

use std::fmt;

use crate::ring::DivisionRing;
use crate::Side;

/// A dense row-major matrix.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix<E> {
    rows: usize,
    cols: usize,
    data: Vec<E>,
}

impl<E: fmt::Debug> fmt::Debug for Matrix<E> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.data.chunks(self.cols.max(1))).finish()
    }
}

impl<E: Clone> Matrix<E> {
    pub fn new(rows: usize, cols: usize, data: Vec<E>) -> Self {
        assert_eq!(data.len(), rows * cols, "matrix data has wrong length");
        Matrix { rows, cols, data }
    }

    pub fn filled(rows: usize, cols: usize, value: E) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![value; rows * cols],
        }
    }

    pub fn from_rows(rows: Vec<Vec<E>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Matrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    /// Builds an `rows × cols` matrix from its columns.
    pub fn from_cols(rows: usize, cols: Vec<Vec<E>>) -> Self {
        let c = cols.len();
        assert!(cols.iter().all(|col| col.len() == rows), "ragged columns");
        let data = (0..rows)
            .flat_map(|i| cols.iter().map(move |col| col[i].clone()))
            .collect();
        Matrix { rows, cols: c, data }
    }

    pub fn identity<R: DivisionRing<Elem = E>>(ring: &R, n: usize) -> Self {
        let mut m = Self::filled(n, n, ring.zero());
        for i in 0..n {
            m.set(i, i, ring.one());
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &E {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: E) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[E] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn col(&self, j: usize) -> Vec<E> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn transpose(&self) -> Self {
        Matrix::from_cols(self.cols, (0..self.rows).map(|i| self.row(i).to_vec()).collect())
    }

    pub fn to_rows(&self) -> Vec<Vec<E>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }
}

/// `z · A` for a row vector `z`.
pub fn row_times<R: DivisionRing>(ring: &R, z: &[R::Elem], a: &Matrix<R::Elem>) -> Vec<R::Elem> {
    assert_eq!(z.len(), a.rows());
    (0..a.cols())
        .map(|c| (0..a.rows()).fold(ring.zero(), |acc, t| ring.add(&acc, &ring.mul(&z[t], a.get(t, c)))))
        .collect()
}

/// `A · z` for a column vector `z`.
pub fn times_col<R: DivisionRing>(ring: &R, a: &Matrix<R::Elem>, z: &[R::Elem]) -> Vec<R::Elem> {
    assert_eq!(z.len(), a.cols());
    (0..a.rows())
        .map(|i| (0..a.cols()).fold(ring.zero(), |acc, t| ring.add(&acc, &ring.mul(a.get(i, t), &z[t]))))
        .collect()
}

/// Outcome of a linear solve: one solution (free variables set to zero) if
/// the system is consistent, and a basis of the homogeneous solutions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Solution<E> {
    pub particular: Option<Vec<E>>,
    pub nullspace: Vec<Vec<E>>,
    pub rank: usize,
}

/// Gauss–Jordan elimination on equations `Σ_t coef_t ⋆ z_t = rhs` where
/// `⋆` puts the unknown on the left of the coefficient when `unknown_left`.
fn eliminate<R: DivisionRing>(
    ring: &R,
    mut eqs: Vec<Vec<R::Elem>>,
    mut rhs: Vec<R::Elem>,
    unknowns: usize,
    unknown_left: bool,
) -> Solution<R::Elem> {
    // Scaling an equation must happen on the side away from the unknowns.
    let scale = |x: &R::Elem, s: &R::Elem| if unknown_left { ring.mul(x, s) } else { ring.mul(s, x) };
    let mut pivots: Vec<usize> = Vec::new();
    let mut row = 0;
    for col in 0..unknowns {
        let Some(p) = (row..eqs.len()).find(|&e| !ring.is_zero(&eqs[e][col])) else {
            continue;
        };
        eqs.swap(row, p);
        rhs.swap(row, p);
        let inv = ring.inv(&eqs[row][col]).expect("nonzero pivot");
        eqs[row] = eqs[row].iter().map(|x| scale(x, &inv)).collect();
        rhs[row] = scale(&rhs[row], &inv);
        for e in 0..eqs.len() {
            if e == row || ring.is_zero(&eqs[e][col]) {
                continue;
            }
            let factor = eqs[e][col].clone();
            let pivot_eq = eqs[row].clone();
            for (x, y) in eqs[e].iter_mut().zip(&pivot_eq) {
                *x = ring.sub(x, &scale(y, &factor));
            }
            rhs[e] = ring.sub(&rhs[e], &scale(&rhs[row], &factor));
        }
        pivots.push(col);
        row += 1;
        if row == eqs.len() {
            break;
        }
    }
    let rank = pivots.len();
    let consistent = rhs[rank..].iter().all(|b| ring.is_zero(b));
    let particular = consistent.then(|| {
        let mut z = vec![ring.zero(); unknowns];
        for (e, &c) in pivots.iter().enumerate() {
            z[c] = rhs[e].clone();
        }
        z
    });
    let nullspace = (0..unknowns)
        .filter(|c| !pivots.contains(c))
        .map(|free| {
            let mut z = vec![ring.zero(); unknowns];
            z[free] = ring.one();
            for (e, &c) in pivots.iter().enumerate() {
                z[c] = ring.neg(&eqs[e][free]);
            }
            z
        })
        .collect();
    Solution {
        particular,
        nullspace,
        rank,
    }
}

/// Solves `z · A = b` for the row vector `z` (length `A.rows()`).
pub fn solve_row_system<R: DivisionRing>(ring: &R, a: &Matrix<R::Elem>, b: &[R::Elem]) -> Solution<R::Elem> {
    assert_eq!(b.len(), a.cols(), "right-hand side has wrong length");
    let eqs = (0..a.cols()).map(|c| a.col(c)).collect();
    eliminate(ring, eqs, b.to_vec(), a.rows(), true)
}

/// Solves `A · z = b` for the column vector `z` (length `A.cols()`).
pub fn solve_col_system<R: DivisionRing>(ring: &R, a: &Matrix<R::Elem>, b: &[R::Elem]) -> Solution<R::Elem> {
    assert_eq!(b.len(), a.rows(), "right-hand side has wrong length");
    eliminate(ring, a.to_rows(), b.to_vec(), a.cols(), false)
}

/// Dimension of the left span of the rows of `A`.
pub fn left_row_rank<R: DivisionRing>(ring: &R, a: &Matrix<R::Elem>) -> usize {
    solve_row_system(ring, a, &vec![ring.zero(); a.cols()]).rank
}

/// Dimension of the right span of the columns of `A`.
pub fn right_col_rank<R: DivisionRing>(ring: &R, a: &Matrix<R::Elem>) -> usize {
    solve_col_system(ring, a, &vec![ring.zero(); a.rows()]).rank
}

/// Rank under the elimination used by each side's interpolation systems:
/// `z · V` on the right, `V_L · z` on the left. The two agree on every
/// matrix, since left row rank equals right column rank.
pub fn rank<R: DivisionRing>(ring: &R, a: &Matrix<R::Elem>, side: Side) -> usize {
    match side {
        Side::Right => left_row_rank(ring, a),
        Side::Left => right_col_rank(ring, a),
    }
}
