//! Derivative-constraint ideals, DP-independence, Algorithms 1 and 2,
//! confluent Vandermonde matrices and Hermite/Lagrange interpolation.
//!
//! A [`ConstraintSpec`] fixes points `a_1, …, a_k` and chain monomials
//! `m_1, …, m_k`. On the right, `m_j = x_{js} ⋯ x_{j1}` constrains the
//! derivatives along its suffixes `o, x_{j1}, x_{j2}x_{j1}, …, m_j`; on the
//! left along its prefixes `o, x_{js}, x_{js}x_{j(s−1)}, …, m_j`.

mod algorithms;
mod solve;
mod vandermonde;

pub use algorithms::{algorithm1, algorithm2};
pub use solve::{hermite_dual_basis, hermite_interpolate, lagrange_interpolate, univariate_minimal_polynomial};
pub use vandermonde::{
    build_vandermonde, dim_v, dim_v_top_degree, dp_witness, is_dp_independent, is_dp_independent_by_witness,
    VandermondeMatrix,
};

use crate::derivative::{chain_values, chain_words};
use crate::ring::{DivisionRing, Twist};
use crate::skewpoly::{SkewPoly, Word};
use crate::{Error, Result, Side};

/// Points with chain monomials on one side.
#[derive(Clone, Debug)]
pub struct ConstraintSpec<R: DivisionRing> {
    twist: Twist<R>,
    points: Vec<Vec<R::Elem>>,
    chains: Vec<Word>,
    side: Side,
    total: usize,
}

impl<R: DivisionRing> ConstraintSpec<R> {
    pub fn new(twist: &Twist<R>, points: Vec<Vec<R::Elem>>, chains: Vec<Word>, side: Side) -> Result<Self> {
        if points.len() != chains.len() {
            return Err(Error::InvalidSpec(format!(
                "{} points but {} chain monomials",
                points.len(),
                chains.len()
            )));
        }
        if side == Side::Left && !twist.left_capable() {
            return Err(Error::NotLeftCapable);
        }
        for (j, p) in points.iter().enumerate() {
            if p.len() != twist.n() {
                return Err(Error::InvalidSpec(format!(
                    "point {} has {} coordinates, expected {}",
                    j + 1,
                    p.len(),
                    twist.n()
                )));
            }
            if points[..j].contains(p) {
                return Err(Error::InvalidSpec(format!("point {} is repeated", j + 1)));
            }
        }
        if chains.iter().any(|m| m.max_letter().is_some_and(|l| l >= twist.n())) {
            return Err(Error::InvalidSpec("chain monomial uses an unknown variable".into()));
        }
        let total = chains.iter().map(|m| m.deg() + 1).sum();
        Ok(ConstraintSpec {
            twist: twist.clone(),
            points,
            chains,
            side,
            total,
        })
    }

    /// Points with the chain `o` each.
    pub fn plain(twist: &Twist<R>, points: Vec<Vec<R::Elem>>, side: Side) -> Result<Self> {
        let k = points.len();
        Self::new(twist, points, vec![Word::empty(); k], side)
    }

    pub fn twist(&self) -> &Twist<R> {
        &self.twist
    }

    pub fn points(&self) -> &[Vec<R::Elem>] {
        &self.points
    }

    pub fn chains(&self) -> &[Word] {
        &self.chains
    }

    pub fn side(&self) -> Side {
        self.side
    }

    pub fn k(&self) -> usize {
        self.points.len()
    }

    /// `N = Σ (deg m_j + 1)`, the number of scalar constraints.
    pub fn total(&self) -> usize {
        self.total
    }

    /// The chain words constrained at point `j`.
    pub fn chain_words(&self, j: usize) -> Vec<Word> {
        chain_words(&self.chains[j], self.side)
    }

    /// Constraint positions `(j, i)` in order: point by point, chain
    /// position `i = 0..=deg m_j`.
    pub fn positions(&self) -> Vec<(usize, usize)> {
        self.chains
            .iter()
            .enumerate()
            .flat_map(|(j, m)| (0..=m.deg()).map(move |i| (j, i)))
            .collect()
    }

    /// The constraints restricted to the points in `keep` (in the given order).
    pub fn select(&self, keep: &[usize]) -> Self {
        let points = keep.iter().map(|&j| self.points[j].clone()).collect();
        let chains = keep.iter().map(|&j| self.chains[j].clone()).collect();
        Self::new(&self.twist, points, chains, self.side).expect("sub-spec of a valid spec")
    }

    /// The constraints with point `j` removed.
    pub fn without(&self, j: usize) -> Self {
        let keep: Vec<usize> = (0..self.k()).filter(|&t| t != j).collect();
        self.select(&keep)
    }

    /// Appends a point with its chain.
    pub fn with_point(&self, a: Vec<R::Elem>, m: Word) -> Result<Self> {
        let mut points = self.points.clone();
        let mut chains = self.chains.clone();
        points.push(a);
        chains.push(m);
        Self::new(&self.twist, points, chains, self.side)
    }

    /// The constraint set consisting of the constraints strictly before position
    /// `(j, i)`: all earlier points in full, then point `j` truncated to its
    /// first `i` chain positions.
    pub fn truncated(&self, j: usize, i: usize) -> Self {
        let mut points: Vec<_> = self.points[..j].to_vec();
        let mut chains: Vec<_> = self.chains[..j].to_vec();
        if i > 0 {
            points.push(self.points[j].clone());
            chains.push(self.chain_words(j)[i - 1].clone());
        }
        Self::new(&self.twist, points, chains, self.side).expect("truncation of a valid spec")
    }

    /// All `N` constraint values of `F`, point by point along the chains.
    pub fn constraint_values(&self, f: &SkewPoly<R>) -> Result<Vec<R::Elem>> {
        let mut out = Vec::with_capacity(self.total);
        for (a, m) in self.points.iter().zip(&self.chains) {
            out.extend(chain_values(f, a, m, self.side)?);
        }
        Ok(out)
    }
}

/// A constraint spec with one target value per constraint.
#[derive(Clone, Debug)]
pub struct InterpProblem<R: DivisionRing> {
    pub spec: ConstraintSpec<R>,
    /// `targets[j][i]` is the value prescribed at chain position `i` of
    /// point `j`.
    pub targets: Vec<Vec<R::Elem>>,
}

impl<R: DivisionRing> InterpProblem<R> {
    pub fn new(spec: ConstraintSpec<R>, targets: Vec<Vec<R::Elem>>) -> Result<Self> {
        if targets.len() != spec.k() {
            return Err(Error::InvalidSpec(format!(
                "{} target vectors for {} points",
                targets.len(),
                spec.k()
            )));
        }
        for (j, (t, m)) in targets.iter().zip(spec.chains()).enumerate() {
            if t.len() != m.deg() + 1 {
                return Err(Error::InvalidSpec(format!(
                    "point {} needs {} targets, got {}",
                    j + 1,
                    m.deg() + 1,
                    t.len()
                )));
            }
        }
        Ok(InterpProblem { spec, targets })
    }

    pub fn flat_targets(&self) -> Vec<R::Elem> {
        self.targets.iter().flatten().cloned().collect()
    }

    /// Whether `F` meets every target exactly.
    pub fn is_satisfied_by(&self, f: &SkewPoly<R>) -> Result<bool> {
        Ok(self.spec.constraint_values(f)? == self.flat_targets())
    }
}

/// Whether `F` lies in the constraint ideal of `spec`.
pub fn ideal_member<R: DivisionRing>(f: &SkewPoly<R>, spec: &ConstraintSpec<R>) -> Result<bool> {
    let r = spec.twist().ring();
    Ok(spec.constraint_values(f)?.iter().all(|v| r.is_zero(v)))
}

/// Whether `a` is a common chain zero of all `generators` for the chain
/// `m` on `side`. For a principal ideal this decides membership of `a` in
/// its zero set; for a general ideal it is exact for the generators given.
pub fn zero_set_member<R: DivisionRing>(
    a: &[R::Elem],
    generators: &[SkewPoly<R>],
    m: &Word,
    side: Side,
) -> Result<bool> {
    for g in generators {
        let r = g.ring();
        if !chain_values(g, a, m, side)?.iter().all(|v| r.is_zero(v)) {
            return Ok(false);
        }
    }
    Ok(true)
}
