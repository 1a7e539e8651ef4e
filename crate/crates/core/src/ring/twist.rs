use std::fmt;
use std::sync::Arc;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::{Automorphism, DivisionRing};
use crate::{Error, Result};

pub type SigmaFn<E> = Arc<dyn Fn(&E) -> Vec<Vec<E>> + Send + Sync>;
pub type PhiInverseFn<E> = Arc<dyn Fn(&[E]) -> Vec<E> + Send + Sync>;
/// A sparse column `[(j, c_j)]` together with a scalar.
pub type SparseColumn<E> = (Vec<(usize, E)>, E);
pub type DeltaFn<E> = Arc<dyn Fn(&E) -> Vec<E> + Send + Sync>;

/// The matrix morphism `σ : F → F^{n×n}`.
#[derive(Clone)]
pub enum Sigma<E> {
    /// `σ(a) = diag(σ_11(a), …, σ_nn(a))` with catalog automorphisms.
    Diagonal(Vec<Automorphism<E>>),
    /// A user supplied morphism, optionally with the inverse of
    /// `φ(γ)_i = Σ_j σ_ji(γ_j)`.
    Plugin {
        map: SigmaFn<E>,
        phi_inverse: Option<PhiInverseFn<E>>,
    },
}

/// The `σ`-vector derivation `δ : F → F^n`.
#[derive(Clone)]
pub enum Delta<E> {
    Zero,
    /// `δ(a) = σ(a)v − v a`.
    Inner(Vec<E>),
    Plugin(DeltaFn<E>),
}

impl<E: fmt::Debug> fmt::Debug for Sigma<E> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Sigma::Diagonal(d) => f.debug_tuple("Diagonal").field(d).finish(),
            Sigma::Plugin { phi_inverse, .. } => f
                .debug_struct("Plugin")
                .field("phi_inverse", &phi_inverse.is_some())
                .finish_non_exhaustive(),
        }
    }
}

impl<E: fmt::Debug> fmt::Debug for Delta<E> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Delta::Zero => f.write_str("Zero"),
            Delta::Inner(v) => f.debug_tuple("Inner").field(v).finish(),
            Delta::Plugin(_) => f.write_str("Plugin(..)"),
        }
    }
}

/// The data `(F, n, σ, δ)` defining `F[x1, …, xn; σ, δ]`.
#[derive(Debug)]
pub struct TwistConfig<R: DivisionRing> {
    ring: R,
    n: usize,
    sigma: Sigma<R::Elem>,
    delta: Delta<R::Elem>,
    /// Inverses of the diagonal entries, when diagonal.
    sigma_inv: Option<Vec<Automorphism<R::Elem>>>,
}

/// Shared handle to a twist; polynomials over the same ring hold clones of
/// one handle and are compared by identity.
pub type Twist<R> = Arc<TwistConfig<R>>;

/// A law that failed on sampled elements.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LawViolation {
    pub law: String,
    pub witness: Vec<String>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LawReport {
    pub samples: usize,
    pub violations: Vec<LawViolation>,
}

impl LawReport {
    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }
}

impl<R: DivisionRing> TwistConfig<R> {
    pub fn new(ring: R, n: usize, sigma: Sigma<R::Elem>, delta: Delta<R::Elem>) -> Result<Twist<R>> {
        if n == 0 {
            return Err(Error::InvalidConfig("at least one variable is required".into()));
        }
        let sigma_inv = match &sigma {
            Sigma::Diagonal(d) => {
                if d.len() != n {
                    return Err(Error::InvalidConfig(format!(
                        "sigma lists {} automorphisms for {n} variables",
                        d.len()
                    )));
                }
                for a in d {
                    a.check(&ring)?;
                }
                Some(d.iter().map(|a| a.inverse(&ring)).collect())
            }
            Sigma::Plugin { .. } => None,
        };
        if let Delta::Inner(v) = &delta {
            if v.len() != n {
                return Err(Error::InvalidConfig(format!(
                    "inner derivation vector has length {}, expected {n}",
                    v.len()
                )));
            }
        }
        Ok(Arc::new(TwistConfig {
            ring,
            n,
            sigma,
            delta,
            sigma_inv,
        }))
    }

    /// Diagonal `σ`; the number of variables is the length of `autos`.
    pub fn diagonal(ring: R, autos: Vec<Automorphism<R::Elem>>, delta: Delta<R::Elem>) -> Result<Twist<R>> {
        let n = autos.len();
        Self::new(ring, n, Sigma::Diagonal(autos), delta)
    }

    /// The ordinary free algebra: `σ = Id`, `δ = 0`.
    pub fn identity(ring: R, n: usize) -> Twist<R> {
        Self::new(ring, n, Sigma::Diagonal(vec![Automorphism::Identity; n]), Delta::Zero)
            .expect("identity twist is valid")
    }

    /// A derivation given by its values on the prime-field basis of the
    /// ring: `table[b]` is the vector `δ(basis_b)`. The map is extended
    /// additively, which is the only possible extension of an additive map.
    pub fn delta_from_basis_table(ring: &R, table: Vec<Vec<R::Elem>>) -> Result<Delta<R::Elem>> {
        let basis = ring.prime_basis();
        if table.len() != basis.len() {
            return Err(Error::InvalidConfig(format!(
                "derivation table needs {} basis rows, got {}",
                basis.len(),
                table.len()
            )));
        }
        let n = table.first().map_or(0, Vec::len);
        if table.iter().any(|row| row.len() != n) {
            return Err(Error::InvalidConfig("derivation table rows differ in length".into()));
        }
        let ring = ring.clone();
        Ok(Delta::Plugin(Arc::new(move |a| {
            let coords = ring.prime_coordinates(a);
            (0..n)
                .map(|i| {
                    coords
                        .iter()
                        .zip(&table)
                        .fold(ring.zero(), |acc, (c, row)| ring.add(&acc, &ring.mul(c, &row[i])))
                })
                .collect()
        })))
    }

    pub fn ring(&self) -> &R {
        &self.ring
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn sigma(&self) -> &Sigma<R::Elem> {
        &self.sigma
    }

    pub fn delta(&self) -> &Delta<R::Elem> {
        &self.delta
    }

    pub fn is_diagonal(&self) -> bool {
        matches!(self.sigma, Sigma::Diagonal(_))
    }

    pub fn delta_is_zero(&self) -> bool {
        matches!(self.delta, Delta::Zero)
    }

    /// Whether `φ` is invertible, so that left evaluation is defined.
    pub fn left_capable(&self) -> bool {
        match &self.sigma {
            Sigma::Diagonal(_) => true,
            Sigma::Plugin { phi_inverse, .. } => phi_inverse.is_some(),
        }
    }

    fn require_left(&self) -> Result<()> {
        if self.left_capable() {
            Ok(())
        } else {
            Err(Error::NotLeftCapable)
        }
    }

    /// The matrix `σ(a)`.
    pub fn apply_sigma(&self, a: &R::Elem) -> Vec<Vec<R::Elem>> {
        match &self.sigma {
            Sigma::Diagonal(d) => (0..self.n)
                .map(|i| {
                    (0..self.n)
                        .map(|j| {
                            if i == j {
                                d[i].apply(&self.ring, a)
                            } else {
                                self.ring.zero()
                            }
                        })
                        .collect()
                })
                .collect(),
            Sigma::Plugin { map, .. } => map(a),
        }
    }

    /// Nonzero entries `(j, σ_ij(a))` of row `i` of `σ(a)`.
    pub fn sigma_row(&self, i: usize, a: &R::Elem) -> Vec<(usize, R::Elem)> {
        match &self.sigma {
            Sigma::Diagonal(d) => {
                let v = d[i].apply(&self.ring, a);
                if self.ring.is_zero(&v) {
                    vec![]
                } else {
                    vec![(i, v)]
                }
            }
            Sigma::Plugin { map, .. } => map(a)
                .swap_remove(i)
                .into_iter()
                .enumerate()
                .filter(|(_, v)| !self.ring.is_zero(v))
                .collect(),
        }
    }

    /// The vector `δ(a)`.
    pub fn apply_delta(&self, a: &R::Elem) -> Vec<R::Elem> {
        match &self.delta {
            Delta::Zero => vec![self.ring.zero(); self.n],
            Delta::Inner(_) => (0..self.n).map(|i| self.delta_component(i, a)).collect(),
            Delta::Plugin(f) => f(a),
        }
    }

    /// `δ_i(a)`.
    pub fn delta_component(&self, i: usize, a: &R::Elem) -> R::Elem {
        let r = &self.ring;
        match &self.delta {
            Delta::Zero => r.zero(),
            Delta::Inner(v) => {
                let twisted = self
                    .sigma_row(i, a)
                    .iter()
                    .fold(r.zero(), |acc, (j, s)| r.add(&acc, &r.mul(s, &v[*j])));
                r.sub(&twisted, &r.mul(&v[i], a))
            }
            Delta::Plugin(f) => f(a).swap_remove(i),
        }
    }

    /// The commutation rule for `x_i c`: returns the nonzero entries of row
    /// `i` of `σ(c)` and `δ_i(c)`, so `x_i c = Σ_j σ_ij(c) x_j + δ_i(c)`.
    pub fn commute(&self, i: usize, c: &R::Elem) -> (Vec<(usize, R::Elem)>, R::Elem) {
        (self.sigma_row(i, c), self.delta_component(i, c))
    }

    /// `φ(γ)_i = Σ_j σ_ji(γ_j)`.
    pub fn phi(&self, gamma: &[R::Elem]) -> Vec<R::Elem> {
        let r = &self.ring;
        let mut out = vec![r.zero(); self.n];
        for (j, g) in gamma.iter().enumerate() {
            for (i, v) in self.sigma_row(j, g) {
                out[i] = r.add(&out[i], &v);
            }
        }
        out
    }

    pub fn phi_inv(&self, gamma: &[R::Elem]) -> Result<Vec<R::Elem>> {
        match (&self.sigma, &self.sigma_inv) {
            (Sigma::Diagonal(_), Some(inv)) => Ok(gamma.iter().zip(inv).map(|(g, s)| s.apply(&self.ring, g)).collect()),
            (
                Sigma::Plugin {
                    phi_inverse: Some(f), ..
                },
                _,
            ) => Ok(f(gamma)),
            _ => Err(Error::NotLeftCapable),
        }
    }

    /// `ψ(c) = Σ δ_i(c_i)`.
    pub fn psi(&self, c: &[R::Elem]) -> R::Elem {
        let r = &self.ring;
        c.iter()
            .enumerate()
            .fold(r.zero(), |acc, (i, ci)| r.add(&acc, &self.delta_component(i, ci)))
    }

    /// Column `i` of `σ̃(λ)` as nonzero entries `(j, σ̃_ji(λ))`, together with
    /// `δ̃_i(λ)`, so that `λ x_i = Σ_j x_j σ̃_ji(λ) + δ̃_i(λ)`.
    pub fn tilde_column(&self, i: usize, lambda: &R::Elem) -> Result<SparseColumn<R::Elem>> {
        let r = &self.ring;
        if let Some(inv) = &self.sigma_inv {
            let s = inv[i].apply(r, lambda);
            if r.is_zero(&s) {
                return Ok((vec![], r.zero()));
            }
            let d = r.neg(&self.delta_component(i, &s));
            return Ok((vec![(i, s)], d));
        }
        self.require_left()?;
        let mut e = vec![r.zero(); self.n];
        e[i] = lambda.clone();
        let gamma = self.phi_inv(&e)?;
        let d = r.neg(&self.psi(&gamma));
        let col = gamma.into_iter().enumerate().filter(|(_, g)| !r.is_zero(g)).collect();
        Ok((col, d))
    }

    /// The matrix `σ̃(λ)`, whose column `k` is `φ⁻¹(λ e_k)`.
    pub fn tilde_sigma(&self, lambda: &R::Elem) -> Result<Vec<Vec<R::Elem>>> {
        let mut m = vec![vec![self.ring.zero(); self.n]; self.n];
        let columns = (0..self.n)
            .map(|k| self.tilde_column(k, lambda))
            .collect::<Result<Vec<_>>>()?;
        for (k, (column, _)) in columns.into_iter().enumerate() {
            for (j, v) in column {
                m[j][k] = v;
            }
        }
        Ok(m)
    }

    /// The row vector `δ̃(λ)`.
    pub fn tilde_delta(&self, lambda: &R::Elem) -> Result<Vec<R::Elem>> {
        (0..self.n).map(|k| Ok(self.tilde_column(k, lambda)?.1)).collect()
    }

    /// Checks the morphism and derivation laws on `samples` seeded random
    /// elements.
    pub fn validate_laws(&self, seed: u64, samples: usize) -> LawReport {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let r = &self.ring;
        let n = self.n;
        let mut report = LawReport {
            samples,
            violations: vec![],
        };
        let fmt_all = |xs: &[&R::Elem]| xs.iter().map(|x| r.format_elem(x)).collect::<Vec<_>>();
        let record = |report: &mut LawReport, law: &str, witness: Vec<String>| {
            if !report.violations.iter().any(|v| v.law == law) {
                report.violations.push(LawViolation {
                    law: law.into(),
                    witness,
                });
            }
        };

        let identity: Vec<Vec<R::Elem>> = (0..n)
            .map(|i| (0..n).map(|j| if i == j { r.one() } else { r.zero() }).collect())
            .collect();
        if self.apply_sigma(&r.one()) != identity {
            record(&mut report, "sigma(1) = I", vec![]);
        }
        if self.apply_delta(&r.one()).iter().any(|d| !r.is_zero(d)) {
            record(&mut report, "delta(1) = 0", vec![]);
        }
        if self.apply_delta(&r.zero()).iter().any(|d| !r.is_zero(d)) {
            record(&mut report, "delta(0) = 0", vec![]);
        }

        for _ in 0..samples {
            let a = r.sample(&mut rng);
            let b = r.sample(&mut rng);
            let (sa, sb) = (self.apply_sigma(&a), self.apply_sigma(&b));
            let (da, db) = (self.apply_delta(&a), self.apply_delta(&b));

            if self.apply_sigma(&r.add(&a, &b)) != mat_add(r, &sa, &sb) {
                record(&mut report, "sigma(a+b) = sigma(a)+sigma(b)", fmt_all(&[&a, &b]));
            }
            if self.apply_sigma(&r.mul(&a, &b)) != mat_mul(r, &sa, &sb) {
                record(&mut report, "sigma(ab) = sigma(a)sigma(b)", fmt_all(&[&a, &b]));
            }
            if self.apply_delta(&r.add(&a, &b)) != vec_add(r, &da, &db) {
                record(&mut report, "delta(a+b) = delta(a)+delta(b)", fmt_all(&[&a, &b]));
            }
            let leibniz: Vec<R::Elem> = (0..n)
                .map(|i| {
                    let s = (0..n).fold(r.zero(), |acc, j| r.add(&acc, &r.mul(&sa[i][j], &db[j])));
                    r.add(&s, &r.mul(&da[i], &b))
                })
                .collect();
            if self.apply_delta(&r.mul(&a, &b)) != leibniz {
                record(
                    &mut report,
                    "delta(ab) = sigma(a)delta(b)+delta(a)b",
                    fmt_all(&[&a, &b]),
                );
            }
            if let Delta::Inner(v) = &self.delta {
                let closed: Vec<R::Elem> = (0..n)
                    .map(|i| {
                        let s = (0..n).fold(r.zero(), |acc, j| r.add(&acc, &r.mul(&sa[i][j], &v[j])));
                        r.sub(&s, &r.mul(&v[i], &a))
                    })
                    .collect();
                if da != closed {
                    record(&mut report, "delta(a) = sigma(a)v - va", fmt_all(&[&a]));
                }
            }
            if let Some(inv) = &self.sigma_inv {
                if let Sigma::Diagonal(d) = &self.sigma {
                    for (f, g) in d.iter().zip(inv) {
                        if g.apply(r, &f.apply(r, &a)) != a {
                            record(&mut report, "inverse(f(a)) = a", fmt_all(&[&a]));
                        }
                    }
                }
            }
            if self.left_capable() {
                let gamma: Vec<R::Elem> = (0..n).map(|_| r.sample(&mut rng)).collect();
                let there = self.phi(&gamma);
                let ok = self.phi_inv(&there).map(|g| g == gamma).unwrap_or(false)
                    && self.phi_inv(&gamma).map(|g| self.phi(&g) == gamma).unwrap_or(false);
                if !ok {
                    let refs: Vec<&R::Elem> = gamma.iter().collect();
                    record(&mut report, "phi_inv(phi(g)) = g = phi(phi_inv(g))", fmt_all(&refs));
                }
            }
        }
        report
    }
}

pub(crate) fn mat_add<R: DivisionRing>(r: &R, a: &[Vec<R::Elem>], b: &[Vec<R::Elem>]) -> Vec<Vec<R::Elem>> {
    a.iter().zip(b).map(|(x, y)| vec_add(r, x, y)).collect()
}

pub(crate) fn vec_add<R: DivisionRing>(r: &R, a: &[R::Elem], b: &[R::Elem]) -> Vec<R::Elem> {
    a.iter().zip(b).map(|(x, y)| r.add(x, y)).collect()
}

pub(crate) fn mat_mul<R: DivisionRing>(r: &R, a: &[Vec<R::Elem>], b: &[Vec<R::Elem>]) -> Vec<Vec<R::Elem>> {
    let inner = b.len();
    let cols = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|j| (0..inner).fold(r.zero(), |acc, k| r.add(&acc, &r.mul(&row[k], &b[k][j]))))
                .collect()
        })
        .collect()
}
