//! Exact division rings and the twist data `(σ, δ)` of a skew polynomial
//! ring.

mod galois;
mod gaussian;
mod quaternion;
mod rational;
mod twist;

use std::fmt::Debug;
use std::hash::Hash;

use rand::Rng;

use crate::{Error, Result};

pub use galois::{GaloisField, GfElem};
pub use gaussian::{Gaussian, GaussianRationals};
pub use quaternion::{Quaternion, RationalQuaternions};
pub use rational::Rationals;
pub use twist::{
    Delta, DeltaFn, LawReport, LawViolation, PhiInverseFn, Sigma, SigmaFn, SparseColumn, Twist, TwistConfig,
};

/// A division ring with exact arithmetic. The ring object carries any
/// runtime parameters (e.g. the field size); elements are plain values.
pub trait DivisionRing: Clone + Debug + Send + Sync + 'static {
    type Elem: Clone + PartialEq + Eq + Hash + Debug + Send + Sync + 'static;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    #[allow(clippy::wrong_self_convention)]
    fn from_i64(&self, v: i64) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    /// Two-sided inverse, `None` for zero.
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.add(a, &self.neg(b))
    }

    fn is_zero(&self, a: &Self::Elem) -> bool {
        *a == self.zero()
    }

    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }

    fn is_commutative(&self) -> bool;

    /// Human readable name, e.g. `GF(7^2)`.
    fn name(&self) -> String;

    /// A small random element; zero occurs with positive probability.
    fn sample<G: Rng + ?Sized>(&self, rng: &mut G) -> Self::Elem;

    fn sample_nonzero<G: Rng + ?Sized>(&self, rng: &mut G) -> Self::Elem {
        loop {
            let a = self.sample(rng);
            if !self.is_zero(&a) {
                return a;
            }
        }
    }

    /// Canonical text form; `parse_elem(format_elem(a)) == a`.
    fn format_elem(&self, a: &Self::Elem) -> String;
    fn parse_elem(&self, s: &str) -> Result<Self::Elem>;

    /// A basis of the ring as a vector space over its prime field.
    fn prime_basis(&self) -> Vec<Self::Elem>;

    /// Coordinates of `a` in [`prime_basis`](Self::prime_basis), each
    /// embedded into the ring (they are central).
    fn prime_coordinates(&self, a: &Self::Elem) -> Vec<Self::Elem>;

    /// Complex conjugation, where the ring has one.
    fn conjugate(&self, _a: &Self::Elem) -> Option<Self::Elem> {
        None
    }

    /// `a ↦ a^(p^k)`, where the ring is a finite field.
    fn frobenius(&self, _a: &Self::Elem, _k: u32) -> Option<Self::Elem> {
        None
    }

    /// Degree `m` of a finite field over its prime field.
    fn extension_degree(&self) -> Option<u32> {
        None
    }
}

/// The catalog of ring automorphisms usable as diagonal entries of `σ`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Automorphism<E> {
    Identity,
    /// Complex conjugation on `ℚ(i)`.
    Conjugation,
    /// `a ↦ a^(p^k)` on `GF(p^m)`.
    Frobenius(u32),
    /// `a ↦ c a c⁻¹`; construct with [`Automorphism::inner`].
    Inner {
        unit: E,
        unit_inv: E,
    },
}

impl<E: Clone> Automorphism<E> {
    pub fn inner<R: DivisionRing<Elem = E>>(ring: &R, unit: E) -> Result<Self> {
        let unit_inv = ring
            .inv(&unit)
            .ok_or_else(|| Error::InvalidConfig("inner automorphism by zero".into()))?;
        Ok(Automorphism::Inner { unit, unit_inv })
    }

    /// Checks that the ring supports this automorphism.
    pub fn check<R: DivisionRing<Elem = E>>(&self, ring: &R) -> Result<()> {
        match self {
            Automorphism::Identity | Automorphism::Inner { .. } => Ok(()),
            Automorphism::Conjugation => {
                if ring.conjugate(&ring.one()).is_some() {
                    Ok(())
                } else {
                    Err(Error::InvalidConfig(format!(
                        "conjugation is not available on {}",
                        ring.name()
                    )))
                }
            }
            Automorphism::Frobenius(_) => {
                if ring.extension_degree().is_some() {
                    Ok(())
                } else {
                    Err(Error::InvalidConfig(format!(
                        "Frobenius is not available on {}",
                        ring.name()
                    )))
                }
            }
        }
    }

    pub fn apply<R: DivisionRing<Elem = E>>(&self, ring: &R, a: &E) -> E {
        match self {
            Automorphism::Identity => a.clone(),
            Automorphism::Conjugation => ring.conjugate(a).expect("conjugation unsupported"),
            Automorphism::Frobenius(k) => ring.frobenius(a, *k).expect("frobenius unsupported"),
            Automorphism::Inner { unit, unit_inv } => ring.mul(&ring.mul(unit, a), unit_inv),
        }
    }

    pub fn inverse<R: DivisionRing<Elem = E>>(&self, ring: &R) -> Self {
        match self {
            Automorphism::Identity => Automorphism::Identity,
            Automorphism::Conjugation => Automorphism::Conjugation,
            Automorphism::Frobenius(k) => {
                let m = ring.extension_degree().expect("frobenius unsupported");
                Automorphism::Frobenius((m - k % m) % m)
            }
            Automorphism::Inner { unit, unit_inv } => Automorphism::Inner {
                unit: unit_inv.clone(),
                unit_inv: unit.clone(),
            },
        }
    }

    pub fn is_identity(&self) -> bool {
        matches!(self, Automorphism::Identity)
    }

    pub fn describe<R: DivisionRing<Elem = E>>(&self, ring: &R) -> String {
        match self {
            Automorphism::Identity => "identity".into(),
            Automorphism::Conjugation => "conj".into(),
            Automorphism::Frobenius(k) => format!("frobenius({k})"),
            Automorphism::Inner { unit, .. } => format!("inner({})", ring.format_elem(unit)),
        }
    }
}

/// Parses a rational literal `p` or `p/q`.
pub(crate) fn parse_rational(s: &str) -> Result<num_rational::BigRational> {
    use num_bigint::BigInt;
    let s = s.trim();
    let bad = || Error::Parse(format!("bad rational `{s}`"));
    let (num, den) = match s.split_once('/') {
        Some((p, q)) => (p.trim(), q.trim()),
        None => (s, "1"),
    };
    let num = num.strip_prefix('+').unwrap_or(num);
    let p: BigInt = num.parse().map_err(|_| bad())?;
    let q: BigInt = den.parse().map_err(|_| bad())?;
    if q == BigInt::from(0) {
        return Err(bad());
    }
    Ok(num_rational::BigRational::new(p, q))
}

pub(crate) fn sample_rational<G: Rng + ?Sized>(rng: &mut G) -> num_rational::BigRational {
    use num_bigint::BigInt;
    let p: i64 = rng.random_range(-6..=6);
    let q: i64 = if rng.random_bool(0.7) {
        1
    } else {
        rng.random_range(2..=3)
    };
    num_rational::BigRational::new(BigInt::from(p), BigInt::from(q))
}
