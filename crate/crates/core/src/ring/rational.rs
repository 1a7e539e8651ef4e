use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Inv, One, Zero};
use rand::Rng;

use super::{parse_rational, sample_rational, DivisionRing};
use crate::Result;

/// The field `ℚ` of arbitrary-precision rationals.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct Rationals;

impl DivisionRing for Rationals {
    type Elem = BigRational;

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }

    fn one(&self) -> BigRational {
        BigRational::one()
    }

    fn from_i64(&self, v: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(v))
    }

    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }

    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }

    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }

    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }

    fn inv(&self, a: &BigRational) -> Option<BigRational> {
        if a.is_zero() {
            None
        } else {
            Some(a.clone().inv())
        }
    }

    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }

    fn is_commutative(&self) -> bool {
        true
    }

    fn name(&self) -> String {
        "Q".into()
    }

    fn sample<G: Rng + ?Sized>(&self, rng: &mut G) -> BigRational {
        sample_rational(rng)
    }

    fn format_elem(&self, a: &BigRational) -> String {
        a.to_string()
    }

    fn parse_elem(&self, s: &str) -> Result<BigRational> {
        let s = s.trim();
        let s = s.strip_prefix('(').and_then(|t| t.strip_suffix(')')).unwrap_or(s);
        parse_rational(s)
    }

    fn prime_basis(&self) -> Vec<BigRational> {
        vec![self.one()]
    }

    fn prime_coordinates(&self, a: &BigRational) -> Vec<BigRational> {
        vec![a.clone()]
    }
}
