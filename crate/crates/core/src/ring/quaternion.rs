use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use rand::Rng;

use super::{parse_rational, sample_rational, DivisionRing};
use crate::{Error, Result};

/// A rational quaternion `w + x·i + y·j + z·k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Quaternion {
    pub w: BigRational,
    pub x: BigRational,
    pub y: BigRational,
    pub z: BigRational,
}

impl Quaternion {
    pub fn new(w: BigRational, x: BigRational, y: BigRational, z: BigRational) -> Self {
        Quaternion { w, x, y, z }
    }

    pub fn from_ints(w: i64, x: i64, y: i64, z: i64) -> Self {
        let r = |v: i64| BigRational::from_integer(BigInt::from(v));
        Quaternion::new(r(w), r(x), r(y), r(z))
    }

    pub fn i() -> Self {
        Self::from_ints(0, 1, 0, 0)
    }

    pub fn j() -> Self {
        Self::from_ints(0, 0, 1, 0)
    }

    pub fn k() -> Self {
        Self::from_ints(0, 0, 0, 1)
    }

    fn parts(&self) -> [&BigRational; 4] {
        [&self.w, &self.x, &self.y, &self.z]
    }
}

/// The rational quaternions `ℚ⟨i, j⟩` with `i² = j² = −1`, `ij = −ji = k`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct RationalQuaternions;

impl DivisionRing for RationalQuaternions {
    type Elem = Quaternion;

    fn zero(&self) -> Quaternion {
        Quaternion::from_ints(0, 0, 0, 0)
    }

    fn one(&self) -> Quaternion {
        Quaternion::from_ints(1, 0, 0, 0)
    }

    fn from_i64(&self, v: i64) -> Quaternion {
        Quaternion::from_ints(v, 0, 0, 0)
    }

    fn add(&self, a: &Quaternion, b: &Quaternion) -> Quaternion {
        Quaternion::new(&a.w + &b.w, &a.x + &b.x, &a.y + &b.y, &a.z + &b.z)
    }

    fn neg(&self, a: &Quaternion) -> Quaternion {
        Quaternion::new(-&a.w, -&a.x, -&a.y, -&a.z)
    }

    fn sub(&self, a: &Quaternion, b: &Quaternion) -> Quaternion {
        Quaternion::new(&a.w - &b.w, &a.x - &b.x, &a.y - &b.y, &a.z - &b.z)
    }

    fn mul(&self, a: &Quaternion, b: &Quaternion) -> Quaternion {
        Quaternion::new(
            &a.w * &b.w - &a.x * &b.x - &a.y * &b.y - &a.z * &b.z,
            &a.w * &b.x + &a.x * &b.w + &a.y * &b.z - &a.z * &b.y,
            &a.w * &b.y - &a.x * &b.z + &a.y * &b.w + &a.z * &b.x,
            &a.w * &b.z + &a.x * &b.y - &a.y * &b.x + &a.z * &b.w,
        )
    }

    fn inv(&self, a: &Quaternion) -> Option<Quaternion> {
        let norm = &a.w * &a.w + &a.x * &a.x + &a.y * &a.y + &a.z * &a.z;
        if norm.is_zero() {
            return None;
        }
        Some(Quaternion::new(
            &a.w / &norm,
            -&a.x / &norm,
            -&a.y / &norm,
            -&a.z / &norm,
        ))
    }

    fn is_zero(&self, a: &Quaternion) -> bool {
        a.parts().iter().all(|p| p.is_zero())
    }

    fn is_commutative(&self) -> bool {
        false
    }

    fn name(&self) -> String {
        "H(Q)".into()
    }

    fn sample<G: Rng + ?Sized>(&self, rng: &mut G) -> Quaternion {
        Quaternion::new(
            sample_rational(rng),
            sample_rational(rng),
            sample_rational(rng),
            sample_rational(rng),
        )
    }

    fn format_elem(&self, a: &Quaternion) -> String {
        format!("q({},{},{},{})", a.w, a.x, a.y, a.z)
    }

    fn parse_elem(&self, s: &str) -> Result<Quaternion> {
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if let Some(inner) = t.strip_prefix("q(").and_then(|t| t.strip_suffix(')')) {
            let parts: Vec<&str> = inner.split(',').collect();
            if parts.len() != 4 {
                return Err(Error::Parse(format!("quaternion needs 4 parts: `{s}`")));
            }
            return Ok(Quaternion::new(
                parse_rational(parts[0])?,
                parse_rational(parts[1])?,
                parse_rational(parts[2])?,
                parse_rational(parts[3])?,
            ));
        }
        let (sign, unit) = match t.strip_prefix('-') {
            Some(rest) => (-1, rest),
            None => (1, t.strip_prefix('+').unwrap_or(&t)),
        };
        match unit {
            "i" => Ok(Quaternion::from_ints(0, sign, 0, 0)),
            "j" => Ok(Quaternion::from_ints(0, 0, sign, 0)),
            "k" => Ok(Quaternion::from_ints(0, 0, 0, sign)),
            _ => {
                let t = t.strip_prefix('(').and_then(|t| t.strip_suffix(')')).unwrap_or(&t);
                let r = parse_rational(t)?;
                Ok(Quaternion::new(r, Zero::zero(), Zero::zero(), Zero::zero()))
            }
        }
    }

    fn prime_basis(&self) -> Vec<Quaternion> {
        vec![self.one(), Quaternion::i(), Quaternion::j(), Quaternion::k()]
    }

    fn prime_coordinates(&self, a: &Quaternion) -> Vec<Quaternion> {
        a.parts()
            .iter()
            .map(|p| Quaternion::new((*p).clone(), Zero::zero(), Zero::zero(), Zero::zero()))
            .collect()
    }
}
