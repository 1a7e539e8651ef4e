use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::Rng;

use super::{parse_rational, sample_rational, DivisionRing};
use crate::{Error, Result};

/// An element `re + im·i` of `ℚ(i)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Gaussian {
    pub re: BigRational,
    pub im: BigRational,
}

impl Gaussian {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        Gaussian { re, im }
    }

    pub fn from_ints(re: i64, im: i64) -> Self {
        Gaussian {
            re: BigRational::from_integer(BigInt::from(re)),
            im: BigRational::from_integer(BigInt::from(im)),
        }
    }
}

/// The Gaussian rationals `ℚ(i)`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct GaussianRationals;

impl DivisionRing for GaussianRationals {
    type Elem = Gaussian;

    fn zero(&self) -> Gaussian {
        Gaussian::from_ints(0, 0)
    }

    fn one(&self) -> Gaussian {
        Gaussian::from_ints(1, 0)
    }

    fn from_i64(&self, v: i64) -> Gaussian {
        Gaussian::from_ints(v, 0)
    }

    fn add(&self, a: &Gaussian, b: &Gaussian) -> Gaussian {
        Gaussian::new(&a.re + &b.re, &a.im + &b.im)
    }

    fn neg(&self, a: &Gaussian) -> Gaussian {
        Gaussian::new(-&a.re, -&a.im)
    }

    fn sub(&self, a: &Gaussian, b: &Gaussian) -> Gaussian {
        Gaussian::new(&a.re - &b.re, &a.im - &b.im)
    }

    fn mul(&self, a: &Gaussian, b: &Gaussian) -> Gaussian {
        Gaussian::new(&a.re * &b.re - &a.im * &b.im, &a.re * &b.im + &a.im * &b.re)
    }

    fn inv(&self, a: &Gaussian) -> Option<Gaussian> {
        let norm = &a.re * &a.re + &a.im * &a.im;
        if norm.is_zero() {
            return None;
        }
        Some(Gaussian::new(&a.re / &norm, -&a.im / &norm))
    }

    fn is_zero(&self, a: &Gaussian) -> bool {
        a.re.is_zero() && a.im.is_zero()
    }

    fn is_commutative(&self) -> bool {
        true
    }

    fn name(&self) -> String {
        "Q(i)".into()
    }

    fn sample<G: Rng + ?Sized>(&self, rng: &mut G) -> Gaussian {
        Gaussian::new(sample_rational(rng), sample_rational(rng))
    }

    fn format_elem(&self, a: &Gaussian) -> String {
        let imag = |im: &BigRational| {
            if im.is_one() {
                "i".to_string()
            } else if *im == -BigRational::one() {
                "-i".to_string()
            } else {
                format!("{im}i")
            }
        };
        match (a.re.is_zero(), a.im.is_zero()) {
            (_, true) => a.re.to_string(),
            (true, false) => imag(&a.im),
            (false, false) => {
                let sign = if a.im.is_negative() { "-" } else { "+" };
                let mag = imag(&a.im.abs());
                format!("{}{}{}", a.re, sign, mag)
            }
        }
    }

    fn parse_elem(&self, s: &str) -> Result<Gaussian> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let t = compact
            .strip_prefix('(')
            .and_then(|t| t.strip_suffix(')'))
            .unwrap_or(&compact);
        if t.is_empty() {
            return Err(Error::Parse("empty Gaussian rational".into()));
        }
        let Some(body) = t.strip_suffix('i') else {
            return Ok(Gaussian::new(parse_rational(t)?, BigRational::zero()));
        };
        let split = body
            .char_indices()
            .filter(|&(k, c)| k > 0 && (c == '+' || c == '-'))
            .map(|(k, _)| k)
            .next_back();
        let (re, im) = match split {
            Some(k) => (parse_rational(&body[..k])?, &body[k..]),
            None => (BigRational::zero(), body),
        };
        let im = match im {
            "" | "+" => BigRational::one(),
            "-" => -BigRational::one(),
            other => parse_rational(other.strip_suffix('*').unwrap_or(other))?,
        };
        Ok(Gaussian::new(re, im))
    }

    fn prime_basis(&self) -> Vec<Gaussian> {
        vec![self.one(), Gaussian::from_ints(0, 1)]
    }

    fn prime_coordinates(&self, a: &Gaussian) -> Vec<Gaussian> {
        vec![
            Gaussian::new(a.re.clone(), BigRational::zero()),
            Gaussian::new(a.im.clone(), BigRational::zero()),
        ]
    }

    fn conjugate(&self, a: &Gaussian) -> Option<Gaussian> {
        Some(Gaussian::new(a.re.clone(), -&a.im))
    }
}
