//! Exact arithmetic in free multivariate skew polynomial rings `F[x; σ, δ]`
//! over division rings, with right and left evaluation, `(σ,δ)`-partial
//! derivatives and Hermite-type interpolation.
//!
//! Polynomials are stored in the left-coefficient normal form
//! `F = Σ F_m m`, where `m` runs over words in `x1, …, xn`, and products are
//! computed by rewriting `x_i a = Σ_j σ_ij(a) x_j + δ_i(a)`.
//!
//! ```
//! use skew_core::ring::{Automorphism, Delta, GaussianRationals, TwistConfig};
//! use skew_core::skewpoly::SkewPoly;
//!
//! let twist = TwistConfig::diagonal(
//!     GaussianRationals,
//!     vec![Automorphism::Conjugation],
//!     Delta::Zero,
//! )
//! .unwrap();
//! let f = SkewPoly::parse(&twist, "x + i").unwrap();
//! assert_eq!((&f * &f).to_string(), "1 * x1 x1 + -1");
//! ```

pub mod derivative;
pub mod dlinalg;
pub mod error;
pub mod evaldiv;
pub mod interp;
pub mod ring;
pub mod sample;
pub mod skewpoly;

pub use error::{Error, Result};

/// Which side the divisors `x_i - a_i` (and hence the evaluation) sit on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    Right,
    Left,
}

impl Side {
    pub fn name(self) -> &'static str {
        match self {
            Side::Right => "right",
            Side::Left => "left",
        }
    }
}

impl std::fmt::Display for Side {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for Side {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "right" => Ok(Side::Right),
            "left" => Ok(Side::Left),
            _ => Err(Error::Parse(format!("unknown side `{s}`"))),
        }
    }
}
