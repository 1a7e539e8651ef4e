//! Seeded random generators for polynomials, points and twists.

use rand::Rng;

use crate::ring::{DivisionRing, Twist};
use crate::skewpoly::{SkewPoly, Word};

/// A random polynomial of degree `≤ max_deg` with at most `max_terms`
/// terms.
pub fn random_poly<R: DivisionRing, G: Rng + ?Sized>(
    twist: &Twist<R>,
    rng: &mut G,
    max_deg: usize,
    max_terms: usize,
) -> SkewPoly<R> {
    let r = twist.ring();
    let count = rng.random_range(0..=max_terms);
    let terms: Vec<(Word, R::Elem)> = (0..count)
        .map(|_| (random_word(twist.n(), rng, max_deg), r.sample(rng)))
        .collect();
    SkewPoly::from_terms(twist, terms)
}

pub fn random_nonzero_poly<R: DivisionRing, G: Rng + ?Sized>(
    twist: &Twist<R>,
    rng: &mut G,
    max_deg: usize,
    max_terms: usize,
) -> SkewPoly<R> {
    loop {
        let p = random_poly(twist, rng, max_deg, max_terms.max(1));
        if !p.is_zero() {
            return p;
        }
    }
}

/// A random word of length `≤ max_deg`.
pub fn random_word<G: Rng + ?Sized>(n: usize, rng: &mut G, max_deg: usize) -> Word {
    let d = rng.random_range(0..=max_deg);
    Word((0..d).map(|_| rng.random_range(0..n)).collect())
}

pub fn random_point<R: DivisionRing, G: Rng + ?Sized>(twist: &Twist<R>, rng: &mut G) -> Vec<R::Elem> {
    (0..twist.n()).map(|_| twist.ring().sample(rng)).collect()
}
