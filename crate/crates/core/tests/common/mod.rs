//! Shared fixtures for the integration tests.
#![allow(dead_code)]

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use skew_core::interp::ConstraintSpec;
use skew_core::ring::{
    Automorphism, Delta, DivisionRing, GaloisField, GaussianRationals, Quaternion, RationalQuaternions, Twist,
    TwistConfig,
};
use skew_core::sample::random_point;
use skew_core::skewpoly::Word;
use skew_core::Side;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn gf49() -> GaloisField {
    GaloisField::new(7, 2).unwrap()
}

pub fn gf9() -> GaloisField {
    GaloisField::new(3, 2).unwrap()
}

/// `GF(49)` with both variables twisted by Frobenius.
pub fn gf49_frobenius(n: usize) -> Twist<GaloisField> {
    TwistConfig::diagonal(gf49(), vec![Automorphism::Frobenius(1); n], Delta::Zero).unwrap()
}

/// `GF(49)`, Frobenius on every variable and the inner derivation of `v`.
pub fn gf49_frobenius_inner(n: usize) -> Twist<GaloisField> {
    let f = gf49();
    let v = (0..n).map(|i| f.gen_pow(3 + 5 * i as u64)).collect();
    TwistConfig::diagonal(f, vec![Automorphism::Frobenius(1); n], Delta::Inner(v)).unwrap()
}

/// `Q(i)` with complex conjugation on every variable.
pub fn gaussian_conj(n: usize) -> Twist<GaussianRationals> {
    TwistConfig::diagonal(GaussianRationals, vec![Automorphism::Conjugation; n], Delta::Zero).unwrap()
}

/// `Q(i)`, conjugation and an inner derivation.
pub fn gaussian_conj_inner(n: usize) -> Twist<GaussianRationals> {
    let r = GaussianRationals;
    let v = (0..n)
        .map(|i| r.parse_elem(if i == 0 { "1+2i" } else { "-1/2+i" }).unwrap())
        .collect();
    TwistConfig::diagonal(r, vec![Automorphism::Conjugation; n], Delta::Inner(v)).unwrap()
}

/// Rational quaternions with `σ = Id`, `δ = 0`.
pub fn quaternion_id(n: usize) -> Twist<RationalQuaternions> {
    TwistConfig::identity(RationalQuaternions, n)
}

/// Rational quaternions, conjugation by `1 + j` and the inner derivation of `k`.
pub fn quaternion_inner(n: usize) -> Twist<RationalQuaternions> {
    let r = RationalQuaternions;
    let auto = Automorphism::inner(&r, Quaternion::from_ints(1, 0, 1, 0)).unwrap();
    let v = vec![Quaternion::k(); n];
    TwistConfig::diagonal(r, vec![auto; n], Delta::Inner(v)).unwrap()
}

pub fn sides() -> [Side; 2] {
    [Side::Right, Side::Left]
}

/// A random constraint spec with `k` distinct points and chain degrees at
/// most `max_chain`.
pub fn random_spec<R: DivisionRing, G: Rng + ?Sized>(
    tw: &Twist<R>,
    rng: &mut G,
    k: usize,
    max_chain: usize,
    side: Side,
) -> ConstraintSpec<R> {
    let mut points: Vec<Vec<R::Elem>> = Vec::with_capacity(k);
    while points.len() < k {
        let a = random_point(tw, rng);
        if !points.contains(&a) {
            points.push(a);
        }
    }
    let chains = (0..k)
        .map(|_| {
            let d = rng.random_range(0..=max_chain);
            Word((0..d).map(|_| rng.random_range(0..tw.n())).collect())
        })
        .collect();
    ConstraintSpec::new(tw, points, chains, side).unwrap()
}

/// A non-diagonal twist over `GF(9)` with two variables:
/// `σ(a) = P diag(a, a^3) P^{-1}` for `P = [[1, 1], [0, 1]]`, so
/// `σ(a) = [[a, a^3 - a], [0, a^3]]`, with the inner derivation of `(g, 1)`.
/// With `phi_inverse` the inverse of `φ` is tabulated by brute force.
pub fn gf9_plugin(with_phi_inverse: bool) -> Twist<GaloisField> {
    use skew_core::ring::Sigma;
    use std::sync::Arc;
    let f = gf9();
    let fs = f.clone();
    let map: skew_core::ring::SigmaFn<_> = Arc::new(move |a| {
        let a3 = fs.frobenius(a, 1).unwrap();
        vec![vec![*a, fs.sub(&a3, a)], vec![fs.zero(), a3]]
    });
    let phi_inverse = with_phi_inverse.then(|| {
        let mut table = std::collections::HashMap::new();
        let elems: Vec<_> = f.elements().collect();
        for g0 in &elems {
            for g1 in &elems {
                let s0 = map(g0);
                let s1 = map(g1);
                // φ(γ)_i = Σ_j σ_ji(γ_j).
                let image = vec![f.add(&s0[0][0], &s1[1][0]), f.add(&s0[0][1], &s1[1][1])];
                table.insert(image, vec![*g0, *g1]);
            }
        }
        assert_eq!(table.len(), elems.len() * elems.len(), "φ must be bijective");
        let inv: skew_core::ring::PhiInverseFn<_> = Arc::new(move |g: &[_]| table[g].clone());
        inv
    });
    let v = vec![f.generator(), f.one()];
    TwistConfig::new(f, 2, Sigma::Plugin { map, phi_inverse }, Delta::Inner(v)).unwrap()
}
