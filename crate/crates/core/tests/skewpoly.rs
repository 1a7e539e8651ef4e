mod common;

use std::cmp::Ordering;

use common::*;
use proptest::prelude::*;
use skew_core::ring::{DivisionRing, GaussianRationals, Quaternion, RationalQuaternions, Twist, TwistConfig};
use skew_core::sample::{random_nonzero_poly, random_poly};
use skew_core::skewpoly::{Degree, MonomialOrder, SkewPoly, Word};
use skew_core::Error;

fn gi(s: &str) -> skew_core::ring::Gaussian {
    GaussianRationals.parse_elem(s).unwrap()
}

#[test]
fn addition_fixtures() {
    let tw = gaussian_conj(1);
    let a = SkewPoly::parse(&tw, "x + i").unwrap();
    let b = SkewPoly::parse(&tw, "x - i").unwrap();
    assert_eq!(&a + &b, SkewPoly::monomial(&tw, Word(vec![0]), gi("2")));
    assert!((&a + &(-&a)).is_zero());
    assert_eq!(&a + &SkewPoly::zero(&tw), a);
}

#[test]
fn multiplication_fixtures() {
    let tw = gaussian_conj(1);
    let a = SkewPoly::parse(&tw, "x + i").unwrap();
    assert_eq!(&a * &a, SkewPoly::parse(&tw, "x^2 - 1").unwrap());
    assert_eq!((&a * &a).to_string(), "1 * x1 x1 + -1");
    assert_eq!(&SkewPoly::one(&tw) * &a, a);
    // x i = -i x.
    let x = SkewPoly::var(&tw, 0);
    assert_eq!(
        x.scalar_right_mul(&gi("i")),
        SkewPoly::monomial(&tw, Word(vec![0]), gi("-i"))
    );
    // Over quaternions with σ = Id constants commute with the variables.
    let tq = quaternion_id(2);
    let j = Quaternion::j();
    let x1 = SkewPoly::var(&tq, 0);
    assert_eq!(
        &x1 * &SkewPoly::constant(&tq, j.clone()),
        SkewPoly::monomial(&tq, Word(vec![0]), j)
    );
}

#[test]
fn twist_mismatch_is_an_error() {
    let a = SkewPoly::var(&gaussian_conj(1), 0);
    let b = SkewPoly::var(&gaussian_conj(1), 0);
    assert!(matches!(a.checked_add(&b), Err(Error::TwistMismatch)));
    assert!(matches!(a.checked_mul(&b), Err(Error::TwistMismatch)));
    assert!(a.checked_mul(&a).is_ok());
}

#[test]
fn leading_terms() {
    let tw = quaternion_id(2);
    let f = SkewPoly::parse(&tw, "x1^2 x2 + x1").unwrap();
    for order in [MonomialOrder::RightToLeft, MonomialOrder::LeftToRight] {
        assert_eq!(f.leading_monomial(order).unwrap(), Word(vec![0, 0, 1]));
    }
    let c = SkewPoly::constant(&tw, Quaternion::k());
    assert_eq!(
        c.leading_term(MonomialOrder::RightToLeft).unwrap(),
        (Word::empty(), Quaternion::k())
    );
    assert!(matches!(
        SkewPoly::zero(&tw).leading_term(MonomialOrder::RightToLeft),
        Err(Error::ZeroPolynomial)
    ));
    assert_eq!(SkewPoly::zero(&tw).degree(), Degree::NegInf);
    // Ties at equal degree: x1 x2 against x2 x1.
    let g = SkewPoly::parse(&tw, "x1 x2 + x2 x1").unwrap();
    assert_eq!(
        g.leading_monomial(MonomialOrder::RightToLeft).unwrap(),
        Word(vec![0, 1])
    );
    assert_eq!(
        g.leading_monomial(MonomialOrder::LeftToRight).unwrap(),
        Word(vec![1, 0])
    );
}

/// Independent comparator: degree first, then the letters read from the
/// chosen end as digits of a base-n number, the higher index winning.
fn brute_key(w: &Word, n: usize, order: MonomialOrder) -> (usize, usize) {
    let letters: Vec<usize> = match order {
        MonomialOrder::RightToLeft => w.letters().iter().rev().copied().collect(),
        MonomialOrder::LeftToRight => w.letters().to_vec(),
    };
    (w.deg(), letters.iter().fold(0, |acc, &l| acc * n + l))
}

#[test]
fn monomial_orders_match_a_brute_force_comparator() {
    let n = 2;
    let words: Vec<Word> = (0..=3).flat_map(|d| Word::all_of_degree(n, d)).collect();
    for order in [MonomialOrder::RightToLeft, MonomialOrder::LeftToRight] {
        for a in &words {
            for b in &words {
                let want = brute_key(a, n, order).cmp(&brute_key(b, n, order));
                assert_eq!(order.cmp(a, b), want, "{order:?}: {a} vs {b}");
            }
        }
        let listed = Word::all_below(n, 4, order);
        assert_eq!(listed.len(), words.len());
        assert!(listed.windows(2).all(|p| order.cmp(&p[0], &p[1]) == Ordering::Less));
    }
}

#[test]
fn right_coefficient_fixtures() {
    let tw = quaternion_id(1);
    let f = SkewPoly::parse(&tw, "j * x1 x1 + k * x1 + i").unwrap();
    assert_eq!(f.to_right_coefficients().unwrap(), f.terms().clone());
    // i x = x (-i) under conjugation.
    let tw = gaussian_conj(1);
    let f = SkewPoly::monomial(&tw, Word(vec![0]), gi("i"));
    let right = f.to_right_coefficients().unwrap();
    assert_eq!(right.into_iter().collect::<Vec<_>>(), vec![(Word(vec![0]), gi("-i"))]);
}

#[test]
fn text_forms() {
    let tq = quaternion_id(2);
    let f = SkewPoly::parse(&tq, "i * x2 x1 - 1/2 * x1 + q(1,0,2,0)").unwrap();
    assert_eq!(f.to_string(), "q(0,1,0,0) * x2 x1 + q(-1/2,0,0,0) * x1 + q(1,0,2,0)");
    let tg = gf49_frobenius(1);
    let g = SkewPoly::parse(&tg, "g^5 * x^2 + 3").unwrap();
    assert_eq!(
        g.to_string(),
        format!("g^5 * x1 x1 + {}", tg.ring().format_elem(&tg.ring().from_i64(3)))
    );
    assert_eq!(SkewPoly::zero(&tg).to_string(), "0");
    for bad in ["", "x3", "x1 +", "* x1", "2 * y"] {
        assert!(SkewPoly::parse(&tq, bad).is_err(), "{bad:?}");
    }
    assert!(SkewPoly::parse(&tq, "x").is_err());
}

fn ring_laws<R: DivisionRing>(tw: &Twist<R>, seed: u64) -> Result<(), TestCaseError> {
    let mut g = rng(seed);
    let r = tw.ring();
    let (a, b, c) = (
        random_poly(tw, &mut g, 4, 4),
        random_poly(tw, &mut g, 4, 4),
        random_poly(tw, &mut g, 2, 3),
    );
    prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
    prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
    prop_assert_eq!(&(&a + &b) * &c, &(&a * &c) + &(&b * &c));
    prop_assert_eq!(&SkewPoly::one(tw) * &a, a.clone());
    prop_assert_eq!(&a * &SkewPoly::one(tw), a.clone());
    prop_assert!((&a + &b).degree() <= a.degree().max(b.degree()));
    let (lambda, mu) = (r.sample(&mut g), r.sample(&mut g));
    prop_assert_eq!(
        a.scalar_left_mul(&mu).scalar_left_mul(&lambda),
        a.scalar_left_mul(&r.mul(&lambda, &mu))
    );
    prop_assert_eq!(
        a.scalar_right_mul(&lambda),
        &a * &SkewPoly::constant(tw, lambda.clone())
    );
    // Canonical text round trip.
    prop_assert_eq!(SkewPoly::parse(tw, &a.to_string()).unwrap(), a.clone());
    // Right coefficients round trip.
    let right = a.to_right_coefficients().unwrap();
    prop_assert_eq!(SkewPoly::from_right_coefficients(tw, &right), a.clone());
    // Degrees add for diagonal automorphisms.
    if tw.is_diagonal() {
        let f = random_nonzero_poly(tw, &mut g, 3, 3);
        let h = random_nonzero_poly(tw, &mut g, 3, 3);
        let (df, dh) = (f.degree().finite().unwrap(), h.degree().finite().unwrap());
        prop_assert_eq!((&f * &h).degree(), Degree::Finite(df + dh));
    }
    Ok(())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn polynomial_ring_laws(seed in any::<u64>()) {
        ring_laws(&gf49_frobenius_inner(2), seed)?;
        ring_laws(&gaussian_conj_inner(2), seed)?;
        ring_laws(&quaternion_inner(2), seed)?;
        ring_laws(&gf9_plugin(true), seed)?;
        ring_laws(&TwistConfig::identity(skew_core::ring::Rationals, 1), seed)?;
    }

    #[test]
    fn power_matches_repeated_products(seed in any::<u64>(), e in 0u32..5) {
        let tw = quaternion_inner(1);
        let f = random_poly(&tw, &mut rng(seed), 2, 3);
        let mut want = SkewPoly::one(&tw);
        for _ in 0..e {
            want = &want * &f;
        }
        prop_assert_eq!(f.pow(e), want);
    }
}

#[test]
fn rational_quaternion_units_have_the_expected_text() {
    let r = RationalQuaternions;
    assert_eq!(r.format_elem(&Quaternion::i()), "q(0,1,0,0)");
}
