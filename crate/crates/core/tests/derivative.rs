mod common;

use std::collections::BTreeMap;

use common::*;
use proptest::prelude::*;
use skew_core::derivative::{
    chain_values, chain_words, partial, partial_chain, partial_left, partial_right, taylor, taylor_reconstruct,
    TaylorTable,
};
use skew_core::evaldiv::{eval, left_eval, right_eval};
use skew_core::ring::{DivisionRing, Gaussian, GaussianRationals, Quaternion, RationalQuaternions, Twist};
use skew_core::sample::{random_point, random_poly, random_word};
use skew_core::skewpoly::{SkewPoly, Word};
use skew_core::Side;

fn x1x1x2(tw: &Twist<RationalQuaternions>) -> SkewPoly<RationalQuaternions> {
    SkewPoly::monomial(tw, Word(vec![0, 0, 1]), RationalQuaternions.one())
}

fn random_quaternion_point(seed: u64) -> Vec<Quaternion> {
    // Non-commuting coordinates make the order of factors visible.
    let tw = quaternion_id(2);
    let r = tw.ring();
    let a = random_point(&tw, &mut rng(seed));
    if r.mul(&a[0], &a[1]) != r.mul(&a[1], &a[0]) {
        a
    } else {
        vec![Quaternion::from_ints(1, 2, 0, -1), Quaternion::from_ints(0, 1, 3, 1)]
    }
}

#[test]
fn single_partials_of_x1_squared_x2() {
    let tw = quaternion_id(2);
    let r = RationalQuaternions;
    let f = x1x1x2(&tw);
    for seed in 0..20 {
        let a = random_quaternion_point(seed);
        let (a1, a2) = (&a[0], &a[1]);
        // Right: F = (a2 x1 + a2 a1)(x1 - a1) + x1^2 (x2 - a2) + a2 a1^2.
        let d1 = partial_right(&f, &a, 0);
        let want = SkewPoly::from_terms(&tw, [(Word(vec![0]), a2.clone()), (Word::empty(), r.mul(a2, a1))]);
        assert_eq!(d1, want);
        assert_eq!(
            partial_right(&f, &a, 1),
            SkewPoly::monomial(&tw, Word(vec![0, 0]), r.one())
        );
        // Left: F = (x1 - a1)(x1 x2 + a1 x2) + (x2 - a2) a1^2 + a2 a1^2.
        let d1 = partial_left(&f, &a, 0).unwrap();
        let want = SkewPoly::from_terms(&tw, [(Word(vec![0, 1]), r.one()), (Word(vec![1]), a1.clone())]);
        assert_eq!(d1, want);
        assert_eq!(partial_left(&f, &a, 1).unwrap(), SkewPoly::constant(&tw, r.mul(a1, a1)));
        // Values 2 a2 a1 and a1^2 on both sides.
        let two_a2a1 = r.add(&r.mul(a2, a1), &r.mul(a2, a1));
        assert_eq!(right_eval(&partial_right(&f, &a, 0), &a), two_a2a1);
        assert_eq!(left_eval(&partial_left(&f, &a, 0).unwrap(), &a).unwrap(), two_a2a1);
    }
}

#[test]
fn mixed_partials_differ_and_compose_in_the_defined_order() {
    let tw = quaternion_id(2);
    let r = RationalQuaternions;
    let f = x1x1x2(&tw);
    let a = random_quaternion_point(3);
    let two_a1 = r.add(&a[0], &a[0]);
    let x1x2 = Word(vec![0, 1]);
    let x2x1 = Word(vec![1, 0]);
    assert_eq!(partial_chain(&f, &a, &x1x2, Side::Right).unwrap().1, two_a1);
    assert_eq!(partial_chain(&f, &a, &x2x1, Side::Right).unwrap().1, r.zero());
    assert_eq!(partial_chain(&f, &a, &x2x1, Side::Left).unwrap().1, r.zero());
    assert_eq!(partial_chain(&f, &a, &x1x2, Side::Left).unwrap().1, two_a1);
    // Right: Δ^{x1 x2} = Δ^{x1}(Δ^{x2} F).
    let inner = partial_right(&f, &a, 1);
    assert_eq!(
        partial_chain(&f, &a, &x1x2, Side::Right).unwrap().0,
        partial_right(&inner, &a, 0)
    );
    // Left: Δ^{x1 x2}_L = Δ^{x2}_L(Δ^{x1}_L F).
    let inner = partial_left(&f, &a, 0).unwrap();
    assert_eq!(
        partial_chain(&f, &a, &x1x2, Side::Left).unwrap().0,
        partial_left(&inner, &a, 1).unwrap()
    );
}

#[test]
fn constants_have_zero_derivatives() {
    let tw = gaussian_conj_inner(2);
    let c = SkewPoly::constant(&tw, GaussianRationals.parse_elem("3-i").unwrap());
    let a = random_point(&tw, &mut rng(1));
    for side in sides() {
        for m in [Word(vec![0]), Word(vec![1, 0]), Word(vec![1, 1, 0])] {
            assert!(partial_chain(&c, &a, &m, side).unwrap().0.is_zero());
        }
        let (p, v) = partial_chain(&c, &a, &Word::empty(), side).unwrap();
        assert_eq!((p, v), (c.clone(), GaussianRationals.parse_elem("3-i").unwrap()));
    }
}

#[test]
fn second_derivative_of_the_hermite_example() {
    let tw = gaussian_conj(1);
    let r = GaussianRationals;
    let f = SkewPoly::parse(&tw, "(3+i) * x^4 - (4+2i) * x^3 - (8-3i) * x^2 + (5+2i) * x + 5-5i").unwrap();
    let i = r.parse_elem("i").unwrap();
    let x2 = Word(vec![0, 0]);
    assert_eq!(
        partial_chain(&f, std::slice::from_ref(&i), &x2, Side::Right).unwrap().1,
        i
    );
    assert_eq!(
        chain_values(&f, std::slice::from_ref(&i), &x2, Side::Right).unwrap(),
        vec![r.zero(), r.one(), i.clone()]
    );
    let one_i = r.parse_elem("1+i").unwrap();
    assert_eq!(
        chain_values(&f, &[one_i], &Word(vec![0]), Side::Right).unwrap(),
        vec![r.zero(), r.one()]
    );

    let g = SkewPoly::parse(&tw, "(3+i) * x^4 - (4-2i) * x^3 - (8-3i) * x^2 + (5-2i) * x + 5-5i").unwrap();
    assert_eq!(
        chain_values(&g, std::slice::from_ref(&i), &x2, Side::Left).unwrap(),
        vec![r.zero(), r.one(), i]
    );
}

#[test]
fn chain_words_are_suffixes_on_the_right_and_prefixes_on_the_left() {
    let m = Word::from_one_based(&[2, 1, 1]);
    let right: Vec<String> = chain_words(&m, Side::Right).iter().map(|w| w.to_string()).collect();
    let left: Vec<String> = chain_words(&m, Side::Left).iter().map(|w| w.to_string()).collect();
    assert_eq!(right, ["o", "x1", "x1 x1", "x2 x1 x1"]);
    assert_eq!(left, ["o", "x2", "x2 x1", "x2 x1 x1"]);
}

#[test]
fn degree_two_taylor_witness() {
    let tw = gaussian_conj_inner(2);
    let r = GaussianRationals;
    let a = vec![r.parse_elem("1-i").unwrap(), r.parse_elem("2").unwrap()];
    let vals: Vec<Gaussian> = ["1", "i", "2-i", "1/2", "-3"]
        .iter()
        .map(|s| r.parse_elem(s).unwrap())
        .collect();
    let words = [
        Word::empty(),
        Word(vec![0]),
        Word(vec![1]),
        Word(vec![0, 0]),
        Word(vec![0, 1]),
    ];
    let l = |i: usize| SkewPoly::linear(&tw, i, &a[i]);
    let products = [SkewPoly::one(&tw), l(0), l(1), &l(0) * &l(0), &l(0) * &l(1)];
    for side in sides() {
        let entries: BTreeMap<Word, Gaussian> = words.iter().cloned().zip(vals.iter().cloned()).collect();
        let table = TaylorTable {
            twist: tw.clone(),
            center: a.clone(),
            side,
            entries,
        };
        let mut want = SkewPoly::zero(&tw);
        for (p, c) in products.iter().zip(&vals) {
            want = &want
                + &match side {
                    Side::Right => p.scalar_left_mul(c),
                    Side::Left => p.scalar_right_mul(c),
                };
        }
        let got = taylor_reconstruct(&table);
        assert_eq!(got, want);
        // The rebuilt polynomial has exactly these derivative values.
        let back = taylor(&got, &a, side).unwrap();
        for (w, c) in words.iter().zip(&vals) {
            assert_eq!(&back.entries[w], c, "{side} {w}");
        }
    }
}

#[test]
fn taylor_tables_cover_all_words() {
    let tw = gf49_frobenius(2);
    let f = SkewPoly::var(&tw, 1).pow(3);
    let a = random_point(&tw, &mut rng(4));
    let table = taylor(&f, &a, Side::Right).unwrap();
    assert_eq!(table.entries.len(), 1 + 2 + 4 + 8);
    assert_eq!(table.entries[&Word::empty()], right_eval(&f, &a));
    let c = SkewPoly::constant(&tw, tw.ring().gen_pow(5));
    let t = taylor(&c, &a, Side::Left).unwrap();
    assert_eq!(t.entries.len(), 1);
    assert_eq!(taylor_reconstruct(&t), c);
}

/// `Δ^m(FG) = F Δ^m G + Σ_{k=1}^{s} Δ^{x_{i1}⋯x_{ik}}(F · Δ^{x_{i(k+1)}⋯x_{is}}G(a))`.
fn right_product_formula<R: DivisionRing>(f: &SkewPoly<R>, g: &SkewPoly<R>, a: &[R::Elem], m: &Word) -> bool {
    let tw = f.twist();
    let s = m.deg();
    let lhs = partial_chain(&(f * g), a, m, Side::Right).unwrap().0;
    let mut rhs = f * &partial_chain(g, a, m, Side::Right).unwrap().0;
    for k in 1..=s {
        let tail = Word(m.0[k..].to_vec());
        let head = m.prefix(k);
        let value = partial_chain(g, a, &tail, Side::Right).unwrap().1;
        let inner = f * &SkewPoly::constant(tw, value);
        rhs = &rhs + &partial_chain(&inner, a, &head, Side::Right).unwrap().0;
    }
    lhs == rhs
}

/// The left mirror, with the chain applied from its first letter:
/// `Δ^m_L(FG) = (Δ^m_L F) G + Σ_{k=0}^{s-1} Δ^{x_{i(k+1)}⋯x_{is}}_L((Δ^{x_{i1}⋯x_{ik}}_L F)_L(a) · G)`.
fn left_product_formula<R: DivisionRing>(f: &SkewPoly<R>, g: &SkewPoly<R>, a: &[R::Elem], m: &Word) -> bool {
    let tw = f.twist();
    let s = m.deg();
    let lhs = partial_chain(&(f * g), a, m, Side::Left).unwrap().0;
    let mut rhs = &partial_chain(f, a, m, Side::Left).unwrap().0 * g;
    for k in 0..s {
        let head = m.prefix(k);
        let tail = Word(m.0[k..].to_vec());
        let value = partial_chain(f, a, &head, Side::Left).unwrap().1;
        let inner = &SkewPoly::constant(tw, value) * g;
        rhs = &rhs + &partial_chain(&inner, a, &tail, Side::Left).unwrap().0;
    }
    lhs == rhs
}

fn derivative_properties<R: DivisionRing>(tw: &Twist<R>, seed: u64) -> Result<(), TestCaseError> {
    let mut g = rng(seed);
    let r = tw.ring();
    let f = random_poly(tw, &mut g, 3, 4);
    let h = random_poly(tw, &mut g, 3, 4);
    let a = random_point(tw, &mut g);
    let m = random_word(tw.n(), &mut g, 3);
    let lambda = r.sample(&mut g);
    // Linearity on each side.
    let lhs = partial_chain(&(&f.scalar_left_mul(&lambda) + &h), &a, &m, Side::Right)
        .unwrap()
        .0;
    let rhs = &partial_chain(&f, &a, &m, Side::Right)
        .unwrap()
        .0
        .scalar_left_mul(&lambda)
        + &partial_chain(&h, &a, &m, Side::Right).unwrap().0;
    prop_assert_eq!(lhs, rhs);
    let lhs = partial_chain(&(&f.scalar_right_mul(&lambda) + &h), &a, &m, Side::Left)
        .unwrap()
        .0;
    let rhs = &partial_chain(&f, &a, &m, Side::Left)
        .unwrap()
        .0
        .scalar_right_mul(&lambda)
        + &partial_chain(&h, &a, &m, Side::Left).unwrap().0;
    prop_assert_eq!(lhs, rhs);
    prop_assert!(
        right_product_formula(&f, &h, &a, &m),
        "right product formula, m = {}",
        m
    );
    prop_assert!(left_product_formula(&f, &h, &a, &m), "left product formula, m = {}", m);
    // Chain values agree with the explicit chain derivatives.
    for side in sides() {
        let vals = chain_values(&f, &a, &m, side).unwrap();
        for (w, v) in chain_words(&m, side).iter().zip(&vals) {
            prop_assert_eq!(&partial_chain(&f, &a, w, side).unwrap().1, v);
        }
        prop_assert_eq!(&vals[0], &eval(&f, &a, side).unwrap());
    }
    Ok(())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn linearity_and_product_formulas(seed in any::<u64>()) {
        derivative_properties(&gf49_frobenius_inner(2), seed)?;
        derivative_properties(&gaussian_conj_inner(1), seed)?;
        derivative_properties(&quaternion_inner(2), seed)?;
        derivative_properties(&gf9_plugin(true), seed)?;
    }

    #[test]
    fn classical_leibniz_rule(seed in any::<u64>()) {
        let tw = skew_core::ring::TwistConfig::identity(gf49(), 2);
        let r = tw.ring();
        let mut g = rng(seed);
        let f = random_poly(&tw, &mut g, 3, 4);
        let h = random_poly(&tw, &mut g, 3, 4);
        let a = random_point(&tw, &mut g);
        for i in 0..2 {
            for side in sides() {
                let d = |p: &SkewPoly<_>| eval(&partial(p, &a, i, side).unwrap(), &a, side).unwrap();
                let v = |p: &SkewPoly<_>| eval(p, &a, side).unwrap();
                let want = r.add(&r.mul(&v(&f), &d(&h)), &r.mul(&d(&f), &v(&h)));
                prop_assert_eq!(d(&(&f * &h)), want);
            }
        }
    }

    #[test]
    fn taylor_round_trip_over_gf9(seed in any::<u64>()) {
        let tw = skew_core::ring::TwistConfig::diagonal(
            gf9(),
            vec![skew_core::ring::Automorphism::Frobenius(1); 2],
            skew_core::ring::Delta::Inner(vec![gf9().generator(), gf9().one()]),
        ).unwrap();
        let mut g = rng(seed);
        let f = random_poly(&tw, &mut g, 4, 8);
        let a = random_point(&tw, &mut g);
        for side in sides() {
            let table = taylor(&f, &a, side).unwrap();
            prop_assert_eq!(&table.entries[&Word::empty()], &eval(&f, &a, side).unwrap());
            prop_assert_eq!(taylor_reconstruct(&table), f.clone());
        }
    }
}
