mod common;

use common::*;
use proptest::prelude::*;
use skew_core::dlinalg::{
    left_row_rank, rank, right_col_rank, row_times, solve_col_system, solve_row_system, times_col, Matrix,
};
use skew_core::ring::{DivisionRing, Quaternion, RationalQuaternions};
use skew_core::Side;

fn q(w: i64, x: i64, y: i64, z: i64) -> Quaternion {
    Quaternion::from_ints(w, x, y, z)
}

#[test]
fn identity_systems_return_the_right_hand_side() {
    let r = RationalQuaternions;
    let id = Matrix::identity(&r, 3);
    let b = vec![Quaternion::i(), q(1, 2, 3, 4), Quaternion::k()];
    assert_eq!(solve_row_system(&r, &id, &b).particular.unwrap(), b);
    assert_eq!(solve_col_system(&r, &id, &b).particular.unwrap(), b);
    assert_eq!(rank(&r, &id, Side::Right), 3);
}

#[test]
fn quaternion_systems_respect_the_side() {
    let r = RationalQuaternions;
    // z · [[i], [j]] = [k], i.e. z1 i + z2 j = k.
    let a = Matrix::from_rows(vec![vec![Quaternion::i()], vec![Quaternion::j()]]);
    let sol = solve_row_system(&r, &a, &[Quaternion::k()]);
    let z = sol.particular.unwrap();
    assert_eq!(row_times(&r, &z, &a), vec![Quaternion::k()]);
    assert_eq!(sol.nullspace.len(), 1);
    assert_eq!(row_times(&r, &sol.nullspace[0], &a), vec![r.zero()]);
    // z = (0, i) is one solution since i j = k.
    assert_eq!(row_times(&r, &[r.zero(), Quaternion::i()], &a), vec![Quaternion::k()]);

    // [i j] · z = k, solved for example by z = (0, -i) because j(-i) = k.
    let a = Matrix::from_rows(vec![vec![Quaternion::i(), Quaternion::j()]]);
    let sol = solve_col_system(&r, &a, &[Quaternion::k()]);
    assert_eq!(times_col(&r, &a, &sol.particular.unwrap()), vec![Quaternion::k()]);
    assert_eq!(
        times_col(&r, &a, &[r.zero(), r.neg(&Quaternion::i())]),
        vec![Quaternion::k()]
    );
}

#[test]
fn planted_noncommutativity() {
    // z · [[1, j]] = [i, k]: from the first column z = i, and then i j = k.
    // Multiplying on the wrong side would give j i = -k and no solution.
    let r = RationalQuaternions;
    let a = Matrix::from_rows(vec![vec![r.one(), Quaternion::j()]]);
    let z = solve_row_system(&r, &a, &[Quaternion::i(), Quaternion::k()])
        .particular
        .unwrap();
    assert_eq!(z, vec![Quaternion::i()]);
    assert!(solve_row_system(&r, &a, &[Quaternion::i(), r.neg(&Quaternion::k())])
        .particular
        .is_none());
    // Mirror: [[1], [j]] · z = [i, -k] has z = i since j i = -k.
    let a = a.transpose();
    let z = solve_col_system(&r, &a, &[Quaternion::i(), r.neg(&Quaternion::k())])
        .particular
        .unwrap();
    assert_eq!(z, vec![Quaternion::i()]);
    assert!(solve_col_system(&r, &a, &[Quaternion::i(), Quaternion::k()])
        .particular
        .is_none());
}

#[test]
fn inconsistent_systems_have_no_solution() {
    let r = RationalQuaternions;
    let zero = Matrix::filled(2, 2, r.zero());
    let b = vec![r.one(), r.zero()];
    assert!(solve_row_system(&r, &zero, &b).particular.is_none());
    assert!(solve_col_system(&r, &zero, &b).particular.is_none());
}

#[test]
fn scaled_rows_have_rank_one() {
    let r = RationalQuaternions;
    let row = vec![Quaternion::i(), q(1, 0, 2, 0), Quaternion::k()];
    let lambda = q(0, 1, 1, 0);
    let scaled: Vec<_> = row.iter().map(|x| r.mul(&lambda, x)).collect();
    let a = Matrix::from_rows(vec![row, scaled]);
    assert_eq!(left_row_rank(&r, &a), 1);
    assert_eq!(right_col_rank(&r, &a), 1);
}

fn random_matrix<R: DivisionRing>(r: &R, g: &mut impl rand::Rng, rows: usize, cols: usize) -> Matrix<R::Elem> {
    // Sparse entries make rank deficiency common.
    let data = (0..rows * cols)
        .map(|_| if g.random_bool(0.4) { r.zero() } else { r.sample(g) })
        .collect();
    Matrix::new(rows, cols, data)
}

fn solver_properties<R: DivisionRing>(r: &R, seed: u64) -> Result<(), TestCaseError> {
    let mut g = rng(seed);
    let rows = rand::Rng::random_range(&mut g, 1..=4);
    let cols = rand::Rng::random_range(&mut g, 1..=5);
    let a = random_matrix(r, &mut g, rows, cols);
    // z · A = b with b in the row space, and an arbitrary b.
    let z0: Vec<_> = (0..rows).map(|_| r.sample(&mut g)).collect();
    let b = row_times(r, &z0, &a);
    let sol = solve_row_system(r, &a, &b);
    let z = sol.particular.clone().expect("b lies in the row space");
    prop_assert_eq!(row_times(r, &z, &a), b);
    for v in &sol.nullspace {
        prop_assert!(row_times(r, v, &a).iter().all(|x| r.is_zero(x)));
    }
    prop_assert_eq!(sol.rank + sol.nullspace.len(), rows);
    prop_assert_eq!(sol.rank, left_row_rank(r, &a));
    let null = Matrix::from_rows(sol.nullspace.clone());
    if !sol.nullspace.is_empty() {
        prop_assert_eq!(left_row_rank(r, &null), sol.nullspace.len());
    }
    // A · z = b.
    let z0: Vec<_> = (0..cols).map(|_| r.sample(&mut g)).collect();
    let b = times_col(r, &a, &z0);
    let sol = solve_col_system(r, &a, &b);
    prop_assert_eq!(times_col(r, &a, &sol.particular.clone().unwrap()), b);
    for v in &sol.nullspace {
        prop_assert!(times_col(r, &a, v).iter().all(|x| r.is_zero(x)));
    }
    prop_assert_eq!(sol.rank + sol.nullspace.len(), cols);
    // Left row rank equals right column rank.
    prop_assert_eq!(left_row_rank(r, &a), right_col_rank(r, &a));
    // Any reported solution of an arbitrary system is exact.
    let b: Vec<_> = (0..cols).map(|_| r.sample(&mut g)).collect();
    if let Some(z) = solve_row_system(r, &a, &b).particular {
        prop_assert_eq!(row_times(r, &z, &a), b);
    }
    Ok(())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn solvers_are_exact(seed in any::<u64>()) {
        solver_properties(&RationalQuaternions, seed)?;
        solver_properties(&gf49(), seed)?;
        solver_properties(gaussian_conj(1).ring(), seed)?;
    }

    #[test]
    fn transpose_duality_over_gf49(seed in any::<u64>()) {
        let f = gf49();
        let a = random_matrix(&f, &mut rng(seed), 4, 6);
        let t = a.transpose();
        prop_assert_eq!(rank(&f, &a, Side::Right), rank(&f, &t, Side::Left));
        prop_assert_eq!(rank(&f, &a, Side::Left), rank(&f, &t, Side::Right));
    }
}
