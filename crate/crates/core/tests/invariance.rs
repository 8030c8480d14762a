//! Verdicts do not depend on the choice of basis.

use moufang::algebra::commutator_algebra;
use moufang::axioms::{check_jacobi, check_maltsev};
use moufang::linalg::inverse;
use moufang::triality::{check_maurer_cartan, check_reductivity, check_triality_decomposition};
use moufang::yamaguti::check_sagle_yamaguti;
use moufang::{pair_from_alternative, AnticommAlgebra, Bilinear, BinaryAlgebra, Matrix};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn random_invertible(n: usize, seed: u64) -> Matrix {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    loop {
        let rows: Vec<Vec<i64>> = (0..n)
            .map(|_| (0..n).map(|_| rng.gen_range(-2..=2)).collect())
            .collect();
        let refs: Vec<&[i64]> = rows.iter().map(Vec::as_slice).collect();
        let q = Matrix::from_int_rows(&refs).unwrap();
        if inverse(&q).is_ok() {
            return q;
        }
    }
}

fn gamma_corpus() -> Vec<(&'static str, AnticommAlgebra)> {
    vec![
        ("lie-cross", moufang::fixtures::lie_cross()),
        (
            "quaternions",
            commutator_algebra(&BinaryAlgebra::quaternions()).unwrap(),
        ),
        (
            "octonions",
            commutator_algebra(&BinaryAlgebra::octonions()).unwrap(),
        ),
        ("random", moufang::fixtures::random_anticomm(3)),
    ]
}

#[test]
fn algebra_verdicts_survive_basis_change() {
    for (seed, (name, g)) in gamma_corpus().into_iter().enumerate() {
        let q = random_invertible(g.dim(), seed as u64);
        let h = g.change_basis(&q).unwrap();
        assert_eq!(
            check_maltsev(&g).verdict(),
            check_maltsev(&h).verdict(),
            "{name}"
        );
        assert_eq!(
            check_jacobi(&g).verdict(),
            check_jacobi(&h).verdict(),
            "{name}"
        );
        assert_eq!(
            check_sagle_yamaguti(&g).verdict(),
            check_sagle_yamaguti(&h).verdict(),
            "{name}"
        );
    }
}

#[test]
fn pair_verdicts_survive_basis_change() {
    for (seed, a) in [
        BinaryAlgebra::quaternions(),
        BinaryAlgebra::octonions(),
        BinaryAlgebra::split_octonions(),
    ]
    .into_iter()
    .enumerate()
    {
        let p = pair_from_alternative(&a).unwrap();
        let q = random_invertible(p.dim(), 100 + seed as u64);
        let r = p.change_basis(&q).unwrap();
        assert_eq!(r.flags(), p.flags());
        assert_eq!(
            check_maurer_cartan(&p).verdict(),
            check_maurer_cartan(&r).verdict()
        );
        assert_eq!(
            check_triality_decomposition(&p).verdict(),
            check_triality_decomposition(&r).verdict()
        );
        assert_eq!(
            check_reductivity(&p).verdict(),
            check_reductivity(&r).verdict()
        );
    }
}

#[test]
fn broken_pair_stays_broken_after_basis_change() {
    // sedenion pair in a shuffled, sheared basis
    let p = pair_from_alternative(&BinaryAlgebra::sedenions()).unwrap();
    let m = p.dim();
    let q = Matrix::from_fn(m, m, |i, j| {
        if i == (j + 3) % m || (i == 0 && j == 1) {
            moufang::scalar::int(1)
        } else {
            moufang::scalar::int(0)
        }
    });
    let r = p.change_basis(&q).unwrap();
    let report = check_maurer_cartan(&r);
    assert!(!report.passed());
    assert!(!check_maurer_cartan(&p).passed());
}
