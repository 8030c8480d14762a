//! Cross-checks between independently implemented checkers.

use moufang::algebra::commutator_algebra;
use moufang::axioms::check_maltsev;
use moufang::triality::{
    check_hidden_associativity, check_maurer_cartan, check_triality_decomposition,
    extract_ternary_bracket, PairContext, Sampling,
};
use moufang::yamaguti::{
    associator_tensor, check_equivalence_corpus, check_sagle_yamaguti, perturbation_corpus,
    reconstruct_yamaguti, yamaguti_bracket, yamaguti_tensor, PERTURBATION_SEED,
};
use moufang::{pair_from_alternative, Bilinear, BinaryAlgebra};

fn unital_corpus() -> Vec<BinaryAlgebra> {
    vec![
        BinaryAlgebra::complex(),
        BinaryAlgebra::quaternions(),
        BinaryAlgebra::octonions(),
        BinaryAlgebra::split_octonions(),
        BinaryAlgebra::sedenions(),
    ]
}

#[test]
fn maurer_cartan_implies_decomposition() {
    for a in unital_corpus() {
        let p = pair_from_alternative(&a).unwrap();
        let mc = check_maurer_cartan(&p);
        let dec = check_triality_decomposition(&p);
        if mc.passed() {
            assert!(dec.passed(), "dim {}", a.dim());
        }
        assert_eq!(mc.verdict(), dec.verdict(), "dim {}", a.dim());
    }
}

#[test]
fn hidden_associativity_tracks_sagle_yamaguti() {
    for a in [
        BinaryAlgebra::quaternions(),
        BinaryAlgebra::octonions(),
        BinaryAlgebra::split_octonions(),
    ] {
        let p = pair_from_alternative(&a).unwrap();
        let hidden = check_hidden_associativity(&p, Sampling::default());
        assert!(hidden.passed());
        assert!(check_sagle_yamaguti(p.gamma()).passed());
    }
}

#[test]
fn perturbations_agree_and_reconstruct() {
    let o = commutator_algebra(&BinaryAlgebra::octonions()).unwrap();
    let corpus: Vec<(String, _)> = perturbation_corpus(&o, 12, PERTURBATION_SEED)
        .into_iter()
        .enumerate()
        .map(|(i, g)| (format!("perturbed-{i}"), g))
        .collect();
    let report = check_equivalence_corpus(&corpus);
    assert!(report.all_agree());
    assert!(report.entries.iter().any(|e| !e.maltsev.passed()));
    for (_, g) in &corpus {
        assert_eq!(
            &reconstruct_yamaguti(g, &associator_tensor(g)),
            &yamaguti_tensor(g).y()
        );
    }
    assert!(check_maltsev(&o).passed());
}

#[test]
fn operator_bracket_matches_algebra_bracket_on_split_octonions() {
    let p = pair_from_alternative(&BinaryAlgebra::split_octonions()).unwrap();
    let ctx = PairContext::new(&p);
    let g = p.gamma();
    for j in 0..7 {
        for k in 0..7 {
            for l in 0..7 {
                let expected = yamaguti_bracket(g, &g.basis(j), &g.basis(k), &g.basis(l)).unwrap();
                assert_eq!(extract_ternary_bracket(&ctx, j, k, l), Some(expected));
            }
        }
    }
}
