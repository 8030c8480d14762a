//! Ternary Yamaguti brackets on anticommutative algebras.
//!
//! The bracket is `[x,y,z] = [x,[y,z]] - [y,[x,z]] + [[x,y],z]`, stored as the
//! integral-friendly tensor `6Y^i_{jkl} = [e_j,e_k,e_l]^i`. The third-order
//! associator tensor is then defined by `Y = l + (1/3) C^s_{jk} C^i_{sl}`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{AnticommAlgebra, Bilinear};
use crate::axioms::check_maltsev;
use crate::error::{Error, Result};
use crate::report::{all_tuples, run_laws, CheckReport, Law};
use crate::scalar::{int, ratio};
use crate::tensor::{contract_trilinear, Tensor3, Tensor4, Vector};

pub const SAGLE_YAMAGUTI: &str = "sagle-yamaguti";

/// Seed of the perturbation corpus used by the equivalence sweep.
pub const PERTURBATION_SEED: u64 = 20_240_611;

/// `[x,[y,z]] - [y,[x,z]] + [[x,y],z]`.
pub fn yamaguti_bracket(g: &AnticommAlgebra, x: &Vector, y: &Vector, z: &Vector) -> Result<Vector> {
    let m = g.dim();
    if x.dim() != m || y.dim() != m || z.dim() != m {
        return Err(Error::dim(
            "yamaguti_bracket",
            m,
            format!("{}, {}, {}", x.dim(), y.dim(), z.dim()),
        ));
    }
    let br = |u: &Vector, v: &Vector| g.product(u, v);
    Ok(&(&br(x, &br(y, z)) - &br(y, &br(x, z))) + &br(&br(x, y), z))
}

/// The tensor `6Y^i_{jkl}`, indexed `(i, j, k, l)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct YamagutiTensor {
    y6: Tensor4,
}

impl YamagutiTensor {
    pub fn dim(&self) -> usize {
        self.y6.dims()[0]
    }

    pub fn y6(&self) -> &Tensor4 {
        &self.y6
    }

    /// `Y^i_{jkl}` itself.
    pub fn y(&self) -> Tensor4 {
        self.y6.scale(&ratio(1, 6))
    }

    /// `[e_j, e_k, e_l]`.
    pub fn bracket_basis(&self, j: usize, k: usize, l: usize) -> Vector {
        self.y6.fiber(j, k, l)
    }

    /// `[e_j, e_k, z]` for arbitrary `z`.
    pub fn bracket_basis_with(&self, j: usize, k: usize, z: &Vector) -> Vector {
        let mut out = Vector::zeros(self.dim());
        for (l, c) in z.nonzero() {
            out.add_scaled(c, &self.bracket_basis(j, k, l));
        }
        out
    }

    pub fn bracket(&self, x: &Vector, y: &Vector, z: &Vector) -> Result<Vector> {
        contract_trilinear(&self.y6, x, y, z)
    }
}

pub fn yamaguti_tensor(g: &AnticommAlgebra) -> YamagutiTensor {
    let m = g.dim();
    let mut y6 = Tensor4::hypercube(m);
    for j in 0..m {
        for k in 0..m {
            for l in 0..m {
                let v = yamaguti_bracket(g, &g.basis(j), &g.basis(k), &g.basis(l))
                    .expect("basis vectors have the algebra dimension");
                for (i, s) in v.nonzero() {
                    y6[(i, j, k, l)] = s.clone();
                }
            }
        }
    }
    YamagutiTensor { y6 }
}

/// The tensor `C^s_{jk} C^i_{sl}` of iterated brackets `[[e_j,e_k],e_l]^i`.
pub fn double_bracket_tensor(c: &Tensor3) -> Tensor4 {
    let m = c.dims()[0];
    let mut out = Tensor4::hypercube(m);
    for ((s, j, k), a) in c.nonzero() {
        for l in 0..m {
            for i in 0..m {
                let b = &c[(i, s, l)];
                if !num_traits::Zero::is_zero(b) {
                    out[(i, j, k, l)] += a * b;
                }
            }
        }
    }
    out
}

/// Third-order associator constants `l^i_{jkl}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AssociatorTensor {
    l: Tensor4,
}

impl AssociatorTensor {
    pub fn l(&self) -> &Tensor4 {
        &self.l
    }

    pub fn evaluate(&self, x: &Vector, y: &Vector, z: &Vector) -> Result<Vector> {
        contract_trilinear(&self.l, x, y, z)
    }
}

/// `l^i_{jkl} = Y^i_{jkl} - (1/3) C^s_{jk} C^i_{sl}`.
pub fn associator_tensor(g: &AnticommAlgebra) -> AssociatorTensor {
    let mut l = yamaguti_tensor(g).y();
    let cc = double_bracket_tensor(g.c());
    let third = ratio(1, 3);
    for (idx, v) in cc.nonzero() {
        let [i, j, k, s] = idx;
        l[(i, j, k, s)] -= &third * v;
    }
    AssociatorTensor { l }
}

/// `l^i_{jkl} + (1/3) C^s_{jk} C^i_{sl}`; equals `Y^i_{jkl}` by construction.
pub fn reconstruct_yamaguti(g: &AnticommAlgebra, l: &AssociatorTensor) -> Tensor4 {
    let mut y = l.l.clone();
    let third = ratio(1, 3);
    for (idx, v) in double_bracket_tensor(g.c()).nonzero() {
        let [i, j, k, s] = idx;
        y[(i, j, k, s)] += &third * v;
    }
    y
}

pub fn sagle_yamaguti_laws<'a>(g: &'a AnticommAlgebra, y: &'a YamagutiTensor) -> Vec<Law<'a>> {
    vec![Law::new(
        "sagle-yamaguti",
        "[x,y,[z,w]] = [[x,y,z],w] + [z,[x,y,w]]",
        4,
        move |t| {
            let (j, k) = (t[0], t[1]);
            let (z, w) = (g.basis(t[2]), g.basis(t[3]));
            let lhs = y.bracket_basis_with(j, k, &g.product(&z, &w));
            let rhs = &g.product(&y.bracket_basis(j, k, t[2]), &w)
                + &g.product(&z, &y.bracket_basis(j, k, t[3]));
            (lhs.into(), rhs.into())
        },
    )]
}

pub fn check_sagle_yamaguti(g: &AnticommAlgebra) -> CheckReport {
    let y = yamaguti_tensor(g);
    let laws = sagle_yamaguti_laws(g, &y);
    run_laws(SAGLE_YAMAGUTI, &laws, &all_tuples(g.dim(), 4))
}

#[derive(Clone, Debug)]
pub struct EquivalenceEntry {
    pub name: String,
    pub maltsev: CheckReport,
    pub sagle_yamaguti: CheckReport,
}

impl EquivalenceEntry {
    pub fn agrees(&self) -> bool {
        self.maltsev.verdict() == self.sagle_yamaguti.verdict()
    }
}

#[derive(Clone, Debug)]
pub struct EquivalenceReport {
    pub entries: Vec<EquivalenceEntry>,
}

impl EquivalenceReport {
    pub fn all_agree(&self) -> bool {
        self.entries.iter().all(EquivalenceEntry::agrees)
    }

    pub fn disagreements(&self) -> impl Iterator<Item = &EquivalenceEntry> {
        self.entries.iter().filter(|e| !e.agrees())
    }
}

/// Runs the Mal'tsev and Sagle-Yamaguti checkers on every algebra and pairs
/// up their verdicts.
pub fn check_equivalence_corpus(algebras: &[(String, AnticommAlgebra)]) -> EquivalenceReport {
    let entries = algebras
        .iter()
        .map(|(name, g)| EquivalenceEntry {
            name: name.clone(),
            maltsev: check_maltsev(g),
            sagle_yamaguti: check_sagle_yamaguti(g),
        })
        .collect();
    EquivalenceReport { entries }
}

/// `count` copies of `base`, each with one structure constant
/// `C^i_{jk}` (`j < k`) bumped by 1 and `C^i_{kj}` by -1 to stay
/// anticommutative. Deterministic in `seed`.
pub fn perturbation_corpus(
    base: &AnticommAlgebra,
    count: usize,
    seed: u64,
) -> Vec<AnticommAlgebra> {
    let m = base.dim();
    assert!(m >= 2, "perturbations need at least two basis elements");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let i = rng.gen_range(0..m);
            let j = rng.gen_range(0..m - 1);
            let k = rng.gen_range(j + 1..m);
            let mut c = base.c().clone();
            c[(i, j, k)] += int(1);
            c[(i, k, j)] -= int(1);
            AnticommAlgebra::new(c, Some(base.basis_names().to_vec()))
                .expect("antisymmetric bump preserves anticommutativity")
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{commutator_algebra, BinaryAlgebra};
    use crate::fixtures::lie_cross;
    use crate::scalar::Scalar;

    fn imag_octonions() -> AnticommAlgebra {
        commutator_algebra(&BinaryAlgebra::octonions()).unwrap()
    }

    fn probe(m: usize, salt: i64) -> Vector {
        (0..m as i64)
            .map(|i| ratio((i * 7 + salt) % 5 - 2, (i + salt) % 3 + 1))
            .collect()
    }

    #[test]
    fn bracket_vanishes_on_repeated_first_slots() {
        let g = imag_octonions();
        let x = probe(7, 1);
        assert!(yamaguti_bracket(&g, &x, &x, &probe(7, 4))
            .unwrap()
            .is_zero());
        assert!(yamaguti_bracket(&g, &x, &x, &Vector::zeros(3)).is_err());
    }

    #[test]
    fn lie_bracket_collapses() {
        let g = lie_cross();
        let (x, y, z) = (probe(3, 1), probe(3, 2), probe(3, 5));
        let br = |u: &Vector, v: &Vector| g.bracket(u, v).unwrap();
        assert_eq!(
            yamaguti_bracket(&g, &x, &y, &z).unwrap(),
            br(&br(&x, &y), &z).scale(&int(2))
        );
    }

    #[test]
    fn octonion_bracket_of_generic_triple() {
        // Γ basis index a is octonion e_{a+1}. Brute force: [u,v] = uv - vu in
        // the octonions, then the commutator formula.
        let o = BinaryAlgebra::octonions();
        let g = imag_octonions();
        let lift = |v: &Vector| -> Vector {
            let mut out = Vector::zeros(8);
            for (a, c) in v.nonzero() {
                out[a + 1] = c.clone();
            }
            out
        };
        let com = |u: &Vector, v: &Vector| &o.product(u, v) - &o.product(v, u);
        let (x, y, z) = (lift(&g.basis(0)), lift(&g.basis(1)), lift(&g.basis(3)));
        let oracle = &(&com(&x, &com(&y, &z)) - &com(&y, &com(&x, &z))) + &com(&com(&x, &y), &z);
        let got = lift(&yamaguti_bracket(&g, &g.basis(0), &g.basis(1), &g.basis(3)).unwrap());
        assert_eq!(got, oracle);
        assert!(!got.is_zero());
    }

    #[test]
    fn tensor_of_zero_algebra_is_zero() {
        assert!(yamaguti_tensor(&AnticommAlgebra::abelian(4)).y6().is_zero());
        assert!(associator_tensor(&AnticommAlgebra::abelian(4))
            .l()
            .is_zero());
    }

    #[test]
    fn lie_tensor_is_twice_double_bracket() {
        let g = lie_cross();
        let cc = double_bracket_tensor(g.c());
        assert_eq!(yamaguti_tensor(&g).y6(), &cc.scale(&int(2)));
        assert!(associator_tensor(&g).l().is_zero());
        let h = commutator_algebra(&BinaryAlgebra::quaternions()).unwrap();
        assert!(associator_tensor(&h).l().is_zero());
    }

    #[test]
    fn octonion_tensor_reproduces_bracket_on_random_triples() {
        let g = imag_octonions();
        let y = yamaguti_tensor(&g);
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let mut random = || -> Vector {
            (0..7)
                .map(|_| ratio(rng.gen_range(-9..=9), rng.gen_range(1..=5)))
                .collect()
        };
        for _ in 0..100 {
            let (a, b, c) = (random(), random(), random());
            assert_eq!(
                y.bracket(&a, &b, &c).unwrap(),
                yamaguti_bracket(&g, &a, &b, &c).unwrap()
            );
        }
    }

    #[test]
    fn octonion_associator_is_alternating() {
        let g = imag_octonions();
        let l = associator_tensor(&g);
        assert!(!l.l().is_zero());
        let six = int(6);
        for j in 0..7 {
            for k in 0..7 {
                for s in 0..7 {
                    let (x, y, z) = (g.basis(j), g.basis(k), g.basis(s));
                    let v = l.evaluate(&x, &y, &z).unwrap().scale(&six);
                    assert_eq!(v, -&l.evaluate(&y, &x, &z).unwrap().scale(&six));
                    assert_eq!(v, -&l.evaluate(&x, &z, &y).unwrap().scale(&six));
                    // 6 l(x,y,z) = [x,y,z] - 2[[x,y],z]
                    let br = |u: &Vector, w: &Vector| g.bracket(u, w).unwrap();
                    let expected = &yamaguti_bracket(&g, &x, &y, &z).unwrap()
                        - &br(&br(&x, &y), &z).scale(&int(2));
                    assert_eq!(v, expected);
                }
            }
        }
    }

    #[test]
    fn associator_round_trip() {
        for g in [lie_cross(), imag_octonions()] {
            let l = associator_tensor(&g);
            assert_eq!(reconstruct_yamaguti(&g, &l), yamaguti_tensor(&g).y());
        }
    }

    #[test]
    fn sagle_yamaguti_cases() {
        assert!(check_sagle_yamaguti(&lie_cross()).passed());
        let oct = check_sagle_yamaguti(&imag_octonions());
        assert!(oct.passed());
        assert_eq!(oct.tuples_checked, 2401);
    }

    #[test]
    fn perturbations_are_deterministic_and_distinct() {
        let g = imag_octonions();
        let a = perturbation_corpus(&g, 10, PERTURBATION_SEED);
        let b = perturbation_corpus(&g, 10, PERTURBATION_SEED);
        assert_eq!(a, b);
        for p in &a {
            assert_ne!(p.c(), g.c());
            let diff: Vec<Scalar> = p
                .c()
                .nonzero()
                .filter(|(idx, v)| &&g.c()[*idx] != v)
                .map(|(_, v)| v.clone())
                .collect();
            assert!(diff.len() <= 2);
        }
    }

    #[test]
    fn small_equivalence_corpus_agrees() {
        let corpus = vec![
            ("lie-cross".to_string(), lie_cross()),
            ("octonions".to_string(), imag_octonions()),
        ];
        let report = check_equivalence_corpus(&corpus);
        assert!(report.all_agree());
        assert!(report.entries.iter().all(|e| e.maltsev.passed()));
    }
}
