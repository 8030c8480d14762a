//! Exact verification of the operator identities of a Moufang-Mal'tsev pair.
//!
//! All identities are bilinear, trilinear or quadrilinear in the elements of
//! `Γ`, so evaluating them on basis tuples is a complete check. Operators on
//! basis elements, the Yamagutians `Y(e_j;e_k)` and the ternary brackets are
//! computed once per pair in a [`PairContext`].

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::Bilinear;
use crate::pair::{conjugate_triple, six, yamagutian_of, MoufangMaltsevPair, Triple};
use crate::report::{all_tuples, run_laws, CheckReport, Law, Value};
use crate::scalar::{int, ratio};
use crate::tensor::{Matrix, Vector};
use crate::yamaguti::{yamaguti_tensor, YamagutiTensor};

pub const MAURER_CARTAN: &str = "maurer-cartan";
pub const DECOMPOSITION: &str = "decomposition";
pub const CONJUGATE_YAMAGUTIAN: &str = "conjugate-yamagutian";
pub const REDUCTIVITY: &str = "reductivity";
pub const CONJUGATE_REDUCTIVITY: &str = "conjugate-reductivity";
pub const HIDDEN_ASSOCIATIVITY: &str = "hidden-associativity";
pub const GENERALIZED_REPRESENTATION: &str = "generalized-representation";

/// Largest `dim Γ` for which hidden associativity enumerates all quadruples.
pub const FULL_ENUMERATION_MAX_DIM: usize = 8;
pub const DEFAULT_SAMPLE_CAP: usize = 10_000;

/// Quadruple sampling for hidden associativity when `dim Γ` exceeds
/// [`FULL_ENUMERATION_MAX_DIM`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Sampling {
    pub seed: u64,
    pub cap: usize,
}

impl Default for Sampling {
    fn default() -> Self {
        Sampling {
            seed: 0,
            cap: DEFAULT_SAMPLE_CAP,
        }
    }
}

impl Sampling {
    /// Tuples to check: every quadruple for small `dim`, otherwise `cap`
    /// seeded uniform draws, sorted and deduplicated.
    pub fn quadruples(&self, dim: usize) -> Vec<Vec<usize>> {
        if dim <= FULL_ENUMERATION_MAX_DIM || dim.pow(4) <= self.cap {
            return all_tuples(dim, 4);
        }
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        let mut out: Vec<Vec<usize>> = (0..self.cap)
            .map(|_| (0..4).map(|_| rng.gen_range(0..dim)).collect())
            .collect();
        out.sort();
        out.dedup();
        out
    }
}

/// Which family of a translation triple.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Family {
    S,
    T,
    P,
}

/// Per-pair cache of everything the laws evaluate.
pub struct PairContext<'a> {
    pair: &'a MoufangMaltsevPair,
    ternary: YamagutiTensor,
    translations: Vec<Triple>,
    conjugates: Vec<Triple>,
    /// `Y(e_j;e_k)` at `j * m + k`.
    yamagutians: Vec<Matrix>,
}

impl<'a> PairContext<'a> {
    pub fn new(pair: &'a MoufangMaltsevPair) -> Self {
        let m = pair.dim();
        let translations: Vec<Triple> = (0..m)
            .map(|j| {
                pair.translations(&Vector::basis(m, j))
                    .expect("basis vector fits")
            })
            .collect();
        let conjugates = translations.iter().map(conjugate_triple).collect();
        let yamagutians = (0..m * m)
            .map(|n| yamagutian_of(&translations[n / m], &translations[n % m]))
            .collect();
        PairContext {
            pair,
            ternary: yamaguti_tensor(pair.gamma()),
            translations,
            conjugates,
            yamagutians,
        }
    }

    pub fn pair(&self) -> &MoufangMaltsevPair {
        self.pair
    }

    pub fn ternary(&self) -> &YamagutiTensor {
        &self.ternary
    }

    fn dim(&self) -> usize {
        self.pair.dim()
    }

    fn n(&self) -> usize {
        self.pair.rep_dim()
    }

    fn basis_op(&self, family: Family, conjugate: bool, j: usize) -> &Matrix {
        let triple = if conjugate {
            &self.conjugates[j]
        } else {
            &self.translations[j]
        };
        match family {
            Family::S => &triple.s,
            Family::T => &triple.t,
            Family::P => &triple.p,
        }
    }

    /// `X_v` for a family `X` and arbitrary `v`.
    fn op(&self, family: Family, conjugate: bool, v: &Vector) -> Matrix {
        let mut out = Matrix::zeros(self.n(), self.n());
        for (j, c) in v.nonzero() {
            out.add_scaled(c, self.basis_op(family, conjugate, j));
        }
        out
    }

    pub fn yamagutian(&self, j: usize, k: usize) -> &Matrix {
        &self.yamagutians[j * self.dim() + k]
    }

    /// `Y(v; e_k)` for arbitrary `v`.
    fn yamagutian_left(&self, v: &Vector, k: usize) -> Matrix {
        let mut out = Matrix::zeros(self.n(), self.n());
        for (j, c) in v.nonzero() {
            out.add_scaled(c, self.yamagutian(j, k));
        }
        out
    }

    /// `Y(e_j; v)` for arbitrary `v`.
    fn yamagutian_right(&self, j: usize, v: &Vector) -> Matrix {
        let mut out = Matrix::zeros(self.n(), self.n());
        for (k, c) in v.nonzero() {
            out.add_scaled(c, self.yamagutian(j, k));
        }
        out
    }

    /// `[e_j, e_k]` in `Γ`.
    fn bracket(&self, j: usize, k: usize) -> Vector {
        self.pair.gamma().basis_product(j, k)
    }
}

fn pair_value(lhs: Matrix, rhs: Matrix) -> (Value, Value) {
    (lhs.into(), rhs.into())
}

pub fn maurer_cartan_laws<'c>(ctx: &'c PairContext<'_>) -> Vec<Law<'c>> {
    use Family::*;
    vec![
        Law::new(
            "ss-bracket",
            "[S_x,S_y] = S_[x,y] - 2[S_x,T_y]",
            2,
            move |t| {
                let (j, k) = (t[0], t[1]);
                let lhs = ctx
                    .basis_op(S, false, j)
                    .commutator(ctx.basis_op(S, false, k));
                let mut rhs = ctx.op(S, false, &ctx.bracket(j, k));
                rhs.add_scaled(
                    &int(-2),
                    &ctx.basis_op(S, false, j)
                        .commutator(ctx.basis_op(T, false, k)),
                );
                pair_value(lhs, rhs)
            },
        ),
        Law::new(
            "tt-bracket",
            "[T_x,T_y] = T_[y,x] - 2[T_x,S_y]",
            2,
            move |t| {
                let (j, k) = (t[0], t[1]);
                let lhs = ctx
                    .basis_op(T, false, j)
                    .commutator(ctx.basis_op(T, false, k));
                let mut rhs = ctx.op(T, false, &ctx.bracket(k, j));
                rhs.add_scaled(
                    &int(-2),
                    &ctx.basis_op(T, false, j)
                        .commutator(ctx.basis_op(S, false, k)),
                );
                pair_value(lhs, rhs)
            },
        ),
        Law::new("st-symmetry", "[S_x,T_y] = [T_x,S_y]", 2, move |t| {
            let (j, k) = (t[0], t[1]);
            let lhs = ctx
                .basis_op(S, false, j)
                .commutator(ctx.basis_op(T, false, k));
            let rhs = ctx
                .basis_op(T, false, j)
                .commutator(ctx.basis_op(S, false, k));
            pair_value(lhs, rhs)
        }),
    ]
}

/// Right-hand sides of the triality decomposition at `(e_j, e_k)`:
/// `[S_x,S_y]`, `[S_x,T_y]`, `[T_x,T_y]` in terms of `Y`, `S_[x,y]`, `T_[x,y]`.
pub fn decomposition_rhs(ctx: &PairContext<'_>, j: usize, k: usize) -> [Matrix; 3] {
    let b = ctx.bracket(j, k);
    let (s, t) = (ctx.op(Family::S, false, &b), ctx.op(Family::T, false, &b));
    let y = ctx.yamagutian(j, k);
    let combo = |cy: i64, cs: (i64, i64), ct: (i64, i64)| {
        let mut m = y.scale(&int(cy));
        m.add_scaled(&ratio(cs.0, cs.1), &s);
        m.add_scaled(&ratio(ct.0, ct.1), &t);
        m
    };
    [
        combo(2, (1, 3), (2, 3)),
        combo(-1, (1, 3), (-1, 3)),
        combo(2, (-2, 3), (-1, 3)),
    ]
}

pub fn decomposition_laws<'c>(ctx: &'c PairContext<'_>) -> Vec<Law<'c>> {
    use Family::*;
    let law = |name, formula, idx: usize, left: Family, right: Family| {
        Law::new(name, formula, 2, move |t: &[usize]| {
            let (j, k) = (t[0], t[1]);
            let lhs = ctx
                .basis_op(left, false, j)
                .commutator(ctx.basis_op(right, false, k));
            let [a, b, c] = decomposition_rhs(ctx, j, k);
            pair_value(lhs, [a, b, c].into_iter().nth(idx).expect("three parts"))
        })
    };
    vec![
        law(
            "ss-decomposition",
            "[S_x,S_y] = 2Y(x;y) + 1/3 S_[x,y] + 2/3 T_[x,y]",
            0,
            S,
            S,
        ),
        law(
            "st-decomposition",
            "[S_x,T_y] = -Y(x;y) + 1/3 S_[x,y] - 1/3 T_[x,y]",
            1,
            S,
            T,
        ),
        law(
            "tt-decomposition",
            "[T_x,T_y] = 2Y(x;y) - 2/3 S_[x,y] - 1/3 T_[x,y]",
            2,
            T,
            T,
        ),
    ]
}

pub fn conjugate_yamagutian_laws<'c>(ctx: &'c PairContext<'_>) -> Vec<Law<'c>> {
    use Family::*;
    let law = |name, formula, family: Family| {
        Law::new(name, formula, 2, move |t: &[usize]| {
            let (j, k) = (t[0], t[1]);
            let lhs = ctx.yamagutian(j, k).scale(&six());
            let rhs = &ctx
                .basis_op(family, true, j)
                .commutator(ctx.basis_op(family, true, k))
                + &ctx.op(family, true, &ctx.bracket(j, k));
            pair_value(lhs, rhs)
        })
    };
    vec![
        law("p-plus-yamagutian", "6Y(x;y) = [P+_x,P+_y] + P+_[x,y]", P),
        law("t-plus-yamagutian", "6Y(x;y) = [T+_x,T+_y] + T+_[x,y]", T),
        law("s-plus-yamagutian", "6Y(x;y) = [S+_x,S+_y] + S+_[x,y]", S),
    ]
}

fn reductivity_law<'c>(
    ctx: &'c PairContext<'_>,
    name: &'static str,
    formula: &'static str,
    family: Family,
    conjugate: bool,
) -> Law<'c> {
    Law::new(name, formula, 3, move |t| {
        let (j, k, l) = (t[0], t[1], t[2]);
        let lhs = ctx
            .yamagutian(j, k)
            .commutator(ctx.basis_op(family, conjugate, l))
            .scale(&six());
        let rhs = ctx.op(family, conjugate, &ctx.ternary.bracket_basis(j, k, l));
        pair_value(lhs, rhs)
    })
}

pub fn reductivity_laws<'c>(ctx: &'c PairContext<'_>) -> Vec<Law<'c>> {
    use Family::*;
    vec![
        reductivity_law(ctx, "s-reductivity", "6[Y(x;y),S_z] = S_[x,y,z]", S, false),
        reductivity_law(ctx, "t-reductivity", "6[Y(x;y),T_z] = T_[x,y,z]", T, false),
        reductivity_law(ctx, "p-reductivity", "6[Y(x;y),P_z] = P_[x,y,z]", P, false),
    ]
}

pub fn conjugate_reductivity_laws<'c>(ctx: &'c PairContext<'_>) -> Vec<Law<'c>> {
    use Family::*;
    vec![
        reductivity_law(
            ctx,
            "s-plus-reductivity",
            "6[Y(x;y),S+_z] = S+_[x,y,z]",
            S,
            true,
        ),
        reductivity_law(
            ctx,
            "t-plus-reductivity",
            "6[Y(x;y),T+_z] = T+_[x,y,z]",
            T,
            true,
        ),
        reductivity_law(
            ctx,
            "p-plus-reductivity",
            "6[Y(x;y),P+_z] = P+_[x,y,z]",
            P,
            true,
        ),
    ]
}

/// Residuals `lhs - rhs` of the three reductivity laws at `(e_j, e_k, e_l)`.
pub fn reductivity_residuals(ctx: &PairContext<'_>, j: usize, k: usize, l: usize) -> [Matrix; 3] {
    let residual = |law: &Law<'_>| match (law.eval)(&[j, k, l]) {
        (Value::Matrix(a), Value::Matrix(b)) => &a - &b,
        _ => unreachable!("reductivity laws produce matrices"),
    };
    let laws = reductivity_laws(ctx);
    [residual(&laws[0]), residual(&laws[1]), residual(&laws[2])]
}

/// The ternary bracket read off from the operators: the unique `v` with
/// `S_v = 6[Y(e_j;e_k),S_{e_l}]` and `T_v = 6[Y(e_j;e_k),T_{e_l}]`.
pub fn extract_ternary_bracket(
    ctx: &PairContext<'_>,
    j: usize,
    k: usize,
    l: usize,
) -> Option<Vector> {
    let y = ctx.yamagutian(j, k);
    let s = y
        .commutator(ctx.basis_op(Family::S, false, l))
        .scale(&six());
    let t = y
        .commutator(ctx.basis_op(Family::T, false, l))
        .scale(&six());
    ctx.pair.preimage(&s, &t)
}

pub fn hidden_associativity_laws<'c>(ctx: &'c PairContext<'_>) -> Vec<Law<'c>> {
    vec![Law::new(
        "hidden-associativity",
        "6[Y(x;y),Y(z;w)] = Y([x,y,z];w) + Y(z;[x,y,w])",
        4,
        move |t| {
            let (j, k, l, p) = (t[0], t[1], t[2], t[3]);
            let lhs = ctx
                .yamagutian(j, k)
                .commutator(ctx.yamagutian(l, p))
                .scale(&six());
            let rhs = &ctx.yamagutian_left(&ctx.ternary.bracket_basis(j, k, l), p)
                + &ctx.yamagutian_right(l, &ctx.ternary.bracket_basis(j, k, p));
            pair_value(lhs, rhs)
        },
    )]
}

fn pairs_report(name: &str, laws: Vec<Law<'_>>, dim: usize) -> CheckReport {
    let arity = laws[0].arity;
    run_laws(name, &laws, &all_tuples(dim, arity))
}

pub fn check_maurer_cartan(pair: &MoufangMaltsevPair) -> CheckReport {
    let ctx = PairContext::new(pair);
    pairs_report(MAURER_CARTAN, maurer_cartan_laws(&ctx), pair.dim())
}

pub fn check_triality_decomposition(pair: &MoufangMaltsevPair) -> CheckReport {
    let ctx = PairContext::new(pair);
    pairs_report(DECOMPOSITION, decomposition_laws(&ctx), pair.dim())
}

pub fn check_conjugate_yamagutian(pair: &MoufangMaltsevPair) -> CheckReport {
    let ctx = PairContext::new(pair);
    pairs_report(
        CONJUGATE_YAMAGUTIAN,
        conjugate_yamagutian_laws(&ctx),
        pair.dim(),
    )
}

pub fn check_reductivity(pair: &MoufangMaltsevPair) -> CheckReport {
    let ctx = PairContext::new(pair);
    pairs_report(REDUCTIVITY, reductivity_laws(&ctx), pair.dim())
}

pub fn check_conjugate_reductivity(pair: &MoufangMaltsevPair) -> CheckReport {
    let ctx = PairContext::new(pair);
    pairs_report(
        CONJUGATE_REDUCTIVITY,
        conjugate_reductivity_laws(&ctx),
        pair.dim(),
    )
}

pub fn check_hidden_associativity(pair: &MoufangMaltsevPair, sampling: Sampling) -> CheckReport {
    let ctx = PairContext::new(pair);
    let laws = hidden_associativity_laws(&ctx);
    run_laws(
        HIDDEN_ASSOCIATIVITY,
        &laws,
        &sampling.quadruples(pair.dim()),
    )
}

/// Reductivity and hidden associativity together: the Yamagutian acts as a
/// generalized representation of `Γ`.
pub fn generalized_representation_laws<'c>(ctx: &'c PairContext<'_>) -> Vec<Law<'c>> {
    let mut laws = reductivity_laws(ctx);
    laws.extend(hidden_associativity_laws(ctx));
    laws
}

pub fn check_generalized_representation(
    pair: &MoufangMaltsevPair,
    sampling: Sampling,
) -> CheckReport {
    let ctx = PairContext::new(pair);
    let triples = run_laws(
        REDUCTIVITY,
        &reductivity_laws(&ctx),
        &all_tuples(pair.dim(), 3),
    );
    let quads = run_laws(
        HIDDEN_ASSOCIATIVITY,
        &hidden_associativity_laws(&ctx),
        &sampling.quadruples(pair.dim()),
    );
    let mut witnesses = triples.witnesses;
    witnesses.extend(quads.witnesses);
    witnesses.truncate(crate::report::MAX_WITNESSES);
    CheckReport {
        name: GENERALIZED_REPRESENTATION.to_string(),
        laws: triples.laws.into_iter().chain(quads.laws).collect(),
        tuples_checked: triples.tuples_checked + quads.tuples_checked,
        failures: triples.failures + quads.failures,
        witnesses,
    }
}
