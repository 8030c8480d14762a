//! Exhaustive axiom checks over basis tuples.
//!
//! Every identity here is checked in multilinear form, so running over basis
//! tuples is a complete verification. Identities that repeat a variable
//! (alternativity, Mal'tsev) are checked in their polarized form; over the
//! rationals the polarized and original identities are equivalent.

use crate::algebra::Bilinear;
use crate::report::{all_tuples, run_laws, CheckReport, Law, Value};
use crate::tensor::Vector;

pub const ANTICOMMUTATIVE: &str = "anticommutative";
pub const JACOBI: &str = "jacobi";
pub const MALTSEV: &str = "maltsev";
pub const ALTERNATIVE: &str = "alternative";
pub const ASSOCIATIVE: &str = "associative";

fn prod(a: &impl Bilinear, x: &Vector, y: &Vector) -> Vector {
    a.product(x, y)
}

pub fn anticommutative_laws<A: Bilinear>(a: &A) -> Vec<Law<'_>> {
    vec![Law::new(
        "anticommutativity",
        "e_i e_j = -(e_j e_i)",
        2,
        move |t| {
            let lhs = a.basis_product(t[0], t[1]);
            let rhs = -&a.basis_product(t[1], t[0]);
            (lhs.into(), rhs.into())
        },
    )]
}

pub fn jacobi_laws<A: Bilinear>(a: &A) -> Vec<Law<'_>> {
    vec![Law::new(
        "jacobi",
        "[[x,y],z] + [[y,z],x] + [[z,x],y] = 0",
        3,
        move |t| {
            let (x, y, z) = (a.basis(t[0]), a.basis(t[1]), a.basis(t[2]));
            let sum = &(&prod(a, &prod(a, &x, &y), &z) + &prod(a, &prod(a, &y, &z), &x))
                + &prod(a, &prod(a, &z, &x), &y);
            (sum.into(), Vector::zeros(a.dim()).into())
        },
    )]
}

/// `[[x,y],[x,z]] = [[[x,y],z],x] + [[[y,z],x],x] + [[[z,x],x],y]`, polarized
/// in `x`: the tuple `(a, b, y, z)` substitutes `x -> a, b` symmetrically.
/// For `a = b` both sides are twice the unpolarized ones.
pub fn maltsev_laws<A: Bilinear>(alg: &A) -> Vec<Law<'_>> {
    vec![Law::new(
        "maltsev",
        "[[x,y],[x,z]] = [[[x,y],z],x] + [[[y,z],x],x] + [[[z,x],x],y] (polarized in x)",
        4,
        move |t| {
            let b = |i: usize| alg.basis(t[i]);
            let (x1, x2, y, z) = (b(0), b(1), b(2), b(3));
            let p = |u: &Vector, v: &Vector| alg.product(u, v);
            let half = |u: &Vector, v: &Vector| -> (Vector, Vector) {
                let lhs = p(&p(u, &y), &p(v, &z));
                let rhs = &(&p(&p(&p(u, &y), &z), v) + &p(&p(&p(&y, &z), u), v))
                    + &p(&p(&p(&z, u), v), &y);
                (lhs, rhs)
            };
            let (l1, r1) = half(&x1, &x2);
            let (l2, r2) = half(&x2, &x1);
            (Value::from(&l1 + &l2), Value::from(&r1 + &r2))
        },
    )]
}

/// Left and right alternativity, polarized:
/// `(x,y,z) = -(y,x,z)` and `(x,y,z) = -(x,z,y)`.
pub fn alternative_laws<A: Bilinear>(a: &A) -> Vec<Law<'_>> {
    let assoc = move |x: usize, y: usize, z: usize| -> Vector {
        let (x, y, z) = (a.basis(x), a.basis(y), a.basis(z));
        &prod(a, &prod(a, &x, &y), &z) - &prod(a, &x, &prod(a, &y, &z))
    };
    vec![
        Law::new("left-alternative", "(x,y,z) = -(y,x,z)", 3, move |t| {
            (
                assoc(t[0], t[1], t[2]).into(),
                (-&assoc(t[1], t[0], t[2])).into(),
            )
        }),
        Law::new("right-alternative", "(x,y,z) = -(x,z,y)", 3, move |t| {
            (
                assoc(t[0], t[1], t[2]).into(),
                (-&assoc(t[0], t[2], t[1])).into(),
            )
        }),
    ]
}

pub fn associative_laws<A: Bilinear>(a: &A) -> Vec<Law<'_>> {
    vec![Law::new("associativity", "(xy)z = x(yz)", 3, move |t| {
        let (x, y, z) = (a.basis(t[0]), a.basis(t[1]), a.basis(t[2]));
        (
            prod(a, &prod(a, &x, &y), &z).into(),
            prod(a, &x, &prod(a, &y, &z)).into(),
        )
    })]
}

fn run(name: &str, laws: Vec<Law<'_>>, dim: usize) -> CheckReport {
    let arity = laws[0].arity;
    run_laws(name, &laws, &all_tuples(dim, arity))
}

pub fn check_anticommutative(a: &impl Bilinear) -> CheckReport {
    run(ANTICOMMUTATIVE, anticommutative_laws(a), a.dim())
}

pub fn check_jacobi(a: &impl Bilinear) -> CheckReport {
    run(JACOBI, jacobi_laws(a), a.dim())
}

pub fn check_maltsev(a: &impl Bilinear) -> CheckReport {
    run(MALTSEV, maltsev_laws(a), a.dim())
}

pub fn check_alternative(a: &impl Bilinear) -> CheckReport {
    run(ALTERNATIVE, alternative_laws(a), a.dim())
}

pub fn check_associative(a: &impl Bilinear) -> CheckReport {
    run(ASSOCIATIVE, associative_laws(a), a.dim())
}
