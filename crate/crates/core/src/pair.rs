//! Moufang-Mal'tsev pairs realized as families of matrices.

use std::fmt;

use crate::algebra::{
    commutator_algebra, left_mult, right_mult, AnticommAlgebra, Bilinear, BinaryAlgebra,
};
use crate::axioms::check_alternative;
use crate::error::{Error, Result};
use crate::linalg;
use crate::scalar::{int, ratio, Scalar};
use crate::tensor::{Matrix, Vector};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum PairFlag {
    /// Built from an algebra that is not alternative; the operator identities
    /// are not expected to hold.
    UnverifiedModel,
    /// `S_x = T_x = 0` for some nonzero `x`.
    NotFaithful,
}

impl fmt::Display for PairFlag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PairFlag::UnverifiedModel => "unverified model",
            PairFlag::NotFaithful => "not faithful",
        })
    }
}

/// `(S_x, T_x, P_x)` or the conjugate triple `(S⁺_x, T⁺_x, P⁺_x)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Triple {
    pub s: Matrix,
    pub t: Matrix,
    pub p: Matrix,
}

impl Triple {
    pub fn sum(&self) -> Matrix {
        &(&self.s + &self.t) + &self.p
    }
}

/// An anticommutative algebra `Γ` of dimension `m` with two linear maps
/// `x -> S_x`, `x -> T_x` into `n x n` matrices, stored on the basis of `Γ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MoufangMaltsevPair {
    gamma: AnticommAlgebra,
    rep_dim: usize,
    s_ops: Vec<Matrix>,
    t_ops: Vec<Matrix>,
    flags: Vec<PairFlag>,
}

impl MoufangMaltsevPair {
    /// Accepts any matrices of matching shape. Faithfulness is tested here
    /// and recorded as a flag rather than rejected.
    pub fn new(gamma: AnticommAlgebra, s_ops: Vec<Matrix>, t_ops: Vec<Matrix>) -> Result<Self> {
        let m = gamma.dim();
        if s_ops.len() != m || t_ops.len() != m {
            return Err(Error::dim(
                "MoufangMaltsevPair::new",
                format!("{m} operators in each family"),
                format!("{} and {}", s_ops.len(), t_ops.len()),
            ));
        }
        let n = s_ops[0].rows();
        if n == 0 {
            return Err(Error::dim(
                "MoufangMaltsevPair::new",
                "nonempty operators",
                "0x0",
            ));
        }
        if let Some(bad) = s_ops.iter().chain(&t_ops).find(|op| op.shape() != (n, n)) {
            return Err(Error::dim(
                "MoufangMaltsevPair::new",
                format!("{n}x{n} operators"),
                format!("{}x{}", bad.rows(), bad.cols()),
            ));
        }
        let mut pair = MoufangMaltsevPair {
            gamma,
            rep_dim: n,
            s_ops,
            t_ops,
            flags: Vec::new(),
        };
        if !pair
            .stacked_operators()
            .is_some_and(|a| linalg::rank(&a) == m)
        {
            pair.flags.push(PairFlag::NotFaithful);
        }
        Ok(pair)
    }

    /// `S = L`, `T = R` on the imaginary basis of a unital algebra, with
    /// `Γ` its commutator algebra.
    pub fn from_alternative(a: &BinaryAlgebra) -> Result<Self> {
        let gamma = commutator_algebra(a)?;
        let imag = a.imaginary_indices();
        let s_ops = imag
            .iter()
            .map(|&i| left_mult(a, &a.basis(i)))
            .collect::<Result<Vec<_>>>()?;
        let t_ops = imag
            .iter()
            .map(|&i| right_mult(a, &a.basis(i)))
            .collect::<Result<Vec<_>>>()?;
        let mut pair = Self::new(gamma, s_ops, t_ops)?;
        if !check_alternative(a).passed() {
            pair.flags.push(PairFlag::UnverifiedModel);
            pair.flags.sort();
        }
        Ok(pair)
    }

    pub fn gamma(&self) -> &AnticommAlgebra {
        &self.gamma
    }

    /// Dimension `m` of `Γ`.
    pub fn dim(&self) -> usize {
        self.gamma.dim()
    }

    pub fn rep_dim(&self) -> usize {
        self.rep_dim
    }

    pub fn s_ops(&self) -> &[Matrix] {
        &self.s_ops
    }

    pub fn t_ops(&self) -> &[Matrix] {
        &self.t_ops
    }

    pub fn flags(&self) -> &[PairFlag] {
        &self.flags
    }

    pub fn is_faithful(&self) -> bool {
        !self.flags.contains(&PairFlag::NotFaithful)
    }

    /// Column `j` is `vec(S_j)` stacked on `vec(T_j)`.
    fn stacked_operators(&self) -> Option<Matrix> {
        let columns: Vec<Vector> = self
            .s_ops
            .iter()
            .zip(&self.t_ops)
            .map(|(s, t)| s.entries().iter().chain(t.entries()).cloned().collect())
            .collect();
        Matrix::from_columns(&columns).ok()
    }

    fn check_vector(&self, op: &'static str, x: &Vector) -> Result<()> {
        if x.dim() != self.dim() {
            return Err(Error::dim(op, self.dim(), x.dim()));
        }
        Ok(())
    }

    fn combine(&self, family: &[Matrix], x: &Vector) -> Matrix {
        let mut out = Matrix::zeros(self.rep_dim, self.rep_dim);
        for (j, c) in x.nonzero() {
            out.add_scaled(c, &family[j]);
        }
        out
    }

    pub fn s(&self, x: &Vector) -> Result<Matrix> {
        self.check_vector("S_x", x)?;
        Ok(self.combine(&self.s_ops, x))
    }

    pub fn t(&self, x: &Vector) -> Result<Matrix> {
        self.check_vector("T_x", x)?;
        Ok(self.combine(&self.t_ops, x))
    }

    /// `S_x`, `T_x` and `P_x = -(S_x + T_x)`.
    pub fn translations(&self, x: &Vector) -> Result<Triple> {
        let s = self.s(x)?;
        let t = self.t(x)?;
        let p = -&(&s + &t);
        Ok(Triple { s, t, p })
    }

    /// `S⁺ = T - P`, `T⁺ = P - S`, `P⁺ = S - T`.
    pub fn conjugates(&self, x: &Vector) -> Result<Triple> {
        Ok(conjugate_triple(&self.translations(x)?))
    }

    /// `Y(x;y) = (1/6)([S_x,S_y] + [T_x,T_y] + [P_x,P_y])`.
    pub fn yamagutian(&self, x: &Vector, y: &Vector) -> Result<Matrix> {
        let a = self.translations(x)?;
        let b = self.translations(y)?;
        Ok(yamagutian_of(&a, &b))
    }

    /// The unique `x` with `S_x = s_target` and `T_x = t_target`, if any.
    /// Uniqueness relies on faithfulness; for non-faithful pairs some solution
    /// is returned.
    pub fn preimage(&self, s_target: &Matrix, t_target: &Matrix) -> Option<Vector> {
        let a = self.stacked_operators()?;
        let b: Vector = s_target
            .entries()
            .iter()
            .chain(t_target.entries())
            .cloned()
            .collect();
        linalg::solve(&a, &b).ok().flatten()
    }

    /// The same pair on the basis of `Γ` given by the columns of `q`.
    pub fn change_basis(&self, q: &Matrix) -> Result<Self> {
        let gamma = self.gamma.change_basis(q)?;
        let columns: Vec<Vector> = (0..self.dim()).map(|a| q.column(a)).collect();
        let s_ops = columns
            .iter()
            .map(|c| self.combine(&self.s_ops, c))
            .collect();
        let t_ops = columns
            .iter()
            .map(|c| self.combine(&self.t_ops, c))
            .collect();
        let mut pair = Self::new(gamma, s_ops, t_ops)?;
        if self.flags.contains(&PairFlag::UnverifiedModel) {
            pair.flags.push(PairFlag::UnverifiedModel);
            pair.flags.sort();
        }
        Ok(pair)
    }
}

pub fn pair_from_alternative(a: &BinaryAlgebra) -> Result<MoufangMaltsevPair> {
    MoufangMaltsevPair::from_alternative(a)
}

pub fn conjugate_triple(x: &Triple) -> Triple {
    Triple {
        s: &x.t - &x.p,
        t: &x.p - &x.s,
        p: &x.s - &x.t,
    }
}

pub(crate) fn yamagutian_of(a: &Triple, b: &Triple) -> Matrix {
    let sum = &(&a.s.commutator(&b.s) + &a.t.commutator(&b.t)) + &a.p.commutator(&b.p);
    sum.scale(&ratio(1, 6))
}

pub(crate) fn six() -> Scalar {
    int(6)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::ratio;
    use crate::tensor::mat_commutator;

    fn sample_vector(m: usize) -> Vector {
        (0..m)
            .map(|i| ratio(i as i64 * 3 - 5, (i % 3 + 1) as i64))
            .collect()
    }

    #[test]
    fn octonion_pair_shape() {
        let pair = pair_from_alternative(&BinaryAlgebra::octonions()).unwrap();
        assert_eq!((pair.dim(), pair.rep_dim()), (7, 8));
        assert!(pair.flags().is_empty());
        let e1 = Vector::basis(7, 0);
        let o = BinaryAlgebra::octonions();
        assert_eq!(pair.s(&e1).unwrap(), left_mult(&o, &o.basis(1)).unwrap());
    }

    #[test]
    fn sedenion_pair_is_flagged() {
        let pair = pair_from_alternative(&BinaryAlgebra::sedenions()).unwrap();
        assert_eq!((pair.dim(), pair.rep_dim()), (15, 16));
        assert_eq!(pair.flags(), &[PairFlag::UnverifiedModel]);
        assert!(pair.is_faithful());
    }

    #[test]
    fn translations_sum_to_zero() {
        let pair = pair_from_alternative(&BinaryAlgebra::octonions()).unwrap();
        let zero = pair.translations(&Vector::zeros(7)).unwrap();
        assert!(zero.s.is_zero() && zero.t.is_zero() && zero.p.is_zero());
        let x = sample_vector(7);
        assert!(pair.translations(&x).unwrap().sum().is_zero());
        assert!(pair.translations(&Vector::zeros(8)).is_err());
    }

    #[test]
    fn conjugates_telescope_and_invert() {
        let pair = pair_from_alternative(&BinaryAlgebra::octonions()).unwrap();
        let x = sample_vector(7);
        let tr = pair.translations(&x).unwrap();
        let cj = pair.conjugates(&x).unwrap();
        assert!(cj.sum().is_zero());
        let three = int(3);
        assert_eq!(tr.s.scale(&three), &cj.p - &cj.t);
        assert_eq!(tr.t.scale(&three), &cj.s - &cj.p);
        assert_eq!(tr.p.scale(&three), &cj.t - &cj.s);
    }

    #[test]
    fn quaternion_p_plus_is_inner_derivation() {
        let h = BinaryAlgebra::quaternions();
        let pair = pair_from_alternative(&h).unwrap();
        let x = sample_vector(3);
        let p_plus = pair.conjugates(&x).unwrap().p;
        let mut xh = Vector::zeros(4);
        for (j, c) in x.nonzero() {
            xh[j + 1] = c.clone();
        }
        for v in 0..4 {
            let e = h.basis(v);
            assert_eq!(p_plus.apply(&e), &h.product(&xh, &e) - &h.product(&e, &xh));
        }
    }

    #[test]
    fn yamagutian_basics() {
        let pair = pair_from_alternative(&BinaryAlgebra::octonions()).unwrap();
        let x = sample_vector(7);
        assert!(pair.yamagutian(&x, &x).unwrap().is_zero());
        assert!(pair.yamagutian(&x, &Vector::zeros(3)).is_err());
    }

    #[test]
    fn octonion_yamagutian_matches_left_right_expansion() {
        // P = -(L + R) gives 6Y = 2([L_x,L_y] + [L_x,R_y] + [R_x,R_y]) once
        // [L_x,R_y] = [R_x,L_y] is used.
        let pair = pair_from_alternative(&BinaryAlgebra::octonions()).unwrap();
        for j in 0..7 {
            for k in 0..7 {
                let (x, y) = (Vector::basis(7, j), Vector::basis(7, k));
                let (lx, rx) = (pair.s(&x).unwrap(), pair.t(&x).unwrap());
                let (ly, ry) = (pair.s(&y).unwrap(), pair.t(&y).unwrap());
                let sum = &(&mat_commutator(&lx, &ly).unwrap()
                    + &mat_commutator(&lx, &ry).unwrap())
                    + &mat_commutator(&rx, &ry).unwrap();
                assert_eq!(
                    pair.yamagutian(&x, &y).unwrap().scale(&six()),
                    sum.scale(&int(2))
                );
            }
        }
    }

    #[test]
    fn three_yamagutian_is_a_derivation() {
        let o = BinaryAlgebra::octonions();
        let pair = pair_from_alternative(&o).unwrap();
        for (j, k) in [(0, 1), (0, 3), (2, 5), (4, 6), (1, 6)] {
            let d = pair
                .yamagutian(&Vector::basis(7, j), &Vector::basis(7, k))
                .unwrap()
                .scale(&int(3));
            for u in 0..8 {
                for v in 0..8 {
                    let (eu, ev) = (o.basis(u), o.basis(v));
                    let lhs = d.apply(&o.product(&eu, &ev));
                    let rhs = &o.product(&d.apply(&eu), &ev) + &o.product(&eu, &d.apply(&ev));
                    assert_eq!(lhs, rhs, "D = 3Y(e{j};e{k}) on e{u}, e{v}");
                }
            }
        }
    }

    #[test]
    fn faithfulness_detection() {
        let g = AnticommAlgebra::abelian(2);
        let zero = vec![Matrix::zeros(2, 2); 2];
        let pair = MoufangMaltsevPair::new(g.clone(), zero.clone(), zero.clone()).unwrap();
        assert!(!pair.is_faithful());
        let ops = vec![
            Matrix::identity(2),
            Matrix::from_int_rows(&[&[0, 1], &[0, 0]]).unwrap(),
        ];
        let pair = MoufangMaltsevPair::new(g.clone(), ops, zero.clone()).unwrap();
        assert!(pair.is_faithful());
        assert!(MoufangMaltsevPair::new(g, vec![Matrix::zeros(2, 2)], zero).is_err());
    }

    #[test]
    fn preimage_recovers_vector() {
        let pair = pair_from_alternative(&BinaryAlgebra::octonions()).unwrap();
        let x = sample_vector(7);
        let tr = pair.translations(&x).unwrap();
        assert_eq!(pair.preimage(&tr.s, &tr.t), Some(x));
        assert_eq!(
            pair.preimage(&Matrix::identity(8), &Matrix::zeros(8, 8)),
            None
        );
    }
}
