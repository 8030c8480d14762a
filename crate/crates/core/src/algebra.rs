//! Finite-dimensional algebras given by structure constants.
//!
//! [`BinaryAlgebra`] carries an arbitrary bilinear product, optionally with a
//! unit; [`AnticommAlgebra`] carries antisymmetric structure constants and
//! models the tangent algebra. Cayley-Dickson doubling builds the composition
//! algebras used as concrete models.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg;
use crate::scalar::{int, Scalar};
use crate::tensor::{contract_bilinear, Matrix, Tensor3, Vector};

/// Anything with a bilinear product on a fixed basis.
pub trait Bilinear: Sync {
    /// Structure tensor indexed `(output, left, right)`.
    fn structure(&self) -> &Tensor3;

    fn dim(&self) -> usize {
        self.structure().dims()[0]
    }

    /// Product of two basis elements.
    fn basis_product(&self, i: usize, j: usize) -> Vector {
        self.structure().fiber(i, j)
    }

    /// Product of arbitrary vectors; panics on a length mismatch.
    fn product(&self, x: &Vector, y: &Vector) -> Vector {
        contract_bilinear(self.structure(), x, y)
            .expect("vector length must equal algebra dimension")
    }

    fn basis(&self, i: usize) -> Vector {
        Vector::basis(self.dim(), i)
    }
}

fn default_names(dim: usize) -> Vec<String> {
    (0..dim).map(|i| format!("e{i}")).collect()
}

fn check_cube(op: &'static str, t: &Tensor3) -> Result<usize> {
    let [a, b, c] = t.dims();
    if a == 0 || a != b || b != c {
        return Err(Error::dim(
            op,
            "an n x n x n tensor with n > 0",
            format!("{a} x {b} x {c}"),
        ));
    }
    Ok(a)
}

fn check_names(op: &'static str, names: &[String], dim: usize) -> Result<()> {
    if names.len() != dim {
        return Err(Error::dim(op, format!("{dim} basis names"), names.len()));
    }
    Ok(())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BinaryAlgebra {
    mult: Tensor3,
    basis_names: Vec<String>,
    unit: Option<usize>,
}

impl Bilinear for BinaryAlgebra {
    fn structure(&self) -> &Tensor3 {
        &self.mult
    }
}

impl BinaryAlgebra {
    /// Validates the shape and, when `unit` is given, the unit law on every
    /// basis element.
    pub fn new(
        mult: Tensor3,
        basis_names: Option<Vec<String>>,
        unit: Option<usize>,
    ) -> Result<Self> {
        let dim = check_cube("BinaryAlgebra::new", &mult)?;
        let basis_names = basis_names.unwrap_or_else(|| default_names(dim));
        check_names("BinaryAlgebra::new", &basis_names, dim)?;
        let algebra = BinaryAlgebra {
            mult,
            basis_names,
            unit,
        };
        if let Some(u) = unit {
            if u >= dim {
                return Err(Error::Construction(format!(
                    "unit index {u} out of range for dimension {dim}"
                )));
            }
            for i in 0..dim {
                let e = Vector::basis(dim, i);
                if algebra.basis_product(u, i) != e || algebra.basis_product(i, u) != e {
                    return Err(Error::Construction(format!(
                        "e{u} is not a two-sided unit: fails on e{i}"
                    )));
                }
            }
        }
        Ok(algebra)
    }

    /// The one-dimensional algebra of rationals.
    pub fn reals() -> Self {
        let mut mult = Tensor3::cube(1);
        mult[(0, 0, 0)] = int(1);
        BinaryAlgebra::new(mult, None, Some(0)).expect("reals are unital")
    }

    pub fn complex() -> Self {
        cd_double(&Self::reals(), &int(1)).expect("reals are unital")
    }

    pub fn quaternions() -> Self {
        cd_double(&Self::complex(), &int(1)).expect("complex numbers are unital")
    }

    pub fn octonions() -> Self {
        cd_double(&Self::quaternions(), &int(1)).expect("quaternions are unital")
    }

    /// Octonions with `gamma = -1` at the last doubling.
    pub fn split_octonions() -> Self {
        cd_double(&Self::quaternions(), &int(-1)).expect("quaternions are unital")
    }

    pub fn sedenions() -> Self {
        cd_double(&Self::octonions(), &int(1)).expect("octonions are unital")
    }

    pub fn mult(&self) -> &Tensor3 {
        &self.mult
    }

    pub fn basis_names(&self) -> &[String] {
        &self.basis_names
    }

    pub fn unit_index(&self) -> Option<usize> {
        self.unit
    }

    pub fn multiply(&self, x: &Vector, y: &Vector) -> Result<Vector> {
        contract_bilinear(&self.mult, x, y)
    }

    /// Basis indices other than the unit, in order.
    pub fn imaginary_indices(&self) -> Vec<usize> {
        (0..self.dim()).filter(|&i| Some(i) != self.unit).collect()
    }

    /// Conjugation fixing the unit and negating every other basis element.
    pub fn conjugate(&self, x: &Vector) -> Result<Vector> {
        let unit = self
            .unit
            .ok_or_else(|| Error::Construction("conjugation needs a unit".into()))?;
        if x.dim() != self.dim() {
            return Err(Error::dim("conjugate", self.dim(), x.dim()));
        }
        Ok((0..self.dim())
            .map(|i| if i == unit { x[i].clone() } else { -&x[i] })
            .collect())
    }
}

/// Cayley-Dickson doubling with parameter `gamma`:
/// `(a, b)(c, d) = (ac - gamma conj(d) b, da + b conj(c))`.
///
/// The unit of the input becomes `(1, 0)`, which keeps its index; the second
/// copy is indexed `n..2n`.
pub fn cd_double(a: &BinaryAlgebra, gamma: &Scalar) -> Result<BinaryAlgebra> {
    let unit = a.unit.ok_or_else(|| {
        Error::Construction("Cayley-Dickson doubling needs a unital algebra".into())
    })?;
    let n = a.dim();
    let halves = |i: usize| -> (Vector, Vector) {
        if i < n {
            (Vector::basis(n, i), Vector::zeros(n))
        } else {
            (Vector::zeros(n), Vector::basis(n, i - n))
        }
    };
    let mul = |x: &Vector, y: &Vector| a.multiply(x, y).expect("dimensions match");
    let mut mult = Tensor3::cube(2 * n);
    for i in 0..2 * n {
        let (pa, pb) = halves(i);
        for j in 0..2 * n {
            let (qc, qd) = halves(j);
            let mut first = mul(&pa, &qc);
            first.add_scaled(&-gamma, &mul(&a.conjugate(&qd)?, &pb));
            let second = &mul(&qd, &pa) + &mul(&pb, &a.conjugate(&qc)?);
            for k in 0..n {
                mult[(k, i, j)] = first[k].clone();
                mult[(n + k, i, j)] = second[k].clone();
            }
        }
    }
    BinaryAlgebra::new(mult, None, Some(unit))
}

/// Matrix of `v -> x v`; column `j` is `x e_j`.
pub fn left_mult(a: &BinaryAlgebra, x: &Vector) -> Result<Matrix> {
    if x.dim() != a.dim() {
        return Err(Error::dim("left_mult", a.dim(), x.dim()));
    }
    let cols: Vec<Vector> = (0..a.dim()).map(|j| a.product(x, &a.basis(j))).collect();
    Matrix::from_columns(&cols)
}

/// Matrix of `v -> v x`; column `j` is `e_j x`.
pub fn right_mult(a: &BinaryAlgebra, x: &Vector) -> Result<Matrix> {
    if x.dim() != a.dim() {
        return Err(Error::dim("right_mult", a.dim(), x.dim()));
    }
    let cols: Vec<Vector> = (0..a.dim()).map(|j| a.product(&a.basis(j), x)).collect();
    Matrix::from_columns(&cols)
}

/// `(xy)z - x(yz)`.
pub fn associator(a: &impl Bilinear, x: &Vector, y: &Vector, z: &Vector) -> Result<Vector> {
    let n = a.dim();
    if x.dim() != n || y.dim() != n || z.dim() != n {
        return Err(Error::dim(
            "associator",
            n,
            format!("{}, {}, {}", x.dim(), y.dim(), z.dim()),
        ));
    }
    Ok(&a.product(&a.product(x, y), z) - &a.product(x, &a.product(y, z)))
}

/// Anticommutative algebra: `C^i_{jk} = -C^i_{kj}` exactly.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AnticommAlgebra {
    c: Tensor3,
    basis_names: Vec<String>,
}

impl Bilinear for AnticommAlgebra {
    fn structure(&self) -> &Tensor3 {
        &self.c
    }
}

impl AnticommAlgebra {
    pub fn new(c: Tensor3, basis_names: Option<Vec<String>>) -> Result<Self> {
        let dim = check_cube("AnticommAlgebra::new", &c)?;
        let basis_names = basis_names.unwrap_or_else(|| default_names(dim));
        check_names("AnticommAlgebra::new", &basis_names, dim)?;
        for i in 0..dim {
            for j in 0..dim {
                for k in j..dim {
                    if c[(i, j, k)] != -&c[(i, k, j)] {
                        return Err(Error::NotAnticommutative {
                            upper: i,
                            left: j,
                            right: k,
                            value: c[(i, j, k)].to_string(),
                            swapped: c[(i, k, j)].to_string(),
                        });
                    }
                }
            }
        }
        Ok(AnticommAlgebra { c, basis_names })
    }

    /// The algebra with all brackets zero.
    pub fn abelian(dim: usize) -> Self {
        AnticommAlgebra::new(Tensor3::cube(dim), None).expect("zero tensor is antisymmetric")
    }

    /// Builds from `(left, right, output, value)` triples for `left < right`;
    /// the swapped entries are filled in with the opposite sign.
    pub fn from_brackets(dim: usize, brackets: &[(usize, usize, usize, Scalar)]) -> Result<Self> {
        let mut c = Tensor3::cube(dim);
        for (j, k, i, v) in brackets {
            if j == k {
                return Err(Error::Construction(format!(
                    "bracket [e{j}, e{j}] must vanish"
                )));
            }
            c[(*i, *j, *k)] += v;
            c[(*i, *k, *j)] -= v;
        }
        AnticommAlgebra::new(c, None)
    }

    pub fn c(&self) -> &Tensor3 {
        &self.c
    }

    pub fn basis_names(&self) -> &[String] {
        &self.basis_names
    }

    pub fn bracket(&self, x: &Vector, y: &Vector) -> Result<Vector> {
        contract_bilinear(&self.c, x, y)
    }

    /// Re-expresses the algebra in the basis given by the columns of `q`
    /// (old coordinates). `q` must be invertible.
    pub fn change_basis(&self, q: &Matrix) -> Result<AnticommAlgebra> {
        let n = self.dim();
        if q.shape() != (n, n) {
            return Err(Error::dim(
                "change_basis",
                format!("{n}x{n}"),
                format!("{}x{}", q.rows(), q.cols()),
            ));
        }
        let q_inv = linalg::inverse(q)?;
        let new_basis: Vec<Vector> = (0..n).map(|a| q.column(a)).collect();
        let mut c = Tensor3::cube(n);
        for a in 0..n {
            for b in 0..n {
                let coords = q_inv.apply(&self.product(&new_basis[a], &new_basis[b]));
                for (k, s) in coords.nonzero() {
                    c[(k, a, b)] = s.clone();
                }
            }
        }
        AnticommAlgebra::new(c, None)
    }
}

/// The commutator algebra `[x, y] = xy - yx` on the span of the non-unit
/// basis elements.
pub fn commutator_algebra(a: &BinaryAlgebra) -> Result<AnticommAlgebra> {
    let unit = a
        .unit
        .ok_or_else(|| Error::Construction("commutator algebra needs a unital algebra".into()))?;
    let imag = a.imaginary_indices();
    let m = imag.len();
    if m == 0 {
        return Err(Error::Construction("algebra has no imaginary part".into()));
    }
    let mut c = Tensor3::cube(m);
    for (jj, &j) in imag.iter().enumerate() {
        for (kk, &k) in imag.iter().enumerate() {
            let v = &a.basis_product(j, k) - &a.basis_product(k, j);
            if !v[unit].is_zero() {
                return Err(Error::Closure {
                    left: j,
                    right: k,
                    unit,
                    component: v[unit].to_string(),
                });
            }
            for (ii, &i) in imag.iter().enumerate() {
                c[(ii, jj, kk)] = v[i].clone();
            }
        }
    }
    let names = imag.iter().map(|&i| a.basis_names[i].clone()).collect();
    AnticommAlgebra::new(c, Some(names))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::axioms;
    use crate::tensor::mat_commutator;

    fn e(a: &impl Bilinear, i: usize) -> Vector {
        a.basis(i)
    }

    #[test]
    fn complex_numbers_from_one_doubling() {
        let c = BinaryAlgebra::complex();
        assert_eq!(c.dim(), 2);
        assert_eq!(c.basis_product(1, 1), Vector::from_ints(&[-1, 0]));
        assert_eq!(c.basis_product(0, 1), Vector::from_ints(&[0, 1]));
    }

    #[test]
    fn octonion_e1_e2() {
        let o = BinaryAlgebra::octonions();
        // In the quaternions e1 = (i, 0), e2 = (0, 1), e3 = (0, i) and
        // (i, 0)(0, 1) = (0 - 0, 1 i + 0) = (0, i).
        assert_eq!(o.basis_product(1, 2), Vector::basis(8, 3));
        assert_eq!(o.basis_product(2, 1), -&Vector::basis(8, 3));
    }

    #[test]
    fn doubling_requires_unit() {
        let a = BinaryAlgebra::new(Tensor3::cube(2), None, None).unwrap();
        assert!(matches!(
            cd_double(&a, &int(1)),
            Err(Error::Construction(_))
        ));
    }

    #[test]
    fn bad_unit_rejected() {
        let mut t = Tensor3::cube(2);
        t[(0, 0, 0)] = int(1);
        assert!(BinaryAlgebra::new(t, None, Some(0)).is_err());
    }

    #[test]
    fn left_mult_of_unit_and_zero() {
        let o = BinaryAlgebra::octonions();
        assert_eq!(left_mult(&o, &e(&o, 0)).unwrap(), Matrix::identity(8));
        assert!(left_mult(&o, &Vector::zeros(8)).unwrap().is_zero());
        assert!(left_mult(&o, &Vector::zeros(4)).is_err());
        assert!(right_mult(&o, &Vector::zeros(9)).is_err());
    }

    #[test]
    fn left_and_right_mult_act_by_multiplication() {
        let o = BinaryAlgebra::octonions();
        let x = Vector::from_ints(&[1, -2, 0, 3, 0, 0, 5, 1]);
        let v = Vector::from_ints(&[0, 1, 1, 0, -4, 2, 0, 0]);
        assert_eq!(left_mult(&o, &x).unwrap().apply(&v), o.product(&x, &v));
        assert_eq!(right_mult(&o, &x).unwrap().apply(&v), o.product(&v, &x));
    }

    #[test]
    fn quaternion_left_and_right_commute() {
        let h = BinaryAlgebra::quaternions();
        for i in 0..4 {
            for j in 0..4 {
                let l = left_mult(&h, &e(&h, i)).unwrap();
                let r = right_mult(&h, &e(&h, j)).unwrap();
                assert!(mat_commutator(&l, &r).unwrap().is_zero());
            }
        }
    }

    #[test]
    fn commutator_algebras() {
        let h = commutator_algebra(&BinaryAlgebra::quaternions()).unwrap();
        assert_eq!(h.dim(), 3);
        // [e1, e2] = 2 e3, i.e. twice the cross product
        assert_eq!(h.basis_product(0, 1), Vector::from_ints(&[0, 0, 2]));
        assert!(axioms::check_jacobi(&h).passed());

        let o = commutator_algebra(&BinaryAlgebra::octonions()).unwrap();
        assert_eq!(o.dim(), 7);
        assert!(axioms::check_anticommutative(&o).passed());
    }

    #[test]
    fn closure_failure_reports_witness() {
        // e1 e2 = e0, e2 e1 = 0: the commutator leaks onto the unit.
        let mut t = Tensor3::cube(3);
        for i in 0..3 {
            t[(i, 0, i)] = int(1);
            t[(i, i, 0)] = int(1);
        }
        t[(0, 1, 2)] = int(1);
        let a = BinaryAlgebra::new(t, None, Some(0)).unwrap();
        match commutator_algebra(&a) {
            Err(Error::Closure {
                left,
                right,
                unit,
                component,
            }) => {
                assert_eq!((left, right, unit), (1, 2, 0));
                assert_eq!(component, "1");
            }
            other => panic!("expected closure error, got {other:?}"),
        }
    }

    #[test]
    fn associator_cases() {
        let h = BinaryAlgebra::quaternions();
        let (x, y, z) = (e(&h, 1), e(&h, 2), e(&h, 3));
        assert!(associator(&h, &x, &y, &z).unwrap().is_zero());

        let o = BinaryAlgebra::octonions();
        let x = Vector::from_ints(&[0, 1, 2, 0, 0, -1, 0, 3]);
        let y = Vector::from_ints(&[1, 0, 0, 4, 1, 0, 0, 0]);
        assert!(associator(&o, &x, &x, &y).unwrap().is_zero());
        // e1, e2 span a quaternion subalgebra with e3; e4 lies outside it.
        let a = associator(&o, &e(&o, 1), &e(&o, 2), &e(&o, 4)).unwrap();
        let expected = &o.product(&o.product(&e(&o, 1), &e(&o, 2)), &e(&o, 4))
            - &o.product(&e(&o, 1), &o.product(&e(&o, 2), &e(&o, 4)));
        assert!(!a.is_zero());
        assert_eq!(a, expected);
        assert!(associator(&o, &x, &y, &Vector::zeros(3)).is_err());
    }

    #[test]
    fn anticommutativity_enforced() {
        let mut c = Tensor3::cube(3);
        c[(0, 1, 2)] = int(1);
        c[(0, 2, 1)] = int(2);
        assert!(matches!(
            AnticommAlgebra::new(c, None),
            Err(Error::NotAnticommutative {
                upper: 0,
                left: 1,
                right: 2,
                ..
            })
        ));
    }

    #[test]
    fn change_basis_round_trip() {
        let g = commutator_algebra(&BinaryAlgebra::quaternions()).unwrap();
        let q = Matrix::from_int_rows(&[&[1, 1, 0], &[0, 1, 0], &[2, 0, 1]]).unwrap();
        let h = g.change_basis(&q).unwrap();
        let back = h.change_basis(&linalg::inverse(&q).unwrap()).unwrap();
        assert_eq!(back.c(), g.c());
    }
}
