//! Dense exact vectors, matrices and rank-3/rank-4 tensors.
//!
//! Operator overloads (`&a + &b`, `&a * &b`) panic on shape mismatch, the way
//! dense array libraries usually do; the free functions [`mat_commutator`],
//! [`contract_bilinear`] and [`contract_trilinear`] check shapes and return
//! [`Error::Dimension`] instead.

use std::fmt;
use std::ops::{Add, Index, IndexMut, Mul, Neg, Sub};

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::scalar::{int, one, Scalar};

#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Vector {
    entries: Vec<Scalar>,
}

impl Vector {
    pub fn zeros(dim: usize) -> Self {
        Vector {
            entries: vec![Scalar::zero(); dim],
        }
    }

    /// The `index`-th standard basis vector of length `dim`.
    pub fn basis(dim: usize, index: usize) -> Self {
        let mut v = Self::zeros(dim);
        v.entries[index] = one();
        v
    }

    pub fn from_ints(values: &[i64]) -> Self {
        values.iter().map(|&n| int(n)).collect()
    }

    pub fn dim(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.entries
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Scalar> {
        self.entries.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    /// Indices and values of the nonzero entries, in index order.
    pub fn nonzero(&self) -> impl Iterator<Item = (usize, &Scalar)> {
        self.entries
            .iter()
            .enumerate()
            .filter(|(_, s)| !s.is_zero())
    }

    pub fn scale(&self, factor: &Scalar) -> Self {
        self.entries.iter().map(|s| s * factor).collect()
    }

    /// `self += factor * other`.
    pub fn add_scaled(&mut self, factor: &Scalar, other: &Vector) {
        assert_eq!(self.dim(), other.dim(), "vector length mismatch");
        if factor.is_zero() {
            return;
        }
        for (a, b) in self.entries.iter_mut().zip(&other.entries) {
            if !b.is_zero() {
                *a += factor * b;
            }
        }
    }

    /// The vector as an `n x 1` matrix.
    pub fn to_column(&self) -> Matrix {
        Matrix {
            rows: self.dim(),
            cols: 1,
            data: self.entries.clone(),
        }
    }
}

impl FromIterator<Scalar> for Vector {
    fn from_iter<I: IntoIterator<Item = Scalar>>(iter: I) -> Self {
        Vector {
            entries: iter.into_iter().collect(),
        }
    }
}

impl From<Vec<Scalar>> for Vector {
    fn from(entries: Vec<Scalar>) -> Self {
        Vector { entries }
    }
}

impl Index<usize> for Vector {
    type Output = Scalar;
    fn index(&self, i: usize) -> &Scalar {
        &self.entries[i]
    }
}

impl IndexMut<usize> for Vector {
    fn index_mut(&mut self, i: usize) -> &mut Scalar {
        &mut self.entries[i]
    }
}

impl Add for &Vector {
    type Output = Vector;
    fn add(self, rhs: &Vector) -> Vector {
        assert_eq!(self.dim(), rhs.dim(), "vector length mismatch");
        self.entries
            .iter()
            .zip(&rhs.entries)
            .map(|(a, b)| a + b)
            .collect()
    }
}

impl Sub for &Vector {
    type Output = Vector;
    fn sub(self, rhs: &Vector) -> Vector {
        assert_eq!(self.dim(), rhs.dim(), "vector length mismatch");
        self.entries
            .iter()
            .zip(&rhs.entries)
            .map(|(a, b)| a - b)
            .collect()
    }
}

impl Neg for &Vector {
    type Output = Vector;
    fn neg(self) -> Vector {
        self.entries.iter().map(|a| -a).collect()
    }
}

impl fmt::Display for Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, s) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{s}")?;
        }
        write!(f, ")")
    }
}

/// Dense row-major matrix.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![Scalar::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = one();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Scalar) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    /// Builds a matrix from rows; every row must have the same length.
    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Result<Self> {
        let n_rows = rows.len();
        let n_cols = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(n_rows * n_cols);
        for row in rows {
            if row.len() != n_cols {
                return Err(Error::dim("Matrix::from_rows", n_cols, row.len()));
            }
            data.extend(row);
        }
        Ok(Matrix {
            rows: n_rows,
            cols: n_cols,
            data,
        })
    }

    pub fn from_int_rows(rows: &[&[i64]]) -> Result<Self> {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&n| int(n)).collect())
                .collect(),
        )
    }

    /// Matrix whose `j`-th column is `columns[j]`.
    pub fn from_columns(columns: &[Vector]) -> Result<Self> {
        let rows = columns.first().map_or(0, Vector::dim);
        if let Some(bad) = columns.iter().find(|c| c.dim() != rows) {
            return Err(Error::dim("Matrix::from_columns", rows, bad.dim()));
        }
        Ok(Self::from_fn(rows, columns.len(), |i, j| {
            columns[j][i].clone()
        }))
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vector {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    /// Row-major entries.
    pub fn entries(&self) -> &[Scalar] {
        &self.data
    }

    pub fn to_rows(&self) -> Vec<Vec<Scalar>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn scale(&self, factor: &Scalar) -> Self {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|s| s * factor).collect(),
        }
    }

    /// `self += factor * other`.
    pub fn add_scaled(&mut self, factor: &Scalar, other: &Matrix) {
        assert_eq!(self.shape(), other.shape(), "matrix shape mismatch");
        if factor.is_zero() {
            return;
        }
        for (a, b) in self.data.iter_mut().zip(&other.data) {
            if !b.is_zero() {
                *a += factor * b;
            }
        }
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn apply(&self, v: &Vector) -> Vector {
        assert_eq!(self.cols, v.dim(), "matrix-vector shape mismatch");
        (0..self.rows)
            .map(|i| {
                let mut acc = Scalar::zero();
                for (a, b) in self.row(i).iter().zip(v.iter()) {
                    if !a.is_zero() && !b.is_zero() {
                        acc += a * b;
                    }
                }
                acc
            })
            .collect()
    }

    pub fn try_mul(&self, rhs: &Matrix) -> Result<Matrix> {
        if self.cols != rhs.rows {
            return Err(Error::dim(
                "matrix product",
                format!("{} rows on the right", self.cols),
                rhs.rows,
            ));
        }
        let mut out = Matrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = &rhs[(k, j)];
                    if !b.is_zero() {
                        out.data[i * rhs.cols + j] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    /// `ab - ba`; panics unless both are square of the same size.
    pub fn commutator(&self, rhs: &Matrix) -> Matrix {
        mat_commutator(self, rhs).expect("commutator shape mismatch")
    }
}

/// `ab - ba` for square matrices of equal size.
pub fn mat_commutator(a: &Matrix, b: &Matrix) -> Result<Matrix> {
    if !a.is_square() || a.shape() != b.shape() {
        return Err(Error::dim(
            "mat_commutator",
            format!(
                "two square matrices of equal size, left is {}x{}",
                a.rows, a.cols
            ),
            format!("{}x{}", b.rows, b.cols),
        ));
    }
    let ab = a.try_mul(b)?;
    let ba = b.try_mul(a)?;
    Ok(&ab - &ba)
}

impl Index<(usize, usize)> for Matrix {
    type Output = Scalar;
    fn index(&self, (i, j): (usize, usize)) -> &Scalar {
        assert!(i < self.rows && j < self.cols, "matrix index out of range");
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Scalar {
        assert!(i < self.rows && j < self.cols, "matrix index out of range");
        &mut self.data[i * self.cols + j]
    }
}

impl Add for &Matrix {
    type Output = Matrix;
    fn add(self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.shape(), rhs.shape(), "matrix shape mismatch");
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl Sub for &Matrix {
    type Output = Matrix;
    fn sub(self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.shape(), rhs.shape(), "matrix shape mismatch");
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

impl Neg for &Matrix {
    type Output = Matrix;
    fn neg(self) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| -a).collect(),
        }
    }
}

impl Mul for &Matrix {
    type Output = Matrix;
    fn mul(self, rhs: &Matrix) -> Matrix {
        self.try_mul(rhs).expect("matrix product shape mismatch")
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<String> = self.data.iter().map(ToString::to_string).collect();
        let width = cells.iter().map(String::len).max().unwrap_or(1);
        for i in 0..self.rows {
            write!(f, "[")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{:>width$}", cells[i * self.cols + j])?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}

/// Dense rank-3 tensor indexed `(upper, left, right)`.
///
/// For a product tensor this is `M^k_{ij}` with `e_i e_j = sum_k M^k_{ij} e_k`
/// stored at `(k, i, j)`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Tensor3 {
    dims: [usize; 3],
    data: Vec<Scalar>,
}

impl Tensor3 {
    pub fn zeros(dims: [usize; 3]) -> Self {
        Tensor3 {
            dims,
            data: vec![Scalar::zero(); dims.iter().product()],
        }
    }

    /// Cubic tensor of side `n`.
    pub fn cube(n: usize) -> Self {
        Self::zeros([n, n, n])
    }

    pub fn dims(&self) -> [usize; 3] {
        self.dims
    }

    fn offset(&self, (a, b, c): (usize, usize, usize)) -> usize {
        let [d0, d1, d2] = self.dims;
        assert!(a < d0 && b < d1 && c < d2, "tensor index out of range");
        (a * d1 + b) * d2 + c
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    /// Nonzero entries `((upper, left, right), value)` in index order.
    pub fn nonzero(&self) -> impl Iterator<Item = ((usize, usize, usize), &Scalar)> {
        let [_, d1, d2] = self.dims;
        self.data
            .iter()
            .enumerate()
            .filter(|(_, s)| !s.is_zero())
            .map(move |(n, s)| ((n / (d1 * d2), (n / d2) % d1, n % d2), s))
    }

    /// The vector `t(., left, right)`.
    pub fn fiber(&self, left: usize, right: usize) -> Vector {
        (0..self.dims[0])
            .map(|k| self[(k, left, right)].clone())
            .collect()
    }
}

impl Index<(usize, usize, usize)> for Tensor3 {
    type Output = Scalar;
    fn index(&self, idx: (usize, usize, usize)) -> &Scalar {
        &self.data[self.offset(idx)]
    }
}

impl IndexMut<(usize, usize, usize)> for Tensor3 {
    fn index_mut(&mut self, idx: (usize, usize, usize)) -> &mut Scalar {
        let o = self.offset(idx);
        &mut self.data[o]
    }
}

/// Dense rank-4 tensor indexed `(upper, j, k, l)`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Tensor4 {
    dims: [usize; 4],
    data: Vec<Scalar>,
}

impl Tensor4 {
    pub fn zeros(dims: [usize; 4]) -> Self {
        Tensor4 {
            dims,
            data: vec![Scalar::zero(); dims.iter().product()],
        }
    }

    pub fn hypercube(n: usize) -> Self {
        Self::zeros([n, n, n, n])
    }

    pub fn dims(&self) -> [usize; 4] {
        self.dims
    }

    fn offset(&self, (a, b, c, d): (usize, usize, usize, usize)) -> usize {
        let [d0, d1, d2, d3] = self.dims;
        assert!(
            a < d0 && b < d1 && c < d2 && d < d3,
            "tensor index out of range"
        );
        ((a * d1 + b) * d2 + c) * d3 + d
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn scale(&self, factor: &Scalar) -> Self {
        Tensor4 {
            dims: self.dims,
            data: self.data.iter().map(|s| s * factor).collect(),
        }
    }

    pub fn nonzero(&self) -> impl Iterator<Item = ([usize; 4], &Scalar)> {
        let [_, d1, d2, d3] = self.dims;
        self.data
            .iter()
            .enumerate()
            .filter(|(_, s)| !s.is_zero())
            .map(move |(n, s)| {
                (
                    [
                        n / (d1 * d2 * d3),
                        (n / (d2 * d3)) % d1,
                        (n / d3) % d2,
                        n % d3,
                    ],
                    s,
                )
            })
    }

    /// The vector `t(., j, k, l)`.
    pub fn fiber(&self, j: usize, k: usize, l: usize) -> Vector {
        (0..self.dims[0])
            .map(|i| self[(i, j, k, l)].clone())
            .collect()
    }
}

impl Index<(usize, usize, usize, usize)> for Tensor4 {
    type Output = Scalar;
    fn index(&self, idx: (usize, usize, usize, usize)) -> &Scalar {
        &self.data[self.offset(idx)]
    }
}

impl IndexMut<(usize, usize, usize, usize)> for Tensor4 {
    fn index_mut(&mut self, idx: (usize, usize, usize, usize)) -> &mut Scalar {
        let o = self.offset(idx);
        &mut self.data[o]
    }
}

/// `result^k = sum_{ij} t^k_{ij} x^i y^j`.
pub fn contract_bilinear(t: &Tensor3, x: &Vector, y: &Vector) -> Result<Vector> {
    let [d0, d1, d2] = t.dims;
    if x.dim() != d1 || y.dim() != d2 {
        return Err(Error::dim(
            "contract_bilinear",
            format!("vectors of length {d1} and {d2}"),
            format!("{} and {}", x.dim(), y.dim()),
        ));
    }
    let mut out = Vector::zeros(d0);
    for (i, xi) in x.nonzero() {
        for (j, yj) in y.nonzero() {
            let w = xi * yj;
            for k in 0..d0 {
                let c = &t[(k, i, j)];
                if !c.is_zero() {
                    out[k] += c * &w;
                }
            }
        }
    }
    Ok(out)
}

/// `result^i = sum_{jkl} t^i_{jkl} x^j y^k z^l`.
pub fn contract_trilinear(t: &Tensor4, x: &Vector, y: &Vector, z: &Vector) -> Result<Vector> {
    let [d0, d1, d2, d3] = t.dims;
    if x.dim() != d1 || y.dim() != d2 || z.dim() != d3 {
        return Err(Error::dim(
            "contract_trilinear",
            format!("vectors of length {d1}, {d2} and {d3}"),
            format!("{}, {} and {}", x.dim(), y.dim(), z.dim()),
        ));
    }
    let mut out = Vector::zeros(d0);
    for (j, xj) in x.nonzero() {
        for (k, yk) in y.nonzero() {
            let w = xj * yk;
            for (l, zl) in z.nonzero() {
                let w = &w * zl;
                for i in 0..d0 {
                    let c = &t[(i, j, k, l)];
                    if !c.is_zero() {
                        out[i] += c * &w;
                    }
                }
            }
        }
    }
    Ok(out)
}
