//! Exact Gaussian elimination: rank, linear solves and inverses.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::tensor::{Matrix, Vector};

/// Reduced row echelon form plus pivot columns.
fn rref(m: &Matrix) -> (Vec<Vec<Scalar>>, Vec<usize>) {
    let mut rows = m.to_rows();
    let (n_rows, n_cols) = m.shape();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..n_cols {
        if r == n_rows {
            break;
        }
        let Some(p) = (r..n_rows).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].recip();
        for v in rows[r].iter_mut() {
            *v *= &inv;
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (a, b) in row.iter_mut().zip(&pivot_row) {
                if !b.is_zero() {
                    *a -= &f * b;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    (rows, pivots)
}

pub fn rank(m: &Matrix) -> usize {
    rref(m).1.len()
}

/// Solves `a x = b`. Returns `None` when the system is inconsistent; when
/// it is underdetermined the free variables are set to zero.
pub fn solve(a: &Matrix, b: &Vector) -> Result<Option<Vector>> {
    if a.rows() != b.dim() {
        return Err(Error::dim("solve", a.rows(), b.dim()));
    }
    let n = a.cols();
    let augmented = Matrix::from_fn(a.rows(), n + 1, |i, j| {
        if j < n {
            a[(i, j)].clone()
        } else {
            b[i].clone()
        }
    });
    let (rows, pivots) = rref(&augmented);
    if pivots.last() == Some(&n) {
        return Ok(None);
    }
    let mut x = Vector::zeros(n);
    for (r, &c) in pivots.iter().enumerate() {
        x[c] = rows[r][n].clone();
    }
    Ok(Some(x))
}

pub fn inverse(m: &Matrix) -> Result<Matrix> {
    if !m.is_square() {
        return Err(Error::dim(
            "inverse",
            "square matrix",
            format!("{}x{}", m.rows(), m.cols()),
        ));
    }
    let n = m.rows();
    let augmented = Matrix::from_fn(n, 2 * n, |i, j| {
        if j < n {
            m[(i, j)].clone()
        } else if j - n == i {
            Scalar::from_integer(1.into())
        } else {
            Scalar::zero()
        }
    });
    let (rows, pivots) = rref(&augmented);
    if pivots.len() < n || pivots[n - 1] != n - 1 {
        return Err(Error::Singular);
    }
    Ok(Matrix::from_fn(n, n, |i, j| rows[i][n + j].clone()))
}
