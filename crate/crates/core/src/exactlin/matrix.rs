use std::fmt;

use num_traits::{One, Zero};

use super::Scalar;
use crate::error::{Error, Result};

/// Coordinate vector over Q(i).
pub type Vector = Vec<Scalar>;

pub fn zero_vector(n: usize) -> Vector {
    vec![Scalar::zero(); n]
}

pub fn unit_vector(n: usize, i: usize) -> Vector {
    let mut v = zero_vector(n);
    v[i] = Scalar::one();
    v
}

pub fn is_zero_vector(v: &[Scalar]) -> bool {
    v.iter().all(Zero::is_zero)
}

pub fn add_vectors(a: &[Scalar], b: &[Scalar]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn sub_vectors(a: &[Scalar], b: &[Scalar]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn scale_vector(c: &Scalar, v: &[Scalar]) -> Vector {
    v.iter().map(|x| c * x).collect()
}

/// `a += c * b`
pub fn axpy(a: &mut [Scalar], c: &Scalar, b: &[Scalar]) {
    if c.is_zero() {
        return;
    }
    for (x, y) in a.iter_mut().zip(b) {
        if !y.is_zero() {
            *x += &(c * y);
        }
    }
}

pub fn conj_vector(v: &[Scalar]) -> Vector {
    v.iter().map(Scalar::conj).collect()
}

/// Dense row-major matrix over Q(i).
#[derive(Clone, PartialEq, Eq, Hash)]
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
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Scalar::one());
        }
        m
    }

    pub fn from_data(rows: usize, cols: usize, data: Vec<Scalar>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!(
                "{} entries for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        Ok(Matrix { rows, cols, data })
    }

    pub fn from_rows(rows: Vec<Vector>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::DimensionMismatch("ragged rows".into()));
        }
        Ok(Matrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        })
    }

    /// Builds a matrix whose columns are the given vectors, each of length `rows`.
    pub fn from_columns(rows: usize, columns: &[Vector]) -> Self {
        let mut m = Matrix::zeros(rows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), rows, "column length mismatch");
            for (i, x) in col.iter().enumerate() {
                m.set(i, j, x.clone());
            }
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, f: impl Fn(usize, usize) -> Scalar) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn diagonal(entries: &[Scalar]) -> Self {
        let mut m = Matrix::zeros(entries.len(), entries.len());
        for (i, x) in entries.iter().enumerate() {
            m.set(i, i, x.clone());
        }
        m
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

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, x: Scalar) {
        self.data[i * self.cols + j] = x;
    }

    pub fn entry_mut(&mut self, i: usize, j: usize) -> &mut Scalar {
        &mut self.data[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vector {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn data(&self) -> &[Scalar] {
        &self.data
    }

    pub fn into_data(self) -> Vec<Scalar> {
        self.data
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn is_real(&self) -> bool {
        self.data.iter().all(Scalar::is_real)
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    /// Entrywise complex conjugate.
    pub fn conj(&self) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: conj_vector(&self.data),
        }
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Matrix {
        Matrix::from_fn(self.cols, self.rows, |i, j| self.get(j, i).conj())
    }

    pub fn scale(&self, c: &Scalar) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: scale_vector(c, &self.data),
        }
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: add_vectors(&self.data, &other.data),
        }
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: sub_vectors(&self.data, &other.data),
        }
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "matrix product dimension mismatch");
        let mut out = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                let row = other.row(k);
                for (j, b) in row.iter().enumerate() {
                    if !b.is_zero() {
                        *out.entry_mut(i, j) += &(a * b);
                    }
                }
            }
        }
        out
    }

    pub fn apply(&self, v: &[Scalar]) -> Vector {
        assert_eq!(self.cols, v.len(), "matrix-vector dimension mismatch");
        let mut out = zero_vector(self.rows);
        for (k, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (i, slot) in out.iter_mut().enumerate() {
                let a = self.get(i, k);
                if !a.is_zero() {
                    *slot += &(a * x);
                }
            }
        }
        out
    }

    /// `[self, other] = self·other − other·self`.
    pub fn commutator(&self, other: &Matrix) -> Matrix {
        self.mul(other).sub(&other.mul(self))
    }

    pub fn pow(&self, k: usize) -> Matrix {
        assert!(self.is_square());
        let mut acc = Matrix::identity(self.rows);
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn trace(&self) -> Scalar {
        (0..self.rows.min(self.cols))
            .map(|i| self.get(i, i).clone())
            .sum()
    }

    /// Extracts the block with the given row and column index lists.
    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Matrix {
        Matrix::from_fn(rows.len(), cols.len(), |i, j| {
            self.get(rows[i], cols[j]).clone()
        })
    }

    /// Column-stacked block `[self | other]`.
    pub fn hcat(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.rows, other.rows);
        Matrix::from_fn(self.rows, self.cols + other.cols, |i, j| {
            if j < self.cols {
                self.get(i, j).clone()
            } else {
                other.get(i, j - self.cols).clone()
            }
        })
    }

    /// Row-stacked block `[self; other]`.
    pub fn vcat(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.cols);
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Matrix {
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn rank(&self) -> usize {
        rref(self).1.len()
    }

    pub fn determinant(&self) -> Scalar {
        assert!(self.is_square());
        let n = self.rows;
        let mut a = self.clone();
        let mut det = Scalar::one();
        for k in 0..n {
            let Some(p) = (k..n).find(|&i| !a.get(i, k).is_zero()) else {
                return Scalar::zero();
            };
            if p != k {
                a.swap_rows(p, k);
                det = -det;
            }
            let pivot = a.get(k, k).clone();
            det = &det * &pivot;
            let inv = pivot.inv().expect("nonzero pivot");
            for i in k + 1..n {
                let f = a.get(i, k) * &inv;
                if f.is_zero() {
                    continue;
                }
                for j in k..n {
                    let t = &f * a.get(k, j);
                    *a.entry_mut(i, j) -= &t;
                }
            }
        }
        det
    }

    pub fn inverse(&self) -> Option<Matrix> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        if n == 0 {
            return Some(Matrix::zeros(0, 0));
        }
        let aug = self.hcat(&Matrix::identity(n));
        let (r, pivots) = rref(&aug);
        if pivots.len() < n || pivots[n - 1] >= n {
            return None;
        }
        Some(Matrix::from_fn(n, n, |i, j| r.get(i, n + j).clone()))
    }

    pub(crate) fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

/// Reduced row echelon form and the list of pivot columns.
pub fn rref(m: &Matrix) -> (Matrix, Vec<usize>) {
    let mut a = m.clone();
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..a.cols {
        if row == a.rows {
            break;
        }
        let Some(p) = (row..a.rows).find(|&i| !a.get(i, col).is_zero()) else {
            continue;
        };
        a.swap_rows(p, row);
        let inv = a.get(row, col).inv().expect("nonzero pivot");
        for j in col..a.cols {
            let v = a.get(row, j) * &inv;
            a.set(row, j, v);
        }
        let pivot_row: Vector = a.row(row).to_vec();
        for i in 0..a.rows {
            if i == row {
                continue;
            }
            let f = a.get(i, col).clone();
            if f.is_zero() {
                continue;
            }
            for (j, pv) in pivot_row.iter().enumerate().skip(col) {
                if !pv.is_zero() {
                    let t = &f * pv;
                    *a.entry_mut(i, j) -= &t;
                }
            }
        }
        pivots.push(col);
        row += 1;
    }
    (a, pivots)
}

/// Canonical solution of `A x = b`: free variables set to zero.
///
/// Returns `Ok(None)` when the system is inconsistent.
pub fn solve(a: &Matrix, b: &[Scalar]) -> Result<Option<Vector>> {
    if a.rows != b.len() {
        return Err(Error::DimensionMismatch(format!(
            "right-hand side of length {} for a matrix with {} rows",
            b.len(),
            a.rows
        )));
    }
    let aug = a.hcat(&Matrix::from_columns(a.rows, &[b.to_vec()]));
    let (r, pivots) = rref(&aug);
    if pivots.last() == Some(&a.cols) {
        return Ok(None);
    }
    let mut x = zero_vector(a.cols);
    for (row, &col) in pivots.iter().enumerate() {
        x[col] = r.get(row, a.cols).clone();
    }
    Ok(Some(x))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> Matrix {
        Matrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| Scalar::int(x)).collect())
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn solve_identity_returns_rhs() {
        let b = vec![Scalar::int(3), Scalar::gaussian(1, 1), Scalar::frac(-1, 2)];
        assert_eq!(solve(&Matrix::identity(3), &b).unwrap(), Some(b));
    }

    #[test]
    fn solve_zero_matrix_inconsistent() {
        let b = vec![Scalar::int(1), Scalar::int(0)];
        assert_eq!(solve(&Matrix::zeros(2, 2), &b).unwrap(), None);
    }

    #[test]
    fn solve_picks_free_variables_zero() {
        // [[1, i], [0, 0]] x = (1, 0)
        let a = Matrix::from_rows(vec![
            vec![Scalar::int(1), Scalar::i()],
            vec![Scalar::int(0), Scalar::int(0)],
        ])
        .unwrap();
        let x = solve(&a, &[Scalar::int(1), Scalar::int(0)]).unwrap();
        assert_eq!(x, Some(vec![Scalar::int(1), Scalar::int(0)]));
    }

    #[test]
    fn solve_rejects_dimension_mismatch() {
        assert!(matches!(
            solve(&Matrix::identity(2), &[Scalar::int(1)]),
            Err(Error::DimensionMismatch(_))
        ));
    }

    #[test]
    fn determinant_and_inverse() {
        let a = m(&[&[2, 1], &[7, 4]]);
        assert_eq!(a.determinant(), Scalar::int(1));
        let inv = a.inverse().unwrap();
        assert_eq!(a.mul(&inv), Matrix::identity(2));
        assert!(m(&[&[1, 2], &[2, 4]]).inverse().is_none());
    }

    #[test]
    fn rref_is_idempotent() {
        let a = m(&[&[0, 2, 4], &[1, 1, 1], &[1, 3, 5]]);
        let (r, p) = rref(&a);
        let (r2, p2) = rref(&r);
        assert_eq!(r, r2);
        assert_eq!(p, p2);
        assert_eq!(p, vec![0, 1]);
    }
}
