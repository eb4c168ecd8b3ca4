//! Exact rational matrices.
//!
//! Everything here is small and dense. Elimination always pivots on the first
//! nonzero entry so bases come out in the same normal form on every run.

use std::fmt;
use std::ops::Mul;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LinalgError {
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("matrix entry at ({row},{col}) is not an integer")]
    NonInteger { row: usize, col: usize },
    #[error("matrix is singular")]
    Singular,
}

pub type Scalar = BigRational;

pub fn int(v: i64) -> Scalar {
    BigRational::from_integer(BigInt::from(v))
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![Scalar::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Scalar::one();
        }
        m
    }

    pub fn from_ints<R: AsRef<[i64]>>(rows: &[R]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.as_ref().len());
        Self::from_fn(r, c, |i, j| int(rows[i].as_ref()[j]))
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

    /// Matrix whose columns are the given vectors (all of length `rows`).
    pub fn from_columns(rows: usize, columns: &[Vec<Scalar>]) -> Self {
        Self::from_fn(rows, columns.len(), |i, j| columns[j][i].clone())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn transpose(&self) -> Matrix {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn column(&self, j: usize) -> Vec<Scalar> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn scale(&self, c: &Scalar) -> Matrix {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|x| x * c).collect() }
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        self.add(&other.scale(&int(-1)))
    }

    /// Rows `r0..r1` and columns `c0..c1`.
    pub fn block(&self, r0: usize, r1: usize, c0: usize, c1: usize) -> Matrix {
        Self::from_fn(r1 - r0, c1 - c0, |i, j| self[(r0 + i, c0 + j)].clone())
    }

    /// `[A | B | ...]`; every part must have `rows` rows.
    pub fn hstack(rows: usize, parts: &[&Matrix]) -> Matrix {
        let cols = parts.iter().map(|p| p.cols).sum();
        let mut out = Matrix::zeros(rows, cols);
        let mut offset = 0;
        for p in parts {
            assert_eq!(p.rows, rows);
            for i in 0..rows {
                for j in 0..p.cols {
                    out[(i, offset + j)] = p[(i, j)].clone();
                }
            }
            offset += p.cols;
        }
        out
    }

    /// Parts stacked on top of each other; every part must have `cols` columns.
    pub fn vstack(cols: usize, parts: &[&Matrix]) -> Matrix {
        Self::hstack(cols, &parts.iter().map(|p| p.transpose()).collect::<Vec<_>>().iter().collect::<Vec<_>>())
            .transpose()
    }

    /// Block-diagonal sum.
    pub fn direct_sum(parts: &[&Matrix]) -> Matrix {
        let rows = parts.iter().map(|p| p.rows).sum();
        let cols = parts.iter().map(|p| p.cols).sum();
        let mut out = Matrix::zeros(rows, cols);
        let (mut r0, mut c0) = (0, 0);
        for p in parts {
            for i in 0..p.rows {
                for j in 0..p.cols {
                    out[(r0 + i, c0 + j)] = p[(i, j)].clone();
                }
            }
            r0 += p.rows;
            c0 += p.cols;
        }
        out
    }

    /// Reduced row echelon form together with the pivot columns.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let Some(p) = (row..m.rows).find(|&r| !m[(r, col)].is_zero()) else {
                continue;
            };
            m.swap_rows(row, p);
            let inv = m[(row, col)].recip();
            for j in col..m.cols {
                let v = &m[(row, j)] * &inv;
                m[(row, j)] = v;
            }
            for r in 0..m.rows {
                if r != row && !m[(r, col)].is_zero() {
                    let factor = m[(r, col)].clone();
                    for j in col..m.cols {
                        let v = &m[(r, j)] - &factor * &m[(row, j)];
                        m[(r, j)] = v;
                    }
                }
            }
            pivots.push(col);
            row += 1;
        }
        (m, pivots)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the right null space in reduced normal form: one vector per
    /// free column, with a 1 in that column.
    pub fn kernel_basis(&self) -> Vec<Vec<Scalar>> {
        let (r, pivots) = self.rref();
        let mut is_pivot = vec![None; self.cols];
        for (row, &c) in pivots.iter().enumerate() {
            is_pivot[c] = Some(row);
        }
        (0..self.cols)
            .filter(|&c| is_pivot[c].is_none())
            .map(|free| {
                let mut v = vec![Scalar::zero(); self.cols];
                v[free] = Scalar::one();
                for (row, &pc) in pivots.iter().enumerate() {
                    v[pc] = -r[(row, free)].clone();
                }
                v
            })
            .collect()
    }

    /// Kernel basis as the columns of a `cols x k` matrix.
    pub fn kernel_matrix(&self) -> Matrix {
        Matrix::from_columns(self.cols, &self.kernel_basis())
    }

    /// The canonical surjection `k^rows -> k^rows / Im(self)`. Its rows are a
    /// basis of the left null space, taken in kernel normal form.
    pub fn cokernel_projection(&self) -> Matrix {
        let left = self.transpose().kernel_basis();
        Matrix::from_fn(left.len(), self.rows, |i, j| left[i][j].clone())
    }

    pub fn inverse(&self) -> Result<Matrix, LinalgError> {
        if !self.is_square() {
            return Err(LinalgError::NotSquare { rows: self.rows, cols: self.cols });
        }
        let n = self.rows;
        let aug = Matrix::hstack(n, &[self, &Matrix::identity(n)]);
        let (r, pivots) = aug.rref();
        if !pivots.iter().take(n).copied().eq(0..n) {
            return Err(LinalgError::Singular);
        }
        Ok(r.block(0, n, n, 2 * n))
    }

    pub fn is_integral(&self) -> bool {
        self.data.iter().all(|x| x.is_integer())
    }

    fn to_integers(&self) -> Result<Vec<Vec<BigInt>>, LinalgError> {
        (0..self.rows)
            .map(|i| {
                (0..self.cols)
                    .map(|j| {
                        let x = &self[(i, j)];
                        if x.is_integer() {
                            Ok(x.to_integer())
                        } else {
                            Err(LinalgError::NonInteger { row: i, col: j })
                        }
                    })
                    .collect()
            })
            .collect()
    }

    /// Characteristic polynomial `det(tI - A)` of a square integer matrix,
    /// computed with the Faddeev-LeVerrier recurrence over the integers
    /// (every division in the recurrence is exact).
    pub fn char_poly(&self) -> Result<Polynomial, LinalgError> {
        if !self.is_square() {
            return Err(LinalgError::NotSquare { rows: self.rows, cols: self.cols });
        }
        let a = self.to_integers()?;
        let n = self.rows;
        let mut coeffs = vec![BigInt::zero(); n + 1];
        coeffs[n] = BigInt::one();
        // m holds M_k; start from M_0 = 0
        let mut m = vec![vec![BigInt::zero(); n]; n];
        for k in 1..=n {
            // M_k = A * M_{k-1} + c_{n-k+1} I
            let mut next = int_matmul(&a, &m);
            for (i, row) in next.iter_mut().enumerate() {
                row[i] += &coeffs[n - k + 1];
            }
            m = next;
            let am = int_matmul(&a, &m);
            let trace: BigInt = (0..n).map(|i| am[i][i].clone()).sum();
            coeffs[n - k] = -trace / BigInt::from(k);
        }
        Ok(Polynomial(coeffs))
    }
}

fn int_matmul(a: &[Vec<BigInt>], b: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    let n = a.len();
    let inner = b.len();
    let cols = b.first().map_or(0, Vec::len);
    let mut out = vec![vec![BigInt::zero(); cols]; n];
    for i in 0..n {
        for k in 0..inner {
            if a[i][k].is_zero() {
                continue;
            }
            for j in 0..cols {
                if !b[k][j].is_zero() {
                    out[i][j] += &a[i][k] * &b[k][j];
                }
            }
        }
    }
    out
}

impl std::ops::Index<(usize, usize)> for Matrix {
    type Output = Scalar;
    fn index(&self, (i, j): (usize, usize)) -> &Scalar {
        debug_assert!(i < self.rows && j < self.cols);
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Scalar {
        debug_assert!(i < self.rows && j < self.cols);
        &mut self.data[i * self.cols + j]
    }
}

impl Mul for &Matrix {
    type Output = Matrix;
    fn mul(self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.cols, rhs.rows, "shape mismatch in product");
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
                        out[(i, j)] += a * b;
                    }
                }
            }
        }
        out
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Matrix{}x{}[", self.rows, self.cols)?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, "; ")?;
            }
            let row: Vec<String> = (0..self.cols).map(|j| self[(i, j)].to_string()).collect();
            write!(f, "{}", row.join(" "))?;
        }
        write!(f, "]")
    }
}

/// Integer polynomial, coefficients in ascending degree.
#[derive(Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Polynomial(pub Vec<BigInt>);

impl Polynomial {
    pub fn from_coeffs(coeffs: &[i64]) -> Self {
        let mut p = Polynomial(coeffs.iter().map(|&c| BigInt::from(c)).collect());
        p.trim();
        p
    }

    fn trim(&mut self) {
        while self.0.len() > 1 && self.0.last().is_some_and(Zero::is_zero) {
            self.0.pop();
        }
    }

    pub fn degree(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    pub fn coeffs_i64(&self) -> Option<Vec<i64>> {
        self.0.iter().map(ToPrimitive::to_i64).collect()
    }

    /// `p(A)` for a square matrix `A` (Horner).
    pub fn eval_matrix(&self, a: &Matrix) -> Matrix {
        assert!(a.is_square());
        let n = a.rows();
        let mut acc = Matrix::zeros(n, n);
        for c in self.0.iter().rev() {
            acc = (&acc * a).add(&Matrix::identity(n).scale(&BigRational::from_integer(c.clone())));
        }
        acc
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (deg, c) in self.0.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            let abs = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let coeff = if abs.is_one() && deg > 0 { String::new() } else { abs.to_string() };
            match deg {
                0 => write!(f, "{abs}")?,
                1 => write!(f, "{coeff}x")?,
                _ => write!(f, "{coeff}x^{deg}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn v(xs: &[i64]) -> Vec<Scalar> {
        xs.iter().map(|&x| int(x)).collect()
    }

    #[test]
    fn rank_examples() {
        assert_eq!(Matrix::zeros(0, 4).rank(), 0);
        assert_eq!(Matrix::identity(3).rank(), 3);
        assert_eq!(Matrix::from_ints(&[[1, 2], [2, 4]]).rank(), 1);
    }

    #[test]
    fn kernel_examples() {
        assert!(Matrix::identity(3).kernel_basis().is_empty());
        assert_eq!(Matrix::from_ints(&[[1, 1]]).kernel_basis(), vec![v(&[-1, 1])]);
        assert_eq!(Matrix::zeros(2, 2).kernel_basis(), vec![v(&[1, 0]), v(&[0, 1])]);
        // zero columns: the empty map out of a 0-dimensional space
        assert!(Matrix::zeros(3, 0).kernel_basis().is_empty());
        assert_eq!(Matrix::zeros(0, 2).kernel_basis().len(), 2);
    }

    #[test]
    fn cokernel_examples() {
        assert_eq!(Matrix::identity(2).cokernel_projection().rows(), 0);
        assert_eq!(Matrix::zeros(2, 1).cokernel_projection(), Matrix::identity(2));
        assert_eq!(Matrix::from_ints(&[[1], [0]]).cokernel_projection(), Matrix::from_ints(&[[0, 1]]));
        assert_eq!(Matrix::zeros(2, 0).cokernel_projection(), Matrix::identity(2));
    }

    #[test]
    fn char_poly_examples() {
        let p = Matrix::from_ints(&[[5]]).char_poly().unwrap();
        assert_eq!(p, Polynomial::from_coeffs(&[-5, 1]));
        assert_eq!(Matrix::identity(2).char_poly().unwrap(), Polynomial::from_coeffs(&[1, -2, 1]));
        let m = Matrix::from_ints(&[[-1, -1], [1, 0]]);
        assert_eq!(m.char_poly().unwrap(), Polynomial::from_coeffs(&[1, 1, 1]));
        assert_eq!(m.char_poly().unwrap().to_string(), "x^2 + x + 1");
        assert_eq!(Matrix::zeros(2, 3).char_poly(), Err(LinalgError::NotSquare { rows: 2, cols: 3 }));
        let half = Matrix::identity(1).scale(&BigRational::new(1.into(), 2.into()));
        assert_eq!(half.char_poly(), Err(LinalgError::NonInteger { row: 0, col: 0 }));
        assert_eq!(Matrix::zeros(0, 0).char_poly().unwrap(), Polynomial::from_coeffs(&[1]));
    }

    #[test]
    fn inverse_of_unitriangular() {
        let c = Matrix::from_ints(&[[1, 1, 1], [0, 1, 1], [0, 0, 1]]);
        let inv = c.inverse().unwrap();
        assert_eq!(&c * &inv, Matrix::identity(3));
        assert_eq!(Matrix::from_ints(&[[1, 2], [2, 4]]).inverse(), Err(LinalgError::Singular));
    }

    #[test]
    fn polynomial_display() {
        assert_eq!(Polynomial::from_coeffs(&[1, 1]).to_string(), "x + 1");
        assert_eq!(Polynomial::from_coeffs(&[-2, 0, -3]).to_string(), "-3x^2 - 2");
        assert_eq!(Polynomial::from_coeffs(&[0]).to_string(), "0");
    }

    fn small_matrix(max_rows: usize, max_cols: usize) -> impl Strategy<Value = Matrix> {
        (0..=max_rows, 0..=max_cols).prop_flat_map(|(r, c)| {
            proptest::collection::vec(-2i64..3, r * c)
                .prop_map(move |xs| Matrix::from_fn(r, c, |i, j| int(xs[i * c + j])))
        })
    }

    proptest! {
        #[test]
        fn rank_nullity(m in small_matrix(4, 5)) {
            let kernel = m.kernel_basis();
            prop_assert_eq!(m.rank() + kernel.len(), m.cols());
            for k in kernel {
                let col = Matrix::from_columns(m.cols(), &[k]);
                prop_assert!((&m * &col).is_zero());
            }
        }

        #[test]
        fn cokernel_kills_image(m in small_matrix(4, 4)) {
            let p = m.cokernel_projection();
            prop_assert_eq!(p.cols(), m.rows());
            prop_assert!((&p * &m).is_zero());
            prop_assert_eq!(p.rank(), m.rows() - m.rank());
            prop_assert_eq!(p.rows(), p.rank());
        }

        #[test]
        fn cayley_hamilton(xs in proptest::collection::vec(-4i64..5, 9)) {
            let m = Matrix::from_fn(3, 3, |i, j| int(xs[3 * i + j]));
            let p = m.char_poly().unwrap();
            prop_assert_eq!(p.degree(), 3);
            prop_assert!(p.eval_matrix(&m).is_zero());
        }
    }
}
