use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Index, IndexMut, Mul, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::interp::{interpolate, rational_to_int_poly};
use super::{int, IntPoly, Scalar};
use crate::{Error, Result};

/// Dense row-major matrix of exact rationals.
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
        Self::from_fn(n, n, |i, j| if i == j { Scalar::one() } else { Scalar::zero() })
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

    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for r in rows {
            if r.len() != cols {
                return Err(Error::DimensionMismatch { expected: cols, found: r.len() });
            }
            data.extend(r);
        }
        Ok(Matrix { rows: n, cols, data })
    }

    pub fn from_i64_rows(rows: &[&[i64]]) -> Result<Self> {
        Self::from_rows(rows.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect())
    }

    /// Matrix whose columns are the given vectors, all of length `rows`.
    pub fn from_columns(rows: usize, columns: &[Vec<Scalar>]) -> Result<Self> {
        if let Some(bad) = columns.iter().find(|c| c.len() != rows) {
            return Err(Error::DimensionMismatch { expected: rows, found: bad.len() });
        }
        Ok(Self::from_fn(rows, columns.len(), |i, j| columns[j][i].clone()))
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

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<Scalar> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.data
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square() && (0..self.rows).all(|i| (0..i).all(|j| self[(i, j)] == self[(j, i)]))
    }

    pub fn is_integral(&self) -> bool {
        self.data.iter().all(BigRational::is_integer)
    }

    pub fn scale(&self, k: &Scalar) -> Self {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|x| x * k).collect() }
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.cols, "vector length must match column count");
        (0..self.rows).map(|i| super::dot(self.row(i), v)).collect()
    }

    pub fn checked_mul(&self, rhs: &Matrix) -> Result<Matrix> {
        if self.cols != rhs.rows {
            return Err(Error::DimensionMismatch { expected: self.cols, found: rhs.rows });
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
                        out[(i, j)] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    /// Rows cleared of denominators, paired with the product of the row
    /// multipliers.
    fn integer_rows(&self) -> (Vec<Vec<BigInt>>, BigInt) {
        let mut scale = BigInt::one();
        let rows = (0..self.rows)
            .map(|i| {
                let row = self.row(i);
                let l = row.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
                let out = row.iter().map(|x| x.numer() * (&l / x.denom())).collect();
                scale *= l;
                out
            })
            .collect();
        (rows, scale)
    }

    /// Rank over the rationals by fraction-free (Bareiss) elimination.
    pub fn rank(&self) -> usize {
        let (mut a, _) = self.integer_rows();
        bareiss(&mut a, self.cols).0
    }

    /// Determinant by fraction-free elimination.
    pub fn det(&self) -> Result<Scalar> {
        if !self.is_square() {
            return Err(Error::NotSquare { rows: self.rows, cols: self.cols });
        }
        let n = self.rows;
        if n == 0 {
            return Ok(Scalar::one());
        }
        let (mut a, scale) = self.integer_rows();
        let (rank, swaps) = bareiss(&mut a, n);
        if rank < n {
            return Ok(Scalar::zero());
        }
        let mut d = a[n - 1][n - 1].clone();
        if swaps % 2 == 1 {
            d = -d;
        }
        Ok(BigRational::new(d, scale))
    }

    /// Solves `self * x = b` for square nonsingular `self`.
    pub fn solve(&self, b: &[Scalar]) -> Result<Vec<Scalar>> {
        let inv = self.solve_many(&Matrix::from_columns(b.len(), &[b.to_vec()])?)?;
        Ok(inv.column(0))
    }

    pub fn inverse(&self) -> Result<Matrix> {
        self.solve_many(&Matrix::identity(self.rows))
    }

    /// Gauss-Jordan elimination on `[self | rhs]`.
    fn solve_many(&self, rhs: &Matrix) -> Result<Matrix> {
        if !self.is_square() {
            return Err(Error::NotSquare { rows: self.rows, cols: self.cols });
        }
        if rhs.rows != self.rows {
            return Err(Error::DimensionMismatch { expected: self.rows, found: rhs.rows });
        }
        let n = self.rows;
        let m = rhs.cols;
        let mut a: Vec<Vec<Scalar>> = (0..n)
            .map(|i| {
                let mut r = self.row(i).to_vec();
                r.extend_from_slice(rhs.row(i));
                r
            })
            .collect();
        for col in 0..n {
            let p = (col..n).find(|&r| !a[r][col].is_zero()).ok_or(Error::Singular)?;
            a.swap(col, p);
            let inv = a[col][col].recip();
            for x in a[col].iter_mut() {
                *x *= &inv;
            }
            let pivot = a[col].clone();
            for (r, row) in a.iter_mut().enumerate() {
                if r == col || row[col].is_zero() {
                    continue;
                }
                let f = row[col].clone();
                for (x, pv) in row.iter_mut().zip(&pivot) {
                    if !pv.is_zero() {
                        *x -= &f * pv;
                    }
                }
            }
        }
        Ok(Matrix::from_fn(n, m, |i, j| a[i][n + j].clone()))
    }

    /// `c * I - self` for square `self`.
    pub fn shifted_negation(&self, c: &Scalar) -> Matrix {
        let n = self.rows;
        Matrix::from_fn(n, n, |i, j| {
            let v = -&self[(i, j)];
            if i == j {
                v + c
            } else {
                v
            }
        })
    }
}

/// Fraction-free elimination in place. Returns (rank, row swaps).
///
/// After processing `k` pivots every remaining entry is a `(k+1)`-minor of
/// the input, so each division by the previous pivot is exact.
fn bareiss(a: &mut [Vec<BigInt>], cols: usize) -> (usize, usize) {
    let rows = a.len();
    let mut prev = BigInt::one();
    let mut r = 0;
    let mut swaps = 0;
    for col in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[i][col].is_zero()) else {
            continue;
        };
        if p != r {
            a.swap(p, r);
            swaps += 1;
        }
        let (head, tail) = a.split_at_mut(r + 1);
        let pivot_row = &head[r];
        let pivot = &pivot_row[col];
        for row in tail.iter_mut() {
            let f = row[col].clone();
            for j in col + 1..cols {
                let v = pivot * &row[j] - &f * &pivot_row[j];
                row[j] = if prev.is_one() { v } else { v / &prev };
            }
            row[col] = BigInt::zero();
        }
        prev = pivot.clone();
        r += 1;
    }
    (r, swaps)
}

/// Characteristic polynomial `det(tI - m)` of a square integer matrix,
/// by evaluating the determinant at `n + 1` integer points and interpolating.
pub fn char_poly(m: &Matrix) -> Result<IntPoly> {
    if !m.is_square() {
        return Err(Error::NotSquare { rows: m.rows, cols: m.cols });
    }
    if !m.is_integral() {
        return Err(Error::NonIntegral);
    }
    let n = m.rows as i64;
    let pts = (0..=n)
        .map(|c| {
            let c = int(c);
            let d = m.shifted_negation(&c).det()?;
            Ok((c, d))
        })
        .collect::<Result<Vec<_>>>()?;
    let poly = rational_to_int_poly(&interpolate(&pts))
        .ok_or_else(|| Error::Inconsistency("characteristic polynomial is not integral".into()))?;
    if poly.degree() != n as isize || !poly.leading().is_some_and(One::is_one) {
        return Err(Error::Inconsistency("characteristic polynomial is not monic of full degree".into()));
    }
    Ok(poly)
}

impl Index<(usize, usize)> for Matrix {
    type Output = Scalar;

    fn index(&self, (i, j): (usize, usize)) -> &Scalar {
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Scalar {
        &mut self.data[i * self.cols + j]
    }
}

impl Mul for &Matrix {
    type Output = Matrix;

    /// Panics on mismatched dimensions; see [`Matrix::checked_mul`].
    fn mul(self, rhs: &Matrix) -> Matrix {
        self.checked_mul(rhs).expect("matrix dimensions must agree")
    }
}

impl Add for &Matrix {
    type Output = Matrix;

    fn add(self, rhs: &Matrix) -> Matrix {
        assert!(self.rows == rhs.rows && self.cols == rhs.cols);
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect() }
    }
}

impl Sub for &Matrix {
    type Output = Matrix;

    fn sub(self, rhs: &Matrix) -> Matrix {
        assert!(self.rows == rhs.rows && self.cols == rhs.cols);
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect() }
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            f.write_str("  ")?;
            for (j, x) in self.row(i).iter().enumerate() {
                if j > 0 {
                    f.write_str(", ")?;
                }
                if x.is_negative() || !x.is_integer() {
                    write!(f, "{x}")?;
                } else {
                    write!(f, " {x}")?;
                }
            }
            f.write_str("\n")?;
        }
        f.write_str("]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> Matrix {
        Matrix::from_i64_rows(rows).unwrap()
    }

    #[test]
    fn rank_examples() {
        assert_eq!(Matrix::identity(3).rank(), 3);
        // W for (P_3, middle vertex): columns e1, e0 + e2, 2 e1
        let w = m(&[&[0, 1, 0], &[1, 0, 2], &[0, 1, 0]]);
        assert_eq!(w.rank(), 2);
        // W for (P_3, end vertex): columns e0, e1, e0 + e2
        let w = m(&[&[1, 0, 1], &[0, 1, 0], &[0, 0, 1]]);
        assert_eq!(w.rank(), 3);
        assert_eq!(Matrix::zeros(2, 5).rank(), 0);
        assert_eq!(m(&[&[1, 2, 3], &[2, 4, 6]]).rank(), 1);
    }

    #[test]
    fn determinant_and_inverse() {
        let a = m(&[&[2, 1], &[7, 4]]);
        assert_eq!(a.det().unwrap(), int(1));
        assert_eq!(&a * &a.inverse().unwrap(), Matrix::identity(2));
        let half = BigRational::new(1.into(), 2.into());
        let b = Matrix::from_rows(vec![vec![half.clone(), int(0)], vec![int(3), half]]).unwrap();
        assert_eq!(b.det().unwrap(), BigRational::new(1.into(), 4.into()));
        assert_eq!(m(&[&[0, 1], &[1, 0]]).det().unwrap(), int(-1));
        assert_eq!(m(&[&[1, 2], &[2, 4]]).inverse(), Err(Error::Singular));
        assert!(m(&[&[1, 2]]).det().is_err());
    }

    #[test]
    fn char_poly_examples() {
        assert_eq!(char_poly(&m(&[&[0]])).unwrap(), IntPoly::from_i64s(&[0, 1]));
        assert_eq!(char_poly(&m(&[&[0, 1], &[1, 0]])).unwrap(), IntPoly::from_i64s(&[-1, 0, 1]));
        assert_eq!(char_poly(&m(&[&[0, 1, 0], &[1, 0, 1], &[0, 1, 0]])).unwrap(), IntPoly::from_i64s(&[0, -2, 0, 1]));
        assert!(matches!(char_poly(&m(&[&[0, 1]])), Err(Error::NotSquare { .. })));
        let half = BigRational::new(1.into(), 2.into());
        let q = Matrix::from_rows(vec![vec![half]]).unwrap();
        assert_eq!(char_poly(&q), Err(Error::NonIntegral));
    }

    #[test]
    fn solve_round_trip() {
        let a = m(&[&[3, 1, 0], &[1, 3, 1], &[0, 1, 3]]);
        let b = vec![int(1), int(0), int(1)];
        let x = a.solve(&b).unwrap();
        assert_eq!(a.mul_vec(&x), b);
    }
}
