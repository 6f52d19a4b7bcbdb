//! Exact integer and rational matrices, with rank by fraction-free elimination.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::numerics::eigen::SymMatrix;

/// Dense integer matrix, row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<i64>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> IntMatrix {
        IntMatrix {
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn scaled_identity(side: usize, value: i64) -> IntMatrix {
        let mut m = IntMatrix::zeros(side, side);
        for i in 0..side {
            m.set(i, i, value);
        }
        m
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Result<IntMatrix> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::InvalidInput("ragged matrix rows".into()));
        }
        Ok(IntMatrix {
            rows: rows.len(),
            cols,
            data: rows.concat(),
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: i64) {
        self.data[i * self.cols + j] = v;
    }

    pub fn add_at(&mut self, i: usize, j: usize, v: i64) {
        self.data[i * self.cols + j] += v;
    }

    pub fn row(&self, i: usize) -> &[i64] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn transpose(&self) -> IntMatrix {
        let mut t = IntMatrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j));
            }
        }
        t
    }

    pub fn mul(&self, other: &IntMatrix) -> Result<IntMatrix> {
        if self.cols != other.rows {
            return Err(Error::InvalidInput(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = IntMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    out.data[i * other.cols + j] += a * other.get(k, j);
                }
            }
        }
        Ok(out)
    }

    pub fn add(&self, other: &IntMatrix) -> Result<IntMatrix> {
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(Error::InvalidInput("matrix shapes differ".into()));
        }
        Ok(IntMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    pub fn is_symmetric(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| (i + 1..self.cols).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn to_sym(&self) -> Result<SymMatrix> {
        if self.rows != self.cols {
            return Err(Error::InvalidInput("matrix is not square".into()));
        }
        SymMatrix::new(self.rows, self.data.iter().map(|&x| x as f64).collect())
    }

    pub fn to_rational(&self) -> RationalMatrix {
        RationalMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .map(|&x| BigRational::from_integer(BigInt::from(x)))
                .collect(),
        }
    }

    /// Rank over the rationals.
    pub fn rank(&self) -> usize {
        rank_rows_i64(self.rows, self.cols, &self.data)
    }
}

/// Dense matrix of exact rationals (always in lowest terms).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigRational>,
}

impl RationalMatrix {
    pub fn zeros(rows: usize, cols: usize) -> RationalMatrix {
        RationalMatrix {
            rows,
            cols,
            data: vec![BigRational::zero(); rows * cols],
        }
    }

    pub fn from_rows(rows: Vec<Vec<BigRational>>) -> Result<RationalMatrix> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::InvalidInput("ragged matrix rows".into()));
        }
        Ok(RationalMatrix {
            rows: rows.len(),
            cols,
            data: rows.into_iter().flatten().collect(),
        })
    }

    /// A `rows x cols` matrix with every entry equal to `value`.
    pub fn filled(rows: usize, cols: usize, value: BigRational) -> RationalMatrix {
        RationalMatrix {
            rows,
            cols,
            data: vec![value; rows * cols],
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigRational {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigRational) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[BigRational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn transpose(&self) -> RationalMatrix {
        let mut t = RationalMatrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    /// Inner product of rows `i` and `j`.
    pub fn row_dot(&self, i: usize, j: usize) -> BigRational {
        self.row(i)
            .iter()
            .zip(self.row(j))
            .fold(BigRational::zero(), |acc, (a, b)| acc + a * b)
    }

    /// `M M^T`.
    pub fn gram(&self) -> RationalMatrix {
        let mut g = RationalMatrix::zeros(self.rows, self.rows);
        for i in 0..self.rows {
            for j in i..self.rows {
                let d = self.row_dot(i, j);
                g.set(j, i, d.clone());
                g.set(i, j, d);
            }
        }
        g
    }

    pub fn entries(&self) -> &[BigRational] {
        &self.data
    }

    /// Rank over the rationals.
    pub fn rank(&self) -> usize {
        rank_exact(self)
    }
}

/// Rank of a rational matrix by Bareiss elimination.
///
/// Rows are scaled to integers first. Elimination runs in `i128` and
/// restarts with arbitrary-precision integers if any step overflows.
pub fn rank_exact(m: &RationalMatrix) -> usize {
    let mut rows: Vec<Vec<BigInt>> = Vec::with_capacity(m.rows);
    for i in 0..m.rows {
        let row = m.row(i);
        let lcm = row
            .iter()
            .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
        rows.push(row.iter().map(|x| (x * &lcm).to_integer()).collect());
    }
    let small: Option<Vec<i128>> = rows
        .iter()
        .flatten()
        .map(|x| x.to_i64().map(i128::from))
        .collect();
    if let Some(data) = small {
        if let Some(r) = bareiss_i128(m.rows, m.cols, data) {
            return r;
        }
    }
    bareiss_big(m.cols, rows)
}

fn rank_rows_i64(rows: usize, cols: usize, data: &[i64]) -> usize {
    let wide: Vec<i128> = data.iter().map(|&x| x as i128).collect();
    match bareiss_i128(rows, cols, wide) {
        Some(r) => r,
        None => bareiss_big(
            cols,
            data.chunks(cols.max(1))
                .take(rows)
                .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
                .collect(),
        ),
    }
}

/// `None` on overflow.
fn bareiss_i128(rows: usize, cols: usize, mut a: Vec<i128>) -> Option<usize> {
    let mut rank = 0;
    let mut prev: i128 = 1;
    for c in 0..cols {
        if rank == rows {
            break;
        }
        let Some(p) = (rank..rows).find(|&r| a[r * cols + c] != 0) else {
            continue;
        };
        if p != rank {
            for j in 0..cols {
                a.swap(p * cols + j, rank * cols + j);
            }
        }
        let piv = a[rank * cols + c];
        for r in rank + 1..rows {
            let f = a[r * cols + c];
            let row_zero = (c..cols).all(|j| a[r * cols + j] == 0);
            if row_zero {
                continue;
            }
            for j in c + 1..cols {
                let x = piv.checked_mul(a[r * cols + j])?;
                let y = f.checked_mul(a[rank * cols + j])?;
                a[r * cols + j] = x.checked_sub(y)? / prev;
            }
            a[r * cols + c] = 0;
        }
        prev = piv;
        rank += 1;
    }
    Some(rank)
}

fn bareiss_big(cols: usize, mut a: Vec<Vec<BigInt>>) -> usize {
    let rows = a.len();
    let mut rank = 0;
    let mut prev = BigInt::one();
    for c in 0..cols {
        if rank == rows {
            break;
        }
        let Some(p) = (rank..rows).find(|&r| !a[r][c].is_zero()) else {
            continue;
        };
        a.swap(p, rank);
        let piv = a[rank][c].clone();
        for r in rank + 1..rows {
            if a[r][c..].iter().all(Zero::is_zero) {
                continue;
            }
            let f = a[r][c].clone();
            for j in c + 1..cols {
                let v = (&piv * &a[r][j] - &f * &a[rank][j]) / &prev;
                a[r][j] = v;
            }
            a[r][c] = BigInt::zero();
        }
        prev = piv;
        rank += 1;
    }
    rank
}

/// Parses `"p/q"` or `"p"` into a rational.
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let bad = || Error::InvalidInput(format!("not a rational: {s:?}"));
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((p, q)) => (p.trim(), q.trim()),
        None => (s, "1"),
    };
    let p: BigInt = num.parse().map_err(|_| bad())?;
    let q: BigInt = den.parse().map_err(|_| bad())?;
    if q.is_zero() {
        return Err(bad());
    }
    Ok(BigRational::new(p, q))
}

/// Formats a rational as `"p/q"`, or `"p"` when integral.
pub fn format_rational(x: &BigRational) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

pub fn rational_to_f64(x: &BigRational) -> f64 {
    x.to_f64().unwrap_or(f64::NAN)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(p: i64, q: i64) -> BigRational {
        BigRational::new(p.into(), q.into())
    }

    #[test]
    fn zero_matrix_rank() {
        assert_eq!(IntMatrix::zeros(3, 4).rank(), 0);
        assert_eq!(IntMatrix::zeros(0, 3).rank(), 0);
        assert_eq!(IntMatrix::zeros(3, 0).rank(), 0);
    }

    #[test]
    fn hollow_triangle_coboundary_rank() {
        // rows: edges 01, 02, 12; cols: vertices
        let d0 = IntMatrix::from_rows(&[vec![-1, 1, 0], vec![-1, 0, 1], vec![0, -1, 1]]).unwrap();
        assert_eq!(d0.rank(), 2);
        assert_eq!(d0.transpose().rank(), 2);
    }

    #[test]
    fn rational_rank_with_fractions() {
        let m = RationalMatrix::from_rows(vec![
            vec![r(1, 2), r(1, 3)],
            vec![r(3, 2), r(1, 1)],
            vec![r(0, 1), r(0, 1)],
        ])
        .unwrap();
        assert_eq!(m.rank(), 1);
    }

    #[test]
    fn big_fallback_agrees() {
        // entries near i64::MAX force the arbitrary-precision path
        let big = i64::MAX / 3;
        let m = IntMatrix::from_rows(&[
            vec![big, big - 1, 7],
            vec![big - 5, big, 11],
            vec![2 * big - 5, 2 * big - 1, 18],
        ])
        .unwrap();
        assert_eq!(m.rank(), 2);
        assert_eq!(
            bareiss_big(
                3,
                (0..3).map(|i| m.row(i).iter().map(|&x| BigInt::from(x)).collect()).collect()
            ),
            2
        );
    }

    #[test]
    fn rational_strings() {
        assert_eq!(parse_rational("3/6").unwrap(), r(1, 2));
        assert_eq!(parse_rational("-4").unwrap(), r(-4, 1));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
        assert_eq!(format_rational(&r(2, 4)), "1/2");
        assert_eq!(format_rational(&r(6, 3)), "2");
    }
}
