//! Dense symmetric eigensolver (cyclic Jacobi).

use crate::error::{Error, Result};

/// Maximum number of full Jacobi sweeps before giving up.
pub const MAX_SWEEPS: usize = 100;
/// Convergence threshold on the off-diagonal Frobenius norm, relative to the matrix norm.
pub const OFF_DIAGONAL_TOL: f64 = 1e-12;
/// Residual bound `||Mv - lv|| <= RESIDUAL_TOL * ||M||` for returned extremal pairs.
pub const RESIDUAL_TOL: f64 = 1e-8;

/// Real symmetric matrix in row-major storage.
#[derive(Clone, Debug, PartialEq)]
pub struct SymMatrix {
    side: usize,
    data: Vec<f64>,
}

impl SymMatrix {
    /// Builds a matrix from row-major data; rejects asymmetric or non-finite input.
    pub fn new(side: usize, data: Vec<f64>) -> Result<SymMatrix> {
        if data.len() != side * side {
            return Err(Error::InvalidInput(format!(
                "expected {} entries for a {side}x{side} matrix, got {}",
                side * side,
                data.len()
            )));
        }
        if data.iter().any(|x| !x.is_finite()) {
            return Err(Error::InvalidInput("matrix has a non-finite entry".into()));
        }
        for i in 0..side {
            for j in i + 1..side {
                if data[i * side + j] != data[j * side + i] {
                    return Err(Error::InvalidInput(format!("matrix is not symmetric at ({i}, {j})")));
                }
            }
        }
        Ok(SymMatrix { side, data })
    }

    pub fn diagonal(values: &[f64]) -> SymMatrix {
        let side = values.len();
        let mut data = vec![0.0; side * side];
        for (i, &v) in values.iter().enumerate() {
            data[i * side + i] = v;
        }
        SymMatrix { side, data }
    }

    pub fn side(&self) -> usize {
        self.side
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.side + j]
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.data.iter().map(|x| x * x).sum::<f64>().sqrt()
    }

    /// `x^T M x`.
    pub fn quadratic_form(&self, x: &[f64]) -> f64 {
        let n = self.side;
        (0..n)
            .map(|i| x[i] * (0..n).map(|j| self.data[i * n + j] * x[j]).sum::<f64>())
            .sum()
    }

    pub fn mul_vec(&self, x: &[f64]) -> Vec<f64> {
        let n = self.side;
        (0..n)
            .map(|i| (0..n).map(|j| self.data[i * n + j] * x[j]).sum())
            .collect()
    }
}

/// Eigenvalues in ascending order, with unit eigenvectors when requested.
#[derive(Clone, Debug)]
pub struct Eigen {
    pub values: Vec<f64>,
    /// `vectors[i]` belongs to `values[i]`.
    pub vectors: Option<Vec<Vec<f64>>>,
    pub sweeps: usize,
}

/// Sorted eigenvalues of a symmetric matrix.
pub fn eigenvalues_sym(m: &SymMatrix) -> Result<Vec<f64>> {
    Ok(jacobi(m, false)?.values)
}

/// Eigen-decomposition by cyclic Jacobi rotations.
///
/// Stops once the off-diagonal Frobenius norm drops to `OFF_DIAGONAL_TOL * ||M||`
/// and fails after `MAX_SWEEPS` sweeps. With `want_vectors` the residuals of the
/// smallest and largest pairs are checked before returning.
pub fn jacobi(m: &SymMatrix, want_vectors: bool) -> Result<Eigen> {
    let n = m.side;
    let mut a = m.data.clone();
    let norm = m.frobenius_norm();
    let mut v: Vec<f64> = if want_vectors {
        let mut id = vec![0.0; n * n];
        for i in 0..n {
            id[i * n + i] = 1.0;
        }
        id
    } else {
        Vec::new()
    };

    let off = |a: &[f64]| -> f64 {
        let mut s = 0.0;
        for i in 0..n {
            for j in i + 1..n {
                s += 2.0 * a[i * n + j] * a[i * n + j];
            }
        }
        s.sqrt()
    };

    let mut sweeps = 0;
    while off(&a) > OFF_DIAGONAL_TOL * norm {
        if sweeps == MAX_SWEEPS {
            return Err(Error::Numeric(format!(
                "Jacobi did not converge in {MAX_SWEEPS} sweeps (side {n})"
            )));
        }
        sweeps += 1;
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[p * n + q];
                if apq == 0.0 {
                    continue;
                }
                let app = a[p * n + p];
                let aqq = a[q * n + q];
                let theta = (aqq - app) / (2.0 * apq);
                let t = if theta.abs() > 1e150 {
                    0.5 / theta
                } else {
                    theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt())
                };
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                a[p * n + p] = app - t * apq;
                a[q * n + q] = aqq + t * apq;
                a[p * n + q] = 0.0;
                a[q * n + p] = 0.0;
                for r in 0..n {
                    if r == p || r == q {
                        continue;
                    }
                    let arp = a[p * n + r];
                    let arq = a[q * n + r];
                    let np = c * arp - s * arq;
                    let nq = s * arp + c * arq;
                    a[p * n + r] = np;
                    a[r * n + p] = np;
                    a[q * n + r] = nq;
                    a[r * n + q] = nq;
                }
                if want_vectors {
                    // rows of `v` hold eigenvectors
                    for r in 0..n {
                        let vp = v[p * n + r];
                        let vq = v[q * n + r];
                        v[p * n + r] = c * vp - s * vq;
                        v[q * n + r] = s * vp + c * vq;
                    }
                }
            }
        }
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a[i * n + i].total_cmp(&a[j * n + j]));
    let values: Vec<f64> = order.iter().map(|&i| a[i * n + i]).collect();
    let vectors = want_vectors.then(|| {
        order
            .iter()
            .map(|&i| v[i * n..(i + 1) * n].to_vec())
            .collect::<Vec<_>>()
    });
    if let Some(vecs) = &vectors {
        if n > 0 {
            for idx in [0, n - 1] {
                let mv = m.mul_vec(&vecs[idx]);
                let res = mv
                    .iter()
                    .zip(&vecs[idx])
                    .map(|(x, y)| (x - values[idx] * y).powi(2))
                    .sum::<f64>()
                    .sqrt();
                if res > RESIDUAL_TOL * norm.max(f64::MIN_POSITIVE) {
                    return Err(Error::Numeric(format!(
                        "eigenpair residual {res:e} exceeds tolerance"
                    )));
                }
            }
        }
    }
    Ok(Eigen {
        values,
        vectors,
        sweeps,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn diagonal_input() {
        let m = SymMatrix::diagonal(&[3.0, 1.0, 2.0]);
        assert_eq!(eigenvalues_sym(&m).unwrap(), vec![1.0, 2.0, 3.0]);
    }

    #[test]
    fn scaled_identity() {
        let m = SymMatrix::diagonal(&[5.0; 10]);
        assert!(eigenvalues_sym(&m).unwrap().iter().all(|&x| x == 5.0));
    }

    #[test]
    fn two_by_two_closed_form() {
        // [[2,1],[1,3]]: (5 -+ sqrt 5) / 2
        let m = SymMatrix::new(2, vec![2.0, 1.0, 1.0, 3.0]).unwrap();
        let ev = eigenvalues_sym(&m).unwrap();
        let r = 5f64.sqrt();
        assert!((ev[0] - (5.0 - r) / 2.0).abs() < 1e-10);
        assert!((ev[1] - (5.0 + r) / 2.0).abs() < 1e-10);
    }

    #[test]
    fn three_by_three_char_poly() {
        // path graph Laplacian: eigenvalues 0, 1, 3
        let m = SymMatrix::new(3, vec![1.0, -1.0, 0.0, -1.0, 2.0, -1.0, 0.0, -1.0, 1.0]).unwrap();
        let e = jacobi(&m, true).unwrap();
        for (x, y) in e.values.iter().zip([0.0, 1.0, 3.0]) {
            assert!((x - y).abs() < 1e-10);
        }
        let vecs = e.vectors.unwrap();
        for v in &vecs {
            let nrm: f64 = v.iter().map(|x| x * x).sum();
            assert!((nrm - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn octahedron_graph_min_eigenvalue() {
        // reduced L_0 of the clique complex of K_{2,2,2}: J + D - A
        let n = 6;
        let mut data = vec![0.0; n * n];
        for i in 0..n {
            for j in 0..n {
                let same_part = i / 2 == j / 2;
                data[i * n + j] = if i == j {
                    1.0 + 4.0
                } else if same_part {
                    1.0
                } else {
                    0.0
                };
            }
        }
        let ev = eigenvalues_sym(&SymMatrix::new(n, data).unwrap()).unwrap();
        assert!((ev[0] - 4.0).abs() < 1e-10);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(SymMatrix::new(2, vec![1.0, 2.0, 3.0, 1.0]).is_err());
        assert!(SymMatrix::new(2, vec![1.0, 2.0, 2.0]).is_err());
        assert!(SymMatrix::new(1, vec![f64::NAN]).is_err());
    }

    #[test]
    fn empty_and_zero() {
        assert!(eigenvalues_sym(&SymMatrix::diagonal(&[])).unwrap().is_empty());
        let z = SymMatrix::new(2, vec![0.0; 4]).unwrap();
        assert_eq!(eigenvalues_sym(&z).unwrap(), vec![0.0, 0.0]);
    }
}
