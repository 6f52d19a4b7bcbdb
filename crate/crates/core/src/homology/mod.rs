//! Cochains, coboundary operators, Laplacians, spectra and Betti numbers.
//!
//! Every simplex is oriented by ascending vertex order, so the standard basis
//! of `C^k(X)` is `X(k)` in lexicographic order. Cohomology is over the reals
//! and reduced (`C^{-1} = R`, spanned by the empty face).

mod checks;
mod sign;

use std::collections::HashMap;

use crate::complex::Complex;
use crate::error::{Error, Result};
use crate::numerics::{eigenvalues_sym, IntMatrix};
use crate::vertex_set::VertexSet;

pub use checks::*;
pub use sign::{permutation_sign, sign};

/// Default threshold below which a Laplacian eigenvalue counts as zero.
pub const KERNEL_TOL: f64 = 1e-7;
/// Default slack allowed on spectral inequalities.
pub const INEQUALITY_SLACK: f64 = 1e-9;

/// The ordered `k`-faces fixing the standard basis of `C^k(X)`.
#[derive(Clone, Debug)]
pub struct OrientedBasis {
    dim: isize,
    faces: Vec<VertexSet>,
    index: HashMap<VertexSet, usize>,
}

impl OrientedBasis {
    pub fn new(x: &Complex, k: isize) -> OrientedBasis {
        let faces = x.faces(k).to_vec();
        let index = faces.iter().enumerate().map(|(i, &f)| (f, i)).collect();
        OrientedBasis { dim: k, faces, index }
    }

    pub fn dim(&self) -> isize {
        self.dim
    }

    pub fn faces(&self) -> &[VertexSet] {
        &self.faces
    }

    pub fn len(&self) -> usize {
        self.faces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.faces.is_empty()
    }

    pub fn position(&self, face: VertexSet) -> Option<usize> {
        self.index.get(&face).copied()
    }
}

/// Sparse coboundary `d_k: C^k -> C^{k+1}`; row `r` lists `(column, sign)` pairs.
#[derive(Clone, Debug)]
pub struct Coboundary {
    pub k: isize,
    pub rows: Vec<Vec<(usize, i64)>>,
    pub cols: usize,
}

impl Coboundary {
    pub fn new(x: &Complex, k: isize) -> Coboundary {
        let domain = OrientedBasis::new(x, k);
        let rows = x
            .faces(k + 1)
            .iter()
            .map(|&eta| {
                eta.iter()
                    .enumerate()
                    .map(|(i, v)| {
                        let col = domain
                            .position(eta.without(v))
                            .expect("faces are closed under subsets");
                        (col, if i % 2 == 0 { 1 } else { -1 })
                    })
                    .collect()
            })
            .collect();
        Coboundary {
            k,
            rows,
            cols: domain.len(),
        }
    }

    pub fn to_dense(&self) -> IntMatrix {
        let mut m = IntMatrix::zeros(self.rows.len(), self.cols);
        for (r, row) in self.rows.iter().enumerate() {
            for &(c, s) in row {
                m.set(r, c, s);
            }
        }
        m
    }
}

/// Matrix of `d_k` in the standard bases; `k = -1` gives the all-ones column.
pub fn coboundary_matrix(x: &Complex, k: isize) -> IntMatrix {
    Coboundary::new(x, k).to_dense()
}

/// Matrix of the adjoint `∂_k: C^{k+1} -> C^k`, the transpose of `d_k`.
pub fn boundary_matrix(x: &Complex, k: isize) -> IntMatrix {
    coboundary_matrix(x, k).transpose()
}

/// Lower, upper and full Laplacian on `C^k(X)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LaplacianSet {
    pub k: isize,
    pub lower: IntMatrix,
    pub upper: IntMatrix,
    pub full: IntMatrix,
}

/// Laplacians assembled from the entry formulas (degrees and adjacency of faces).
pub fn laplacians_formula(x: &Complex, k: isize) -> LaplacianSet {
    let basis = OrientedBasis::new(x, k);
    let m = basis.len();
    let mut degree = vec![0i64; m];
    for &eta in x.faces(k + 1) {
        for v in eta.iter() {
            if let Some(i) = basis.position(eta.without(v)) {
                degree[i] += 1;
            }
        }
    }
    let mut lower = IntMatrix::zeros(m, m);
    let mut upper = IntMatrix::zeros(m, m);
    let mut full = IntMatrix::zeros(m, m);
    for i in 0..m {
        lower.set(i, i, k as i64 + 1);
        upper.set(i, i, degree[i]);
        full.set(i, i, k as i64 + 1 + degree[i]);
    }
    // faces sharing a codimension-one face rho; sign(sigma, rho) = (-1)^position
    let mut by_ridge: HashMap<VertexSet, Vec<(usize, usize)>> = HashMap::new();
    for (idx, &sigma) in basis.faces().iter().enumerate() {
        for (pos, v) in sigma.iter().enumerate() {
            by_ridge.entry(sigma.without(v)).or_default().push((idx, pos));
        }
    }
    for group in by_ridge.values() {
        for (a, &(i, pi)) in group.iter().enumerate() {
            for &(j, pj) in &group[a + 1..] {
                let s: i64 = if (pi + pj) % 2 == 0 { 1 } else { -1 };
                let union = basis.faces()[i].union(basis.faces()[j]);
                lower.set(i, j, s);
                lower.set(j, i, s);
                if x.is_face(union) {
                    upper.set(i, j, -s);
                    upper.set(j, i, -s);
                } else {
                    full.set(i, j, s);
                    full.set(j, i, s);
                }
            }
        }
    }
    LaplacianSet {
        k,
        lower,
        upper,
        full,
    }
}

/// Laplacians assembled as `d_{k-1} ∂_{k-1}` and `∂_k d_k` from coboundary matrices.
pub fn laplacians_product(x: &Complex, k: isize) -> LaplacianSet {
    let m = x.faces(k).len();
    let mut upper = IntMatrix::zeros(m, m);
    for row in &Coboundary::new(x, k).rows {
        for &(a, sa) in row {
            for &(b, sb) in row {
                upper.add_at(a, b, sa * sb);
            }
        }
    }
    let mut lower = IntMatrix::zeros(m, m);
    if k >= 0 {
        let below = Coboundary::new(x, k - 1);
        let mut columns: Vec<Vec<(usize, i64)>> = vec![Vec::new(); below.cols];
        for (r, row) in below.rows.iter().enumerate() {
            for &(c, s) in row {
                columns[c].push((r, s));
            }
        }
        for col in &columns {
            for &(a, sa) in col {
                for &(b, sb) in col {
                    lower.add_at(a, b, sa * sb);
                }
            }
        }
    }
    let full = lower.add(&upper).expect("same shape");
    LaplacianSet {
        k,
        lower,
        upper,
        full,
    }
}

/// Laplacians on `C^k(X)`, assembled twice (entry formulas and operator
/// products); a mismatch between the two is reported as a numeric error.
pub fn laplacians(x: &Complex, k: isize) -> Result<LaplacianSet> {
    let formula = laplacians_formula(x, k);
    let product = laplacians_product(x, k);
    if formula != product {
        return Err(Error::Numeric(format!(
            "formula and product Laplacians disagree in dimension {k}"
        )));
    }
    Ok(formula)
}

/// Spectrum of the full Laplacian `L_k`.
#[derive(Clone, Debug, PartialEq)]
pub struct SpectrumReport {
    pub k: isize,
    pub eigenvalues: Vec<f64>,
    /// Smallest eigenvalue; `+inf` on an empty cochain space.
    pub mu: f64,
    /// Largest eigenvalue; `-inf` on an empty cochain space.
    pub lambda_max: f64,
}

impl SpectrumReport {
    fn from_eigenvalues(k: isize, eigenvalues: Vec<f64>) -> SpectrumReport {
        SpectrumReport {
            k,
            mu: eigenvalues.first().copied().unwrap_or(f64::INFINITY),
            lambda_max: eigenvalues.last().copied().unwrap_or(f64::NEG_INFINITY),
            eigenvalues,
        }
    }
}

fn sym_eigenvalues(m: &IntMatrix) -> Result<Vec<f64>> {
    eigenvalues_sym(&m.to_sym()?)
}

pub fn spectrum(x: &Complex, k: isize) -> Result<SpectrumReport> {
    if k < 0 {
        return Err(Error::InvalidInput(format!("Laplacian spectra need k >= 0, got {k}")));
    }
    let l = laplacians_formula(x, k).full;
    Ok(SpectrumReport::from_eigenvalues(k, sym_eigenvalues(&l)?))
}

/// Spectral gap `mu_k(X)`: smallest eigenvalue of `L_k`, `+inf` when `X(k)` is empty.
pub fn spectral_gap(x: &Complex, k: isize) -> Result<f64> {
    Ok(spectrum(x, k)?.mu)
}

/// Spectrum of the upper Laplacian `L_k^+`.
pub fn upper_spectrum(x: &Complex, k: isize) -> Result<SpectrumReport> {
    let l = laplacians_formula(x, k).upper;
    Ok(SpectrumReport::from_eigenvalues(k, sym_eigenvalues(&l)?))
}

/// Largest eigenvalue of the upper `(i-1)`-Laplacian of `Y_i`.
pub fn lambda_bar(x: &Complex, i: usize) -> Result<f64> {
    if i == 0 {
        return Err(Error::InvalidInput(
            "missing vertices (dimension 0) have no upper Laplacian in dimension -1 here".into(),
        ));
    }
    let y = x.derived_yi(i)?;
    Ok(upper_spectrum(&y, i as isize - 1)?.lambda_max)
}

/// Ranks of `d_k` for `k = -1..=dim`, indexed by `k + 1`.
fn coboundary_ranks(x: &Complex, top: isize) -> Vec<usize> {
    (-1..=top).map(|k| coboundary_matrix(x, k).rank()).collect()
}

fn betti_from_ranks(x: &Complex, k: isize, ranks: &[usize]) -> usize {
    let slot = (k + 1) as usize;
    let below = if k >= 0 { ranks[slot - 1] } else { 0 };
    x.faces(k).len() - ranks[slot] - below
}

/// Reduced Betti number over the rationals from exact ranks of coboundary matrices.
pub fn betti_exact(x: &Complex, k: isize) -> usize {
    if k < -1 {
        return 0;
    }
    let ranks: Vec<usize> = [k - 1, k]
        .iter()
        .map(|&j| if j >= -1 { coboundary_matrix(x, j).rank() } else { 0 })
        .collect();
    x.faces(k).len() - ranks[0] - ranks[1]
}

/// Reduced Betti numbers for `k = -1..=dim(X)`, indexed by `k + 1`.
pub fn betti_numbers(x: &Complex) -> Vec<usize> {
    let top = x.dim();
    let ranks = coboundary_ranks(x, top);
    (-1..=top).map(|k| betti_from_ranks(x, k, &ranks)).collect()
}

/// Number of eigenvalues of `L_k` below `tol` (the dimension of the harmonic space).
pub fn betti_hodge(x: &Complex, k: isize, tol: f64) -> Result<usize> {
    if k < -1 {
        return Ok(0);
    }
    let l = laplacians_formula(x, k).full;
    Ok(sym_eigenvalues(&l)?.iter().filter(|&&e| e < tol).count())
}

/// `conn_R(X) + 2` where `conn_R(X) = min{i : H~^i != 0} - 1`, so `min{i : H~^i != 0} + 1`.
/// Two points give 1, a circle 2.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Eta {
    Finite(usize),
    Infinite,
}

impl Eta {
    pub fn finite(self) -> Option<usize> {
        match self {
            Eta::Finite(v) => Some(v),
            Eta::Infinite => None,
        }
    }

    pub fn as_f64(self) -> f64 {
        match self {
            Eta::Finite(v) => v as f64,
            Eta::Infinite => f64::INFINITY,
        }
    }
}

impl std::fmt::Display for Eta {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Eta::Finite(v) => write!(f, "{v}"),
            Eta::Infinite => write!(f, "inf"),
        }
    }
}

pub fn eta(x: &Complex) -> Eta {
    let top = x.dim();
    let mut prev_rank = 0;
    for k in -1..=top {
        let rank = coboundary_matrix(x, k).rank();
        if x.faces(k).len() - rank - prev_rank != 0 {
            return Eta::Finite((k + 1) as usize);
        }
        prev_rank = rank;
    }
    Eta::Infinite
}

#[cfg(test)]
mod tests {
    use super::*;

    fn hollow_triangle() -> Complex {
        Complex::from_facets(3, &[vec![0, 1], vec![1, 2], vec![0, 2]]).unwrap()
    }

    #[test]
    fn coboundary_shapes() {
        let t = hollow_triangle();
        let d0 = coboundary_matrix(&t, 0);
        assert_eq!((d0.rows(), d0.cols()), (3, 3));
        assert_eq!(d0.rank(), 2);
        let d1 = coboundary_matrix(&t, 1);
        assert_eq!((d1.rows(), d1.cols()), (0, 3));
        let s = Complex::simplex(4).unwrap();
        let dm = coboundary_matrix(&s, -1);
        assert_eq!((dm.rows(), dm.cols()), (4, 1));
        assert!((0..4).all(|i| dm.get(i, 0) == 1));
        assert_eq!(boundary_matrix(&s, -1).rows(), 1);
    }

    #[test]
    fn cochain_complex() {
        let s = Complex::simplex(5).unwrap();
        for k in -1..3 {
            let prod = coboundary_matrix(&s, k + 1).mul(&coboundary_matrix(&s, k)).unwrap();
            assert!(prod.is_zero());
        }
    }

    #[test]
    fn full_simplex_laplacian_is_scalar() {
        for n in 2..6 {
            let s = Complex::simplex(n).unwrap();
            for k in 0..=(n as isize - 2) {
                let l = laplacians(&s, k).unwrap();
                let side = s.faces(k).len();
                assert_eq!(l.full, IntMatrix::scaled_identity(side, n as i64));
            }
        }
    }

    #[test]
    fn clique_complex_l0() {
        // path 0-1-2 on 3 vertices: missing edge {0,2}
        let x = Complex::from_missing_faces(3, &[vec![0, 2]]).unwrap();
        let l = laplacians(&x, 0).unwrap().full;
        let expected = IntMatrix::from_rows(&[vec![2, 0, 1], vec![0, 3, 0], vec![1, 0, 2]]).unwrap();
        assert_eq!(l, expected);
    }

    #[test]
    fn hollow_triangle_spectrum_and_betti() {
        let t = hollow_triangle();
        let sp = spectrum(&t, 0).unwrap();
        assert!((sp.mu - 3.0).abs() < 1e-10);
        assert_eq!(betti_exact(&t, 1), 1);
        assert_eq!(betti_exact(&t, 0), 0);
        assert_eq!(betti_exact(&t, -1), 0);
        assert_eq!(betti_hodge(&t, 1, KERNEL_TOL).unwrap(), 1);
        assert_eq!(eta(&t), Eta::Finite(2));
        assert_eq!(betti_numbers(&t), vec![0, 0, 1]);
    }

    #[test]
    fn two_points_connectivity() {
        let x = Complex::from_missing_faces(2, &[vec![0, 1]]).unwrap();
        assert_eq!(betti_exact(&x, 0), 1);
        assert_eq!(eta(&x), Eta::Finite(1));
    }

    #[test]
    fn empty_cochain_space_sentinel() {
        let t = hollow_triangle();
        let sp = spectrum(&t, 2).unwrap();
        assert!(sp.eigenvalues.is_empty());
        assert_eq!(sp.mu, f64::INFINITY);
        assert!(spectrum(&t, -1).is_err());
    }

    #[test]
    fn simplex_is_acyclic() {
        let s = Complex::simplex(4).unwrap();
        assert!(betti_numbers(&s).iter().all(|&b| b == 0));
        assert_eq!(eta(&s), Eta::Infinite);
    }

    #[test]
    fn void_vertex_set_has_reduced_minus_one_class() {
        let x = Complex::from_missing_faces(1, &[vec![0]]).unwrap();
        assert_eq!(betti_exact(&x, -1), 1);
        assert_eq!(betti_hodge(&x, -1, KERNEL_TOL).unwrap(), 1);
        assert_eq!(eta(&x), Eta::Finite(0));
    }
}
