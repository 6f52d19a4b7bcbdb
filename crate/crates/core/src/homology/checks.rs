//! Checkers for the spectral inequalities and identities relating Laplacians,
//! missing faces and cohomology.

use super::{
    betti_exact, betti_hodge, eta, laplacians_formula, lambda_bar, spectral_gap, spectrum,
    Eta, INEQUALITY_SLACK,
};
use crate::complex::Complex;
use crate::error::{Error, Result};
use crate::numerics::IntMatrix;
use crate::report::{CheckReport, Outcome};
use crate::vertex_set::{binomial, VertexSet};

/// Relative tolerance for comparing two eigenvalues computed independently.
pub const EIGEN_MATCH_TOL: f64 = 1e-8;

fn max_missing_dim_positive(x: &Complex) -> Result<usize> {
    match x.max_missing_dim() {
        None => Err(Error::NoMissingFaces),
        Some(0) => Err(Error::InvalidInput(
            "complexes whose missing faces are all vertices are not supported".into(),
        )),
        Some(d) => Ok(d),
    }
}

fn missing_dims_positive(x: &Complex) -> Result<Vec<usize>> {
    let dims: Vec<usize> = x.missing_dims().into_iter().collect();
    if dims.is_empty() {
        return Err(Error::NoMissingFaces);
    }
    if dims[0] == 0 {
        return Err(Error::InvalidInput("missing vertices are not supported here".into()));
    }
    Ok(dims)
}

/// `(k - d + 1) mu_k >= (k + 1) mu_{k-1} - d n` for `k >= d`.
pub fn check_fp(x: &Complex, k: usize) -> Result<CheckReport> {
    let d = max_missing_dim_positive(x)?;
    if k < d {
        return Err(Error::InvalidInput(format!("k = {k} is below the missing-face dimension {d}")));
    }
    let n = x.n() as f64;
    let mu_k = spectral_gap(x, k as isize)?;
    let mu_prev = spectral_gap(x, k as isize - 1)?;
    let lhs = (k - d + 1) as f64 * mu_k;
    let rhs = (k + 1) as f64 * mu_prev - d as f64 * n;
    Ok(CheckReport::at_least("fp", lhs, rhs, INEQUALITY_SLACK)
        .with_detail(format!("d={d} k={k} mu_k={mu_k} mu_k-1={mu_prev}")))
}

/// If `mu_{d-1} > (1 - 1/C(k+1, d)) n` then `beta_j = 0` for `d-1 <= j <= k`.
pub fn check_corollary_fp(x: &Complex, k: usize) -> Result<CheckReport> {
    let d = max_missing_dim_positive(x)?;
    if k + 1 < d {
        return Err(Error::InvalidInput(format!("k = {k} is below d - 1 = {}", d - 1)));
    }
    let n = x.n() as f64;
    let mu = spectral_gap(x, d as isize - 1)?;
    let threshold = (1.0 - 1.0 / binomial((k + 1) as u64, d as u64) as f64) * n;
    if mu <= threshold + INEQUALITY_SLACK {
        return Ok(CheckReport::new("corollary-fp", mu, threshold, Outcome::NotApplicable)
            .with_detail("hypothesis not met"));
    }
    let betti: Vec<usize> = (d - 1..=k).map(|j| betti_exact(x, j as isize)).collect();
    let ok = betti.iter().all(|&b| b == 0);
    Ok(CheckReport::new("corollary-fp", mu, threshold, Outcome::Holds)
        .with_detail(format!("betti[{}..={k}] = {betti:?}", d - 1))
        .and(ok, "nonzero cohomology under the hypothesis"))
}

/// `mu_k(A_1 ∩ ... ∩ A_m) >= sum mu_k(A_i) - (m - 1) n`.
pub fn check_intersection_eigen(complexes: &[Complex], k: usize) -> Result<CheckReport> {
    let cap = Complex::intersection(complexes)?;
    let n = cap.n() as f64;
    let lhs = spectral_gap(&cap, k as isize)?;
    let mut rhs = -((complexes.len() - 1) as f64) * n;
    for a in complexes {
        rhs += spectral_gap(a, k as isize)?;
    }
    Ok(CheckReport::at_least("intersection-eigen", lhs, rhs, INEQUALITY_SLACK)
        .with_detail(format!("m={} k={k}", complexes.len())))
}

/// `L^+_{i-1}(Y_i) + L_{i-1}(X_i) = n I` exactly, and `mu_{i-1}(X_i) = n - lambda_bar_i`.
pub fn check_yi_identity(x: &Complex, i: usize) -> Result<CheckReport> {
    if i == 0 {
        return Err(Error::InvalidInput("dimension 0 is not supported".into()));
    }
    let xi = x.derived_xi(i)?;
    let yi = x.derived_yi(i)?;
    let k = i as isize - 1;
    let plus = laplacians_formula(&yi, k).upper;
    let full = laplacians_formula(&xi, k).full;
    let n = x.n();
    let identity = plus.add(&full)? == IntMatrix::scaled_identity(full.rows(), n as i64);
    let mu = spectral_gap(&xi, k)?;
    let lb = lambda_bar(x, i)?;
    let tol = EIGEN_MATCH_TOL * (n as f64).max(1.0);
    Ok(CheckReport::close("yi-identity", mu, n as f64 - lb, tol)
        .with_detail(format!("i={i} side={}", full.rows()))
        .and(identity, "matrix identity fails"))
}

/// `mu_k(X) >= n - sum_{i in D(X)} C(k+1, i) lambda_bar_i(X)`.
pub fn check_mu_lower_bound(x: &Complex, k: usize) -> Result<CheckReport> {
    let dims = missing_dims_positive(x)?;
    let mut rhs = x.n() as f64;
    for &i in &dims {
        rhs -= binomial((k + 1) as u64, i as u64) as f64 * lambda_bar(x, i)?;
    }
    let lhs = spectral_gap(x, k as isize)?;
    Ok(CheckReport::at_least("mu-lower-bound", lhs, rhs, INEQUALITY_SLACK)
        .with_detail(format!("k={k}")))
}

/// `sum_{i in D(X)} C(eta, i) lambda_bar_i(X) >= n`; vacuous when `eta` is infinite.
pub fn check_eigenhom2(x: &Complex) -> Result<CheckReport> {
    let dims = missing_dims_positive(x)?;
    let n = x.n() as f64;
    let e = eta(x);
    let Eta::Finite(e) = e else {
        return Ok(CheckReport::new("eigenhom2", f64::INFINITY, n, Outcome::Vacuous)
            .with_detail("eta = inf"));
    };
    let mut lhs = 0.0;
    for &i in &dims {
        lhs += binomial(e as u64, i as u64) as f64 * lambda_bar(x, i)?;
    }
    Ok(CheckReport::at_least("eigenhom2", lhs, n, INEQUALITY_SLACK).with_detail(format!("eta={e}")))
}

/// Value of `phi` on the oriented simplex `v sigma` (v first, then `sigma` ascending),
/// where `phi` is indexed by the ascending basis of the `(i-1)`-faces of `Y_i`.
fn oriented(phi: &[f64], index: &std::collections::HashMap<VertexSet, usize>, v: usize, sigma: VertexSet) -> f64 {
    let below = sigma.iter().filter(|&u| u < v).count();
    let value = phi[index[&sigma.with(v)]];
    if below % 2 == 0 {
        value
    } else {
        -value
    }
}

/// `<L^+_{i-1}(Y_i) phi, phi> <= sum_sigma sum_{vw in lk(Y_i, sigma)} (phi(v sigma) - phi(w sigma))^2`.
pub fn check_pluslapnorm(x: &Complex, i: usize, phi: &[f64]) -> Result<CheckReport> {
    if i == 0 {
        return Err(Error::InvalidInput("dimension 0 is not supported".into()));
    }
    let yi = x.derived_yi(i)?;
    let k = i as isize - 1;
    let basis = super::OrientedBasis::new(&yi, k);
    if phi.len() != basis.len() {
        return Err(Error::InvalidInput(format!(
            "cochain has {} entries, expected {}",
            phi.len(),
            basis.len()
        )));
    }
    let plus = laplacians_formula(&yi, k).upper;
    let lhs = plus.to_sym()?.quadratic_form(phi);
    let index = basis.faces().iter().enumerate().map(|(j, &f)| (f, j)).collect();
    let mut rhs = 0.0;
    for &top in yi.faces(i as isize) {
        let verts = top.to_vec();
        for (a, &v) in verts.iter().enumerate() {
            for &w in &verts[a + 1..] {
                let sigma = top.without(v).without(w);
                let diff = oriented(phi, &index, v, sigma) - oriented(phi, &index, w, sigma);
                rhs += diff * diff;
            }
        }
    }
    // the inequality reads rhs >= lhs
    Ok(CheckReport::at_least("pluslapnorm", rhs, lhs, INEQUALITY_SLACK).with_detail(format!("i={i}")))
}

/// Degree-count identity for a `k`-face `sigma` with `k >= d`:
/// `sum_{tau in sigma(k-1)} deg(tau) = k+1 + (k+1) deg(sigma) + sum_r (r-1) #{v : m(v sigma) = r}`.
pub fn check_countdegrees(x: &Complex, sigma: VertexSet) -> Result<CheckReport> {
    let d = max_missing_dim_positive(x)?;
    if !x.is_face(sigma) {
        return Err(Error::NotAFace(sigma.to_vec()));
    }
    let k = sigma.len() - 1;
    if k < d {
        return Err(Error::InvalidInput(format!("face dimension {k} is below d = {d}")));
    }
    let lhs: usize = sigma.iter().map(|v| x.degree_unchecked(sigma.without(v))).sum();
    let deg = x.degree_unchecked(sigma);
    let mut by_m = vec![0usize; d + 2];
    let mut out_of_range = Vec::new();
    for v in 0..x.n() {
        if sigma.contains(v) || x.is_face(sigma.with(v)) {
            continue;
        }
        let m = x.missing_stats(sigma.with(v))?.m;
        // m = 1 is possible and contributes nothing
        if (1..=d + 1).contains(&m) {
            by_m[m] += 1;
        } else {
            out_of_range.push((v, m));
        }
    }
    let extra: usize = (2..=d + 1).map(|r| (r - 1) * by_m[r]).sum();
    let rhs = (k + 1) + (k + 1) * deg + extra;
    Ok(CheckReport::equal("countdegrees", lhs as i64, rhs as i64)
        .with_detail(format!("k={k} deg={deg} counts={:?}", &by_m[2..]))
        .and(out_of_range.is_empty(), &format!("m outside [1, d+1]: {out_of_range:?}")))
}

/// Eigenvalues of `L_k` lie in `[0, n]` up to the inequality slack.
pub fn check_max_eig(x: &Complex, k: usize) -> Result<CheckReport> {
    let sp = spectrum(x, k as isize)?;
    if sp.eigenvalues.is_empty() {
        return Ok(CheckReport::new("max-eig", f64::INFINITY, x.n() as f64, Outcome::Vacuous));
    }
    let n = x.n() as f64;
    Ok(CheckReport::at_least("max-eig", n, sp.lambda_max, INEQUALITY_SLACK)
        .and(sp.mu >= -INEQUALITY_SLACK, "negative eigenvalue"))
}

/// Harmonic dimension equals the exact Betti number.
pub fn check_hodge(x: &Complex, k: isize, tol: f64) -> Result<CheckReport> {
    let exact = betti_exact(x, k);
    let hodge = betti_hodge(x, k, tol)?;
    Ok(CheckReport::equal("hodge", hodge as i64, exact as i64).with_detail(format!("k={k}")))
}

/// Reduced Euler characteristic from face counts equals the alternating Betti sum.
pub fn check_euler(x: &Complex) -> CheckReport {
    let betti = super::betti_numbers(x);
    let alt: i64 = betti
        .iter()
        .enumerate()
        .map(|(slot, &b)| if slot % 2 == 1 { b as i64 } else { -(b as i64) })
        .sum();
    CheckReport::equal("euler", x.reduced_euler_characteristic(), alt)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ag23_lines() -> Vec<Vec<usize>> {
        let p = |x: usize, y: usize| 3 * (x % 3) + (y % 3);
        let mut lines = Vec::new();
        for c in 0..3 {
            lines.push(vec![p(c, 0), p(c, 1), p(c, 2)]);
            lines.push(vec![p(0, c), p(1, c), p(2, c)]);
        }
        for s in 1..3 {
            for c in 0..3 {
                let mut l: Vec<usize> = (0..3).map(|x| p(x, s * x + c)).collect();
                l.sort_unstable();
                lines.push(l);
            }
        }
        lines
    }

    #[test]
    fn ag23_countdegrees_and_yi() {
        let x = Complex::from_missing_faces(9, &ag23_lines()).unwrap();
        for &s in x.faces(2).iter().take(10) {
            assert!(check_countdegrees(&x, s).unwrap().passed());
        }
        let r = check_yi_identity(&x, 2).unwrap();
        assert_eq!(r.outcome, Outcome::Holds, "{r:?}");
    }

    #[test]
    fn simplex_countdegrees() {
        // the missing edge {4,5} is disjoint from sigma, so every m-count vanishes
        let x = Complex::from_missing_faces(6, &[vec![4, 5]]).unwrap();
        let s = VertexSet::from_vertices([0, 1, 2, 3]);
        let r = check_countdegrees(&x, s).unwrap();
        assert_eq!(r.outcome, Outcome::Holds);
        assert_eq!(r.lhs, 12.0);
    }

    #[test]
    fn clique_complex_fp_and_pluslapnorm() {
        // 5-cycle clique complex: missing the 5 diagonals
        let x = Complex::from_missing_faces(5, &[vec![0, 2], vec![0, 3], vec![1, 3], vec![1, 4], vec![2, 4]]).unwrap();
        assert!(check_fp(&x, 1).unwrap().passed());
        assert!(check_yi_identity(&x, 1).unwrap().passed());
        assert!(check_mu_lower_bound(&x, 0).unwrap().passed());
        assert!(check_eigenhom2(&x).unwrap().passed());
        let phi = [0.3, -0.7, 0.1, 0.9, -0.2];
        assert!(check_pluslapnorm(&x, 1, &phi).unwrap().passed());
        assert!(check_hodge(&x, 1, 1e-7).unwrap().passed());
        assert!(check_euler(&x).passed());
    }

    #[test]
    fn indicator_cochain_pluslapnorm() {
        let x = Complex::from_missing_faces(9, &ag23_lines()).unwrap();
        let yi = x.derived_yi(2).unwrap();
        let side = yi.faces(1).len();
        let mut phi = vec![0.0; side];
        phi[0] = 1.0;
        let r = check_pluslapnorm(&x, 2, &phi).unwrap();
        // <L^+ e, e> is the degree of the face
        assert_eq!(r.rhs, yi.degree(yi.faces(1)[0]).unwrap() as f64);
        assert!(r.passed());
    }

    #[test]
    fn rejects_inadmissible() {
        let s = Complex::simplex(3).unwrap();
        assert!(check_fp(&s, 1).is_err());
        let x = Complex::from_missing_faces(4, &[vec![0, 1, 2]]).unwrap();
        assert!(check_fp(&x, 1).is_err());
        assert!(check_countdegrees(&x, VertexSet::from_vertices([0])).is_err());
    }
}
