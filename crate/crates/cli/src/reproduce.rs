//! Named examples whose spectral and homological values are known in closed form.

use std::collections::BTreeMap;

use scx_core::homology::{betti_exact, check_corollary_fp, spectral_gap, EIGEN_MATCH_TOL};
use scx_core::{named, CheckReport, Complex, Error, Outcome, Result};

use crate::report::{digest_complex, Record, VerificationReport};

pub const NAMES: &[&str] = &["rpartite", "ag23", "pg33", "ag23-sharpness"];

/// Tolerance for `mu_1` of the 780 x 780 Laplacian of the projective complex.
pub const PG33_TOL: f64 = 1e-6;
/// Tolerance for the multipartite spectral gaps.
pub const RPARTITE_TOL: f64 = 1e-9;
/// Largest cochain space the dense exact rank of the `--stretch` path accepts.
/// A dense rational matrix with this many rows and columns already needs a few GB.
pub const STRETCH_MAX_FACES: usize = 20_000;

fn record(c: CheckReport, x: &Complex) -> Record {
    Record::from_check(c, None, digest_complex(x))
}

fn tolerances() -> BTreeMap<String, f64> {
    BTreeMap::from([
        ("eigen_match".to_string(), EIGEN_MATCH_TOL),
        ("pg33".to_string(), PG33_TOL),
        ("rpartite".to_string(), RPARTITE_TOL),
    ])
}

/// `beta_k >= 1`, exact.
fn nonzero_betti(name: &str, x: &Complex, k: isize) -> CheckReport {
    let b = betti_exact(x, k);
    CheckReport::new(name, b as f64, 1.0, if b >= 1 { Outcome::Holds } else { Outcome::Violated })
        .with_detail(format!("beta_{k} = {b}"))
}

pub fn rpartite() -> Result<Vec<Record>> {
    let mut out = Vec::new();
    for (r, l) in [(2usize, 3usize), (3, 2), (4, 2)] {
        let x = named::complete_multipartite(r, l)?;
        let n = (r * l) as f64;
        let expected = (r - 1) as f64 * n / r as f64;
        let mu = spectral_gap(&x, 0)?;
        out.push(record(
            CheckReport::close("rpartite-mu0", mu, expected, RPARTITE_TOL).with_detail(format!("r={r} l={l}")),
            &x,
        ));
        out.push(record(
            nonzero_betti("rpartite-betti", &x, r as isize - 1).with_detail(format!("r={r} l={l}")),
            &x,
        ));
    }
    Ok(out)
}

pub fn ag23() -> Result<Vec<Record>> {
    let x = named::ag23();
    let mu = spectral_gap(&x, 1)?;
    let b = betti_exact(&x, 2);
    Ok(vec![
        record(CheckReport::close("ag23-mu1", mu, 6.0, EIGEN_MATCH_TOL), &x),
        record(CheckReport::equal("ag23-betti2", b as i64, 1), &x),
    ])
}

/// `mu_1 = 36`; with `stretch`, also `beta_4 != 0` when the cochain spaces
/// fit under [`STRETCH_MAX_FACES`], otherwise a guard error.
pub fn pg33(stretch: bool) -> Result<Vec<Record>> {
    let x = named::pg33();
    let mu = spectral_gap(&x, 1)?;
    let mut out = vec![record(
        CheckReport::close("pg33-mu1", mu, 36.0, PG33_TOL).with_detail(format!("side={}", x.faces(1).len())),
        &x,
    )];
    if stretch {
        for k in 3..=5 {
            let size = x.faces(k).len();
            if size > STRETCH_MAX_FACES {
                return Err(Error::Guard {
                    what: "faces in a cochain space of the stretch path",
                    value: size,
                    limit: STRETCH_MAX_FACES,
                });
            }
        }
        out.push(record(nonzero_betti("pg33-betti4", &x, 4), &x));
    } else {
        out.push(record(
            CheckReport::new("pg33-betti4", f64::NAN, 1.0, Outcome::NotApplicable)
                .with_detail("skipped; pass --stretch"),
            &x,
        ));
    }
    Ok(out)
}

/// The corollary's hypothesis `mu_1 > (1 - 1/3) 9 = 6` fails exactly at
/// equality for the affine plane, and `beta_2 != 0` there.
pub fn ag23_sharpness() -> Result<Vec<Record>> {
    let x = named::ag23();
    let cor = check_corollary_fp(&x, 2)?;
    let at_equality = (cor.lhs - cor.rhs).abs() <= EIGEN_MATCH_TOL * 9.0;
    let hyp = CheckReport::close("sharpness-equality", cor.lhs, cor.rhs, EIGEN_MATCH_TOL * 9.0)
        .with_detail(format!("corollary outcome {:?}", cor.outcome))
        .and(cor.outcome == Outcome::NotApplicable && at_equality, "hypothesis unexpectedly met");
    Ok(vec![record(hyp, &x), record(nonzero_betti("sharpness-betti2", &x, 2), &x)])
}

pub fn run(name: &str, stretch: bool) -> Result<VerificationReport> {
    let records = match name {
        "rpartite" => rpartite()?,
        "ag23" => ag23()?,
        "pg33" => pg33(stretch)?,
        "ag23-sharpness" => ag23_sharpness()?,
        _ => {
            return Err(Error::InvalidInput(format!(
                "unknown example {name:?}; expected one of {}",
                NAMES.join(", ")
            )))
        }
    };
    Ok(VerificationReport::new(name, 0, tolerances(), records))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_examples_pass() {
        for name in ["rpartite", "ag23", "ag23-sharpness"] {
            let r = run(name, false).unwrap();
            assert!(r.pass, "{name}: {:?}", r.records);
        }
        assert!(run("nope", false).is_err());
    }
}
