//! Randomized property campaigns: one generator and one set of checks per suite.

use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use scx_core::domination::{
    check_connectivity_bound, check_eigenrep, check_gamma_vs_gamma, check_generalhalltype,
    check_hall_eta, rep_value, RepValue, VectorRepresentation,
};
use scx_core::formats::MatroidFile;
use scx_core::homology::{
    betti_numbers, check_corollary_fp, check_countdegrees, check_eigenhom2, check_euler, check_fp,
    check_hodge, check_intersection_eigen, check_max_eig, check_mu_lower_bound,
    check_pluslapnorm, check_yi_identity, laplacians_formula, laplacians_product, OrientedBasis,
    EIGEN_MATCH_TOL, INEQUALITY_SLACK, KERNEL_TOL,
};
use scx_core::matroid::{
    check_flat_certificate, check_my_hms, check_my_hms_star, phi, phi_star, Matroid,
};
use scx_core::numerics::rational_to_f64;
use scx_core::{CheckReport, Complex, Outcome, Result, VertexSet};

use crate::random::{
    random_complex, random_complex_on, random_linear_matroid, random_multiplier,
    random_partition, random_representation, random_sized_partition, random_sparse_complex,
    trial_rng, random_cochain,
};
use crate::report::{digest_bytes, digest_complex, Record, VerificationReport};

pub const SUITES: &[&str] = &[
    "fp",
    "intersection",
    "yi",
    "mu-bound",
    "eigenhom",
    "countdeg",
    "pluslap",
    "hodge",
    "duality",
    "gamma",
    "hall",
    "matroid-hall",
    "multiplier",
];

/// Random cochains tried per dimension in the `pluslap` suite.
pub const PLUSLAP_SAMPLES: usize = 4;

#[derive(Clone, Debug)]
pub struct CampaignConfig {
    pub seed: u64,
    pub trials: u64,
    /// First trial index; trial `t` always uses stream `t`.
    pub first_trial: u64,
    pub n_max: usize,
    pub d_max: usize,
    pub kernel_tol: f64,
}

impl Default for CampaignConfig {
    fn default() -> Self {
        CampaignConfig {
            seed: 42,
            trials: 100,
            first_trial: 0,
            n_max: 7,
            d_max: 3,
            kernel_tol: KERNEL_TOL,
        }
    }
}

impl CampaignConfig {
    pub fn tolerances(&self) -> BTreeMap<String, f64> {
        BTreeMap::from([
            ("eigen_match".to_string(), EIGEN_MATCH_TOL),
            ("inequality_slack".to_string(), INEQUALITY_SLACK),
            ("kernel".to_string(), self.kernel_tol),
        ])
    }
}

pub fn run_suite(suite: &str, cfg: &CampaignConfig) -> Result<VerificationReport> {
    if !SUITES.contains(&suite) {
        return Err(scx_core::Error::InvalidInput(format!(
            "unknown suite {suite:?}; expected one of {}",
            SUITES.join(", ")
        )));
    }
    let results: Vec<Result<Vec<Record>>> = (cfg.first_trial..cfg.first_trial + cfg.trials)
        .into_par_iter()
        .map(|t| run_trial(suite, cfg, t))
        .collect();
    let mut records = Vec::new();
    for r in results {
        records.extend(r?);
    }
    Ok(VerificationReport::new(suite, cfg.seed, cfg.tolerances(), records))
}

/// Records of one trial; reconstructible from `(suite, cfg, t)`.
pub fn run_trial(suite: &str, cfg: &CampaignConfig, t: u64) -> Result<Vec<Record>> {
    let mut rng = trial_rng(cfg.seed, t);
    let rng = &mut rng;
    let mut out = Vec::new();
    match suite {
        "fp" => {
            let x = mixed_complex(rng, cfg);
            let dig = digest_complex(&x);
            let d = x.max_missing_dim().expect("generator forces a missing face");
            for k in d..=(x.dim().max(0) as usize).max(d) {
                out.push(rec(check_fp(&x, k)?, t, &dig));
                out.push(rec(check_corollary_fp(&x, k)?, t, &dig));
            }
        }
        "intersection" => {
            let n = rng.gen_range(4..=cfg.n_max.max(4));
            let m = rng.gen_range(2..=3);
            let parts: Vec<Complex> = (0..m)
                .map(|_| {
                    let d = rng.gen_range(1..=cfg.d_max.clamp(1, n - 1));
                    let mixed = rng.gen_bool(0.5);
                    random_complex_on(rng, n, d, mixed)
                })
                .collect();
            let dig = digest_many(&parts);
            let top = parts.iter().map(|a| a.dim()).max().unwrap_or(0).max(0) as usize;
            for k in 0..=top {
                out.push(rec(check_intersection_eigen(&parts, k)?, t, &dig));
            }
        }
        "yi" => {
            let x = mixed_complex(rng, cfg);
            let dig = digest_complex(&x);
            for i in x.missing_dims() {
                out.push(rec(check_yi_identity(&x, i)?, t, &dig));
            }
        }
        "mu-bound" => {
            let x = mixed_complex(rng, cfg);
            let dig = digest_complex(&x);
            for k in 0..=x.dim().max(0) as usize {
                out.push(rec(check_mu_lower_bound(&x, k)?, t, &dig));
            }
        }
        "eigenhom" => {
            let x = mixed_complex(rng, cfg);
            out.push(rec(check_eigenhom2(&x)?, t, &digest_complex(&x)));
        }
        "countdeg" => {
            let x = mixed_complex(rng, cfg);
            let dig = digest_complex(&x);
            let d = x.max_missing_dim().expect("generator forces a missing face");
            for k in [d, d + 1] {
                for &s in x.faces(k as isize) {
                    out.push(rec(check_countdegrees(&x, s)?, t, &dig));
                }
            }
        }
        "pluslap" => {
            let x = mixed_complex(rng, cfg);
            let dig = digest_complex(&x);
            for i in x.missing_dims() {
                let yi = x.derived_yi(i)?;
                let len = OrientedBasis::new(&yi, i as isize - 1).len();
                let mut cochains: Vec<Vec<f64>> = (0..PLUSLAP_SAMPLES).map(|_| random_cochain(rng, len)).collect();
                let j = rng.gen_range(0..len);
                cochains.push((0..len).map(|c| if c == j { 1.0 } else { 0.0 }).collect());
                for phi in cochains {
                    out.push(rec(check_pluslapnorm(&x, i, &phi)?, t, &dig));
                }
            }
        }
        "hodge" => {
            let x = mixed_complex(rng, cfg);
            let dig = digest_complex(&x);
            for k in -1..=x.dim() {
                out.push(rec(check_hodge(&x, k, cfg.kernel_tol)?, t, &dig));
                let same = laplacians_formula(&x, k) == laplacians_product(&x, k);
                out.push(rec(
                    CheckReport::equal("laplacian-assembly", i64::from(same), 1).with_detail(format!("k={k}")),
                    t,
                    &dig,
                ));
                if k >= 0 {
                    out.push(rec(check_max_eig(&x, k as usize)?, t, &dig));
                }
            }
            out.push(rec(check_euler(&x), t, &dig));
        }
        "duality" => {
            let x = mixed_complex(rng, cfg);
            let extra = rng.gen_range(0..=2);
            let p = random_representation(rng, &x, extra);
            let dig = digest_complex(&x);
            out.push(rec(check_duality(&p)?, t, &dig));
            out.push(rec(check_connectivity_bound(&x, &VectorRepresentation::all_ones(&x))?, t, &dig));
            for r in check_eigenrep(&x, &p)? {
                out.push(rec(r, t, &dig));
            }
        }
        "gamma" => {
            let x = random_complex(rng, cfg.n_max, cfg.d_max, false);
            let extra = rng.gen_range(0..=2);
            let p = random_representation(rng, &x, extra);
            let dig = digest_complex(&x);
            out.push(rec(check_gamma_vs_gamma(&x, &VectorRepresentation::all_ones(&x))?, t, &dig));
            out.push(rec(check_gamma_vs_gamma(&x, &p)?, t, &dig));
        }
        "hall" => {
            let m = rng.gen_range(2..=5);
            let (n, partition) = random_sized_partition(rng, m, 1..=2);
            let z = random_sparse_complex(rng, n, 0.15, 0.2);
            let dig = digest_complex(&z);
            out.push(rec(check_hall_eta(&z, &partition)?.report, t, &dig));
            if z.max_missing_dim().is_some() {
                let general = check_generalhalltype(&z, &partition, |sub| Ok(VectorRepresentation::all_ones(sub)))?;
                out.push(rec(general.report, t, &dig));
            }
        }
        "matroid-hall" => {
            let rank = rng.gen_range(2..=3);
            let n = rng.gen_range(rank + 2..=9);
            let m = random_linear_matroid(rng, 3, rank, n);
            let classes = rng.gen_range(2..=4.min(n));
            let partition = random_partition(rng, n, classes);
            let dig = digest_matroid(&m);
            out.extend(matroid_records(&m, t, &dig, rng)?);
            out.push(rec(check_my_hms_star(&m, &partition)?.report, t, &dig));
            out.push(rec(check_my_hms(&m, &partition)?.report, t, &dig));
        }
        "multiplier" => {
            let x = mixed_complex(rng, cfg);
            let a = random_multiplier(rng, x.n(), 2);
            let dig = digest_bytes(format!("{}{a:?}", digest_complex(&x)).as_bytes());
            out.push(rec(check_multiplier_betti(&x, &a)?, t, &dig));
        }
        _ => unreachable!("suite validated by the caller"),
    }
    Ok(out)
}

fn rec(c: CheckReport, t: u64, dig: &str) -> Record {
    Record::from_check(c, Some(t), dig.to_string())
}

fn mixed_complex(rng: &mut ChaCha8Rng, cfg: &CampaignConfig) -> Complex {
    let mixed = rng.gen_bool(0.5);
    random_complex(rng, cfg.n_max, cfg.d_max, mixed)
}

fn digest_many(parts: &[Complex]) -> String {
    let joined: String = parts.iter().map(digest_complex).collect();
    digest_bytes(joined.as_bytes())
}

pub fn digest_matroid(m: &Matroid) -> String {
    digest_bytes(serde_json::to_string(&MatroidFile::from_matroid(m)).expect("serialisable").as_bytes())
}

/// `|P|` from both LPs plus an independent feasibility audit of the two
/// certificates: the covering family dominates every vertex, the packing
/// vector satisfies every constraint, and both totals equal the value.
pub fn check_duality(p: &VectorRepresentation) -> Result<CheckReport> {
    let r = rep_value(p)?;
    let RepValue::Finite(v) = &r.value else {
        return Ok(CheckReport::new("duality", f64::INFINITY, f64::INFINITY, Outcome::Vacuous)
            .with_detail("|P| = inf: covering LP infeasible, packing LP unbounded"));
    };
    let alpha = r.alpha.as_ref().expect("finite value has a covering family");
    let y = r.y.as_ref().expect("finite value has a packing vector");
    let n = p.n;
    let mut cover = vec![BigRational::zero(); n];
    let mut packing_ok = true;
    for (sigma, m) in &p.sets {
        let g = m.gram();
        let a = &alpha[sigma];
        for w in 0..n {
            let mut col = BigRational::zero();
            for v in 0..n {
                cover[w] += &a[v] * g.get(v, w);
                col += &y[v] * g.get(v, w);
            }
            packing_ok &= col <= BigRational::one();
        }
    }
    let covering_ok = cover.iter().all(|c| *c >= BigRational::one());
    let primal: BigRational = alpha.values().flatten().sum();
    let dual: BigRational = y.iter().sum();
    let nonneg = alpha.values().flatten().chain(y.iter()).all(|e| !e.is_negative());
    let exact = primal == *v && dual == *v;
    Ok(CheckReport::close("duality", rational_to_f64(&primal), rational_to_f64(&dual), 0.0)
        .with_detail(format!("|P|={} pivots={}+{}", r.value, r.primal_pivots, r.dual_pivots))
        .and(exact, "certificate totals differ from the value")
        .and(covering_ok, "covering family fails to dominate")
        .and(packing_ok, "packing vector violates a constraint")
        .and(nonneg, "negative certificate entry"))
}

/// Betti numbers of `X^a` equal those of `X`.
pub fn check_multiplier_betti(x: &Complex, a: &[usize]) -> Result<CheckReport> {
    let trim = |mut b: Vec<usize>| {
        while b.last() == Some(&0) {
            b.pop();
        }
        b
    };
    let xa = x.multiplier(a)?;
    let (bx, ba) = (trim(betti_numbers(x)), trim(betti_numbers(&xa)));
    let same = bx == ba;
    Ok(CheckReport::equal("multiplier-betti", i64::from(same), 1)
        .with_detail(format!("a={a:?} betti={bx:?} betti(X^a)={ba:?}")))
}

/// Per-matroid records: `phi* >= phi` on the ground set and on a random
/// subset, the two general-position definitions agree on that subset, and the
/// flat-representation certificate.
fn matroid_records(m: &Matroid, t: u64, dig: &str, rng: &mut ChaCha8Rng) -> Result<Vec<Record>> {
    let mut out = Vec::new();
    let ground = m.ground_set();
    let sub = VertexSet::from_vertices(ground.iter().filter(|_| rng.gen_bool(0.6)));
    for s in [ground, sub] {
        if s.is_empty() {
            continue;
        }
        let (size, witness) = phi(m, s)?;
        let star = phi_star(m, s)?;
        let ok = m.is_general_position(witness)?;
        out.push(rec(
            CheckReport::at_least("phistar-ge-phi", rational_to_f64(&star.value), size as f64, 0.0)
                .with_detail(format!("phi={size} phi*={}", scx_core::numerics::format_rational(&star.value)))
                .and(star.value >= BigRational::from_integer(size.into()), "exact comparison fails")
                .and(ok, "phi witness not in general position"),
            t,
            dig,
        ));
    }
    let a = m.is_general_position(sub)?;
    let b = m.is_general_position_by_flats(sub)?;
    out.push(rec(
        CheckReport::equal("gp-definitions", i64::from(a), i64::from(b)).with_detail(format!("subset {:?}", sub.to_vec())),
        t,
        dig,
    ));
    out.push(rec(check_flat_certificate(m, ground)?, t, dig));
    Ok(out)
}
