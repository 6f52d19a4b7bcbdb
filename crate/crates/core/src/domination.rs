//! Total domination, vector representations and their LP value, and the
//! Hall-type colorful-simplex machinery built on homological connectivity.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::complex::{Complex, Partition};
use crate::error::{Error, Result};
use crate::homology::{eta, lambda_bar, Eta, INEQUALITY_SLACK};
use crate::numerics::exact::rational_to_f64;
use crate::numerics::{lp_solve, LpProblem, LpStatus, RationalMatrix};
use crate::report::{CheckReport, Outcome};
use crate::vertex_set::{binomial, VertexSet};

/// Default vertex cap for the exhaustive total-domination search.
pub const TOTAL_DOMINATION_MAX_N: usize = 22;
/// Largest number of classes accepted by the `2^m` Hall sweeps.
pub const HALL_MAX_CLASSES: usize = 20;

fn rat(x: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(x))
}

/// Index sets of a representation: all `(i-1)`-subsets of `V` for every
/// missing-face dimension `i >= 1`.
pub fn representation_index_sets(x: &Complex) -> Vec<VertexSet> {
    let all = VertexSet::full(x.n());
    x.missing_dims()
        .into_iter()
        .filter(|&i| i >= 1)
        .flat_map(|i| all.subsets_of_size(i - 1))
        .collect()
}

/// Pairs `(v, w)`, `v < w`, with `v w sigma` a missing face of `X`.
pub fn constrained_pairs(x: &Complex, sigma: VertexSet) -> Vec<(usize, usize)> {
    x.missing_faces()
        .iter()
        .filter(|m| m.len() == sigma.len() + 2 && sigma.is_subset(**m))
        .map(|m| {
            let rest = m.difference(sigma).to_vec();
            (rest[0], rest[1])
        })
        .collect()
}

/// One nonnegative `|V| x l(sigma)` matrix per index set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VectorRepresentation {
    pub n: usize,
    pub sets: BTreeMap<VertexSet, RationalMatrix>,
}

impl VectorRepresentation {
    /// Every vector is the single entry 1, so every inner product is 1.
    pub fn all_ones(x: &Complex) -> VectorRepresentation {
        let sets = representation_index_sets(x)
            .into_iter()
            .map(|s| (s, RationalMatrix::filled(x.n(), 1, BigRational::one())))
            .collect();
        VectorRepresentation { n: x.n(), sets }
    }

    /// Gram matrix `P_sigma P_sigma^T`.
    pub fn gram(&self, sigma: VertexSet) -> Option<RationalMatrix> {
        self.sets.get(&sigma).map(RationalMatrix::gram)
    }
}

/// A constraint `P_sigma(v) . P_sigma(w) >= 1` that fails.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub sigma: VertexSet,
    pub v: usize,
    pub w: usize,
    pub product: BigRational,
}

/// Exact validity check. Shape problems are errors; failed constraints are returned.
pub fn validate_representation(p: &VectorRepresentation, x: &Complex) -> Result<Vec<Violation>> {
    if p.n != x.n() {
        return Err(Error::InvalidInput(format!(
            "representation has {} vertices, complex has {}",
            p.n,
            x.n()
        )));
    }
    let expected = representation_index_sets(x);
    if expected.len() != p.sets.len() || expected.iter().any(|s| !p.sets.contains_key(s)) {
        return Err(Error::InvalidInput(
            "representation index sets differ from those of the complex".into(),
        ));
    }
    let mut violations = Vec::new();
    for (&sigma, m) in &p.sets {
        if m.rows() != x.n() {
            return Err(Error::InvalidInput(format!(
                "matrix for {:?} has {} rows, expected {}",
                sigma.to_vec(),
                m.rows(),
                x.n()
            )));
        }
        if m.entries().iter().any(|e| e.is_negative()) {
            return Err(Error::InvalidInput(format!(
                "matrix for {:?} has a negative entry",
                sigma.to_vec()
            )));
        }
        for (v, w) in constrained_pairs(x, sigma) {
            let product = m.row_dot(v, w);
            if product < BigRational::one() {
                violations.push(Violation { sigma, v, w, product });
            }
        }
    }
    Ok(violations)
}

/// `|P|`, which may be infinite when some vertex cannot be dominated.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum RepValue {
    Finite(BigRational),
    Infinite,
}

impl RepValue {
    pub fn as_f64(&self) -> f64 {
        match self {
            RepValue::Finite(v) => rational_to_f64(v),
            RepValue::Infinite => f64::INFINITY,
        }
    }

    pub fn finite(&self) -> Option<&BigRational> {
        match self {
            RepValue::Finite(v) => Some(v),
            RepValue::Infinite => None,
        }
    }
}

impl std::fmt::Display for RepValue {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            RepValue::Finite(v) => write!(f, "{}", crate::numerics::format_rational(v)),
            RepValue::Infinite => write!(f, "inf"),
        }
    }
}

/// Both LP solutions behind a representation value.
#[derive(Clone, Debug)]
pub struct RepValueReport {
    pub value: RepValue,
    /// Optimal dominating family `alpha_sigma`, when finite.
    pub alpha: Option<BTreeMap<VertexSet, Vec<BigRational>>>,
    /// Optimal `y >= 0` with `y P_sigma P_sigma^T <= 1` for every sigma, when finite.
    pub y: Option<Vec<BigRational>>,
    pub primal_pivots: usize,
    pub dual_pivots: usize,
}

/// Value of a representation from the covering LP over the `alpha_sigma`, and
/// independently from the single-vector packing LP; the two must agree exactly.
pub fn rep_value(p: &VectorRepresentation) -> Result<RepValueReport> {
    let n = p.n;
    let grams: Vec<(VertexSet, RationalMatrix)> =
        p.sets.iter().map(|(&s, m)| (s, m.gram())).collect();

    // primal: variables alpha_sigma(v), one covering row per w
    let nvars = grams.len() * n;
    let mut a = vec![vec![BigRational::zero(); nvars]; n];
    for (g_idx, (_, g)) in grams.iter().enumerate() {
        for v in 0..n {
            for (w, row) in a.iter_mut().enumerate() {
                row[g_idx * n + v] = g.get(v, w).clone();
            }
        }
    }
    let primal = LpProblem::new(vec![rat(1); nvars], a, vec![rat(1); n])?;
    let ps = lp_solve(&primal)?;

    // dual: maximise y.1 subject to y G_sigma <= 1, posed as a minimisation
    let mut rows = Vec::with_capacity(grams.len() * n);
    for (_, g) in &grams {
        for v in 0..n {
            rows.push((0..n).map(|w| -g.get(w, v).clone()).collect());
        }
    }
    let nrows = rows.len();
    let dual = LpProblem::new(vec![rat(-1); n], rows, vec![rat(-1); nrows])?;
    let ds = lp_solve(&dual)?;

    match (ps.status, ds.status) {
        (LpStatus::Optimal, LpStatus::Optimal) => {
            let pv = ps.value.clone().expect("optimal value");
            let dv = -ds.value.clone().expect("optimal value");
            if pv != dv {
                return Err(Error::Numeric(format!(
                    "covering value {pv} differs from packing value {dv}"
                )));
            }
            let alpha = grams
                .iter()
                .enumerate()
                .map(|(g_idx, (s, _))| (*s, ps.primal[g_idx * n..(g_idx + 1) * n].to_vec()))
                .collect();
            Ok(RepValueReport {
                value: RepValue::Finite(pv),
                alpha: Some(alpha),
                y: Some(ds.primal),
                primal_pivots: ps.pivots,
                dual_pivots: ds.pivots,
            })
        }
        (LpStatus::Infeasible, LpStatus::Unbounded) => Ok(RepValueReport {
            value: RepValue::Infinite,
            alpha: None,
            y: None,
            primal_pivots: ps.pivots,
            dual_pivots: ds.pivots,
        }),
        (a, b) => Err(Error::Numeric(format!(
            "covering LP is {a:?} but packing LP is {b:?}"
        ))),
    }
}

/// Minimum size of a totally dominating set, with a witness.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TotalDomination {
    Finite { size: usize, witness: VertexSet },
    Infinite,
}

/// `v` is dominated by `S` iff some missing face `mu` contains `v` with `mu - v ⊆ S`.
fn domination_masks(x: &Complex) -> Vec<Vec<VertexSet>> {
    (0..x.n())
        .map(|v| {
            x.missing_faces()
                .iter()
                .filter(|m| m.contains(v))
                .map(|m| m.without(v))
                .collect()
        })
        .collect()
}

pub fn is_totally_dominating(x: &Complex, s: VertexSet) -> bool {
    domination_masks(x)
        .iter()
        .all(|ms| ms.iter().any(|m| m.is_subset(s)))
}

/// Exhaustive search by increasing size; `n` is capped at `max_n`.
pub fn total_domination_capped(x: &Complex, max_n: usize) -> Result<TotalDomination> {
    if x.n() > max_n {
        return Err(Error::Guard {
            what: "vertex count for total domination",
            value: x.n(),
            limit: max_n,
        });
    }
    let masks = domination_masks(x);
    if masks.iter().any(|m| m.is_empty()) {
        return Ok(TotalDomination::Infinite);
    }
    let all = VertexSet::full(x.n());
    for size in 0..=x.n() {
        for s in all.subsets_of_size(size) {
            if masks.iter().all(|ms| ms.iter().any(|m| m.is_subset(s))) {
                return Ok(TotalDomination::Finite { size, witness: s });
            }
        }
    }
    Ok(TotalDomination::Infinite)
}

pub fn total_domination(x: &Complex) -> Result<TotalDomination> {
    total_domination_capped(x, TOTAL_DOMINATION_MAX_N)
}

/// The common missing-face dimension, if all missing faces share one.
pub fn uniform_missing_dim(x: &Complex) -> Option<usize> {
    let dims = x.missing_dims();
    (dims.len() == 1).then(|| *dims.iter().next().unwrap())
}

/// The explicit dominating family built from a totally dominating set `S`:
/// `alpha_sigma = (1/d) 1_{S - sigma}` for `sigma ⊆ S`, zero otherwise.
#[derive(Clone, Debug)]
pub struct TdsAlpha {
    pub d: usize,
    pub alpha: BTreeMap<VertexSet, Vec<BigRational>>,
    pub total: BigRational,
}

/// Builds the family, checks that it dominates `P` exactly and that its total
/// is `C(|S|, d)`.
pub fn dominating_alpha_from_tds(
    x: &Complex,
    s: VertexSet,
    p: &VectorRepresentation,
) -> Result<TdsAlpha> {
    let d = uniform_missing_dim(x).ok_or_else(|| {
        Error::InvalidInput("missing faces must all have the same dimension".into())
    })?;
    if d == 0 {
        return Err(Error::InvalidInput("missing vertices are not supported".into()));
    }
    if !is_totally_dominating(x, s) {
        return Err(Error::InvalidInput(format!("{:?} is not totally dominating", s.to_vec())));
    }
    let n = x.n();
    let inv_d = BigRational::new(BigInt::one(), BigInt::from(d));
    let mut alpha = BTreeMap::new();
    for &sigma in p.sets.keys() {
        let vec: Vec<BigRational> = (0..n)
            .map(|v| {
                if sigma.is_subset(s) && s.contains(v) && !sigma.contains(v) {
                    inv_d.clone()
                } else {
                    BigRational::zero()
                }
            })
            .collect();
        alpha.insert(sigma, vec);
    }
    // coverage of every w
    let mut cover = vec![BigRational::zero(); n];
    for (sigma, a) in &alpha {
        let g = p.gram(*sigma).expect("same index sets");
        for (w, c) in cover.iter_mut().enumerate() {
            for (v, av) in a.iter().enumerate() {
                if !av.is_zero() {
                    *c += av * g.get(v, w);
                }
            }
        }
    }
    if let Some(w) = cover.iter().position(|c| *c < BigRational::one()) {
        return Err(Error::Numeric(format!("constructed family fails to dominate vertex {w}")));
    }
    let total: BigRational = alpha.values().flatten().sum();
    let expected = rat(binomial(s.len() as u64, d as u64) as i64);
    if total != expected {
        return Err(Error::Numeric(format!("family total {total} differs from C(|S|, d) = {expected}")));
    }
    Ok(TdsAlpha { d, alpha, total })
}

/// `|P| <= C(gamma, d)` via the family built from a minimum totally dominating set.
pub fn check_gamma_vs_gamma(x: &Complex, p: &VectorRepresentation) -> Result<CheckReport> {
    let TotalDomination::Finite { size, witness } = total_domination(x)? else {
        return Ok(CheckReport::new("gamma-vs-gamma", f64::INFINITY, 0.0, Outcome::NotApplicable)
            .with_detail("no totally dominating set"));
    };
    let cert = dominating_alpha_from_tds(x, witness, p)?;
    let value = rep_value(p)?.value;
    let bound = cert.total.clone();
    let holds = match &value {
        RepValue::Finite(v) => *v <= bound,
        RepValue::Infinite => false,
    };
    let outcome = if holds { Outcome::Holds } else { Outcome::Violated };
    Ok(CheckReport::new("gamma-vs-gamma", rational_to_f64(&bound), value.as_f64(), outcome)
        .with_detail(format!("gamma={size} d={} |P|={value}", cert.d)))
}

/// `sum_{r in D(X)} r C(eta, r) >= |P|`, vacuous when `eta` is infinite.
pub fn check_connectivity_bound(x: &Complex, p: &VectorRepresentation) -> Result<CheckReport> {
    let value = rep_value(p)?.value;
    let Eta::Finite(e) = eta(x) else {
        return Ok(CheckReport::new("connectivity-bound", f64::INFINITY, value.as_f64(), Outcome::Vacuous)
            .with_detail(format!("eta=inf |P|={value}")));
    };
    let lhs: u128 = x
        .missing_dims()
        .into_iter()
        .map(|r| r as u128 * binomial(e as u64, r as u64))
        .sum();
    let lhs_q = BigRational::from_integer(BigInt::from(lhs));
    let holds = match &value {
        RepValue::Finite(v) => lhs_q >= *v,
        RepValue::Infinite => false,
    };
    let outcome = if holds { Outcome::Holds } else { Outcome::Violated };
    Ok(CheckReport::new("connectivity-bound", lhs as f64, value.as_f64(), outcome)
        .with_detail(format!("eta={e} |P|={value}")))
}

/// `lambda_bar_i <= i max_{sigma, v} P_sigma(v) . sum_w P_sigma(w)` for each `i in D(X)`.
pub fn check_eigenrep(x: &Complex, p: &VectorRepresentation) -> Result<Vec<CheckReport>> {
    let mut out = Vec::new();
    for i in x.missing_dims() {
        if i == 0 {
            return Err(Error::InvalidInput("missing vertices are not supported".into()));
        }
        let mut best = BigRational::zero();
        for (sigma, m) in &p.sets {
            if sigma.len() != i - 1 {
                continue;
            }
            let sums: Vec<BigRational> = (0..m.cols())
                .map(|c| (0..m.rows()).map(|r| m.get(r, c).clone()).sum())
                .collect();
            for v in 0..m.rows() {
                let val: BigRational = m.row(v).iter().zip(&sums).map(|(a, b)| a * b).sum();
                if val > best {
                    best = val;
                }
            }
        }
        let rhs = i as f64 * rational_to_f64(&best);
        let lb = lambda_bar(x, i)?;
        out.push(
            CheckReport::at_least("eigenrep", rhs, lb, INEQUALITY_SLACK)
                .with_detail(format!("i={i}")),
        );
    }
    Ok(out)
}

fn guard_classes(partition: &Partition) -> Result<()> {
    if partition.len() > HALL_MAX_CLASSES {
        return Err(Error::Guard {
            what: "number of partition classes",
            value: partition.len(),
            limit: HALL_MAX_CLASSES,
        });
    }
    Ok(())
}

/// First colorful face in lexicographic transversal order.
pub fn colorful_simplex_search(z: &Complex, partition: &Partition) -> Result<Option<VertexSet>> {
    guard_classes(partition)?;
    if !partition.support().is_subset(z.vertex_set()) {
        return Err(Error::InvalidInput("partition classes leave the vertex set".into()));
    }
    fn go(z: &Complex, classes: &[VertexSet], acc: VertexSet) -> Option<VertexSet> {
        let Some((first, rest)) = classes.split_first() else {
            return Some(acc);
        };
        first
            .iter()
            .map(|v| acc.with(v))
            .filter(|s| z.is_face(*s))
            .find_map(|s| go(z, rest, s))
    }
    Ok(go(z, partition.classes(), VertexSet::EMPTY))
}

/// Per-class-subset data of a Hall sweep; `mask` selects classes.
#[derive(Clone, Debug, PartialEq)]
pub struct HallRow {
    pub mask: u64,
    pub size: usize,
    pub value: f64,
    pub threshold: f64,
    pub holds: bool,
}

/// Result of a Hall sweep: the hypothesis per class subset and the search outcome.
#[derive(Clone, Debug)]
pub struct HallReport {
    pub rows: Vec<HallRow>,
    pub hypothesis: bool,
    pub witness: Option<VertexSet>,
    pub report: CheckReport,
}

fn hall_report(name: &str, rows: Vec<HallRow>, witness: Option<VertexSet>) -> HallReport {
    let hypothesis = rows.iter().all(|r| r.holds);
    let worst = rows
        .iter()
        .min_by(|a, b| (a.value - a.threshold).total_cmp(&(b.value - b.threshold)));
    let (lhs, rhs) = worst.map_or((f64::INFINITY, 0.0), |r| (r.value, r.threshold));
    let found = witness.is_some();
    let report = if hypothesis {
        let outcome = if found { Outcome::Holds } else { Outcome::Violated };
        CheckReport::new(name, lhs, rhs, outcome)
    } else {
        CheckReport::new(name, lhs, rhs, Outcome::NotApplicable)
    };
    let detail = match witness {
        Some(w) => format!("colorful set {:?}", w.to_vec()),
        None => "no colorful set".to_string(),
    };
    HallReport {
        rows,
        hypothesis,
        witness,
        report: report.with_detail(detail),
    }
}

/// Hall check for eta: `eta(Z[W_I]) >= |I|` for all `I` forces a colorful face.
pub fn check_hall_eta(z: &Complex, partition: &Partition) -> Result<HallReport> {
    guard_classes(partition)?;
    let m = partition.len();
    let mut rows = Vec::new();
    for mask in 1u64..(1u64 << m) {
        let sub = z.induced(partition.union_of(mask))?;
        let e = eta(&sub);
        let size = mask.count_ones() as usize;
        rows.push(HallRow {
            mask,
            size,
            value: e.as_f64(),
            threshold: size as f64,
            holds: e >= Eta::Finite(size),
        });
    }
    let witness = colorful_simplex_search(z, partition)?;
    Ok(hall_report("hall-eta", rows, witness))
}

/// `sum_{r in D} r C(t, r)` with the convention `C(0, r) = 0` for `r >= 1`.
pub fn hall_threshold(dims: impl IntoIterator<Item = usize>, t: usize) -> u128 {
    dims.into_iter()
        .map(|r| r as u128 * binomial(t as u64, r as u64))
        .sum()
}

/// Hall-type check with `|P|` standing in for `Gamma` on every induced subcomplex.
/// `rep` produces the representation for an induced subcomplex.
pub fn check_generalhalltype(
    x: &Complex,
    partition: &Partition,
    rep: impl Fn(&Complex) -> Result<VectorRepresentation>,
) -> Result<HallReport> {
    guard_classes(partition)?;
    let m = partition.len();
    let mut rows = Vec::new();
    for mask in 1u64..(1u64 << m) {
        let sub = x.induced(partition.union_of(mask))?;
        let p = rep(&sub)?;
        let violations = validate_representation(&p, &sub)?;
        if !violations.is_empty() {
            return Err(Error::InvalidInput(format!(
                "representation for class subset {mask:b} is invalid"
            )));
        }
        let value = rep_value(&p)?.value;
        let size = mask.count_ones() as usize;
        let threshold = hall_threshold(sub.missing_dims(), size - 1);
        let holds = match &value {
            RepValue::Finite(v) => *v > BigRational::from_integer(BigInt::from(threshold)),
            RepValue::Infinite => true,
        };
        rows.push(HallRow {
            mask,
            size,
            value: value.as_f64(),
            threshold: threshold as f64,
            holds,
        });
    }
    let witness = colorful_simplex_search(x, partition)?;
    Ok(hall_report("general-hall", rows, witness))
}
