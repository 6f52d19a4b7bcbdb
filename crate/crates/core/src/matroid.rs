//! Matroids given by rank oracles, general position, `phi` and its fractional
//! relaxation `phi*`, the flat-based vector representation, and Hall checks for
//! colorful sets in general position.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::complex::{Complex, Partition};
use crate::domination::{
    hall_threshold, rep_value, validate_representation, HallReport, HallRow, RepValue,
    VectorRepresentation,
};
use crate::error::{Error, Result};
use crate::numerics::exact::rational_to_f64;
use crate::numerics::{lp_solve, LpProblem, LpStatus, RationalMatrix};
use crate::report::{CheckReport, Outcome};
use crate::vertex_set::{VertexSet, MAX_VERTICES};

/// Largest field characteristic accepted for linear matroids.
pub const MAX_PRIME: u32 = 13;
/// Ground-set cap for the exhaustive `phi` search.
pub const PHI_MAX_SIZE: usize = 24;
/// Class cap for the matroid Hall sweeps and transversal search.
pub const MATROID_HALL_MAX_CLASSES: usize = 12;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Builtin {
    /// Affine plane over `F_3`: point `(x, y)` has index `3x + y` and column `(x, y, 1)`.
    Ag23,
    /// Projective 3-space over `F_3`: the 40 vectors of `F_3^4` whose first nonzero
    /// coordinate is 1, in lexicographic order.
    Pg33,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MatroidKind {
    /// Column matroid of a matrix over `F_p`; `columns[v]` is the vector of element `v`.
    Linear { p: u32, columns: Vec<Vec<u32>> },
    Uniform { rank: usize },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matroid {
    n: usize,
    kind: MatroidKind,
    builtin: Option<Builtin>,
    full_rank: usize,
}

fn is_prime(p: u32) -> bool {
    p >= 2 && (2..p).take_while(|q| q * q <= p).all(|q| p % q != 0)
}

fn inv_mod(a: u32, p: u32) -> u32 {
    let mut result = 1u64;
    let mut base = a as u64 % p as u64;
    let mut e = p - 2;
    while e > 0 {
        if e & 1 == 1 {
            result = result * base % p as u64;
        }
        base = base * base % p as u64;
        e >>= 1;
    }
    result as u32
}

fn rank_mod_p(vectors: &[&[u32]], p: u32) -> usize {
    let mut rows: Vec<Vec<u32>> = vectors.iter().map(|v| v.to_vec()).collect();
    let width = rows.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for col in 0..width {
        let Some(piv) = (rank..rows.len()).find(|&r| rows[r][col] != 0) else {
            continue;
        };
        rows.swap(rank, piv);
        let inv = inv_mod(rows[rank][col], p);
        let pivot_row: Vec<u32> = rows[rank].iter().map(|&x| x * inv % p).collect();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != rank && row[col] != 0 {
                let f = row[col];
                for (x, &y) in row.iter_mut().zip(&pivot_row) {
                    *x = (*x + (p - f) * y) % p;
                }
            }
        }
        rows[rank] = pivot_row;
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rank
}

impl Matroid {
    pub fn linear(p: u32, columns: Vec<Vec<u32>>) -> Result<Matroid> {
        if !is_prime(p) || p > MAX_PRIME {
            return Err(Error::InvalidInput(format!("field size {p} must be a prime at most {MAX_PRIME}")));
        }
        let n = columns.len();
        if n == 0 {
            return Err(Error::NoVertices);
        }
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices { n, max: MAX_VERTICES });
        }
        let height = columns[0].len();
        if columns.iter().any(|c| c.len() != height) {
            return Err(Error::InvalidInput("columns have different lengths".into()));
        }
        if columns.iter().flatten().any(|&x| x >= p) {
            return Err(Error::InvalidInput(format!("entries must lie in 0..{p}")));
        }
        let mut m = Matroid {
            n,
            kind: MatroidKind::Linear { p, columns },
            builtin: None,
            full_rank: 0,
        };
        m.full_rank = m.rank(VertexSet::full(n));
        Ok(m)
    }

    pub fn uniform(rank: usize, n: usize) -> Result<Matroid> {
        if n == 0 {
            return Err(Error::NoVertices);
        }
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices { n, max: MAX_VERTICES });
        }
        if rank > n {
            return Err(Error::InvalidInput(format!("rank {rank} exceeds ground set size {n}")));
        }
        Ok(Matroid {
            n,
            kind: MatroidKind::Uniform { rank },
            builtin: None,
            full_rank: rank,
        })
    }

    pub fn builtin(b: Builtin) -> Matroid {
        let columns = match b {
            Builtin::Ag23 => (0..9).map(|i| vec![i / 3, i % 3, 1]).collect(),
            Builtin::Pg33 => projective_points(3, 4),
        };
        let mut m = Matroid::linear(3, columns).expect("builtin data is valid");
        m.builtin = Some(b);
        m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn kind(&self) -> &MatroidKind {
        &self.kind
    }

    pub fn builtin_name(&self) -> Option<Builtin> {
        self.builtin
    }

    pub fn ground_set(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    /// Rank of the whole ground set (`d + 1`).
    pub fn full_rank(&self) -> usize {
        self.full_rank
    }

    /// `d = rank(V) - 1`; matroids of rank below 2 are rejected.
    pub fn d(&self) -> Result<usize> {
        if self.full_rank < 2 {
            return Err(Error::InvalidInput(format!(
                "matroid has rank {}, at least 2 is needed",
                self.full_rank
            )));
        }
        Ok(self.full_rank - 1)
    }

    pub fn rank(&self, s: VertexSet) -> usize {
        match &self.kind {
            MatroidKind::Uniform { rank } => s.len().min(*rank),
            MatroidKind::Linear { p, columns } => {
                let vecs: Vec<&[u32]> = s.iter().map(|v| columns[v].as_slice()).collect();
                rank_mod_p(&vecs, *p)
            }
        }
    }

    pub fn is_independent(&self, s: VertexSet) -> bool {
        self.rank(s) == s.len()
    }

    pub fn closure(&self, s: VertexSet) -> VertexSet {
        let r = self.rank(s);
        VertexSet::from_vertices((0..self.n).filter(|&v| s.contains(v) || self.rank(s.with(v)) == r))
    }

    pub fn loops(&self) -> VertexSet {
        self.closure(VertexSet::EMPTY)
    }

    /// All flats of rank `r`: distinct closures of independent `r`-sets, sorted.
    pub fn flats(&self, r: usize) -> Result<Vec<VertexSet>> {
        if r > self.full_rank {
            return Err(Error::InvalidInput(format!(
                "rank {r} exceeds the matroid rank {}",
                self.full_rank
            )));
        }
        let mut out = BTreeSet::new();
        self.flats_rec(r, VertexSet::EMPTY, 0, &mut out);
        Ok(out.into_iter().collect())
    }

    fn flats_rec(&self, r: usize, acc: VertexSet, start: usize, out: &mut BTreeSet<VertexSet>) {
        if acc.len() == r {
            out.insert(self.closure(acc));
            return;
        }
        for v in start..self.n {
            let next = acc.with(v);
            if !self.is_independent(next) {
                continue;
            }
            // an independent r-set inside a known rank-r flat spans that flat
            if next.len() == r && out.iter().any(|f| next.is_subset(*f)) {
                continue;
            }
            self.flats_rec(r, next, v + 1, out);
        }
    }

    /// Every subset of size at most `d + 1` is independent.
    pub fn is_general_position(&self, s: VertexSet) -> Result<bool> {
        let d = self.d()?;
        let k = s.len().min(d + 1);
        Ok(s.subsets_of_size(k).into_iter().all(|t| self.is_independent(t)))
    }

    /// Every flat of rank `k <= d` holds at most `k` points of `s`.
    pub fn is_general_position_by_flats(&self, s: VertexSet) -> Result<bool> {
        let d = self.d()?;
        for k in 1..=d {
            if self.flats(k)?.iter().any(|f| f.intersection(s).len() > k) {
                return Ok(false);
            }
        }
        // rank-0 flat: loops are never in general position
        Ok(self.loops().intersection(s).is_empty())
    }

    /// Circuits of size at most `d + 1` inside `u`.
    pub fn small_circuits(&self, u: VertexSet) -> Result<Vec<VertexSet>> {
        let d = self.d()?;
        let mut out = Vec::new();
        for size in 1..=(d + 1).min(u.len()) {
            for c in u.subsets_of_size(size) {
                if !self.is_independent(c) && c.iter().all(|v| self.is_independent(c.without(v))) {
                    out.push(c);
                }
            }
        }
        Ok(out)
    }

    /// Restriction of the ground set to `u`, relabelled in increasing order.
    pub fn restrict(&self, u: VertexSet) -> Result<Matroid> {
        match &self.kind {
            MatroidKind::Uniform { rank } => Matroid::uniform((*rank).min(u.len()), u.len()),
            MatroidKind::Linear { p, columns } => {
                Matroid::linear(*p, u.iter().map(|v| columns[v].clone()).collect())
            }
        }
    }
}

/// Normalised representatives of the points of `PG(dim - 1, q)` in lexicographic order.
fn projective_points(q: u32, dim: usize) -> Vec<Vec<u32>> {
    let total = q.pow(dim as u32);
    (0..total)
        .map(|mut code| {
            let mut v = vec![0u32; dim];
            for slot in v.iter_mut().rev() {
                *slot = code % q;
                code /= q;
            }
            v
        })
        .filter(|v| v.iter().find(|&&x| x != 0) == Some(&1))
        .collect()
}

fn relabel(u: VertexSet, s: VertexSet) -> VertexSet {
    VertexSet::from_vertices(s.iter().map(|v| u.rank_of(v)))
}

fn unrelabel(u: &[usize], s: VertexSet) -> VertexSet {
    VertexSet::from_vertices(s.iter().map(|i| u[i]))
}

/// The complex of subsets of `u` in general position, relabelled so that the
/// `j`-th smallest element of `u` becomes `j`.
pub fn gp_complex(m: &Matroid, u: VertexSet) -> Result<Complex> {
    if !u.is_subset(m.ground_set()) {
        return Err(Error::VertexOutOfRange { vertex: u.max().unwrap_or(0), n: m.n() });
    }
    if u.is_empty() {
        return Err(Error::NoVertices);
    }
    let missing: Vec<Vec<usize>> = m
        .small_circuits(u)?
        .into_iter()
        .map(|c| relabel(u, c).to_vec())
        .collect();
    Complex::from_missing_faces(u.len(), &missing)
}

fn guard_phi(s: VertexSet) -> Result<()> {
    if s.len() > PHI_MAX_SIZE {
        return Err(Error::Guard {
            what: "set size for phi",
            value: s.len(),
            limit: PHI_MAX_SIZE,
        });
    }
    Ok(())
}

/// Can `v` join the general-position set `acc`?
fn extends_general_position(m: &Matroid, d: usize, acc: VertexSet, v: usize) -> bool {
    let k = acc.len().min(d);
    acc.subsets_of_size(k).into_iter().all(|t| m.is_independent(t.with(v)))
}

/// Largest subset of `s` in general position, with a witness.
pub fn phi(m: &Matroid, s: VertexSet) -> Result<(usize, VertexSet)> {
    guard_phi(s)?;
    let d = m.d()?;
    let elems = s.to_vec();
    let mut best = (0, VertexSet::EMPTY);
    fn go(m: &Matroid, d: usize, elems: &[usize], idx: usize, acc: VertexSet, best: &mut (usize, VertexSet)) {
        if acc.len() > best.0 {
            *best = (acc.len(), acc);
        }
        if idx == elems.len() || acc.len() + (elems.len() - idx) <= best.0 {
            return;
        }
        let v = elems[idx];
        if extends_general_position(m, d, acc, v) {
            go(m, d, elems, idx + 1, acc.with(v), best);
        }
        go(m, d, elems, idx + 1, acc, best);
    }
    go(m, d, &elems, 0, VertexSet::EMPTY, &mut best);
    Ok(best)
}

/// Constraint groups `{v in s : cl(v sigma) = F}` (each bounded by `d`), deduplicated.
pub fn fractional_gp_constraints(m: &Matroid, s: VertexSet) -> Result<Vec<VertexSet>> {
    let d = m.d()?;
    let lp = m.loops().intersection(s);
    if !lp.is_empty() {
        return Err(Error::InvalidInput(format!("loops {:?} have unbounded weight", lp.to_vec())));
    }
    let mut groups = BTreeSet::new();
    for k in 1..=d {
        for sigma in s.subsets_of_size(k - 1) {
            if !m.is_independent(sigma) {
                continue;
            }
            let mut by_flat: HashMap<VertexSet, VertexSet> = HashMap::new();
            for v in s.difference(sigma).iter() {
                let vs = sigma.with(v);
                if m.is_independent(vs) {
                    let e = by_flat.entry(m.closure(vs)).or_insert(VertexSet::EMPTY);
                    *e = e.with(v);
                }
            }
            groups.extend(by_flat.into_values());
        }
    }
    Ok(groups.into_iter().collect())
}

/// `phi*(s)` with an optimal weighting indexed like `s.iter()`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PhiStar {
    pub value: BigRational,
    pub weights: Vec<BigRational>,
    pub constraints: usize,
}

pub fn phi_star(m: &Matroid, s: VertexSet) -> Result<PhiStar> {
    let d = m.d()?;
    let elems = s.to_vec();
    let groups = fractional_gp_constraints(m, s)?;
    let one = BigRational::one();
    let neg_d = BigRational::from_integer(BigInt::from(-(d as i64)));
    let a: Vec<Vec<BigRational>> = groups
        .iter()
        .map(|g| {
            elems
                .iter()
                .map(|&v| if g.contains(v) { -one.clone() } else { BigRational::zero() })
                .collect()
        })
        .collect();
    let b = vec![neg_d; groups.len()];
    let c = vec![-one.clone(); elems.len()];
    let sol = lp_solve(&LpProblem::new(c, a, b)?)?;
    match sol.status {
        LpStatus::Optimal => Ok(PhiStar {
            value: -sol.value.expect("optimal value"),
            weights: sol.primal,
            constraints: groups.len(),
        }),
        other => Err(Error::Numeric(format!("fractional general position LP is {other:?}"))),
    }
}

/// Flat-based representation of the general-position complex on `u`, together
/// with that complex (relabelled as in [`gp_complex`]).
pub fn flat_representation(m: &Matroid, u: VertexSet) -> Result<(Complex, VectorRepresentation)> {
    let x = gp_complex(m, u)?;
    let labels = u.to_vec();
    let nu = labels.len();
    let mut sets = BTreeMap::new();
    for i in x.missing_dims() {
        if i == 0 {
            return Err(Error::InvalidInput("loops have no flat representation".into()));
        }
        let r = i;
        for sigma in VertexSet::full(nu).subsets_of_size(r - 1) {
            let orig = unrelabel(&labels, sigma);
            let rows: Vec<Option<VertexSet>> = labels
                .iter()
                .map(|&v| {
                    let vs = orig.with(v);
                    (!orig.contains(v) && m.is_independent(vs) && vs.len() == r).then(|| m.closure(vs))
                })
                .collect();
            let cols: Vec<VertexSet> = rows.iter().flatten().copied().collect::<BTreeSet<_>>().into_iter().collect();
            let mut mat = RationalMatrix::zeros(nu, cols.len());
            for (v, f) in rows.iter().enumerate() {
                if let Some(f) = f {
                    let c = cols.binary_search(f).expect("column exists");
                    mat.set(v, c, BigRational::one());
                }
            }
            sets.insert(sigma, mat);
        }
    }
    Ok((x, VectorRepresentation { n: nu, sets }))
}

/// `phi*(u) <= d |P|` for the flat representation, certified by the packing
/// vector `alpha = f / d` built from an optimal fractional weighting `f`.
pub fn check_flat_certificate(m: &Matroid, u: VertexSet) -> Result<CheckReport> {
    let d = m.d()?;
    let (x, p) = flat_representation(m, u)?;
    let violations = validate_representation(&p, &x)?;
    let ps = phi_star(m, u)?;
    let dq = BigRational::from_integer(BigInt::from(d));
    let alpha: Vec<BigRational> = ps.weights.iter().map(|f| f / &dq).collect();
    let mut packing_ok = true;
    for mat in p.sets.values() {
        let g = mat.gram();
        for v in 0..x.n() {
            let s: BigRational = (0..x.n()).map(|w| &alpha[w] * g.get(w, v)).sum();
            if s > BigRational::one() {
                packing_ok = false;
            }
        }
    }
    let value = rep_value(&p)?.value;
    let holds = match &value {
        RepValue::Finite(v) => &dq * v >= ps.value,
        RepValue::Infinite => true,
    };
    let outcome = if holds { Outcome::Holds } else { Outcome::Violated };
    Ok(CheckReport::new("flat-certificate", d as f64 * value.as_f64(), rational_to_f64(&ps.value), outcome)
        .with_detail(format!(
            "phi*={} |P|={value}",
            crate::numerics::format_rational(&ps.value)
        ))
        .and(violations.is_empty(), "flat representation is invalid")
        .and(packing_ok, "alpha = f/d is not packing-feasible"))
}

fn matroid_partition_guard(m: &Matroid, partition: &Partition) -> Result<()> {
    if partition.len() > MATROID_HALL_MAX_CLASSES {
        return Err(Error::Guard {
            what: "number of partition classes",
            value: partition.len(),
            limit: MATROID_HALL_MAX_CLASSES,
        });
    }
    if partition.support() != m.ground_set() {
        return Err(Error::InvalidInput("partition classes must cover the ground set".into()));
    }
    Ok(())
}

/// First colorful general-position set in lexicographic transversal order.
pub fn colorful_gp_search(m: &Matroid, partition: &Partition) -> Result<Option<VertexSet>> {
    matroid_partition_guard(m, partition)?;
    let d = m.d()?;
    fn go(m: &Matroid, d: usize, classes: &[VertexSet], acc: VertexSet) -> Option<VertexSet> {
        let Some((first, rest)) = classes.split_first() else {
            return Some(acc);
        };
        first
            .iter()
            .filter(|&v| extends_general_position(m, d, acc, v))
            .find_map(|v| go(m, d, rest, acc.with(v)))
    }
    Ok(go(m, d, partition.classes(), VertexSet::EMPTY))
}

fn finish_hall(name: &str, m: &Matroid, partition: &Partition, rows: Vec<HallRow>) -> Result<HallReport> {
    let witness = colorful_gp_search(m, partition)?;
    let hypothesis = rows.iter().all(|r| r.holds);
    let worst = rows
        .iter()
        .min_by(|a, b| (a.value - a.threshold).total_cmp(&(b.value - b.threshold)));
    let (lhs, rhs) = worst.map_or((f64::INFINITY, 0.0), |r| (r.value, r.threshold));
    let outcome = match (hypothesis, witness.is_some()) {
        (false, _) => Outcome::NotApplicable,
        (true, true) => Outcome::Holds,
        (true, false) => Outcome::Violated,
    };
    let detail = match witness {
        Some(w) => format!("colorful set {:?}", w.to_vec()),
        None => "no colorful set".into(),
    };
    Ok(HallReport {
        rows,
        hypothesis,
        witness,
        report: CheckReport::new(name, lhs, rhs, outcome).with_detail(detail),
    })
}

/// `phi*(V_I) > d sum_{r=1}^d r C(|I|-1, r)` for all `I` forces a colorful set in general position.
pub fn check_my_hms_star(m: &Matroid, partition: &Partition) -> Result<HallReport> {
    matroid_partition_guard(m, partition)?;
    let d = m.d()?;
    let mut rows = Vec::new();
    for mask in 1u64..(1u64 << partition.len()) {
        let size = mask.count_ones() as usize;
        let u = partition.union_of(mask);
        let value = phi_star(m, u)?.value;
        let threshold = d as u128 * hall_threshold(1..=d, size - 1);
        rows.push(HallRow {
            mask,
            size,
            value: rational_to_f64(&value),
            threshold: threshold as f64,
            holds: value > BigRational::from_integer(BigInt::from(threshold)),
        });
    }
    finish_hall("hms-star", m, partition, rows)
}

/// Integer version with threshold `|I| - 1` for `|I| <= d + 1`.
pub fn check_my_hms(m: &Matroid, partition: &Partition) -> Result<HallReport> {
    matroid_partition_guard(m, partition)?;
    let d = m.d()?;
    let mut rows = Vec::new();
    for mask in 1u64..(1u64 << partition.len()) {
        let size = mask.count_ones() as usize;
        let (value, _) = phi(m, partition.union_of(mask))?;
        let threshold = if size <= d + 1 {
            (size - 1) as u128
        } else {
            d as u128 * hall_threshold(1..=d, size - 1)
        };
        rows.push(HallRow {
            mask,
            size,
            value: value as f64,
            threshold: threshold as f64,
            holds: value as u128 > threshold,
        });
    }
    finish_hall("hms", m, partition, rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(a: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(a))
    }

    #[test]
    fn uniform_flats_and_phi_star() {
        let m = Matroid::uniform(2, 4).unwrap();
        let f1 = m.flats(1).unwrap();
        assert_eq!(f1.len(), 4);
        assert!(f1.iter().all(|f| f.len() == 1));
        assert_eq!(phi_star(&m, m.ground_set()).unwrap().value, q(4));
        let m = Matroid::uniform(3, 6).unwrap();
        assert_eq!(phi(&m, m.ground_set()).unwrap().0, 6);
        assert_eq!(gp_complex(&m, m.ground_set()).unwrap().missing_faces().len(), 0);
    }

    #[test]
    fn ag23_geometry() {
        let m = Matroid::builtin(Builtin::Ag23);
        assert_eq!(m.full_rank(), 3);
        let lines = m.flats(2).unwrap();
        assert_eq!(lines.len(), 12);
        assert!(lines.iter().all(|l| l.len() == 3));
        let x = gp_complex(&m, m.ground_set()).unwrap();
        assert_eq!(x.missing_faces().len(), 12);
        assert_eq!(x.faces(2).len(), 72);
        assert_eq!(phi(&m, m.ground_set()).unwrap().0, 4);
        assert_eq!(phi_star(&m, m.ground_set()).unwrap().value, q(9));
        assert!(check_flat_certificate(&m, m.ground_set()).unwrap().passed());
    }

    #[test]
    fn ag23_parallel_classes_hall() {
        let m = Matroid::builtin(Builtin::Ag23);
        // the three vertical lines x = 0, 1, 2
        let part = Partition::new(&[vec![0, 1, 2], vec![3, 4, 5], vec![6, 7, 8]]).unwrap();
        let h = check_my_hms_star(&m, &part).unwrap();
        assert!(h.hypothesis);
        assert_eq!(h.report.outcome, Outcome::Holds);
        let thresholds: Vec<f64> = h.rows.iter().map(|r| r.threshold).collect();
        assert_eq!(thresholds, vec![0.0, 0.0, 2.0, 0.0, 2.0, 2.0, 8.0]);
    }

    #[test]
    fn pg33_counts() {
        let m = Matroid::builtin(Builtin::Pg33);
        assert_eq!(m.n(), 40);
        assert_eq!(m.full_rank(), 4);
        let lines = m.flats(2).unwrap();
        assert_eq!(lines.len(), 130);
        assert!(lines.iter().all(|l| l.len() == 4));
    }

    #[test]
    fn general_position_definitions_agree() {
        let m = Matroid::builtin(Builtin::Ag23);
        for bits in 0u64..512 {
            let s = VertexSet::from_bits(bits);
            assert_eq!(m.is_general_position(s).unwrap(), m.is_general_position_by_flats(s).unwrap());
        }
    }

    #[test]
    fn rejects_bad_input() {
        assert!(Matroid::linear(4, vec![vec![1]]).is_err());
        assert!(Matroid::linear(17, vec![vec![1]]).is_err());
        assert!(Matroid::linear(3, vec![vec![3]]).is_err());
        assert!(Matroid::uniform(3, 2).is_err());
        assert!(Matroid::uniform(1, 3).unwrap().d().is_err());
    }
}
