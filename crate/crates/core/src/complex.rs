//! Finite simplicial complexes on the vertex set `0..n`.
//!
//! A complex is stored through its missing faces (minimal non-faces). That
//! antichain determines the complex exactly, and it stays small for the
//! complexes of interest here even when the facet list is enormous (the
//! PG(3,3) complex has 520 missing faces but a huge number of facets).
//! Facets and face lists are derived lazily and cached.

use std::collections::{BTreeSet, HashSet};
use std::fmt;
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::vertex_set::{VertexSet, MAX_VERTICES};

#[derive(Clone)]
pub struct Complex {
    n: usize,
    /// Sorted by cardinality, then lexicographically.
    missing: Vec<VertexSet>,
    faces: Vec<OnceLock<Vec<VertexSet>>>,
    facets: OnceLock<Vec<VertexSet>>,
}

impl PartialEq for Complex {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.missing == other.missing
    }
}

impl Eq for Complex {}

impl fmt::Debug for Complex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Complex")
            .field("n", &self.n)
            .field("missing", &self.missing)
            .finish()
    }
}

fn check_set(n: usize, set: &[usize]) -> Result<VertexSet> {
    let mut s = VertexSet::EMPTY;
    for &v in set {
        if v >= n {
            return Err(Error::VertexOutOfRange { vertex: v, n });
        }
        if s.contains(v) {
            return Err(Error::DuplicateVertex(v));
        }
        s = s.with(v);
    }
    Ok(s)
}

fn check_n(n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::NoVertices);
    }
    if n > MAX_VERTICES {
        return Err(Error::TooManyVertices {
            n,
            max: MAX_VERTICES,
        });
    }
    Ok(())
}

fn sort_sets(sets: &mut [VertexSet]) {
    sets.sort_by(|a, b| a.len().cmp(&b.len()).then(a.cmp(b)));
}

/// Inclusion-minimal members of `sets`, sorted by cardinality then lexicographically.
pub(crate) fn minimal_sets(mut sets: Vec<VertexSet>) -> Vec<VertexSet> {
    sort_sets(&mut sets);
    sets.dedup();
    let mut kept: Vec<VertexSet> = Vec::with_capacity(sets.len());
    for s in sets {
        if !kept.iter().any(|k| k.is_subset(s)) {
            kept.push(s);
        }
    }
    kept
}

impl Complex {
    /// Builds a complex from an antichain of missing faces without validation.
    pub(crate) fn from_missing_unchecked(n: usize, mut missing: Vec<VertexSet>) -> Complex {
        sort_sets(&mut missing);
        Complex {
            n,
            missing,
            faces: (0..=n).map(|_| OnceLock::new()).collect(),
            facets: OnceLock::new(),
        }
    }

    /// The complex whose faces are all subsets of the given sets.
    pub fn from_facets(n: usize, facets: &[Vec<usize>]) -> Result<Complex> {
        check_n(n)?;
        let sets = facets
            .iter()
            .map(|f| check_set(n, f))
            .collect::<Result<Vec<_>>>()?;
        // keep maximal sets only
        let mut maximal: Vec<VertexSet> = Vec::new();
        let mut sorted = sets;
        sorted.sort_by(|a, b| b.len().cmp(&a.len()).then(a.cmp(b)));
        sorted.dedup();
        for s in sorted {
            if !maximal.iter().any(|m| s.is_subset(*m)) {
                maximal.push(s);
            }
        }
        let in_complex = |s: VertexSet| maximal.iter().any(|m| s.is_subset(*m));
        let mut missing = Vec::new();
        // every missing face is f + v with f a face and v > max(f)
        let mut stack = vec![VertexSet::EMPTY];
        while let Some(f) = stack.pop() {
            let start = f.max().map_or(0, |m| m + 1);
            for v in start..n {
                let g = f.with(v);
                if in_complex(g) {
                    stack.push(g);
                } else if f.iter().all(|u| in_complex(g.without(u))) {
                    missing.push(g);
                }
            }
        }
        let c = Complex::from_missing_unchecked(n, missing);
        maximal.sort();
        let _ = c.facets.set(maximal);
        Ok(c)
    }

    /// The unique complex with the given missing faces.
    pub fn from_missing_faces(n: usize, missing: &[Vec<usize>]) -> Result<Complex> {
        check_n(n)?;
        let mut sets = missing
            .iter()
            .map(|f| check_set(n, f))
            .collect::<Result<Vec<_>>>()?;
        if sets.iter().any(|s| s.is_empty()) {
            return Err(Error::InvalidInput(
                "the empty set cannot be a missing face".into(),
            ));
        }
        sort_sets(&mut sets);
        sets.dedup();
        for (i, a) in sets.iter().enumerate() {
            for b in &sets[i + 1..] {
                if a.is_subset(*b) {
                    return Err(Error::NotAntichain(b.to_vec(), a.to_vec()));
                }
            }
        }
        Ok(Complex::from_missing_unchecked(n, sets))
    }

    /// Full simplex on `n` vertices.
    pub fn simplex(n: usize) -> Result<Complex> {
        check_n(n)?;
        Ok(Complex::from_missing_unchecked(n, Vec::new()))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vertex_set(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn is_face(&self, s: VertexSet) -> bool {
        s.is_subset(self.vertex_set()) && !self.missing.iter().any(|m| m.is_subset(s))
    }

    pub fn contains(&self, vertices: &[usize]) -> bool {
        vertices.iter().all(|&v| v < self.n) && self.is_face(VertexSet::from_vertices(vertices.iter().copied()))
    }

    /// Faces of dimension `k` (cardinality `k + 1`) in lexicographic order.
    /// `k = -1` yields the empty face.
    pub fn faces(&self, k: isize) -> &[VertexSet] {
        if k < -1 || k >= self.n as isize {
            return &[];
        }
        let slot = (k + 1) as usize;
        self.faces[slot].get_or_init(|| self.enumerate_faces(slot))
    }

    fn enumerate_faces(&self, size: usize) -> Vec<VertexSet> {
        let mut out = Vec::new();
        let mut current = Vec::with_capacity(size);
        self.extend_faces(VertexSet::EMPTY, 0, size, &mut current, &mut out);
        out
    }

    fn extend_faces(
        &self,
        face: VertexSet,
        start: usize,
        size: usize,
        current: &mut Vec<usize>,
        out: &mut Vec<VertexSet>,
    ) {
        if current.len() == size {
            out.push(face);
            return;
        }
        let needed = size - current.len();
        for v in start..self.n {
            if self.n - v < needed {
                break;
            }
            let g = face.with(v);
            if self.is_face(g) {
                current.push(v);
                self.extend_faces(g, v + 1, size, current, out);
                current.pop();
            }
        }
    }

    /// Dimension of the complex; `-1` when only the empty face is present.
    pub fn dim(&self) -> isize {
        let mut k = -1;
        while !self.faces(k + 1).is_empty() {
            k += 1;
        }
        k
    }

    /// Number of faces of every dimension `-1..=dim`.
    pub fn f_vector(&self) -> Vec<usize> {
        (-1..=self.dim()).map(|k| self.faces(k).len()).collect()
    }

    /// Inclusion-maximal faces, lexicographically sorted.
    pub fn facets(&self) -> &[VertexSet] {
        self.facets.get_or_init(|| {
            let mut out = Vec::new();
            for k in -1..=self.dim() {
                for &f in self.faces(k) {
                    if (0..self.n).all(|v| f.contains(v) || !self.is_face(f.with(v))) {
                        out.push(f);
                    }
                }
            }
            out.sort();
            out
        })
    }

    pub fn missing_faces(&self) -> &[VertexSet] {
        &self.missing
    }

    /// Missing faces of dimension `i` (cardinality `i + 1`).
    pub fn missing_of_dim(&self, i: usize) -> Vec<VertexSet> {
        self.missing
            .iter()
            .copied()
            .filter(|m| m.len() == i + 1)
            .collect()
    }

    /// Dimensions of missing faces: `i` is present when some missing face has `i + 1` vertices.
    pub fn missing_dims(&self) -> BTreeSet<usize> {
        self.missing.iter().map(|m| m.len() - 1).collect()
    }

    /// Largest dimension of a missing face, or `None` for a full simplex.
    pub fn max_missing_dim(&self) -> Option<usize> {
        self.missing.last().map(|m| m.len() - 1)
    }

    pub(crate) fn require_max_missing_dim(&self) -> Result<usize> {
        self.max_missing_dim().ok_or(Error::NoMissingFaces)
    }

    fn require_face(&self, s: VertexSet) -> Result<()> {
        if self.is_face(s) {
            Ok(())
        } else {
            Err(Error::NotAFace(s.to_vec()))
        }
    }

    /// Number of faces one dimension up that contain `sigma`.
    pub fn degree(&self, sigma: VertexSet) -> Result<usize> {
        self.require_face(sigma)?;
        Ok(self.degree_unchecked(sigma))
    }

    pub(crate) fn degree_unchecked(&self, sigma: VertexSet) -> usize {
        (0..self.n)
            .filter(|&v| !sigma.contains(v) && self.is_face(sigma.with(v)))
            .count()
    }

    /// Link of a face, kept on the same vertex labels; vertices outside the
    /// link become missing singletons.
    pub fn link(&self, sigma: VertexSet) -> Result<Complex> {
        self.require_face(sigma)?;
        let mut cand: Vec<VertexSet> = self.missing.iter().map(|m| m.difference(sigma)).collect();
        cand.extend(sigma.iter().map(VertexSet::singleton));
        Ok(Complex::from_missing_unchecked(self.n, minimal_sets(cand)))
    }

    /// Vertices of a complex: the non-missing singletons.
    pub fn vertices(&self) -> VertexSet {
        VertexSet::from_vertices((0..self.n).filter(|&v| self.is_face(VertexSet::singleton(v))))
    }

    /// Induced subcomplex `X[U]`, relabelled so that the `j`-th smallest element of `U` becomes `j`.
    pub fn induced(&self, u: VertexSet) -> Result<Complex> {
        if let Some(m) = u.max() {
            if m >= self.n {
                return Err(Error::VertexOutOfRange { vertex: m, n: self.n });
            }
        }
        let relabel = |s: VertexSet| VertexSet::from_vertices(s.iter().map(|v| u.rank_of(v)));
        let missing = self
            .missing
            .iter()
            .filter(|m| m.is_subset(u))
            .map(|&m| relabel(m))
            .collect();
        Ok(Complex::from_missing_unchecked(u.len(), missing))
    }

    /// Missing-face statistics `T(theta)`, its intersection and the size of that intersection.
    pub fn missing_stats(&self, theta: VertexSet) -> Result<MissingFaceStats> {
        let d = self.require_max_missing_dim()?;
        if theta.len() < d + 1 {
            return Err(Error::InvalidInput(format!(
                "theta has {} vertices, needs at least {}",
                theta.len(),
                d + 1
            )));
        }
        if !theta.is_subset(self.vertex_set()) {
            return Err(Error::VertexOutOfRange {
                vertex: theta.max().unwrap_or(0),
                n: self.n,
            });
        }
        let absent: Vec<VertexSet> = theta
            .subsets_of_size(d + 1)
            .into_iter()
            .filter(|t| !self.is_face(*t))
            .collect();
        let core = if absent.is_empty() {
            VertexSet::EMPTY
        } else {
            absent.iter().fold(theta, |acc, t| acc.intersection(*t))
        };
        Ok(MissingFaceStats {
            theta,
            absent,
            core,
            m: core.len(),
        })
    }

    /// The complex whose missing faces are the missing `i`-faces of this one.
    pub fn derived_xi(&self, i: usize) -> Result<Complex> {
        let mi = self.missing_of_dim(i);
        if mi.is_empty() {
            return Err(Error::InvalidInput(format!("{i} is not a missing-face dimension")));
        }
        Ok(Complex::from_missing_unchecked(self.n, mi))
    }

    /// The `i`-dimensional complex with full `(i-1)`-skeleton whose `i`-faces
    /// are the missing `i`-faces of this one.
    pub fn derived_yi(&self, i: usize) -> Result<Complex> {
        let mi = self.missing_of_dim(i);
        if mi.is_empty() {
            return Err(Error::InvalidInput(format!("{i} is not a missing-face dimension")));
        }
        let top: HashSet<VertexSet> = mi.iter().copied().collect();
        let mut missing: Vec<VertexSet> = self
            .vertex_set()
            .subsets_of_size(i + 1)
            .into_iter()
            .filter(|s| !top.contains(s))
            .collect();
        let mut seen = HashSet::new();
        for &m in &mi {
            for v in 0..self.n {
                if m.contains(v) {
                    continue;
                }
                let g = m.with(v);
                if seen.insert(g) && g.iter().all(|u| top.contains(&g.without(u))) {
                    missing.push(g);
                }
            }
        }
        Ok(Complex::from_missing_unchecked(self.n, missing))
    }

    /// Intersection of complexes sharing a vertex count.
    pub fn intersection(complexes: &[Complex]) -> Result<Complex> {
        let first = complexes
            .first()
            .ok_or_else(|| Error::InvalidInput("intersection of zero complexes".into()))?;
        if complexes.iter().any(|c| c.n != first.n) {
            return Err(Error::InvalidInput("complexes have different vertex counts".into()));
        }
        let all = complexes.iter().flat_map(|c| c.missing.iter().copied()).collect();
        Ok(Complex::from_missing_unchecked(first.n, minimal_sets(all)))
    }

    /// Multiplier complex `X^a`: vertex `v` is replaced by `a[v]` copies, numbered
    /// consecutively (`copies_offsets` gives the first copy of every vertex).
    pub fn multiplier(&self, a: &[usize]) -> Result<Complex> {
        if a.len() != self.n {
            return Err(Error::InvalidInput(format!(
                "multiplier has {} entries for {} vertices",
                a.len(),
                self.n
            )));
        }
        if let Some(v) = a.iter().position(|&x| x < 1) {
            return Err(Error::InvalidInput(format!("multiplier of vertex {v} is zero")));
        }
        let total: usize = a.iter().sum();
        check_n(total)?;
        let offsets = copies_offsets(a);
        let mut missing = Vec::new();
        for m in &self.missing {
            let mut partial = vec![VertexSet::EMPTY];
            for v in m.iter() {
                let off = offsets[v];
                partial = partial
                    .into_iter()
                    .flat_map(|s| (0..a[v]).map(move |j| s.with(off + j)))
                    .collect();
            }
            missing.extend(partial);
        }
        Ok(Complex::from_missing_unchecked(total, missing))
    }

    /// Reduced Euler characteristic `sum_k (-1)^k |X(k)|` over `k >= -1`.
    pub fn reduced_euler_characteristic(&self) -> i64 {
        (-1..=self.dim())
            .map(|k| {
                let c = self.faces(k).len() as i64;
                if k.rem_euclid(2) == 0 {
                    c
                } else {
                    -c
                }
            })
            .sum()
    }
}

/// First copy index of every vertex in a multiplier complex.
pub fn copies_offsets(a: &[usize]) -> Vec<usize> {
    a.iter()
        .scan(0, |acc, &x| {
            let o = *acc;
            *acc += x;
            Some(o)
        })
        .collect()
}

/// Projection of multiplier-complex vertices back to the original vertices.
pub fn multiplier_projection(a: &[usize]) -> Vec<usize> {
    a.iter()
        .enumerate()
        .flat_map(|(v, &k)| std::iter::repeat(v).take(k))
        .collect()
}

/// Statistics of the absent `d`-simplices inside a vertex set `theta`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MissingFaceStats {
    pub theta: VertexSet,
    /// `d`-simplices inside `theta` that are not faces.
    pub absent: Vec<VertexSet>,
    /// Intersection of all members of `absent` (empty when `absent` is empty).
    pub core: VertexSet,
    /// Cardinality of `core`.
    pub m: usize,
}

/// Disjoint nonempty vertex classes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Partition {
    classes: Vec<VertexSet>,
}

impl Partition {
    pub fn new(classes: &[Vec<usize>]) -> Result<Partition> {
        let mut seen = VertexSet::EMPTY;
        let mut out = Vec::with_capacity(classes.len());
        for class in classes {
            if class.is_empty() {
                return Err(Error::InvalidInput("partition class is empty".into()));
            }
            let s = check_set(MAX_VERTICES, class)?;
            if !s.intersection(seen).is_empty() {
                return Err(Error::DuplicateVertex(s.intersection(seen).min().unwrap_or(0)));
            }
            seen = seen.union(s);
            out.push(s);
        }
        Ok(Partition { classes: out })
    }

    pub fn from_sets(classes: Vec<VertexSet>) -> Result<Partition> {
        let v: Vec<Vec<usize>> = classes.iter().map(|c| c.to_vec()).collect();
        Partition::new(&v)
    }

    pub fn classes(&self) -> &[VertexSet] {
        &self.classes
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn support(&self) -> VertexSet {
        self.classes.iter().fold(VertexSet::EMPTY, |a, c| a.union(*c))
    }

    /// Union of the classes whose indices are set in `mask`.
    pub fn union_of(&self, mask: u64) -> VertexSet {
        self.classes
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .fold(VertexSet::EMPTY, |a, (_, c)| a.union(*c))
    }

    /// True iff `sigma` meets every class exactly once.
    pub fn is_colorful(&self, sigma: VertexSet) -> bool {
        self.classes.iter().all(|c| c.intersection(sigma).len() == 1)
    }

    /// Restriction to the classes in `mask`, relabelled inside their union the
    /// same way [`Complex::induced`] relabels vertices.
    pub fn restricted(&self, mask: u64) -> Partition {
        let u = self.union_of(mask);
        let classes = self
            .classes
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, c)| VertexSet::from_vertices(c.iter().map(|v| u.rank_of(v))))
            .collect();
        Partition { classes }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vs(v: &[usize]) -> VertexSet {
        VertexSet::from_vertices(v.iter().copied())
    }

    fn hollow_triangle() -> Complex {
        Complex::from_facets(3, &[vec![0, 1], vec![1, 2], vec![0, 2]]).unwrap()
    }

    #[test]
    fn hollow_triangle_faces() {
        let x = hollow_triangle();
        assert_eq!(x.faces(1), &[vs(&[0, 1]), vs(&[0, 2]), vs(&[1, 2])]);
        assert!(x.faces(2).is_empty());
        assert_eq!(x.faces(-1), &[VertexSet::EMPTY]);
        assert_eq!(x.missing_faces(), &[vs(&[0, 1, 2])]);
        assert_eq!(x.dim(), 1);
    }

    #[test]
    fn full_simplex_from_facets() {
        let x = Complex::from_facets(4, &[vec![0, 1, 2, 3]]).unwrap();
        assert!(x.missing_faces().is_empty());
        assert_eq!(x.faces(3).len(), 1);
        assert_eq!(x.max_missing_dim(), None);
        assert!(x.missing_dims().is_empty());
    }

    #[test]
    fn absorbed_facets() {
        let x = Complex::from_facets(3, &[vec![0, 1], vec![0], vec![0, 1, 2]]).unwrap();
        assert_eq!(x.facets(), &[vs(&[0, 1, 2])]);
    }

    #[test]
    fn constructor_errors() {
        assert_eq!(
            Complex::from_facets(3, &[vec![0, 3]]),
            Err(Error::VertexOutOfRange { vertex: 3, n: 3 })
        );
        assert_eq!(Complex::from_facets(3, &[vec![1, 1]]), Err(Error::DuplicateVertex(1)));
        assert_eq!(Complex::from_facets(0, &[]), Err(Error::NoVertices));
        assert!(matches!(
            Complex::from_missing_faces(4, &[vec![0, 1], vec![0, 1, 2]]),
            Err(Error::NotAntichain(..))
        ));
        assert!(Complex::from_missing_faces(4, &[vec![]]).is_err());
    }

    #[test]
    fn single_missing_triangle() {
        let x = Complex::from_missing_faces(4, &[vec![0, 1, 2]]).unwrap();
        assert!(!x.contains(&[0, 1, 2]));
        assert!(!x.contains(&[0, 1, 2, 3]));
        assert!(x.contains(&[0, 1, 3]));
        assert_eq!(x.faces(2).len(), 3);
        assert_eq!(x.missing_dims(), BTreeSet::from([2]));
    }

    #[test]
    fn two_points() {
        let x = Complex::from_missing_faces(2, &[vec![0, 1]]).unwrap();
        assert_eq!(x.faces(0).len(), 2);
        assert!(x.faces(1).is_empty());
        assert_eq!(x.facets(), &[vs(&[0]), vs(&[1])]);
        let y = x.induced(vs(&[0])).unwrap();
        assert_eq!(y.n(), 1);
        assert_eq!(y.faces(0), &[vs(&[0])]);
    }

    #[test]
    fn induced_edge_cases() {
        let x = hollow_triangle();
        assert_eq!(x.induced(x.vertex_set()).unwrap(), x);
        let e = x.induced(VertexSet::EMPTY).unwrap();
        assert_eq!(e.n(), 0);
        assert_eq!(e.faces(-1), &[VertexSet::EMPTY]);
        assert!(e.faces(0).is_empty());
        assert!(x.induced(vs(&[5])).is_err());
    }

    #[test]
    fn degrees_and_links() {
        let s = Complex::simplex(5).unwrap();
        assert_eq!(s.degree(vs(&[0])).unwrap(), 4);
        let t = hollow_triangle();
        assert_eq!(t.degree(vs(&[0, 1])).unwrap(), 0);
        assert!(t.degree(vs(&[0, 1, 2])).is_err());
        let lk = t.link(vs(&[0])).unwrap();
        assert_eq!(lk.vertices(), vs(&[1, 2]));
        assert!(!lk.contains(&[1, 2]));
        assert_eq!(lk.vertices().len(), t.degree(vs(&[0])).unwrap());
    }

    #[test]
    fn missing_stats_small() {
        let x = Complex::from_missing_faces(2, &[vec![0, 1]]).unwrap();
        let st = x.missing_stats(vs(&[0, 1])).unwrap();
        assert_eq!(st.absent, vec![vs(&[0, 1])]);
        assert_eq!(st.m, 2);
        let st = x.missing_stats(vs(&[0])).unwrap_err();
        assert!(matches!(st, Error::InvalidInput(_)));
        let t = hollow_triangle();
        let st = t.missing_stats(vs(&[0, 1, 2])).unwrap();
        assert_eq!(st.m, 3);
        let face = Complex::from_missing_faces(4, &[vec![0, 1, 2]]).unwrap();
        let st = face.missing_stats(vs(&[0, 1, 3])).unwrap();
        assert!(st.absent.is_empty());
        assert_eq!(st.m, 0);
    }

    #[test]
    fn derived_complexes_of_pure_dimension() {
        let x = Complex::from_missing_faces(5, &[vec![0, 1, 2], vec![2, 3, 4]]).unwrap();
        assert_eq!(x.derived_xi(2).unwrap(), x);
        assert!(x.derived_xi(1).is_err());
        let y = x.derived_yi(2).unwrap();
        assert_eq!(y.faces(1).len(), 10);
        assert_eq!(y.faces(2), &[vs(&[0, 1, 2]), vs(&[2, 3, 4])]);
        assert!(y.faces(3).is_empty());
    }

    #[test]
    fn multiplier_single_edge() {
        let x = Complex::from_facets(2, &[vec![0, 1]]).unwrap();
        let xa = x.multiplier(&[2, 1]).unwrap();
        assert_eq!(xa.n(), 3);
        assert!(xa.contains(&[0, 1, 2]));
        assert!(x.multiplier(&[0, 1]).is_err());
        let t = hollow_triangle();
        assert_eq!(t.multiplier(&[1, 1, 1]).unwrap(), t);
        let ta = t.multiplier(&[2, 1, 1]).unwrap();
        assert_eq!(ta.missing_faces().len(), 2);
        assert_eq!(multiplier_projection(&[2, 1, 1]), vec![0, 0, 1, 2]);
    }

    #[test]
    fn colorful_sets() {
        let p = Partition::new(&[vec![0, 1], vec![2, 3]]).unwrap();
        assert!(p.is_colorful(vs(&[0, 3])));
        assert!(!p.is_colorful(vs(&[0, 1])));
        let empty = Partition::new(&[]).unwrap();
        assert!(empty.is_colorful(VertexSet::EMPTY));
        assert!(Partition::new(&[vec![0], vec![0, 1]]).is_err());
        assert!(Partition::new(&[vec![]]).is_err());
    }

    #[test]
    fn restricted_partition_matches_induced_labels() {
        let p = Partition::new(&[vec![0, 4], vec![1], vec![2, 5]]).unwrap();
        let r = p.restricted(0b101);
        assert_eq!(r.classes(), &[vs(&[0, 2]), vs(&[1, 3])]);
    }
}
