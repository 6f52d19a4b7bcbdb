//! Seeded generators for the property campaigns.
//!
//! Every trial draws from its own ChaCha8 stream: the generator is seeded with
//! the campaign seed and the stream number is the trial index, so a single
//! trial can be replayed from `{seed, trial}` without running the others.
//!
//! Random complex (`random_complex`):
//! 1. `n` uniform in `[4, n_max]`, `d` uniform in `[1, min(d_max, n - 1)]`.
//! 2. One `(d+1)`-subset is drawn uniformly and always kept, so `h(X) = d`.
//!    Every other `(d+1)`-subset is kept with probability 1/2.
//! 3. In mixed mode, every subset of cardinality `2..=d` that is not inside the
//!    forced face is kept with probability 1/4.
//! 4. Supersets of kept sets are removed, leaving an antichain.
//!
//! Subsets are visited in the order of `VertexSet::subsets_of_size`, so the
//! sequence of draws is fixed.

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use scx_core::domination::{representation_index_sets, VectorRepresentation};
use scx_core::matroid::Matroid;
use scx_core::numerics::RationalMatrix;
use scx_core::{Complex, Partition, VertexSet};

pub fn trial_rng(seed: u64, trial: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial);
    rng
}

fn minimal(mut sets: Vec<VertexSet>) -> Vec<Vec<usize>> {
    sets.sort_by_key(|s| (s.len(), s.to_vec()));
    sets.dedup();
    let mut out: Vec<VertexSet> = Vec::new();
    for s in sets {
        if !out.iter().any(|m| m.is_subset(s)) {
            out.push(s);
        }
    }
    out.into_iter().map(|s| s.to_vec()).collect()
}

/// Random complex on exactly `n` vertices with top missing-face dimension `d`.
pub fn random_complex_on(rng: &mut ChaCha8Rng, n: usize, d: usize, mixed: bool) -> Complex {
    let all = VertexSet::full(n);
    let top = all.subsets_of_size(d + 1);
    let forced = top[rng.gen_range(0..top.len())];
    let mut kept: Vec<VertexSet> = top
        .into_iter()
        .filter(|&s| s == forced || rng.gen_bool(0.5))
        .collect();
    if mixed {
        for c in 2..=d {
            for s in all.subsets_of_size(c) {
                if !s.is_subset(forced) && rng.gen_bool(0.25) {
                    kept.push(s);
                }
            }
        }
    }
    Complex::from_missing_faces(n, &minimal(kept)).expect("antichain by construction")
}

/// The documented generator: draws `n`, `d` and then the missing faces.
pub fn random_complex(rng: &mut ChaCha8Rng, n_max: usize, d_max: usize, mixed: bool) -> Complex {
    let n = rng.gen_range(4..=n_max.max(4));
    let d = rng.gen_range(1..=d_max.clamp(1, n - 1));
    random_complex_on(rng, n, d, mixed)
}

/// Multiplier with every entry in `{1, .., a_max}`.
pub fn random_multiplier(rng: &mut ChaCha8Rng, n: usize, a_max: usize) -> Vec<usize> {
    (0..n).map(|_| rng.gen_range(1..=a_max)).collect()
}

/// Cochain with entries uniform in `[-1, 1]`.
pub fn random_cochain(rng: &mut ChaCha8Rng, len: usize) -> Vec<f64> {
    (0..len).map(|_| rng.gen_range(-1.0..=1.0)).collect()
}

/// Valid representation: the first coordinate of every vector is 1, the
/// others are multiples of 1/2 in `[0, 2]`; `extra` extra coordinates per set.
pub fn random_representation(rng: &mut ChaCha8Rng, x: &Complex, extra: usize) -> VectorRepresentation {
    let n = x.n();
    let sets = representation_index_sets(x)
        .into_iter()
        .map(|s| {
            let rows = (0..n)
                .map(|_| {
                    let mut row = vec![BigRational::from_integer(BigInt::from(1))];
                    row.extend(
                        (0..extra).map(|_| BigRational::new(BigInt::from(rng.gen_range(0..=4)), BigInt::from(2))),
                    );
                    row
                })
                .collect();
            (s, RationalMatrix::from_rows(rows).expect("rectangular"))
        })
        .collect();
    VectorRepresentation { n, sets }
}

/// Partition of `0..n` into `m` nonempty classes: a shuffle cut at `m - 1`
/// distinct random points.
pub fn random_partition(rng: &mut ChaCha8Rng, n: usize, m: usize) -> Partition {
    let mut verts: Vec<usize> = (0..n).collect();
    verts.shuffle(rng);
    let mut cuts: Vec<usize> = (1..n).collect();
    cuts.shuffle(rng);
    let mut cuts: Vec<usize> = cuts.into_iter().take(m - 1).collect();
    cuts.sort_unstable();
    let mut classes = Vec::with_capacity(m);
    let mut start = 0;
    for c in cuts.into_iter().chain(std::iter::once(n)) {
        let mut class = verts[start..c].to_vec();
        class.sort_unstable();
        classes.push(class);
        start = c;
    }
    Partition::new(&classes).expect("disjoint nonempty classes")
}

/// Partition of `0..n` with class sizes drawn from `sizes` until `n` is used up.
pub fn random_sized_partition(rng: &mut ChaCha8Rng, m: usize, sizes: std::ops::RangeInclusive<usize>) -> (usize, Partition) {
    let lens: Vec<usize> = (0..m).map(|_| rng.gen_range(sizes.clone())).collect();
    let mut classes = Vec::with_capacity(m);
    let mut next = 0;
    for l in lens {
        classes.push((next..next + l).collect::<Vec<_>>());
        next += l;
    }
    (next, Partition::new(&classes).expect("disjoint nonempty classes"))
}

/// Sparse complex for Hall tests: each 2- and 3-subset is missing with
/// probability `p2` and `p3`.
pub fn random_sparse_complex(rng: &mut ChaCha8Rng, n: usize, p2: f64, p3: f64) -> Complex {
    let all = VertexSet::full(n);
    let mut kept: Vec<VertexSet> = all.subsets_of_size(2).into_iter().filter(|_| rng.gen_bool(p2)).collect();
    if n >= 3 {
        kept.extend(all.subsets_of_size(3).into_iter().filter(|_| rng.gen_bool(p3)));
    }
    if kept.is_empty() {
        return Complex::simplex(n).expect("n >= 1");
    }
    Complex::from_missing_faces(n, &minimal(kept)).expect("antichain by construction")
}

/// Linear matroid over `F_p` of the given rank on `n` nonzero columns; full rank
/// is forced by taking the first `rank` columns to be unit vectors.
pub fn random_linear_matroid(rng: &mut ChaCha8Rng, p: u32, rank: usize, n: usize) -> Matroid {
    let mut columns: Vec<Vec<u32>> = Vec::with_capacity(n);
    for j in 0..n {
        if j < rank {
            columns.push((0..rank).map(|i| u32::from(i == j)).collect());
            continue;
        }
        loop {
            let c: Vec<u32> = (0..rank).map(|_| rng.gen_range(0..p)).collect();
            if c.iter().any(|&e| e != 0) {
                columns.push(c);
                break;
            }
        }
    }
    columns.shuffle(rng);
    Matroid::linear(p, columns).expect("valid linear matroid")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn replayable_from_seed_and_trial() {
        let a = random_complex(&mut trial_rng(7, 3), 7, 3, true);
        let b = random_complex(&mut trial_rng(7, 3), 7, 3, true);
        assert_eq!(a, b);
        let c = random_complex(&mut trial_rng(7, 4), 7, 3, true);
        let d = random_complex(&mut trial_rng(8, 3), 7, 3, true);
        assert!(a != c || a != d);
    }

    #[test]
    fn generator_respects_bounds() {
        for t in 0..50 {
            let x = random_complex(&mut trial_rng(1, t), 7, 3, t % 2 == 0);
            assert!((4..=7).contains(&x.n()));
            let d = x.max_missing_dim().unwrap();
            assert!((1..=3).contains(&d));
            assert!(x.missing_faces().iter().all(|m| m.len() >= 2));
        }
    }

    #[test]
    fn partitions_cover() {
        for t in 0..20 {
            let p = random_partition(&mut trial_rng(2, t), 9, 3);
            assert_eq!(p.len(), 3);
            assert_eq!(p.support(), VertexSet::full(9));
        }
    }
}
