//! Orientation signs of ordered simplices.

use crate::error::{Error, Result};

/// Sign of the permutation carrying the ordered list `from` to the ordered list `to`.
///
/// Both lists must hold the same distinct vertices.
pub fn permutation_sign(from: &[usize], to: &[usize]) -> Result<i8> {
    if from.len() != to.len() {
        return Err(Error::InvalidInput("orderings have different lengths".into()));
    }
    let mut positions = Vec::with_capacity(to.len());
    for v in to {
        let p = from
            .iter()
            .position(|u| u == v)
            .ok_or_else(|| Error::InvalidInput(format!("vertex {v} missing from the source ordering")))?;
        if positions.contains(&p) {
            return Err(Error::DuplicateVertex(*v));
        }
        positions.push(p);
    }
    let mut inversions = 0usize;
    for i in 0..positions.len() {
        for j in i + 1..positions.len() {
            if positions[i] > positions[j] {
                inversions += 1;
            }
        }
    }
    Ok(if inversions % 2 == 0 { 1 } else { -1 })
}

/// `sgn(sigma, tau)`: the sign of the permutation taking the ordered simplex
/// `sigma` to `sigma \ tau` (in the order inherited from `sigma`) followed by `tau`.
pub fn sign(sigma: &[usize], tau: &[usize]) -> Result<i8> {
    if let Some(v) = tau.iter().find(|v| !sigma.contains(v)) {
        return Err(Error::InvalidInput(format!("vertex {v} of the subsimplex is not in the simplex")));
    }
    let mut target: Vec<usize> = sigma.iter().copied().filter(|v| !tau.contains(v)).collect();
    target.extend_from_slice(tau);
    permutation_sign(sigma, &target)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use std::collections::HashMap;

    #[test]
    fn coboundary_convention() {
        assert_eq!(sign(&[0, 1, 2], &[1, 2]).unwrap(), 1);
        assert_eq!(sign(&[0, 1, 2], &[0, 2]).unwrap(), -1);
        assert_eq!(sign(&[0, 1, 2], &[0, 1]).unwrap(), 1);
        assert_eq!(sign(&[3, 5], &[]).unwrap(), 1);
        assert!(sign(&[0, 1], &[2]).is_err());
    }

    #[test]
    fn permutation_parity() {
        assert_eq!(permutation_sign(&[0, 1, 2], &[1, 0, 2]).unwrap(), -1);
        assert_eq!(permutation_sign(&[0, 1, 2], &[1, 2, 0]).unwrap(), 1);
        assert!(permutation_sign(&[0, 1], &[0, 0]).is_err());
    }

    /// A random cochain on ascending simplices, evaluated on any ordering.
    struct Cochain(HashMap<Vec<usize>, f64>);

    impl Cochain {
        fn eval(&mut self, ordered: &[usize], seed: &mut u64) -> f64 {
            let mut asc = ordered.to_vec();
            asc.sort_unstable();
            let base = *self.0.entry(asc.clone()).or_insert_with(|| {
                *seed = seed.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                ((*seed >> 33) as f64 / (1u64 << 31) as f64) - 0.5
            });
            // phi(ordered) = sgn(ordered, asc) phi(asc)
            permutation_sign(ordered, &asc).unwrap() as f64 * base
        }
    }

    fn shuffled(v: &[usize], keys: &[u32]) -> Vec<usize> {
        let mut pairs: Vec<(u32, usize)> = v.iter().enumerate().map(|(i, &x)| (keys[i % keys.len()].wrapping_add(i as u32 * 7919), x)).collect();
        pairs.sort();
        pairs.into_iter().map(|p| p.1).collect()
    }

    /// An ordering of a subset of `sigma` given by a mask, then shuffled.
    fn sub(sigma: &[usize], mask: u32, keys: &[u32]) -> Vec<usize> {
        let s: Vec<usize> = sigma.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &v)| v).collect();
        shuffled(&s, keys)
    }

    fn drop_one(s: &[usize], i: usize) -> Vec<usize> {
        let mut t = s.to_vec();
        t.remove(i % t.len());
        t
    }

    proptest! {
        #[test]
        fn part_one(len in 1usize..7, mask in any::<u32>(), k1 in prop::collection::vec(any::<u32>(), 7), k2 in prop::collection::vec(any::<u32>(), 7), k3 in prop::collection::vec(any::<u32>(), 7), drop in 0usize..7) {
            let sigma = shuffled(&(0..len).collect::<Vec<_>>(), &k1);
            let tau = sub(&sigma, mask, &k2);
            let tau_t = shuffled(&tau, &k3);
            prop_assert_eq!(sign(&sigma, &tau).unwrap(), sign(&sigma, &tau_t).unwrap() * sign(&tau_t, &tau).unwrap());
            // codimension one
            let tau = drop_one(&sigma, drop);
            let sigma_t = shuffled(&sigma, &k3);
            prop_assert_eq!(sign(&sigma, &tau).unwrap(), sign(&sigma, &sigma_t).unwrap() * sign(&sigma_t, &tau).unwrap());
        }

        #[test]
        fn parts_two_to_five(len in 2usize..7, k1 in prop::collection::vec(any::<u32>(), 7), k2 in prop::collection::vec(any::<u32>(), 7), k3 in prop::collection::vec(any::<u32>(), 7), a in 0usize..7, b in 0usize..7, seed in any::<u64>()) {
            let mut seed = seed;
            let mut phi = Cochain(HashMap::new());
            let sigma = shuffled(&(0..len).collect::<Vec<_>>(), &k1);
            let sigma_t = shuffled(&sigma, &k2);
            let tau = drop_one(&sigma, a);
            let eta = drop_one(&sigma, b);
            let tau_t = shuffled(&tau, &k3);
            let eta_t = shuffled(&eta, &k2);
            let close = |x: f64, y: f64| (x - y).abs() < 1e-12;
            // part 2
            let (p, q) = (phi.eval(&tau, &mut seed), phi.eval(&tau_t, &mut seed));
            prop_assert!(close(p * p, q * q));
            // part 3, first statement
            let lhs = sign(&sigma, &tau).unwrap() as f64 * phi.eval(&tau, &mut seed);
            let rhs = sign(&sigma, &tau_t).unwrap() as f64 * phi.eval(&tau_t, &mut seed);
            prop_assert!(close(lhs, rhs));
            // part 4
            let lhs = (sign(&sigma, &tau).unwrap() * sign(&sigma, &eta).unwrap()) as f64
                * phi.eval(&tau, &mut seed) * phi.eval(&eta, &mut seed);
            let rhs = (sign(&sigma_t, &tau_t).unwrap() * sign(&sigma_t, &eta_t).unwrap()) as f64
                * phi.eval(&tau_t, &mut seed) * phi.eval(&eta_t, &mut seed);
            prop_assert!(close(lhs, rhs));
            // parts 3 (second statement) and 5: theta of codimension one in tau and eta
            if a % len != b % len && len >= 2 {
                let (i, j) = (a % len, b % len);
                let theta: Vec<usize> = sigma.iter().enumerate().filter(|&(p, _)| p != i && p != j).map(|(_, &v)| v).collect();
                let theta_t = shuffled(&theta, &k1);
                let lhs = sign(&tau, &theta).unwrap() as f64 * phi.eval(&tau, &mut seed);
                let rhs = sign(&tau_t, &theta).unwrap() as f64 * phi.eval(&tau_t, &mut seed);
                prop_assert!(close(lhs, rhs));
                let lhs = (sign(&tau, &theta).unwrap() * sign(&eta, &theta).unwrap()) as f64
                    * phi.eval(&tau, &mut seed) * phi.eval(&eta, &mut seed);
                let rhs = (sign(&tau_t, &theta_t).unwrap() * sign(&eta_t, &theta_t).unwrap()) as f64
                    * phi.eval(&tau_t, &mut seed) * phi.eval(&eta_t, &mut seed);
                prop_assert!(close(lhs, rhs));
            }
        }
    }
}
