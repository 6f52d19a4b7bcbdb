//! Exact rational linear programming: two-phase tableau simplex with Bland's rule.
//!
//! Problems are posed as `min c.x  s.t.  A x >= b, x >= 0`. An optimal answer
//! carries a dual vector `y >= 0` with `y A <= c` and `b.y = c.x`; both are
//! verified exactly before the solution is returned.

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LpProblem {
    pub c: Vec<BigRational>,
    pub a: Vec<Vec<BigRational>>,
    pub b: Vec<BigRational>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LpStatus {
    Optimal,
    Infeasible,
    Unbounded,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LpSolution {
    pub status: LpStatus,
    /// Optimal objective value, when `status` is optimal.
    pub value: Option<BigRational>,
    pub primal: Vec<BigRational>,
    pub dual: Vec<BigRational>,
    pub pivots: usize,
}

impl LpProblem {
    pub fn new(c: Vec<BigRational>, a: Vec<Vec<BigRational>>, b: Vec<BigRational>) -> Result<LpProblem> {
        if a.len() != b.len() {
            return Err(Error::InvalidInput(format!(
                "{} constraint rows but {} bounds",
                a.len(),
                b.len()
            )));
        }
        if let Some(i) = a.iter().position(|r| r.len() != c.len()) {
            return Err(Error::InvalidInput(format!(
                "constraint row {i} has {} entries, expected {}",
                a[i].len(),
                c.len()
            )));
        }
        Ok(LpProblem { c, a, b })
    }

    pub fn num_vars(&self) -> usize {
        self.c.len()
    }

    pub fn num_constraints(&self) -> usize {
        self.b.len()
    }

    pub fn objective(&self, x: &[BigRational]) -> BigRational {
        dot(&self.c, x)
    }

    pub fn is_primal_feasible(&self, x: &[BigRational]) -> bool {
        x.len() == self.num_vars()
            && x.iter().all(|v| !v.is_negative())
            && self.a.iter().zip(&self.b).all(|(row, bi)| dot(row, x) >= *bi)
    }

    pub fn is_dual_feasible(&self, y: &[BigRational]) -> bool {
        y.len() == self.num_constraints()
            && y.iter().all(|v| !v.is_negative())
            && (0..self.num_vars()).all(|j| {
                let s = self
                    .a
                    .iter()
                    .zip(y)
                    .fold(BigRational::zero(), |acc, (row, yi)| acc + &row[j] * yi);
                s <= self.c[j]
            })
    }
}

fn dot(a: &[BigRational], b: &[BigRational]) -> BigRational {
    a.iter().zip(b).fold(BigRational::zero(), |acc, (x, y)| acc + x * y)
}

struct Tableau {
    rows: Vec<Vec<BigRational>>,
    rhs: Vec<BigRational>,
    /// reduced costs; `obj_rhs` is minus the current objective value
    obj: Vec<BigRational>,
    obj_rhs: BigRational,
    basis: Vec<usize>,
    allowed: Vec<bool>,
    pivots: usize,
}

enum Step {
    Optimal,
    Unbounded,
}

impl Tableau {
    fn pivot(&mut self, r: usize, col: usize) {
        let inv = BigRational::one() / &self.rows[r][col];
        for x in self.rows[r].iter_mut() {
            if !x.is_zero() {
                *x *= &inv;
            }
        }
        self.rhs[r] *= &inv;
        let nz: Vec<usize> = (0..self.rows[r].len())
            .filter(|&j| !self.rows[r][j].is_zero())
            .collect();
        let prow = self.rows[r].clone();
        let prhs = self.rhs[r].clone();
        for i in 0..self.rows.len() {
            if i == r || self.rows[i][col].is_zero() {
                continue;
            }
            let f = self.rows[i][col].clone();
            for &j in &nz {
                let d = &f * &prow[j];
                self.rows[i][j] -= d;
            }
            self.rhs[i] -= &f * &prhs;
        }
        if !self.obj[col].is_zero() {
            let f = self.obj[col].clone();
            for &j in &nz {
                let d = &f * &prow[j];
                self.obj[j] -= d;
            }
            self.obj_rhs -= &f * &prhs;
        }
        self.basis[r] = col;
        self.pivots += 1;
    }

    /// Runs Bland's rule to optimality or unboundedness.
    fn run(&mut self) -> Step {
        loop {
            let Some(col) = (0..self.obj.len()).find(|&j| self.allowed[j] && self.obj[j].is_negative()) else {
                return Step::Optimal;
            };
            let mut best: Option<(usize, BigRational)> = None;
            for i in 0..self.rows.len() {
                let a = &self.rows[i][col];
                if !a.is_positive() {
                    continue;
                }
                let ratio = &self.rhs[i] / a;
                best = match best {
                    None => Some((i, ratio)),
                    Some((bi, br)) => {
                        if ratio < br || (ratio == br && self.basis[i] < self.basis[bi]) {
                            Some((i, ratio))
                        } else {
                            Some((bi, br))
                        }
                    }
                };
            }
            match best {
                None => return Step::Unbounded,
                Some((r, _)) => self.pivot(r, col),
            }
        }
    }

    fn set_objective(&mut self, cost: &[BigRational]) {
        self.obj = cost.to_vec();
        self.obj_rhs = BigRational::zero();
        for i in 0..self.rows.len() {
            let cb = cost[self.basis[i]].clone();
            if cb.is_zero() {
                continue;
            }
            for j in 0..self.obj.len() {
                if !self.rows[i][j].is_zero() {
                    let d = &cb * &self.rows[i][j];
                    self.obj[j] -= d;
                }
            }
            self.obj_rhs -= &cb * &self.rhs[i];
        }
    }
}

/// Solves `min c.x s.t. A x >= b, x >= 0` exactly.
pub fn lp_solve(p: &LpProblem) -> Result<LpSolution> {
    let nv = p.num_vars();
    let m = p.num_constraints();
    // columns: x (nv) | surplus/slack (m) | artificials
    let needs_art: Vec<bool> = p.b.iter().map(|b| b.is_positive()).collect();
    let n_art = needs_art.iter().filter(|&&x| x).count();
    let ncols = nv + m + n_art;
    let mut rows = Vec::with_capacity(m);
    let mut rhs = Vec::with_capacity(m);
    let mut basis = Vec::with_capacity(m);
    let mut next_art = nv + m;
    for i in 0..m {
        let mut row = vec![BigRational::zero(); ncols];
        if needs_art[i] {
            // A_i x - s_i + art_i = b_i
            row[..nv].clone_from_slice(&p.a[i]);
            row[nv + i] = -BigRational::one();
            row[next_art] = BigRational::one();
            basis.push(next_art);
            next_art += 1;
            rhs.push(p.b[i].clone());
        } else {
            // -A_i x + s_i = -b_i >= 0
            for j in 0..nv {
                row[j] = -&p.a[i][j];
            }
            row[nv + i] = BigRational::one();
            basis.push(nv + i);
            rhs.push(-&p.b[i]);
        }
        rows.push(row);
    }
    let mut t = Tableau {
        rows,
        rhs,
        obj: Vec::new(),
        obj_rhs: BigRational::zero(),
        basis,
        allowed: vec![true; ncols],
        pivots: 0,
    };

    if n_art > 0 {
        let mut phase1 = vec![BigRational::zero(); ncols];
        for c in phase1.iter_mut().skip(nv + m) {
            *c = BigRational::one();
        }
        t.set_objective(&phase1);
        if let Step::Unbounded = t.run() {
            return Err(Error::Numeric("phase one reported unbounded".into()));
        }
        if !t.obj_rhs.is_zero() {
            return Ok(LpSolution {
                status: LpStatus::Infeasible,
                value: None,
                primal: Vec::new(),
                dual: Vec::new(),
                pivots: t.pivots,
            });
        }
        // drive artificials out of the basis
        for r in 0..m {
            if t.basis[r] >= nv + m {
                let col = (0..nv + m)
                    .find(|&j| !t.rows[r][j].is_zero())
                    .ok_or_else(|| Error::Numeric("redundant constraint row in phase one".into()))?;
                t.pivot(r, col);
            }
        }
        for a in t.allowed.iter_mut().skip(nv + m) {
            *a = false;
        }
    }

    let mut cost = vec![BigRational::zero(); ncols];
    cost[..nv].clone_from_slice(&p.c);
    t.set_objective(&cost);
    if let Step::Unbounded = t.run() {
        return Ok(LpSolution {
            status: LpStatus::Unbounded,
            value: None,
            primal: Vec::new(),
            dual: Vec::new(),
            pivots: t.pivots,
        });
    }

    let mut x = vec![BigRational::zero(); nv];
    for (r, &b) in t.basis.iter().enumerate() {
        if b < nv {
            x[b] = t.rhs[r].clone();
        }
    }
    // the reduced cost of the surplus column of row i is the dual multiplier of row i
    let y: Vec<BigRational> = (0..m).map(|i| t.obj[nv + i].clone()).collect();
    let value = p.objective(&x);
    if !p.is_primal_feasible(&x) || !p.is_dual_feasible(&y) || dot(&p.b, &y) != value {
        return Err(Error::Numeric("simplex certificate failed exact verification".into()));
    }
    Ok(LpSolution {
        status: LpStatus::Optimal,
        value: Some(value),
        primal: x,
        dual: y,
        pivots: t.pivots,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(p: i64, d: i64) -> BigRational {
        BigRational::new(p.into(), d.into())
    }

    fn ints(v: &[i64]) -> Vec<BigRational> {
        v.iter().map(|&x| q(x, 1)).collect()
    }

    #[test]
    fn single_variable() {
        let p = LpProblem::new(ints(&[1]), vec![ints(&[1])], ints(&[1])).unwrap();
        let s = lp_solve(&p).unwrap();
        assert_eq!(s.status, LpStatus::Optimal);
        assert_eq!(s.value, Some(q(1, 1)));
        assert_eq!(s.dual, ints(&[1]));
    }

    #[test]
    fn two_point_cover() {
        // min a_u + a_v  s.t. a_u + a_v >= 1 twice
        let p = LpProblem::new(ints(&[1, 1]), vec![ints(&[1, 1]), ints(&[1, 1])], ints(&[1, 1])).unwrap();
        let s = lp_solve(&p).unwrap();
        assert_eq!(s.value, Some(q(1, 1)));
        assert_eq!(dot(&p.b, &s.dual), q(1, 1));
    }

    #[test]
    fn beale_cycling_instance_terminates() {
        // min -3/4 x4 + 20 x5 - 1/2 x6 + 6 x7 with the classic degenerate constraints (as >=)
        let c = vec![q(-3, 4), q(20, 1), q(-1, 2), q(6, 1)];
        let a = vec![
            vec![q(-1, 4), q(8, 1), q(1, 1), q(-9, 1)],
            vec![q(-1, 2), q(12, 1), q(1, 2), q(-3, 1)],
            vec![q(0, 1), q(0, 1), q(-1, 1), q(0, 1)],
        ];
        let b = vec![q(0, 1), q(0, 1), q(-1, 1)];
        let p = LpProblem::new(c, a, b).unwrap();
        let s = lp_solve(&p).unwrap();
        assert_eq!(s.status, LpStatus::Optimal);
        assert_eq!(s.value, Some(q(-5, 4)));
    }

    #[test]
    fn infeasible_and_unbounded() {
        // x >= 2 and -x >= -1
        let p = LpProblem::new(ints(&[1]), vec![ints(&[1]), ints(&[-1])], ints(&[2, -1])).unwrap();
        assert_eq!(lp_solve(&p).unwrap().status, LpStatus::Infeasible);
        // min -x, x >= 0
        let p = LpProblem::new(ints(&[-1]), vec![ints(&[1])], ints(&[0])).unwrap();
        assert_eq!(lp_solve(&p).unwrap().status, LpStatus::Unbounded);
    }

    #[test]
    fn shape_errors() {
        assert!(LpProblem::new(ints(&[1, 1]), vec![ints(&[1])], ints(&[1])).is_err());
        assert!(LpProblem::new(ints(&[1]), vec![ints(&[1])], ints(&[])).is_err());
    }

    #[test]
    fn empty_problem() {
        let p = LpProblem::new(ints(&[1, 2]), vec![], vec![]).unwrap();
        let s = lp_solve(&p).unwrap();
        assert_eq!(s.value, Some(q(0, 1)));
    }
}
