//! Numeric kernels: dense symmetric eigenvalues, exact rational linear algebra
//! and exact linear programming.

pub mod eigen;
pub mod exact;
pub mod lp;

pub use eigen::{eigenvalues_sym, jacobi, Eigen, SymMatrix};
pub use exact::{format_rational, parse_rational, rank_exact, rational_to_f64, IntMatrix, RationalMatrix};
pub use lp::{lp_solve, LpProblem, LpSolution, LpStatus};
