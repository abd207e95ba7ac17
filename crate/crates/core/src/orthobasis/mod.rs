//! Orthonormal bases of the restricted polynomials in `L^2(M, e^{-r^2} dμ)`
//! and best approximation in them.
//!
//! The Gram matrix of the restricted monomials (graded lex order, degree at
//! most `D`) is reduced by a threshold Cholesky elimination in the same order.
//! A monomial whose residual against the kept predecessors is negligible
//! relative to its own norm is a relation on `M` and is dropped.

mod classic;
mod gram;
mod project;
mod sweep;

pub use classic::{classic_recovery, classical_family, ClassicKind, RecoveryReport};
pub use gram::{gram_matrix, gram_matrix_weighted, orthonormalize, GramBasis, DEFAULT_RANK_TOL};
pub use project::{project, projection_csv, weighted_equivalence_check, ProjectionReport};
pub use sweep::{
    basis_on, degree_sweep, equivalence_sweep, projection_sweep, study_rule, EquivalenceRow,
};
