//! Integration against `e^{-r^2} dμ` over a chart, truncation radii from the
//! shell tail bound, and Gaussian moments `I_m`.

mod gauss;
mod integrability;
mod integrate;
mod levelset;
mod moments;
mod rule;
mod sum;
mod tail;

pub use gauss::{gauss_legendre, gauss_legendre_on, periodic_trapezoid};
pub use integrability::{
    integrability_study, IntegrabilityStudy, Verdict, CONVERGED_REL_CHANGE, DIVERGENCE_FACTOR,
};
pub use integrate::{
    gaussian_moment, integrate, integrate_complex, integrate_weighted, NodeView, Weight,
    WeightedNodes,
};
pub use levelset::integrate_shell;
pub use moments::{moment_table, MomentEntry, MomentTable};
pub use rule::{
    build_rule, default_nodes, uniform_nodes, unbounded_extent, DimKind, QuadRule, Rule1D,
    DEFAULT_BOUNDED_NODES, DEFAULT_PERIODIC_NODES, DEFAULT_UNBOUNDED_NODES,
};
pub use sum::CompensatedSum;
pub use tail::{
    choose_truncation, choose_truncation_with_decay, tail_budget, tail_budget_with_decay,
    TailBudget,
};
