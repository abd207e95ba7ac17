//! Parametrized charts `U -> R^n` of the varieties the library integrates
//! over, each with its volume density `sqrt(det(J^T J))` and radial function
//! `r^2 = |x|^2`.

mod chart;
mod growth;
mod specfile;

pub use chart::{
    chart_circle, chart_euclidean, chart_euclidean_box, chart_graph, chart_modulus_graph,
    chart_revolution, ChartKind, ParamDomain, Restricted, VarietyChart,
};
pub use growth::{ball_volume, default_growth_radii, estimate_growth, GrowthEstimate, GrowthSample};
pub use specfile::{load_variety_spec, U1Domain, VarietySpec};
