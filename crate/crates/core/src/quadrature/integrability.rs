//! Whether `e^{alpha r^2}` lies in `L^2(M, e^{-r^2} dμ)`, judged from the
//! truncated integrals `∫_{M ∩ B_R} e^{(2 alpha - 1) r^2} dμ` as `R` grows.

use super::integrate::{Weight, WeightedNodes};
use super::rule::build_rule;
use crate::error::{Error, Result};
use crate::variety::VarietyChart;

/// Final-step relative change below which the sequence counts as converged.
pub const CONVERGED_REL_CHANGE: f64 = 1e-6;
/// Growth factor across three successive radii that counts as divergence.
pub const DIVERGENCE_FACTOR: f64 = 10.0;

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Verdict {
    Converged { rel_change: f64 },
    Divergent { growth_factor: f64 },
    Undecided,
}

#[derive(Clone, Debug)]
pub struct IntegrabilityStudy {
    pub alpha: f64,
    pub radii: Vec<f64>,
    pub values: Vec<f64>,
    pub verdict: Verdict,
}

pub fn integrability_study(
    chart: &VarietyChart,
    alpha: f64,
    radii: &[f64],
    nodes_per_dim: &[usize],
) -> Result<IntegrabilityStudy> {
    if radii.len() < 4 || radii.windows(2).any(|w| w[1] <= w[0]) {
        return Err(Error::InvalidArgument(
            "need at least 4 increasing radii".into(),
        ));
    }
    let exponent = 2.0 * alpha - 1.0;
    let mut values = Vec::with_capacity(radii.len());
    for &r in radii {
        let rule = build_rule(chart, r, nodes_per_dim)?;
        let nodes = WeightedNodes::new(chart, &rule, Weight::None)?;
        values.push(nodes.sum(|n| (exponent * n.r2).exp())?);
    }
    let n = values.len();
    let rel_change = ((values[n - 1] - values[n - 2]) / values[n - 1]).abs();
    let growth_factor = values[n - 1] / values[n - 4];
    let verdict = if rel_change < CONVERGED_REL_CHANGE {
        Verdict::Converged { rel_change }
    } else if growth_factor > DIVERGENCE_FACTOR {
        Verdict::Divergent { growth_factor }
    } else {
        Verdict::Undecided
    };
    Ok(IntegrabilityStudy {
        alpha,
        radii: radii.to_vec(),
        values,
        verdict,
    })
}
