use super::integrate::{radial_power, Weight, WeightedNodes};
use super::rule::build_rule;
use super::tail::{choose_truncation, tail_budget};
use crate::csvout::{CsvTable, Field};
use crate::error::{Error, Result};
use crate::variety::{GrowthEstimate, VarietyChart};

#[derive(Clone, Debug, PartialEq)]
pub struct MomentEntry {
    pub m: u32,
    pub value: f64,
    pub tail_bound: f64,
}

/// Gaussian moments `I_0..I_{m_max}` of one chart, with their tail budgets.
#[derive(Clone, Debug, PartialEq)]
pub struct MomentTable {
    pub chart_id: String,
    pub radius: f64,
    pub nodes: usize,
    pub entries: Vec<MomentEntry>,
}

impl MomentTable {
    pub fn get(&self, m: u32) -> Option<f64> {
        self.entries.iter().find(|e| e.m == m).map(|e| e.value)
    }

    /// CSV with header `m,I_m,tail_bound,R,nodes`.
    pub fn to_csv(&self) -> CsvTable {
        let mut t = CsvTable::new(&["m", "I_m", "tail_bound", "R", "nodes"]);
        for e in &self.entries {
            t.row(&[
                Field::I(e.m as i64),
                Field::F(e.value),
                Field::F(e.tail_bound),
                Field::F(self.radius),
                Field::I(self.nodes as i64),
            ]);
        }
        t
    }
}

/// Picks the truncation radius from the growth estimate, builds the rule and
/// evaluates every moment up to `m_max`.
pub fn moment_table(
    chart: &VarietyChart,
    m_max: u32,
    growth: Option<&GrowthEstimate>,
    eps: f64,
    nodes_per_dim: &[usize],
) -> Result<MomentTable> {
    let radius = choose_truncation(growth, m_max, eps)?;
    let growth = growth.ok_or(Error::MissingGrowth)?;
    let rule = build_rule(chart, radius, nodes_per_dim)?;
    let nodes = WeightedNodes::new(chart, &rule, Weight::Gauss)?;
    let mut entries = Vec::with_capacity(m_max as usize + 1);
    for m in 0..=m_max {
        let value = nodes.sum(|n| radial_power(n.r2, m))?;
        if !value.is_finite() || value <= 0.0 {
            return Err(Error::InvalidArgument(format!(
                "moment I_{m} = {value} on {} is not a positive number",
                chart.id()
            )));
        }
        entries.push(MomentEntry {
            m,
            value,
            tail_bound: tail_budget(growth.c, growth.l, m, radius).bound,
        });
    }
    Ok(MomentTable {
        chart_id: chart.id().to_string(),
        radius,
        nodes: rule.n_nodes(),
        entries,
    })
}
