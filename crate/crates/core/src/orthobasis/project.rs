use super::gram::{monomial_values, GramBasis};
use crate::csvout::{CsvTable, Field};
use crate::error::{Error, Result};
use crate::polyring::{Monomial, RealPoly};
use crate::quadrature::{CompensatedSum, NodeView, QuadRule, Weight, WeightedNodes};
use crate::variety::VarietyChart;

#[derive(Clone, Debug)]
pub struct ProjectionReport {
    pub target: String,
    pub degree_cap: u32,
    /// Coefficients against the orthonormal basis elements.
    pub coefficients: Vec<f64>,
    /// `‖f - P_D f‖`, from `‖f‖^2 - Σ c_r^2`.
    pub residual_norm: f64,
    pub f_norm: f64,
}

impl ProjectionReport {
    pub fn rel_residual(&self) -> f64 {
        if self.f_norm == 0.0 {
            0.0
        } else {
            self.residual_norm / self.f_norm
        }
    }
}

/// Orthogonal projection of `f` onto the span of `gb`, using the Gram
/// matrix's weight. `f` receives each node's parameters, embedded point and
/// `r^2`.
pub fn project(
    gb: &GramBasis,
    chart: &VarietyChart,
    target: &str,
    f: impl Fn(NodeView<'_>) -> f64,
    rule: &QuadRule,
) -> Result<ProjectionReport> {
    if gb.chart_id != chart.id() {
        return Err(Error::InvalidArgument(format!(
            "basis was built on {} but projection asked on {}",
            gb.chart_id,
            chart.id()
        )));
    }
    let nodes = WeightedNodes::new(chart, rule, gb.weight)?;
    let fvals: Vec<f64> = (0..nodes.len()).map(|k| f(nodes.node(k))).collect();
    if let Some(k) = fvals.iter().position(|v| !v.is_finite()) {
        return Err(Error::NonFinite {
            node: nodes.params()[k].clone(),
            value: fvals[k],
        });
    }
    let kept: Vec<Monomial> = gb.kept_monomials().cloned().collect();
    let values = monomial_values(&kept, &nodes);
    let moments: Vec<f64> = values
        .iter()
        .map(|row| {
            let mut acc = CompensatedSum::default();
            for ((m, fv), w) in row.iter().zip(&fvals).zip(nodes.weights()) {
                acc.add(w * fv * m);
            }
            acc.value()
        })
        .collect();
    let mut f2 = CompensatedSum::default();
    for (fv, w) in fvals.iter().zip(nodes.weights()) {
        f2.add(w * fv * fv);
    }
    let f2 = f2.value();
    let coefficients: Vec<f64> = (0..gb.rank)
        .map(|r| {
            let mut acc = CompensatedSum::default();
            for (c, mom) in moments.iter().enumerate() {
                acc.add(gb.ortho_coeffs[(r, c)] * mom);
            }
            acc.value()
        })
        .collect();
    let mut captured = CompensatedSum::default();
    for c in &coefficients {
        captured.add(c * c);
    }
    Ok(ProjectionReport {
        target: target.to_string(),
        degree_cap: gb.degree_cap,
        coefficients,
        residual_norm: (f2 - captured.value()).max(0.0).sqrt(),
        f_norm: f2.sqrt(),
    })
}

/// CSV `D,residual_norm,f_norm,rel_residual`.
pub fn projection_csv(reports: &[ProjectionReport]) -> CsvTable {
    let mut t = CsvTable::new(&["D", "residual_norm", "f_norm", "rel_residual"]);
    for r in reports {
        t.row(&[
            Field::I(r.degree_cap as i64),
            Field::F(r.residual_norm),
            Field::F(r.f_norm),
            Field::F(r.rel_residual()),
        ]);
    }
    t
}

/// Both sides of
/// `∫ |(f - p) e^{-r^2/4}|^2 e^{-r^2/2} dμ = ∫ |f - p|^2 e^{-r^2} dμ`,
/// each from its own pass over the rule (the left with the half weight and
/// the explicit factor, the right with the full weight).
pub fn weighted_equivalence_check(
    chart: &VarietyChart,
    p: &RealPoly,
    f: impl Fn(NodeView<'_>) -> f64,
    rule: &QuadRule,
) -> Result<(f64, f64)> {
    if p.ambient_dim() != chart.ambient_dim() {
        return Err(Error::DimensionMismatch {
            expected: chart.ambient_dim(),
            got: p.ambient_dim(),
        });
    }
    let half = WeightedNodes::new(chart, rule, Weight::HalfGauss)?;
    let lhs = half.sum(|n| {
        let d = (f(n) - p.eval_real_unchecked(n.x)) * (-n.r2 / 4.0).exp();
        d * d
    })?;
    let full = WeightedNodes::new(chart, rule, Weight::Gauss)?;
    let rhs = full.sum(|n| {
        let d = f(n) - p.eval_real_unchecked(n.x);
        d * d
    })?;
    Ok((lhs, rhs))
}
