use super::gram::{gram_matrix_weighted, orthonormalize, GramBasis};
use super::project::{project, weighted_equivalence_check, ProjectionReport};
use crate::error::{Error, Result};
use crate::quadrature::{build_rule, choose_truncation_with_decay, QuadRule, Weight};
use crate::variety::{default_growth_radii, estimate_growth, ParamDomain, VarietyChart};

/// Rule adequate for the Gram matrix up to `degree` and for `e^{alpha r^2}`
/// targets: the tail budget uses the slowest decay among `m e^{-r^2}`,
/// `f m e^{-r^2}` and `f^2 e^{-r^2}`.
///
/// Compact charts (no unbounded direction) skip the growth fit.
pub fn study_rule(
    chart: &VarietyChart,
    degree: u32,
    alpha: f64,
    eps: f64,
    nodes_per_dim: &[usize],
) -> Result<QuadRule> {
    if !(alpha < 0.5) {
        return Err(Error::InvalidArgument(format!(
            "e^(alpha r^2) is not square integrable against e^(-r^2) for alpha = {alpha}"
        )));
    }
    let decay = (1.0 - 2.0 * alpha).min(1.0 - alpha).min(1.0);
    let compact = chart
        .domain()
        .iter()
        .all(|d| !matches!(d, ParamDomain::Unbounded));
    let radius = if compact {
        1.0
    } else {
        let growth = estimate_growth(chart, &default_growth_radii())?;
        choose_truncation_with_decay(Some(&growth), 2 * degree, eps, decay)?
    };
    build_rule(chart, radius, nodes_per_dim)
}

/// Orthonormal basis up to `degree` on the given rule.
pub fn basis_on(
    chart: &VarietyChart,
    degree: u32,
    rule: &QuadRule,
    weight: Weight,
    rank_tol: f64,
) -> Result<GramBasis> {
    orthonormalize(&gram_matrix_weighted(chart, degree, rule, weight)?, rank_tol)
}

/// Projection of `e^{alpha r^2}` for every degree cap in `degrees`, all on
/// one rule so that the bases are nested.
pub fn projection_sweep(
    chart: &VarietyChart,
    degrees: &[u32],
    alpha: f64,
    rule: &QuadRule,
    rank_tol: f64,
) -> Result<Vec<ProjectionReport>> {
    let target = format!("exp({alpha}*r^2)");
    degrees
        .iter()
        .map(|&d| {
            let gb = basis_on(chart, d, rule, Weight::Gauss, rank_tol)?;
            project(&gb, chart, &target, |n| (alpha * n.r2).exp(), rule)
        })
        .collect()
}

#[derive(Clone, Debug)]
pub struct EquivalenceRow {
    pub degree_cap: u32,
    pub lhs: f64,
    pub rhs: f64,
}

impl EquivalenceRow {
    pub fn rel_gap(&self) -> f64 {
        let scale = self.lhs.abs().max(self.rhs.abs());
        if scale == 0.0 {
            0.0
        } else {
            (self.lhs - self.rhs).abs() / scale
        }
    }
}

/// Both sides of the weighted identity for `f = e^{alpha r^2}` and `p` its
/// best approximation of each degree cap.
pub fn equivalence_sweep(
    chart: &VarietyChart,
    degrees: &[u32],
    alpha: f64,
    rule: &QuadRule,
    rank_tol: f64,
) -> Result<Vec<EquivalenceRow>> {
    degrees
        .iter()
        .map(|&d| {
            let gb = basis_on(chart, d, rule, Weight::Gauss, rank_tol)?;
            let rep = project(&gb, chart, "", |n| (alpha * n.r2).exp(), rule)?;
            let p = gb.combination(&rep.coefficients);
            let (lhs, rhs) =
                weighted_equivalence_check(chart, &p, |n| (alpha * n.r2).exp(), rule)?;
            Ok(EquivalenceRow { degree_cap: d, lhs, rhs })
        })
        .collect()
}

/// `D, D-2, ...` down to 1 or 2, ascending.
pub fn degree_sweep(degree: u32) -> Vec<u32> {
    let mut v: Vec<u32> = (1..=degree).rev().step_by(2).collect();
    v.reverse();
    v
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::orthobasis::DEFAULT_RANK_TOL;
    use crate::polyring::{parse_real_poly, RealPoly};
    use crate::quadrature::default_nodes;
    use crate::variety::{chart_euclidean, chart_graph, chart_revolution};

    #[test]
    fn sweep_degrees() {
        assert_eq!(degree_sweep(8), vec![2, 4, 6, 8]);
        assert_eq!(degree_sweep(5), vec![1, 3, 5]);
        assert_eq!(degree_sweep(1), vec![1]);
    }

    #[test]
    fn cylinder_density_witness() {
        let f = parse_real_poly("1", 1).unwrap();
        let h = parse_real_poly("x", 1).unwrap();
        let chart = chart_revolution(&f, &h, ParamDomain::Unbounded).unwrap();
        let rule = study_rule(&chart, 8, 0.25, 1e-12, &default_nodes(&chart)).unwrap();
        let reps = projection_sweep(&chart, &[2, 4, 6, 8], 0.25, &rule, DEFAULT_RANK_TOL).unwrap();
        let rel: Vec<f64> = reps.iter().map(ProjectionReport::rel_residual).collect();
        assert!(rel.windows(2).all(|w| w[1] < w[0]), "{rel:?}");
        assert!(rel[3] < 0.1, "{rel:?}");
        // Bessel
        for r in &reps {
            let s: f64 = r.coefficients.iter().map(|c| c * c).sum();
            assert!(s <= r.f_norm * r.f_norm * (1.0 + 1e-10));
        }
    }

    #[test]
    fn parabola_density_witness() {
        let chart = chart_graph(&[parse_real_poly("x^2", 1).unwrap()]).unwrap();
        let rule = study_rule(&chart, 8, 0.25, 1e-12, &default_nodes(&chart)).unwrap();
        let reps = projection_sweep(&chart, &[2, 4, 6, 8], 0.25, &rule, DEFAULT_RANK_TOL).unwrap();
        let rel: Vec<f64> = reps.iter().map(ProjectionReport::rel_residual).collect();
        assert!(rel.windows(2).all(|w| w[1] < w[0]), "{rel:?}");
    }

    #[test]
    fn projection_of_basis_polynomial_is_exact() {
        let chart = chart_euclidean(1);
        let rule = study_rule(&chart, 4, 0.0, 1e-14, &default_nodes(&chart)).unwrap();
        let gb = basis_on(&chart, 4, &rule, Weight::Gauss, DEFAULT_RANK_TOL).unwrap();
        let p = parse_real_poly("3*x^3 - x + 2", 1).unwrap();
        let rep = project(&gb, &chart, "p", |n| p.eval_real(n.x).unwrap(), &rule).unwrap();
        assert!(rep.rel_residual() < 1e-6);
        let back = gb.combination(&rep.coefficients);
        let diff = back.try_sub(&p).unwrap();
        assert!(diff.terms().all(|(_, c)| c.abs() < 1e-9), "{diff}");
    }

    #[test]
    fn equivalence_analytic_case() {
        let chart = chart_euclidean(1);
        let rule = study_rule(&chart, 4, 0.0, 1e-14, &default_nodes(&chart)).unwrap();
        let zero = RealPoly::zero(1);
        let (lhs, rhs) =
            weighted_equivalence_check(&chart, &zero, |n| n.x[0] * n.x[0], &rule).unwrap();
        let want = 0.75 * std::f64::consts::PI.sqrt();
        assert!((lhs - want).abs() < 1e-10 * want);
        assert!((rhs - want).abs() < 1e-10 * want);
    }

    #[test]
    fn equivalence_sweep_agrees() {
        let chart = chart_euclidean(1);
        let rule = study_rule(&chart, 6, 0.25, 1e-14, &default_nodes(&chart)).unwrap();
        let rows = equivalence_sweep(&chart, &[2, 4, 6], 0.25, &rule, DEFAULT_RANK_TOL).unwrap();
        for r in rows {
            assert!(r.rel_gap() < 1e-8, "{r:?}");
        }
    }

    #[test]
    fn alpha_at_half_rejected() {
        let chart = chart_euclidean(1);
        assert!(study_rule(&chart, 2, 0.5, 1e-12, &default_nodes(&chart)).is_err());
    }
}
