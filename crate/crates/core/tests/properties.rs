use std::sync::OnceLock;

use gauss_variety::orthobasis::{
    basis_on, gram_matrix, orthonormalize, project, study_rule, GramBasis, DEFAULT_RANK_TOL,
};
use gauss_variety::polyring::{parse_complex_poly, parse_real_poly};
use gauss_variety::quadrature::{build_rule, default_nodes, uniform_nodes, QuadRule, Weight};
use gauss_variety::variety::{
    chart_circle, chart_euclidean, chart_graph, chart_modulus_graph, chart_revolution,
    ParamDomain, VarietyChart,
};
use proptest::prelude::*;

fn shipped() -> Vec<VarietyChart> {
    let u = parse_real_poly("u", 1).unwrap();
    vec![
        chart_euclidean(1),
        chart_euclidean(2),
        chart_revolution(&parse_real_poly("1", 1).unwrap(), &u, ParamDomain::Unbounded).unwrap(),
        chart_revolution(&parse_real_poly("1 + u^2", 1).unwrap(), &u, ParamDomain::Unbounded).unwrap(),
        chart_graph(&[parse_real_poly("x^2", 1).unwrap()]).unwrap(),
        chart_modulus_graph(&parse_complex_poly("z^2", 1).unwrap()).unwrap(),
        chart_circle(),
    ]
}

#[test]
fn gram_symmetric_psd_and_orthonormal_on_finer_rule() {
    for chart in shipped() {
        let rule = study_rule(&chart, 4, 0.0, 1e-13, &default_nodes(&chart)).unwrap();
        let gb = orthonormalize(&gram_matrix(&chart, 4, &rule).unwrap(), DEFAULT_RANK_TOL).unwrap();
        assert!(gb.symmetry_defect() < 1e-12, "{}", chart.id());
        assert!(gb.min_eigen_ratio() > -1e-12, "{}", chart.id());
        let finer = build_rule(
            &chart,
            rule.truncation_radius() + 1.0,
            &uniform_nodes(&chart, 2 * default_nodes(&chart)[0]),
        )
        .unwrap();
        let g_fine = gram_matrix(&chart, 4, &finer).unwrap();
        let defect = gb.orthonormality_defect(&g_fine.gram);
        assert!(defect <= 1e-7, "{}: {defect}", chart.id());
    }
}

#[test]
fn kept_set_stable_across_rank_tol() {
    for chart in shipped() {
        let rule = study_rule(&chart, 3, 0.0, 1e-13, &default_nodes(&chart)).unwrap();
        let g = gram_matrix(&chart, 3, &rule).unwrap();
        let kept: Vec<Vec<usize>> = [1e-10, 1e-9, 1e-8]
            .iter()
            .map(|&t| orthonormalize(&g, t).unwrap().kept_indices)
            .collect();
        assert!(kept.windows(2).all(|w| w[0] == w[1]), "{}", chart.id());
    }
}

struct Fixture {
    chart: VarietyChart,
    rule: QuadRule,
    bases: Vec<GramBasis>,
}

fn parabola_fixture() -> &'static Fixture {
    static F: OnceLock<Fixture> = OnceLock::new();
    F.get_or_init(|| {
        let chart = chart_graph(&[parse_real_poly("x^2", 1).unwrap()]).unwrap();
        let rule = study_rule(&chart, 6, 0.3, 1e-12, &default_nodes(&chart)).unwrap();
        let bases = [2, 4, 6]
            .iter()
            .map(|&d| basis_on(&chart, d, &rule, Weight::Gauss, DEFAULT_RANK_TOL).unwrap())
            .collect();
        Fixture { chart, rule, bases }
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn bessel_and_nested_monotonicity(
        a in -0.5f64..0.3,
        b in -3.0f64..3.0,
        c in -2.0f64..2.0,
        j in 0i32..5,
    ) {
        let fx = parabola_fixture();
        let f = |n: gauss_variety::quadrature::NodeView<'_>| {
            (a * n.r2).exp() * (b * n.x[0]).cos() + c * n.x[1].powi(j)
        };
        let mut prev = f64::INFINITY;
        for gb in &fx.bases {
            let rep = project(gb, &fx.chart, "f", f, &fx.rule).unwrap();
            let captured: f64 = rep.coefficients.iter().map(|c| c * c).sum();
            let f2 = rep.f_norm * rep.f_norm;
            prop_assert!(captured <= f2 + 1e-9 * f2.max(1.0));
            prop_assert!(rep.residual_norm <= prev + 1e-9);
            prev = rep.residual_norm;
        }
    }

    #[test]
    fn polynomial_targets_are_reproduced(coeffs in proptest::collection::vec(-3.0f64..3.0, 5)) {
        let fx = parabola_fixture();
        let gb = &fx.bases[1];
        let f = |n: gauss_variety::quadrature::NodeView<'_>| {
            let (x, y) = (n.x[0], n.x[1]);
            coeffs[0] + coeffs[1] * x + coeffs[2] * y + coeffs[3] * x * y + coeffs[4] * y * y
        };
        let rep = project(gb, &fx.chart, "p", f, &fx.rule).unwrap();
        prop_assert!(rep.rel_residual() < 1e-5, "{}", rep.rel_residual());
    }
}

#[test]
fn equivalence_special_cases() {
    use gauss_variety::orthobasis::weighted_equivalence_check;
    let line = chart_euclidean(1);
    let rule = study_rule(&line, 4, 0.0, 1e-14, &default_nodes(&line)).unwrap();
    let p = parse_real_poly("x^3 - 2*x", 1).unwrap();
    let (l, r) = weighted_equivalence_check(&line, &p, |n| n.x[0].powi(3) - 2.0 * n.x[0], &rule).unwrap();
    assert!(l.abs() < 1e-12 && r.abs() < 1e-12);

    let cyl = &shipped()[2];
    let rule = study_rule(cyl, 2, 0.25, 1e-12, &default_nodes(cyl)).unwrap();
    let one = parse_real_poly("1", 3).unwrap();
    let (l, r) = weighted_equivalence_check(cyl, &one, |n| (0.25 * n.r2).exp(), &rule).unwrap();
    assert!((l - r).abs() <= 1e-8 * r);
}
