use std::f64::consts::{E, PI};

use gauss_variety::polyring::{parse_complex_poly, parse_real_poly};
use gauss_variety::quadrature::{
    build_rule, choose_truncation, default_nodes, integrability_study, integrate,
    integrate_shell, moment_table, uniform_nodes, Verdict, Weight, WeightedNodes,
};
use gauss_variety::variety::{
    chart_circle, chart_euclidean, chart_graph, chart_modulus_graph, chart_revolution,
    default_growth_radii, estimate_growth, ParamDomain, VarietyChart,
};
use statrs::function::gamma::gamma;

fn cylinder() -> VarietyChart {
    chart_revolution(
        &parse_real_poly("1", 1).unwrap(),
        &parse_real_poly("u", 1).unwrap(),
        ParamDomain::Unbounded,
    )
    .unwrap()
}

fn shipped() -> Vec<VarietyChart> {
    vec![
        chart_euclidean(1),
        chart_euclidean(2),
        cylinder(),
        chart_revolution(
            &parse_real_poly("1 + u^2", 1).unwrap(),
            &parse_real_poly("u", 1).unwrap(),
            ParamDomain::Unbounded,
        )
        .unwrap(),
        chart_graph(&[parse_real_poly("x^2", 1).unwrap()]).unwrap(),
        chart_modulus_graph(&parse_complex_poly("z^2", 1).unwrap()).unwrap(),
        chart_circle(),
    ]
}

type Integrand = Box<dyn Fn(&[f64]) -> f64>;

fn radial(r2: f64, m: u32) -> f64 {
    r2.sqrt().powi(m as i32)
}

#[test]
fn gaussian_on_the_line_is_sqrt_pi() {
    let line = chart_euclidean(1);
    let rule = build_rule(&line, 7.0, &default_nodes(&line)).unwrap();
    let v = integrate(&line, |_| 1.0, &rule).unwrap();
    assert!((v - PI.sqrt()).abs() < 1e-14);
}

#[test]
fn line_and_plane_moments_match_gamma() {
    for (n, exact) in [
        (1usize, Box::new(|m: f64| gamma((m + 1.0) / 2.0)) as Box<dyn Fn(f64) -> f64>),
        (2, Box::new(|m: f64| PI * gamma(m / 2.0 + 1.0))),
    ] {
        let chart = chart_euclidean(n);
        let growth = estimate_growth(&chart, &default_growth_radii()).unwrap();
        let t = moment_table(&chart, 10, Some(&growth), 1e-12, &default_nodes(&chart)).unwrap();
        for e in &t.entries {
            let want = exact(e.m as f64);
            // odd powers of r have a conical point at the origin of the plane
            let tol = if n == 2 && e.m % 2 == 1 { 1e-6 } else { 1e-10 };
            assert!((e.value - want).abs() < tol * want, "n={n} m={}: {} {want}", e.m, e.value);
        }
    }
}

#[test]
fn cylinder_mass_splits() {
    let chart = cylinder();
    let rule = build_rule(&chart, 8.0, &default_nodes(&chart)).unwrap();
    let v = integrate(&chart, |_| 1.0, &rule).unwrap();
    let want = PI.sqrt() * 2.0 * PI / E;
    assert!((v - want).abs() < 1e-8 * want);
}

#[test]
fn moments_stable_under_larger_radius() {
    for chart in shipped() {
        let growth = estimate_growth(&chart, &default_growth_radii()).unwrap();
        let r = choose_truncation(Some(&growth), 10, 1e-12).unwrap();
        let nodes = default_nodes(&chart);
        let a = WeightedNodes::new(&chart, &build_rule(&chart, r, &nodes).unwrap(), Weight::Gauss).unwrap();
        let b = WeightedNodes::new(&chart, &build_rule(&chart, r + 2.0, &nodes).unwrap(), Weight::Gauss)
            .unwrap();
        for m in 0..=10 {
            let va = a.sum(|n| radial(n.r2, m)).unwrap();
            let vb = b.sum(|n| radial(n.r2, m)).unwrap();
            assert!(va.is_finite() && va > 0.0);
            assert!((va - vb).abs() <= 1e-7 * va, "{} m={m}: {va} {vb}", chart.id());
        }
    }
}

#[test]
fn node_doubling_converges() {
    let charts = [chart_euclidean(2), cylinder(), chart_graph(&[parse_real_poly("x^2", 1).unwrap()]).unwrap()];
    for chart in charts {
        // polynomials in the embedded coordinates, degree <= 12
        let integrands: [Integrand; 3] = [
            Box::new(|_| 1.0),
            Box::new(|x| x.iter().map(|v| v.powi(12)).sum()),
            Box::new(|x| x[0].powi(6) * x.last().unwrap().powi(6)),
        ];
        for g in &integrands {
            let vals: Vec<f64> = [32, 64, 128]
                .iter()
                .map(|&n| {
                    let rule = build_rule(&chart, 8.0, &uniform_nodes(&chart, n)).unwrap();
                    let nodes = WeightedNodes::new(&chart, &rule, Weight::Gauss).unwrap();
                    nodes.sum(|n| g(n.x)).unwrap()
                })
                .collect();
            for w in vals.windows(2) {
                assert!((w[1] - w[0]).abs() <= 1e-9 * w[1].abs(), "{}: {vals:?}", chart.id());
            }
        }
    }
}

#[test]
fn shell_sum_matches_direct_integral() {
    let chart = cylinder();
    let rule = build_rule(&chart, 9.0, &default_nodes(&chart)).unwrap();
    let nodes = WeightedNodes::new(&chart, &rule, Weight::Gauss).unwrap();
    for m in [0u32, 2, 5] {
        let direct = nodes.sum(|n| radial(n.r2, m)).unwrap();
        let shells: f64 = (0..9)
            .map(|j| {
                integrate_shell(&chart, |u| radial(chart.radial_sq(u), m), Weight::Gauss, j as f64, j as f64 + 1.0)
                    .unwrap()
            })
            .sum();
        assert!((direct - shells).abs() <= 1e-8 * direct, "m={m}: {direct} {shells}");
    }
}

#[test]
fn alpha_boundary() {
    let radii: Vec<f64> = (2..=12).map(f64::from).collect();
    for chart in [chart_euclidean(1), cylinder()] {
        for alpha in [0.1, 0.25, 0.4] {
            let s = integrability_study(&chart, alpha, &radii, &default_nodes(&chart)).unwrap();
            assert!(matches!(s.verdict, Verdict::Converged { .. }), "{alpha}: {:?}", s.verdict);
            // analytic value on the line: sqrt(pi / (1 - 2 alpha))
            if chart.intrinsic_dim() == 1 {
                let want = (PI / (1.0 - 2.0 * alpha)).sqrt();
                assert!((s.values.last().unwrap() - want).abs() < 1e-9 * want);
            }
        }
        let s = integrability_study(&chart, 0.6, &radii, &default_nodes(&chart)).unwrap();
        assert!(matches!(s.verdict, Verdict::Divergent { .. }));
        assert!(s.values.windows(2).all(|w| w[1] > w[0]));
    }
}

#[test]
fn growth_volumes_monotone_on_shipped_charts() {
    for chart in shipped() {
        let g = estimate_growth(&chart, &default_growth_radii()).unwrap();
        assert!(g.samples.windows(2).all(|w| w[1].volume >= w[0].volume), "{}", chart.id());
        assert!(g.slope <= chart.intrinsic_dim() as f64 + 0.5);
    }
}

#[test]
fn cylinder_i8_stable_at_requested_budget() {
    let chart = cylinder();
    let growth = estimate_growth(&chart, &default_growth_radii()).unwrap();
    let r = choose_truncation(Some(&growth), 8, 1e-10).unwrap();
    let nodes = default_nodes(&chart);
    let i8 = |radius: f64| {
        let rule = build_rule(&chart, radius, &nodes).unwrap();
        WeightedNodes::new(&chart, &rule, Weight::Gauss).unwrap().sum(|n| radial(n.r2, 8)).unwrap()
    };
    let (a, b) = (i8(r), i8(r + 2.0));
    assert!((a - b).abs() <= 2e-10 * a, "{a} {b}");
}

#[test]
fn forty_nodes_on_the_line() {
    let line = chart_euclidean(1);
    let rule = build_rule(&line, 7.0, &[40]).unwrap();
    let v = integrate(&line, |u| u[0].powi(10), &rule).unwrap();
    let want = gamma(5.5);
    assert!((v - want).abs() <= 1e-10 * want);
}

#[test]
fn zero_integrand_is_exactly_zero() {
    for chart in shipped() {
        let rule = build_rule(&chart, 5.0, &default_nodes(&chart)).unwrap();
        assert_eq!(integrate(&chart, |_| 0.0, &rule).unwrap(), 0.0);
    }
}
