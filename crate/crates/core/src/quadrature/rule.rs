use super::gauss::{
    composite_gauss_legendre, gauss_legendre_on, panels_for, periodic_trapezoid, PANEL_ORDER,
};
use crate::error::{Error, Result};
use crate::variety::{ParamDomain, VarietyChart};

/// Default node counts per kind of parameter direction.
pub const DEFAULT_UNBOUNDED_NODES: usize = 64;
pub const DEFAULT_PERIODIC_NODES: usize = 64;
pub const DEFAULT_BOUNDED_NODES: usize = 48;

const ENVELOPE_SAMPLES: usize = 10_000;
const ENVELOPE_CROSS_SAMPLES: usize = 41;
const ENVELOPE_PADDING: f64 = 1.1;

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum DimKind {
    /// Truncated real line `[-half_width, half_width]`, composite Gauss-Legendre.
    TruncatedLine { half_width: f64 },
    /// Bounded interval, single Gauss-Legendre panel.
    Interval,
    /// Periodic direction, uniform trapezoidal rule.
    Periodic,
}

#[derive(Clone, Debug)]
pub struct Rule1D {
    pub kind: DimKind,
    pub nodes: Vec<f64>,
    pub weights: Vec<f64>,
}

/// Tensor-product rule on a chart's (truncated) parameter domain.
#[derive(Clone, Debug)]
pub struct QuadRule {
    dims: Vec<Rule1D>,
    truncation_radius: f64,
    nodes_per_dim: Vec<usize>,
}

impl QuadRule {
    pub fn dims(&self) -> &[Rule1D] {
        &self.dims
    }

    pub fn truncation_radius(&self) -> f64 {
        self.truncation_radius
    }

    /// Node counts actually used per direction.
    pub fn nodes_per_dim(&self) -> &[usize] {
        &self.nodes_per_dim
    }

    pub fn n_nodes(&self) -> usize {
        self.nodes_per_dim.iter().product()
    }

    /// Volume of the truncated parameter box.
    pub fn box_volume(&self) -> f64 {
        self.dims
            .iter()
            .map(|d| match d.kind {
                DimKind::TruncatedLine { half_width } => 2.0 * half_width,
                _ => {
                    // weights of both remaining kinds sum to the interval length
                    d.weights.iter().sum::<f64>()
                }
            })
            .product()
    }

    /// Visits every tensor node with its product weight, in a fixed order
    /// (last parameter fastest).
    pub fn for_each_node(&self, mut visit: impl FnMut(&[f64], f64)) {
        let d = self.dims.len();
        let mut idx = vec![0usize; d];
        let mut u = vec![0.0; d];
        loop {
            let mut w = 1.0;
            for (k, dim) in self.dims.iter().enumerate() {
                u[k] = dim.nodes[idx[k]];
                w *= dim.weights[idx[k]];
            }
            visit(&u, w);
            let mut k = d;
            loop {
                if k == 0 {
                    return;
                }
                k -= 1;
                idx[k] += 1;
                if idx[k] < self.dims[k].nodes.len() {
                    break;
                }
                idx[k] = 0;
            }
        }
    }

    /// Plain sum `sum w g(u)` with no Gaussian weight and no density.
    pub fn integrate_raw(&self, g: impl Fn(&[f64]) -> f64) -> f64 {
        let mut acc = super::sum::CompensatedSum::default();
        self.for_each_node(|u, w| acc.add(w * g(u)));
        acc.value()
    }
}

/// Builds the tensor rule for `chart` covering `M ∩ B_radius`.
///
/// Unbounded directions are truncated where the radial envelope crosses
/// `radius^2` (plus 10% padding) and use composite 16-point Gauss-Legendre
/// panels at most one unit wide; bounded directions use a single
/// Gauss-Legendre panel; periodic directions use the uniform rule.
pub fn build_rule(chart: &VarietyChart, radius: f64, nodes_per_dim: &[usize]) -> Result<QuadRule> {
    let d = chart.intrinsic_dim();
    if nodes_per_dim.len() != d {
        return Err(Error::DimensionMismatch {
            expected: d,
            got: nodes_per_dim.len(),
        });
    }
    if let Some(&bad) = nodes_per_dim.iter().find(|&&n| n < 4) {
        return Err(Error::InvalidArgument(format!(
            "need at least 4 nodes per dimension, got {bad}"
        )));
    }
    if !(radius > 0.0) || !radius.is_finite() {
        return Err(Error::InvalidArgument(format!("bad truncation radius {radius}")));
    }
    let mut dims = Vec::with_capacity(d);
    for (k, (&dom, &n)) in chart.domain().iter().zip(nodes_per_dim).enumerate() {
        let dim = match dom {
            ParamDomain::Unbounded => {
                let t = unbounded_extent(chart, k, radius);
                // even, so that u = 0 is a panel edge: odd radial powers have a
                // kink there on charts through the origin
                let panels = panels_for(-t, t, n).next_multiple_of(2);
                let (nodes, weights) = composite_gauss_legendre(PANEL_ORDER, panels, -t, t);
                Rule1D {
                    kind: DimKind::TruncatedLine { half_width: t },
                    nodes,
                    weights,
                }
            }
            ParamDomain::Bounded { lo, hi } => {
                let (nodes, weights) = gauss_legendre_on(n, lo, hi);
                Rule1D {
                    kind: DimKind::Interval,
                    nodes,
                    weights,
                }
            }
            ParamDomain::Periodic { lo, hi } => {
                let (nodes, weights) = periodic_trapezoid(n, lo, hi);
                Rule1D {
                    kind: DimKind::Periodic,
                    nodes,
                    weights,
                }
            }
        };
        dims.push(dim);
    }
    let nodes_per_dim = dims.iter().map(|d| d.nodes.len()).collect();
    Ok(QuadRule {
        dims,
        truncation_radius: radius,
        nodes_per_dim,
    })
}

/// Default node counts for a chart: 64 unbounded, 64 periodic, 48 bounded.
pub fn default_nodes(chart: &VarietyChart) -> Vec<usize> {
    chart
        .domain()
        .iter()
        .map(|d| match d {
            ParamDomain::Unbounded => DEFAULT_UNBOUNDED_NODES,
            ParamDomain::Periodic { .. } => DEFAULT_PERIODIC_NODES,
            ParamDomain::Bounded { .. } => DEFAULT_BOUNDED_NODES,
        })
        .collect()
}

/// Same count for every direction.
pub fn uniform_nodes(chart: &VarietyChart, n: usize) -> Vec<usize> {
    vec![n; chart.intrinsic_dim()]
}

/// Half-width of the parameter interval along unbounded direction `dim` that
/// covers `{u : radial_sq(u) <= radius^2}`.
///
/// The radial function is sampled at 10^4 points along the direction, taking
/// the minimum over a coarse grid of the other parameters (the lower
/// envelope); the outermost sample inside the ball, padded by 10%, is returned.
pub fn unbounded_extent(chart: &VarietyChart, dim: usize, radius: f64) -> f64 {
    let r2 = radius * radius;
    let domain = chart.domain();
    let mut t_max = 2.0 * radius + 2.0;
    for _ in 0..12 {
        let others: Vec<Vec<f64>> = domain
            .iter()
            .enumerate()
            .map(|(k, dom)| {
                if k == dim {
                    return vec![0.0];
                }
                let (lo, hi, periodic) = match *dom {
                    ParamDomain::Unbounded => (-t_max, t_max, false),
                    ParamDomain::Bounded { lo, hi } => (lo, hi, false),
                    ParamDomain::Periodic { lo, hi } => (lo, hi, true),
                };
                let m = ENVELOPE_CROSS_SAMPLES;
                let denom = if periodic { m } else { m - 1 };
                (0..m).map(|i| lo + (hi - lo) * i as f64 / denom as f64).collect()
            })
            .collect();
        let mut u = vec![0.0; domain.len()];
        let mut outermost: Option<usize> = None;
        for i in 0..ENVELOPE_SAMPLES {
            let t = t_max * i as f64 / (ENVELOPE_SAMPLES - 1) as f64;
            let inside = [t, -t].iter().any(|&s| {
                u[dim] = s;
                min_over_grid(chart, &others, dim, &mut u, 0) <= r2
            });
            if inside {
                outermost = Some(i);
            }
        }
        match outermost {
            Some(i) if i == ENVELOPE_SAMPLES - 1 => t_max *= 2.0,
            Some(i) => {
                let t = t_max * (i + 1) as f64 / (ENVELOPE_SAMPLES - 1) as f64;
                return t.max(1.0) * ENVELOPE_PADDING;
            }
            None => return ENVELOPE_PADDING,
        }
    }
    t_max * ENVELOPE_PADDING
}

fn min_over_grid(
    chart: &VarietyChart,
    grid: &[Vec<f64>],
    skip: usize,
    u: &mut [f64],
    pos: usize,
) -> f64 {
    if pos == grid.len() {
        return chart.radial_sq(u);
    }
    if pos == skip {
        return min_over_grid(chart, grid, skip, u, pos + 1);
    }
    let mut best = f64::INFINITY;
    for &v in &grid[pos] {
        u[pos] = v;
        best = best.min(min_over_grid(chart, grid, skip, u, pos + 1));
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::parse_real_poly;
    use crate::variety::{chart_euclidean, chart_euclidean_box, chart_graph, chart_revolution};

    #[test]
    fn box_volume_matches_constant_integral() {
        let p1 = |s| parse_real_poly(s, 1).unwrap();
        let charts = vec![
            chart_euclidean(2),
            chart_euclidean_box(1, -1.0, 1.0).unwrap(),
            chart_revolution(&p1("1"), &p1("u"), ParamDomain::Unbounded).unwrap(),
        ];
        for chart in charts {
            let rule = build_rule(&chart, 6.0, &default_nodes(&chart)).unwrap();
            let one = rule.integrate_raw(|_| 1.0);
            assert!((one / rule.box_volume() - 1.0).abs() < 1e-12, "{}", chart.id());
        }
    }

    #[test]
    fn periodic_weights_uniform() {
        let p1 = |s| parse_real_poly(s, 1).unwrap();
        let cyl = chart_revolution(&p1("1"), &p1("u"), ParamDomain::Unbounded).unwrap();
        let rule = build_rule(&cyl, 5.0, &[64, 64]).unwrap();
        let w = &rule.dims()[1].weights;
        assert!(w.iter().all(|&x| x == w[0]));
        assert!(rule.dims().iter().all(|d| d.weights.iter().all(|w| w.is_finite())));
    }

    #[test]
    fn extent_solves_radial_crossing() {
        let t = unbounded_extent(&chart_euclidean(1), 0, 5.0);
        assert!((t / 1.1 - 5.0).abs() < 5.0 * 1e-3);
        let p1 = |s| parse_real_poly(s, 1).unwrap();
        // r^2 = 1 + u^2 on the cylinder
        let cyl = chart_revolution(&p1("1"), &p1("u"), ParamDomain::Unbounded).unwrap();
        let t = unbounded_extent(&cyl, 0, 5.0);
        assert!((t / 1.1 - 24f64.sqrt()).abs() < 2e-3);
        // r^2 = x^2 + x^4 on the parabola
        let g = chart_graph(&[p1("x^2")]).unwrap();
        let t = unbounded_extent(&g, 0, 10.0);
        let root = ((-1.0 + (1.0f64 + 400.0).sqrt()) / 2.0).sqrt();
        assert!((t / 1.1 - root).abs() < 5e-3);
    }

    #[test]
    fn rejects_bad_counts() {
        let chart = chart_euclidean(1);
        assert!(build_rule(&chart, 5.0, &[3]).is_err());
        assert!(build_rule(&chart, 5.0, &[8, 8]).is_err());
        assert!(build_rule(&chart, -1.0, &[8]).is_err());
    }
}
