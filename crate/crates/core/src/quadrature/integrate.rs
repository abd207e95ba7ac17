use num_complex::Complex64;

use super::rule::QuadRule;
use super::sum::CompensatedSum;
use crate::error::{Error, Result};
use crate::variety::VarietyChart;

/// Radial weight multiplying the volume form.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Weight {
    /// `e^{-r^2}`
    #[default]
    Gauss,
    /// `e^{-r^2/2}`
    HalfGauss,
    /// Plain `dμ`.
    None,
}

impl Weight {
    /// The `c` in `e^{-c r^2}`.
    pub fn decay(self) -> f64 {
        match self {
            Weight::Gauss => 1.0,
            Weight::HalfGauss => 0.5,
            Weight::None => 0.0,
        }
    }

    pub fn factor(self, r2: f64) -> f64 {
        match self {
            Weight::None => 1.0,
            w => (-w.decay() * r2).exp(),
        }
    }
}

/// Rule nodes of a chart with their full weights `w * e^{-c r^2} * density`.
///
/// Built once and reused for every integrand over the same chart and rule.
#[derive(Clone, Debug)]
pub struct WeightedNodes {
    params: Vec<Vec<f64>>,
    points: Vec<Vec<f64>>,
    radial_sq: Vec<f64>,
    weights: Vec<f64>,
}

impl WeightedNodes {
    pub fn new(chart: &VarietyChart, rule: &QuadRule, weight: Weight) -> Result<Self> {
        if rule.dims().len() != chart.intrinsic_dim() {
            return Err(Error::DimensionMismatch {
                expected: chart.intrinsic_dim(),
                got: rule.dims().len(),
            });
        }
        let n = rule.n_nodes();
        let mut out = WeightedNodes {
            params: Vec::with_capacity(n),
            points: Vec::with_capacity(n),
            radial_sq: Vec::with_capacity(n),
            weights: Vec::with_capacity(n),
        };
        let mut failure = None;
        rule.for_each_node(|u, w| {
            if failure.is_some() {
                return;
            }
            let r2 = chart.radial_sq(u);
            let full = w * weight.factor(r2) * chart.volume_density(u);
            if !full.is_finite() {
                failure = Some(Error::NonFinite {
                    node: u.to_vec(),
                    value: full,
                });
                return;
            }
            let mut x = vec![0.0; chart.ambient_dim()];
            chart.embed_into(u, &mut x);
            out.params.push(u.to_vec());
            out.points.push(x);
            out.radial_sq.push(r2);
            out.weights.push(full);
        });
        match failure {
            Some(e) => Err(e),
            None => Ok(out),
        }
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    pub fn params(&self) -> &[Vec<f64>] {
        &self.params
    }

    /// Embedded points in `R^n`.
    pub fn points(&self) -> &[Vec<f64>] {
        &self.points
    }

    pub fn radial_sq(&self) -> &[f64] {
        &self.radial_sq
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    /// `sum_k w_k g(node_k)` in node order, compensated.
    pub fn sum(&self, g: impl Fn(NodeView<'_>) -> f64) -> Result<f64> {
        let mut acc = CompensatedSum::default();
        for k in 0..self.len() {
            let node = self.node(k);
            let gv = g(node);
            if gv == 0.0 {
                continue;
            }
            let v = self.weights[k] * gv;
            if !v.is_finite() {
                return Err(Error::NonFinite {
                    node: self.params[k].clone(),
                    value: gv,
                });
            }
            acc.add(v);
        }
        Ok(acc.value())
    }

    pub fn sum_complex(&self, g: impl Fn(NodeView<'_>) -> Complex64) -> Result<Complex64> {
        let mut re = CompensatedSum::default();
        let mut im = CompensatedSum::default();
        for k in 0..self.len() {
            let gv = g(self.node(k));
            let v = gv * self.weights[k];
            if !(v.re.is_finite() && v.im.is_finite()) {
                return Err(Error::NonFinite {
                    node: self.params[k].clone(),
                    value: gv.norm(),
                });
            }
            re.add(v.re);
            im.add(v.im);
        }
        Ok(Complex64::new(re.value(), im.value()))
    }

    pub fn node(&self, k: usize) -> NodeView<'_> {
        NodeView {
            u: &self.params[k],
            x: &self.points[k],
            r2: self.radial_sq[k],
        }
    }
}

/// One quadrature node: parameters `u`, embedded point `x`, and `r^2`.
#[derive(Clone, Copy, Debug)]
pub struct NodeView<'a> {
    pub u: &'a [f64],
    pub x: &'a [f64],
    pub r2: f64,
}

/// `∫_M g e^{-r^2} dμ` over the chart, by the given rule.
pub fn integrate(chart: &VarietyChart, g: impl Fn(&[f64]) -> f64, rule: &QuadRule) -> Result<f64> {
    integrate_weighted(chart, g, rule, Weight::Gauss)
}

pub fn integrate_weighted(
    chart: &VarietyChart,
    g: impl Fn(&[f64]) -> f64,
    rule: &QuadRule,
    weight: Weight,
) -> Result<f64> {
    WeightedNodes::new(chart, rule, weight)?.sum(|n| g(n.u))
}

pub fn integrate_complex(
    chart: &VarietyChart,
    g: impl Fn(&[f64]) -> Complex64,
    rule: &QuadRule,
    weight: Weight,
) -> Result<Complex64> {
    WeightedNodes::new(chart, rule, weight)?.sum_complex(|n| g(n.u))
}

/// Gaussian moment `I_m = ∫_M r^m e^{-r^2} dμ`.
pub fn gaussian_moment(chart: &VarietyChart, m: u32, rule: &QuadRule) -> Result<f64> {
    WeightedNodes::new(chart, rule, Weight::Gauss)?.sum(|n| radial_power(n.r2, m))
}

pub(crate) fn radial_power(r2: f64, m: u32) -> f64 {
    if m.is_multiple_of(2) {
        r2.powi((m / 2) as i32)
    } else {
        r2.sqrt().powi(m as i32)
    }
}
