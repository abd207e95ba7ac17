//! Integration over radial shells `{u : r_lo <= |x(u)| <= r_hi}`.
//!
//! The innermost parameter is split exactly at the shell boundaries (sign
//! changes of `r^2 - r_*^2` on a sample grid, refined by bisection) and each
//! piece gets composite Gauss-Legendre; outer parameters use fixed rules.
//! Used for `vol(M ∩ B_r)` and for shell sums of Gaussian moments.

use super::gauss::{composite_gauss_legendre, periodic_trapezoid};
use super::integrate::Weight;
use super::rule::unbounded_extent;
use super::sum::CompensatedSum;
use crate::error::{Error, Result};
use crate::variety::{ParamDomain, VarietyChart};

const INNER_SAMPLES: usize = 1000;
const INNER_ORDER: usize = 16;
const INNER_PANEL_WIDTH: f64 = 0.5;
const OUTER_ORDER: usize = 16;
const OUTER_PANEL_WIDTH: f64 = 0.5;
const OUTER_PERIODIC_NODES: usize = 128;

/// `∫_{shell} g * weight(r^2) dμ` over `r_lo <= r <= r_hi`.
pub fn integrate_shell(
    chart: &VarietyChart,
    g: impl Fn(&[f64]) -> f64,
    weight: Weight,
    r_lo: f64,
    r_hi: f64,
) -> Result<f64> {
    if !(r_lo >= 0.0 && r_hi > r_lo) {
        return Err(Error::InvalidArgument(format!("bad shell [{r_lo}, {r_hi}]")));
    }
    let bounds: Vec<(f64, f64, bool)> = chart
        .domain()
        .iter()
        .enumerate()
        .map(|(k, dom)| match *dom {
            ParamDomain::Unbounded => {
                let t = unbounded_extent(chart, k, r_hi);
                (-t, t, false)
            }
            ParamDomain::Bounded { lo, hi } => (lo, hi, false),
            ParamDomain::Periodic { lo, hi } => (lo, hi, true),
        })
        .collect();
    let outer_rules: Vec<(Vec<f64>, Vec<f64>)> = bounds[1..]
        .iter()
        .map(|&(lo, hi, periodic)| {
            if periodic {
                periodic_trapezoid(OUTER_PERIODIC_NODES, lo, hi)
            } else {
                let panels = (((hi - lo) / OUTER_PANEL_WIDTH).ceil() as usize).max(1);
                composite_gauss_legendre(OUTER_ORDER, panels, lo, hi)
            }
        })
        .collect();
    let shell = Shell {
        chart,
        weight,
        lo2: r_lo * r_lo,
        hi2: r_hi * r_hi,
        inner: (bounds[0].0, bounds[0].1),
    };
    let mut u = vec![0.0; chart.intrinsic_dim()];
    let mut acc = CompensatedSum::default();
    shell.outer(&g, &outer_rules, 0, 1.0, &mut u, &mut acc)?;
    Ok(acc.value())
}

struct Shell<'a> {
    chart: &'a VarietyChart,
    weight: Weight,
    lo2: f64,
    hi2: f64,
    inner: (f64, f64),
}

impl Shell<'_> {
    fn outer(
        &self,
        g: &impl Fn(&[f64]) -> f64,
        rules: &[(Vec<f64>, Vec<f64>)],
        pos: usize,
        w: f64,
        u: &mut [f64],
        acc: &mut CompensatedSum,
    ) -> Result<()> {
        if pos == rules.len() {
            let v = w * self.inner_integral(g, u)?;
            acc.add(v);
            return Ok(());
        }
        let (nodes, weights) = &rules[pos];
        for (&t, &wt) in nodes.iter().zip(weights) {
            u[pos + 1] = t;
            self.outer(g, rules, pos + 1, w * wt, u, acc)?;
        }
        Ok(())
    }

    fn inside(&self, s: f64) -> bool {
        s <= self.hi2 && (self.lo2 == 0.0 || s >= self.lo2)
    }

    fn inner_integral(&self, g: &impl Fn(&[f64]) -> f64, u: &mut [f64]) -> Result<f64> {
        let (a, b) = self.inner;
        let s_at = |t: f64, u: &mut [f64]| {
            u[0] = t;
            self.chart.radial_sq(u)
        };
        let ts: Vec<f64> = (0..INNER_SAMPLES)
            .map(|i| a + (b - a) * i as f64 / (INNER_SAMPLES - 1) as f64)
            .collect();
        let flags: Vec<bool> = ts.iter().map(|&t| self.inside(s_at(t, u))).collect();
        let mut pieces = Vec::new();
        let mut start = flags[0].then_some(a);
        for i in 1..ts.len() {
            if flags[i] == flags[i - 1] {
                continue;
            }
            let edge = self.locate_edge(ts[i - 1], ts[i], u);
            if flags[i] {
                start = Some(edge);
            } else if let Some(s0) = start.take() {
                pieces.push((s0, edge));
            }
        }
        if let Some(s0) = start {
            pieces.push((s0, b));
        }
        let mut acc = CompensatedSum::default();
        for (lo, hi) in pieces {
            if hi <= lo {
                continue;
            }
            let panels = (((hi - lo) / INNER_PANEL_WIDTH).ceil() as usize).max(1);
            let (nodes, weights) = composite_gauss_legendre(INNER_ORDER, panels, lo, hi);
            for (&t, &w) in nodes.iter().zip(&weights) {
                u[0] = t;
                let r2 = self.chart.radial_sq(u);
                let v = w * g(u) * self.weight.factor(r2) * self.chart.volume_density(u);
                if !v.is_finite() {
                    return Err(Error::NonFinite {
                        node: u.to_vec(),
                        value: v,
                    });
                }
                acc.add(v);
            }
        }
        Ok(acc.value())
    }

    // Bisection on whichever boundary r^2 = lo2 or r^2 = hi2 is crossed in [a, b].
    fn locate_edge(&self, mut a: f64, mut b: f64, u: &mut [f64]) -> f64 {
        let mut s = |t: f64| {
            u[0] = t;
            self.chart.radial_sq(u)
        };
        let (sa, sb) = (s(a), s(b));
        let level = if (sa - self.hi2) * (sb - self.hi2) <= 0.0 {
            self.hi2
        } else {
            self.lo2
        };
        let above_a = sa > level;
        for _ in 0..200 {
            let mid = 0.5 * (a + b);
            if mid <= a || mid >= b {
                break;
            }
            if (s(mid) > level) == above_a {
                a = mid;
            } else {
                b = mid;
            }
        }
        0.5 * (a + b)
    }
}
