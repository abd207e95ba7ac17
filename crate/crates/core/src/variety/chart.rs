use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::polyring::{ComplexPoly, RealPoly};

/// Kind of a parameter direction.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum ParamDomain {
    /// The whole real line; quadrature truncates it.
    Unbounded,
    Bounded { lo: f64, hi: f64 },
    /// A circle `[lo, hi)` with `lo` and `hi` identified.
    Periodic { lo: f64, hi: f64 },
}

impl ParamDomain {
    pub fn periodic_circle() -> Self {
        ParamDomain::Periodic { lo: 0.0, hi: 2.0 * PI }
    }

    pub fn is_unbounded(&self) -> bool {
        matches!(self, ParamDomain::Unbounded)
    }

    /// Finite extent, if any.
    pub fn interval(&self) -> Option<(f64, f64)> {
        match *self {
            ParamDomain::Unbounded => None,
            ParamDomain::Bounded { lo, hi } | ParamDomain::Periodic { lo, hi } => Some((lo, hi)),
        }
    }

    pub fn contains(&self, t: f64) -> bool {
        match self.interval() {
            None => t.is_finite(),
            Some((lo, hi)) => t >= lo && t <= hi,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ChartKind {
    Euclidean,
    Graph,
    Revolution,
    ModulusGraph,
    Circle,
}

#[derive(Clone, Debug)]
enum Maps {
    Euclidean,
    Graph {
        components: Vec<RealPoly>,
        derivatives: Vec<RealPoly>,
    },
    Revolution {
        f: RealPoly,
        h: RealPoly,
        df: RealPoly,
        dh: RealPoly,
    },
    ModulusGraph {
        big_f: ComplexPoly,
        dbig_f: ComplexPoly,
    },
    Circle,
}

/// A parametrization of `M` in `R^n` by `d` parameters.
#[derive(Clone, Debug)]
pub struct VarietyChart {
    kind: ChartKind,
    maps: Maps,
    domain: Vec<ParamDomain>,
    ambient_dim: usize,
    id: String,
}

/// The identity chart of `R^n`.
pub fn chart_euclidean(n: usize) -> VarietyChart {
    assert!(n >= 1, "euclidean chart needs n >= 1");
    VarietyChart {
        kind: ChartKind::Euclidean,
        maps: Maps::Euclidean,
        domain: vec![ParamDomain::Unbounded; n],
        ambient_dim: n,
        id: format!("euclidean(n={n})"),
    }
}

/// The identity chart restricted to the cube `[lo, hi]^n`.
pub fn chart_euclidean_box(n: usize, lo: f64, hi: f64) -> Result<VarietyChart> {
    if !(lo < hi) || !lo.is_finite() || !hi.is_finite() {
        return Err(Error::InvalidChart(format!("bad interval [{lo}, {hi}]")));
    }
    let mut chart = chart_euclidean(n);
    chart.domain = vec![ParamDomain::Bounded { lo, hi }; n];
    chart.id = format!("euclidean(n={n}, [{lo}, {hi}])");
    Ok(chart)
}

/// Graph `x -> (x, f_1(x), ..., f_{n-1}(x))` of a univariate polynomial map.
pub fn chart_graph(components: &[RealPoly]) -> Result<VarietyChart> {
    let components = components
        .iter()
        .map(|p| {
            p.to_univariate()
                .map_err(|_| Error::InvalidChart("graph components must be univariate".into()))
        })
        .collect::<Result<Vec<_>>>()?;
    let derivatives = components.iter().map(|p| p.derivative(0)).collect();
    let id = format!(
        "graph([{}])",
        components
            .iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>()
            .join(", ")
    );
    Ok(VarietyChart {
        kind: ChartKind::Graph,
        ambient_dim: 1 + components.len(),
        maps: Maps::Graph {
            components,
            derivatives,
        },
        domain: vec![ParamDomain::Unbounded],
        id,
    })
}

/// Surface of revolution `(f(u1) cos u2, f(u1) sin u2, h(u1))`.
///
/// `f` must be positive on `u1_domain`; this is checked on 1000 equispaced
/// samples plus every critical point of `f` located by bisection on `f'`.
pub fn chart_revolution(
    f: &RealPoly,
    h: &RealPoly,
    u1_domain: ParamDomain,
) -> Result<VarietyChart> {
    let uni = |p: &RealPoly, name: &str| {
        p.to_univariate()
            .map_err(|_| Error::InvalidChart(format!("revolution profile {name} must be univariate")))
    };
    let f = uni(f, "f")?;
    let h = uni(h, "h")?;
    if matches!(u1_domain, ParamDomain::Periodic { .. }) {
        return Err(Error::InvalidChart("u1 cannot be periodic".into()));
    }
    check_profile_positive(&f, u1_domain)?;
    let id = format!("revolution(f={f}, h={h})");
    let df = f.derivative(0);
    let dh = h.derivative(0);
    Ok(VarietyChart {
        kind: ChartKind::Revolution,
        maps: Maps::Revolution { f, h, df, dh },
        domain: vec![u1_domain, ParamDomain::periodic_circle()],
        ambient_dim: 3,
        id,
    })
}

/// Surface `z -> (x, y, |F(z)|)` for a polynomial `F` in one complex variable.
pub fn chart_modulus_graph(big_f: &ComplexPoly) -> Result<VarietyChart> {
    let big_f = big_f
        .to_univariate()
        .map_err(|_| Error::InvalidChart("F must be a polynomial in one variable".into()))?;
    let dbig_f = big_f.derivative(0);
    let id = format!("modulus_graph(F={big_f})");
    Ok(VarietyChart {
        kind: ChartKind::ModulusGraph,
        maps: Maps::ModulusGraph { big_f, dbig_f },
        domain: vec![ParamDomain::Unbounded; 2],
        ambient_dim: 3,
        id,
    })
}

/// The unit circle `u -> (cos u, sin u)`.
pub fn chart_circle() -> VarietyChart {
    VarietyChart {
        kind: ChartKind::Circle,
        maps: Maps::Circle,
        domain: vec![ParamDomain::periodic_circle()],
        ambient_dim: 2,
        id: "circle".into(),
    }
}

fn check_profile_positive(f: &RealPoly, domain: ParamDomain) -> Result<()> {
    let eval = |t: f64| f.eval_real_unchecked(&[t]);
    let reject = |t: f64| {
        Err(Error::InvalidChart(format!(
            "revolution profile f is not positive: f({t}) = {}",
            eval(t)
        )))
    };
    let (lo, hi) = match domain.interval() {
        Some(iv) => iv,
        None => {
            // positive on all of R needs even degree and a positive leading term
            let deg = f.degree().unwrap_or(0);
            let lead: f64 = f
                .terms()
                .filter(|(m, _)| m.degree() == deg)
                .map(|(_, c)| *c)
                .sum();
            if f.is_zero() || deg % 2 == 1 || lead <= 0.0 {
                return Err(Error::InvalidChart(
                    "revolution profile f must be positive on the whole line".into(),
                ));
            }
            let b = critical_point_bound(f);
            (-b, b)
        }
    };
    // values this close to zero relative to the coefficients count as zero
    let floor = 1e-12 * f.terms().map(|(_, c)| c.abs()).fold(0.0, f64::max);
    const SAMPLES: usize = 1000;
    for i in 0..SAMPLES {
        let t = lo + (hi - lo) * i as f64 / (SAMPLES - 1) as f64;
        if !(eval(t) > floor) {
            return reject(t);
        }
    }
    for t in critical_points(f, lo, hi) {
        if !(eval(t) > floor) {
            return reject(t);
        }
    }
    Ok(())
}

// Cauchy bound on the real roots of f'.
fn critical_point_bound(f: &RealPoly) -> f64 {
    let df = f.derivative(0);
    let Some(deg) = df.degree() else {
        return 1.0;
    };
    let lead = df.terms().last().map(|(_, c)| c.abs()).unwrap_or(1.0);
    let ratio = df
        .terms()
        .filter(|(m, _)| m.degree() < deg)
        .map(|(_, c)| c.abs() / lead)
        .fold(0.0, f64::max);
    1.0 + ratio
}

/// Sign changes of `f'` on a 1000-point grid of `[lo, hi]`, refined by bisection.
fn critical_points(f: &RealPoly, lo: f64, hi: f64) -> Vec<f64> {
    let df = f.derivative(0);
    if df.is_zero() {
        return Vec::new();
    }
    let g = |t: f64| df.eval_real_unchecked(&[t]);
    const SAMPLES: usize = 1000;
    let grid: Vec<f64> = (0..SAMPLES)
        .map(|i| lo + (hi - lo) * i as f64 / (SAMPLES - 1) as f64)
        .collect();
    let mut roots = Vec::new();
    for w in grid.windows(2) {
        let (mut a, mut b) = (w[0], w[1]);
        let (ga, gb) = (g(a), g(b));
        if ga == 0.0 {
            roots.push(a);
            continue;
        }
        if ga * gb > 0.0 {
            continue;
        }
        for _ in 0..200 {
            let mid = 0.5 * (a + b);
            if mid <= a || mid >= b {
                break;
            }
            if g(a) * g(mid) <= 0.0 {
                b = mid;
            } else {
                a = mid;
            }
        }
        roots.push(0.5 * (a + b));
    }
    roots
}

impl VarietyChart {
    pub fn kind(&self) -> ChartKind {
        self.kind
    }

    /// Human-readable identifier, used in exported tables.
    pub fn id(&self) -> &str {
        &self.id
    }

    pub fn intrinsic_dim(&self) -> usize {
        self.domain.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn domain(&self) -> &[ParamDomain] {
        &self.domain
    }

    fn check_param(&self, u: &[f64]) -> Result<()> {
        if u.len() != self.intrinsic_dim() {
            return Err(Error::DimensionMismatch {
                expected: self.intrinsic_dim(),
                got: u.len(),
            });
        }
        Ok(())
    }

    /// Writes the embedded point into `out` (length `ambient_dim`).
    pub fn embed_into(&self, u: &[f64], out: &mut [f64]) {
        match &self.maps {
            Maps::Euclidean => out.copy_from_slice(u),
            Maps::Graph { components, .. } => {
                out[0] = u[0];
                for (o, p) in out[1..].iter_mut().zip(components) {
                    *o = p.eval_real_unchecked(u);
                }
            }
            Maps::Revolution { f, h, .. } => {
                let fv = f.eval_real_unchecked(&u[..1]);
                out[0] = fv * u[1].cos();
                out[1] = fv * u[1].sin();
                out[2] = h.eval_real_unchecked(&u[..1]);
            }
            Maps::ModulusGraph { big_f, .. } => {
                out[0] = u[0];
                out[1] = u[1];
                out[2] = big_f.eval_complex_unchecked(Complex64::new(u[0], u[1])).norm();
            }
            Maps::Circle => {
                out[0] = u[0].cos();
                out[1] = u[0].sin();
            }
        }
    }

    pub fn embed(&self, u: &[f64]) -> Result<Vec<f64>> {
        self.check_param(u)?;
        let mut out = vec![0.0; self.ambient_dim];
        self.embed_into(u, &mut out);
        Ok(out)
    }

    /// `r^2 = |x|^2` at the image of `u`, from the closed form of each kind.
    pub fn radial_sq(&self, u: &[f64]) -> f64 {
        match &self.maps {
            Maps::Euclidean => u.iter().map(|t| t * t).sum(),
            Maps::Graph { components, .. } => {
                u[0] * u[0]
                    + components
                        .iter()
                        .map(|p| p.eval_real_unchecked(u).powi(2))
                        .sum::<f64>()
            }
            Maps::Revolution { f, h, .. } => {
                f.eval_real_unchecked(&u[..1]).powi(2) + h.eval_real_unchecked(&u[..1]).powi(2)
            }
            Maps::ModulusGraph { big_f, .. } => {
                let z = Complex64::new(u[0], u[1]);
                z.norm_sqr() + big_f.eval_complex_unchecked(z).norm_sqr()
            }
            Maps::Circle => 1.0,
        }
    }

    /// Volume density `sqrt(det(J^T J))` from the closed form of each kind.
    pub fn volume_density(&self, u: &[f64]) -> f64 {
        match &self.maps {
            Maps::Euclidean | Maps::Circle => 1.0,
            Maps::Graph { derivatives, .. } => (1.0
                + derivatives
                    .iter()
                    .map(|d| d.eval_real_unchecked(u).powi(2))
                    .sum::<f64>())
            .sqrt(),
            Maps::Revolution { f, df, dh, .. } => {
                let t = &u[..1];
                let fp = df.eval_real_unchecked(t);
                let hp = dh.eval_real_unchecked(t);
                f.eval_real_unchecked(t) * (fp * fp + hp * hp).sqrt()
            }
            Maps::ModulusGraph { dbig_f, .. } => {
                let z = Complex64::new(u[0], u[1]);
                (1.0 + dbig_f.eval_complex_unchecked(z).norm_sqr()).sqrt()
            }
        }
    }

    /// The restriction `p o embedding` of an ambient polynomial.
    pub fn restrict<'a>(&'a self, p: &'a RealPoly) -> Result<Restricted<'a>> {
        if p.ambient_dim() != self.ambient_dim {
            return Err(Error::DimensionMismatch {
                expected: self.ambient_dim,
                got: p.ambient_dim(),
            });
        }
        Ok(Restricted { chart: self, poly: p })
    }
}

/// An ambient polynomial seen as a function of the chart parameters.
#[derive(Clone, Copy, Debug)]
pub struct Restricted<'a> {
    chart: &'a VarietyChart,
    poly: &'a RealPoly,
}

impl Restricted<'_> {
    pub fn eval(&self, u: &[f64]) -> f64 {
        let mut x = vec![0.0; self.chart.ambient_dim];
        self.chart.embed_into(u, &mut x);
        self.poly.eval_real_unchecked(&x)
    }
}
