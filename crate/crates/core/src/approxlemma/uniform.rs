use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::polyring::{truncated_exponential, unit_power, Wavevector};

use super::cm::stationary_point;

pub const AXIS_GRID_POINTS: usize = 100_000;

/// Absolute rounding floor of the error evaluation: `p_m` and `e^{iy}` are
/// both `O(1)` near the origin, so differences below a few ulps are noise.
pub const EVAL_FLOOR: f64 = 4.0 * f64::EPSILON;

fn factorial(n: u32) -> f64 {
    (1..=n).fold(1.0, |acc, j| acc * j as f64)
}

/// Points `t k/|k|` with `t = 0` and `count` log-spaced radii up to
/// `max(20/|k| + 20, 2 y*/|k|)`. The weighted error depends on `x` only
/// through `<k,x>` and `|x|`, and for fixed `|x|` is largest along `k`.
///
/// For the zero wavevector the grid runs along the first axis up to 40.
pub fn axis_grid(k: &Wavevector, m: u32, count: usize) -> Vec<Vec<f64>> {
    let n = k.dim();
    let norm = k.norm();
    let (dir, x_max) = match k.direction() {
        Some(d) => (d, (20.0 / norm + 20.0).max(2.0 * stationary_point(norm, m.max(1)) / norm)),
        None => {
            let mut e = vec![0.0; n];
            e[0] = 1.0;
            (e, 40.0)
        }
    };
    let lo = x_max * 1e-8;
    let step = if count > 1 { (x_max / lo).ln() / (count - 1) as f64 } else { 0.0 };
    std::iter::once(0.0)
        .chain((0..count).map(|i| lo * (step * i as f64).exp()))
        .map(|t| dir.iter().map(|d| t * d).collect())
        .collect()
}

fn weighted_gap(x: &[f64], approx: Complex64, k: &Wavevector) -> f64 {
    let r2: f64 = x.iter().map(|v| v * v).sum();
    let exact = Complex64::from_polar(1.0, k.dot(x));
    (-r2).exp() * (approx - exact).norm()
}

fn check_grid(k: &Wavevector, grid: &[Vec<f64>]) -> Result<()> {
    if grid.is_empty() {
        return Err(Error::InvalidArgument("empty sample grid".into()));
    }
    if let Some(x) = grid.iter().find(|x| x.len() != k.dim()) {
        return Err(Error::DimensionMismatch {
            expected: k.dim(),
            got: x.len(),
        });
    }
    Ok(())
}

/// Grid max of `e^{-r^2} |p_m(x) - e^{i<k,x>}|` with `p_m` the truncated
/// exponential polynomial.
pub fn uniform_error(k: &Wavevector, m: u32, grid: &[Vec<f64>]) -> Result<f64> {
    check_grid(k, grid)?;
    if m == 0 {
        return Err(Error::InvalidArgument("m must be at least 1".into()));
    }
    let p = truncated_exponential(k, m);
    grid.iter().try_fold(0.0f64, |acc, x| {
        Ok(acc.max(weighted_gap(x, p.eval_real(x)?, k)))
    })
}

/// Same quantity with `p_m` summed directly as `sum_{a<m} i^a <k,x>^a / a!`.
pub fn uniform_error_taylor(k: &Wavevector, m: u32, grid: &[Vec<f64>]) -> Result<f64> {
    check_grid(k, grid)?;
    if m == 0 {
        return Err(Error::InvalidArgument("m must be at least 1".into()));
    }
    let coeffs: Vec<Complex64> = (0..m)
        .map(|a| {
            let c = unit_power(a);
            let w = 1.0 / factorial(a);
            Complex64::new(c.re * w, c.im * w)
        })
        .collect();
    Ok(grid.iter().fold(0.0f64, |acc, x| {
        let y = k.dot(x);
        let mut p = Complex64::new(0.0, 0.0);
        for (a, c) in coeffs.iter().enumerate() {
            let v = y.powi(a as i32);
            p += Complex64::new(c.re * v, c.im * v);
        }
        acc.max(weighted_gap(x, p, k))
    }))
}
