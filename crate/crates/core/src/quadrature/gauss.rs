//! One-dimensional node/weight sets.

use std::f64::consts::PI;

/// Order of each Gauss-Legendre panel on truncated unbounded directions.
pub const PANEL_ORDER: usize = 16;
/// Widest panel allowed on truncated unbounded directions.
pub const MAX_PANEL_WIDTH: f64 = 1.0;

/// Gauss-Legendre nodes and weights on `[-1, 1]`, by Newton iteration on
/// `P_n` from the Chebyshev-like initial guesses.
pub fn gauss_legendre(n: usize) -> (Vec<f64>, Vec<f64>) {
    assert!(n >= 1);
    let mut nodes = vec![0.0; n];
    let mut weights = vec![0.0; n];
    let nf = n as f64;
    for i in 0..n.div_ceil(2) {
        let mut x = (PI * (i as f64 + 0.75) / (nf + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            let (p, d) = legendre_with_derivative(n, x);
            dp = d;
            let dx = p / d;
            x -= dx;
            if dx.abs() <= 1e-16 * x.abs().max(1.0) {
                break;
            }
        }
        let (_, d) = legendre_with_derivative(n, x);
        if d != 0.0 {
            dp = d;
        }
        let w = 2.0 / ((1.0 - x * x) * dp * dp);
        nodes[i] = -x;
        nodes[n - 1 - i] = x;
        weights[i] = w;
        weights[n - 1 - i] = w;
    }
    if n % 2 == 1 {
        nodes[n / 2] = 0.0;
    }
    (nodes, weights)
}

fn legendre_with_derivative(n: usize, x: f64) -> (f64, f64) {
    let (mut p0, mut p1) = (1.0, x);
    for k in 2..=n {
        let kf = k as f64;
        let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
        p0 = p1;
        p1 = p2;
    }
    let nf = n as f64;
    let d = nf * (x * p1 - p0) / (x * x - 1.0);
    (p1, d)
}

/// Gauss-Legendre rule mapped to `[a, b]`.
pub fn gauss_legendre_on(n: usize, a: f64, b: f64) -> (Vec<f64>, Vec<f64>) {
    let (x, w) = gauss_legendre(n);
    let half = 0.5 * (b - a);
    let mid = 0.5 * (a + b);
    (
        x.iter().map(|t| mid + half * t).collect(),
        w.iter().map(|v| v * half).collect(),
    )
}

/// `panels` equal Gauss-Legendre panels of order `order` on `[a, b]`.
pub fn composite_gauss_legendre(order: usize, panels: usize, a: f64, b: f64) -> (Vec<f64>, Vec<f64>) {
    let (x, w) = gauss_legendre(order);
    let h = (b - a) / panels as f64;
    let mut nodes = Vec::with_capacity(order * panels);
    let mut weights = Vec::with_capacity(order * panels);
    for p in 0..panels {
        let lo = a + h * p as f64;
        for (t, v) in x.iter().zip(&w) {
            nodes.push(lo + 0.5 * h * (t + 1.0));
            weights.push(0.5 * h * v);
        }
    }
    (nodes, weights)
}

/// Panel count so that no panel on `[a, b]` is wider than [`MAX_PANEL_WIDTH`]
/// and the total is at least `min_nodes`.
pub fn panels_for(a: f64, b: f64, min_nodes: usize) -> usize {
    let by_width = ((b - a) / MAX_PANEL_WIDTH).ceil() as usize;
    by_width.max(min_nodes.div_ceil(PANEL_ORDER)).max(1)
}

/// Uniform (periodic trapezoidal) rule on `[lo, hi)`.
pub fn periodic_trapezoid(n: usize, lo: f64, hi: f64) -> (Vec<f64>, Vec<f64>) {
    let h = (hi - lo) / n as f64;
    ((0..n).map(|i| lo + h * i as f64).collect(), vec![h; n])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn weights_sum_to_two() {
        for n in [1, 2, 5, 16, 48, 100] {
            let (_, w) = gauss_legendre(n);
            let s: f64 = w.iter().sum();
            assert!((s - 2.0).abs() < 1e-13, "n={n}: {s}");
        }
    }

    #[test]
    fn polynomial_exactness() {
        // 20 nodes integrate x^4 over [-1, 1] exactly
        let (x, w) = gauss_legendre(20);
        let v: f64 = x.iter().zip(&w).map(|(x, w)| w * x.powi(4)).sum();
        assert!((v - 0.4).abs() < 1e-14);
        // degree 2n-1 = 9 for n = 5, odd/even mix
        let (x, w) = gauss_legendre_on(5, 0.0, 2.0);
        let v: f64 = x.iter().zip(&w).map(|(x, w)| w * (x.powi(9) + x.powi(8))).sum();
        let exact = 2f64.powi(10) / 10.0 + 2f64.powi(9) / 9.0;
        assert!((v / exact - 1.0).abs() < 1e-14);
    }

    #[test]
    fn nodes_symmetric_and_sorted() {
        let (x, _) = gauss_legendre(7);
        assert!(x.windows(2).all(|w| w[0] < w[1]));
        for i in 0..7 {
            assert!((x[i] + x[6 - i]).abs() < 1e-15);
        }
    }

    #[test]
    fn trapezoid_kills_fourier_modes() {
        let (u, w) = periodic_trapezoid(16, 0.0, 2.0 * PI);
        let v: f64 = u.iter().zip(&w).map(|(u, w)| w * (3.0 * u).cos()).sum();
        assert!(v.abs() < 1e-14);
        let one: f64 = w.iter().sum();
        assert!((one - 2.0 * PI).abs() < 1e-14);
    }

    #[test]
    fn composite_covers_interval() {
        let (x, w) = composite_gauss_legendre(16, 7, -3.0, 4.0);
        assert_eq!(x.len(), 112);
        let s: f64 = w.iter().sum();
        assert!((s - 7.0).abs() < 1e-13);
        assert!(x.iter().all(|&t| t > -3.0 && t < 4.0));
    }
}
