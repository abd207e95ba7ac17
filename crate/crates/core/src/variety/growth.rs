use super::chart::VarietyChart;
use crate::error::{Error, Result};
use crate::quadrature::{integrate_shell, Weight};

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct GrowthSample {
    pub r: f64,
    pub volume: f64,
}

/// Empirical polynomial volume growth `vol(M ∩ B_r) <= C r^l`.
#[derive(Clone, Debug, PartialEq)]
pub struct GrowthEstimate {
    pub c: f64,
    pub l: u32,
    pub fit_range: (f64, f64),
    pub samples: Vec<GrowthSample>,
    /// Least-squares slope of `log vol` against `log r`.
    pub slope: f64,
    /// Slope between the two largest radii.
    pub tail_slope: f64,
}

impl GrowthEstimate {
    /// Local log-log slope at each sample (backward difference; the first
    /// sample uses the forward one). `None` where a volume is zero.
    pub fn local_slopes(&self) -> Vec<Option<f64>> {
        let s = &self.samples;
        (0..s.len())
            .map(|i| {
                let (a, b) = if i == 0 { (0, 1) } else { (i - 1, i) };
                log_slope(s[a], s[b])
            })
            .collect()
    }
}

fn log_slope(a: GrowthSample, b: GrowthSample) -> Option<f64> {
    (a.volume > 0.0 && b.volume > 0.0)
        .then(|| (b.volume.ln() - a.volume.ln()) / (b.r.ln() - a.r.ln()))
}

/// `vol(M ∩ B_r)`.
pub fn ball_volume(chart: &VarietyChart, r: f64) -> Result<f64> {
    integrate_shell(chart, |_| 1.0, Weight::None, 0.0, r)
}

/// Measures `vol(M ∩ B_r)` at each radius and fits the least `C` with
/// `l = d` (the intrinsic dimension) so that `vol <= C r^l` on every sample.
///
/// Fails if the measured log-log slope exceeds `d + 1/2`.
pub fn estimate_growth(chart: &VarietyChart, radii: &[f64]) -> Result<GrowthEstimate> {
    if radii.len() < 4 {
        return Err(Error::InvalidArgument("growth fit needs at least 4 radii".into()));
    }
    if radii.iter().any(|&r| !(r > 0.0)) || radii.windows(2).any(|w| w[1] <= w[0]) {
        return Err(Error::InvalidArgument("radii must be positive and increasing".into()));
    }
    let l = chart.intrinsic_dim() as u32;
    let samples = radii
        .iter()
        .map(|&r| {
            let volume = ball_volume(chart, r)?;
            if !volume.is_finite() {
                return Err(Error::NonFinite {
                    node: vec![r],
                    value: volume,
                });
            }
            Ok(GrowthSample { r, volume })
        })
        .collect::<Result<Vec<_>>>()?;
    let c = samples
        .iter()
        .map(|s| s.volume / s.r.powi(l as i32))
        .fold(f64::MIN_POSITIVE, f64::max);

    let pts: Vec<(f64, f64)> = samples
        .iter()
        .filter(|s| s.volume > 0.0)
        .map(|s| (s.r.ln(), s.volume.ln()))
        .collect();
    let slope = least_squares_slope(&pts);
    let n = samples.len();
    let tail_slope = log_slope(samples[n - 2], samples[n - 1]).unwrap_or(0.0);
    let limit = l as f64 + 0.5;
    if slope > limit {
        return Err(Error::GrowthTooFast { slope, limit });
    }
    Ok(GrowthEstimate {
        c,
        l,
        fit_range: (radii[0], radii[n - 1]),
        samples,
        slope,
        tail_slope,
    })
}

/// Log-spaced radii `2 .. 32`, used when no radii are given.
pub fn default_growth_radii() -> Vec<f64> {
    (0..9).map(|i| 2.0 * 2f64.powf(i as f64 / 2.0)).collect()
}

fn least_squares_slope(pts: &[(f64, f64)]) -> f64 {
    if pts.len() < 2 {
        return 0.0;
    }
    let n = pts.len() as f64;
    let mx = pts.iter().map(|p| p.0).sum::<f64>() / n;
    let my = pts.iter().map(|p| p.1).sum::<f64>() / n;
    let sxy: f64 = pts.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    let sxx: f64 = pts.iter().map(|p| (p.0 - mx).powi(2)).sum();
    sxy / sxx
}
