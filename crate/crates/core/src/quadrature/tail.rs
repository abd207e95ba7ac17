//! Error budget for truncating `∫_M r^m e^{-r^2} dμ` at radius `R`.
//!
//! Splitting `M` into shells `B_{j+1} - B_j` and using `vol(M ∩ B_r) <= C r^l`,
//! everything outside `B_R` contributes at most
//! `C * sum_{j >= floor(R)} (j+1)^{m+l} e^{-j^2}`.

use crate::error::{Error, Result};
use crate::variety::GrowthEstimate;

/// Terms below this are dropped once the series is past its peak.
const TERM_FLOOR: f64 = 1e-300;
const MAX_RADIUS: u32 = 100_000;

#[derive(Clone, Debug, PartialEq)]
pub struct TailBudget {
    pub m: u32,
    pub l: u32,
    pub c: f64,
    pub radius: f64,
    /// The `c` of the weight `e^{-c r^2}` (1 for the Gaussian measure).
    pub decay: f64,
    pub bound: f64,
}

/// Tail of `C sum (j+1)^{m+l} e^{-j^2}` from `floor(R)` on.
pub fn tail_budget(c: f64, l: u32, m: u32, radius: f64) -> TailBudget {
    tail_budget_with_decay(c, l, m, radius, 1.0)
}

/// Same series with weight `e^{-decay j^2}`.
pub fn tail_budget_with_decay(c: f64, l: u32, m: u32, radius: f64, decay: f64) -> TailBudget {
    assert!(c > 0.0 && radius >= 1.0 && decay > 0.0, "tail budget needs C > 0, R >= 1");
    let p = (m + l) as f64;
    // the summand peaks near j + 1 = sqrt(p / (2 decay))
    let peak = (p / (2.0 * decay)).sqrt();
    let mut j = radius.floor();
    let mut total = 0.0;
    loop {
        let term = c * (p * (j + 1.0).ln() - decay * j * j).exp();
        total += term;
        if term < TERM_FLOOR && j > peak {
            break;
        }
        j += 1.0;
    }
    TailBudget {
        m,
        l,
        c,
        radius,
        decay,
        bound: total,
    }
}

/// Smallest integer `R >= 2` whose tail budget is at most `eps`.
pub fn choose_truncation(growth: Option<&GrowthEstimate>, m_max: u32, eps: f64) -> Result<f64> {
    choose_truncation_with_decay(growth, m_max, eps, 1.0)
}

pub fn choose_truncation_with_decay(
    growth: Option<&GrowthEstimate>,
    m_max: u32,
    eps: f64,
    decay: f64,
) -> Result<f64> {
    let growth = growth.ok_or(Error::MissingGrowth)?;
    if !(eps > 0.0) {
        return Err(Error::InvalidArgument(format!("eps must be positive, got {eps}")));
    }
    for r in 2..MAX_RADIUS {
        let b = tail_budget_with_decay(growth.c, growth.l, m_max, r as f64, decay);
        if b.bound <= eps {
            return Ok(r as f64);
        }
    }
    Err(Error::InvalidArgument(format!("no radius below {MAX_RADIUS} meets eps = {eps}")))
}
