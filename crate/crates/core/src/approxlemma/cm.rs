use statrs::function::gamma::ln_gamma;

use crate::csvout::{CsvTable, Field};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CmRecord {
    pub k: f64,
    pub m: u32,
    pub cm_closed: f64,
    pub cm_brute: f64,
    pub cstar: f64,
}

fn check(k: f64, m: u32) -> Result<()> {
    if !(k > 0.0) || !k.is_finite() {
        return Err(Error::InvalidArgument(format!("k must be positive, got {k}")));
    }
    if m == 0 {
        return Err(Error::InvalidArgument("m must be at least 1".into()));
    }
    Ok(())
}

/// The maximizer `k^2/4 + (k/4) sqrt(k^2 + 8m)` of `y^m e^{y - y^2/k^2}`.
pub fn stationary_point(k: f64, m: u32) -> f64 {
    k * k / 4.0 + k / 4.0 * (k * k + 8.0 * m as f64).sqrt()
}

fn ln_fact(m: u32) -> f64 {
    ln_gamma(m as f64 + 1.0)
}

/// `ln C_m` from the closed form.
pub fn ln_cm_closed_form(k: f64, m: u32) -> Result<f64> {
    check(k, m)?;
    let s = stationary_point(k, m);
    Ok(m as f64 * s.ln() - ln_fact(m) + s - s * s / (k * k))
}

/// `C_m`; underflows to 0 for large `m`, which is the true limit.
pub fn cm_closed_form(k: f64, m: u32) -> Result<f64> {
    ln_cm_closed_form(k, m).map(f64::exp)
}

#[derive(Clone, Copy, Debug)]
pub struct BruteMax {
    /// Root of `g'(y) = 0` from the quadratic.
    pub y_star: f64,
    /// Maximizer found by grid bracketing and golden-section search.
    pub y_search: f64,
    /// `max g` from the search.
    pub ln_value: f64,
}

/// Maximizes `g(y) = m ln y - ln m! + y - y^2/k^2` numerically: a log-spaced
/// grid brackets the maximum, golden-section search refines it. `g` is
/// strictly concave, so the bracket holds the unique maximum.
pub fn maximize_log_term(k: f64, m: u32) -> Result<BruteMax> {
    check(k, m)?;
    let mf = m as f64;
    let lf = ln_fact(m);
    let g = |y: f64| mf * y.ln() - lf + y - y * y / (k * k);
    let y_star = {
        let k2 = k * k;
        k2 / 4.0 * (1.0 + (1.0 + 8.0 * mf / k2).sqrt())
    };
    const GRID: usize = 4000;
    let lo: f64 = 1e-8;
    let hi: f64 = 4.0 * (k * k + k * mf.sqrt() + 1.0);
    let ratio = (hi / lo).ln() / (GRID - 1) as f64;
    let ys: Vec<f64> = (0..GRID).map(|i| lo * (ratio * i as f64).exp()).collect();
    let best = (0..GRID)
        .max_by(|&a, &b| g(ys[a]).total_cmp(&g(ys[b])))
        .expect("grid is not empty");
    let (mut a, mut b) = (ys[best.saturating_sub(1)], ys[(best + 1).min(GRID - 1)]);
    let phi = (5f64.sqrt() - 1.0) / 2.0;
    let mut c = b - phi * (b - a);
    let mut d = a + phi * (b - a);
    let (mut gc, mut gd) = (g(c), g(d));
    for _ in 0..200 {
        if (b - a) <= 1e-15 * b {
            break;
        }
        if gc >= gd {
            b = d;
            d = c;
            gd = gc;
            c = b - phi * (b - a);
            gc = g(c);
        } else {
            a = c;
            c = d;
            gc = gd;
            d = a + phi * (b - a);
            gd = g(d);
        }
    }
    let y_search = 0.5 * (a + b);
    Ok(BruteMax {
        y_star,
        y_search,
        ln_value: g(y_search).max(gc).max(gd),
    })
}

/// `C_m` by numerical maximization, independent of the closed form.
pub fn cm_brute(k: f64, m: u32) -> Result<f64> {
    maximize_log_term(k, m).map(|b| b.ln_value.exp())
}

/// Asymptotic exponent
/// `m ln s + (k/(2 sqrt 2)) sqrt m + m/2 - m ln m - (1/2) ln m`, with `s` the
/// stationary point.
pub fn cstar(k: f64, m: u32) -> Result<f64> {
    check(k, m)?;
    let mf = m as f64;
    let s = stationary_point(k, m);
    Ok(mf * s.ln() + k / (2.0 * 2f64.sqrt()) * mf.sqrt() + mf / 2.0 - mf * mf.ln() - 0.5 * mf.ln())
}

/// `ln s - (1/2) ln m`; stays bounded as `m` grows.
pub fn log_gap(k: f64, m: u32) -> Result<f64> {
    check(k, m)?;
    Ok(stationary_point(k, m).ln() - 0.5 * (m as f64).ln())
}

pub fn cm_record(k: f64, m: u32) -> Result<CmRecord> {
    Ok(CmRecord {
        k,
        m,
        cm_closed: cm_closed_form(k, m)?,
        cm_brute: cm_brute(k, m)?,
        cstar: cstar(k, m)?,
    })
}

/// Records for `m = 1..=m_max`.
pub fn cm_sequence(k: f64, m_max: u32) -> Result<Vec<CmRecord>> {
    (1..=m_max).map(|m| cm_record(k, m)).collect()
}

/// CSV `k,m,cm_closed,cm_brute,cstar`.
pub fn cm_csv(records: &[CmRecord]) -> CsvTable {
    let mut t = CsvTable::new(&["k", "m", "cm_closed", "cm_brute", "cstar"]);
    for r in records {
        t.row(&[
            Field::F(r.k),
            Field::I(r.m as i64),
            Field::F(r.cm_closed),
            Field::F(r.cm_brute),
            Field::F(r.cstar),
        ]);
    }
    t
}
