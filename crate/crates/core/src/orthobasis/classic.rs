use super::gram::{gram_matrix, gram_matrix_weighted, orthonormalize, DEFAULT_RANK_TOL};
use crate::error::{Error, Result};
use crate::polyring::Monomial;
use crate::quadrature::{build_rule, choose_truncation, default_nodes, Weight};
use crate::variety::{chart_euclidean, chart_euclidean_box, default_growth_radii, estimate_growth};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ClassicKind {
    /// `R` with `e^{-x^2} dx`.
    Hermite,
    /// `[-1, 1]` with `dx`.
    Legendre,
}

#[derive(Clone, Debug)]
pub struct RecoveryReport {
    pub kind: ClassicKind,
    pub degree: u32,
    /// Ascending-power coefficients of each computed basis element.
    pub computed: Vec<Vec<f64>>,
    pub classical: Vec<Vec<f64>>,
    /// Max relative error over the classical nonzero coefficients.
    pub max_rel_error: f64,
    /// Max `|c|` where the classical coefficient vanishes, relative to the
    /// element's largest coefficient.
    pub max_zero_violation: f64,
}

impl RecoveryReport {
    pub fn passes(&self, tol: f64) -> bool {
        self.computed.len() == self.classical.len()
            && self.max_rel_error <= tol
            && self.max_zero_violation <= tol
    }
}

/// Orthonormal Hermite or Legendre polynomials of degree `0..=n`, as
/// ascending coefficient vectors with positive leading coefficient.
pub fn classical_family(kind: ClassicKind, n: u32) -> Vec<Vec<f64>> {
    let n = n as usize;
    let mut raw: Vec<Vec<f64>> = vec![vec![1.0]];
    if n >= 1 {
        raw.push(match kind {
            ClassicKind::Hermite => vec![0.0, 2.0],
            ClassicKind::Legendre => vec![0.0, 1.0],
        });
    }
    for k in 1..n {
        let kf = k as f64;
        let mut next = vec![0.0; k + 2];
        for (i, &c) in raw[k].iter().enumerate() {
            next[i + 1] += match kind {
                ClassicKind::Hermite => 2.0 * c,
                ClassicKind::Legendre => (2.0 * kf + 1.0) * c / (kf + 1.0),
            };
        }
        for (i, &c) in raw[k - 1].iter().enumerate() {
            next[i] -= match kind {
                ClassicKind::Hermite => 2.0 * kf * c,
                ClassicKind::Legendre => kf * c / (kf + 1.0),
            };
        }
        raw.push(next);
    }
    raw.into_iter()
        .enumerate()
        .map(|(k, p)| {
            let norm = match kind {
                ClassicKind::Hermite => {
                    let fact: f64 = (1..=k).map(|i| i as f64).product();
                    (2f64.powi(k as i32) * fact * std::f64::consts::PI.sqrt()).sqrt()
                }
                ClassicKind::Legendre => (2.0 / (2.0 * k as f64 + 1.0)).sqrt(),
            };
            p.into_iter().map(|c| c / norm).collect()
        })
        .collect()
}

/// Runs the Gram pipeline on the line (Gaussian weight) or on `[-1, 1]`
/// (unweighted) and compares with the classical families.
pub fn classic_recovery(kind: ClassicKind, degree: u32) -> Result<RecoveryReport> {
    if degree == 0 {
        return Err(Error::InvalidArgument("degree must be at least 1".into()));
    }
    let gb = match kind {
        ClassicKind::Hermite => {
            let chart = chart_euclidean(1);
            let growth = estimate_growth(&chart, &default_growth_radii())?;
            let radius = choose_truncation(Some(&growth), 2 * degree, 1e-15)?;
            let rule = build_rule(&chart, radius, &default_nodes(&chart))?;
            gram_matrix(&chart, degree, &rule)?
        }
        ClassicKind::Legendre => {
            let chart = chart_euclidean_box(1, -1.0, 1.0)?;
            let rule = build_rule(&chart, 1.0, &default_nodes(&chart))?;
            gram_matrix_weighted(&chart, degree, &rule, Weight::None)?
        }
    };
    let gb = orthonormalize(&gb, DEFAULT_RANK_TOL)?;
    let computed: Vec<Vec<f64>> = (0..gb.rank)
        .map(|r| {
            let p = gb.element(r);
            let mut c: Vec<f64> = (0..=degree)
                .map(|e| p.coeff(&Monomial::new(vec![e])))
                .collect();
            let lead = c.iter().rev().find(|v| **v != 0.0).copied().unwrap_or(1.0);
            if lead < 0.0 {
                c.iter_mut().for_each(|v| *v = -*v);
            }
            c
        })
        .collect();
    let classical = classical_family(kind, degree);
    let mut max_rel_error: f64 = 0.0;
    let mut max_zero_violation: f64 = 0.0;
    for (got, want) in computed.iter().zip(&classical) {
        let scale = want.iter().fold(0.0f64, |a, v| a.max(v.abs()));
        for (e, g) in got.iter().enumerate() {
            let w = want.get(e).copied().unwrap_or(0.0);
            if w == 0.0 {
                max_zero_violation = max_zero_violation.max(g.abs() / scale);
            } else {
                max_rel_error = max_rel_error.max((g - w).abs() / w.abs());
            }
        }
    }
    Ok(RecoveryReport {
        kind,
        degree,
        computed,
        classical,
        max_rel_error,
        max_zero_violation,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn families_start_right() {
        let h = classical_family(ClassicKind::Hermite, 2);
        let pi4 = std::f64::consts::PI.powf(0.25);
        assert!((h[0][0] - 1.0 / pi4).abs() < 1e-15);
        // H_2 = 4x^2 - 2 over sqrt(8 sqrt(pi))
        let n2 = (8.0 * std::f64::consts::PI.sqrt()).sqrt();
        assert!((h[2][2] - 4.0 / n2).abs() < 1e-14);
        assert!((h[2][0] + 2.0 / n2).abs() < 1e-14);
        let p = classical_family(ClassicKind::Legendre, 2);
        // P_2 = (3x^2 - 1)/2, norm sqrt(2/5)
        assert!((p[2][2] - 1.5 / (0.4f64).sqrt()).abs() < 1e-14);
    }

    #[test]
    fn hermite_recovered() {
        let r = classic_recovery(ClassicKind::Hermite, 6).unwrap();
        assert!(r.passes(1e-6), "{r:?}");
    }

    #[test]
    fn legendre_recovered() {
        let r = classic_recovery(ClassicKind::Legendre, 6).unwrap();
        assert!(r.passes(1e-6), "{r:?}");
    }
}
