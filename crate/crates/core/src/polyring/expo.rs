use num_complex::Complex64;

use super::monomial::monomials_up_to_degree;
use super::poly::{ComplexPoly, MultiPoly};

/// A fixed vector `k` in R^n, the frequency of the plane wave `e^{i<k,x>}`.
#[derive(Clone, Debug, PartialEq)]
pub struct Wavevector {
    components: Vec<f64>,
}

impl Wavevector {
    pub fn new(components: Vec<f64>) -> Self {
        assert!(!components.is_empty(), "wavevector needs at least one component");
        Wavevector { components }
    }

    pub fn components(&self) -> &[f64] {
        &self.components
    }

    pub fn dim(&self) -> usize {
        self.components.len()
    }

    pub fn norm(&self) -> f64 {
        self.components.iter().map(|k| k * k).sum::<f64>().sqrt()
    }

    pub fn dot(&self, x: &[f64]) -> f64 {
        self.components.iter().zip(x).map(|(k, xi)| k * xi).sum()
    }

    /// Unit vector along `k`; `None` for the zero vector.
    pub fn direction(&self) -> Option<Vec<f64>> {
        let n = self.norm();
        (n > 0.0).then(|| self.components.iter().map(|k| k / n).collect())
    }
}

/// `i^alpha`, exactly.
pub fn unit_power(alpha: u32) -> Complex64 {
    match alpha % 4 {
        0 => Complex64::new(1.0, 0.0),
        1 => Complex64::new(0.0, 1.0),
        2 => Complex64::new(-1.0, 0.0),
        _ => Complex64::new(0.0, -1.0),
    }
}

pub(crate) fn factorial(n: u32) -> f64 {
    (1..=n).fold(1.0, |acc, j| acc * j as f64)
}

/// Taylor partial sum `p_m(x) = sum_{a<m} i^a <k,x>^a / a!` of `e^{i<k,x>}`.
///
/// The power `<k,x>^a / a!` is expanded as `sum_{|e|=a} prod_j k_j^{e_j}/e_j! x^e`,
/// which keeps coefficients free of large multinomials.
pub fn truncated_exponential(k: &Wavevector, m: u32) -> ComplexPoly {
    assert!(m >= 1, "truncated exponential needs m >= 1");
    let n = k.dim();
    let terms = monomials_up_to_degree(n, m - 1).into_iter().map(|mono| {
        let weight = mono
            .exponents()
            .iter()
            .zip(k.components())
            .fold(1.0, |acc, (&e, &kj)| acc * (kj.powi(e as i32) / factorial(e)));
        let c = unit_power(mono.degree());
        (mono, Complex64::new(c.re * weight, c.im * weight))
    });
    MultiPoly::from_terms(n, terms).expect("monomials built with the wavevector's arity")
}
