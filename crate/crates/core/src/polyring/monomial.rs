use std::cmp::Ordering;
use std::fmt;

/// Exponent vector of a monomial in `n` variables.
///
/// Ordered graded-lexicographically: lower total degree first, and within a
/// degree the larger leading exponent first, so `x^2 < x*y < y^2`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Monomial(exponents)
    }

    pub fn one(n: usize) -> Self {
        Monomial(vec![0; n])
    }

    /// The monomial `x_var`.
    pub fn var(n: usize, var: usize) -> Self {
        let mut e = vec![0; n];
        e[var] = 1;
        Monomial(e)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn n_vars(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.0.len(), other.0.len());
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// Value at a real point, `prod x_i^{e_i}`.
    pub fn eval_real(&self, x: &[f64]) -> f64 {
        self.0
            .iter()
            .zip(x)
            .fold(1.0, |acc, (&e, &xi)| acc * xi.powi(e as i32))
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| other.0.cmp(&self.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for (i, &e) in self.0.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            write!(f, "x{}", i + 1)?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

/// All monomials in `n` variables of total degree at most `max_degree`, in
/// graded lexicographic order. There are `C(n + D, D)` of them.
pub fn monomials_up_to_degree(n: usize, max_degree: u32) -> Vec<Monomial> {
    assert!(n >= 1, "monomials need at least one variable");
    let mut out = Vec::new();
    for d in 0..=max_degree {
        let mut current = vec![0u32; n];
        push_degree(&mut out, &mut current, 0, d);
    }
    out
}

// Fills exponents for positions pos.. with total `remaining`, largest leading
// exponent first (the in-degree order of `Monomial`).
fn push_degree(out: &mut Vec<Monomial>, current: &mut [u32], pos: usize, remaining: u32) {
    if pos == current.len() - 1 {
        current[pos] = remaining;
        out.push(Monomial(current.to_vec()));
        return;
    }
    for e in (0..=remaining).rev() {
        current[pos] = e;
        push_degree(out, current, pos + 1, remaining - e);
    }
    current[pos] = 0;
}
