use std::collections::BTreeMap;
use std::fmt::Debug;

use num_complex::Complex64;
use num_traits::{One, Zero};

use super::monomial::Monomial;
use crate::error::{Error, Result};

/// Coefficient field of a [`MultiPoly`]: `f64` or `Complex64`.
pub trait Scalar:
    Copy
    + Debug
    + PartialEq
    + Zero
    + One
    + std::ops::Add<Output = Self>
    + std::ops::Sub<Output = Self>
    + std::ops::Mul<Output = Self>
    + std::ops::Neg<Output = Self>
    + Send
    + Sync
    + 'static
{
    fn from_real(x: f64) -> Self;
    fn scale(self, s: f64) -> Self;
    fn powi(self, e: i32) -> Self;
    fn to_complex(self) -> Complex64;
}

impl Scalar for f64 {
    fn from_real(x: f64) -> Self {
        x
    }
    fn scale(self, s: f64) -> Self {
        self * s
    }
    fn powi(self, e: i32) -> Self {
        f64::powi(self, e)
    }
    fn to_complex(self) -> Complex64 {
        Complex64::new(self, 0.0)
    }
}

impl Scalar for Complex64 {
    fn from_real(x: f64) -> Self {
        Complex64::new(x, 0.0)
    }
    fn scale(self, s: f64) -> Self {
        Complex64::new(self.re * s, self.im * s)
    }
    fn powi(self, e: i32) -> Self {
        Complex64::powi(&self, e)
    }
    fn to_complex(self) -> Complex64 {
        self
    }
}

/// Sparse polynomial in `ambient_dim` variables.
#[derive(Clone, Debug, PartialEq)]
pub struct MultiPoly<S: Scalar> {
    terms: BTreeMap<Monomial, S>,
    ambient_dim: usize,
}

pub type RealPoly = MultiPoly<f64>;
pub type ComplexPoly = MultiPoly<Complex64>;

impl<S: Scalar> MultiPoly<S> {
    pub fn zero(ambient_dim: usize) -> Self {
        assert!(ambient_dim >= 1, "ambient dimension must be positive");
        MultiPoly {
            terms: BTreeMap::new(),
            ambient_dim,
        }
    }

    pub fn constant(ambient_dim: usize, c: S) -> Self {
        Self::from_terms(ambient_dim, [(Monomial::one(ambient_dim), c)])
            .expect("constant monomial has the right arity")
    }

    /// The coordinate function `x_var` (0-based).
    pub fn var(ambient_dim: usize, var: usize) -> Self {
        assert!(var < ambient_dim, "variable index out of range");
        Self::from_terms(ambient_dim, [(Monomial::var(ambient_dim, var), S::one())])
            .expect("coordinate monomial has the right arity")
    }

    pub fn monomial(m: Monomial, c: S) -> Self {
        let n = m.n_vars();
        Self::from_terms(n, [(m, c)]).expect("arity taken from the monomial")
    }

    /// Sums the given terms; repeated monomials accumulate.
    pub fn from_terms<I>(ambient_dim: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Monomial, S)>,
    {
        let mut p = Self::zero(ambient_dim);
        for (m, c) in terms {
            if m.n_vars() != ambient_dim {
                return Err(Error::DimensionMismatch {
                    expected: ambient_dim,
                    got: m.n_vars(),
                });
            }
            p.add_term(m, c);
        }
        Ok(p)
    }

    fn add_term(&mut self, m: Monomial, c: S) {
        if c == S::zero() {
            return;
        }
        let entry = self.terms.entry(m);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = *o.get() + c;
                if sum == S::zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn n_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in graded lexicographic order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &S)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> S {
        self.terms.get(m).copied().unwrap_or_else(S::zero)
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    fn check_dim(&self, other: &Self) -> Result<()> {
        if self.ambient_dim != other.ambient_dim {
            return Err(Error::DimensionMismatch {
                expected: self.ambient_dim,
                got: other.ambient_dim,
            });
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_dim(other)?;
        let mut out = self.clone();
        for (m, &c) in &other.terms {
            out.add_term(m.clone(), c);
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.try_add(&other.neg())
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_dim(other)?;
        let mut out = Self::zero(self.ambient_dim);
        for (ma, &ca) in &self.terms {
            for (mb, &cb) in &other.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: S) -> Self {
        let mut out = Self::zero(self.ambient_dim);
        for (m, &a) in &self.terms {
            out.add_term(m.clone(), a * c);
        }
        out
    }

    pub fn neg(&self) -> Self {
        MultiPoly {
            terms: self.terms.iter().map(|(m, &c)| (m.clone(), -c)).collect(),
            ambient_dim: self.ambient_dim,
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut out = Self::constant(self.ambient_dim, S::one());
        for _ in 0..e {
            out = out.try_mul(self).expect("same arity");
        }
        out
    }

    /// Partial derivative with respect to `x_var` (0-based).
    pub fn derivative(&self, var: usize) -> Self {
        assert!(var < self.ambient_dim, "variable index out of range");
        let mut out = Self::zero(self.ambient_dim);
        for (m, &c) in &self.terms {
            let e = m.exponents()[var];
            if e == 0 {
                continue;
            }
            let mut exps = m.exponents().to_vec();
            exps[var] -= 1;
            out.add_term(Monomial::new(exps), c.scale(e as f64));
        }
        out
    }

    fn check_point_len(&self, len: usize) -> Result<()> {
        if len != self.ambient_dim {
            return Err(Error::DimensionMismatch {
                expected: self.ambient_dim,
                got: len,
            });
        }
        Ok(())
    }

    /// Evaluates at a point with coordinates in the coefficient field.
    pub fn eval(&self, x: &[S]) -> Result<S> {
        self.check_point_len(x.len())?;
        let mut acc = S::zero();
        for (m, &c) in &self.terms {
            let v = m
                .exponents()
                .iter()
                .zip(x)
                .fold(S::one(), |a, (&e, &xi)| a * xi.powi(e as i32));
            acc = acc + c * v;
        }
        Ok(acc)
    }

    /// Evaluates at a real point; monomials are formed in `f64` and scale the
    /// coefficients.
    pub fn eval_real(&self, x: &[f64]) -> Result<S> {
        self.check_point_len(x.len())?;
        Ok(self.eval_real_unchecked(x))
    }

    pub(crate) fn eval_real_unchecked(&self, x: &[f64]) -> S {
        let mut acc = S::zero();
        for (m, &c) in &self.terms {
            acc = acc + c.scale(m.eval_real(x));
        }
        acc
    }

    /// Univariate evaluation at a complex argument, `sum c_e z^e`.
    pub(crate) fn eval_complex_unchecked(&self, z: Complex64) -> Complex64 {
        let mut acc = Complex64::zero();
        for (m, &c) in &self.terms {
            acc += c.to_complex() * z.powi(m.exponents()[0] as i32);
        }
        acc
    }

    /// Evaluates at a complex point.
    pub fn eval_complex(&self, z: &[Complex64]) -> Result<Complex64> {
        self.check_point_len(z.len())?;
        let mut acc = Complex64::zero();
        for (m, &c) in &self.terms {
            let v = m
                .exponents()
                .iter()
                .zip(z)
                .fold(Complex64::one(), |a, (&e, &zi)| a * zi.powi(e as i32));
            acc += c.to_complex() * v;
        }
        Ok(acc)
    }

    /// Variables that actually occur.
    pub fn used_vars(&self) -> Vec<usize> {
        (0..self.ambient_dim)
            .filter(|&i| self.terms.keys().any(|m| m.exponents()[i] > 0))
            .collect()
    }

    /// Re-embeds a polynomial that only uses `x1` into one variable.
    pub fn to_univariate(&self) -> Result<Self> {
        if self.used_vars().iter().any(|&v| v != 0) {
            return Err(Error::InvalidArgument(
                "polynomial is not univariate in x1".into(),
            ));
        }
        Ok(MultiPoly {
            terms: self
                .terms
                .iter()
                .map(|(m, &c)| (Monomial::new(vec![m.exponents()[0]]), c))
                .collect(),
            ambient_dim: 1,
        })
    }
}

impl RealPoly {
    pub fn to_complex(&self) -> ComplexPoly {
        MultiPoly {
            terms: self
                .terms
                .iter()
                .map(|(m, &c)| (m.clone(), Complex64::new(c, 0.0)))
                .collect(),
            ambient_dim: self.ambient_dim,
        }
    }
}
