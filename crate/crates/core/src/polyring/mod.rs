//! Sparse multivariate polynomials over `f64` and `Complex64`.
//!
//! Polynomials are stored canonically: a map from [`Monomial`] to a nonzero
//! coefficient. Only exact zeros are pruned, so ring identities hold exactly
//! whenever the coefficient arithmetic is exact (e.g. small integers).

mod expo;
mod monomial;
mod poly;
mod text;

pub use expo::{truncated_exponential, unit_power, Wavevector};
pub use monomial::{monomials_up_to_degree, Monomial};
pub use poly::{ComplexPoly, MultiPoly, RealPoly, Scalar};
pub use text::{parse_complex_poly, parse_real_poly};
