// `!(x > 0.0)` is used on purpose throughout: it also rejects NaN.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod approxlemma;
pub mod cli;
pub mod csvout;
pub mod error;
pub mod orthobasis;
pub mod polyring;
pub mod quadrature;
pub mod variety;

pub use error::{Error, Result};
