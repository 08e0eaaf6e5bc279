//! Exact coefficient tower: rationals, dense polynomials over Q, truncated
//! power series, rational functions, fraction-free linear algebra, Sturm
//! chains and modular distinct-degree factorization.

mod coeff;
pub mod linalg;
pub mod modp;
pub mod mpoly;
mod poly;
mod ratfunc;
mod rational;
mod series;
pub mod sturm;

pub use coeff::{upoly, Coeff};
pub use poly::{chebyshev_t, chebyshev_u, Poly};
pub use ratfunc::RatFunc;
pub use rational::{parse_rational, rat, rint, simplest_between, Rational};
pub use series::Series;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("division by the zero polynomial")]
    DivisionByZeroPoly,
    #[error("series with non-unit constant term is not invertible")]
    NonUnitInverse,
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("zero polynomial")]
    ZeroPolynomial,
    #[error("bad reduction prime {0}")]
    BadReductionPrime(u64),
    #[error("rational function has a pole at {0}")]
    PoleAt(String),
    #[error("cannot parse rational {0:?}")]
    ParseRational(String),
    #[error("series composition needs an inner series without constant term")]
    NonNilpotentInner,
}
