//! The explicit family: degenerate covers, the deformation system, the
//! power-series lift, normalization and algebraization in the parameter `T`.

mod degenerate;
pub mod latex;
pub mod lift;
mod model;
mod normalize;
mod reconstruct;
pub mod reference;
pub mod system;
mod verify;

pub use degenerate::{chebyshev_degenerate, pade_degenerate, ChebyshevCover, PadeCover};
pub use lift::{initial_point, newton_lift, DeformationState, NewtonStep};
pub use system::Layout;
pub use model::{initial_coefficients, CoverModel, NormalizedModel};
pub use normalize::{normalize, NormalizationReport};
pub use verify::{lambda_ramification, verify_model, VerificationReport};
pub use reconstruct::{algebraize, reconstruct, AlgebraizeOptions, Algebraized, ReconstructOptions};



use thiserror::Error;

use crate::algebra::{AlgebraError, Rational};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum FamilyError {
    #[error("n = {0} must be even and at least 6")]
    BadDegree(usize),
    #[error("degenerate cover check failed: {0}")]
    RamificationCheckFailed(String),
    #[error("initial division left a nonzero remainder")]
    NonzeroRemainder,
    #[error("Jacobian at the degenerate point is singular (kernel dimension {})", kernel.len())]
    SingularJacobian { kernel: Vec<Vec<Rational>> },
    #[error("precision {requested} outside the supported range 1..={limit}")]
    PrecisionExhausted { requested: usize, limit: usize },
    #[error("normalizing homography has a non-unit leading coefficient")]
    NonUnitLeading,
    #[error("generator candidate {0} is constant")]
    GeneratorDegenerate(String),
    #[error("{coefficient} is not a function of the generator to precision {precision}")]
    NotAFunctionOfGenerator { coefficient: String, precision: usize },
    #[error("no rational expression for {coefficient} up to degree {max_degree} at precision {precision}")]
    InsufficientPrecision { coefficient: String, precision: usize, max_degree: usize },
    #[error("model identity failed: {0}")]
    IdentityFailed(String),
    #[error("ramification over {point}: expected {expected:?}, found {found:?}")]
    RamificationMismatch { point: String, expected: Vec<usize>, found: Vec<usize> },
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

pub(crate) fn check_n(n: usize) -> Result<(), FamilyError> {
    if n < 6 || n % 2 == 1 {
        return Err(FamilyError::BadDegree(n));
    }
    Ok(())
}
