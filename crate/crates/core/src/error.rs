use num_bigint::BigInt;
use thiserror::Error;

use crate::involutions::InvolutionFamily;
use crate::lattice::{HyperbolicityReason, Orientation};

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("matrix is not unimodular (det = {det})")]
    NotUnimodular { det: BigInt },
    #[error("matrix is not an involution")]
    NotAnInvolution,
    #[error("±I is a trivial involution")]
    TrivialInvolution,
    #[error("invalid involution parameters: {0}")]
    InvalidParams(String),
    #[error("{0} is a perfect square")]
    PerfectSquare(BigInt),
    #[error("{0} is not positive")]
    NonPositive(BigInt),
    #[error("expected an orientation-{expected} matrix, got det = {det}")]
    OrientationMismatch { expected: Orientation, det: BigInt },
    #[error("matrix is not hyperbolic ({reason})")]
    NotHyperbolic { reason: HyperbolicityReason },
    #[error("matrix reverses orientation; use the orientation-reversing analysis")]
    OrientationReversing,
    #[error("matrix preserves orientation; use the reversor search")]
    OrientationPreserving,
    #[error("the involution does not reverse the automorphism")]
    NotReversible,
    #[error("no recipe #{choice} for the {family} family")]
    NoRecipe { family: InvolutionFamily, choice: usize },
}
