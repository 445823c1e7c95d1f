use thiserror::Error;

use crate::types::{FoodIndex, Owner};

/// Errors surfaced by the game-analysis library.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("value out of range for {name}: {value}")]
    OutOfRange { name: &'static str, value: f64 },

    #[error("components of {name} must sum to 1, got {sum}")]
    NotNormalized { name: &'static str, sum: f64 },

    #[error("sphere point must have unit norm, got |x| = {norm}")]
    NotUnit { norm: f64 },

    #[error("chosen food {0} cannot equal the missing food of the pair")]
    ChosenEqualsMissing(FoodIndex),

    #[error("strategy owner mismatch: expected {expected:?}, found {found:?}")]
    OwnerMismatch { expected: Owner, found: Owner },

    #[error("optimality system is singular: 1 + l0*l1 + l0*l2 + l1*l2 = {0}")]
    SingularDenominator(f64),

    #[error("balanced first move lies outside the simplex: ({0}, {1}, {2})")]
    InfeasibleFirstMove(f64, f64, f64),

    #[error("first-move point lies on the simplex boundary; the optimality system degenerates")]
    BoundaryFirstMove,

    #[error("Cat 2 is not at a balanced optimum (max frequency residual {0})")]
    NotAtOptimum(f64),

    #[error("pure choice functions describe Cat 1's second move only")]
    PureStrategyForCat2,

    #[error("iteration count must be at least 1")]
    NoIterations,
}

pub type Result<T> = std::result::Result<T, Error>;
