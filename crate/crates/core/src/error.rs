use thiserror::Error;

/// Errors raised by the simulator.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("operator is not unitary (max deviation {deviation:e})")]
    NonUnitary { deviation: f64 },
    #[error("cannot compose an empty list of operators")]
    EmptyComposition,
    #[error("superposition has no nonzero coefficient")]
    ZeroSuperposition,
    #[error("shift stride must be at least 1")]
    ZeroStride,
    #[error("q-plate charge {0} is invalid: 2q must be a positive integer")]
    InvalidCharge(f64),
    #[error("wave plate angle {0} is not finite")]
    NonFiniteAngle(f64),
    #[error("inverted OAM window [{min}, {max}]")]
    InvertedRange { min: i64, max: i64 },
    #[error("Monte Carlo needs at least one trial")]
    ZeroTrials,
    #[error("distribution is not normalized (mass {mass})")]
    Unnormalized { mass: f64 },
    #[error("spread fit needs at least 3 points, got {0}")]
    TooFewPoints(usize),
    #[error("spread fit step counts must be strictly increasing")]
    NonIncreasingSteps,
    #[error("coin is not balanced, no Hadamard decomposition exists")]
    NotBalanced,
}

pub type Result<T> = std::result::Result<T, Error>;
