use std::path::PathBuf;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("point coordinates must be finite, got ({x}, {y})")]
    NonFinitePoint { x: f64, y: f64 },

    #[error("disc radius must be finite and strictly positive, got {0}")]
    InvalidRadius(f64),

    #[error("both generalized discs are complements of closed discs")]
    BothComplements,

    #[error("containment is only defined between discs of the same kind")]
    MixedKinds,

    #[error("not colliding: closures are disjoint (centre distance {distance}, radius sum {radius_sum})")]
    NotColliding { distance: f64, radius_sum: f64 },

    #[error("slack condition violated: disc radius {disc_radius} is not below outer radius {outer_radius}")]
    DiscTooLarge { disc_radius: f64, outer_radius: f64 },

    #[error("slack condition violated: delta = {delta} is not positive")]
    SlackNotPositive { delta: f64 },

    #[error("chain is empty")]
    EmptyChain,

    #[error("chain is not nested at term {index}")]
    ChainNotNested { index: usize },

    #[error("chain radii unbounded within {terms} terms")]
    ChainUnbounded { terms: usize },

    #[error("chain radii inf not positive (estimate {estimate})")]
    ChainInfNotPositive { estimate: f64 },

    #[error("invalid disc assignment: {0}")]
    InvalidAssignment(String),

    #[error("step record inconsistent with assignment: {0}")]
    RecordMismatch(String),

    #[error("invalid allocation map: {0}")]
    InvalidAllocation(String),

    #[error("cannot compose allocation maps: inner target differs from outer source")]
    CompositionMismatch,

    #[error("internal invariant failure: no fixpoint after {steps} steps with the default budget")]
    BudgetExhausted { steps: usize },

    #[error("infeasible generator parameters: {0}")]
    Generator(String),

    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("{path}: {source}")]
    Parse {
        path: PathBuf,
        #[source]
        source: serde_json::Error,
    },
}
