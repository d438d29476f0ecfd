use thiserror::Error;

/// Errors shared by every stage of the pipeline.
#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A curve fails a structural invariant it should satisfy by
    /// construction (non-matching coordinates, broken hemisphere
    /// structure, a traversal that does not close up, ...).
    #[error("malformed loop: {0}")]
    MalformedLoop(String),

    /// A chord model was requested for a loop that has no interior
    /// sub-edges (a triangle or a quadrilateral).
    #[error("loop of length {length} is not a spiral and has no chord model")]
    NotSpiral { length: usize },

    /// Synthetic chord families were requested for parameters outside the
    /// supported range.
    #[error("bad synthetic chord parameters: k = {k}, offset = {offset}")]
    BadParameters { k: usize, offset: usize },

    /// Chord families that do not have the two-runs-of-three untouched
    /// point structure required to define an offset.
    #[error("malformed chord families: {0}")]
    MalformedFamilies(String),

    /// A simplex enumeration grew past the configured budget.
    #[error("simplex capacity exceeded: budget {budget}")]
    CapacityExceeded { budget: usize },

    /// Exact integer arithmetic overflowed its checked range.
    #[error("integer overflow in exact arithmetic")]
    Overflow,
}

pub type Result<T> = std::result::Result<T, Error>;
