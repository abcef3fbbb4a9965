use core::fmt;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// A caterpillar needs at least two spine vertices.
    SpineTooShort { r: usize },
    /// Every spine vertex of a caterpillar carries at least one leaf.
    EmptyStar { index: usize },
    SelfLoop { vertex: usize },
    DuplicateEdge { u: usize, v: usize },
    VertexOutOfRange { vertex: usize, order: usize },
    /// Jacobi sweeps exhausted before the off-diagonal mass vanished.
    NoConvergence { sweeps: usize, off_diagonal: f64 },
    DimensionMismatch { expected: usize, found: usize },
    /// H-join slot whose vertices would all be isolated (`N_j + d_j = 0`).
    IsolatedSlot { slot: usize },
    InvalidSlot { slot: usize, reason: &'static str },
    /// A parameter fell outside the admissible domain of a closed form or family.
    OutOfDomain { what: &'static str, value: i64, min: i64, max: i64 },
    NegativeDiscriminant { value: f64 },
    /// No integer candidate between the interval endpoints lies in the family domain.
    EmptyInterval { lo: i64, hi: i64 },
    /// The interval argmax disagrees with the full-domain sweep.
    LocalizationMismatch { interval_argmax: u32, sweep_argmax: u32 },
    Unsupported(&'static str),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::SpineTooShort { r } => {
                write!(f, "caterpillar spine must have at least 2 vertices, got {r}")
            }
            Error::EmptyStar { index } => {
                write!(f, "caterpillar star {} has no leaves (p_i must be >= 1)", index + 1)
            }
            Error::SelfLoop { vertex } => write!(f, "self-loop at vertex {vertex}"),
            Error::DuplicateEdge { u, v } => write!(f, "duplicate edge {u} {v}"),
            Error::VertexOutOfRange { vertex, order } => {
                write!(f, "vertex {vertex} out of range for graph of order {order}")
            }
            Error::NoConvergence { sweeps, off_diagonal } => write!(
                f,
                "Jacobi iteration did not converge after {sweeps} sweeps (off-diagonal norm {off_diagonal:e})"
            ),
            Error::DimensionMismatch { expected, found } => {
                write!(f, "dimension mismatch: expected {expected}, found {found}")
            }
            Error::IsolatedSlot { slot } => {
                write!(f, "H-join slot {slot} has N_j + d_j = 0")
            }
            Error::InvalidSlot { slot, reason } => write!(f, "invalid H-join slot {slot}: {reason}"),
            Error::OutOfDomain { what, value, min, max } => {
                write!(f, "{what} = {value} outside admissible range [{min}, {max}]")
            }
            Error::NegativeDiscriminant { value } => {
                write!(f, "negative discriminant alpha^2 - gamma = {value:e}")
            }
            Error::EmptyInterval { lo, hi } => {
                write!(f, "no admissible parameter in [{lo}, {hi}]")
            }
            Error::LocalizationMismatch { interval_argmax, sweep_argmax } => write!(
                f,
                "interval argmax {interval_argmax} differs from sweep argmax {sweep_argmax}"
            ),
            Error::Unsupported(what) => write!(f, "unsupported: {what}"),
        }
    }
}

impl core::error::Error for Error {}
