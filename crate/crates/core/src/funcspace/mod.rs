//! Numeric representations of real functions of one variable.
//!
//! [`SampledFunction`] is a piecewise-linear grid function with a declared
//! tail policy (constant hold or linear slope) standing in for a function on
//! all of R. [`Branch`] is a strictly monotone segment with an exact
//! piecewise-linear inverse. [`NumericInverse`] inverts monotone expressions
//! by closed form when they are affine and by bracketing bisection otherwise.
//!
//! Interpolation is deliberately piecewise linear, not spline: the solvers
//! control Lipschitz constants, and linear interpolation preserves a grid
//! function's Lipschitz bound exactly (it is the max segment slope).

mod branch;
mod inverse;
mod lipschitz;
mod sampled;

pub use branch::{Branch, Direction, Segment};
pub use inverse::{MonotoneHandle, NumericInverse};
pub use lipschitz::{divided_difference_range, lipschitz_bounds, LipschitzEstimate};
pub use sampled::{sup_distance, SampledFunction, Tail};

use thiserror::Error;

/// Errors from constructing or inverting function representations.
#[derive(Debug, Clone, Error)]
pub enum FuncError {
    #[error("need at least two nodes, got {0}")]
    TooFewNodes(usize),
    #[error("nodes and values have different lengths ({nodes} vs {values})")]
    LengthMismatch { nodes: usize, values: usize },
    #[error("nodes must be strictly increasing (nodes[{index}] = {value})")]
    NodesNotIncreasing { index: usize, value: f64 },
    #[error("non-finite sample {value} at node {x}")]
    NonFiniteSample { x: f64, value: f64 },
    #[error("values are not strictly monotone at index {index}")]
    NotMonotone { index: usize },
    #[error("no bracket for y = {y}: expansion exceeded 2^60, forward looks non-surjective")]
    NotSurjective { y: f64 },
    #[error("sampled monotonicity violation between x = {x1} and x = {x2}")]
    MonotonicityViolated { x1: f64, x2: f64 },
    #[error("bisection for y = {y} stalled with residual {residual} above tolerance")]
    ToleranceNotMet { y: f64, residual: f64 },
    #[error("evaluation failed during inversion: {0}")]
    Eval(#[from] crate::exprlang::EvalError),
    #[error("window must satisfy lo < hi, got [{lo}, {hi}]")]
    BadWindow { lo: f64, hi: f64 },
    #[error("sample count must be at least 2, got {0}")]
    BadSampleCount(usize),
}
