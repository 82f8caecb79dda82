//! Numerical solvers for the second-order iterative functional equation
//!
//! ```text
//! phi(phi(x)) = h(phi(f(x))) + g(x),      x in R,
//! ```
//!
//! where `h`, `f`, `g` are given continuous real functions and `phi` is the
//! unknown. The crate provides four pipelines:
//!
//! - [`contraction::solve_bounded`] — Picard iteration of the inversion-form
//!   operator `phi -> h^{-1}(phi∘phi∘f^{-1} - g∘f^{-1})` in the space of
//!   bounded Lipschitz functions (bounded `g`).
//! - [`truncation::solve_compact`] — the same iteration after replacing an
//!   unbounded `g` with a trapezoidal cutoff, yielding a solution on a chosen
//!   compact interval.
//! - [`contraction::solve_asymptotic`] — iteration in the space of functions
//!   deviating boundedly from a line `kappa* x`, for `h`, `f`, `g` with linear
//!   growth (unbounded solutions).
//! - [`piecewise`] — an explicit recursive construction that extends two seed
//!   homeomorphisms to a global continuous solution, knot by knot.
//!
//! Every produced solution can be checked independently with
//! [`verify::residual`], which probes the defect
//! `|phi(phi(x)) - h(phi(f(x))) - g(x)|`.
//!
//! The `iterfun` binary exposes all pipelines as subcommands; the
//! `examples/` directory has one runnable example per capability.

pub mod exprlang;
pub mod funcspace;

pub use exprlang::Expr;
pub use funcspace::{Branch, NumericInverse, SampledFunction, Tail};
