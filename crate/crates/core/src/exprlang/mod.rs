//! Parsing and evaluation of univariate real expressions.
//!
//! Expressions name the given functions `h`, `f`, `g` in config files and on
//! the command line. The accepted grammar (documented in the README) is a
//! conventional infix language over one free variable `x`:
//!
//! - binary `+  -  *  /  ^` with the usual precedence, `^` binds tightest and
//!   requires a constant exponent, unary minus binds tighter than `*`;
//! - calls `sin cos exp abs sqrt atan`, parenthesised argument mandatory;
//! - predefined constants `pi` and `e`;
//! - no implicit multiplication: `2x` is a syntax error.
//!
//! Constant subtrees are folded at parse time, so e.g. `(2+3)*x` and `5*x`
//! produce the same tree. [`affine_pattern`] recognises trees that are
//! syntactically affine in `x`, which later enables closed-form inversion.

mod ast;
mod parser;
mod token;

pub use ast::{affine_pattern, BinOp, EvalError, Expr, Func};
pub use parser::parse;
pub use token::{tokenize, Token, TokenKind};

use thiserror::Error;

/// Errors produced while tokenizing or parsing an expression.
///
/// Positions are zero-based character offsets into the source string.
#[derive(Debug, Clone, Error, PartialEq)]
pub enum ExprError {
    #[error("lexical error at offset {position}: unexpected character {ch:?}")]
    Lexical { position: usize, ch: char },
    #[error("syntax error at offset {position}: {message}")]
    Syntax { position: usize, message: String },
    #[error("unknown function {name:?} at offset {position}")]
    UnknownFunction { position: usize, name: String },
    #[error("exponent at offset {position} does not fold to a constant")]
    NonConstantExponent { position: usize },
}
