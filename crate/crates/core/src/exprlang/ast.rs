use std::fmt;

use thiserror::Error;

/// Binary operators, in increasing precedence: `+ -` < `* /` < `^`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BinOp {
    Add,
    Sub,
    Mul,
    Div,
    Pow,
}

/// Built-in single-argument functions.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Func {
    Sin,
    Cos,
    Exp,
    Abs,
    Sqrt,
    Atan,
}

impl Func {
    pub fn name(self) -> &'static str {
        match self {
            Func::Sin => "sin",
            Func::Cos => "cos",
            Func::Exp => "exp",
            Func::Abs => "abs",
            Func::Sqrt => "sqrt",
            Func::Atan => "atan",
        }
    }

    pub fn from_name(name: &str) -> Option<Func> {
        Some(match name {
            "sin" => Func::Sin,
            "cos" => Func::Cos,
            "exp" => Func::Exp,
            "abs" => Func::Abs,
            "sqrt" => Func::Sqrt,
            "atan" => Func::Atan,
            _ => return None,
        })
    }

    fn apply(self, v: f64) -> f64 {
        match self {
            Func::Sin => v.sin(),
            Func::Cos => v.cos(),
            Func::Exp => v.exp(),
            Func::Abs => v.abs(),
            Func::Sqrt => v.sqrt(),
            Func::Atan => v.atan(),
        }
    }
}

/// Parsed abstract syntax tree of a univariate real expression.
///
/// The single free variable is named `x`. `Pow` always has a constant right
/// child (the parser enforces this).
#[derive(Debug, Clone, PartialEq)]
pub enum Expr {
    Constant(f64),
    Var,
    Neg(Box<Expr>),
    Binary(BinOp, Box<Expr>, Box<Expr>),
    Call(Func, Box<Expr>),
}

/// Evaluation failed with a non-finite result at the given point.
#[derive(Debug, Clone, Copy, Error, PartialEq)]
#[error("expression evaluated to a non-finite value {value} at x = {x}")]
pub struct EvalError {
    pub x: f64,
    pub value: f64,
}

impl Expr {
    /// IEEE double-precision evaluation at `x`.
    ///
    /// Division by zero, even roots of negatives and overflow surface as an
    /// [`EvalError`] carrying the input point.
    pub fn eval(&self, x: f64) -> Result<f64, EvalError> {
        let v = self.eval_raw(x);
        if v.is_finite() {
            Ok(v)
        } else {
            Err(EvalError { x, value: v })
        }
    }

    fn eval_raw(&self, x: f64) -> f64 {
        match self {
            Expr::Constant(c) => *c,
            Expr::Var => x,
            Expr::Neg(a) => -a.eval_raw(x),
            Expr::Binary(op, a, b) => {
                let va = a.eval_raw(x);
                let vb = b.eval_raw(x);
                match op {
                    BinOp::Add => va + vb,
                    BinOp::Sub => va - vb,
                    BinOp::Mul => va * vb,
                    BinOp::Div => va / vb,
                    BinOp::Pow => va.powf(vb),
                }
            }
            Expr::Call(f, a) => f.apply(a.eval_raw(x)),
        }
    }

    fn precedence(&self) -> u8 {
        match self {
            Expr::Binary(BinOp::Add | BinOp::Sub, ..) => 1,
            Expr::Binary(BinOp::Mul | BinOp::Div, ..) => 2,
            Expr::Neg(..) => 3,
            Expr::Binary(BinOp::Pow, ..) => 4,
            _ => 5,
        }
    }
}

/// Returns `(slope, intercept)` when the tree is syntactically the affine
/// form `slope*x + intercept`, composing through `+ - * /` and unary minus.
///
/// Non-affine nodes (calls, powers, products of two `x`-dependent factors)
/// yield `None`.
pub fn affine_pattern(e: &Expr) -> Option<(f64, f64)> {
    match e {
        Expr::Constant(c) => Some((0.0, *c)),
        Expr::Var => Some((1.0, 0.0)),
        Expr::Neg(a) => affine_pattern(a).map(|(s, b)| (-s, -b)),
        Expr::Binary(op, a, b) => {
            let (sa, ba) = affine_pattern(a)?;
            let (sb, bb) = affine_pattern(b)?;
            match op {
                BinOp::Add => Some((sa + sb, ba + bb)),
                BinOp::Sub => Some((sa - sb, ba - bb)),
                BinOp::Mul => {
                    if sa == 0.0 {
                        Some((ba * sb, ba * bb))
                    } else if sb == 0.0 {
                        Some((sa * bb, ba * bb))
                    } else {
                        None
                    }
                }
                BinOp::Div => {
                    if sb == 0.0 && bb != 0.0 {
                        Some((sa / bb, ba / bb))
                    } else {
                        None
                    }
                }
                BinOp::Pow => None,
            }
        }
        Expr::Call(..) => None,
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn child(out: &mut fmt::Formatter<'_>, e: &Expr, min_prec: u8) -> fmt::Result {
            if e.precedence() < min_prec {
                write!(out, "(")?;
                write!(out, "{e}")?;
                write!(out, ")")
            } else {
                write!(out, "{e}")
            }
        }
        match self {
            Expr::Constant(c) => {
                if *c < 0.0 || (*c == 0.0 && c.is_sign_negative()) {
                    // keep negative constants reparseable as unary minus
                    write!(out, "-{}", -c)
                } else {
                    write!(out, "{c}")
                }
            }
            Expr::Var => write!(out, "x"),
            Expr::Neg(a) => {
                write!(out, "-")?;
                child(out, a, 4)
            }
            Expr::Binary(op, a, b) => {
                let (sym, prec) = match op {
                    BinOp::Add => ("+", 1),
                    BinOp::Sub => ("-", 1),
                    BinOp::Mul => ("*", 2),
                    BinOp::Div => ("/", 2),
                    BinOp::Pow => ("^", 4),
                };
                // left associative: right child needs one more level
                child(out, a, prec)?;
                write!(out, " {sym} ")?;
                child(out, b, prec + 1)
            }
            Expr::Call(f, a) => write!(out, "{}({a})", f.name()),
        }
    }
}
