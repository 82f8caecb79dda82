use super::ast::{BinOp, Expr, Func};
use super::token::{tokenize, Token, TokenKind};
use super::ExprError;

/// Parses a source string into an [`Expr`].
///
/// Precedence: `^` > unary `-` > `* /` > `+ -`, with `+ - * /` left
/// associative. Constant subtrees are folded; the folded tree is returned.
pub fn parse(src: &str) -> Result<Expr, ExprError> {
    let tokens = tokenize(src)?;
    let mut p = Parser { tokens: &tokens, pos: 0, src_len: src.chars().count() };
    let expr = p.expression()?;
    if let Some(tok) = p.peek() {
        return Err(ExprError::Syntax {
            position: tok.position,
            message: format!("unexpected token {:?}", tok.lexeme),
        });
    }
    Ok(fold(expr))
}

struct Parser<'a> {
    tokens: &'a [Token],
    pos: usize,
    src_len: usize,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&'a Token> {
        self.tokens.get(self.pos)
    }

    fn bump(&mut self) -> Option<&'a Token> {
        let t = self.tokens.get(self.pos);
        self.pos += 1;
        t
    }

    fn here(&self) -> usize {
        self.peek().map(|t| t.position).unwrap_or(self.src_len)
    }

    fn eat_op(&mut self, ops: &[&str]) -> Option<&'a str> {
        let t = self.peek()?;
        if t.kind == TokenKind::Operator && ops.contains(&t.lexeme.as_str()) {
            self.pos += 1;
            Some(&t.lexeme)
        } else {
            None
        }
    }

    fn expression(&mut self) -> Result<Expr, ExprError> {
        let mut lhs = self.term()?;
        while let Some(op) = self.eat_op(&["+", "-"]) {
            let rhs = self.term()?;
            let binop = if op == "+" { BinOp::Add } else { BinOp::Sub };
            lhs = Expr::Binary(binop, Box::new(lhs), Box::new(rhs));
        }
        Ok(lhs)
    }

    fn term(&mut self) -> Result<Expr, ExprError> {
        let mut lhs = self.unary()?;
        while let Some(op) = self.eat_op(&["*", "/"]) {
            let rhs = self.unary()?;
            let binop = if op == "*" { BinOp::Mul } else { BinOp::Div };
            lhs = Expr::Binary(binop, Box::new(lhs), Box::new(rhs));
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<Expr, ExprError> {
        if self.eat_op(&["-"]).is_some() {
            return Ok(Expr::Neg(Box::new(self.unary()?)));
        }
        if self.eat_op(&["+"]).is_some() {
            return self.unary();
        }
        self.power()
    }

    fn power(&mut self) -> Result<Expr, ExprError> {
        let base = self.atom()?;
        let caret_pos = self.here();
        if self.eat_op(&["^"]).is_some() {
            // allow a signed exponent: x^-2; the exponent must fold away
            let exp = fold(self.unary()?);
            if !matches!(exp, Expr::Constant(_)) {
                return Err(ExprError::NonConstantExponent { position: caret_pos });
            }
            return Ok(Expr::Binary(BinOp::Pow, Box::new(base), Box::new(exp)));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Expr, ExprError> {
        let tok = match self.bump() {
            Some(t) => t,
            None => {
                return Err(ExprError::Syntax {
                    position: self.src_len,
                    message: "unexpected end of input".into(),
                })
            }
        };
        match tok.kind {
            TokenKind::Number => {
                let v: f64 = tok.lexeme.parse().map_err(|_| ExprError::Syntax {
                    position: tok.position,
                    message: format!("malformed number {:?}", tok.lexeme),
                })?;
                Ok(Expr::Constant(v))
            }
            TokenKind::Identifier => match tok.lexeme.as_str() {
                "x" => Ok(Expr::Var),
                "pi" => Ok(Expr::Constant(std::f64::consts::PI)),
                "e" => Ok(Expr::Constant(std::f64::consts::E)),
                name => {
                    let func = Func::from_name(name).ok_or_else(|| ExprError::UnknownFunction {
                        position: tok.position,
                        name: name.to_string(),
                    })?;
                    match self.peek() {
                        Some(t) if t.kind == TokenKind::LeftParen => {
                            self.pos += 1;
                            let arg = self.expression()?;
                            self.expect_rparen()?;
                            Ok(Expr::Call(func, Box::new(arg)))
                        }
                        _ => Err(ExprError::Syntax {
                            position: self.here(),
                            message: format!("function {name:?} requires a parenthesised argument"),
                        }),
                    }
                }
            },
            TokenKind::LeftParen => {
                let inner = self.expression()?;
                self.expect_rparen()?;
                Ok(inner)
            }
            _ => Err(ExprError::Syntax {
                position: tok.position,
                message: format!("unexpected token {:?}", tok.lexeme),
            }),
        }
    }

    fn expect_rparen(&mut self) -> Result<(), ExprError> {
        match self.bump() {
            Some(t) if t.kind == TokenKind::RightParen => Ok(()),
            Some(t) => Err(ExprError::Syntax {
                position: t.position,
                message: format!("expected ')', found {:?}", t.lexeme),
            }),
            None => Err(ExprError::Syntax {
                position: self.src_len,
                message: "expected ')', found end of input".into(),
            }),
        }
    }
}

/// Bottom-up constant folding. A subtree folds only when all of its leaves
/// are constants and the folded value is finite, so runtime evaluation errors
/// (like `1/0` at a variable point) keep their location information.
fn fold(e: Expr) -> Expr {
    match e {
        Expr::Neg(a) => {
            let a = fold(*a);
            if let Expr::Constant(c) = a {
                Expr::Constant(-c)
            } else {
                Expr::Neg(Box::new(a))
            }
        }
        Expr::Binary(op, a, b) => {
            let a = fold(*a);
            let b = fold(*b);
            if let (Expr::Constant(ca), Expr::Constant(cb)) = (&a, &b) {
                let v = match op {
                    BinOp::Add => ca + cb,
                    BinOp::Sub => ca - cb,
                    BinOp::Mul => ca * cb,
                    BinOp::Div => ca / cb,
                    BinOp::Pow => ca.powf(*cb),
                };
                if v.is_finite() {
                    return Expr::Constant(v);
                }
            }
            Expr::Binary(op, Box::new(a), Box::new(b))
        }
        Expr::Call(f, a) => {
            let a = fold(*a);
            if let Expr::Constant(c) = a {
                let v = match f {
                    Func::Sin => c.sin(),
                    Func::Cos => c.cos(),
                    Func::Exp => c.exp(),
                    Func::Abs => c.abs(),
                    Func::Sqrt => c.sqrt(),
                    Func::Atan => c.atan(),
                };
                if v.is_finite() {
                    return Expr::Constant(v);
                }
            }
            Expr::Call(f, Box::new(a))
        }
        other => other,
    }
}
