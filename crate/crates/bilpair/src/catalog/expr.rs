//! Symbolic coefficient expressions for catalog templates: integers and
//! named parameters combined with +, −, *, / and parentheses.

use std::collections::HashMap;
use std::fmt;

use crate::exactlin::field::{FieldDescriptor, FieldElement};
use crate::exactlin::ExactError;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Expr {
    Int(i64),
    Var(String),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ExprError {
    Syntax(String),
    UnknownVariable(String),
    DivisionByZero,
}

impl fmt::Display for ExprError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExprError::Syntax(m) => write!(f, "expression syntax error: {m}"),
            ExprError::UnknownVariable(v) => write!(f, "unknown parameter `{v}`"),
            ExprError::DivisionByZero => write!(f, "division by zero while evaluating"),
        }
    }
}

impl std::error::Error for ExprError {}

impl Expr {
    pub fn parse(text: &str) -> Result<Expr, ExprError> {
        let mut p = Parser {
            chars: text.chars().collect(),
            pos: 0,
        };
        let e = p.expr()?;
        p.skip_ws();
        if p.pos != p.chars.len() {
            return Err(ExprError::Syntax(format!(
                "trailing input at `{}`",
                p.chars[p.pos..].iter().collect::<String>()
            )));
        }
        Ok(e)
    }

    pub fn eval(
        &self,
        field: FieldDescriptor,
        env: &HashMap<String, FieldElement>,
    ) -> Result<FieldElement, ExprError> {
        match self {
            Expr::Int(n) => Ok(field.from_integer(*n)),
            Expr::Var(v) => env
                .get(v)
                .cloned()
                .ok_or_else(|| ExprError::UnknownVariable(v.clone())),
            Expr::Neg(a) => Ok(-a.eval(field, env)?),
            Expr::Add(a, b) => Ok(a.eval(field, env)? + b.eval(field, env)?),
            Expr::Sub(a, b) => Ok(a.eval(field, env)? - b.eval(field, env)?),
            Expr::Mul(a, b) => Ok(a.eval(field, env)? * b.eval(field, env)?),
            Expr::Div(a, b) => a
                .eval(field, env)?
                .div(&b.eval(field, env)?)
                .map_err(|e| match e {
                    ExactError::DivisionByZero => ExprError::DivisionByZero,
                    other => ExprError::Syntax(other.to_string()),
                }),
        }
    }

    /// Collects the variable names referenced by this expression.
    pub fn variables(&self, out: &mut Vec<String>) {
        match self {
            Expr::Int(_) => {}
            Expr::Var(v) => {
                if !out.contains(v) {
                    out.push(v.clone());
                }
            }
            Expr::Neg(a) => a.variables(out),
            Expr::Add(a, b) | Expr::Sub(a, b) | Expr::Mul(a, b) | Expr::Div(a, b) => {
                a.variables(out);
                b.variables(out);
            }
        }
    }

    /// Primes dividing any constant divisor in the expression — the
    /// characteristics over which the template is undefined.
    pub fn constant_divisor_primes(&self, out: &mut Vec<u64>) {
        match self {
            Expr::Int(_) | Expr::Var(_) => {}
            Expr::Neg(a) => a.constant_divisor_primes(out),
            Expr::Add(a, b) | Expr::Sub(a, b) | Expr::Mul(a, b) => {
                a.constant_divisor_primes(out);
                b.constant_divisor_primes(out);
            }
            Expr::Div(a, b) => {
                a.constant_divisor_primes(out);
                b.constant_divisor_primes(out);
                if let Some(c) = b.constant_value() {
                    let mut n = c.unsigned_abs();
                    let mut d = 2;
                    while d * d <= n {
                        if n % d == 0 {
                            if !out.contains(&d) {
                                out.push(d);
                            }
                            while n % d == 0 {
                                n /= d;
                            }
                        }
                        d += 1;
                    }
                    if n > 1 && !out.contains(&n) {
                        out.push(n);
                    }
                }
            }
        }
    }

    /// Integer value of a parameter-free expression, when it is one.
    fn constant_value(&self) -> Option<i64> {
        match self {
            Expr::Int(n) => Some(*n),
            Expr::Neg(a) => a.constant_value().map(|v| -v),
            Expr::Add(a, b) => Some(a.constant_value()? + b.constant_value()?),
            Expr::Sub(a, b) => Some(a.constant_value()? - b.constant_value()?),
            Expr::Mul(a, b) => Some(a.constant_value()? * b.constant_value()?),
            _ => None,
        }
    }
}

struct Parser {
    chars: Vec<char>,
    pos: usize,
}

impl Parser {
    fn skip_ws(&mut self) {
        while self.pos < self.chars.len() && self.chars[self.pos].is_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<Expr, ExprError> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some('+') => {
                    self.pos += 1;
                    acc = Expr::Add(Box::new(acc), Box::new(self.term()?));
                }
                Some('-') => {
                    self.pos += 1;
                    acc = Expr::Sub(Box::new(acc), Box::new(self.term()?));
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Expr, ExprError> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some('*') => {
                    self.pos += 1;
                    acc = Expr::Mul(Box::new(acc), Box::new(self.factor()?));
                }
                Some('/') => {
                    self.pos += 1;
                    acc = Expr::Div(Box::new(acc), Box::new(self.factor()?));
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<Expr, ExprError> {
        match self.peek() {
            Some('-') => {
                self.pos += 1;
                Ok(Expr::Neg(Box::new(self.factor()?)))
            }
            Some('(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(')') {
                    return Err(ExprError::Syntax("missing `)`".into()));
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => {
                let start = self.pos;
                while self
                    .chars
                    .get(self.pos)
                    .is_some_and(|c| c.is_ascii_digit())
                {
                    self.pos += 1;
                }
                let text: String = self.chars[start..self.pos].iter().collect();
                text.parse()
                    .map(Expr::Int)
                    .map_err(|_| ExprError::Syntax(format!("bad integer `{text}`")))
            }
            Some(c) if c.is_ascii_alphabetic() || c == '_' => {
                let start = self.pos;
                while self
                    .chars
                    .get(self.pos)
                    .is_some_and(|c| c.is_ascii_alphanumeric() || *c == '_')
                {
                    self.pos += 1;
                }
                Ok(Expr::Var(self.chars[start..self.pos].iter().collect()))
            }
            other => Err(ExprError::Syntax(format!("unexpected token {other:?}"))),
        }
    }
}
