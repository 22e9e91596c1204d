//! The element expression language: identifiers from the basis, rational
//! scalars, `+`/`-`, `*`, `^` with positive integer exponents,
//! parentheses, and a small set of mode-dependent functions
//! (`exp`/`log`/`bch`/`inverse` in truncated mode, `antipode` in both
//! associative modes, `q`/`exp`/`sigma`/`gamma` in the dual-function
//! mode).

use envelope_core::abelian::{self, ExpPolyFunction};
use envelope_core::lie::{LieAlgebra, Vector};
use envelope_core::pbw::{self, PbwElement};
use envelope_core::trunc::GradedTruncation;
use envelope_core::Rat;
use num_traits::{One, Zero};

use crate::CliError;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Expr {
    Num(Rat),
    Ident(String),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, u32),
    Call(String, Vec<Expr>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Token {
    Num(Rat),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
    Comma,
}

fn err(msg: impl Into<String>) -> CliError {
    CliError::expr(msg.into())
}

fn tokenize(input: &str) -> Result<Vec<Token>, CliError> {
    let mut out = Vec::new();
    let chars: Vec<char> = input.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        match c {
            ' ' | '\t' | '\n' | '\r' => i += 1,
            '+' => {
                out.push(Token::Plus);
                i += 1;
            }
            '-' => {
                out.push(Token::Minus);
                i += 1;
            }
            '*' => {
                out.push(Token::Star);
                i += 1;
            }
            '^' => {
                out.push(Token::Caret);
                i += 1;
            }
            '(' => {
                out.push(Token::LParen);
                i += 1;
            }
            ')' => {
                out.push(Token::RParen);
                i += 1;
            }
            ',' => {
                out.push(Token::Comma);
                i += 1;
            }
            '0'..='9' => {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                // a slash immediately followed by digits continues the literal
                if i + 1 < chars.len() && chars[i] == '/' && chars[i + 1].is_ascii_digit() {
                    i += 1;
                    while i < chars.len() && chars[i].is_ascii_digit() {
                        i += 1;
                    }
                }
                let text: String = chars[start..i].iter().collect();
                let value = text
                    .parse::<Rat>()
                    .map_err(|_| err(format!("invalid number `{text}`")))?;
                out.push(Token::Num(value));
            }
            c if c.is_alphabetic() || c == '_' => {
                let start = i;
                while i < chars.len()
                    && (chars[i].is_alphanumeric() || chars[i] == '_' || chars[i] == '\'')
                {
                    i += 1;
                }
                out.push(Token::Ident(chars[start..i].iter().collect()));
            }
            other => return Err(err(format!("unexpected character `{other}`"))),
        }
    }
    Ok(out)
}

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn bump(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.pos).cloned();
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn expect(&mut self, t: &Token) -> Result<(), CliError> {
        match self.bump() {
            Some(found) if &found == t => Ok(()),
            other => Err(err(format!("expected {t:?}, found {other:?}"))),
        }
    }

    fn expr(&mut self) -> Result<Expr, CliError> {
        let mut lhs = self.term()?;
        loop {
            match self.peek() {
                Some(Token::Plus) => {
                    self.bump();
                    lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
                }
                Some(Token::Minus) => {
                    self.bump();
                    lhs = Expr::Sub(Box::new(lhs), Box::new(self.term()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn term(&mut self) -> Result<Expr, CliError> {
        let mut lhs = self.factor()?;
        while self.peek() == Some(&Token::Star) {
            self.bump();
            lhs = Expr::Mul(Box::new(lhs), Box::new(self.factor()?));
        }
        Ok(lhs)
    }

    fn factor(&mut self) -> Result<Expr, CliError> {
        if self.peek() == Some(&Token::Minus) {
            self.bump();
            return Ok(Expr::Neg(Box::new(self.factor()?)));
        }
        let mut base = self.atom()?;
        while self.peek() == Some(&Token::Caret) {
            self.bump();
            match self.bump() {
                Some(Token::Num(n)) if n.is_integer() && n > Rat::zero() => {
                    let exp: u32 = n
                        .to_integer()
                        .try_into()
                        .map_err(|_| err("exponent too large"))?;
                    base = Expr::Pow(Box::new(base), exp);
                }
                other => {
                    return Err(err(format!(
                        "`^` needs a positive integer, found {other:?}"
                    )))
                }
            }
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Expr, CliError> {
        match self.bump() {
            Some(Token::Num(n)) => Ok(Expr::Num(n)),
            Some(Token::Ident(name)) => {
                if self.peek() == Some(&Token::LParen) {
                    self.bump();
                    let mut args = Vec::new();
                    if self.peek() != Some(&Token::RParen) {
                        loop {
                            args.push(self.expr()?);
                            if self.peek() == Some(&Token::Comma) {
                                self.bump();
                            } else {
                                break;
                            }
                        }
                    }
                    self.expect(&Token::RParen)?;
                    Ok(Expr::Call(name, args))
                } else {
                    Ok(Expr::Ident(name))
                }
            }
            Some(Token::LParen) => {
                let inner = self.expr()?;
                self.expect(&Token::RParen)?;
                Ok(inner)
            }
            other => Err(err(format!("unexpected token {other:?}"))),
        }
    }
}

pub fn parse(input: &str) -> Result<Expr, CliError> {
    let tokens = tokenize(input)?;
    let mut p = Parser { tokens, pos: 0 };
    let e = p.expr()?;
    if p.pos != p.tokens.len() {
        return Err(err("trailing input after expression"));
    }
    Ok(e)
}

fn generator(l: &LieAlgebra, name: &str) -> Result<PbwElement, CliError> {
    l.name_index(name)
        .map(PbwElement::generator)
        .ok_or_else(|| err(format!("unknown basis element `{name}`")))
}

fn arity(name: &str, args: &[Expr], n: usize) -> Result<(), CliError> {
    if args.len() == n {
        Ok(())
    } else {
        Err(err(format!(
            "`{name}` takes {n} argument(s), got {}",
            args.len()
        )))
    }
}

/// Evaluate in U(L) with exact straightening multiplication.
pub fn eval_pbw(l: &LieAlgebra, e: &Expr) -> Result<PbwElement, CliError> {
    match e {
        Expr::Num(c) => Ok(PbwElement::scalar(c.clone())),
        Expr::Ident(name) => generator(l, name),
        Expr::Neg(a) => Ok(eval_pbw(l, a)?.neg()),
        Expr::Add(a, b) => Ok(eval_pbw(l, a)?.add(&eval_pbw(l, b)?)),
        Expr::Sub(a, b) => Ok(eval_pbw(l, a)?.sub(&eval_pbw(l, b)?)),
        Expr::Mul(a, b) => Ok(pbw::mul(l, &eval_pbw(l, a)?, &eval_pbw(l, b)?)),
        Expr::Pow(a, k) => Ok(pbw::pow(l, &eval_pbw(l, a)?, *k as usize)),
        Expr::Call(name, args) => match name.as_str() {
            "antipode" => {
                arity(name, args, 1)?;
                Ok(pbw::antipode(l, &eval_pbw(l, &args[0])?))
            }
            "exp" | "log" | "bch" | "inverse" => Err(err(format!(
                "`{name}` requires truncated mode (--mode trunc --cutoff N)"
            ))),
            other => Err(err(format!("unknown function `{other}` in pbw mode"))),
        },
    }
}

/// Evaluate in a weight-graded truncation, where the series functions are
/// available.
pub fn eval_trunc(t: &GradedTruncation, e: &Expr) -> Result<PbwElement, CliError> {
    let l = t.lie();
    match e {
        Expr::Num(c) => Ok(PbwElement::scalar(c.clone())),
        Expr::Ident(name) => Ok(t.truncate(&generator(l, name)?)),
        Expr::Neg(a) => Ok(eval_trunc(t, a)?.neg()),
        Expr::Add(a, b) => Ok(eval_trunc(t, a)?.add(&eval_trunc(t, b)?)),
        Expr::Sub(a, b) => Ok(eval_trunc(t, a)?.sub(&eval_trunc(t, b)?)),
        Expr::Mul(a, b) => Ok(t.mul(&eval_trunc(t, a)?, &eval_trunc(t, b)?)),
        Expr::Pow(a, k) => {
            let base = eval_trunc(t, a)?;
            let mut acc = PbwElement::one();
            for _ in 0..*k {
                acc = t.mul(&acc, &base);
            }
            Ok(acc)
        }
        Expr::Call(name, args) => match name.as_str() {
            "exp" => {
                arity(name, args, 1)?;
                t.exp(&eval_trunc(t, &args[0])?)
                    .map_err(|e| err(e.to_string()))
            }
            "log" => {
                arity(name, args, 1)?;
                t.log(&eval_trunc(t, &args[0])?)
                    .map_err(|e| err(e.to_string()))
            }
            "bch" => {
                arity(name, args, 2)?;
                t.bch(&eval_trunc(t, &args[0])?, &eval_trunc(t, &args[1])?)
                    .map_err(|e| err(e.to_string()))
            }
            "inverse" => {
                arity(name, args, 1)?;
                t.inverse(&eval_trunc(t, &args[0])?)
                    .map_err(|e| err(e.to_string()))
            }
            "antipode" => {
                arity(name, args, 1)?;
                Ok(t.truncate(&pbw::antipode(l, &eval_trunc(t, &args[0])?)))
            }
            other => Err(err(format!("unknown function `{other}` in trunc mode"))),
        },
    }
}

/// Value of a dual-mode expression: either still an enveloping-algebra
/// element (products of basis names) or already a function of `w1..wd`.
pub enum DualValue {
    Element(PbwElement),
    Function(ExpPolyFunction),
}

fn as_function(l: &LieAlgebra, v: DualValue) -> Result<ExpPolyFunction, CliError> {
    match v {
        DualValue::Function(f) => Ok(f),
        DualValue::Element(u) => abelian::q_map(l, &u).map_err(|e| err(e.to_string())),
    }
}

/// A `w<k>` coordinate identifier for an abelian algebra of dimension d.
fn coordinate_ident(name: &str, dim: usize) -> Option<Result<ExpPolyFunction, CliError>> {
    let k: usize = name.strip_prefix('w')?.parse().ok()?;
    if k == 0 || k > dim {
        return Some(Err(err(format!(
            "coordinate `{name}` out of range 1..{dim}"
        ))));
    }
    Some(Ok(ExpPolyFunction::coordinate(dim, k - 1)))
}

/// A linear form Σ c_i w_i, required by `exp`.
fn as_linear_form(f: &ExpPolyFunction) -> Result<Vec<Rat>, CliError> {
    let dim = f.dim();
    let mut linear = vec![Rat::zero(); dim];
    for (l, p) in f.summands() {
        if l.iter().any(|c| !c.is_zero()) {
            return Err(err("`exp` needs a linear form in w1..wd"));
        }
        for (e, c) in p {
            let total: u32 = e.iter().sum();
            if total != 1 {
                return Err(err("`exp` needs a linear form in w1..wd"));
            }
            let i = e.iter().position(|&p| p == 1).unwrap();
            linear[i] += c;
        }
    }
    Ok(linear)
}

/// Evaluate in the dual function algebra over an abelian Lie algebra.
/// Plain basis-element expressions are carried through the monomial
/// substitution at the end, so `q(x^2)` and `x^2` agree.
pub fn eval_abelian(l: &LieAlgebra, e: &Expr) -> Result<DualValue, CliError> {
    if !l.is_abelian() {
        return Err(err("dual-function mode needs an abelian algebra"));
    }
    eval_dual(l, e)
}

fn eval_dual(l: &LieAlgebra, e: &Expr) -> Result<DualValue, CliError> {
    let dim = l.dim();
    let lift = |c: &Rat| ExpPolyFunction::constant(dim, c.clone());
    match e {
        Expr::Num(c) => Ok(DualValue::Element(PbwElement::scalar(c.clone()))),
        Expr::Ident(name) => {
            if let Some(idx) = l.name_index(name) {
                return Ok(DualValue::Element(PbwElement::generator(idx)));
            }
            if let Some(f) = coordinate_ident(name, dim) {
                return Ok(DualValue::Function(f?));
            }
            Err(err(format!("unknown identifier `{name}`")))
        }
        Expr::Neg(a) => Ok(match eval_dual(l, a)? {
            DualValue::Element(u) => DualValue::Element(u.neg()),
            DualValue::Function(f) => DualValue::Function(f.neg()),
        }),
        Expr::Add(a, b) | Expr::Sub(a, b) => {
            let subtract = matches!(e, Expr::Sub(..));
            let (va, vb) = (eval_dual(l, a)?, eval_dual(l, b)?);
            match (va, vb) {
                (DualValue::Element(x), DualValue::Element(y)) => {
                    Ok(DualValue::Element(if subtract {
                        x.sub(&y)
                    } else {
                        x.add(&y)
                    }))
                }
                (x, y) => {
                    let (fx, fy) = (as_function(l, x)?, as_function(l, y)?);
                    let r = if subtract { fx.sub(&fy) } else { fx.add(&fy) };
                    Ok(DualValue::Function(r.map_err(|e| err(e.to_string()))?))
                }
            }
        }
        Expr::Mul(a, b) => {
            let (va, vb) = (eval_dual(l, a)?, eval_dual(l, b)?);
            match (va, vb) {
                (DualValue::Element(x), DualValue::Element(y)) => {
                    Ok(DualValue::Element(pbw::mul(l, &x, &y)))
                }
                (x, y) => {
                    let (fx, fy) = (as_function(l, x)?, as_function(l, y)?);
                    Ok(DualValue::Function(
                        fx.mul(&fy).map_err(|e| err(e.to_string()))?,
                    ))
                }
            }
        }
        Expr::Pow(a, k) => match eval_dual(l, a)? {
            DualValue::Element(x) => Ok(DualValue::Element(pbw::pow(l, &x, *k as usize))),
            DualValue::Function(f) => {
                let mut acc = lift(&Rat::one());
                for _ in 0..*k {
                    acc = acc.mul(&f).map_err(|e| err(e.to_string()))?;
                }
                Ok(DualValue::Function(acc))
            }
        },
        Expr::Call(name, args) => match name.as_str() {
            "q" => {
                arity(name, args, 1)?;
                match eval_dual(l, &args[0])? {
                    DualValue::Element(u) => Ok(DualValue::Function(
                        abelian::q_map(l, &u).map_err(|e| err(e.to_string()))?,
                    )),
                    DualValue::Function(_) => Err(err("`q` applies to basis-element expressions")),
                }
            }
            "exp" => {
                arity(name, args, 1)?;
                let f = as_function(l, eval_dual(l, &args[0])?)?;
                let linear = as_linear_form(&f)?;
                Ok(DualValue::Function(ExpPolyFunction::exp_linear(
                    dim, linear,
                )))
            }
            "sigma" => {
                arity(name, args, 1)?;
                let f = as_function(l, eval_dual(l, &args[0])?)?;
                Ok(DualValue::Function(f.sigma()))
            }
            "gamma" => {
                arity(name, args, 1)?;
                let f = as_function(l, eval_dual(l, &args[0])?)?;
                Ok(DualValue::Function(f.gamma()))
            }
            other => Err(err(format!("unknown function `{other}` in dual mode"))),
        },
    }
}

/// Evaluate an expression over the two-dimensional split algebra with
/// basis `e1 = (1,0)` (the radical direction) and `e2 = (0,1)` (the unit).
pub fn eval_a2(e: &Expr) -> Result<abelian::A2Element, CliError> {
    use abelian::{a2_mul, A2Element};
    match e {
        Expr::Num(c) => Ok(A2Element(Rat::zero(), Rat::zero()).scaled_unit(c)),
        Expr::Ident(name) => match name.as_str() {
            "e1" => Ok(A2Element(Rat::one(), Rat::zero())),
            "e2" => Ok(A2Element(Rat::zero(), Rat::one())),
            other => Err(err(format!("unknown identifier `{other}`; use e1, e2"))),
        },
        Expr::Neg(a) => {
            let v = eval_a2(a)?;
            Ok(A2Element(-v.0, -v.1))
        }
        Expr::Add(a, b) => {
            let (x, y) = (eval_a2(a)?, eval_a2(b)?);
            Ok(A2Element(x.0 + y.0, x.1 + y.1))
        }
        Expr::Sub(a, b) => {
            let (x, y) = (eval_a2(a)?, eval_a2(b)?);
            Ok(A2Element(x.0 - y.0, x.1 - y.1))
        }
        Expr::Mul(a, b) => Ok(a2_mul(&eval_a2(a)?, &eval_a2(b)?)),
        Expr::Pow(a, k) => {
            let base = eval_a2(a)?;
            let mut acc = abelian::a2_one();
            for _ in 0..*k {
                acc = a2_mul(&acc, &base);
            }
            Ok(acc)
        }
        Expr::Call(name, _) => Err(err(format!("unknown function `{name}` in a2 mode"))),
    }
}

trait ScaledUnit {
    fn scaled_unit(self, c: &Rat) -> Self;
}

impl ScaledUnit for abelian::A2Element {
    /// The scalar c embeds as c·1 = (0, c).
    fn scaled_unit(self, c: &Rat) -> Self {
        abelian::A2Element(Rat::zero(), c.clone())
    }
}

/// Parse and evaluate an entry of a `span(...)` list: a linear
/// combination of basis names, returned as a coefficient vector.
pub fn parse_linear_combination(l: &LieAlgebra, input: &str) -> Result<Vector, CliError> {
    let e = parse(input)?;
    let u = eval_pbw(l, &e)?;
    let mut v = vec![Rat::zero(); l.dim()];
    for (m, c) in u.terms() {
        match m.0.as_slice() {
            [i] => v[*i] += c,
            _ => {
                return Err(err(format!(
                    "`{input}` is not a linear combination of basis elements"
                )))
            }
        }
    }
    Ok(v)
}
