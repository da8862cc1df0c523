//! A small language for printed right-hand sides and case conditions.
//!
//! Numbers are exact: every value is a finite sum `Σ c_i √r_i` with rational
//! `c_i` and distinct squarefree radicands `r_i` (radicand 1 is the rational
//! part). Conditions are boolean expressions over the same numbers.
//!
//! ```text
//! cond   := or
//! or     := and ("or" and)*
//! and    := not ("and" not)*
//! not    := "not" not | cmp
//! cmp    := sum (("=" | "!=" | "<" | "<=" | ">" | ">=") sum)?
//! sum    := term (("+" | "-") term)*
//! term   := unary (("*" | "/" | <juxtaposition>) unary)*
//! unary  := "-" unary | power
//! power  := atom ("^" unary)?
//! atom   := integer | ident | ident "(" cond ("," cond)* ")" | "(" cond ")"
//! ```
//!
//! Functions: `sqrt(x)`, `odd(x)`, `even(x)`, `prime(x)`, `prime_power(x)`,
//! `divides(a, b)`. Constants `true` and `false`.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::algebra::{is_prime, prime_power};
use crate::rational::{self, int, pow2_neg};
use crate::spectra::{Eigenvalue, IntPoly};
use crate::{Error, Result};

const MAX_EXPONENT: u64 = 4096;

fn err<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Expr(msg.into()))
}

/// An exact number `Σ c·√r`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Surd {
    terms: BTreeMap<u64, BigRational>,
}

impl Surd {
    pub fn rational(q: BigRational) -> Self {
        let mut s = Surd::default();
        s.add_term(1, q);
        s
    }

    pub fn integer(n: i64) -> Self {
        Self::rational(int(n))
    }

    fn add_term(&mut self, radicand: u64, c: BigRational) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(radicand).or_insert_with(BigRational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&radicand);
        }
    }

    /// `(c, r)` pairs with `r` squarefree, rational part first.
    pub fn terms(&self) -> impl Iterator<Item = (&BigRational, u64)> {
        self.terms.iter().map(|(r, c)| (c, *r))
    }

    pub fn as_rational(&self) -> Option<BigRational> {
        match self.terms.len() {
            0 => Some(BigRational::zero()),
            1 => self.terms.get(&1).cloned(),
            _ => None,
        }
    }

    pub fn is_rational(&self) -> bool {
        self.as_rational().is_some()
    }

    /// `√q` for a non-negative rational `q`.
    pub fn sqrt(q: &BigRational) -> Result<Self> {
        if q.is_negative() {
            return err(format!("square root of negative {q}"));
        }
        // √(a/b) = √(ab)/b
        let ab = q.numer() * q.denom();
        let ab = ab.to_u64().ok_or_else(|| Error::Expr(format!("radicand {ab} too large")))?;
        let (outside, radicand) = split_square(ab);
        let c = BigRational::new(BigInt::from(outside), q.denom().clone());
        let mut s = Surd::default();
        s.add_term(radicand, c);
        Ok(s)
    }

    pub fn add(&self, rhs: &Surd) -> Surd {
        let mut out = self.clone();
        for (r, c) in &rhs.terms {
            out.add_term(*r, c.clone());
        }
        out
    }

    pub fn neg(&self) -> Surd {
        Surd {
            terms: self.terms.iter().map(|(r, c)| (*r, -c)).collect(),
        }
    }

    pub fn sub(&self, rhs: &Surd) -> Surd {
        self.add(&rhs.neg())
    }

    pub fn mul(&self, rhs: &Surd) -> Result<Surd> {
        let mut out = Surd::default();
        for (r1, c1) in &self.terms {
            for (r2, c2) in &rhs.terms {
                let g = r1.gcd(r2);
                let rest = (r1 / g)
                    .checked_mul(r2 / g)
                    .ok_or_else(|| Error::Expr("radicand overflow".into()))?;
                out.add_term(rest, c1 * c2 * int(g as i64));
            }
        }
        Ok(out)
    }

    pub fn div(&self, rhs: &Surd) -> Result<Surd> {
        let d = rhs
            .as_rational()
            .ok_or_else(|| Error::Expr("division by an irrational value".into()))?;
        if d.is_zero() {
            return err("division by zero");
        }
        Ok(Surd {
            terms: self.terms.iter().map(|(r, c)| (*r, c / &d)).collect(),
        })
    }

    pub fn pow(&self, e: &Surd) -> Result<Surd> {
        let e = e
            .as_rational()
            .filter(|q| q.is_integer())
            .ok_or_else(|| Error::Expr("exponent must be an integer".into()))?;
        let k = e.to_integer();
        if k.is_negative() {
            let base = self
                .as_rational()
                .ok_or_else(|| Error::Expr("negative power of an irrational value".into()))?;
            if base.is_zero() {
                return err("zero to a negative power");
            }
            let k = (-k).to_u32().ok_or_else(|| Error::Expr("exponent too large".into()))?;
            return Ok(Surd::rational(num_traits::pow(base.recip(), k as usize)));
        }
        let k = k.to_u64().filter(|&k| k <= MAX_EXPONENT).ok_or_else(|| Error::Expr("exponent too large".into()))?;
        if let Some(q) = self.as_rational() {
            return Ok(Surd::rational(num_traits::pow(q, k as usize)));
        }
        let mut acc = Surd::integer(1);
        for _ in 0..k {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    /// Enclosure `[lo, hi]` of total width at most `width`.
    pub fn enclosure(&self, width: &BigRational) -> (BigRational, BigRational) {
        let mut bits = 16u32;
        loop {
            let (lo, hi) = self.enclosure_bits(bits);
            if &(&hi - &lo) <= width {
                return (lo, hi);
            }
            bits += 16;
        }
    }

    fn enclosure_bits(&self, bits: u32) -> (BigRational, BigRational) {
        let scale = BigInt::one() << (2 * bits);
        let unit = pow2_neg(bits);
        let (mut lo, mut hi) = (BigRational::zero(), BigRational::zero());
        for (r, c) in &self.terms {
            if *r == 1 {
                lo += c;
                hi += c;
                continue;
            }
            let s = (BigInt::from(*r) * &scale).sqrt();
            let below = BigRational::from_integer(s.clone()) * &unit;
            let above = BigRational::from_integer(s + 1) * &unit;
            if c.is_positive() {
                lo += c * below;
                hi += c * above;
            } else {
                lo += c * above;
                hi += c * below;
            }
        }
        (lo, hi)
    }

    pub fn to_f64(&self) -> f64 {
        self.terms
            .iter()
            .map(|(r, c)| rational::to_f64(c) * (*r as f64).sqrt())
            .sum()
    }

    /// The value as an eigenvalue. Only rationals and `a + b√c` are algebraic
    /// of degree at most two, which covers every printed spectrum.
    pub fn to_eigenvalue(&self) -> Result<Eigenvalue> {
        if let Some(q) = self.as_rational() {
            if q.is_integer() {
                let k = q
                    .to_integer()
                    .to_i64()
                    .ok_or_else(|| Error::Expr("eigenvalue too large".into()))?;
                return Ok(Eigenvalue::Integer(k));
            }
            let poly = IntPoly::new(vec![-q.numer().clone(), q.denom().clone()]);
            let eps = pow2_neg(40);
            return Ok(Eigenvalue::Isolated { poly, lo: &q - &eps, hi: q + eps });
        }
        let irrational: Vec<_> = self.terms.iter().filter(|(r, _)| **r != 1).collect();
        if irrational.len() != 1 {
            return err(format!("{self} is not a quadratic irrational"));
        }
        let (c, b) = (*irrational[0].0, irrational[0].1.clone());
        let a = self.terms.get(&1).cloned().unwrap_or_else(BigRational::zero);
        // (x - a)^2 - b^2 c = x^2 - 2a x + a^2 - b^2 c
        let coeffs = [&a * &a - &b * &b * int(c as i64), -(int(2) * &a), BigRational::one()];
        let den = coeffs.iter().fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
        let ints = coeffs
            .iter()
            .map(|q| (q * BigRational::from_integer(den.clone())).to_integer())
            .collect();
        let poly = IntPoly::new(ints).primitive();
        // The conjugate sits 2|b|√c away; 2^-40 keeps it outside.
        let (lo, hi) = self.enclosure(&pow2_neg(40));
        Ok(Eigenvalue::Isolated { poly, lo, hi })
    }
}

/// `n = outside^2 * radicand` with `radicand` squarefree.
fn split_square(mut n: u64) -> (u64, u64) {
    if n == 0 {
        return (0, 1);
    }
    let mut outside = 1;
    let mut radicand = 1;
    let mut d = 2u64;
    while d * d <= n {
        while n % (d * d) == 0 {
            n /= d * d;
            outside *= d;
        }
        if n % d == 0 {
            n /= d;
            radicand *= d;
        }
        d += 1;
    }
    (outside, radicand * n)
}

impl fmt::Display for Surd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (r, c)) in self.terms.iter().enumerate() {
            let mag = c.abs();
            let body = match (*r, mag.is_one()) {
                (1, _) => rational::to_text(&mag),
                (_, true) => format!("sqrt({r})"),
                _ => format!("{}*sqrt({r})", rational::to_text(&mag)),
            };
            match (i, c.is_negative()) {
                (0, false) => write!(f, "{body}")?,
                (0, true) => write!(f, "-{body}")?,
                (_, false) => write!(f, " + {body}")?,
                (_, true) => write!(f, " - {body}")?,
            }
        }
        Ok(())
    }
}

/// Variable bindings for evaluation.
pub type Env = BTreeMap<String, i64>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Value {
    Num(Surd),
    Bool(bool),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BinOp {
    Add,
    Sub,
    Mul,
    Div,
    Pow,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CmpOp {
    Eq,
    Ne,
    Lt,
    Le,
    Gt,
    Ge,
}

/// Parsed expression or condition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Int(BigInt),
    Var(String),
    Bool(bool),
    Neg(Box<Expr>),
    Bin(BinOp, Box<Expr>, Box<Expr>),
    Cmp(CmpOp, Box<Expr>, Box<Expr>),
    And(Box<Expr>, Box<Expr>),
    Or(Box<Expr>, Box<Expr>),
    Not(Box<Expr>),
    Call(String, Vec<Expr>),
}

impl Expr {
    pub fn parse(text: &str) -> Result<Expr> {
        let tokens = lex(text)?;
        let mut p = Parser { tokens, pos: 0 };
        let e = p.or()?;
        if p.pos != p.tokens.len() {
            return err(format!("unexpected `{}` in `{text}`", p.tokens[p.pos]));
        }
        Ok(e)
    }

    /// Names of the free variables.
    pub fn variables(&self) -> Vec<String> {
        let mut out = Vec::new();
        self.collect_vars(&mut out);
        out.sort();
        out.dedup();
        out
    }

    fn collect_vars(&self, out: &mut Vec<String>) {
        match self {
            Expr::Var(v) => out.push(v.clone()),
            Expr::Int(_) | Expr::Bool(_) => {}
            Expr::Neg(a) | Expr::Not(a) => a.collect_vars(out),
            Expr::Bin(_, a, b) | Expr::Cmp(_, a, b) | Expr::And(a, b) | Expr::Or(a, b) => {
                a.collect_vars(out);
                b.collect_vars(out);
            }
            Expr::Call(_, args) => args.iter().for_each(|a| a.collect_vars(out)),
        }
    }

    pub fn eval(&self, env: &Env) -> Result<Value> {
        match self {
            Expr::Int(n) => Ok(Value::Num(Surd::rational(BigRational::from_integer(n.clone())))),
            Expr::Bool(b) => Ok(Value::Bool(*b)),
            Expr::Var(v) => env
                .get(v)
                .map(|&x| Value::Num(Surd::integer(x)))
                .ok_or_else(|| Error::Expr(format!("unbound variable `{v}`"))),
            Expr::Neg(a) => Ok(Value::Num(a.number(env)?.neg())),
            Expr::Bin(op, a, b) => {
                let (x, y) = (a.number(env)?, b.number(env)?);
                let v = match op {
                    BinOp::Add => x.add(&y),
                    BinOp::Sub => x.sub(&y),
                    BinOp::Mul => x.mul(&y)?,
                    BinOp::Div => x.div(&y)?,
                    BinOp::Pow => x.pow(&y)?,
                };
                Ok(Value::Num(v))
            }
            Expr::Cmp(op, a, b) => {
                let (x, y) = (a.rational(env)?, b.rational(env)?);
                Ok(Value::Bool(match op {
                    CmpOp::Eq => x == y,
                    CmpOp::Ne => x != y,
                    CmpOp::Lt => x < y,
                    CmpOp::Le => x <= y,
                    CmpOp::Gt => x > y,
                    CmpOp::Ge => x >= y,
                }))
            }
            // Short-circuiting lets a case mention variables that only
            // exist on its own branch.
            Expr::And(a, b) => Ok(Value::Bool(a.truth(env)? && b.truth(env)?)),
            Expr::Or(a, b) => Ok(Value::Bool(a.truth(env)? || b.truth(env)?)),
            Expr::Not(a) => Ok(Value::Bool(!a.truth(env)?)),
            Expr::Call(name, args) => call(name, args, env),
        }
    }

    pub fn number(&self, env: &Env) -> Result<Surd> {
        match self.eval(env)? {
            Value::Num(s) => Ok(s),
            Value::Bool(_) => err("expected a number, found a condition"),
        }
    }

    pub fn truth(&self, env: &Env) -> Result<bool> {
        match self.eval(env)? {
            Value::Bool(b) => Ok(b),
            Value::Num(_) => err("expected a condition, found a number"),
        }
    }

    fn rational(&self, env: &Env) -> Result<BigRational> {
        self.number(env)?
            .as_rational()
            .ok_or_else(|| Error::Expr("comparison of irrational values".into()))
    }
}

fn call(name: &str, args: &[Expr], env: &Env) -> Result<Value> {
    let integer = |e: &Expr| -> Result<i64> {
        e.rational(env)?
            .to_integer()
            .to_i64()
            .ok_or_else(|| Error::Expr("argument out of range".into()))
    };
    let arity = |n: usize| {
        if args.len() == n {
            Ok(())
        } else {
            err(format!("{name} takes {n} argument(s)"))
        }
    };
    match name {
        "sqrt" => {
            arity(1)?;
            Ok(Value::Num(Surd::sqrt(&args[0].rational(env)?)?))
        }
        "odd" | "even" | "prime" | "prime_power" => {
            arity(1)?;
            let q = args[0].rational(env)?;
            if !q.is_integer() {
                return Ok(Value::Bool(false));
            }
            let n = integer(&args[0])?;
            Ok(Value::Bool(match name {
                "odd" => n.rem_euclid(2) == 1,
                "even" => n.rem_euclid(2) == 0,
                "prime" => n > 1 && is_prime(n as u64),
                _ => n > 1 && prime_power(n as u64).is_some(),
            }))
        }
        "divides" => {
            arity(2)?;
            let (a, b) = (integer(&args[0])?, integer(&args[1])?);
            Ok(Value::Bool(a != 0 && b % a == 0))
        }
        _ => err(format!("unknown function `{name}`")),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Token {
    Int(BigInt),
    Ident(String),
    Op(&'static str),
}

impl fmt::Display for Token {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Token::Int(n) => write!(f, "{n}"),
            Token::Ident(s) => write!(f, "{s}"),
            Token::Op(s) => write!(f, "{s}"),
        }
    }
}

const OPS: [&str; 14] = ["<=", ">=", "!=", "<", ">", "=", "+", "-", "*", "/", "^", "(", ")", ","];

fn lex(text: &str) -> Result<Vec<Token>> {
    let mut out = Vec::new();
    let mut rest = text;
    while let Some(c) = rest.chars().next() {
        if c.is_whitespace() {
            rest = &rest[c.len_utf8()..];
        } else if c.is_ascii_digit() {
            let end = rest.find(|ch: char| !ch.is_ascii_digit()).unwrap_or(rest.len());
            out.push(Token::Int(rest[..end].parse().expect("digits")));
            rest = &rest[end..];
        } else if c.is_ascii_alphabetic() || c == '_' {
            let end = rest
                .find(|ch: char| !(ch.is_ascii_alphanumeric() || ch == '_'))
                .unwrap_or(rest.len());
            out.push(Token::Ident(rest[..end].to_string()));
            rest = &rest[end..];
        } else if let Some(op) = OPS.iter().find(|op| rest.starts_with(**op)) {
            out.push(Token::Op(op));
            rest = &rest[op.len()..];
        } else {
            return err(format!("unexpected character `{c}` in `{text}`"));
        }
    }
    Ok(out)
}

const FUNCTIONS: [&str; 6] = ["sqrt", "odd", "even", "prime", "prime_power", "divides"];

const KEYWORDS: [&str; 5] = ["and", "or", "not", "true", "false"];

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn eat_op(&mut self, op: &str) -> bool {
        if matches!(self.peek(), Some(Token::Op(o)) if *o == op) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn eat_word(&mut self, word: &str) -> bool {
        if matches!(self.peek(), Some(Token::Ident(w)) if w == word) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn or(&mut self) -> Result<Expr> {
        let mut e = self.and()?;
        while self.eat_word("or") {
            e = Expr::Or(Box::new(e), Box::new(self.and()?));
        }
        Ok(e)
    }

    fn and(&mut self) -> Result<Expr> {
        let mut e = self.not()?;
        while self.eat_word("and") {
            e = Expr::And(Box::new(e), Box::new(self.not()?));
        }
        Ok(e)
    }

    fn not(&mut self) -> Result<Expr> {
        if self.eat_word("not") {
            return Ok(Expr::Not(Box::new(self.not()?)));
        }
        self.cmp()
    }

    fn cmp(&mut self) -> Result<Expr> {
        let lhs = self.sum()?;
        let op = match self.peek() {
            Some(Token::Op("=")) => CmpOp::Eq,
            Some(Token::Op("!=")) => CmpOp::Ne,
            Some(Token::Op("<")) => CmpOp::Lt,
            Some(Token::Op("<=")) => CmpOp::Le,
            Some(Token::Op(">")) => CmpOp::Gt,
            Some(Token::Op(">=")) => CmpOp::Ge,
            _ => return Ok(lhs),
        };
        self.pos += 1;
        Ok(Expr::Cmp(op, Box::new(lhs), Box::new(self.sum()?)))
    }

    fn sum(&mut self) -> Result<Expr> {
        let mut e = self.term()?;
        loop {
            let op = if self.eat_op("+") {
                BinOp::Add
            } else if self.eat_op("-") {
                BinOp::Sub
            } else {
                return Ok(e);
            };
            e = Expr::Bin(op, Box::new(e), Box::new(self.term()?));
        }
    }

    fn starts_operand(&self) -> bool {
        match self.peek() {
            Some(Token::Int(_)) | Some(Token::Op("(")) => true,
            Some(Token::Ident(w)) => !KEYWORDS[..3].contains(&w.as_str()),
            _ => false,
        }
    }

    fn term(&mut self) -> Result<Expr> {
        let mut e = self.unary()?;
        loop {
            let op = if self.eat_op("*") {
                BinOp::Mul
            } else if self.eat_op("/") {
                BinOp::Div
            } else if self.starts_operand() {
                BinOp::Mul
            } else {
                return Ok(e);
            };
            e = Expr::Bin(op, Box::new(e), Box::new(self.unary()?));
        }
    }

    fn unary(&mut self) -> Result<Expr> {
        if self.eat_op("-") {
            return Ok(Expr::Neg(Box::new(self.unary()?)));
        }
        let base = self.atom()?;
        if self.eat_op("^") {
            return Ok(Expr::Bin(BinOp::Pow, Box::new(base), Box::new(self.unary()?)));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Expr> {
        let tok = self.peek().cloned().ok_or_else(|| Error::Expr("unexpected end of input".into()))?;
        self.pos += 1;
        match tok {
            Token::Int(n) => Ok(Expr::Int(n)),
            Token::Op("(") => {
                let e = self.or()?;
                if !self.eat_op(")") {
                    return err("missing `)`");
                }
                Ok(e)
            }
            Token::Ident(w) if w == "true" => Ok(Expr::Bool(true)),
            Token::Ident(w) if w == "false" => Ok(Expr::Bool(false)),
            Token::Ident(w) if KEYWORDS.contains(&w.as_str()) => err(format!("unexpected `{w}`")),
            Token::Ident(w) => {
                // A variable followed by `(` is a product, as in `q(q + 1)`.
                if !FUNCTIONS.contains(&w.as_str()) || !self.eat_op("(") {
                    return Ok(Expr::Var(w));
                }
                let mut args = vec![self.or()?];
                while self.eat_op(",") {
                    args.push(self.or()?);
                }
                if !self.eat_op(")") {
                    return err(format!("missing `)` after arguments of {w}"));
                }
                Ok(Expr::Call(w, args))
            }
            Token::Op(o) => err(format!("unexpected `{o}`")),
        }
    }
}

/// Parses and evaluates a numeric expression.
pub fn eval_number(text: &str, env: &Env) -> Result<Surd> {
    Expr::parse(text)?.number(env)
}

/// Parses and evaluates a condition.
pub fn eval_condition(text: &str, env: &Env) -> Result<bool> {
    Expr::parse(text)?.truth(env)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ratio;

    fn env(pairs: &[(&str, i64)]) -> Env {
        pairs.iter().map(|(k, v)| (k.to_string(), *v)).collect()
    }

    fn num(text: &str, pairs: &[(&str, i64)]) -> Surd {
        eval_number(text, &env(pairs)).unwrap()
    }

    #[test]
    fn arithmetic_and_juxtaposition() {
        assert_eq!(num("2(p^2 - 1)z - 2(p + 1)", &[("p", 2), ("z", 2)]), Surd::integer(6));
        assert_eq!(num("(732z - 228)/19", &[("z", 1)]), Surd::rational(ratio(504, 19)));
        assert_eq!(num("2^(k - 1)(2^k - 1)", &[("k", 3)]), Surd::integer(28));
        assert_eq!(num("-2^2", &[]), Surd::integer(-4));
        assert_eq!(num("2^-2", &[]), Surd::rational(ratio(1, 4)));
        assert_eq!(num("2p^n", &[("p", 3), ("n", 2)]), Surd::integer(18));
        assert_eq!(num("q(q + 1)/2", &[("q", 4)]), Surd::integer(10));
        assert_eq!(num("48z^2/7", &[("z", 2)]), Surd::rational(ratio(192, 7)));
    }

    #[test]
    fn surds() {
        let s = num("17 + 4sqrt(5) + sqrt(17)", &[]);
        assert!((s.to_f64() - 30.067_379).abs() < 1e-5);
        assert_eq!(s.to_string(), "17 + 4*sqrt(5) + sqrt(17)");
        assert_eq!(num("sqrt(20)", &[]), num("2sqrt(5)", &[]));
        assert_eq!(num("sqrt(5)sqrt(5)", &[]), Surd::integer(5));
        assert_eq!(num("sqrt(1/2)", &[]), num("sqrt(2)/2", &[]));
        let w = ratio(1, 1_000_000_000_000);
        let (lo, hi) = num("(526 + 46sqrt(13))/23", &[]).enclosure(&w);
        assert!(&hi - &lo <= w);
        assert!(rational::to_f64(&lo) < 30.0808 && rational::to_f64(&hi) > 30.0806);
        assert!(eval_number("1/(1 + sqrt(2))", &Env::new()).is_err());
    }

    #[test]
    fn quadratic_eigenvalue() {
        let e = num("(3 + sqrt(17))/2", &[]).to_eigenvalue().unwrap();
        match &e {
            Eigenvalue::Isolated { poly, .. } => assert_eq!(*poly, IntPoly::from_i64s(&[-2, -3, 1])),
            _ => panic!("expected an isolated root"),
        }
        assert!((e.to_f64() - (3.0 + 17f64.sqrt()) / 2.0).abs() < 1e-9);
        assert_eq!(num("-1", &[]).to_eigenvalue().unwrap(), Eigenvalue::Integer(-1));
        assert!(num("sqrt(2) + sqrt(3)", &[]).to_eigenvalue().is_err());
    }

    #[test]
    fn conditions() {
        let e = env(&[("m", 3), ("z", 2), ("p", 2), ("q", 7)]);
        let t = |s: &str| eval_condition(s, &e).unwrap();
        assert!(t("m = 3 and (z = 1 or z = 2)"));
        assert!(!t("m = 2 or (m = 4 and z = 1)"));
        assert!(t("p = 2 and q != 3"));
        assert!(t("prime(q) and divides(p, q - 1) and not even(q)"));
        assert!(t("prime_power(8) and not prime_power(12)"));
        assert!(t("true"));
        // Short-circuit: `h` is unbound but never reached.
        assert!(t("m = 3 or h = 9"));
        assert!(eval_condition("h = 9", &e).is_err());
        assert!(eval_condition("m + 1", &e).is_err());
        assert!(Expr::parse("m = = 3").is_err());
    }
}
