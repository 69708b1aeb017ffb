//! Expression syntax for bihomogeneous polynomials.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := ('+' | '-')? factor ('*' factor)*
//! factor := base ('^' posint)?
//! base   := rational | 'i' | 'z' index | 'w' index | 'abs2' '(' holo ')' | '(' expr ')'
//! ```
//!
//! `w<k>` stands for the conjugate of `z<k>` and `i` for the imaginary unit.
//! `holo` is an `expr` without `w` atoms or `abs2`.

use std::collections::BTreeMap;
use std::fmt;

use bihom_core::{BihomForm, GaussianRational, HomogPoly, MultiIndex, Rational};
use num_traits::{One, Zero};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParseError {
    #[error("syntax error at position {position}: {message}")]
    Syntax { position: usize, message: String },

    #[error("variable {var}{index} at position {position} is out of range for n = {n}")]
    IndexOutOfRange {
        position: usize,
        var: char,
        index: usize,
        n: usize,
    },

    #[error("abs2 argument at position {position} must be holomorphic (no w atoms, no abs2)")]
    NotHolomorphicArgument { position: usize },

    #[error("generator must use z atoms only")]
    NotHolomorphic,

    #[error("not bihomogeneous: found bidegrees {}", list_pairs(.bidegrees))]
    NotBihomogeneous { bidegrees: Vec<(usize, usize)> },

    #[error("generator is not homogeneous: found degrees {}", list(.degrees))]
    NotHomogeneous { degrees: Vec<usize> },

    #[error("empty generator in list")]
    EmptyGenerator,

    #[error(transparent)]
    Core(#[from] bihom_core::Error),
}

fn list_pairs(v: &[(usize, usize)]) -> String {
    let parts: Vec<String> = v.iter().map(|(p, q)| format!("({p},{q})")).collect();
    parts.join(", ")
}

fn list(v: &[usize]) -> String {
    let parts: Vec<String> = v.iter().map(usize::to_string).collect();
    parts.join(", ")
}

/// Syntax tree. Variable indices are 1-based as written.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Number(Rational),
    ImaginaryUnit,
    Z(usize),
    W(usize),
    Abs2(Box<Expr>),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, u32),
}

impl Expr {
    /// No `w` atoms and no `abs2` anywhere below.
    pub fn is_holomorphic(&self) -> bool {
        match self {
            Expr::Number(_) | Expr::ImaginaryUnit | Expr::Z(_) => true,
            Expr::W(_) | Expr::Abs2(_) => false,
            Expr::Neg(a) | Expr::Pow(a, _) => a.is_holomorphic(),
            Expr::Add(a, b) | Expr::Sub(a, b) | Expr::Mul(a, b) => {
                a.is_holomorphic() && b.is_holomorphic()
            }
        }
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Number(r) => write!(f, "{r}"),
            Expr::ImaginaryUnit => write!(f, "i"),
            Expr::Z(k) => write!(f, "z{k}"),
            Expr::W(k) => write!(f, "w{k}"),
            Expr::Abs2(a) => write!(f, "abs2({a})"),
            Expr::Neg(a) => write!(f, "-({a})"),
            Expr::Add(a, b) => write!(f, "({a} + {b})"),
            Expr::Sub(a, b) => write!(f, "({a} - {b})"),
            Expr::Mul(a, b) => write!(f, "{a}*{b}"),
            Expr::Pow(a, e) => write!(f, "({a})^{e}"),
        }
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    n: usize,
}

impl<'a> Parser<'a> {
    fn new(text: &'a str, n: usize) -> Self {
        Self {
            src: text.as_bytes(),
            pos: 0,
            n,
        }
    }

    fn error<T>(&self, position: usize, message: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError::Syntax {
            position,
            message: message.into(),
        })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn describe_here(&mut self) -> String {
        match self.peek() {
            None => "unexpected end of input".to_string(),
            Some(c) if c.is_ascii_graphic() => format!("unexpected '{}'", c as char),
            Some(_) => "unexpected character".to_string(),
        }
    }

    fn digits(&mut self) -> Option<&'a str> {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        (self.pos > start).then(|| std::str::from_utf8(&self.src[start..self.pos]).unwrap())
    }

    fn posint(&mut self, what: &str) -> Result<(usize, &'a str), ParseError> {
        self.skip_ws();
        let at = self.pos;
        match self.digits() {
            Some(d) if d.bytes().any(|b| b != b'0') => Ok((at, d)),
            Some(_) => self.error(at, format!("{what} must be positive")),
            None => {
                let msg = format!("expected {what}, {}", self.describe_here());
                self.error(at, msg)
            }
        }
    }

    fn parse_all(&mut self) -> Result<Expr, ParseError> {
        let e = self.expr()?;
        if self.peek().is_some() {
            let at = self.pos;
            let msg = self.describe_here();
            return self.error(at, msg);
        }
        Ok(e)
    }

    fn expr(&mut self) -> Result<Expr, ParseError> {
        let mut acc = self.term()?;
        loop {
            if self.eat(b'+') {
                acc = Expr::Add(Box::new(acc), Box::new(self.term()?));
            } else if self.eat(b'-') {
                acc = Expr::Sub(Box::new(acc), Box::new(self.term()?));
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Expr, ParseError> {
        let negate = if self.eat(b'-') {
            true
        } else {
            self.eat(b'+');
            false
        };
        let mut acc = self.factor()?;
        while self.eat(b'*') {
            acc = Expr::Mul(Box::new(acc), Box::new(self.factor()?));
        }
        Ok(if negate {
            Expr::Neg(Box::new(acc))
        } else {
            acc
        })
    }

    fn factor(&mut self) -> Result<Expr, ParseError> {
        let base = self.base()?;
        if self.eat(b'^') {
            let (at, d) = self.posint("exponent")?;
            let e: u32 = match d.parse() {
                Ok(e) => e,
                Err(_) => return self.error(at, "exponent too large"),
            };
            return Ok(Expr::Pow(Box::new(base), e));
        }
        Ok(base)
    }

    fn base(&mut self) -> Result<Expr, ParseError> {
        let Some(c) = self.peek() else {
            let at = self.pos;
            return self.error(at, "unexpected end of input");
        };
        let at = self.pos;
        if c.is_ascii_digit() {
            let num = self.digits().unwrap();
            let num: num_bigint::BigInt = num.parse().unwrap();
            if self.peek() == Some(b'/') {
                self.pos += 1;
                let (_, den) = self.posint("denominator")?;
                let den: num_bigint::BigInt = den.parse().unwrap();
                return Ok(Expr::Number(Rational::new(num, den)));
            }
            return Ok(Expr::Number(Rational::from_integer(num)));
        }
        if c == b'(' {
            self.pos += 1;
            let e = self.expr()?;
            if !self.eat(b')') {
                let here = self.pos;
                let msg = format!("expected ')', {}", self.describe_here());
                return self.error(here, msg);
            }
            return Ok(e);
        }
        if c.is_ascii_alphabetic() {
            let start = self.pos;
            while self.pos < self.src.len() && self.src[self.pos].is_ascii_alphabetic() {
                self.pos += 1;
            }
            let name = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
            let index = self.digits();
            return match (name, index) {
                ("i", None) => Ok(Expr::ImaginaryUnit),
                ("abs", Some("2")) => self.abs2(at),
                ("z" | "w", Some(d)) => self.variable(at, name, d),
                ("z" | "w", None) => self.error(self.pos, format!("expected index after '{name}'")),
                _ => self.error(
                    at,
                    format!("unknown identifier '{name}{}'", index.unwrap_or("")),
                ),
            };
        }
        let msg = self.describe_here();
        self.error(at, msg)
    }

    fn variable(&self, at: usize, name: &str, digits: &str) -> Result<Expr, ParseError> {
        let var = name.as_bytes()[0] as char;
        let index = digits.parse::<usize>().unwrap_or(usize::MAX);
        if index == 0 || index > self.n {
            return Err(ParseError::IndexOutOfRange {
                position: at,
                var,
                index,
                n: self.n,
            });
        }
        Ok(if var == 'z' {
            Expr::Z(index)
        } else {
            Expr::W(index)
        })
    }

    fn abs2(&mut self, at: usize) -> Result<Expr, ParseError> {
        if !self.eat(b'(') {
            let here = self.pos;
            return self.error(here, "expected '(' after abs2");
        }
        let inner = self.expr()?;
        if !self.eat(b')') {
            let here = self.pos;
            let msg = format!("expected ')', {}", self.describe_here());
            return self.error(here, msg);
        }
        if !inner.is_holomorphic() {
            return Err(ParseError::NotHolomorphicArgument { position: at });
        }
        Ok(Expr::Abs2(Box::new(inner)))
    }
}

/// Parses text into a syntax tree over `n` variables.
pub fn parse_tree(text: &str, n: usize) -> Result<Expr, ParseError> {
    Parser::new(text, n).parse_all()
}

/// A polynomial in `z` and `w = conj z`, keyed by `(z-exponents, w-exponents)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Expansion {
    n: usize,
    terms: BTreeMap<(MultiIndex, MultiIndex), GaussianRational>,
}

impl Expansion {
    fn constant(n: usize, c: GaussianRational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((MultiIndex::zeros(n), MultiIndex::zeros(n)), c);
        }
        Self { n, terms }
    }

    fn atom(n: usize, index: usize, conjugate: bool) -> Self {
        let unit = MultiIndex::unit(n, index - 1);
        let key = if conjugate {
            (MultiIndex::zeros(n), unit)
        } else {
            (unit, MultiIndex::zeros(n))
        };
        Self {
            n,
            terms: BTreeMap::from([(key, GaussianRational::one())]),
        }
    }

    fn add_scaled(&mut self, other: &Expansion, sign: &GaussianRational) {
        for (k, c) in &other.terms {
            let entry = self
                .terms
                .entry(k.clone())
                .or_insert_with(GaussianRational::zero);
            *entry += &(sign * c);
            if entry.is_zero() {
                self.terms.remove(k);
            }
        }
    }

    fn mul(&self, other: &Expansion) -> Expansion {
        let mut out = Expansion::constant(self.n, GaussianRational::zero());
        for ((za, wa), ca) in &self.terms {
            for ((zb, wb), cb) in &other.terms {
                let key = (za.add(zb), wa.add(wb));
                let entry = out
                    .terms
                    .entry(key.clone())
                    .or_insert_with(GaussianRational::zero);
                *entry += &(ca * cb);
                if entry.is_zero() {
                    out.terms.remove(&key);
                }
            }
        }
        out
    }

    fn pow(&self, e: u32) -> Expansion {
        let mut acc = Expansion::constant(self.n, GaussianRational::one());
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// `conj` of the function: swaps `z` and `w` exponents and conjugates coefficients.
    fn conjugate(&self) -> Expansion {
        Expansion {
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|((a, b), c)| ((b.clone(), a.clone()), c.conj()))
                .collect(),
        }
    }

    pub fn of(expr: &Expr, n: usize) -> Expansion {
        match expr {
            Expr::Number(r) => Expansion::constant(n, GaussianRational::real(r.clone())),
            Expr::ImaginaryUnit => Expansion::constant(n, GaussianRational::i()),
            Expr::Z(k) => Expansion::atom(n, *k, false),
            Expr::W(k) => Expansion::atom(n, *k, true),
            Expr::Abs2(h) => {
                let h = Expansion::of(h, n);
                h.mul(&h.conjugate())
            }
            Expr::Neg(a) => {
                let mut out = Expansion::constant(n, GaussianRational::zero());
                out.add_scaled(&Expansion::of(a, n), &-GaussianRational::one());
                out
            }
            Expr::Add(a, b) | Expr::Sub(a, b) => {
                let mut out = Expansion::of(a, n);
                let sign = if matches!(expr, Expr::Add(..)) {
                    GaussianRational::one()
                } else {
                    -GaussianRational::one()
                };
                out.add_scaled(&Expansion::of(b, n), &sign);
                out
            }
            Expr::Mul(a, b) => Expansion::of(a, n).mul(&Expansion::of(b, n)),
            Expr::Pow(a, e) => Expansion::of(a, n).pow(*e),
        }
    }

    /// Distinct `(|alpha|, |beta|)` over the nonzero terms, sorted.
    pub fn bidegrees(&self) -> Vec<(usize, usize)> {
        let mut v: Vec<(usize, usize)> = self
            .terms
            .keys()
            .map(|(a, b)| (a.degree(), b.degree()))
            .collect();
        v.sort_unstable();
        v.dedup();
        v
    }

    pub fn into_form(self) -> Result<BihomForm, ParseError> {
        let bidegrees = self.bidegrees();
        let m = match bidegrees.as_slice() {
            [] => return Ok(BihomForm::zero(self.n, 0)),
            [(p, q)] if p == q => *p,
            _ => {
                let offending = bidegrees
                    .into_iter()
                    .filter(|(p, q)| p != q)
                    .collect::<Vec<_>>();
                let bidegrees = if offending.is_empty() {
                    self.bidegrees()
                } else {
                    offending
                };
                return Err(ParseError::NotBihomogeneous { bidegrees });
            }
        };
        let n = self.n;
        Ok(BihomForm::from_terms(
            n,
            m,
            self.terms.into_iter().map(|((a, b), c)| (a, b, c)),
        )?)
    }
}

/// Parses and expands `text` into a form on `C^n`; the zero polynomial has `m = 0`.
pub fn parse_expression(text: &str, n: usize) -> Result<BihomForm, ParseError> {
    let tree = parse_tree(text, n)?;
    Expansion::of(&tree, n).into_form()
}

/// One homogeneous holomorphic polynomial in `z` atoms.
pub fn parse_holomorphic(text: &str, n: usize) -> Result<HomogPoly, ParseError> {
    let tree = parse_tree(text, n)?;
    if !tree.is_holomorphic() {
        return Err(ParseError::NotHolomorphic);
    }
    let expansion = Expansion::of(&tree, n);
    let mut degrees: Vec<usize> = expansion.bidegrees().into_iter().map(|(p, _)| p).collect();
    degrees.dedup();
    match degrees.as_slice() {
        [] => Err(bihom_core::Error::ZeroGenerator.into()),
        [k] => Ok(HomogPoly::from_terms(
            n,
            *k,
            expansion.terms.into_iter().map(|((a, _), c)| (a, c)),
        )?),
        _ => Err(ParseError::NotHomogeneous { degrees }),
    }
}

/// A `;`-separated list of generators.
pub fn parse_generators(text: &str, n: usize) -> Result<Vec<HomogPoly>, ParseError> {
    text.split(';')
        .map(|piece| {
            if piece.trim().is_empty() {
                Err(ParseError::EmptyGenerator)
            } else {
                parse_holomorphic(piece, n)
            }
        })
        .collect()
}
