//! Recursive-descent parser for family definition documents.
//!
//! ```text
//! name: mruv
//! params: a
//! poly: x^2 - 2*a*x - 1
//! range a: -100..100
//! ```
//!
//! Expressions follow
//!
//! ```text
//! expr   := term (("+"|"-") term)* ;
//! term   := factor ("*" factor)* ;
//! factor := ("-")? atom ("^" nat)? ;
//! atom   := nat | "x" | identifier | "(" expr ")" ;
//! ```
//!
//! with no implicit multiplication.

use num_bigint::BigInt;

use super::{ParamFamily, ParamRange};
use crate::error::{Error, Hypothesis, Result};
use crate::intpoly::{IntPoly, MultiParamPoly, ParamXPoly};

const MAX_EXPONENT: u32 = 4096;
const DEFAULT_RANGE: (i64, i64) = (1, 10);

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Nat(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
    End,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Nat(n) => format!("number `{n}`"),
            Tok::Ident(s) => format!("identifier `{s}`"),
            Tok::Plus => "`+`".into(),
            Tok::Minus => "`-`".into(),
            Tok::Star => "`*`".into(),
            Tok::Caret => "`^`".into(),
            Tok::LParen => "`(`".into(),
            Tok::RParen => "`)`".into(),
            Tok::End => "end of input".into(),
        }
    }
}

/// Where an expression sits in the document, for diagnostics.
#[derive(Clone, Copy, Debug)]
struct Origin {
    line: usize,
    column: usize,
}

fn syntax(origin: Origin, col: usize, expected: &str, found: String) -> Error {
    Error::Syntax {
        line: origin.line,
        column: origin.column + col,
        expected: expected.to_string(),
        found,
    }
}

fn is_ident_start(c: char) -> bool {
    c.is_ascii_alphabetic() || c == '_'
}

fn is_ident_char(c: char) -> bool {
    c.is_ascii_alphanumeric() || c == '_'
}

fn lex(src: &str, origin: Origin) -> Result<Vec<(Tok, usize)>> {
    let chars: Vec<char> = src.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let start = i;
        let tok = match c {
            ' ' | '\t' => {
                i += 1;
                continue;
            }
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '*' => Tok::Star,
            '^' => Tok::Caret,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            d if d.is_ascii_digit() => {
                while i + 1 < chars.len() && chars[i + 1].is_ascii_digit() {
                    i += 1;
                }
                let s: String = chars[start..=i].iter().collect();
                Tok::Nat(s.parse().expect("digits parse as an integer"))
            }
            a if is_ident_start(a) => {
                while i + 1 < chars.len() && is_ident_char(chars[i + 1]) {
                    i += 1;
                }
                Tok::Ident(chars[start..=i].iter().collect())
            }
            other => {
                return Err(syntax(
                    origin,
                    start,
                    "number, identifier, operator or parenthesis",
                    format!("character `{other}`"),
                ))
            }
        };
        out.push((tok, start));
        i += 1;
    }
    out.push((Tok::End, chars.len()));
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Expr {
    Num(BigInt),
    Var,
    Param(usize),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, u32),
}

struct Parser<'a> {
    toks: Vec<(Tok, usize)>,
    pos: usize,
    origin: Origin,
    var: Option<&'a str>,
    params: &'a [String],
}

impl<'a> Parser<'a> {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].0
    }

    fn bump(&mut self) -> (Tok, usize) {
        let t = self.toks[self.pos].clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn error(&self, expected: &str) -> Error {
        let (tok, col) = &self.toks[self.pos];
        syntax(self.origin, *col, expected, tok.describe())
    }

    fn expr(&mut self) -> Result<Expr> {
        let mut lhs = self.term()?;
        loop {
            match self.peek() {
                Tok::Plus => {
                    self.bump();
                    lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
                }
                Tok::Minus => {
                    self.bump();
                    lhs = Expr::Sub(Box::new(lhs), Box::new(self.term()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn term(&mut self) -> Result<Expr> {
        let mut lhs = self.factor()?;
        while *self.peek() == Tok::Star {
            self.bump();
            lhs = Expr::Mul(Box::new(lhs), Box::new(self.factor()?));
        }
        Ok(lhs)
    }

    fn factor(&mut self) -> Result<Expr> {
        let negate = if *self.peek() == Tok::Minus {
            self.bump();
            true
        } else {
            false
        };
        let mut e = self.atom()?;
        if *self.peek() == Tok::Caret {
            self.bump();
            let k = match self.peek().clone() {
                Tok::Nat(n) => n,
                _ => return Err(self.error("exponent (natural number)")),
            };
            let k = u32::try_from(&k)
                .ok()
                .filter(|&k| k <= MAX_EXPONENT)
                .ok_or_else(|| self.error(&format!("exponent at most {MAX_EXPONENT}")))?;
            self.bump();
            e = Expr::Pow(Box::new(e), k);
        }
        Ok(if negate { Expr::Neg(Box::new(e)) } else { e })
    }

    fn atom(&mut self) -> Result<Expr> {
        match self.peek().clone() {
            Tok::Nat(n) => {
                self.bump();
                Ok(Expr::Num(n))
            }
            Tok::Ident(name) => {
                if Some(name.as_str()) == self.var {
                    self.bump();
                    return Ok(Expr::Var);
                }
                match self.params.iter().position(|p| *p == name) {
                    Some(i) => {
                        self.bump();
                        Ok(Expr::Param(i))
                    }
                    None => Err(self.error(&self.atom_expectation())),
                }
            }
            Tok::LParen => {
                self.bump();
                let e = self.expr()?;
                if *self.peek() != Tok::RParen {
                    return Err(self.error("`)`, `+`, `-`, `*` or `^`"));
                }
                self.bump();
                Ok(e)
            }
            _ => Err(self.error(&self.atom_expectation())),
        }
    }

    fn atom_expectation(&self) -> String {
        let mut names: Vec<String> = self.var.iter().map(|v| format!("`{v}`")).collect();
        names.extend(self.params.iter().map(|p| format!("`{p}`")));
        if names.is_empty() {
            "number or `(`".into()
        } else {
            format!("number, `(`, or one of {}", names.join(", "))
        }
    }
}

fn eval(e: &Expr, params: &[String]) -> ParamXPoly {
    match e {
        Expr::Num(n) => ParamXPoly::constant(MultiParamPoly::constant(params, n.clone())),
        Expr::Var => ParamXPoly::x(params),
        Expr::Param(i) => ParamXPoly::constant(MultiParamPoly::var(params, *i)),
        Expr::Neg(a) => -&eval(a, params),
        Expr::Add(a, b) => &eval(a, params) + &eval(b, params),
        Expr::Sub(a, b) => &eval(a, params) - &eval(b, params),
        Expr::Mul(a, b) => &eval(a, params) * &eval(b, params),
        Expr::Pow(a, k) => eval(a, params).pow(*k),
    }
}

fn parse_at(
    src: &str,
    origin: Origin,
    var: Option<&str>,
    params: &[String],
) -> Result<ParamXPoly> {
    let mut p = Parser {
        toks: lex(src, origin)?,
        pos: 0,
        origin,
        var,
        params,
    };
    let e = p.expr()?;
    if *p.peek() != Tok::End {
        return Err(p.error("`+`, `-`, `*`, `^` or end of expression"));
    }
    Ok(eval(&e, params))
}

/// Parses a polynomial in `x` over the given parameters.
pub fn parse_param_x_poly(src: &str, params: &[String]) -> Result<ParamXPoly> {
    parse_at(src, Origin { line: 1, column: 1 }, Some("x"), params)
}

/// Parses an integer polynomial in the named variable.
pub fn parse_int_poly_in(src: &str, var: &str) -> Result<IntPoly> {
    let p = parse_at(src, Origin { line: 1, column: 1 }, Some(var), &[])?;
    Ok(p.instantiate_values(&[]))
}

/// Parses an integer polynomial in `x`.
pub fn parse_int_poly(src: &str) -> Result<IntPoly> {
    parse_int_poly_in(src, "x")
}

/// Parses a polynomial in the parameters alone (no `x`).
pub fn parse_param_poly(src: &str, params: &[String]) -> Result<MultiParamPoly> {
    let p = parse_at(src, Origin { line: 1, column: 1 }, None, params)?;
    Ok(p.coeff(0))
}

pub(crate) fn valid_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    chars.next().is_some_and(is_ident_start) && chars.all(is_ident_char)
}

struct Line<'a> {
    number: usize,
    key: &'a str,
    value: &'a str,
    value_column: usize,
}

fn split_line(number: usize, raw: &str) -> Result<Line<'_>> {
    let Some(colon) = raw.find(':') else {
        return Err(Error::Syntax {
            line: number,
            column: raw.len() - raw.trim_start().len() + 1,
            expected: "`key: value`".into(),
            found: format!("`{}`", raw.trim()),
        });
    };
    let key = raw[..colon].trim();
    let rest = &raw[colon + 1..];
    let value = rest.trim();
    let lead = rest.len() - rest.trim_start().len();
    Ok(Line {
        number,
        key,
        value,
        value_column: raw[..colon + 1 + lead].chars().count() + 1,
    })
}

fn expect_key<'a>(line: Option<Line<'a>>, key: &str, after: usize) -> Result<Line<'a>> {
    match line {
        Some(l) if l.key == key => Ok(l),
        Some(l) => Err(Error::Syntax {
            line: l.number,
            column: 1,
            expected: format!("`{key}:` line"),
            found: format!("`{}:`", l.key),
        }),
        None => Err(Error::Syntax {
            line: after + 1,
            column: 1,
            expected: format!("`{key}:` line"),
            found: "end of document".into(),
        }),
    }
}

fn parse_i64(s: &str, line: usize, column: usize) -> Result<i64> {
    s.trim().parse().map_err(|_| Error::Syntax {
        line,
        column,
        expected: "integer".into(),
        found: format!("`{}`", s.trim()),
    })
}

/// Parses and validates a family definition document.
pub fn parse_family(text: &str) -> Result<ParamFamily> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l))
        .filter(|(_, l)| {
            let t = l.trim();
            !t.is_empty() && !t.starts_with('#')
        })
        .map(|(n, l)| split_line(n, l));

    let name_line = expect_key(lines.next().transpose()?, "name", 0)?;
    if !valid_identifier(name_line.value) {
        return Err(Error::Syntax {
            line: name_line.number,
            column: name_line.value_column,
            expected: "identifier".into(),
            found: format!("`{}`", name_line.value),
        });
    }
    let params_line = expect_key(lines.next().transpose()?, "params", name_line.number)?;
    let mut params: Vec<String> = Vec::new();
    if !params_line.value.is_empty() {
        for raw in params_line.value.split(',') {
            let p = raw.trim();
            if !valid_identifier(p) {
                return Err(Error::Syntax {
                    line: params_line.number,
                    column: params_line.value_column,
                    expected: "comma-separated identifiers".into(),
                    found: format!("`{p}`"),
                });
            }
            if p == "x" || params.iter().any(|q| q == p) {
                return Err(Error::HypothesisViolation(Hypothesis::BadParameterName(
                    p.to_string(),
                )));
            }
            params.push(p.to_string());
        }
    }
    if params.len() > 2 {
        return Err(Error::HypothesisViolation(Hypothesis::TooManyParameters(
            params.len(),
        )));
    }
    let poly_line = expect_key(lines.next().transpose()?, "poly", params_line.number)?;
    let poly = parse_at(
        poly_line.value,
        Origin {
            line: poly_line.number,
            column: poly_line.value_column,
        },
        Some("x"),
        &params,
    )?;

    let mut ranges: Vec<Option<ParamRange>> = vec![None; params.len()];
    for line in lines {
        let line = line?;
        if line.key == "name" {
            return Err(Error::HypothesisViolation(Hypothesis::MultipleFamilies));
        }
        let Some(pname) = line.key.strip_prefix("range ").map(str::trim) else {
            return Err(Error::Syntax {
                line: line.number,
                column: 1,
                expected: "`range <param>: <lo>..<hi>` line".into(),
                found: format!("`{}:`", line.key),
            });
        };
        let Some(idx) = params.iter().position(|p| p == pname) else {
            return Err(Error::Syntax {
                line: line.number,
                column: 1,
                expected: "declared parameter name".into(),
                found: format!("`{pname}`"),
            });
        };
        let Some((lo, hi)) = line.value.split_once("..") else {
            return Err(Error::Syntax {
                line: line.number,
                column: line.value_column,
                expected: "`<lo>..<hi>`".into(),
                found: format!("`{}`", line.value),
            });
        };
        let lo = parse_i64(lo, line.number, line.value_column)?;
        let hi = parse_i64(hi, line.number, line.value_column)?;
        ranges[idx] = Some(ParamRange::new(pname, lo, hi)?);
    }
    let ranges = ranges
        .into_iter()
        .zip(&params)
        .map(|(r, p)| r.unwrap_or_else(|| ParamRange::new(p, DEFAULT_RANGE.0, DEFAULT_RANGE.1).unwrap()))
        .collect();
    ParamFamily::new(name_line.value, poly, ranges, "user")
}
