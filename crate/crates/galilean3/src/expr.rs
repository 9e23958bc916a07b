//! A small expression language for curve coordinates.
//!
//! Curves are written as expressions in one parameter with named constants,
//! e.g. `a*cos(w*t)`. The grammar (whitespace insignificant):
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := factor (('*' | '/') factor)*
//! factor := '-' factor | atom ('^' integer)?
//! atom   := number | ident | ident '(' expr ')' | '(' expr ')'
//! number := digits ('.' digits?)? (('e' | 'E') ('+' | '-')? digits)?
//! ident  := [a-zA-Z][a-zA-Z0-9_]*
//! ```
//!
//! `^` takes an (optionally signed) integer literal exponent and binds
//! tighter than unary minus, so `-t^2` is `-(t^2)`. The only functions are
//! `sin`, `cos`, `exp` and `sqrt`; any other identifier used with call
//! syntax is rejected. One identifier (by default `t`) is reserved as the
//! curve parameter; every other identifier is a free parameter that must be
//! bound before evaluation.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use thiserror::Error;

use crate::error::CurveError;
use crate::jet::Jet3;
use crate::scalar::Real;

/// Built-in single-argument functions.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Func {
    Sin,
    Cos,
    Exp,
    Sqrt,
}

impl Func {
    fn name(self) -> &'static str {
        match self {
            Func::Sin => "sin",
            Func::Cos => "cos",
            Func::Exp => "exp",
            Func::Sqrt => "sqrt",
        }
    }

    fn from_name(name: &str) -> Option<Self> {
        match name {
            "sin" => Some(Func::Sin),
            "cos" => Some(Func::Cos),
            "exp" => Some(Func::Exp),
            "sqrt" => Some(Func::Sqrt),
            _ => None,
        }
    }
}

/// Abstract syntax tree of a coordinate expression.
#[derive(Debug, Clone, PartialEq)]
pub enum Expr {
    Num(f64),
    /// The curve parameter.
    Var,
    /// A named constant, bound at evaluation time.
    Param(String),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, i32),
    Call(Func, Box<Expr>),
}

/// Parse failure, with the byte offset into the source text.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum ParseError {
    #[error("syntax error at byte {offset}: expected {}, found {found}", expected.join(" or "))]
    Syntax {
        offset: usize,
        expected: Vec<&'static str>,
        found: String,
    },
    #[error("unknown function `{name}` at byte {offset} (have: sin, cos, exp, sqrt)")]
    UnknownFunction { name: String, offset: usize },
}

impl Expr {
    /// Parse with the default parameter identifier `t`.
    pub fn parse(text: &str) -> Result<Expr, ParseError> {
        Self::parse_with_var(text, "t")
    }

    /// Parse with a caller-chosen parameter identifier.
    pub fn parse_with_var(text: &str, var: &str) -> Result<Expr, ParseError> {
        let tokens = lex(text)?;
        let mut p = Parser {
            tokens,
            pos: 0,
            var,
        };
        let e = p.expr()?;
        p.expect_eof()?;
        Ok(e)
    }

    /// Free parameters appearing in the tree, sorted.
    pub fn free_params(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        self.collect_params(&mut out);
        out
    }

    fn collect_params(&self, out: &mut BTreeSet<String>) {
        match self {
            Expr::Num(_) | Expr::Var => {}
            Expr::Param(name) => {
                out.insert(name.clone());
            }
            Expr::Neg(a) | Expr::Pow(a, _) | Expr::Call(_, a) => a.collect_params(out),
            Expr::Add(a, b) | Expr::Sub(a, b) | Expr::Mul(a, b) | Expr::Div(a, b) => {
                a.collect_params(out);
                b.collect_params(out);
            }
        }
    }

    /// Evaluate the jet of the expression at `t`. Parameters are constants.
    pub fn eval_jet<T: Real>(
        &self,
        t: Jet3<T>,
        params: &BTreeMap<String, T>,
    ) -> Result<Jet3<T>, CurveError> {
        let at = t.v.as_f64();
        self.eval_rec(t, params, at)
    }

    fn eval_rec<T: Real>(
        &self,
        t: Jet3<T>,
        params: &BTreeMap<String, T>,
        at: f64,
    ) -> Result<Jet3<T>, CurveError> {
        let jet_err = |source| CurveError::Numeric { at, source };
        Ok(match self {
            Expr::Num(x) => Jet3::constant(T::of(*x)),
            Expr::Var => t,
            Expr::Param(name) => Jet3::constant(*params.get(name).ok_or_else(|| {
                CurveError::UnboundParameter { name: name.clone() }
            })?),
            Expr::Neg(a) => -a.eval_rec(t, params, at)?,
            Expr::Add(a, b) => a.eval_rec(t, params, at)? + b.eval_rec(t, params, at)?,
            Expr::Sub(a, b) => a.eval_rec(t, params, at)? - b.eval_rec(t, params, at)?,
            Expr::Mul(a, b) => a.eval_rec(t, params, at)? * b.eval_rec(t, params, at)?,
            Expr::Div(a, b) => a
                .eval_rec(t, params, at)?
                .try_div(b.eval_rec(t, params, at)?)
                .map_err(jet_err)?,
            Expr::Pow(a, n) => a.eval_rec(t, params, at)?.powi(*n).map_err(jet_err)?,
            Expr::Call(f, a) => {
                let inner = a.eval_rec(t, params, at)?;
                match f {
                    Func::Sin => inner.sin(),
                    Func::Cos => inner.cos(),
                    Func::Exp => inner.exp(),
                    Func::Sqrt => inner.sqrt().map_err(jet_err)?,
                }
            }
        })
    }

    /// Render back to source text using the given parameter identifier.
    /// Parsing the result with the same identifier reproduces the tree.
    pub fn to_text(&self, var: &str) -> String {
        let mut s = String::new();
        self.write(&mut s, var);
        s
    }

    // Precedence: 0 additive, 1 multiplicative, 2 unary minus, 3 power, 4 atom.
    fn prec(&self) -> u8 {
        match self {
            Expr::Add(..) | Expr::Sub(..) => 0,
            Expr::Mul(..) | Expr::Div(..) => 1,
            Expr::Neg(_) => 2,
            Expr::Pow(..) => 3,
            Expr::Num(_) | Expr::Var | Expr::Param(_) | Expr::Call(..) => 4,
        }
    }

    fn write(&self, out: &mut String, var: &str) {
        let child = |c: &Expr, out: &mut String, min_prec: u8| {
            if c.prec() < min_prec {
                out.push('(');
                c.write(out, var);
                out.push(')');
            } else {
                c.write(out, var);
            }
        };
        match self {
            Expr::Num(x) => out.push_str(&format!("{x}")),
            Expr::Var => out.push_str(var),
            Expr::Param(name) => out.push_str(name),
            Expr::Neg(a) => {
                out.push('-');
                child(a, out, 2);
            }
            Expr::Add(a, b) => {
                child(a, out, 0);
                out.push('+');
                child(b, out, 1);
            }
            Expr::Sub(a, b) => {
                child(a, out, 0);
                out.push('-');
                child(b, out, 1);
            }
            Expr::Mul(a, b) => {
                child(a, out, 1);
                out.push('*');
                child(b, out, 2);
            }
            Expr::Div(a, b) => {
                child(a, out, 1);
                out.push('/');
                child(b, out, 2);
            }
            Expr::Pow(a, n) => {
                child(a, out, 4);
                out.push('^');
                out.push_str(&format!("{n}"));
            }
            Expr::Call(f, a) => {
                out.push_str(f.name());
                out.push('(');
                a.write(out, var);
                out.push(')');
            }
        }
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text("t"))
    }
}

// ---------------------------------------------------------------------------
// Lexer
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num { value: f64, int_like: bool },
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    Eof,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Num { value, .. } => format!("number `{value}`"),
            Tok::Ident(name) => format!("identifier `{name}`"),
            Tok::Plus => "'+'".into(),
            Tok::Minus => "'-'".into(),
            Tok::Star => "'*'".into(),
            Tok::Slash => "'/'".into(),
            Tok::Caret => "'^'".into(),
            Tok::LParen => "'('".into(),
            Tok::RParen => "')'".into(),
            Tok::Eof => "end of input".into(),
        }
    }
}

struct Spanned {
    tok: Tok,
    offset: usize,
}

fn lex(text: &str) -> Result<Vec<Spanned>, ParseError> {
    let bytes = text.as_bytes();
    let mut toks = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let b = bytes[i];
        let start = i;
        match b {
            b' ' | b'\t' | b'\r' | b'\n' => {
                i += 1;
                continue;
            }
            b'+' => toks.push(Spanned { tok: Tok::Plus, offset: start }),
            b'-' => toks.push(Spanned { tok: Tok::Minus, offset: start }),
            b'*' => toks.push(Spanned { tok: Tok::Star, offset: start }),
            b'/' => toks.push(Spanned { tok: Tok::Slash, offset: start }),
            b'^' => toks.push(Spanned { tok: Tok::Caret, offset: start }),
            b'(' => toks.push(Spanned { tok: Tok::LParen, offset: start }),
            b')' => toks.push(Spanned { tok: Tok::RParen, offset: start }),
            b'0'..=b'9' => {
                let mut int_like = true;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                if i < bytes.len() && bytes[i] == b'.' {
                    int_like = false;
                    i += 1;
                    while i < bytes.len() && bytes[i].is_ascii_digit() {
                        i += 1;
                    }
                }
                if i < bytes.len() && (bytes[i] == b'e' || bytes[i] == b'E') {
                    // Only an exponent if digits (with optional sign) follow.
                    let mut j = i + 1;
                    if j < bytes.len() && (bytes[j] == b'+' || bytes[j] == b'-') {
                        j += 1;
                    }
                    if j < bytes.len() && bytes[j].is_ascii_digit() {
                        int_like = false;
                        i = j;
                        while i < bytes.len() && bytes[i].is_ascii_digit() {
                            i += 1;
                        }
                    }
                }
                let value: f64 = text[start..i].parse().map_err(|_| ParseError::Syntax {
                    offset: start,
                    expected: vec!["number"],
                    found: format!("`{}`", &text[start..i]),
                })?;
                toks.push(Spanned {
                    tok: Tok::Num { value, int_like },
                    offset: start,
                });
                continue;
            }
            b'a'..=b'z' | b'A'..=b'Z' => {
                while i < bytes.len()
                    && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_')
                {
                    i += 1;
                }
                toks.push(Spanned {
                    tok: Tok::Ident(text[start..i].to_string()),
                    offset: start,
                });
                continue;
            }
            _ => {
                let ch = text[start..].chars().next().unwrap();
                return Err(ParseError::Syntax {
                    offset: start,
                    expected: vec!["number", "identifier", "operator", "'('", "')'"],
                    found: format!("`{ch}`"),
                });
            }
        }
        i += 1;
    }
    toks.push(Spanned {
        tok: Tok::Eof,
        offset: text.len(),
    });
    Ok(toks)
}

// ---------------------------------------------------------------------------
// Recursive-descent parser
// ---------------------------------------------------------------------------

struct Parser<'a> {
    tokens: Vec<Spanned>,
    pos: usize,
    var: &'a str,
}

impl Parser<'_> {
    fn peek(&self) -> &Tok {
        &self.tokens[self.pos].tok
    }

    fn offset(&self) -> usize {
        self.tokens[self.pos].offset
    }

    fn bump(&mut self) -> Tok {
        let t = self.tokens[self.pos].tok.clone();
        self.pos += 1;
        t
    }

    fn syntax(&self, expected: Vec<&'static str>) -> ParseError {
        ParseError::Syntax {
            offset: self.offset(),
            expected,
            found: self.peek().describe(),
        }
    }

    fn expr(&mut self) -> Result<Expr, ParseError> {
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

    fn term(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.factor()?;
        loop {
            match self.peek() {
                Tok::Star => {
                    self.bump();
                    lhs = Expr::Mul(Box::new(lhs), Box::new(self.factor()?));
                }
                Tok::Slash => {
                    self.bump();
                    lhs = Expr::Div(Box::new(lhs), Box::new(self.factor()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn factor(&mut self) -> Result<Expr, ParseError> {
        if matches!(self.peek(), Tok::Minus) {
            self.bump();
            return Ok(Expr::Neg(Box::new(self.factor()?)));
        }
        let base = self.atom()?;
        if matches!(self.peek(), Tok::Caret) {
            self.bump();
            let n = self.integer_exponent()?;
            return Ok(Expr::Pow(Box::new(base), n));
        }
        Ok(base)
    }

    fn integer_exponent(&mut self) -> Result<i32, ParseError> {
        let negative = if matches!(self.peek(), Tok::Minus) {
            self.bump();
            true
        } else {
            false
        };
        match self.peek().clone() {
            Tok::Num { value, int_like }
                if int_like && value.fract() == 0.0 && value <= i32::MAX as f64 =>
            {
                self.bump();
                let n = value as i32;
                Ok(if negative { -n } else { n })
            }
            _ => Err(self.syntax(vec!["integer exponent"])),
        }
    }

    fn atom(&mut self) -> Result<Expr, ParseError> {
        match self.peek().clone() {
            Tok::Num { value, .. } => {
                self.bump();
                Ok(Expr::Num(value))
            }
            Tok::Ident(name) => {
                let ident_offset = self.offset();
                self.bump();
                if matches!(self.peek(), Tok::LParen) {
                    let func = Func::from_name(&name).ok_or(ParseError::UnknownFunction {
                        name: name.clone(),
                        offset: ident_offset,
                    })?;
                    self.bump();
                    let arg = self.expr()?;
                    if !matches!(self.peek(), Tok::RParen) {
                        return Err(self.syntax(vec!["')'"]));
                    }
                    self.bump();
                    Ok(Expr::Call(func, Box::new(arg)))
                } else if name == self.var {
                    Ok(Expr::Var)
                } else {
                    Ok(Expr::Param(name))
                }
            }
            Tok::LParen => {
                self.bump();
                let inner = self.expr()?;
                if !matches!(self.peek(), Tok::RParen) {
                    return Err(self.syntax(vec!["')'"]));
                }
                self.bump();
                Ok(inner)
            }
            _ => Err(self.syntax(vec!["number", "identifier", "'('", "'-'"])),
        }
    }

    fn expect_eof(&mut self) -> Result<(), ParseError> {
        if matches!(self.peek(), Tok::Eof) {
            Ok(())
        } else {
            Err(self.syntax(vec![
                "'+'", "'-'", "'*'", "'/'", "'^'", "end of input",
            ]))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::jet::JetError;
    use std::collections::BTreeMap;

    fn p(src: &str) -> Expr {
        Expr::parse(src).unwrap()
    }

    #[test]
    fn parses_product_with_call() {
        let e = p("a*cos(w*t)");
        let expected = Expr::Mul(
            Box::new(Expr::Param("a".into())),
            Box::new(Expr::Call(
                Func::Cos,
                Box::new(Expr::Mul(
                    Box::new(Expr::Param("w".into())),
                    Box::new(Expr::Var),
                )),
            )),
        );
        assert_eq!(e, expected);
        let params: Vec<_> = e.free_params().into_iter().collect();
        assert_eq!(params, vec!["a".to_string(), "w".to_string()]);
    }

    #[test]
    fn parses_power_and_sum() {
        let e = p("t^3 + t");
        assert_eq!(
            e,
            Expr::Add(
                Box::new(Expr::Pow(Box::new(Expr::Var), 3)),
                Box::new(Expr::Var)
            )
        );
    }

    #[test]
    fn call_syntax_requires_parentheses() {
        let err = Expr::parse("sin t").unwrap_err();
        match err {
            ParseError::Syntax { offset, .. } => assert_eq!(offset, 4),
            other => panic!("expected syntax error, got {other:?}"),
        }
    }

    #[test]
    fn unknown_function_is_reported_with_offset() {
        let err = Expr::parse("2*foo(t)").unwrap_err();
        assert_eq!(
            err,
            ParseError::UnknownFunction {
                name: "foo".into(),
                offset: 2
            }
        );
    }

    #[test]
    fn unary_minus_binds_looser_than_power() {
        assert_eq!(p("-t^2"), Expr::Neg(Box::new(Expr::Pow(Box::new(Expr::Var), 2))));
        assert_eq!(
            p("(-t)^2"),
            Expr::Pow(Box::new(Expr::Neg(Box::new(Expr::Var))), 2)
        );
    }

    #[test]
    fn signed_exponent() {
        assert_eq!(p("t^-2"), Expr::Pow(Box::new(Expr::Var), -2));
        assert!(Expr::parse("t^2.5").is_err());
    }

    #[test]
    fn scientific_notation_numbers() {
        assert_eq!(p("1e-3"), Expr::Num(1e-3));
        assert_eq!(p("2.5E+2"), Expr::Num(250.0));
    }

    #[test]
    fn variable_name_is_configurable() {
        let e = Expr::parse_with_var("s^2", "s").unwrap();
        assert_eq!(e, Expr::Pow(Box::new(Expr::Var), 2));
        // With the default variable, `s` is just a parameter.
        assert_eq!(p("s"), Expr::Param("s".into()));
    }

    #[test]
    fn eval_square_matches_jet_example() {
        let e = p("t^2");
        let j = e.eval_jet(Jet3::var(3.0), &BTreeMap::new()).unwrap();
        assert_eq!(j, Jet3::new(9.0, 6.0, 2.0, 0.0));
    }

    #[test]
    fn eval_scaled_cosine() {
        let e = p("a*cos(t)");
        let mut params = BTreeMap::new();
        params.insert("a".to_string(), 2.0);
        let j = e.eval_jet(Jet3::var(0.0), &params).unwrap();
        assert_eq!(j, Jet3::new(2.0, 0.0, -2.0, 0.0));
    }

    #[test]
    fn eval_sqrt_out_of_domain() {
        let e = p("sqrt(t)");
        let err = e.eval_jet(Jet3::var(-1.0), &BTreeMap::new()).unwrap_err();
        assert_eq!(
            err,
            CurveError::Numeric {
                at: -1.0,
                source: JetError::Domain {
                    func: "sqrt",
                    value: -1.0
                }
            }
        );
    }

    #[test]
    fn eval_unbound_parameter() {
        let e = p("a*t");
        let err = e.eval_jet(Jet3::var(1.0), &BTreeMap::new()).unwrap_err();
        assert_eq!(err, CurveError::UnboundParameter { name: "a".into() });
    }

    #[test]
    fn print_round_trip_spot_checks() {
        for src in [
            "a*cos(w*t)",
            "t^3+t",
            "-t^2",
            "(-t)^2",
            "a-(b-t)",
            "t*-a",
            "1/(2+cos(t))",
            "(t^2)^3",
            "--t",
        ] {
            let e = p(src);
            let printed = e.to_text("t");
            assert_eq!(p(&printed), e, "round trip through `{printed}`");
        }
    }

    #[test]
    fn whitespace_is_insignificant() {
        assert_eq!(p(" a * cos( w\t*
 t ) "), p("a*cos(w*t)"));
    }
}
