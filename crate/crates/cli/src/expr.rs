//! Expression language: AST, parser and canonical printer.
//!
//! ```text
//! sum    := tens (('+' | '-') tens)*
//! tens   := prod ('ox' prod)*          at most three factors
//! prod   := unary ('*' unary)*
//! unary  := '-' unary | power
//! power  := atom ('^' UINT)?
//! atom   := NUM | 't' | 'hb' | '(' sum ')'
//!         | ('L' | 'W') '(' INT ')'
//!         | ('hb_r' | 'hb_f') '(' RAT ',' UINT ')'
//!         | ('C' | 'D' | 'U' | 'V') '(' RAT ')'
//!         | ('Delta0' | 'S0' | 'eps' | 'Delta' | 'S') '(' sum ')'
//! ```
//!
//! `NUM` is a non-negative integer or `p/q`; `RAT` and `INT` may carry a
//! leading minus sign. `⊗` is accepted as a spelling of `ox`.

use std::fmt;

use w22_core::scalar::{self, Scalar};
use w22_core::GenKind;

use crate::error::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TwistName {
    C,
    D,
    U,
    V,
}

impl TwistName {
    pub const ALL: [TwistName; 4] = [TwistName::C, TwistName::D, TwistName::U, TwistName::V];

    pub fn name(self) -> &'static str {
        match self {
            TwistName::C => "C",
            TwistName::D => "D",
            TwistName::U => "U",
            TwistName::V => "V",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MapName {
    Delta0,
    S0,
    Eps,
    Delta,
    S,
}

impl MapName {
    pub const ALL: [MapName; 5] = [
        MapName::Delta0,
        MapName::S0,
        MapName::Eps,
        MapName::Delta,
        MapName::S,
    ];

    pub fn name(self) -> &'static str {
        match self {
            MapName::Delta0 => "Delta0",
            MapName::S0 => "S0",
            MapName::Eps => "eps",
            MapName::Delta => "Delta",
            MapName::S => "S",
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum Expr {
    /// Non-negative rational literal.
    Num(Scalar),
    Gen(GenKind, i64),
    Hbar,
    T,
    HbarRising(Scalar, u32),
    HbarFalling(Scalar, u32),
    Twist(TwistName, Scalar),
    Apply(MapName, Box<Expr>),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    /// Two or three factors.
    Tensor(Vec<Expr>),
    Pow(Box<Expr>, u32),
}

pub const MAX_TENSOR_ARITY: usize = 3;

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(Scalar),
    Ident(String),
    LParen,
    RParen,
    Comma,
    Plus,
    Minus,
    Star,
    Caret,
    Ox,
    End,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Num(q) => write!(f, "number `{}`", scalar::display(q)),
            Tok::Ident(s) => write!(f, "`{s}`"),
            Tok::LParen => f.write_str("`(`"),
            Tok::RParen => f.write_str("`)`"),
            Tok::Comma => f.write_str("`,`"),
            Tok::Plus => f.write_str("`+`"),
            Tok::Minus => f.write_str("`-`"),
            Tok::Star => f.write_str("`*`"),
            Tok::Caret => f.write_str("`^`"),
            Tok::Ox => f.write_str("`ox`"),
            Tok::End => f.write_str("end of input"),
        }
    }
}

fn syntax(pos: usize, message: impl Into<String>) -> CliError {
    CliError::Syntax {
        pos,
        message: message.into(),
    }
}

/// Tokens paired with their character offset.
fn lex(input: &str) -> Result<Vec<(usize, Tok)>, CliError> {
    let chars: Vec<char> = input.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let start = i;
        let tok = match c {
            c if c.is_whitespace() => {
                i += 1;
                continue;
            }
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            ',' => Tok::Comma,
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '*' => Tok::Star,
            '^' => Tok::Caret,
            '⊗' => Tok::Ox,
            c if c.is_ascii_digit() => {
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                if i < chars.len() && chars[i] == '/' {
                    i += 1;
                    if i >= chars.len() || !chars[i].is_ascii_digit() {
                        return Err(syntax(i, "expected denominator after `/`"));
                    }
                    while i < chars.len() && chars[i].is_ascii_digit() {
                        i += 1;
                    }
                }
                let text: String = chars[start..i].iter().collect();
                let q = scalar::parse(&text).map_err(|e| syntax(start, e.to_string()))?;
                out.push((start, Tok::Num(q)));
                continue;
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                    i += 1;
                }
                let text: String = chars[start..i].iter().collect();
                out.push((
                    start,
                    if text == "ox" {
                        Tok::Ox
                    } else {
                        Tok::Ident(text)
                    },
                ));
                continue;
            }
            other => return Err(syntax(i, format!("unexpected character `{other}`"))),
        };
        out.push((start, tok));
        i += 1;
    }
    out.push((chars.len(), Tok::End));
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    at: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.at].1
    }

    fn pos(&self) -> usize {
        self.toks[self.at].0
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.at].1.clone();
        if t != Tok::End {
            self.at += 1;
        }
        t
    }

    fn eat(&mut self, t: &Tok) -> bool {
        if self.peek() == t {
            self.bump();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, t: Tok, what: &str) -> Result<(), CliError> {
        if self.eat(&t) {
            Ok(())
        } else {
            Err(self.unexpected(what))
        }
    }

    fn unexpected(&self, expected: &str) -> CliError {
        syntax(
            self.pos(),
            format!("expected {expected}, found {}", self.peek()),
        )
    }

    fn sum(&mut self) -> Result<Expr, CliError> {
        let mut lhs = self.tens()?;
        loop {
            if self.eat(&Tok::Plus) {
                lhs = Expr::Add(Box::new(lhs), Box::new(self.tens()?));
            } else if self.eat(&Tok::Minus) {
                lhs = Expr::Sub(Box::new(lhs), Box::new(self.tens()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn tens(&mut self) -> Result<Expr, CliError> {
        let start = self.pos();
        let first = self.prod()?;
        let mut factors = vec![first];
        while self.eat(&Tok::Ox) {
            factors.push(self.prod()?);
        }
        match factors.len() {
            1 => Ok(factors.pop().expect("one factor")),
            n if n <= MAX_TENSOR_ARITY => Ok(Expr::Tensor(factors)),
            n => Err(CliError::Arity {
                pos: start,
                message: format!(
                    "tensor product of {n} factors, at most {MAX_TENSOR_ARITY} allowed"
                ),
            }),
        }
    }

    fn prod(&mut self) -> Result<Expr, CliError> {
        let mut lhs = self.unary()?;
        while self.eat(&Tok::Star) {
            lhs = Expr::Mul(Box::new(lhs), Box::new(self.unary()?));
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<Expr, CliError> {
        if self.eat(&Tok::Minus) {
            return Ok(Expr::Neg(Box::new(self.unary()?)));
        }
        let base = self.atom()?;
        if self.eat(&Tok::Caret) {
            let k = self.uint("a non-negative integer exponent")?;
            return Ok(Expr::Pow(Box::new(base), k));
        }
        Ok(base)
    }

    fn uint(&mut self, what: &str) -> Result<u32, CliError> {
        let pos = self.pos();
        match self.peek().clone() {
            Tok::Num(q) if q.is_integer() => {
                self.bump();
                scalar::to_i64(&q)
                    .and_then(|v| u32::try_from(v).ok())
                    .ok_or_else(|| syntax(pos, "integer out of range"))
            }
            _ => Err(self.unexpected(what)),
        }
    }

    fn signed_rational(&mut self) -> Result<Scalar, CliError> {
        let neg = self.eat(&Tok::Minus);
        match self.peek().clone() {
            Tok::Num(q) => {
                self.bump();
                Ok(if neg { -q } else { q })
            }
            _ => Err(self.unexpected("a rational number")),
        }
    }

    fn signed_int(&mut self) -> Result<i64, CliError> {
        let pos = self.pos();
        let q = self.signed_rational()?;
        scalar::to_i64(&q).ok_or_else(|| syntax(pos, "expected an integer index"))
    }

    fn args<T>(&mut self, f: impl FnOnce(&mut Self) -> Result<T, CliError>) -> Result<T, CliError> {
        self.expect(Tok::LParen, "`(`")?;
        let v = f(self)?;
        self.expect(Tok::RParen, "`)`")?;
        Ok(v)
    }

    fn atom(&mut self) -> Result<Expr, CliError> {
        let pos = self.pos();
        let tok = self.peek().clone();
        match tok {
            Tok::Num(q) => {
                self.bump();
                Ok(Expr::Num(q))
            }
            Tok::LParen => {
                self.bump();
                let e = self.sum()?;
                self.expect(Tok::RParen, "`)`")?;
                Ok(e)
            }
            Tok::Ident(name) => {
                self.bump();
                self.named(&name, pos)
            }
            _ => Err(self.unexpected("an expression")),
        }
    }

    fn named(&mut self, name: &str, pos: usize) -> Result<Expr, CliError> {
        match name {
            "t" => return Ok(Expr::T),
            "hb" => return Ok(Expr::Hbar),
            "L" => {
                return self
                    .args(|p| p.signed_int())
                    .map(|n| Expr::Gen(GenKind::L, n))
            }
            "W" => {
                return self
                    .args(|p| p.signed_int())
                    .map(|n| Expr::Gen(GenKind::W, n))
            }
            "hb_r" | "hb_f" => {
                let (b, k) = self.args(|p| {
                    let b = p.signed_rational()?;
                    p.expect(Tok::Comma, "`,`")?;
                    Ok((b, p.uint("a non-negative integer")?))
                })?;
                return Ok(if name == "hb_r" {
                    Expr::HbarRising(b, k)
                } else {
                    Expr::HbarFalling(b, k)
                });
            }
            _ => {}
        }
        if let Some(tw) = TwistName::ALL.into_iter().find(|t| t.name() == name) {
            return self
                .args(|p| p.signed_rational())
                .map(|b| Expr::Twist(tw, b));
        }
        if let Some(map) = MapName::ALL.into_iter().find(|m| m.name() == name) {
            return self
                .args(|p| p.sum())
                .map(|e| Expr::Apply(map, Box::new(e)));
        }
        Err(CliError::UnknownIdentifier {
            pos,
            name: name.to_string(),
        })
    }
}

pub fn parse(input: &str) -> Result<Expr, CliError> {
    let mut p = Parser {
        toks: lex(input)?,
        at: 0,
    };
    let e = p.sum()?;
    if *p.peek() != Tok::End {
        return Err(p.unexpected("an operator or end of input"));
    }
    Ok(e)
}

/// Binding strength, loosest first.
fn level(e: &Expr) -> u8 {
    match e {
        Expr::Add(..) | Expr::Sub(..) => 1,
        Expr::Tensor(_) => 2,
        Expr::Mul(..) => 3,
        Expr::Neg(_) => 4,
        Expr::Pow(..) => 5,
        _ => 6,
    }
}

fn write_at(f: &mut fmt::Formatter<'_>, e: &Expr, min: u8) -> fmt::Result {
    if level(e) < min {
        write!(f, "({e})")
    } else {
        write!(f, "{e}")
    }
}

/// Canonical form with the fewest parentheses that parse back to the same
/// tree.
impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Num(q) => f.write_str(&scalar::display(q)),
            Expr::Gen(kind, n) => write!(f, "{kind}({n})"),
            Expr::Hbar => f.write_str("hb"),
            Expr::T => f.write_str("t"),
            Expr::HbarRising(b, k) => write!(f, "hb_r({}, {k})", scalar::display(b)),
            Expr::HbarFalling(b, k) => write!(f, "hb_f({}, {k})", scalar::display(b)),
            Expr::Twist(tw, b) => write!(f, "{}({})", tw.name(), scalar::display(b)),
            Expr::Apply(map, e) => write!(f, "{}({e})", map.name()),
            Expr::Neg(e) => {
                f.write_str("-")?;
                write_at(f, e, 4)
            }
            Expr::Add(a, b) | Expr::Sub(a, b) => {
                write_at(f, a, 1)?;
                f.write_str(if matches!(self, Expr::Add(..)) {
                    " + "
                } else {
                    " - "
                })?;
                write_at(f, b, 2)
            }
            Expr::Mul(a, b) => {
                write_at(f, a, 3)?;
                f.write_str(" * ")?;
                write_at(f, b, 4)
            }
            Expr::Tensor(factors) => {
                for (i, x) in factors.iter().enumerate() {
                    if i > 0 {
                        f.write_str(" ox ")?;
                    }
                    write_at(f, x, 3)?;
                }
                Ok(())
            }
            Expr::Pow(e, k) => {
                write_at(f, e, 6)?;
                write!(f, "^{k}")
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use w22_core::scalar::{int, rat};

    fn b(e: Expr) -> Box<Expr> {
        Box::new(e)
    }

    #[test]
    fn precedence() {
        let e = parse("L(3)*W(-2) + 2").unwrap();
        assert_eq!(
            e,
            Expr::Add(
                b(Expr::Mul(
                    b(Expr::Gen(GenKind::L, 3)),
                    b(Expr::Gen(GenKind::W, -2))
                )),
                b(Expr::Num(int(2)))
            )
        );
        let e = parse("L(1) ox L(2)^2 * hb + 1 ox 1").unwrap();
        let Expr::Add(lhs, _) = e else {
            panic!("not a sum")
        };
        let Expr::Tensor(f) = *lhs else {
            panic!("not a tensor")
        };
        assert_eq!(f.len(), 2);
        assert!(matches!(&f[1], Expr::Mul(p, _) if matches!(**p, Expr::Pow(_, 2))));
    }

    #[test]
    fn maps_and_literals() {
        assert_eq!(
            parse("Delta(L(3))").unwrap(),
            Expr::Apply(MapName::Delta, b(Expr::Gen(GenKind::L, 3)))
        );
        assert_eq!(
            parse("hb_r(-1/2, 3)").unwrap(),
            Expr::HbarRising(rat(-1, 2), 3)
        );
        assert_eq!(
            parse("C(1/2)").unwrap(),
            Expr::Twist(TwistName::C, rat(1, 2))
        );
        assert_eq!(parse("2/4").unwrap(), Expr::Num(rat(1, 2)));
        assert_eq!(
            parse("-t^2").unwrap(),
            Expr::Neg(b(Expr::Pow(b(Expr::T), 2)))
        );
    }

    #[test]
    fn syntax_errors_carry_positions() {
        match parse("L(") {
            Err(CliError::Syntax { pos, .. }) => assert_eq!(pos, 2),
            other => panic!("{other:?}"),
        }
        match parse("L(1) + * 2") {
            Err(CliError::Syntax { pos, .. }) => assert_eq!(pos, 7),
            other => panic!("{other:?}"),
        }
        assert!(matches!(
            parse("1 ox 2 ox 3 ox 4"),
            Err(CliError::Arity { pos: 0, .. })
        ));
        assert!(matches!(
            parse("Q(1)"),
            Err(CliError::UnknownIdentifier { pos: 0, .. })
        ));
        assert!(matches!(
            parse("L(1/2)"),
            Err(CliError::Syntax { pos: 2, .. })
        ));
        assert!(matches!(
            parse("L(1))"),
            Err(CliError::Syntax { pos: 4, .. })
        ));
    }

    #[test]
    fn printer_keeps_needed_parentheses() {
        for text in [
            "L(1) - (L(2) - L(3))",
            "(L(1) ox L(2)) ox L(3)",
            "L(1) * (L(2) * L(3))",
            "(-L(1))^2",
            "(L(1)^2)^3",
            "-(L(1) + 1)",
            "L(1) - -L(2)",
            "Delta(L(1) + W(-1)) * (1 ox t)",
        ] {
            let e = parse(text).unwrap();
            assert_eq!(e.to_string(), text);
            assert_eq!(parse(&e.to_string()).unwrap(), e);
        }
    }
}
