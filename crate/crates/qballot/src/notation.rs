//! Reads polynomials written the way the displays print them, so rendered
//! output can be compared against hand-written targets up to normalization.
//!
//! Accepted: integers, `q`, `x`, `+ - * /`, `^e` / `^{e}` / `^-e`, implicit
//! multiplication, parentheses, `{x \choose j}_q` (or `{x choose j}_q`),
//! `[n]_q`, `[n]_q!`, `\frac{a}{b}`, `\cdot`, `\left`, `\right`. Division
//! and negative powers need a divisor free of `x`.

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use qballot_core::qcore::{q_factorial, q_int, qbinom_x};
use qballot_core::{BigRat, QLaurent, QRatFunc, XPoly};

use crate::error::{FormatError, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Num(BigInt),
    Q,
    X,
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    LBrace,
    RBrace,
    LBracket,
    RBracket,
    Underscore,
    Bang,
    Choose,
    Frac,
}

fn lex(s: &str) -> Result<Vec<(usize, Tok)>> {
    let err = |pos: usize, msg: &str| FormatError::Notation { input: s.into(), pos, msg: msg.into() };
    let bytes = s.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        let start = i;
        if c.is_ascii_whitespace() {
            i += 1;
            continue;
        }
        if c.is_ascii_digit() {
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            out.push((start, Tok::Num(s[start..i].parse().expect("ascii digits"))));
            continue;
        }
        if c == '\\' {
            i += 1;
            while i < bytes.len() && bytes[i].is_ascii_alphabetic() {
                i += 1;
            }
            match &s[start + 1..i] {
                "choose" => out.push((start, Tok::Choose)),
                "frac" => out.push((start, Tok::Frac)),
                "cdot" | "times" => out.push((start, Tok::Star)),
                "left" | "right" => {}
                // `\,` and friends
                "" if i < bytes.len() && matches!(bytes[i], b',' | b';' | b' ') => i += 1,
                _ => return Err(err(start, "unknown command")),
            }
            continue;
        }
        if s[i..].starts_with("choose") {
            out.push((start, Tok::Choose));
            i += "choose".len();
            continue;
        }
        let t = match c {
            'q' => Tok::Q,
            'x' => Tok::X,
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '*' => Tok::Star,
            '/' => Tok::Slash,
            '^' => Tok::Caret,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            '{' => Tok::LBrace,
            '}' => Tok::RBrace,
            '[' => Tok::LBracket,
            ']' => Tok::RBracket,
            '_' => Tok::Underscore,
            '!' => Tok::Bang,
            _ => return Err(err(start, "unexpected character")),
        };
        out.push((start, t));
        i += c.len_utf8();
    }
    Ok(out)
}

struct Parser<'a> {
    input: &'a str,
    toks: Vec<(usize, Tok)>,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn err(&self, msg: &str) -> FormatError {
        let pos = self.toks.get(self.pos).map_or(self.input.len(), |t| t.0);
        FormatError::Notation { input: self.input.into(), pos, msg: msg.into() }
    }

    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|t| &t.1)
    }

    fn eat(&mut self, t: &Tok) -> bool {
        if self.peek() == Some(t) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, t: Tok) -> Result<()> {
        if self.eat(&t) {
            Ok(())
        } else {
            Err(self.err(&format!("expected {t:?}")))
        }
    }

    fn expr(&mut self) -> Result<XPoly> {
        let mut acc = if self.eat(&Tok::Minus) {
            -&self.term()?
        } else {
            self.eat(&Tok::Plus);
            self.term()?
        };
        loop {
            if self.eat(&Tok::Plus) {
                acc = &acc + &self.term()?;
            } else if self.eat(&Tok::Minus) {
                acc = &acc - &self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<XPoly> {
        let mut acc = self.factor()?;
        loop {
            if self.eat(&Tok::Star) {
                acc = &acc * &self.factor()?;
            } else if self.eat(&Tok::Slash) {
                let d = self.factor()?;
                acc = self.divide(&acc, &d)?;
            } else if matches!(
                self.peek(),
                Some(Tok::Num(_) | Tok::Q | Tok::X | Tok::LParen | Tok::LBrace | Tok::LBracket | Tok::Frac)
            ) {
                acc = &acc * &self.factor()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn divide(&self, a: &XPoly, d: &XPoly) -> Result<XPoly> {
        let c = constant_of(d).ok_or_else(|| self.err("divisor depends on x"))?;
        let inv = c.recip().map_err(|_| self.err("division by zero"))?;
        Ok(a.scale(&inv))
    }

    fn factor(&mut self) -> Result<XPoly> {
        if self.eat(&Tok::Minus) {
            return Ok(-&self.factor()?);
        }
        let base = self.atom()?;
        if !self.eat(&Tok::Caret) {
            return Ok(base);
        }
        let e = self.exponent()?;
        if e >= 0 {
            return Ok(pow(&base, e as u32));
        }
        let inv = self.divide(&XPoly::one(), &base)?;
        Ok(pow(&inv, e.unsigned_abs() as u32))
    }

    fn int(&mut self) -> Result<i64> {
        let neg = self.eat(&Tok::Minus);
        match self.peek().cloned() {
            Some(Tok::Num(v)) => {
                self.pos += 1;
                let v = v.to_i64().ok_or_else(|| self.err("integer too large"))?;
                Ok(if neg { -v } else { v })
            }
            _ => Err(self.err("expected an integer")),
        }
    }

    fn exponent(&mut self) -> Result<i64> {
        if self.eat(&Tok::LBrace) {
            let e = self.int()?;
            self.expect(Tok::RBrace)?;
            Ok(e)
        } else {
            self.int()
        }
    }

    fn subscript_q(&mut self) -> Result<()> {
        self.expect(Tok::Underscore)?;
        if self.eat(&Tok::LBrace) {
            self.expect(Tok::Q)?;
            return self.expect(Tok::RBrace);
        }
        self.expect(Tok::Q)
    }

    fn small_nonneg(&mut self) -> Result<u32> {
        let v = self.int()?;
        u32::try_from(v).map_err(|_| self.err("expected a nonnegative index"))
    }

    fn atom(&mut self) -> Result<XPoly> {
        let Some(t) = self.peek().cloned() else {
            return Err(self.err("unexpected end of input"));
        };
        self.pos += 1;
        match t {
            Tok::Num(v) => Ok(XPoly::constant(QRatFunc::constant(BigRat::from_integer(v)))),
            Tok::Q => Ok(XPoly::constant(QRatFunc::q())),
            Tok::X => Ok(XPoly::x()),
            Tok::LParen => {
                let e = self.expr()?;
                self.expect(Tok::RParen)?;
                Ok(e)
            }
            Tok::LBrace => {
                if self.peek() == Some(&Tok::X) && self.toks.get(self.pos + 1).map(|t| &t.1) == Some(&Tok::Choose) {
                    self.pos += 2;
                    let j = self.small_nonneg()?;
                    self.expect(Tok::RBrace)?;
                    self.subscript_q()?;
                    return Ok(qbinom_x(j));
                }
                let e = self.expr()?;
                self.expect(Tok::RBrace)?;
                Ok(e)
            }
            Tok::LBracket => {
                let n = self.int()?;
                self.expect(Tok::RBracket)?;
                self.subscript_q()?;
                if self.eat(&Tok::Bang) {
                    let n = u32::try_from(n).map_err(|_| self.err("negative factorial"))?;
                    return Ok(XPoly::constant(QRatFunc::from_laurent(q_factorial(n))));
                }
                Ok(XPoly::constant(QRatFunc::from_laurent(q_int(n))))
            }
            Tok::Frac => {
                self.expect(Tok::LBrace)?;
                let a = self.expr()?;
                self.expect(Tok::RBrace)?;
                self.expect(Tok::LBrace)?;
                let b = self.expr()?;
                self.expect(Tok::RBrace)?;
                self.divide(&a, &b)
            }
            _ => {
                self.pos -= 1;
                Err(self.err("unexpected token"))
            }
        }
    }
}

fn constant_of(p: &XPoly) -> Option<QRatFunc> {
    match p.degree() {
        None => Some(QRatFunc::zero()),
        Some(0) => Some(p.coeff(0)),
        _ => None,
    }
}

fn pow(p: &XPoly, e: u32) -> XPoly {
    (0..e).fold(XPoly::one(), |acc, _| &acc * p)
}

/// Parses a polynomial in `x` over `Q(q)`.
pub fn parse_xpoly(s: &str) -> Result<XPoly> {
    let toks = lex(s)?;
    let mut p = Parser { input: s, toks, pos: 0 };
    let v = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(p.err("trailing input"));
    }
    Ok(v)
}

/// Parses an expression that must not involve `x`.
pub fn parse_laurent(s: &str) -> Result<QLaurent> {
    let p = parse_xpoly(s)?;
    let bad = || FormatError::Notation { input: s.into(), pos: 0, msg: "not a Laurent polynomial in q".into() };
    constant_of(&p).and_then(|c| c.as_laurent().cloned()).ok_or_else(bad)
}

/// True when both texts denote the same polynomial.
pub fn same_polynomial(a: &str, b: &str) -> Result<bool> {
    Ok(parse_xpoly(a)? == parse_xpoly(b)?)
}

/// Canonical rendering: ascending powers of `x`, ascending powers of `q`.
pub fn normalize(s: &str) -> Result<String> {
    Ok(parse_xpoly(s)?.to_string())
}

#[cfg(test)]
mod tests {
    use super::*;
    use qballot_core::QBinomExpansion;

    fn lp(low: i64, cs: &[i64]) -> QRatFunc {
        QRatFunc::from_laurent(QLaurent::from_i64s(low, cs))
    }

    #[test]
    fn simple_forms() {
        assert_eq!(parse_xpoly("1 + qx").unwrap(), XPoly::linear(QRatFunc::one(), QRatFunc::q()));
        assert_eq!(parse_laurent("q^{-1}").unwrap(), QLaurent::monomial_int(1, -1));
        assert_eq!(parse_laurent("q^-2 + 2q").unwrap(), QLaurent::from_i64s(-2, &[1, 0, 0, 2]));
        assert_eq!(parse_laurent("(1/2)q^2").unwrap(), QLaurent::monomial(qballot_core::arith::rat(1, 2), 2));
        assert_eq!(parse_laurent("[3]_q").unwrap(), QLaurent::from_i64s(0, &[1, 1, 1]));
        assert_eq!(parse_laurent("[3]_q!").unwrap(), q_factorial(3));
        assert_eq!(parse_laurent("-q\\cdot q").unwrap(), QLaurent::monomial_int(-1, 2));
        assert_eq!(parse_laurent("\\frac{q^2-1}{q-1}").unwrap(), QLaurent::from_i64s(0, &[1, 1]));
    }

    #[test]
    fn qbinomial_basis_elements() {
        let e = QBinomExpansion::new(vec![lp(0, &[1, 1]), lp(1, &[1, 1, 1]), lp(4, &[1])]);
        let printed = "(1+q)+(q+q^2+q^3){x\\choose 1}_q+q^{4}{x\\choose 2}_q";
        assert_eq!(parse_xpoly(printed).unwrap(), e.to_xpoly());
        assert_eq!(parse_xpoly(&e.to_string()).unwrap(), e.to_xpoly());
        assert_eq!(parse_xpoly("{x choose 0}_{q}").unwrap(), XPoly::one());
    }

    #[test]
    fn own_rendering_round_trips() {
        let c1 = QRatFunc::new(QLaurent::from_i64s(1, &[1, 2, 2]), QLaurent::from_i64s(0, &[1, 1])).unwrap();
        let c2 = QRatFunc::new(QLaurent::monomial_int(1, 4), QLaurent::from_i64s(0, &[1, 1])).unwrap();
        let p = XPoly::from_coeffs(vec![lp(-1, &[1, 1]), c1, c2]);
        assert_eq!(parse_xpoly(&p.to_string()).unwrap(), p);
        assert_eq!(normalize(&p.to_string()).unwrap(), p.to_string());
    }

    #[test]
    fn comparator_ignores_order_and_grouping() {
        assert!(same_polynomial("q^3+q^2+2q+1", "1+2q+q^2+q^3").unwrap());
        assert!(same_polynomial("(q^9+q^8+q^7+q^6+q^5)q^{-1}", "q^4+q^5+q^6+q^7+q^8").unwrap());
        assert!(!same_polynomial("1+q", "1+q^2").unwrap());
    }

    #[test]
    fn errors_carry_a_position() {
        let e = parse_xpoly("1 + y").unwrap_err();
        assert!(matches!(e, FormatError::Notation { pos: 4, .. }), "{e}");
        assert!(parse_xpoly("(1+q").is_err());
        assert!(parse_xpoly("1/x").is_err());
        assert!(parse_xpoly("x^-1").is_err());
        assert!(parse_xpoly("1/(q-q)").is_err());
        assert!(parse_laurent("x").is_err());
        assert!(parse_xpoly("").is_err());
    }
}
