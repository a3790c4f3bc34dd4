//! Parser for the one-line function grammar.
//!
//! The grammar mirrors what the library types print, so parsing a printed
//! function recovers it:
//!
//! ```text
//! expr := poly ('/' poly)?            quotient, numerator first
//! poly := term ('|' term)*            '|' is the tropical sum (max)
//! term := coef (':' real (',' real)*)?
//! ```
//!
//! `coef` is a real number or `-inf`; the optional list after `:` is the
//! real exponent vector, one entry per variable, and an omitted vector
//! means the zero vector. Variables are positional: the ambient dimension
//! is the common length of the explicit exponent vectors (1 when every
//! vector is omitted). A `-inf` coefficient is legal but such a term never
//! contributes to a maximum, so it is dropped with a warning.

use std::fmt;
use std::str::FromStr;

use tropnev::{Monomial, TropicalNumber, TropicalPolynomial, TropicalRational};

/// Parse failure with a 1-based source position.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "parse error at line {}, column {}: {}",
            self.line, self.column, self.message
        )
    }
}

impl std::error::Error for ParseError {}

fn err(line: usize, column: usize, message: impl Into<String>) -> ParseError {
    ParseError {
        line,
        column,
        message: message.into(),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Num(String),
    Colon,
    Comma,
    Pipe,
    Slash,
}

fn tok_text(tok: &Tok) -> &str {
    match tok {
        Tok::Num(s) => s,
        Tok::Colon => ":",
        Tok::Comma => ",",
        Tok::Pipe => "|",
        Tok::Slash => "/",
    }
}

#[derive(Debug, Clone)]
struct Spanned {
    tok: Tok,
    line: usize,
    column: usize,
}

fn is_number_char(c: char) -> bool {
    c.is_ascii_alphanumeric() || matches!(c, '.' | '+' | '-' | '_')
}

fn lex(src: &str) -> Result<(Vec<Spanned>, (usize, usize)), ParseError> {
    let mut out = Vec::new();
    let mut line = 1usize;
    let mut column = 1usize;
    let mut chars = src.chars().peekable();
    while let Some(&ch) = chars.peek() {
        if ch == '\n' {
            chars.next();
            line += 1;
            column = 1;
            continue;
        }
        if ch.is_whitespace() {
            chars.next();
            column += 1;
            continue;
        }
        let (tok_line, tok_column) = (line, column);
        let tok = match ch {
            ':' => Tok::Colon,
            ',' => Tok::Comma,
            '|' => Tok::Pipe,
            '/' => Tok::Slash,
            c if is_number_char(c) => {
                let mut text = String::new();
                while let Some(&c) = chars.peek() {
                    if !is_number_char(c) {
                        break;
                    }
                    text.push(c);
                    chars.next();
                    column += 1;
                }
                out.push(Spanned {
                    tok: Tok::Num(text),
                    line: tok_line,
                    column: tok_column,
                });
                continue;
            }
            other => return Err(err(line, column, format!("unexpected character '{other}'"))),
        };
        chars.next();
        column += 1;
        out.push(Spanned {
            tok,
            line: tok_line,
            column: tok_column,
        });
    }
    Ok((out, (line, column)))
}

#[derive(Debug)]
struct RawTerm {
    coeff: TropicalNumber,
    expo: Option<Vec<f64>>,
    line: usize,
    column: usize,
}

#[derive(Debug)]
struct RawPoly {
    terms: Vec<RawTerm>,
    line: usize,
    column: usize,
}

struct Parser {
    toks: Vec<Spanned>,
    pos: usize,
    end: (usize, usize),
}

impl Parser {
    fn peek(&self) -> Option<&Spanned> {
        self.toks.get(self.pos)
    }

    fn advance(&mut self) -> Option<&Spanned> {
        let s = self.toks.get(self.pos);
        if s.is_some() {
            self.pos += 1;
        }
        s
    }

    fn here(&self) -> (usize, usize) {
        self.peek().map_or(self.end, |s| (s.line, s.column))
    }

    fn number(&mut self, what: &str) -> Result<(TropicalNumber, usize, usize), ParseError> {
        match self.advance() {
            Some(Spanned {
                tok: Tok::Num(text),
                line,
                column,
            }) => match TropicalNumber::from_str(text) {
                Ok(v) => Ok((v, *line, *column)),
                Err(_) => Err(err(*line, *column, format!("expected {what}, found '{text}'"))),
            },
            Some(s) => Err(err(
                s.line,
                s.column,
                format!("expected {what}, found '{}'", tok_text(&s.tok)),
            )),
            None => Err(err(
                self.end.0,
                self.end.1,
                format!("expected {what}, found end of input"),
            )),
        }
    }

    fn exponent(&mut self) -> Result<f64, ParseError> {
        let (v, line, column) = self.number("an exponent")?;
        if v.is_bottom() {
            return Err(err(line, column, "exponents must be finite, found '-inf'"));
        }
        Ok(v.value())
    }

    fn term(&mut self) -> Result<RawTerm, ParseError> {
        let (coeff, line, column) = self.number("a coefficient")?;
        let expo = if matches!(self.peek(), Some(s) if s.tok == Tok::Colon) {
            self.advance();
            let mut v = vec![self.exponent()?];
            while matches!(self.peek(), Some(s) if s.tok == Tok::Comma) {
                self.advance();
                v.push(self.exponent()?);
            }
            Some(v)
        } else {
            None
        };
        Ok(RawTerm {
            coeff,
            expo,
            line,
            column,
        })
    }

    fn poly(&mut self) -> Result<RawPoly, ParseError> {
        let (line, column) = self.here();
        let mut terms = vec![self.term()?];
        while matches!(self.peek(), Some(s) if s.tok == Tok::Pipe) {
            self.advance();
            terms.push(self.term()?);
        }
        Ok(RawPoly {
            terms,
            line,
            column,
        })
    }
}

fn parse_raw(src: &str) -> Result<(RawPoly, Option<((usize, usize), RawPoly)>), ParseError> {
    let (toks, end) = lex(src)?;
    let mut p = Parser { toks, pos: 0, end };
    let num = p.poly()?;
    let den = if matches!(p.peek(), Some(s) if s.tok == Tok::Slash) {
        let at = p.here();
        p.advance();
        Some((at, p.poly()?))
    } else {
        None
    };
    if let Some(s) = p.peek() {
        return Err(err(
            s.line,
            s.column,
            format!("unexpected '{}'", tok_text(&s.tok)),
        ));
    }
    Ok((num, den))
}

/// The common exponent-vector length across both sides of the quotient;
/// 1 when every term omits its vector.
fn infer_dim(polys: &[&RawPoly]) -> Result<usize, ParseError> {
    let mut dim: Option<usize> = None;
    for poly in polys {
        for t in &poly.terms {
            if let Some(v) = &t.expo {
                match dim {
                    None => dim = Some(v.len()),
                    Some(n) if n != v.len() => {
                        return Err(err(
                            t.line,
                            t.column,
                            format!(
                                "exponent vector has {} entries, but an earlier term used {}",
                                v.len(),
                                n
                            ),
                        ))
                    }
                    _ => {}
                }
            }
        }
    }
    Ok(dim.unwrap_or(1))
}

fn build_poly(
    raw: &RawPoly,
    dim: usize,
    warnings: &mut Vec<String>,
) -> Result<TropicalPolynomial, ParseError> {
    let mut terms = Vec::new();
    for t in &raw.terms {
        if t.coeff.is_bottom() {
            warnings.push(format!(
                "term at line {}, column {} has coefficient -inf and is dropped",
                t.line, t.column
            ));
            continue;
        }
        let expo = t.expo.clone().unwrap_or_else(|| vec![0.0; dim]);
        terms.push(Monomial::new(t.coeff, expo));
    }
    if terms.is_empty() {
        return Err(err(
            raw.line,
            raw.column,
            "polynomial has no finite terms after dropping -inf coefficients",
        ));
    }
    TropicalPolynomial::new(dim, terms).map_err(|e| err(raw.line, raw.column, e.to_string()))
}

/// Parses `poly ('/' poly)?` into a rational function, returning the
/// warnings for dropped `-inf` terms alongside.
pub fn parse_rational(src: &str) -> Result<(TropicalRational, Vec<String>), ParseError> {
    let (num, den) = parse_raw(src)?;
    let dim = match &den {
        Some((_, d)) => infer_dim(&[&num, d])?,
        None => infer_dim(&[&num])?,
    };
    let mut warnings = Vec::new();
    let num_poly = build_poly(&num, dim, &mut warnings)?;
    let f = match den {
        Some(((line, column), d)) => {
            let den_poly = build_poly(&d, dim, &mut warnings)?;
            TropicalRational::new(num_poly, den_poly)
                .map_err(|e| err(line, column, e.to_string()))?
        }
        None => TropicalRational::entire(num_poly),
    };
    Ok((f, warnings))
}

/// Parses a single polynomial (no `/` allowed).
pub fn parse_polynomial(src: &str) -> Result<(TropicalPolynomial, Vec<String>), ParseError> {
    let (num, den) = parse_raw(src)?;
    if let Some(((line, column), _)) = den {
        return Err(err(
            line,
            column,
            "expected an entire function, found a quotient '/'",
        ));
    }
    let dim = infer_dim(&[&num])?;
    let mut warnings = Vec::new();
    let poly = build_poly(&num, dim, &mut warnings)?;
    Ok((poly, warnings))
}
