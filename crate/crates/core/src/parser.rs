//! Recursive-descent parser for univariate polynomial text such as
//! `"z^3 - 7z + 6"` or `"2*x^2 + 0.5 x - 1"`.
//!
//! ```text
//! poly        := term (('+' | '-') term)*
//! term        := coefficient? ('*'? var ('^' integer)?)?     (non-empty)
//! coefficient := decimal literal, optional sign on the first term only
//! var         := one ASCII letter, the same throughout
//! ```
//!
//! Whitespace may appear between any two tokens. Repeated powers add up.
//! Coefficients are kept as written; no monic normalization happens here.

use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::poly::{PolyError, RealPolynomial};

/// Largest exponent accepted; higher ones are reported as overflow.
pub const MAX_EXPONENT: usize = 1024;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ParseErrorKind {
    UnexpectedToken,
    BadExponent,
    MultipleVariables,
    EmptyInput,
    Overflow,
}

impl fmt::Display for ParseErrorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ParseErrorKind::UnexpectedToken => "unexpected-token",
            ParseErrorKind::BadExponent => "bad-exponent",
            ParseErrorKind::MultipleVariables => "multiple-variables",
            ParseErrorKind::EmptyInput => "empty-input",
            ParseErrorKind::Overflow => "overflow",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error, Serialize)]
#[error("{kind}: {message} (at position {position})")]
pub struct ParseError {
    /// 0-based character offset into the source.
    pub position: usize,
    pub message: String,
    pub kind: ParseErrorKind,
}

impl ParseError {
    fn new(kind: ParseErrorKind, position: usize, message: impl Into<String>) -> Self {
        ParseError {
            position,
            message: message.into(),
            kind,
        }
    }

    /// The source followed by a caret line pointing at the error position.
    pub fn render(&self, source: &str) -> String {
        let caret: String = source
            .chars()
            .take(self.position)
            .map(|c| if c == '\t' { '\t' } else { ' ' })
            .collect();
        format!("{source}\n{caret}^")
    }
}

/// A parsed polynomial together with the variable letter it used.
#[derive(Debug, Clone, PartialEq)]
pub struct ParsedPolynomial {
    pub polynomial: RealPolynomial,
    pub variable: Option<char>,
}

pub fn parse_polynomial(text: &str) -> Result<RealPolynomial, ParseError> {
    parse_with_variable(text).map(|p| p.polynomial)
}

pub fn parse_with_variable(text: &str) -> Result<ParsedPolynomial, ParseError> {
    Parser::new(text).parse()
}

struct Parser {
    chars: Vec<char>,
    pos: usize,
    variable: Option<char>,
    coefficients: Vec<f64>,
}

impl Parser {
    fn new(text: &str) -> Self {
        Parser {
            chars: text.chars().collect(),
            pos: 0,
            variable: None,
            coefficients: Vec::new(),
        }
    }

    fn skip_ws(&mut self) {
        while self.chars.get(self.pos).is_some_and(|c| c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    /// Position to blame for a problem at the current point: the current
    /// character, or the last non-blank one when input has run out.
    fn blame(&self) -> usize {
        if self.pos < self.chars.len() {
            return self.pos;
        }
        self.chars
            .iter()
            .rposition(|c| !c.is_whitespace())
            .unwrap_or(0)
    }

    fn error(&self, kind: ParseErrorKind, message: impl Into<String>) -> ParseError {
        ParseError::new(kind, self.blame(), message)
    }

    fn parse(mut self) -> Result<ParsedPolynomial, ParseError> {
        if self.peek().is_none() {
            return Err(ParseError::new(
                ParseErrorKind::EmptyInput,
                0,
                "no polynomial given",
            ));
        }
        let mut sign = match self.peek() {
            Some('-') => {
                self.pos += 1;
                -1.0
            }
            Some('+') => {
                self.pos += 1;
                1.0
            }
            _ => 1.0,
        };
        loop {
            self.term(sign)?;
            match self.peek() {
                None => break,
                Some('+') => sign = 1.0,
                Some('-') => sign = -1.0,
                Some(c) => {
                    return Err(self.error(
                        ParseErrorKind::UnexpectedToken,
                        format!("expected '+', '-' or end of input, found '{c}'"),
                    ))
                }
            }
            self.pos += 1;
        }

        match RealPolynomial::new(self.coefficients) {
            Ok(polynomial) => Ok(ParsedPolynomial {
                polynomial,
                variable: self.variable,
            }),
            Err(PolyError::ZeroPolynomial) => Err(ParseError::new(
                ParseErrorKind::EmptyInput,
                0,
                "all coefficients cancel to the zero polynomial",
            )),
            Err(PolyError::NonFinite { .. }) => Err(ParseError::new(
                ParseErrorKind::Overflow,
                0,
                "coefficient sum is not finite",
            )),
            Err(e) => Err(ParseError::new(
                ParseErrorKind::UnexpectedToken,
                0,
                e.to_string(),
            )),
        }
    }

    fn term(&mut self, sign: f64) -> Result<(), ParseError> {
        let start = self.peek().map(|_| self.pos);
        let coefficient = self.number()?;
        let mut power = 0;
        let mut has_var = false;
        match self.peek() {
            Some('*') => {
                if coefficient.is_none() {
                    return Err(
                        self.error(ParseErrorKind::UnexpectedToken, "'*' needs a coefficient")
                    );
                }
                self.pos += 1;
                match self.peek() {
                    Some(c) if c.is_ascii_alphabetic() => {}
                    _ => {
                        return Err(self.error(
                            ParseErrorKind::UnexpectedToken,
                            "expected a variable after '*'",
                        ))
                    }
                }
                power = self.variable_power()?;
                has_var = true;
            }
            Some(c) if c.is_ascii_alphabetic() => {
                power = self.variable_power()?;
                has_var = true;
            }
            _ => {}
        }
        if coefficient.is_none() && !has_var {
            return Err(self.error(ParseErrorKind::UnexpectedToken, "expected a term"));
        }
        let value = sign * coefficient.unwrap_or(1.0);
        if self.coefficients.len() <= power {
            self.coefficients.resize(power + 1, 0.0);
        }
        let sum = self.coefficients[power] + value;
        if !sum.is_finite() {
            return Err(ParseError::new(
                ParseErrorKind::Overflow,
                start.unwrap_or(0),
                "coefficient is too large",
            ));
        }
        self.coefficients[power] = sum;
        Ok(())
    }

    fn digits(&mut self) -> usize {
        let begin = self.pos;
        while self.chars.get(self.pos).is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        self.pos - begin
    }

    fn number(&mut self) -> Result<Option<f64>, ParseError> {
        match self.peek() {
            Some(c) if c.is_ascii_digit() || c == '.' => {}
            _ => return Ok(None),
        }
        let begin = self.pos;
        let whole = self.digits();
        let mut frac = 0;
        if self.chars.get(self.pos) == Some(&'.') {
            self.pos += 1;
            frac = self.digits();
        }
        if whole == 0 && frac == 0 {
            self.pos = begin;
            return Err(self.error(
                ParseErrorKind::UnexpectedToken,
                "expected digits around '.'",
            ));
        }
        let literal: String = self.chars[begin..self.pos].iter().collect();
        let value: f64 = literal.parse().map_err(|_| {
            ParseError::new(ParseErrorKind::UnexpectedToken, begin, "malformed number")
        })?;
        if !value.is_finite() {
            return Err(ParseError::new(
                ParseErrorKind::Overflow,
                begin,
                "coefficient is too large",
            ));
        }
        Ok(Some(value))
    }

    fn variable_power(&mut self) -> Result<usize, ParseError> {
        let var = self.chars[self.pos];
        match self.variable {
            None => self.variable = Some(var),
            Some(v) if v != var => {
                return Err(self.error(
                    ParseErrorKind::MultipleVariables,
                    format!("variable '{var}' differs from earlier '{v}'"),
                ))
            }
            Some(_) => {}
        }
        self.pos += 1;
        if self.peek() != Some('^') {
            return Ok(1);
        }
        self.pos += 1;
        self.skip_ws();
        let begin = self.pos;
        if self.digits() == 0 {
            return Err(self.error(
                ParseErrorKind::BadExponent,
                "exponent must be a nonnegative integer",
            ));
        }
        if self.chars.get(self.pos) == Some(&'.') {
            return Err(self.error(ParseErrorKind::BadExponent, "exponent must be an integer"));
        }
        let text: String = self.chars[begin..self.pos].iter().collect();
        match text.parse::<usize>() {
            Ok(n) if n <= MAX_EXPONENT => Ok(n),
            _ => Err(ParseError::new(
                ParseErrorKind::Overflow,
                begin,
                format!("exponent exceeds {MAX_EXPONENT}"),
            )),
        }
    }
}
