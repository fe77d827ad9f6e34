//! Small helpers shared by the plain-text formats.

use thiserror::Error;

use crate::rational::{Fraction, Int};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{message} (in {input:?}{})", line.map(|l| format!(", line {l}")).unwrap_or_default())]
pub struct ParseError {
    pub message: String,
    pub input: String,
    pub line: Option<usize>,
}

impl ParseError {
    pub fn new(message: impl Into<String>, input: impl Into<String>) -> Self {
        ParseError {
            message: message.into(),
            input: input.into(),
            line: None,
        }
    }

    pub fn at_line(mut self, line: usize) -> Self {
        self.line = Some(line);
        self
    }
}

pub(crate) fn strip_ws(s: &str) -> String {
    s.chars().filter(|c| !c.is_whitespace()).collect()
}

pub(crate) fn int(s: &str, input: &str) -> Result<Int, ParseError> {
    s.parse()
        .map_err(|_| ParseError::new(format!("expected an integer, found {s:?}"), input))
}

pub(crate) fn fraction(s: &str, input: &str) -> Result<Fraction, ParseError> {
    s.parse()
        .map_err(|_| ParseError::new(format!("expected a fraction a/b, found {s:?}"), input))
}

pub(crate) fn unsigned<T: std::str::FromStr>(s: &str, input: &str) -> Result<T, ParseError> {
    s.parse().map_err(|_| {
        ParseError::new(
            format!("expected a nonnegative integer, found {s:?}"),
            input,
        )
    })
}

/// Parses `(a,b),(c,d),...` (whitespace already removed) into integer pairs.
pub(crate) fn int_pairs(s: &str, input: &str) -> Result<Vec<(Int, Int)>, ParseError> {
    let mut out = Vec::new();
    let mut rest = s;
    while !rest.is_empty() {
        let body = rest
            .strip_prefix('(')
            .ok_or_else(|| ParseError::new("expected '(' to open a pair", input))?;
        let close = body
            .find(')')
            .ok_or_else(|| ParseError::new("unterminated pair", input))?;
        let (a, b) = body[..close]
            .split_once(',')
            .ok_or_else(|| ParseError::new("pair must have two entries", input))?;
        out.push((int(a, input)?, int(b, input)?));
        rest = &body[close + 1..];
        if let Some(r) = rest.strip_prefix(',') {
            if r.is_empty() {
                return Err(ParseError::new("trailing comma", input));
            }
            rest = r;
        } else if !rest.is_empty() {
            return Err(ParseError::new("expected ',' between pairs", input));
        }
    }
    Ok(out)
}

/// Parses a comma-separated list (possibly empty) with the given item parser.
pub(crate) fn list<T>(
    s: &str,
    input: &str,
    item: impl Fn(&str, &str) -> Result<T, ParseError>,
) -> Result<Vec<T>, ParseError> {
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',').map(|x| item(x, input)).collect()
}
