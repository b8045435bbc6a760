//! Line-oriented tokenizer shared by the arrangement, incidence and
//! realization file formats. `#` starts a comment; blank lines are skipped.

use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::error::ParseError;

#[derive(Debug, Clone, Copy)]
pub(crate) struct Token<'a> {
    pub text: &'a str,
    pub line: usize,
    pub column: usize,
}

impl<'a> Token<'a> {
    pub fn error(&self, message: impl Into<String>) -> ParseError {
        ParseError::new(self.line, self.column, message)
    }

    pub fn parse_usize(&self) -> Result<usize, ParseError> {
        self.text.parse().map_err(|_| {
            self.error(format!(
                "expected a nonnegative integer, found `{}`",
                self.text
            ))
        })
    }

    pub fn parse_rational(&self) -> Result<BigRational, ParseError> {
        parse_rational(self.text).map_err(|msg| self.error(msg))
    }
}

/// Non-empty, comment-stripped lines split into whitespace-separated tokens.
pub(crate) fn token_lines(input: &str) -> Vec<Vec<Token<'_>>> {
    let mut out = Vec::new();
    for (idx, raw) in input.lines().enumerate() {
        let content = match raw.find('#') {
            Some(pos) => &raw[..pos],
            None => raw,
        };
        let mut tokens = Vec::new();
        let mut start = None;
        for (pos, ch) in content.char_indices() {
            if ch.is_whitespace() {
                if let Some(s) = start.take() {
                    tokens.push(Token {
                        text: &content[s..pos],
                        line: idx + 1,
                        column: s + 1,
                    });
                }
            } else if start.is_none() {
                start = Some(pos);
            }
        }
        if let Some(s) = start {
            tokens.push(Token {
                text: &content[s..],
                line: idx + 1,
                column: s + 1,
            });
        }
        if !tokens.is_empty() {
            out.push(tokens);
        }
    }
    out
}

/// Parses `p`, `p/q` or `-p/q` with arbitrary-precision integers.
pub fn parse_rational(text: &str) -> Result<BigRational, String> {
    let bad = || format!("expected a rational `p/q`, found `{text}`");
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n, d),
        None => (text, "1"),
    };
    let num = BigInt::from_str(num).map_err(|_| bad())?;
    let den = BigInt::from_str(den).map_err(|_| bad())?;
    if den.is_zero() {
        return Err(format!("zero denominator in `{text}`"));
    }
    Ok(BigRational::new(num, den))
}

pub(crate) fn format_rational(value: &BigRational) -> String {
    if value.is_integer() {
        value.numer().to_string()
    } else {
        format!("{}/{}", value.numer(), value.denom())
    }
}

pub(crate) fn end_of_input(input: &str) -> ParseError {
    ParseError::new(input.lines().count().max(1), 1, "unexpected end of input")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tokens_carry_positions() {
        let lines = token_lines("# header\n  2\n1/2  -3 # tail\n");
        assert_eq!(lines.len(), 2);
        assert_eq!((lines[0][0].line, lines[0][0].column), (2, 3));
        assert_eq!(lines[1][1].text, "-3");
        assert_eq!((lines[1][1].line, lines[1][1].column), (3, 6));
    }

    #[test]
    fn rationals() {
        assert_eq!(
            parse_rational("-6/4").unwrap(),
            BigRational::new((-3).into(), 2.into())
        );
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
        assert_eq!(format_rational(&parse_rational("4/2").unwrap()), "2");
    }
}
