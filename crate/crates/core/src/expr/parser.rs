use thiserror::Error;

use super::lexer::{tokenize, LexError, Token, TokenKind};
use super::{ExprSum, Func, Term};

#[derive(Debug, Clone, PartialEq, Error)]
#[error("at offset {position}: expected {expected}, found {found}")]
pub struct ParseError {
    /// Byte offset into the input; equal to the input length at end of input.
    pub position: usize,
    pub expected: String,
    pub found: String,
}

impl From<LexError> for ParseError {
    fn from(e: LexError) -> Self {
        ParseError {
            position: e.position,
            expected: format!("a valid token ({})", e.message),
            found: format!("`{}`", e.found),
        }
    }
}

pub fn parse(input: &str) -> Result<ExprSum, ParseError> {
    let tokens = tokenize(input)?;
    parse_tokens(&tokens, input.len())
}

/// Parses a token list produced by [`tokenize`]; `input_len` is the length
/// of the source text, used as the position of end-of-input errors.
pub fn parse_tokens(tokens: &[Token], input_len: usize) -> Result<ExprSum, ParseError> {
    let mut parser = Parser { tokens, pos: 0, input_len };
    let mut terms = vec![parser.term(1.0)?];
    loop {
        let sign = match parser.peek() {
            Some(TokenKind::Plus) => 1.0,
            Some(TokenKind::Minus) => -1.0,
            Some(_) => return Err(parser.error("`+`, `-` or end of input")),
            None => break,
        };
        parser.pos += 1;
        terms.push(parser.term(sign)?);
    }
    Ok(ExprSum::new(terms))
}

struct Parser<'a> {
    tokens: &'a [Token],
    pos: usize,
    input_len: usize,
}

impl Parser<'_> {
    fn peek(&self) -> Option<TokenKind> {
        self.tokens.get(self.pos).map(|t| t.kind)
    }

    fn peek_at(&self, offset: usize) -> Option<TokenKind> {
        self.tokens.get(self.pos + offset).map(|t| t.kind)
    }

    fn position(&self) -> usize {
        self.tokens.get(self.pos).map_or(self.input_len, |t| t.position)
    }

    fn error(&self, expected: &str) -> ParseError {
        let found = match self.tokens.get(self.pos) {
            Some(t) => format!("`{}`", t.lexeme),
            None => "end of input".to_string(),
        };
        ParseError { position: self.position(), expected: expected.to_string(), found }
    }

    fn error_at(&self, position: usize, expected: &str, found: String) -> ParseError {
        ParseError { position, expected: expected.to_string(), found }
    }

    fn expect(&mut self, kind: TokenKind, expected: &str) -> Result<(), ParseError> {
        if self.peek() == Some(kind) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.error(expected))
        }
    }

    /// Consumes any run of unary `+`/`-` and returns the combined sign.
    fn signs(&mut self) -> f64 {
        let mut sign = 1.0;
        while let Some(kind @ (TokenKind::Plus | TokenKind::Minus)) = self.peek() {
            if kind == TokenKind::Minus {
                sign = -sign;
            }
            self.pos += 1;
        }
        sign
    }

    fn finite(&self, value: f64, start: usize) -> Result<f64, ParseError> {
        if value.is_finite() {
            Ok(value)
        } else {
            Err(self.error_at(start, "a finite number", format!("{value}")))
        }
    }

    /// `[sign]* literal`
    fn atom(&mut self) -> Result<f64, ParseError> {
        let sign = self.signs();
        match self.peek() {
            Some(TokenKind::Number(x)) => {
                self.pos += 1;
                Ok(sign * x)
            }
            _ => Err(self.error("a number")),
        }
    }

    /// Folds `atom (("*" | "/") atom)*`, stopping before a `*` that is
    /// followed by a function name or `t`.
    fn number_after_atom(&mut self, mut value: f64, start: usize) -> Result<f64, ParseError> {
        loop {
            match (self.peek(), self.peek_at(1)) {
                (Some(TokenKind::Star), Some(TokenKind::Func(_) | TokenKind::Var)) => break,
                (Some(TokenKind::Star), _) => {
                    self.pos += 1;
                    value *= self.atom()?;
                }
                (Some(TokenKind::Slash), _) => {
                    self.pos += 1;
                    value /= self.atom()?;
                }
                _ => break,
            }
        }
        self.finite(value, start)
    }

    fn number(&mut self) -> Result<f64, ParseError> {
        let start = self.position();
        let first = self.atom()?;
        self.number_after_atom(first, start)
    }

    fn term(&mut self, outer_sign: f64) -> Result<Term, ParseError> {
        let start = self.position();
        let sign = outer_sign * self.signs();
        let coef = match self.peek() {
            Some(TokenKind::Func(_)) => sign,
            Some(TokenKind::Number(_)) => {
                let value = sign * self.number()?;
                match self.peek() {
                    Some(TokenKind::Star) => {
                        self.pos += 1;
                        if !matches!(self.peek(), Some(TokenKind::Func(_))) {
                            return Err(self.error("a function name"));
                        }
                        value
                    }
                    _ => return Ok(Term::constant(value)),
                }
            }
            _ => return Err(self.error("a number or a function name")),
        };
        let Some(TokenKind::Func(func)) = self.peek() else {
            return Err(self.error("a function name"));
        };
        self.pos += 1;
        self.expect(TokenKind::LParen, "`(`")?;
        let (freq, phase) = self.arg()?;
        self.expect(TokenKind::RParen, "`)`")?;
        if func == Func::Exp {
            let folded = self.finite(coef * phase.exp(), start)?;
            return Ok(Term::new(folded, func, freq, 0.0));
        }
        Ok(Term::new(coef, func, freq, phase))
    }

    /// `[number "*"] "t" [("+" | "-") number]`
    fn arg(&mut self) -> Result<(f64, f64), ParseError> {
        let start = self.position();
        let sign = self.signs();
        let freq = match self.peek() {
            Some(TokenKind::Var) => sign,
            Some(TokenKind::Number(x)) => {
                self.pos += 1;
                let freq = self.number_after_atom(sign * x, start)?;
                self.expect(TokenKind::Star, "`*`")?;
                freq
            }
            _ => return Err(self.error("a number or `t`")),
        };
        self.expect(TokenKind::Var, "`t`")?;
        let phase = match self.peek() {
            Some(TokenKind::Plus) => {
                self.pos += 1;
                self.number()?
            }
            Some(TokenKind::Minus) => {
                self.pos += 1;
                -self.number()?
            }
            _ => 0.0,
        };
        Ok((freq, phase))
    }
}
