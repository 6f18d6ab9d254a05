use std::f64::consts::{E, PI};
use std::fmt;

use thiserror::Error;

use super::Func;

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum TokenKind {
    /// Decimal literal or one of the constants `pi`, `e`.
    Number(f64),
    Func(Func),
    /// The variable `t`.
    Var,
    Plus,
    Minus,
    Star,
    Slash,
    LParen,
    RParen,
}

impl fmt::Display for TokenKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TokenKind::Number(x) => write!(f, "{x}"),
            TokenKind::Func(func) => write!(f, "{func}"),
            TokenKind::Var => f.write_str("t"),
            TokenKind::Plus => f.write_str("+"),
            TokenKind::Minus => f.write_str("-"),
            TokenKind::Star => f.write_str("*"),
            TokenKind::Slash => f.write_str("/"),
            TokenKind::LParen => f.write_str("("),
            TokenKind::RParen => f.write_str(")"),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Token {
    pub kind: TokenKind,
    /// Byte offset of the first character.
    pub position: usize,
    pub lexeme: String,
}

#[derive(Debug, Clone, PartialEq, Error)]
#[error("at offset {position}: {message} `{found}`")]
pub struct LexError {
    pub position: usize,
    pub found: String,
    pub message: &'static str,
}

pub fn tokenize(input: &str) -> Result<Vec<Token>, LexError> {
    let bytes = input.as_bytes();
    let mut tokens = Vec::new();
    let mut pos = 0;
    while pos < bytes.len() {
        let c = bytes[pos];
        if c.is_ascii_whitespace() {
            pos += 1;
            continue;
        }
        let start = pos;
        let kind = match c {
            b'+' => Some(TokenKind::Plus),
            b'-' => Some(TokenKind::Minus),
            b'*' => Some(TokenKind::Star),
            b'/' => Some(TokenKind::Slash),
            b'(' => Some(TokenKind::LParen),
            b')' => Some(TokenKind::RParen),
            _ => None,
        };
        if let Some(kind) = kind {
            pos += 1;
            tokens.push(Token { kind, position: start, lexeme: input[start..pos].to_string() });
            continue;
        }
        if c.is_ascii_digit() || c == b'.' {
            pos = scan_number(bytes, pos);
            let lexeme = &input[start..pos];
            let value: f64 = lexeme.parse().map_err(|_| LexError {
                position: start,
                found: lexeme.to_string(),
                message: "malformed number",
            })?;
            if !value.is_finite() {
                return Err(LexError { position: start, found: lexeme.to_string(), message: "number out of range" });
            }
            tokens.push(Token { kind: TokenKind::Number(value), position: start, lexeme: lexeme.to_string() });
            continue;
        }
        if c.is_ascii_alphabetic() {
            while pos < bytes.len() && bytes[pos].is_ascii_alphanumeric() {
                pos += 1;
            }
            let word = &input[start..pos];
            let kind = match word {
                "t" => TokenKind::Var,
                "pi" => TokenKind::Number(PI),
                "e" => TokenKind::Number(E),
                _ => match Func::from_name(word) {
                    Some(func) => TokenKind::Func(func),
                    None => {
                        return Err(LexError {
                            position: start,
                            found: word.to_string(),
                            message: "unknown identifier",
                        })
                    }
                },
            };
            tokens.push(Token { kind, position: start, lexeme: word.to_string() });
            continue;
        }
        let ch = input[start..].chars().next().unwrap_or('\u{fffd}');
        return Err(LexError { position: start, found: ch.to_string(), message: "unexpected character" });
    }
    Ok(tokens)
}

/// Scans `digits [. digits] [(e|E) [sign] digits]`. The exponent is only
/// consumed when at least one digit follows it, so `2e` lexes as `2` then
/// the constant `e`.
fn scan_number(bytes: &[u8], mut pos: usize) -> usize {
    let digits = |bytes: &[u8], mut p: usize| {
        while p < bytes.len() && bytes[p].is_ascii_digit() {
            p += 1;
        }
        p
    };
    pos = digits(bytes, pos);
    if pos < bytes.len() && bytes[pos] == b'.' {
        pos = digits(bytes, pos + 1);
    }
    if pos < bytes.len() && (bytes[pos] == b'e' || bytes[pos] == b'E') {
        let mut p = pos + 1;
        if p < bytes.len() && (bytes[p] == b'+' || bytes[p] == b'-') {
            p += 1;
        }
        if p < bytes.len() && bytes[p].is_ascii_digit() {
            pos = digits(bytes, p);
        }
    }
    pos
}
