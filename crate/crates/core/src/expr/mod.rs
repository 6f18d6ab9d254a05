//! Textual sums of circular and hyperbolic terms: lexing, parsing,
//! rendering, simplification and grid checks.
//!
//! Grammar (whitespace-insensitive):
//!
//! ```text
//! expr   := term (("+" | "-") term)*
//! term   := [number "*"] func "(" arg ")" | number
//! func   := "cos" | "sin" | "cosh" | "sinh" | "exp"
//! arg    := [number "*"] "t" [("+" | "-") number]
//! number := decimal ["e" [sign] digits] | "pi" | "e"
//!         | number ("*" | "/") number
//! ```
//!
//! Numbers may carry leading unary signs, so `-2*sinh(-3*t+0.5)` and
//! `exp(-t)` parse. Literal arithmetic is folded at parse time.

mod check;
mod format;
mod lexer;
mod parser;
mod render;
mod simplify;

use std::fmt;

use thiserror::Error;

pub use check::{check, sample, samples_to_csv, CheckReport, Grid};
pub use format::{format_decimal, format_shortest, format_significant};
pub use lexer::{tokenize, LexError, Token, TokenKind};
pub use parser::{parse, parse_tokens, ParseError};
pub use render::{render, RenderOptions, DEFAULT_PRECISION};
pub use simplify::{classify_groups, group_terms, simplify, GroupClass, SimplifyOptions, TermGroup};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ExprError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("invalid range: {0}")]
    Range(String),
    #[error("value exceeds the floating-point range")]
    Overflow,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Func {
    Cos,
    Sin,
    Cosh,
    Sinh,
    Exp,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    Circular,
    Hyperbolic,
}

impl Func {
    pub fn family(self) -> Family {
        match self {
            Func::Cos | Func::Sin => Family::Circular,
            Func::Cosh | Func::Sinh | Func::Exp => Family::Hyperbolic,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Func::Cos => "cos",
            Func::Sin => "sin",
            Func::Cosh => "cosh",
            Func::Sinh => "sinh",
            Func::Exp => "exp",
        }
    }

    pub fn from_name(name: &str) -> Option<Func> {
        Some(match name {
            "cos" => Func::Cos,
            "sin" => Func::Sin,
            "cosh" => Func::Cosh,
            "sinh" => Func::Sinh,
            "exp" => Func::Exp,
            _ => return None,
        })
    }

    pub fn apply(self, x: f64) -> f64 {
        match self {
            Func::Cos => x.cos(),
            Func::Sin => x.sin(),
            Func::Cosh => x.cosh(),
            Func::Sinh => x.sinh(),
            Func::Exp => x.exp(),
        }
    }
}

impl fmt::Display for Func {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// `coef · func(freq·t + phase)`.
///
/// A bare constant `c` is the term `c·cos(0·t)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Term {
    pub coef: f64,
    pub func: Func,
    pub freq: f64,
    pub phase: f64,
}

impl Term {
    pub fn new(coef: f64, func: Func, freq: f64, phase: f64) -> Self {
        Term { coef, func, freq, phase }
    }

    pub fn constant(value: f64) -> Self {
        Term::new(value, Func::Cos, 0.0, 0.0)
    }

    pub fn is_constant(&self) -> bool {
        self.func == Func::Cos && self.freq == 0.0 && self.phase == 0.0
    }

    /// May be infinite for hyperbolic terms at large arguments.
    pub fn eval(&self, t: f64) -> f64 {
        if self.coef == 0.0 {
            return 0.0;
        }
        self.coef * self.func.apply(self.freq * t + self.phase)
    }
}

/// An ordered, non-empty sum of terms.
#[derive(Debug, Clone, PartialEq)]
pub struct ExprSum {
    pub terms: Vec<Term>,
}

impl ExprSum {
    pub fn new(terms: Vec<Term>) -> Self {
        ExprSum { terms }
    }

    pub fn eval(&self, t: f64) -> Result<f64, ExprError> {
        let value: f64 = self.terms.iter().map(|term| term.eval(t)).sum();
        if value.is_finite() {
            Ok(value)
        } else {
            Err(ExprError::Overflow)
        }
    }
}

impl std::str::FromStr for ExprSum {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse(s)
    }
}

impl fmt::Display for ExprSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render(self, &RenderOptions::default()))
    }
}
