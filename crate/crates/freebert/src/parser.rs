//! Text format for polynomials: a recursive-descent parser and the
//! canonical printer it round-trips with.
//!
//! Grammar (whitespace free between any two tokens):
//!
//! ```text
//! expr    := '-'? term (('+' | '-') term)*
//! term    := factor ('*' factor)*
//! factor  := base ('^' natural)?
//! base    := rational | 'x' natural | '(' expr ')'
//! rational:= natural ('/' natural)?
//! ```
//!
//! There is no implicit multiplication: `x1 x2` is a syntax error. Variables
//! are `x1..xd` with `d` fixed by the caller, never inferred. A `^0` exponent
//! is allowed and means the scalar one. Errors carry the byte offset and the
//! tokens that would have been accepted there.
//!
//! To keep malformed or adversarial inputs from exhausting memory, the
//! parser enforces hard caps: parenthesis nesting depth, exponent size, and
//! the term count of intermediate expansions.

use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::ncpoly::NCPoly;
use crate::rat::fmt_rat;
use crate::unipoly::UniPoly;
use crate::word::Word;
use crate::Rat;

/// Maximum parenthesis nesting.
const MAX_DEPTH: usize = 128;
/// Maximum exponent after `^`.
const MAX_EXPONENT: u64 = 4096;
/// Maximum number of terms any intermediate value may expand to.
const MAX_TERMS: usize = 1 << 16;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    /// Byte offset into the input where the error was detected.
    pub offset: usize,
    pub message: String,
    /// Tokens that would have been accepted at `offset`.
    pub expected: Vec<&'static str>,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "at byte {}: {}", self.offset, self.message)?;
        if !self.expected.is_empty() {
            write!(f, " (expected {})", self.expected.join(" or "))?;
        }
        Ok(())
    }
}

impl std::error::Error for ParseError {}

/// Parses an expression over `x1..xd`.
pub fn parse(text: &str, d: u32) -> Result<NCPoly, ParseError> {
    let mut p = Parser {
        bytes: text.as_bytes(),
        pos: 0,
        d,
        depth: 0,
    };
    p.skip_ws();
    let out = p.expr()?;
    p.skip_ws();
    if p.pos < p.bytes.len() {
        return Err(p.error(
            "trailing input (note: multiplication must be written with '*')",
            &["'+'", "'-'", "'*'", "'^'", "end of input"],
        ));
    }
    Ok(out)
}

struct Parser<'a> {
    bytes: &'a [u8],
    pos: usize,
    d: u32,
    depth: usize,
}

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    fn error(&self, message: &str, expected: &[&'static str]) -> ParseError {
        ParseError {
            offset: self.pos,
            message: message.to_string(),
            expected: expected.to_vec(),
        }
    }

    fn guard_size(&self, p: &NCPoly) -> Result<(), ParseError> {
        if p.num_terms() > MAX_TERMS {
            return Err(self.error(
                &format!("expression expands to more than {} terms", MAX_TERMS),
                &[],
            ));
        }
        Ok(())
    }

    fn expr(&mut self) -> Result<NCPoly, ParseError> {
        self.skip_ws();
        let negate = if self.peek() == Some(b'-') {
            self.pos += 1;
            true
        } else {
            false
        };
        let mut acc = self.term()?;
        if negate {
            acc = -acc;
        }
        loop {
            self.skip_ws();
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    acc = &acc + &self.term()?;
                }
                Some(b'-') => {
                    self.pos += 1;
                    acc = &acc - &self.term()?;
                }
                _ => break,
            }
            self.guard_size(&acc)?;
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<NCPoly, ParseError> {
        let mut acc = self.factor()?;
        loop {
            self.skip_ws();
            if self.peek() == Some(b'*') {
                self.pos += 1;
                acc = &acc * &self.factor()?;
                self.guard_size(&acc)?;
            } else {
                break;
            }
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<NCPoly, ParseError> {
        let base = self.base()?;
        self.skip_ws();
        if self.peek() == Some(b'^') {
            self.pos += 1;
            self.skip_ws();
            let at = self.pos;
            let k = self.natural()?;
            if k > MAX_EXPONENT {
                return Err(ParseError {
                    offset: at,
                    message: format!("exponent {} exceeds the limit {}", k, MAX_EXPONENT),
                    expected: vec![],
                });
            }
            // Plain repeated multiplication with the size guard applied at
            // every step, so huge expansions fail cleanly and early.
            let mut acc = NCPoly::one(self.d);
            for _ in 0..k {
                acc = &acc * &base;
                self.guard_size(&acc)?;
            }
            return Ok(acc);
        }
        Ok(base)
    }

    fn base(&mut self) -> Result<NCPoly, ParseError> {
        self.skip_ws();
        match self.peek() {
            Some(b'(') => {
                if self.depth >= MAX_DEPTH {
                    return Err(self.error("parentheses nested too deeply", &[]));
                }
                self.depth += 1;
                self.pos += 1;
                let inner = self.expr()?;
                self.skip_ws();
                if self.peek() != Some(b')') {
                    return Err(self.error("unclosed parenthesis", &["')'"]));
                }
                self.pos += 1;
                self.depth -= 1;
                Ok(inner)
            }
            Some(b'x') => {
                let at = self.pos;
                self.pos += 1;
                let i = self.natural()?;
                if i < 1 || i > self.d as u64 {
                    return Err(ParseError {
                        offset: at,
                        message: format!("variable x{} outside x1..x{}", i, self.d),
                        expected: vec![],
                    });
                }
                Ok(NCPoly::var(self.d, i as u32))
            }
            Some(c) if c.is_ascii_digit() => {
                let num = self.natural()?;
                let mut r = Rat::from_integer(num.into());
                if self.peek() == Some(b'/') {
                    self.pos += 1;
                    let at = self.pos;
                    let den = self.natural()?;
                    if den == 0 {
                        return Err(ParseError {
                            offset: at,
                            message: "zero denominator in rational literal".to_string(),
                            expected: vec![],
                        });
                    }
                    r = r / Rat::from_integer(den.into());
                }
                Ok(NCPoly::constant(self.d, r))
            }
            _ => Err(self.error(
                "expected the start of a value",
                &["rational", "'x<k>'", "'('"],
            )),
        }
    }

    fn natural(&mut self) -> Result<u64, ParseError> {
        let start = self.pos;
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.error("expected digits", &["natural number"]));
        }
        if self.pos - start > 19 {
            return Err(ParseError {
                offset: start,
                message: "numeric literal too long".to_string(),
                expected: vec![],
            });
        }
        std::str::from_utf8(&self.bytes[start..self.pos])
            .ok()
            .and_then(|s| s.parse().ok())
            .ok_or_else(|| ParseError {
                offset: start,
                message: "numeric literal out of range".to_string(),
                expected: vec![],
            })
    }
}

/// Renders a word as `x1*x2^2*x1`, grouping adjacent repeats into powers.
fn word_string(w: &Word) -> String {
    let mut parts: Vec<String> = Vec::new();
    let mut i = 0;
    while i < w.0.len() {
        let letter = w.0[i];
        let mut run = 1;
        while i + run < w.0.len() && w.0[i + run] == letter {
            run += 1;
        }
        if run == 1 {
            parts.push(format!("x{}", letter + 1));
        } else {
            parts.push(format!("x{}^{}", letter + 1, run));
        }
        i += run;
    }
    parts.join("*")
}

/// Canonical rendering: terms in descending graded order, leading term
/// first, coefficients as `p/q`. `parse(print(f), f.nvars()) == f`.
pub fn print(f: &NCPoly) -> String {
    if f.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, (w, c)) in f.terms().rev().enumerate() {
        let mag = c.abs();
        if i == 0 {
            if c.is_negative() {
                out.push('-');
            }
        } else if c.is_negative() {
            out.push_str(" - ");
        } else {
            out.push_str(" + ");
        }
        if w.is_empty() {
            out.push_str(&fmt_rat(&mag));
        } else {
            if !mag.is_one() {
                out.push_str(&fmt_rat(&mag));
                out.push('*');
            }
            out.push_str(&word_string(w));
        }
    }
    out
}

/// Renders a univariate polynomial in the indeterminate `t`, highest power
/// first, in the same coefficient style as [`print`].
pub fn print_uni(p: &UniPoly) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    let mut first = true;
    for k in (0..p.coeffs().len()).rev() {
        let c = p.coeff(k);
        if c.is_zero() {
            continue;
        }
        let mag = c.abs();
        if first {
            if c.is_negative() {
                out.push('-');
            }
            first = false;
        } else if c.is_negative() {
            out.push_str(" - ");
        } else {
            out.push_str(" + ");
        }
        match k {
            0 => out.push_str(&fmt_rat(&mag)),
            _ => {
                if !mag.is_one() {
                    out.push_str(&fmt_rat(&mag));
                    out.push('*');
                }
                out.push('t');
                if k > 1 {
                    out.push_str(&format!("^{}", k));
                }
            }
        }
    }
    out
}
