//! Text grammar for characters of `GL_p`.
//!
//! ```text
//! GLCHAR := INT ":" EXPR | SEG
//! SEG    := "[" INT "," INT ")"
//! EXPR   := TERM ("*" TERM)*
//! TERM   := "1" | "nu^{" RAT "}" | "nu^{" RAT "i}" | "sgn" | "sgn^" INT
//!         | "det^" INT | "detbar^" INT | "circ^" INT
//!         | "tag(" INT ("," INT)* ")"
//! ```
//!
//! `det`/`detbar` expand per field (`ℝ`: `ν·sgn`; `ℂ`: `ν^{1/2}` with unit
//! tag `m = ±1`), `circ^m` is the `ℂ` unit tag, `tag(...)` a non-archimedean
//! tag tuple, and `RAT` is `a` or `a/b` with an optional sign. ASCII
//! whitespace is allowed between tokens.

use super::{segment, CharError, CharFx, FieldKind, FieldSpec, GLChar, Rat, UnitTag};
use num_traits::Zero;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("parse error at byte {pos}: {msg}")]
pub struct ParseError {
    pub pos: usize,
    pub msg: String,
}

struct Parser<'a> {
    bytes: &'a [u8],
    pos: usize,
    field: &'a FieldSpec,
}

impl<'a> Parser<'a> {
    fn err<T>(&self, msg: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError {
            pos: self.pos,
            msg: msg.into(),
        })
    }

    fn skip_ws(&mut self) {
        while self
            .bytes
            .get(self.pos)
            .is_some_and(|b| b.is_ascii_whitespace())
        {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    fn eat(&mut self, b: u8) -> Result<(), ParseError> {
        if self.peek() == Some(b) {
            self.pos += 1;
            Ok(())
        } else {
            self.err(format!("expected `{}`", b as char))
        }
    }

    fn eat_str(&mut self, s: &str) -> bool {
        if self.bytes[self.pos..].starts_with(s.as_bytes()) {
            self.pos += s.len();
            true
        } else {
            false
        }
    }

    fn parse_int(&mut self) -> Result<i64, ParseError> {
        self.skip_ws();
        let start = self.pos;
        let mut sign = 1i64;
        match self.peek() {
            Some(b'-') => {
                sign = -1;
                self.pos += 1;
            }
            Some(b'+') => {
                self.pos += 1;
            }
            _ => {}
        }
        let digits_start = self.pos;
        while self.peek().is_some_and(|b| b.is_ascii_digit()) {
            self.pos += 1;
        }
        if self.pos == digits_start {
            self.pos = start;
            return self.err("expected an integer");
        }
        let text = std::str::from_utf8(&self.bytes[digits_start..self.pos]).unwrap();
        match text.parse::<i64>() {
            Ok(v) => Ok(sign * v),
            Err(_) => {
                self.pos = start;
                self.err("integer out of range")
            }
        }
    }

    fn parse_rat(&mut self) -> Result<Rat, ParseError> {
        let numer = self.parse_int()?;
        self.skip_ws();
        if self.peek() == Some(b'/') {
            self.pos += 1;
            let denom = self.parse_int()?;
            if denom == 0 {
                return self.err("zero denominator");
            }
            Ok(Rat::new(numer, denom))
        } else {
            Ok(Rat::from_integer(numer))
        }
    }

    /// One TERM, folded into the running character.
    fn parse_term(&mut self, acc: &mut CharFx) -> Result<(), ParseError> {
        self.skip_ws();
        let pos = self.pos;
        if self.eat_str("1") {
            return Ok(());
        }
        if self.eat_str("nu^{") {
            let r = self.parse_rat()?;
            self.skip_ws();
            let imaginary = self.eat_str("i");
            self.skip_ws();
            self.eat(b'}')?;
            if imaginary {
                acc.s_im += r;
            } else {
                acc.s_re += r;
            }
            return Ok(());
        }
        if self.eat_str("sgn") {
            if self.field.kind != FieldKind::Real {
                self.pos = pos;
                return self.err("`sgn` is only available over R");
            }
            let e = if self.peek() == Some(b'^') {
                self.pos += 1;
                self.parse_int()?
            } else {
                1
            };
            let sgn = self.field.sgn().unwrap();
            self.fold_power(acc, &sgn, e)?;
            return Ok(());
        }
        if self.eat_str("detbar^") {
            let e = self.parse_int()?;
            let Some(db) = self.field.delta_bar() else {
                self.pos = pos;
                return self.err("`detbar` is only available over R and C");
            };
            self.fold_power(acc, &db, e)?;
            return Ok(());
        }
        if self.eat_str("det^") {
            let e = self.parse_int()?;
            let Some(d) = self.field.delta() else {
                self.pos = pos;
                return self.err("`det` is only available over R and C");
            };
            self.fold_power(acc, &d, e)?;
            return Ok(());
        }
        if self.eat_str("circ^") {
            let m = self.parse_int()?;
            if self.field.kind != FieldKind::Complex {
                self.pos = pos;
                return self.err("`circ` is only available over C");
            }
            let t = CharFx {
                s_re: Rat::zero(),
                s_im: Rat::zero(),
                tag: UnitTag::Complex(m),
            };
            self.fold_power(acc, &t, 1)?;
            return Ok(());
        }
        if self.eat_str("tag(") {
            if self.field.kind != FieldKind::NonArch {
                self.pos = pos;
                return self.err("`tag` is only available over non-archimedean fields");
            }
            let mut residues = vec![self.parse_int()?];
            self.skip_ws();
            while self.peek() == Some(b',') {
                self.pos += 1;
                residues.push(self.parse_int()?);
                self.skip_ws();
            }
            self.eat(b')')?;
            if residues.len() != self.field.unit_tag_orders.len() {
                self.pos = pos;
                return self.err(format!(
                    "tag arity {} does not match the declared group (arity {})",
                    residues.len(),
                    self.field.unit_tag_orders.len()
                ));
            }
            let mut rs = Vec::with_capacity(residues.len());
            for (&r, &o) in residues.iter().zip(&self.field.unit_tag_orders) {
                if r < 0 || r >= o as i64 {
                    self.pos = pos;
                    return self.err("tag residue out of the declared group");
                }
                rs.push(r as u32);
            }
            let t = CharFx {
                s_re: Rat::zero(),
                s_im: Rat::zero(),
                tag: UnitTag::NonArch(rs),
            };
            self.fold_power(acc, &t, 1)?;
            return Ok(());
        }
        self.err("expected a character term")
    }

    fn fold_power(&self, acc: &mut CharFx, base: &CharFx, e: i64) -> Result<(), ParseError> {
        let powered = self.field.pow_char(base, e);
        match self.field.mul_chars(acc, &powered) {
            Ok(c) => {
                *acc = c;
                Ok(())
            }
            Err(e) => Err(ParseError {
                pos: self.pos,
                msg: e.to_string(),
            }),
        }
    }

    fn parse_glchar(&mut self) -> Result<GLChar, ParseError> {
        self.skip_ws();
        if self.peek() == Some(b'[') {
            self.pos += 1;
            let i = self.parse_int()?;
            self.skip_ws();
            self.eat(b',')?;
            let j = self.parse_int()?;
            self.skip_ws();
            self.eat(b')')?;
            return match segment(self.field, i, j) {
                Ok(c) => Ok(c),
                Err(CharError::InvalidSegment { i, j }) => {
                    self.err(format!("segment requires i <= j, got [{i},{j})"))
                }
                Err(e) => self.err(e.to_string()),
            };
        }
        let p = self.parse_int()?;
        if p < 0 {
            return self.err("block size must be non-negative");
        }
        self.skip_ws();
        self.eat(b':')?;
        let mut chi = self.field.trivial_char();
        self.parse_term(&mut chi)?;
        self.skip_ws();
        while self.peek() == Some(b'*') {
            self.pos += 1;
            self.parse_term(&mut chi)?;
            self.skip_ws();
        }
        Ok(GLChar::new(p as u32, chi))
    }
}

/// Parse one `GLCHAR` (the whole input must be consumed).
pub fn parse_char(text: &str, field: &FieldSpec) -> Result<GLChar, ParseError> {
    let mut p = Parser {
        bytes: text.as_bytes(),
        pos: 0,
        field,
    };
    let c = p.parse_glchar()?;
    p.skip_ws();
    if p.pos != p.bytes.len() {
        return p.err("trailing input");
    }
    Ok(c)
}

fn rat_term(r: Rat) -> String {
    if r.is_integer() {
        format!("{}", r.numer())
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Canonical rendering of a character of `F^×` in the term grammar.
pub fn render_charfx(chi: &CharFx) -> String {
    let mut terms = Vec::new();
    if !chi.s_re.is_zero() {
        terms.push(format!("nu^{{{}}}", rat_term(chi.s_re)));
    }
    if !chi.s_im.is_zero() {
        terms.push(format!("nu^{{{}i}}", rat_term(chi.s_im)));
    }
    match &chi.tag {
        UnitTag::Real(1) => terms.push("sgn".to_string()),
        UnitTag::Real(_) => {}
        UnitTag::Complex(0) => {}
        UnitTag::Complex(m) => terms.push(format!("circ^{m}")),
        UnitTag::NonArch(rs) => {
            if rs.iter().any(|&r| r != 0) {
                let body: Vec<String> = rs.iter().map(|r| r.to_string()).collect();
                terms.push(format!("tag({})", body.join(",")));
            }
        }
    }
    if terms.is_empty() {
        "1".to_string()
    } else {
        terms.join("*")
    }
}

/// Canonical rendering of a `GL_p`-character; `parse_char` inverts it.
pub fn render_glchar(c: &GLChar) -> String {
    format!("{}: {}", c.p, render_charfx(&c.chi))
}
