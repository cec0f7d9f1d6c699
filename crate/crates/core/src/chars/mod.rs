//! Characters of `F^×` and of `GL_p` over a local field, in exact arithmetic.
//!
//! A character of `F^×` is stored as `ν^{s_re + i·s_im} · u` where `ν` is the
//! normalized absolute value, `s_re`, `s_im` are exact rationals and `u` is a
//! discrete unitary tag:
//!
//! * over `ℝ`: `u = sgn^ε`, `ε ∈ ℤ/2`;
//! * over `ℂ`: `u = (z/|z|)^m`, `m ∈ ℤ`, and `ν(z) = |z|²`, so the character
//!   `z ↦ z` is `ν^{1/2}·(m=1)`;
//! * non-archimedean: `u` lives in a user-declared finite abelian group
//!   `ℤ/o_1 × … × ℤ/o_r` of tags on the unit group.
//!
//! A character of `GL_p` is a block size `p` together with a character of
//! `F^×` composed with `det`; the segment `[i,j)` denotes `ν^{(i+j)/2}` on
//! `GL_{j−i}`. Characters of the trivial group `GL_0` are canonically trivial.

mod parse;

pub use parse::{parse_char, render_charfx, render_glchar, ParseError};

use num_rational::Rational64;
use num_traits::Zero;

/// Exact rational scalar used for all character exponents.
pub type Rat = Rational64;

/// Which local field the characters live over.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FieldKind {
    Real,
    Complex,
    NonArch,
}

/// A local field together with the data the character model needs.
///
/// For non-archimedean fields `q` is a residue-cardinality parameter (a prime
/// or 4, matching the finite models) and `unit_tag_orders` declares the
/// finite abelian group of unitary tags.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FieldSpec {
    pub kind: FieldKind,
    pub q: Option<u32>,
    pub unit_tag_orders: Vec<u32>,
}

/// Discrete unitary part of a character of `F^×`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum UnitTag {
    /// `sgn^ε` with `ε` mod 2.
    Real(u8),
    /// `(z/|z|)^m`.
    Complex(i64),
    /// Residues per declared order, componentwise.
    NonArch(Vec<u32>),
}

/// A character of `F^×`: `ν^{s_re + i·s_im} · tag`.
///
/// Equality is componentwise; constructors keep tags reduced modulo their
/// orders so derived equality is canonical.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CharFx {
    pub s_re: Rat,
    pub s_im: Rat,
    pub tag: UnitTag,
}

/// A character of `GL_p`: block size plus a character of `F^×` via `det`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GLChar {
    pub p: u32,
    pub chi: CharFx,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CharError {
    #[error("characters belong to different field specs")]
    FieldMismatch,
    #[error("segment requires i <= j, got [{i},{j})")]
    InvalidSegment { i: i64, j: i64 },
    #[error("cannot restrict a character of the trivial group GL_0")]
    RestrictEmpty,
    #[error("tag does not fit the declared unit tag group")]
    TagOutOfGroup,
    #[error("invalid field spec: {0}")]
    InvalidField(&'static str),
    #[error("`{0}` is not available over this field")]
    UnsupportedTerm(&'static str),
}

fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u32;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl FieldSpec {
    pub fn real() -> Self {
        FieldSpec {
            kind: FieldKind::Real,
            q: None,
            unit_tag_orders: Vec::new(),
        }
    }

    pub fn complex() -> Self {
        FieldSpec {
            kind: FieldKind::Complex,
            q: None,
            unit_tag_orders: Vec::new(),
        }
    }

    /// Non-archimedean field; `q` must be prime or 4, tag orders >= 1.
    pub fn non_arch(q: u32, unit_tag_orders: Vec<u32>) -> Result<Self, CharError> {
        if !(is_prime(q) || q == 4) {
            return Err(CharError::InvalidField("q must be prime or 4"));
        }
        if unit_tag_orders.contains(&0) {
            return Err(CharError::InvalidField("tag orders must be >= 1"));
        }
        Ok(FieldSpec {
            kind: FieldKind::NonArch,
            q: Some(q),
            unit_tag_orders,
        })
    }

    pub fn is_archimedean(&self) -> bool {
        matches!(self.kind, FieldKind::Real | FieldKind::Complex)
    }

    pub fn trivial_tag(&self) -> UnitTag {
        match self.kind {
            FieldKind::Real => UnitTag::Real(0),
            FieldKind::Complex => UnitTag::Complex(0),
            FieldKind::NonArch => UnitTag::NonArch(vec![0; self.unit_tag_orders.len()]),
        }
    }

    pub fn tag_valid(&self, tag: &UnitTag) -> bool {
        match (self.kind, tag) {
            (FieldKind::Real, UnitTag::Real(e)) => *e < 2,
            (FieldKind::Complex, UnitTag::Complex(_)) => true,
            (FieldKind::NonArch, UnitTag::NonArch(rs)) => {
                rs.len() == self.unit_tag_orders.len()
                    && rs.iter().zip(&self.unit_tag_orders).all(|(&r, &o)| r < o)
            }
            _ => false,
        }
    }

    pub fn tag_add(&self, a: &UnitTag, b: &UnitTag) -> Result<UnitTag, CharError> {
        match (a, b) {
            (UnitTag::Real(x), UnitTag::Real(y)) => Ok(UnitTag::Real((x + y) % 2)),
            (UnitTag::Complex(x), UnitTag::Complex(y)) => Ok(UnitTag::Complex(x + y)),
            (UnitTag::NonArch(xs), UnitTag::NonArch(ys)) => {
                if xs.len() != ys.len() || xs.len() != self.unit_tag_orders.len() {
                    return Err(CharError::FieldMismatch);
                }
                Ok(UnitTag::NonArch(
                    xs.iter()
                        .zip(ys)
                        .zip(&self.unit_tag_orders)
                        .map(|((&x, &y), &o)| (x + y) % o)
                        .collect(),
                ))
            }
            _ => Err(CharError::FieldMismatch),
        }
    }

    /// `tag^e` in the tag group, for any integer `e`.
    pub fn tag_scale(&self, tag: &UnitTag, e: i64) -> UnitTag {
        match tag {
            UnitTag::Real(x) => UnitTag::Real(((*x as i64 * e).rem_euclid(2)) as u8),
            UnitTag::Complex(m) => UnitTag::Complex(m * e),
            UnitTag::NonArch(rs) => UnitTag::NonArch(
                rs.iter()
                    .zip(&self.unit_tag_orders)
                    .map(|(&r, &o)| ((r as i64 * e).rem_euclid(o as i64)) as u32)
                    .collect(),
            ),
        }
    }

    pub fn trivial_char(&self) -> CharFx {
        CharFx {
            s_re: Rat::zero(),
            s_im: Rat::zero(),
            tag: self.trivial_tag(),
        }
    }

    /// `ν^s`.
    pub fn nu(&self, s: Rat) -> CharFx {
        CharFx {
            s_re: s,
            s_im: Rat::zero(),
            tag: self.trivial_tag(),
        }
    }

    /// General constructor; validates the tag against the declared group.
    pub fn char(&self, s_re: Rat, s_im: Rat, tag: UnitTag) -> Result<CharFx, CharError> {
        if !self.tag_valid(&tag) {
            return Err(CharError::TagOutOfGroup);
        }
        Ok(CharFx { s_re, s_im, tag })
    }

    /// Group law: componentwise sum of exponents, tag addition.
    pub fn mul_chars(&self, a: &CharFx, b: &CharFx) -> Result<CharFx, CharError> {
        Ok(CharFx {
            s_re: a.s_re + b.s_re,
            s_im: a.s_im + b.s_im,
            tag: self.tag_add(&a.tag, &b.tag)?,
        })
    }

    pub fn inv_char(&self, a: &CharFx) -> CharFx {
        self.pow_char(a, -1)
    }

    pub fn pow_char(&self, a: &CharFx, e: i64) -> CharFx {
        let er = Rat::from_integer(e);
        CharFx {
            s_re: a.s_re * er,
            s_im: a.s_im * er,
            tag: self.tag_scale(&a.tag, e),
        }
    }

    /// The character `z ↦ z` of `F^×` (archimedean fields only).
    pub fn delta(&self) -> Option<CharFx> {
        match self.kind {
            FieldKind::Real => Some(CharFx {
                s_re: Rat::from_integer(1),
                s_im: Rat::zero(),
                tag: UnitTag::Real(1),
            }),
            FieldKind::Complex => Some(CharFx {
                s_re: Rat::new(1, 2),
                s_im: Rat::zero(),
                tag: UnitTag::Complex(1),
            }),
            FieldKind::NonArch => None,
        }
    }

    /// Over `ℂ`, the character `z ↦ z̄`; over `ℝ`, same as [`Self::delta`].
    pub fn delta_bar(&self) -> Option<CharFx> {
        match self.kind {
            FieldKind::Real => self.delta(),
            FieldKind::Complex => Some(CharFx {
                s_re: Rat::new(1, 2),
                s_im: Rat::zero(),
                tag: UnitTag::Complex(-1),
            }),
            FieldKind::NonArch => None,
        }
    }

    /// `sgn`, over `ℝ` only.
    pub fn sgn(&self) -> Option<CharFx> {
        match self.kind {
            FieldKind::Real => Some(CharFx {
                s_re: Rat::zero(),
                s_im: Rat::zero(),
                tag: UnitTag::Real(1),
            }),
            _ => None,
        }
    }
}

fn zero_tag_like(tag: &UnitTag) -> UnitTag {
    match tag {
        UnitTag::Real(_) => UnitTag::Real(0),
        UnitTag::Complex(_) => UnitTag::Complex(0),
        UnitTag::NonArch(rs) => UnitTag::NonArch(vec![0; rs.len()]),
    }
}

fn trivial_char_like(chi: &CharFx) -> CharFx {
    CharFx {
        s_re: Rat::zero(),
        s_im: Rat::zero(),
        tag: zero_tag_like(&chi.tag),
    }
}

impl CharFx {
    pub fn is_trivial(&self) -> bool {
        self.s_re.is_zero()
            && self.s_im.is_zero()
            && match &self.tag {
                UnitTag::Real(e) => *e == 0,
                UnitTag::Complex(m) => *m == 0,
                UnitTag::NonArch(rs) => rs.iter().all(|&r| r == 0),
            }
    }
}

impl GLChar {
    /// Characters of `GL_0` are canonically trivial; `new` normalizes.
    pub fn new(p: u32, chi: CharFx) -> GLChar {
        if p == 0 {
            GLChar {
                p,
                chi: trivial_char_like(&chi),
            }
        } else {
            GLChar { p, chi }
        }
    }

    pub fn trivial(field: &FieldSpec, p: u32) -> GLChar {
        GLChar::new(p, field.trivial_char())
    }

    /// Restriction to `GL_{p−1}`: same `F^×`-character on the smaller block.
    pub fn restrict(&self) -> Result<GLChar, CharError> {
        if self.p == 0 {
            return Err(CharError::RestrictEmpty);
        }
        Ok(GLChar::new(self.p - 1, self.chi.clone()))
    }

    /// Extension to `GL_{p+1}`: the unique character restricting back.
    pub fn extend(&self) -> GLChar {
        GLChar::new(self.p + 1, self.chi.clone())
    }

    pub fn inv(&self, field: &FieldSpec) -> GLChar {
        GLChar::new(self.p, field.inv_char(&self.chi))
    }
}

/// The segment `[i,j)`: the character `ν^{(i+j)/2}` of `GL_{j−i}`.
pub fn segment(field: &FieldSpec, i: i64, j: i64) -> Result<GLChar, CharError> {
    if i > j {
        return Err(CharError::InvalidSegment { i, j });
    }
    Ok(GLChar::new((j - i) as u32, field.nu(Rat::new(i + j, 2))))
}

/// Modular character of the block-upper-triangular `P_{p1,p2}`:
/// `Δ_P = ν^{p2} ⊗ ν^{−p1}` on the Levi blocks.
pub fn modular_character(field: &FieldSpec, p1: u32, p2: u32) -> (GLChar, GLChar) {
    (
        GLChar::new(p1, field.nu(Rat::from_integer(p2 as i64))),
        GLChar::new(p2, field.nu(-Rat::from_integer(p1 as i64))),
    )
}
