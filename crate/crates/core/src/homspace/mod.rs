//! Quadruples `X = (χ1, χ2; χ3, χ4)` and the classification of
//! `Hom(χ1×χ2, χ3×χ4)`.
//!
//! Throughout, `n = p1+p2 = p3+p4` and each `χ_i` is a character of
//! `GL_{p_i}`. The classifier decides `dim Hom ∈ {0,1}` and, when the
//! dimension is 1, names the intertwiner: scalar or Knapp–Stein (standard
//! family), rank-one or Radon transform (mixed family), or a Capelli-type
//! differential operator (exceptional family, archimedean middle
//! Grassmannian only). All families are closed under a common central twist
//! of the four characters, so membership tests work with exponent
//! differences relative to an anchor block.

mod enumerate;
mod families;
mod grid;
mod inductive;
mod report;

pub use enumerate::{enumerate_family, sample_quadruples};
pub use families::{
    classify, has_finite_rank_pattern, match_exceptional, match_mixed, match_standard,
};
pub use grid::for_each_grid_quadruple;
pub use inductive::inductive_classify;
pub use report::{classification_json, family_kind_name, family_name, human_line, rat_str, reference};

use crate::chars::{CharFx, FieldSpec, GLChar, Rat};
use num_traits::Zero;

/// The classifier input: a field and four `GL`-characters with balanced
/// block sizes.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Quadruple {
    pub field: FieldSpec,
    pub c: [GLChar; 4],
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum QuadError {
    #[error("block sizes must balance: p1+p2 = p3+p4 >= 1, got ({0}, {1}; {2}, {3})")]
    SizeImbalance(u32, u32, u32, u32),
    #[error("character does not fit the field spec")]
    FieldMismatch,
    #[error("the derivative needs every block size >= 1")]
    EmptyBlock,
}

/// Family taxonomy for one-dimensional Hom spaces.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum StandardKind {
    Identity,
    KnappStein,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RadonCase {
    A,
    B,
    C,
    D,
}

impl RadonCase {
    pub fn letter(self) -> char {
        match self {
            RadonCase::A => 'a',
            RadonCase::B => 'b',
            RadonCase::C => 'c',
            RadonCase::D => 'd',
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MixedKind {
    /// Composition of two rank-one Radon transforms, factoring through the
    /// character `ν^{k/2}` of `GL_k`; parameters `0 ≤ i ≠ j < k`.
    Rank1 { i: u32, j: u32, k: u32 },
    /// Radon transform between Grassmannians; parameters `0 < i < j < k`.
    Radon {
        case: RadonCase,
        i: u32,
        j: u32,
        k: u32,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ComplexVariant {
    One,
    Two,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ExceptionalKind {
    /// `det(∂)^i` on the middle Grassmannian over `ℝ`, `i ≥ 1`.
    RealCapelli { k: u32, i: u32 },
    /// `det(∂)^i` (variant 1) or `det(∂̄)^i` (variant 2) over `ℂ`.
    ComplexCapelli {
        variant: ComplexVariant,
        k: u32,
        i: u32,
        j: i64,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    Standard(StandardKind),
    Mixed(MixedKind),
    Exceptional(ExceptionalKind),
}

/// Coarse family kind, the granularity at which the two classifiers and the
/// generator are compared.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FamilyKind {
    Standard,
    Mixed,
    Exceptional,
}

impl Family {
    pub fn kind(&self) -> FamilyKind {
        match self {
            Family::Standard(_) => FamilyKind::Standard,
            Family::Mixed(_) => FamilyKind::Mixed,
            Family::Exceptional(_) => FamilyKind::Exceptional,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum NoFamilyReason {
    CentralConstraintFailed,
    NoPattern,
    LiftFailed,
}

impl NoFamilyReason {
    pub fn as_str(self) -> &'static str {
        match self {
            NoFamilyReason::CentralConstraintFailed => "central-constraint-failed",
            NoFamilyReason::NoPattern => "no-pattern",
            NoFamilyReason::LiftFailed => "lift-failed",
        }
    }
}

/// Outcome of a classification. `dim = 1` exactly when a family certificate
/// is present; the twist is the central character realizing the pattern.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Certificate {
    Member { family: Family, twist: CharFx },
    NoFamily { reason: NoFamilyReason },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Classification {
    pub certificate: Certificate,
}

impl Classification {
    pub fn member(family: Family, twist: CharFx) -> Self {
        Classification {
            certificate: Certificate::Member { family, twist },
        }
    }

    pub fn no_family(reason: NoFamilyReason) -> Self {
        Classification {
            certificate: Certificate::NoFamily { reason },
        }
    }

    pub fn dim(&self) -> u8 {
        match self.certificate {
            Certificate::Member { .. } => 1,
            Certificate::NoFamily { .. } => 0,
        }
    }

    pub fn family(&self) -> Option<&Family> {
        match &self.certificate {
            Certificate::Member { family, .. } => Some(family),
            Certificate::NoFamily { .. } => None,
        }
    }

    pub fn kind(&self) -> Option<FamilyKind> {
        self.family().map(Family::kind)
    }

    pub fn reason(&self) -> Option<NoFamilyReason> {
        match self.certificate {
            Certificate::NoFamily { reason } => Some(reason),
            Certificate::Member { .. } => None,
        }
    }
}

impl Quadruple {
    pub fn new(
        field: FieldSpec,
        c1: GLChar,
        c2: GLChar,
        c3: GLChar,
        c4: GLChar,
    ) -> Result<Self, QuadError> {
        let c = [c1, c2, c3, c4];
        if c[0].p + c[1].p != c[2].p + c[3].p || c[0].p + c[1].p == 0 {
            return Err(QuadError::SizeImbalance(c[0].p, c[1].p, c[2].p, c[3].p));
        }
        for ch in &c {
            if !field.tag_valid(&ch.chi.tag) {
                return Err(QuadError::FieldMismatch);
            }
        }
        Ok(Quadruple { field, c })
    }

    pub fn n(&self) -> u32 {
        self.c[0].p + self.c[1].p
    }

    pub fn sizes(&self) -> [u32; 4] {
        [self.c[0].p, self.c[1].p, self.c[2].p, self.c[3].p]
    }

    /// Central twist: every nonempty block multiplied by `ψ`; empty blocks
    /// stay trivial.
    pub fn twist(&self, psi: &CharFx) -> Result<Quadruple, QuadError> {
        if !self.field.tag_valid(&psi.tag) {
            return Err(QuadError::FieldMismatch);
        }
        let mut c = self.c.clone();
        for ch in &mut c {
            if ch.p > 0 {
                let chi = self
                    .field
                    .mul_chars(&ch.chi, psi)
                    .map_err(|_| QuadError::FieldMismatch)?;
                *ch = GLChar::new(ch.p, chi);
            }
        }
        Ok(Quadruple {
            field: self.field.clone(),
            c,
        })
    }

    /// The central-character identity
    /// `ψ1^{p1}·ψ2^{p2} = ψ3^{p3}·ψ4^{p4}`, a necessary condition for a
    /// nonzero intertwiner.
    pub fn central_constraint(&self) -> bool {
        let f = &self.field;
        let side = |a: &GLChar, b: &GLChar| {
            let pa = f.pow_char(&a.chi, a.p as i64);
            let pb = f.pow_char(&b.chi, b.p as i64);
            f.mul_chars(&pa, &pb).expect("single field spec")
        };
        side(&self.c[0], &self.c[1]) == side(&self.c[2], &self.c[3])
    }

    /// Blockwise restriction; `n` drops by 2. Every block must be nonempty.
    pub fn derivative(&self) -> Result<Quadruple, QuadError> {
        if self.c.iter().any(|ch| ch.p == 0) {
            return Err(QuadError::EmptyBlock);
        }
        let r = |i: usize| self.c[i].restrict().expect("nonempty block");
        Quadruple::new(self.field.clone(), r(0), r(1), r(2), r(3))
    }

    /// Blockwise extension; `n` grows by 2. Inverse of [`Self::derivative`]
    /// whenever every block size is at least 2.
    pub fn extend(&self) -> Quadruple {
        Quadruple {
            field: self.field.clone(),
            c: [
                self.c[0].extend(),
                self.c[1].extend(),
                self.c[2].extend(),
                self.c[3].extend(),
            ],
        }
    }

    /// Contragredient shadow: `(χ3⁻¹, χ4⁻¹; χ1⁻¹, χ2⁻¹)`.
    pub fn dual(&self) -> Quadruple {
        let f = &self.field;
        Quadruple {
            field: self.field.clone(),
            c: [
                self.c[2].inv(f),
                self.c[3].inv(f),
                self.c[0].inv(f),
                self.c[1].inv(f),
            ],
        }
    }
}

/// `a · b⁻¹` for two characters of the same field.
pub(crate) fn char_ratio(field: &FieldSpec, a: &CharFx, b: &CharFx) -> CharFx {
    field
        .mul_chars(a, &field.inv_char(b))
        .expect("single field spec")
}

/// Is `chi` exactly `ν^e` (trivial tag, no imaginary part)?
pub(crate) fn is_nu_power(chi: &CharFx, e: Rat) -> bool {
    chi.s_re == e && chi.s_im.is_zero() && {
        let zero = match &chi.tag {
            crate::chars::UnitTag::Real(t) => *t == 0,
            crate::chars::UnitTag::Complex(m) => *m == 0,
            crate::chars::UnitTag::NonArch(rs) => rs.iter().all(|&r| r == 0),
        };
        zero
    }
}
