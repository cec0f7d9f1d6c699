//! Exact classification of intertwining-operator spaces between line-bundle
//! representations on Grassmannians for `GL(n)` over a local field.
//!
//! The crate has four parts:
//!
//! * [`chars`]: exact arithmetic for characters of `F^×` and of `GL_p`
//!   (rational `ν`-exponents plus a discrete unitary tag), segments,
//!   restriction/extension, modular characters, and a small text grammar.
//! * [`homspace`]: the classifier: given a quadruple
//!   `X = (χ1, χ2; χ3, χ4)` with `p1+p2 = p3+p4 = n`, decide
//!   `dim Hom(χ1×χ2, χ3×χ4) ∈ {0,1}` and name the intertwiner, both by
//!   direct family pattern matching and by an independent derivative
//!   recursion, together with a ground-truth family generator.
//! * [`finite`]: finite Grassmannian models over `F_q`: exact subspace
//!   enumeration, Radon/incidence matrices, generator-set equivariance
//!   checks, and fraction-free rank computation.
//! * [`weyl`]: a small Weyl algebra (differential operators with
//!   multivariate polynomial coefficients over exact rationals) used to
//!   verify that `det(∂)^i` intertwines the big-cell Lie-algebra actions
//!   for exactly the expected exponent pairs.

#![allow(clippy::needless_range_loop)] // index loops mirror the matrix formulas

pub mod chars;
pub mod finite;
pub mod homspace;
pub mod weyl;
