//! Finite Grassmannian models over `F_q`: exact verification that the
//! Radon/incidence operators the classifier names are genuinely equivariant
//! and nonvanishing on constants.
//!
//! The model works with plain permutation modules: `ν` is trivial on a
//! finite field, so the `ν`-power twists of the local-field picture have no
//! finite counterpart. What the model checks is structure (equivariance
//! over a generator set of `GL_n(F_q)`, non-vanishing of composed chains
//! on the constant function), not the multiplicity statement itself.

mod fq;
mod matrix;
mod subspace;

pub use fq::Fq;
pub use matrix::{
    check_equivariance, compose_and_test_nonzero, gaussian_binomial, generator_names, generators,
    incidence_matrix, parse_matrix, radon_matrix, rank_exact, render_matrix, scalar_multiple_of,
    ExactMatrix,
};
pub use subspace::{act, enumerate_subspaces, intersection_dim, FqMat, Subspace};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FiniteError {
    #[error("unsupported field size {0}: q must be prime or 4")]
    UnsupportedQ(u32),
    #[error("dimension bounds violated: {0}")]
    Bounds(String),
    #[error("matrix shapes do not compose: {0}x{1} then {2}x{3}")]
    ShapeMismatch(usize, usize, usize, usize),
    #[error("the matrix is singular")]
    Singular,
    #[error("malformed matrix text: {0}")]
    BadFormat(String),
}
