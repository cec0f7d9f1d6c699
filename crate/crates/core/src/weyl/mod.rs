//! Weyl-algebra verification harness: exact differential operators with
//! multivariate rational coefficients, the big-cell realization of the
//! degenerate principal series, and the intertwining checks for the
//! Capelli-type operators `det(∂)^i`.

mod cell;
mod op;
mod poly;
mod verify;

pub use cell::{
    basis_name, build_cell_action, build_cell_action_complex, build_cell_action_symbolic,
    cell_action_block, check_bracket_fidelity, CellAction, CellLayout,
};
pub use op::{det_partial_power, PolyDiffOp};
pub use poly::{brat, Mono, MultiPoly};
pub use verify::{
    adjoint_identity_holds, verify_adjoint_covariance, verify_exceptional, ArchField,
    DiffOpReport, Perturbation, Side, Slot,
};
