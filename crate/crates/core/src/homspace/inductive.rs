//! Independent classification by induction on `n`.
//!
//! The recursion mirrors the structure of the multiplicity proof:
//!
//! 1. the central-character identity is necessary, so its failure gives
//!    dimension 0 at once;
//! 2. a finite-rank pattern settles the quadruple without recursion;
//! 3. `n ≤ 2` and quadruples with an empty block are the shared base,
//!    delegated to the direct matcher;
//! 4. otherwise the blockwise derivative `X′` (every `p_i ≥ 1`) is
//!    classified recursively. Dimension 0 downstairs forces dimension 0
//!    upstairs. A certificate downstairs narrows `X` to candidates of one
//!    family kind; the candidate at level `n` is pinned by `X`'s block sizes
//!    and an anchor twist, and blocks of size 1 (the ones the derivative
//!    forgot) are confirmed against the pattern directly, which given the
//!    already-verified central constraint is exactly the unique-character
//!    pinning available for size-1 blocks. A failed lift is dimension 0.

use super::{
    classify, has_finite_rank_pattern, match_exceptional, match_mixed, match_standard,
    Classification, Family, FamilyKind, NoFamilyReason, Quadruple,
};

pub fn inductive_classify(x: &Quadruple) -> Classification {
    if !x.central_constraint() {
        return Classification::no_family(NoFamilyReason::CentralConstraintFailed);
    }
    if let Some((family, twist)) = has_finite_rank_pattern(x) {
        return Classification::member(family, twist);
    }
    if x.n() <= 2 || x.sizes().contains(&0) {
        return classify(x);
    }
    let derived = x.derivative().expect("all blocks nonempty");
    let recursive = inductive_classify(&derived);
    let Some(kind) = recursive.kind() else {
        return Classification::no_family(NoFamilyReason::NoPattern);
    };
    let lifted = match kind {
        FamilyKind::Standard => match_standard(x).map(|(k, t)| (Family::Standard(k), t)),
        FamilyKind::Mixed => match_mixed(x).map(|(k, t)| (Family::Mixed(k), t)),
        FamilyKind::Exceptional => match_exceptional(x).map(|(k, t)| (Family::Exceptional(k), t)),
    };
    match lifted {
        Some((family, twist)) => Classification::member(family, twist),
        None => Classification::no_family(NoFamilyReason::LiftFailed),
    }
}
