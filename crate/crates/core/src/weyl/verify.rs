//! Exact symbolic verification that `det(∂)^i` intertwines the big-cell
//! actions for the expected exponent pairs, and of the adjoint-covariance
//! hypothesis `det(a·x·b⁻¹)^i = det(a)^i·det(b)^{−i}·det(x)^i`.
//!
//! Verification is at the Lie-algebra level: `sgn`-type tags differentiate
//! to zero, so the real check cannot see `ς`-twists; those live in the
//! classifier's tag bookkeeping, not here. Over `ℝ` the exponent pairs are
//! `χ = (0, i)` and `η = (i, 0)`. Over `ℂ` the characters split into
//! holomorphic and antiholomorphic exponents: variant 1 uses `det(∂)^i`
//! with holomorphic pairs `(0, i) → (i, 0)` while the antiholomorphic pairs
//! `(0, j)` agree on both sides (so the `∂̄`-free operator commutes with
//! that copy); variant 2 is the mirror image with `det(∂̄)^i`.

use super::cell::{
    basis_name, build_cell_action, build_cell_action_complex, CellAction, CellLayout,
};
use super::op::{det_partial_power, signed_permutations, PolyDiffOp};
use super::poly::MultiPoly;
use crate::chars::Rat;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArchField {
    Real,
    Complex,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Chi,
    Eta,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Slot {
    S1,
    S2,
}

/// Bump one inducing exponent by +1 (negative controls). `anti` selects the
/// antiholomorphic copy over `ℂ` and is ignored over `ℝ`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Perturbation {
    pub side: Side,
    pub slot: Slot,
    pub anti: bool,
}

impl Perturbation {
    pub fn parse(token: &str) -> Option<Perturbation> {
        let (side, rest) = if let Some(r) = token.strip_prefix("chi-") {
            (Side::Chi, r)
        } else if let Some(r) = token.strip_prefix("eta-") {
            (Side::Eta, r)
        } else {
            // Bare s1/s2 perturb the target side.
            (Side::Eta, token)
        };
        let (slot, anti) = match rest {
            "s1" => (Slot::S1, false),
            "s2" => (Slot::S2, false),
            "t1" => (Slot::S1, true),
            "t2" => (Slot::S2, true),
            _ => return None,
        };
        Some(Perturbation { side, slot, anti })
    }
}

/// Outcome of an intertwining check; on failure, the first offending basis
/// element and the residue operator in stable text form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiffOpReport {
    pub ok: bool,
    pub witness: Option<String>,
    pub residue: Option<String>,
}

impl DiffOpReport {
    fn pass() -> Self {
        DiffOpReport {
            ok: true,
            witness: None,
            residue: None,
        }
    }
}

struct ExpPair {
    s1: Rat,
    s2: Rat,
}

fn bump(pair: &mut ExpPair, slot: Slot) {
    match slot {
        Slot::S1 => pair.s1 += Rat::from_integer(1),
        Slot::S2 => pair.s2 += Rat::from_integer(1),
    }
}

fn check_intertwines(
    d: &PolyDiffOp,
    chi: &CellAction,
    eta: &CellAction,
    layout: &CellLayout,
    label: &str,
) -> DiffOpReport {
    let two_k = 2 * layout.k;
    for u in 0..two_k {
        for v in 0..two_k {
            let lhs = d.compose(chi.op(u, v));
            let rhs = eta.op(u, v).compose(d);
            let residue = lhs.sub(&rhs);
            if !residue.is_zero() {
                return DiffOpReport {
                    ok: false,
                    witness: Some(format!("{label}{}", basis_name(u, v))),
                    residue: Some(layout.render_op(&residue)),
                };
            }
        }
    }
    DiffOpReport::pass()
}

/// Does `det(∂)^i` map the `χ`-realization to the `η`-realization for the
/// Capelli-type exponent pattern at (k, i) (and `j` over `ℂ`)? `false` is a
/// result, not an error; `perturb` shifts one exponent for negative
/// controls.
pub fn verify_exceptional(
    field: ArchField,
    k: u32,
    i: u32,
    j: Option<i64>,
    perturb: Option<Perturbation>,
) -> DiffOpReport {
    assert!(k >= 1 && i >= 1);
    let k = k as usize;
    let i_rat = Rat::from_integer(i as i64);
    match field {
        ArchField::Real => {
            let mut chi = ExpPair {
                s1: Rat::zero(),
                s2: i_rat,
            };
            let mut eta = ExpPair {
                s1: i_rat,
                s2: Rat::zero(),
            };
            if let Some(p) = perturb {
                match p.side {
                    Side::Chi => bump(&mut chi, p.slot),
                    Side::Eta => bump(&mut eta, p.slot),
                }
            }
            let chi_action = build_cell_action(k, chi.s1, chi.s2);
            let eta_action = build_cell_action(k, eta.s1, eta.s2);
            let layout = chi_action.layout;
            let d = det_partial_power(
                layout.nx(),
                layout.nv(),
                k,
                &|a, b| layout.x_index(false, a, b),
                i,
            );
            check_intertwines(&d, &chi_action, &eta_action, &layout, "")
        }
        ArchField::Complex => {
            let j = Rat::from_integer(j.unwrap_or(0));
            for (label, bar) in [("v1:", false), ("v2:", true)] {
                // Variant 1 moves the holomorphic exponents (0,i) → (i,0)
                // and keeps the antiholomorphic pair (0,j); variant 2 is
                // the conjugate arrangement.
                let (mut chi_hol, mut eta_hol, mut chi_anti, mut eta_anti) = if !bar {
                    (
                        ExpPair { s1: Rat::zero(), s2: i_rat },
                        ExpPair { s1: i_rat, s2: Rat::zero() },
                        ExpPair { s1: Rat::zero(), s2: j },
                        ExpPair { s1: Rat::zero(), s2: j },
                    )
                } else {
                    (
                        ExpPair { s1: Rat::zero(), s2: j },
                        ExpPair { s1: Rat::zero(), s2: j },
                        ExpPair { s1: Rat::zero(), s2: i_rat },
                        ExpPair { s1: i_rat, s2: Rat::zero() },
                    )
                };
                if let Some(p) = perturb {
                    let pair = match (p.side, p.anti) {
                        (Side::Chi, false) => &mut chi_hol,
                        (Side::Chi, true) => &mut chi_anti,
                        (Side::Eta, false) => &mut eta_hol,
                        (Side::Eta, true) => &mut eta_anti,
                    };
                    bump(pair, p.slot);
                }
                let chi_action = build_cell_action_complex(
                    k,
                    (chi_hol.s1, chi_hol.s2),
                    (chi_anti.s1, chi_anti.s2),
                );
                let eta_action = build_cell_action_complex(
                    k,
                    (eta_hol.s1, eta_hol.s2),
                    (eta_anti.s1, eta_anti.s2),
                );
                let layout = chi_action.layout;
                let d = det_partial_power(
                    layout.nx(),
                    layout.nv(),
                    k,
                    &|a, b| layout.x_index(bar, a, b),
                    i,
                );
                let report = check_intertwines(&d, &chi_action, &eta_action, &layout, label);
                if !report.ok {
                    return report;
                }
            }
            DiffOpReport::pass()
        }
    }
}

type RatMat = Vec<Vec<BigRational>>;

fn det_rational(m: &RatMat) -> BigRational {
    let k = m.len();
    let mut det = BigRational::zero();
    for (perm, sign) in signed_permutations(k) {
        let mut term = BigRational::from_integer(BigInt::from(sign));
        for (r, &c) in perm.iter().enumerate() {
            term *= &m[r][c];
        }
        det += term;
    }
    det
}

fn invert_rational(m: &RatMat) -> Option<RatMat> {
    let k = m.len();
    let mut a = m.clone();
    let mut inv: RatMat = (0..k)
        .map(|r| {
            (0..k)
                .map(|c| {
                    if r == c {
                        BigRational::one()
                    } else {
                        BigRational::zero()
                    }
                })
                .collect()
        })
        .collect();
    for col in 0..k {
        let pivot = (col..k).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, pivot);
        inv.swap(col, pivot);
        let p = a[col][col].clone();
        for c in 0..k {
            a[col][c] /= &p;
            inv[col][c] /= &p;
        }
        for r in 0..k {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                for c in 0..k {
                    let (ac, ic) = (a[col][c].clone(), inv[col][c].clone());
                    a[r][c] -= &f * ac;
                    inv[r][c] -= &f * ic;
                }
            }
        }
    }
    Some(inv)
}

/// `det(a·x·b⁻¹)^i = det(a)^i·det(b)^{−i}·det(x)^i` as an exact polynomial
/// identity in the matrix entries `x`.
pub fn adjoint_identity_holds(a: &RatMat, b: &RatMat, i: u32) -> Option<bool> {
    let k = a.len();
    let binv = invert_rational(b)?;
    let nv = k * k;
    let xv = |r: usize, c: usize| MultiPoly::var(nv, r * k + c);
    // y = a·x·b⁻¹ entrywise.
    let mut y: Vec<Vec<MultiPoly>> = vec![vec![MultiPoly::zero(nv); k]; k];
    for r in 0..k {
        for s in 0..k {
            let mut acc = MultiPoly::zero(nv);
            for p in 0..k {
                for q in 0..k {
                    let scalar = &a[r][p] * &binv[q][s];
                    acc = acc.add(&xv(p, q).scale(&scalar));
                }
            }
            y[r][s] = acc;
        }
    }
    let det_poly = |m: &Vec<Vec<MultiPoly>>| -> MultiPoly {
        let mut det = MultiPoly::zero(nv);
        for (perm, sign) in signed_permutations(k) {
            let mut term =
                MultiPoly::constant(nv, BigRational::from_integer(BigInt::from(sign)));
            for (r, &c) in perm.iter().enumerate() {
                term = term.mul(&m[r][c]);
            }
            det = det.add(&term);
        }
        det
    };
    let lhs = det_poly(&y).pow(i);
    let x_mat: Vec<Vec<MultiPoly>> = (0..k).map(|r| (0..k).map(|c| xv(r, c)).collect()).collect();
    let det_a = det_rational(a);
    let det_b = det_rational(b);
    if det_b.is_zero() {
        return None;
    }
    let mut scalar = BigRational::one();
    for _ in 0..i {
        scalar *= &det_a;
        scalar /= &det_b;
    }
    let rhs = det_poly(&x_mat).pow(i).scale(&scalar);
    Some(lhs == rhs)
}

/// Run the adjoint-covariance identity for `trials` random invertible
/// rational matrix pairs (singular draws are redrawn).
pub fn verify_adjoint_covariance(k: u32, i: u32, trials: u32, seed: u64) -> bool {
    let k = k as usize;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let draw = |rng: &mut ChaCha8Rng| -> RatMat {
        loop {
            let m: RatMat = (0..k)
                .map(|_| {
                    (0..k)
                        .map(|_| {
                            BigRational::new(
                                BigInt::from(rng.random_range(-3i64..=3)),
                                BigInt::from(rng.random_range(1i64..=2)),
                            )
                        })
                        .collect()
                })
                .collect();
            if !det_rational(&m).is_zero() {
                return m;
            }
        }
    };
    for _ in 0..trials {
        let a = draw(&mut rng);
        let b = draw(&mut rng);
        match adjoint_identity_holds(&a, &b, i) {
            Some(true) => {}
            _ => return false,
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weyl::poly::brat;

    #[test]
    fn real_k1_i1_positive_control() {
        let r = verify_exceptional(ArchField::Real, 1, 1, None, None);
        assert!(r.ok, "witness {:?} residue {:?}", r.witness, r.residue);
    }

    #[test]
    fn real_k1_i1_critical_identity() {
        // ∂ ∘ (−x²∂) = (−x²∂ − 2x) ∘ ∂ in normal form: the multiplier
        // constants are (c_χ, c_η) = (0, −2).
        let chi = build_cell_action(1, Rat::zero(), Rat::from_integer(1));
        let eta = build_cell_action(1, Rat::from_integer(1), Rat::zero());
        let layout = chi.layout;
        let d = det_partial_power(1, 1, 1, &|a, b| layout.x_index(false, a, b), 1);
        let lhs = d.compose(chi.op(0, 1));
        let rhs = eta.op(0, 1).compose(&d);
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn real_k1_perturbed_eta_fails_at_e12() {
        let p = Perturbation {
            side: Side::Eta,
            slot: Slot::S2,
            anti: false,
        };
        let r = verify_exceptional(ArchField::Real, 1, 1, None, Some(p));
        assert!(!r.ok);
        assert_eq!(r.witness.as_deref(), Some("E12"));
        assert!(r.residue.is_some());
    }

    #[test]
    fn real_k2_i1_positive_control() {
        let r = verify_exceptional(ArchField::Real, 2, 1, None, None);
        assert!(r.ok, "witness {:?} residue {:?}", r.witness, r.residue);
    }

    #[test]
    fn complex_k1_controls() {
        for (i, j) in [(1u32, 0i64), (1, 1), (2, -1)] {
            let r = verify_exceptional(ArchField::Complex, 1, i, Some(j), None);
            assert!(r.ok, "(i,j)=({i},{j}): {:?}", r.witness);
        }
        let p = Perturbation {
            side: Side::Chi,
            slot: Slot::S2,
            anti: true,
        };
        let r = verify_exceptional(ArchField::Complex, 1, 1, Some(1), Some(p));
        assert!(!r.ok);
    }

    #[test]
    fn complex_k2_positive_control() {
        // Both copies at block size 2: 32 variables, 16 basis elements per
        // copy, determinant operators of order 2.
        let r = verify_exceptional(ArchField::Complex, 2, 1, Some(1), None);
        assert!(r.ok, "witness {:?} residue {:?}", r.witness, r.residue);
        let r = verify_exceptional(ArchField::Complex, 2, 1, Some(-2), None);
        assert!(r.ok, "witness {:?} residue {:?}", r.witness, r.residue);
    }

    #[test]
    fn perturbation_tokens() {
        assert_eq!(
            Perturbation::parse("s2"),
            Some(Perturbation {
                side: Side::Eta,
                slot: Slot::S2,
                anti: false
            })
        );
        assert_eq!(
            Perturbation::parse("chi-t1"),
            Some(Perturbation {
                side: Side::Chi,
                slot: Slot::S1,
                anti: true
            })
        );
        assert_eq!(Perturbation::parse("bogus"), None);
    }

    #[test]
    fn adjoint_covariance_k3() {
        assert!(verify_adjoint_covariance(3, 1, 2, 17));
    }

    #[test]
    fn adjoint_covariance() {
        // k=1 is scalar arithmetic.
        assert!(verify_adjoint_covariance(1, 3, 4, 11));
        // Deterministic instance: a = diag(1,2), b = I gives det(ax) = 2·det(x).
        let a = vec![
            vec![brat(1, 1), brat(0, 1)],
            vec![brat(0, 1), brat(2, 1)],
        ];
        let b = vec![
            vec![brat(1, 1), brat(0, 1)],
            vec![brat(0, 1), brat(1, 1)],
        ];
        assert_eq!(adjoint_identity_holds(&a, &b, 1), Some(true));
        assert!(verify_adjoint_covariance(2, 2, 3, 5));
    }
}
