//! Direct family pattern matching.
//!
//! Family shapes, always up to one common central twist `ψ`:
//!
//! * standard: `(χ1, χ2; χ1, χ2)` (scalar) or `(χ1, χ2; χ2, χ1)`
//!   (Knapp–Stein);
//! * rank-one mixed, level `k = n`, `0 ≤ i ≠ j < k`:
//!   `([j,k), [0,j); [0,i), [i,k))`;
//! * Radon mixed, `0 < i < j < k`, with `β = [0,j)×[i,k)`,
//!   `γ = [0,k)×[i,j)`: the four source/target arrangements
//!   `γ⇢β`, `γ̃⇢β`, `β̃⇢γ`, `β̃⇢γ̃` (cases a–d);
//! * exceptional, archimedean only, all four blocks of size `k`:
//!   `(1, δ^i·ς; δ^i, ς)` over `ℝ` and `(1, δ^i·δ̄^j; δ^i, δ̄^j)` or its
//!   conjugate over `ℂ`, `i ≥ 1`.
//!
//! Parameters are always solved from block sizes, never searched; exponent
//! differences are then verified against an anchor block of positive size,
//! which makes every test twist-invariant. A block of size 0 carries the
//! trivial character and denotes the same induced representation regardless
//! of its position in the pair, so matchers also try the arrangements that
//! swap an empty block with its partner.

use super::{
    char_ratio, is_nu_power, Classification, ComplexVariant, ExceptionalKind, Family, MixedKind,
    NoFamilyReason, Quadruple, RadonCase, StandardKind,
};
use crate::chars::{CharFx, FieldKind, Rat, UnitTag};
use num_traits::Zero;

/// Index arrangements of `(χ1, χ2; χ3, χ4)` that denote the same pair of
/// induced representations: the identity, plus empty-block swaps.
fn views(x: &Quadruple) -> ([[usize; 4]; 4], usize) {
    let mut vs = [[0usize, 1, 2, 3]; 4];
    let mut len = 1;
    let src = x.c[0].p == 0 || x.c[1].p == 0;
    let tgt = x.c[2].p == 0 || x.c[3].p == 0;
    if src {
        vs[len] = [1, 0, 2, 3];
        len += 1;
    }
    if tgt {
        vs[len] = [0, 1, 3, 2];
        len += 1;
    }
    if src && tgt {
        vs[len] = [1, 0, 3, 2];
        len += 1;
    }
    (vs, len)
}

struct SegPattern {
    sizes: [u32; 4],
    exps: [Rat; 4],
    anchor: usize,
}

/// Check one view of `x` against a segment pattern; returns the realizing
/// twist `ψ = ψ_anchor · ν^{−e_anchor}` on success.
fn match_seg_pattern(x: &Quadruple, view: [usize; 4], pat: &SegPattern) -> Option<CharFx> {
    for idx in 0..4 {
        if x.c[view[idx]].p != pat.sizes[idx] {
            return None;
        }
    }
    let f = &x.field;
    let anchor_chi = &x.c[view[pat.anchor]].chi;
    for idx in 0..4 {
        if pat.sizes[idx] == 0 {
            continue;
        }
        let ratio = char_ratio(f, &x.c[view[idx]].chi, anchor_chi);
        if !is_nu_power(&ratio, pat.exps[idx] - pat.exps[pat.anchor]) {
            return None;
        }
    }
    Some(
        f.mul_chars(anchor_chi, &f.nu(-pat.exps[pat.anchor]))
            .expect("single field spec"),
    )
}

fn half(n: i64) -> Rat {
    Rat::new(n, 2)
}

fn rank1_pattern(i: u32, j: u32, k: u32) -> SegPattern {
    let (i, j, k) = (i as i64, j as i64, k as i64);
    SegPattern {
        sizes: [(k - j) as u32, j as u32, i as u32, (k - i) as u32],
        exps: [half(j + k), half(j), half(i), half(i + k)],
        anchor: 3,
    }
}

/// Scalar or Knapp–Stein intertwiner: target equals source or its swap.
pub fn match_standard(x: &Quadruple) -> Option<(StandardKind, CharFx)> {
    let (vs, len) = views(x);
    for v in &vs[..len] {
        if x.c[v[2]] == x.c[v[0]] && x.c[v[3]] == x.c[v[1]] {
            return Some((StandardKind::Identity, x.field.trivial_char()));
        }
    }
    for v in &vs[..len] {
        if x.c[v[2]] == x.c[v[1]] && x.c[v[3]] == x.c[v[0]] {
            return Some((StandardKind::KnappStein, x.field.trivial_char()));
        }
    }
    None
}

/// Mixed patterns, first match in the order rank-one, Radon a, b, c, d.
pub fn match_mixed(x: &Quadruple) -> Option<(MixedKind, CharFx)> {
    let n = x.n();
    // Rank-one: parameters from the view's block sizes, (j, i) = (p2, p3).
    let (vs, len) = views(x);
    for &v in &vs[..len] {
        let j = x.c[v[1]].p;
        let i = x.c[v[2]].p;
        if j < n && i < n && i != j {
            let pat = rank1_pattern(i, j, n);
            if let Some(twist) = match_seg_pattern(x, v, &pat) {
                return Some((MixedKind::Rank1 { i, j, k: n }, twist));
            }
        }
    }
    // Radon cases; every block of the pattern is nonempty, so only the
    // literal arrangement can match.
    let [p1, p2, p3, p4] = x.sizes().map(|p| p as i64);
    let radon = |case: RadonCase, i: i64, j: i64, k: i64| -> Option<(MixedKind, CharFx)> {
        if !(0 < i && i < j && j < k) {
            return None;
        }
        let (sizes, exps, anchor) = match case {
            RadonCase::A => (
                [k, j - i, j, k - i],
                [half(k), half(i + j), half(j), half(i + k)],
                2,
            ),
            RadonCase::B => (
                [j - i, k, j, k - i],
                [half(i + j), half(k), half(j), half(i + k)],
                2,
            ),
            RadonCase::C => (
                [k - i, j, k, j - i],
                [half(i + k), half(j), half(k), half(i + j)],
                0,
            ),
            RadonCase::D => (
                [k - i, j, j - i, k],
                [half(i + k), half(j), half(i + j), half(k)],
                0,
            ),
        };
        let pat = SegPattern {
            sizes: sizes.map(|s| s as u32),
            exps,
            anchor,
        };
        match_seg_pattern(x, [0, 1, 2, 3], &pat).map(|twist| {
            (
                MixedKind::Radon {
                    case,
                    i: i as u32,
                    j: j as u32,
                    k: k as u32,
                },
                twist,
            )
        })
    };
    radon(RadonCase::A, p3 - p2, p3, p1)
        .or_else(|| radon(RadonCase::B, p3 - p1, p3, p2))
        .or_else(|| radon(RadonCase::C, p2 - p4, p2, p3))
        .or_else(|| radon(RadonCase::D, p2 - p3, p2, p4))
}

fn complex_m(chi: &CharFx) -> i64 {
    match chi.tag {
        UnitTag::Complex(m) => m,
        _ => unreachable!("complex field carries complex tags"),
    }
}

/// Capelli-type patterns on the middle Grassmannian, archimedean fields only.
pub fn match_exceptional(x: &Quadruple) -> Option<(ExceptionalKind, CharFx)> {
    let [p1, p2, p3, p4] = x.sizes();
    let k = p1;
    if k == 0 || p2 != k || p3 != k || p4 != k {
        return None;
    }
    let f = &x.field;
    let psi = x.c[0].chi.clone();
    let d2 = char_ratio(f, &x.c[1].chi, &psi);
    let d3 = char_ratio(f, &x.c[2].chi, &psi);
    let d4 = char_ratio(f, &x.c[3].chi, &psi);
    if !(d2.s_im.is_zero() && d3.s_im.is_zero() && d4.s_im.is_zero()) {
        return None;
    }
    match f.kind {
        FieldKind::Real => {
            // (1, δ^i·ς; δ^i, ς) relative to ψ = χ1.
            if !d3.s_re.is_integer() {
                return None;
            }
            let i = d3.s_re.to_integer();
            if i < 1 {
                return None;
            }
            let tags_ok = d2.tag == UnitTag::Real(((i + 1) % 2) as u8)
                && d3.tag == UnitTag::Real((i % 2) as u8)
                && d4.tag == UnitTag::Real(1);
            let exps_ok = d2.s_re == Rat::from_integer(i) && d4.s_re.is_zero();
            if tags_ok && exps_ok {
                return Some((ExceptionalKind::RealCapelli { k, i: i as u32 }, psi));
            }
            None
        }
        FieldKind::Complex => {
            let (m2, m3, m4) = (complex_m(&d2), complex_m(&d3), complex_m(&d4));
            let check = |i: i64, j: i64, m2_expected: i64| -> bool {
                i >= 1
                    && m2 == m2_expected
                    && d2.s_re == half(i + j)
                    && d3.s_re == half(i)
                    && d4.s_re == half(j)
            };
            // Variant 1: (1, δ^i·δ̄^j; δ^i, δ̄^j).
            let (i, j) = (m3, -m4);
            if check(i, j, i - j) {
                return Some((
                    ExceptionalKind::ComplexCapelli {
                        variant: ComplexVariant::One,
                        k,
                        i: i as u32,
                        j,
                    },
                    psi,
                ));
            }
            // Variant 2: (1, δ̄^i·δ^j; δ̄^i, δ^j).
            let (i, j) = (-m3, m4);
            if check(i, j, j - i) {
                return Some((
                    ExceptionalKind::ComplexCapelli {
                        variant: ComplexVariant::Two,
                        k,
                        i: i as u32,
                        j,
                    },
                    psi,
                ));
            }
            None
        }
        FieldKind::NonArch => None,
    }
}

/// Patterns forcing a finite-rank intertwiner: the rank-one-through-character
/// shape (standard when `i = j`, rank-one mixed otherwise) and, over
/// archimedean fields, the literal swap `(χ3, χ4) = (χ2, χ1)`.
pub fn has_finite_rank_pattern(x: &Quadruple) -> Option<(Family, CharFx)> {
    let n = x.n();
    let (vs, len) = views(x);
    for &v in &vs[..len] {
        let j = x.c[v[1]].p;
        let i = x.c[v[2]].p;
        if j < n && i < n {
            let pat = rank1_pattern(i, j, n);
            if let Some(twist) = match_seg_pattern(x, v, &pat) {
                let family = if i == j {
                    Family::Standard(StandardKind::KnappStein)
                } else {
                    Family::Mixed(MixedKind::Rank1 { i, j, k: n })
                };
                return Some((family, twist));
            }
        }
    }
    if x.field.is_archimedean() && x.c[2] == x.c[1] && x.c[3] == x.c[0] {
        return Some((
            Family::Standard(StandardKind::KnappStein),
            x.field.trivial_char(),
        ));
    }
    None
}

/// Decide `dim Hom(χ1×χ2, χ3×χ4)` by direct pattern matching, in priority
/// order standard, mixed, exceptional.
pub fn classify(x: &Quadruple) -> Classification {
    if !x.central_constraint() {
        return Classification::no_family(NoFamilyReason::CentralConstraintFailed);
    }
    if let Some((kind, twist)) = match_standard(x) {
        return Classification::member(Family::Standard(kind), twist);
    }
    if let Some((kind, twist)) = match_mixed(x) {
        return Classification::member(Family::Mixed(kind), twist);
    }
    if let Some((kind, twist)) = match_exceptional(x) {
        return Classification::member(Family::Exceptional(kind), twist);
    }
    Classification::no_family(NoFamilyReason::NoPattern)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chars::{segment, FieldSpec, GLChar};

    fn r(n: i64, d: i64) -> Rat {
        Rat::new(n, d)
    }

    fn quad(field: &FieldSpec, c: [GLChar; 4]) -> Quadruple {
        let [a, b, cc, d] = c;
        Quadruple::new(field.clone(), a, b, cc, d).unwrap()
    }

    fn seg(field: &FieldSpec, i: i64, j: i64) -> GLChar {
        segment(field, i, j).unwrap()
    }

    #[test]
    fn standard_matches() {
        let f = FieldSpec::real();
        let chi = GLChar::new(2, f.nu(r(1, 3)));
        let eta = GLChar::new(1, f.sgn().unwrap());
        let x = quad(&f, [chi.clone(), eta.clone(), chi.clone(), eta.clone()]);
        assert_eq!(match_standard(&x).unwrap().0, StandardKind::Identity);

        let y = quad(&f, [chi.clone(), eta.clone(), eta.clone(), chi.clone()]);
        assert_eq!(match_standard(&y).unwrap().0, StandardKind::KnappStein);

        let chi_nu = GLChar::new(2, f.mul_chars(&chi.chi, &f.nu(r(1, 1))).unwrap());
        let z = quad(&f, [chi.clone(), eta.clone(), chi_nu, eta.clone()]);
        assert!(match_standard(&z).is_none());
    }

    #[test]
    fn identity_beats_knapp_stein() {
        let f = FieldSpec::real();
        let chi = GLChar::new(1, f.nu(r(2, 1)));
        let x = quad(&f, [chi.clone(), chi.clone(), chi.clone(), chi.clone()]);
        assert_eq!(match_standard(&x).unwrap().0, StandardKind::Identity);
    }

    #[test]
    fn rank_one_instance() {
        let f = FieldSpec::real();
        let x = quad(
            &f,
            [seg(&f, 2, 3), seg(&f, 0, 2), seg(&f, 0, 1), seg(&f, 1, 3)],
        );
        let (kind, twist) = match_mixed(&x).unwrap();
        assert_eq!(kind, MixedKind::Rank1 { i: 1, j: 2, k: 3 });
        assert!(twist.is_trivial());
    }

    #[test]
    fn radon_case_a_instance() {
        let f = FieldSpec::real();
        let x = quad(
            &f,
            [seg(&f, 0, 3), seg(&f, 1, 2), seg(&f, 0, 2), seg(&f, 1, 3)],
        );
        let (kind, twist) = match_mixed(&x).unwrap();
        assert_eq!(
            kind,
            MixedKind::Radon {
                case: RadonCase::A,
                i: 1,
                j: 2,
                k: 3
            }
        );
        assert!(twist.is_trivial());

        // The anchor-difference method is twist-invariant.
        let t = x.twist(&f.nu(r(1, 4))).unwrap();
        let (kind2, twist2) = match_mixed(&t).unwrap();
        assert_eq!(kind, kind2);
        assert_eq!(twist2, f.nu(r(1, 4)));
    }

    #[test]
    fn radon_cases_b_c_d() {
        let f = FieldSpec::real();
        // (i,j,k) = (1,2,3): γ = [0,3)×[1,2), β = [0,2)×[1,3).
        let g1 = seg(&f, 0, 3);
        let g2 = seg(&f, 1, 2);
        let b1 = seg(&f, 0, 2);
        let b2 = seg(&f, 1, 3);
        let cases = [
            ([g2.clone(), g1.clone(), b1.clone(), b2.clone()], RadonCase::B),
            ([b2.clone(), b1.clone(), g1.clone(), g2.clone()], RadonCase::C),
            ([b2.clone(), b1.clone(), g2.clone(), g1.clone()], RadonCase::D),
        ];
        for (blocks, want) in cases {
            let x = quad(&f, blocks);
            let (kind, _) = match_mixed(&x).unwrap();
            assert_eq!(
                kind,
                MixedKind::Radon {
                    case: want,
                    i: 1,
                    j: 2,
                    k: 3
                }
            );
        }
    }

    #[test]
    fn rank_one_with_empty_blocks() {
        let f = FieldSpec::non_arch(3, vec![]).unwrap();
        // α̃_1 ⇢ α_0 at k=2.
        let x = quad(
            &f,
            [seg(&f, 1, 2), seg(&f, 0, 1), seg(&f, 0, 0), seg(&f, 0, 2)],
        );
        let (kind, _) = match_mixed(&x).unwrap();
        assert_eq!(kind, MixedKind::Rank1 { i: 0, j: 1, k: 2 });

        // Same instance with the empty target block written first.
        let y = quad(
            &f,
            [seg(&f, 1, 2), seg(&f, 0, 1), seg(&f, 0, 2), seg(&f, 0, 0)],
        );
        let (kind, _) = match_mixed(&y).unwrap();
        assert_eq!(kind, MixedKind::Rank1 { i: 0, j: 1, k: 2 });
    }

    #[test]
    fn exceptional_real() {
        let f = FieldSpec::real();
        let one = GLChar::trivial(&f, 1);
        let nu = GLChar::new(1, f.nu(r(1, 1)));
        let nusgn = GLChar::new(1, f.mul_chars(&f.nu(r(1, 1)), &f.sgn().unwrap()).unwrap());
        let sgn = GLChar::new(1, f.sgn().unwrap());
        // δς = ν over ℝ, so (1, ν; ν·sgn, sgn) is the k=1, i=1 instance.
        let x = quad(&f, [one.clone(), nu.clone(), nusgn.clone(), sgn.clone()]);
        let (kind, twist) = match_exceptional(&x).unwrap();
        assert_eq!(kind, ExceptionalKind::RealCapelli { k: 1, i: 1 });
        assert!(twist.is_trivial());

        // χ4 tag failure.
        let y = quad(&f, [one.clone(), nu.clone(), nusgn.clone(), one.clone()]);
        assert!(match_exceptional(&y).is_none());
    }

    #[test]
    fn exceptional_complex() {
        let f = FieldSpec::complex();
        let one = GLChar::trivial(&f, 1);
        let delta = GLChar::new(1, f.delta().unwrap());
        let x = quad(&f, [one.clone(), delta.clone(), delta.clone(), one.clone()]);
        let (kind, _) = match_exceptional(&x).unwrap();
        assert_eq!(
            kind,
            ExceptionalKind::ComplexCapelli {
                variant: ComplexVariant::One,
                k: 1,
                i: 1,
                j: 0
            }
        );

        let bar = GLChar::new(1, f.delta_bar().unwrap());
        let y = quad(&f, [one.clone(), bar.clone(), bar.clone(), one.clone()]);
        let (kind, _) = match_exceptional(&y).unwrap();
        assert_eq!(
            kind,
            ExceptionalKind::ComplexCapelli {
                variant: ComplexVariant::Two,
                k: 1,
                i: 1,
                j: 0
            }
        );
    }

    #[test]
    fn classify_standard_swap_has_dim_one() {
        // (ν^{1/3}, 1; 1, ν^{1/3}) is (χ1, χ2; χ2, χ1): a Knapp–Stein
        // standard instance, so the dimension is 1.
        let f = FieldSpec::real();
        let a = GLChar::new(1, f.nu(r(1, 3)));
        let one = GLChar::trivial(&f, 1);
        let x = quad(&f, [a.clone(), one.clone(), one.clone(), a.clone()]);
        let c = classify(&x);
        assert_eq!(c.dim(), 1);
        assert_eq!(
            c.family(),
            Some(&Family::Standard(StandardKind::KnappStein))
        );
    }

    #[test]
    fn classify_dim_zero_cases() {
        let f = FieldSpec::real();
        let one = GLChar::trivial(&f, 1);
        let nu = GLChar::new(1, f.nu(r(1, 1)));
        let x = quad(&f, [nu.clone(), one.clone(), one.clone(), one.clone()]);
        let c = classify(&x);
        assert_eq!(c.dim(), 0);
        assert_eq!(c.reason(), Some(NoFamilyReason::CentralConstraintFailed));

        // Central constraint holds but no family fits:
        // (ν, 1; ν^{1/2}, ν^{1/2}) with all block sizes 1.
        let h = GLChar::new(1, f.nu(r(1, 2)));
        let y = quad(&f, [nu.clone(), one.clone(), h.clone(), h.clone()]);
        assert!(y.central_constraint());
        let c = classify(&y);
        assert_eq!(c.dim(), 0);
        assert_eq!(c.reason(), Some(NoFamilyReason::NoPattern));
    }

    #[test]
    fn finite_rank_patterns() {
        let f = FieldSpec::real();
        let x = quad(
            &f,
            [seg(&f, 1, 3), seg(&f, 0, 1), seg(&f, 0, 1), seg(&f, 1, 3)],
        );
        let (fam, _) = has_finite_rank_pattern(&x).unwrap();
        assert_eq!(fam, Family::Standard(StandardKind::KnappStein));

        let y = quad(
            &f,
            [seg(&f, 2, 3), seg(&f, 0, 2), seg(&f, 0, 1), seg(&f, 1, 3)],
        );
        let (fam, _) = has_finite_rank_pattern(&y).unwrap();
        assert_eq!(fam, Family::Mixed(MixedKind::Rank1 { i: 1, j: 2, k: 3 }));

        let a = GLChar::new(1, f.nu(r(1, 7)));
        let b = GLChar::new(1, f.nu(r(2, 7)));
        let z = quad(&f, [a.clone(), b.clone(), a.clone(), b.clone()]);
        assert!(has_finite_rank_pattern(&z).is_none());
    }

    #[test]
    fn derivative_examples() {
        let f = FieldSpec::real();
        // Radon a at (i,j,k) = (1,3,5), block sizes (5,2,3,4).
        let x = quad(
            &f,
            [seg(&f, 0, 5), seg(&f, 1, 3), seg(&f, 0, 3), seg(&f, 1, 5)],
        );
        let (kind, _) = match_mixed(&x).unwrap();
        assert_eq!(
            kind,
            MixedKind::Radon {
                case: RadonCase::A,
                i: 1,
                j: 3,
                k: 5
            }
        );
        let d = x.derivative().unwrap();
        let (kind, _) = match_mixed(&d).unwrap();
        assert_eq!(
            kind,
            MixedKind::Radon {
                case: RadonCase::A,
                i: 1,
                j: 2,
                k: 4
            }
        );

        // Standard instances stay standard under the derivative.
        let chi = GLChar::new(2, f.nu(r(1, 5)));
        let eta = GLChar::new(3, f.sgn().unwrap());
        let s = quad(&f, [chi.clone(), eta.clone(), chi.clone(), eta.clone()]);
        let sd = s.derivative().unwrap();
        assert_eq!(classify(&sd).kind(), classify(&s).kind());
    }
}
