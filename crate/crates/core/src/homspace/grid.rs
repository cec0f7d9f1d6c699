//! Exhaustive quadruple grids for cross-oracle and invariance sweeps.

use super::Quadruple;
use crate::chars::{CharFx, FieldKind, FieldSpec, GLChar, Rat, UnitTag};
use num_traits::{ToPrimitive, Zero};

fn block_chars(field: &FieldSpec, max_exp: Rat) -> Vec<CharFx> {
    let halves = (max_exp * Rat::from_integer(2))
        .floor()
        .to_integer()
        .to_i64()
        .unwrap_or(0)
        .max(0);
    let tags: Vec<UnitTag> = match field.kind {
        FieldKind::Real => vec![UnitTag::Real(0), UnitTag::Real(1)],
        FieldKind::Complex => (-1..=1).map(UnitTag::Complex).collect(),
        FieldKind::NonArch => {
            let mut tags = vec![Vec::new()];
            for &order in &field.unit_tag_orders {
                let mut next = Vec::with_capacity(tags.len() * order as usize);
                for t in &tags {
                    for r in 0..order {
                        let mut t2 = t.clone();
                        t2.push(r);
                        next.push(t2);
                    }
                }
                tags = next;
            }
            tags.into_iter().map(UnitTag::NonArch).collect()
        }
    };
    let mut out = Vec::new();
    for h in 0..=halves {
        for tag in &tags {
            out.push(CharFx {
                s_re: Rat::new(h, 2),
                s_im: Rat::zero(),
                tag: tag.clone(),
            });
        }
    }
    out
}

/// Visit every quadruple with `n ≤ max_n`, half-integer exponents in
/// `[0, max_exp]` and grid tags (the full tag group over `ℝ` and
/// non-archimedean fields, `|m| ≤ 1` over `ℂ`). Blocks of size 0 carry the
/// trivial character only.
pub fn for_each_grid_quadruple(
    field: &FieldSpec,
    max_n: u32,
    max_exp: Rat,
    mut f: impl FnMut(&Quadruple),
) {
    let grid = block_chars(field, max_exp);
    let trivial = field.trivial_char();
    let chars_for = |p: u32| -> &[CharFx] {
        if p == 0 {
            std::slice::from_ref(&trivial)
        } else {
            &grid
        }
    };
    for n in 1..=max_n {
        for p1 in 0..=n {
            for p3 in 0..=n {
                for chi1 in chars_for(p1) {
                    for chi2 in chars_for(n - p1) {
                        for chi3 in chars_for(p3) {
                            for chi4 in chars_for(n - p3) {
                                let x = Quadruple::new(
                                    field.clone(),
                                    GLChar::new(p1, chi1.clone()),
                                    GLChar::new(n - p1, chi2.clone()),
                                    GLChar::new(p3, chi3.clone()),
                                    GLChar::new(n - p3, chi4.clone()),
                                )
                                .expect("balanced by construction");
                                f(&x);
                            }
                        }
                    }
                }
            }
        }
    }
}
