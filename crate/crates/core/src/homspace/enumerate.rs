//! Ground-truth generator: every standard, mixed and exceptional quadruple
//! at a given `n`, on a bounded character grid, each emitted at the trivial
//! twist and once more under a seeded pseudorandom central twist.

use super::{
    Classification, ComplexVariant, ExceptionalKind, Family, MixedKind, Quadruple, RadonCase,
    StandardKind,
};
use crate::chars::{segment, CharFx, FieldKind, FieldSpec, GLChar, Rat, UnitTag};
use num_traits::{ToPrimitive, Zero};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::collections::HashSet;
use std::hash::{Hash, Hasher};

/// All unit tags on the grid: the full group over `ℝ` and non-archimedean
/// fields, `|m| ≤ param_bound` over `ℂ`.
fn tag_grid(field: &FieldSpec, param_bound: u32) -> Vec<UnitTag> {
    match field.kind {
        FieldKind::Real => vec![UnitTag::Real(0), UnitTag::Real(1)],
        FieldKind::Complex => {
            let b = param_bound as i64;
            (-b..=b).map(UnitTag::Complex).collect()
        }
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
    }
}

/// Half-integer exponents `0, 1/2, …` up to `exponent_bound`.
fn exponent_grid(exponent_bound: Rat) -> Vec<Rat> {
    let halves = (exponent_bound * Rat::from_integer(2))
        .floor()
        .to_integer()
        .to_i64()
        .unwrap_or(0)
        .max(0);
    (0..=halves).map(|h| Rat::new(h, 2)).collect()
}

fn char_grid(field: &FieldSpec, exponent_bound: Rat, param_bound: u32) -> Vec<CharFx> {
    let mut out = Vec::new();
    for s in exponent_grid(exponent_bound) {
        for tag in tag_grid(field, param_bound) {
            out.push(CharFx {
                s_re: s,
                s_im: Rat::zero(),
                tag,
            });
        }
    }
    out
}

fn random_twist(field: &FieldSpec, exponent_bound: Rat, param_bound: u32, rng: &mut ChaCha8Rng) -> CharFx {
    let exps = exponent_grid(exponent_bound);
    let tags = tag_grid(field, param_bound);
    CharFx {
        s_re: exps[rng.random_range(0..exps.len())],
        s_im: Rat::zero(),
        tag: tags[rng.random_range(0..tags.len())].clone(),
    }
}

fn key_of(x: &Quadruple, family: &Family) -> u128 {
    let mut h1 = std::collections::hash_map::DefaultHasher::new();
    (x, family).hash(&mut h1);
    let mut h2 = std::collections::hash_map::DefaultHasher::new();
    (family, 0x9e3779b97f4a7c15u64, x).hash(&mut h2);
    ((h1.finish() as u128) << 64) | h2.finish() as u128
}

/// Emit every family member at level `n` on the grid, duplicate-free per
/// `(quadruple, certificate)` pair. Each instance is visited at the trivial
/// twist and again under a pseudorandom twist drawn from the grid.
pub fn enumerate_family(
    field: &FieldSpec,
    n: u32,
    exponent_bound: Rat,
    param_bound: u32,
    seed: u64,
    mut visit: impl FnMut(&Quadruple, &Classification),
) {
    assert!(n >= 1, "n must be at least 1");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut seen: HashSet<u128> = HashSet::new();
    let mut emit = |x: Quadruple, family: Family, twist: CharFx, rng: &mut ChaCha8Rng| {
        if seen.insert(key_of(&x, &family)) {
            visit(&x, &Classification::member(family, twist));
        }
        let psi = random_twist(field, exponent_bound, param_bound, rng);
        let tx = x.twist(&psi).expect("same field");
        if seen.insert(key_of(&tx, &family)) {
            visit(&tx, &Classification::member(family, psi));
        }
    };

    let grid = char_grid(field, exponent_bound, param_bound);
    let trivial = field.trivial_char();

    // Standard family: any (χ1, χ2), identity and swap targets.
    for p1 in 0..=n {
        let p2 = n - p1;
        let chars1: &[CharFx] = if p1 == 0 {
            std::slice::from_ref(&trivial)
        } else {
            &grid
        };
        let chars2: &[CharFx] = if p2 == 0 {
            std::slice::from_ref(&trivial)
        } else {
            &grid
        };
        for chi1 in chars1 {
            for chi2 in chars2 {
                let c1 = GLChar::new(p1, chi1.clone());
                let c2 = GLChar::new(p2, chi2.clone());
                let id = Quadruple::new(
                    field.clone(),
                    c1.clone(),
                    c2.clone(),
                    c1.clone(),
                    c2.clone(),
                )
                .expect("balanced");
                emit(
                    id,
                    Family::Standard(StandardKind::Identity),
                    trivial.clone(),
                    &mut rng,
                );
                let ks = Quadruple::new(
                    field.clone(),
                    c1.clone(),
                    c2.clone(),
                    c2.clone(),
                    c1.clone(),
                )
                .expect("balanced");
                emit(
                    ks,
                    Family::Standard(StandardKind::KnappStein),
                    trivial.clone(),
                    &mut rng,
                );
            }
        }
    }

    // Rank-one mixed: ([j,k), [0,j); [0,i), [i,k)) with k = n, i ≠ j.
    let k = n as i64;
    for i in 0..k {
        for j in 0..k {
            if i == j {
                continue;
            }
            let x = Quadruple::new(
                field.clone(),
                segment(field, j, k).unwrap(),
                segment(field, 0, j).unwrap(),
                segment(field, 0, i).unwrap(),
                segment(field, i, k).unwrap(),
            )
            .expect("balanced");
            emit(
                x,
                Family::Mixed(MixedKind::Rank1 {
                    i: i as u32,
                    j: j as u32,
                    k: n,
                }),
                trivial.clone(),
                &mut rng,
            );
        }
    }

    // Radon mixed: 0 < i < j < k with k + j − i = n, four arrangements.
    for i in 1..=n as i64 {
        for j in (i + 1)..=n as i64 {
            let k = n as i64 - (j - i);
            if k <= j {
                continue;
            }
            let gamma1 = segment(field, 0, k).unwrap();
            let gamma2 = segment(field, i, j).unwrap();
            let beta1 = segment(field, 0, j).unwrap();
            let beta2 = segment(field, i, k).unwrap();
            let arrangements = [
                (RadonCase::A, [&gamma1, &gamma2, &beta1, &beta2]),
                (RadonCase::B, [&gamma2, &gamma1, &beta1, &beta2]),
                (RadonCase::C, [&beta2, &beta1, &gamma1, &gamma2]),
                (RadonCase::D, [&beta2, &beta1, &gamma2, &gamma1]),
            ];
            for (case, blocks) in arrangements {
                let x = Quadruple::new(
                    field.clone(),
                    blocks[0].clone(),
                    blocks[1].clone(),
                    blocks[2].clone(),
                    blocks[3].clone(),
                )
                .expect("balanced");
                emit(
                    x,
                    Family::Mixed(MixedKind::Radon {
                        case,
                        i: i as u32,
                        j: j as u32,
                        k: k as u32,
                    }),
                    trivial.clone(),
                    &mut rng,
                );
            }
        }
    }

    // Exceptional family: middle Grassmannian, archimedean fields only.
    if n.is_multiple_of(2) && n >= 2 && field.is_archimedean() {
        let half_k = n / 2;
        match field.kind {
            FieldKind::Real => {
                let delta = field.delta().unwrap();
                let sgn = field.sgn().unwrap();
                for i in 1..=param_bound as i64 {
                    let di = field.pow_char(&delta, i);
                    let dis = field.mul_chars(&di, &sgn).unwrap();
                    let x = Quadruple::new(
                        field.clone(),
                        GLChar::trivial(field, half_k),
                        GLChar::new(half_k, dis),
                        GLChar::new(half_k, di.clone()),
                        GLChar::new(half_k, sgn.clone()),
                    )
                    .expect("balanced");
                    emit(
                        x,
                        Family::Exceptional(ExceptionalKind::RealCapelli {
                            k: half_k,
                            i: i as u32,
                        }),
                        trivial.clone(),
                        &mut rng,
                    );
                }
            }
            FieldKind::Complex => {
                let delta = field.delta().unwrap();
                let delta_bar = field.delta_bar().unwrap();
                let pb = param_bound as i64;
                for i in 1..=pb {
                    for j in -pb..=pb {
                        for variant in [ComplexVariant::One, ComplexVariant::Two] {
                            let (a, b) = match variant {
                                ComplexVariant::One => (&delta, &delta_bar),
                                ComplexVariant::Two => (&delta_bar, &delta),
                            };
                            let ai = field.pow_char(a, i);
                            let bj = field.pow_char(b, j);
                            let mid = field.mul_chars(&ai, &bj).unwrap();
                            let x = Quadruple::new(
                                field.clone(),
                                GLChar::trivial(field, half_k),
                                GLChar::new(half_k, mid),
                                GLChar::new(half_k, ai),
                                GLChar::new(half_k, bj),
                            )
                            .expect("balanced");
                            emit(
                                x,
                                Family::Exceptional(ExceptionalKind::ComplexCapelli {
                                    variant,
                                    k: half_k,
                                    i: i as u32,
                                    j,
                                }),
                                trivial.clone(),
                                &mut rng,
                            );
                        }
                    }
                }
            }
            FieldKind::NonArch => unreachable!(),
        }
    }
}

/// Seeded random quadruples for cross-checking: a mix of raw draws, twisted
/// family instances (including imaginary-exponent twists) and perturbed
/// family instances.
pub fn sample_quadruples(
    field: &FieldSpec,
    max_n: u32,
    exponent_bound: Rat,
    param_bound: u32,
    count: usize,
    seed: u64,
    mut visit: impl FnMut(&Quadruple),
) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let tags = tag_grid(field, param_bound);
    let halves = (exponent_bound * Rat::from_integer(2))
        .floor()
        .to_integer()
        .to_i64()
        .unwrap_or(0)
        .max(1);
    let rand_char = |rng: &mut ChaCha8Rng, with_im: bool| CharFx {
        s_re: Rat::new(rng.random_range(-halves..=halves), 2),
        s_im: if with_im && rng.random_bool(0.3) {
            Rat::new(rng.random_range(-2..=2), 2)
        } else {
            Rat::zero()
        },
        tag: tags[rng.random_range(0..tags.len())].clone(),
    };

    let mut family_instances: Vec<Quadruple> = Vec::new();
    for n in 1..=max_n {
        enumerate_family(field, n, Rat::from_integer(1), 2, seed ^ n as u64, |x, _| {
            family_instances.push(x.clone());
        });
    }

    let mut produced = 0usize;
    while produced < count {
        let mode = rng.random_range(0..3u32);
        let x = match mode {
            0 => {
                let n = rng.random_range(1..=max_n);
                let p1 = rng.random_range(0..=n);
                let p3 = rng.random_range(0..=n);
                let mk = |p: u32, rng: &mut ChaCha8Rng, with_im: bool| {
                    GLChar::new(p, rand_char(rng, with_im))
                };
                Quadruple::new(
                    field.clone(),
                    mk(p1, &mut rng, true),
                    mk(n - p1, &mut rng, true),
                    mk(p3, &mut rng, true),
                    mk(n - p3, &mut rng, true),
                )
                .expect("balanced")
            }
            1 => {
                let base = &family_instances[rng.random_range(0..family_instances.len())];
                let psi = rand_char(&mut rng, true);
                base.twist(&psi).expect("same field")
            }
            _ => {
                let base = &family_instances[rng.random_range(0..family_instances.len())];
                let psi = rand_char(&mut rng, false);
                let mut t = base.twist(&psi).expect("same field");
                let slot = rng.random_range(0..4usize);
                if t.c[slot].p > 0 {
                    let bumped = field
                        .mul_chars(&t.c[slot].chi, &field.nu(Rat::new(1, 2)))
                        .unwrap();
                    t.c[slot] = GLChar::new(t.c[slot].p, bumped);
                }
                t
            }
        };
        visit(&x);
        produced += 1;
    }
}
