//! Big-cell realization of the degenerate principal series of `GL_{2k}`.
//!
//! Sections restricted to the open cell are functions of a `k×k` matrix `x`,
//! and a basis element `X` of `gl_{2k}` (blocks `X11, X12, X21, X22`) acts
//! by the first-order operator
//!
//! ```text
//! dπ(X) = Σ_{ab} V(X)_{ab}(x)·∂_{ab} + m(X)(x)
//! V(X)  = X21 + x·X11 − X22·x − x·X12·x            (matrix Riccati field)
//! m(X)  = (s1 + k/2)·(tr X − τ) + (s2 − k/2)·τ,    τ = tr(x·X12 + X22)
//! ```
//!
//! where `(s1, s2)` are the `ν`-exponents of the two inducing characters;
//! the `±k/2` is the half-density shift. The cocycle comes from the
//! factorization of `n̄(x)·g` through the cell coordinate
//! `x̃ = (xB + D)^{-1}(xA + C)`, and the sign conventions are pinned by the
//! bracket identity `dπ([X,Y]) = [dπ(X), dπ(Y)]`, checked symbolically in
//! `(s1, s2)`.
//!
//! Over `ℂ` the real Lie algebra acts through two independent copies, a
//! holomorphic one in the `x` variables and an antiholomorphic one in the
//! `x̄` variables, each with its own exponent pair.

use super::op::PolyDiffOp;
use super::poly::MultiPoly;
use crate::chars::Rat;
use num_bigint::BigInt;
use num_rational::BigRational;

/// Variable layout for one cell model: `k²` matrix entries (twice that over
/// `ℂ`), optionally followed by formal parameter slots `s1, s2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CellLayout {
    pub k: usize,
    pub complex: bool,
    pub params: usize,
}

impl CellLayout {
    pub fn real(k: usize) -> CellLayout {
        CellLayout {
            k,
            complex: false,
            params: 0,
        }
    }

    pub fn real_symbolic(k: usize) -> CellLayout {
        CellLayout {
            k,
            complex: false,
            params: 2,
        }
    }

    pub fn complex(k: usize) -> CellLayout {
        CellLayout {
            k,
            complex: true,
            params: 0,
        }
    }

    pub fn nx(&self) -> usize {
        self.k * self.k * if self.complex { 2 } else { 1 }
    }

    pub fn nv(&self) -> usize {
        self.nx() + self.params
    }

    /// Index of `x_{ab}` (or `x̄_{ab}` when `bar`), 0-based `a, b < k`.
    pub fn x_index(&self, bar: bool, a: usize, b: usize) -> usize {
        debug_assert!(a < self.k && b < self.k);
        debug_assert!(!bar || self.complex);
        let offset = if bar { self.k * self.k } else { 0 };
        offset + a * self.k + b
    }

    pub fn param_index(&self, slot: usize) -> usize {
        debug_assert!(slot < self.params);
        self.nx() + slot
    }

    pub fn var_name(&self, idx: usize) -> String {
        let kk = self.k * self.k;
        if idx < kk {
            format!("x({},{})", idx / self.k + 1, idx % self.k + 1)
        } else if self.complex && idx < 2 * kk {
            let r = idx - kk;
            format!("xb({},{})", r / self.k + 1, r % self.k + 1)
        } else {
            format!("s{}", idx - self.nx() + 1)
        }
    }

    pub fn d_name(&self, idx: usize) -> String {
        let kk = self.k * self.k;
        if idx < kk {
            format!("d({},{})", idx / self.k + 1, idx % self.k + 1)
        } else {
            let r = idx - kk;
            format!("db({},{})", r / self.k + 1, r % self.k + 1)
        }
    }

    pub fn render_op(&self, op: &PolyDiffOp) -> String {
        op.render(&|i| self.var_name(i), &|i| self.d_name(i))
    }
}

/// Name of the elementary matrix `E_{u+1,v+1}` of `gl_{2k}`.
pub fn basis_name(u: usize, v: usize) -> String {
    format!("E{}{}", u + 1, v + 1)
}

fn rat_to_big(r: Rat) -> BigRational {
    BigRational::new(BigInt::from(*r.numer()), BigInt::from(*r.denom()))
}

/// The action of `E_{uv} ∈ gl_{2k}` on one copy of the cell (`bar` selects
/// the antiholomorphic copy), with exponents given as polynomials so the
/// same code serves numeric and symbolic use.
pub fn cell_action_block(
    layout: &CellLayout,
    bar: bool,
    s1: &MultiPoly,
    s2: &MultiPoly,
    u: usize,
    v: usize,
) -> PolyDiffOp {
    let k = layout.k;
    let nx = layout.nx();
    let nv = layout.nv();
    assert!(u < 2 * k && v < 2 * k);
    let x = |a: usize, b: usize| MultiPoly::var(nv, layout.x_index(bar, a, b));
    let half_k = MultiPoly::constant(nv, BigRational::new(BigInt::from(k as i64), BigInt::from(2)));
    let mut op = PolyDiffOp::zero(nx, nv);
    let mut field = vec![vec![MultiPoly::zero(nv); k]; k];
    let mut tau = MultiPoly::zero(nv);
    let mut tr_x = MultiPoly::zero(nv);
    if u < k && v < k {
        // X11 = E_{uv}: V += x·E_{uv}.
        for c in 0..k {
            field[c][v] = field[c][v].add(&x(c, u));
        }
        if u == v {
            tr_x = MultiPoly::one(nv);
        }
    } else if u < k {
        // X12 = E_{ab} with (a, b) = (u, v−k): V −= x·E_{ab}·x, τ = x_{ba}.
        let (a, b) = (u, v - k);
        for c in 0..k {
            for d in 0..k {
                field[c][d] = field[c][d].sub(&x(c, a).mul(&x(b, d)));
            }
        }
        tau = x(b, a);
    } else if v < k {
        // X21 = E_{ab} with (a, b) = (u−k, v): V += E_{ab}.
        let (a, b) = (u - k, v);
        field[a][b] = field[a][b].add(&MultiPoly::one(nv));
    } else {
        // X22 = E_{ab} with (a, b) = (u−k, v−k): V −= E_{ab}·x, τ = δ_{ab}.
        let (a, b) = (u - k, v - k);
        for d in 0..k {
            field[a][d] = field[a][d].sub(&x(b, d));
        }
        if a == b {
            tau = MultiPoly::one(nv);
            tr_x = MultiPoly::one(nv);
        }
    }
    for (a, row) in field.iter().enumerate() {
        for (b, coeff) in row.iter().enumerate() {
            if !coeff.is_zero() {
                let mut mono = super::poly::Mono::zero(nx);
                mono.0[layout.x_index(bar, a, b)] = 1;
                op.add_term(mono, coeff.clone());
            }
        }
    }
    let multiplier = s1
        .add(&half_k)
        .mul(&tr_x.sub(&tau))
        .add(&s2.sub(&half_k).mul(&tau));
    op.add_term(super::poly::Mono::zero(nx), multiplier);
    op
}

/// The full cell action: one operator per basis element of `gl_{2k}`,
/// indexed by `u·2k + v`.
#[derive(Debug, Clone)]
pub struct CellAction {
    pub layout: CellLayout,
    pub ops: Vec<PolyDiffOp>,
}

impl CellAction {
    pub fn op(&self, u: usize, v: usize) -> &PolyDiffOp {
        &self.ops[u * 2 * self.layout.k + v]
    }
}

/// Real model with numeric exponents.
pub fn build_cell_action(k: usize, s1: Rat, s2: Rat) -> CellAction {
    let layout = CellLayout::real(k);
    let nv = layout.nv();
    let s1 = MultiPoly::constant(nv, rat_to_big(s1));
    let s2 = MultiPoly::constant(nv, rat_to_big(s2));
    let ops = all_ops(&layout, |u, v| cell_action_block(&layout, false, &s1, &s2, u, v));
    CellAction { layout, ops }
}

/// Real model with `s1, s2` as formal parameters.
pub fn build_cell_action_symbolic(k: usize) -> CellAction {
    let layout = CellLayout::real_symbolic(k);
    let nv = layout.nv();
    let s1 = MultiPoly::var(nv, layout.param_index(0));
    let s2 = MultiPoly::var(nv, layout.param_index(1));
    let ops = all_ops(&layout, |u, v| cell_action_block(&layout, false, &s1, &s2, u, v));
    CellAction { layout, ops }
}

/// Complex model: holomorphic and antiholomorphic copies with separate
/// exponent pairs.
pub fn build_cell_action_complex(k: usize, hol: (Rat, Rat), anti: (Rat, Rat)) -> CellAction {
    let layout = CellLayout::complex(k);
    let nv = layout.nv();
    let h1 = MultiPoly::constant(nv, rat_to_big(hol.0));
    let h2 = MultiPoly::constant(nv, rat_to_big(hol.1));
    let a1 = MultiPoly::constant(nv, rat_to_big(anti.0));
    let a2 = MultiPoly::constant(nv, rat_to_big(anti.1));
    let ops = all_ops(&layout, |u, v| {
        cell_action_block(&layout, false, &h1, &h2, u, v)
            .add(&cell_action_block(&layout, true, &a1, &a2, u, v))
    });
    CellAction { layout, ops }
}

fn all_ops(layout: &CellLayout, f: impl Fn(usize, usize) -> PolyDiffOp) -> Vec<PolyDiffOp> {
    let two_k = 2 * layout.k;
    let mut ops = Vec::with_capacity(two_k * two_k);
    for u in 0..two_k {
        for v in 0..two_k {
            ops.push(f(u, v));
        }
    }
    ops
}

/// `dπ([E_uv, E_wz]) = [dπ(E_uv), dπ(E_wz)]` for every basis pair. This is
/// the arbiter of every sign convention in the realization; it must pass
/// before any intertwining check means anything.
pub fn check_bracket_fidelity(action: &CellAction) -> bool {
    let two_k = 2 * action.layout.k;
    for u in 0..two_k {
        for v in 0..two_k {
            for w in 0..two_k {
                for z in 0..two_k {
                    let mut want = PolyDiffOp::zero(action.layout.nx(), action.layout.nv());
                    // [E_uv, E_wz] = δ_{vw}·E_uz − δ_{zu}·E_wv.
                    if v == w {
                        want = want.add(action.op(u, z));
                    }
                    if z == u {
                        want = want.sub(action.op(w, v));
                    }
                    let got = action.op(u, v).commutator(action.op(w, z));
                    if got != want {
                        return false;
                    }
                }
            }
        }
    }
    true
}
