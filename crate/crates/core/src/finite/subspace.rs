//! Subspaces of `F_q^n` in reduced row-echelon form, their enumeration in
//! lexicographic RREF order, and the right `GL_n`-action.

use super::{FiniteError, Fq};

/// Dense matrix over `F_q`, row-major.
pub type FqMat = Vec<Vec<u8>>;

/// A `d`-dimensional subspace of `F_q^n`, stored as its unique RREF basis
/// (pivot columns strictly increasing, pivots 1, zeros above and below
/// pivots). The representative is canonical, so derived equality and
/// ordering are subspace equality and the enumeration order.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Subspace {
    pub n: u32,
    pub basis: FqMat,
}

impl Subspace {
    pub fn dim(&self) -> u32 {
        self.basis.len() as u32
    }

    /// Canonicalize arbitrary spanning rows.
    pub fn from_rows(fq: Fq, rows: FqMat, n: u32) -> Subspace {
        let mut m = rows;
        rref_in_place(fq, &mut m);
        m.retain(|row| row.iter().any(|&e| e != 0));
        debug_assert!(m.iter().all(|row| row.len() == n as usize));
        Subspace { n, basis: m }
    }
}

/// In-place reduced row echelon form; returns the pivot columns.
pub(crate) fn rref_in_place(fq: Fq, m: &mut FqMat) -> Vec<usize> {
    let rows = m.len();
    let cols = m.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut r = 0usize;
    for c in 0..cols {
        let Some(pr) = (r..rows).find(|&i| m[i][c] != 0) else {
            continue;
        };
        m.swap(r, pr);
        let inv = fq.inv(m[r][c]);
        for x in m[r].iter_mut() {
            *x = fq.mul(*x, inv);
        }
        for i in 0..rows {
            if i != r && m[i][c] != 0 {
                let factor = m[i][c];
                for cc in 0..cols {
                    let sub = fq.mul(factor, m[r][cc]);
                    m[i][cc] = fq.sub(m[i][cc], sub);
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows {
            break;
        }
    }
    pivots
}

pub(crate) fn mat_rank(fq: Fq, m: &FqMat) -> usize {
    let mut copy = m.clone();
    rref_in_place(fq, &mut copy).len()
}

pub(crate) fn mat_mul(fq: Fq, a: &FqMat, b: &FqMat) -> FqMat {
    let rows = a.len();
    let inner = b.len();
    let cols = b.first().map_or(0, |r| r.len());
    let mut out = vec![vec![0u8; cols]; rows];
    for i in 0..rows {
        for k in 0..inner {
            let aik = a[i][k];
            if aik == 0 {
                continue;
            }
            for j in 0..cols {
                out[i][j] = fq.add(out[i][j], fq.mul(aik, b[k][j]));
            }
        }
    }
    out
}

/// All `d`-subspaces of `F_q^n`, each exactly once, sorted by the row-major
/// entry sequence of their RREF basis.
pub fn enumerate_subspaces(d: u32, n: u32, q: u32) -> Result<Vec<Subspace>, FiniteError> {
    let fq = Fq::new(q)?;
    if d > n {
        return Err(FiniteError::Bounds(format!("d = {d} exceeds n = {n}")));
    }
    let d = d as usize;
    let n = n as usize;
    let mut out = Vec::new();
    // Choose pivot columns, then fill the free entries: in RREF the free
    // entries of row r are the columns right of its pivot that are not
    // themselves pivot columns.
    let mut pivots: Vec<usize> = (0..d).collect();
    loop {
        let mut free_slots = Vec::new();
        for (r, &p) in pivots.iter().enumerate() {
            for c in (p + 1)..n {
                if !pivots.contains(&c) {
                    free_slots.push((r, c));
                }
            }
        }
        let mut assignment = vec![0u8; free_slots.len()];
        loop {
            let mut basis = vec![vec![0u8; n]; d];
            for (r, &p) in pivots.iter().enumerate() {
                basis[r][p] = 1;
            }
            for (slot, &(r, c)) in free_slots.iter().enumerate() {
                basis[r][c] = assignment[slot];
            }
            out.push(Subspace {
                n: n as u32,
                basis,
            });
            // Next assignment in base q.
            let mut carry = true;
            for digit in assignment.iter_mut() {
                if !carry {
                    break;
                }
                *digit += 1;
                if *digit as u32 == fq.q() {
                    *digit = 0;
                } else {
                    carry = false;
                }
            }
            if carry {
                break;
            }
        }
        // Next pivot combination in lexicographic order.
        if d == 0 {
            break;
        }
        let mut i = d;
        loop {
            if i == 0 {
                break;
            }
            i -= 1;
            if pivots[i] < n - (d - i) {
                pivots[i] += 1;
                for k in (i + 1)..d {
                    pivots[k] = pivots[k - 1] + 1;
                }
                break;
            }
            if i == 0 {
                pivots.clear();
                break;
            }
        }
        if pivots.is_empty() {
            break;
        }
    }
    out.sort();
    Ok(out)
}

/// Right action `V ↦ row-space(basis·g)`, re-echelonized.
/// `act(gh, V) = act(h, act(g, V))`.
pub fn act(fq: Fq, g: &FqMat, v: &Subspace) -> Result<Subspace, FiniteError> {
    let n = v.n as usize;
    if g.len() != n || g.iter().any(|row| row.len() != n) {
        return Err(FiniteError::Bounds("matrix size must match n".into()));
    }
    if mat_rank(fq, g) != n {
        return Err(FiniteError::Singular);
    }
    let moved = mat_mul(fq, &v.basis, g);
    let out = Subspace::from_rows(fq, moved, v.n);
    debug_assert_eq!(out.dim(), v.dim());
    Ok(out)
}

/// `dim(A ∩ B) = dim A + dim B − dim(A + B)`.
pub fn intersection_dim(fq: Fq, a: &Subspace, b: &Subspace) -> u32 {
    let mut stacked = a.basis.clone();
    stacked.extend(b.basis.iter().cloned());
    let sum_dim = mat_rank(fq, &stacked) as u32;
    a.dim() + b.dim() - sum_dim
}
