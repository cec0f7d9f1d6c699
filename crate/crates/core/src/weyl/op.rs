//! Differential operators with polynomial coefficients, in normal form:
//! every term is `c(x)·∂^μ` with all derivatives to the right. Equality is
//! normal-form equality; composition is the Weyl-algebra product via the
//! Leibniz rule `∂^μ ∘ c = Σ_{ν ≤ μ} C(μ,ν) (∂^{μ−ν}c) ∂^ν`.
//!
//! The first `nx` variables of the coefficient ring are differentiable (the
//! `∂`-monomials range over them); any trailing variables are formal
//! parameters that derivatives ignore.

use super::poly::{Mono, MultiPoly};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use std::collections::BTreeMap;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyDiffOp {
    pub nx: usize,
    pub nv: usize,
    pub terms: BTreeMap<Mono, MultiPoly>,
}

fn binomial(n: u16, k: u16) -> BigInt {
    let mut out = BigInt::from(1);
    for t in 0..k as u64 {
        out = out * BigInt::from(n as u64 - t) / BigInt::from(t + 1);
    }
    out
}

impl PolyDiffOp {
    pub fn zero(nx: usize, nv: usize) -> Self {
        PolyDiffOp {
            nx,
            nv,
            terms: BTreeMap::new(),
        }
    }

    /// Multiplication operator by a polynomial.
    pub fn from_poly(nx: usize, p: MultiPoly) -> Self {
        let mut op = PolyDiffOp::zero(nx, p.nv);
        op.add_term(Mono::zero(nx), p);
        op
    }

    /// The bare derivative `∂_idx`.
    pub fn d_var(nx: usize, nv: usize, idx: usize) -> Self {
        assert!(idx < nx);
        let mut m = Mono::zero(nx);
        m.0[idx] = 1;
        let mut op = PolyDiffOp::zero(nx, nv);
        op.add_term(m, MultiPoly::one(nv));
        op
    }

    pub fn add_term(&mut self, dmono: Mono, coeff: MultiPoly) {
        debug_assert_eq!(dmono.0.len(), self.nx);
        debug_assert_eq!(coeff.nv, self.nv);
        if coeff.is_zero() {
            return;
        }
        match self.terms.get_mut(&dmono) {
            Some(c) => {
                *c = c.add(&coeff);
                if c.is_zero() {
                    self.terms.remove(&dmono);
                }
            }
            None => {
                self.terms.insert(dmono, coeff);
            }
        }
    }

    pub fn add(&self, rhs: &PolyDiffOp) -> PolyDiffOp {
        assert_eq!((self.nx, self.nv), (rhs.nx, rhs.nv));
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> PolyDiffOp {
        PolyDiffOp {
            nx: self.nx,
            nv: self.nv,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), c.neg()))
                .collect(),
        }
    }

    pub fn sub(&self, rhs: &PolyDiffOp) -> PolyDiffOp {
        self.add(&rhs.neg())
    }

    pub fn scale(&self, c: &BigRational) -> PolyDiffOp {
        if c.is_zero() {
            return PolyDiffOp::zero(self.nx, self.nv);
        }
        PolyDiffOp {
            nx: self.nx,
            nv: self.nv,
            terms: self
                .terms
                .iter()
                .map(|(m, p)| (m.clone(), p.scale(c)))
                .collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn order(&self) -> u32 {
        self.terms.keys().map(Mono::total_degree).max().unwrap_or(0)
    }

    /// Weyl-algebra product `self ∘ rhs`.
    pub fn compose(&self, rhs: &PolyDiffOp) -> PolyDiffOp {
        assert_eq!((self.nx, self.nv), (rhs.nx, rhs.nv));
        let mut out = PolyDiffOp::zero(self.nx, self.nv);
        for (mu1, c1) in &self.terms {
            for (mu2, c2) in &rhs.terms {
                // All ν ≤ μ1 componentwise, odometer style.
                let mut nu = vec![0u16; self.nx];
                loop {
                    // ∂^{μ1−ν}(c2), with the matching multinomial factor.
                    let mut derived = c2.clone();
                    let mut factor = BigInt::from(1);
                    for t in 0..self.nx {
                        factor *= binomial(mu1.0[t], nu[t]);
                        for _ in 0..(mu1.0[t] - nu[t]) {
                            derived = derived.partial(t);
                            if derived.is_zero() {
                                break;
                            }
                        }
                        if derived.is_zero() {
                            break;
                        }
                    }
                    if !derived.is_zero() {
                        let coeff = c1
                            .mul(&derived)
                            .scale(&BigRational::from_integer(factor));
                        let dmono = Mono(
                            nu.iter()
                                .zip(&mu2.0)
                                .map(|(&a, &b)| a.checked_add(b).expect("order overflow"))
                                .collect(),
                        );
                        out.add_term(dmono, coeff);
                    }
                    // Advance ν.
                    let mut t = 0usize;
                    loop {
                        if t == self.nx {
                            break;
                        }
                        if nu[t] < mu1.0[t] {
                            nu[t] += 1;
                            break;
                        }
                        nu[t] = 0;
                        t += 1;
                    }
                    if t == self.nx {
                        break;
                    }
                }
            }
        }
        out
    }

    pub fn commutator(&self, rhs: &PolyDiffOp) -> PolyDiffOp {
        self.compose(rhs).sub(&rhs.compose(self))
    }

    pub fn render(
        &self,
        var_name: &dyn Fn(usize) -> String,
        d_name: &dyn Fn(usize) -> String,
    ) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut parts = Vec::new();
        for (m, c) in &self.terms {
            let coeff = c.render(var_name);
            let coeff = if c.terms.len() > 1 {
                format!("({coeff})")
            } else {
                coeff
            };
            let mut factors = vec![coeff];
            for (idx, &e) in m.0.iter().enumerate() {
                if e == 1 {
                    factors.push(d_name(idx));
                } else if e > 1 {
                    factors.push(format!("{}^{}", d_name(idx), e));
                }
            }
            parts.push(factors.join("*"));
        }
        parts.join(" + ")
    }
}

/// Permutations of `0..k` with signs, in a deterministic order.
pub(crate) fn signed_permutations(k: usize) -> Vec<(Vec<usize>, i64)> {
    fn go(prefix: &mut Vec<usize>, used: &mut Vec<bool>, sign: i64, out: &mut Vec<(Vec<usize>, i64)>) {
        let k = used.len();
        if prefix.len() == k {
            out.push((prefix.clone(), sign));
            return;
        }
        for next in 0..k {
            if used[next] {
                continue;
            }
            // Count inversions added by appending `next`.
            let inversions = prefix.iter().filter(|&&p| p > next).count();
            let s = if inversions % 2 == 0 { sign } else { -sign };
            used[next] = true;
            prefix.push(next);
            go(prefix, used, s, out);
            prefix.pop();
            used[next] = false;
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut vec![false; k], 1, &mut out);
    out
}

/// `det(∂)^i` over the `k×k` block of derivative symbols selected by
/// `var_index(a, b)`: expanded in commuting symbols, then read back as a
/// constant-coefficient operator of order `k·i` in normal form.
pub fn det_partial_power(
    nx: usize,
    nv: usize,
    k: usize,
    var_index: &dyn Fn(usize, usize) -> usize,
    i: u32,
) -> PolyDiffOp {
    assert!(k >= 1 && i >= 1);
    let mut det = MultiPoly::zero(nx);
    for (perm, sign) in signed_permutations(k) {
        let mut term = MultiPoly::constant(nx, BigRational::from_integer(BigInt::from(sign)));
        for (a, &b) in perm.iter().enumerate() {
            term = term.mul(&MultiPoly::var(nx, var_index(a, b)));
        }
        det = det.add(&term);
    }
    let powered = det.pow(i);
    let mut op = PolyDiffOp::zero(nx, nv);
    for (mono, coeff) in powered.terms {
        op.add_term(mono, MultiPoly::constant(nv, coeff));
    }
    op
}
