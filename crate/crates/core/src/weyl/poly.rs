//! Multivariate polynomials over exact rationals, with graded-lexicographic
//! term order. Variables are plain indices; naming is left to the layout
//! that owns them.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use std::collections::BTreeMap;

/// Exponent vector of fixed arity.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Mono(pub Vec<u16>);

impl Mono {
    pub fn zero(nv: usize) -> Mono {
        Mono(vec![0; nv])
    }

    pub fn total_degree(&self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }

    pub fn degree_below(&self, limit: usize) -> u32 {
        self.0[..limit.min(self.0.len())]
            .iter()
            .map(|&e| e as u32)
            .sum()
    }
}

impl Ord for Mono {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Mono {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Polynomial as a term map; zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiPoly {
    pub nv: usize,
    pub terms: BTreeMap<Mono, BigRational>,
}

pub fn brat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

impl MultiPoly {
    pub fn zero(nv: usize) -> MultiPoly {
        MultiPoly {
            nv,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nv: usize, c: BigRational) -> MultiPoly {
        let mut p = MultiPoly::zero(nv);
        if !c.is_zero() {
            p.terms.insert(Mono::zero(nv), c);
        }
        p
    }

    pub fn one(nv: usize) -> MultiPoly {
        MultiPoly::constant(nv, BigRational::one())
    }

    pub fn var(nv: usize, idx: usize) -> MultiPoly {
        assert!(idx < nv);
        let mut m = Mono::zero(nv);
        m.0[idx] = 1;
        let mut p = MultiPoly::zero(nv);
        p.terms.insert(m, BigRational::one());
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, mono: Mono, coeff: BigRational) {
        debug_assert_eq!(mono.0.len(), self.nv);
        if coeff.is_zero() {
            return;
        }
        match self.terms.get_mut(&mono) {
            Some(c) => {
                *c += coeff;
                if c.is_zero() {
                    self.terms.remove(&mono);
                }
            }
            None => {
                self.terms.insert(mono, coeff);
            }
        }
    }

    pub fn add(&self, rhs: &MultiPoly) -> MultiPoly {
        assert_eq!(self.nv, rhs.nv);
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> MultiPoly {
        MultiPoly {
            nv: self.nv,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    pub fn sub(&self, rhs: &MultiPoly) -> MultiPoly {
        self.add(&rhs.neg())
    }

    pub fn scale(&self, c: &BigRational) -> MultiPoly {
        if c.is_zero() {
            return MultiPoly::zero(self.nv);
        }
        MultiPoly {
            nv: self.nv,
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    pub fn mul(&self, rhs: &MultiPoly) -> MultiPoly {
        assert_eq!(self.nv, rhs.nv);
        let mut out = MultiPoly::zero(self.nv);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                let mono = Mono(
                    ma.0.iter()
                        .zip(&mb.0)
                        .map(|(&a, &b)| a.checked_add(b).expect("degree overflow"))
                        .collect(),
                );
                out.add_term(mono, ca * cb);
            }
        }
        out
    }

    pub fn pow(&self, e: u32) -> MultiPoly {
        let mut out = MultiPoly::one(self.nv);
        for _ in 0..e {
            out = out.mul(self);
        }
        out
    }

    /// `∂/∂x_idx`.
    pub fn partial(&self, idx: usize) -> MultiPoly {
        let mut out = MultiPoly::zero(self.nv);
        for (m, c) in &self.terms {
            let e = m.0[idx];
            if e == 0 {
                continue;
            }
            let mut m2 = m.clone();
            m2.0[idx] = e - 1;
            out.add_term(m2, c * BigRational::from_integer(BigInt::from(e)));
        }
        out
    }

    /// Largest total degree over the first `limit` variables.
    pub fn degree_below(&self, limit: usize) -> u32 {
        self.terms
            .keys()
            .map(|m| m.degree_below(limit))
            .max()
            .unwrap_or(0)
    }

    pub fn render(&self, name: &dyn Fn(usize) -> String) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut parts = Vec::new();
        for (m, c) in &self.terms {
            let mut factors = Vec::new();
            if !c.is_one() || m.total_degree() == 0 {
                factors.push(if c.denom().is_one() {
                    format!("{}", c.numer())
                } else {
                    format!("{}/{}", c.numer(), c.denom())
                });
            }
            for (idx, &e) in m.0.iter().enumerate() {
                if e == 1 {
                    factors.push(name(idx));
                } else if e > 1 {
                    factors.push(format!("{}^{}", name(idx), e));
                }
            }
            parts.push(factors.join("*"));
        }
        parts.join(" + ")
    }
}
