//! Arithmetic in `F_q` for prime `q` (residues) and `q = 4` (2-bit
//! polynomials modulo `x² + x + 1`).

use super::FiniteError;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Kind {
    Prime,
    F4,
}

/// A supported finite field. Elements are `u8` values in `0..q`; for `q = 4`
/// the encoding is the coefficient bits of `c1·x + c0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Fq {
    q: u32,
    kind: Kind,
}

fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u32;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl Fq {
    pub fn new(q: u32) -> Result<Fq, FiniteError> {
        if q == 4 {
            Ok(Fq { q, kind: Kind::F4 })
        } else if is_prime(q) {
            Ok(Fq {
                q,
                kind: Kind::Prime,
            })
        } else {
            Err(FiniteError::UnsupportedQ(q))
        }
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn elements(&self) -> impl Iterator<Item = u8> {
        0..self.q as u8
    }

    pub fn add(&self, a: u8, b: u8) -> u8 {
        match self.kind {
            Kind::Prime => ((a as u32 + b as u32) % self.q) as u8,
            Kind::F4 => a ^ b,
        }
    }

    pub fn neg(&self, a: u8) -> u8 {
        match self.kind {
            Kind::Prime => ((self.q - a as u32) % self.q) as u8,
            Kind::F4 => a,
        }
    }

    pub fn sub(&self, a: u8, b: u8) -> u8 {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: u8, b: u8) -> u8 {
        match self.kind {
            Kind::Prime => ((a as u32 * b as u32) % self.q) as u8,
            Kind::F4 => {
                // (a1·x + a0)(b1·x + b0) with x² = x + 1.
                let (a1, a0) = (a >> 1, a & 1);
                let (b1, b0) = (b >> 1, b & 1);
                let c2 = a1 & b1;
                let c1 = (a1 & b0) ^ (a0 & b1) ^ c2;
                let c0 = (a0 & b0) ^ c2;
                (c1 << 1) | c0
            }
        }
    }

    pub fn inv(&self, a: u8) -> u8 {
        assert!(a != 0, "zero has no inverse");
        // q is tiny; scan.
        for b in 1..self.q as u8 {
            if self.mul(a, b) == 1 {
                return b;
            }
        }
        unreachable!("every nonzero element of a field is invertible")
    }

    /// A fixed generator of the multiplicative group.
    pub fn generator(&self) -> u8 {
        if self.q == 2 {
            return 1;
        }
        'cand: for g in 2..self.q as u8 {
            let mut pow = g;
            let mut order = 1u32;
            while pow != 1 {
                pow = self.mul(pow, g);
                order += 1;
                if order > self.q {
                    continue 'cand;
                }
            }
            if order == self.q - 1 {
                return g;
            }
        }
        unreachable!("the multiplicative group of a finite field is cyclic")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check_field_axioms(fq: Fq) {
        let els: Vec<u8> = fq.elements().collect();
        for &a in &els {
            assert_eq!(fq.add(a, 0), a);
            assert_eq!(fq.mul(a, 1), a);
            assert_eq!(fq.add(a, fq.neg(a)), 0);
            if a != 0 {
                assert_eq!(fq.mul(a, fq.inv(a)), 1);
            }
            for &b in &els {
                assert_eq!(fq.add(a, b), fq.add(b, a));
                assert_eq!(fq.mul(a, b), fq.mul(b, a));
                for &c in &els {
                    assert_eq!(fq.add(fq.add(a, b), c), fq.add(a, fq.add(b, c)));
                    assert_eq!(fq.mul(fq.mul(a, b), c), fq.mul(a, fq.mul(b, c)));
                    assert_eq!(
                        fq.mul(a, fq.add(b, c)),
                        fq.add(fq.mul(a, b), fq.mul(a, c))
                    );
                }
            }
        }
    }

    #[test]
    fn field_axioms_exhaustive() {
        for q in [2, 3, 4, 5] {
            check_field_axioms(Fq::new(q).unwrap());
        }
    }

    #[test]
    fn unsupported_q_rejected() {
        assert_eq!(Fq::new(6), Err(FiniteError::UnsupportedQ(6)));
        assert_eq!(Fq::new(1), Err(FiniteError::UnsupportedQ(1)));
        assert!(Fq::new(7).is_ok());
    }

    #[test]
    fn generators_have_full_order() {
        for q in [2u32, 3, 4, 5, 7] {
            let fq = Fq::new(q).unwrap();
            let g = fq.generator();
            let mut seen = std::collections::HashSet::new();
            let mut pow = 1u8;
            for _ in 0..q - 1 {
                pow = fq.mul(pow, g);
                seen.insert(pow);
            }
            assert_eq!(seen.len() as u32, q - 1);
        }
    }

    #[test]
    fn f4_multiplication_table() {
        let f4 = Fq::new(4).unwrap();
        // x·x = x+1, x·(x+1) = 1, (x+1)·(x+1) = x.
        assert_eq!(f4.mul(2, 2), 3);
        assert_eq!(f4.mul(2, 3), 1);
        assert_eq!(f4.mul(3, 3), 2);
    }
}
