//! Exact integer matrices over the Grassmannian index sets: Radon and
//! intersection-dimension incidence kernels, equivariance checking over a
//! generator set, composition chains, and fraction-free rank.

use super::subspace::{act, enumerate_subspaces, intersection_dim, FqMat, Subspace};
use super::{FiniteError, Fq};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Dense matrix with exact integer entries.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExactMatrix {
    pub rows: usize,
    pub cols: usize,
    entries: Vec<BigInt>,
}

impl ExactMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        ExactMatrix {
            rows,
            cols,
            entries: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> i64) -> Self {
        let mut m = ExactMatrix::zeros(rows, cols);
        for r in 0..rows {
            for c in 0..cols {
                m.entries[r * cols + c] = BigInt::from(f(r, c));
            }
        }
        m
    }

    pub fn get(&self, r: usize, c: usize) -> &BigInt {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: BigInt) {
        self.entries[r * self.cols + c] = v;
    }

    pub fn transpose(&self) -> ExactMatrix {
        let mut t = ExactMatrix::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.entries[c * self.rows + r] = self.entries[r * self.cols + c].clone();
            }
        }
        t
    }

    pub fn mul(&self, rhs: &ExactMatrix) -> Result<ExactMatrix, FiniteError> {
        if self.cols != rhs.rows {
            return Err(FiniteError::ShapeMismatch(
                self.rows, self.cols, rhs.rows, rhs.cols,
            ));
        }
        let mut out = ExactMatrix::zeros(self.rows, rhs.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..rhs.cols {
                    let add = a * rhs.get(k, c);
                    out.entries[r * rhs.cols + c] += add;
                }
            }
        }
        Ok(out)
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }

    pub fn row_sums(&self) -> Vec<BigInt> {
        (0..self.rows)
            .map(|r| self.entries[r * self.cols..(r + 1) * self.cols].iter().sum())
            .collect()
    }

    /// Image of the all-ones vector.
    pub fn apply_to_ones(&self) -> Vec<BigInt> {
        self.row_sums()
    }
}

/// `[n choose d]_q`: the number of `d`-subspaces of `F_q^n`.
pub fn gaussian_binomial(n: u32, d: u32, q: u32) -> u128 {
    if d > n {
        return 0;
    }
    let q = q as u128;
    let mut num = 1u128;
    let mut den = 1u128;
    for l in 0..d {
        num *= q.pow(n - l) - 1;
        den *= q.pow(d - l) - 1;
    }
    assert!(num.is_multiple_of(den), "Gaussian binomial is an integer");
    num / den
}

/// Rank over the rationals by fraction-free (Bareiss) elimination.
pub fn rank_exact(m: &ExactMatrix) -> usize {
    let mut a: Vec<Vec<BigInt>> = (0..m.rows)
        .map(|r| (0..m.cols).map(|c| m.get(r, c).clone()).collect())
        .collect();
    let rows = m.rows;
    let cols = m.cols;
    let mut prev = BigInt::one();
    let mut rank = 0usize;
    let mut row = 0usize;
    for col in 0..cols {
        let Some(pivot_row) = (row..rows).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        a.swap(row, pivot_row);
        for r in (row + 1)..rows {
            for c in (col + 1)..cols {
                let val = &a[row][col] * &a[r][c] - &a[r][col] * &a[row][c];
                let (q, rem) = val.div_rem(&prev);
                debug_assert!(rem.is_zero(), "Bareiss division is exact");
                a[r][c] = q;
            }
            a[r][col] = BigInt::zero();
        }
        prev = a[row][col].clone();
        rank += 1;
        row += 1;
        if row == rows {
            break;
        }
    }
    rank
}

/// Containment kernel: entry `(V_b, V_a)` is 1 iff `V_a ⊆ V_b`, with both
/// Grassmannians in enumeration order. Every row sums to `[b choose a]_q`.
pub fn radon_matrix(a: u32, b: u32, n: u32, q: u32) -> Result<ExactMatrix, FiniteError> {
    if a >= b || b > n {
        return Err(FiniteError::Bounds(format!(
            "radon kernel needs 0 <= a < b <= n, got a={a}, b={b}, n={n}"
        )));
    }
    let fq = Fq::new(q)?;
    let big = enumerate_subspaces(b, n, q)?;
    let small = enumerate_subspaces(a, n, q)?;
    let mut m = ExactMatrix::zeros(big.len(), small.len());
    for (r, vb) in big.iter().enumerate() {
        for (c, va) in small.iter().enumerate() {
            if intersection_dim(fq, va, vb) == a {
                m.set(r, c, BigInt::one());
            }
        }
    }
    Ok(m)
}

/// Intersection-dimension kernel: entry `(V_b, V_a)` is 1 iff
/// `dim(V_a ∩ V_b) = r`.
pub fn incidence_matrix(a: u32, b: u32, n: u32, q: u32, r: u32) -> Result<ExactMatrix, FiniteError> {
    if a > n || b > n || r > a.min(b) {
        return Err(FiniteError::Bounds(format!(
            "incidence kernel needs a,b <= n and r <= min(a,b), got a={a}, b={b}, n={n}, r={r}"
        )));
    }
    let fq = Fq::new(q)?;
    let big = enumerate_subspaces(b, n, q)?;
    let small = enumerate_subspaces(a, n, q)?;
    let mut m = ExactMatrix::zeros(big.len(), small.len());
    for (row, vb) in big.iter().enumerate() {
        for (col, va) in small.iter().enumerate() {
            if intersection_dim(fq, va, vb) == r {
                m.set(row, col, BigInt::one());
            }
        }
    }
    Ok(m)
}

/// Generator set for `GL_n(F_q)`: every unit transvection `I + E_{uv}`
/// (`u ≠ v`) plus `diag(α, 1, …, 1)` for a fixed multiplicative generator
/// `α`. Powers of the unit transvections yield all transvections, so this
/// set generates `SL_n`, and the diagonal matrix extends it to `GL_n`.
pub fn generators(n: u32, q: u32) -> Result<Vec<FqMat>, FiniteError> {
    let fq = Fq::new(q)?;
    let n = n as usize;
    let mut gens = Vec::new();
    for u in 0..n {
        for v in 0..n {
            if u == v {
                continue;
            }
            let mut m: FqMat = (0..n)
                .map(|r| (0..n).map(|c| u8::from(r == c)).collect())
                .collect();
            m[u][v] = 1;
            gens.push(m);
        }
    }
    let mut d: FqMat = (0..n)
        .map(|r| (0..n).map(|c| u8::from(r == c)).collect())
        .collect();
    d[0][0] = fq.generator();
    gens.push(d);
    Ok(gens)
}

/// Names aligned with [`generators`], for reporting.
pub fn generator_names(n: u32) -> Vec<String> {
    let n = n as usize;
    let mut names = Vec::new();
    for u in 0..n {
        for v in 0..n {
            if u != v {
                names.push(format!("transvection({},{})", u + 1, v + 1));
            }
        }
    }
    names.push("diag(alpha,1,...)".to_string());
    names
}

/// Does `T`, indexed by `(Gr(b), Gr(a))`, satisfy `P_b(g)·T = T·P_a(g)` for
/// every generator `g`? Permutation matrices never need materializing: with
/// `π_g(V) = act(g, V)` the identity is equivalent to
/// `T[U][W] = T[π_g(U)][π_g(W)]` for all `U`, `W`.
pub fn check_equivariance(
    t: &ExactMatrix,
    a: u32,
    b: u32,
    n: u32,
    q: u32,
) -> Result<bool, FiniteError> {
    let fq = Fq::new(q)?;
    let big = enumerate_subspaces(b, n, q)?;
    let small = enumerate_subspaces(a, n, q)?;
    if t.rows != big.len() || t.cols != small.len() {
        return Err(FiniteError::Bounds(format!(
            "matrix is {}x{} but Gr({b}) x Gr({a}) needs {}x{}",
            t.rows,
            t.cols,
            big.len(),
            small.len()
        )));
    }
    let index_of = |list: &[Subspace], s: &Subspace| -> usize {
        list.binary_search(s).expect("action preserves the Grassmannian")
    };
    for g in generators(n, q)? {
        let perm_big: Vec<usize> = big
            .iter()
            .map(|v| index_of(&big, &act(fq, &g, v).expect("generators are invertible")))
            .collect();
        let perm_small: Vec<usize> = small
            .iter()
            .map(|v| index_of(&small, &act(fq, &g, v).expect("generators are invertible")))
            .collect();
        for (u, &pu) in perm_big.iter().enumerate() {
            for (w, &pw) in perm_small.iter().enumerate() {
                if t.get(u, w) != t.get(pu, pw) {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// Multiply the chain left to right and test whether the product is nonzero
/// on the constant function (the all-ones vector).
pub fn compose_and_test_nonzero(
    chain: &[ExactMatrix],
) -> Result<(ExactMatrix, bool), FiniteError> {
    let Some(first) = chain.first() else {
        return Err(FiniteError::Bounds("empty chain".into()));
    };
    let mut product = first.clone();
    for next in &chain[1..] {
        product = product.mul(next)?;
    }
    let nonzero = product.apply_to_ones().iter().any(|v| !v.is_zero());
    Ok((product, nonzero))
}

/// Deterministic text form: `rows cols` on the first line, then row-major
/// entries, space-separated, one row per line.
pub fn render_matrix(m: &ExactMatrix) -> String {
    let mut out = format!("{} {}\n", m.rows, m.cols);
    for r in 0..m.rows {
        let row: Vec<String> = (0..m.cols).map(|c| m.get(r, c).to_string()).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}

pub fn parse_matrix(text: &str) -> Result<ExactMatrix, FiniteError> {
    let mut nums = text.split_whitespace();
    let bad = |m: &str| FiniteError::BadFormat(m.to_string());
    let rows: usize = nums
        .next()
        .ok_or_else(|| bad("missing row count"))?
        .parse()
        .map_err(|_| bad("bad row count"))?;
    let cols: usize = nums
        .next()
        .ok_or_else(|| bad("missing column count"))?
        .parse()
        .map_err(|_| bad("bad column count"))?;
    let mut m = ExactMatrix::zeros(rows, cols);
    for r in 0..rows {
        for c in 0..cols {
            let v: BigInt = nums
                .next()
                .ok_or_else(|| bad("truncated entries"))?
                .parse()
                .map_err(|_| bad("bad entry"))?;
            m.set(r, c, v);
        }
    }
    if nums.next().is_some() {
        return Err(bad("trailing entries"));
    }
    Ok(m)
}

/// Entrywise scalar test used by the composition-factorization check:
/// returns the constant `λ` with `lhs = λ·rhs`, if one exists.
pub fn scalar_multiple_of(lhs: &ExactMatrix, rhs: &ExactMatrix) -> Option<BigInt> {
    if lhs.rows != rhs.rows || lhs.cols != rhs.cols {
        return None;
    }
    let mut lambda: Option<BigInt> = None;
    for r in 0..lhs.rows {
        for c in 0..lhs.cols {
            let (l, v) = (lhs.get(r, c), rhs.get(r, c));
            if v.is_zero() {
                if !l.is_zero() {
                    return None;
                }
                continue;
            }
            let (q, rem) = l.div_rem(v);
            if !rem.is_zero() {
                return None;
            }
            match &lambda {
                None => lambda = Some(q),
                Some(prev) if *prev != q => return None,
                _ => {}
            }
        }
    }
    lambda.or_else(|| lhs.is_zero().then(BigInt::zero))
}

impl ExactMatrix {
    /// All-ones matrix.
    pub fn ones(rows: usize, cols: usize) -> Self {
        ExactMatrix::from_fn(rows, cols, |_, _| 1)
    }

    pub fn abs_max(&self) -> BigInt {
        self.entries
            .iter()
            .map(|e| e.abs())
            .max()
            .unwrap_or_else(BigInt::zero)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::Rng;
    use rand_chacha::rand_core::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn gaussian_binomials() {
        assert_eq!(gaussian_binomial(3, 1, 2), 7);
        assert_eq!(gaussian_binomial(4, 2, 3), 130);
        assert_eq!(gaussian_binomial(2, 1, 2), 3);
        assert_eq!(gaussian_binomial(5, 0, 7), 1);
        assert_eq!(gaussian_binomial(2, 3, 2), 0);
    }

    #[test]
    fn fano_radon_matrix() {
        let m = radon_matrix(1, 2, 3, 2).unwrap();
        assert_eq!((m.rows, m.cols), (7, 7));
        for s in m.row_sums() {
            assert_eq!(s, BigInt::from(3));
        }
        assert_eq!(rank_exact(&m), 7);
        assert_eq!(rank_exact(&m.transpose()), 7);
    }

    #[test]
    fn radon_from_zero_is_all_ones_column() {
        let m = radon_matrix(0, 2, 3, 2).unwrap();
        assert_eq!((m.rows, m.cols), (7, 1));
        assert!(m.row_sums().iter().all(|s| *s == BigInt::one()));
        assert_eq!(radon_matrix(2, 1, 3, 2).unwrap_err(),
            FiniteError::Bounds("radon kernel needs 0 <= a < b <= n, got a=2, b=1, n=3".into()));
        // Composing through Gr(0) factors through constants: the rank-one
        // all-ones operator.
        let into = radon_matrix(0, 2, 3, 2).unwrap();
        let from = radon_matrix(0, 1, 3, 2).unwrap().transpose();
        let j = into.mul(&from).unwrap();
        assert_eq!(j, ExactMatrix::ones(7, 7));
        assert_eq!(rank_exact(&j), 1);
    }

    #[test]
    fn incidence_matrices() {
        // Distinct lines in F_2^2 intersect trivially.
        let m = incidence_matrix(1, 1, 2, 2, 0).unwrap();
        assert_eq!((m.rows, m.cols), (3, 3));
        for r in 0..3 {
            for c in 0..3 {
                let want = i64::from(r != c);
                assert_eq!(m.get(r, c), &BigInt::from(want));
            }
        }
        // Full intersection with a <= b is containment.
        let inc = incidence_matrix(1, 2, 3, 2, 1).unwrap();
        let rad = radon_matrix(1, 2, 3, 2).unwrap();
        assert_eq!(inc, rad);
        // Row sums are constant (orbit sizes).
        let m = incidence_matrix(1, 1, 3, 2, 0).unwrap();
        let sums = m.row_sums();
        assert!(sums.iter().all(|s| *s == sums[0]));
    }

    #[test]
    fn equivariance_of_the_named_kernels() {
        let rad = radon_matrix(1, 2, 3, 2).unwrap();
        assert!(check_equivariance(&rad, 1, 2, 3, 2).unwrap());
        let inc = incidence_matrix(1, 1, 3, 2, 0).unwrap();
        assert!(check_equivariance(&inc, 1, 1, 3, 2).unwrap());
    }

    #[test]
    fn random_matrix_is_not_equivariant() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let m = ExactMatrix::from_fn(7, 7, |_, _| rng.random_range(0..=1));
        assert!(!check_equivariance(&m, 1, 2, 3, 2).unwrap());
    }

    #[test]
    fn equivariance_shape_check() {
        let m = ExactMatrix::zeros(3, 3);
        assert!(matches!(
            check_equivariance(&m, 1, 2, 3, 2),
            Err(FiniteError::Bounds(_))
        ));
    }

    #[test]
    fn composed_radon_chain_on_constants() {
        let rad = radon_matrix(1, 2, 3, 2).unwrap();
        let chain = [rad.clone(), rad.transpose()];
        let (product, nonzero) = compose_and_test_nonzero(&chain).unwrap();
        assert!(nonzero);
        // Each line holds 3 points and each point lies on 3 lines.
        for v in product.apply_to_ones() {
            assert_eq!(v, BigInt::from(9));
        }

        let j = ExactMatrix::ones(4, 4);
        let (_, nz) = compose_and_test_nonzero(std::slice::from_ref(&j)).unwrap();
        assert!(nz);

        let z = ExactMatrix::zeros(4, 4);
        let (_, nz) = compose_and_test_nonzero(&[j.clone(), z]).unwrap();
        assert!(!nz);

        let bad = compose_and_test_nonzero(&[j, ExactMatrix::zeros(3, 3)]);
        assert!(matches!(bad, Err(FiniteError::ShapeMismatch(4, 4, 3, 3))));
    }

    #[test]
    fn rank_basics() {
        assert_eq!(rank_exact(&ExactMatrix::ones(7, 7)), 1);
        assert_eq!(rank_exact(&ExactMatrix::zeros(5, 3)), 0);
        let m = ExactMatrix::from_fn(3, 3, |r, c| if r == c { 2 } else { 0 });
        assert_eq!(rank_exact(&m), 3);
    }

    #[test]
    fn radon_composition_is_scalar_multiple_of_direct() {
        // radon(b,c)·radon(a,b) counts intermediate subspaces, so it is a
        // constant multiple of radon(a,c); the constant is computed by the
        // run itself and checked for constancy across entries.
        for (a, b, c, n, q) in [(0u32, 1u32, 2u32, 3u32, 2u32), (1, 2, 3, 4, 2)] {
            let outer = radon_matrix(b, c, n, q).unwrap();
            let inner = radon_matrix(a, b, n, q).unwrap();
            let direct = radon_matrix(a, c, n, q).unwrap();
            let composed = outer.mul(&inner).unwrap();
            let lambda = scalar_multiple_of(&composed, &direct)
                .expect("composition factors through the direct kernel");
            assert_eq!(
                lambda,
                BigInt::from(gaussian_binomial(c - a, b - a, q) as i64)
            );
        }
    }

    #[test]
    fn equivariance_over_f4() {
        // Exercises the x²+x+1 arithmetic through the whole pipeline: RREF,
        // inverses, the diag(α) generator with α = x.
        let m = radon_matrix(1, 2, 3, 4).unwrap();
        assert_eq!((m.rows, m.cols), (21, 21));
        let want = BigInt::from(gaussian_binomial(2, 1, 4) as i64);
        assert!(m.row_sums().iter().all(|s| *s == want));
        assert!(check_equivariance(&m, 1, 2, 3, 4).unwrap());
        let inc = incidence_matrix(1, 1, 3, 4, 0).unwrap();
        assert!(check_equivariance(&inc, 1, 1, 3, 4).unwrap());
    }

    /// Independent rank oracle: plain Gauss elimination over BigRational.
    fn rank_by_rational_gauss(m: &ExactMatrix) -> usize {
        use num_rational::BigRational;
        let mut a: Vec<Vec<BigRational>> = (0..m.rows)
            .map(|r| {
                (0..m.cols)
                    .map(|c| BigRational::from_integer(m.get(r, c).clone()))
                    .collect()
            })
            .collect();
        let mut rank = 0usize;
        for col in 0..m.cols {
            let Some(p) = (rank..m.rows).find(|&r| !a[r][col].is_zero()) else {
                continue;
            };
            a.swap(rank, p);
            let pivot = a[rank][col].clone();
            for r in 0..m.rows {
                if r != rank && !a[r][col].is_zero() {
                    let f = &a[r][col] / &pivot;
                    for c in col..m.cols {
                        let sub = &f * &a[rank][c];
                        a[r][c] -= sub;
                    }
                }
            }
            rank += 1;
            if rank == m.rows {
                break;
            }
        }
        rank
    }

    #[test]
    fn bareiss_rank_matches_rational_gauss() {
        let mut rng = ChaCha8Rng::seed_from_u64(12);
        for _ in 0..25 {
            let rows = rng.random_range(1..=6);
            let cols = rng.random_range(1..=6);
            let m = ExactMatrix::from_fn(rows, cols, |_, _| rng.random_range(-3..=3));
            assert_eq!(rank_exact(&m), rank_by_rational_gauss(&m), "on {m:?}");
        }
        // Rank-deficient by construction: duplicate and scaled rows.
        let mut m = ExactMatrix::zeros(4, 4);
        for c in 0..4 {
            m.set(0, c, BigInt::from(c as i64 + 1));
            m.set(1, c, BigInt::from(2 * (c as i64 + 1)));
            m.set(2, c, BigInt::from(c as i64));
            m.set(3, c, BigInt::from(3 * c as i64));
        }
        assert_eq!(rank_exact(&m), 2);
        assert_eq!(rank_by_rational_gauss(&m), 2);
    }

    #[test]
    fn matrix_text_round_trip() {
        let m = radon_matrix(1, 2, 3, 2).unwrap();
        let text = render_matrix(&m);
        assert!(text.starts_with("7 7\n"));
        assert_eq!(parse_matrix(&text).unwrap(), m);
        assert!(parse_matrix("2 2\n1 0 1").is_err());
    }
}
