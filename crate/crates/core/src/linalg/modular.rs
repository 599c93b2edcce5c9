//! Modular elimination with exact certification.
//!
//! Ranks and kernels over ℚ are obtained by reducing an integer matrix
//! modulo 31-bit primes, row-reducing with machine arithmetic, lifting the
//! canonical kernel coefficients through Chinese remaindering and rational
//! reconstruction, and finally verifying `M·v = 0` for every candidate
//! vector in exact integer arithmetic.
//!
//! Soundness does not depend on the primes: a modular rank never exceeds
//! the rational rank (an invertible square submatrix mod p is invertible
//! over ℚ), and a verified kernel family of size `cols − rank_p` is an
//! upper-bound certificate, so a successful round proves the rank and the
//! kernel exact. Unlucky primes can only delay termination. Among primes
//! attaining the true rank, any whose pivot pattern differs from the
//! rational elimination's pattern produces a lexicographically larger
//! pattern, so keeping the maximal rank with the smallest pattern also
//! guarantees that all accumulated residues describe the same rational
//! numbers, and that the returned basis is canonical and reproducible.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::int_mat::{primitivize, IntMat};

const WITNESSES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];

/// Deterministic Miller–Rabin primality test for 64-bit integers.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for &q in &WITNESSES {
        if n == q {
            return true;
        }
        if n % q == 0 {
            return false;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for &a in &WITNESSES {
        let mut x = powmod(a % n, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mulmod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

#[inline]
pub(crate) fn mulmod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn powmod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    while e > 0 {
        if e & 1 == 1 {
            acc = mulmod(acc, b, m);
        }
        b = mulmod(b, b, m);
        e >>= 1;
    }
    acc
}

/// Modular inverse of `a` (coprime to `m`).
pub(crate) fn invmod(a: u64, m: u64) -> u64 {
    let (mut r0, mut r1) = (m as i128, (a % m) as i128);
    let (mut t0, mut t1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        r0 -= q * r1;
        std::mem::swap(&mut r0, &mut r1);
        t0 -= q * t1;
        std::mem::swap(&mut t0, &mut t1);
    }
    debug_assert_eq!(r0, 1, "invmod of a non-unit");
    t0.rem_euclid(m as i128) as u64
}

/// Largest prime `<= n`, if any.
pub fn prime_at_most(n: u64) -> Option<u64> {
    if n < 2 {
        return None;
    }
    if n == 2 {
        return Some(2);
    }
    let mut c = if n % 2 == 0 { n - 1 } else { n };
    loop {
        if is_prime(c) {
            return Some(c);
        }
        if c < 3 {
            return None;
        }
        c -= 2;
    }
}

/// The fixed descending certification ladder: primes just below 2^31.
/// The row-reduction inner loop requires p < 2^31; starting at the top of
/// that range maximizes lifting power per prime.
pub(crate) fn cert_primes() -> impl Iterator<Item = u64> {
    let mut next = (1u64 << 31) - 1;
    std::iter::from_fn(move || {
        let p = prime_at_most(next)?;
        next = p - 2;
        Some(p)
    })
}

/// Barrett reduction: `x mod p` for `x < 2^63`, `2^30 < p < 2^31`,
/// with `magic = floor((2^64 − 1) / p)`. One correction step suffices.
#[inline(always)]
fn barrett(x: u64, p: u64, magic: u64) -> u64 {
    let q = ((x as u128 * magic as u128) >> 64) as u64;
    let r = x - q * p;
    if r >= p {
        r - p
    } else {
        r
    }
}

/// Dense matrix over GF(p), p a 31-bit prime.
pub(crate) struct ModMat {
    p: u64,
    magic: u64,
    rows: usize,
    cols: usize,
    a: Vec<u64>,
}

pub(crate) struct ModRref {
    pub rank: usize,
    pub pivot_cols: Vec<usize>,
    pub free_cols: Vec<usize>,
    /// Reduced coefficients at the free columns: entry `i * free_cols.len() + k`
    /// is the pivot-row-`i` coefficient at free column `free_cols[k]`.
    pub coef: Vec<u64>,
    p: u64,
    cols: usize,
}

impl ModRref {
    /// The nonzero reduced-echelon rows: a canonical basis of the row
    /// space (the space of linear equations the original rows impose).
    pub fn row_basis(&self) -> ModMat {
        let nf = self.free_cols.len();
        let mut m = ModMat::zeros(self.p, self.rank, self.cols);
        for i in 0..self.rank {
            m.a[i * self.cols + self.pivot_cols[i]] = 1;
            for (k, &fc) in self.free_cols.iter().enumerate() {
                m.a[i * self.cols + fc] = self.coef[i * nf + k];
            }
        }
        m
    }

    /// The canonical kernel basis, one row per free column.
    pub fn kernel_rows(&self) -> ModMat {
        let nf = self.free_cols.len();
        let mut m = ModMat::zeros(self.p, nf, self.cols);
        for (k, &fc) in self.free_cols.iter().enumerate() {
            m.a[k * self.cols + fc] = 1;
            for i in 0..self.rank {
                let c = self.coef[i * nf + k];
                if c != 0 {
                    m.a[k * self.cols + self.pivot_cols[i]] = self.p - c;
                }
            }
        }
        m
    }
}

impl ModMat {
    pub fn zeros(p: u64, rows: usize, cols: usize) -> ModMat {
        debug_assert!(p > (1 << 30) && p < (1 << 31));
        ModMat {
            p,
            magic: u64::MAX / p,
            rows,
            cols,
            a: vec![0; rows * cols],
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    /// Set entry (i, j); `v` must already be reduced mod p.
    pub fn set(&mut self, i: usize, j: usize, v: u64) {
        debug_assert!(v < self.p);
        self.a[i * self.cols + j] = v;
    }

    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.a[i * self.cols + j]
    }

    pub fn is_zero(&self) -> bool {
        self.a.iter().all(|&v| v == 0)
    }

    pub fn transpose(&self) -> ModMat {
        let mut t = ModMat::zeros(self.p, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.a[j * self.rows + i] = self.a[i * self.cols + j];
            }
        }
        t
    }

    pub fn vstack(parts: &[&ModMat]) -> ModMat {
        assert!(!parts.is_empty());
        let (p, cols) = (parts[0].p, parts[0].cols);
        let rows = parts.iter().map(|m| m.rows).sum();
        let mut a = Vec::with_capacity(rows * cols);
        for m in parts {
            assert_eq!(m.cols, cols);
            assert_eq!(m.p, p);
            a.extend_from_slice(&m.a);
        }
        ModMat {
            p,
            magic: u64::MAX / p,
            rows,
            cols,
            a,
        }
    }

    /// New matrix whose column j is column `map[j]` of `self`.
    pub fn gather_cols(&self, map: &[usize]) -> ModMat {
        let mut m = ModMat::zeros(self.p, self.rows, map.len());
        for i in 0..self.rows {
            for (j, &src) in map.iter().enumerate() {
                m.a[i * map.len() + j] = self.a[i * self.cols + src];
            }
        }
        m
    }

    pub fn matmul(&self, rhs: &ModMat) -> ModMat {
        assert_eq!(self.cols, rhs.rows);
        assert_eq!(self.p, rhs.p);
        let (p, magic) = (self.p, self.magic);
        let mut out = ModMat::zeros(p, self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let f = self.a[i * self.cols + k];
                if f == 0 {
                    continue;
                }
                let src = &rhs.a[k * rhs.cols..(k + 1) * rhs.cols];
                let dst = &mut out.a[i * rhs.cols..(i + 1) * rhs.cols];
                for (d, &s) in dst.iter_mut().zip(src) {
                    if s != 0 {
                        *d = barrett(*d + f * s, p, magic);
                    }
                }
            }
        }
        out
    }

    pub fn from_int(m: &IntMat, p: u64) -> ModMat {
        debug_assert!(p > (1 << 30) && p < (1 << 31) && is_prime(p));
        let pi = p as i64;
        let a = m
            .entries()
            .iter()
            .map(|e| match e.to_i64() {
                Some(v) => v.rem_euclid(pi) as u64,
                None => e.mod_floor(&BigInt::from(p)).to_u64().unwrap(),
            })
            .collect();
        ModMat {
            p,
            magic: u64::MAX / p,
            rows: m.rows(),
            cols: m.cols(),
            a,
        }
    }

    /// Full reduced row echelon form; consumes the matrix.
    pub fn rref(mut self) -> ModRref {
        let (rows, cols, p, magic) = (self.rows, self.cols, self.p, self.magic);
        let mut pivot_cols: Vec<usize> = Vec::new();
        let mut r = 0usize;
        for c in 0..cols {
            if r == rows {
                break;
            }
            let Some(pr) = (r..rows).find(|&i| self.a[i * cols + c] != 0) else {
                continue;
            };
            if pr != r {
                for j in c..cols {
                    self.a.swap(pr * cols + j, r * cols + j);
                }
            }
            let inv = invmod(self.a[r * cols + c], p);
            if inv != 1 {
                for j in c..cols {
                    let v = self.a[r * cols + j];
                    if v != 0 {
                        self.a[r * cols + j] = barrett(v * inv, p, magic);
                    }
                }
            }
            for i in 0..rows {
                if i == r {
                    continue;
                }
                let f = self.a[i * cols + c];
                if f == 0 {
                    continue;
                }
                let f = p - f;
                let (dst, src) = {
                    let (lo, hi) = if i < r { (i, r) } else { (r, i) };
                    let (left, right) = self.a.split_at_mut(hi * cols);
                    let row_lo = &mut left[lo * cols..(lo + 1) * cols];
                    let row_hi = &mut right[..cols];
                    if i < r {
                        (row_lo, &*row_hi)
                    } else {
                        (row_hi, &*row_lo)
                    }
                };
                for j in c..cols {
                    let s = src[j];
                    if s != 0 {
                        dst[j] = barrett(dst[j] + f * s, p, magic);
                    }
                }
            }
            pivot_cols.push(c);
            r += 1;
        }
        let rank = pivot_cols.len();
        let mut is_pivot = vec![false; cols];
        for &c in &pivot_cols {
            is_pivot[c] = true;
        }
        let free_cols: Vec<usize> = (0..cols).filter(|&c| !is_pivot[c]).collect();
        let mut coef = Vec::with_capacity(rank * free_cols.len());
        for i in 0..rank {
            for &fc in &free_cols {
                coef.push(self.a[i * cols + fc]);
            }
        }
        ModRref {
            rank,
            pivot_cols,
            free_cols,
            coef,
            p,
            cols,
        }
    }
}

/// Reduce an integer vector mod p.
pub(crate) fn reduce_vec(v: &[BigInt], p: u64) -> Vec<u64> {
    let pi = p as i64;
    v.iter()
        .map(|e| match e.to_i64() {
            Some(x) => x.rem_euclid(pi) as u64,
            None => e.mod_floor(&BigInt::from(p)).to_u64().unwrap(),
        })
        .collect()
}

/// Incremental Chinese remaindering of a residue table.
struct CrtTable {
    modulus: BigInt,
    residues: Vec<BigInt>,
    first: Vec<u64>,
    first_prime: u64,
    n_primes: usize,
}

impl CrtTable {
    fn new(table: Vec<u64>, p: u64) -> CrtTable {
        CrtTable {
            modulus: BigInt::from(p),
            residues: Vec::new(),
            first: table,
            first_prime: p,
            n_primes: 1,
        }
    }

    fn push(&mut self, table: &[u64], p: u64) {
        if self.n_primes == 1 {
            self.residues = self.first.iter().map(|&v| BigInt::from(v)).collect();
        }
        debug_assert_eq!(table.len(), self.residues.len());
        let p_big = BigInt::from(p);
        let m_mod_p = self.modulus.mod_floor(&p_big).to_u64().unwrap();
        let minv = invmod(m_mod_p, p);
        for (res, &t) in self.residues.iter_mut().zip(table) {
            let r_mod_p = res.mod_floor(&p_big).to_u64().unwrap();
            let delta = if t >= r_mod_p {
                t - r_mod_p
            } else {
                t + p - r_mod_p
            };
            let step = mulmod(delta, minv, p);
            if step != 0 {
                *res += &self.modulus * BigInt::from(step);
            }
        }
        self.modulus *= p_big;
        self.n_primes += 1;
    }
}

/// Rational reconstruction from a single word-sized residue: the unique
/// fraction n/d ≡ r (mod p) with |n|, d ≤ √(p/2), when one exists.
fn rr_u64(r: u64, p: u64) -> Option<(i64, i64)> {
    let bound = (p / 2).isqrt() as i128;
    let (mut r0, mut r1) = (p as i128, r as i128);
    let (mut t0, mut t1) = (0i128, 1i128);
    while r1 > bound {
        let q = r0 / r1;
        r0 -= q * r1;
        std::mem::swap(&mut r0, &mut r1);
        t0 -= q * t1;
        std::mem::swap(&mut t0, &mut t1);
    }
    if t1 == 0 || t1.abs() > bound {
        return None;
    }
    let (num, den) = if t1 < 0 { (-r1, -t1) } else { (r1, t1) };
    if num.gcd(&den) != 1 {
        return None;
    }
    Some((num as i64, den as i64))
}

/// Rational reconstruction from a big residue modulo `m`.
fn rr_big(r: &BigInt, m: &BigInt) -> Option<(BigInt, BigInt)> {
    let bound: BigInt = (m / BigInt::from(2)).sqrt();
    let mut r0 = m.clone();
    let mut r1 = r.clone();
    let mut t0 = BigInt::zero();
    let mut t1 = BigInt::one();
    while r1 > bound {
        let q = &r0 / &r1;
        let r2 = &r0 - &q * &r1;
        r0 = std::mem::replace(&mut r1, r2);
        let t2 = &t0 - &q * &t1;
        t0 = std::mem::replace(&mut t1, t2);
    }
    if t1.is_zero() || t1.abs() > bound {
        return None;
    }
    let (num, den) = if t1.is_negative() { (-r1, -t1) } else { (r1, t1) };
    if num.gcd(&den) != BigInt::one() {
        return None;
    }
    Some((num, den))
}

pub(crate) struct CertifiedKernel {
    pub rank: usize,
    pub pivot_cols: Vec<usize>,
    /// Primitive integer kernel vectors, one per free column, ascending.
    pub kernel: Vec<Vec<BigInt>>,
}

struct BestAcc {
    rank: usize,
    pivot_cols: Vec<usize>,
    free_cols: Vec<usize>,
    table: CrtTable,
}

/// Exact kernel and rank of an integer matrix, certified as described in
/// the module docs. Deterministic: the prime ladder is fixed and the
/// returned basis is the canonical reduced-echelon kernel basis.
pub(crate) fn certify_kernel(m: &IntMat) -> CertifiedKernel {
    let cols = m.cols();
    if cols == 0 {
        return CertifiedKernel {
            rank: 0,
            pivot_cols: Vec::new(),
            kernel: Vec::new(),
        };
    }
    let mut best: Option<BestAcc> = None;
    let mut next_attempt = 1usize;
    let mut primes_tried = 0usize;
    for p in cert_primes() {
        primes_tried += 1;
        assert!(
            primes_tried <= 5000,
            "kernel certification did not converge after 5000 primes"
        );
        let rr = ModMat::from_int(m, p).rref();
        let replace = match &best {
            None => true,
            Some(b) => rr.rank > b.rank || (rr.rank == b.rank && rr.pivot_cols < b.pivot_cols),
        };
        if replace {
            best = Some(BestAcc {
                rank: rr.rank,
                pivot_cols: rr.pivot_cols,
                free_cols: rr.free_cols,
                table: CrtTable::new(rr.coef, p),
            });
            next_attempt = 1;
        } else {
            let b = best.as_mut().unwrap();
            if rr.rank == b.rank && rr.pivot_cols == b.pivot_cols {
                b.table.push(&rr.coef, p);
            }
        }
        let b = best.as_ref().unwrap();
        if b.table.n_primes >= next_attempt {
            if let Some(kernel) = try_certify(m, b) {
                return CertifiedKernel {
                    rank: b.rank,
                    pivot_cols: b.pivot_cols.clone(),
                    kernel,
                };
            }
            next_attempt = b.table.n_primes + (b.table.n_primes + 1) / 2;
        }
    }
    unreachable!("prime ladder exhausted");
}

fn try_certify(m: &IntMat, b: &BestAcc) -> Option<Vec<Vec<BigInt>>> {
    let nfree = b.free_cols.len();
    let rank = b.rank;
    // reconstruct the coefficient table
    let mut nums: Vec<BigInt> = Vec::with_capacity(rank * nfree);
    let mut dens: Vec<BigInt> = Vec::with_capacity(rank * nfree);
    if b.table.n_primes == 1 {
        let p = b.table.first_prime;
        for &res in &b.table.first {
            let (n, d) = rr_u64(res, p)?;
            nums.push(BigInt::from(n));
            dens.push(BigInt::from(d));
        }
    } else {
        for res in &b.table.residues {
            let (n, d) = rr_big(res, &b.table.modulus)?;
            nums.push(n);
            dens.push(d);
        }
    }
    // assemble canonical kernel vectors and clear denominators per column
    let cols = m.cols();
    let mut kernel: Vec<Vec<BigInt>> = Vec::with_capacity(nfree);
    for (k, &fc) in b.free_cols.iter().enumerate() {
        let mut lcm = BigInt::one();
        for i in 0..rank {
            let d = &dens[i * nfree + k];
            if !d.is_one() {
                lcm = lcm.lcm(d);
            }
        }
        let mut v = vec![BigInt::zero(); cols];
        v[fc] = lcm.clone();
        for i in 0..rank {
            let idx = i * nfree + k;
            if !nums[idx].is_zero() {
                v[b.pivot_cols[i]] = -(&nums[idx] * (&lcm / &dens[idx]));
            }
        }
        primitivize(&mut v);
        kernel.push(v);
    }
    if m.annihilates(&kernel) {
        Some(kernel)
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mat(rows: usize, cols: usize, v: &[i64]) -> IntMat {
        IntMat::from_entries(rows, cols, v.iter().map(|&x| BigInt::from(x)).collect())
    }

    #[test]
    fn primality_basics() {
        assert!(is_prime(2));
        assert!(is_prime(3));
        assert!(is_prime((1 << 31) - 1));
        assert!(!is_prime(1));
        assert!(!is_prime((1u64 << 31) - 3));
        assert!(is_prime(2147483629));
        let known: Vec<u64> = (2..60).filter(|&n| is_prime(n)).collect();
        assert_eq!(
            known,
            vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59]
        );
    }

    #[test]
    fn modular_inverse() {
        let p = 2147483647u64;
        for a in [1u64, 2, 17, p - 1, 123456789] {
            assert_eq!(mulmod(a, invmod(a, p), p), 1);
        }
    }

    #[test]
    fn reconstruction_round_trip() {
        let p = 2147483647u64;
        // residue of 22/7 mod p
        let res = mulmod(22, invmod(7, p), p);
        assert_eq!(rr_u64(res, p), Some((22, 7)));
        // residue of -5/3
        let res = mulmod(p - 5, invmod(3, p), p);
        assert_eq!(rr_u64(res, p), Some((-5, 3)));
        assert_eq!(rr_u64(0, p), Some((0, 1)));
    }

    #[test]
    fn big_reconstruction_round_trip() {
        // |num|, den must stay below √(m/2) ≈ 1.5e9 for the modulus below
        let m = BigInt::from(2147483647u64) * BigInt::from(2147483629u64);
        let num = BigInt::from(123456789i64);
        let den = BigInt::from(9973i64);
        // residue = num * den^{-1} mod m, built by CRT per prime
        let mut table = CrtTable::new(
            vec![mulmod(123456789, invmod(9973, 2147483647), 2147483647)],
            2147483647,
        );
        table.push(
            &[mulmod(123456789, invmod(9973, 2147483629), 2147483629)],
            2147483629,
        );
        assert_eq!(table.modulus, m);
        assert_eq!(rr_big(&table.residues[0], &m), Some((num, den)));
    }

    #[test]
    fn kernel_of_simple_matrices() {
        // [[1,1,0]] → kernel spanned by (1,-1,0) and (0,0,1)
        let ck = certify_kernel(&mat(1, 3, &[1, 1, 0]));
        assert_eq!(ck.rank, 1);
        assert_eq!(ck.pivot_cols, vec![0]);
        assert_eq!(
            ck.kernel,
            vec![
                vec![BigInt::from(1), BigInt::from(-1), BigInt::from(0)],
                vec![BigInt::from(0), BigInt::from(0), BigInt::from(1)],
            ]
        );
        // identity → trivial kernel
        let ck = certify_kernel(&mat(2, 2, &[1, 0, 0, 1]));
        assert_eq!(ck.rank, 2);
        assert!(ck.kernel.is_empty());
        // zero 2×3 → full kernel
        let ck = certify_kernel(&mat(2, 3, &[0; 6]));
        assert_eq!(ck.rank, 0);
        assert_eq!(ck.kernel.len(), 3);
        // denominators: [[2,1],[0,0]] → (1,-2)
        let ck = certify_kernel(&mat(2, 2, &[2, 1, 0, 0]));
        assert_eq!(ck.kernel, vec![vec![BigInt::from(1), BigInt::from(-2)]]);
    }

    #[test]
    fn empty_shapes() {
        let ck = certify_kernel(&mat(0, 0, &[]));
        assert_eq!((ck.rank, ck.kernel.len()), (0, 0));
        let ck = certify_kernel(&mat(0, 4, &[]));
        assert_eq!(ck.rank, 0);
        assert_eq!(ck.kernel.len(), 4);
        assert_eq!(ck.kernel[2][2], BigInt::from(1));
        let ck = certify_kernel(&mat(4, 0, &[]));
        assert_eq!((ck.rank, ck.kernel.len()), (0, 0));
    }

    #[test]
    fn survives_a_bad_leading_prime() {
        // the first ladder prime divides the only entry of the pivot column,
        // so the first modular image has the wrong rank pattern
        let p0 = (1i64 << 31) - 1;
        let ck = certify_kernel(&mat(1, 2, &[p0, 1]));
        assert_eq!(ck.rank, 1);
        assert_eq!(ck.pivot_cols, vec![0]);
        assert_eq!(ck.kernel, vec![vec![BigInt::from(1), BigInt::from(-p0)]]);
    }

    #[test]
    fn deterministic_output() {
        let m = mat(3, 5, &[1, 2, 3, 4, 5, 2, 4, 6, 8, 10, 0, 1, 1, 2, 2]);
        let a = certify_kernel(&m);
        let b = certify_kernel(&m);
        assert_eq!(a.kernel, b.kernel);
        assert_eq!(a.pivot_cols, b.pivot_cols);
    }

    #[test]
    fn mod_rref_bases() {
        let p = prime_at_most(1 << 31).unwrap();
        // rows (1,1,0) and (0,1,1): rank 2, kernel spanned by (1,-1,1)
        let m = mat(2, 3, &[1, 1, 0, 0, 1, 1]);
        let rr = ModMat::from_int(&m, p).rref();
        assert_eq!(rr.rank, 2);
        let rows = rr.row_basis();
        assert_eq!((rows.rows(), rows.cols), (2, 3));
        let ker = rr.kernel_rows();
        assert_eq!((ker.rows(), ker.cols), (1, 3));
        // equations annihilate the kernel: rows · kerᵀ = 0
        assert!(rows.matmul(&ker.transpose()).is_zero());
        // and the kernel vector is (1, p−1, 1) up to scale
        let prod = ModMat::from_int(&m, p).matmul(&ker.transpose());
        assert!(prod.is_zero());
    }

    #[test]
    fn mod_mat_ops() {
        let p = prime_at_most(1 << 31).unwrap();
        let m = ModMat::from_int(&mat(2, 3, &[1, 2, 3, 4, 5, 6]), p);
        let g = m.gather_cols(&[2, 0]);
        assert_eq!((g.rows(), g.cols), (2, 2));
        let v = ModMat::vstack(&[&m, &m]);
        assert_eq!((v.rows(), v.cols), (4, 3));
        let t = m.transpose();
        assert_eq!((t.rows(), t.cols), (3, 2));
        // (AᵀA) is symmetric: compare to its own transpose
        let s = t.matmul(&m);
        assert!(s.matmul(&ModMat::zeros(p, 3, 1)).is_zero());
        let st = s.transpose();
        assert!(!s.is_zero());
        for i in 0..3 {
            for j in 0..3 {
                assert_eq!(s.a[i * 3 + j], st.a[i * 3 + j]);
            }
        }
        // reduce_vec matches from_int on negative entries
        let r = reduce_vec(&[BigInt::from(-1), BigInt::from(p) * 3 + 7], p);
        assert_eq!(r, vec![p - 1, 7]);
    }
}
