//! Dense integer matrices.
//!
//! The modular engine and the graded-map plumbing both work on integer
//! matrices: every rational matrix can be row- or globally-scaled to one
//! without changing the quantities we care about (ranks, kernels, spans).
//! Products and kernel verification take a machine-word fast path whenever
//! entry sizes make `i128` accumulation provably overflow-free, and fall
//! back to big-integer arithmetic otherwise.

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct IntMat {
    rows: usize,
    cols: usize,
    a: Vec<BigInt>, // row-major
}

fn ceil_log2(n: usize) -> u64 {
    if n <= 1 {
        0
    } else {
        (usize::BITS - (n - 1).leading_zeros()) as u64
    }
}

impl IntMat {
    pub fn zeros(rows: usize, cols: usize) -> IntMat {
        IntMat {
            rows,
            cols,
            a: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn from_entries(rows: usize, cols: usize, a: Vec<BigInt>) -> IntMat {
        assert_eq!(a.len(), rows * cols);
        IntMat { rows, cols, a }
    }

    /// Builds a matrix whose rows are the given vectors.
    pub fn from_rows(rows: &[Vec<BigInt>], cols: usize) -> IntMat {
        let mut a = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            assert_eq!(r.len(), cols);
            a.extend(r.iter().cloned());
        }
        IntMat {
            rows: rows.len(),
            cols,
            a,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entries(&self) -> &[BigInt] {
        &self.a
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigInt) {
        self.a[i * self.cols + j] = v;
    }

    /// Stacks matrices with equal column counts on top of each other.
    pub fn vstack(parts: &[&IntMat]) -> IntMat {
        assert!(!parts.is_empty());
        let cols = parts[0].cols;
        let rows = parts.iter().map(|m| m.rows).sum();
        let mut a = Vec::with_capacity(rows * cols);
        for m in parts {
            assert_eq!(m.cols, cols);
            a.extend(m.a.iter().cloned());
        }
        IntMat { rows, cols, a }
    }

    /// Concatenates matrices with equal row counts side by side.
    pub fn hstack(parts: &[&IntMat]) -> IntMat {
        assert!(!parts.is_empty());
        let rows = parts[0].rows;
        let cols = parts.iter().map(|m| m.cols).sum();
        let mut out = IntMat::zeros(rows, cols);
        for i in 0..rows {
            let mut off = 0;
            for m in parts {
                assert_eq!(m.rows, rows);
                for j in 0..m.cols {
                    out.a[i * cols + off + j] = m.a[i * m.cols + j].clone();
                }
                off += m.cols;
            }
        }
        out
    }

    pub fn col_vec(&self, j: usize) -> Vec<BigInt> {
        (0..self.rows).map(|i| self.a[i * self.cols + j].clone()).collect()
    }

    /// Column selection: result column `k` is `self` column `map[k]`.
    pub fn gather_cols(&self, map: &[usize]) -> IntMat {
        let mut out = IntMat::zeros(self.rows, map.len());
        for i in 0..self.rows {
            for (k, &j) in map.iter().enumerate() {
                out.a[i * map.len() + k] = self.a[i * self.cols + j].clone();
            }
        }
        out
    }

    /// Largest magnitude bit length over all entries.
    pub fn max_bits(&self) -> u64 {
        self.a.iter().map(|e| e.bits()).max().unwrap_or(0)
    }

    fn to_i64_all(&self) -> Vec<i64> {
        self.a
            .iter()
            .map(|e| e.to_i64().expect("entry exceeds fast-path bound"))
            .collect()
    }

    pub fn matmul(&self, rhs: &IntMat) -> IntMat {
        assert_eq!(self.cols, rhs.rows, "matmul dimension mismatch");
        let (m, n, k) = (self.rows, rhs.cols, self.cols);
        let ab = self.max_bits();
        let bb = rhs.max_bits();
        if ab <= 62 && bb <= 62 && ab + bb + ceil_log2(k.max(1)) + 1 <= 126 {
            let a = self.to_i64_all();
            let b = rhs.to_i64_all();
            let mut acc = vec![0i128; m * n];
            for i in 0..m {
                for t in 0..k {
                    let v = a[i * k + t];
                    if v == 0 {
                        continue;
                    }
                    let v = v as i128;
                    let row = &b[t * n..(t + 1) * n];
                    let dst = &mut acc[i * n..(i + 1) * n];
                    for j in 0..n {
                        dst[j] += v * row[j] as i128;
                    }
                }
            }
            IntMat {
                rows: m,
                cols: n,
                a: acc.into_iter().map(BigInt::from).collect(),
            }
        } else {
            let mut out = IntMat::zeros(m, n);
            for i in 0..m {
                for t in 0..k {
                    let v = &self.a[i * k + t];
                    if v.is_zero() {
                        continue;
                    }
                    for j in 0..n {
                        let w = &rhs.a[t * n + j];
                        if !w.is_zero() {
                            out.a[i * n + j] += v * w;
                        }
                    }
                }
            }
            out
        }
    }

    /// Exactly checks `self · v = 0` for every candidate vector.
    pub fn annihilates(&self, vecs: &[Vec<BigInt>]) -> bool {
        if self.rows == 0 || vecs.is_empty() {
            return true;
        }
        let vb = vecs
            .iter()
            .flat_map(|v| v.iter())
            .map(|e| e.bits())
            .max()
            .unwrap_or(0);
        let ab = self.max_bits();
        if ab <= 62 && vb <= 62 && ab + vb + ceil_log2(self.cols.max(1)) + 1 <= 126 {
            let a = self.to_i64_all();
            for v in vecs {
                assert_eq!(v.len(), self.cols);
                let vi: Vec<i64> = v.iter().map(|e| e.to_i64().unwrap()).collect();
                for i in 0..self.rows {
                    let row = &a[i * self.cols..(i + 1) * self.cols];
                    let mut s = 0i128;
                    for j in 0..self.cols {
                        s += row[j] as i128 * vi[j] as i128;
                    }
                    if s != 0 {
                        return false;
                    }
                }
            }
            true
        } else {
            for v in vecs {
                assert_eq!(v.len(), self.cols);
                for i in 0..self.rows {
                    let mut s = BigInt::zero();
                    for j in 0..self.cols {
                        let e = &self.a[i * self.cols + j];
                        if !e.is_zero() && !v[j].is_zero() {
                            s += e * &v[j];
                        }
                    }
                    if !s.is_zero() {
                        return false;
                    }
                }
            }
            true
        }
    }
}

/// Reference rank: fraction-free (Bareiss) elimination over the integers.
/// Intermediate entries are minors of the input, divisions are exact.
pub(crate) fn bareiss_rank(m: &IntMat) -> usize {
    let (rows, cols) = (m.rows, m.cols);
    let mut a = m.a.clone();
    let mut prev = BigInt::from(1);
    let mut r = 0usize;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(pi) = (r..rows).find(|&i| !a[i * cols + c].is_zero()) else {
            continue;
        };
        if pi != r {
            for j in 0..cols {
                a.swap(pi * cols + j, r * cols + j);
            }
        }
        for i in (r + 1)..rows {
            for j in (c + 1)..cols {
                let num = &a[r * cols + c] * &a[i * cols + j] - &a[i * cols + c] * &a[r * cols + j];
                debug_assert!((&num % &prev).is_zero(), "fraction-free division not exact");
                a[i * cols + j] = num / &prev;
            }
            a[i * cols + c] = BigInt::zero();
        }
        prev = a[r * cols + c].clone();
        r += 1;
    }
    r
}

/// Primitive normalization in place: divide by the content and make the
/// first nonzero entry positive. The zero vector is left unchanged.
pub(crate) fn primitivize(v: &mut [BigInt]) {
    use num_integer::Integer;
    let mut g = BigInt::zero();
    for e in v.iter() {
        if !e.is_zero() {
            g = g.gcd(e);
        }
    }
    if g.is_zero() {
        return;
    }
    if v.iter().find(|e| !e.is_zero()).map(|e| e.is_negative()) == Some(true) {
        g = -g;
    }
    for e in v.iter_mut() {
        *e /= &g;
    }
}
