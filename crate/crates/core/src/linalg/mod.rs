//! Exact linear algebra over the rationals.
//!
//! `ExactMatrix` is a dense matrix of arbitrary-precision rationals. Ranks
//! and kernels are exact: they are produced by a modular engine whose
//! answers are certified by exhibiting integer kernel vectors and checking
//! `M·v = 0` with exact arithmetic (see `modular`), so no prime choice can
//! affect a returned value. A fraction-free elimination over ℤ and a
//! single-prime modular rank are exposed separately so tests can compare
//! independent strategies.

pub(crate) mod int_mat;
pub(crate) mod modular;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::scalar::Scalar;
use int_mat::IntMat;
use modular::{certify_kernel, ModMat};

pub use modular::{is_prime, prime_at_most};

#[derive(Debug, thiserror::Error)]
pub enum LinalgError {
    #[error("dimension mismatch: map target has {map_rows} coordinates but span matrix has {span_rows} rows")]
    DimensionMismatch { map_rows: usize, span_rows: usize },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactMatrix {
    rows: usize,
    cols: usize,
    a: Vec<Scalar>, // row-major
}

impl ExactMatrix {
    pub fn zeros(rows: usize, cols: usize) -> ExactMatrix {
        ExactMatrix {
            rows,
            cols,
            a: vec![Scalar::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> ExactMatrix {
        let mut m = ExactMatrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Scalar::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> ExactMatrix {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        let mut a = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c, "ragged rows");
            a.extend(row);
        }
        ExactMatrix { rows: r, cols: c, a }
    }

    pub fn from_columns(cols: Vec<Vec<Scalar>>) -> ExactMatrix {
        let c = cols.len();
        let r = cols.first().map_or(0, |col| col.len());
        let mut m = ExactMatrix::zeros(r, c);
        for (j, col) in cols.into_iter().enumerate() {
            assert_eq!(col.len(), r, "ragged columns");
            for (i, v) in col.into_iter().enumerate() {
                m.set(i, j, v);
            }
        }
        m
    }

    pub(crate) fn from_int_columns(n_rows: usize, cols: &[Vec<BigInt>]) -> ExactMatrix {
        let mut m = ExactMatrix::zeros(n_rows, cols.len());
        for (j, col) in cols.iter().enumerate() {
            assert_eq!(col.len(), n_rows);
            for (i, v) in col.iter().enumerate() {
                m.set(i, j, Scalar::from_integer(v.clone()));
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        assert!(i < self.rows && j < self.cols);
        &self.a[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        assert!(i < self.rows && j < self.cols);
        self.a[i * self.cols + j] = v;
    }

    pub fn column(&self, j: usize) -> Vec<Scalar> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.a.iter().all(|e| e.is_zero())
    }

    pub fn transpose(&self) -> ExactMatrix {
        let mut t = ExactMatrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.a[j * self.rows + i] = self.a[i * self.cols + j].clone();
            }
        }
        t
    }

    /// Horizontal concatenation; row counts must match.
    pub fn hstack(&self, other: &ExactMatrix) -> ExactMatrix {
        assert_eq!(self.rows, other.rows, "hstack row mismatch");
        let cols = self.cols + other.cols;
        let mut m = ExactMatrix::zeros(self.rows, cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                m.a[i * cols + j] = self.a[i * self.cols + j].clone();
            }
            for j in 0..other.cols {
                m.a[i * cols + self.cols + j] = other.a[i * other.cols + j].clone();
            }
        }
        m
    }

    pub fn matmul(&self, rhs: &ExactMatrix) -> ExactMatrix {
        assert_eq!(self.cols, rhs.rows, "matmul dimension mismatch");
        let mut out = ExactMatrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for t in 0..self.cols {
                let v = &self.a[i * self.cols + t];
                if v.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let w = &rhs.a[t * rhs.cols + j];
                    if !w.is_zero() {
                        let cur = &out.a[i * rhs.cols + j] + &(v * w);
                        out.a[i * rhs.cols + j] = cur;
                    }
                }
            }
        }
        out
    }

    /// Row-scaled integer image: each row is multiplied by the least common
    /// multiple of its denominators. Preserves the kernel and the rank.
    pub(crate) fn to_int_rows(&self) -> IntMat {
        let mut out = Vec::with_capacity(self.rows * self.cols);
        for i in 0..self.rows {
            let row = &self.a[i * self.cols..(i + 1) * self.cols];
            let mut lcm = BigInt::one();
            for e in row {
                if !e.is_zero() {
                    lcm = lcm.lcm(e.denom());
                }
            }
            for e in row {
                out.push(e.numer() * (&lcm / e.denom()));
            }
        }
        IntMat::from_entries(self.rows, self.cols, out)
    }

    /// Globally scaled integer image: the whole matrix is multiplied by one
    /// common denominator, so column spans scale uniformly.
    pub(crate) fn to_int_global(&self) -> IntMat {
        let mut lcm = BigInt::one();
        for e in &self.a {
            if !e.is_zero() {
                lcm = lcm.lcm(e.denom());
            }
        }
        let out = self
            .a
            .iter()
            .map(|e| e.numer() * (&lcm / e.denom()))
            .collect();
        IntMat::from_entries(self.rows, self.cols, out)
    }

    /// Exact rank over ℚ.
    pub fn rank(&self) -> usize {
        if self.rows == 0 || self.cols == 0 {
            return 0;
        }
        if self.cols <= self.rows {
            certify_kernel(&self.to_int_rows()).rank
        } else {
            // rank is transpose-invariant; the narrower orientation keeps
            // the certification kernel small
            certify_kernel(&self.transpose().to_int_rows()).rank
        }
    }

    /// Reference rank via fraction-free elimination over ℤ; no modular
    /// arithmetic involved. Intended for cross-checking.
    pub fn rank_fraction_free(&self) -> usize {
        int_mat::bareiss_rank(&self.to_int_rows())
    }

    /// Rank of the image modulo a single 31-bit prime. Always a lower bound
    /// for the rational rank; equality holds for all but finitely many
    /// primes. `p` must be a prime with 2^30 < p < 2^31.
    pub fn rank_modular(&self, p: u64) -> usize {
        assert!(
            p > (1 << 30) && p < (1 << 31) && is_prime(p),
            "rank_modular needs a 31-bit prime above 2^30"
        );
        ModMat::from_int(&self.to_int_rows(), p).rref().rank
    }

    /// Basis of {v : Mv = 0}, as matrix columns. Exact: every returned
    /// column is verified to annihilate in integer arithmetic, and the
    /// column count is certified to equal cols − rank.
    pub fn kernel_basis(&self) -> ExactMatrix {
        let ck = certify_kernel(&self.to_int_rows());
        ExactMatrix::from_int_columns(self.cols, &ck.kernel)
    }

    /// Basis of {v : Mv ∈ column-span(V)}: the kernel of the composition of
    /// M with the quotient by span(V). The quotient is realized by the left
    /// annihilator of V.
    pub fn preimage_kernel(&self, v: &ExactMatrix) -> Result<ExactMatrix, LinalgError> {
        if self.rows != v.rows {
            return Err(LinalgError::DimensionMismatch {
                map_rows: self.rows,
                span_rows: v.rows,
            });
        }
        if v.cols == 0 {
            return Ok(self.kernel_basis());
        }
        let ann = certify_kernel(&v.transpose().to_int_rows());
        if ann.kernel.is_empty() {
            return Ok(ExactMatrix::identity(self.cols));
        }
        let a_mat = IntMat::from_rows(&ann.kernel, v.rows);
        let composed = a_mat.matmul(&self.to_int_global());
        let ck = certify_kernel(&composed);
        Ok(ExactMatrix::from_int_columns(self.cols, &ck.kernel))
    }
}
