//! Exact integer matrices: the set `K_n` of nonsingular lower triangular
//! (0,1)-matrices, their Gram matrices, and the Fibonacci-structured
//! symmetric matrix `Z_n` whose spectral norm reciprocal is `c_n`.

use crate::error::{Error, Result};
use crate::fib::fibonacci;
use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Largest dimension representable by the `u64` strict-lower-triangle
/// bitmask (`n(n-1)/2 <= 64`).
pub const MAX_BITMASK_DIM: usize = 11;

/// An element of `K_n`: unit diagonal is implicit, the strict lower triangle
/// is packed row-major into `bits` (entry `(i,j)`, `i > j`, is bit
/// `i(i-1)/2 + j` with 0-based indices).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TriangularBinaryMatrix {
    n: usize,
    bits: u64,
}

impl TriangularBinaryMatrix {
    pub fn new(n: usize, bits: u64) -> Result<Self> {
        if n == 0 {
            return Err(Error::domain("matrix dimension must be >= 1"));
        }
        if n > MAX_BITMASK_DIM {
            return Err(Error::domain(format!(
                "bitmask encoding supports n <= {MAX_BITMASK_DIM}, got {n}"
            )));
        }
        let width = n * (n - 1) / 2;
        if width < 64 && bits >> width != 0 {
            return Err(Error::domain(format!(
                "bitmask {bits:#x} has bits beyond the {width}-bit strict lower triangle"
            )));
        }
        Ok(TriangularBinaryMatrix { n, bits })
    }

    pub fn identity(n: usize) -> Result<Self> {
        Self::new(n, 0)
    }

    /// All-ones lower triangle.
    pub fn all_ones(n: usize) -> Result<Self> {
        if n == 0 || n > MAX_BITMASK_DIM {
            return Self::new(n, 0).map(|_| unreachable!());
        }
        let width = n * (n - 1) / 2;
        let bits = if width == 64 {
            u64::MAX
        } else {
            (1u64 << width) - 1
        };
        Self::new(n, bits)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn bits(&self) -> u64 {
        self.bits
    }

    /// Entry at 0-based `(i, j)`.
    pub fn entry(&self, i: usize, j: usize) -> u8 {
        debug_assert!(i < self.n && j < self.n);
        if i == j {
            1
        } else if i > j {
            ((self.bits >> (i * (i - 1) / 2 + j)) & 1) as u8
        } else {
            0
        }
    }

    pub fn to_dense(&self) -> Vec<Vec<u8>> {
        (0..self.n)
            .map(|i| (0..self.n).map(|j| self.entry(i, j)).collect())
            .collect()
    }
}

/// Number of elements of `K_n`, i.e. `2^{n(n-1)/2}`.
pub fn kn_count(n: usize) -> Result<u64> {
    if n == 0 {
        return Err(Error::domain("dimension must be >= 1"));
    }
    let width = n * (n - 1) / 2;
    if width >= 64 {
        return Err(Error::domain(format!("2^{width} does not fit in u64")));
    }
    Ok(1u64 << width)
}

/// Every element of `K_n` exactly once, in ascending bitmask order.
pub fn enumerate_kn(n: usize) -> Result<impl Iterator<Item = TriangularBinaryMatrix>> {
    let count = kn_count(n)?;
    enumerate_kn_range(n, 0, count)
}

/// The slice `[lo, hi)` of the ascending-bitmask enumeration, for sharding.
pub fn enumerate_kn_range(
    n: usize,
    lo: u64,
    hi: u64,
) -> Result<impl Iterator<Item = TriangularBinaryMatrix>> {
    let count = kn_count(n)?;
    if lo > hi || hi > count {
        return Err(Error::domain(format!(
            "range [{lo}, {hi}) out of bounds for |K_{n}| = {count}"
        )));
    }
    Ok((lo..hi).map(move |bits| TriangularBinaryMatrix { n, bits }))
}

/// Dense symmetric matrix with exact integer entries; only the lower
/// triangle (diagonal included) is stored, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymmetricIntMatrix {
    n: usize,
    lower: Vec<BigInt>,
}

impl SymmetricIntMatrix {
    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> BigInt) -> Result<Self> {
        if n == 0 {
            return Err(Error::domain("matrix dimension must be >= 1"));
        }
        let mut lower = Vec::with_capacity(n * (n + 1) / 2);
        for i in 0..n {
            for j in 0..=i {
                lower.push(f(i, j));
            }
        }
        Ok(SymmetricIntMatrix { n, lower })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Entry at 0-based `(i, j)`; symmetry is implied.
    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        let (r, c) = if i >= j { (i, j) } else { (j, i) };
        &self.lower[r * (r + 1) / 2 + c]
    }

    pub fn trace(&self) -> BigInt {
        (0..self.n).map(|i| self.get(i, i)).sum()
    }

    /// Sum of squared entries, exact.
    pub fn frobenius_square(&self) -> BigInt {
        let mut acc = BigInt::zero();
        for i in 0..self.n {
            for j in 0..=i {
                let sq = self.get(i, j) * self.get(i, j);
                if i == j {
                    acc += sq;
                } else {
                    acc += 2 * sq;
                }
            }
        }
        acc
    }

    /// The principal submatrix dropping row/column 0. `Z_n` contains
    /// `Z_{n-1}` in exactly this position.
    pub fn trailing_principal_submatrix(&self) -> Option<SymmetricIntMatrix> {
        if self.n <= 1 {
            return None;
        }
        Some(
            SymmetricIntMatrix::from_fn(self.n - 1, |i, j| self.get(i + 1, j + 1).clone())
                .expect("n >= 1"),
        )
    }
}

/// Gram matrix `X Xᵀ`, exact.
pub fn gram(x: &TriangularBinaryMatrix) -> SymmetricIntMatrix {
    let n = x.n();
    SymmetricIntMatrix::from_fn(n, |i, j| {
        let mut dot = 0u64;
        for k in 0..=j.min(i) {
            dot += (x.entry(i, k) & x.entry(j, k)) as u64;
        }
        BigInt::from(dot)
    })
    .expect("n >= 1")
}

/// The matrix `Z_n`: diagonal `1 + Σ_{k=i+1}^n F_{k-i}²`, off-diagonal
/// `(-1)^{j-i} (F_{j-i} + Σ_{k=j+1}^n F_{k-i} F_{k-j})` for `i < j`
/// (1-based indices), extended symmetrically.
pub fn build_z(n: usize) -> Result<SymmetricIntMatrix> {
    if n == 0 {
        return Err(Error::domain("Z_n requires n >= 1"));
    }
    // warm the Fibonacci cache up to the largest index used
    let _ = fibonacci(n.max(1) as u64)?;
    let fib = |k: usize| fibonacci(k as u64).expect("k >= 1");
    SymmetricIntMatrix::from_fn(n, |r, c| {
        // translate to the 1-based (i, j) with i <= j
        let (i, j) = if r <= c {
            (r + 1, c + 1)
        } else {
            (c + 1, r + 1)
        };
        if i == j {
            let mut acc = BigInt::one();
            for k in (i + 1)..=n {
                let f = fib(k - i);
                acc += &f * &f;
            }
            acc
        } else {
            let mut acc = fib(j - i);
            for k in (j + 1)..=n {
                acc += fib(k - i) * fib(k - j);
            }
            if (j - i) % 2 == 1 {
                -acc
            } else {
                acc
            }
        }
    })
}
