//! Brute-force ground truth: scan all of `K_n`, find the minimum smallest
//! eigenvalue of `X Xᵀ`, and certify it exactly.
//!
//! A machine-precision Jacobi eigensolver prefilters the scan; every
//! survivor within a fixed slack of the floating minimum is confirmed with
//! an exact characteristic polynomial and Sturm bisection, so the reported
//! minimum and argmin do not depend on floating-point behavior. The float
//! pass is an optimization only, and its soundness is spot-audited by an
//! exhaustive exact rescan in the tests.

use crate::charpoly::charpoly_oracle;
use crate::error::{Error, Result};
use crate::matrix::{enumerate_kn_range, gram, kn_count, TriangularBinaryMatrix};
use crate::roots::{compare_enclosures, isolate_roots, RootEnclosure};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Pow, Signed};
use rayon::prelude::*;
use std::cmp::Ordering;

/// Scan every matrix by default only up to this dimension.
pub const DEFAULT_CAP: usize = 6;
/// With an explicit opt-in, one more dimension (2,097,152 matrices).
pub const LARGE_CAP: usize = 7;

/// Absolute slack added to the floating minimum when deciding which
/// candidates need exact confirmation. Machine eigensolvers on these tiny
/// integer matrices are accurate to far better than this.
const PREFILTER_SLACK: f64 = 1e-6;

#[derive(Debug, Clone)]
pub struct OracleResult {
    pub n: usize,
    /// Certified rational enclosure of `min_X λ_min(X Xᵀ)`.
    pub cn_lo: BigRational,
    pub cn_hi: BigRational,
    /// Lexicographically smallest bitmask attaining the minimum.
    pub argmin: TriangularBinaryMatrix,
    pub matrices_scanned: u64,
    pub exact_confirmations: u64,
}

/// Smallest eigenvalue of `X Xᵀ` as a certified enclosure.
pub fn min_eigenvalue_gram(x: &TriangularBinaryMatrix, digits: u32) -> Result<RootEnclosure> {
    let p = charpoly_oracle(&gram(x));
    let roots = isolate_roots(&p)?;
    let mut smallest = roots
        .into_iter()
        .next()
        .ok_or_else(|| Error::domain("Gram matrix with no real eigenvalue"))?;
    // Gram matrices of nonsingular X are positive definite
    while !smallest.is_exact() && !smallest.lo().is_positive() {
        smallest.refine_step();
    }
    smallest.refine_to_relative_digits(digits);
    Ok(smallest)
}

#[allow(clippy::needless_range_loop)]
fn gram_lower_f64(x: &TriangularBinaryMatrix) -> Vec<Vec<f64>> {
    let n = x.n();
    let mut a = vec![vec![0.0; n]; n];
    for i in 0..n {
        for j in 0..=i {
            let mut dot = 0u32;
            for k in 0..=j {
                dot += (x.entry(i, k) & x.entry(j, k)) as u32;
            }
            a[i][j] = dot as f64;
            a[j][i] = dot as f64;
        }
    }
    a
}

/// Cyclic Jacobi iteration; returns the smallest eigenvalue estimate.
#[allow(clippy::needless_range_loop)]
fn jacobi_min_eigenvalue(mut a: Vec<Vec<f64>>) -> f64 {
    let n = a.len();
    if n == 1 {
        return a[0][0];
    }
    for _sweep in 0..60 {
        let mut off = 0.0f64;
        for p in 0..n - 1 {
            for q in p + 1..n {
                off = off.max(a[p][q].abs());
            }
        }
        if off < 1e-14 {
            break;
        }
        for p in 0..n - 1 {
            for q in p + 1..n {
                let apq = a[p][q];
                if apq.abs() < 1e-300 {
                    continue;
                }
                let theta = (a[q][q] - a[p][p]) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..n {
                    let akp = a[k][p];
                    let akq = a[k][q];
                    a[k][p] = c * akp - s * akq;
                    a[k][q] = s * akp + c * akq;
                }
                for k in 0..n {
                    let apk = a[p][k];
                    let aqk = a[q][k];
                    a[p][k] = c * apk - s * aqk;
                    a[q][k] = s * apk + c * aqk;
                }
            }
        }
    }
    (0..n).map(|i| a[i][i]).fold(f64::INFINITY, f64::min)
}

fn float_min_estimate(x: &TriangularBinaryMatrix) -> f64 {
    jacobi_min_eigenvalue(gram_lower_f64(x))
}

struct Candidate {
    bits: u64,
    enclosure: RootEnclosure,
}

/// Exact min-reduction with lexicographic tie-break on the bitmask.
fn reduce_best(best: Option<Candidate>, mut cand: Candidate) -> Result<Option<Candidate>> {
    match best {
        None => Ok(Some(cand)),
        Some(mut b) => match compare_enclosures(&mut cand.enclosure, &mut b.enclosure)? {
            Ordering::Less => Ok(Some(cand)),
            Ordering::Equal if cand.bits < b.bits => Ok(Some(cand)),
            _ => Ok(Some(b)),
        },
    }
}

fn guard_size(n: usize, allow_large: bool) -> Result<()> {
    if n == 0 {
        return Err(Error::domain("brute force requires n >= 1"));
    }
    if n > LARGE_CAP {
        return Err(Error::Refused(format!(
            "n = {n} means 2^{} matrices; the exact scan is capped at n = {LARGE_CAP}",
            n * (n - 1) / 2
        )));
    }
    if n > DEFAULT_CAP && !allow_large {
        return Err(Error::Refused(format!(
            "n = {n} exceeds the default cap {DEFAULT_CAP}; pass the large-scan flag to allow it"
        )));
    }
    Ok(())
}

/// Exhaustive exact scan, no prefilter; the audit path.
pub fn brute_force_cn_exhaustive(n: usize, digits: u32) -> Result<OracleResult> {
    guard_size(n, true)?;
    let count = kn_count(n)?;
    let mut best: Option<Candidate> = None;
    for x in enumerate_kn_range(n, 0, count)? {
        let enclosure = min_eigenvalue_gram(&x, 30)?;
        best = reduce_best(
            best,
            Candidate {
                bits: x.bits(),
                enclosure,
            },
        )?;
    }
    finish(n, count, count, best, digits)
}

/// Deterministic brute force over `K_n`, sharded for parallelism.
///
/// The result (value and argmin) is independent of `shards`: the float
/// pass reduces with `min`, which is associative, and the set of exactly
/// confirmed candidates depends only on that global float minimum.
pub fn brute_force_cn(
    n: usize,
    digits: u32,
    shards: u64,
    allow_large: bool,
) -> Result<OracleResult> {
    guard_size(n, allow_large)?;
    if shards == 0 {
        return Err(Error::domain("shards must be >= 1"));
    }
    let count = kn_count(n)?;
    let shards = shards.min(count.max(1));
    let ranges: Vec<(u64, u64)> = (0..shards)
        .map(|s| (count * s / shards, count * (s + 1) / shards))
        .collect();

    // pass 1: floating minimum over everything
    let float_min = ranges
        .par_iter()
        .map(|&(lo, hi)| {
            enumerate_kn_range(n, lo, hi)
                .expect("range checked")
                .map(|x| float_min_estimate(&x))
                .fold(f64::INFINITY, f64::min)
        })
        .reduce(|| f64::INFINITY, f64::min);

    // pass 2: exact confirmation of everything within the slack
    let threshold = float_min + PREFILTER_SLACK;
    let per_shard: Vec<Result<(Option<Candidate>, u64)>> = ranges
        .par_iter()
        .map(|&(lo, hi)| {
            let mut best: Option<Candidate> = None;
            let mut confirmed = 0u64;
            for x in enumerate_kn_range(n, lo, hi).expect("range checked") {
                if float_min_estimate(&x) > threshold {
                    continue;
                }
                confirmed += 1;
                let enclosure = min_eigenvalue_gram(&x, 30)?;
                best = reduce_best(
                    best,
                    Candidate {
                        bits: x.bits(),
                        enclosure,
                    },
                )?;
            }
            Ok((best, confirmed))
        })
        .collect();

    let mut best: Option<Candidate> = None;
    let mut confirmations = 0u64;
    for item in per_shard {
        let (shard_best, confirmed) = item?;
        confirmations += confirmed;
        if let Some(c) = shard_best {
            best = reduce_best(best, c)?;
        }
    }
    finish(n, count, confirmations, best, digits)
}

fn finish(
    n: usize,
    scanned: u64,
    confirmations: u64,
    best: Option<Candidate>,
    digits: u32,
) -> Result<OracleResult> {
    let mut best = best.ok_or_else(|| Error::domain("empty scan"))?;
    best.enclosure.refine_to_relative_digits(digits);
    // certified width 10^-30 absolute as well, for downstream comparisons
    let eps = BigRational::new(BigInt::from(1), BigInt::from(10).pow(30u32));
    best.enclosure.refine_to_width(&eps);
    Ok(OracleResult {
        n,
        cn_lo: best.enclosure.lo().clone(),
        cn_hi: best.enclosure.hi().clone(),
        argmin: TriangularBinaryMatrix::new(n, best.bits)?,
        matrices_scanned: scanned,
        exact_confirmations: confirmations,
    })
}

/// Every bitmask the prefilter would discard at the computed threshold;
/// exposed for the soundness audit.
pub fn prefilter_discards(n: usize) -> Result<Vec<TriangularBinaryMatrix>> {
    guard_size(n, false)?;
    let count = kn_count(n)?;
    let float_min = enumerate_kn_range(n, 0, count)?
        .map(|x| float_min_estimate(&x))
        .fold(f64::INFINITY, f64::min);
    let threshold = float_min + PREFILTER_SLACK;
    Ok(enumerate_kn_range(n, 0, count)?
        .filter(|x| float_min_estimate(x) > threshold)
        .collect())
}
