//! The divisor-lattice application: Möbius function, the Möbius-inverted
//! function `J`, GCD (meet) matrices, and the eigenvalue lower bound
//! `λ_min(A) >= c_n · min_x J(x)` for lower closed sets.

use crate::charpoly::charpoly_oracle;
use crate::error::{Error, Result};
use crate::interval::FloatInterval;
use crate::matrix::SymmetricIntMatrix;
use crate::poly::IntPolynomial;
use crate::roots::{compare_enclosures, compute_cn, isolate_roots, RootEnclosure};
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use std::cmp::Ordering;
use std::collections::HashMap;
use std::sync::Mutex;

/// Divisors of `x` in ascending order.
pub fn divisors(x: u64) -> Vec<u64> {
    assert!(x >= 1);
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= x {
        if x.is_multiple_of(d) {
            small.push(d);
            if d * d != x {
                large.push(x / d);
            }
        }
        d += 1;
    }
    large.reverse();
    small.extend(large);
    small
}

static MU_MEMO: Mutex<Option<HashMap<u64, i64>>> = Mutex::new(None);

/// `μ(q)` computed from the inductive poset definition specialized to the
/// divisor lattice: `μ(1) = 1` and `μ(q) = -Σ_{d|q, d<q} μ(d)`.
fn mu_inductive(q: u64) -> i64 {
    if q == 1 {
        return 1;
    }
    {
        let guard = MU_MEMO.lock().expect("mobius memo poisoned");
        if let Some(map) = guard.as_ref() {
            if let Some(&v) = map.get(&q) {
                return v;
            }
        }
    }
    let mut sum = 0i64;
    for d in divisors(q) {
        if d < q {
            sum += mu_inductive(d);
        }
    }
    let v = -sum;
    let mut guard = MU_MEMO.lock().expect("mobius memo poisoned");
    guard.get_or_insert_with(HashMap::new).insert(q, v);
    v
}

/// Möbius function of the divisor lattice: `μ_P(x, y)`; zero when `x ∤ y`.
pub fn mobius_divisor(x: u64, y: u64) -> i64 {
    if x == 0 || y == 0 {
        return 0;
    }
    if !y.is_multiple_of(x) {
        return 0;
    }
    mu_inductive(y / x)
}

/// `J(x) = Σ_{z | x} f(z)·μ(x/z)`, the Möbius inversion of `f`.
pub fn j_function(x: u64, f: &dyn Fn(u64) -> BigRational) -> BigRational {
    assert!(x >= 1);
    let mut acc = BigRational::zero();
    for z in divisors(x) {
        let mu = mobius_divisor(z, x);
        if mu != 0 {
            acc += f(z) * BigRational::from(BigInt::from(mu));
        }
    }
    acc
}

/// A set of positive integers closed under divisors, sorted ascending (so
/// divisibility only points forward).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DivisorClosedSet {
    elements: Vec<u64>,
}

impl DivisorClosedSet {
    pub fn new(mut elements: Vec<u64>) -> Result<Self> {
        if elements.is_empty() {
            return Err(Error::domain("the set must be nonempty"));
        }
        elements.sort_unstable();
        elements.dedup();
        if elements[0] == 0 {
            return Err(Error::domain("elements must be positive"));
        }
        for &x in &elements {
            for d in divisors(x) {
                if elements.binary_search(&d).is_err() {
                    return Err(Error::domain(format!(
                        "not lower closed: {d} divides {x} but is missing"
                    )));
                }
            }
        }
        Ok(DivisorClosedSet { elements })
    }

    /// `{1, 2, ..., n}` — always lower closed.
    pub fn first_n(n: u64) -> Result<Self> {
        if n == 0 {
            return Err(Error::domain("n must be >= 1"));
        }
        Ok(DivisorClosedSet {
            elements: (1..=n).collect(),
        })
    }

    pub fn elements(&self) -> &[u64] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }
}

/// The meet matrix `A_{ij} = f(gcd(x_i, x_j))` over a divisor-closed set.
#[derive(Debug, Clone)]
pub struct MeetMatrix {
    entries: Vec<Vec<BigRational>>,
}

impl MeetMatrix {
    pub fn new(set: &DivisorClosedSet, f: &dyn Fn(u64) -> BigRational) -> Self {
        let xs = set.elements();
        let entries = xs
            .iter()
            .map(|&a| xs.iter().map(|&b| f(a.gcd(&b))).collect())
            .collect();
        MeetMatrix { entries }
    }

    pub fn n(&self) -> usize {
        self.entries.len()
    }

    pub fn get(&self, i: usize, j: usize) -> &BigRational {
        &self.entries[i][j]
    }

    /// Clear denominators: returns the integer matrix `L·A` and the scale L.
    pub fn cleared(&self) -> (SymmetricIntMatrix, BigInt) {
        let mut l = BigInt::one();
        for row in &self.entries {
            for e in row {
                l = l.lcm(e.denom());
            }
        }
        let m = SymmetricIntMatrix::from_fn(self.n(), |i, j| {
            let scaled = self.get(i, j) * BigRational::from(l.clone());
            debug_assert!(scaled.is_integer());
            scaled.to_integer()
        })
        .expect("n >= 1");
        (m, l)
    }
}

/// The verdict of the meet-matrix eigenvalue bound check.
#[derive(Debug, Clone)]
pub struct MeetBoundReport {
    pub bound: FloatInterval,
    pub lambda_min: FloatInterval,
    pub holds: bool,
}

/// Evaluate the lower bound `λ_min(A) >= c_n · min_x J(x)` with certified
/// enclosures on both sides. `holds` is decided conservatively; when the
/// two sides are equal as algebraic numbers (which happens, e.g. for
/// `S = {1, 2}` with the identity), the equality is established exactly.
pub fn meet_matrix_lower_bound(
    set: &DivisorClosedSet,
    f: &dyn Fn(u64) -> BigRational,
    digits: u32,
    precision_bits: u32,
) -> Result<MeetBoundReport> {
    let n = set.len();
    // precondition: J > 0 on all of S
    let mut min_j: Option<BigRational> = None;
    for &x in set.elements() {
        let j = j_function(x, f);
        if j <= BigRational::zero() {
            return Err(Error::domain(format!(
                "J({x}) = {j} is not positive; the eigenvalue bound does not apply"
            )));
        }
        min_j = Some(match min_j {
            None => j,
            Some(m) => m.min(j),
        });
    }
    let min_j = min_j.expect("nonempty set");

    let cn = compute_cn(n, digits)?;
    let bound_lo = &cn.cn_lo * &min_j;
    let bound_hi = &cn.cn_hi * &min_j;
    let bound = FloatInterval::from_rational_bounds(&bound_lo, &bound_hi, precision_bits);

    // certified λ_min of A via the integer rescaling L·A
    let meet = MeetMatrix::new(set, f);
    let (scaled, l) = meet.cleared();
    let p = charpoly_oracle(&scaled);
    let roots = isolate_roots(&p)?;
    let mut smallest = roots
        .into_iter()
        .next()
        .ok_or_else(|| Error::domain("meet matrix has no real eigenvalue"))?;
    smallest.refine_to_relative_digits(digits);
    let l_rat = BigRational::from(l.clone());
    let lam_lo = smallest.lo() / &l_rat;
    let lam_hi = smallest.hi() / &l_rat;
    let lambda_min = FloatInterval::from_rational_bounds(&lam_lo, &lam_hi, precision_bits);

    // conservative comparison first, exact algebraic equality as fallback
    let holds = if bound.certainly_le(&lambda_min) {
        true
    } else if lambda_min.certainly_lt(&bound) {
        false
    } else {
        decide_by_algebraic_comparison(&cn.lambda1, &min_j, smallest, &l)?
    };
    Ok(MeetBoundReport {
        bound,
        lambda_min,
        holds,
    })
}

/// Build the polynomial whose root is `m·root(p)` for rational `m = a/b`:
/// coefficients `p_i · a^{d-i} · b^i`.
fn scale_root_poly(p: &IntPolynomial, m: &BigRational) -> IntPolynomial {
    let d = p.degree().expect("nonzero");
    let a = m.numer();
    let b = m.denom();
    let mut coeffs = Vec::with_capacity(d + 1);
    let mut a_pow = vec![BigInt::one()];
    let mut b_pow = vec![BigInt::one()];
    for i in 1..=d {
        a_pow.push(&a_pow[i - 1] * a);
        b_pow.push(&b_pow[i - 1] * b);
    }
    for i in 0..=d {
        coeffs.push(p.coeff(i) * &a_pow[d - i] * &b_pow[i]);
    }
    IntPolynomial::new(coeffs)
}

/// Exact comparison of `bound = min_j / λ₁(Z_n)` against
/// `λ_min = root(p_A) / L`.
fn decide_by_algebraic_comparison(
    lambda1: &RootEnclosure,
    min_j: &BigRational,
    lam_enc: RootEnclosure,
    l: &BigInt,
) -> Result<bool> {
    // bound is min_j·(1/λ₁): a root of the reversed charpoly scaled by min_j
    let p_n = lambda1.poly();
    let d = p_n.degree().expect("nonzero");
    let reversed = IntPolynomial::new((0..=d).rev().map(|i| p_n.coeff(i)).collect());
    let bound_poly = scale_root_poly(&reversed, min_j);
    let bound_lo = min_j / lambda1.hi();
    let bound_hi = min_j / lambda1.lo();
    let bound_enc = enclosure_from_poly_interval(&bound_poly, &bound_lo, &bound_hi)?;

    let inv_l = BigRational::new(BigInt::one(), l.clone());
    let lam_poly = scale_root_poly(lam_enc.poly(), &inv_l);
    let lam_lo = lam_enc.lo() / BigRational::from(l.clone());
    let lam_hi = lam_enc.hi() / BigRational::from(l.clone());
    let lam_scaled = enclosure_from_poly_interval(&lam_poly, &lam_lo, &lam_hi)?;

    let mut a = lam_scaled;
    let mut b = bound_enc;
    match compare_enclosures(&mut a, &mut b)? {
        Ordering::Less => Ok(false),
        _ => Ok(true),
    }
}

/// Re-anchor a rational interval known to contain exactly one root of `p`
/// as a proper enclosure (signs or exact point at the endpoints).
fn enclosure_from_poly_interval(
    p: &IntPolynomial,
    lo: &BigRational,
    hi: &BigRational,
) -> Result<RootEnclosure> {
    let roots = isolate_roots(p)?;
    for mut r in roots {
        // refine until the candidate is inside or outside [lo, hi]
        for _ in 0..2048 {
            if r.lo() >= lo && r.hi() <= hi {
                return Ok(r);
            }
            if r.hi() < lo || r.lo() > hi {
                break;
            }
            if r.is_exact() {
                break;
            }
            r.refine_step();
        }
        if r.is_exact() && r.lo() >= lo && r.hi() <= hi {
            return Ok(r);
        }
    }
    Err(Error::domain(
        "no isolated root inside the expected interval",
    ))
}

/// Convenience entry point for the bound over `S = {1..n}` with `f = id`:
/// `min J = φ(1) = 1`, so the bound is exactly `c_n`.
pub fn gcd_matrix_bound_identity(
    n: u64,
    digits: u32,
    precision_bits: u32,
) -> Result<MeetBoundReport> {
    let set = DivisorClosedSet::first_n(n)?;
    meet_matrix_lower_bound(
        &set,
        &|x| BigRational::from(BigInt::from(x)),
        digits,
        precision_bits,
    )
}

/// Euler's totient by direct coprime counting; the classical oracle used in
/// tests against `j_function(·, id)`.
pub fn totient_by_counting(x: u64) -> u64 {
    assert!(x >= 1);
    (1..=x).filter(|&k| k.gcd(&x) == 1).count() as u64
}
