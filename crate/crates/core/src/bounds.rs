//! Closed-form bounds on `c_n`, evaluated in outward-rounded interval
//! arithmetic so that every reported inequality is certified.
//!
//! The exact-integer identities (trace, Frobenius square) are kept next to
//! their golden-ratio-power forms; tests pin the two routes against each
//! other and against the matrices themselves.

use crate::error::{Error, Result};
use crate::fib::fibonacci;
use crate::interval::{golden_ratio, sqrt5, FloatInterval};
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Default working precision: 512 bits is roughly 154 decimal digits,
/// matching the precision regime of the reference computations.
pub const DEFAULT_PRECISION_BITS: u32 = 512;

/// Hard cap for automatic precision escalation.
pub const MAX_PRECISION_BITS: u32 = 8192;

fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

fn rint(n: i64) -> BigRational {
    BigRational::from(BigInt::from(n))
}

fn sign_term(n: usize) -> i64 {
    if n.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Enclosure of `φ^k`, negative `k` included.
pub fn golden_power(k: i64, precision_bits: u32) -> FloatInterval {
    golden_ratio(precision_bits)
        .pow_i(k)
        .expect("φ is positive")
}

/// Exact `tr(Z_n) = n + F_n² - (1-(-1)ⁿ)/2`.
pub fn trace_closed_form(n: usize) -> Result<BigInt> {
    if n == 0 {
        return Err(Error::domain("trace requires n >= 1"));
    }
    let f = fibonacci(n as u64)?;
    let parity = if n % 2 == 1 {
        BigInt::one()
    } else {
        BigInt::zero()
    };
    Ok(BigInt::from(n) + &f * &f - parity)
}

/// The φ-power form of the trace,
/// `n - 1/2 + φ^{2n}/5 + φ^{-2n}/5 + (-1)ⁿ/10`, as an interval.
pub fn trace_phi_form(n: usize, precision_bits: u32) -> Result<FloatInterval> {
    if n == 0 {
        return Err(Error::domain("trace requires n >= 1"));
    }
    let k = 2 * n as i64;
    let pos = golden_power(k, precision_bits);
    let neg = golden_power(-k, precision_bits);
    let fifth = rat(1, 5);
    let sum = pos.scale_rational(&fifth).add(&neg.scale_rational(&fifth));
    let constant = rint(n as i64) - rat(1, 2) + rat(sign_term(n), 10);
    Ok(sum.add(&FloatInterval::from_rational(&constant, precision_bits)))
}

/// Exact integer `‖Z_n‖_F²` through Lucas/Fibonacci identities:
/// `(L_{4n} + (3+(-1)ⁿ)L_{2n})/25 + (2n/5)F_{2n} + (13(-1)ⁿ-33)/50 + n`.
pub fn frobenius_square_exact(n: usize) -> Result<BigInt> {
    if n == 0 {
        return Err(Error::domain("Frobenius norm requires n >= 1"));
    }
    let lucas = |k: u64| -> Result<BigInt> { Ok(fibonacci(k - 1)? + fibonacci(k + 1)?) };
    let sigma = sign_term(n);
    let l4n = lucas(4 * n as u64)?;
    let l2n = lucas(2 * n as u64)?;
    let f2n = fibonacci(2 * n as u64)?;
    let value = BigRational::new(l4n + BigInt::from(3 + sigma) * l2n, BigInt::from(25))
        + BigRational::new(BigInt::from(2 * n as i64) * f2n, BigInt::from(5))
        + rat(13 * sigma - 33, 50)
        + rint(n as i64);
    if !value.is_integer() {
        return Err(Error::domain(format!(
            "Frobenius-square closed form is not an integer at n = {n}"
        )));
    }
    Ok(value.to_integer())
}

/// The φ-power radicand shared by the norm formulas: the Frobenius-square
/// closed form with its standalone additive term replaced by `constant`.
fn frobenius_radicand(n: usize, constant: &BigRational, precision_bits: u32) -> FloatInterval {
    let sigma = sign_term(n);
    let k = 2 * n as i64;
    let p2 = golden_power(k, precision_bits);
    let m2 = golden_power(-k, precision_bits);
    let p4 = golden_power(2 * k, precision_bits);
    let m4 = golden_power(-2 * k, precision_bits);
    // 2/(5√5)·n = (2n/25)·√5
    let root5_term = sqrt5(precision_bits).scale_rational(&rat(2 * n as i64, 25));
    let c_small = rat(3 + sigma, 25);

    m4.scale_rational(&rat(1, 25))
        .add(&m2.scale_rational(&c_small))
        .sub(&root5_term.mul(&m2))
        .add(&FloatInterval::from_rational(
            &(rat(13 * sigma - 33, 50) + constant),
            precision_bits,
        ))
        .add(&p2.scale_rational(&c_small))
        .add(&root5_term.mul(&p2))
        .add(&p4.scale_rational(&rat(1, 25)))
}

/// Enclosure of `‖Z_n‖_F` from the closed form.
pub fn frobenius_closed_form(n: usize, precision_bits: u32) -> Result<FloatInterval> {
    if n == 0 {
        return Err(Error::domain("Frobenius norm requires n >= 1"));
    }
    frobenius_radicand(n, &rint(n as i64), precision_bits).sqrt()
}

/// The matrix-norm lower bound `c_n >= ‖Z_n‖_F⁻¹`.
pub fn lower_bound_frobenius(n: usize, precision_bits: u32) -> Result<FloatInterval> {
    frobenius_closed_form(n, precision_bits)?.recip()
}

/// The two-sided rational bounds
/// `2/(2F_n² + 2n - 1 + (-1)ⁿ) <= c_n <= 2/(2F_n² + 1 + (-1)ⁿ)`.
pub fn loewy_bounds(n: usize) -> Result<(BigRational, BigRational)> {
    if n == 0 {
        return Err(Error::domain("bounds require n >= 1"));
    }
    let f = fibonacci(n as u64)?;
    let two_f2 = BigInt::from(2) * &f * &f;
    let sigma = BigInt::from(sign_term(n));
    let lower = BigRational::new(
        BigInt::from(2),
        &two_f2 + BigInt::from(2 * n as i64) - BigInt::one() + &sigma,
    );
    let upper = BigRational::new(BigInt::from(2), &two_f2 + BigInt::one() + sigma);
    Ok((lower, upper))
}

/// Which form of the upper bound to evaluate; the published statement and
/// its derivation chain differ by the factor in front of `(n-1)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Thm31Variant {
    /// The published statement: radicand is the Frobenius closed form with
    /// the `+n` term replaced by `+1` (reproduces the reference table).
    AsStated,
    /// The derivation chain: radicand `‖Z_n‖_F² - (16/25)(n-1)`.
    Strict,
}

/// Upper bound on `c_n`; valid for `n >= 2`.
pub fn upper_bound_thm31(
    n: usize,
    precision_bits: u32,
    variant: Thm31Variant,
) -> Result<FloatInterval> {
    if n < 2 {
        return Err(Error::domain("upper bound requires n >= 2"));
    }
    let radicand = match variant {
        Thm31Variant::AsStated => frobenius_radicand(n, &rint(1), precision_bits),
        Thm31Variant::Strict => {
            let shift = rint(n as i64) - rat(16, 25) * rint(n as i64 - 1);
            frobenius_radicand(n, &shift, precision_bits)
        }
    };
    if !radicand.is_positive() {
        return Err(Error::domain(format!(
            "radicand not certainly positive at n = {n}; raise the precision"
        )));
    }
    radicand.sqrt()?.recip()
}

/// Samuelson endpoints `-a_{n-1}/(n a_n) ∓ ((n-1)/(n a_n))·√disc` with
/// `disc = a_{n-1}² - (2n/(n-1)) a_n a_{n-2}`; returned ordered.
fn samuelson_endpoints(
    a_n: &BigInt,
    a_n1: &BigInt,
    a_n2: &BigInt,
    n: usize,
    precision_bits: u32,
) -> Result<(FloatInterval, FloatInterval)> {
    if n < 2 {
        return Err(Error::domain("Samuelson bracket requires n >= 2"));
    }
    if a_n.is_zero() {
        return Err(Error::domain("leading coefficient must be nonzero"));
    }
    let n_big = BigInt::from(n);
    let nm1 = BigInt::from(n - 1);
    // disc with the (n-1) denominator kept explicit, exact
    let disc = BigRational::new(
        (a_n1 * a_n1) * &nm1 - BigInt::from(2) * &n_big * a_n * a_n2,
        nm1.clone(),
    );
    if disc < BigRational::zero() {
        return Err(Error::domain(
            "negative Samuelson discriminant: polynomial is not real-rooted",
        ));
    }
    let center = BigRational::new(-a_n1.clone(), &n_big * a_n);
    let center_iv = FloatInterval::from_rational(&center, precision_bits);
    let sqrt_disc = FloatInterval::from_rational(&disc, precision_bits).sqrt()?;
    let scale = BigRational::new(nm1, n_big * a_n);
    let radius = sqrt_disc.scale_rational(&scale);
    let lo = center_iv.sub(&radius);
    let hi = center_iv.add(&radius);
    // a_n < 0 flips the offsets
    if lo.certainly_le(&hi) {
        Ok((lo, hi))
    } else {
        Ok((hi, lo))
    }
}

/// Enclosure of the full Samuelson root interval: every real root of a
/// real-rooted polynomial with these leading coefficients lies inside.
pub fn samuelson_interval(
    a_n: &BigInt,
    a_n1: &BigInt,
    a_n2: &BigInt,
    n: usize,
    precision_bits: u32,
) -> Result<FloatInterval> {
    let (lo, hi) = samuelson_endpoints(a_n, a_n1, a_n2, n, precision_bits)?;
    Ok(FloatInterval::new(
        lo.lo().clone(),
        hi.hi().clone(),
        precision_bits,
    ))
}

/// The new lower bound: reciprocal of the Samuelson upper endpoint of
/// `p_n`, cross-checked against the printed φ-power expression. Both routes
/// must overlap; the intersection is returned.
pub fn lower_bound_thm41(n: usize, precision_bits: u32) -> Result<FloatInterval> {
    if n < 2 {
        return Err(Error::domain("lower bound requires n >= 2"));
    }
    // route 1: exact integer coefficients into the Samuelson endpoint
    let tr = trace_closed_form(n)?;
    let frob2 = frobenius_square_exact(n)?;
    let a_n1 = -&tr;
    let twice = &tr * &tr - frob2;
    debug_assert!(twice.mod_floor(&BigInt::from(2)).is_zero());
    let a_n2 = twice / BigInt::from(2);
    let (_, upper_endpoint) = samuelson_endpoints(&BigInt::one(), &a_n1, &a_n2, n, precision_bits)?;
    let route_samuelson = upper_endpoint.recip()?;

    // route 2: the printed closed form in φ powers
    let sigma = sign_term(n);
    let k = 2 * n as i64;
    let p2 = golden_power(k, precision_bits);
    let m2 = golden_power(-k, precision_bits);
    let p4 = golden_power(2 * k, precision_bits);
    let m4 = golden_power(-2 * k, precision_bits);
    let nn = n as i64;
    let inner = FloatInterval::from_rational(
        &(rat(4 * sigma, nn - 1) + rat(3 * sigma + 17, 2)),
        precision_bits,
    )
    .add(
        &sqrt5(precision_bits)
            .scale_rational(&rat(2 * nn * nn, nn - 1))
            .mul(&p2.sub(&m2)),
    )
    .add(
        &p2.add(&m2)
            .scale_rational(&(rat(sigma - 7, 1) - rat(2, nn - 1))),
    )
    .add(&p4)
    .add(&m4);
    if !inner.is_positive() {
        return Err(Error::domain(format!(
            "inner radicand not certainly positive at n = {n}; raise the precision"
        )));
    }
    let denom = FloatInterval::from_rational(&(rint(1) + rat(sigma - 5, 10 * nn)), precision_bits)
        .add(&p2.add(&m2).scale_rational(&rat(1, 5 * nn)))
        .add(&inner.sqrt()?.scale_rational(&rat(nn - 1, 5 * nn)));
    let route_printed = denom.recip()?;

    route_samuelson.intersect(&route_printed).ok_or_else(|| {
        Error::domain(format!(
            "lower-bound routes disagree at n = {n}: {route_samuelson} vs {route_printed}"
        ))
    })
}

/// All bound values for one `n`.
#[derive(Debug, Clone)]
pub struct BoundsRow {
    pub n: usize,
    pub loewy_lo: BigRational,
    pub loewy_hi: BigRational,
    pub frob_lower: FloatInterval,
    pub thm31_upper: FloatInterval,
    pub thm41_lower: FloatInterval,
}

pub fn bounds_row(n: usize, precision_bits: u32, variant: Thm31Variant) -> Result<BoundsRow> {
    if n < 2 {
        return Err(Error::domain("bounds row requires n >= 2"));
    }
    let (loewy_lo, loewy_hi) = loewy_bounds(n)?;
    Ok(BoundsRow {
        n,
        loewy_lo,
        loewy_hi,
        frob_lower: lower_bound_frobenius(n, precision_bits)?,
        thm31_upper: upper_bound_thm31(n, precision_bits, variant)?,
        thm41_lower: lower_bound_thm41(n, precision_bits)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::charpoly::leading_coeffs;
    use crate::matrix::build_z;

    #[test]
    fn golden_power_examples() {
        let one = golden_power(0, 128);
        assert_eq!(one.lo_rational(), rint(1));
        assert_eq!(one.hi_rational(), rint(1));
        let p2 = golden_power(2, 128);
        assert!(p2.lo_rational() > rat(26180339887, 10_000_000_000));
        assert!(p2.hi_rational() < rat(26180339888, 10_000_000_000));
        let m2 = golden_power(-2, 128);
        assert!(m2.lo_rational() > rat(3819660112, 10_000_000_000));
        assert!(m2.hi_rational() < rat(3819660113, 10_000_000_000));
    }

    #[test]
    fn trace_examples() {
        assert_eq!(trace_closed_form(2).unwrap(), BigInt::from(3));
        assert_eq!(trace_closed_form(3).unwrap(), BigInt::from(6));
        assert_eq!(trace_closed_form(4).unwrap(), BigInt::from(13));
    }

    #[test]
    fn trace_matches_matrix_and_phi_form() {
        for n in 1..=60 {
            let closed = trace_closed_form(n).unwrap();
            assert_eq!(closed, build_z(n).unwrap().trace(), "trace at n = {n}");
            let phi = trace_phi_form(n, 192).unwrap();
            assert!(
                phi.contains_rational(&BigRational::from(closed.clone())),
                "φ-form misses exact trace at n = {n}"
            );
        }
    }

    #[test]
    fn frobenius_square_exact_matches_matrix() {
        for n in 1..=60 {
            assert_eq!(
                frobenius_square_exact(n).unwrap(),
                build_z(n).unwrap().frobenius_square(),
                "Frobenius square at n = {n}"
            );
        }
    }

    #[test]
    fn frobenius_closed_form_small_values() {
        // ‖Z_1‖_F = 1, ‖Z_2‖_F = √7, ‖Z_3‖_F = √26
        let f1 = frobenius_closed_form(1, 256).unwrap();
        assert!(f1.contains_sqrt_of(&BigInt::one()));
        let f2 = frobenius_closed_form(2, 256).unwrap();
        assert!(f2.contains_sqrt_of(&BigInt::from(7)));
        let f3 = frobenius_closed_form(3, 256).unwrap();
        assert!(f3.contains_sqrt_of(&BigInt::from(26)));
    }

    #[test]
    fn frobenius_lower_bound_values() {
        // 1/√7 = 0.3779644730...
        let b2 = lower_bound_frobenius(2, 256).unwrap();
        assert!(b2.lo_rational() > rat(3779644730, 10_000_000_000));
        assert!(b2.hi_rational() < rat(3779644731, 10_000_000_000));
        // 1/√26 = 0.1961161351...
        let b3 = lower_bound_frobenius(3, 256).unwrap();
        assert!(b3.lo_rational() > rat(1961161351, 10_000_000_000));
        assert!(b3.hi_rational() < rat(1961161352, 10_000_000_000));
        let b1 = lower_bound_frobenius(1, 256).unwrap();
        assert!(b1.contains_rational(&rint(1)));
    }

    #[test]
    fn loewy_examples() {
        assert_eq!(loewy_bounds(1).unwrap(), (rint(1), rint(1)));
        assert_eq!(loewy_bounds(2).unwrap(), (rat(1, 3), rat(1, 2)));
        assert_eq!(loewy_bounds(3).unwrap(), (rat(1, 6), rat(1, 4)));
    }

    #[test]
    fn thm31_as_stated_values() {
        // n = 2: 1/√6 = 0.4082482904...
        let b = upper_bound_thm31(2, 256, Thm31Variant::AsStated).unwrap();
        assert!(b.lo_rational() > rat(4082482904, 10_000_000_000));
        assert!(b.hi_rational() < rat(4082482905, 10_000_000_000));
        assert!(upper_bound_thm31(1, 256, Thm31Variant::AsStated).is_err());
    }

    #[test]
    fn thm31_strict_variant_below_as_stated() {
        // n = 2: 1/√(7 - 16/25) = 1/√6.36 ≈ 0.39654, still above c₂
        let strict = upper_bound_thm31(2, 256, Thm31Variant::Strict).unwrap();
        assert!(strict.lo_rational() > rat(39, 100));
        assert!(strict.hi_rational() < rat(40, 100));
        let stated = upper_bound_thm31(2, 256, Thm31Variant::AsStated).unwrap();
        assert!(strict.certainly_lt(&stated));
        // c₂ = 0.3819660113 < strict bound
        assert!(strict.lo_rational() > rat(3819660113, 10_000_000_000));
    }

    #[test]
    fn samuelson_double_root_is_tight() {
        // λ² - 2λ + 1: both endpoints collapse to 1
        let iv =
            samuelson_interval(&BigInt::one(), &BigInt::from(-2), &BigInt::one(), 2, 256).unwrap();
        assert!(iv.contains_rational(&rint(1)));
        assert!(iv.width() < rat(1, 1 << 30));
    }

    #[test]
    fn samuelson_quadratic_is_exact_roots() {
        // λ² - 3λ + 1: endpoints are the roots (3±√5)/2
        let (lo, hi) =
            samuelson_endpoints(&BigInt::one(), &BigInt::from(-3), &BigInt::one(), 2, 256).unwrap();
        assert!(lo.lo_rational() > rat(3819660112, 10_000_000_000));
        assert!(lo.hi_rational() < rat(3819660113, 10_000_000_000));
        assert!(hi.lo_rational() > rat(26180339887, 10_000_000_000));
        assert!(hi.hi_rational() < rat(26180339888, 10_000_000_000));
    }

    #[test]
    fn samuelson_contains_p3_roots() {
        // p₃ coefficients (1, -6, 5): bracket [2 - (2/3)√21, 2 + (2/3)√21]
        let iv = samuelson_interval(&BigInt::one(), &BigInt::from(-6), &BigInt::from(5), 3, 256)
            .unwrap();
        // roots of p₃ are ≈ 0.308, 0.643, 5.049
        for (num, den) in [(308i64, 1000i64), (643, 1000), (5049, 1000)] {
            assert!(iv.contains_rational(&rat(num, den)));
        }
        // endpoints 2 ± (2/3)√21 ≈ -1.055, 5.055
        assert!(iv.lo_rational() < rat(-105, 100));
        assert!(iv.hi_rational() > rat(505, 100));
        assert!(iv.hi_rational() < rat(506, 100));
    }

    #[test]
    fn samuelson_rejects_negative_discriminant() {
        // λ² + 1 is not real-rooted
        assert!(
            samuelson_interval(&BigInt::one(), &BigInt::zero(), &BigInt::one(), 2, 128).is_err()
        );
    }

    #[test]
    fn thm41_equals_c2() {
        // at n = 2 the bound coincides with c₂ = (3-√5)/2
        let b = lower_bound_thm41(2, 256).unwrap();
        assert!(b.lo_rational() > rat(3819660112, 10_000_000_000));
        assert!(b.hi_rational() < rat(3819660113, 10_000_000_000));
    }

    #[test]
    fn thm41_reference_digits() {
        // 0.1978219619 at n = 3, 0.0008622030 at n = 9 (±1 ulp here; exact
        // rounding is pinned by the table-reproduction suite)
        let b3 = lower_bound_thm41(3, 512).unwrap();
        assert!(b3.lo_rational() > rat(1978219618, 10_000_000_000));
        assert!(b3.hi_rational() < rat(1978219620, 10_000_000_000));
        let b9 = lower_bound_thm41(9, 512).unwrap();
        assert!(b9.lo_rational() > rat(8622029, 10_000_000_000));
        assert!(b9.hi_rational() < rat(8622031, 10_000_000_000));
    }

    #[test]
    fn thm41_beats_frobenius_lower_bound() {
        for n in 2..=40 {
            let frob = lower_bound_frobenius(n, 512).unwrap();
            let thm41 = lower_bound_thm41(n, 512).unwrap();
            assert!(
                frob.certainly_le(&thm41),
                "Frobenius bound above new bound at n = {n}"
            );
        }
    }

    #[test]
    fn samuelson_contains_every_root_enclosure() {
        // the bracket from p_n's own three leading coefficients contains
        // every certified root enclosure; at n = 2 the bracket endpoints
        // ARE the roots, so allow the enclosure's own width as slack
        let eps = BigRational::new(BigInt::one(), BigInt::from(10).pow(24u32));
        for n in 2..=40 {
            let (a_n, a_n1, a_n2) = leading_coeffs(n).unwrap();
            let iv = samuelson_interval(&a_n, &a_n1, &a_n2, n, 256).unwrap();
            let p = crate::charpoly::charpoly_recurrence(n).unwrap();
            let mut roots = crate::roots::isolate_roots(&p).unwrap();
            assert_eq!(roots.len(), n);
            for (k, r) in roots.iter_mut().enumerate() {
                r.refine_to_width(&eps);
                assert!(
                    *r.lo() >= iv.lo_rational() - &eps && *r.hi() <= iv.hi_rational() + &eps,
                    "root {k} of p_{n} escapes the Samuelson bracket"
                );
            }
        }
    }

    #[test]
    fn samuelson_from_leading_coeffs_contains_trace_mean() {
        // every Samuelson bracket contains tr/n, the mean of the roots
        for n in 2..=20 {
            let (a_n, a_n1, a_n2) = leading_coeffs(n).unwrap();
            let iv = samuelson_interval(&a_n, &a_n1, &a_n2, n, 256).unwrap();
            let mean = BigRational::new(trace_closed_form(n).unwrap(), BigInt::from(n));
            assert!(
                iv.contains_rational(&mean),
                "mean outside bracket at n = {n}"
            );
        }
    }
}
