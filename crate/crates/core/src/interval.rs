//! Arbitrary-precision floating intervals with outward rounding.
//!
//! Endpoints are dyadic numbers `mantissa · 2^exp`. Every operation rounds
//! the lower endpoint down and the upper endpoint up to the carried
//! precision, so an interval always contains the exact real value of the
//! expression it was built from. This is what lets the closed-form bound
//! evaluations (golden-ratio powers, square roots) certify inequalities.

use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::cmp::Ordering;
use std::fmt;

/// Rounding direction for scalar operations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Round {
    Down,
    Up,
}

/// An exact dyadic number `mantissa · 2^exp`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Dyadic {
    mantissa: BigInt,
    exp: i64,
}

impl Dyadic {
    pub fn new(mantissa: BigInt, exp: i64) -> Self {
        Dyadic { mantissa, exp }.normalized()
    }

    pub fn zero() -> Self {
        Dyadic {
            mantissa: BigInt::zero(),
            exp: 0,
        }
    }

    pub fn from_bigint(v: BigInt) -> Self {
        Dyadic {
            mantissa: v,
            exp: 0,
        }
        .normalized()
    }

    pub fn from_i64(v: i64) -> Self {
        Self::from_bigint(BigInt::from(v))
    }

    fn normalized(mut self) -> Self {
        if self.mantissa.is_zero() {
            self.exp = 0;
            return self;
        }
        let tz = self.mantissa.trailing_zeros().unwrap_or(0);
        if tz > 0 {
            self.mantissa >>= tz;
            self.exp += tz as i64;
        }
        self
    }

    pub fn is_zero(&self) -> bool {
        self.mantissa.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.mantissa.is_negative()
    }

    pub fn is_positive(&self) -> bool {
        self.mantissa.is_positive()
    }

    pub fn to_rational(&self) -> BigRational {
        if self.exp >= 0 {
            BigRational::from(&self.mantissa * (BigInt::one() << self.exp as u64))
        } else {
            BigRational::new(self.mantissa.clone(), BigInt::one() << (-self.exp) as u64)
        }
    }

    pub fn to_f64(&self) -> f64 {
        // lossy, for diagnostics only
        let bits = self.mantissa.bits() as i64;
        if bits > 900 {
            let shift = bits - 64;
            let head = (&self.mantissa >> shift as u64).to_string();
            head.parse::<f64>().unwrap_or(f64::NAN) * 2f64.powi((self.exp + shift) as i32)
        } else {
            self.mantissa.to_string().parse::<f64>().unwrap_or(f64::NAN)
                * 2f64.powi(self.exp as i32)
        }
    }

    /// Round to at most `prec` mantissa bits in direction `dir`.
    pub fn round(&self, prec: u32, dir: Round) -> Dyadic {
        let bits = self.mantissa.bits();
        if bits <= prec as u64 {
            return self.clone();
        }
        let shift = bits - prec as u64;
        let m = match dir {
            // BigInt >> rounds toward -inf
            Round::Down => &self.mantissa >> shift,
            Round::Up => -((-&self.mantissa) >> shift),
        };
        Dyadic {
            mantissa: m,
            exp: self.exp + shift as i64,
        }
        .normalized()
    }

    pub fn neg(&self) -> Dyadic {
        Dyadic {
            mantissa: -&self.mantissa,
            exp: self.exp,
        }
    }

    /// Exact sum (no rounding).
    pub fn add_exact(&self, other: &Dyadic) -> Dyadic {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        let (lo, hi) = if self.exp <= other.exp {
            (self, other)
        } else {
            (other, self)
        };
        let shift = (hi.exp - lo.exp) as u64;
        Dyadic {
            mantissa: (&hi.mantissa << shift) + &lo.mantissa,
            exp: lo.exp,
        }
        .normalized()
    }

    pub fn sub_exact(&self, other: &Dyadic) -> Dyadic {
        self.add_exact(&other.neg())
    }

    /// Exact product (no rounding).
    pub fn mul_exact(&self, other: &Dyadic) -> Dyadic {
        Dyadic {
            mantissa: &self.mantissa * &other.mantissa,
            exp: self.exp + other.exp,
        }
        .normalized()
    }

    /// Directed quotient with at least `prec` significant bits.
    pub fn div(&self, other: &Dyadic, prec: u32, dir: Round) -> Dyadic {
        assert!(!other.is_zero(), "division by zero dyadic");
        if self.is_zero() {
            return Dyadic::zero();
        }
        let na = self.mantissa.bits() as i64;
        let nb = other.mantissa.bits() as i64;
        let t = (prec as i64 + 2 + nb - na).max(0) as u64;
        let num = &self.mantissa << t;
        let q = match dir {
            Round::Down => num.div_floor(&other.mantissa),
            Round::Up => num.div_ceil(&other.mantissa),
        };
        Dyadic {
            mantissa: q,
            exp: self.exp - other.exp - t as i64,
        }
        .normalized()
        .round(prec, dir)
    }

    /// Directed square root; `self` must be nonnegative.
    pub fn sqrt(&self, prec: u32, dir: Round) -> Dyadic {
        assert!(!self.is_negative(), "sqrt of negative dyadic");
        if self.is_zero() {
            return Dyadic::zero();
        }
        let bits = self.mantissa.bits();
        let want = 2 * (prec as u64 + 2);
        let mut s = want.saturating_sub(bits) as i64;
        if (self.exp - s) % 2 != 0 {
            s += 1;
        }
        let m = &self.mantissa << s as u64;
        let e = self.exp - s;
        let r = m.sqrt();
        let m_out = match dir {
            Round::Down => r,
            Round::Up => {
                if &r * &r == m {
                    r
                } else {
                    r + 1
                }
            }
        };
        Dyadic {
            mantissa: m_out,
            exp: e / 2,
        }
        .normalized()
        .round(prec, dir)
    }

    /// Directed conversion of an exact rational.
    pub fn from_rational(q: &BigRational, prec: u32, dir: Round) -> Dyadic {
        let num = Dyadic::from_bigint(q.numer().clone());
        let den = Dyadic::from_bigint(q.denom().clone());
        num.div(&den, prec, dir)
    }

    pub fn cmp_dyadic(&self, other: &Dyadic) -> Ordering {
        let diff = self.sub_exact(other);
        if diff.mantissa.is_zero() {
            Ordering::Equal
        } else if diff.mantissa.is_positive() {
            Ordering::Greater
        } else {
            Ordering::Less
        }
    }
}

impl PartialOrd for Dyadic {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp_dyadic(other))
    }
}

impl fmt::Display for Dyadic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}*2^{}", self.mantissa, self.exp)
    }
}

/// Closed interval `[lo, hi]` of dyadics, outward-rounded to
/// `precision_bits` on every operation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FloatInterval {
    lo: Dyadic,
    hi: Dyadic,
    precision_bits: u32,
}

impl FloatInterval {
    pub fn new(lo: Dyadic, hi: Dyadic, precision_bits: u32) -> Self {
        debug_assert!(lo.cmp_dyadic(&hi) != Ordering::Greater, "inverted interval");
        FloatInterval {
            lo,
            hi,
            precision_bits,
        }
    }

    pub fn singleton_int(v: i64, precision_bits: u32) -> Self {
        let d = Dyadic::from_i64(v);
        FloatInterval::new(d.clone(), d, precision_bits)
    }

    pub fn from_bigint(v: &BigInt, precision_bits: u32) -> Self {
        let d = Dyadic::from_bigint(v.clone());
        FloatInterval::new(d.clone(), d, precision_bits)
    }

    /// Tight outward enclosure of an exact rational.
    pub fn from_rational(q: &BigRational, precision_bits: u32) -> Self {
        let lo = Dyadic::from_rational(q, precision_bits, Round::Down);
        let hi = Dyadic::from_rational(q, precision_bits, Round::Up);
        FloatInterval::new(lo, hi, precision_bits)
    }

    /// Enclosure of the rational interval `[lo, hi]`.
    pub fn from_rational_bounds(lo: &BigRational, hi: &BigRational, precision_bits: u32) -> Self {
        debug_assert!(lo <= hi);
        FloatInterval::new(
            Dyadic::from_rational(lo, precision_bits, Round::Down),
            Dyadic::from_rational(hi, precision_bits, Round::Up),
            precision_bits,
        )
    }

    pub fn lo(&self) -> &Dyadic {
        &self.lo
    }

    pub fn hi(&self) -> &Dyadic {
        &self.hi
    }

    pub fn precision_bits(&self) -> u32 {
        self.precision_bits
    }

    pub fn lo_rational(&self) -> BigRational {
        self.lo.to_rational()
    }

    pub fn hi_rational(&self) -> BigRational {
        self.hi.to_rational()
    }

    pub fn width(&self) -> BigRational {
        self.hi.to_rational() - self.lo.to_rational()
    }

    pub fn midpoint(&self) -> BigRational {
        (self.hi.to_rational() + self.lo.to_rational()) / BigRational::from(BigInt::from(2))
    }

    pub fn contains_rational(&self, q: &BigRational) -> bool {
        &self.lo.to_rational() <= q && q <= &self.hi.to_rational()
    }

    pub fn contains_zero(&self) -> bool {
        !self.lo.is_positive() && !self.hi.is_negative()
    }

    pub fn is_positive(&self) -> bool {
        self.lo.is_positive()
    }

    fn prec(&self, other: &FloatInterval) -> u32 {
        self.precision_bits.max(other.precision_bits)
    }

    pub fn neg(&self) -> FloatInterval {
        FloatInterval::new(self.hi.neg(), self.lo.neg(), self.precision_bits)
    }

    pub fn add(&self, other: &FloatInterval) -> FloatInterval {
        let p = self.prec(other);
        FloatInterval::new(
            self.lo.add_exact(&other.lo).round(p, Round::Down),
            self.hi.add_exact(&other.hi).round(p, Round::Up),
            p,
        )
    }

    pub fn sub(&self, other: &FloatInterval) -> FloatInterval {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &FloatInterval) -> FloatInterval {
        let p = self.prec(other);
        let cands = [
            self.lo.mul_exact(&other.lo),
            self.lo.mul_exact(&other.hi),
            self.hi.mul_exact(&other.lo),
            self.hi.mul_exact(&other.hi),
        ];
        let mut lo = cands[0].clone();
        let mut hi = cands[0].clone();
        for c in &cands[1..] {
            if c.cmp_dyadic(&lo) == Ordering::Less {
                lo = c.clone();
            }
            if c.cmp_dyadic(&hi) == Ordering::Greater {
                hi = c.clone();
            }
        }
        FloatInterval::new(lo.round(p, Round::Down), hi.round(p, Round::Up), p)
    }

    /// Reciprocal; the interval must not contain zero.
    pub fn recip(&self) -> Result<FloatInterval> {
        if self.contains_zero() {
            return Err(Error::domain("reciprocal of interval containing zero"));
        }
        let p = self.precision_bits;
        let one = Dyadic::from_i64(1);
        Ok(FloatInterval::new(
            one.div(&self.hi, p, Round::Down),
            one.div(&self.lo, p, Round::Up),
            p,
        ))
    }

    pub fn div(&self, other: &FloatInterval) -> Result<FloatInterval> {
        Ok(self.mul(&other.recip()?))
    }

    /// Square root; the interval must be nonnegative.
    pub fn sqrt(&self) -> Result<FloatInterval> {
        if self.lo.is_negative() {
            return Err(Error::domain("sqrt of interval with negative lower end"));
        }
        let p = self.precision_bits;
        Ok(FloatInterval::new(
            self.lo.sqrt(p, Round::Down),
            self.hi.sqrt(p, Round::Up),
            p,
        ))
    }

    /// Integer power of a strictly positive interval (negative exponents
    /// take the reciprocal).
    pub fn pow_i(&self, k: i64) -> Result<FloatInterval> {
        if !self.is_positive() {
            return Err(Error::domain("pow_i requires a strictly positive interval"));
        }
        if k == 0 {
            return Ok(FloatInterval::singleton_int(1, self.precision_bits));
        }
        let mut e = k.unsigned_abs();
        let mut base = self.clone();
        let mut acc = FloatInterval::singleton_int(1, self.precision_bits);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        if k < 0 {
            acc.recip()
        } else {
            Ok(acc)
        }
    }

    pub fn scale_rational(&self, q: &BigRational) -> FloatInterval {
        self.mul(&FloatInterval::from_rational(q, self.precision_bits))
    }

    pub fn intersect(&self, other: &FloatInterval) -> Option<FloatInterval> {
        let lo = if self.lo.cmp_dyadic(&other.lo) == Ordering::Greater {
            self.lo.clone()
        } else {
            other.lo.clone()
        };
        let hi = if self.hi.cmp_dyadic(&other.hi) == Ordering::Less {
            self.hi.clone()
        } else {
            other.hi.clone()
        };
        if lo.cmp_dyadic(&hi) == Ordering::Greater {
            None
        } else {
            Some(FloatInterval::new(lo, hi, self.prec(other)))
        }
    }

    pub fn overlaps(&self, other: &FloatInterval) -> bool {
        self.intersect(other).is_some()
    }

    /// Conservative `self <= other`: true only when certain.
    pub fn certainly_le(&self, other: &FloatInterval) -> bool {
        self.hi.cmp_dyadic(&other.lo) != Ordering::Greater
    }

    pub fn certainly_lt(&self, other: &FloatInterval) -> bool {
        self.hi.cmp_dyadic(&other.lo) == Ordering::Less
    }

    /// True if the interval certainly contains `sqrt(n)` for integer n >= 0.
    pub fn contains_sqrt_of(&self, n: &BigInt) -> bool {
        if self.lo.is_negative() || n.is_negative() {
            return false;
        }
        let lo2 = self.lo.mul_exact(&self.lo).to_rational();
        let hi2 = self.hi.mul_exact(&self.hi).to_rational();
        let n = BigRational::from(n.clone());
        lo2 <= n && n <= hi2
    }

    pub fn to_f64_pair(&self) -> (f64, f64) {
        (self.lo.to_f64(), self.hi.to_f64())
    }
}

impl fmt::Display for FloatInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (a, b) = self.to_f64_pair();
        write!(f, "[{a:e}, {b:e}]")
    }
}

/// Enclosure of `√5` at the requested precision.
pub fn sqrt5(precision_bits: u32) -> FloatInterval {
    FloatInterval::singleton_int(5, precision_bits)
        .sqrt()
        .expect("5 >= 0")
}

/// Enclosure of the golden ratio `φ = (1 + √5)/2`.
pub fn golden_ratio(precision_bits: u32) -> FloatInterval {
    let one = FloatInterval::singleton_int(1, precision_bits);
    let two = FloatInterval::singleton_int(2, precision_bits);
    one.add(&sqrt5(precision_bits)).div(&two).expect("2 != 0")
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn rounding_directions() {
        // 1/3 at 8 bits must straddle the true value
        let third = rat(1, 3);
        let lo = Dyadic::from_rational(&third, 8, Round::Down);
        let hi = Dyadic::from_rational(&third, 8, Round::Up);
        assert!(lo.to_rational() < third);
        assert!(third < hi.to_rational());
        assert!(lo.cmp_dyadic(&hi) == Ordering::Less);
        // negative value: directions still mean numeric order
        let mthird = rat(-1, 3);
        let lo = Dyadic::from_rational(&mthird, 8, Round::Down);
        let hi = Dyadic::from_rational(&mthird, 8, Round::Up);
        assert!(lo.to_rational() < mthird);
        assert!(mthird < hi.to_rational());
    }

    #[test]
    fn exact_values_round_trip() {
        let x = Dyadic::from_rational(&rat(3, 4), 64, Round::Down);
        assert_eq!(x.to_rational(), rat(3, 4));
    }

    #[test]
    fn sqrt_brackets() {
        let two = Dyadic::from_i64(2);
        let lo = two.sqrt(64, Round::Down);
        let hi = two.sqrt(64, Round::Up);
        let two_r = rat(2, 1);
        assert!(lo.to_rational() * lo.to_rational() < two_r);
        assert!(hi.to_rational() * hi.to_rational() > two_r);
        // perfect square is exact in both directions
        let nine = Dyadic::from_i64(9);
        assert_eq!(nine.sqrt(64, Round::Down).to_rational(), rat(3, 1));
        assert_eq!(nine.sqrt(64, Round::Up).to_rational(), rat(3, 1));
    }

    #[test]
    fn golden_ratio_value() {
        let phi = golden_ratio(128);
        // φ satisfies φ² = φ + 1
        let sq = phi.mul(&phi);
        let plus1 = phi.add(&FloatInterval::singleton_int(1, 128));
        assert!(sq.overlaps(&plus1));
        assert!(phi.width() < rat(1, 1_000_000_000));
    }

    #[test]
    fn interval_mul_signs() {
        let a = FloatInterval::from_rational_bounds(&rat(-2, 1), &rat(3, 1), 64);
        let b = FloatInterval::from_rational_bounds(&rat(-5, 1), &rat(1, 1), 64);
        let c = a.mul(&b);
        // extremes: (-2)(-5)=10, (3)(-5)=-15
        assert_eq!(c.lo_rational(), rat(-15, 1));
        assert_eq!(c.hi_rational(), rat(10, 1));
    }

    #[test]
    fn recip_requires_sign() {
        let spans_zero = FloatInterval::from_rational_bounds(&rat(-1, 1), &rat(1, 1), 64);
        assert!(spans_zero.recip().is_err());
        let pos = FloatInterval::from_rational_bounds(&rat(1, 3), &rat(1, 2), 64);
        let r = pos.recip().unwrap();
        assert!(r.contains_rational(&rat(5, 2)));
        assert!(r.lo_rational() <= rat(2, 1));
        assert!(r.hi_rational() >= rat(3, 1));
    }

    #[test]
    fn pow_small_cases() {
        let phi = golden_ratio(192);
        let p0 = phi.pow_i(0).unwrap();
        assert!(p0.contains_rational(&rat(1, 1)));
        assert_eq!(p0.width(), rat(0, 1));
        // φ² = φ + 1 = 2.6180339887...
        let p2 = phi.pow_i(2).unwrap();
        assert!(p2.lo_rational() > rat(2618033988, 1000000000));
        assert!(p2.hi_rational() < rat(2618033989, 1000000000));
        // φ⁻² = (3 - √5)/2 = 0.3819660112...
        let pm2 = phi.pow_i(-2).unwrap();
        assert!(pm2.lo_rational() > rat(3819660112, 10000000000));
        assert!(pm2.hi_rational() < rat(3819660113, 10000000000));
    }

    #[test]
    fn contains_sqrt() {
        let seven = BigInt::from(7);
        let s = FloatInterval::from_bigint(&seven, 128).sqrt().unwrap();
        assert!(s.contains_sqrt_of(&seven));
        assert!(!s.contains_sqrt_of(&BigInt::from(8)));
    }

    proptest! {
        #[test]
        fn arithmetic_contains_exact(
            an in -1000i64..1000, ad in 1i64..1000,
            bn in -1000i64..1000, bd in 1i64..1000,
            prec in 8u32..64)
        {
            let a = rat(an, ad);
            let b = rat(bn, bd);
            let ia = FloatInterval::from_rational(&a, prec);
            let ib = FloatInterval::from_rational(&b, prec);
            prop_assert!(ia.add(&ib).contains_rational(&(&a + &b)));
            prop_assert!(ia.sub(&ib).contains_rational(&(&a - &b)));
            prop_assert!(ia.mul(&ib).contains_rational(&(&a * &b)));
            if bn != 0 && !ib.contains_zero() {
                prop_assert!(ia.div(&ib).unwrap().contains_rational(&(&a / &b)));
            }
        }

        #[test]
        fn sqrt_contains_exact_square(v in 0i64..100_000, prec in 8u32..96) {
            let x = BigInt::from(v);
            let s = FloatInterval::from_bigint(&x, prec).sqrt().unwrap();
            prop_assert!(s.contains_sqrt_of(&x));
        }

        #[test]
        fn pow_contains_exact(n in 1i64..50, d in 1i64..50, k in -6i64..7, prec in 24u32..64) {
            let q = rat(n, d);
            let iq = FloatInterval::from_rational(&q, prec);
            let powed = iq.pow_i(k).unwrap();
            let mut exact = BigRational::one();
            for _ in 0..k.unsigned_abs() {
                exact *= &q;
            }
            if k < 0 {
                exact = exact.recip();
            }
            prop_assert!(powed.contains_rational(&exact));
        }
    }
}
