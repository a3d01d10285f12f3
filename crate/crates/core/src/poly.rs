//! Dense univariate polynomials with exact `BigInt` coefficients.
//!
//! Everything downstream (characteristic polynomials, Sturm chains, root
//! isolation) works over this type; no floating point enters until the
//! final interval enclosures.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;

/// Coefficients ascending by degree; the zero polynomial is the empty list.
/// Invariant: the last stored coefficient is nonzero.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    pub fn zero() -> Self {
        IntPolynomial { coeffs: Vec::new() }
    }

    pub fn constant(c: BigInt) -> Self {
        Self::new(vec![c])
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// The monomial `c·λ^k`.
    pub fn monomial(c: BigInt, k: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = c;
        IntPolynomial { coeffs }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn leading_coeff(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading_coeff().is_some_and(One::is_one)
    }

    pub fn eval_rational(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + BigRational::from(c.clone());
        }
        acc
    }

    pub fn eval_int(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Exact sign of `p(num/den)` for `den > 0`, via the homogeneous value
    /// `Σ c_i num^i den^{d-i}` (no rational reduction).
    pub fn sign_at_rational(&self, num: &BigInt, den: &BigInt) -> i8 {
        debug_assert!(den.is_positive());
        let d = match self.degree() {
            None => return 0,
            Some(d) => d,
        };
        let mut acc = self.coeffs[d].clone();
        let mut den_pow = BigInt::one();
        for i in (0..d).rev() {
            den_pow *= den;
            acc = acc * num + &self.coeffs[i] * &den_pow;
        }
        sign_of(&acc)
    }

    /// Sign of `p(x)` as `x -> +inf` (or `-inf` with `positive = false`).
    pub fn sign_at_infinity(&self, positive: bool) -> i8 {
        match self.degree() {
            None => 0,
            Some(d) => {
                let lead = sign_of(&self.coeffs[d]);
                if positive || d % 2 == 0 {
                    lead
                } else {
                    -lead
                }
            }
        }
    }

    pub fn derivative(&self) -> IntPolynomial {
        if self.coeffs.len() <= 1 {
            return Self::zero();
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * BigInt::from(i))
            .collect();
        Self::new(coeffs)
    }

    pub fn neg(&self) -> IntPolynomial {
        IntPolynomial {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn add(&self, other: &IntPolynomial) -> IntPolynomial {
        let len = self.coeffs.len().max(other.coeffs.len());
        let mut coeffs = Vec::with_capacity(len);
        for i in 0..len {
            coeffs.push(self.coeff(i) + other.coeff(i));
        }
        Self::new(coeffs)
    }

    pub fn sub(&self, other: &IntPolynomial) -> IntPolynomial {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Self::new(coeffs)
    }

    pub fn scale(&self, k: &BigInt) -> IntPolynomial {
        if k.is_zero() {
            return Self::zero();
        }
        IntPolynomial {
            coeffs: self.coeffs.iter().map(|c| c * k).collect(),
        }
    }

    /// `self / k` where every coefficient is divisible by `k`.
    pub fn divexact_scalar(&self, k: &BigInt) -> IntPolynomial {
        assert!(!k.is_zero());
        IntPolynomial {
            coeffs: self
                .coeffs
                .iter()
                .map(|c| {
                    let (q, r) = c.div_rem(k);
                    debug_assert!(r.is_zero(), "divexact_scalar: nonzero remainder");
                    q
                })
                .collect(),
        }
    }

    /// Positive gcd of the coefficients; zero for the zero polynomial.
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// `self` divided by its content (leading sign preserved).
    pub fn primitive_part(&self) -> IntPolynomial {
        let c = self.content();
        if c.is_zero() || c.is_one() {
            return self.clone();
        }
        self.divexact_scalar(&c)
    }

    /// Pseudo-remainder: `rem(lc(g)^{deg f - deg g + 1} · f, g)`, the classic
    /// fraction-free remainder. Requires `deg f >= deg g`, `g` nonzero.
    pub fn pseudo_rem(&self, g: &IntPolynomial) -> IntPolynomial {
        let df = self.degree().expect("pseudo_rem: zero dividend");
        let dg = g.degree().expect("pseudo_rem: zero divisor");
        assert!(df >= dg);
        let lg = g.leading_coeff().unwrap().clone();
        let mut rem = self.coeffs.clone();
        for step in (dg..=df).rev() {
            // r <- lc(g)·r - r[step]·g·x^{step-dg}, fraction-free
            let lead = rem[step].clone();
            for c in rem.iter_mut().take(step) {
                *c *= &lg;
            }
            if !lead.is_zero() {
                for j in 0..dg {
                    rem[step - dg + j] -= &lead * &g.coeffs[j];
                }
            }
            rem[step] = BigInt::zero();
        }
        rem.truncate(dg);
        Self::new(rem)
    }

    /// Exact polynomial division; panics if `g` does not divide `self`.
    pub fn divexact(&self, g: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() {
            return Self::zero();
        }
        let df = self.degree().unwrap();
        let dg = g.degree().expect("divexact: zero divisor");
        assert!(df >= dg, "divexact: divisor degree too high");
        let lg = g.leading_coeff().unwrap();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); df - dg + 1];
        for step in (dg..=df).rev() {
            let (q, r) = rem[step].div_rem(lg);
            assert!(r.is_zero(), "divexact: leading coefficient not divisible");
            for j in 0..dg {
                let t = &q * &g.coeffs[j];
                rem[step - dg + j] -= t;
            }
            rem[step] = BigInt::zero();
            quot[step - dg] = q;
        }
        assert!(rem.iter().all(Zero::is_zero), "divexact: nonzero remainder");
        Self::new(quot)
    }

    /// Primitive positive gcd via a primitive pseudo-remainder sequence.
    pub fn gcd(&self, other: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() {
            return normalize_gcd(other.clone());
        }
        if other.is_zero() {
            return normalize_gcd(self.clone());
        }
        let (mut a, mut b) = (self.primitive_part(), other.primitive_part());
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        loop {
            if b.is_zero() {
                return normalize_gcd(a);
            }
            if b.degree() == Some(0) {
                return IntPolynomial::constant(BigInt::one());
            }
            let r = a.pseudo_rem(&b).primitive_part();
            a = b;
            b = r;
        }
    }

    /// The squarefree part `self / gcd(self, self')`, primitive.
    pub fn squarefree_part(&self) -> IntPolynomial {
        if self.degree().is_none_or(|d| d <= 1) {
            return self.primitive_part();
        }
        let g = self.gcd(&self.derivative());
        if g.degree() == Some(0) {
            self.primitive_part()
        } else {
            self.divexact_by_rational_factor(&g)
        }
    }

    /// `self / g` when `g` divides `self` over ℚ (content mismatch allowed):
    /// divides the primitive parts, then restores nothing — result primitive.
    fn divexact_by_rational_factor(&self, g: &IntPolynomial) -> IntPolynomial {
        let num = self.primitive_part();
        let den = g.primitive_part();
        // over ℚ den | num, and both primitive, so den | num over ℤ (Gauss)
        num.divexact(&den)
    }

    /// True if gcd(self, self') is constant.
    pub fn is_squarefree(&self) -> bool {
        match self.degree() {
            None => false,
            Some(0) | Some(1) => true,
            _ => self.gcd(&self.derivative()).degree() == Some(0),
        }
    }
}

fn normalize_gcd(p: IntPolynomial) -> IntPolynomial {
    let p = p.primitive_part();
    if p.leading_coeff().is_some_and(Signed::is_negative) {
        p.neg()
    } else {
        p
    }
}

pub(crate) fn sign_of(x: &BigInt) -> i8 {
    if x.is_zero() {
        0
    } else if x.is_positive() {
        1
    } else {
        -1
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if first {
                write!(f, "{c}")?;
                first = false;
            } else if c.is_negative() {
                write!(f, " - {}", -c)?;
            } else {
                write!(f, " + {c}")?;
            }
            match i {
                0 => {}
                1 => write!(f, "*x")?,
                _ => write!(f, "*x^{i}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(v: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64(v)
    }

    #[test]
    fn trims_leading_zeros() {
        let q = p(&[1, 2, 0, 0]);
        assert_eq!(q.degree(), Some(1));
    }

    #[test]
    fn zero_polynomial() {
        assert!(p(&[]).is_zero());
        assert!(p(&[0, 0]).is_zero());
        assert_eq!(p(&[]).degree(), None);
    }

    #[test]
    fn eval_and_sign() {
        // p = x^2 - 3x + 1
        let q = p(&[1, -3, 1]);
        assert_eq!(q.eval_int(&BigInt::from(0)), BigInt::from(1));
        assert_eq!(q.eval_int(&BigInt::from(3)), BigInt::from(1));
        // p(1/2) = 1/4 - 3/2 + 1 = -1/4
        assert_eq!(q.sign_at_rational(&BigInt::from(1), &BigInt::from(2)), -1);
        assert_eq!(q.sign_at_rational(&BigInt::from(3), &BigInt::from(1)), 1);
        // root at rational point is reported as 0: p = (2x-1)(x-1)
        let r = p(&[1, -3, 2]);
        assert_eq!(r.sign_at_rational(&BigInt::from(1), &BigInt::from(2)), 0);
    }

    #[test]
    fn sign_at_infinity() {
        let q = p(&[1, -3, 1]);
        assert_eq!(q.sign_at_infinity(true), 1);
        assert_eq!(q.sign_at_infinity(false), 1);
        let c = p(&[0, 1]); // x
        assert_eq!(c.sign_at_infinity(false), -1);
    }

    #[test]
    fn pseudo_rem_matches_rational_remainder() {
        // f = x^3 - 2x + 5, g = 2x^2 + 1; rem over Q is -(5/2)x + 5... times lc^2
        let f = p(&[5, -2, 0, 1]);
        let g = p(&[1, 0, 2]);
        let r = f.pseudo_rem(&g);
        // lc(g)^{3-2+1} f mod g = 4f mod g: 4x^3 - 8x + 20 = (2x)(2x^2+1) - 10x + 20
        assert_eq!(r, p(&[20, -10]));
    }

    #[test]
    fn divexact_round_trip() {
        let a = p(&[1, -3, 1]);
        let b = p(&[-7, 2, 5]);
        let prod = a.mul(&b);
        assert_eq!(prod.divexact(&a), b);
        assert_eq!(prod.divexact(&b), a);
    }

    #[test]
    fn gcd_of_products() {
        let a = p(&[1, 1]); // x + 1
        let b = p(&[-2, 1]); // x - 2
        let c = p(&[3, 0, 1]); // x^2 + 3
        let g = a.mul(&b).gcd(&a.mul(&c));
        assert_eq!(g, a);
    }

    #[test]
    fn squarefree_part_strips_multiplicity() {
        // (x-1)^2 (x+2)
        let sq = p(&[1, -1]).mul(&p(&[1, -1])).mul(&p(&[2, 1]));
        let sf = sq.squarefree_part();
        // primitive, roots {1, -2}: (x-1)(x+2) up to sign
        let expect = p(&[-1, 1]).mul(&p(&[2, 1]));
        assert!(sf == expect || sf == expect.neg());
        assert!(sf.is_squarefree());
    }

    #[test]
    fn content_and_primitive() {
        let q = p(&[6, -9, 12]);
        assert_eq!(q.content(), BigInt::from(3));
        assert_eq!(q.primitive_part(), p(&[2, -3, 4]));
        let neg = p(&[-4, -8]);
        assert_eq!(neg.content(), BigInt::from(4));
        assert_eq!(neg.primitive_part(), p(&[-1, -2]));
    }

    proptest! {
        #[test]
        fn mul_respects_evaluation(a in proptest::collection::vec(-20i64..20, 0..6),
                                   b in proptest::collection::vec(-20i64..20, 0..6),
                                   x in -10i64..10) {
            let (pa, pb) = (p(&a), p(&b));
            let x = BigInt::from(x);
            let lhs = pa.mul(&pb).eval_int(&x);
            let rhs = pa.eval_int(&x) * pb.eval_int(&x);
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn gcd_divides_both(a in proptest::collection::vec(-9i64..9, 1..5),
                            b in proptest::collection::vec(-9i64..9, 1..5)) {
            let (pa, pb) = (p(&a), p(&b));
            prop_assume!(!pa.is_zero() && !pb.is_zero());
            let g = pa.gcd(&pb);
            // remainder of primitive parts by g must vanish
            if g.degree().unwrap_or(0) > 0 {
                let ra = pa.primitive_part().pseudo_rem(&g);
                let rb = pb.primitive_part().pseudo_rem(&g);
                prop_assert!(ra.is_zero());
                prop_assert!(rb.is_zero());
            }
        }

        #[test]
        fn homogeneous_sign_matches_rational_eval(
            a in proptest::collection::vec(-50i64..50, 1..7),
            num in -30i64..30, den in 1i64..30)
        {
            let q = p(&a);
            let x = BigRational::new(BigInt::from(num), BigInt::from(den));
            let v = q.eval_rational(&x);
            let s = q.sign_at_rational(&BigInt::from(num), &BigInt::from(den));
            let expect = if v.is_zero() { 0 } else if v > BigRational::zero() { 1 } else { -1 };
            prop_assert_eq!(s, expect);
        }
    }
}
