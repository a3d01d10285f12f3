//! Characteristic polynomials `p_n = det(λI - Z_n)`.
//!
//! Two independent routes are kept side by side: a four-term polynomial
//! recurrence seeded with `p_1..p_4`, and a division-free Berkowitz
//! evaluation straight from the matrix. Their exact coefficient equality is
//! a standing cross-check. The closed-form evaluation avoids the square
//! roots of the printed formula by tracking the conjugate power sums
//! `s_k = A^k + B^k` through their integer-coefficient recurrence.

use crate::error::{Error, Result};
use crate::matrix::{build_z, SymmetricIntMatrix};
use crate::poly::IntPolynomial;
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Pow, Signed, Zero};
use std::sync::Mutex;

/// Cache of the memoized `p_1..p_k` prefix, capped by a byte budget since
/// coefficients grow without bound.
struct SeqCache {
    polys: Vec<IntPolynomial>,
    bytes: usize,
    budget: usize,
}

impl SeqCache {
    fn poly_bytes(p: &IntPolynomial) -> usize {
        p.coeffs()
            .iter()
            .map(|c| (c.bits() as usize) / 8 + 16)
            .sum()
    }
}

static SEQ: Mutex<Option<SeqCache>> = Mutex::new(None);
const DEFAULT_BUDGET: usize = 64 << 20;

/// Cap the memory held by the `p_n` memo (bytes).
pub fn set_charpoly_cache_budget(bytes: usize) {
    let mut guard = SEQ.lock().expect("charpoly cache poisoned");
    let cache = guard.get_or_insert_with(|| SeqCache {
        polys: Vec::new(),
        bytes: 0,
        budget: DEFAULT_BUDGET,
    });
    cache.budget = bytes;
    while cache.bytes > cache.budget && cache.polys.len() > 4 {
        let p = cache.polys.pop().unwrap();
        cache.bytes -= SeqCache::poly_bytes(&p);
    }
}

fn base_cases() -> [IntPolynomial; 4] {
    [
        IntPolynomial::from_i64(&[-1, 1]),
        IntPolynomial::from_i64(&[1, -3, 1]),
        IntPolynomial::from_i64(&[-1, 5, -6, 1]),
        IntPolynomial::from_i64(&[1, -8, 18, -13, 1]),
    ]
}

fn step(
    p1: &IntPolynomial, // p_{n-1}
    p3: &IntPolynomial, // p_{n-3}
    p4: &IntPolynomial, // p_{n-4}
) -> IntPolynomial {
    // p_n = (3λ-2)(p_{n-1} - (1-λ)² p_{n-3}) + (1-λ)⁴ p_{n-4}
    let lin = IntPolynomial::from_i64(&[-2, 3]);
    let sq = IntPolynomial::from_i64(&[1, -2, 1]);
    let quart = sq.mul(&sq);
    lin.mul(&p1.sub(&sq.mul(p3))).add(&quart.mul(p4))
}

/// `p_n` through the recurrence, memoized.
pub fn charpoly_recurrence(n: usize) -> Result<IntPolynomial> {
    if n == 0 {
        return Err(Error::domain("p_n requires n >= 1"));
    }
    let mut guard = SEQ.lock().expect("charpoly cache poisoned");
    let cache = guard.get_or_insert_with(|| SeqCache {
        polys: base_cases().to_vec(),
        bytes: base_cases().iter().map(SeqCache::poly_bytes).sum(),
        budget: DEFAULT_BUDGET,
    });
    if cache.polys.is_empty() {
        cache.polys = base_cases().to_vec();
        cache.bytes = cache.polys.iter().map(SeqCache::poly_bytes).sum();
    }
    if n <= cache.polys.len() {
        return Ok(cache.polys[n - 1].clone());
    }
    // extend within budget; past the budget, roll a window of four
    while cache.polys.len() < n && cache.bytes <= cache.budget {
        let k = cache.polys.len();
        let next = step(
            &cache.polys[k - 1],
            &cache.polys[k - 3],
            &cache.polys[k - 4],
        );
        cache.bytes += SeqCache::poly_bytes(&next);
        cache.polys.push(next);
    }
    if n <= cache.polys.len() {
        return Ok(cache.polys[n - 1].clone());
    }
    let len = cache.polys.len();
    let mut window: [IntPolynomial; 4] = [
        cache.polys[len - 4].clone(),
        cache.polys[len - 3].clone(),
        cache.polys[len - 2].clone(),
        cache.polys[len - 1].clone(),
    ];
    for _ in len..n {
        let next = step(&window[3], &window[1], &window[0]);
        window.rotate_left(1);
        window[3] = next;
    }
    Ok(window[3].clone())
}

/// Division-free characteristic polynomial (Berkowitz) of any square
/// symmetric integer matrix; monic in λ for `det(λI - M)`.
pub fn charpoly_oracle(m: &SymmetricIntMatrix) -> IntPolynomial {
    let n = m.n();
    // coefficients in descending degree order, length r+1 after round r
    let mut coeffs: Vec<BigInt> = vec![BigInt::one(), -m.get(0, 0).clone()];
    for r in 2..=n {
        // leading principal submatrix A_{r-1}, border row/column, corner
        let corner = m.get(r - 1, r - 1).clone();
        let border: Vec<BigInt> = (0..r - 1).map(|j| m.get(r - 1, j).clone()).collect();
        let mut v: Vec<BigInt> = Vec::with_capacity(r + 1);
        v.push(BigInt::one());
        v.push(-corner);
        let mut w = border.clone();
        for k in 2..=r {
            let dot: BigInt = border.iter().zip(&w).map(|(a, b)| a * b).sum();
            v.push(-dot);
            if k < r {
                let mut next = vec![BigInt::zero(); r - 1];
                for (i, ni) in next.iter_mut().enumerate() {
                    for (j, wj) in w.iter().enumerate() {
                        *ni += m.get(i, j) * wj;
                    }
                }
                w = next;
            }
        }
        let mut out = vec![BigInt::zero(); r + 1];
        for (i, oi) in out.iter_mut().enumerate() {
            let jmax = i.min(coeffs.len() - 1);
            let jmin = i.saturating_sub(r);
            for (j, c) in coeffs.iter().enumerate().take(jmax + 1).skip(jmin) {
                *oi += &v[i - j] * c;
            }
        }
        coeffs = out;
    }
    coeffs.reverse();
    IntPolynomial::new(coeffs)
}

/// Conjugate-pair power sums `s_k = A^k + B^k` where `A + B = 6λ - 4` and
/// `A·B = 4(1-λ)²`; stays in ℚ for every rational λ.
#[derive(Debug, Clone)]
pub struct PowerSumSequence {
    lambda: BigRational,
    terms: Vec<BigRational>,
}

impl PowerSumSequence {
    pub fn new(lambda: BigRational) -> Self {
        let two = BigRational::from(BigInt::from(2));
        let s1 = BigRational::from(BigInt::from(6)) * &lambda - BigRational::from(BigInt::from(4));
        PowerSumSequence {
            lambda,
            terms: vec![two, s1],
        }
    }

    pub fn lambda(&self) -> &BigRational {
        &self.lambda
    }

    /// `s_k`, extending the recurrence as needed.
    pub fn get(&mut self, k: usize) -> BigRational {
        let sum =
            BigRational::from(BigInt::from(6)) * &self.lambda - BigRational::from(BigInt::from(4));
        let one = BigRational::one();
        let prod_factor = {
            let d = &one - &self.lambda;
            BigRational::from(BigInt::from(4)) * &d * &d
        };
        while self.terms.len() <= k {
            let m = self.terms.len();
            let next = &sum * &self.terms[m - 1] - &prod_factor * &self.terms[m - 2];
            self.terms.push(next);
        }
        self.terms[k].clone()
    }
}

/// Exact `p_n(λ)` via the closed form, valid away from the removable
/// singularities of the printed expression.
pub fn eval_closed_form(n: usize, lambda: &BigRational) -> Result<BigRational> {
    if n == 0 {
        return Err(Error::domain("p_n requires n >= 1"));
    }
    let four_fifths = BigRational::new(BigInt::from(4), BigInt::from(5));
    if lambda == &four_fifths {
        return Err(Error::domain(
            "closed form has a pole at λ = 4/5; use pn_at_four_fifths",
        ));
    }
    if lambda.is_one() {
        return Err(Error::domain(
            "closed form has a pole at λ = 1; evaluate coefficients instead",
        ));
    }
    let one = BigRational::one();
    let lm1 = lambda - &one; // λ - 1
    let oml = &one - lambda; // 1 - λ
    let lm1_pow_nm1 = pow_rational(&lm1, n - 1);
    let lm1_pow_n = &lm1_pow_nm1 * &lm1;
    let oml_pow_n = pow_rational(&oml, n);

    // 8 - 18λ + 10λ² = 2(5λ-4)(λ-1)
    let denom_mid = BigRational::from(BigInt::from(8))
        - BigRational::from(BigInt::from(18)) * lambda
        + BigRational::from(BigInt::from(10)) * lambda * lambda;
    let term_mid = lambda * &oml_pow_n / denom_mid;

    let mut sums = PowerSumSequence::new(lambda.clone());
    let s_n = sums.get(n);
    let four_minus_5l =
        BigRational::from(BigInt::from(4)) - BigRational::from(BigInt::from(5)) * lambda;
    let two_pow_n = BigRational::from(BigInt::from(2).pow(n as u32));
    let term_last = s_n / (two_pow_n * four_minus_5l);

    let half = BigRational::new(BigInt::one(), BigInt::from(2));
    Ok(half * lm1_pow_nm1 + lm1_pow_n - term_mid + term_last)
}

fn pow_rational(x: &BigRational, k: usize) -> BigRational {
    let mut acc = BigRational::one();
    let mut base = x.clone();
    let mut e = k;
    while e > 0 {
        if e & 1 == 1 {
            acc *= &base;
        }
        e >>= 1;
        if e > 0 {
            base = &base * &base;
        }
    }
    acc
}

/// `p_n(4/5) = -(3(-1)^n + 10n² - 5) / (2·5^n)`, exact and negative for all n.
pub fn pn_at_four_fifths(n: usize) -> Result<BigRational> {
    if n == 0 {
        return Err(Error::domain("p_n requires n >= 1"));
    }
    let sign = if n.is_multiple_of(2) { 3i64 } else { -3i64 };
    let num =
        BigInt::from(sign) + BigInt::from(10) * BigInt::from(n) * BigInt::from(n) - BigInt::from(5);
    let den = BigInt::from(2) * BigInt::from(5).pow(n as u32);
    Ok(BigRational::new(-num, den))
}

/// The three leading coefficients of `p_n` from Newton's identities:
/// `a_n = 1`, `a_{n-1} = -tr(Z_n)`, `a_{n-2} = (tr² - ‖Z_n‖_F²)/2`.
pub fn leading_coeffs(n: usize) -> Result<(BigInt, BigInt, BigInt)> {
    if n < 2 {
        return Err(Error::domain("leading_coeffs requires n >= 2"));
    }
    let z = build_z(n)?;
    let tr = z.trace();
    let frob2 = z.frobenius_square();
    let twice = &tr * &tr - frob2;
    let (half, rem) = twice.div_rem(&BigInt::from(2));
    debug_assert!(rem.is_zero(), "tr² - ‖Z‖² must be even");
    Ok((BigInt::one(), -tr, half))
}

/// Product of the roots of a monic `p`, read off the constant term.
pub fn root_product(p: &IntPolynomial) -> Result<BigInt> {
    let d = p.degree().ok_or_else(|| Error::domain("zero polynomial"))?;
    if !p.is_monic() {
        return Err(Error::domain("root_product expects a monic polynomial"));
    }
    let c0 = p.coeff(0);
    Ok(if d % 2 == 0 { c0 } else { -c0 })
}

#[allow(dead_code)]
fn is_negative(x: &BigRational) -> bool {
    x.numer().is_negative()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::{gram, TriangularBinaryMatrix};

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn printed_base_cases() {
        assert_eq!(
            charpoly_recurrence(1).unwrap(),
            IntPolynomial::from_i64(&[-1, 1])
        );
        assert_eq!(
            charpoly_recurrence(2).unwrap(),
            IntPolynomial::from_i64(&[1, -3, 1])
        );
        assert_eq!(
            charpoly_recurrence(3).unwrap(),
            IntPolynomial::from_i64(&[-1, 5, -6, 1])
        );
        assert_eq!(
            charpoly_recurrence(4).unwrap(),
            IntPolynomial::from_i64(&[1, -8, 18, -13, 1])
        );
    }

    #[test]
    fn oracle_identity_squared() {
        let m = SymmetricIntMatrix::from_fn(2, |i, j| {
            if i == j {
                BigInt::one()
            } else {
                BigInt::zero()
            }
        })
        .unwrap();
        assert_eq!(charpoly_oracle(&m), IntPolynomial::from_i64(&[1, -2, 1]));
    }

    #[test]
    fn oracle_two_by_two_by_hand() {
        let x = TriangularBinaryMatrix::new(2, 1).unwrap();
        let g = gram(&x); // [[1,1],[1,2]]
        assert_eq!(charpoly_oracle(&g), IntPolynomial::from_i64(&[1, -3, 1]));
    }

    #[test]
    fn oracle_matches_printed_p3() {
        let z = build_z(3).unwrap();
        assert_eq!(
            charpoly_oracle(&z),
            IntPolynomial::from_i64(&[-1, 5, -6, 1])
        );
    }

    #[test]
    fn recurrence_equals_oracle_small() {
        for n in 1..=12 {
            let a = charpoly_recurrence(n).unwrap();
            let b = charpoly_oracle(&build_z(n).unwrap());
            assert_eq!(a, b, "coefficient mismatch at n = {n}");
        }
    }

    #[test]
    fn recurrence_window_fallback_consistent() {
        // tiny budget forces the rolling window path; results must not change
        let p30_cached = charpoly_recurrence(30).unwrap();
        set_charpoly_cache_budget(1);
        let p30_rolled = charpoly_recurrence(30).unwrap();
        set_charpoly_cache_budget(super::DEFAULT_BUDGET);
        assert_eq!(p30_cached, p30_rolled);
    }

    #[test]
    fn closed_form_examples() {
        assert_eq!(eval_closed_form(1, &rat(3, 1)).unwrap(), rat(2, 1));
        assert_eq!(eval_closed_form(4, &rat(0, 1)).unwrap(), rat(1, 1));
        assert_eq!(eval_closed_form(2, &rat(2, 1)).unwrap(), rat(-1, 1));
    }

    #[test]
    fn closed_form_rejects_poles() {
        assert!(eval_closed_form(3, &rat(4, 5)).is_err());
        assert!(eval_closed_form(3, &rat(1, 1)).is_err());
    }

    #[test]
    fn closed_form_matches_coefficients() {
        let points = [rat(-1, 1), rat(0, 1), rat(1, 2), rat(2, 1), rat(3, 7)];
        for n in 1..=30 {
            let p = charpoly_recurrence(n).unwrap();
            for x in &points {
                let direct = p.eval_rational(x);
                let closed = eval_closed_form(n, x).unwrap();
                assert_eq!(direct, closed, "n = {n}, λ = {x}");
            }
        }
    }

    #[test]
    fn four_fifths_printed_values() {
        assert_eq!(pn_at_four_fifths(1).unwrap(), rat(-1, 5));
        assert_eq!(pn_at_four_fifths(2).unwrap(), rat(-19, 25));
        assert_eq!(pn_at_four_fifths(3).unwrap(), rat(-41, 125));
        assert_eq!(pn_at_four_fifths(4).unwrap(), rat(-79, 625));
    }

    #[test]
    fn four_fifths_is_always_negative() {
        for n in 1..=200 {
            let v = pn_at_four_fifths(n).unwrap();
            assert!(v < BigRational::zero(), "p_{n}(4/5) must be negative");
        }
    }

    #[test]
    fn four_fifths_recurrence_identity() {
        // p_n(4/5) = (2/5)p_{n-1}(4/5) - (2/125)p_{n-3}(4/5) + (1/625)p_{n-4}(4/5)
        for n in 5..=200 {
            let lhs = pn_at_four_fifths(n).unwrap();
            let rhs = rat(2, 5) * pn_at_four_fifths(n - 1).unwrap()
                - rat(2, 125) * pn_at_four_fifths(n - 3).unwrap()
                + rat(1, 625) * pn_at_four_fifths(n - 4).unwrap();
            assert_eq!(lhs, rhs, "recurrence fails at n = {n}");
        }
    }

    #[test]
    fn leading_coeffs_examples() {
        assert_eq!(
            leading_coeffs(2).unwrap(),
            (BigInt::one(), BigInt::from(-3), BigInt::one())
        );
        assert_eq!(
            leading_coeffs(3).unwrap(),
            (BigInt::one(), BigInt::from(-6), BigInt::from(5))
        );
        assert_eq!(
            leading_coeffs(4).unwrap(),
            (BigInt::one(), BigInt::from(-13), BigInt::from(18))
        );
        assert!(leading_coeffs(1).is_err());
    }

    #[test]
    fn leading_coeffs_agree_with_polynomial() {
        for n in 2..=50 {
            let (a_n, a_n1, a_n2) = leading_coeffs(n).unwrap();
            let p = charpoly_recurrence(n).unwrap();
            assert_eq!(p.coeff(n), a_n);
            assert_eq!(p.coeff(n - 1), a_n1);
            assert_eq!(p.coeff(n - 2), a_n2, "a_{{n-2}} mismatch at n = {n}");
        }
    }

    #[test]
    fn determinant_is_one_via_constant_term() {
        for n in 1..=12 {
            let p = charpoly_oracle(&build_z(n).unwrap());
            assert_eq!(root_product(&p).unwrap(), BigInt::one(), "det Z_{n}");
        }
    }

    #[test]
    fn gram_determinant_is_one() {
        for n in 1..=5 {
            for x in crate::matrix::enumerate_kn(n).unwrap() {
                let p = charpoly_oracle(&gram(&x));
                assert_eq!(root_product(&p).unwrap(), BigInt::one());
            }
        }
    }
}
