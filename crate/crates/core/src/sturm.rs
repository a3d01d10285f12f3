//! Sturm chains over exact integers.
//!
//! The chain is computed as a subresultant pseudo-remainder sequence
//! (Brown/Collins) to keep coefficient growth polynomial, with the sign of
//! each element corrected so that the stored sequence is a positive
//! rational multiple of the textbook Sturm chain `R_0 = p, R_1 = p',
//! R_{i+1} = -rem(R_{i-1}, R_i)`. Sign-variation counts at rational points
//! and at ±∞ then give exact root counts.
//!
//! If the input is not squarefree the chain is rebuilt on the squarefree
//! part, so counts are always counts of distinct real roots.

use crate::error::{Error, Result};
use crate::poly::{sign_of, IntPolynomial};
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Pow, Zero};

#[derive(Debug, Clone)]
pub struct SturmChain {
    /// `chain[0]` is the (squarefree) polynomial the counts refer to.
    chain: Vec<IntPolynomial>,
    /// The polynomial the chain was requested for (before any squarefree
    /// reduction).
    original: IntPolynomial,
}

/// A point at which sign variations are counted.
#[derive(Debug, Clone, Copy)]
pub enum Endpoint<'a> {
    NegInf,
    /// `num/den` with `den > 0`.
    Rational(&'a BigInt, &'a BigInt),
    PosInf,
}

impl SturmChain {
    pub fn new(p: &IntPolynomial) -> Result<Self> {
        if p.is_zero() {
            return Err(Error::domain("Sturm chain of the zero polynomial"));
        }
        let mut chain = build_signed_chain(p);
        // non-constant tail means gcd(p, p') is non-trivial: redo on the
        // squarefree part so variation counts stay valid
        let last_deg = chain.last().and_then(|q| q.degree()).unwrap_or(0);
        if last_deg > 0 {
            let sf = p.squarefree_part();
            chain = build_signed_chain(&sf);
            debug_assert!(
                chain.last().and_then(|q| q.degree()) == Some(0) || sf.degree() == Some(0)
            );
        }
        Ok(SturmChain {
            chain,
            original: p.clone(),
        })
    }

    /// The squarefree polynomial whose roots are counted.
    pub fn polynomial(&self) -> &IntPolynomial {
        &self.chain[0]
    }

    pub fn original(&self) -> &IntPolynomial {
        &self.original
    }

    pub fn len(&self) -> usize {
        self.chain.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn variations(&self, at: Endpoint) -> usize {
        let mut last: i8 = 0;
        let mut count = 0;
        for q in &self.chain {
            let s = match at {
                Endpoint::NegInf => q.sign_at_infinity(false),
                Endpoint::PosInf => q.sign_at_infinity(true),
                Endpoint::Rational(num, den) => q.sign_at_rational(num, den),
            };
            if s == 0 {
                continue;
            }
            if last != 0 && s != last {
                count += 1;
            }
            last = s;
        }
        count
    }

    pub fn variations_at(&self, x: &BigRational) -> usize {
        self.variations(Endpoint::Rational(x.numer(), x.denom()))
    }

    /// Number of distinct real roots in `(a, b]`; requires `a < b`.
    pub fn count_half_open(&self, a: &BigRational, b: &BigRational) -> usize {
        debug_assert!(a < b);
        let va = self.variations_at(a);
        let vb = self.variations_at(b);
        va.saturating_sub(vb)
    }

    /// Number of distinct real roots in `(a, ∞)`.
    pub fn count_above(&self, a: &BigRational) -> usize {
        let va = self.variations_at(a);
        let vinf = self.variations(Endpoint::PosInf);
        va.saturating_sub(vinf)
    }

    /// Total number of distinct real roots.
    pub fn count_all(&self) -> usize {
        let lo = self.variations(Endpoint::NegInf);
        let hi = self.variations(Endpoint::PosInf);
        lo.saturating_sub(hi)
    }
}

/// Subresultant PRS with tracked signs; returns positive multiples of the
/// classic Sturm chain elements.
fn build_signed_chain(p: &IntPolynomial) -> Vec<IntPolynomial> {
    // positive content never changes signs; stripping keeps numbers small
    let f0 = p.primitive_part();
    let f1 = f0.derivative().primitive_part();
    let mut out = vec![f0.clone()];
    if f1.is_zero() {
        return out;
    }
    out.push(f1.clone());

    // signs of the multipliers γ_i relating stored g_i to the true chain
    let mut sign_prev: i8 = 1; // γ_0
    let mut sign_cur: i8 = 1; // γ_1

    let mut prev = f0;
    let mut cur = f1;
    let mut psi = BigInt::from(-1);
    let mut first = true;
    let mut gap_prev: u32 = 0;

    loop {
        let dp = prev.degree().unwrap();
        let dc = cur.degree().unwrap();
        if dc == 0 {
            break;
        }
        let gap = (dp - dc) as u32;
        let lc_prev = prev.leading_coeff().unwrap().clone();

        let beta: BigInt = if first {
            if gap.is_multiple_of(2) {
                BigInt::from(-1)
            } else {
                BigInt::one()
            }
        } else {
            // ψ_i = (-lc_{i-1})^{δ_{i-2}} / ψ_{i-1}^{δ_{i-2}-1}
            psi = match gap_prev {
                0 => psi,
                1 => -lc_prev.clone(),
                d => {
                    let num = (-lc_prev.clone()).pow(d);
                    let den = psi.pow(d - 1);
                    let (q, r) = num.div_rem(&den);
                    debug_assert!(r.is_zero(), "subresultant ψ division not exact");
                    q
                }
            };
            -&lc_prev * psi.clone().pow(gap)
        };

        let r = prev.pseudo_rem(&cur);
        if r.is_zero() {
            break;
        }
        let next = r.divexact_scalar(&beta);

        // prem(g_{i-1}, g_i) = lc(g_i)^{gap+1} · rem(g_{i-1}, g_i) and
        // rem(R_{i-1}, R_i) = -R_{i+1}, so
        // sign(γ_{i+1}) = -sign(γ_{i-1}) · sign(lc(g_i))^{gap+1} · sign(β)
        let lc_cur_sign = sign_of(cur.leading_coeff().unwrap());
        let lc_pow_sign = if gap.is_multiple_of(2) {
            lc_cur_sign
        } else {
            1
        };
        let sign_next = -sign_prev * lc_pow_sign * sign_of(&beta);

        out.push(if sign_next > 0 {
            next.clone()
        } else {
            next.neg()
        });

        sign_prev = sign_cur;
        sign_cur = sign_next;
        gap_prev = gap;
        first = false;
        prev = cur;
        cur = next;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::charpoly::charpoly_recurrence;
    use proptest::prelude::*;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    /// Textbook chain over BigRational, the independent oracle.
    fn naive_chain(p: &IntPolynomial) -> Vec<Vec<BigRational>> {
        fn to_rat(p: &IntPolynomial) -> Vec<BigRational> {
            p.coeffs()
                .iter()
                .map(|c| BigRational::from(c.clone()))
                .collect()
        }
        fn is_zero(p: &[BigRational]) -> bool {
            p.iter().all(Zero::is_zero)
        }
        fn rem(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
            let mut r: Vec<BigRational> = a.to_vec();
            let db = b.len() - 1;
            let lb = &b[db];
            while r.len() > db && !is_zero(&r) {
                let dr = r.len() - 1;
                let q = &r[dr] / lb;
                for j in 0..db {
                    let t = &q * &b[j];
                    r[dr - db + j] -= t;
                }
                r.pop();
                while r.last().is_some_and(Zero::is_zero) {
                    r.pop();
                }
            }
            r
        }
        let f0 = to_rat(p);
        let f1 = to_rat(&p.derivative());
        let mut chain = vec![f0, f1];
        loop {
            let n = chain.len();
            if chain[n - 1].len() <= 1 {
                break;
            }
            let r = rem(&chain[n - 2], &chain[n - 1]);
            if is_zero(&r) || r.is_empty() {
                break;
            }
            chain.push(r.iter().map(|c| -c).collect());
        }
        chain
    }

    fn naive_variations(chain: &[Vec<BigRational>], x: &BigRational) -> usize {
        let mut signs = Vec::new();
        for p in chain {
            let mut acc = BigRational::zero();
            for c in p.iter().rev() {
                acc = acc * x + c;
            }
            if !acc.is_zero() {
                signs.push(acc > BigRational::zero());
            }
        }
        signs.windows(2).filter(|w| w[0] != w[1]).count()
    }

    #[test]
    fn quadratic_root_count() {
        // x² - 3x + 1 has two real roots, one in (0,1), one in (2,3)
        let p = IntPolynomial::from_i64(&[1, -3, 1]);
        let c = SturmChain::new(&p).unwrap();
        assert_eq!(c.count_all(), 2);
        assert_eq!(c.count_half_open(&rat(0, 1), &rat(1, 1)), 1);
        assert_eq!(c.count_half_open(&rat(2, 1), &rat(3, 1)), 1);
        assert_eq!(c.count_above(&rat(3, 1)), 0);
    }

    #[test]
    fn no_real_roots() {
        let p = IntPolynomial::from_i64(&[1, 0, 1]); // x² + 1
        let c = SturmChain::new(&p).unwrap();
        assert_eq!(c.count_all(), 0);
    }

    #[test]
    fn repeated_roots_counted_once() {
        // (x-1)²(x+2)
        let p = IntPolynomial::from_i64(&[1, -1])
            .mul(&IntPolynomial::from_i64(&[1, -1]))
            .mul(&IntPolynomial::from_i64(&[2, 1]));
        let c = SturmChain::new(&p).unwrap();
        assert_eq!(c.count_all(), 2);
        assert_eq!(c.count_half_open(&rat(0, 1), &rat(2, 1)), 1);
    }

    #[test]
    fn sparse_degree_gaps() {
        // x^5 - x = x(x-1)(x+1)(x²+1): 3 real roots; PRS hits δ > 1
        let p = IntPolynomial::from_i64(&[0, -1, 0, 0, 0, 1]);
        let c = SturmChain::new(&p).unwrap();
        assert_eq!(c.count_all(), 3);
        let naive = naive_chain(&p);
        for x in [rat(-3, 1), rat(-1, 2), rat(1, 2), rat(3, 2), rat(7, 3)] {
            assert_eq!(c.variations_at(&x), naive_variations(&naive, &x), "at {x}");
        }
    }

    #[test]
    fn charpoly_chain_matches_naive() {
        for n in [2usize, 3, 5, 8, 12] {
            let p = charpoly_recurrence(n).unwrap();
            let c = SturmChain::new(&p).unwrap();
            let naive = naive_chain(&p);
            assert_eq!(c.len(), naive.len(), "chain length at n = {n}");
            for x in [rat(0, 1), rat(4, 5), rat(1, 1), rat(17, 7), rat(100, 1)] {
                assert_eq!(
                    c.variations_at(&x),
                    naive_variations(&naive, &x),
                    "variations at {x}, n = {n}"
                );
            }
            // all roots of the charpoly of a symmetric matrix are real
            assert_eq!(c.count_all(), n, "real-rootedness at n = {n}");
        }
    }

    #[test]
    fn single_root_above_four_fifths() {
        for n in 2..=20 {
            let p = charpoly_recurrence(n).unwrap();
            let c = SturmChain::new(&p).unwrap();
            assert_eq!(c.count_above(&rat(4, 5)), 1, "n = {n}");
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]
        #[test]
        fn variations_match_naive(coeffs in proptest::collection::vec(-12i64..12, 2..8),
                                  xs in proptest::collection::vec((-40i64..40, 1i64..12), 1..5)) {
            let p = IntPolynomial::from_i64(&coeffs);
            prop_assume!(p.degree().is_some_and(|d| d >= 1));
            prop_assume!(p.is_squarefree());
            let c = SturmChain::new(&p).unwrap();
            let naive = naive_chain(&p);
            for (n, d) in xs {
                let x = rat(n, d);
                prop_assert_eq!(c.variations_at(&x), naive_variations(&naive, &x));
            }
        }
    }
}
