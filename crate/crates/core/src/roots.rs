//! Certified real-root isolation and refinement.
//!
//! Roots are carried as rational intervals whose correctness certificate is
//! a Sturm variation count (exactly one distinct root inside). Refinement
//! is plain sign bisection with exact rational endpoint evaluation, so a
//! reported enclosure is unconditionally correct, not floating-point
//! evidence.

use crate::bounds::{self, Thm31Variant};
use crate::charpoly::charpoly_recurrence;
use crate::error::{Error, Result};
use crate::interval::FloatInterval;
use crate::poly::IntPolynomial;
use crate::sturm::SturmChain;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Pow, Signed, Zero};
use std::cmp::Ordering;
use std::sync::{Arc, Mutex};

/// Variation counts at the two endpoints; their difference being one is the
/// isolation certificate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SturmWitness {
    pub variations_lo: usize,
    pub variations_hi: usize,
}

/// A rational interval certified to contain exactly one distinct real root
/// of `poly`. Point enclosures (`lo == hi`) hold an exact rational root.
#[derive(Debug, Clone)]
pub struct RootEnclosure {
    lo: BigRational,
    hi: BigRational,
    poly: Arc<IntPolynomial>,
    sign_lo: i8,
    sign_hi: i8,
    multiplicity: usize,
    witness: SturmWitness,
}

impl RootEnclosure {
    pub fn lo(&self) -> &BigRational {
        &self.lo
    }

    pub fn hi(&self) -> &BigRational {
        &self.hi
    }

    /// The squarefree polynomial this enclosure isolates a root of.
    pub fn poly(&self) -> &IntPolynomial {
        &self.poly
    }

    pub fn multiplicity(&self) -> usize {
        self.multiplicity
    }

    pub fn witness(&self) -> SturmWitness {
        self.witness
    }

    pub fn is_exact(&self) -> bool {
        self.lo == self.hi
    }

    pub fn width(&self) -> BigRational {
        &self.hi - &self.lo
    }

    pub fn midpoint(&self) -> BigRational {
        (&self.hi + &self.lo) / BigRational::from(BigInt::from(2))
    }

    pub fn contains(&self, x: &BigRational) -> bool {
        &self.lo <= x && x <= &self.hi
    }

    pub fn to_float_interval(&self, precision_bits: u32) -> FloatInterval {
        FloatInterval::from_rational_bounds(&self.lo, &self.hi, precision_bits)
    }

    fn sign_at(&self, x: &BigRational) -> i8 {
        self.poly.sign_at_rational(x.numer(), x.denom())
    }

    /// One bisection step; exact roots collapse to points.
    pub fn refine_step(&mut self) {
        if self.is_exact() {
            return;
        }
        let mid = self.midpoint();
        let s = self.sign_at(&mid);
        if s == 0 {
            self.lo = mid.clone();
            self.hi = mid;
            self.sign_lo = 0;
            self.sign_hi = 0;
        } else if s == self.sign_lo {
            self.lo = mid;
        } else {
            self.hi = mid;
        }
    }

    pub fn refine_to_width(&mut self, eps: &BigRational) {
        while !self.is_exact() && &self.width() > eps {
            self.refine_step();
        }
    }

    /// Shrink until `width <= 10^-digits · |midpoint|` (relative width).
    pub fn refine_to_relative_digits(&mut self, digits: u32) {
        let scale = BigRational::from(BigInt::from(10).pow(digits));
        loop {
            if self.is_exact() {
                return;
            }
            let mid_abs = {
                let m = self.midpoint();
                if m.is_negative() {
                    -m
                } else {
                    m
                }
            };
            if self.width() * &scale <= mid_abs {
                return;
            }
            self.refine_step();
        }
    }
}

/// Multiplicity in `p` of the single root `r` inside `enc`: the root has
/// multiplicity ≥ k+1 iff `p^(k)(r) = 0`, and `p^(k)(r) = 0` iff
/// `gcd(sf, p^(k))` has a root in the enclosure. The gcd divides the
/// squarefree `sf`, so it has at most one root there and an exact sign
/// test decides.
fn multiplicity_in(p: &IntPolynomial, sf: &IntPolynomial, enc: &RootEnclosure) -> usize {
    let has_root_here = |q: &IntPolynomial| -> bool {
        if q.degree().is_none_or(|d| d == 0) {
            return false;
        }
        if enc.is_exact() {
            return q.sign_at_rational(enc.lo.numer(), enc.lo.denom()) == 0;
        }
        let sl = q.sign_at_rational(enc.lo.numer(), enc.lo.denom());
        let sh = q.sign_at_rational(enc.hi.numer(), enc.hi.denom());
        sl * sh < 0
    };
    let mut mult = 1;
    let mut deriv = p.derivative();
    while !deriv.is_zero() {
        let g = sf.gcd(&deriv);
        if !has_root_here(&g) {
            break;
        }
        mult += 1;
        deriv = deriv.derivative();
    }
    mult
}

/// Power-of-two strictly above the Cauchy root bound of `p`.
fn dyadic_root_bound(p: &IntPolynomial) -> BigRational {
    let d = p.degree().expect("nonzero polynomial");
    let lead_bits = p.leading_coeff().unwrap().bits();
    let mut k: u64 = 2;
    for c in p.coeffs().iter().take(d) {
        let b = c.bits();
        let diff = b.saturating_sub(lead_bits) + 2;
        k = k.max(diff);
    }
    BigRational::from(BigInt::one() << k)
}

/// Disjoint certified enclosures of every distinct real root of `p`,
/// ascending; multiplicities refer to `p` itself.
pub fn isolate_roots(p: &IntPolynomial) -> Result<Vec<RootEnclosure>> {
    if p.is_zero() {
        return Err(Error::domain("cannot isolate roots of the zero polynomial"));
    }
    if p.degree() == Some(0) {
        return Ok(Vec::new());
    }
    let chain = SturmChain::new(p)?;
    isolate_with_chain(&chain, p)
}

/// Same as [`isolate_roots`] but reusing an existing chain.
pub fn isolate_with_chain(
    chain: &SturmChain,
    original: &IntPolynomial,
) -> Result<Vec<RootEnclosure>> {
    let sf = Arc::new(chain.polynomial().clone());
    if sf.degree() == Some(0) {
        return Ok(Vec::new());
    }
    let needs_multiplicity = sf.degree() != original.degree();

    let bound = dyadic_root_bound(&sf);
    let lo = -&bound;
    let hi = bound.clone();
    let v_lo = chain.variations_at(&lo);
    let v_hi = chain.variations_at(&hi);

    enum Task {
        Segment(BigRational, BigRational, usize, usize),
        Point(BigRational),
    }

    let mut out = Vec::new();
    // depth-first, leftmost-first, so enclosures come out ascending
    let mut stack = vec![Task::Segment(lo, hi, v_lo, v_hi)];
    while let Some(task) = stack.pop() {
        let (a, b, va, vb) = match task {
            Task::Point(at) => {
                out.push(point_enclosure(&sf, at, chain));
                continue;
            }
            Task::Segment(a, b, va, vb) => (a, b, va, vb),
        };
        let count = va.saturating_sub(vb);
        if count == 0 {
            continue;
        }
        if count == 1 {
            out.push(make_enclosure(&sf, a, b, va, vb));
            continue;
        }
        let mid = (&a + &b) / BigRational::from(BigInt::from(2));
        if sf.sign_at_rational(mid.numer(), mid.denom()) == 0 {
            // rational root exactly at the midpoint: carve out a certified
            // punctured neighbourhood and keep the point in sequence
            let (left, right) = split_around_rational_root(chain, &sf, &a, &b, &mid)?;
            let (ll, lh, lva, lvb) = left;
            let (rl, rh, rva, rvb) = right;
            stack.push(Task::Segment(rl, rh, rva, rvb));
            stack.push(Task::Point(mid));
            stack.push(Task::Segment(ll, lh, lva, lvb));
            continue;
        }
        let v_mid = chain.variations_at(&mid);
        // right half first: the stack pops left first
        stack.push(Task::Segment(mid.clone(), b, v_mid, vb));
        stack.push(Task::Segment(a, mid, va, v_mid));
    }

    // exact roots at interval right-endpoints become points
    for enc in &mut out {
        if !enc.is_exact() && enc.sign_hi == 0 {
            enc.lo = enc.hi.clone();
            enc.sign_lo = 0;
        }
    }
    if needs_multiplicity {
        let prim = original.primitive_part();
        for enc in &mut out {
            enc.multiplicity = multiplicity_in(&prim, &sf, enc);
        }
    }
    Ok(out)
}

fn make_enclosure(
    sf: &Arc<IntPolynomial>,
    lo: BigRational,
    hi: BigRational,
    v_lo: usize,
    v_hi: usize,
) -> RootEnclosure {
    let sign_lo = sf.sign_at_rational(lo.numer(), lo.denom());
    let sign_hi = sf.sign_at_rational(hi.numer(), hi.denom());
    if sign_hi == 0 {
        // the single root in (lo, hi] is hi itself
        return RootEnclosure {
            lo: hi.clone(),
            hi,
            poly: sf.clone(),
            sign_lo: 0,
            sign_hi: 0,
            multiplicity: 1,
            witness: SturmWitness {
                variations_lo: v_lo,
                variations_hi: v_hi,
            },
        };
    }
    debug_assert!(sign_lo != 0 && sign_lo != sign_hi);
    RootEnclosure {
        lo,
        hi,
        poly: sf.clone(),
        sign_lo,
        sign_hi,
        multiplicity: 1,
        witness: SturmWitness {
            variations_lo: v_lo,
            variations_hi: v_hi,
        },
    }
}

fn point_enclosure(sf: &Arc<IntPolynomial>, at: BigRational, chain: &SturmChain) -> RootEnclosure {
    let v = chain.variations_at(&at);
    RootEnclosure {
        lo: at.clone(),
        hi: at,
        poly: sf.clone(),
        sign_lo: 0,
        sign_hi: 0,
        multiplicity: 1,
        witness: SturmWitness {
            variations_lo: v,
            variations_hi: v,
        },
    }
}

type Segment = (BigRational, BigRational, usize, usize);

/// For a rational root exactly at `mid`, find `delta` such that
/// `(mid-delta, mid+delta]` contains only that root, and return the two
/// flanking segments with their variation counts.
fn split_around_rational_root(
    chain: &SturmChain,
    sf: &IntPolynomial,
    a: &BigRational,
    b: &BigRational,
    mid: &BigRational,
) -> Result<(Segment, Segment)> {
    let mut delta = (b - a) / BigRational::from(BigInt::from(4));
    for _ in 0..128 {
        let lo = mid - &delta;
        let hi = mid + &delta;
        let s_lo = sf.sign_at_rational(lo.numer(), lo.denom());
        let s_hi = sf.sign_at_rational(hi.numer(), hi.denom());
        if s_lo != 0 && s_hi != 0 {
            let v_lo = chain.variations_at(&lo);
            let v_hi = chain.variations_at(&hi);
            if v_lo.saturating_sub(v_hi) == 1 {
                let va = chain.variations_at(a);
                let vb = chain.variations_at(b);
                return Ok(((a.clone(), lo, va, v_lo), (hi, b.clone(), v_hi, vb)));
            }
        }
        delta /= BigRational::from(BigInt::from(2));
    }
    Err(Error::domain(
        "could not separate a rational root from its neighbours",
    ))
}

/// Result of comparing two algebraic numbers given by enclosures.
pub fn compare_enclosures(a: &mut RootEnclosure, b: &mut RootEnclosure) -> Result<Ordering> {
    // cheap exact-point fast path
    for round in 0..256 {
        if a.hi < b.lo {
            return Ok(Ordering::Less);
        }
        if b.hi < a.lo {
            return Ok(Ordering::Greater);
        }
        if a.is_exact() && b.is_exact() {
            return Ok(a.lo.cmp(&b.lo));
        }
        // after a few rounds of failed separation, test algebraic equality
        if round >= 4 && round % 4 == 0 {
            let g = a.poly.gcd(&b.poly);
            if g.degree().is_some_and(|d| d >= 1) {
                let gchain = SturmChain::new(&g)?;
                if shared_root(&gchain, a, b) {
                    return Ok(Ordering::Equal);
                }
            }
        }
        for _ in 0..8 {
            a.refine_step();
            b.refine_step();
        }
    }
    Err(Error::PrecisionExhausted {
        bits: 0,
        context: "algebraic comparison did not separate".into(),
    })
}

/// True when both enclosures provably contain the same root of `g`.
fn shared_root(gchain: &SturmChain, a: &RootEnclosure, b: &RootEnclosure) -> bool {
    let count_in = |enc: &RootEnclosure| -> Option<usize> {
        if enc.is_exact() {
            let s = gchain
                .polynomial()
                .sign_at_rational(enc.lo.numer(), enc.lo.denom());
            return Some(usize::from(s == 0));
        }
        let sl = gchain
            .polynomial()
            .sign_at_rational(enc.lo.numer(), enc.lo.denom());
        let sh = gchain
            .polynomial()
            .sign_at_rational(enc.hi.numer(), enc.hi.denom());
        if sl == 0 || sh == 0 {
            return None; // endpoint collision, let refinement move on
        }
        Some(gchain.count_half_open(&enc.lo, &enc.hi))
    };
    let (ca, cb) = match (count_in(a), count_in(b)) {
        (Some(x), Some(y)) => (x, y),
        _ => return false,
    };
    if ca != 1 || cb != 1 {
        return false;
    }
    // same root iff the hull still contains just one root of g
    let lo = a.lo.clone().min(b.lo.clone());
    let hi = a.hi.clone().max(b.hi.clone());
    let sl = gchain.polynomial().sign_at_rational(lo.numer(), lo.denom());
    let sh = gchain.polynomial().sign_at_rational(hi.numer(), hi.denom());
    if sl == 0 || sh == 0 {
        return false;
    }
    gchain.count_half_open(&lo, &hi) == 1
}

// ---------------------------------------------------------------------------
// the p_n-specific entry points

/// Small keep-last cache of Sturm chains for `p_n`: the per-`n` work in the
/// verification loops hits the same chain many times in a row.
static CHAIN_CACHE: Mutex<Vec<(usize, Arc<SturmChain>)>> = Mutex::new(Vec::new());
const CHAIN_CACHE_SLOTS: usize = 4;

pub fn chain_for_pn(n: usize) -> Result<Arc<SturmChain>> {
    {
        let guard = CHAIN_CACHE.lock().expect("chain cache poisoned");
        if let Some((_, c)) = guard.iter().find(|(k, _)| *k == n) {
            return Ok(c.clone());
        }
    }
    let p = charpoly_recurrence(n)?;
    let chain = Arc::new(SturmChain::new(&p)?);
    let mut guard = CHAIN_CACHE.lock().expect("chain cache poisoned");
    if !guard.iter().any(|(k, _)| *k == n) {
        if guard.len() >= CHAIN_CACHE_SLOTS {
            guard.remove(0);
        }
        guard.push((n, chain.clone()));
    }
    Ok(chain)
}

fn four_fifths() -> BigRational {
    BigRational::new(BigInt::from(4), BigInt::from(5))
}

/// Exactly certified spectral facts about `Z_n` obtained from `p_n` alone.
#[derive(Debug, Clone, Copy)]
pub struct SpectralCertificate {
    pub n: usize,
    /// `p_n` has no repeated roots.
    pub squarefree: bool,
    /// all `n` roots are real (Sturm count equals the degree)
    pub real_rooted: bool,
    /// exactly one root exceeds 4/5
    pub single_root_above_four_fifths: bool,
    /// `λ₁ > 1` (exactly one root above 1)
    pub lambda1_gt_1: bool,
    /// `λ₂ < 4/5` (follows from the facts above)
    pub lambda2_lt_four_fifths: bool,
}

/// Certify the eigenvalue bracketing facts for `n >= 2`.
pub fn certify_spectrum(n: usize) -> Result<SpectralCertificate> {
    if n < 2 {
        return Err(Error::domain("spectral certificate requires n >= 2"));
    }
    let chain = chain_for_pn(n)?;
    let p = chain.original();
    let degree = p.degree().unwrap();
    let squarefree = chain.polynomial().degree() == Some(degree);
    let real_rooted = chain.count_all() == chain.polynomial().degree().unwrap();
    let above_45 = chain.count_above(&four_fifths());
    let above_1 = chain.count_above(&BigRational::one());
    let sign_45 = p.sign_at_rational(&BigInt::from(4), &BigInt::from(5));
    let single = above_45 == 1 && sign_45 != 0;
    let lambda1_gt_1 = above_1 == 1 && p.sign_at_rational(&BigInt::one(), &BigInt::one()) != 0;
    Ok(SpectralCertificate {
        n,
        squarefree,
        real_rooted,
        single_root_above_four_fifths: single,
        lambda1_gt_1,
        lambda2_lt_four_fifths: single && real_rooted && squarefree,
    })
}

/// Certified enclosure of `c_n` with relative width at most `10^-digits`.
#[derive(Debug, Clone)]
pub struct CnResult {
    pub n: usize,
    pub lambda1: RootEnclosure,
    pub cn_lo: BigRational,
    pub cn_hi: BigRational,
    pub requested_digits: u32,
}

impl CnResult {
    pub fn cn_float(&self, precision_bits: u32) -> FloatInterval {
        FloatInterval::from_rational_bounds(&self.cn_lo, &self.cn_hi, precision_bits)
    }
}

/// `c_n = 1/λ₁(Z_n)` as a certified enclosure.
pub fn compute_cn(n: usize, digits: u32) -> Result<CnResult> {
    if n == 0 {
        return Err(Error::domain("c_n requires n >= 1"));
    }
    if n == 1 {
        let p = Arc::new(charpoly_recurrence(1)?);
        let chain = SturmChain::new(&p)?;
        let one = BigRational::one();
        let enc = point_enclosure(&p, one.clone(), &chain);
        return Ok(CnResult {
            n,
            lambda1: enc,
            cn_lo: one.clone(),
            cn_hi: one,
            requested_digits: digits,
        });
    }
    let chain = chain_for_pn(n)?;
    let p = chain.original().clone();
    if chain.count_above(&four_fifths()) != 1 {
        return Err(Error::domain(format!(
            "certification failed: expected a single root above 4/5 at n = {n}"
        )));
    }
    let mut lambda1 = bracket_lambda1(&chain, &p, n, digits)?;

    // λ₁ relative width 10^-digits gives the same for its reciprocal
    let ten_pow = BigInt::from(10).pow(digits);
    loop {
        if lambda1.is_exact() {
            break;
        }
        // (hi - lo)·10^d <= lo  ensures  (1/lo - 1/hi) <= 10^-d·(1/hi)
        if lambda1.width() * BigRational::from(ten_pow.clone()) <= lambda1.lo {
            break;
        }
        lambda1.refine_step();
    }
    let (cn_lo, cn_hi) = if lambda1.is_exact() {
        let c = lambda1.lo.recip();
        (c.clone(), c)
    } else {
        (lambda1.hi.recip(), lambda1.lo.recip())
    };
    Ok(CnResult {
        n,
        lambda1,
        cn_lo,
        cn_hi,
        requested_digits: digits,
    })
}

/// Initial certified bracket for `λ₁`: warm-started from the closed-form
/// bounds when their endpoints validate exactly, otherwise from
/// `(4/5, root bound)`.
fn bracket_lambda1(
    chain: &SturmChain,
    p: &IntPolynomial,
    n: usize,
    digits: u32,
) -> Result<RootEnclosure> {
    let sf = Arc::new(chain.polynomial().clone());
    let prec = (digits.saturating_mul(4)).clamp(256, bounds::MAX_PRECISION_BITS);
    if let (Ok(ub), Ok(lb)) = (
        bounds::upper_bound_thm31(n, prec, Thm31Variant::AsStated),
        bounds::lower_bound_thm41(n, prec),
    ) {
        if let (Ok(lam_lo_iv), Ok(lam_hi_iv)) = (ub.recip(), lb.recip()) {
            let lo = lam_lo_iv.lo_rational();
            let hi = lam_hi_iv.hi_rational();
            let s_lo = sf.sign_at_rational(lo.numer(), lo.denom());
            let s_hi = sf.sign_at_rational(hi.numer(), hi.denom());
            if lo > four_fifths() && lo < hi && s_lo == -s_hi && s_lo != 0 {
                let v_lo = chain.variations_at(&lo);
                let v_hi = chain.variations_at(&hi);
                if v_lo - v_hi == 1 {
                    return Ok(make_enclosure(&sf, lo, hi, v_lo, v_hi));
                }
            }
        }
    }
    // fallback: the single root above 4/5 lies below the Cauchy bound
    let lo = four_fifths();
    let hi = dyadic_root_bound(p);
    let v_lo = chain.variations_at(&lo);
    let v_hi = chain.variations_at(&hi);
    if v_lo.saturating_sub(v_hi) != 1 {
        return Err(Error::domain(format!(
            "λ₁ bracket certification failed at n = {n}"
        )));
    }
    Ok(make_enclosure(&sf, lo, hi, v_lo, v_hi))
}

/// Report on the second-largest eigenvalue: enclosure, gap to 4/5, and
/// whether the roots of `p_{n-1}` interlace those of `p_n`.
pub fn second_eigenvalue_report(
    n: usize,
    digits: u32,
    precision_bits: u32,
) -> Result<(RootEnclosure, FloatInterval, bool)> {
    if n < 2 {
        return Err(Error::domain("second eigenvalue requires n >= 2"));
    }
    let mut lambda2 = isolate_lambda2(n)?;
    lambda2.refine_to_relative_digits(digits);
    let ff = four_fifths();
    // λ₂ < 4/5, so refinement eventually pulls the upper endpoint off 4/5
    // and the gap interval becomes strictly positive
    while !lambda2.is_exact() && lambda2.hi >= ff {
        lambda2.refine_step();
    }
    let gap_lo = &ff - &lambda2.hi;
    let gap_hi = &ff - &lambda2.lo;
    let gap = FloatInterval::from_rational_bounds(&gap_lo, &gap_hi, precision_bits);
    let interlaced = verify_interlacing(n)?;
    Ok((lambda2, gap, interlaced))
}

/// Certified enclosure of `λ₂`, the second-largest root of `p_n`.
pub fn isolate_lambda2(n: usize) -> Result<RootEnclosure> {
    if n < 2 {
        return Err(Error::domain("λ₂ requires n >= 2"));
    }
    let chain = chain_for_pn(n)?;
    let sf = Arc::new(chain.polynomial().clone());
    let ff = four_fifths();
    if chain.count_above(&ff) != 1 {
        return Err(Error::domain(format!(
            "certification failed: expected a single root above 4/5 at n = {n}"
        )));
    }
    let v_ff = chain.variations_at(&ff);
    // binary search for a left endpoint strictly between λ₃ and λ₂:
    // count(x, 4/5] is ≥ 2 below λ₃, 1 in (λ₃, λ₂), 0 above λ₂
    let mut lo = BigRational::zero();
    let mut v_lo = chain.variations_at(&lo);
    if v_lo.saturating_sub(v_ff) == 1 {
        return Ok(make_enclosure(&sf, lo, ff, v_lo, v_ff));
    }
    if v_lo.saturating_sub(v_ff) == 0 {
        return Err(Error::domain(format!("no root in (0, 4/5] at n = {n}")));
    }
    let mut hi = ff.clone();
    for _ in 0..100_000 {
        let mut mid = (&lo + &hi) / BigRational::from(BigInt::from(2));
        if sf.sign_at_rational(mid.numer(), mid.denom()) == 0 {
            // landed exactly on a root; shift a quarter step to the left
            mid = (&lo + &mid * BigRational::from(BigInt::from(3)))
                / BigRational::from(BigInt::from(4));
        }
        let v_mid = chain.variations_at(&mid);
        match v_mid.saturating_sub(v_ff) {
            1 => return Ok(make_enclosure(&sf, mid, ff, v_mid, v_ff)),
            0 => hi = mid,
            _ => {
                lo = mid;
                v_lo = v_mid;
            }
        }
    }
    let _ = v_lo;
    Err(Error::domain(format!(
        "λ₂ isolation did not converge at n = {n}"
    )))
}

/// Descending-order Cauchy interlacing between `p_{n-1}` and `p_n`:
/// ascending roots satisfy `ν_k <= μ_k <= ν_{k+1}`.
pub fn verify_interlacing(n: usize) -> Result<bool> {
    if n < 2 {
        return Err(Error::domain("interlacing requires n >= 2"));
    }
    let chain_small = chain_for_pn(n - 1)?;
    let chain_big = chain_for_pn(n)?;
    let mut mu = isolate_with_chain(&chain_small, chain_small.original())?;
    let mut nu = isolate_with_chain(&chain_big, chain_big.original())?;
    if mu.len() != n - 1 || nu.len() != n {
        return Ok(false); // repeated roots; interlacing in the strict sense fails
    }
    for k in 0..n - 1 {
        // ν_k <= μ_k
        let (left, right) = nu.split_at_mut(k + 1);
        if compare_enclosures(&mut left[k], &mut mu[k])? == Ordering::Greater {
            return Ok(false);
        }
        // μ_k <= ν_{k+1}
        if compare_enclosures(&mut mu[k], &mut right[0])? == Ordering::Greater {
            return Ok(false);
        }
    }
    Ok(true)
}
