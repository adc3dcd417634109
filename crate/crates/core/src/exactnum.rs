//! Exact arbitrary-precision arithmetic: the ground-truth layer.
//!
//! Every congruence check in this crate is ultimately decided here, over
//! [`BigRational`] values that are always stored fully reduced with a positive
//! denominator (the representation `num` maintains). There is no floating
//! point anywhere in the toolkit.
//!
//! Provides factorials and binomials (process-wide cache), rising factorials,
//! terminating Gauss hypergeometric sums, Bernoulli numbers and polynomials
//! under the `B_1 = -1/2` convention, integer beta values, exact harmonic
//! numbers, and p-adic valuation splits.

use num::{BigInt, BigRational, BigUint, One, Signed, Zero};
use once_cell::sync::Lazy;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq, Clone)]
pub enum ExactError {
    #[error("p-adic valuation of zero is +infinity, not a number")]
    ZeroArgument,
    #[error("lower parameter hits a pole at term {0} before the series terminates")]
    PoleBeforeTermination(u64),
    #[error("neither upper parameter is a nonpositive integer; series does not terminate")]
    NonTerminating,
}

/// Convenience constructor for small rationals.
pub fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// `x^k` for possibly negative `k` (then `x != 0`).
pub fn rat_pow(x: &BigRational, k: i64) -> BigRational {
    if k >= 0 {
        x.pow(k as i32)
    } else {
        x.pow(-k as i32).recip()
    }
}

/// A nonzero rational written as `p^valuation * unit` with `unit` coprime to `p`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValuationSplit {
    pub valuation: i64,
    pub unit: BigRational,
}

impl ValuationSplit {
    /// Reassemble `p^valuation * unit`, recovering the original value exactly.
    pub fn reassemble(&self, p: u64) -> BigRational {
        let pk = rat(p as i64, 1);
        &rat_pow(&pk, self.valuation) * &self.unit
    }
}

fn int_valuation(n: &BigInt, p: u64) -> (u64, BigInt) {
    let p = BigInt::from(p);
    let mut v = 0;
    let mut n = n.clone();
    loop {
        let (q, r) = num::Integer::div_rem(&n, &p);
        if !r.is_zero() {
            return (v, n);
        }
        v += 1;
        n = q;
    }
}

/// p-adic valuation of a nonzero integer.
pub fn bigint_valuation(n: &BigInt, p: u64) -> Option<u64> {
    if n.is_zero() {
        return None;
    }
    Some(int_valuation(n, p).0)
}

/// Split a nonzero rational as `p^v * unit` with `unit` a p-adic unit.
///
/// `v = nu_p(numerator) - nu_p(denominator)`, so `|x|_p = p^{-v}`. Zero is
/// rejected: its valuation is the `+infinity` convention, which this toolkit
/// represents as a distinct outcome rather than a number.
pub fn padic_split(x: &BigRational, p: u64) -> Result<ValuationSplit, ExactError> {
    if x.is_zero() {
        return Err(ExactError::ZeroArgument);
    }
    let (vn, num) = int_valuation(x.numer(), p);
    let (vd, den) = int_valuation(x.denom(), p);
    Ok(ValuationSplit {
        valuation: vn as i64 - vd as i64,
        unit: BigRational::new(num, den),
    })
}

/// `nu_p(x) >= bound`, with `nu_p(0) = +infinity` (so zero always passes).
pub fn valuation_at_least(x: &BigRational, p: u64, bound: i64) -> bool {
    match padic_split(x, p) {
        Err(ExactError::ZeroArgument) => true,
        Ok(split) => split.valuation >= bound,
        Err(_) => unreachable!(),
    }
}

static FACTORIAL_CACHE: Lazy<Mutex<Vec<BigInt>>> = Lazy::new(|| Mutex::new(vec![BigInt::one()]));
static FACTORIAL_CACHE_LIMIT: AtomicUsize = AtomicUsize::new(10_000);

/// Cap on the process-wide factorial cache (number of cached entries).
pub fn set_factorial_cache_limit(limit: usize) {
    FACTORIAL_CACHE_LIMIT.store(limit, Ordering::Relaxed);
}

/// `n!` as a big integer; values up to the cache limit are memoized.
pub fn factorial(n: u64) -> BigInt {
    let limit = FACTORIAL_CACHE_LIMIT.load(Ordering::Relaxed) as u64;
    if n < limit {
        let mut cache = FACTORIAL_CACHE.lock().unwrap();
        while (cache.len() as u64) <= n {
            let next = cache.last().unwrap() * BigInt::from(cache.len() as u64);
            cache.push(next);
        }
        return cache[n as usize].clone();
    }
    let mut acc = factorial(limit.saturating_sub(1));
    for i in limit..=n {
        acc *= BigInt::from(i);
    }
    acc
}

/// `C(n, k)` exactly; 0 when `k < 0` or `k > n`.
pub fn binomial_exact(n: u64, k: i64) -> BigInt {
    if k < 0 || k as u64 > n {
        return BigInt::zero();
    }
    let k = (k as u64).min(n - k as u64);
    let limit = FACTORIAL_CACHE_LIMIT.load(Ordering::Relaxed) as u64;
    if n < limit {
        return factorial(n) / (factorial(k) * factorial(n - k));
    }
    let mut acc = BigInt::one();
    for i in 1..=k {
        acc = acc * BigInt::from(n - k + i) / BigInt::from(i);
    }
    acc
}

/// Rising factorial `(alpha)_k = alpha (alpha+1) ... (alpha+k-1)`, with
/// `(alpha)_0 = 1`.
pub fn pochhammer_exact(alpha: &BigRational, k: u64) -> BigRational {
    let mut acc = BigRational::one();
    for j in 0..k {
        acc *= alpha + BigRational::from(BigInt::from(j));
    }
    acc
}

/// Termination index of a Gauss series: the smallest `-a` over upper
/// parameters that are nonpositive integers.
fn termination_index(a: &BigRational, b: &BigRational) -> Option<u64> {
    let as_nonpos = |x: &BigRational| {
        (x.is_integer() && !x.is_positive()).then(|| (-x.numer()).to_biguint().unwrap())
    };
    match (as_nonpos(a), as_nonpos(b)) {
        (Some(x), Some(y)) => Some(x.min(y)),
        (Some(x), None) | (None, Some(x)) => Some(x),
        (None, None) => None,
    }
    .map(|k: BigUint| {
        let d = k.to_u64_digits();
        if d.is_empty() { 0 } else { d[0] }
    })
}

/// Terminating Gauss sum `2F1(a, b; c; z) = sum_{k=0}^{K} (a)_k (b)_k / ((c)_k k!) z^k`.
///
/// One of `a`, `b` must be a nonpositive integer (else [`ExactError::NonTerminating`]);
/// `(c)_k` must not vanish for any `k <= K` (else [`ExactError::PoleBeforeTermination`]).
/// The sum is evaluated exactly with incremental term ratios.
pub fn hyp2f1_terminating(
    a: &BigRational,
    b: &BigRational,
    c: &BigRational,
    z: &BigRational,
) -> Result<BigRational, ExactError> {
    let big_k = termination_index(a, b).ok_or(ExactError::NonTerminating)?;
    // (c)_k vanishes for some k <= K iff c is an integer in (-K, 0].
    if c.is_integer() && !c.is_positive() {
        let neg_c = -c.numer();
        if neg_c < BigInt::from(big_k) {
            let pole_term = neg_c.to_biguint().unwrap().to_u64_digits();
            let j = if pole_term.is_empty() { 0 } else { pole_term[0] };
            return Err(ExactError::PoleBeforeTermination(j + 1));
        }
    }
    let mut sum = BigRational::zero();
    let mut term = BigRational::one();
    for k in 0..=big_k {
        sum += &term;
        if k < big_k {
            let kq = BigRational::from(BigInt::from(k));
            term = term * (a + &kq) * (b + &kq) * z
                / ((c + &kq) * (&kq + BigRational::one()));
        }
    }
    Ok(sum)
}

/// `B_0 .. B_nmax` by the defining recurrence `sum_{k=0}^{n} C(n+1,k) B_k = 0`.
///
/// This is the `x/(e^x - 1)` generating-function convention, i.e. `B_1 = -1/2`.
/// (The opposite sign convention for `B_1` also circulates; everything in this
/// crate uses this one.)
pub fn bernoulli_numbers(n_max: usize) -> Vec<BigRational> {
    let mut b = Vec::with_capacity(n_max + 1);
    b.push(BigRational::one());
    for n in 1..=n_max {
        let mut acc = BigRational::zero();
        for (k, bk) in b.iter().enumerate() {
            acc += BigRational::from(binomial_exact(n as u64 + 1, k as i64)) * bk;
        }
        b.push(-acc / BigRational::from(BigInt::from(n as u64 + 1)));
    }
    b
}

/// `B_n(x) = sum_k C(n,k) B_k x^{n-k}` evaluated exactly.
pub fn bernoulli_poly_eval(n: usize, x: &BigRational) -> BigRational {
    let b = bernoulli_numbers(n);
    let mut acc = BigRational::zero();
    for (k, bk) in b.iter().enumerate() {
        acc += BigRational::from(binomial_exact(n as u64, k as i64))
            * bk
            * rat_pow(x, (n - k) as i64);
    }
    acc
}

/// Beta function at positive integers: `B(P, Q) = (P-1)! (Q-1)! / (P+Q-1)!`.
pub fn beta_exact(p_arg: u64, q_arg: u64) -> BigRational {
    assert!(p_arg >= 1 && q_arg >= 1, "beta_exact requires positive integer arguments");
    BigRational::new(
        factorial(p_arg - 1) * factorial(q_arg - 1),
        factorial(p_arg + q_arg - 1),
    )
}

/// `H_n = sum_{k=1}^{n} 1/k` exactly; `H_0 = 0`.
pub fn harmonic_exact(n: u64) -> BigRational {
    let mut acc = BigRational::zero();
    for k in 1..=n {
        acc += rat(1, k as i64);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::modcore::is_prime_u64;
    use proptest::prelude::*;

    #[test]
    fn padic_split_examples() {
        let x = rat(7, 12);
        let s = padic_split(&x, 7).unwrap();
        assert_eq!((s.valuation, s.unit), (1, rat(1, 12)));
        let y = rat(2548, 27);
        let s = padic_split(&y, 7).unwrap();
        assert_eq!((s.valuation, s.unit), (2, rat(52, 27)));
        let one = rat(1, 1);
        let s = padic_split(&one, 13).unwrap();
        assert_eq!((s.valuation, s.unit), (0, rat(1, 1)));
        assert_eq!(padic_split(&rat(0, 1), 5), Err(ExactError::ZeroArgument));
    }

    #[test]
    fn binomial_examples() {
        assert_eq!(binomial_exact(0, 0), BigInt::from(1));
        assert_eq!(binomial_exact(8, 4), BigInt::from(70));
        assert_eq!(binomial_exact(14, 7), BigInt::from(3432));
        assert_eq!(binomial_exact(5, -1), BigInt::zero());
        assert_eq!(binomial_exact(5, 6), BigInt::zero());
    }

    #[test]
    fn pochhammer_examples() {
        assert_eq!(pochhammer_exact(&rat(9, 2), 0), rat(1, 1));
        assert_eq!(pochhammer_exact(&rat(-5, 2), 2), rat(15, 4));
        assert_eq!(pochhammer_exact(&rat(-10, 3), 3), rat(-280, 27));
    }

    #[test]
    fn hyp2f1_examples() {
        // a = -1 collapses to 1 - bz/c
        let r = hyp2f1_terminating(&rat(-1, 1), &rat(1, 2), &rat(4, 3), &rat(4, 1)).unwrap();
        assert_eq!(r, rat(-1, 2));
        let r = hyp2f1_terminating(&rat(-2, 1), &rat(-1, 2), &rat(1, 1), &rat(1, 1)).unwrap();
        assert_eq!(r, rat(15, 8));
        let r = hyp2f1_terminating(&rat(-3, 1), &rat(-5, 2), &rat(-10, 3), &rat(4, 3)).unwrap();
        assert_eq!(r, rat(1, 7));
        assert_eq!(
            hyp2f1_terminating(&rat(1, 2), &rat(1, 3), &rat(1, 1), &rat(1, 1)),
            Err(ExactError::NonTerminating)
        );
        assert_eq!(
            hyp2f1_terminating(&rat(-3, 1), &rat(1, 2), &rat(-2, 1), &rat(1, 1)),
            Err(ExactError::PoleBeforeTermination(3))
        );
    }

    #[test]
    fn bernoulli_examples() {
        let b = bernoulli_numbers(10);
        assert_eq!(b[0], rat(1, 1));
        assert_eq!(b[1], rat(-1, 2));
        assert_eq!(b[2], rat(1, 6));
        assert_eq!(b[3], rat(0, 1));
        assert_eq!(b[10], rat(5, 66));
    }

    #[test]
    fn bernoulli_tail_properties() {
        // odd indices vanish; von Staudt-Clausen pins the even denominators
        let b = bernoulli_numbers(60);
        for k in 1..=29 {
            assert!(b[2 * k + 1].is_zero(), "B_{} should vanish", 2 * k + 1);
        }
        for k in 1..=30 {
            let expected: u64 = (2..=(2 * k as u64 + 1))
                .filter(|&q| is_prime_u64(q) && (2 * k as u64).is_multiple_of(q - 1))
                .product();
            assert_eq!(b[2 * k].denom(), &BigInt::from(expected), "denom of B_{}", 2 * k);
        }
    }

    #[test]
    fn bernoulli_poly_examples() {
        let b = bernoulli_numbers(10);
        for (n, bn) in b.iter().enumerate() {
            assert_eq!(&bernoulli_poly_eval(n, &rat(0, 1)), bn);
        }
        assert_eq!(bernoulli_poly_eval(3, &rat(1, 3)), rat(1, 27));
        assert_eq!(bernoulli_poly_eval(3, &rat(1, 2)), rat(0, 1));
    }

    #[test]
    fn beta_examples() {
        assert_eq!(beta_exact(1, 1), rat(1, 1));
        assert_eq!(beta_exact(2, 2), rat(1, 6));
        // B(m+1, n-m-k) = 1/((m+1) C(n-k, m+1)) at m=1, n-k=3
        assert_eq!(beta_exact(2, 2), rat(1, 2) / BigRational::from(binomial_exact(3, 2)));
    }

    #[test]
    fn harmonic_examples() {
        assert_eq!(harmonic_exact(0), rat(0, 1));
        assert_eq!(harmonic_exact(3), rat(11, 6));
        assert_eq!(harmonic_exact(6), rat(49, 20));
    }

    /// Naive reference evaluator: every term built from scratch.
    fn hyp2f1_naive(a: &BigRational, b: &BigRational, c: &BigRational, z: &BigRational, k_max: u64) -> BigRational {
        (0..=k_max)
            .map(|k| {
                pochhammer_exact(a, k) * pochhammer_exact(b, k) * rat_pow(z, k as i64)
                    / (pochhammer_exact(c, k) * BigRational::from(factorial(k)))
            })
            .sum()
    }

    proptest! {
        #[test]
        fn split_roundtrip(num in -5000i64..5000, den in 1i64..5000, pi in 0usize..4) {
            let p = [3u64, 5, 7, 13][pi];
            let x = rat(num, den);
            if !x.is_zero() {
                let s = padic_split(&x, p).unwrap();
                prop_assert_eq!(s.reassemble(p), x);
                prop_assert!(!num::Integer::is_multiple_of(s.unit.numer(), &BigInt::from(p)));
                prop_assert!(!num::Integer::is_multiple_of(s.unit.denom(), &BigInt::from(p)));
            }
        }

        #[test]
        fn hyp2f1_matches_naive(
            neg_a in 0i64..12,
            bn in -20i64..20, bd in 1i64..6,
            cn in 1i64..20, cd in 1i64..6,
            zn in -8i64..8, zd in 1i64..5,
        ) {
            let a = rat(-neg_a, 1);
            let (b, c, z) = (rat(bn, bd), rat(cn, cd), rat(zn, zd));
            let fast = hyp2f1_terminating(&a, &b, &c, &z).unwrap();
            prop_assert_eq!(fast, hyp2f1_naive(&a, &b, &c, &z, neg_a as u64));
        }

        #[test]
        fn beta_symmetry(p in 1u64..40, q in 1u64..40) {
            prop_assert_eq!(beta_exact(p, q), beta_exact(q, p));
            prop_assert_eq!(beta_exact(p, 1), rat(1, p as i64));
        }
    }
}
