//! The four hypergeometric quantities of the 3K1 chain.
//!
//! For a prime `p = 1 (mod 3)` the restricted sum
//! `sum_{k != (p-1)/3} C(2k,k)/(3k+1)` over `k = 0..(p-1)/2` is, modulo `p`,
//! the difference `A - F` of a terminating Gauss series and its single
//! p-divisible-denominator term, while the tail of the sum collapses to
//! `L - Q`, a quarter-argument series minus its last term:
//!
//! - `A = 2F1[(1-p)/2, 1/3 - p/6; 4/3 - 2p/3 | 4]`
//! - `F = the k = (p-1)/3 term of A's series`
//! - `L = 2F1[(1-p)/6, (1+p)/2; 7/6 + p/3 | 1/4]`
//! - `Q = the k = (p-1)/6 term of L's series`
//!
//! All four are finite exact rationals; `A` and `L` each carry at most one
//! factor of `p` in a denominator, so `nu_p >= -1`.

use super::{require_one_mod_three, ChainError};
use crate::exactnum::{hyp2f1_terminating, pochhammer_exact, rat, rat_pow, valuation_at_least};
use num::{BigRational, One};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FrakTag {
    A,
    F,
    L,
    Q,
}

/// The quantities `A`, `F`, `L`, `Q` evaluated at one prime.
#[derive(Debug, Clone)]
pub struct FrakQuantities {
    pub p: u64,
    pub a: BigRational,
    pub f: BigRational,
    pub l: BigRational,
    pub q: BigRational,
}

/// Parameters of `A`'s series: upper `(1-p)/2`, `1/3 - p/6`; lower `4/3 - 2p/3`.
pub(crate) fn a_params(p: i64) -> (BigRational, BigRational, BigRational) {
    (
        rat(1 - p, 2),
        rat(1, 3) - rat(p, 6),
        rat(4, 3) - rat(2 * p, 3),
    )
}

/// Parameters of `L`'s series: upper `(1-p)/6`, `(1+p)/2`; lower `7/6 + p/3`.
pub(crate) fn l_params(p: i64) -> (BigRational, BigRational, BigRational) {
    (rat(1 - p, 6), rat(1 + p, 2), rat(7, 6) + rat(p, 3))
}

/// One explicit series term `(a)_k (b)_k / ((1)_k (c)_k) * z^k`.
fn series_term(
    a: &BigRational,
    b: &BigRational,
    c: &BigRational,
    z: &BigRational,
    k: u64,
) -> BigRational {
    pochhammer_exact(a, k) * pochhammer_exact(b, k) * rat_pow(z, k as i64)
        / (pochhammer_exact(&BigRational::one(), k) * pochhammer_exact(c, k))
}

impl FrakQuantities {
    pub fn eval(p: u64) -> Result<Self, ChainError> {
        require_one_mod_three(p)?;
        let pi = p as i64;
        let (aa, ab, ac) = a_params(pi);
        let a = hyp2f1_terminating(&aa, &ab, &ac, &rat(4, 1))?;
        let f = series_term(&aa, &ab, &ac, &rat(4, 1), (p - 1) / 3);
        let (la, lb, lc) = l_params(pi);
        let l = hyp2f1_terminating(&la, &lb, &lc, &rat(1, 4))?;
        let q = series_term(&la, &lb, &lc, &rat(1, 4), (p - 1) / 6);
        debug_assert!(valuation_at_least(&a, p, -1));
        debug_assert!(valuation_at_least(&l, p, -1));
        Ok(FrakQuantities { p, a, f, l, q })
    }

    pub fn get(&self, tag: FrakTag) -> &BigRational {
        match tag {
            FrakTag::A => &self.a,
            FrakTag::F => &self.f,
            FrakTag::L => &self.l,
            FrakTag::Q => &self.q,
        }
    }
}

/// Exact value of one tagged quantity.
pub fn eval_frak(tag: FrakTag, p: u64) -> Result<BigRational, ChainError> {
    Ok(FrakQuantities::eval(p)?.get(tag).clone())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{binomial_exact, padic_split};
    use num::Zero;

    #[test]
    fn preconditions() {
        assert!(eval_frak(FrakTag::A, 5).is_err());
        assert!(eval_frak(FrakTag::A, 9).is_err());
    }

    #[test]
    fn valuations() {
        for p in [7u64, 13, 19] {
            let fr = FrakQuantities::eval(p).unwrap();
            assert!(padic_split(&fr.a, p).unwrap().valuation >= -1);
            assert!(padic_split(&fr.l, p).unwrap().valuation >= -1);
            // F and Q are exactly the single negative-valuation terms
            assert_eq!(padic_split(&fr.f, p).unwrap().valuation, -1, "p={p}");
            assert_eq!(padic_split(&fr.q, p).unwrap().valuation, -1, "p={p}");
        }
    }

    #[test]
    fn a_minus_f_is_restricted_series() {
        // summing A's terms with k = (p-1)/3 removed reproduces A - F:
        // the two summation orders of the same restricted sum agree
        for p in [7u64, 13] {
            let fr = FrakQuantities::eval(p).unwrap();
            let (aa, ab, ac) = a_params(p as i64);
            let mut acc = BigRational::zero();
            for k in (0..=(p - 1) / 2).rev() {
                if k != (p - 1) / 3 {
                    acc += series_term(&aa, &ab, &ac, &rat(4, 1), k);
                }
            }
            assert_eq!(acc, &fr.a - &fr.f, "p={p}");
        }
    }

    #[test]
    fn basic_series_facts() {
        // (1/2)_k / (1)_k * 4^k = C(2k,k)  and  (1/3)_k / (4/3)_k = 1/(3k+1)
        for k in 0..40u64 {
            let lhs = pochhammer_exact(&rat(1, 2), k) / pochhammer_exact(&rat(1, 1), k)
                * rat_pow(&rat(4, 1), k as i64);
            assert_eq!(lhs, BigRational::from(binomial_exact(2 * k, k as i64)));
            let lhs = pochhammer_exact(&rat(1, 3), k) / pochhammer_exact(&rat(4, 3), k);
            assert_eq!(lhs, rat(1, 3 * k as i64 + 1));
        }
    }
}
