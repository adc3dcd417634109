//! Pure combinatorial identities used by the main chain, checked exactly.
//!
//! The central object is the expansion of `sum_{k=m+1}^{n} (-3)^k / C(k, m+1)`
//! after writing `(-3)^k = sum_j C(k,j) (-4)^j` and swapping the order of
//! summation: the `j > m` part (the *tail block*) and the `j <= m` part (the
//! *head block*) each have closed forms, and their combination collapses to
//! the display that drives the final descent. Everything here is an identity
//! over exact rationals, valid for arbitrary integer parameters subject to
//! the stated shape constraints, not only the prime-derived ones.

use super::{exact_pair, require, ChainError};
use crate::check::CheckResult;
use crate::exactnum::{beta_exact, binomial_exact, harmonic_exact, rat, rat_pow};
use num::{BigInt, BigRational, One, Zero};

#[derive(Debug, Clone, PartialEq)]
pub enum CombIdentity {
    /// `sum_{k=0}^{n-1} lambda^k / C(n-1,k) = (n lambda^n / (lambda+1)^(n+1))
    /// (sum_{k=1}^{n} (lambda+1)^k/(k lambda^k) + sum_{k=1}^{n} (lambda+1)^k/k)`
    /// for `lambda` outside `{0, -1}`.
    InvBinomSum { n: u64, lambda: BigRational },
    /// `sum_{i=0}^{M} C(M,i) (-1)^i / (i+1) = 1/(M+1)`.
    UnitFraction { m: u64 },
    /// `B(m+1, n-m-k) = 1 / ((m+1) C(n-k, m+1))`.
    BetaBinom { m: u64, n: u64, k: u64 },
    /// `sum_{k=0}^{N} 1/C(k+i,i) = i/(i-1) - (N+1)/((i-1) C(N+i,N))` for `i >= 2`.
    RecipBinom { i: u64, n_upper: u64 },
    /// `sum_{k=0}^{n-j} C(k+j-m-1, j-m-1) = C(n-m, j-m)` for `m < j <= n`.
    HockeyStick { n: u64, m: u64, j: u64 },
    /// Closed form of the tail block (see module docs).
    TailClosed { n: u64, m: u64 },
    /// Closed form of the head block.
    HeadClosed { n: u64, m: u64 },
    /// The combined display `(lambda^m/(m+1)) (tail + head) = ...` at `lambda = -1/4`.
    BlockCombined { n: u64, m: u64 },
    /// `sum_{k=1}^{n} (-3)^k/k = sum_{k=1}^{n} C(n,k) (-1)^k (4^k - 1)/k`.
    Neg3Expand { n: u64 },
    /// `sum_{k=1}^{n} C(n,k) (-1)^k / k = -H_n`.
    AltBinomHarmonic { n: u64 },
}

/// Inner sums `sum_k C(k,j)/C(k,m+1)` stepped by the shared ratio
/// `r(k+1)/r(k) = (k-m)/(k+1-j)`.
fn ratio_sum(start_k: u64, end_k: u64, start_val: BigRational, j: u64, m: u64) -> BigRational {
    let mut acc = BigRational::zero();
    let mut r = start_val;
    for k in start_k..=end_k {
        acc += &r;
        if k < end_k {
            r = r * rat(k as i64 - m as i64, 1) / rat(k as i64 + 1 - j as i64, 1);
        }
    }
    acc
}

/// Tail block by definition: `sum_{j=m+1}^{n} (-4)^j sum_{k=j}^{n} C(k,j)/C(k,m+1)`.
pub(crate) fn tail_block_def(n: u64, m: u64) -> BigRational {
    let mut acc = BigRational::zero();
    // running C(j, m+1) and (-4)^j along j
    let mut cjm = BigInt::one(); // C(m+1, m+1)
    let mut pow4 = rat_pow(&rat(-4, 1), m as i64 + 1);
    for j in m + 1..=n {
        if j > m + 1 {
            cjm = cjm * BigInt::from(j) / BigInt::from(j - m - 1);
            pow4 *= rat(-4, 1);
        }
        let start = BigRational::new(BigInt::one(), cjm.clone());
        acc += &pow4 * ratio_sum(j, n, start, j, m);
    }
    acc
}

/// Head block by definition: `sum_{j=0}^{m} (-4)^j sum_{k=m+1}^{n} C(k,j)/C(k,m+1)`.
pub(crate) fn head_block_def(n: u64, m: u64) -> BigRational {
    let mut acc = BigRational::zero();
    let mut cm1j = BigInt::one(); // C(m+1, j)
    let mut pow4 = BigRational::one();
    for j in 0..=m {
        if j > 0 {
            cm1j = cm1j * BigInt::from(m + 2 - j) / BigInt::from(j);
            pow4 *= rat(-4, 1);
        }
        let start = BigRational::from(cm1j.clone());
        acc += &pow4 * ratio_sum(m + 1, n, start, j, m);
    }
    acc
}

/// `sum_{j=m+1}^{n} (-4)^j C(n,j)/(j-m)` scaled by `(n+1)/C(n+1, m+1)`.
fn tail_block_closed(n: u64, m: u64) -> BigRational {
    let mut acc = BigRational::zero();
    for j in m + 1..=n {
        acc += BigRational::from(binomial_exact(n, j as i64)) * rat_pow(&rat(-4, 1), j as i64)
            / rat(j as i64 - m as i64, 1);
    }
    rat(n as i64 + 1, 1) / BigRational::from(binomial_exact(n + 1, m as i64 + 1)) * acc
}

fn head_block_closed(n: u64, m: u64) -> BigRational {
    let mut with_m = BigRational::zero();
    let mut with_n = BigRational::zero();
    for j in 0..m {
        let pow = rat_pow(&rat(-4, 1), j as i64);
        let inv = rat(m as i64 - j as i64, 1);
        with_m += BigRational::from(binomial_exact(m, j as i64)) * &pow / &inv;
        with_n += BigRational::from(binomial_exact(n, j as i64)) * &pow / &inv;
    }
    rat(m as i64 + 1, 1) * with_m
        - rat(n as i64 + 1, 1) / BigRational::from(binomial_exact(n + 1, m as i64 + 1)) * with_n
        + rat(m as i64 + 1, 1) * rat_pow(&rat(-4, 1), m as i64) * harmonic_exact(n - m)
}

/// Right side of the combined display at `lambda = -1/4`.
pub(crate) fn block_combined_rhs(n: u64, m: u64) -> BigRational {
    let lam_m = rat_pow(&rat(-1, 4), m as i64);
    let mut head_part = BigRational::zero();
    for j in 0..m {
        head_part += BigRational::from(binomial_exact(m, j as i64))
            * rat_pow(&rat(-4, 1), j as i64)
            / rat(m as i64 - j as i64, 1);
    }
    let mut skew = BigRational::zero();
    for j in 0..=n {
        if j != m {
            skew += BigRational::from(binomial_exact(n, j as i64))
                * rat_pow(&rat(-4, 1), j as i64)
                / rat(j as i64 - m as i64, 1);
        }
    }
    &lam_m * head_part + &lam_m / BigRational::from(binomial_exact(n, m as i64)) * skew
        + harmonic_exact(n - m)
}

fn blocks_pre(n: u64, m: u64) -> Result<(), ChainError> {
    require(m < n, format!("requires m < n, got m={m} n={n}"))
}

pub fn check_combinatorial(id: &CombIdentity) -> Result<CheckResult, ChainError> {
    let result = match id {
        CombIdentity::InvBinomSum { n, lambda } => {
            require(*n >= 1, "requires n >= 1")?;
            require(
                !lambda.is_zero() && *lambda != -BigRational::one(),
                "requires lambda outside {0, -1}",
            )?;
            let n = *n;
            let lp1 = lambda + BigRational::one();
            let mut lhs = BigRational::zero();
            for k in 0..n {
                lhs += rat_pow(lambda, k as i64)
                    / BigRational::from(binomial_exact(n - 1, k as i64));
            }
            let mut inner = BigRational::zero();
            for k in 1..=n {
                let pk = rat_pow(&lp1, k as i64);
                inner += &pk / (rat(k as i64, 1) * rat_pow(lambda, k as i64))
                    + &pk / rat(k as i64, 1);
            }
            let rhs = rat(n as i64, 1) * rat_pow(lambda, n as i64)
                / rat_pow(&lp1, n as i64 + 1)
                * inner;
            exact_pair(&lhs, &rhs)
        }
        CombIdentity::UnitFraction { m } => {
            let mut lhs = BigRational::zero();
            for i in 0..=*m {
                let sign = if i % 2 == 0 { 1 } else { -1 };
                lhs += BigRational::from(binomial_exact(*m, i as i64) * BigInt::from(sign))
                    / rat(i as i64 + 1, 1);
            }
            exact_pair(&lhs, &rat(*m as i64 + 1, 1).recip())
        }
        CombIdentity::BetaBinom { m, n, k } => {
            require(n >= &(m + k + 1), "requires n - m - k >= 1")?;
            let lhs = beta_exact(m + 1, n - m - k);
            let rhs = (rat(*m as i64 + 1, 1)
                * BigRational::from(binomial_exact(n - k, *m as i64 + 1)))
            .recip();
            exact_pair(&lhs, &rhs)
        }
        CombIdentity::RecipBinom { i, n_upper } => {
            require(*i >= 2, "requires i >= 2")?;
            let mut lhs = BigRational::zero();
            for k in 0..=*n_upper {
                lhs += BigRational::from(binomial_exact(k + i, *i as i64)).recip();
            }
            let (ii, nn) = (*i as i64, *n_upper as i64);
            let rhs = rat(ii, ii - 1)
                - rat(nn + 1, ii - 1)
                    / BigRational::from(binomial_exact(n_upper + i, nn));
            exact_pair(&lhs, &rhs)
        }
        CombIdentity::HockeyStick { n, m, j } => {
            require(j > m && j <= n, "requires m < j <= n")?;
            let mut lhs = BigInt::zero();
            for k in 0..=(n - j) {
                lhs += binomial_exact(k + j - m - 1, (j - m - 1) as i64);
            }
            exact_pair(
                &BigRational::from(lhs),
                &BigRational::from(binomial_exact(n - m, (j - m) as i64)),
            )
        }
        CombIdentity::TailClosed { n, m } => {
            blocks_pre(*n, *m)?;
            exact_pair(&tail_block_def(*n, *m), &tail_block_closed(*n, *m))
        }
        CombIdentity::HeadClosed { n, m } => {
            blocks_pre(*n, *m)?;
            exact_pair(&head_block_def(*n, *m), &head_block_closed(*n, *m))
        }
        CombIdentity::BlockCombined { n, m } => {
            blocks_pre(*n, *m)?;
            let lhs = rat_pow(&rat(-1, 4), *m as i64) / rat(*m as i64 + 1, 1)
                * (tail_block_def(*n, *m) + head_block_def(*n, *m));
            exact_pair(&lhs, &block_combined_rhs(*n, *m))
        }
        CombIdentity::Neg3Expand { n } => {
            require(*n >= 1, "requires n >= 1")?;
            let mut lhs = BigRational::zero();
            let mut rhs = BigRational::zero();
            let mut pow3 = BigRational::one();
            let mut pow4 = BigInt::one();
            for k in 1..=*n {
                pow3 *= rat(-3, 1);
                pow4 *= BigInt::from(4);
                lhs += &pow3 / rat(k as i64, 1);
                let sign = if k % 2 == 0 { 1 } else { -1 };
                rhs += BigRational::from(
                    binomial_exact(*n, k as i64) * BigInt::from(sign) * (&pow4 - BigInt::one()),
                ) / rat(k as i64, 1);
            }
            exact_pair(&lhs, &rhs)
        }
        CombIdentity::AltBinomHarmonic { n } => {
            require(*n >= 1, "requires n >= 1")?;
            let mut lhs = BigRational::zero();
            for k in 1..=*n {
                let sign = if k % 2 == 0 { 1 } else { -1 };
                lhs += BigRational::from(binomial_exact(*n, k as i64) * BigInt::from(sign))
                    / rat(k as i64, 1);
            }
            exact_pair(&lhs, &(-harmonic_exact(*n)))
        }
    };
    Ok(result)
}

impl CombIdentity {
    /// Short parameter rendering for report rows.
    pub fn params_string(&self) -> String {
        match self {
            CombIdentity::InvBinomSum { n, lambda } => format!("n={n} lambda={lambda}"),
            CombIdentity::UnitFraction { m } => format!("M={m}"),
            CombIdentity::BetaBinom { m, n, k } => format!("m={m} n={n} k={k}"),
            CombIdentity::RecipBinom { i, n_upper } => format!("i={i} N={n_upper}"),
            CombIdentity::HockeyStick { n, m, j } => format!("n={n} m={m} j={j}"),
            CombIdentity::TailClosed { n, m }
            | CombIdentity::HeadClosed { n, m }
            | CombIdentity::BlockCombined { n, m } => format!("n={n} m={m}"),
            CombIdentity::Neg3Expand { n } | CombIdentity::AltBinomHarmonic { n } => {
                format!("n={n}")
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn passes(id: CombIdentity) -> bool {
        check_combinatorial(&id).unwrap().passed()
    }

    #[test]
    fn spec_witnesses() {
        // n=2, lambda=1: both sides 2
        let r = check_combinatorial(&CombIdentity::InvBinomSum { n: 2, lambda: rat(1, 1) })
            .unwrap();
        assert!(r.passed());
        assert_eq!(r.lhs, "2");
        // i=2, N=1: 1 + 1/3 = 2 - 2/3
        let r = check_combinatorial(&CombIdentity::RecipBinom { i: 2, n_upper: 1 }).unwrap();
        assert!(r.passed());
        assert_eq!(r.lhs, "4/3");
        assert!(passes(CombIdentity::RecipBinom { i: 2, n_upper: 0 }));
        // beta witness B(2,2) as the m=1, n-k=3 instance
        assert!(passes(CombIdentity::BetaBinom { m: 1, n: 4, k: 1 }));
    }

    #[test]
    fn blocks_small_and_prime_derived() {
        assert!(passes(CombIdentity::TailClosed { n: 5, m: 3 }));
        assert!(passes(CombIdentity::HeadClosed { n: 5, m: 3 }));
        assert!(passes(CombIdentity::BlockCombined { n: 5, m: 3 }));
        for (p, a) in [(7u64, 1u32), (13, 1), (7, 2)] {
            let pa = p.pow(a);
            let (n, m) = ((pa - 1) / 2, (pa - 1) / 3);
            assert!(passes(CombIdentity::TailClosed { n, m }), "p={p} a={a}");
            assert!(passes(CombIdentity::HeadClosed { n, m }), "p={p} a={a}");
            assert!(passes(CombIdentity::BlockCombined { n, m }), "p={p} a={a}");
        }
    }

    #[test]
    fn preconditions_rejected() {
        assert!(check_combinatorial(&CombIdentity::InvBinomSum { n: 3, lambda: rat(0, 1) })
            .is_err());
        assert!(check_combinatorial(&CombIdentity::InvBinomSum { n: 3, lambda: rat(-1, 1) })
            .is_err());
        assert!(check_combinatorial(&CombIdentity::RecipBinom { i: 1, n_upper: 4 }).is_err());
        assert!(check_combinatorial(&CombIdentity::HockeyStick { n: 5, m: 3, j: 3 }).is_err());
        assert!(check_combinatorial(&CombIdentity::TailClosed { n: 4, m: 4 }).is_err());
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn inv_binom_sum_random(n in 1u64..25, num in -6i64..7, den in 1i64..5) {
            let lambda = rat(num, den);
            prop_assume!(!lambda.is_zero() && lambda != rat(-1, 1));
            let ok = passes(CombIdentity::InvBinomSum { n, lambda });
            prop_assert!(ok);
        }

        #[test]
        fn unit_fraction_random(m in 0u64..40) {
            let ok = passes(CombIdentity::UnitFraction { m });
            prop_assert!(ok);
        }

        #[test]
        fn beta_binom_random(m in 0u64..12, k in 0u64..12, extra in 1u64..12) {
            let ok = passes(CombIdentity::BetaBinom { m, n: m + k + extra, k });
            prop_assert!(ok);
        }

        #[test]
        fn recip_binom_random(i in 2u64..12, n_upper in 0u64..30) {
            let ok = passes(CombIdentity::RecipBinom { i, n_upper });
            prop_assert!(ok);
        }

        #[test]
        fn hockey_random(m in 0u64..10, dj in 1u64..10, dn in 0u64..10) {
            let ok = passes(CombIdentity::HockeyStick { n: m + dj + dn, m, j: m + dj });
            prop_assert!(ok);
        }

        #[test]
        fn blocks_random(m in 0u64..14, dn in 1u64..14) {
            let n = m + dn;
            let ok = passes(CombIdentity::TailClosed { n, m });
            prop_assert!(ok);
            let ok = passes(CombIdentity::HeadClosed { n, m });
            prop_assert!(ok);
            let ok = passes(CombIdentity::BlockCombined { n, m });
            prop_assert!(ok);
        }

        #[test]
        fn harmonic_family_random(n in 1u64..40) {
            let ok = passes(CombIdentity::Neg3Expand { n });
            prop_assert!(ok);
            let ok = passes(CombIdentity::AltBinomHarmonic { n });
            prop_assert!(ok);
        }
    }
}
