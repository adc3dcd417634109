//! Streaming evaluation of central-binomial sequences modulo `p^e`.
//!
//! `C(2k,k)` routinely picks up factors of `p`, so a plain modular ratio
//! update dies at every `k = -1 (mod p)`. The stream instead carries the
//! p-adic valuation separately from the unit part: each step multiplies by
//! `2 (2k+1) / (k+1)` with all factors of `p` stripped from `2k+1` and `k+1`
//! before any modular multiplication or inversion, giving O(1) amortized work
//! per term and an always-invertible unit.
//!
//! Two computation paths exist on purpose. The factored stream is the fast
//! path (sum lengths up to ~10^7); exact big-integer/rational evaluation in
//! [`crate::exactnum`] is ground truth, and the test suites assert the two
//! agree wherever they overlap. Sums whose terms have genuinely negative
//! valuation (the `1/(k C(2k,k))` and `C(2k,k)/k` families) run on the exact
//! path only, because their cancellation structure is the thing under test.

use crate::exactnum::{binomial_exact, padic_split, ValuationSplit};
use crate::modcore::{inv_u64, jacobi_symbol, ModError, PrimePowerModulus, Residue};
use num::{BigInt, BigRational, One, Zero};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq, Clone)]
pub enum SeqError {
    #[error("shift d = {0} outside [0, {1}]")]
    OutOfRange(u64, u64),
    #[error("{0}")]
    PrecondViolation(String),
    #[error(transparent)]
    Mod(#[from] ModError),
}

/// A value `p^valuation * unit` with `unit` coprime to `p`, exact modulo
/// `p^(e + valuation)`. Reducing to level `e` yields 0 whenever
/// `valuation >= e`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactoredResidue {
    pub valuation: i64,
    pub unit: Residue,
}

impl FactoredResidue {
    /// Reduce `p^valuation * unit` to a plain residue mod `p^e`.
    pub fn to_residue(&self) -> Residue {
        let ctx = self.unit.context();
        debug_assert!(self.valuation >= 0, "streamed binomials have nonnegative valuation");
        if self.valuation >= ctx.e() as i64 {
            return ctx.zero();
        }
        let pv = Residue::from_u64(ctx, ctx.p()).pow(self.valuation as u64);
        &pv * &self.unit
    }
}

fn strip_p(mut n: u64, p: u64) -> (u32, u64) {
    let mut v = 0;
    while n.is_multiple_of(p) {
        n /= p;
        v += 1;
    }
    (v, n)
}

/// Iterator over `C(2k,k)` for `k = 0..=k_max` as factored residues.
pub struct CentralBinomStream {
    ctx: PrimePowerModulus,
    m: u64,
    p: u64,
    k: u64,
    k_max: u64,
    val: i64,
    unit: u64,
}

impl Iterator for CentralBinomStream {
    type Item = FactoredResidue;

    fn next(&mut self) -> Option<FactoredResidue> {
        if self.k > self.k_max {
            return None;
        }
        let out = FactoredResidue {
            valuation: self.val,
            unit: Residue::from_u64(self.ctx, self.unit),
        };
        // advance by C(2(k+1), k+1) = C(2k,k) * 2 (2k+1) / (k+1)
        let k = self.k;
        let (v_num, num) = strip_p(2 * k + 1, self.p);
        let (v_den, den) = strip_p(k + 1, self.p);
        self.val += v_num as i64 - v_den as i64;
        let mut u = self.unit as u128;
        u = u * 2 % self.m as u128;
        u = u * (num % self.m) as u128 % self.m as u128;
        let dinv = inv_u64(den % self.m, self.m).expect("stripped factor is a unit");
        u = u * dinv as u128 % self.m as u128;
        self.unit = u as u64;
        self.k += 1;
        Some(out)
    }
}

/// Stream `C(2k,k)` for `k = 0..=k_max` as `(nu_p, unit mod p^e)` pairs.
pub fn central_binom_stream(ctx: PrimePowerModulus, k_max: u64) -> CentralBinomStream {
    let m = ctx
        .modulus_u64()
        .expect("binomial streaming requires a fixed-width modulus");
    CentralBinomStream { ctx, m, p: ctx.p(), k: 0, k_max, val: 0, unit: 1 }
}

/// `sum_{k=lower}^{upper} C(2k,k) mod p^e` via the factored stream.
pub fn central_prefix_sum(ctx: PrimePowerModulus, lower: u64, upper: u64) -> Residue {
    assert!(lower <= upper, "empty or inverted range");
    let mut acc = ctx.zero();
    for (k, term) in central_binom_stream(ctx, upper).enumerate() {
        if k as u64 >= lower {
            acc = &acc + &term.to_residue();
        }
    }
    acc
}

/// `sum_{k=0}^{p-1} C(2k, k+d) mod p`, for a shift `0 <= d <= p`.
pub fn shifted_binom_sum(p: u64, d: u64) -> Result<Residue, SeqError> {
    let ctx = PrimePowerModulus::new(p, 1, 1)?;
    if d > p {
        return Err(SeqError::OutOfRange(d, p));
    }
    let pb = BigInt::from(p);
    let mut acc = BigInt::zero();
    for k in 0..p {
        acc = (acc + binomial_exact(2 * k, (k + d) as i64)) % &pb;
    }
    Ok(Residue::from_bigint(ctx, &acc))
}

/// Jacobi value `((p - d)/3)` that the shifted sum is congruent to.
pub fn shifted_binom_rhs(p: u64, d: u64) -> Result<i8, SeqError> {
    Ok(jacobi_symbol(p as i64 - d as i64, 3)?)
}

/// Exact `sum_{k=1}^{(p^a - 1)/3} 1/(k C(2k,k))` with its p-adic split.
///
/// Exact path only: individual terms have negative valuation and the
/// cancellation down to `nu_p(p^(a-1) * sum) >= 1` is what gets verified.
pub fn inv_k_central_sum(ctx: PrimePowerModulus) -> Result<ValuationSplit, SeqError> {
    let pa = ctx.pa();
    if pa % 3 != 1 {
        return Err(SeqError::PrecondViolation(format!(
            "p^a = {pa} is not 1 mod 3; the sum bound (p^a - 1)/3 is not an integer"
        )));
    }
    let upper = (pa - 1) / 3;
    let mut acc = BigRational::zero();
    let mut central = BigInt::one();
    for k in 1..=upper {
        central = central * BigInt::from(2 * (2 * k - 1)) / BigInt::from(k);
        acc += BigRational::new(BigInt::one(), BigInt::from(k) * &central);
    }
    padic_split(&acc, ctx.p()).map_err(|e| SeqError::PrecondViolation(e.to_string()))
}

/// Exact `sum_{k=1}^{upper} C(2k,k)/k` with its p-adic split.
pub fn central_over_k_sum(ctx: PrimePowerModulus, upper: u64) -> ValuationSplit {
    assert!(upper >= 1);
    let mut acc = BigRational::zero();
    let mut central = BigInt::one();
    for k in 1..=upper {
        central = central * BigInt::from(2 * (2 * k - 1)) / BigInt::from(k);
        acc += BigRational::new(central.clone(), BigInt::from(k));
    }
    padic_split(&acc, ctx.p()).expect("sum of positive terms is nonzero")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rat;
    use crate::modcore::addition_carries;

    fn ctx(p: u64, a: u32, e: u8) -> PrimePowerModulus {
        PrimePowerModulus::new(p, a, e).unwrap()
    }

    #[test]
    fn stream_examples() {
        let c = ctx(7, 1, 2);
        let terms: Vec<_> = central_binom_stream(c, 7).collect();
        assert_eq!(terms[0].valuation, 0);
        assert_eq!(terms[0].unit.to_u64(), Some(1));
        // C(8,4) = 70 = 7 * 10
        assert_eq!((terms[4].valuation, terms[4].unit.to_u64()), (1, Some(10)));
        // C(14,7) = 3432, nu_7 = 0, 3432 mod 49 = 2
        assert_eq!((terms[7].valuation, terms[7].unit.to_u64()), (0, Some(2)));
    }

    #[test]
    fn stream_matches_exact_split_and_carries() {
        for p in [5u64, 7, 13, 31] {
            for e in [1u8, 2] {
                let c = ctx(p, 1, e);
                for (k, term) in central_binom_stream(c, 300).enumerate() {
                    let exact = BigRational::from(binomial_exact(2 * k as u64, k as i64));
                    let split = padic_split(&exact, p).unwrap();
                    assert_eq!(term.valuation, split.valuation, "p={p} e={e} k={k}");
                    assert_eq!(
                        term.unit,
                        Residue::from_rational(c, &split.unit).unwrap(),
                        "p={p} e={e} k={k}"
                    );
                    assert_eq!(
                        term.valuation as u64,
                        addition_carries(k as u64, k as u64, p),
                        "kummer p={p} k={k}"
                    );
                }
            }
        }
    }

    #[test]
    fn prefix_sum_examples() {
        assert!(central_prefix_sum(ctx(7, 1, 2), 1, 4).is_zero()); // 98 = 2*49
        assert!(central_prefix_sum(ctx(13, 1, 2), 1, 8).is_zero()); // 17576 = 104*169
        let s = central_prefix_sum(ctx(5, 1, 2), 0, 4);
        assert_eq!(s.to_u64(), Some(24)); // 99 mod 25 = -1 = (5/3) mod 25
        assert_eq!(jacobi_symbol(5, 3).unwrap(), -1);
    }

    #[test]
    fn prefix_sum_lower_bound_is_k0_term() {
        let c = ctx(7, 1, 2);
        let all = central_prefix_sum(c, 0, 20);
        let tail = central_prefix_sum(c, 1, 20);
        assert_eq!(&all - &tail, c.one());
    }

    #[test]
    fn shifted_sum_examples() {
        assert_eq!(shifted_binom_sum(5, 0).unwrap().to_u64(), Some(4)); // 99 mod 5
        assert_eq!(shifted_binom_sum(5, 1).unwrap().to_u64(), Some(1)); // 76 mod 5
        for p in [5u64, 7, 13] {
            assert!(shifted_binom_sum(p, p).unwrap().is_zero());
            assert_eq!(shifted_binom_rhs(p, p).unwrap(), 0);
        }
        assert!(matches!(shifted_binom_sum(5, 6), Err(SeqError::OutOfRange(6, 5))));
    }

    #[test]
    fn inv_k_sum_examples() {
        let s = inv_k_central_sum(ctx(7, 1, 1)).unwrap();
        assert_eq!(s.reassemble(7), rat(7, 12));
        assert_eq!(s.valuation, 1);
        assert!(inv_k_central_sum(ctx(13, 1, 1)).unwrap().valuation >= 1);
        // a = 2: nu_7(7 * sum) >= 1, i.e. valuation >= 0
        assert!(inv_k_central_sum(ctx(7, 2, 1)).unwrap().valuation + 1 >= 1);
        assert!(matches!(
            inv_k_central_sum(ctx(5, 1, 1)),
            Err(SeqError::PrecondViolation(_))
        ));
    }

    #[test]
    fn central_over_k_examples() {
        let s = central_over_k_sum(ctx(5, 1, 1), 4);
        assert_eq!(s.reassemble(5), rat(175, 6));
        assert_eq!(s.valuation, 2);
        let s = central_over_k_sum(ctx(7, 1, 1), 3);
        assert_eq!(s.reassemble(7), rat(35, 3));
        assert_eq!(s.valuation, 1);
        assert_eq!(central_over_k_sum(ctx(11, 1, 1), 1).reassemble(11), rat(2, 1));
    }

    #[test]
    fn wraparound_reflection() {
        // sum_{k=(2 p^a + 1)/3}^{p^a - 1} C(2k,k) = -2 p^a sum_{k=1}^{(p^a-1)/3} 1/(k C(2k,k))  (mod p^2)
        for (p, a) in [(7u64, 1u32), (7, 2), (13, 1), (13, 2)] {
            let c = ctx(p, a, 2);
            let pa = c.pa();
            let lhs = central_prefix_sum(c, (2 * pa + 1) / 3, pa - 1);
            let s = inv_k_central_sum(c).unwrap().reassemble(p);
            let rhs_exact = rat(-2 * pa as i64, 1) * s;
            let rhs = Residue::from_rational(c, &rhs_exact).unwrap();
            assert_eq!(lhs, rhs, "p={p} a={a}");
        }
    }
}
