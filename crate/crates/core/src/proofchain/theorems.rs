//! The headline congruences and their published neighbours.

use super::chain_3k1::restricted_central_sum;
use super::{require, valuation_check, ChainError};
use crate::binomseq::{central_prefix_sum, shifted_binom_rhs, shifted_binom_sum, SeqError};
use crate::check::CheckResult;
use crate::exactnum::{bernoulli_numbers, binomial_exact, rat, rat_pow};
use crate::modcore::{is_prime_u64, jacobi_symbol, PrimePowerModulus, Residue};
use num::{BigInt, BigRational, One, Zero};

/// The main vanishing sum: `sum_{k=1}^{2(p^a-1)/3} C(2k,k) = 0 (mod p^2)`,
/// proved for `p = 1 (mod 3)` and any `a >= 1`.
pub fn thm_adamchuk_check(p: u64, a: u32) -> Result<CheckResult, ChainError> {
    require(
        is_prime_u64(p) && p % 3 == 1,
        format!("proved branch requires p = 1 (mod 3), got {p}"),
    )?;
    vanishing_two_thirds_sum(p, a)
}

/// The same sum on the open branch `p = 2 (mod 3)` with even exponent.
/// The outcome is a recorded observation, not a theorem check.
pub fn conj_even_check(p: u64, a: u32) -> Result<CheckResult, ChainError> {
    require(is_prime_u64(p) && p % 3 == 2, format!("scan branch requires p = 2 (mod 3), got {p}"))?;
    require(a >= 2 && a.is_multiple_of(2), format!("scan branch requires even a >= 2, got {a}"))?;
    Ok(vanishing_two_thirds_sum(p, a)?.with_extra("EXPERIMENTAL"))
}

fn vanishing_two_thirds_sum(p: u64, a: u32) -> Result<CheckResult, ChainError> {
    let ctx = PrimePowerModulus::new(p, a, 2)?;
    let pa = ctx.pa();
    debug_assert_eq!((pa - 1) % 3, 0);
    let sum = central_prefix_sum(ctx, 1, 2 * (pa - 1) / 3);
    let pass = sum.is_zero();
    Ok(CheckResult::compared("p^2", sum.to_string(), "0", pass))
}

/// `sum_{k=0}^{p^a-1} C(2k,k) = (p^a / 3) (mod p^2)` for odd `p`, with the
/// Jacobi symbol on the right.
pub fn sun_check(p: u64, a: u32) -> Result<CheckResult, ChainError> {
    let ctx = PrimePowerModulus::new(p, a, 2)?;
    let pa = ctx.pa();
    let lhs = central_prefix_sum(ctx, 0, pa - 1);
    let rhs = Residue::from_i64(ctx, jacobi_symbol(pa as i64, 3)? as i64);
    Ok(super::residue_eq(&lhs, &rhs))
}

/// `nu_p` of the restricted sum `sum_{k != (p-1)/3} C(2k,k)/(3k+1) >= 1`.
pub fn thm_3k1_check(p: u64) -> Result<CheckResult, ChainError> {
    let s = restricted_central_sum(p)?;
    Ok(valuation_check(&s, p, 1))
}

/// `sum_{k=0}^{p-1} C(2k, k+d) = ((p-d)/3) (mod p)` for one shift `d`.
pub fn pan_sun_check(p: u64, d: u64) -> Result<CheckResult, ChainError> {
    let lhs = shifted_binom_sum(p, d).map_err(|e| match e {
        SeqError::OutOfRange(d, p) => {
            ChainError::PrecondViolation(format!("shift d={d} outside [0, {p}]"))
        }
        SeqError::Mod(m) => ChainError::Mod(m),
        SeqError::PrecondViolation(m) => ChainError::PrecondViolation(m),
    })?;
    let rhs = Residue::from_i64(lhs.context(), shifted_binom_rhs(p, d).unwrap() as i64);
    Ok(super::residue_eq(&lhs, &rhs))
}

/// The Bernoulli-corrected refinement of the Jacobi-symbol sum.
///
/// Two textual readings circulate: Bernoulli argument `1/2` or `1/3`, stated
/// at level `p^2` or `p^3`. At `p^2` the `p^2 B_{p-2}(x)/3` term vanishes for
/// any p-integral `x` and both readings degenerate to the Jacobi-symbol sum;
/// the substantive statement lives at `p^3`. This check evaluates all four
/// readings, requires the two degenerate ones to hold, and passes when
/// exactly one non-degenerate reading verifies, recording which in `extra`
/// rather than hard-coding it.
pub fn mt_check(p: u64) -> Result<CheckResult, ChainError> {
    require(is_prime_u64(p) && p >= 5, format!("requires a prime p >= 5, got {p}"))?;
    let mut lhs_exact = BigInt::zero();
    let mut central = BigInt::one();
    for k in 0..p {
        if k > 0 {
            central = central * BigInt::from(2 * (2 * k - 1)) / BigInt::from(k);
        }
        lhs_exact += &central;
    }
    let bern = bernoulli_numbers((p - 2) as usize);
    let poly_at = |x: &BigRational| -> BigRational {
        bern.iter()
            .enumerate()
            .map(|(k, bk)| {
                BigRational::from(binomial_exact(p - 2, k as i64))
                    * bk
                    * rat_pow(x, (p - 2 - k as u64) as i64)
            })
            .sum()
    };
    let jac = jacobi_symbol(p as i64, 3)? as i64;
    let args = [rat(1, 2), rat(1, 3)];
    let labels = ["1/2", "1/3"];
    let rhs_exact: Vec<BigRational> = args
        .iter()
        .map(|x| rat(jac, 1) - rat((p * p) as i64, 3) * poly_at(x))
        .collect();
    let ctx2 = PrimePowerModulus::new(p, 1, 2)?;
    let ctx3 = PrimePowerModulus::new(p, 1, 3)?;
    let verdict = |ctx: PrimePowerModulus, rhs: &BigRational| -> Result<bool, ChainError> {
        Ok(Residue::from_bigint(ctx, &lhs_exact) == Residue::from_rational(ctx, rhs)?)
    };
    let degenerate_ok = verdict(ctx2, &rhs_exact[0])? && verdict(ctx2, &rhs_exact[1])?;
    let at_p3 = [verdict(ctx3, &rhs_exact[0])?, verdict(ctx3, &rhs_exact[1])?];
    let winner = match at_p3 {
        [true, false] => Some(0),
        [false, true] => Some(1),
        _ => None,
    };
    let pass = degenerate_ok && winner.is_some();
    let (lhs_r, rhs_r, extra) = match winner {
        Some(i) => (
            Residue::from_bigint(ctx3, &lhs_exact).to_string(),
            Residue::from_rational(ctx3, &rhs_exact[i])?.to_string(),
            format!(
                "verified reading: argument {} at p^3; argument {} fails at p^3; \
                 both arguments degenerate at p^2 to the Jacobi-symbol sum ({})",
                labels[i],
                labels[1 - i],
                if degenerate_ok { "hold" } else { "FAIL" },
            ),
        ),
        None => (
            Residue::from_bigint(ctx3, &lhs_exact).to_string(),
            format!(
                "{} | {}",
                Residue::from_rational(ctx3, &rhs_exact[0])?,
                Residue::from_rational(ctx3, &rhs_exact[1])?
            ),
            format!(
                "no unique reading: argument 1/2 {} and argument 1/3 {} at p^3",
                at_p3[0], at_p3[1]
            ),
        ),
    };
    Ok(CheckResult::compared("p^3", lhs_r, rhs_r, pass).with_extra(extra))
}
