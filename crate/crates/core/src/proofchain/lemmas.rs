//! Standalone lemmas: the terminating-2F1 identity with its annihilating
//! recurrence, and the harmonic-number congruences against Fermat quotients.

use super::{exact_pair, require, ChainError};
use crate::check::CheckResult;
use crate::exactnum::{hyp2f1_terminating, rat, rat_pow};
use crate::modcore::{fermat_quotient, harmonic_mod, is_prime_u64, PrimePowerModulus, Residue};
use num::BigRational;

/// Left side of the identity: `2F1[-3n, 1/2 - 3n; 2/3 - 4n | 4/3]`.
fn side_left(n: u64) -> Result<BigRational, ChainError> {
    let n = n as i64;
    Ok(hyp2f1_terminating(
        &rat(-3 * n, 1),
        &(rat(1, 2) - rat(3 * n, 1)),
        &(rat(2, 3) - rat(4 * n, 1)),
        &rat(4, 3),
    )?)
}

/// Right side: `4^{-n} * 2F1[-n, 1/2 - n; 5/6 - 2n | 1]`.
fn side_right(n: u64) -> Result<BigRational, ChainError> {
    let ni = n as i64;
    let series = hyp2f1_terminating(
        &rat(-ni, 1),
        &(rat(1, 2) - rat(ni, 1)),
        &(rat(5, 6) - rat(2 * ni, 1)),
        &rat(1, 1),
    )?;
    Ok(rat_pow(&rat(1, 4), ni) * series)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RecurrenceSide {
    Left,
    Right,
}

impl RecurrenceSide {
    pub fn as_str(&self) -> &'static str {
        match self {
            RecurrenceSide::Left => "left",
            RecurrenceSide::Right => "right",
        }
    }

    fn eval(&self, n: u64) -> Result<BigRational, ChainError> {
        match self {
            RecurrenceSide::Left => side_left(n),
            RecurrenceSide::Right => side_right(n),
        }
    }
}

/// Exact equality of the two sides at index `n`.
pub fn check_lemma21(n: u64) -> Result<CheckResult, ChainError> {
    Ok(exact_pair(&side_left(n)?, &side_right(n)?))
}

/// Both sides satisfy `(3n+2)(6n+1) S(n) - 2(12n+1)(12n+7) S(n+1) = 0`;
/// this checks the chosen side's annihilation at index `n`.
pub fn check_lemma21_recurrence(n: u64, side: RecurrenceSide) -> Result<CheckResult, ChainError> {
    let s0 = side.eval(n)?;
    let s1 = side.eval(n + 1)?;
    let ni = n as i64;
    let combo = rat((3 * ni + 2) * (6 * ni + 1), 1) * s0
        - rat(2 * (12 * ni + 1) * (12 * ni + 7), 1) * s1;
    Ok(exact_pair(&combo, &rat(0, 1)).with_extra(format!("side={}", side.as_str())))
}

/// Sweep `n = 0..=n_max` of [`check_lemma21`], evaluating each side once per
/// index. On success renders the final index's sides.
pub fn check_lemma21_sweep(n_max: u64) -> Result<CheckResult, ChainError> {
    let mut last = None;
    for n in 0..=n_max {
        let r = check_lemma21(n)?;
        if r.failed() {
            return Ok(r.with_extra(format!("first failure at n={n}")));
        }
        last = Some(r);
    }
    Ok(last.expect("n_max >= 0 yields at least one instance")
        .with_extra(format!("n=0..={n_max} all equal; rendering n={n_max}")))
}

/// Sweep of the recurrence over `n = 0..=n_max`, reusing each `S(n)`.
pub fn check_lemma21_recurrence_sweep(
    n_max: u64,
    side: RecurrenceSide,
) -> Result<CheckResult, ChainError> {
    let mut prev = side.eval(0)?;
    for n in 0..=n_max {
        let next = side.eval(n + 1)?;
        let ni = n as i64;
        let combo = rat((3 * ni + 2) * (6 * ni + 1), 1) * &prev
            - rat(2 * (12 * ni + 1) * (12 * ni + 7), 1) * &next;
        if !num::Zero::is_zero(&combo) {
            return Ok(exact_pair(&combo, &rat(0, 1))
                .with_extra(format!("side={} first failure at n={n}", side.as_str())));
        }
        prev = next;
    }
    Ok(exact_pair(&rat(0, 1), &rat(0, 1))
        .with_extra(format!("side={} n=0..={n_max} all annihilated", side.as_str())))
}

/// The three congruences modulo `p` tying truncated harmonic numbers to
/// Fermat quotients:
/// `H_{floor(p/2)} = -2 q_p(2)`, `H_{floor(p/3)} = -(3/2) q_p(3)`,
/// `H_{floor(p/6)} = -2 q_p(2) - (3/2) q_p(3)`.
pub fn check_harmonic_lemma(p: u64) -> Result<CheckResult, ChainError> {
    require(is_prime_u64(p) && p >= 5, format!("requires a prime p >= 5, got {p}"))?;
    let ctx = PrimePowerModulus::new(p, 1, 1)?;
    let q2 = fermat_quotient(2, p)?;
    let q3 = fermat_quotient(3, p)?;
    let two = Residue::from_u64(ctx, 2);
    let three_halves = &Residue::from_u64(ctx, 3) * &two.inverse()?;
    let rhs = [
        -&(&two * &q2),
        -&(&three_halves * &q3),
        &(-&(&two * &q2)) - &(&three_halves * &q3),
    ];
    let lhs = [
        harmonic_mod(p / 2, p)?,
        harmonic_mod(p / 3, p)?,
        harmonic_mod(p / 6, p)?,
    ];
    let pass = lhs == rhs;
    let fmt = |v: &[Residue]| format!("[{},{},{}]", v[0], v[1], v[2]);
    Ok(CheckResult::compared("p", fmt(&lhs), fmt(&rhs), pass)
        .with_extra("indices floor(p/2), floor(p/3), floor(p/6)"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::check::CheckStatus;

    #[test]
    fn identity_small_indices() {
        assert!(check_lemma21(0).unwrap().passed());
        let r = check_lemma21(1).unwrap();
        assert!(r.passed());
        assert_eq!(r.lhs, "1/7");
        assert!(check_lemma21_sweep(12).unwrap().passed());
    }

    #[test]
    fn recurrence_small_indices() {
        for side in [RecurrenceSide::Left, RecurrenceSide::Right] {
            assert!(check_lemma21_recurrence(0, side).unwrap().passed());
            assert!(check_lemma21_recurrence_sweep(10, side).unwrap().passed());
        }
    }

    #[test]
    fn harmonic_lemma_small_primes() {
        for p in [5u64, 7, 11, 13, 61, 199] {
            assert_eq!(check_harmonic_lemma(p).unwrap().status, CheckStatus::Pass, "p={p}");
        }
        assert!(check_harmonic_lemma(4).is_err());
        assert!(check_harmonic_lemma(3).is_err());
    }

    #[test]
    fn harmonic_lemma_witness_p7() {
        // H_3 = 11/6 = 3 (mod 7) and -2 q_7(2) = -4 = 3
        let r = check_harmonic_lemma(7).unwrap();
        assert!(r.lhs.starts_with("[3,"));
    }
}
