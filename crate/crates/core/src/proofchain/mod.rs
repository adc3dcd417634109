//! Named checks for every identity and congruence in the two verified
//! congruence chains.
//!
//! The toolkit establishes two statements about central binomial sums:
//!
//! - **ADM** (the main vanishing theorem): for `p = 1 (mod 3)` and `a >= 1`,
//!   `sum_{k=1}^{2(p^a-1)/3} C(2k,k) = 0 (mod p^2)`.
//! - **3K1** (the restricted-sum theorem it reduces to): for `p = 1 (mod 3)`,
//!   `sum_{k != (p-1)/3, k=0}^{(p-1)/2} C(2k,k)/(3k+1) = 0 (mod p)`.
//!
//! Each derivation step is exposed as a named check evaluating to PASS/FAIL
//! over exact rational arithmetic, reduced only at the end to the stated
//! prime-power level. That ordering is deliberate: several intermediate
//! quantities have negative p-adic valuation, and premature modular reduction
//! is the main correctness hazard in this material.
//!
//! Submodules:
//! - [`frak`]: the four hypergeometric quantities `A, F, L, Q` of the 3K1 chain.
//! - [`lemmas`]: the terminating-2F1 identity, its annihilating recurrence,
//!   and the harmonic/Fermat-quotient congruences.
//! - [`chain_3k1`]: handbook transformations, p-adic gamma congruences, and
//!   the reduction chain down to a Fermat-quotient unit identity.
//! - [`identities`]: the pure combinatorial identities of the main chain.
//! - [`chain_adamchuk`]: prime-power congruence steps of the main chain.
//! - [`theorems`]: the headline sums plus the neighbouring published
//!   congruences (Jacobi-symbol sum, shifted sums, Bernoulli-corrected sum)
//!   and the experimental even-exponent scan.

use crate::check::CheckResult;
use crate::exactnum::{padic_split, ExactError};
use crate::modcore::{ModError, PrimePowerModulus, Residue};
use num::BigRational;
use thiserror::Error;

pub mod chain_3k1;
pub mod chain_adamchuk;
pub mod frak;
pub mod identities;
pub mod lemmas;
pub mod theorems;

pub use chain_3k1::{
    check_chain_3k1, check_gamma_congruence, check_transformation, Chain3k1Id, GammaTag,
    TransformId,
};
pub use chain_adamchuk::{check_adamchuk_chain, AdamchukChainId};
pub use frak::{eval_frak, FrakQuantities, FrakTag};
pub use identities::{check_combinatorial, CombIdentity};
pub use lemmas::{check_harmonic_lemma, check_lemma21, check_lemma21_recurrence, RecurrenceSide};

#[derive(Debug, Error, PartialEq, Eq, Clone)]
pub enum ChainError {
    #[error("precondition violated: {0}")]
    PrecondViolation(String),
    #[error(transparent)]
    Exact(#[from] ExactError),
    #[error(transparent)]
    Mod(#[from] ModError),
}

pub(crate) fn require(cond: bool, msg: impl Into<String>) -> Result<(), ChainError> {
    if cond {
        Ok(())
    } else {
        Err(ChainError::PrecondViolation(msg.into()))
    }
}

/// Preconditions shared by the whole 3K1 chain.
pub(crate) fn require_one_mod_three(p: u64) -> Result<(), ChainError> {
    require(
        crate::modcore::is_prime_u64(p) && p % 3 == 1 && p >= 7,
        format!("requires a prime p >= 7 with p = 1 (mod 3), got {p}"),
    )
}

fn level_label(ctx: PrimePowerModulus) -> String {
    match ctx.e() {
        1 => "p".to_string(),
        e => format!("p^{e}"),
    }
}

/// Reduce both sides into `ctx` and compare; renders canonical residues.
pub(crate) fn residue_pair(
    ctx: PrimePowerModulus,
    lhs: &BigRational,
    rhs: &BigRational,
) -> Result<CheckResult, ChainError> {
    let l = Residue::from_rational(ctx, lhs)?;
    let r = Residue::from_rational(ctx, rhs)?;
    Ok(residue_eq(&l, &r))
}

/// Compare two residues already living in the same context.
pub(crate) fn residue_eq(l: &Residue, r: &Residue) -> CheckResult {
    CheckResult::compared(level_label(l.context()), l.to_string(), r.to_string(), l == r)
}

/// Assert `nu_p(x) >= bound`; renders the valuation against the bound, with
/// the exact value in `extra`. A vanishing `x` has infinite valuation and
/// always passes.
pub(crate) fn valuation_check(x: &BigRational, p: u64, bound: i64) -> CheckResult {
    let (lhs, pass) = match padic_split(x, p) {
        Ok(split) => (split.valuation.to_string(), split.valuation >= bound),
        Err(ExactError::ZeroArgument) => ("+inf".to_string(), true),
        Err(_) => unreachable!(),
    };
    CheckResult::compared("exact", lhs, bound.to_string(), pass).with_extra(format!("value={x}"))
}

/// Exact equality of two rationals.
pub(crate) fn exact_pair(lhs: &BigRational, rhs: &BigRational) -> CheckResult {
    CheckResult::compared("exact", lhs.to_string(), rhs.to_string(), lhs == rhs)
}
