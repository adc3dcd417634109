//! Exact computational number theory for central binomial congruences.
//!
//! The crate is organized around two arithmetic worlds that check each other:
//!
//! - **exact**: arbitrary-precision integers and rationals ([`exactnum`]), the
//!   ground truth for every congruence. Nothing in this crate ever rounds.
//! - **modular**: canonical residues modulo a prime power ([`modcore`]), with a
//!   performance-oriented streaming layer for long binomial sums ([`binomseq`])
//!   and Morita's p-adic gamma function ([`padicgamma`]).
//!
//! On top of both sits [`proofchain`]: named checks for the individual
//! identities and congruences that make up the two theorems this toolkit
//! verifies (the vanishing of `sum C(2k,k)` over `k = 1..2(p^a-1)/3` modulo
//! `p^2`, and the vanishing of the `3k+1`-weighted central binomial sum modulo
//! `p`), each evaluated over exact arithmetic and reduced at the stated level.

pub mod binomseq;
pub mod check;
pub mod exactnum;
pub mod modcore;
pub mod padicgamma;
pub mod proofchain;

pub use check::{CheckResult, CheckStatus};
pub use exactnum::ValuationSplit;
pub use modcore::{PrimePowerModulus, Residue};
pub use binomseq::FactoredResidue;

pub use num::{BigInt, BigRational, BigUint};
