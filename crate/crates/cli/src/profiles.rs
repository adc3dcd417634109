//! Sweep profiles: which primes and exponents each check runs over.

use serde::Deserialize;

/// Parameter ranges for one suite run. The `full` profile is the acceptance
/// envelope; `quick` is a sub-minute smoke sweep. Ranges can be overridden
/// per profile from `verify.toml` (see [`crate::config`]).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Profile {
    pub name: String,
    /// Cap for the headline vanishing sum and the Jacobi-symbol sum.
    pub p_max_main: u64,
    /// Cap for the restricted-sum valuation check.
    pub p_max_3k1: u64,
    /// Cap for the harmonic/Fermat-quotient congruences.
    pub p_max_harmonic: u64,
    /// Cap for the shifted binomial sums (one row per shift d).
    pub p_max_pan_sun: u64,
    /// Cap for the Bernoulli-corrected sum disambiguation.
    pub p_max_mt: u64,
    /// Cap for the 3K1 chain checks (transformations, gamma brackets, chain).
    pub p_max_chain: u64,
    /// Primes for the main-chain (ADM.*) and prime-derived identity rows.
    pub adamchuk_primes: Vec<u64>,
    /// Exponents swept for the headline sums and the ADM/COMB rows.
    pub main_a: Vec<u32>,
    /// Extra (p, a) pairs for the headline sum beyond the cartesian sweep.
    pub main_extra: Vec<(u64, u32)>,
    /// Identity sweep bound for LEM-2F1.
    pub lem2f1_n: u64,
    /// Recurrence sweep bound for LEM-2F1-REC.
    pub lem2f1_rec_n: u64,
    /// Cap for the experimental even-exponent scan at a = 2.
    pub conj_p_max: u64,
    /// Primes additionally scanned at a = 4.
    pub conj_extra_a4: Vec<u64>,
    /// Randomized cases per combinatorial identity battery.
    pub comb_cases: u32,
    /// Seed for the randomized batteries (fixed for reproducible reports).
    pub comb_seed: u64,
}

pub fn quick() -> Profile {
    Profile {
        name: "quick".into(),
        p_max_main: 61,
        p_max_3k1: 61,
        p_max_harmonic: 61,
        p_max_pan_sun: 61,
        p_max_mt: 61,
        p_max_chain: 61,
        adamchuk_primes: vec![7, 13],
        main_a: vec![1, 2],
        main_extra: vec![],
        lem2f1_n: 60,
        lem2f1_rec_n: 200,
        conj_p_max: 23,
        conj_extra_a4: vec![],
        comb_cases: 12,
        comb_seed: 0x5eed_cafe,
    }
}

pub fn full() -> Profile {
    Profile {
        name: "full".into(),
        p_max_main: 499,
        p_max_3k1: 997,
        p_max_harmonic: 1999,
        p_max_pan_sun: 97,
        p_max_mt: 97,
        p_max_chain: 199,
        adamchuk_primes: vec![7, 13, 19, 31],
        main_a: vec![1, 2],
        main_extra: vec![(7, 3), (13, 3)],
        lem2f1_n: 60,
        lem2f1_rec_n: 200,
        conj_p_max: 97,
        conj_extra_a4: vec![5, 11],
        comb_cases: 20,
        comb_seed: 0x5eed_cafe,
    }
}

pub fn by_name(name: &str) -> Option<Profile> {
    match name {
        "quick" => Some(quick()),
        "full" => Some(full()),
        _ => None,
    }
}

/// Partial override of a profile, as read from the config file.
#[derive(Debug, Clone, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProfileOverrides {
    pub p_max_main: Option<u64>,
    pub p_max_3k1: Option<u64>,
    pub p_max_harmonic: Option<u64>,
    pub p_max_pan_sun: Option<u64>,
    pub p_max_mt: Option<u64>,
    pub p_max_chain: Option<u64>,
    pub adamchuk_primes: Option<Vec<u64>>,
    pub main_a: Option<Vec<u32>>,
    pub main_extra: Option<Vec<(u64, u32)>>,
    pub lem2f1_n: Option<u64>,
    pub lem2f1_rec_n: Option<u64>,
    pub conj_p_max: Option<u64>,
    pub conj_extra_a4: Option<Vec<u64>>,
    pub comb_cases: Option<u32>,
    pub comb_seed: Option<u64>,
}

impl Profile {
    pub fn apply(&mut self, o: &ProfileOverrides) {
        macro_rules! take {
            ($($f:ident),*) => { $( if let Some(v) = &o.$f { self.$f = v.clone(); } )* };
        }
        take!(
            p_max_main, p_max_3k1, p_max_harmonic, p_max_pan_sun, p_max_mt, p_max_chain,
            adamchuk_primes, main_a, main_extra, lem2f1_n, lem2f1_rec_n, conj_p_max,
            conj_extra_a4, comb_cases, comb_seed
        );
    }
}
