//! The check registry: one row per named check, with its applicability
//! predicate, a statement of the verified fact (the `anchor`, mirrored in the
//! catalog at `docs/checks.md`), and the dispatch into the core evaluators.

use supercong_core::check::CheckResult;
use supercong_core::proofchain::{
    chain_3k1, chain_adamchuk::AdamchukChainId, check_adamchuk_chain, check_chain_3k1,
    check_combinatorial, check_gamma_congruence, check_harmonic_lemma, check_transformation,
    identities::CombIdentity, lemmas, theorems, Chain3k1Id, ChainError, GammaTag, RecurrenceSide,
    TransformId,
};
use num::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha12Rng;

/// Which primes a check speaks about.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PrimeClass {
    /// Any odd prime `>= p_min`.
    Odd,
    /// Primes `= 1 (mod 3)`.
    OneMod3,
    /// Primes `= 2 (mod 3)` (the open scan branch).
    TwoMod3,
    /// Not indexed by a prime at all.
    None,
}

impl PrimeClass {
    fn admits(&self, p: u64) -> bool {
        supercong_core::modcore::is_prime_u64(p)
            && p % 2 == 1
            && match self {
                PrimeClass::Odd => true,
                PrimeClass::OneMod3 => p % 3 == 1,
                PrimeClass::TwoMod3 => p % 3 == 2,
                PrimeClass::None => true,
            }
    }
}

/// Exponent applicability.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExponentRule {
    /// Any `a >= 1`.
    Any,
    /// Only `a = 1` (the statement does not mention an exponent).
    One,
    /// Even `a >= 2` (the open branch).
    Even,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Kind {
    ThmAdamchuk,
    Sun,
    Thm3k1,
    PanSun,
    Mt,
    LemHarmonic,
    Lem2f1,
    Lem2f1Rec,
    ConjEvenA,
    Transform(TransformId),
    Gamma(GammaTag),
    Chain3k1(Chain3k1Id),
    Adamchuk(AdamchukChainId),
    Comb(CombKind),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CombKind {
    InvBinomSum,
    UnitFraction,
    BetaBinom,
    RecipBinom,
    HockeyStick,
    TailClosed,
    HeadClosed,
    BlockCombined,
    Neg3Expand,
    AltBinomHarmonic,
}

pub struct CheckSpec {
    pub id: &'static str,
    pub anchor: &'static str,
    pub experimental: bool,
    pub class: PrimeClass,
    pub p_min: u64,
    pub exponent: ExponentRule,
    pub kind: Kind,
}

impl CheckSpec {
    pub fn applicable(&self, p: u64, a: u32) -> bool {
        if self.class == PrimeClass::None {
            return true;
        }
        if a < 1 || !self.class.admits(p) || p < self.p_min {
            return false;
        }
        match self.exponent {
            ExponentRule::Any => true,
            ExponentRule::One => a == 1,
            ExponentRule::Even => a >= 2 && a.is_multiple_of(2),
        }
    }

    pub fn applicability_str(&self) -> String {
        let class = match self.class {
            PrimeClass::Odd => format!("odd primes p >= {}", self.p_min),
            PrimeClass::OneMod3 => format!("primes p = 1 (mod 3), p >= {}", self.p_min),
            PrimeClass::TwoMod3 => format!("primes p = 2 (mod 3), p >= {}", self.p_min),
            PrimeClass::None => return "not prime-indexed".to_string(),
        };
        match self.exponent {
            ExponentRule::Any => format!("{class}, a >= 1"),
            ExponentRule::One => class,
            ExponentRule::Even => format!("{class}, even a >= 2"),
        }
    }
}

macro_rules! spec {
    ($id:literal, $anchor:literal, $class:expr, $p_min:expr, $exp:expr, $kind:expr) => {
        CheckSpec {
            id: $id,
            anchor: $anchor,
            experimental: false,
            class: $class,
            p_min: $p_min,
            exponent: $exp,
            kind: $kind,
        }
    };
}

use ExponentRule as E;
use PrimeClass as C;

pub static SPECS: &[CheckSpec] = &[
    spec!(
        "THM-ADAMCHUK",
        "sum_{k=1}^{2(p^a-1)/3} C(2k,k) = 0 (mod p^2) for p = 1 (mod 3), a >= 1",
        C::OneMod3, 7, E::Any, Kind::ThmAdamchuk
    ),
    spec!(
        "SUN-1.1",
        "sum_{k=0}^{p^a-1} C(2k,k) = (p^a/3) (mod p^2) for odd p, Jacobi symbol on the right",
        C::Odd, 3, E::Any, Kind::Sun
    ),
    spec!(
        "THM-3K1",
        "nu_p(sum_{k=0, k != (p-1)/3}^{(p-1)/2} C(2k,k)/(3k+1)) >= 1 for p = 1 (mod 3)",
        C::OneMod3, 7, E::One, Kind::Thm3k1
    ),
    spec!(
        "PAN-SUN",
        "sum_{k=0}^{p-1} C(2k,k+d) = ((p-d)/3) (mod p) for every shift d in [0, p]",
        C::Odd, 3, E::One, Kind::PanSun
    ),
    spec!(
        "MT",
        "sum_{k=0}^{p-1} C(2k,k) = (p/3) - (p^2/3) B_{p-2}(x) at the unique verifying reading \
         (Bernoulli argument x in {1/2, 1/3}, level in {p^2, p^3}); the report names it",
        C::Odd, 5, E::One, Kind::Mt
    ),
    spec!(
        "LEM-HARMONIC",
        "H_{floor(p/2)} = -2 q_p(2), H_{floor(p/3)} = -(3/2) q_p(3), \
         H_{floor(p/6)} = -2 q_p(2) - (3/2) q_p(3), all mod p",
        C::Odd, 5, E::One, Kind::LemHarmonic
    ),
    spec!(
        "LEM-2F1",
        "2F1[-3n, 1/2-3n; 2/3-4n | 4/3] = 4^(-n) 2F1[-n, 1/2-n; 5/6-2n | 1] exactly",
        C::None, 0, E::One, Kind::Lem2f1
    ),
    spec!(
        "LEM-2F1-REC",
        "(3n+2)(6n+1) S(n) - 2(12n+1)(12n+7) S(n+1) = 0 annihilates both sides of the 2F1 identity",
        C::None, 0, E::One, Kind::Lem2f1Rec
    ),
    CheckSpec {
        id: "CONJ-EVEN-A",
        anchor: "open-branch scan: sum_{k=1}^{2(p^a-1)/3} C(2k,k) mod p^2 for p = 2 (mod 3) \
                 and even a; outcomes are recorded observations, quarantined from exit status",
        experimental: true,
        class: C::TwoMod3,
        p_min: 5,
        exponent: E::Even,
        kind: Kind::ConjEvenA,
    },
    spec!(
        "3K1.EULER-15-8-1",
        "A = (-3)^((p-1)/2) 2F1[(1-p)/2, 1-p/2; 4/3-2p/3 | 4/3] exactly (DLMF 15.8.1 instance)",
        C::OneMod3, 7, E::One, Kind::Transform(TransformId::Euler1581)
    ),
    spec!(
        "3K1.PFAFF-15-8-6",
        "2F1[(1-p)/6, 2/3-p/6; 7/6-p/3 | 1] reduces to 2F1[(1-p)/6, p/6; 1/2 | 1] with prefactor \
         ((2/3-p/6)_m/(7/6-p/3)_m)(-1)^m, m = (p-1)/6 (DLMF 15.8.6 instance)",
        C::OneMod3, 7, E::One, Kind::Transform(TransformId::Pfaff1586)
    ),
    spec!(
        "3K1.EVAL-15-4-24",
        "2F1[(1-p)/6, p/6; 1/2 | 1] = (1/2-p/6)_m/(1/2)_m, m = (p-1)/6 (DLMF 15.4.24 instance)",
        C::OneMod3, 7, E::One, Kind::Transform(TransformId::Eval15424)
    ),
    spec!(
        "3K1.GAMMA-A",
        "p 2^((p-1)/3) A = -(-3)^((p-1)/2) G (1 - (p/3) H_{(p-1)/6} - 2p + (p/6) H_{(p-1)/2}) \
         (mod p^2), G = gamma_p(1/6) gamma_p(1/3) / gamma_p(1/2)",
        C::OneMod3, 7, E::One, Kind::Gamma(GammaTag::A)
    ),
    spec!(
        "3K1.GAMMA-F",
        "p 2^((p-1)/3) F = -2^(p-1) G (1 - (p/6) H_{(p-1)/6} - 2p - (5p/6) H_{(p-1)/3} \
         + (p/2) H_{(p-1)/2}) (mod p^2)",
        C::OneMod3, 7, E::One, Kind::Gamma(GammaTag::F)
    ),
    spec!(
        "3K1.GAMMA-L",
        "3p 2^((p-1)/3) (-1)^((p-1)/2) L = (2^(p-1)/(-3)^((p-1)/2)) G (1 + (p/3) H_{(p-1)/6} + 2p) \
         (mod p^2)",
        C::OneMod3, 7, E::One, Kind::Gamma(GammaTag::L)
    ),
    spec!(
        "3K1.GAMMA-Q",
        "3p 2^((p-1)/3) (-1)^((p-1)/2) Q = G (1 + (2p/3) H_{(p-1)/3} + (p/3) H_{(p-1)/6} \
         - (p/2) H_{(p-1)/2} + 2p) (mod p^2)",
        C::OneMod3, 7, E::One, Kind::Gamma(GammaTag::Q)
    ),
    spec!(
        "3K1.EQ-L",
        "p 3^((p-1)/2) L = -3 * 4^((p-1)/3) gamma_p(4/3) gamma_p(7/6+p/3) / \
         (gamma_p(3/2) gamma_p(p/3)) (mod p^2)",
        C::OneMod3, 7, E::One, Kind::Gamma(GammaTag::EqL)
    ),
    spec!(
        "3K1.REDUCTION",
        "A - F = -(3/2) sum_{k=(p+2)/3}^{(p-1)/2} C(2k,k)/(3k+1) (mod p)",
        C::OneMod3, 7, E::One, Kind::Chain3k1(Chain3k1Id::Reduction)
    ),
    spec!(
        "3K1.TAIL-SUM",
        "sum_{k=(p+2)/3}^{(p-1)/2} C(2k,k)/(3k+1) = -2 (-1)^((p-1)/2) (L - Q) (mod p)",
        C::OneMod3, 7, E::One, Kind::Chain3k1(Chain3k1Id::TailSum)
    ),
    spec!(
        "3K1.AFLQ",
        "A - F = 3 (-1)^((p-1)/2) (L - Q) (mod p)",
        C::OneMod3, 7, E::One, Kind::Chain3k1(Chain3k1Id::Aflq)
    ),
    spec!(
        "3K1.HARMONIC-EQUIV",
        "the bracket identity obtained by substituting the four gamma congruences into the A-F \
         relation holds mod p^2; the harmonic-factor reading of the L bracket decides, the \
         constant-term reading is recorded in extra",
        C::OneMod3, 7, E::One, Kind::Chain3k1(Chain3k1Id::HarmonicEquiv)
    ),
    spec!(
        "3K1.FINAL-UNIT",
        "nu_p((2^(p-1) - (-3)^((p-1)/2))(1 - (-3)^(-(p-1)/2))) >= 2",
        C::OneMod3, 7, E::One, Kind::Chain3k1(Chain3k1Id::FinalUnit)
    ),
    spec!(
        "ADM.VAL-BOUND",
        "nu_p((2l-1)!/((l-1)!)^2) < a for every 0 < l < p^a/2",
        C::Odd, 3, E::Any, Kind::Adamchuk(AdamchukChainId::ValBound)
    ),
    spec!(
        "ADM.REFLECT",
        "C(2k,k) = -2 p^a / (l C(2l,l)) (mod p^2) for k + l = p^a, 0 < l < p^a/2",
        C::Odd, 3, E::Any, Kind::Adamchuk(AdamchukChainId::Reflect)
    ),
    spec!(
        "ADM.INV-SUM",
        "nu_p(p^(a-1) sum_{k=1}^{(p^a-1)/3} 1/(k C(2k,k))) >= 1",
        C::OneMod3, 7, E::Any, Kind::Adamchuk(AdamchukChainId::InvSum)
    ),
    spec!(
        "ADM.HALF-ROW",
        "prod_{j=0}^{k-1} (1 - p^a/(2j+1)) = 1 (mod p), equivalently \
         C((p^a-1)/2, k) = C(2k,k)/(-4)^k (mod p), for all k <= (p^a-1)/2",
        C::Odd, 3, E::Any, Kind::Adamchuk(AdamchukChainId::HalfRow)
    ),
    spec!(
        "ADM.SPLIT",
        "p^(a-1) sum_{k=0}^{n-1} lambda^k/C(n-1,k) = p^(a-1) sum_{k=m}^{n-1} lambda^k/C(n-1,k) \
         (mod p) at n = (p^a-1)/2, m = (p^a-1)/3, lambda = -1/4",
        C::OneMod3, 7, E::Any, Kind::Adamchuk(AdamchukChainId::Split)
    ),
    spec!(
        "ADM.TAIL-BALANCE",
        "p^(a-1) (lambda^m/(m+1)) sum_{k=m+1}^{n} (lambda+1)^k/(lambda^k C(k,m+1)) = \
         p^(a-1) (sum_{k=1}^{n} (lambda+1)^k/(k lambda^k) + sum_{k=1}^{m} (lambda+1)^k/k) (mod p)",
        C::OneMod3, 7, E::Any, Kind::Adamchuk(AdamchukChainId::TailBalance)
    ),
    spec!(
        "ADM.CENTRAL-OVER-K",
        "nu_p(p^(a-1) sum_{k=1}^{upper} C(2k,k)/k) >= 1 at upper = (p^a-1)/2 and upper = p^a-1",
        C::Odd, 3, E::Any, Kind::Adamchuk(AdamchukChainId::CentralOverK)
    ),
    spec!(
        "ADM.DENOM-SHIFT",
        "p^(a-1) sum_{j != m} C(n,j)(-4)^j/(j-m) = 3 p^(a-1) sum_{j != m} C(n,j)(-4)^j/(3j+1) \
         (mod p)",
        C::OneMod3, 7, E::Any, Kind::Adamchuk(AdamchukChainId::DenomShift)
    ),
    spec!(
        "ADM.LUCAS-DESCENT",
        "only indices with 3j+1 = p^(a-1)(3k+1) survive mod p: the skew sum equals \
         (-4)^((p^(a-1)-1)/3) C((p^(a-1)-1)/2, (p^(a-1)-1)/3) times the restricted \
         single-digit sum (mod p)",
        C::OneMod3, 7, E::Any, Kind::Adamchuk(AdamchukChainId::LucasDescent)
    ),
    spec!(
        "COMB.INV-BINOM-SUM",
        "sum_{k=0}^{n-1} lambda^k/C(n-1,k) = (n lambda^n/(lambda+1)^(n+1)) \
         (sum_{k=1}^{n} (lambda+1)^k/(k lambda^k) + sum_{k=1}^{n} (lambda+1)^k/k)",
        C::Odd, 3, E::Any, Kind::Comb(CombKind::InvBinomSum)
    ),
    spec!(
        "COMB.UNIT-FRACTION",
        "sum_{i=0}^{M} C(M,i)(-1)^i/(i+1) = 1/(M+1)",
        C::Odd, 3, E::Any, Kind::Comb(CombKind::UnitFraction)
    ),
    spec!(
        "COMB.BETA-BINOM",
        "B(m+1, n-m-k) = 1/((m+1) C(n-k, m+1))",
        C::Odd, 3, E::Any, Kind::Comb(CombKind::BetaBinom)
    ),
    spec!(
        "COMB.RECIP-BINOM",
        "sum_{k=0}^{N} 1/C(k+i,i) = i/(i-1) - (N+1)/((i-1) C(N+i,N)) for i >= 2",
        C::Odd, 3, E::Any, Kind::Comb(CombKind::RecipBinom)
    ),
    spec!(
        "COMB.HOCKEY-STICK",
        "sum_{k=0}^{n-j} C(k+j-m-1, j-m-1) = C(n-m, j-m) for m < j <= n",
        C::Odd, 3, E::Any, Kind::Comb(CombKind::HockeyStick)
    ),
    spec!(
        "COMB.TAIL-CLOSED",
        "sum_{j=m+1}^{n} (-4)^j sum_{k=j}^{n} C(k,j)/C(k,m+1) = \
         ((n+1)/C(n+1,m+1)) sum_{j=m+1}^{n} (-4)^j C(n,j)/(j-m)",
        C::OneMod3, 7, E::Any, Kind::Comb(CombKind::TailClosed)
    ),
    spec!(
        "COMB.HEAD-CLOSED",
        "sum_{j=0}^{m} (-4)^j sum_{k=m+1}^{n} C(k,j)/C(k,m+1) = \
         (m+1) sum_{j<m} C(m,j)(-4)^j/(m-j) - ((n+1)/C(n+1,m+1)) sum_{j<m} C(n,j)(-4)^j/(m-j) \
         + (m+1)(-4)^m H_{n-m}",
        C::OneMod3, 7, E::Any, Kind::Comb(CombKind::HeadClosed)
    ),
    spec!(
        "COMB.BLOCK-COMBINED",
        "(lambda^m/(m+1))(tail block + head block) = lambda^m sum_{j<m} C(m,j)(-4)^j/(m-j) \
         + (lambda^m/C(n,m)) sum_{j != m} C(n,j)(-4)^j/(j-m) + H_{n-m} at lambda = -1/4",
        C::OneMod3, 7, E::Any, Kind::Comb(CombKind::BlockCombined)
    ),
    spec!(
        "COMB.NEG3-EXPAND",
        "sum_{k=1}^{n} (-3)^k/k = sum_{k=1}^{n} C(n,k)(-1)^k(4^k - 1)/k",
        C::Odd, 3, E::Any, Kind::Comb(CombKind::Neg3Expand)
    ),
    spec!(
        "COMB.ALT-BINOM-HARMONIC",
        "sum_{k=1}^{n} C(n,k)(-1)^k/k = -H_n",
        C::Odd, 3, E::Any, Kind::Comb(CombKind::AltBinomHarmonic)
    ),
];

pub fn find(id: &str) -> Option<&'static CheckSpec> {
    SPECS.iter().find(|s| s.id == id)
}

/// One evaluation instance of a check.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord)]
pub struct Instance {
    pub p: Option<u64>,
    pub a: Option<u32>,
    pub d: Option<u64>,
    /// Recurrence side for LEM-2F1-REC rows.
    pub side: Option<&'static str>,
    /// Index sweep bound for the identity/recurrence rows.
    pub n_max: Option<u64>,
    /// Randomized-battery parameters `(cases, seed)` for COMB rows.
    pub random: Option<(u32, u64)>,
}

fn comb_prime_derived(kind: CombKind, p: u64, a: u32) -> CombIdentity {
    let pa = p.pow(a);
    let (n, m) = ((pa - 1) / 2, (pa - 1) / 3);
    match kind {
        CombKind::InvBinomSum => CombIdentity::InvBinomSum {
            n,
            lambda: supercong_core::exactnum::rat(-1, 4),
        },
        CombKind::UnitFraction => CombIdentity::UnitFraction { m },
        CombKind::BetaBinom => CombIdentity::BetaBinom { m, n, k: 0 },
        CombKind::RecipBinom => CombIdentity::RecipBinom { i: m + 1, n_upper: n - m - 1 },
        CombKind::HockeyStick => CombIdentity::HockeyStick { n, m, j: m + 1 },
        CombKind::TailClosed => CombIdentity::TailClosed { n, m },
        CombKind::HeadClosed => CombIdentity::HeadClosed { n, m },
        CombKind::BlockCombined => CombIdentity::BlockCombined { n, m },
        CombKind::Neg3Expand => CombIdentity::Neg3Expand { n },
        CombKind::AltBinomHarmonic => CombIdentity::AltBinomHarmonic { n },
    }
}

fn comb_random(kind: CombKind, rng: &mut ChaCha12Rng) -> CombIdentity {
    match kind {
        CombKind::InvBinomSum => {
            let n = rng.gen_range(1..=25);
            let lambda = loop {
                let num = rng.gen_range(-6i64..=6);
                let den = rng.gen_range(1i64..=4);
                let l = supercong_core::exactnum::rat(num, den);
                if !num::Zero::is_zero(&l) && l != supercong_core::exactnum::rat(-1, 1) {
                    break l;
                }
            };
            CombIdentity::InvBinomSum { n, lambda }
        }
        CombKind::UnitFraction => CombIdentity::UnitFraction { m: rng.gen_range(0..=40) },
        CombKind::BetaBinom => {
            let m = rng.gen_range(0..=12);
            let k = rng.gen_range(0..=12);
            CombIdentity::BetaBinom { m, n: m + k + rng.gen_range(1..=12), k }
        }
        CombKind::RecipBinom => CombIdentity::RecipBinom {
            i: rng.gen_range(2..=12),
            n_upper: rng.gen_range(0..=28),
        },
        CombKind::HockeyStick => {
            let m = rng.gen_range(0..=10);
            let j = m + rng.gen_range(1..=10);
            CombIdentity::HockeyStick { n: j + rng.gen_range(0..=10), m, j }
        }
        CombKind::TailClosed | CombKind::HeadClosed | CombKind::BlockCombined => {
            let m = rng.gen_range(0..=20);
            let n = m + rng.gen_range(1..=(40 - m).clamp(1, 20));
            match kind {
                CombKind::TailClosed => CombIdentity::TailClosed { n, m },
                CombKind::HeadClosed => CombIdentity::HeadClosed { n, m },
                _ => CombIdentity::BlockCombined { n, m },
            }
        }
        CombKind::Neg3Expand => CombIdentity::Neg3Expand { n: rng.gen_range(1..=40) },
        CombKind::AltBinomHarmonic => {
            CombIdentity::AltBinomHarmonic { n: rng.gen_range(1..=40) }
        }
    }
}

fn run_comb_battery(kind: CombKind, cases: u32, seed: u64) -> Result<CheckResult, ChainError> {
    let mut rng = ChaCha12Rng::seed_from_u64(seed);
    let mut last = None;
    for i in 0..cases {
        let id = comb_random(kind, &mut rng);
        let r = check_combinatorial(&id)?;
        if r.failed() {
            return Ok(r.with_extra(format!(
                "randomized case {i} fails: {}; seed={seed}",
                id.params_string()
            )));
        }
        last = Some((r, id));
    }
    let (r, id) = last.expect("battery runs at least one case");
    Ok(r.with_extra(format!(
        "randomized cases={cases} seed={seed} all hold; rendering last ({})",
        id.params_string()
    )))
}

/// Evaluate one instance of a registered check. Applicability is the caller's
/// concern; evaluator-level errors come back as `Err` and the runner decides
/// whether they are SKIP (inapplicable parameters) or FAIL (surfaced error).
pub fn evaluate(spec: &CheckSpec, inst: &Instance) -> Result<CheckResult, ChainError> {
    let p = inst.p.unwrap_or(0);
    let a = inst.a.unwrap_or(1);
    match spec.kind {
        Kind::ThmAdamchuk => theorems::thm_adamchuk_check(p, a),
        Kind::Sun => theorems::sun_check(p, a),
        Kind::Thm3k1 => theorems::thm_3k1_check(p),
        Kind::PanSun => theorems::pan_sun_check(p, inst.d.expect("PAN-SUN rows carry d")),
        Kind::Mt => theorems::mt_check(p),
        Kind::LemHarmonic => check_harmonic_lemma(p),
        Kind::Lem2f1 => lemmas::check_lemma21_sweep(inst.n_max.unwrap_or(60)),
        Kind::Lem2f1Rec => {
            let side = match inst.side {
                Some("right") => RecurrenceSide::Right,
                _ => RecurrenceSide::Left,
            };
            lemmas::check_lemma21_recurrence_sweep(inst.n_max.unwrap_or(200), side)
        }
        Kind::ConjEvenA => theorems::conj_even_check(p, a),
        Kind::Transform(t) => check_transformation(t, p),
        Kind::Gamma(t) => check_gamma_congruence(t, p),
        Kind::Chain3k1(c) => check_chain_3k1(c, p),
        Kind::Adamchuk(c) => check_adamchuk_chain(c, p, a),
        Kind::Comb(kind) => match inst.random {
            Some((cases, seed)) => run_comb_battery(kind, cases, seed),
            None => {
                let id = comb_prime_derived(kind, p, a);
                let params = id.params_string();
                Ok(check_combinatorial(&id)?.with_extra(format!("prime-derived {params}")))
            }
        },
    }
}

/// The theorem-level restricted sum used by [`Kind::Thm3k1`]; re-exported for
/// cross-checks in test suites.
pub use chain_3k1::restricted_central_sum;

/// Convenience: a rational `-1/4`, the chain's lambda.
pub fn lambda() -> BigRational {
    supercong_core::exactnum::rat(-1, 4)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ids_unique_and_anchored() {
        let mut seen = std::collections::BTreeSet::new();
        for s in SPECS {
            assert!(seen.insert(s.id), "duplicate id {}", s.id);
            assert!(!s.anchor.is_empty(), "{} lacks an anchor", s.id);
        }
        assert_eq!(SPECS.len(), 41);
    }

    #[test]
    fn applicability_examples() {
        let adam = find("THM-ADAMCHUK").unwrap();
        assert!(adam.applicable(7, 1));
        assert!(adam.applicable(7, 3));
        assert!(!adam.applicable(5, 1)); // wrong class
        assert!(!adam.applicable(9, 1)); // not prime
        let conj = find("CONJ-EVEN-A").unwrap();
        assert!(conj.applicable(5, 2));
        assert!(!conj.applicable(5, 1));
        assert!(!conj.applicable(7, 2));
        assert!(conj.experimental);
        let lem = find("LEM-2F1").unwrap();
        assert!(lem.applicable(0, 1));
    }
}
