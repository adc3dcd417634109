//! Prime-power modular arithmetic primitives.
//!
//! Everything here works with canonical residues in `[0, p^e)` attached to a
//! [`PrimePowerModulus`] context. Mixing residues from different contexts is a
//! hard error (panic), never a silent coercion: the main correctness hazard in
//! this domain is computing at level `p` where level `p^2` was required.
//!
//! The fast path stores residues as `u64` with `u128` intermediates whenever
//! `p^e < 2^63`; larger moduli transparently escalate to arbitrary precision.

use num::{BigInt, BigRational, BigUint, Integer, One, Zero};
use thiserror::Error;

/// Errors from modular-arithmetic primitives.
#[derive(Debug, Error, PartialEq, Eq, Clone)]
pub enum ModError {
    #[error("modulus base must be an odd prime >= 3, got {0}")]
    NotPrime(u64),
    #[error("exponent a must be >= 1")]
    ZeroExponent,
    #[error("working level e must be 1, 2, or 3, got {0}")]
    BadLevel(u8),
    #[error("{0} is divisible by p and not invertible at this level")]
    NotInvertible(String),
    #[error("jacobi symbol needs an odd modulus >= 1, got {0}")]
    InvalidModulus(u64),
    #[error("base {0} shares a factor with p = {1}")]
    NotCoprime(i64, u64),
    #[error("index {0} out of range (requires < {1})")]
    OutOfRange(u64, u64),
    #[error("pochhammer factor at offset {0} is divisible by p")]
    NonUnitFactor(u64),
    #[error("denominator of {0} is divisible by p")]
    NotPIntegral(String),
}

/// An ambient arithmetic context: odd prime `p`, theorem exponent `a`, and
/// working level `e`, with all arithmetic done modulo `p^e`.
///
/// `a` rides along as metadata (it selects the sum lengths `p^a` in the
/// checks); only `p` and `e` determine the modulus. Contexts compare by all
/// three fields, so residues produced for different theorem instances do not
/// intermix even when the modulus value coincides.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PrimePowerModulus {
    p: u64,
    a: u32,
    e: u8,
    /// `p^e` when it fits the fixed-width fast path (`< 2^63`).
    small: Option<u64>,
}

impl PrimePowerModulus {
    /// Build a context after primality-testing `p`. Fails on even `p`, `p < 3`,
    /// composite `p`, `a = 0`, or `e` outside `{1, 2, 3}`.
    pub fn new(p: u64, a: u32, e: u8) -> Result<Self, ModError> {
        if p < 3 || p.is_multiple_of(2) || !is_prime_u64(p) {
            return Err(ModError::NotPrime(p));
        }
        if a == 0 {
            return Err(ModError::ZeroExponent);
        }
        if !(1..=3).contains(&e) {
            return Err(ModError::BadLevel(e));
        }
        let small = p
            .checked_pow(e as u32)
            .filter(|&m| m < (1u64 << 63));
        Ok(Self { p, a, e, small })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn a(&self) -> u32 {
        self.a
    }

    pub fn e(&self) -> u8 {
        self.e
    }

    /// `p^a`, the sum length parameter. Panics on overflow (never reached for
    /// the desk-scale sweeps this crate runs).
    pub fn pa(&self) -> u64 {
        self.p.checked_pow(self.a).expect("p^a overflows u64")
    }

    /// Modulus value `p^e` on the fast path.
    pub fn modulus_u64(&self) -> Option<u64> {
        self.small
    }

    /// Modulus value `p^e` as a big integer.
    pub fn modulus_big(&self) -> BigUint {
        BigUint::from(self.p).pow(self.e as u32)
    }

    /// The residue `0` in this context.
    pub fn zero(&self) -> Residue {
        Residue::from_u64(*self, 0)
    }

    /// The residue `1` in this context.
    pub fn one(&self) -> Residue {
        Residue::from_u64(*self, 1)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
enum Val {
    Small(u64),
    Big(BigUint),
}

/// Canonical integer representative modulo `p^e`, carrying its context.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Residue {
    ctx: PrimePowerModulus,
    val: Val,
}

fn mulmod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn egcd(a: i128, b: i128) -> (i128, i128, i128) {
    if a == 0 {
        return (b, 0, 1);
    }
    let (g, x, y) = egcd(b % a, a);
    (g, y - (b / a) * x, x)
}

/// Modular inverse on raw u64 values. Returns `None` when `gcd(a, m) != 1`.
pub fn inv_u64(a: u64, m: u64) -> Option<u64> {
    let (g, x, _) = egcd(a as i128, m as i128);
    if g != 1 {
        return None;
    }
    Some(((x % m as i128 + m as i128) % m as i128) as u64)
}

/// Modular exponentiation on raw u64 values (m < 2^64).
pub fn pow_u64(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mulmod(acc, base, m);
        }
        base = mulmod(base, base, m);
        exp >>= 1;
    }
    acc
}

impl Residue {
    fn assert_same(&self, other: &Residue) {
        assert!(
            self.ctx == other.ctx,
            "residue context mismatch: {:?} vs {:?}",
            self.ctx,
            other.ctx
        );
    }

    pub fn context(&self) -> PrimePowerModulus {
        self.ctx
    }

    /// Reduce a machine integer into the context.
    pub fn from_u64(ctx: PrimePowerModulus, v: u64) -> Residue {
        match ctx.small {
            Some(m) => Residue { ctx, val: Val::Small(v % m) },
            None => Residue { ctx, val: Val::Big(BigUint::from(v) % ctx.modulus_big()) },
        }
    }

    /// Reduce a signed machine integer into the context.
    pub fn from_i64(ctx: PrimePowerModulus, v: i64) -> Residue {
        Residue::from_bigint(ctx, &BigInt::from(v))
    }

    /// Reduce a big integer into the context.
    pub fn from_bigint(ctx: PrimePowerModulus, v: &BigInt) -> Residue {
        let m = BigInt::from(ctx.modulus_big());
        let r = v.mod_floor(&m).to_biguint().expect("mod_floor is nonnegative");
        match ctx.small {
            Some(_) => {
                let d = r.to_u64_digits();
                Residue::from_u64(ctx, if d.is_empty() { 0 } else { d[0] })
            }
            None => Residue { ctx, val: Val::Big(r) },
        }
    }

    /// Reduce a p-integral rational into the context.
    ///
    /// Fails with [`ModError::NotPIntegral`] when the reduced denominator is
    /// divisible by `p` (the value has negative p-adic valuation and has no
    /// canonical residue at this level).
    pub fn from_rational(ctx: PrimePowerModulus, q: &BigRational) -> Result<Residue, ModError> {
        let den = q.denom();
        if den.is_multiple_of(&BigInt::from(ctx.p)) {
            return Err(ModError::NotPIntegral(q.to_string()));
        }
        let num = Residue::from_bigint(ctx, q.numer());
        let den = Residue::from_bigint(ctx, den);
        Ok(&num * &den.inverse().expect("denominator coprime to p"))
    }

    /// The canonical value as a big integer in `[0, p^e)`.
    pub fn to_big(&self) -> BigUint {
        match &self.val {
            Val::Small(v) => BigUint::from(*v),
            Val::Big(v) => v.clone(),
        }
    }

    /// The canonical value on the fast path. `None` for big-width contexts.
    pub fn to_u64(&self) -> Option<u64> {
        match &self.val {
            Val::Small(v) => Some(*v),
            Val::Big(_) => None,
        }
    }

    pub fn is_zero(&self) -> bool {
        match &self.val {
            Val::Small(v) => *v == 0,
            Val::Big(v) => v.is_zero(),
        }
    }

    /// Multiplicative inverse modulo `p^e` via extended Euclid (uniform over
    /// every level, unlike Fermat exponentiation).
    pub fn inverse(&self) -> Result<Residue, ModError> {
        match (&self.val, self.ctx.small) {
            (Val::Small(v), Some(m)) => inv_u64(*v, m)
                .map(|i| Residue { ctx: self.ctx, val: Val::Small(i) })
                .ok_or_else(|| ModError::NotInvertible(v.to_string())),
            (Val::Big(v), None) => {
                let m = BigInt::from(self.ctx.modulus_big());
                let ext = BigInt::from(v.clone()).extended_gcd(&m);
                if !ext.gcd.is_one() {
                    return Err(ModError::NotInvertible(v.to_string()));
                }
                Ok(Residue::from_bigint(self.ctx, &ext.x))
            }
            _ => unreachable!("residue width always matches its context"),
        }
    }

    pub fn pow(&self, mut exp: u64) -> Residue {
        let mut base = self.clone();
        let mut acc = self.ctx.one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            exp >>= 1;
        }
        acc
    }
}

impl std::ops::Add for &Residue {
    type Output = Residue;
    fn add(self, rhs: &Residue) -> Residue {
        self.assert_same(rhs);
        match (&self.val, &rhs.val, self.ctx.small) {
            (Val::Small(x), Val::Small(y), Some(m)) => {
                Residue { ctx: self.ctx, val: Val::Small((x + y) % m) }
            }
            (Val::Big(x), Val::Big(y), None) => {
                Residue { ctx: self.ctx, val: Val::Big((x + y) % self.ctx.modulus_big()) }
            }
            _ => unreachable!("residue width always matches its context"),
        }
    }
}

impl std::ops::Sub for &Residue {
    type Output = Residue;
    fn sub(self, rhs: &Residue) -> Residue {
        self.assert_same(rhs);
        match (&self.val, &rhs.val, self.ctx.small) {
            (Val::Small(x), Val::Small(y), Some(m)) => {
                Residue { ctx: self.ctx, val: Val::Small((x + m - y) % m) }
            }
            (Val::Big(x), Val::Big(y), None) => {
                let m = self.ctx.modulus_big();
                Residue { ctx: self.ctx, val: Val::Big((x + &m - y) % m) }
            }
            _ => unreachable!("residue width always matches its context"),
        }
    }
}

impl std::ops::Mul for &Residue {
    type Output = Residue;
    fn mul(self, rhs: &Residue) -> Residue {
        self.assert_same(rhs);
        match (&self.val, &rhs.val, self.ctx.small) {
            (Val::Small(x), Val::Small(y), Some(m)) => {
                Residue { ctx: self.ctx, val: Val::Small(mulmod(*x, *y, m)) }
            }
            (Val::Big(x), Val::Big(y), None) => {
                Residue { ctx: self.ctx, val: Val::Big((x * y) % self.ctx.modulus_big()) }
            }
            _ => unreachable!("residue width always matches its context"),
        }
    }
}

impl std::ops::Neg for &Residue {
    type Output = Residue;
    fn neg(self) -> Residue {
        &self.ctx.zero() - self
    }
}

impl std::fmt::Display for Residue {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match &self.val {
            Val::Small(v) => write!(f, "{v}"),
            Val::Big(v) => write!(f, "{v}"),
        }
    }
}

/// Deterministic Miller-Rabin, exact for all u64 inputs.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for q in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n.is_multiple_of(q) {
            return n == q;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_u64(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 0..s - 1 {
            x = mulmod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Modular inverse of a residue. Thin named wrapper over [`Residue::inverse`].
pub fn mod_inverse(x: &Residue) -> Result<Residue, ModError> {
    x.inverse()
}

/// Jacobi symbol `(m/n)` for odd `n >= 1`, multiplicative in both arguments.
pub fn jacobi_symbol(m: i64, n: u64) -> Result<i8, ModError> {
    if n == 0 || n.is_multiple_of(2) {
        return Err(ModError::InvalidModulus(n));
    }
    let mut n = n;
    let mut a = (m.rem_euclid(n as i64)) as u64;
    let mut sign = 1i8;
    while a != 0 {
        while a.is_multiple_of(2) {
            a /= 2;
            if matches!(n % 8, 3 | 5) {
                sign = -sign;
            }
        }
        std::mem::swap(&mut a, &mut n);
        if a % 4 == 3 && n % 4 == 3 {
            sign = -sign;
        }
        a %= n;
    }
    Ok(if n == 1 { sign } else { 0 })
}

/// Fermat quotient `q_p(b) = (b^(p-1) - 1)/p` reduced modulo `p`.
///
/// The division is exact by Fermat's little theorem; we compute `b^(p-1)`
/// modulo `p^2`, so the quotient is already canonical modulo `p`.
pub fn fermat_quotient(b: i64, p: u64) -> Result<Residue, ModError> {
    let ctx = PrimePowerModulus::new(p, 1, 1)?;
    let b_red = b.rem_euclid(p as i64) as u64;
    if b_red == 0 {
        return Err(ModError::NotCoprime(b, p));
    }
    let p2 = p * p;
    let bp = (b.rem_euclid(p2 as i64)) as u64;
    let pw = pow_u64(bp, p - 1, p2);
    debug_assert_eq!(pw % p, 1);
    Ok(Residue::from_u64(ctx, (pw - 1) / p))
}

/// Harmonic number `H_n = 1 + 1/2 + ... + 1/n` modulo `p`, for `0 <= n < p`.
///
/// Inverses come from the standard O(n) batch recurrence
/// `inv(i) = -(p/i) * inv(p mod i)`.
pub fn harmonic_mod(n: u64, p: u64) -> Result<Residue, ModError> {
    let ctx = PrimePowerModulus::new(p, 1, 1)?;
    if n >= p {
        return Err(ModError::OutOfRange(n, p));
    }
    let mut inv = vec![0u64; (n + 1).max(2) as usize];
    if n >= 1 {
        inv[1] = 1;
    }
    let mut acc = if n >= 1 { 1u64 } else { 0 };
    for i in 2..=n {
        inv[i as usize] = mulmod(p - p / i, inv[(p % i) as usize], p);
        acc = (acc + inv[i as usize]) % p;
    }
    Ok(Residue::from_u64(ctx, acc))
}

/// `C(n_digit, k_digit) mod p` for digits below `p`, by falling product.
fn digit_binom_mod_p(n: u64, k: u64, p: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut num = 1u64;
    let mut den = 1u64;
    for i in 1..=k {
        num = mulmod(num, (n - k + i) % p, p);
        den = mulmod(den, i % p, p);
    }
    mulmod(num, inv_u64(den, p).expect("den < p is a unit"), p)
}

/// `C(n, k) mod p` by Lucas' theorem: the digitwise product of base-`p`
/// binomials. `k > n` yields 0.
pub fn lucas_binomial(n: u64, k: u64, p: u64) -> Result<Residue, ModError> {
    let ctx = PrimePowerModulus::new(p, 1, 1)?;
    let (mut n, mut k) = (n, k);
    let mut acc = 1u64;
    while k > 0 || n > 0 {
        acc = mulmod(acc, digit_binom_mod_p(n % p, k % p, p), p);
        if acc == 0 {
            break;
        }
        n /= p;
        k /= p;
    }
    Ok(Residue::from_u64(ctx, acc))
}

/// Rising factorial `(alpha)_k` reduced modulo `p^e`, unit path only.
///
/// Every factor `alpha + j` must be a p-adic unit; the first offset whose
/// factor is divisible by `p` aborts with [`ModError::NonUnitFactor`].
/// Callers that need the non-unit case use the exact rational path instead.
pub fn pochhammer_residue(
    alpha: &BigRational,
    k: u64,
    ctx: PrimePowerModulus,
) -> Result<Residue, ModError> {
    let base = Residue::from_rational(ctx, alpha)?;
    let p = ctx.p();
    let mut acc = ctx.one();
    for j in 0..k {
        let factor = &base + &Residue::from_u64(ctx, j);
        if (factor.to_big() % p).is_zero() {
            return Err(ModError::NonUnitFactor(j));
        }
        acc = &acc * &factor;
    }
    Ok(acc)
}

/// Legendre's formula: `nu_p(n!) = sum_i floor(n / p^i)`.
pub fn factorial_valuation(n: u64, p: u64) -> u64 {
    let mut acc = 0;
    let mut q = n / p;
    while q > 0 {
        acc += q;
        q /= p;
    }
    acc
}

/// Number of carries when adding `x + y` in base `p`.
///
/// By Kummer's theorem this equals `nu_p(C(x+y, y))`; the digit count is kept
/// independent of the factored binomial stream so the two can check each other.
pub fn addition_carries(x: u64, y: u64, p: u64) -> u64 {
    let mut carries = 0;
    let mut carry = 0;
    let (mut x, mut y) = (x, y);
    while x > 0 || y > 0 || carry > 0 {
        let s = x % p + y % p + carry;
        carry = if s >= p { 1 } else { 0 };
        carries += carry;
        x /= p;
        y /= p;
        if x == 0 && y == 0 && carry == 0 {
            break;
        }
    }
    carries
}
