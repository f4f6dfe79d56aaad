//! Prime machinery: primality, factorization, prime-divisor sets and
//! prime-power recognition for integers below 2^96.
//!
//! Primality is Miller–Rabin with fixed bases. Below 3.3·10^24 the base set
//! is deterministic; above it the test is completed by a strong Lucas test
//! (Baillie–PSW). Composites are split with trial division followed by
//! Pollard's rho using Brent's cycle detection.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Exclusive upper bound on integers accepted by [`factorize`].
pub const FACTOR_LIMIT: u128 = 1 << 96;

const SMALL_PRIMES: [u128; 13] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41];
/// Largest bound for which the first 13 prime bases are a proven Miller–Rabin witness set.
const MR13_BOUND: u128 = 3_317_044_064_679_887_385_961_981;
const TRIAL_BOUND: u128 = 1 << 10;

// ---------------------------------------------------------------------------
// modular arithmetic on u128

fn add_mod(a: u128, b: u128, n: u128) -> u128 {
    if a >= n - b {
        a - (n - b)
    } else {
        a + b
    }
}

fn sub_mod(a: u128, b: u128, n: u128) -> u128 {
    if a >= b {
        a - b
    } else {
        n - (b - a)
    }
}

/// `x / 2 mod n` for odd `n`.
fn half_mod(x: u128, n: u128) -> u128 {
    if x & 1 == 0 {
        x >> 1
    } else {
        (x >> 1) + (n >> 1) + 1
    }
}

fn mul_mod(a: u128, b: u128, n: u128) -> u128 {
    if n <= u64::MAX as u128 {
        (a * b) % n
    } else if n < FACTOR_LIMIT {
        // b in 32-bit limbs keeps every intermediate below 2^128
        let mut r = 0u128;
        for shift in [64u32, 32, 0] {
            let limb = (b >> shift) & 0xffff_ffff;
            r = add_mod((r << 32) % n, (a * limb) % n, n);
        }
        r
    } else {
        let (mut a, mut b, mut r) = (a % n, b, 0u128);
        while b > 0 {
            if b & 1 == 1 {
                r = add_mod(r, a, n);
            }
            a = add_mod(a, a, n);
            b >>= 1;
        }
        r
    }
}

fn pow_mod(mut base: u128, mut exp: u128, n: u128) -> u128 {
    let mut acc = 1 % n;
    base %= n;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, n);
        }
        base = mul_mod(base, base, n);
        exp >>= 1;
    }
    acc
}

pub(crate) fn gcd(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Floor of the `k`-th root.
fn iroot(n: u128, k: u32) -> u128 {
    if n < 2 || k == 1 {
        return n;
    }
    let mut r = (n as f64).powf(1.0 / k as f64) as u128;
    let pow_le = |r: u128| -> bool {
        let mut acc: u128 = 1;
        for _ in 0..k {
            match acc.checked_mul(r) {
                Some(v) if v <= n => acc = v,
                _ => return false,
            }
        }
        true
    };
    while r > 0 && !pow_le(r) {
        r -= 1;
    }
    while pow_le(r + 1) {
        r += 1;
    }
    r
}

/// Jacobi symbol (a/n) for odd n.
fn jacobi(mut a: u128, mut n: u128) -> i32 {
    let mut sign = 1;
    a %= n;
    while a != 0 {
        while a & 1 == 0 {
            a >>= 1;
            if matches!(n % 8, 3 | 5) {
                sign = -sign;
            }
        }
        (a, n) = (n, a);
        if a % 4 == 3 && n % 4 == 3 {
            sign = -sign;
        }
        a %= n;
    }
    if n == 1 {
        sign
    } else {
        0
    }
}

// ---------------------------------------------------------------------------
// primality

fn strong_probable_prime(n: u128, base: u128) -> bool {
    let d_full = n - 1;
    let s = d_full.trailing_zeros();
    let d = d_full >> s;
    let mut x = pow_mod(base, d, n);
    if x == 1 || x == n - 1 {
        return true;
    }
    for _ in 1..s {
        x = mul_mod(x, x, n);
        if x == n - 1 {
            return true;
        }
    }
    false
}

/// Strong Lucas probable-prime test with Selfridge parameters (P = 1).
fn strong_lucas(n: u128) -> bool {
    let root = iroot(n, 2);
    if root * root == n {
        return false;
    }
    // D = 5, -7, 9, -11, ...
    let mut magnitude: u128 = 5;
    let mut negative = false;
    let d_mod = loop {
        let d_mod = if negative { n - magnitude % n } else { magnitude % n };
        match jacobi(d_mod, n) {
            -1 => break d_mod,
            0 if !magnitude.is_multiple_of(n) => return false,
            _ => {}
        }
        magnitude += 2;
        negative = !negative;
    };
    // Q = (1 - D) / 4, reduced mod n
    let q_mod = if negative {
        // D = -m, Q = (1 + m) / 4
        ((1 + magnitude) / 4) % n
    } else {
        // D = m, Q = -(m - 1) / 4
        let q = ((magnitude - 1) / 4) % n;
        if q == 0 {
            0
        } else {
            n - q
        }
    };

    let n_plus = n + 1;
    let s = n_plus.trailing_zeros();
    let d = n_plus >> s;

    let (mut u, mut v, mut qk) = (1u128, 1u128, q_mod);
    let bits = 128 - d.leading_zeros();
    for i in (0..bits - 1).rev() {
        u = mul_mod(u, v, n);
        v = sub_mod(mul_mod(v, v, n), add_mod(qk, qk, n), n);
        qk = mul_mod(qk, qk, n);
        if (d >> i) & 1 == 1 {
            let u_next = half_mod(add_mod(u, v, n), n);
            let v_next = half_mod(add_mod(mul_mod(d_mod, u, n), v, n), n);
            u = u_next;
            v = v_next;
            qk = mul_mod(qk, q_mod, n);
        }
    }
    if u == 0 || v == 0 {
        return true;
    }
    for _ in 1..s {
        v = sub_mod(mul_mod(v, v, n), add_mod(qk, qk, n), n);
        qk = mul_mod(qk, qk, n);
        if v == 0 {
            return true;
        }
    }
    false
}

/// Primality test. Deterministic below 3.3·10^24, Baillie–PSW above.
pub fn is_prime(n: u128) -> bool {
    if n < 2 {
        return false;
    }
    for p in SMALL_PRIMES {
        if n == p {
            return true;
        }
        if n.is_multiple_of(p) {
            return false;
        }
    }
    if n < 43 * 43 {
        return true;
    }
    let bases: &[u128] = if n <= u64::MAX as u128 {
        &SMALL_PRIMES[..12]
    } else {
        &SMALL_PRIMES
    };
    if !bases.iter().all(|&b| strong_probable_prime(n, b)) {
        return false;
    }
    n < MR13_BOUND || strong_lucas(n)
}

// ---------------------------------------------------------------------------
// factorization

fn rho_step(x: u128, c: u128, n: u128) -> u128 {
    add_mod(mul_mod(x, x, n), c, n)
}

/// One Brent-rho attempt with polynomial x^2 + c. Returns a proper divisor or `None`.
fn brent_rho(n: u128, c: u128) -> Option<u128> {
    const BATCH: u64 = 128;
    const MAX_R: u64 = 1 << 28;
    let mut y: u128 = 2 % n;
    let mut r: u64 = 1;
    let mut q: u128 = 1;
    let mut g: u128 = 1;
    let mut x = y;
    let mut ys = y;
    while g == 1 {
        x = y;
        for _ in 0..r {
            y = rho_step(y, c, n);
        }
        let mut k = 0;
        while k < r && g == 1 {
            ys = y;
            for _ in 0..BATCH.min(r - k) {
                y = rho_step(y, c, n);
                q = mul_mod(q, x.abs_diff(y), n);
            }
            g = gcd(q, n);
            k += BATCH;
        }
        r *= 2;
        if r > MAX_R {
            return None;
        }
    }
    if g == n {
        loop {
            ys = rho_step(ys, c, n);
            g = gcd(x.abs_diff(ys), n);
            if g > 1 {
                break;
            }
        }
    }
    (g != n).then_some(g)
}

fn perfect_power(n: u128) -> Option<(u128, u32)> {
    let max_k = 127 - n.leading_zeros();
    (2..=max_k).rev().find_map(|k| {
        let r = iroot(n, k);
        (r > 1 && r.checked_pow(k) == Some(n)).then_some((r, k))
    })
}

fn split_into(n: u128, mult: u32, out: &mut Vec<(u128, u32)>) {
    if n == 1 {
        return;
    }
    if is_prime(n) {
        out.push((n, mult));
        return;
    }
    if let Some((root, k)) = perfect_power(n) {
        split_into(root, mult * k, out);
        return;
    }
    let divisor = (1..)
        .find_map(|c| brent_rho(n, c))
        .expect("rho eventually splits a composite");
    split_into(divisor, mult, out);
    split_into(n / divisor, mult, out);
}

/// Prime factorization of `n` as ascending `(prime, multiplicity)` pairs.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Factorization {
    factors: Vec<(u128, u32)>,
}

impl Factorization {
    pub fn factors(&self) -> &[(u128, u32)] {
        &self.factors
    }

    /// Multiset of primes with repetition, ascending.
    pub fn expand(&self) -> Vec<u128> {
        self.factors
            .iter()
            .flat_map(|&(p, e)| std::iter::repeat_n(p, e as usize))
            .collect()
    }

    pub fn support(&self) -> PrimeSet {
        PrimeSet(self.factors.iter().map(|&(p, _)| p).collect())
    }

    pub fn product(&self) -> u128 {
        self.factors.iter().map(|&(p, e)| p.pow(e)).product()
    }
}

/// Factors `2 <= n < 2^96`.
pub fn factorize(n: u128) -> Result<Factorization> {
    if n < 2 {
        return Err(Error::OutOfRange(format!(
            "cannot factor {n}; input must be at least 2"
        )));
    }
    if n >= FACTOR_LIMIT {
        return Err(Error::OutOfRange(format!(
            "{n} exceeds the factorization cap 2^96; shrink the exponent range"
        )));
    }
    let mut raw = Vec::new();
    let mut rest = n;
    let mut d: u128 = 2;
    while d < TRIAL_BOUND && d * d <= rest {
        let mut e = 0;
        while rest.is_multiple_of(d) {
            rest /= d;
            e += 1;
        }
        if e > 0 {
            raw.push((d, e));
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if rest > 1 {
        split_into(rest, 1, &mut raw);
    }
    raw.sort_unstable();
    let mut factors: Vec<(u128, u32)> = Vec::with_capacity(raw.len());
    for (p, e) in raw {
        match factors.last_mut() {
            Some((q, f)) if *q == p => *f += e,
            _ => factors.push((p, e)),
        }
    }
    Ok(Factorization { factors })
}

/// π(n), the set of primes dividing `n`. Empty for `n = 1`.
pub fn prime_divisors(n: u128) -> Result<PrimeSet> {
    match n {
        0 => Err(Error::BadParameter("prime divisors of 0 are undefined".into())),
        1 => Ok(PrimeSet::empty()),
        _ => Ok(factorize(n)?.support()),
    }
}

/// Returns `(p, f)` with `p^f = n` when `n` is a prime power.
pub fn as_prime_power(n: u128) -> Result<Option<PrimePower>> {
    let fact = factorize(n)?;
    Ok(match fact.factors() {
        &[(p, f)] => Some(PrimePower {
            base: p,
            exponent: f,
            value: n,
        }),
        _ => None,
    })
}

/// The `count` smallest primes not contained in `exclude`.
pub fn smallest_primes_excluding(count: usize, exclude: &PrimeSet) -> PrimeSet {
    let primes = (2u128..)
        .filter(|&p| is_prime(p) && !exclude.contains(p))
        .take(count)
        .collect();
    PrimeSet(primes)
}

// ---------------------------------------------------------------------------
// value types

/// Ascending set of distinct primes.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u128>", into = "Vec<u128>")]
pub struct PrimeSet(Vec<u128>);

impl PrimeSet {
    pub fn empty() -> Self {
        PrimeSet(Vec::new())
    }

    /// Validates primality and distinctness; input order is irrelevant.
    pub fn new(items: impl IntoIterator<Item = u128>) -> Result<Self> {
        let mut v: Vec<u128> = items.into_iter().collect();
        v.sort_unstable();
        for w in v.windows(2) {
            if w[0] == w[1] {
                return Err(Error::DuplicateVertex(w[0]));
            }
        }
        if let Some(&p) = v.iter().find(|&&p| !is_prime(p)) {
            return Err(Error::NotPrime(p));
        }
        Ok(PrimeSet(v))
    }

    pub(crate) fn from_sorted_unchecked(v: Vec<u128>) -> Self {
        debug_assert!(v.windows(2).all(|w| w[0] < w[1]));
        PrimeSet(v)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = u128> + '_ {
        self.0.iter().copied()
    }

    pub fn as_slice(&self) -> &[u128] {
        &self.0
    }

    pub fn contains(&self, p: u128) -> bool {
        self.0.binary_search(&p).is_ok()
    }

    pub fn union(&self, other: &PrimeSet) -> PrimeSet {
        let mut v: Vec<u128> = self.0.iter().chain(&other.0).copied().collect();
        v.sort_unstable();
        v.dedup();
        PrimeSet(v)
    }

    pub fn intersection(&self, other: &PrimeSet) -> PrimeSet {
        PrimeSet(self.iter().filter(|&p| other.contains(p)).collect())
    }

    pub fn difference(&self, other: &PrimeSet) -> PrimeSet {
        PrimeSet(self.iter().filter(|&p| !other.contains(p)).collect())
    }

    pub fn is_disjoint(&self, other: &PrimeSet) -> bool {
        self.iter().all(|p| !other.contains(p))
    }

    pub fn is_subset(&self, other: &PrimeSet) -> bool {
        self.iter().all(|p| other.contains(p))
    }
}

impl TryFrom<Vec<u128>> for PrimeSet {
    type Error = Error;

    fn try_from(v: Vec<u128>) -> Result<Self> {
        PrimeSet::new(v)
    }
}

impl From<PrimeSet> for Vec<u128> {
    fn from(s: PrimeSet) -> Self {
        s.0
    }
}

impl fmt::Display for PrimeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str("}")
    }
}

/// A validated prime power `base^exponent`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct PrimePower {
    base: u128,
    exponent: u32,
    value: u128,
}

impl PrimePower {
    pub fn new(base: u128, exponent: u32) -> Result<Self> {
        if !is_prime(base) {
            return Err(Error::NotPrime(base));
        }
        if exponent == 0 {
            return Err(Error::BadParameter("prime power exponent must be positive".into()));
        }
        let value = base
            .checked_pow(exponent)
            .ok_or_else(|| Error::OutOfRange(format!("{base}^{exponent} overflows 128 bits")))?;
        Ok(PrimePower { base, exponent, value })
    }

    /// Recognizes `value` as a prime power, failing with `BadParameter` otherwise.
    pub fn from_value(value: u128) -> Result<Self> {
        if value < 2 {
            return Err(Error::BadParameter(format!("{value} is not a prime power")));
        }
        as_prime_power(value)?.ok_or_else(|| Error::BadParameter(format!("{value} is not a prime power")))
    }

    pub fn base(&self) -> u128 {
        self.base
    }

    pub fn exponent(&self) -> u32 {
        self.exponent
    }

    pub fn value(&self) -> u128 {
        self.value
    }
}

impl fmt::Display for PrimePower {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}
