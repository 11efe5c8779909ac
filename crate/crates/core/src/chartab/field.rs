//! Arithmetic modulo a word-sized prime and the choice of Dixon prime.

use crate::permgroup::is_prime;

pub(crate) fn add(a: u64, b: u64, q: u64) -> u64 {
    let s = a + b;
    if s >= q {
        s - q
    } else {
        s
    }
}

pub(crate) fn sub(a: u64, b: u64, q: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        a + q - b
    }
}

pub(crate) fn mul(a: u64, b: u64, q: u64) -> u64 {
    ((a as u128 * b as u128) % q as u128) as u64
}

pub(crate) fn pow(mut base: u64, mut exp: u64, q: u64) -> u64 {
    let mut acc = 1 % q;
    base %= q;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul(acc, base, q);
        }
        base = mul(base, base, q);
        exp >>= 1;
    }
    acc
}

/// Inverse modulo `q` by the extended Euclidean algorithm.
pub(crate) fn inv(a: u64, q: u64) -> Option<u64> {
    let (mut r0, mut r1) = (q as i128, (a % q) as i128);
    let (mut t0, mut t1) = (0i128, 1i128);
    while r1 != 0 {
        let quot = r0 / r1;
        (r0, r1) = (r1, r0 - quot * r1);
        (t0, t1) = (t1, t0 - quot * t1);
    }
    (r0 == 1).then(|| t0.rem_euclid(q as i128) as u64)
}

/// Field and root-of-unity data for one Dixon computation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DixonContext {
    /// Group exponent `e`.
    pub exponent: u64,
    /// The prime `q`, with `q ≡ 1 (mod e)` and `q > 2|G|`.
    pub prime: u64,
    /// A primitive `e`-th root of unity modulo `q`.
    pub theta: u64,
    /// `theta_powers[k] = θ^k` for `0 ≤ k < e`.
    pub theta_powers: Vec<u64>,
}

impl DixonContext {
    /// `θ^k` for any integer `k`.
    pub fn theta_pow(&self, k: i64) -> u64 {
        self.theta_powers[k.rem_euclid(self.exponent as i64) as usize]
    }
}

/// Smallest prime `q ≡ 1 (mod e)` exceeding `2·order`, with the smallest
/// residue of multiplicative order exactly `e`.
pub fn choose_dixon_prime(order: u64, exponent: u64) -> DixonContext {
    let e = exponent.max(1);
    let mut q = (2 * order) / e * e + 1;
    while q <= 2 * order || !is_prime(q) {
        q += e;
    }
    let primes_of_e = prime_divisors(e);
    let theta = (1..q)
        .find(|&t| pow(t, e, q) == 1 && primes_of_e.iter().all(|&r| pow(t, e / r, q) != 1))
        .expect("the multiplicative group of F_q is cyclic of order divisible by e");
    let mut theta_powers = Vec::with_capacity(e as usize);
    let mut x = 1;
    for _ in 0..e {
        theta_powers.push(x);
        x = mul(x, theta, q);
    }
    DixonContext {
        exponent: e,
        prime: q,
        theta,
        theta_powers,
    }
}

fn prime_divisors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}
