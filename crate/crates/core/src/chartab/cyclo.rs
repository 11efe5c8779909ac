//! Exact values in `Z[ζ_e]` written as sums of `e`-th roots of unity.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

/// `Σ_k m_k ζ^k` with nonnegative multiplicities `m_k`, stored sparsely as
/// `(k, m_k)` pairs sorted by `k` with every `m_k > 0`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RootSum {
    terms: Vec<(u32, u32)>,
}

impl RootSum {
    pub fn from_dense(multiplicities: &[u32]) -> RootSum {
        RootSum {
            terms: multiplicities
                .iter()
                .enumerate()
                .filter(|(_, &m)| m > 0)
                .map(|(k, &m)| (k as u32, m))
                .collect(),
        }
    }

    /// `m · ζ^k`.
    pub fn monomial(k: u32, m: u32) -> RootSum {
        RootSum {
            terms: if m == 0 { vec![] } else { vec![(k, m)] },
        }
    }

    pub fn terms(&self) -> &[(u32, u32)] {
        &self.terms
    }

    /// Multiplicity of `ζ^k`.
    pub fn multiplicity(&self, k: u32) -> u32 {
        self.terms
            .binary_search_by_key(&k, |&(r, _)| r)
            .map_or(0, |i| self.terms[i].1)
    }

    /// Dense multiplicity vector of length `e`.
    pub fn dense(&self, e: usize) -> Vec<u32> {
        let mut v = vec![0; e];
        for &(k, m) in &self.terms {
            v[k as usize] = m;
        }
        v
    }

    /// Number of roots in the sum; equals the character degree.
    pub fn count(&self) -> u64 {
        self.terms.iter().map(|&(_, m)| m as u64).sum()
    }

    /// Complex conjugate: `ζ^k ↦ ζ^{-k}`.
    pub fn conj(&self, e: u32) -> RootSum {
        let mut terms: Vec<_> = self.terms.iter().map(|&(k, m)| ((e - k) % e, m)).collect();
        terms.sort_unstable();
        RootSum { terms }
    }

    /// Lexicographic order of the dense multiplicity vectors.
    pub fn cmp_dense(&self, other: &RootSum) -> Ordering {
        let (a, b) = (&self.terms, &other.terms);
        let (mut i, mut j) = (0, 0);
        loop {
            match (a.get(i), b.get(j)) {
                (None, None) => return Ordering::Equal,
                // the other side has a positive entry where this one is zero
                (None, Some(_)) => return Ordering::Less,
                (Some(_), None) => return Ordering::Greater,
                (Some(&(ka, ma)), Some(&(kb, mb))) => match ka.cmp(&kb) {
                    Ordering::Less => return Ordering::Greater,
                    Ordering::Greater => return Ordering::Less,
                    Ordering::Equal => match ma.cmp(&mb) {
                        Ordering::Equal => {
                            i += 1;
                            j += 1;
                        }
                        ord => return ord,
                    },
                },
            }
        }
    }

    /// Adds `weight · self · conj(other)` into a dense accumulator indexed by
    /// exponent modulo `e`.
    pub(crate) fn accumulate_product_conj(&self, other: &RootSum, weight: i64, acc: &mut [i64]) {
        let e = acc.len() as u32;
        for &(ka, ma) in &self.terms {
            for &(kb, mb) in &other.terms {
                let k = (ka + e - kb) % e;
                acc[k as usize] += weight * ma as i64 * mb as i64;
            }
        }
    }
}

/// Renders as a sum of powers of a primitive root `z`, e.g. `1+z^4` or `2`.
impl fmt::Display for RootSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, &(k, m)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, "+")?;
            }
            match (k, m) {
                (0, m) => write!(f, "{m}")?,
                (k, 1) => write!(f, "z^{k}")?,
                (k, m) => write!(f, "{m}*z^{k}")?,
            }
        }
        Ok(())
    }
}

/// Integer coefficients (lowest degree first) of the `n`-th cyclotomic polynomial.
pub fn cyclotomic_polynomial(n: usize) -> Vec<i64> {
    assert!(n >= 1);
    // Φ_m = (x^m - 1) / Π_{d | m, d < m} Φ_d, built up over the divisors of n.
    let divisors: Vec<usize> = (1..=n).filter(|d| n % d == 0).collect();
    let mut known: Vec<(usize, Vec<i64>)> = Vec::with_capacity(divisors.len());
    for &m in &divisors {
        let mut num = vec![0i64; m + 1];
        num[0] = -1;
        num[m] = 1;
        for (d, phi) in &known {
            if m % d == 0 {
                num = divide_monic(&num, phi);
            }
        }
        known.push((m, num));
    }
    known.pop().expect("n is its own divisor").1
}

/// Exact quotient of `num` by the monic `den`; panics on a nonzero remainder.
fn divide_monic(num: &[i64], den: &[i64]) -> Vec<i64> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let mut quot = vec![0i64; num.len() - dd];
    for t in (dd..num.len()).rev() {
        let c = rem[t];
        quot[t - dd] = c;
        for (s, &coef) in den.iter().enumerate() {
            rem[t - dd + s] -= c * coef;
        }
    }
    assert!(rem.iter().all(|&c| c == 0), "inexact cyclotomic division");
    quot
}

/// Reduces elements of `Z[x]/(x^e - 1)` modulo `Φ_e`, deciding equality in `Z[ζ_e]`.
pub struct CycloReducer {
    e: usize,
    phi_degree: usize,
    /// Nonzero lower coefficients of `Φ_e` as `(power, coefficient)`.
    phi_terms: Vec<(usize, i64)>,
}

impl CycloReducer {
    pub fn new(e: usize) -> CycloReducer {
        let phi = cyclotomic_polynomial(e);
        let phi_degree = phi.len() - 1;
        let phi_terms = phi[..phi_degree]
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(s, &c)| (s, c))
            .collect();
        CycloReducer {
            e,
            phi_degree,
            phi_terms,
        }
    }

    pub fn exponent(&self) -> usize {
        self.e
    }

    /// Remainder modulo `Φ_e`, in place; entries at or above `deg Φ_e` end up zero.
    pub fn reduce(&self, v: &mut [i64]) {
        debug_assert_eq!(v.len(), self.e);
        for t in (self.phi_degree..v.len()).rev() {
            let c = v[t];
            if c == 0 {
                continue;
            }
            v[t] = 0;
            let base = t - self.phi_degree;
            for &(s, coef) in &self.phi_terms {
                v[base + s] -= c * coef;
            }
        }
    }

    /// Whether `Σ v_k ζ^k` equals the integer `c`.
    pub fn equals_integer(&self, v: &[i64], c: i64) -> bool {
        let mut w = v.to_vec();
        self.reduce(&mut w);
        w[0] == c && w[1..].iter().all(|&x| x == 0)
    }
}
