//! Codegrees, the pseudo-algebra `C(G)`, and abelian groups described by
//! their invariant types.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::chartab::{char_table, CharTable, Character};
use crate::error::{Error, Result};
use crate::permgroup::{prime_power_decomposition, Group};

/// `cod χ = |G : ker χ| / χ(1)`.
pub fn codegree(table: &CharTable<'_>, chi: &Character) -> u64 {
    let index = table.group().order() as u64 / table.kernel_order(chi);
    assert_eq!(
        index % chi.degree,
        0,
        "codegree must be an integer; the character table is inconsistent"
    );
    index / chi.degree
}

/// The multiset of codegrees with multiplicities, sorted by codegree.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PseudoAlgebra {
    pairs: Vec<(u64, u64)>,
}

impl PseudoAlgebra {
    /// Builds from `(codegree, multiplicity)` pairs in any order.
    ///
    /// Codegrees must be distinct and positive, multiplicities positive, and
    /// `(1, 1)` present.
    pub fn new(mut pairs: Vec<(u64, u64)>) -> Result<PseudoAlgebra> {
        pairs.sort_unstable();
        if pairs.windows(2).any(|w| w[0].0 == w[1].0) {
            return Err(Error::Parse("repeated codegree".into()));
        }
        if pairs.iter().any(|&(d, m)| d == 0 || m == 0) {
            return Err(Error::Parse(
                "codegrees and multiplicities must be positive".into(),
            ));
        }
        if pairs.first() != Some(&(1, 1)) {
            return Err(Error::Parse("the pair (1,1) must be present".into()));
        }
        Ok(PseudoAlgebra { pairs })
    }

    /// Counts codegrees from any list of values.
    pub fn from_codegrees(codegrees: impl IntoIterator<Item = u64>) -> Result<PseudoAlgebra> {
        let mut counts = BTreeMap::new();
        for d in codegrees {
            *counts.entry(d).or_insert(0u64) += 1;
        }
        PseudoAlgebra::new(counts.into_iter().collect())
    }

    pub fn pairs(&self) -> &[(u64, u64)] {
        &self.pairs
    }

    /// `m(d)`, zero when `d` is not a codegree.
    pub fn multiplicity(&self, d: u64) -> u64 {
        self.pairs
            .binary_search_by_key(&d, |&(x, _)| x)
            .map_or(0, |i| self.pairs[i].1)
    }

    /// `Σ m`, which is `k(G)` for a pseudo-algebra read off a table.
    pub fn total(&self) -> u64 {
        self.pairs.iter().map(|&(_, m)| m).sum()
    }

    /// `Cod(G)`.
    pub fn codegrees(&self) -> impl Iterator<Item = u64> + '_ {
        self.pairs.iter().map(|&(d, _)| d)
    }
}

impl fmt::Display for PseudoAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (d, m)) in self.pairs.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "({d},{m})")?;
        }
        Ok(())
    }
}

/// Parses the text form `(1,1) (2,7) (4,8) (8,16)`.
impl FromStr for PseudoAlgebra {
    type Err = Error;

    fn from_str(s: &str) -> Result<PseudoAlgebra> {
        let pairs = s
            .split_whitespace()
            .map(|tok| {
                let inner = tok
                    .strip_prefix('(')
                    .and_then(|t| t.strip_suffix(')'))
                    .ok_or_else(|| Error::Parse(format!("expected (d,m), got {tok:?}")))?;
                let (d, m) = inner
                    .split_once(',')
                    .ok_or_else(|| Error::Parse(format!("expected (d,m), got {tok:?}")))?;
                let num = |x: &str| {
                    x.parse::<u64>()
                        .map_err(|_| Error::Parse(format!("bad integer {x:?} in {tok:?}")))
                };
                Ok((num(d)?, num(m)?))
            })
            .collect::<Result<Vec<_>>>()?;
        PseudoAlgebra::new(pairs)
    }
}

/// `C(G)` from an already computed table.
pub fn pseudo_algebra_of(table: &CharTable<'_>) -> PseudoAlgebra {
    PseudoAlgebra::from_codegrees(table.irreducibles().iter().map(|chi| codegree(table, chi)))
        .expect("the principal character has codegree 1 and is the only one")
}

/// `C(G)`.
pub fn pseudo_algebra(group: &Group) -> Result<PseudoAlgebra> {
    Ok(pseudo_algebra_of(&char_table(group)?))
}

pub fn pseudo_equal(p: &PseudoAlgebra, q: &PseudoAlgebra) -> bool {
    p.pairs == q.pairs
}

/// An abelian group up to isomorphism: for each prime `p`, the partition
/// `n₁ ≥ n₂ ≥ …` with `A ≅ Π C_{p^{nᵢ}}`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct AbelianType {
    parts: BTreeMap<u64, Vec<u32>>,
}

impl AbelianType {
    pub fn trivial() -> AbelianType {
        AbelianType::default()
    }

    /// Type of a `p`-group; the partition is sorted into weakly decreasing order.
    pub fn p_group(p: u64, mut partition: Vec<u32>) -> Result<AbelianType> {
        let mut t = AbelianType::trivial();
        partition.sort_unstable_by(|a, b| b.cmp(a));
        t.insert(p, partition)?;
        Ok(t)
    }

    pub fn insert(&mut self, p: u64, partition: Vec<u32>) -> Result<()> {
        if !crate::permgroup::is_prime(p) {
            return Err(Error::Parse(format!("{p} is not prime")));
        }
        if partition.is_empty() || partition.contains(&0) {
            return Err(Error::Parse("partition entries must be at least 1".into()));
        }
        if partition.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Parse("partition must be weakly decreasing".into()));
        }
        if self.parts.insert(p, partition).is_some() {
            return Err(Error::Parse(format!("prime {p} given twice")));
        }
        Ok(())
    }

    pub fn parts(&self) -> &BTreeMap<u64, Vec<u32>> {
        &self.parts
    }

    pub fn is_trivial(&self) -> bool {
        self.parts.is_empty()
    }

    /// The prime when this is a nontrivial `p`-group type.
    pub fn single_prime(&self) -> Option<u64> {
        (self.parts.len() == 1).then(|| *self.parts.keys().next().expect("one entry"))
    }

    pub fn order(&self) -> u64 {
        self.parts
            .iter()
            .map(|(&p, part)| p.pow(part.iter().sum()))
            .product()
    }

    /// Cyclic orders `p^{nᵢ}` of the factors, prime by prime.
    pub fn cyclic_factors(&self) -> Vec<u64> {
        self.parts
            .iter()
            .flat_map(|(&p, part)| part.iter().map(move |&n| p.pow(n)))
            .collect()
    }
}

/// `2:[3,1,1]`, primes joined by `*`; the trivial type prints as `trivial`.
impl fmt::Display for AbelianType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return f.write_str("trivial");
        }
        for (i, (p, part)) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str("*")?;
            }
            let inner: Vec<String> = part.iter().map(u32::to_string).collect();
            write!(f, "{p}:[{}]", inner.join(","))?;
        }
        Ok(())
    }
}

impl FromStr for AbelianType {
    type Err = Error;

    fn from_str(s: &str) -> Result<AbelianType> {
        let mut t = AbelianType::trivial();
        if s == "trivial" {
            return Ok(t);
        }
        for piece in s.split('*') {
            let (p, rest) = piece
                .split_once(':')
                .ok_or_else(|| Error::Parse(format!("expected p:[n,...], got {piece:?}")))?;
            let p = p
                .parse::<u64>()
                .map_err(|_| Error::Parse(format!("bad prime {p:?}")))?;
            let list = rest
                .strip_prefix('[')
                .and_then(|r| r.strip_suffix(']'))
                .ok_or_else(|| Error::Parse(format!("expected [n,...], got {rest:?}")))?;
            let partition = list
                .split(',')
                .map(|x| {
                    x.parse::<u32>()
                        .map_err(|_| Error::Parse(format!("bad exponent {x:?}")))
                })
                .collect::<Result<Vec<_>>>()?;
            t.insert(p, partition)?;
        }
        Ok(t)
    }
}

/// `C(A)` computed from the type alone: codegrees of an abelian group are its
/// element orders, so this counts elements of each exact order.
pub fn abelian_pseudo(t: &AbelianType) -> PseudoAlgebra {
    // Per prime: exact-order counts at p^0, p^1, ..., p^{n₁}.
    let mut combined: Vec<(u64, u64)> = vec![(1, 1)];
    for (&p, part) in &t.parts {
        let max = part[0];
        let cumulative: Vec<u64> = (0..=max)
            .map(|k| p.pow(part.iter().map(|&n| n.min(k)).sum()))
            .collect();
        let mut next = Vec::new();
        for &(d, m) in &combined {
            for k in 0..=max as usize {
                let exact = cumulative[k] - if k == 0 { 0 } else { cumulative[k - 1] };
                next.push((d * p.pow(k as u32), m * exact));
            }
        }
        combined = next;
    }
    PseudoAlgebra::new(combined).expect("element-order counts form a valid pseudo-algebra")
}

/// Inverts [`abelian_pseudo`]: the type of the abelian group with pseudo-algebra
/// `p`, or an error when no abelian group has it.
pub fn reconstruct_abelian(p: &PseudoAlgebra) -> Result<AbelianType> {
    let mut primes: Vec<u64> = Vec::new();
    for d in p.codegrees() {
        let mut n = d;
        let mut f = 2;
        while n > 1 {
            if n % f == 0 {
                if !primes.contains(&f) {
                    primes.push(f);
                }
                n /= f;
            } else {
                f += 1;
            }
        }
    }
    primes.sort_unstable();

    let mut t = AbelianType::trivial();
    for &prime in &primes {
        // f(k) = #{x : x^{p^k} = 1} from the pure p-power codegrees.
        let mut cumulative = vec![p.multiplicity(1)];
        let mut power = 1u64;
        let mut parts_at_least = Vec::new();
        loop {
            power *= prime;
            let prev = *cumulative.last().expect("nonempty");
            let next = prev + p.multiplicity(power);
            if next == prev {
                break;
            }
            if next % prev != 0 {
                return Err(Error::NotAbelianRealizable(format!(
                    "count {next} of elements of order dividing {power} is not a multiple of {prev}"
                )));
            }
            let ratio = next / prev;
            let parts = match prime_power_decomposition(ratio) {
                Some((q, r)) if q == prime => r,
                _ => {
                    return Err(Error::NotAbelianRealizable(format!(
                        "ratio {ratio} at order {power} is not a power of {prime}"
                    )))
                }
            };
            if parts_at_least.last().is_some_and(|&last| parts > last) {
                return Err(Error::NotAbelianRealizable(format!(
                    "number of cyclic factors grows at order {power}"
                )));
            }
            parts_at_least.push(parts);
            cumulative.push(next);
        }
        if parts_at_least.is_empty() {
            return Err(Error::NotAbelianRealizable(format!(
                "no elements of order {prime} although {prime} divides a codegree"
            )));
        }
        // Conjugate partition: part i has size #{k : parts_at_least[k] > i}.
        let rows = parts_at_least[0] as usize;
        let partition: Vec<u32> = (0..rows)
            .map(|i| parts_at_least.iter().filter(|&&c| c as usize > i).count() as u32)
            .collect();
        t.insert(prime, partition)?;
    }
    if abelian_pseudo(&t) != *p {
        return Err(Error::NotAbelianRealizable(format!(
            "the only candidate {t} has a different pseudo-algebra"
        )));
    }
    Ok(t)
}

/// The prime `p` when every codegree above 1 is a power of `p`.
/// `None` for the trivial pseudo-algebra `{(1,1)}`.
pub fn prime_power_spectrum(p: &PseudoAlgebra) -> Option<u64> {
    let mut found = None;
    for d in p.codegrees().filter(|&d| d > 1) {
        let (q, _) = prime_power_decomposition(d)?;
        match found {
            None => found = Some(q),
            Some(r) if r != q => return None,
            _ => {}
        }
    }
    found
}
