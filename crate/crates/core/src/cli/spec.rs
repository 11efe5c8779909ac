//! Textual group specifications: `cyclic:12`, `abelian:2:[3,1,1]`,
//! `abelian:[4,6]`, `dihedral:8`, `ut3:3`, `file:PATH#NAME`, and direct
//! products of these joined by `*`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use super::catalog::parse_catalog_file;
use crate::error::{Error, Result};
use crate::permgroup::{close_group, is_prime, Group, Perm};
use crate::pseudoalg::AbelianType;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupSpec {
    Cyclic(u64),
    /// Abelian `p`-group by partition, stored weakly decreasing.
    AbelianP {
        p: u64,
        partition: Vec<u32>,
    },
    /// Direct product of cyclic groups of the listed orders.
    Abelian(Vec<u64>),
    /// Dihedral group of order `2n` acting on `n ≥ 3` points.
    Dihedral(u64),
    /// Unitriangular `3×3` matrices over `F_p`.
    Ut3(u64),
    File {
        path: String,
        name: String,
    },
    /// At least two factors, none of them a product.
    Product(Vec<GroupSpec>),
}

fn parse_num<T: FromStr>(s: &str, what: &str) -> Result<T> {
    s.trim()
        .parse()
        .map_err(|_| Error::Parse(format!("bad {what} {s:?}")))
}

fn parse_list<T: FromStr>(s: &str, what: &str) -> Result<Vec<T>> {
    let inner = s
        .strip_prefix('[')
        .and_then(|r| r.strip_suffix(']'))
        .ok_or_else(|| Error::Parse(format!("expected [..], got {s:?}")))?;
    if inner.trim().is_empty() {
        return Err(Error::Parse("empty list".into()));
    }
    inner.split(',').map(|x| parse_num(x, what)).collect()
}

/// Splits on `*` outside brackets.
fn split_factors(s: &str) -> Vec<&str> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, c) in s.char_indices() {
        match c {
            '[' => depth += 1,
            ']' => depth -= 1,
            '*' if depth == 0 => {
                out.push(&s[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    out.push(&s[start..]);
    out
}

fn parse_factor(s: &str) -> Result<GroupSpec> {
    let (kind, rest) = s
        .split_once(':')
        .ok_or_else(|| Error::Parse(format!("expected KIND:ARGS, got {s:?}")))?;
    let spec = match kind {
        "cyclic" => {
            let n: u64 = parse_num(rest, "order")?;
            if n == 0 {
                return Err(Error::Parse("cyclic order must be at least 1".into()));
            }
            GroupSpec::Cyclic(n)
        }
        "abelian" if rest.starts_with('[') => {
            let orders: Vec<u64> = parse_list(rest, "order")?;
            if orders.contains(&0) {
                return Err(Error::Parse(
                    "cyclic factor orders must be at least 1".into(),
                ));
            }
            GroupSpec::Abelian(orders)
        }
        "abelian" => {
            let (p, list) = rest
                .split_once(':')
                .ok_or_else(|| Error::Parse(format!("expected abelian:p:[..], got {s:?}")))?;
            let p: u64 = parse_num(p, "prime")?;
            if !is_prime(p) {
                return Err(Error::Parse(format!("{p} is not prime")));
            }
            let mut partition: Vec<u32> = parse_list(list, "exponent")?;
            if partition.contains(&0) {
                return Err(Error::Parse("partition entries must be at least 1".into()));
            }
            partition.sort_unstable_by(|a, b| b.cmp(a));
            GroupSpec::AbelianP { p, partition }
        }
        "dihedral" => {
            let n: u64 = parse_num(rest, "degree")?;
            if n < 3 {
                return Err(Error::Parse("dihedral:n needs n ≥ 3".into()));
            }
            GroupSpec::Dihedral(n)
        }
        "ut3" => {
            let p: u64 = parse_num(rest, "prime")?;
            if !is_prime(p) {
                return Err(Error::Parse(format!("{p} is not prime")));
            }
            GroupSpec::Ut3(p)
        }
        "file" => {
            let (path, name) = rest
                .rsplit_once('#')
                .ok_or_else(|| Error::Parse(format!("expected file:PATH#NAME, got {s:?}")))?;
            if path.is_empty() || name.is_empty() {
                return Err(Error::Parse(format!("expected file:PATH#NAME, got {s:?}")));
            }
            GroupSpec::File {
                path: path.to_string(),
                name: name.to_string(),
            }
        }
        _ => return Err(Error::Parse(format!("unknown group kind {kind:?}"))),
    };
    Ok(spec)
}

impl FromStr for GroupSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<GroupSpec> {
        let s = s.trim();
        let mut factors = split_factors(s)
            .into_iter()
            .map(parse_factor)
            .collect::<Result<Vec<_>>>()?;
        if factors.len() == 1 {
            Ok(factors.pop().expect("one factor"))
        } else {
            Ok(GroupSpec::Product(factors))
        }
    }
}

fn join<T: fmt::Display>(xs: &[T]) -> String {
    xs.iter().map(T::to_string).collect::<Vec<_>>().join(",")
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupSpec::Cyclic(n) => write!(f, "cyclic:{n}"),
            GroupSpec::AbelianP { p, partition } => write!(f, "abelian:{p}:[{}]", join(partition)),
            GroupSpec::Abelian(orders) => write!(f, "abelian:[{}]", join(orders)),
            GroupSpec::Dihedral(n) => write!(f, "dihedral:{n}"),
            GroupSpec::Ut3(p) => write!(f, "ut3:{p}"),
            GroupSpec::File { path, name } => write!(f, "file:{path}#{name}"),
            GroupSpec::Product(factors) => {
                let parts: Vec<String> = factors.iter().map(ToString::to_string).collect();
                f.write_str(&parts.join("*"))
            }
        }
    }
}

/// Generators on `degree` points.
struct Action {
    degree: usize,
    generators: Vec<Perm>,
}

fn cycles(orders: &[u64]) -> Result<Action> {
    let degree: usize = orders.iter().map(|&m| m as usize).sum();
    let mut generators = Vec::new();
    let mut offset = 0;
    for &m in orders {
        let m = m as usize;
        if m > 1 {
            let points: Vec<usize> = (offset..offset + m).collect();
            generators.push(Perm::cycle(degree, &points)?);
        }
        offset += m;
    }
    Ok(Action { degree, generators })
}

impl GroupSpec {
    /// Group order, when it follows from the spec alone.
    pub fn known_order(&self) -> Option<u128> {
        match self {
            GroupSpec::Cyclic(n) => Some(*n as u128),
            GroupSpec::AbelianP { p, partition } => {
                (*p as u128).checked_pow(partition.iter().sum())
            }
            GroupSpec::Abelian(orders) => orders
                .iter()
                .try_fold(1u128, |acc, &m| acc.checked_mul(m as u128)),
            GroupSpec::Dihedral(n) => Some(2 * *n as u128),
            GroupSpec::Ut3(p) => (*p as u128).checked_pow(3),
            GroupSpec::File { .. } => None,
            GroupSpec::Product(factors) => factors
                .iter()
                .try_fold(1u128, |acc, f| acc.checked_mul(f.known_order()?)),
        }
    }

    fn action(&self, cap: usize) -> Result<Action> {
        if let Some(order) = self.known_order() {
            if order > cap as u128 {
                return Err(Error::CapExceeded { cap });
            }
        } else if !matches!(self, GroupSpec::File { .. } | GroupSpec::Product(_)) {
            return Err(Error::CapExceeded { cap });
        }
        match self {
            GroupSpec::Cyclic(n) => cycles(&[*n]),
            GroupSpec::AbelianP { p, partition } => {
                let orders: Vec<u64> = partition.iter().map(|&k| p.pow(k)).collect();
                cycles(&orders)
            }
            GroupSpec::Abelian(orders) => cycles(orders),
            GroupSpec::Dihedral(n) => {
                let n = *n as usize;
                let rotation = Perm::new((0..n).map(|i| (i + 1) % n).collect())?;
                let reflection = Perm::new((0..n).map(|i| (n - i) % n).collect())?;
                Ok(Action {
                    degree: n,
                    generators: vec![rotation, reflection],
                })
            }
            GroupSpec::Ut3(p) => {
                // Column vectors (x, y, z) of F_p³ are the points x·p² + y·p + z;
                // the generators are the elementary matrices I + E₁₂ and I + E₂₃.
                let p = *p as usize;
                let map = |f: &dyn Fn(usize, usize, usize) -> (usize, usize, usize)| {
                    Perm::new(
                        (0..p * p * p)
                            .map(|i| {
                                let (x, y, z) = f(i / (p * p), i / p % p, i % p);
                                (x * p + y) * p + z
                            })
                            .collect(),
                    )
                };
                Ok(Action {
                    degree: p * p * p,
                    generators: vec![
                        map(&|x, y, z| ((x + y) % p, y, z))?,
                        map(&|x, y, z| (x, (y + z) % p, z))?,
                    ],
                })
            }
            GroupSpec::File { path, name } => {
                let entries = parse_catalog_file(path)?;
                let entry = entries
                    .iter()
                    .find(|e| &e.name == name)
                    .ok_or_else(|| Error::Parse(format!("no group {name:?} in {path}")))?;
                let group = entry.build(path, cap)?;
                Ok(Action {
                    degree: group.degree(),
                    generators: group.generators().to_vec(),
                })
            }
            GroupSpec::Product(factors) => {
                let parts = factors
                    .iter()
                    .map(|f| f.action(cap))
                    .collect::<Result<Vec<_>>>()?;
                let degree = parts.iter().map(|a| a.degree).sum();
                let mut generators = Vec::new();
                let mut offset = 0;
                for a in parts {
                    generators.extend(a.generators.iter().map(|g| g.shifted(offset, degree)));
                    offset += a.degree;
                }
                Ok(Action { degree, generators })
            }
        }
    }

    /// The abelian type when the spec is a product of cyclic factors.
    pub fn abelian_type(&self) -> Result<Option<AbelianType>> {
        let mut orders = Vec::new();
        if !self.cyclic_orders(&mut orders) {
            return Ok(None);
        }
        let mut by_prime: BTreeMap<u64, Vec<u32>> = BTreeMap::new();
        for m in orders {
            let mut rest = m;
            let mut p = 2;
            while rest > 1 {
                if p * p > rest {
                    p = rest;
                }
                let mut k = 0;
                while rest % p == 0 {
                    rest /= p;
                    k += 1;
                }
                if k > 0 {
                    by_prime.entry(p).or_default().push(k);
                }
                p += 1;
            }
        }
        let mut t = AbelianType::trivial();
        for (p, mut part) in by_prime {
            part.sort_unstable_by(|a, b| b.cmp(a));
            t.insert(p, part)?;
        }
        Ok(Some(t))
    }

    fn cyclic_orders(&self, out: &mut Vec<u64>) -> bool {
        match self {
            GroupSpec::Cyclic(n) => out.push(*n),
            GroupSpec::AbelianP { p, partition } => out.extend(partition.iter().map(|&k| p.pow(k))),
            GroupSpec::Abelian(orders) => out.extend(orders),
            GroupSpec::Product(factors) => return factors.iter().all(|f| f.cyclic_orders(out)),
            _ => return false,
        }
        true
    }

    /// Builds the group, named by its catalog name for a single `file:` spec
    /// and by the canonical spec string otherwise.
    pub fn build(&self, cap: usize) -> Result<Group> {
        let action = self.action(cap)?;
        let name = match self {
            GroupSpec::File { name, .. } => name.clone(),
            _ => self.to_string(),
        };
        close_group(action.degree, action.generators, name, cap)
    }
}

/// Parses and builds in one step.
pub fn build(spec: &str, cap: usize) -> Result<Group> {
    spec.parse::<GroupSpec>()?.build(cap)
}
