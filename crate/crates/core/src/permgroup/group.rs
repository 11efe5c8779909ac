use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::sync::OnceLock;

use super::classes::ConjClasses;
use super::perm::Perm;
use crate::error::{Error, Result};

/// Largest group order [`close_group`] builds unless told otherwise.
pub const DEFAULT_ORDER_CAP: usize = 2048;

/// A finite permutation group with its full element list.
///
/// Elements are indexed in breadth-first discovery order from the identity
/// (index 0), multiplying on the right by the generators in the order given.
/// The same generator list therefore always yields the same indexing.
pub struct Group {
    name: String,
    degree: usize,
    generators: Vec<Perm>,
    generator_indices: Vec<usize>,
    elements: Vec<Perm>,
    index: HashMap<Perm, usize>,
    classes: OnceLock<ConjClasses>,
}

/// Closes `generators` under composition, refusing to grow past `cap` elements.
pub fn close_group(
    degree: usize,
    generators: Vec<Perm>,
    name: impl Into<String>,
    cap: usize,
) -> Result<Group> {
    if degree == 0 {
        return Err(Error::InvalidPermutation(
            "degree must be at least 1".into(),
        ));
    }
    for g in &generators {
        if g.degree() != degree {
            return Err(Error::DegreeMismatch(degree, g.degree()));
        }
    }
    let identity = Perm::identity(degree);
    let mut elements = vec![identity.clone()];
    let mut index = HashMap::new();
    index.insert(identity, 0);
    let mut queue = VecDeque::from([0usize]);
    while let Some(x) = queue.pop_front() {
        for s in &generators {
            let y = elements[x].compose_unchecked(s);
            if !index.contains_key(&y) {
                if elements.len() >= cap {
                    return Err(Error::CapExceeded { cap });
                }
                index.insert(y.clone(), elements.len());
                queue.push_back(elements.len());
                elements.push(y);
            }
        }
    }
    let generator_indices = generators.iter().map(|g| index[g]).collect();
    Ok(Group {
        name: name.into(),
        degree,
        generators,
        generator_indices,
        elements,
        index,
        classes: OnceLock::new(),
    })
}

impl Group {
    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn generators(&self) -> &[Perm] {
        &self.generators
    }

    /// Element indices of the generators.
    pub fn generator_indices(&self) -> &[usize] {
        &self.generator_indices
    }

    pub fn elements(&self) -> &[Perm] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &Perm {
        &self.elements[i]
    }

    pub fn index_of(&self, p: &Perm) -> Option<usize> {
        self.index.get(p).copied()
    }

    /// Index of `elements[a] ∘ elements[b]`.
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.lookup(&self.elements[a].compose_unchecked(&self.elements[b]))
    }

    pub fn inv(&self, a: usize) -> usize {
        self.lookup(&self.elements[a].inverse())
    }

    /// `a^-1 b^-1 a b`
    pub fn commutator(&self, a: usize, b: usize) -> usize {
        let (x, y) = (&self.elements[a], &self.elements[b]);
        let ab = x.compose_unchecked(y);
        let ba = y.compose_unchecked(x);
        self.lookup(&ba.inverse().compose_unchecked(&ab))
    }

    /// `b^-1 a b`
    pub fn conjugate(&self, a: usize, b: usize) -> usize {
        let y = &self.elements[b];
        self.lookup(
            &y.inverse()
                .compose_unchecked(&self.elements[a])
                .compose_unchecked(y),
        )
    }

    pub fn pow(&self, a: usize, exp: u64) -> usize {
        let mut result = Perm::identity(self.degree);
        let mut base = self.elements[a].clone();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                result = result.compose_unchecked(&base);
            }
            base = base.compose_unchecked(&base);
            e >>= 1;
        }
        self.lookup(&result)
    }

    fn lookup(&self, p: &Perm) -> usize {
        *self
            .index
            .get(p)
            .expect("group element list is closed under composition")
    }

    /// Order of an element, read off its cycle lengths.
    pub fn element_order(&self, a: usize) -> u64 {
        let p = &self.elements[a];
        let mut seen = vec![false; self.degree];
        let mut order = 1u64;
        for start in 0..self.degree {
            if seen[start] {
                continue;
            }
            let mut len = 0u64;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                x = p.apply(x);
                len += 1;
            }
            order = lcm(order, len);
        }
        order
    }

    pub fn exponent(&self) -> u64 {
        (0..self.order()).fold(1, |acc, a| lcm(acc, self.element_order(a)))
    }

    pub fn is_abelian(&self) -> bool {
        let gens = &self.generators;
        gens.iter().enumerate().all(|(i, a)| {
            gens[i + 1..]
                .iter()
                .all(|b| a.compose_unchecked(b) == b.compose_unchecked(a))
        })
    }

    /// The prime `p` when the order is a power `p^k` with `k ≥ 1`.
    pub fn prime_power(&self) -> Option<(u64, u32)> {
        prime_power_decomposition(self.order() as u64)
    }

    /// Conjugacy classes, computed once and cached.
    pub fn classes(&self) -> &ConjClasses {
        self.classes.get_or_init(|| ConjClasses::compute(self))
    }

    /// Number of conjugacy classes, `k(G)`.
    pub fn class_count(&self) -> usize {
        self.classes().len()
    }
}

impl fmt::Debug for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Group")
            .field("name", &self.name)
            .field("degree", &self.degree)
            .field("order", &self.order())
            .finish()
    }
}

pub(crate) fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub(crate) fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}

pub(crate) fn smallest_prime_factor(n: u64) -> u64 {
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return d;
        }
        d += 1;
    }
    n
}

pub(crate) fn is_prime(n: u64) -> bool {
    n >= 2 && smallest_prime_factor(n) == n
}

/// `n = p^k` with `p` prime and `k ≥ 1`.
pub fn prime_power_decomposition(n: u64) -> Option<(u64, u32)> {
    if n < 2 {
        return None;
    }
    let p = smallest_prime_factor(n);
    let mut m = n;
    let mut k = 0;
    while m % p == 0 {
        m /= p;
        k += 1;
    }
    (m == 1).then_some((p, k))
}
