use std::fmt;

use super::group::{close_group, Group};
use crate::error::{Error, Result};

/// A subgroup of a [`Group`], stored as membership flags over the parent's
/// element list.
#[derive(Clone)]
pub struct Subgroup<'g> {
    parent: &'g Group,
    member_flags: Vec<bool>,
    order: usize,
}

impl<'g> Subgroup<'g> {
    pub fn whole(parent: &'g Group) -> Self {
        Subgroup {
            parent,
            member_flags: vec![true; parent.order()],
            order: parent.order(),
        }
    }

    pub fn trivial(parent: &'g Group) -> Self {
        let mut member_flags = vec![false; parent.order()];
        member_flags[0] = true;
        Subgroup {
            parent,
            member_flags,
            order: 1,
        }
    }

    /// Wraps a membership set, checking that it is a subgroup.
    pub fn from_members(parent: &'g Group, member_flags: Vec<bool>) -> Result<Self> {
        if member_flags.len() != parent.order() || !member_flags[0] {
            return Err(Error::InvalidPermutation(
                "membership set must contain the identity".into(),
            ));
        }
        let members: Vec<usize> = (0..parent.order()).filter(|&i| member_flags[i]).collect();
        for &a in &members {
            for &b in &members {
                if !member_flags[parent.mul(a, b)] {
                    return Err(Error::InvalidPermutation(
                        "membership set is not closed under composition".into(),
                    ));
                }
            }
        }
        Ok(Subgroup {
            parent,
            order: members.len(),
            member_flags,
        })
    }

    /// Subgroup generated by the given element indices.
    pub fn generated(parent: &'g Group, seeds: &[usize]) -> Self {
        let mut sub = Subgroup::trivial(parent);
        let mut gens = Vec::new();
        let mut elems = vec![0usize];
        for &s in seeds {
            if sub.member_flags[s] {
                continue;
            }
            gens.push(s);
            let mut head = 0;
            while head < elems.len() {
                let x = elems[head];
                head += 1;
                for &g in &gens {
                    let y = parent.mul(x, g);
                    if !sub.member_flags[y] {
                        sub.member_flags[y] = true;
                        elems.push(y);
                    }
                }
            }
        }
        sub.order = elems.len();
        sub
    }

    /// Smallest subgroup containing `seeds` that is closed under conjugation
    /// by every element of `conjugators`.
    pub fn normal_closure(parent: &'g Group, seeds: &[usize], conjugators: &[usize]) -> Self {
        let mut sub = Subgroup::trivial(parent);
        let mut elems = vec![0usize];
        let mut head = 0;
        while head < elems.len() {
            let x = elems[head];
            head += 1;
            let next = seeds
                .iter()
                .map(|&s| parent.mul(x, s))
                .chain(conjugators.iter().map(|&c| parent.conjugate(x, c)))
                .collect::<Vec<_>>();
            for y in next {
                if !sub.member_flags[y] {
                    sub.member_flags[y] = true;
                    elems.push(y);
                }
            }
        }
        sub.order = elems.len();
        sub
    }

    pub fn parent(&self) -> &'g Group {
        self.parent
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn index(&self) -> usize {
        self.parent.order() / self.order
    }

    pub fn contains(&self, element: usize) -> bool {
        self.member_flags[element]
    }

    pub fn member_flags(&self) -> &[bool] {
        &self.member_flags
    }

    /// Member element indices in the parent's order.
    pub fn members(&self) -> impl Iterator<Item = usize> + '_ {
        self.member_flags
            .iter()
            .enumerate()
            .filter(|(_, &m)| m)
            .map(|(i, _)| i)
    }

    pub fn is_trivial(&self) -> bool {
        self.order == 1
    }

    pub fn is_whole(&self) -> bool {
        self.order == self.parent.order()
    }

    pub fn is_subset_of(&self, other: &Subgroup<'_>) -> bool {
        self.members().all(|x| other.contains(x))
    }

    pub fn intersection(&self, other: &Subgroup<'_>) -> Subgroup<'g> {
        let member_flags: Vec<bool> = self
            .member_flags
            .iter()
            .zip(&other.member_flags)
            .map(|(&a, &b)| a && b)
            .collect();
        Subgroup {
            parent: self.parent,
            order: member_flags.iter().filter(|&&m| m).count(),
            member_flags,
        }
    }

    /// Normal in the parent: closed under conjugation by the parent's generators.
    pub fn is_normal(&self) -> bool {
        self.is_normalized_by(self.parent.generator_indices())
    }

    pub fn is_normalized_by(&self, conjugators: &[usize]) -> bool {
        self.members().all(|x| {
            conjugators
                .iter()
                .all(|&c| self.contains(self.parent.conjugate(x, c)))
        })
    }

    /// Greedy generating set: scans members in order, keeping each one not
    /// already generated by the earlier picks.
    pub fn small_generating_set(&self) -> Vec<usize> {
        let mut gens = Vec::new();
        let mut current = Subgroup::trivial(self.parent);
        for x in self.members() {
            if current.order == self.order {
                break;
            }
            if !current.contains(x) {
                gens.push(x);
                current = Subgroup::generated(self.parent, &gens);
            }
        }
        gens
    }

    pub fn is_abelian(&self) -> bool {
        let gens = self.small_generating_set();
        gens.iter().all(|&a| {
            gens.iter()
                .all(|&b| self.parent.mul(a, b) == self.parent.mul(b, a))
        })
    }

    pub fn is_cyclic(&self) -> bool {
        self.members()
            .any(|x| self.parent.element_order(x) == self.order as u64)
    }

    /// Exponent of the subgroup.
    pub fn exponent(&self) -> u64 {
        self.members()
            .map(|x| self.parent.element_order(x))
            .fold(1, super::group::lcm)
    }

    /// The subgroup as a standalone permutation group on the parent's points.
    pub fn to_group(&self, name: impl Into<String>) -> Group {
        let gens = self
            .small_generating_set()
            .into_iter()
            .map(|i| self.parent.element(i).clone())
            .collect();
        close_group(self.parent.degree(), gens, name, usize::MAX)
            .expect("subgroup closure cannot exceed its parent")
    }
}

impl PartialEq for Subgroup<'_> {
    fn eq(&self, other: &Self) -> bool {
        std::ptr::eq(self.parent, other.parent) && self.member_flags == other.member_flags
    }
}

impl Eq for Subgroup<'_> {}

impl fmt::Debug for Subgroup<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Subgroup")
            .field("parent", &self.parent.name())
            .field("order", &self.order)
            .finish()
    }
}
