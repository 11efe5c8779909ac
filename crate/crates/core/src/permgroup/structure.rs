//! Structural subgroups, quotients and predicates.

use std::collections::HashSet;

use super::group::{close_group, gcd, prime_power_decomposition, smallest_prime_factor, Group};
use super::perm::Perm;
use super::subgroup::Subgroup;
use crate::error::{Error, Result};

/// `Z(G)`: the union of the singleton classes.
pub fn center(g: &Group) -> Subgroup<'_> {
    let classes = g.classes();
    let flags = (0..g.order())
        .map(|x| classes.sizes()[classes.class_of(x)] == 1)
        .collect();
    Subgroup::from_members(g, flags).expect("the center is a subgroup")
}

/// `G′`: normal closure of the commutators of the generators.
pub fn derived_subgroup(g: &Group) -> Subgroup<'_> {
    derived_of(&Subgroup::whole(g))
}

/// Derived subgroup of `h`, as a subgroup of `h`'s parent.
pub fn derived_of<'g>(h: &Subgroup<'g>) -> Subgroup<'g> {
    let g = h.parent();
    let gens = if h.is_whole() {
        g.generator_indices().to_vec()
    } else {
        h.small_generating_set()
    };
    let mut seeds = Vec::new();
    for (i, &a) in gens.iter().enumerate() {
        for &b in &gens[i + 1..] {
            seeds.push(g.commutator(a, b));
        }
    }
    Subgroup::normal_closure(g, &seeds, &gens)
}

/// `Φ(G)`.
///
/// For groups of prime-power order this is `G′·G^p`. Other groups fall back
/// to intersecting all maximal subgroups, found by exhaustive enumeration.
pub fn frattini_subgroup(g: &Group) -> Subgroup<'_> {
    let whole = Subgroup::whole(g);
    match g.prime_power() {
        Some((p, _)) => frattini_of_p_group(&whole, p),
        None if g.order() == 1 => whole,
        None => maximal_subgroups_by_enumeration(g)
            .iter()
            .fold(whole, |acc, m| acc.intersection(m)),
    }
}

/// `Φ(H) = H′·H^p` for a subgroup `H` of order a power of `p`.
pub fn frattini_of_p_group<'g>(h: &Subgroup<'g>, p: u64) -> Subgroup<'g> {
    let g = h.parent();
    let derived = derived_of(h);
    let mut seeds = derived.small_generating_set();
    let mut seen = HashSet::new();
    for x in h.members() {
        let y = g.pow(x, p);
        if seen.insert(y) {
            seeds.push(y);
        }
    }
    Subgroup::generated(g, &seeds)
}

/// The factor group `G/N`, realised as `G` acting on the cosets of `N` by
/// left multiplication.
pub fn quotient_group(g: &Group, n: &Subgroup<'_>) -> Result<Group> {
    if !n.is_normal() {
        return Err(Error::NotNormal);
    }
    let members: Vec<usize> = n.members().collect();
    let mut coset_of = vec![usize::MAX; g.order()];
    let mut cosets = 0;
    for x in 0..g.order() {
        if coset_of[x] != usize::MAX {
            continue;
        }
        for &m in &members {
            coset_of[g.mul(x, m)] = cosets;
        }
        cosets += 1;
    }
    let coset_reps: Vec<usize> = {
        let mut reps = vec![usize::MAX; cosets];
        for x in (0..g.order()).rev() {
            reps[coset_of[x]] = x;
        }
        reps
    };
    let gens = g
        .generator_indices()
        .iter()
        .map(|&s| {
            let images = coset_reps.iter().map(|&r| coset_of[g.mul(s, r)]).collect();
            Perm::new(images).expect("left multiplication permutes cosets")
        })
        .collect();
    close_group(cosets, gens, format!("{}/N", g.name()), usize::MAX)
}

/// An index-`p` subgroup of a normal `p`-subgroup, flagged by normality in `G`.
#[derive(Clone, Debug)]
pub struct MaximalSubgroup<'g> {
    pub subgroup: Subgroup<'g>,
    pub normal_in_group: bool,
}

/// All maximal subgroups of a normal subgroup `N` of prime-power order:
/// preimages of the hyperplanes of the elementary abelian `N/Φ(N)`.
pub fn maximal_subgroups_of_normal<'g>(
    g: &'g Group,
    n: &Subgroup<'g>,
) -> Result<Vec<MaximalSubgroup<'g>>> {
    if n.is_trivial() {
        return Ok(Vec::new());
    }
    let (p, _) =
        prime_power_decomposition(n.order() as u64).ok_or(Error::NotPrimePower(n.order()))?;
    if !n.is_normal() {
        return Err(Error::NotNormal);
    }
    let phi = frattini_of_p_group(n, p);

    // Lift a basis of N/Φ(N).
    let mut basis = Vec::new();
    let mut span = phi.clone();
    let mut seeds = phi.small_generating_set();
    for x in n.members() {
        if span.order() == n.order() {
            break;
        }
        if !span.contains(x) {
            basis.push(x);
            seeds.push(x);
            span = Subgroup::generated(g, &seeds);
        }
    }
    let rank = basis.len();
    let phi_gens = phi.small_generating_set();
    let p_us = p as usize;

    let mut result = Vec::new();
    for functional in normalized_functionals(rank, p_us) {
        let lead = functional.iter().position(|&c| c != 0).expect("nonzero");
        let mut seeds = phi_gens.clone();
        for i in (0..rank).filter(|&i| i != lead) {
            // kernel vector e_i - f_i e_lead
            let shift = ((p_us - functional[i]) % p_us) as u64;
            seeds.push(g.mul(basis[i], g.pow(basis[lead], shift)));
        }
        let subgroup = Subgroup::generated(g, &seeds);
        debug_assert_eq!(subgroup.order() * p_us, n.order());
        let normal_in_group = subgroup.is_normal();
        result.push(MaximalSubgroup {
            subgroup,
            normal_in_group,
        });
    }
    Ok(result)
}

/// Nonzero vectors of `F_p^rank` whose first nonzero coordinate is 1, in
/// lexicographic order.
fn normalized_functionals(rank: usize, p: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for lead in 0..rank {
        let free = rank - lead - 1;
        let count = p.pow(free as u32);
        for mut code in 0..count {
            let mut v = vec![0; rank];
            v[lead] = 1;
            for slot in (lead + 1..rank).rev() {
                v[slot] = code % p;
                code /= p;
            }
            out.push(v);
        }
    }
    out
}

pub fn is_cyclic(s: &Subgroup<'_>) -> bool {
    s.is_cyclic()
}

pub fn exponent(g: &Group) -> u64 {
    g.exponent()
}

/// Whether some cyclic normal subgroup `N` has cyclic quotient `G/N`,
/// searched over every cyclic subgroup.
pub fn is_metacyclic(g: &Group) -> bool {
    let order = g.order() as u64;
    if order == 1 {
        return true;
    }
    let mut covered = vec![false; g.order()];
    for x in 0..g.order() {
        if covered[x] {
            continue;
        }
        let ord = g.element_order(x);
        if ord == order {
            return true;
        }
        for k in 1..ord {
            if gcd(k, ord) == 1 {
                covered[g.pow(x, k)] = true;
            }
        }
        let n = Subgroup::generated(g, &[x]);
        if !n.is_normal() {
            continue;
        }
        let index = order / ord;
        let primes = prime_factors(index);
        let quotient_cyclic = (0..g.order()).any(|y| {
            g.element_order(y) % index == 0
                && primes.iter().all(|&q| !n.contains(g.pow(y, index / q)))
        });
        if quotient_cyclic {
            return true;
        }
    }
    false
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    while n > 1 {
        let p = smallest_prime_factor(n);
        out.push(p);
        while n % p == 0 {
            n /= p;
        }
    }
    out
}

/// Every maximal subgroup of `G`, by growing subgroups from cyclic ones.
///
/// Exhaustive; intended for the small non-prime-power groups that reach
/// the Frattini fallback.
pub fn maximal_subgroups_by_enumeration(g: &Group) -> Vec<Subgroup<'_>> {
    let whole = g.order();
    let mut cyclic_reps = Vec::new();
    let mut seen: HashSet<Vec<bool>> = HashSet::new();
    for x in 1..g.order() {
        let c = Subgroup::generated(g, &[x]);
        if seen.insert(c.member_flags().to_vec()) {
            cyclic_reps.push(x);
        }
    }
    let mut all: Vec<Subgroup<'_>> = vec![Subgroup::trivial(g)];
    let mut known: HashSet<Vec<bool>> = HashSet::from([all[0].member_flags().to_vec()]);
    let mut frontier = all.clone();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for h in &frontier {
            let gens = h.small_generating_set();
            for &x in &cyclic_reps {
                if h.contains(x) {
                    continue;
                }
                let mut seeds = gens.clone();
                seeds.push(x);
                let k = Subgroup::generated(g, &seeds);
                if k.order() == whole {
                    continue;
                }
                if known.insert(k.member_flags().to_vec()) {
                    next.push(k);
                }
            }
        }
        all.extend(next.iter().cloned());
        frontier = next;
    }
    let proper: Vec<_> = all.into_iter().filter(|h| h.order() < whole).collect();
    proper
        .iter()
        .filter(|h| {
            !proper
                .iter()
                .any(|k| k.order() > h.order() && h.is_subset_of(k))
        })
        .cloned()
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::permgroup::DEFAULT_ORDER_CAP;

    fn make(degree: usize, gens: &[Vec<usize>]) -> Group {
        let gens = gens.iter().map(|g| Perm::new(g.clone()).unwrap()).collect();
        close_group(degree, gens, "g", DEFAULT_ORDER_CAP).unwrap()
    }

    fn dihedral8() -> Group {
        make(4, &[vec![1, 2, 3, 0], vec![0, 3, 2, 1]])
    }

    fn cyclic(n: usize) -> Group {
        make(n, &[(1..n).chain([0]).collect()])
    }

    fn elementary8() -> Group {
        make(
            6,
            &[
                vec![1, 0, 2, 3, 4, 5],
                vec![0, 1, 3, 2, 4, 5],
                vec![0, 1, 2, 3, 5, 4],
            ],
        )
    }

    /// Unitriangular 3x3 matrices over F_3 acting on the 27 column vectors.
    fn ut3_3() -> Group {
        let idx = |x: usize, y: usize, z: usize| x + 3 * y + 9 * z;
        let mut a = vec![0; 27];
        let mut c = vec![0; 27];
        for x in 0..3 {
            for y in 0..3 {
                for z in 0..3 {
                    a[idx(x, y, z)] = idx((x + y) % 3, y, z);
                    c[idx(x, y, z)] = idx(x, (y + z) % 3, z);
                }
            }
        }
        make(27, &[a, c])
    }

    /// Membership by brute force: `Z = {z : zx = xz for all x}`.
    fn brute_center_order(g: &Group) -> usize {
        (0..g.order())
            .filter(|&z| (0..g.order()).all(|x| g.mul(z, x) == g.mul(x, z)))
            .count()
    }

    /// `G′` by closing the set of all commutators.
    fn brute_derived_order(g: &Group) -> usize {
        let mut comms = Vec::new();
        for x in 0..g.order() {
            for y in 0..g.order() {
                comms.push(g.commutator(x, y));
            }
        }
        Subgroup::generated(g, &comms).order()
    }

    #[test]
    fn abelian_structure() {
        let g = cyclic(6);
        assert!(derived_subgroup(&g).is_trivial());
        assert!(center(&g).is_whole());
    }

    #[test]
    fn dihedral_structure() {
        let g = dihedral8();
        assert_eq!(center(&g).order(), brute_center_order(&g));
        assert_eq!(derived_subgroup(&g).order(), brute_derived_order(&g));
        assert_eq!(center(&g).order(), 2);
        assert_eq!(derived_subgroup(&g).order(), 2);
        assert_eq!(frattini_subgroup(&g).order(), 2);
    }

    #[test]
    fn ut3_structure() {
        let g = ut3_3();
        assert_eq!(g.order(), 27);
        assert_eq!(brute_center_order(&g), 3);
        assert_eq!(center(&g).order(), 3);
        assert_eq!(derived_subgroup(&g).order(), 3);
        assert_eq!(frattini_subgroup(&g).order(), 3);
        assert_eq!(g.exponent(), 3);
    }

    #[test]
    fn frattini_fallback_matches_enumeration() {
        // S3: maximal subgroups are A3 and three of order 2; Φ = 1.
        let s3 = make(3, &[vec![1, 2, 0], vec![1, 0, 2]]);
        assert_eq!(maximal_subgroups_by_enumeration(&s3).len(), 4);
        assert!(frattini_subgroup(&s3).is_trivial());
        // C6 is not a p-group; Φ(C6) = 1.
        assert!(frattini_subgroup(&cyclic(6)).is_trivial());
        // C12: maximal subgroups C6 and C4, Φ = C2.
        assert_eq!(frattini_subgroup(&cyclic(12)).order(), 2);
    }

    #[test]
    fn quotients() {
        let g = dihedral8();
        let trivial = quotient_group(&g, &Subgroup::whole(&g)).unwrap();
        assert_eq!(trivial.order(), 1);
        let q = quotient_group(&g, &center(&g)).unwrap();
        assert_eq!(q.order(), 4);
        assert_eq!(q.exponent(), 2);

        let c8 = cyclic(8);
        let two = Subgroup::generated(&c8, &[c8.pow(1, 4)]);
        assert_eq!(two.order(), 2);
        let q = quotient_group(&c8, &two).unwrap();
        assert_eq!(q.order(), 4);
        assert!(Subgroup::whole(&q).is_cyclic());
    }

    #[test]
    fn quotient_requires_normal() {
        let g = dihedral8();
        let s = Subgroup::generated(&g, &[g.generator_indices()[1]]);
        assert_eq!(quotient_group(&g, &s).unwrap_err(), Error::NotNormal);
    }

    #[test]
    fn maximal_subgroups_of_cyclic_normal() {
        let g = dihedral8();
        let rot = Subgroup::generated(&g, &[g.generator_indices()[0]]);
        let max = maximal_subgroups_of_normal(&g, &rot).unwrap();
        assert_eq!(max.len(), 1);
        assert!(max[0].normal_in_group);
        assert_eq!(max[0].subgroup.order(), 2);
    }

    #[test]
    fn maximal_subgroups_of_klein_four() {
        let g = dihedral8();
        // {1, r^2, s, r^2 s} is a Klein four-group normal in D8.
        let r = g.generator_indices()[0];
        let s = g.generator_indices()[1];
        let v = Subgroup::generated(&g, &[g.pow(r, 2), s]);
        assert_eq!(v.order(), 4);
        assert!(v.is_normal());
        let max = maximal_subgroups_of_normal(&g, &v).unwrap();
        assert_eq!(max.len(), 3);
        // Only the centre {1, r^2} is normal in D8.
        assert_eq!(max.iter().filter(|m| m.normal_in_group).count(), 1);
    }

    #[test]
    fn maximal_subgroups_of_trivial() {
        let g = dihedral8();
        assert!(maximal_subgroups_of_normal(&g, &Subgroup::trivial(&g))
            .unwrap()
            .is_empty());
    }

    #[test]
    fn maximal_subgroups_require_prime_power() {
        let g = cyclic(6);
        assert_eq!(
            maximal_subgroups_of_normal(&g, &Subgroup::whole(&g)).unwrap_err(),
            Error::NotPrimePower(6)
        );
    }

    #[test]
    fn metacyclicity() {
        assert!(is_metacyclic(&dihedral8()));
        assert!(!is_metacyclic(&elementary8()));
        assert!(is_metacyclic(&cyclic(9)));
        assert!(!is_metacyclic(&ut3_3()));
    }

    #[test]
    fn functional_count() {
        assert_eq!(normalized_functionals(2, 2).len(), 3);
        assert_eq!(normalized_functionals(3, 3).len(), 13);
    }
}
