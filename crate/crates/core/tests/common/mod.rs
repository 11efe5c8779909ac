//! Shared fixtures and brute-force oracles for the integration tests.
#![allow(dead_code)]

use std::collections::BTreeMap;

use codegree::chartab::{CharTable, CycloReducer};
use codegree::cli::{load_catalog, Catalog, GroupSpec};
use codegree::permgroup::{Group, DEFAULT_ORDER_CAP};
use codegree::pseudoalg::{AbelianType, PseudoAlgebra};

pub const CATALOGS: [&str; 4] = [
    "named.cat",
    "two_groups_le64.cat",
    "c128.cat",
    "c128_extra.cat",
];

pub fn data_path(file: &str) -> String {
    format!("{}/../../data/{file}", env!("CARGO_MANIFEST_DIR"))
}

pub fn catalog(file: &str) -> Catalog {
    load_catalog(&data_path(file), DEFAULT_ORDER_CAP).expect("shipped catalog loads")
}

/// All partitions of `n`, each weakly decreasing.
pub fn partitions(n: u32) -> Vec<Vec<u32>> {
    fn go(n: u32, max: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if n == 0 {
            out.push(prefix.clone());
            return;
        }
        for k in (1..=n.min(max)).rev() {
            prefix.push(k);
            go(n - k, k, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

fn factor(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        let mut k = 0;
        while n % p == 0 {
            n /= p;
            k += 1;
        }
        if k > 0 {
            out.push((p, k));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// Every abelian type of order exactly `n`.
pub fn abelian_types_of_order(n: u64) -> Vec<AbelianType> {
    let mut types = vec![AbelianType::trivial()];
    for (p, k) in factor(n) {
        let mut next = Vec::new();
        for t in &types {
            for part in partitions(k) {
                let mut u = t.clone();
                u.insert(p, part).unwrap();
                next.push(u);
            }
        }
        types = next;
    }
    types
}

/// The group as a direct product of cycles, one per cyclic factor.
pub fn abelian_spec(t: &AbelianType) -> GroupSpec {
    let factors = t.cyclic_factors();
    if factors.is_empty() {
        GroupSpec::Cyclic(1)
    } else {
        GroupSpec::Abelian(factors)
    }
}

/// Linear characters of `Π C_{mᵢ}` written down from coordinates: with
/// `x = (a₁, …)` and `b = (b₁, …)`, `χ_b(x) = ζ_e^{Σ aᵢ bᵢ e/mᵢ}`. Each row
/// lists the root exponent at every class representative of `table`.
pub fn direct_linear_rows(group: &Group, orders: &[u64], e: u64) -> Vec<Vec<u64>> {
    let reps = group.classes().reps();
    let mut offsets = Vec::new();
    let mut offset = 0;
    for &m in orders {
        offsets.push(offset);
        offset += m as usize;
    }
    let coords: Vec<Vec<u64>> = reps
        .iter()
        .map(|&r| {
            let x = group.element(r);
            orders
                .iter()
                .zip(&offsets)
                .map(|(&m, &o)| (x.apply(o) - o) as u64 % m)
                .collect()
        })
        .collect();
    let mut rows = Vec::new();
    let mut b = vec![0u64; orders.len()];
    loop {
        rows.push(
            coords
                .iter()
                .map(|a| {
                    a.iter()
                        .zip(&b)
                        .zip(orders)
                        .map(|((&ai, &bi), &m)| ai * bi % m * (e / m))
                        .sum::<u64>()
                        % e
                })
                .collect(),
        );
        // odometer over b
        let mut i = 0;
        loop {
            if i == b.len() {
                return rows;
            }
            b[i] += 1;
            if b[i] < orders[i] {
                break;
            }
            b[i] = 0;
            i += 1;
        }
    }
}

/// Kernel of every irreducible, decided element by element from the numeric
/// equality `χ(x) = χ(1)` in `Q(ζ_e)`. Returns kernel orders.
pub fn brute_kernel_orders(table: &CharTable<'_>) -> Vec<u64> {
    let e = table.exponent() as usize;
    let reducer = CycloReducer::new(e);
    let group = table.group();
    let classes = table.classes();
    table
        .irreducibles()
        .iter()
        .map(|chi| {
            (0..group.order())
                .filter(|&x| {
                    let dense: Vec<i64> = chi.values[classes.class_of(x)]
                        .dense(e)
                        .into_iter()
                        .map(i64::from)
                        .collect();
                    reducer.equals_integer(&dense, chi.degree as i64)
                })
                .count() as u64
        })
        .collect()
}

/// `C(G)` from the brute-force kernels.
pub fn brute_pseudo(table: &CharTable<'_>) -> PseudoAlgebra {
    let order = table.group().order() as u64;
    let codegrees = brute_kernel_orders(table)
        .into_iter()
        .zip(table.irreducibles())
        .map(|(k, chi)| order / k / chi.degree);
    PseudoAlgebra::from_codegrees(codegrees).unwrap()
}

/// Number of elements of each order, found by repeated multiplication.
pub fn element_order_counts(group: &Group) -> BTreeMap<u64, usize> {
    let mut counts = BTreeMap::new();
    for x in 0..group.order() {
        let mut y = x;
        let mut k = 1;
        while y != 0 {
            y = group.mul(y, x);
            k += 1;
        }
        *counts.entry(k).or_insert(0) += 1;
    }
    counts
}
