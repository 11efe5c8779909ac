//! Dixon–Burnside: common eigenvectors of the class matrices over `F_q`.

use super::cyclo::RootSum;
use super::field::{self, DixonContext};
use super::linalg::{self, Matrix};
use crate::error::{Error, Result};
use crate::permgroup::{ConjClasses, Group};

/// Structure constants of the class algebra, `C_i C_j = Σ_k a_{ijk} C_k`.
///
/// Stored per `j` as sparse rows: `rows[j][i]` lists `(k, a_{ijk})` with
/// `a_{ijk} ≠ 0`, ascending in `k`.
pub struct ClassAlgebra {
    rows: Vec<Vec<Vec<(u32, u32)>>>,
}

impl ClassAlgebra {
    pub fn new(group: &Group, classes: &ConjClasses) -> ClassAlgebra {
        let k = classes.len();
        let inverses: Vec<usize> = (0..group.order()).map(|x| group.inv(x)).collect();
        let mut rows = vec![vec![Vec::new(); k]; k];
        let mut scratch = vec![0u32; k * k];
        let mut touched = Vec::new();
        for (target, &z) in classes.reps().iter().enumerate() {
            for x in 0..group.order() {
                let i = classes.class_of(x);
                let j = classes.class_of(group.mul(inverses[x], z));
                let slot = j * k + i;
                if scratch[slot] == 0 {
                    touched.push(slot);
                }
                scratch[slot] += 1;
            }
            for slot in touched.drain(..) {
                let (j, i) = (slot / k, slot % k);
                rows[j][i].push((target as u32, scratch[slot]));
                scratch[slot] = 0;
            }
        }
        ClassAlgebra { rows }
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// `a_{ijk}`.
    pub fn constant(&self, i: usize, j: usize, k: usize) -> u32 {
        self.rows[j][i]
            .binary_search_by_key(&(k as u32), |&(c, _)| c)
            .map_or(0, |p| self.rows[j][i][p].1)
    }

    /// `(M_j v)_i = Σ_k a_{ijk} v_k` over `F_q`.
    fn apply_row(&self, j: usize, i: usize, v: &[u64], q: u64) -> u64 {
        self.rows[j][i].iter().fold(0, |acc, &(k, a)| {
            field::add(acc, field::mul(a as u64, v[k as usize], q), q)
        })
    }
}

/// `a_{ijk} = #{(x, y) ∈ C_i × C_j : xy = z}` for `z` the representative of
/// class `k`, counted directly.
pub fn class_constants(group: &Group, classes: &ConjClasses, i: usize, j: usize, k: usize) -> u64 {
    let z = classes.reps()[k];
    classes
        .members(i)
        .filter(|&x| classes.class_of(group.mul(group.inv(x), z)) == j)
        .count() as u64
}

/// A common invariant subspace, kept in reduced row echelon form.
struct Space {
    basis: Matrix,
    pivots: Vec<usize>,
}

impl Space {
    fn new(mut basis: Matrix, q: u64) -> Space {
        let pivots = linalg::rref(&mut basis, q);
        Space { basis, pivots }
    }

    fn dim(&self) -> usize {
        self.basis.len()
    }
}

/// Splits `F_q^k` into the common eigenspaces of the class matrices, taking
/// the matrices in class order. Returns one normalised eigenvector (first
/// entry 1) per irreducible character: the central character values `ω_χ(C_i)`.
pub(crate) fn central_characters(algebra: &ClassAlgebra, q: u64) -> Result<Vec<Vec<u64>>> {
    let k = algebra.len();
    let identity: Matrix = (0..k)
        .map(|i| (0..k).map(|j| u64::from(i == j)).collect())
        .collect();
    let mut spaces = vec![Space::new(identity, q)];
    for j in 1..k {
        if spaces.iter().all(|s| s.dim() == 1) {
            break;
        }
        let mut next = Vec::with_capacity(spaces.len());
        for space in spaces {
            if space.dim() == 1 {
                next.push(space);
                continue;
            }
            next.extend(split(algebra, j, space, q)?);
        }
        spaces = next;
    }
    if spaces.iter().any(|s| s.dim() > 1) {
        return Err(Error::CharTable("eigenspace splitting stalled".into()));
    }
    spaces
        .into_iter()
        .map(|s| {
            let v = &s.basis[0];
            let scale = field::inv(v[0], q).ok_or_else(|| {
                Error::CharTable("eigenvector vanishes on the identity class".into())
            })?;
            Ok(v.iter().map(|&x| field::mul(x, scale, q)).collect())
        })
        .collect()
}

/// Splits one space into the eigenspaces of `M_j` restricted to it.
fn split(algebra: &ClassAlgebra, j: usize, space: Space, q: u64) -> Result<Vec<Space>> {
    let d = space.dim();
    // Column c holds the coordinates of M_j b_c, read off at the pivots.
    let mut restricted = vec![vec![0u64; d]; d];
    for (c, b) in space.basis.iter().enumerate() {
        for (r, &p) in space.pivots.iter().enumerate() {
            restricted[r][c] = algebra.apply_row(j, p, b, q);
        }
    }
    let scalar = restricted[0][0];
    let is_scalar =
        (0..d).all(|r| (0..d).all(|c| restricted[r][c] == if r == c { scalar } else { 0 }));
    if is_scalar {
        return Ok(vec![space]);
    }
    let poly = linalg::charpoly(&restricted, q);
    let mut pieces = Vec::new();
    let mut total = 0;
    for lambda in (0..q).filter(|&x| linalg::eval(&poly, x, q) == 0) {
        let shifted: Matrix = (0..d)
            .map(|r| {
                (0..d)
                    .map(|c| {
                        let diag = if r == c { lambda } else { 0 };
                        field::sub(restricted[r][c], diag, q)
                    })
                    .collect()
            })
            .collect();
        let kernel = linalg::nullspace(&shifted, q);
        total += kernel.len();
        let vectors: Matrix = kernel
            .iter()
            .map(|coords| {
                let mut v = vec![0u64; space.basis[0].len()];
                for (coef, b) in coords.iter().zip(&space.basis) {
                    if *coef == 0 {
                        continue;
                    }
                    for (x, &y) in v.iter_mut().zip(b) {
                        *x = field::add(*x, field::mul(*coef, y, q), q);
                    }
                }
                v
            })
            .collect();
        pieces.push(Space::new(vectors, q));
    }
    if total != d {
        return Err(Error::CharTable(format!(
            "class matrix {j} is not diagonalisable on a {d}-dimensional common eigenspace"
        )));
    }
    Ok(pieces)
}

/// Recovers the degree from `Σ_i ω_i ω_{i'} / |C_i| = |G| / d²`.
pub(crate) fn degree_from_central(
    omega: &[u64],
    classes: &ConjClasses,
    order: u64,
    q: u64,
) -> Result<u64> {
    let mut s = 0;
    for (i, &w) in omega.iter().enumerate() {
        let size_inv = field::inv(classes.sizes()[i] as u64, q).expect("q > |G|");
        let term = field::mul(
            field::mul(w, omega[classes.inverse_class(i)], q),
            size_inv,
            q,
        );
        s = field::add(s, term, q);
    }
    let s_inv =
        field::inv(s, q).ok_or_else(|| Error::CharTable("degree sum vanishes modulo q".into()))?;
    let square = field::mul(order % q, s_inv, q);
    let d = (square as f64).sqrt() as u64;
    let d = (d.saturating_sub(1)..=d + 1)
        .find(|&x| x * x == square)
        .ok_or_else(|| Error::CharTable(format!("recovered d² = {square} is not a square")))?;
    if d == 0 || d * d > order || order % d != 0 {
        return Err(Error::CharTable(format!(
            "recovered degree {d} is not admissible"
        )));
    }
    Ok(d)
}

/// Character values as root multiplicities,
/// `m_k = e⁻¹ Σ_j χ(g^j) θ^{-jk}`, summed over the cyclic subgroup `⟨g⟩`.
pub(crate) fn multiplicities(
    values: &[u64],
    degree: u64,
    classes: &ConjClasses,
    element_orders: &[u64],
    ctx: &DixonContext,
    dlog: &[u32],
) -> Result<Vec<RootSum>> {
    let q = ctx.prime;
    let e = ctx.exponent;
    if degree == 1 {
        return (0..classes.len())
            .map(|c| {
                let k = dlog[values[c] as usize];
                if k == u32::MAX {
                    return Err(Error::CharTable(
                        "linear character value is not a root of unity".into(),
                    ));
                }
                Ok(RootSum::monomial(k, 1))
            })
            .collect();
    }
    // Eigenvalues at g^j are the j-th powers of those at g, so one transform
    // per cyclic subgroup suffices; larger element orders go first.
    let mut by_order: Vec<usize> = (0..classes.len()).collect();
    by_order.sort_by_key(|&c| std::cmp::Reverse(element_orders[c]));
    let mut out: Vec<Option<RootSum>> = vec![None; classes.len()];
    for c in by_order {
        if out[c].is_some() {
            continue;
        }
        let o = element_orders[c];
        let step = e / o;
        let o_inv = field::inv(o, q).expect("q > e");
        let powers: Vec<u64> = (0..o)
            .map(|j| values[classes.power_map(c, j as i64)])
            .collect();
        let mut dense = vec![0u32; e as usize];
        let mut found = 0u64;
        for l in 0..o {
            if found == degree {
                break;
            }
            let k = l * step;
            let mut acc = 0;
            for (j, &v) in powers.iter().enumerate() {
                let idx = (j as u64 * k) % e;
                acc = field::add(
                    acc,
                    field::mul(v, ctx.theta_powers[((e - idx) % e) as usize], q),
                    q,
                );
            }
            let m = field::mul(acc, o_inv, q);
            if m > degree {
                return Err(Error::CharTable(format!(
                    "multiplicity {m} exceeds degree {degree}"
                )));
            }
            dense[k as usize] = m as u32;
            found += m;
        }
        if found != degree {
            return Err(Error::CharTable(
                "multiplicities do not sum to the degree".into(),
            ));
        }
        let sum = RootSum::from_dense(&dense);
        for j in 2..o {
            let target = classes.power_map(c, j as i64);
            if out[target].is_none() {
                let mut image = vec![0u32; e as usize];
                for &(k, m) in sum.terms() {
                    image[(k as u64 * j % e) as usize] += m;
                }
                out[target] = Some(RootSum::from_dense(&image));
            }
        }
        out[c] = Some(sum);
    }
    Ok(out
        .into_iter()
        .map(|s| s.expect("every class visited"))
        .collect())
}
