//! Exact irreducible character tables by the Dixon–Burnside method.
//!
//! The class matrices of the group are diagonalised simultaneously over a
//! prime field `F_q` containing the `e`-th roots of unity (`e` the group
//! exponent). Each common eigenvector gives the central character of one
//! irreducible; degrees and values are then lifted back to exact sums of
//! complex `e`-th roots of unity. Nothing is ever evaluated in floating point.

mod cyclo;
mod dixon;
mod field;
mod linalg;

use std::cmp::Ordering;

pub use cyclo::{cyclotomic_polynomial, CycloReducer, RootSum};
pub use dixon::{class_constants, ClassAlgebra};
pub use field::{choose_dixon_prime, DixonContext};

use crate::error::{Error, Result};
use crate::permgroup::{ConjClasses, Group, Subgroup};

/// An irreducible character: its degree and, per class, the multiset of
/// eigenvalues of a representing matrix as root-of-unity multiplicities.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Character {
    pub degree: u64,
    pub values: Vec<RootSum>,
}

impl Character {
    pub fn is_linear(&self) -> bool {
        self.degree == 1
    }

    /// Whether `χ(g) = χ(1)` on class `c`, i.e. every eigenvalue is 1.
    pub fn is_trivial_on(&self, c: usize) -> bool {
        self.values[c].multiplicity(0) as u64 == self.degree
    }
}

/// The full table of irreducible characters of a group.
///
/// Characters are sorted by degree; characters of equal degree are in
/// descending lexicographic order of their value vectors, which puts the
/// principal character first.
#[derive(Debug)]
pub struct CharTable<'g> {
    group: &'g Group,
    context: DixonContext,
    irreducibles: Vec<Character>,
}

impl<'g> CharTable<'g> {
    pub fn group(&self) -> &'g Group {
        self.group
    }

    pub fn classes(&self) -> &'g ConjClasses {
        self.group.classes()
    }

    pub fn context(&self) -> &DixonContext {
        &self.context
    }

    pub fn exponent(&self) -> u64 {
        self.context.exponent
    }

    pub fn irreducibles(&self) -> &[Character] {
        &self.irreducibles
    }

    pub fn len(&self) -> usize {
        self.irreducibles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.irreducibles.is_empty()
    }

    /// Number of irreducibles of each degree.
    pub fn degree_count(&self, degree: u64) -> usize {
        self.irreducibles
            .iter()
            .filter(|c| c.degree == degree)
            .count()
    }

    /// `ker χ`: the union of the classes on which `χ` takes the value `χ(1)`.
    pub fn kernel_of(&self, chi: &Character) -> Subgroup<'g> {
        let classes = self.classes();
        let flags = (0..self.group.order())
            .map(|x| chi.is_trivial_on(classes.class_of(x)))
            .collect();
        Subgroup::from_members(self.group, flags).expect("kernels are subgroups")
    }

    /// Order of `ker χ`, without materialising the subgroup.
    pub fn kernel_order(&self, chi: &Character) -> u64 {
        let sizes = self.classes().sizes();
        (0..sizes.len())
            .filter(|&c| chi.is_trivial_on(c))
            .map(|c| sizes[c] as u64)
            .sum()
    }

    /// `cd(G)`, ascending.
    pub fn degree_set(&self) -> Vec<u64> {
        let mut d: Vec<u64> = self.irreducibles.iter().map(|c| c.degree).collect();
        d.sort_unstable();
        d.dedup();
        d
    }

    /// `Σ_i |C_i| χ(g_i) conj(ψ(g_i)) = |G| δ_{χψ}` for all pairs, exactly.
    pub fn check_row_orthogonality(&self) -> Result<()> {
        let e = self.exponent() as usize;
        let reducer = CycloReducer::new(e);
        let sizes = self.classes().sizes();
        let order = self.group.order() as i64;
        let mut acc = vec![0i64; e];
        for (a, chi) in self.irreducibles.iter().enumerate() {
            for (b, psi) in self.irreducibles.iter().enumerate().skip(a) {
                acc.iter_mut().for_each(|x| *x = 0);
                for (c, &size) in sizes.iter().enumerate() {
                    chi.values[c].accumulate_product_conj(&psi.values[c], size as i64, &mut acc);
                }
                let expected = if a == b { order } else { 0 };
                if !reducer.equals_integer(&acc, expected) {
                    return Err(Error::CharTable(format!(
                        "row orthogonality fails for characters {a} and {b}"
                    )));
                }
            }
        }
        Ok(())
    }

    /// `Σ_χ χ(g_i) conj(χ(g_j)) = |C_G(g_i)| δ_{ij}` for all class pairs, exactly.
    pub fn check_column_orthogonality(&self) -> Result<()> {
        let e = self.exponent() as usize;
        let reducer = CycloReducer::new(e);
        let sizes = self.classes().sizes();
        let order = self.group.order() as i64;
        let mut acc = vec![0i64; e];
        for i in 0..sizes.len() {
            for j in i..sizes.len() {
                acc.iter_mut().for_each(|x| *x = 0);
                for chi in &self.irreducibles {
                    chi.values[i].accumulate_product_conj(&chi.values[j], 1, &mut acc);
                }
                let expected = if i == j { order / sizes[i] as i64 } else { 0 };
                if !reducer.equals_integer(&acc, expected) {
                    return Err(Error::CharTable(format!(
                        "column orthogonality fails for classes {i} and {j}"
                    )));
                }
            }
        }
        Ok(())
    }
}

/// Computes the character table of `group`, checking both orthogonality
/// relations exactly before returning.
pub fn char_table(group: &Group) -> Result<CharTable<'_>> {
    let classes = group.classes();
    let order = group.order() as u64;
    let context = choose_dixon_prime(order, classes.exponent());
    let q = context.prime;

    let irreducibles = if order == 1 {
        vec![Character {
            degree: 1,
            values: vec![RootSum::monomial(0, 1)],
        }]
    } else {
        let algebra = ClassAlgebra::new(group, classes);
        let centrals = dixon::central_characters(&algebra, q)?;
        if centrals.len() != classes.len() {
            return Err(Error::CharTable(
                "wrong number of central characters".into(),
            ));
        }
        let element_orders: Vec<u64> = classes
            .reps()
            .iter()
            .map(|&r| group.element_order(r))
            .collect();
        let mut dlog = vec![u32::MAX; q as usize];
        for (k, &t) in context.theta_powers.iter().enumerate() {
            dlog[t as usize] = k as u32;
        }
        let mut chars = centrals
            .iter()
            .map(|omega| {
                let degree = dixon::degree_from_central(omega, classes, order, q)?;
                let values: Vec<u64> = omega
                    .iter()
                    .enumerate()
                    .map(|(c, &w)| {
                        let size_inv = field::inv(classes.sizes()[c] as u64, q).expect("q > |G|");
                        field::mul(field::mul(w, degree, q), size_inv, q)
                    })
                    .collect();
                let values = dixon::multiplicities(
                    &values,
                    degree,
                    classes,
                    &element_orders,
                    &context,
                    &dlog,
                )?;
                Ok(Character { degree, values })
            })
            .collect::<Result<Vec<_>>>()?;
        chars.sort_by(compare_characters);
        chars
    };

    let table = CharTable {
        group,
        context,
        irreducibles,
    };
    let degree_squares: u64 = table.irreducibles.iter().map(|c| c.degree * c.degree).sum();
    if degree_squares != order {
        return Err(Error::CharTable(format!(
            "sum of squared degrees {degree_squares} differs from |G| = {order}"
        )));
    }
    table.check_row_orthogonality()?;
    table.check_column_orthogonality()?;
    Ok(table)
}

fn compare_characters(a: &Character, b: &Character) -> Ordering {
    a.degree.cmp(&b.degree).then_with(|| {
        a.values
            .iter()
            .zip(&b.values)
            .map(|(x, y)| y.cmp_dense(x))
            .find(|o| o.is_ne())
            .unwrap_or(Ordering::Equal)
    })
}

/// Free-function form of [`CharTable::kernel_of`].
pub fn kernel_of<'g>(table: &CharTable<'g>, chi: &Character) -> Subgroup<'g> {
    table.kernel_of(chi)
}

/// Free-function form of [`CharTable::degree_set`].
pub fn degree_set(table: &CharTable<'_>) -> Vec<u64> {
    table.degree_set()
}
