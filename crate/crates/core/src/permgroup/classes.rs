use super::group::Group;

/// Conjugacy classes of a [`Group`], with inverse and power maps.
///
/// Classes are numbered by their first element in the group's element
/// order, so class 0 is always the identity class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjClasses {
    reps: Vec<usize>,
    sizes: Vec<usize>,
    class_of: Vec<usize>,
    inverse_class: Vec<usize>,
    exponent: u64,
    /// `power_table[i][j]` is the class of `reps[i]^j` for `0 ≤ j < exponent`.
    power_table: Vec<Vec<u32>>,
}

impl ConjClasses {
    pub(crate) fn compute(group: &Group) -> ConjClasses {
        let n = group.order();
        let gens = group.generator_indices();
        let mut class_of = vec![usize::MAX; n];
        let mut reps = Vec::new();
        let mut sizes = Vec::new();
        for start in 0..n {
            if class_of[start] != usize::MAX {
                continue;
            }
            let c = reps.len();
            class_of[start] = c;
            let mut orbit = vec![start];
            let mut head = 0;
            while head < orbit.len() {
                let x = orbit[head];
                head += 1;
                for &s in gens {
                    let y = group.conjugate(x, s);
                    if class_of[y] == usize::MAX {
                        class_of[y] = c;
                        orbit.push(y);
                    }
                }
            }
            reps.push(start);
            sizes.push(orbit.len());
        }

        let inverse_class = reps.iter().map(|&r| class_of[group.inv(r)]).collect();

        let exponent = group.exponent();
        let power_table = reps
            .iter()
            .map(|&r| {
                let mut row = Vec::with_capacity(exponent as usize);
                let mut x = 0usize;
                for _ in 0..exponent {
                    row.push(class_of[x] as u32);
                    x = group.mul(x, r);
                }
                row
            })
            .collect();

        ConjClasses {
            reps,
            sizes,
            class_of,
            inverse_class,
            exponent,
            power_table,
        }
    }

    /// Number of classes, `k(G)`.
    pub fn len(&self) -> usize {
        self.reps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.reps.is_empty()
    }

    pub fn reps(&self) -> &[usize] {
        &self.reps
    }

    pub fn sizes(&self) -> &[usize] {
        &self.sizes
    }

    pub fn class_of(&self, element: usize) -> usize {
        self.class_of[element]
    }

    pub fn inverse_class(&self, class: usize) -> usize {
        self.inverse_class[class]
    }

    /// Exponent of the group the classes were computed for.
    pub fn exponent(&self) -> u64 {
        self.exponent
    }

    /// Class containing `g^j` for `g` in class `class`.
    pub fn power_map(&self, class: usize, j: i64) -> usize {
        let j = j.rem_euclid(self.exponent as i64) as usize;
        self.power_table[class][j] as usize
    }

    /// Members of class `class`, in element order.
    pub fn members(&self, class: usize) -> impl Iterator<Item = usize> + '_ {
        self.class_of
            .iter()
            .enumerate()
            .filter(move |&(_, &c)| c == class)
            .map(|(i, _)| i)
    }
}
