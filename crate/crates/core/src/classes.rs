//! Conjugacy classes.

use serde::Serialize;

use crate::group::FiniteGroup;

/// The partition of a group into conjugacy classes.
///
/// Classes are numbered in order of their smallest element index, so class 0
/// is always `{1}` and `representatives[c]` is the smallest member of class `c`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassPartition {
    class_of: Vec<usize>,
    representatives: Vec<usize>,
    sizes: Vec<usize>,
}

impl ClassPartition {
    pub fn new(group: &FiniteGroup) -> Self {
        let (class_of, representatives, sizes) = orbit_sweep(group.order(), |x, push| {
            for &s in group.generator_indices() {
                push(group.conjugate(s, x));
            }
        });
        ClassPartition {
            class_of,
            representatives,
            sizes,
        }
    }

    /// `k(G)`.
    pub fn count(&self) -> usize {
        self.sizes.len()
    }

    #[inline]
    pub fn class_of(&self, g: usize) -> usize {
        self.class_of[g]
    }

    pub fn representatives(&self) -> &[usize] {
        &self.representatives
    }

    pub fn sizes(&self) -> &[usize] {
        &self.sizes
    }

    pub fn size_of_class_containing(&self, g: usize) -> usize {
        self.sizes[self.class_of[g]]
    }
}

/// Orbits of an action given by its generator moves, numbered by smallest
/// member. Returns `(orbit_of, representatives, sizes)`.
pub(crate) fn orbit_sweep(
    n: usize,
    mut neighbours: impl FnMut(usize, &mut dyn FnMut(usize)),
) -> (Vec<usize>, Vec<usize>, Vec<usize>) {
    const UNSET: usize = usize::MAX;
    let mut orbit_of = vec![UNSET; n];
    let mut reps = Vec::new();
    let mut sizes = Vec::new();
    let mut queue = Vec::new();
    for seed in 0..n {
        if orbit_of[seed] != UNSET {
            continue;
        }
        let id = reps.len();
        reps.push(seed);
        orbit_of[seed] = id;
        queue.clear();
        queue.push(seed);
        let mut i = 0;
        while i < queue.len() {
            let x = queue[i];
            neighbours(x, &mut |y| {
                if orbit_of[y] == UNSET {
                    orbit_of[y] = id;
                    queue.push(y);
                }
            });
            i += 1;
        }
        sizes.push(queue.len());
    }
    (orbit_of, reps, sizes)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::Permutation;

    fn cyc(n: usize, cycles: &[&[usize]]) -> Permutation {
        Permutation::from_cycles(n, cycles).unwrap()
    }

    fn sorted_sizes(c: &ClassPartition) -> Vec<usize> {
        let mut s = c.sizes().to_vec();
        s.sort_unstable();
        s
    }

    /// Oracle: two elements are conjugate iff some h gives h a h⁻¹ = b.
    fn brute_conjugate(g: &FiniteGroup, a: usize, b: usize) -> bool {
        (0..g.order()).any(|h| g.conjugate(h, a) == b)
    }

    #[test]
    fn s3_classes() {
        let g = FiniteGroup::closure(3, vec![cyc(3, &[&[1, 2]]), cyc(3, &[&[1, 2, 3]])]).unwrap();
        let c = ClassPartition::new(&g);
        assert_eq!(c.count(), 3);
        assert_eq!(sorted_sizes(&c), vec![1, 2, 3]);
        assert_eq!(c.sizes()[0], 1);
        for a in 0..6 {
            for b in 0..6 {
                assert_eq!(c.class_of(a) == c.class_of(b), brute_conjugate(&g, a, b));
            }
        }
    }

    #[test]
    fn a4_classes() {
        let g =
            FiniteGroup::closure(4, vec![cyc(4, &[&[1, 2, 3]]), cyc(4, &[&[2, 3, 4]])]).unwrap();
        let c = ClassPartition::new(&g);
        assert_eq!(sorted_sizes(&c), vec![1, 3, 4, 4]);
        for (i, &r) in c.representatives().iter().enumerate() {
            assert_eq!(c.class_of(r), i);
            assert!((0..r).all(|x| c.class_of(x) != i));
        }
    }

    #[test]
    fn trivial_group_has_one_class() {
        let g = FiniteGroup::trivial(1).unwrap();
        assert_eq!(ClassPartition::new(&g).count(), 1);
    }
}
