//! Permutations of `{0, .., degree - 1}`.
//!
//! Points are 0-based internally; the file format and the textual
//! forms produced by [`Permutation::to_one_based`] are 1-based.
//!
//! Composition follows the function-composition convention:
//! `p.compose(q)` maps `x` to `p(q(x))`, i.e. `q` is applied first.
//! Every group product in the crate uses this order.

use std::fmt;

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u32>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation {
            images: (0..degree as u32).collect(),
        }
    }

    /// Builds a permutation from 0-based images, validating bijectivity.
    pub fn from_images(images: Vec<u32>) -> Result<Self> {
        let n = images.len();
        if n == 0 {
            return Err(Error::InvalidPermutation("degree must be positive".into()));
        }
        let mut seen = vec![false; n];
        for &x in &images {
            let x = x as usize;
            if x >= n {
                return Err(Error::InvalidPermutation(format!(
                    "image {} out of range for degree {}",
                    x + 1,
                    n
                )));
            }
            if seen[x] {
                return Err(Error::InvalidPermutation(format!(
                    "image {} appears twice",
                    x + 1
                )));
            }
            seen[x] = true;
        }
        Ok(Permutation { images })
    }

    /// Builds a permutation from 1-based images.
    pub fn from_one_based(images: &[usize]) -> Result<Self> {
        let mut v = Vec::with_capacity(images.len());
        for &x in images {
            if x == 0 {
                return Err(Error::InvalidPermutation(
                    "points are numbered from 1".into(),
                ));
            }
            v.push((x - 1) as u32);
        }
        Self::from_images(v)
    }

    /// Builds a permutation from disjoint cycles of 1-based points.
    pub fn from_cycles(degree: usize, cycles: &[&[usize]]) -> Result<Self> {
        let mut images: Vec<u32> = (0..degree as u32).collect();
        for cycle in cycles {
            for (i, &x) in cycle.iter().enumerate() {
                let y = cycle[(i + 1) % cycle.len()];
                if x == 0 || x > degree || y == 0 || y > degree {
                    return Err(Error::InvalidPermutation(format!(
                        "cycle point out of range for degree {degree}"
                    )));
                }
                images[x - 1] = (y - 1) as u32;
            }
        }
        Self::from_images(images)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.images[x] as usize
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    pub fn to_one_based(&self) -> Vec<usize> {
        self.images.iter().map(|&x| x as usize + 1).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.images
            .iter()
            .enumerate()
            .all(|(i, &x)| i == x as usize)
    }

    /// `x ↦ self(other(x))`.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch {
                left: self.degree(),
                right: other.degree(),
            });
        }
        Ok(self.compose_unchecked(other))
    }

    pub(crate) fn compose_unchecked(&self, other: &Permutation) -> Permutation {
        Permutation {
            images: other
                .images
                .iter()
                .map(|&x| self.images[x as usize])
                .collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u32; self.images.len()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x as usize] = i as u32;
        }
        Permutation { images: inv }
    }

    /// Disjoint cycles of length > 1, 1-based, each starting at its smallest point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                cycle.push(x + 1);
                x = self.apply(x);
            }
            if cycle.len() > 1 {
                out.push(cycle);
            }
        }
        out
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for c in cycles {
            let body: Vec<String> = c.iter().map(|x| x.to_string()).collect();
            write!(f, "({})", body.join(" "))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation{}", self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn cyc(n: usize, cycles: &[&[usize]]) -> Permutation {
        Permutation::from_cycles(n, cycles).unwrap()
    }

    #[test]
    fn compose_with_identity() {
        let p = cyc(3, &[&[1, 2, 3]]);
        assert_eq!(Permutation::identity(3).compose(&p).unwrap(), p);
    }

    #[test]
    fn compose_applies_right_operand_first() {
        // (1 2 3)∘(1 2): 1 -> 2 -> 3, 2 -> 1 -> 2, 3 -> 3 -> 1
        let p = cyc(3, &[&[1, 2, 3]]);
        let q = cyc(3, &[&[1, 2]]);
        assert_eq!(p.compose(&q).unwrap(), cyc(3, &[&[1, 3]]));
    }

    #[test]
    fn degree_mismatch() {
        let p = Permutation::identity(3);
        let q = Permutation::identity(4);
        assert!(matches!(p.compose(&q), Err(Error::DegreeMismatch { .. })));
    }

    #[test]
    fn rejects_non_bijections() {
        assert!(Permutation::from_one_based(&[1, 1, 2]).is_err());
        assert!(Permutation::from_one_based(&[1, 4, 2]).is_err());
        assert!(Permutation::from_one_based(&[0, 1, 2]).is_err());
        assert!(Permutation::from_one_based(&[]).is_err());
    }

    #[test]
    fn display_cycles() {
        assert_eq!(cyc(5, &[&[1, 3], &[2, 4, 5]]).to_string(), "(1 3)(2 4 5)");
        assert_eq!(Permutation::identity(2).to_string(), "()");
    }

    fn perm_strategy() -> impl Strategy<Value = Permutation> {
        (1usize..9).prop_flat_map(|n| {
            Just((0..n as u32).collect::<Vec<_>>())
                .prop_shuffle()
                .prop_map(|v| Permutation::from_images(v).unwrap())
        })
    }

    proptest! {
        #[test]
        fn inverse_cancels(p in perm_strategy()) {
            let id = Permutation::identity(p.degree());
            prop_assert_eq!(p.compose(&p.inverse()).unwrap(), id.clone());
            prop_assert_eq!(p.inverse().compose(&p).unwrap(), id);
        }

        #[test]
        fn one_based_round_trip(p in perm_strategy()) {
            prop_assert_eq!(Permutation::from_one_based(&p.to_one_based()).unwrap(), p);
        }
    }
}
