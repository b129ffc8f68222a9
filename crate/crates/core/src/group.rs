//! Materialized finite permutation groups.

use std::collections::HashMap;
use std::fmt;
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::perm::Permutation;

/// Largest order accepted by [`FiniteGroup::closure`] unless overridden.
pub const DEFAULT_ORDER_CAP: usize = 20_000;

/// Groups up to this order get a precomputed Cayley table.
pub const CAYLEY_TABLE_LIMIT: usize = 512;

/// A breadth-first spanning tree of the Cayley graph for some generating
/// set, given as element indices. Every non-identity element `e` satisfies
/// `e = gens[slot(e)] · parent(e)`, and `order` lists elements so that
/// parents always come before children.
#[derive(Clone, Debug)]
pub struct SpanningTree {
    gens: Vec<usize>,
    order: Vec<usize>,
    parent: Vec<(usize, usize)>,
}

impl SpanningTree {
    pub fn generators(&self) -> &[usize] {
        &self.gens
    }

    /// Elements in breadth-first order, identity first.
    pub fn order(&self) -> &[usize] {
        &self.order
    }

    /// `(parent, generator slot)` for element `e`; meaningless for the identity.
    pub fn edge(&self, e: usize) -> (usize, usize) {
        self.parent[e]
    }
}

/// A finite group of permutations with every element materialized.
///
/// `elements[0]` is the identity; the rest appear in breadth-first
/// discovery order, multiplying on the left by the generators in list order.
pub struct FiniteGroup {
    degree: usize,
    generators: Vec<Permutation>,
    generator_indices: Vec<usize>,
    elements: Vec<Permutation>,
    index: HashMap<Permutation, usize>,
    inverses: Vec<usize>,
    tree: SpanningTree,
    cayley: OnceLock<Option<Vec<u32>>>,
}

impl FiniteGroup {
    pub fn closure(degree: usize, generators: Vec<Permutation>) -> Result<Self> {
        Self::closure_with_cap(degree, generators, DEFAULT_ORDER_CAP)
    }

    pub fn closure_with_cap(
        degree: usize,
        generators: Vec<Permutation>,
        order_cap: usize,
    ) -> Result<Self> {
        if degree == 0 {
            return Err(Error::InvalidPermutation("degree must be positive".into()));
        }
        for g in &generators {
            if g.degree() != degree {
                return Err(Error::DegreeMismatch {
                    left: degree,
                    right: g.degree(),
                });
            }
        }
        let identity = Permutation::identity(degree);
        let mut elements = vec![identity.clone()];
        let mut index = HashMap::new();
        index.insert(identity, 0usize);
        let mut parent = vec![(0usize, 0usize)];
        let mut i = 0;
        while i < elements.len() {
            for (slot, s) in generators.iter().enumerate() {
                let x = s.compose_unchecked(&elements[i]);
                if !index.contains_key(&x) {
                    if elements.len() >= order_cap {
                        return Err(Error::OrderCapExceeded { cap: order_cap });
                    }
                    index.insert(x.clone(), elements.len());
                    elements.push(x);
                    parent.push((i, slot));
                }
            }
            i += 1;
        }
        let inverses = elements.iter().map(|e| index[&e.inverse()]).collect();
        let generator_indices: Vec<usize> = generators.iter().map(|g| index[g]).collect();
        let tree = SpanningTree {
            gens: generator_indices.clone(),
            order: (0..elements.len()).collect(),
            parent,
        };
        Ok(FiniteGroup {
            degree,
            generators,
            generator_indices,
            elements,
            index,
            inverses,
            tree,
            cayley: OnceLock::new(),
        })
    }

    pub fn trivial(degree: usize) -> Result<Self> {
        Self::closure(degree, Vec::new())
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    /// Element indices of the defining generators.
    pub fn generator_indices(&self) -> &[usize] {
        &self.generator_indices
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &Permutation {
        &self.elements[i]
    }

    pub fn index_of(&self, p: &Permutation) -> Option<usize> {
        self.index.get(p).copied()
    }

    /// Spanning tree for the defining generators.
    pub fn tree(&self) -> &SpanningTree {
        &self.tree
    }

    fn cayley(&self) -> Option<&[u32]> {
        self.cayley
            .get_or_init(|| {
                let n = self.order();
                if n > CAYLEY_TABLE_LIMIT {
                    return None;
                }
                let mut table = Vec::with_capacity(n * n);
                for a in &self.elements {
                    for b in &self.elements {
                        table.push(self.index[&a.compose_unchecked(b)] as u32);
                    }
                }
                Some(table)
            })
            .as_deref()
    }

    /// Index of `elements[a] · elements[b]` (apply `b` first).
    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        match self.cayley() {
            Some(t) => t[a * self.elements.len() + b] as usize,
            None => self.index[&self.elements[a].compose_unchecked(&self.elements[b])],
        }
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inverses[a]
    }

    pub fn pow(&self, a: usize, n: usize) -> usize {
        let mut acc = 0;
        for _ in 0..n {
            acc = self.mul(acc, a);
        }
        acc
    }

    /// `h g h⁻¹`.
    #[inline]
    pub fn conjugate(&self, h: usize, g: usize) -> usize {
        self.mul(self.mul(h, g), self.inverses[h])
    }

    /// `a⁻¹ b⁻¹ a b`.
    pub fn commutator(&self, a: usize, b: usize) -> usize {
        let ab = self.mul(a, b);
        self.mul(self.mul(self.inverses[a], self.inverses[b]), ab)
    }

    /// Least `n ≥ 1` with `gⁿ = 1`.
    pub fn element_order(&self, g: usize) -> usize {
        let mut n = 1;
        let mut x = g;
        while x != 0 {
            x = self.mul(x, g);
            n += 1;
        }
        n
    }

    pub fn is_abelian(&self) -> bool {
        let gens = &self.generator_indices;
        gens.iter()
            .all(|&a| gens.iter().all(|&b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Breadth-first spanning tree for an arbitrary generating set; `None` if
    /// `gens` generates a proper subgroup.
    pub fn spanning_tree(&self, gens: &[usize]) -> Option<SpanningTree> {
        let n = self.order();
        let mut seen = vec![false; n];
        let mut parent = vec![(0usize, 0usize); n];
        let mut order = Vec::with_capacity(n);
        seen[0] = true;
        order.push(0);
        let mut i = 0;
        while i < order.len() {
            let x = order[i];
            for (slot, &s) in gens.iter().enumerate() {
                let y = self.mul(s, x);
                if !seen[y] {
                    seen[y] = true;
                    parent[y] = (x, slot);
                    order.push(y);
                }
            }
            i += 1;
        }
        (order.len() == n).then(|| SpanningTree {
            gens: gens.to_vec(),
            order,
            parent,
        })
    }
}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteGroup")
            .field("degree", &self.degree)
            .field("order", &self.order())
            .field("generators", &self.generators)
            .finish()
    }
}

impl PartialEq for FiniteGroup {
    fn eq(&self, other: &Self) -> bool {
        std::ptr::eq(self, other)
            || (self.degree == other.degree && self.elements == other.elements)
    }
}

impl Eq for FiniteGroup {}
