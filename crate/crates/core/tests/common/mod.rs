//! Brute-force oracles shared by the integration tests. They work on raw
//! permutations and never touch the library's multiplication tables.

#![allow(dead_code)]

use std::collections::HashMap;

use twistspec_core::{FiniteGroup, Morphism, Permutation};

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind((0..n).collect())
    }

    fn find(&mut self, x: usize) -> usize {
        let mut r = x;
        while self.0[r] != r {
            r = self.0[r];
        }
        let mut y = x;
        while self.0[y] != r {
            let next = self.0[y];
            self.0[y] = r;
            y = next;
        }
        r
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.0[ra] = rb;
        }
    }

    fn classes(&mut self) -> usize {
        (0..self.0.len()).filter(|&x| self.find(x) == x).count()
    }
}

fn lookup(group: &FiniteGroup) -> HashMap<Permutation, usize> {
    group
        .elements()
        .iter()
        .cloned()
        .enumerate()
        .map(|(i, p)| (p, i))
        .collect()
}

/// Number of classes of `g ~ h g φ(h)⁻¹`, found by exhausting all pairs.
pub fn twisted_count(phi: &Morphism) -> usize {
    let g = phi.source();
    let index = lookup(g);
    let elems = g.elements();
    let mut uf = UnionFind::new(elems.len());
    for (h, ph) in elems.iter().enumerate() {
        let twist = elems[phi.apply(h)].inverse();
        for (x, px) in elems.iter().enumerate() {
            let y = ph.compose(px).unwrap().compose(&twist).unwrap();
            uf.union(x, index[&y]);
        }
    }
    uf.classes()
}

/// Size of the twisted class of the identity.
pub fn identity_twisted_class_size(phi: &Morphism) -> usize {
    let g = phi.source();
    let elems = g.elements();
    let mut seen = std::collections::HashSet::new();
    for (h, ph) in elems.iter().enumerate() {
        seen.insert(ph.compose(&elems[phi.apply(h)].inverse()).unwrap());
    }
    seen.len()
}

/// Number of `g` with `φ(g) = g`.
pub fn fixed_count(phi: &Morphism) -> usize {
    (0..phi.source().order())
        .filter(|&x| phi.apply(x) == x)
        .count()
}

/// Ordinary conjugacy class count by exhausting all pairs.
pub fn class_count(group: &FiniteGroup) -> usize {
    let index = lookup(group);
    let elems = group.elements();
    let mut uf = UnionFind::new(elems.len());
    for h in elems {
        let hi = h.inverse();
        for (x, px) in elems.iter().enumerate() {
            let y = h.compose(px).unwrap().compose(&hi).unwrap();
            uf.union(x, index[&y]);
        }
    }
    uf.classes()
}
