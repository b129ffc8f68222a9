//! Exhaustive enumeration of endomorphisms and automorphisms.
//!
//! A morphism is determined by the images of a generating set, so the search
//! walks the grid of generator images depth-first. Candidates for a generator
//! of order `n` are the elements whose order divides `n` (for automorphisms:
//! equals `n`, in a class of the same size). Partial assignments are cut when
//! the images generate a subgroup of the wrong size: an endomorphism maps
//! `⟨g₁..gⱼ⟩` onto a quotient of it, an automorphism onto an isomorphic copy.
//! Complete assignments are extended along a spanning tree and checked.

use std::sync::Arc;

use crate::classes::ClassPartition;
use crate::error::{Error, Result};
use crate::group::{FiniteGroup, SpanningTree};
use crate::morphism::{extend_and_verify, Morphism};
use crate::subgroup::Subgroup;

/// Default cap on group products spent by one enumeration.
pub const DEFAULT_PRODUCT_BUDGET: u64 = 100_000_000;

/// Generating sets longer than this are shrunk greedily before searching.
const MAX_PLAIN_GENERATORS: usize = 3;

/// Elements considered by the greedy generating-set reduction.
const GREEDY_POOL: usize = 1024;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SearchKind {
    Endomorphisms,
    Automorphisms,
}

/// Lazy, deterministic stream of morphisms `G → G`.
///
/// Yields `Err(BudgetExceeded)` once and then stops if the product cap is hit.
pub struct MorphismSearch {
    group: Arc<FiniteGroup>,
    kind: SearchKind,
    tree: SpanningTree,
    candidates: Vec<Vec<usize>>,
    prefix_orders: Vec<usize>,
    pos: Vec<usize>,
    level: usize,
    images: Vec<usize>,
    table: Vec<usize>,
    products: u64,
    cap: u64,
    done: bool,
}

impl MorphismSearch {
    pub fn new(group: &Arc<FiniteGroup>, kind: SearchKind, product_cap: u64) -> Self {
        let gens = search_generators(group);
        let tree = group
            .spanning_tree(&gens)
            .expect("search generators generate the group");
        let orders: Vec<usize> = (0..group.order()).map(|g| group.element_order(g)).collect();
        let classes = (kind == SearchKind::Automorphisms).then(|| ClassPartition::new(group));
        let candidates = gens
            .iter()
            .map(|&s| {
                (0..group.order())
                    .filter(|&x| match &classes {
                        None => orders[s].is_multiple_of(orders[x]),
                        Some(c) => {
                            orders[x] == orders[s]
                                && c.size_of_class_containing(x) == c.size_of_class_containing(s)
                        }
                    })
                    .collect()
            })
            .collect();
        let prefix_orders = (1..=gens.len())
            .map(|j| Subgroup::generated(group, &gens[..j]).order())
            .collect();
        let k = gens.len();
        MorphismSearch {
            group: group.clone(),
            kind,
            tree,
            candidates,
            prefix_orders,
            pos: vec![0; k],
            level: 0,
            images: vec![0; k],
            table: vec![0; group.order()],
            products: 0,
            cap: product_cap,
            done: false,
        }
    }

    /// Generating set the search assigns images to.
    pub fn generators(&self) -> &[usize] {
        self.tree.generators()
    }

    pub fn candidate_counts(&self) -> Vec<usize> {
        self.candidates.iter().map(Vec::len).collect()
    }

    pub fn products_used(&self) -> u64 {
        self.products
    }

    fn prune(&mut self, level: usize) -> bool {
        let h = Subgroup::generated(&self.group, &self.images[..=level]).order();
        self.products += (h * (level + 1)) as u64;
        let want = self.prefix_orders[level];
        match self.kind {
            SearchKind::Endomorphisms => !want.is_multiple_of(h),
            SearchKind::Automorphisms => want != h,
        }
    }

    fn emit(&self) -> Morphism {
        Morphism::from_table_unchecked(self.group.clone(), self.group.clone(), self.table.clone())
    }
}

impl Iterator for MorphismSearch {
    type Item = Result<Morphism>;

    fn next(&mut self) -> Option<Self::Item> {
        if self.done {
            return None;
        }
        let k = self.candidates.len();
        if k == 0 {
            self.done = true;
            return Some(Ok(Morphism::identity(&self.group)));
        }
        loop {
            if self.products > self.cap {
                self.done = true;
                return Some(Err(Error::BudgetExceeded { cap: self.cap }));
            }
            let level = self.level;
            if self.pos[level] == self.candidates[level].len() {
                if level == 0 {
                    self.done = true;
                    return None;
                }
                self.pos[level] = 0;
                self.level -= 1;
                continue;
            }
            self.images[level] = self.candidates[level][self.pos[level]];
            self.pos[level] += 1;
            if level + 1 < k {
                if level == 0 || !self.prune(level) {
                    self.level += 1;
                }
                continue;
            }
            let ok = extend_and_verify(
                &self.group,
                &self.group,
                &self.tree,
                &self.images,
                &mut self.table,
                &mut self.products,
            );
            if ok && (self.kind == SearchKind::Endomorphisms || is_injective(&self.table)) {
                return Some(Ok(self.emit()));
            }
        }
    }
}

fn is_injective(table: &[usize]) -> bool {
    table.iter().skip(1).all(|&y| y != 0)
}

/// The defining generators without identities and repeats; if more than three
/// remain, a greedy set built by repeatedly adding the element that enlarges
/// the generated subgroup most, when that set is smaller.
fn search_generators(group: &FiniteGroup) -> Vec<usize> {
    let mut gens: Vec<usize> = Vec::new();
    for &g in group.generator_indices() {
        if g != 0 && !gens.contains(&g) {
            gens.push(g);
        }
    }
    if gens.len() <= MAX_PLAIN_GENERATORS {
        return gens;
    }
    let pool = group.order().min(GREEDY_POOL);
    let mut greedy: Vec<usize> = Vec::new();
    let mut current = Subgroup::trivial(group);
    while !current.is_whole() && greedy.len() < gens.len() {
        let mut best: Option<(usize, Subgroup)> = None;
        for x in 1..pool {
            if current.contains(x) {
                continue;
            }
            let mut trial = greedy.clone();
            trial.push(x);
            let h = Subgroup::generated(group, &trial);
            if best.as_ref().is_none_or(|(_, b)| h.order() > b.order()) {
                best = Some((x, h));
            }
        }
        match best {
            Some((x, h)) => {
                greedy.push(x);
                current = h;
            }
            None => break,
        }
    }
    if current.is_whole() && greedy.len() < gens.len() {
        greedy
    } else {
        gens
    }
}

/// Every endomorphism of `group`, in search order.
pub fn enumerate_endomorphisms(
    group: &Arc<FiniteGroup>,
    product_cap: u64,
) -> Result<Vec<Morphism>> {
    MorphismSearch::new(group, SearchKind::Endomorphisms, product_cap).collect()
}

/// Every automorphism of `group`, in search order.
pub fn enumerate_automorphisms(
    group: &Arc<FiniteGroup>,
    product_cap: u64,
) -> Result<Vec<Morphism>> {
    MorphismSearch::new(group, SearchKind::Automorphisms, product_cap).collect()
}
