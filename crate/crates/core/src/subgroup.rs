//! Subgroups as membership masks over a parent group's element indices.

use crate::group::FiniteGroup;

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Subgroup {
    members: Vec<bool>,
    order: usize,
}

impl Subgroup {
    /// Wraps a mask that is already known to be closed under the group law.
    ///
    /// Panics if the order does not divide the parent order.
    pub(crate) fn from_mask(parent: &FiniteGroup, members: Vec<bool>) -> Self {
        assert_eq!(members.len(), parent.order());
        let order = members.iter().filter(|&&m| m).count();
        assert!(
            order > 0 && parent.order().is_multiple_of(order),
            "subgroup of order {order} in group of order {}",
            parent.order()
        );
        debug_assert!(members[0]);
        Subgroup { members, order }
    }

    pub fn trivial(parent: &FiniteGroup) -> Self {
        let mut members = vec![false; parent.order()];
        members[0] = true;
        Subgroup { members, order: 1 }
    }

    pub fn whole(parent: &FiniteGroup) -> Self {
        Subgroup {
            members: vec![true; parent.order()],
            order: parent.order(),
        }
    }

    /// The subgroup generated by `gens` (element indices).
    pub fn generated(parent: &FiniteGroup, gens: &[usize]) -> Self {
        let mut members = vec![false; parent.order()];
        members[0] = true;
        let mut queue = vec![0usize];
        let mut i = 0;
        while i < queue.len() {
            let x = queue[i];
            for &s in gens {
                let y = parent.mul(x, s);
                if !members[y] {
                    members[y] = true;
                    queue.push(y);
                }
            }
            i += 1;
        }
        Self::from_mask(parent, members)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn contains(&self, g: usize) -> bool {
        self.members[g]
    }

    pub fn mask(&self) -> &[bool] {
        &self.members
    }

    /// Member element indices in increasing order.
    pub fn elements(&self) -> impl Iterator<Item = usize> + '_ {
        self.members
            .iter()
            .enumerate()
            .filter_map(|(i, &m)| m.then_some(i))
    }

    pub fn is_trivial(&self) -> bool {
        self.order == 1
    }

    pub fn is_whole(&self) -> bool {
        self.order == self.members.len()
    }

    pub fn is_subset_of(&self, other: &Subgroup) -> bool {
        self.members
            .iter()
            .zip(&other.members)
            .all(|(&a, &b)| !a || b)
    }

    pub fn intersection(&self, parent: &FiniteGroup, other: &Subgroup) -> Subgroup {
        let members = self
            .members
            .iter()
            .zip(&other.members)
            .map(|(&a, &b)| a && b)
            .collect();
        Self::from_mask(parent, members)
    }

    pub fn is_normal(&self, parent: &FiniteGroup) -> bool {
        self.elements().all(|x| {
            parent
                .generator_indices()
                .iter()
                .all(|&s| self.members[parent.conjugate(s, x)])
        })
    }
}

/// Smallest normal subgroup containing `set`.
pub fn normal_closure(group: &FiniteGroup, set: &[usize]) -> Subgroup {
    let mut gens: Vec<usize> = set.iter().copied().filter(|&x| x != 0).collect();
    loop {
        let h = Subgroup::generated(group, &gens);
        let missing = gens.iter().find_map(|&x| {
            group
                .generator_indices()
                .iter()
                .map(|&s| group.conjugate(s, x))
                .find(|&c| !h.contains(c))
        });
        match missing {
            Some(c) => gens.push(c),
            None => return h,
        }
    }
}

pub fn center(group: &FiniteGroup) -> Subgroup {
    let gens = group.generator_indices();
    let members = (0..group.order())
        .map(|g| gens.iter().all(|&s| group.mul(g, s) == group.mul(s, g)))
        .collect();
    Subgroup::from_mask(group, members)
}

/// `[G, G]`, as the normal closure of commutators of the generators.
pub fn derived_subgroup(group: &FiniteGroup) -> Subgroup {
    let gens = group.generator_indices();
    let mut comms = Vec::new();
    for &a in gens {
        for &b in gens {
            comms.push(group.commutator(a, b));
        }
    }
    normal_closure(group, &comms)
}

/// `[H, G]` for a normal subgroup `H`.
pub fn commutator_with_group(group: &FiniteGroup, h: &Subgroup) -> Subgroup {
    let mut comms = Vec::new();
    for x in h.elements() {
        for &s in group.generator_indices() {
            comms.push(group.commutator(x, s));
        }
    }
    comms.sort_unstable();
    comms.dedup();
    normal_closure(group, &comms)
}
