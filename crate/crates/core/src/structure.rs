//! Structural predicates.

use std::sync::Arc;

use crate::classes::ClassPartition;
use crate::group::FiniteGroup;
use crate::quotient::quotient;
use crate::subgroup::{center, commutator_with_group, derived_subgroup, normal_closure, Subgroup};

pub fn is_perfect(group: &FiniteGroup) -> bool {
    derived_subgroup(group).is_whole()
}

/// Simple: nontrivial, and every nontrivial conjugacy class generates `G`
/// as a normal subgroup. `Z_p` counts as simple; the trivial group does not.
pub fn is_simple(group: &FiniteGroup) -> bool {
    if group.order() == 1 {
        return false;
    }
    let classes = ClassPartition::new(group);
    classes.representatives()[1..]
        .iter()
        .all(|&r| normal_closure(group, &[r]).is_whole())
}

/// Lower central series reaches the trivial subgroup.
pub fn is_nilpotent(group: &FiniteGroup) -> bool {
    let mut term = Subgroup::whole(group);
    loop {
        if term.is_trivial() {
            return true;
        }
        let next = commutator_with_group(group, &term);
        if next.order() == term.order() {
            return false;
        }
        term = next;
    }
}

/// Perfect with simple central quotient.
pub fn is_quasisimple(group: &Arc<FiniteGroup>) -> bool {
    if !is_perfect(group) {
        return false;
    }
    let z = center(group);
    match quotient(group, &z) {
        Ok(q) => is_simple(&q.group),
        Err(_) => false,
    }
}
