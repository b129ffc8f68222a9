//! Quotient groups realized as permutation actions on left cosets.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::morphism::Morphism;
use crate::perm::Permutation;
use crate::subgroup::Subgroup;

/// `G/N` together with the projection `G → G/N`.
#[derive(Clone, Debug)]
pub struct Quotient {
    pub group: Arc<FiniteGroup>,
    pub projection: Morphism,
}

/// Builds `G/N` as the action of `G` on the left cosets `gN`, numbered by
/// their smallest element index. The quotient's defining generators are the
/// images of `G`'s defining generators, in order.
pub fn quotient(group: &Arc<FiniteGroup>, n: &Subgroup) -> Result<Quotient> {
    if !n.is_normal(group) {
        return Err(Error::NotNormal);
    }
    const UNSET: usize = usize::MAX;
    let mut coset_of = vec![UNSET; group.order()];
    let mut reps = Vec::new();
    let members: Vec<usize> = n.elements().collect();
    for g in 0..group.order() {
        if coset_of[g] != UNSET {
            continue;
        }
        for &x in &members {
            coset_of[group.mul(g, x)] = reps.len();
        }
        reps.push(g);
    }
    let degree = reps.len();
    let action = |s: usize| {
        let images = reps
            .iter()
            .map(|&r| coset_of[group.mul(s, r)] as u32)
            .collect();
        Permutation::from_images(images).expect("left multiplication permutes cosets")
    };
    let gens: Vec<Permutation> = group
        .generator_indices()
        .iter()
        .map(|&s| action(s))
        .collect();
    let q = Arc::new(FiniteGroup::closure_with_cap(degree, gens, degree.max(1))?);
    let images = q.generator_indices().to_vec();
    let projection = Morphism::from_images(group, &q, &images)?;
    debug_assert_eq!(projection.kernel(), *n);
    Ok(Quotient {
        group: q,
        projection,
    })
}

/// The endomorphism of `G/N` induced by `φ`, for a normal `φ`-invariant `N`.
pub fn induced_on_quotient(phi: &Morphism, n: &Subgroup) -> Result<(Quotient, Morphism)> {
    if !phi.is_endomorphism() {
        return Err(Error::NotAnEndomorphism);
    }
    if !phi.leaves_invariant(n) {
        return Err(Error::NotInvariant);
    }
    let q = quotient(phi.source(), n)?;
    let induced = induced_with(phi, &q)?;
    Ok((q, induced))
}

/// Induced endomorphism on an already-built quotient.
pub(crate) fn induced_with(phi: &Morphism, q: &Quotient) -> Result<Morphism> {
    let images: Vec<usize> = phi
        .source()
        .generator_indices()
        .iter()
        .map(|&s| q.projection.apply(phi.apply(s)))
        .collect();
    Morphism::from_images(&q.group, &q.group, &images)
}
