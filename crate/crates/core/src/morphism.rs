//! Homomorphisms between finite groups, stored as full element tables.

use std::fmt;
use std::sync::Arc;

use crate::classes::ClassPartition;
use crate::error::{Error, Result};
use crate::group::{FiniteGroup, SpanningTree};
use crate::perm::Permutation;
use crate::subgroup::Subgroup;

/// A verified homomorphism `source → target`.
///
/// Two morphisms are equal when their groups and full tables agree; the
/// generator images are derived from the table and only used for reporting.
#[derive(Clone)]
pub struct Morphism {
    source: Arc<FiniteGroup>,
    target: Arc<FiniteGroup>,
    table: Vec<usize>,
}

/// Fills `table` by extending `gen_images` along `tree`, then checks the
/// homomorphism law on every (generator, element) pair. Adds the number of
/// group products spent to `products`.
pub(crate) fn extend_and_verify(
    source: &FiniteGroup,
    target: &FiniteGroup,
    tree: &SpanningTree,
    gen_images: &[usize],
    table: &mut [usize],
    products: &mut u64,
) -> bool {
    let order = tree.order();
    table[0] = 0;
    for &e in &order[1..] {
        let (p, slot) = tree.edge(e);
        table[e] = target.mul(gen_images[slot], table[p]);
    }
    *products += order.len() as u64;
    let gens = tree.generators();
    for x in 0..source.order() {
        for (slot, &s) in gens.iter().enumerate() {
            *products += 2;
            if table[source.mul(s, x)] != target.mul(gen_images[slot], table[x]) {
                return false;
            }
        }
    }
    true
}

impl Morphism {
    pub(crate) fn from_table_unchecked(
        source: Arc<FiniteGroup>,
        target: Arc<FiniteGroup>,
        table: Vec<usize>,
    ) -> Self {
        debug_assert_eq!(table.len(), source.order());
        Morphism {
            source,
            target,
            table,
        }
    }

    /// The homomorphism sending the `i`-th defining generator of `source` to
    /// target element `images[i]`.
    pub fn from_images(
        source: &Arc<FiniteGroup>,
        target: &Arc<FiniteGroup>,
        images: &[usize],
    ) -> Result<Self> {
        let gens = source.generator_indices();
        if images.len() != gens.len() {
            return Err(Error::ImageCount {
                expected: gens.len(),
                got: images.len(),
            });
        }
        if images.iter().any(|&i| i >= target.order()) {
            return Err(Error::NotAMember);
        }
        let mut table = vec![0; source.order()];
        let mut products = 0;
        if !extend_and_verify(
            source,
            target,
            source.tree(),
            images,
            &mut table,
            &mut products,
        ) {
            return Err(Error::NotAHomomorphism);
        }
        Ok(Self::from_table_unchecked(
            source.clone(),
            target.clone(),
            table,
        ))
    }

    /// Like [`Morphism::from_images`] with the images given as permutations.
    pub fn from_image_perms(
        source: &Arc<FiniteGroup>,
        target: &Arc<FiniteGroup>,
        images: &[Permutation],
    ) -> Result<Self> {
        let idx = images
            .iter()
            .map(|p| target.index_of(p).ok_or(Error::NotAMember))
            .collect::<Result<Vec<_>>>()?;
        Self::from_images(source, target, &idx)
    }

    pub fn identity(group: &Arc<FiniteGroup>) -> Self {
        Self::from_table_unchecked(group.clone(), group.clone(), (0..group.order()).collect())
    }

    pub fn trivial(source: &Arc<FiniteGroup>, target: &Arc<FiniteGroup>) -> Self {
        Self::from_table_unchecked(source.clone(), target.clone(), vec![0; source.order()])
    }

    /// Conjugation `g ↦ h g h⁻¹`.
    pub fn inner(group: &Arc<FiniteGroup>, h: usize) -> Self {
        let table = (0..group.order()).map(|g| group.conjugate(h, g)).collect();
        Self::from_table_unchecked(group.clone(), group.clone(), table)
    }

    pub fn source(&self) -> &Arc<FiniteGroup> {
        &self.source
    }

    pub fn target(&self) -> &Arc<FiniteGroup> {
        &self.target
    }

    pub fn table(&self) -> &[usize] {
        &self.table
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.table[x]
    }

    /// Images of the source's defining generators, as target element indices.
    pub fn generator_images(&self) -> Vec<usize> {
        self.source
            .generator_indices()
            .iter()
            .map(|&g| self.table[g])
            .collect()
    }

    /// Images of the defining generators in 1-based image notation.
    pub fn generator_image_lists(&self) -> Vec<Vec<usize>> {
        self.generator_images()
            .into_iter()
            .map(|i| self.target.element(i).to_one_based())
            .collect()
    }

    /// Checks the homomorphism law on all pairs of elements.
    pub fn verify_exhaustively(&self) -> bool {
        let (s, t) = (&self.source, &self.target);
        self.table[0] == 0
            && (0..s.order()).all(|x| {
                (0..s.order())
                    .all(|y| self.table[s.mul(x, y)] == t.mul(self.table[x], self.table[y]))
            })
    }

    pub fn is_endomorphism(&self) -> bool {
        self.source == self.target
    }

    fn require_endo(&self) -> Result<()> {
        if self.is_endomorphism() {
            Ok(())
        } else {
            Err(Error::NotAnEndomorphism)
        }
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Morphism) -> Result<Morphism> {
        if other.target != self.source {
            return Err(Error::NotComposable);
        }
        let table = other.table.iter().map(|&x| self.table[x]).collect();
        Ok(Self::from_table_unchecked(
            other.source.clone(),
            self.target.clone(),
            table,
        ))
    }

    /// `φⁿ`; `φ⁰` is the identity.
    pub fn power(&self, n: usize) -> Result<Morphism> {
        self.require_endo()?;
        let mut acc = Morphism::identity(&self.source);
        for _ in 0..n {
            acc = self.compose(&acc)?;
        }
        Ok(acc)
    }

    /// Inverse of a bijective morphism.
    pub fn inverse(&self) -> Option<Morphism> {
        if !self.is_bijective() {
            return None;
        }
        let mut table = vec![0; self.table.len()];
        for (x, &y) in self.table.iter().enumerate() {
            table[y] = x;
        }
        Some(Self::from_table_unchecked(
            self.target.clone(),
            self.source.clone(),
            table,
        ))
    }

    pub fn kernel(&self) -> Subgroup {
        let members = self.table.iter().map(|&y| y == 0).collect();
        Subgroup::from_mask(&self.source, members)
    }

    pub fn image(&self) -> Subgroup {
        let mut members = vec![false; self.target.order()];
        for &y in &self.table {
            members[y] = true;
        }
        let im = Subgroup::from_mask(&self.target, members);
        debug_assert_eq!(self.source.order(), self.kernel().order() * im.order());
        im
    }

    pub fn is_trivial(&self) -> bool {
        self.table.iter().all(|&y| y == 0)
    }

    pub fn is_injective(&self) -> bool {
        self.table.iter().skip(1).all(|&y| y != 0)
    }

    pub fn is_bijective(&self) -> bool {
        self.is_injective() && self.source.order() == self.target.order()
    }

    /// `Fix(φ)`.
    pub fn fixed_subgroup(&self) -> Result<Subgroup> {
        self.require_endo()?;
        let members = self
            .table
            .iter()
            .enumerate()
            .map(|(x, &y)| x == y)
            .collect();
        Ok(Subgroup::from_mask(&self.source, members))
    }

    pub fn is_fixed_point_free(&self) -> Result<bool> {
        Ok(self.fixed_subgroup()?.is_trivial())
    }

    /// Whether `[φ(g)] = [g]` for every `g`; checking one representative per
    /// class suffices.
    pub fn is_class_preserving(&self, classes: &ClassPartition) -> Result<bool> {
        self.require_endo()?;
        Ok(classes
            .representatives()
            .iter()
            .enumerate()
            .all(|(c, &r)| classes.class_of(self.table[r]) == c))
    }

    /// `N_φ`, the union of the kernels of all powers of `φ`.
    ///
    /// The kernels form an ascending chain, so the first repeated order marks
    /// the limit.
    pub fn n_phi(&self) -> Result<Subgroup> {
        self.require_endo()?;
        let mut power = self.clone();
        let mut kernel = power.kernel();
        loop {
            power = self.compose(&power)?;
            let next = power.kernel();
            if next.order() == kernel.order() {
                debug_assert!(kernel.is_normal(&self.source));
                debug_assert!(kernel.elements().all(|x| kernel.contains(self.table[x])));
                return Ok(kernel);
            }
            kernel = next;
        }
    }

    /// Whether `φ(N) ⊆ N`.
    pub fn leaves_invariant(&self, n: &Subgroup) -> bool {
        n.elements().all(|x| n.contains(self.table[x]))
    }
}

impl PartialEq for Morphism {
    fn eq(&self, other: &Self) -> bool {
        self.table == other.table && self.source == other.source && self.target == other.target
    }
}

impl Eq for Morphism {}

impl fmt::Debug for Morphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let images: Vec<String> = self
            .generator_images()
            .into_iter()
            .map(|i| self.target.element(i).to_string())
            .collect();
        write!(f, "Morphism[{}]", images.join(", "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cyc(n: usize, cycles: &[&[usize]]) -> Permutation {
        Permutation::from_cycles(n, cycles).unwrap()
    }

    fn s3() -> Arc<FiniteGroup> {
        Arc::new(FiniteGroup::closure(3, vec![cyc(3, &[&[1, 2]]), cyc(3, &[&[1, 2, 3]])]).unwrap())
    }

    fn z(n: usize) -> Arc<FiniteGroup> {
        let cycle: Vec<usize> = (1..=n).collect();
        Arc::new(FiniteGroup::closure(n, vec![cyc(n, &[&cycle])]).unwrap())
    }

    /// x ↦ a·x on the cyclic group generated by its single generator.
    fn mult_by(g: &Arc<FiniteGroup>, a: usize) -> Morphism {
        let gen = g.generator_indices()[0];
        Morphism::from_images(g, g, &[g.pow(gen, a)]).unwrap()
    }

    /// Sign-like endomorphism of S3 with image {1, (1 2)}.
    fn sign_like(g: &Arc<FiniteGroup>) -> Morphism {
        let t = g.index_of(&cyc(3, &[&[1, 2]])).unwrap();
        Morphism::from_images(g, g, &[t, 0]).unwrap()
    }

    #[test]
    fn trivial_assignment() {
        let g = s3();
        let m = Morphism::from_images(&g, &g, &[0, 0]).unwrap();
        assert!(m.is_trivial());
        assert_eq!(m, Morphism::trivial(&g, &g));
    }

    #[test]
    fn s3_automorphism_from_images() {
        let g = s3();
        let m = Morphism::from_image_perms(&g, &g, &[cyc(3, &[&[1, 2]]), cyc(3, &[&[1, 3, 2]])])
            .unwrap();
        assert!(m.is_bijective());
        assert!(m.verify_exhaustively());
    }

    #[test]
    fn order_obstruction_is_rejected() {
        let z4 = z(4);
        let z3 = z(3);
        let err = Morphism::from_images(&z4, &z3, &[z3.generator_indices()[0]]).unwrap_err();
        assert!(matches!(err, Error::NotAHomomorphism));
    }

    #[test]
    fn powers() {
        let z4 = z(4);
        let double = mult_by(&z4, 2);
        assert_eq!(double.power(1).unwrap(), double);
        assert!(double.power(2).unwrap().is_trivial());
        assert_eq!(double.power(0).unwrap(), Morphism::identity(&z4));
        let inv = mult_by(&z4, 3);
        let back = inv.inverse().unwrap();
        assert_eq!(inv.compose(&back).unwrap(), Morphism::identity(&z4));
    }

    #[test]
    fn kernels_and_images() {
        let g = s3();
        let id = Morphism::identity(&g);
        assert!(id.kernel().is_trivial());
        assert!(id.image().is_whole());
        let t = Morphism::trivial(&g, &g);
        assert!(t.kernel().is_whole());
        assert!(t.image().is_trivial());
        let s = sign_like(&g);
        assert_eq!(s.kernel().order(), 3);
        assert_eq!(s.image().order(), 2);
    }

    #[test]
    fn fixed_points() {
        let g = s3();
        assert!(Morphism::identity(&g).fixed_subgroup().unwrap().is_whole());
        assert!(Morphism::trivial(&g, &g).is_fixed_point_free().unwrap());
        assert!(!Morphism::identity(&g).is_fixed_point_free().unwrap());
        let z4 = z(4);
        let fixed = mult_by(&z4, 3).fixed_subgroup().unwrap();
        let two = z4.pow(z4.generator_indices()[0], 2);
        assert_eq!(fixed.elements().collect::<Vec<_>>(), vec![0, two]);

        // order-3 automorphism of the Klein four-group cycling its involutions
        let v4 = Arc::new(
            FiniteGroup::closure(
                4,
                vec![cyc(4, &[&[1, 2], &[3, 4]]), cyc(4, &[&[1, 3], &[2, 4]])],
            )
            .unwrap(),
        );
        let a = v4.generator_indices()[0];
        let b = v4.generator_indices()[1];
        let rot = Morphism::from_images(&v4, &v4, &[b, v4.mul(a, b)]).unwrap();
        assert!(rot.is_fixed_point_free().unwrap());
        assert!(rot.power(3).unwrap() == Morphism::identity(&v4));
    }

    #[test]
    fn class_preservation() {
        let a4 = Arc::new(
            FiniteGroup::closure(4, vec![cyc(4, &[&[1, 2, 3]]), cyc(4, &[&[2, 3, 4]])]).unwrap(),
        );
        let classes = ClassPartition::new(&a4);
        for h in 0..a4.order() {
            assert!(Morphism::inner(&a4, h)
                .is_class_preserving(&classes)
                .unwrap());
        }
        // conjugation by (1 2) inside S4 restricts to an outer automorphism of A4
        let t = cyc(4, &[&[1, 2]]);
        let images: Vec<Permutation> = a4
            .generators()
            .iter()
            .map(|g| t.compose(g).unwrap().compose(&t).unwrap())
            .collect();
        let outer = Morphism::from_image_perms(&a4, &a4, &images).unwrap();
        assert!(!outer.is_class_preserving(&classes).unwrap());
    }

    #[test]
    fn inner_automorphisms() {
        let g = s3();
        assert_eq!(Morphism::inner(&g, 0), Morphism::identity(&g));
        let t = g.index_of(&cyc(3, &[&[1, 2]])).unwrap();
        let m = Morphism::inner(&g, t);
        assert_eq!(m.apply(t), t);
        assert!(m.verify_exhaustively());
        let z4 = z(4);
        assert_eq!(Morphism::inner(&z4, 1), Morphism::identity(&z4));
    }

    #[test]
    fn n_phi_cases() {
        let g = s3();
        let id = Morphism::identity(&g);
        assert!(id.n_phi().unwrap().is_trivial());
        let z4 = z(4);
        assert!(mult_by(&z4, 2).n_phi().unwrap().is_whole());
        // image {1,(1 2)} is fixed pointwise, so the chain stops at ker = A3
        assert_eq!(sign_like(&g).n_phi().unwrap().order(), 3);
    }

    #[test]
    fn endomorphism_only_operations() {
        let z4 = z(4);
        let z2 = z(2);
        let m = Morphism::trivial(&z4, &z2);
        assert!(matches!(m.fixed_subgroup(), Err(Error::NotAnEndomorphism)));
        assert!(matches!(m.power(2), Err(Error::NotAnEndomorphism)));
        assert!(matches!(m.compose(&m), Err(Error::NotComposable)));
    }
}
