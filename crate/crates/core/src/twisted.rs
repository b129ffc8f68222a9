//! Twisted conjugacy classes and Reidemeister numbers.
//!
//! `R(φ)` is computed two ways: by counting the orbits of the twisted action
//! `h·g = h g φ(h)⁻¹` directly, and by counting the conjugacy classes fixed by
//! the induced map `[g] ↦ [φ(g)]`. The second is the fast default; the first
//! serves as an independent check.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::classes::{orbit_sweep, ClassPartition};
use crate::error::{Error, Result};
use crate::morphism::Morphism;
use crate::quotient::{induced_with, quotient, Quotient};
use crate::subgroup::Subgroup;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    /// Fixed points of the induced class map.
    #[default]
    FixedClasses,
    /// Orbits of the twisted action.
    Orbits,
    /// Both, failing on disagreement.
    Checked,
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "fixed" | "fixed-classes" => Ok(Method::FixedClasses),
            "orbits" => Ok(Method::Orbits),
            "checked" => Ok(Method::Checked),
            other => Err(Error::InvalidParameters(format!(
                "unknown method `{other}`"
            ))),
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::FixedClasses => "fixed-classes",
            Method::Orbits => "orbits",
            Method::Checked => "checked",
        })
    }
}

/// The `φ`-twisted conjugacy classes, numbered by smallest member.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwistedPartition {
    class_of: Vec<usize>,
    representatives: Vec<usize>,
    sizes: Vec<usize>,
}

impl TwistedPartition {
    /// `R(φ)`.
    pub fn count(&self) -> usize {
        self.sizes.len()
    }

    pub fn class_of(&self, g: usize) -> usize {
        self.class_of[g]
    }

    pub fn representatives(&self) -> &[usize] {
        &self.representatives
    }

    pub fn sizes(&self) -> &[usize] {
        &self.sizes
    }

    /// `|[1]_φ|`.
    pub fn identity_class_size(&self) -> usize {
        self.sizes[0]
    }
}

pub fn twisted_classes(phi: &Morphism) -> Result<TwistedPartition> {
    if !phi.is_endomorphism() {
        return Err(Error::NotAnEndomorphism);
    }
    let g = phi.source();
    let moves: Vec<(usize, usize)> = g
        .generator_indices()
        .iter()
        .map(|&s| (s, g.inv(phi.apply(s))))
        .collect();
    let (class_of, representatives, sizes) = orbit_sweep(g.order(), |x, push| {
        for &(s, twist) in &moves {
            push(g.mul(g.mul(s, x), twist));
        }
    });
    Ok(TwistedPartition {
        class_of,
        representatives,
        sizes,
    })
}

/// The self-map `[g] ↦ [φ(g)]` on conjugacy classes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassMap {
    map: Vec<usize>,
}

impl ClassMap {
    pub fn get(&self, class: usize) -> usize {
        self.map[class]
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.map
    }

    pub fn fixed_points(&self) -> usize {
        self.map
            .iter()
            .enumerate()
            .filter(|&(c, &d)| c == d)
            .count()
    }

    pub fn is_bijection(&self) -> bool {
        let mut seen = vec![false; self.map.len()];
        self.map
            .iter()
            .all(|&d| !std::mem::replace(&mut seen[d], true))
    }
}

pub fn induced_class_map(phi: &Morphism, classes: &ClassPartition) -> Result<ClassMap> {
    if !phi.is_endomorphism() {
        return Err(Error::NotAnEndomorphism);
    }
    let map = classes
        .representatives()
        .iter()
        .map(|&r| classes.class_of(phi.apply(r)))
        .collect();
    Ok(ClassMap { map })
}

/// `R(φ)` using `classes` as the conjugacy classes of the source.
pub fn reidemeister_number(
    phi: &Morphism,
    classes: &ClassPartition,
    method: Method,
) -> Result<usize> {
    match method {
        Method::FixedClasses => Ok(induced_class_map(phi, classes)?.fixed_points()),
        Method::Orbits => Ok(twisted_classes(phi)?.count()),
        Method::Checked => {
            let fixed_classes = induced_class_map(phi, classes)?.fixed_points();
            let orbits = twisted_classes(phi)?.count();
            if fixed_classes != orbits {
                return Err(Error::MethodDisagreement {
                    fixed_classes,
                    orbits,
                });
            }
            Ok(orbits)
        }
    }
}

/// Outcome of comparing `R(φ)` with the Reidemeister number of the
/// automorphism induced on `G/N_φ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Reduction {
    pub reidemeister: usize,
    pub reduced_reidemeister: usize,
    pub n_phi_order: usize,
    pub induced_is_bijective: bool,
}

impl Reduction {
    pub fn holds(&self) -> bool {
        self.induced_is_bijective && self.reidemeister == self.reduced_reidemeister
    }
}

/// Reuses quotients across morphisms that share the same `N_φ`.
#[derive(Default)]
pub struct ReductionCache {
    quotients: HashMap<Subgroup, (Quotient, ClassPartition)>,
}

impl ReductionCache {
    pub fn new() -> Self {
        Self::default()
    }

    /// `classes` are the conjugacy classes of `φ`'s source.
    pub fn check(
        &mut self,
        phi: &Morphism,
        classes: &ClassPartition,
        method: Method,
    ) -> Result<Reduction> {
        let n = phi.n_phi()?;
        let g = phi.source();
        let reidemeister = reidemeister_number(phi, classes, method)?;
        let n_phi_order = n.order();
        let (q, qclasses) = match self.quotients.entry(n) {
            std::collections::hash_map::Entry::Occupied(e) => e.into_mut(),
            std::collections::hash_map::Entry::Vacant(e) => {
                let q = quotient(g, e.key())?;
                let c = ClassPartition::new(&q.group);
                e.insert((q, c))
            }
        };
        let induced = induced_with(phi, q)?;
        let reduced_reidemeister = reidemeister_number(&induced, qclasses, method)?;
        Ok(Reduction {
            reidemeister,
            reduced_reidemeister,
            n_phi_order,
            induced_is_bijective: induced.is_bijective(),
        })
    }
}

/// Whether `R(φ) = R(φ̄)` for the automorphism `φ̄` induced on `G/N_φ`.
pub fn reduction_check(phi: &Morphism) -> Result<bool> {
    let classes = ClassPartition::new(phi.source());
    Ok(ReductionCache::new()
        .check(phi, &classes, Method::Checked)?
        .holds())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::FiniteGroup;
    use crate::perm::Permutation;
    use std::sync::Arc;

    fn cyc(n: usize, cycles: &[&[usize]]) -> Permutation {
        Permutation::from_cycles(n, cycles).unwrap()
    }

    fn group(n: usize, gens: &[&[&[usize]]]) -> Arc<FiniteGroup> {
        Arc::new(FiniteGroup::closure(n, gens.iter().map(|c| cyc(n, c)).collect()).unwrap())
    }

    fn s3() -> Arc<FiniteGroup> {
        group(3, &[&[&[1, 2]], &[&[1, 2, 3]]])
    }

    fn z4() -> Arc<FiniteGroup> {
        group(4, &[&[&[1, 2, 3, 4]]])
    }

    /// Oracle straight from the definition: g₁ ~ g₂ iff g₁ = h g₂ φ(h)⁻¹.
    fn brute_twisted_count(phi: &Morphism) -> usize {
        let g = phi.source();
        let n = g.order();
        let mut label = vec![usize::MAX; n];
        let mut count = 0;
        for x in 0..n {
            if label[x] != usize::MAX {
                continue;
            }
            for h in 0..n {
                label[g.mul(g.mul(h, x), g.inv(phi.apply(h)))] = count;
            }
            count += 1;
        }
        count
    }

    #[test]
    fn identity_gives_conjugacy_classes() {
        let g = s3();
        let tp = twisted_classes(&Morphism::identity(&g)).unwrap();
        let cp = ClassPartition::new(&g);
        assert_eq!(tp.sizes(), cp.sizes());
        assert_eq!(tp.representatives(), cp.representatives());
    }

    #[test]
    fn trivial_endomorphism_single_class() {
        let g = s3();
        let tp = twisted_classes(&Morphism::trivial(&g, &g)).unwrap();
        assert_eq!(tp.count(), 1);
        assert_eq!(tp.sizes(), &[6]);
    }

    #[test]
    fn inversion_on_z4() {
        let g = z4();
        let inv = Morphism::from_images(&g, &g, &[g.pow(1, 3)]).unwrap();
        let tp = twisted_classes(&inv).unwrap();
        assert_eq!(tp.count(), 2);
        let two = g.pow(1, 2);
        assert_eq!(tp.class_of(0), tp.class_of(two));
        assert_eq!(tp.class_of(1), tp.class_of(g.pow(1, 3)));
        assert_ne!(tp.class_of(0), tp.class_of(1));
        let classes = ClassPartition::new(&g);
        assert_eq!(
            reidemeister_number(&inv, &classes, Method::Checked).unwrap(),
            2
        );
        assert_eq!(brute_twisted_count(&inv), 2);
    }

    #[test]
    fn class_maps() {
        let g = s3();
        let classes = ClassPartition::new(&g);
        let id = induced_class_map(&Morphism::identity(&g), &classes).unwrap();
        assert_eq!(id.as_slice(), &[0, 1, 2]);
        assert!(id.is_bijection());
        let triv = induced_class_map(&Morphism::trivial(&g, &g), &classes).unwrap();
        assert_eq!(triv.as_slice(), &[0, 0, 0]);
        assert!(!triv.is_bijection());

        let a4 = group(4, &[&[&[1, 2, 3]], &[&[2, 3, 4]]]);
        let c4 = ClassPartition::new(&a4);
        let t = cyc(4, &[&[1, 2]]);
        let images: Vec<Permutation> = a4
            .generators()
            .iter()
            .map(|x| t.compose(x).unwrap().compose(&t).unwrap())
            .collect();
        let outer = Morphism::from_image_perms(&a4, &a4, &images).unwrap();
        let map = induced_class_map(&outer, &c4).unwrap();
        assert_eq!(map.fixed_points(), 2);
        assert!(map.is_bijection());
        let moved: Vec<usize> = (0..4).filter(|&c| map.get(c) != c).collect();
        assert_eq!(moved.len(), 2);
        assert_eq!(map.get(moved[0]), moved[1]);
        assert_eq!(c4.sizes()[moved[0]], 4);
    }

    #[test]
    fn numbers_for_s3() {
        let g = s3();
        let classes = ClassPartition::new(&g);
        assert_eq!(
            reidemeister_number(&Morphism::identity(&g), &classes, Method::FixedClasses).unwrap(),
            3
        );
        assert_eq!(
            reidemeister_number(&Morphism::trivial(&g, &g), &classes, Method::Orbits).unwrap(),
            1
        );
    }

    #[test]
    fn reductions() {
        let g = s3();
        assert!(reduction_check(&Morphism::identity(&g)).unwrap());
        let t = g.index_of(&cyc(3, &[&[1, 2]])).unwrap();
        let sign_like = Morphism::from_images(&g, &g, &[t, 0]).unwrap();
        let classes = ClassPartition::new(&g);
        let r = ReductionCache::new()
            .check(&sign_like, &classes, Method::Checked)
            .unwrap();
        assert_eq!(r.reidemeister, 2);
        assert_eq!(r.reduced_reidemeister, 2);
        assert_eq!(r.n_phi_order, 3);
        assert!(r.holds());

        let z = z4();
        let double = Morphism::from_images(&z, &z, &[z.pow(1, 2)]).unwrap();
        let classes = ClassPartition::new(&z);
        let r = ReductionCache::new()
            .check(&double, &classes, Method::Checked)
            .unwrap();
        assert_eq!((r.reidemeister, r.reduced_reidemeister), (1, 1));
    }

    #[test]
    fn methods_parse() {
        assert_eq!("fixed".parse::<Method>().unwrap(), Method::FixedClasses);
        assert_eq!("orbits".parse::<Method>().unwrap(), Method::Orbits);
        assert_eq!("checked".parse::<Method>().unwrap(), Method::Checked);
        assert!("nope".parse::<Method>().is_err());
    }
}
