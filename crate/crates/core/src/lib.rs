//! Twisted conjugacy in finite permutation groups.
//!
//! Groups are materialized from permutation generators ([`FiniteGroup`]);
//! endomorphisms and automorphisms are enumerated exhaustively
//! ([`search`]); Reidemeister numbers are computed both from the fixed
//! points of the induced map on conjugacy classes and from the orbits of the
//! twisted action ([`twisted`]); [`spectra`] aggregates them into spectra,
//! classification flags and a battery of consistency checks.

pub mod catalog;
pub mod classes;
pub mod error;
pub mod group;
pub mod morphism;
pub mod perm;
pub mod quotient;
pub mod search;
pub mod spectra;
pub mod structure;
pub mod subgroup;
pub mod twisted;

pub use catalog::GroupDefinition;
pub use classes::ClassPartition;
pub use error::{Error, Result};
pub use group::FiniteGroup;
pub use morphism::Morphism;
pub use perm::Permutation;
pub use quotient::{induced_on_quotient, quotient, Quotient};
pub use search::{enumerate_automorphisms, enumerate_endomorphisms, MorphismSearch, SearchKind};
pub use spectra::{classify, ClassifyOptions, Spectrum, SpectrumReport};
pub use subgroup::Subgroup;
pub use twisted::{reidemeister_number, twisted_classes, Method};
