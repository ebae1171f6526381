//! Relative root systems of isotropic reductive groups, Borel subsets and
//! their cores, and certificates that the relative root subgroups form a
//! strong grading.
//!
//! All arithmetic is exact. Root coordinates are integers in a simple-root
//! basis; functionals and linear-algebra witnesses are rationals, generic
//! over [`Scalar`] with [`Rat`] as the default.

pub mod borel;
pub mod catalog;
pub mod dynkin;
pub mod error;
pub mod exactlin;
pub mod grading;
pub mod relroot;
pub mod rootset;
pub mod rootsys;
pub mod scalar;

pub use borel::{
    core_definitional, core_formula, core_sufficient, count_chambers, enumerate_borel_subsets, is_regular,
    BorelSubset, Core, Strategy,
};
pub use dynkin::{
    automorphism_group, diagram_of, validate_datum, Automorphism, DiagramAutomorphismGroup, DynkinDiagram,
    GammaLabel, ParabolicDatum,
};
pub use catalog::{catalog, catalog_entry, CatalogEntry};
pub use error::{Error, Result};
pub use grading::{certify_strong, verify_certificate, StrongGradingCertificate};
pub use relroot::{project, ComponentType, MultipleClass, Projection, RelativeRoot, RelativeRootSystem};
pub use rootset::RootSet;
pub use rootsys::{build_root_system, CartanType, PositiveSystem, Root, RootSystem, Series};
pub use scalar::Scalar;

/// Arbitrary-precision rational used throughout the public API.
pub type Rat = num_rational::BigRational;
/// Rational vector: functionals and points of the rational span of roots.
pub type RatVector = exactlin::Vector<Rat>;
/// Machine-width rational, for callers that know their entries stay small.
pub type SmallRat = num_rational::Rational64;
pub type SmallRatVector = exactlin::Vector<SmallRat>;
