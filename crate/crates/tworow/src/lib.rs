//! Exact combinatorics of annular crossingless matchings.
//!
//! The crate enumerates the matchings `Cross(m, n)`, realizes them as
//! integer vectors in a tensor-product Grothendieck group via an affine
//! tangle calculus, and derives from those vectors the closed dimension
//! formulas and baby-Verma multiplicities attached to two-row nilpotent
//! data, with every formula cross-checked against an independent
//! brute-force route.
//!
//! Start with [`matchings`] for the diagrams, [`kgroup`] for the tensor
//! calculus, [`tangles`] for the word DSL, and [`dims`]/[`mults`]/
//! [`rs_bridge`] for the derived quantities. [`verify`] bundles the
//! cross-module consistency suites.

pub mod dims;
pub mod kgroup;
pub mod matchings;
pub mod mults;
pub mod rs_bridge;
pub mod tangles;
pub mod verify;

pub use dims::{dim_formula, dim_module, Weight};
pub use kgroup::{class_of_matching, line_bundle_class, TensorVector};
pub use matchings::{enumerate_cross, subset_to_matching, AnnularMatching, Arc, SubsetLabel};
pub use tangles::{parse as parse_tangle, TangleWord};
