//! Finite algebra workbench for right-residuated lattice-ordered groupoids,
//! sectioned lattices, basic algebras and related logics.
//!
//! ```
//! use resilat::corpus;
//!
//! let g = corpus::lukasiewicz_groupoid(3);
//! assert!(g.classify().involutive.holds());
//! ```

pub mod basic;
pub mod canon;
pub mod congruence;
pub mod corpus;
pub mod enumerate;
pub mod format;
pub mod identities;
pub mod lattice;
pub mod logics;
pub mod ops;
pub mod report;
pub mod residuation;
pub mod sections;
pub mod transform;
pub mod verdict;
