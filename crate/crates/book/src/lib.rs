//! The guide's chapters, compiled so that their snippets run as doctests.

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}
#[doc = include_str!("../../../book/src/groupoids.md")]
pub mod groupoids {}
#[doc = include_str!("../../../book/src/sections.md")]
pub mod sections {}
#[doc = include_str!("../../../book/src/basic-algebras.md")]
pub mod basic_algebras {}
#[doc = include_str!("../../../book/src/logics.md")]
pub mod logics {}
#[doc = include_str!("../../../book/src/congruences.md")]
pub mod congruences {}
#[doc = include_str!("../../../book/src/enumeration.md")]
pub mod enumeration {}
#[doc = include_str!("../../../book/src/cli.md")]
pub mod cli {}
