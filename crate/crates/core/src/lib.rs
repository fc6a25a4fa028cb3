pub mod arith;
pub mod chain;
mod enumerate;
pub mod error;
pub mod field;
pub mod group;
pub mod limits;
pub mod perm;
pub mod lattice;
pub mod construct;
pub mod structure;
pub mod hypothesis;
pub mod report;
pub mod suite;

pub use enumerate::Enumeration;
pub use error::{Error, Result};
pub use group::PermGroup;
pub use perm::Perm;

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/permutations.md")]
    mod permutations {}
    #[doc = include_str!("../../../book/src/constructors.md")]
    mod constructors {}
    #[doc = include_str!("../../../book/src/lattice.md")]
    mod lattice {}
    #[doc = include_str!("../../../book/src/structure.md")]
    mod structure {}
    #[doc = include_str!("../../../book/src/hypothesis.md")]
    mod hypothesis {}
    #[doc = include_str!("../../../book/src/arithmetic.md")]
    mod arithmetic {}
    #[doc = include_str!("../../../book/src/reports.md")]
    mod reports {}
}
