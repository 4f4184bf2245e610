pub mod algebras;
pub mod cache;
pub mod cayley;
pub mod freudenthal;
pub mod jordan;
pub mod killing;
pub mod lie;
pub mod linalg;
pub mod properties;
pub mod report;
pub mod roots;
pub mod scalar;
pub mod table;
pub mod wspace;

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/overview.md")]
    mod overview {}
    #[doc = include_str!("../../../book/src/octonions.md")]
    mod octonions {}
    #[doc = include_str!("../../../book/src/algebras.md")]
    mod algebras {}
    #[doc = include_str!("../../../book/src/killing.md")]
    mod killing {}
    #[doc = include_str!("../../../book/src/roots.md")]
    mod roots {}
    #[doc = include_str!("../../../book/src/wspace.md")]
    mod wspace {}
    #[doc = include_str!("../../../book/src/reports.md")]
    mod reports {}
}
