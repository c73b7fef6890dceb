//! Compiles every code snippet in the guide (`book/`) as a doctest, so the
//! prose and the library cannot drift apart. The modules are empty; the
//! doc attributes pull in the chapter sources.

#[doc = include_str!("../../../book/src/introduction.md")]
mod introduction {}

#[doc = include_str!("../../../book/src/cyclotomic.md")]
mod cyclotomic {}

#[doc = include_str!("../../../book/src/presentations.md")]
mod presentations {}

#[doc = include_str!("../../../book/src/automorphisms.md")]
mod automorphisms {}

#[doc = include_str!("../../../book/src/gradings.md")]
mod gradings {}

#[doc = include_str!("../../../book/src/catalog.md")]
mod catalog {}
