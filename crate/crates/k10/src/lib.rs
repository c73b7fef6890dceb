//! Exact computational algebra for the 10-dimensional Kac superalgebra K10.
//!
//! The crate builds K10 in two presentations (the Racine multiplication table
//! and the tensor product `F1 + K (x) K` over the 3-dimensional Kaplansky
//! superalgebra K), realizes its automorphism group `SL2 x SL2 semidirect <delta>`
//! concretely as 10x10 matrices over the cyclotomic field `Q(zeta_120)`, and
//! machine-checks the full classification of the 21 group gradings on K10,
//! together with the supporting identities (Weyl-orbit relations, MAD-group
//! centralizer facts, and the super-Jordan identity via the Grassmann
//! envelope).
//!
//! Everything is exact: scalars are cyclotomic numbers with arbitrary
//! precision rational coefficients, and every comparison is equality on
//! canonical forms.

pub mod abgroup;
pub mod algebra;
pub mod autos;
pub mod catalog;
pub mod cyclo;
pub mod envelope;
pub mod grading;
pub mod linalg;
pub mod report;

mod book;

pub use cyclo::{CycNum, RootSpec};
pub use report::{Detail, Report, Status};

use thiserror::Error as ThisError;

/// Errors shared across the crate.
#[derive(Debug, ThisError)]
pub enum Error {
    #[error("cannot invert zero")]
    ZeroInverse,
    #[error("order {0} does not divide 120")]
    UnsupportedOrder(i64),
    #[error("elements belong to different algebras")]
    AlgebraMismatch,
    #[error("Grassmann envelope supports at most 4 generators")]
    TooManyGenerators,
    #[error("matrix is not unimodular")]
    NotUnimodular,
    #[error("matrices do not commute pairwise")]
    NotCommuting,
    #[error("eigenspace dimensions do not sum to the algebra dimension")]
    NotDiagonalizable,
    #[error("no isomorphism found")]
    NoIsomorphismFound,
    #[error("grading matches no catalog entry")]
    NoMatch,
    #[error("unknown catalog entry {0}")]
    UnknownEntry(usize),
    #[error("parse error: {0}")]
    Parse(String),
}
