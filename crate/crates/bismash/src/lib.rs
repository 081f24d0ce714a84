//! Exact-arithmetic toolkit for finite-dimensional Hopf algebras presented by
//! structure constants.
//!
//! The crate verifies (co)algebra, bialgebra and Hopf axioms by exhaustive
//! evaluation over basis tuples, checks partial (co)module axioms and partial
//! matched-pair conditions, and constructs smash products, smash coproducts and
//! the partial bismash product together with its full Hopf structure, integrals
//! and duality. All arithmetic is exact: the rationals, small extension fields
//! of the rationals, and prime fields are supported through the [`Scalar`]
//! trait; there are no floating-point code paths and no tolerances.

pub mod scalar;
pub mod matrix;
pub mod linalg;
pub mod tensor;
pub mod report;
pub mod hopf;
pub mod partial;
pub mod smash;
pub mod matchedpair;
pub mod bismash;
pub mod structure;
pub mod zoo;
pub mod schema;
pub mod verify;

pub use crate::report::{CheckItem, Report};
pub use crate::scalar::{ExtElem, ExtField, Gf, GfField, QField, Rat, Scalar};
pub use crate::hopf::{AlgebraData, CoalgebraData, Fingerprint, HopfData};
pub use crate::matrix::Matrix;

/// Errors surfaced by the exact-math and structure layers.
#[derive(Debug, thiserror::Error)]
pub enum MathError {
    #[error("field mismatch: inputs attached to different fields")]
    FieldMismatch,
    #[error("dimension mismatch: {0}")]
    DimMismatch(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("structural failure: {0}")]
    Structure(String),
}

/// Matrices over the rationals, the default field for most of the zoo.
pub type QMatrix = Matrix<Rat>;
/// Hopf algebra data over the rationals.
pub type QHopf = HopfData<Rat>;
/// Hopf algebra data over a prime field.
pub type GfHopf = HopfData<Gf>;
/// Hopf algebra data over an extension field of the rationals.
pub type ExtHopf = HopfData<ExtElem>;
