//! Face semigroups of the classical reflection arrangements (types A, B and D),
//! the card-shuffling random walks they carry, exact spectral analysis of those
//! walks, and q-analogues on buildings over small finite fields.
//!
//! Everything is computed in exact arithmetic: faces are canonical ordered
//! partitions, algebra elements are sparse rational combinations of faces, and
//! every identity (semigroup laws, idempotent systems, minimal polynomials,
//! q-relations) is checked by exact equality, never by floating point.
//!
//! The main entry points:
//!
//! - [`faces`]: canonical faces of the three arrangements, their projection
//!   product, enumeration, and a sign-vector oracle.
//! - [`numbers`]: Stirling numbers, their signed and q-variants, q-numbers.
//! - [`algebra`]: sparse exact elements of the semigroup algebra, the
//!   `σ_j`/`S_a` families for the seven shuffles, idempotents and characters.
//! - [`spectral`]: transition operators on chambers, minimal-polynomial
//!   verification, eigenvalue multiplicities.
//! - [`maps`]: the forgetful homomorphisms B → D → A on faces and elements.
//! - [`buildings`]: flag complexes over GF(q) (general linear, symplectic,
//!   orthogonal, oriflamme), apartment-based products, q-side-shuffle relations.
//! - [`walks`]: seeded Monte-Carlo simulation of every shuffle as a chamber
//!   walk, with empirical/exact cross-validation.

pub mod algebra;
pub mod buildings;
pub mod faces;
mod linalg;
pub mod maps;
pub mod numbers;
pub mod spectral;
pub mod walks;

pub use faces::{Face, FaceType, Family};

use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("rank mismatch: expected n={expected}, got n={got}")]
    DimensionMismatch { expected: u8, got: u8 },
    #[error("family mismatch: {0} vs {1}")]
    FamilyMismatch(String, String),
    #[error("invalid label {label} for {family} with n={n}")]
    InvalidLabel { family: String, n: u8, label: String },
    #[error("index {index} out of range for {what}")]
    IndexOutOfRange { what: String, index: i64 },
    #[error("unsupported family for this operation: {0}")]
    UnsupportedFamily(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("{0} exceeds the supported scale: {1}")]
    ScaleLimit(String, String),
    #[error("q = {0} is not prime")]
    NotPrime(u64),
    #[error("element has a nonpositive coefficient; cannot sample")]
    NonPositiveCoefficient,
    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
