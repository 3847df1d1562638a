//! Exact enumeration of embedded bouquets and dipoles under symmetry groups.
//!
//! A bouquet is a one-vertex graph with `n` loops; a dipole has two vertices
//! joined by `n` parallel edges. Their cellular embeddings correspond to
//! simple labeled objects — chord diagrams (perfect matchings on `Z_2n`) for
//! bouquets and permutations of `Z_n` for dipoles — and counting embeddings
//! up to rotation, reflection, vertex exchange or arc reversal reduces to
//! counting orbits of small symmetry groups acting on those objects.
//!
//! The crate has two independent routes to every count:
//!
//! * closed-form coset averages ([`dipoles::delta`], [`bouquets::beta`],
//!   [`dirbouquets::alpha`]) combined into the named counting families
//!   `D1..D8`, `B1..B4`, `A1..A9` and their symmetric/asymmetric splits;
//! * a brute-force [`oracle`] that generates every labeled object, applies
//!   every group element, and counts orbits both by Burnside averaging and by
//!   minimal-representative selection.
//!
//! All arithmetic is exact: counts are [`num_bigint::BigUint`] and every
//! division in a closed form is performed last through checked exact
//! division.
//!
//! The `embcount` binary exposes the sequence registry (`value`, `table`,
//! `list-families`) and the cross-check driver (`verify`).

pub mod actions;
pub mod bouquets;
pub mod dipoles;
pub mod dirbouquets;
pub mod exactmath;
pub mod objects;
pub mod oracle;
pub mod registry;
pub mod verify;

pub use num_bigint::BigUint;

use thiserror::Error;

/// Errors surfaced by the library API.
///
/// Integrality failures inside the closed forms themselves are treated as
/// bugs and panic; the variants here cover user-facing conditions plus the
/// checked-division primitive.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// Exact division was requested but the divisor does not divide the
    /// numerator. Never silently truncates.
    #[error("inexact division: {numerator} is not divisible by {divisor}")]
    InexactDivision { numerator: BigUint, divisor: BigUint },

    /// Colored objects need at least one color once there is an edge.
    #[error("color count k must be >= 1 when n >= 1")]
    ZeroColors,

    /// A family token did not parse to a registered evaluator.
    #[error("unknown family `{0}`")]
    UnknownFamily(String),

    /// A color count was supplied to an uncolored-only family.
    #[error("family `{0}` does not take a color count")]
    ColorsNotAccepted(String),

    /// A requested enumeration exceeds the configured oracle caps.
    #[error("resource cap exceeded: {0}")]
    CapExceeded(String),
}
