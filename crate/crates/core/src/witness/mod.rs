//! Exact certificates for the Euclidean counterexamples: the smash of two
//! intervals, neighbourhood bases of the wedge, and the failure of
//! associativity for `[0,1) ∧ [0,1) ∧ ℚ`.

mod basis;
mod cert;
mod column;
pub mod rat;
mod region;

use thiserror::Error;

pub use basis::{
    diagonalize, noncompact_certificate, refine_to_basis, refine_to_basis_with, BasisRefinement, Diagonal, BASIS_PREFIX,
};
pub use cert::{Certificate, Inequality, Kind, Rel};
pub use column::{
    build_c, build_c_with, closedness_certificate, closedness_check, convergent, convergents_certificate,
    saturation_check, sqrt2_convergents, witness_search, BasicNbdSpec, CSet, SearchResult,
};
pub use rat::Rat;
pub use region::{
    build_lshape, build_weps, first_seed_above, image_membership, in_space, seed, smash_embed, BoundaryFn, DiagRegion,
    EpsSeq, LShape, Tail, WEps,
};

#[derive(Debug, Error, PartialEq)]
pub enum WitnessError {
    #[error("out of range: {0}")]
    OutOfRange(String),
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("bound violated on piece {piece}: {detail}")]
    Bound { piece: usize, detail: String },
    #[error("point {point:?} has coordinate {coordinate} equal to zero")]
    Unsaturated { point: Vec<Rat>, coordinate: usize },
    #[error("not closed: {0}")]
    NotClosed(String),
    #[error("inconclusive at truncation {truncation}, increase truncation: {reason}")]
    IncreaseTruncation { truncation: usize, reason: String },
    #[error("certificate rejected: {0}")]
    Verify(String),
}

fn rebuild(kind: Kind, inputs: &serde_json::Value) -> Result<Certificate, WitnessError> {
    match kind {
        Kind::Basis => basis::rebuild_basis(inputs),
        Kind::Diagonal => basis::rebuild_diagonal(inputs),
        Kind::NonCompact => basis::rebuild_noncompact(inputs),
        Kind::Convergents => column::rebuild_convergents(inputs),
        Kind::Saturation => column::rebuild_saturation(inputs),
        Kind::Closedness => column::rebuild_closedness(inputs),
        Kind::Search => column::rebuild_search(inputs),
    }
}
