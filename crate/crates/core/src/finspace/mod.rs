//! Finite topological spaces.
//!
//! A finite space is the same thing as a preorder (its specialization
//! order); opens are the up-closed sets. Everything in this module computes
//! on that representation, so products, subspaces and quotients never have
//! to materialize an open lattice.

mod construct;
mod enumerate;
mod homeo;
mod map;
mod preorder;
mod space;

pub use construct::{disjoint_union, quotient, quotient_by_classes, subspace, Product, Quotient};
pub use enumerate::{
    canonical_form, enumerate_spaces, random_preorder_space, CanonicalForm, EnumerationConfig,
    DEFAULT_MAX_ENUMERATION_POINTS,
};
pub use homeo::{
    find_homeomorphism, find_homeomorphism_pinned, HomeoSearch, Mismatch, SearchStats, DEFAULT_HOMEO_BUDGET,
};
pub use map::{continuous_maps, count_continuous_maps, for_each_continuous_map, CMap};
pub use preorder::Preorder;
pub use space::{check_topology, point_set, validate_topology, FinSpace, PointSet};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TopologyError {
    #[error("a space needs at least one point")]
    NoPoints,
    #[error("open #{open} refers to unknown point index {index}")]
    UnknownIndex { open: usize, index: usize },
    #[error("the empty set is not listed as open")]
    MissingEmpty,
    #[error("the full set is not listed as open")]
    MissingFull,
    #[error("opens #{first} and #{second} have a union that is not open")]
    NotUnionClosed { first: usize, second: usize },
    #[error("opens #{first} and #{second} have an intersection that is not open")]
    NotIntersectionClosed { first: usize, second: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SpaceError {
    #[error(transparent)]
    Topology(#[from] TopologyError),
    #[error("relation is not reflexive at point {0}")]
    NotReflexive(usize),
    #[error("relation is not transitive: {0} <= {1} <= {2} but not {0} <= {2}")]
    NotTransitive(usize, usize, usize),
    #[error("assignment has {got} entries, domain has {expected} points")]
    AssignmentLength { expected: usize, got: usize },
    #[error("assignment sends point {point} to {target}, codomain has {cod_len} points")]
    AssignmentRange {
        point: usize,
        target: usize,
        cod_len: usize,
    },
    #[error("map is not continuous: {x} <= {y} in the domain but their images are not related")]
    Discontinuous { x: usize, y: usize },
    #[error("maps cannot be composed: codomain and domain differ")]
    NotComposable,
    #[error("subspace carrier must be nonempty")]
    EmptyCarrier,
    #[error("partition is invalid: {0}")]
    BadPartition(String),
    #[error("enumeration of {requested}-point spaces refused: configured bound is {bound}")]
    EnumerationBound { requested: usize, bound: usize },
    #[error("canonical form refused for {0} points (too many permutations)")]
    CanonicalFormTooLarge(usize),
}
