use crate::axiom::Axiom;
use crate::point_set::MAX_POINTS;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("ground set has {0} points; at most {} are supported", MAX_POINTS)]
    TooManyPoints(usize),
    #[error("point {0} is outside the ground set")]
    PointOutOfRange(usize),
    #[error("invalid minimal base: {0}")]
    InvalidBase(String),
    #[error("the two points must be distinct (got {0} twice)")]
    SamePoint(usize),
    #[error("cannot take a subspace on the empty set")]
    EmptySubspace,
    #[error("edge-monotonicity chain violated between {0} and {1}; this is a bug")]
    ChainViolation(Axiom, Axiom),
    #[error("axiom {0} out of range; expected one of t3p, t3pp, t4")]
    AxiomOutOfRange(Axiom),
    #[error("minimal sets of points {0} and {1} coincide; run the distinguishing transform first")]
    NonDistinctMinSets(usize, usize),
    #[error("relation is not antisymmetric: {0} and {1} lie on a cycle")]
    PosetCycle(usize, usize),
    #[error("{what} has size {got}, above the exhaustive-search limit of {limit}")]
    TooLarge {
        what: &'static str,
        got: usize,
        limit: usize,
    },
    #[error("invalid clique cover: {0}")]
    InvalidCover(String),
    #[error("invalid universe cover: condition {condition} violated: {detail}")]
    InvalidUniverseCover {
        condition: &'static str,
        detail: String,
    },
    #[error("the given vertex set is not a maximal clique")]
    NotMaximalClique,
    #[error("an anchored star needs at least one leaf")]
    EmptyStar,
    #[error("graph is disconnected")]
    Disconnected,
    #[error("universe parts must be disjoint subsets of the vertex set")]
    OverlappingParts,
    #[error("unknown suite {0:?}")]
    UnknownSuite(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
