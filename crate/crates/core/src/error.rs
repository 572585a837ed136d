use thiserror::Error;

use crate::class::ClassKind;
use crate::rearrange::Violation;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("a digraph must have at least one vertex")]
    EmptyVertexSet,
    #[error("{n} vertices exceed the supported maximum of {max}")]
    TooManyVertices { n: usize, max: usize },
    #[error("arc ({u}, {v}) is out of range for a digraph on {n} vertices")]
    ArcOutOfRange { u: usize, v: usize, n: usize },
    #[error("vertex {v} is out of range for a digraph on {n} vertices")]
    VertexOutOfRange { v: usize, n: usize },
    #[error("cannot induce a subgraph on the empty vertex set")]
    EmptyInducedSet,
    #[error("argument is not a poset")]
    NotAPoset,
    #[error("digraph is not symmetric")]
    NotSymmetric,
    #[error("vertex {v} is not in the given subset")]
    VertexNotInSubset { v: usize },
    #[error("map has {got} entries, expected {expected}")]
    ArityMismatch { expected: usize, got: usize },
    #[error("image {image} of vertex {v} is outside a codomain of size {codomain}")]
    ImageOutOfRange { v: usize, image: usize, codomain: usize },
    #[error("map is not a homomorphism")]
    NotAHomomorphism,
    #[error("map is not a strict homomorphism")]
    NotStrictHom,
    #[error("canonical form needs at most {max} vertices, got {n}")]
    TooLarge { n: usize, max: usize },
    #[error("class bound {requested} for {kind} exceeds the cap of {cap}")]
    BoundTooLarge {
        kind: ClassKind,
        requested: usize,
        cap: usize,
    },
    #[error("invalid class specification: {0}")]
    InvalidClassSpec(String),
    #[error("class is not closed under quotients: {0}")]
    ClassNotQuotientClosed(String),
    #[error("strict-count dominance fails for quotient shape with {vertices} vertices ({lhs} > {rhs})")]
    DominanceFails {
        vertices: usize,
        lhs: String,
        rhs: String,
    },
    #[error("premise fails: {0}")]
    PremiseFails(String),
    #[error("invalid rearrangement specification: {}", fmt_violations(.0))]
    InvalidSpec(Vec<Violation>),
    #[error("consecutive vertices at position {index} are not joined by an arc")]
    NotAWalk { index: usize },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("catalog line {line}: {reason}")]
    CatalogImport { line: usize, reason: String },
}

fn fmt_violations(v: &[Violation]) -> String {
    v.iter().map(ToString::to_string).collect::<Vec<_>>().join("; ")
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Parse(e.to_string())
    }
}
