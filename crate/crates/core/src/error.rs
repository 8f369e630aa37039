use thiserror::Error;

use crate::construct::BlueprintReport;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for a digraph of order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("order {order} exceeds the supported maximum {max}")]
    OrderTooLarge { order: usize, max: usize },
    #[error("order {requested} exceeds the configured cap {cap}")]
    CapExceeded { requested: usize, cap: usize },
    #[error("malformed rooted tree: {0}")]
    MalformedTree(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("missing vertex count")]
    MissingOrder,
    #[error("invalid vertex count {0:?}")]
    BadOrder(String),
    #[error("expected two vertex indices, got {0:?}")]
    MalformedLine(String),
    #[error("vertex {vertex} out of range for order {order}")]
    OutOfRange { vertex: usize, order: usize },
    #[error("duplicate arc {0} -> {1}")]
    DuplicateArc(usize, usize),
    #[error("order {order} exceeds the supported maximum {max}")]
    OrderTooLarge { order: usize, max: usize },
    #[error("unknown directive {0:?}")]
    UnknownDirective(String),
    #[error("duplicate directive {0:?}")]
    DuplicateDirective(String),
    #[error("missing directive {0:?}")]
    MissingDirective(&'static str),
    #[error("expected {expected} entries, got {got}")]
    WrongLength { expected: usize, got: usize },
}

impl ParseError {
    pub(crate) fn new(line: usize, kind: ParseErrorKind) -> Self {
        ParseError { line, kind }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructError {
    #[error("invalid blueprint: {0}")]
    InvalidBlueprint(BlueprintReport),
    #[error("digraph is not locatable")]
    NotLocatable,
    #[error("digraph is not extremal")]
    NotExtremal,
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TreeError {
    #[error("digraph is not a member of the tree family: {0}")]
    NotInFamily(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}
