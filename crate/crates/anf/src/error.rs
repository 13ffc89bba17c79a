use thiserror::Error;

/// An input problem, located by 1-based line number when one applies.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{}{kind}", line.map(|l| format!("line {l}: ")).unwrap_or_default())]
pub struct IngestError {
    pub line: Option<usize>,
    pub kind: IngestErrorKind,
}

impl IngestError {
    pub fn at(line: usize, kind: IngestErrorKind) -> Self {
        IngestError {
            line: Some(line),
            kind,
        }
    }

    pub fn whole(kind: IngestErrorKind) -> Self {
        IngestError { line: None, kind }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IngestErrorKind {
    #[error("malformed line: {0}")]
    Malformed(String),
    #[error("duplicate index {0}")]
    DuplicateIndex(usize),
    #[error("expected index {expected}, found {found}")]
    Gap { expected: usize, found: usize },
    #[error("head {head} outside 1..={len}")]
    HeadOutOfRange { head: usize, len: usize },
    #[error("word names itself as head")]
    SelfHead,
    #[error("no content words")]
    NoContentWords,
    #[error("no root token")]
    MissingRoot,
    #[error("more than one root token")]
    MultipleRoots,
    #[error("root token is a function word")]
    DroppedRoot,
    #[error("head chain does not reach the root")]
    CyclicHeads,
    #[error("duplicate key {0:?}")]
    DuplicateKey(String),
    #[error("invalid graph document: {0}")]
    Json(String),
    #[error(transparent)]
    Core(#[from] anf_core::Error),
}

impl From<anf_core::Error> for IngestError {
    fn from(e: anf_core::Error) -> Self {
        IngestError::whole(e.into())
    }
}
