use core::fmt;

use crate::{AssociativePair, ImageIndex};

/// Errors raised by the core operations.
///
/// Positions are 1-based word positions within the syntagma.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// An index below 1.
    InvalidIndex(usize),
    /// A pair whose head and dependent coincide.
    SelfLoop(ImageIndex),
    /// A syntagma without any words.
    EmptySyntagma,
    EmptyLexeme {
        position: usize,
    },
    HeadOutOfRange {
        position: usize,
        head: usize,
        len: usize,
    },
    SelfHead {
        position: usize,
    },
    DuplicatePosition {
        position: usize,
    },
    /// More than one (or no) unattached word where exactly one anchor is needed.
    UnattachedWords {
        count: usize,
    },
    /// A coordination group member that is also the group's shared head.
    GroupMemberIsHead {
        member: usize,
    },
    GroupMemberOutOfRange {
        member: usize,
        len: usize,
    },
    DuplicateGroupMember {
        member: usize,
    },
    /// A coordination group with fewer than two members.
    GroupTooSmall,
    /// The pair is not part of the term.
    PairNotFound(AssociativePair),
    /// The image index is not a node of the graph.
    NodeNotFound(ImageIndex),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidIndex(i) => write!(f, "invalid pair: image index {i} is not positive"),
            Error::SelfLoop(i) => write!(f, "invalid pair: {i} cannot govern itself"),
            Error::EmptySyntagma => write!(f, "syntagma has no content words"),
            Error::EmptyLexeme { position } => write!(f, "position {position}: empty lexeme"),
            Error::HeadOutOfRange {
                position,
                head,
                len,
            } => {
                write!(f, "position {position}: head {head} outside 1..={len}")
            }
            Error::SelfHead { position } => {
                write!(f, "position {position}: word names itself as head")
            }
            Error::DuplicatePosition { position } => {
                write!(f, "position {position}: duplicate index")
            }
            Error::UnattachedWords { count } => {
                write!(f, "expected exactly one unattached word, found {count}")
            }
            Error::GroupMemberIsHead { member } => {
                write!(f, "coordination member {member} is also the shared head")
            }
            Error::GroupMemberOutOfRange { member, len } => {
                write!(f, "coordination member {member} outside 1..={len}")
            }
            Error::DuplicateGroupMember { member } => {
                write!(f, "coordination member {member} listed twice")
            }
            Error::GroupTooSmall => write!(f, "coordination group needs at least two members"),
            Error::PairNotFound(p) => write!(f, "pair {p} is not part of the term"),
            Error::NodeNotFound(i) => write!(f, "image {i} is not a node of the graph"),
        }
    }
}

impl core::error::Error for Error {}
