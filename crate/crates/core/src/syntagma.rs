use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::vec::Vec;

use crate::{AnfTerm, AssociativePair, Error, ImageIndex, Result};

/// Marks the artificial subject `Y` and predicate `Z` images.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Placeholder {
    #[default]
    None,
    UnknownSubject,
    UnknownPredicate,
}

impl Placeholder {
    pub const SUBJECT_LEXEME: &'static str = "<Y>";
    pub const PREDICATE_LEXEME: &'static str = "<Z>";

    /// The placeholder a reserved lexeme stands for.
    pub fn from_lexeme(lexeme: &str) -> Placeholder {
        match lexeme {
            Self::SUBJECT_LEXEME => Placeholder::UnknownSubject,
            Self::PREDICATE_LEXEME => Placeholder::UnknownPredicate,
            _ => Placeholder::None,
        }
    }

    pub fn lexeme(self) -> Option<&'static str> {
        match self {
            Placeholder::None => None,
            Placeholder::UnknownSubject => Some(Self::SUBJECT_LEXEME),
            Placeholder::UnknownPredicate => Some(Self::PREDICATE_LEXEME),
        }
    }
}

/// One meaningful word of a syntagma.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Image {
    index: ImageIndex,
    lexeme: String,
    placeholder: Placeholder,
}

impl Image {
    pub fn index(&self) -> ImageIndex {
        self.index
    }

    pub fn lexeme(&self) -> &str {
        &self.lexeme
    }

    pub fn placeholder(&self) -> Placeholder {
        self.placeholder
    }

    pub fn is_placeholder(&self) -> bool {
        self.placeholder != Placeholder::None
    }
}

/// Homogeneous parts `(x_1 & x_2 & ...)` sharing one governing image.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoordinationGroup {
    members: Vec<ImageIndex>,
    shared_head: ImageIndex,
}

impl CoordinationGroup {
    pub fn new(members: impl IntoIterator<Item = usize>, shared_head: usize) -> Result<Self> {
        let shared_head = ImageIndex::new(shared_head)?;
        let mut seen = BTreeSet::new();
        let mut out = Vec::new();
        for m in members {
            let idx = ImageIndex::new(m)?;
            if idx == shared_head {
                return Err(Error::GroupMemberIsHead { member: m });
            }
            if !seen.insert(idx) {
                return Err(Error::DuplicateGroupMember { member: m });
            }
            out.push(idx);
        }
        if out.len() < 2 {
            return Err(Error::GroupTooSmall);
        }
        Ok(CoordinationGroup {
            members: out,
            shared_head,
        })
    }

    pub fn members(&self) -> &[ImageIndex] {
        &self.members
    }

    pub fn shared_head(&self) -> ImageIndex {
        self.shared_head
    }
}

/// Rule-1 encoding of a k-word syntagma: every word followed by the index of
/// the word that governs it.
///
/// Invariants: one entry per index `1..=k` in order, every head is in range
/// and differs from its own position, coordination groups reference existing
/// images.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EncodedSyntagma {
    images: Vec<Image>,
    heads: Vec<ImageIndex>,
    groups: Vec<CoordinationGroup>,
}

impl EncodedSyntagma {
    /// Validates `(lexeme, head)` entries given in word order.
    ///
    /// Lexemes equal to `<Y>` or `<Z>` become placeholder images.
    pub fn encode<I, S>(words: I, groups: Vec<CoordinationGroup>) -> Result<Self>
    where
        I: IntoIterator<Item = (S, usize)>,
        S: Into<String>,
    {
        let words: Vec<(String, usize)> = words.into_iter().map(|(l, h)| (l.into(), h)).collect();
        let len = words.len();
        if len == 0 {
            return Err(Error::EmptySyntagma);
        }
        let mut images = Vec::with_capacity(len);
        let mut heads = Vec::with_capacity(len);
        for (n, (lexeme, head)) in words.into_iter().enumerate() {
            let position = n + 1;
            if lexeme.is_empty() {
                return Err(Error::EmptyLexeme { position });
            }
            if head == 0 || head > len {
                return Err(Error::HeadOutOfRange {
                    position,
                    head,
                    len,
                });
            }
            if head == position {
                return Err(Error::SelfHead { position });
            }
            let placeholder = Placeholder::from_lexeme(&lexeme);
            images.push(Image {
                index: ImageIndex::new(position)?,
                lexeme,
                placeholder,
            });
            heads.push(ImageIndex::new(head)?);
        }
        for group in &groups {
            for &m in group.members.iter().chain([&group.shared_head]) {
                if m.get() > len {
                    return Err(Error::GroupMemberOutOfRange {
                        member: m.get(),
                        len,
                    });
                }
            }
        }
        Ok(EncodedSyntagma {
            images,
            heads,
            groups,
        })
    }

    pub(crate) fn with_heads(&self, heads: Vec<ImageIndex>) -> Self {
        EncodedSyntagma {
            images: self.images.clone(),
            heads,
            groups: self.groups.clone(),
        }
    }

    /// Number of images, `k`.
    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    pub fn images(&self) -> &[Image] {
        &self.images
    }

    pub fn groups(&self) -> &[CoordinationGroup] {
        &self.groups
    }

    pub fn image(&self, index: ImageIndex) -> Option<&Image> {
        self.images.get(index.get() - 1)
    }

    pub fn head_of(&self, index: ImageIndex) -> Option<ImageIndex> {
        self.heads.get(index.get() - 1).copied()
    }

    /// `(image, head)` entries in word order.
    pub fn entries(&self) -> impl Iterator<Item = (&Image, ImageIndex)> + '_ {
        self.images.iter().zip(self.heads.iter().copied())
    }

    pub fn lexeme(&self, index: ImageIndex) -> Option<&str> {
        self.image(index).map(Image::lexeme)
    }

    /// First image carrying `lexeme`.
    pub fn find(&self, lexeme: &str) -> Option<ImageIndex> {
        self.images
            .iter()
            .find(|i| i.lexeme == lexeme)
            .map(|i| i.index)
    }

    /// `saw\once`; indices outside the syntagma fall back to `x7`.
    pub fn render_pair(&self, pair: AssociativePair) -> String {
        let mut out = String::new();
        out.push_str(&self.word(pair.head()));
        out.push('\\');
        out.push_str(&self.word(pair.dependent()));
        out
    }

    /// Lexeme rendering of a term, pairs joined by ` (+) ` after reduction.
    pub fn render_term(&self, term: &AnfTerm) -> String {
        let parts: Vec<String> = term.iter().map(|p| self.render_pair(p)).collect();
        parts.join(" (+) ")
    }

    /// Lexeme of an index, or its `x<i>` name when unknown.
    pub fn word(&self, index: ImageIndex) -> String {
        match self.lexeme(index) {
            Some(l) => String::from(l),
            None => alloc::format!("{index}"),
        }
    }
}
