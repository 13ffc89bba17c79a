//! Images indices, associative pairs and ⊕-terms in associative normal form.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;
use core::fmt;
use core::ops::Add;

use crate::{Error, Result};

/// 1-based position of an image (word) inside its syntagma.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ImageIndex(u32);

impl ImageIndex {
    pub fn new(index: usize) -> Result<Self> {
        match u32::try_from(index) {
            Ok(i) if i >= 1 => Ok(ImageIndex(i)),
            _ => Err(Error::InvalidIndex(index)),
        }
    }

    pub fn get(self) -> usize {
        self.0 as usize
    }
}

impl fmt::Display for ImageIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "x{}", self.0)
    }
}

/// Elementary ANF term `head\dependent`: the principal image governs the
/// subordinate one.
///
/// Ordering is lexicographic on `(head, dependent)`, which is also the order
/// used by every deterministic export.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct AssociativePair {
    head: ImageIndex,
    dependent: ImageIndex,
}

impl AssociativePair {
    /// Builds `head\dependent` from raw 1-based indices.
    pub fn new(head: usize, dependent: usize) -> Result<Self> {
        Self::from_indices(ImageIndex::new(head)?, ImageIndex::new(dependent)?)
    }

    pub fn from_indices(head: ImageIndex, dependent: ImageIndex) -> Result<Self> {
        if head == dependent {
            return Err(Error::SelfLoop(head));
        }
        Ok(AssociativePair { head, dependent })
    }

    pub fn head(self) -> ImageIndex {
        self.head
    }

    pub fn dependent(self) -> ImageIndex {
        self.dependent
    }

    /// `dependent\head`. Always valid since the pair is never a self-loop.
    pub fn reversed(self) -> Self {
        AssociativePair {
            head: self.dependent,
            dependent: self.head,
        }
    }
}

impl fmt::Display for AssociativePair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}\\{}", self.head, self.dependent)
    }
}

/// A ⊕-combination of associative pairs.
///
/// The derivation order (`pairs`) is kept because linearization and traces
/// depend on it. Identity is the duplicate-free `canonical` set, so equality
/// ignores both order and multiplicity. The empty term stands for ∅ and is
/// the unit of ⊕.
#[derive(Debug, Clone, Default)]
pub struct AnfTerm {
    pairs: Vec<AssociativePair>,
    canonical: BTreeSet<AssociativePair>,
}

impl AnfTerm {
    pub fn empty() -> Self {
        AnfTerm::default()
    }

    pub fn elementary(pair: AssociativePair) -> Self {
        let mut term = AnfTerm::empty();
        term.push(pair);
        term
    }

    pub fn from_pairs<I: IntoIterator<Item = AssociativePair>>(pairs: I) -> Self {
        pairs.into_iter().collect()
    }

    pub fn push(&mut self, pair: AssociativePair) {
        self.pairs.push(pair);
        self.canonical.insert(pair);
    }

    /// Pairs in derivation order, duplicates included.
    pub fn pairs(&self) -> &[AssociativePair] {
        &self.pairs
    }

    pub fn canonical(&self) -> &BTreeSet<AssociativePair> {
        &self.canonical
    }

    pub fn contains(&self, pair: AssociativePair) -> bool {
        self.canonical.contains(&pair)
    }

    /// Number of distinct pairs.
    pub fn len(&self) -> usize {
        self.canonical.len()
    }

    pub fn is_empty(&self) -> bool {
        self.canonical.is_empty()
    }

    /// Every image index mentioned by some pair.
    pub fn images(&self) -> BTreeSet<ImageIndex> {
        self.canonical
            .iter()
            .flat_map(|p| [p.head, p.dependent])
            .collect()
    }

    /// `self ⊕ other`: derivation orders are concatenated, canonical sets united.
    pub fn oplus(&self, other: &AnfTerm) -> AnfTerm {
        let mut pairs = Vec::with_capacity(self.pairs.len() + other.pairs.len());
        pairs.extend_from_slice(&self.pairs);
        pairs.extend_from_slice(&other.pairs);
        let canonical = self.canonical.union(&other.canonical).copied().collect();
        AnfTerm { pairs, canonical }
    }

    /// Collapses `p ⊕ p` to `p`, keeping the first occurrence of each pair.
    pub fn reduce(&self) -> AnfTerm {
        let mut seen = BTreeSet::new();
        let pairs = self
            .pairs
            .iter()
            .copied()
            .filter(|p| seen.insert(*p))
            .collect();
        AnfTerm {
            pairs,
            canonical: self.canonical.clone(),
        }
    }

    pub fn is_reduced(&self) -> bool {
        self.pairs.len() == self.canonical.len()
    }

    pub fn canonical_eq(&self, other: &AnfTerm) -> bool {
        self.canonical == other.canonical
    }

    /// Canonical pairs in reduced derivation order.
    pub fn iter(&self) -> impl Iterator<Item = AssociativePair> + '_ {
        let mut seen = BTreeSet::new();
        self.pairs.iter().copied().filter(move |p| seen.insert(*p))
    }
}

impl PartialEq for AnfTerm {
    fn eq(&self, other: &Self) -> bool {
        self.canonical_eq(other)
    }
}

impl Eq for AnfTerm {}

impl FromIterator<AssociativePair> for AnfTerm {
    fn from_iter<I: IntoIterator<Item = AssociativePair>>(iter: I) -> Self {
        let mut term = AnfTerm::empty();
        term.extend(iter);
        term
    }
}

impl Extend<AssociativePair> for AnfTerm {
    fn extend<I: IntoIterator<Item = AssociativePair>>(&mut self, iter: I) {
        for pair in iter {
            self.push(pair);
        }
    }
}

impl Add for AnfTerm {
    type Output = AnfTerm;

    fn add(self, rhs: AnfTerm) -> AnfTerm {
        self.oplus(&rhs)
    }
}

impl From<AssociativePair> for AnfTerm {
    fn from(pair: AssociativePair) -> Self {
        AnfTerm::elementary(pair)
    }
}

/// Index rendering, `x3\x1 (+) x3\x2`, after reduction. ∅ for the empty term.
impl fmt::Display for AnfTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str("∅");
        }
        for (n, pair) in self.iter().enumerate() {
            if n > 0 {
                f.write_str(" (+) ")?;
            }
            write!(f, "{pair}")?;
        }
        Ok(())
    }
}

/// Subject-predicate relation `i × j = (i\j) ⊕ (j\i)`.
pub fn cross(i: usize, j: usize) -> Result<AnfTerm> {
    let forward = AssociativePair::new(i, j)?;
    Ok(AnfTerm::from_pairs([forward, forward.reversed()]))
}
