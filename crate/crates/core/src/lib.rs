//! Associative normal form (ANF) of natural-language image constructions.
//!
//! A syntagma is a sentence reduced to its meaningful words. Each word is an
//! *image* and each word names the image that governs it. Rewriting that
//! encoding yields a ⊕-combination of directed *associative pairs*
//! `head\dependent`, which behaves as a commutative idempotent semigroup.
//! Selecting one pair splits the term into a question, the selected
//! interrogative pair, and an answer, which can then be linearized into a
//! surface question line.
//!
//! ```
//! use anf_core::{qa, EncodedSyntagma, ImageIndex, AssociativePair};
//!
//! let s = EncodedSyntagma::encode(
//!     [("once", 3), ("I", 3), ("saw", 2), ("little", 5), ("bird", 3)],
//!     Vec::new(),
//! )
//! .unwrap();
//! let anf = s.to_anf();
//! let selected = AssociativePair::new(3, 1).unwrap();
//! let part = qa::partition(&anf, selected).unwrap();
//! let line = qa::linearize(&part, "when?");
//! assert_eq!(line.render(&s), "when? saw I bird little ? once");
//! # let _ = ImageIndex::new(1);
//! ```
//!
//! The crate is `no_std` and only needs `alloc`. File formats, export and the
//! command-line front end live in the companion `anf` crate.

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

mod error;
pub mod graph;
pub mod lexicon;
pub mod normalize;
pub mod qa;
mod syntagma;
mod term;

pub use error::Error;
pub use graph::ImageGraph;
pub use lexicon::PronounLexicon;
pub use normalize::{Derivation, DerivationStep, Product, SyntagmaDraft};
pub use qa::{LinearQa, QaPartition};
pub use syntagma::{CoordinationGroup, EncodedSyntagma, Image, Placeholder};
pub use term::{cross, AnfTerm, AssociativePair, ImageIndex};

/// Default interrogative label used when no lexicon entry matches.
pub const DEFAULT_LABEL: &str = "which?";

pub type Result<T, E = Error> = core::result::Result<T, E>;
