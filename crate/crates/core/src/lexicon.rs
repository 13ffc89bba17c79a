//! Interrogative labels for selected pairs.

use alloc::collections::BTreeMap;
use alloc::string::String;

use crate::{AssociativePair, EncodedSyntagma, DEFAULT_LABEL};

/// Label lookup keyed by index pair or by dependent lexeme.
///
/// An index-pair entry beats a lexeme entry, which beats the default label.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PronounLexicon {
    by_pair: BTreeMap<AssociativePair, String>,
    by_lexeme: BTreeMap<String, String>,
    default_label: String,
}

impl Default for PronounLexicon {
    fn default() -> Self {
        PronounLexicon {
            by_pair: BTreeMap::new(),
            by_lexeme: BTreeMap::new(),
            default_label: String::from(DEFAULT_LABEL),
        }
    }
}

impl PronounLexicon {
    pub fn new() -> Self {
        Self::default()
    }

    /// Returns the previous label for this key, if any.
    pub fn insert_pair(
        &mut self,
        pair: AssociativePair,
        label: impl Into<String>,
    ) -> Option<String> {
        self.by_pair.insert(pair, label.into())
    }

    pub fn insert_lexeme(
        &mut self,
        lexeme: impl Into<String>,
        label: impl Into<String>,
    ) -> Option<String> {
        self.by_lexeme.insert(lexeme.into(), label.into())
    }

    pub fn set_default(&mut self, label: impl Into<String>) {
        self.default_label = label.into();
    }

    pub fn default_label(&self) -> &str {
        &self.default_label
    }

    pub fn pair_entries(&self) -> impl Iterator<Item = (&AssociativePair, &String)> {
        self.by_pair.iter()
    }

    pub fn lexeme_entries(&self) -> impl Iterator<Item = (&String, &String)> {
        self.by_lexeme.iter()
    }

    pub fn lookup_label(&self, pair: AssociativePair, syntagma: &EncodedSyntagma) -> &str {
        if let Some(label) = self.by_pair.get(&pair) {
            return label;
        }
        syntagma
            .lexeme(pair.dependent())
            .and_then(|l| self.by_lexeme.get(l))
            .unwrap_or(&self.default_label)
    }
}
