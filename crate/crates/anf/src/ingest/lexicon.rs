//! Lexicon files: `key<TAB>label` lines where the key is either an index
//! pair `h,d` or a dependent lexeme, plus `@default<TAB>label`.

use std::collections::BTreeSet;

use anf_core::{AssociativePair, PronounLexicon};

use crate::{IngestError, IngestErrorKind};

const DEFAULT_KEY: &str = "@default";

fn pair_key(key: &str) -> Option<(usize, usize)> {
    let (h, d) = key.split_once(',')?;
    Some((h.trim().parse().ok()?, d.trim().parse().ok()?))
}

pub fn parse_lexicon(text: &str) -> Result<PronounLexicon, IngestError> {
    let mut lex = PronounLexicon::new();
    let mut keys = BTreeSet::new();
    for (n, raw) in text.lines().enumerate() {
        let line = n + 1;
        if raw.trim().is_empty() || raw.starts_with('#') {
            continue;
        }
        let Some((key, label)) = raw.split_once('\t') else {
            return Err(IngestError::at(
                line,
                IngestErrorKind::Malformed("expected key<TAB>label".into()),
            ));
        };
        let label = label.trim();
        if key.is_empty() || label.is_empty() {
            return Err(IngestError::at(
                line,
                IngestErrorKind::Malformed("empty key or label".into()),
            ));
        }
        if !keys.insert(key.to_string()) {
            return Err(IngestError::at(
                line,
                IngestErrorKind::DuplicateKey(key.to_string()),
            ));
        }
        if key == DEFAULT_KEY {
            lex.set_default(label);
        } else if let Some((h, d)) = pair_key(key) {
            let pair = AssociativePair::new(h, d).map_err(|e| IngestError::at(line, e.into()))?;
            lex.insert_pair(pair, label);
        } else {
            lex.insert_lexeme(key, label);
        }
    }
    Ok(lex)
}

pub fn render_lexicon(lex: &PronounLexicon) -> String {
    let mut out = format!("{DEFAULT_KEY}\t{}\n", lex.default_label());
    for (pair, label) in lex.pair_entries() {
        out.push_str(&format!(
            "{},{}\t{label}\n",
            pair.head().get(),
            pair.dependent().get()
        ));
    }
    for (lexeme, label) in lex.lexeme_entries() {
        out.push_str(&format!("{lexeme}\t{label}\n"));
    }
    out
}
