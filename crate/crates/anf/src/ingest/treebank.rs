//! Content-word view of 10-column dependency treebank sentences.
//!
//! Function words are dropped, survivors renumbered, and heads re-attached
//! to the nearest surviving ancestor. The root then takes its nominal
//! subject as head, which closes the subject-predicate cycle. A missing
//! subject or predicate is filled in with a placeholder image.

use std::collections::BTreeSet;

use anf_core::{EncodedSyntagma, SyntagmaDraft};

use super::blocks;
use crate::{IngestError, IngestErrorKind};

/// Which tokens count as function words, and which relations and tags
/// identify the subject-predicate roles.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TreebankConfig {
    /// Part-of-speech tags dropped before encoding.
    pub function_tags: BTreeSet<String>,
    /// Dependency relations (before any `:` subtype) marking the subject.
    pub subject_relations: BTreeSet<String>,
    /// Tags of a subject-less root that make it a subject rather than a
    /// predicate.
    pub nominal_tags: BTreeSet<String>,
}

fn set(items: &[&str]) -> BTreeSet<String> {
    items.iter().map(|s| s.to_string()).collect()
}

impl Default for TreebankConfig {
    fn default() -> Self {
        TreebankConfig {
            function_tags: set(&["PUNCT", "ADP", "PART", "DET", "AUX"]),
            subject_relations: set(&["nsubj"]),
            nominal_tags: set(&["NOUN", "PROPN", "PRON", "NUM"]),
        }
    }
}

impl TreebankConfig {
    pub fn with_function_tags<I, S>(mut self, tags: I) -> Self
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        self.function_tags = tags.into_iter().map(Into::into).collect();
        self
    }
}

#[derive(Debug)]
struct Token<'a> {
    line: usize,
    form: &'a str,
    upos: &'a str,
    head: usize,
    deprel: &'a str,
}

pub fn parse_treebank_subset(
    text: &str,
    config: &TreebankConfig,
) -> Result<EncodedSyntagma, IngestError> {
    let lines: Vec<&str> = text.lines().collect();
    parse_block(&lines, 1, config)
}

pub fn parse_treebank_document(
    text: &str,
    config: &TreebankConfig,
) -> Result<Vec<EncodedSyntagma>, IngestError> {
    blocks(text)
        .into_iter()
        .filter(|b| b.lines.iter().any(|l| !l.starts_with('#')))
        .map(|b| parse_block(&b.lines, b.first_line, config))
        .collect()
}

fn parse_block(
    lines: &[&str],
    first_line: usize,
    config: &TreebankConfig,
) -> Result<EncodedSyntagma, IngestError> {
    let tokens = read_tokens(lines, first_line)?;
    let block_line = tokens.first().map_or(first_line, |t| t.line);
    let whole = |kind| IngestError::at(block_line, kind);
    let n = tokens.len();

    let keep: Vec<bool> = tokens
        .iter()
        .map(|t| !config.function_tags.contains(t.upos))
        .collect();
    // new 1-based index of each surviving token, by original position
    let mut renumber = vec![0usize; n + 1];
    let mut next = 0;
    for (pos, &k) in keep.iter().enumerate() {
        if k {
            next += 1;
            renumber[pos + 1] = next;
        }
    }
    if next == 0 {
        return Err(whole(IngestErrorKind::NoContentWords));
    }

    let roots: Vec<usize> = (1..=n).filter(|&id| tokens[id - 1].head == 0).collect();
    let root = match roots[..] {
        [] => return Err(whole(IngestErrorKind::MissingRoot)),
        [r] => r,
        _ => {
            return Err(IngestError::at(
                tokens[roots[1] - 1].line,
                IngestErrorKind::MultipleRoots,
            ))
        }
    };
    if !keep[root - 1] {
        return Err(IngestError::at(
            tokens[root - 1].line,
            IngestErrorKind::DroppedRoot,
        ));
    }

    // nearest surviving ancestor, in original ids
    let mut heads = vec![0usize; n + 1];
    for id in (1..=n).filter(|&id| keep[id - 1] && id != root) {
        let mut h = tokens[id - 1].head;
        let mut steps = 0;
        while h != 0 && !keep[h - 1] {
            h = tokens[h - 1].head;
            steps += 1;
            if steps > n {
                return Err(IngestError::at(
                    tokens[id - 1].line,
                    IngestErrorKind::CyclicHeads,
                ));
            }
        }
        if h == 0 {
            return Err(IngestError::at(
                tokens[id - 1].line,
                IngestErrorKind::CyclicHeads,
            ));
        }
        heads[id] = h;
    }
    // every survivor must hang from the root
    for id in (1..=n).filter(|&id| keep[id - 1]) {
        let mut cur = id;
        let mut steps = 0;
        while cur != root {
            cur = heads[cur];
            steps += 1;
            if cur == 0 || steps > n {
                return Err(IngestError::at(
                    tokens[id - 1].line,
                    IngestErrorKind::CyclicHeads,
                ));
            }
        }
    }

    let subject = (1..=n).find(|&id| {
        keep[id - 1]
            && heads[id] == root
            && config
                .subject_relations
                .contains(base_relation(tokens[id - 1].deprel))
    });

    let mut draft = SyntagmaDraft::new();
    for id in (1..=n).filter(|&id| keep[id - 1]) {
        let head = if id == root { subject } else { Some(heads[id]) };
        draft.push(tokens[id - 1].form, head.map(|h| renumber[h]));
    }
    let (has_subject, has_predicate) = match subject {
        Some(_) => (true, true),
        None if config.nominal_tags.contains(tokens[root - 1].upos) => (true, false),
        None => (false, true),
    };
    draft
        .ensure_subject_predicate(has_subject, has_predicate)
        .map_err(|e| whole(e.into()))
}

fn base_relation(deprel: &str) -> &str {
    deprel.split(':').next().unwrap_or(deprel)
}

fn read_tokens<'a>(lines: &[&'a str], first_line: usize) -> Result<Vec<Token<'a>>, IngestError> {
    let mut tokens = Vec::new();
    for (n, raw) in lines.iter().enumerate() {
        let line = first_line + n;
        if raw.starts_with('#') || raw.trim().is_empty() {
            continue;
        }
        let cols: Vec<&str> = raw.split('\t').collect();
        if cols.len() != 10 {
            return Err(IngestError::at(
                line,
                IngestErrorKind::Malformed(format!(
                    "expected 10 tab-separated columns, found {}",
                    cols.len()
                )),
            ));
        }
        // multiword ranges and empty nodes carry no head of their own
        if cols[0].contains('-') || cols[0].contains('.') {
            continue;
        }
        let number = |field: &str, what: &str| {
            field.parse::<usize>().map_err(|_| {
                IngestError::at(
                    line,
                    IngestErrorKind::Malformed(format!("{what} {field:?} is not a number")),
                )
            })
        };
        let id = number(cols[0], "id")?;
        let expected = tokens.len() + 1;
        if id != expected {
            return Err(IngestError::at(
                line,
                IngestErrorKind::Gap {
                    expected,
                    found: id,
                },
            ));
        }
        let head = number(cols[6], "head")?;
        if head == id {
            return Err(IngestError::at(line, IngestErrorKind::SelfHead));
        }
        tokens.push(Token {
            line,
            form: cols[1],
            upos: cols[3],
            head,
            deprel: cols[7],
        });
    }
    if let Some(t) = tokens.iter().find(|t| t.head > tokens.len()) {
        return Err(IngestError::at(
            t.line,
            IngestErrorKind::HeadOutOfRange {
                head: t.head,
                len: tokens.len(),
            },
        ));
    }
    Ok(tokens)
}
