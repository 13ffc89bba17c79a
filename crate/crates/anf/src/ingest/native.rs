//! Native format: `index<TAB>lexeme<TAB>head`, one word per line, plus
//! optional `#group: i,j -> h` coordination lines. Other `#` lines are
//! comments.

use anf_core::{CoordinationGroup, EncodedSyntagma};

use super::blocks;
use crate::{IngestError, IngestErrorKind};

const GROUP_PREFIX: &str = "#group:";

/// Parses a single sentence.
pub fn parse_native(text: &str) -> Result<EncodedSyntagma, IngestError> {
    let lines: Vec<&str> = text.lines().collect();
    parse_lines(&lines, 1)
}

/// Parses every blank-line separated sentence of a document.
pub fn parse_native_document(text: &str) -> Result<Vec<EncodedSyntagma>, IngestError> {
    blocks(text)
        .into_iter()
        .map(|b| parse_lines(&b.lines, b.first_line))
        .collect()
}

struct Word<'a> {
    line: usize,
    lexeme: &'a str,
    head: usize,
}

fn parse_lines(lines: &[&str], first_line: usize) -> Result<EncodedSyntagma, IngestError> {
    let mut words: Vec<Word<'_>> = Vec::new();
    let mut groups: Vec<(usize, CoordinationGroup)> = Vec::new();
    for (n, raw) in lines.iter().enumerate() {
        let line = first_line + n;
        if raw.trim().is_empty() {
            continue;
        }
        if let Some(rest) = raw.strip_prefix(GROUP_PREFIX) {
            let group = parse_group(rest).map_err(|k| IngestError::at(line, k))?;
            groups.push((line, group));
            continue;
        }
        if raw.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = raw.split('\t').collect();
        let [index, lexeme, head] = fields[..] else {
            return Err(IngestError::at(
                line,
                IngestErrorKind::Malformed(format!(
                    "expected 3 tab-separated fields, found {}",
                    fields.len()
                )),
            ));
        };
        let index = parse_number(index, "index").map_err(|k| IngestError::at(line, k))?;
        let head = parse_number(head, "head").map_err(|k| IngestError::at(line, k))?;
        let expected = words.len() + 1;
        if index != expected {
            let kind = if index >= 1 && index < expected {
                IngestErrorKind::DuplicateIndex(index)
            } else {
                IngestErrorKind::Gap {
                    expected,
                    found: index,
                }
            };
            return Err(IngestError::at(line, kind));
        }
        if lexeme.is_empty() {
            return Err(IngestError::at(
                line,
                IngestErrorKind::Malformed("empty lexeme".into()),
            ));
        }
        if head == index {
            return Err(IngestError::at(line, IngestErrorKind::SelfHead));
        }
        words.push(Word { line, lexeme, head });
    }
    if words.is_empty() {
        return Err(IngestError::at(first_line, IngestErrorKind::NoContentWords));
    }
    let len = words.len();
    if let Some(w) = words.iter().find(|w| w.head == 0 || w.head > len) {
        return Err(IngestError::at(
            w.line,
            IngestErrorKind::HeadOutOfRange { head: w.head, len },
        ));
    }
    for (line, g) in &groups {
        let shared = g.shared_head();
        let out_of_range = g.members().iter().chain([&shared]).find(|m| m.get() > len);
        if let Some(m) = out_of_range {
            return Err(IngestError::at(
                *line,
                IngestErrorKind::HeadOutOfRange { head: m.get(), len },
            ));
        }
    }
    let groups = groups.into_iter().map(|(_, g)| g).collect();
    Ok(EncodedSyntagma::encode(
        words.iter().map(|w| (w.lexeme, w.head)),
        groups,
    )?)
}

fn parse_number(field: &str, what: &str) -> Result<usize, IngestErrorKind> {
    field
        .trim()
        .parse()
        .map_err(|_| IngestErrorKind::Malformed(format!("{what} {field:?} is not a number")))
}

fn parse_group(rest: &str) -> Result<CoordinationGroup, IngestErrorKind> {
    let Some((members, head)) = rest.split_once("->") else {
        return Err(IngestErrorKind::Malformed(
            "group needs `members -> head`".into(),
        ));
    };
    let members = members
        .split(',')
        .map(|m| parse_number(m, "group member"))
        .collect::<Result<Vec<_>, _>>()?;
    let head = parse_number(head, "group head")?;
    Ok(CoordinationGroup::new(members, head)?)
}

/// Writes a syntagma back in the native format; `parse_native` inverts it.
pub fn render_native(s: &EncodedSyntagma) -> String {
    let mut out = String::new();
    for (image, head) in s.entries() {
        out.push_str(&format!(
            "{}\t{}\t{}\n",
            image.index().get(),
            image.lexeme(),
            head.get()
        ));
    }
    for g in s.groups() {
        let members: Vec<String> = g.members().iter().map(|m| m.get().to_string()).collect();
        out.push_str(&format!(
            "{GROUP_PREFIX} {} -> {}\n",
            members.join(","),
            g.shared_head().get()
        ));
    }
    out
}
