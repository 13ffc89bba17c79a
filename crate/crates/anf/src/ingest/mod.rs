//! Input adapters.
//!
//! Documents may hold several sentences separated by blank lines; every
//! error carries the line number within the whole document.

mod lexicon;
mod native;
mod treebank;

pub use lexicon::{parse_lexicon, render_lexicon};
pub use native::{parse_native, parse_native_document, render_native};
pub use treebank::{parse_treebank_document, parse_treebank_subset, TreebankConfig};

/// One sentence block: the line number of its first line and its lines.
pub(crate) struct Block<'a> {
    pub first_line: usize,
    pub lines: Vec<&'a str>,
}

/// Splits on blank lines, dropping empty blocks.
pub(crate) fn blocks(text: &str) -> Vec<Block<'_>> {
    let mut out = Vec::new();
    let mut current: Option<Block<'_>> = None;
    for (n, line) in text.lines().enumerate() {
        if line.trim().is_empty() {
            out.extend(current.take());
            continue;
        }
        current
            .get_or_insert_with(|| Block {
                first_line: n + 1,
                lines: Vec::new(),
            })
            .lines
            .push(line);
    }
    out.extend(current);
    out
}

/// True when some non-comment line has the ten tab-separated treebank columns.
pub fn looks_like_treebank(text: &str) -> bool {
    text.lines()
        .filter(|l| !l.starts_with('#') && !l.trim().is_empty())
        .any(|l| l.split('\t').count() == 10)
}
