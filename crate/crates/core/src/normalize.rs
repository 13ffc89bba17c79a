//! Rewriting a Rule-1 encoded syntagma into associative normal form.
//!
//! Every entry `(x_i, j)` yields the elementary term `x_j\x_i`. Interior
//! entries use the string-splitting product (3.12), the last entry the
//! finishing product (3.13); both emit the same pair, so the distinction only
//! shows up in the step trace. Duplicate pairs are then collapsed (3.14).
//!
//! Homogeneous parts are handled before emission: every member of a
//! coordination group is attached to the shared head, and whenever a member
//! governs some image, every other member governs it as well.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::{AnfTerm, AssociativePair, EncodedSyntagma, Error, ImageIndex, Placeholder, Result};

/// Product applied at one derivation step.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Product {
    /// `x_i j x_k -> x_j\x_i ⊕ x_k`
    Split,
    /// `x_i j -> x_j\x_i`
    Finish,
    /// `x_i\x_j ⊕ x_i\x_j -> x_i\x_j`
    Reduce,
}

impl fmt::Display for Product {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Product::Split => "3.12",
            Product::Finish => "3.13",
            Product::Reduce => "3.14",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DerivationStep {
    pub product: Product,
    /// Position of the entry the product was applied to.
    pub position: ImageIndex,
    /// The entry pair followed by any coordination extras it triggered.
    pub emitted: Vec<AssociativePair>,
}

/// Step-by-step rewrite of one syntagma, ending in the reduced term.
#[derive(Debug, Clone)]
pub struct Derivation {
    expanded: EncodedSyntagma,
    steps: Vec<DerivationStep>,
    result: AnfTerm,
}

impl Derivation {
    pub fn steps(&self) -> &[DerivationStep] {
        &self.steps
    }

    /// The syntagma after homogeneous-part expansion.
    pub fn expanded(&self) -> &EncodedSyntagma {
        &self.expanded
    }

    pub fn result(&self) -> &AnfTerm {
        &self.result
    }

    pub fn into_result(self) -> AnfTerm {
        self.result
    }

    /// Trace lines `3.12: <remaining-string> => <pairs-so-far>`, one per
    /// entry, then `3.14: <reduced ANF>`.
    ///
    /// The remaining string starts at the entry being rewritten.
    pub fn trace_lines(&self) -> Vec<String> {
        let mut lines = Vec::with_capacity(self.steps.len() + 1);
        let mut so_far: Vec<String> = Vec::new();
        for step in &self.steps {
            so_far.extend(step.emitted.iter().map(|p| format!("{p}")));
            lines.push(format!(
                "{}: {} => {}",
                step.product,
                render_encoding(&self.expanded, step.position),
                so_far.join(" (+) ")
            ));
        }
        lines.push(format!("{}: {}", Product::Reduce, self.result));
        lines
    }
}

/// Rule-1 string from `start` onwards, e.g. `x4 5 x5 3`.
pub fn render_encoding(s: &EncodedSyntagma, start: ImageIndex) -> String {
    let parts: Vec<String> = s
        .entries()
        .skip(start.get() - 1)
        .map(|(image, head)| format!("{} {}", image.index(), head.get()))
        .collect();
    parts.join(" ")
}

/// Attaches every coordination member to its group's shared head.
pub fn expand_homogeneous(s: &EncodedSyntagma) -> EncodedSyntagma {
    if s.groups().is_empty() {
        return s.clone();
    }
    let mut heads: Vec<ImageIndex> = s.entries().map(|(_, h)| h).collect();
    for group in s.groups() {
        for m in group.members() {
            heads[m.get() - 1] = group.shared_head();
        }
    }
    s.with_heads(heads)
}

/// Full derivation with per-entry steps.
pub fn derive(s: &EncodedSyntagma) -> Derivation {
    let expanded = expand_homogeneous(s);
    let last = expanded.len();
    let mut steps = Vec::with_capacity(last);
    let mut term = AnfTerm::empty();
    for (image, head) in expanded.entries() {
        let dependent = image.index();
        // validated: head != dependent
        let pair = AssociativePair::from_indices(head, dependent).expect("validated entry");
        let mut emitted = Vec::from([pair]);
        for group in expanded.groups() {
            if !group.members().contains(&head) {
                continue;
            }
            for &other in group.members() {
                if other != head && other != dependent {
                    emitted
                        .push(AssociativePair::from_indices(other, dependent).expect("distinct"));
                }
            }
        }
        term.extend(emitted.iter().copied());
        let product = if dependent.get() == last {
            Product::Finish
        } else {
            Product::Split
        };
        steps.push(DerivationStep {
            product,
            position: dependent,
            emitted,
        });
    }
    Derivation {
        expanded,
        steps,
        result: term.reduce(),
    }
}

/// Reduced ANF of a syntagma, pairs in entry order.
pub fn to_anf(s: &EncodedSyntagma) -> AnfTerm {
    derive(s).into_result()
}

impl EncodedSyntagma {
    pub fn to_anf(&self) -> AnfTerm {
        to_anf(self)
    }

    pub fn derive(&self) -> Derivation {
        derive(self)
    }
}

/// Word list in which some words may still lack a head: the input to
/// placeholder injection.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SyntagmaDraft {
    words: Vec<(String, Option<usize>)>,
    groups: Vec<crate::CoordinationGroup>,
}

impl SyntagmaDraft {
    pub fn new() -> Self {
        SyntagmaDraft::default()
    }

    pub fn push(&mut self, lexeme: impl Into<String>, head: Option<usize>) -> &mut Self {
        self.words.push((lexeme.into(), head));
        self
    }

    pub fn with_group(mut self, group: crate::CoordinationGroup) -> Self {
        self.groups.push(group);
        self
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    /// Completes the draft with `<Y>`/`<Z>` images for whichever role is
    /// missing and wires the subject-predicate cycle.
    ///
    /// The single unattached word is the present role: the predicate when the
    /// subject is missing, the subject when the predicate is missing. With
    /// both roles missing, `<Y>` and `<Z>` form the cycle and unattached words
    /// hang off `<Z>`. Placeholders are appended after the last word.
    pub fn ensure_subject_predicate(
        self,
        has_subject: bool,
        has_predicate: bool,
    ) -> Result<EncodedSyntagma> {
        let SyntagmaDraft { mut words, groups } = self;
        let k = words.len();
        let unattached: Vec<usize> = (0..k).filter(|&n| words[n].1.is_none()).collect();
        let require_anchor = |unattached: &[usize]| match unattached {
            [one] => Ok(*one),
            _ => Err(Error::UnattachedWords {
                count: unattached.len(),
            }),
        };
        match (has_subject, has_predicate) {
            (true, true) => {
                if !unattached.is_empty() {
                    return Err(Error::UnattachedWords {
                        count: unattached.len(),
                    });
                }
            }
            (false, true) | (true, false) => {
                let anchor = require_anchor(&unattached)?;
                let lexeme = if has_predicate {
                    Placeholder::SUBJECT_LEXEME
                } else {
                    Placeholder::PREDICATE_LEXEME
                };
                words[anchor].1 = Some(k + 1);
                words.push((String::from(lexeme), Some(anchor + 1)));
            }
            (false, false) => {
                let (y, z) = (k + 1, k + 2);
                for n in unattached {
                    words[n].1 = Some(z);
                }
                words.push((String::from(Placeholder::SUBJECT_LEXEME), Some(z)));
                words.push((String::from(Placeholder::PREDICATE_LEXEME), Some(y)));
            }
        }
        let words = words
            .into_iter()
            .map(|(l, h)| (l, h.expect("all words attached")));
        EncodedSyntagma::encode(words, groups)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::CoordinationGroup;
    use alloc::vec;

    fn p(h: usize, d: usize) -> AssociativePair {
        AssociativePair::new(h, d).unwrap()
    }

    fn example_one() -> EncodedSyntagma {
        EncodedSyntagma::encode(
            [
                ("once", 3),
                ("I", 3),
                ("saw", 2),
                ("little", 5),
                ("bird", 3),
            ],
            vec![],
        )
        .unwrap()
    }

    #[test]
    fn example_one_anf() {
        let s = example_one();
        let anf = s.to_anf();
        assert_eq!(anf.pairs(), &[p(3, 1), p(3, 2), p(2, 3), p(5, 4), p(3, 5)]);
        assert_eq!(
            s.render_term(&anf),
            "saw\\once (+) saw\\I (+) I\\saw (+) bird\\little (+) saw\\bird"
        );
    }

    #[test]
    fn example_two_anf() {
        let s = EncodedSyntagma::encode(
            [
                ("забытую", 2),
                ("песню", 3),
                ("несет", 4),
                ("ветерок", 3),
                ("задумчивых", 6),
                ("травах", 7),
                ("звеня", 3),
            ],
            vec![],
        )
        .unwrap();
        let anf = s.to_anf();
        assert_eq!(
            anf.pairs(),
            &[
                p(2, 1),
                p(3, 2),
                p(4, 3),
                p(3, 4),
                p(6, 5),
                p(7, 6),
                p(3, 7)
            ]
        );
    }

    #[test]
    fn minimal_cycle() {
        let s = EncodedSyntagma::encode([("A", 2), ("B", 1)], vec![]).unwrap();
        assert_eq!(s.to_anf().pairs(), &[p(2, 1), p(1, 2)]);
    }

    #[test]
    fn trace_example_one() {
        let lines = example_one().derive().trace_lines();
        assert_eq!(
            lines,
            [
                "3.12: x1 3 x2 3 x3 2 x4 5 x5 3 => x3\\x1",
                "3.12: x2 3 x3 2 x4 5 x5 3 => x3\\x1 (+) x3\\x2",
                "3.12: x3 2 x4 5 x5 3 => x3\\x1 (+) x3\\x2 (+) x2\\x3",
                "3.12: x4 5 x5 3 => x3\\x1 (+) x3\\x2 (+) x2\\x3 (+) x5\\x4",
                "3.13: x5 3 => x3\\x1 (+) x3\\x2 (+) x2\\x3 (+) x5\\x4 (+) x3\\x5",
                "3.14: x3\\x1 (+) x3\\x2 (+) x2\\x3 (+) x5\\x4 (+) x3\\x5",
            ]
        );
    }

    /// `(x_1 & x_2) 3`: both members receive the shared head.
    #[test]
    fn homogeneous_shared_head() {
        let g = CoordinationGroup::new([1, 2], 3).unwrap();
        // word 2 initially points elsewhere; the group overrides it
        let s = EncodedSyntagma::encode([("cats", 3), ("dogs", 1), ("run", 1)], vec![g]).unwrap();
        let expanded = expand_homogeneous(&s);
        let heads: Vec<usize> = expanded.entries().map(|(_, h)| h.get()).collect();
        assert_eq!(heads, [3, 3, 1]);
        let anf = s.to_anf();
        // run\cats, run\dogs, cats\run, then the extra dogs\run
        assert_eq!(anf.pairs(), &[p(3, 1), p(3, 2), p(1, 3), p(2, 3)]);
    }

    /// A member governing an image outside the subject cycle also spreads.
    #[test]
    fn homogeneous_member_heads_other_image() {
        let g = CoordinationGroup::new([2, 3], 1).unwrap();
        let s =
            EncodedSyntagma::encode([("saw", 2), ("cats", 1), ("dogs", 1), ("big", 2)], vec![g])
                .unwrap();
        let anf = s.to_anf();
        assert_eq!(
            anf.pairs(),
            &[p(2, 1), p(3, 1), p(1, 2), p(1, 3), p(2, 4), p(3, 4)]
        );
        let trace = s.derive();
        assert_eq!(trace.steps()[3].emitted, [p(2, 4), p(3, 4)]);
    }

    #[test]
    fn no_groups_is_identity() {
        let s = example_one();
        assert_eq!(expand_homogeneous(&s), s);
    }

    #[test]
    fn ensure_complete_is_identity() {
        let mut d = SyntagmaDraft::new();
        d.push("A", Some(2)).push("B", Some(1));
        let s = d.ensure_subject_predicate(true, true).unwrap();
        assert_eq!(
            s,
            EncodedSyntagma::encode([("A", 2), ("B", 1)], vec![]).unwrap()
        );
    }

    #[test]
    fn ensure_adds_subject() {
        let mut d = SyntagmaDraft::new();
        d.push("run", None);
        let s = d.ensure_subject_predicate(false, true).unwrap();
        assert_eq!(s.len(), 2);
        assert_eq!(s.images()[1].placeholder(), Placeholder::UnknownSubject);
        let anf = s.to_anf();
        assert_eq!(anf, crate::cross(1, 2).unwrap());
    }

    #[test]
    fn ensure_adds_predicate() {
        let mut d = SyntagmaDraft::new();
        d.push("little", Some(2)).push("bird", None);
        let s = d.ensure_subject_predicate(true, false).unwrap();
        assert_eq!(s.len(), 3);
        assert_eq!(s.images()[2].placeholder(), Placeholder::UnknownPredicate);
        let anf = s.to_anf();
        assert_eq!(anf.pairs(), &[p(2, 1), p(3, 2), p(2, 3)]);
    }

    #[test]
    fn ensure_adds_both() {
        let mut d = SyntagmaDraft::new();
        d.push("hello", None);
        let s = d.ensure_subject_predicate(false, false).unwrap();
        assert_eq!(s.len(), 3);
        assert_eq!(s.to_anf().pairs(), &[p(3, 1), p(3, 2), p(2, 3)]);
    }

    #[test]
    fn ensure_requires_single_anchor() {
        let mut d = SyntagmaDraft::new();
        d.push("a", None).push("b", None);
        assert_eq!(
            d.clone().ensure_subject_predicate(false, true),
            Err(Error::UnattachedWords { count: 2 })
        );
        assert_eq!(
            d.ensure_subject_predicate(true, true),
            Err(Error::UnattachedWords { count: 2 })
        );
    }
}
