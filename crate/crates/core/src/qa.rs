//! Interrogative partition of an ANF term and its linear surface form.
//!
//! Selecting a pair `x_i\x_j` as the interrogative pair splits the term into
//! the answer (everything reachable from `x_j`, without crossing the selected
//! pair or its reverse `x_j\x_i`) and the question (everything else).
//! Linearization walks each part in depth-first preorder and keeps the first
//! occurrence of every image.

use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::vec::Vec;

use crate::{AnfTerm, AssociativePair, EncodedSyntagma, Error, ImageIndex, Result};

/// `source = question ⊕ selected ⊕ answer`, pairwise disjoint.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QaPartition {
    pub selected: AssociativePair,
    pub question: AnfTerm,
    pub answer: AnfTerm,
    pub source: AnfTerm,
}

/// Rendered form `<label> <tq> ? <ta>`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearQa {
    pub selected: AssociativePair,
    pub label: String,
    pub tq: Vec<ImageIndex>,
    pub ta: Vec<ImageIndex>,
}

impl LinearQa {
    pub fn tq_lexemes(&self, s: &EncodedSyntagma) -> Vec<String> {
        self.tq.iter().map(|&i| s.word(i)).collect()
    }

    pub fn ta_lexemes(&self, s: &EncodedSyntagma) -> Vec<String> {
        self.ta.iter().map(|&i| s.word(i)).collect()
    }

    /// Words joined by single spaces, no trailing period.
    pub fn render(&self, s: &EncodedSyntagma) -> String {
        let mut out = self.label.clone();
        for w in self.tq_lexemes(s) {
            out.push(' ');
            out.push_str(&w);
        }
        out.push_str(" ?");
        for w in self.ta_lexemes(s) {
            out.push(' ');
            out.push_str(&w);
        }
        out
    }
}

/// Depth-first walk over `pairs` that skips `blocked` arcs.
///
/// Among the dependents of a node, those linked back to it by a reverse pair
/// come first, the rest in ascending index order. Every arc leaving a visited
/// node is recorded, whether or not its target was already seen.
struct Walk<'a> {
    pairs: &'a [AssociativePair],
    present: BTreeSet<AssociativePair>,
    blocked: &'a [AssociativePair],
    visited: BTreeSet<ImageIndex>,
    preorder: Vec<ImageIndex>,
    arcs: Vec<AssociativePair>,
}

impl<'a> Walk<'a> {
    fn new(pairs: &'a [AssociativePair], blocked: &'a [AssociativePair]) -> Self {
        let present = pairs
            .iter()
            .copied()
            .filter(|p| !blocked.contains(p))
            .collect();
        Walk {
            pairs,
            present,
            blocked,
            visited: BTreeSet::new(),
            preorder: Vec::new(),
            arcs: Vec::new(),
        }
    }

    fn children(&self, node: ImageIndex) -> Vec<AssociativePair> {
        let mut out: Vec<AssociativePair> = self
            .present
            .range(first_from(node)..)
            .take_while(|p| p.head() == node)
            .copied()
            .collect();
        // BTreeSet range already yields ascending dependents; stable sort keeps that
        out.sort_by_key(|p| !self.present.contains(&p.reversed()));
        out
    }

    fn run(&mut self, start: ImageIndex) {
        if !self.visited.insert(start) {
            return;
        }
        self.preorder.push(start);
        let mut stack: Vec<(Vec<AssociativePair>, usize)> = Vec::from([(self.children(start), 0)]);
        while let Some((children, next)) = stack.last_mut() {
            let Some(&arc) = children.get(*next) else {
                stack.pop();
                continue;
            };
            *next += 1;
            self.arcs.push(arc);
            let target = arc.dependent();
            if self.visited.insert(target) {
                self.preorder.push(target);
                let grandchildren = self.children(target);
                stack.push((grandchildren, 0));
            }
        }
    }

    /// Restarts from the smallest head whose arcs were never explored.
    fn cover_rest(&mut self) {
        loop {
            let pending = self
                .pairs
                .iter()
                .filter(|p| !self.blocked.contains(p) && !self.visited.contains(&p.head()))
                .map(|p| p.head())
                .min();
            match pending {
                Some(head) => self.run(head),
                None => break,
            }
        }
    }
}

fn first_from(node: ImageIndex) -> AssociativePair {
    // smallest pair with this head; index 1 unless the head itself is 1
    let low = ImageIndex::new(1).expect("1 is positive");
    let dep = if node == low {
        ImageIndex::new(2).expect("2 is positive")
    } else {
        low
    };
    AssociativePair::from_indices(node, dep).expect("distinct")
}

/// Splits `source` around `selected`.
pub fn partition(source: &AnfTerm, selected: AssociativePair) -> Result<QaPartition> {
    if !source.contains(selected) {
        return Err(Error::PairNotFound(selected));
    }
    let pairs: Vec<AssociativePair> = source.iter().collect();
    let blocked = [selected, selected.reversed()];
    let mut walk = Walk::new(&pairs, &blocked);
    walk.run(selected.dependent());
    let answer: AnfTerm = walk.arcs.iter().copied().collect();
    let question: AnfTerm = pairs
        .iter()
        .copied()
        .filter(|&p| p != selected && !answer.contains(p))
        .collect();
    Ok(QaPartition {
        selected,
        question,
        answer,
        source: source.reduce(),
    })
}

fn preorder(term: &AnfTerm, start: ImageIndex, skip: Option<ImageIndex>) -> Vec<ImageIndex> {
    let pairs: Vec<AssociativePair> = term.iter().collect();
    let mut walk = Walk::new(&pairs, &[]);
    walk.visited.extend(skip);
    walk.run(start);
    walk.cover_rest();
    walk.preorder
}

/// Linear form of a partition: the question walk starts at the selected
/// pair's head, the answer walk at its dependent.
///
/// The selected dependent never enters `tq`: the only question pair it can
/// head is the reverse of the selected pair.
pub fn linearize(p: &QaPartition, label: &str) -> LinearQa {
    LinearQa {
        selected: p.selected,
        label: String::from(label),
        tq: preorder(&p.question, p.selected.head(), Some(p.selected.dependent())),
        ta: preorder(&p.answer, p.selected.dependent(), None),
    }
}

/// One question per distinct pair of `source`, in derivation order.
pub fn enumerate_questions<F>(
    source: &AnfTerm,
    mut label_for: F,
) -> Vec<(AssociativePair, LinearQa)>
where
    F: FnMut(AssociativePair) -> String,
{
    source
        .iter()
        .map(|pair| {
            let part = partition(source, pair).expect("pair taken from source");
            let label = label_for(pair);
            (pair, linearize(&part, &label))
        })
        .collect()
}
