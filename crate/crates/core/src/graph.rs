//! Digraph view of an ANF term: one node per image, one arc per pair.

use alloc::collections::{BTreeMap, BTreeSet, VecDeque};
use alloc::string::String;

use crate::{AnfTerm, AssociativePair, EncodedSyntagma, Error, ImageIndex, Result};

/// Nodes carry lexemes, arcs point from principal to subordinate image, and
/// marked arcs carry the interrogative label chosen for them.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ImageGraph {
    nodes: BTreeMap<ImageIndex, String>,
    edges: BTreeSet<AssociativePair>,
    marked: BTreeMap<AssociativePair, String>,
}

impl ImageGraph {
    /// Assembles a graph from raw parts, checking that every arc joins known
    /// nodes and every mark sits on an arc.
    pub fn from_parts(
        nodes: BTreeMap<ImageIndex, String>,
        edges: BTreeSet<AssociativePair>,
        marked: BTreeMap<AssociativePair, String>,
    ) -> Result<Self> {
        for e in &edges {
            for end in [e.head(), e.dependent()] {
                if !nodes.contains_key(&end) {
                    return Err(Error::NodeNotFound(end));
                }
            }
        }
        if let Some(m) = marked.keys().find(|m| !edges.contains(m)) {
            return Err(Error::PairNotFound(*m));
        }
        Ok(ImageGraph {
            nodes,
            edges,
            marked,
        })
    }

    pub fn nodes(&self) -> &BTreeMap<ImageIndex, String> {
        &self.nodes
    }

    pub fn edges(&self) -> &BTreeSet<AssociativePair> {
        &self.edges
    }

    pub fn marked(&self) -> &BTreeMap<AssociativePair, String> {
        &self.marked
    }

    /// The arcs as a term, ascending by `(head, dependent)`.
    pub fn to_term(&self) -> AnfTerm {
        self.edges.iter().copied().collect()
    }

    /// Arcs lying on some directed path from `start`, never using a blocked
    /// arc. Breadth-first and exhaustive.
    pub fn reachable_edges(
        &self,
        start: ImageIndex,
        blocked: &BTreeSet<AssociativePair>,
    ) -> Result<BTreeSet<AssociativePair>> {
        if !self.nodes.contains_key(&start) {
            return Err(Error::NodeNotFound(start));
        }
        let mut out = BTreeSet::new();
        let mut seen = BTreeSet::from([start]);
        let mut queue = VecDeque::from([start]);
        while let Some(node) = queue.pop_front() {
            for &arc in self.edges.iter().filter(|a| a.head() == node) {
                if blocked.contains(&arc) {
                    continue;
                }
                out.insert(arc);
                if seen.insert(arc.dependent()) {
                    queue.push_back(arc.dependent());
                }
            }
        }
        Ok(out)
    }
}

/// Graph of `source` with lexemes taken from `syntagma`.
pub fn to_graph(
    source: &AnfTerm,
    syntagma: &EncodedSyntagma,
    marks: &[(AssociativePair, String)],
) -> Result<ImageGraph> {
    let nodes = source
        .images()
        .into_iter()
        .map(|i| (i, syntagma.word(i)))
        .collect();
    let edges = source.canonical().clone();
    let mut marked = BTreeMap::new();
    for (pair, label) in marks {
        if !edges.contains(pair) {
            return Err(Error::PairNotFound(*pair));
        }
        marked.insert(*pair, label.clone());
    }
    Ok(ImageGraph {
        nodes,
        edges,
        marked,
    })
}
