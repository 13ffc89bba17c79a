//! DOT and JSON renderings of an [`ImageGraph`].
//!
//! Both are deterministic: nodes ascend by index, arcs by `(head, dependent)`.
//! JSON is the interchange format and can be read back with [`from_json`].

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write;

use anf_core::{AssociativePair, ImageGraph, ImageIndex};
use serde::{Deserialize, Serialize};

use crate::{IngestError, IngestErrorKind};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphFormat {
    Dot,
    Json,
}

pub fn export(g: &ImageGraph, format: GraphFormat) -> String {
    match format {
        GraphFormat::Dot => to_dot(g),
        GraphFormat::Json => to_json(g),
    }
}

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

/// Marked arcs carry their label, with a `?` appended unless the label
/// already ends in one.
pub fn to_dot(g: &ImageGraph) -> String {
    let mut out = String::from("digraph ic {\n");
    for (id, lexeme) in g.nodes() {
        let _ = writeln!(out, "  {} [label=\"{}\"];", id.get(), escape(lexeme));
    }
    for arc in g.edges() {
        let (h, d) = (arc.head().get(), arc.dependent().get());
        match g.marked().get(arc) {
            Some(label) => {
                let q = if label.ends_with('?') { "" } else { "?" };
                let _ = writeln!(out, "  {h} -> {d} [label=\"{}{q}\"];", escape(label));
            }
            None => {
                let _ = writeln!(out, "  {h} -> {d};");
            }
        }
    }
    out.push_str("}\n");
    out
}

#[derive(Debug, Serialize, Deserialize)]
struct JsonNode {
    id: usize,
    lexeme: String,
}

#[derive(Debug, Serialize, Deserialize)]
struct JsonEdge {
    head: usize,
    dependent: usize,
}

#[derive(Debug, Serialize, Deserialize)]
struct JsonMark {
    head: usize,
    dependent: usize,
    label: String,
}

#[derive(Debug, Serialize, Deserialize)]
struct JsonGraph {
    nodes: Vec<JsonNode>,
    edges: Vec<JsonEdge>,
    marked: Vec<JsonMark>,
}

/// Compact single-line JSON document.
pub fn to_json(g: &ImageGraph) -> String {
    let doc = JsonGraph {
        nodes: g
            .nodes()
            .iter()
            .map(|(id, lexeme)| JsonNode {
                id: id.get(),
                lexeme: lexeme.clone(),
            })
            .collect(),
        edges: g
            .edges()
            .iter()
            .map(|a| JsonEdge {
                head: a.head().get(),
                dependent: a.dependent().get(),
            })
            .collect(),
        marked: g
            .marked()
            .iter()
            .map(|(a, label)| JsonMark {
                head: a.head().get(),
                dependent: a.dependent().get(),
                label: label.clone(),
            })
            .collect(),
    };
    serde_json::to_string(&doc).expect("plain data serializes")
}

pub fn from_json(text: &str) -> Result<ImageGraph, IngestError> {
    let doc: JsonGraph = serde_json::from_str(text)
        .map_err(|e| IngestError::at(e.line(), IngestErrorKind::Json(e.to_string())))?;
    let core = |e: anf_core::Error| IngestError::whole(e.into());
    let mut nodes = BTreeMap::new();
    for n in doc.nodes {
        let id = ImageIndex::new(n.id).map_err(core)?;
        if nodes.insert(id, n.lexeme).is_some() {
            return Err(IngestError::whole(IngestErrorKind::DuplicateIndex(n.id)));
        }
    }
    let edges = doc
        .edges
        .iter()
        .map(|e| AssociativePair::new(e.head, e.dependent))
        .collect::<Result<BTreeSet<_>, _>>()
        .map_err(core)?;
    let mut marked = BTreeMap::new();
    for m in doc.marked {
        marked.insert(
            AssociativePair::new(m.head, m.dependent).map_err(core)?,
            m.label,
        );
    }
    ImageGraph::from_parts(nodes, edges, marked).map_err(core)
}
