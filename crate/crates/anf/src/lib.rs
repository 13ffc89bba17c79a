//! File formats, graph export and the command-line front end for
//! [`anf_core`].
//!
//! * [`ingest`] reads the native head-index format, a subset of 10-column
//!   dependency treebank blocks, and pronoun lexicon files.
//! * [`export`] renders image graphs as DOT or JSON and reads the JSON back.
//! * [`cli`] wires everything behind the `anf` binary.

pub mod cli;
mod error;
pub mod export;
pub mod ingest;

pub use error::{IngestError, IngestErrorKind};
