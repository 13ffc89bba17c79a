//! Command-line front end.
//!
//! [`run`] is a pure function from a [`RunConfig`] and the input text to an
//! [`Outcome`]; [`main_with_args`] adds argument parsing and file IO around it.
//! Exit codes: 0 success, 1 input error, 2 usage error.

use std::fmt;
use std::fs;
use std::io::{self, Read};
use std::path::PathBuf;
use std::str::FromStr;

use anf_core::{graph, qa, AnfTerm, AssociativePair, EncodedSyntagma, PronounLexicon};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::export::{self, GraphFormat};
use crate::ingest::{self, TreebankConfig};
use crate::IngestError;

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "anf",
    version,
    about = "Associative normal form and interrogative partitions of syntagmas"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the reduced ANF of each sentence
    Normalize {
        #[command(flatten)]
        io: InputArgs,
        /// Also print one line per product application
        #[arg(long)]
        trace: bool,
    },
    /// Print one question per associative pair
    Questions {
        #[command(flatten)]
        io: InputArgs,
    },
    /// Print the question for one selected pair
    Ask {
        #[command(flatten)]
        io: InputArgs,
        /// Selected pair as `head,dependent` indices or lexemes
        #[arg(long)]
        pair: PairSpec,
        /// Interrogative label, overriding the lexicon
        #[arg(long)]
        label: Option<String>,
    },
    /// Export the image graph
    Graph {
        #[command(flatten)]
        io: InputArgs,
        /// Pair to mark as interrogative (repeatable)
        #[arg(long)]
        pair: Vec<PairSpec>,
        /// Label for the pair at the same position (repeatable)
        #[arg(long)]
        label: Vec<String>,
    },
}

#[derive(Debug, Args)]
pub struct InputArgs {
    /// Input file; standard input when absent
    pub input: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = InputFormat::Auto)]
    pub input_format: InputFormat,
    /// Pronoun lexicon file
    #[arg(long)]
    pub lexicon: Option<PathBuf>,
    /// Output format (text and json for most commands, dot and json for graph)
    #[arg(long, value_enum)]
    pub format: Option<OutputFormat>,
    /// Write output to this file instead of standard output
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum InputFormat {
    /// Treebank when some line has ten tab-separated columns, native otherwise
    Auto,
    Native,
    Treebank,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Text,
    Json,
    Dot,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CommandKind {
    Normalize,
    Questions,
    Ask,
    Graph,
}

impl fmt::Display for CommandKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CommandKind::Normalize => "normalize",
            CommandKind::Questions => "questions",
            CommandKind::Ask => "ask",
            CommandKind::Graph => "graph",
        })
    }
}

/// A pair named on the command line, resolved per sentence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PairSpec {
    Indices(AssociativePair),
    Lexemes(String, String),
}

impl FromStr for PairSpec {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (a, b) = s
            .split_once(',')
            .ok_or_else(|| format!("expected `head,dependent`, got {s:?}"))?;
        let (a, b) = (a.trim(), b.trim());
        match (a.parse::<usize>(), b.parse::<usize>()) {
            (Ok(h), Ok(d)) => AssociativePair::new(h, d)
                .map(PairSpec::Indices)
                .map_err(|e| e.to_string()),
            _ if a.is_empty() || b.is_empty() => Err("empty lexeme in pair".into()),
            _ if a == b => Err(format!("invalid pair: {a:?} cannot govern itself")),
            _ => Ok(PairSpec::Lexemes(a.to_string(), b.to_string())),
        }
    }
}

impl PairSpec {
    fn resolve(&self, s: &EncodedSyntagma) -> Result<AssociativePair, String> {
        match self {
            PairSpec::Indices(p) => Ok(*p),
            PairSpec::Lexemes(h, d) => {
                let find = |w: &str| {
                    s.find(w)
                        .ok_or_else(|| format!("no word {w:?} in sentence"))
                };
                AssociativePair::from_indices(find(h)?, find(d)?).map_err(|e| e.to_string())
            }
        }
    }
}

/// Everything [`run`] needs besides the input text.
#[derive(Debug, Clone)]
pub struct RunConfig {
    pub command: CommandKind,
    pub input_format: InputFormat,
    pub treebank: TreebankConfig,
    pub lexicon: PronounLexicon,
    /// `ask` only.
    pub selected: Option<PairSpec>,
    /// `graph` only; labels pair up with marks by position.
    pub marks: Vec<PairSpec>,
    pub labels: Vec<String>,
    pub format: OutputFormat,
    pub trace: bool,
}

impl RunConfig {
    pub fn new(command: CommandKind) -> Self {
        let format = if command == CommandKind::Graph {
            OutputFormat::Dot
        } else {
            OutputFormat::Text
        };
        RunConfig {
            command,
            input_format: InputFormat::Auto,
            treebank: TreebankConfig::default(),
            lexicon: PronounLexicon::new(),
            selected: None,
            marks: Vec::new(),
            labels: Vec::new(),
            format,
            trace: false,
        }
    }

    /// Usage problems that can be detected before reading input.
    pub fn validate(&self) -> Result<(), String> {
        if self.command == CommandKind::Ask && self.selected.is_none() {
            return Err("`ask` requires --pair".into());
        }
        let allowed = match self.command {
            CommandKind::Graph => self.format != OutputFormat::Text,
            _ => self.format != OutputFormat::Dot,
        };
        if !allowed {
            return Err(format!(
                "`{}` does not support --format {:?}",
                self.command, self.format
            )
            .to_lowercase());
        }
        if self.labels.len() > self.marks.len() && self.command == CommandKind::Graph {
            return Err("more --label values than --pair values".into());
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome {
            code: EXIT_OK,
            stdout,
            stderr: String::new(),
        }
    }

    fn fail(code: i32, message: impl fmt::Display) -> Self {
        Outcome {
            code,
            stdout: String::new(),
            stderr: format!("error: {message}\n"),
        }
    }
}

pub fn parse_input(config: &RunConfig, input: &str) -> Result<Vec<EncodedSyntagma>, IngestError> {
    let treebank = match config.input_format {
        InputFormat::Auto => ingest::looks_like_treebank(input),
        InputFormat::Native => false,
        InputFormat::Treebank => true,
    };
    if treebank {
        ingest::parse_treebank_document(input, &config.treebank)
    } else {
        ingest::parse_native_document(input)
    }
}

/// Runs one command over every sentence of `input`.
pub fn run(config: &RunConfig, input: &str) -> Outcome {
    if let Err(msg) = config.validate() {
        return Outcome::fail(EXIT_USAGE, msg);
    }
    let sentences = match parse_input(config, input) {
        Ok(s) if s.is_empty() => return Outcome::fail(EXIT_INPUT, "no sentences in input"),
        Ok(s) => s,
        Err(e) => return Outcome::fail(EXIT_INPUT, e),
    };
    let mut blocks = Vec::with_capacity(sentences.len());
    for (n, s) in sentences.iter().enumerate() {
        match render_sentence(config, s) {
            Ok(b) => blocks.push(b),
            Err(msg) if sentences.len() == 1 => return Outcome::fail(EXIT_INPUT, msg),
            Err(msg) => return Outcome::fail(EXIT_INPUT, format!("sentence {}: {msg}", n + 1)),
        }
    }
    let separator = if config.format == OutputFormat::Json {
        ""
    } else {
        "\n"
    };
    Outcome::ok(blocks.join(separator))
}

#[derive(Serialize)]
struct PairRecord {
    head: usize,
    dependent: usize,
}

impl From<AssociativePair> for PairRecord {
    fn from(p: AssociativePair) -> Self {
        PairRecord {
            head: p.head().get(),
            dependent: p.dependent().get(),
        }
    }
}

#[derive(Serialize)]
struct AnfPairRecord {
    head: usize,
    dependent: usize,
    text: String,
}

#[derive(Serialize)]
struct NormalizeRecord {
    anf: String,
    pairs: Vec<AnfPairRecord>,
    #[serde(skip_serializing_if = "Option::is_none")]
    trace: Option<Vec<String>>,
}

#[derive(Serialize)]
struct QuestionRecord {
    selected: PairRecord,
    label: String,
    tq: Vec<usize>,
    ta: Vec<usize>,
    tq_lexemes: Vec<String>,
    ta_lexemes: Vec<String>,
    text: String,
}

fn question_record(line: &qa::LinearQa, s: &EncodedSyntagma) -> QuestionRecord {
    QuestionRecord {
        selected: line.selected.into(),
        label: line.label.clone(),
        tq: line.tq.iter().map(|i| i.get()).collect(),
        ta: line.ta.iter().map(|i| i.get()).collect(),
        tq_lexemes: line.tq_lexemes(s),
        ta_lexemes: line.ta_lexemes(s),
        text: line.render(s),
    }
}

fn json_line<T: Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("plain data serializes") + "\n"
}

fn render_sentence(config: &RunConfig, s: &EncodedSyntagma) -> Result<String, String> {
    let json = config.format == OutputFormat::Json;
    match config.command {
        CommandKind::Normalize => {
            let derivation = s.derive();
            let anf = derivation.result();
            let trace = config.trace.then(|| derivation.trace_lines());
            if json {
                let pairs = anf
                    .iter()
                    .map(|p| AnfPairRecord {
                        head: p.head().get(),
                        dependent: p.dependent().get(),
                        text: s.render_pair(p),
                    })
                    .collect();
                return Ok(json_line(&NormalizeRecord {
                    anf: s.render_term(anf),
                    pairs,
                    trace,
                }));
            }
            let mut out = String::new();
            for line in trace.into_iter().flatten() {
                out.push_str(&line);
                out.push('\n');
            }
            for p in anf.iter() {
                out.push_str(&s.render_pair(p));
                out.push('\n');
            }
            Ok(out)
        }
        CommandKind::Questions => {
            let anf = s.to_anf();
            let all =
                qa::enumerate_questions(&anf, |p| config.lexicon.lookup_label(p, s).to_string());
            let mut out = String::new();
            for (pair, line) in all {
                if json {
                    out.push_str(&json_line(&question_record(&line, s)));
                } else {
                    out.push_str(&format!("{pair}\t{}\n", line.render(s)));
                }
            }
            Ok(out)
        }
        CommandKind::Ask => {
            let anf = s.to_anf();
            let spec = config.selected.as_ref().expect("validated");
            let pair = spec.resolve(s)?;
            let part = qa::partition(&anf, pair).map_err(|e| e.to_string())?;
            let label = match &config.label_override() {
                Some(l) => l.clone(),
                None => config.lexicon.lookup_label(pair, s).to_string(),
            };
            let line = qa::linearize(&part, &label);
            if json {
                Ok(json_line(&question_record(&line, s)))
            } else {
                Ok(line.render(s) + "\n")
            }
        }
        CommandKind::Graph => {
            let anf: AnfTerm = s.to_anf();
            let mut marks = Vec::with_capacity(config.marks.len());
            for (n, spec) in config.marks.iter().enumerate() {
                let pair = spec.resolve(s)?;
                let label = match config.labels.get(n) {
                    Some(l) => l.clone(),
                    None => config.lexicon.lookup_label(pair, s).to_string(),
                };
                marks.push((pair, label));
            }
            let g = graph::to_graph(&anf, s, &marks).map_err(|e| e.to_string())?;
            Ok(match config.format {
                OutputFormat::Json => export::export(&g, GraphFormat::Json) + "\n",
                _ => export::export(&g, GraphFormat::Dot),
            })
        }
    }
}

impl RunConfig {
    /// `ask` keeps its `--label` as the first entry of `labels`.
    fn label_override(&self) -> Option<String> {
        match self.command {
            CommandKind::Ask => self.labels.first().cloned(),
            _ => None,
        }
    }
}

/// A parsed command line: the run configuration plus where to read and write.
pub struct Invocation {
    pub config: RunConfig,
    pub input: Option<PathBuf>,
    pub lexicon: Option<PathBuf>,
    pub output: Option<PathBuf>,
}

impl From<Cli> for Invocation {
    fn from(cli: Cli) -> Self {
        let (kind, io) = match &cli.command {
            Command::Normalize { io, .. } => (CommandKind::Normalize, io),
            Command::Questions { io } => (CommandKind::Questions, io),
            Command::Ask { io, .. } => (CommandKind::Ask, io),
            Command::Graph { io, .. } => (CommandKind::Graph, io),
        };
        let mut config = RunConfig::new(kind);
        config.input_format = io.input_format;
        if let Some(f) = io.format {
            config.format = f;
        }
        let (input, lexicon, output) = (io.input.clone(), io.lexicon.clone(), io.output.clone());
        match cli.command {
            Command::Normalize { trace, .. } => config.trace = trace,
            Command::Questions { .. } => {}
            Command::Ask { pair, label, .. } => {
                config.selected = Some(pair);
                config.labels.extend(label);
            }
            Command::Graph { pair, label, .. } => {
                config.marks = pair;
                config.labels = label;
            }
        }
        Invocation {
            config,
            input,
            lexicon,
            output,
        }
    }
}

/// Parses `args`, performs the IO and returns the process exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return e.exit_code();
        }
    };
    let mut inv = Invocation::from(cli);
    if let Some(path) = &inv.lexicon {
        let text = match fs::read_to_string(path) {
            Ok(t) => t,
            Err(e) => return report(EXIT_INPUT, format!("{}: {e}", path.display())),
        };
        match ingest::parse_lexicon(&text) {
            Ok(lex) => inv.config.lexicon = lex,
            Err(e) => return report(EXIT_INPUT, format!("{}: {e}", path.display())),
        }
    }
    let input = match &inv.input {
        Some(path) => fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display())),
        None => {
            let mut buf = String::new();
            io::stdin()
                .read_to_string(&mut buf)
                .map(|_| buf)
                .map_err(|e| format!("stdin: {e}"))
        }
    };
    let input = match input {
        Ok(text) => text,
        Err(msg) => return report(EXIT_INPUT, msg),
    };
    let outcome = run(&inv.config, &input);
    eprint!("{}", outcome.stderr);
    if outcome.code == EXIT_OK {
        let written = match &inv.output {
            Some(path) => {
                fs::write(path, &outcome.stdout).map_err(|e| format!("{}: {e}", path.display()))
            }
            None => {
                print!("{}", outcome.stdout);
                Ok(())
            }
        };
        if let Err(msg) = written {
            return report(EXIT_INPUT, msg);
        }
    }
    outcome.code
}

fn report(code: i32, msg: String) -> i32 {
    eprintln!("error: {msg}");
    code
}
