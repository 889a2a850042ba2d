//! Line-oriented text formats with 1-based vertex names on disk.
//!
//! Graphs: `c` comments, one header `p edge <n> <m>`, then `m` records
//! `e <u> <v>`. Instances use the header `p ghedge <n> <m>` and records
//! `e <u> <v> <w>` with `w ∈ {1, 2}`; the weight-2 edges form H.
//! Labelings: records `l <v> <label>` with arbitrary integer labels, an
//! optional `s <span>` record, and `k <key> <value>` summary lines, which
//! readers ignore.

use std::fmt::Write as _;

use thiserror::Error;

use crate::graph::Graph;
use crate::labeling::{Instance, Labeling};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {kind}")]
pub struct ParseError {
    /// 1-based line number, or 0 for whole-document problems.
    pub line: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("malformed header: {0}")]
    Header(String),
    #[error("missing header")]
    MissingHeader,
    #[error("duplicate header")]
    DuplicateHeader,
    #[error("malformed record: {0}")]
    Record(String),
    #[error("vertex {0} out of range 1..={1}")]
    OutOfRange(i64, usize),
    #[error("self-loop at vertex {0}")]
    Loop(usize),
    #[error("duplicate edge {{{0}, {1}}}")]
    Duplicate(usize, usize),
    #[error("header declares {declared} edges, found {found}")]
    EdgeCount { declared: usize, found: usize },
    #[error("weight {0} is not 1 or 2")]
    Weight(i64),
    #[error("vertex {0} labeled more than once")]
    Relabeled(usize),
    #[error("vertex {0} has no label")]
    Unlabeled(usize),
    #[error("unknown record type {0:?}")]
    UnknownRecord(String),
}

fn err(line: usize, kind: ParseErrorKind) -> ParseError {
    ParseError { line, kind }
}

fn int(line: usize, token: Option<&str>, what: &str) -> Result<i64, ParseError> {
    let token =
        token.ok_or_else(|| err(line, ParseErrorKind::Record(format!("missing {what}"))))?;
    token.parse().map_err(|_| {
        err(
            line,
            ParseErrorKind::Record(format!("{what} {token:?} is not an integer")),
        )
    })
}

fn vertex(line: usize, token: Option<&str>, n: usize) -> Result<usize, ParseError> {
    let v = int(line, token, "vertex")?;
    if v < 1 || v as u64 > n as u64 {
        return Err(err(line, ParseErrorKind::OutOfRange(v, n)));
    }
    Ok(v as usize - 1)
}

/// Meaningful lines with their 1-based numbers, comments and blanks dropped.
fn records(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let tokens: Vec<&str> = raw.split_whitespace().collect();
        match tokens.first() {
            None | Some(&"c") => None,
            Some(_) => Some((i + 1, tokens)),
        }
    })
}

/// Shared reader for both edge-list formats; returns `(n, edges with
/// weights)`.
/// Order and weighted edges of a document.
type EdgeList = (usize, Vec<(usize, usize, u32)>);

fn parse_edges(text: &str, kind: &str, weighted: bool) -> Result<EdgeList, ParseError> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges = Vec::new();
    let mut seen = std::collections::HashSet::new();
    for (line, tokens) in records(text) {
        match tokens[0] {
            "p" => {
                if header.is_some() {
                    return Err(err(line, ParseErrorKind::DuplicateHeader));
                }
                if tokens.len() != 4 || tokens[1] != kind {
                    return Err(err(
                        line,
                        ParseErrorKind::Header(format!("expected \"p {kind} <n> <m>\"")),
                    ));
                }
                let parse = |t: &str| {
                    t.parse::<usize>().map_err(|_| {
                        err(
                            line,
                            ParseErrorKind::Header(format!("{t:?} is not a count")),
                        )
                    })
                };
                header = Some((parse(tokens[2])?, parse(tokens[3])?));
            }
            "e" => {
                let (n, _) = header.ok_or_else(|| err(line, ParseErrorKind::MissingHeader))?;
                let expected = if weighted { 4 } else { 3 };
                if tokens.len() != expected {
                    return Err(err(
                        line,
                        ParseErrorKind::Record(format!(
                            "edge record needs {} fields",
                            expected - 1
                        )),
                    ));
                }
                let u = vertex(line, tokens.get(1).copied(), n)?;
                let v = vertex(line, tokens.get(2).copied(), n)?;
                if u == v {
                    return Err(err(line, ParseErrorKind::Loop(u + 1)));
                }
                if !seen.insert((u.min(v), u.max(v))) {
                    return Err(err(
                        line,
                        ParseErrorKind::Duplicate(u.min(v) + 1, u.max(v) + 1),
                    ));
                }
                let w = if weighted {
                    match int(line, tokens.get(3).copied(), "weight")? {
                        w @ (1 | 2) => w as u32,
                        w => return Err(err(line, ParseErrorKind::Weight(w))),
                    }
                } else {
                    1
                };
                edges.push((u, v, w));
            }
            other => return Err(err(line, ParseErrorKind::UnknownRecord(other.into()))),
        }
    }
    let (n, m) = header.ok_or_else(|| err(0, ParseErrorKind::MissingHeader))?;
    if edges.len() != m {
        return Err(err(
            0,
            ParseErrorKind::EdgeCount {
                declared: m,
                found: edges.len(),
            },
        ));
    }
    Ok((n, edges))
}

pub fn parse_graph(text: &str) -> Result<Graph, ParseError> {
    let (n, edges) = parse_edges(text, "edge", false)?;
    Ok(Graph::from_edges(n, edges.into_iter().map(|(u, v, _)| (u, v))).expect("edges checked"))
}

pub fn parse_instance(text: &str) -> Result<Instance, ParseError> {
    let (n, edges) = parse_edges(text, "ghedge", true)?;
    let g = Graph::from_edges(n, edges.iter().map(|&(u, v, _)| (u, v))).expect("edges checked");
    let h = Graph::from_edges(
        n,
        edges.iter().filter(|e| e.2 == 2).map(|&(u, v, _)| (u, v)),
    )
    .expect("edges checked");
    Ok(Instance::new(g, h).expect("H is drawn from G"))
}

/// A labeling read from disk: possibly partial, labels shifted so the least
/// is 0, and the declared span if an `s` record was present.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabelingDocument {
    pub labels: Vec<Option<u32>>,
    pub declared_span: Option<i64>,
}

impl LabelingDocument {
    /// The labeling, or the first unlabeled vertex (0-based) as an error.
    pub fn total(&self) -> Result<Labeling, ParseError> {
        self.labels
            .iter()
            .enumerate()
            .map(|(v, l)| l.ok_or_else(|| err(0, ParseErrorKind::Unlabeled(v + 1))))
            .collect::<Result<Vec<_>, _>>()
            .map(Labeling::new)
    }
}

/// Reads `l <v> <label>` records for a graph on `n` vertices.
pub fn parse_labeling(text: &str, n: usize) -> Result<LabelingDocument, ParseError> {
    let mut raw: Vec<Option<i64>> = vec![None; n];
    let mut declared_span = None;
    for (line, tokens) in records(text) {
        match tokens[0] {
            "l" => {
                if tokens.len() != 3 {
                    return Err(err(
                        line,
                        ParseErrorKind::Record("label record needs 2 fields".into()),
                    ));
                }
                let v = vertex(line, tokens.get(1).copied(), n)?;
                let x = int(line, tokens.get(2).copied(), "label")?;
                if raw[v].replace(x).is_some() {
                    return Err(err(line, ParseErrorKind::Relabeled(v + 1)));
                }
            }
            "s" => {
                if tokens.len() != 2 {
                    return Err(err(
                        line,
                        ParseErrorKind::Record("span record needs 1 field".into()),
                    ));
                }
                declared_span = Some(int(line, tokens.get(1).copied(), "span")?);
            }
            "k" => {}
            other => return Err(err(line, ParseErrorKind::UnknownRecord(other.into()))),
        }
    }
    let min = raw.iter().flatten().copied().min().unwrap_or(0);
    let labels = raw
        .into_iter()
        .map(|l| match l {
            Some(x) => u32::try_from(x - min)
                .map(Some)
                .map_err(|_| err(0, ParseErrorKind::Record("label range too wide".into()))),
            None => Ok(None),
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(LabelingDocument {
        labels,
        declared_span,
    })
}

pub fn emit_graph(g: &Graph) -> String {
    let mut out = format!("p edge {} {}\n", g.order(), g.size());
    for (u, v) in g.edges() {
        writeln!(out, "e {} {}", u + 1, v + 1).expect("writing to a string");
    }
    out
}

pub fn emit_instance(inst: &Instance) -> String {
    let mut out = format!("p ghedge {} {}\n", inst.order(), inst.g().size());
    for (u, v, w) in inst.weighted_edges() {
        writeln!(out, "e {} {} {}", u + 1, v + 1, w).expect("writing to a string");
    }
    out
}

/// Summary lines `k <key> <value>` followed by the records and the span.
pub fn emit_labeling(f: &Labeling, summary: &[(&str, String)]) -> String {
    let mut out = String::new();
    for (key, value) in summary {
        writeln!(out, "k {key} {value}").expect("writing to a string");
    }
    for (v, label) in f.labels().iter().enumerate() {
        writeln!(out, "l {} {}", v + 1, label).expect("writing to a string");
    }
    if let Ok(span) = f.span() {
        writeln!(out, "s {span}").expect("writing to a string");
    }
    out
}
