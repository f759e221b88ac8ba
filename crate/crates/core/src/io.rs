//! Readers for Pajek `.net` files and plain edge lists.

use std::path::Path;

use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum InputFormat {
    Pajek,
    EdgeList,
    /// `.net` (any case) is Pajek, anything else an edge list.
    #[default]
    Auto,
}

impl InputFormat {
    pub fn resolve(self, path: &Path) -> InputFormat {
        match self {
            InputFormat::Auto => {
                let is_net = path
                    .extension()
                    .and_then(|e| e.to_str())
                    .is_some_and(|e| e.eq_ignore_ascii_case("net"));
                if is_net {
                    InputFormat::Pajek
                } else {
                    InputFormat::EdgeList
                }
            }
            f => f,
        }
    }
}

pub fn load(path: &Path, format: InputFormat) -> Result<Graph> {
    let text =
        std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    match format.resolve(path) {
        InputFormat::Pajek => parse_pajek(&text),
        _ => parse_edge_list(&text),
    }
}

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

#[derive(Clone, Copy, PartialEq)]
enum Section {
    Preamble,
    Vertices,
    Pairs,
    PairLists,
    Other,
}

/// Parses a Pajek network. Arcs are merged with edges as undirected pairs,
/// weights and trailing attributes are ignored, and every declared vertex is
/// present even when isolated.
pub fn parse_pajek(text: &str) -> Result<Graph> {
    let mut declared: Option<i64> = None;
    let mut section = Section::Preamble;
    let mut pairs = Vec::new();

    for (no, raw) in text.lines().enumerate() {
        let line_no = no + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('%') {
            continue;
        }
        if let Some(rest) = line.strip_prefix('*') {
            let mut words = rest.split_whitespace();
            let keyword = words.next().unwrap_or("").to_ascii_lowercase();
            section = match keyword.as_str() {
                "vertices" => {
                    if declared.is_some() {
                        return Err(parse_err(line_no, "duplicate *Vertices header"));
                    }
                    let n = words
                        .next()
                        .and_then(|w| w.parse::<i64>().ok())
                        .filter(|&n| n >= 0)
                        .ok_or_else(|| parse_err(line_no, "malformed *Vertices header"))?;
                    declared = Some(n);
                    Section::Vertices
                }
                "edges" | "arcs" | "edgeslist" | "arcslist" => {
                    if declared.is_none() {
                        return Err(parse_err(
                            line_no,
                            format!("*{keyword} section before *Vertices header"),
                        ));
                    }
                    if keyword.ends_with("list") {
                        Section::PairLists
                    } else {
                        Section::Pairs
                    }
                }
                "network" => Section::Preamble,
                _ => Section::Other,
            };
            continue;
        }

        let n = match declared {
            Some(n) => n,
            None if section == Section::Preamble => {
                return Err(parse_err(line_no, "expected *Vertices header"))
            }
            None => continue,
        };
        let id = |tok: &str| -> Result<i64> {
            let v: i64 = tok
                .parse()
                .map_err(|_| parse_err(line_no, format!("non-numeric vertex id {tok:?}")))?;
            if !(1..=n).contains(&v) {
                return Err(parse_err(line_no, format!("vertex id {v} outside 1..{n}")));
            }
            Ok(v)
        };
        let mut toks = line.split_whitespace();
        match section {
            Section::Vertices => {
                id(toks.next().unwrap_or(""))?;
            }
            Section::Pairs => {
                let (Some(a), Some(b)) = (toks.next(), toks.next()) else {
                    return Err(parse_err(line_no, "edge line needs two vertex ids"));
                };
                pairs.push((id(a)?, id(b)?));
            }
            Section::PairLists => {
                let src = id(toks.next().unwrap_or(""))?;
                for t in toks {
                    pairs.push((src, id(t)?));
                }
            }
            Section::Preamble | Section::Other => {}
        }
    }

    let n = declared.ok_or_else(|| parse_err(0, "missing *Vertices header"))?;
    Ok(Graph::from_parts(1..=n, pairs))
}

/// Parses `u v` lines with arbitrary integer labels. `#` starts a comment;
/// tokens after the second are ignored; a line holding a single id declares
/// an isolated node.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut nodes = Vec::new();
    let mut pairs = Vec::new();
    for (no, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let parse = |tok: &str| {
            tok.parse::<i64>()
                .map_err(|_| parse_err(no + 1, format!("non-numeric node id {tok:?}")))
        };
        let mut toks = line.split_whitespace();
        let u = parse(toks.next().unwrap())?;
        match toks.next() {
            Some(v) => pairs.push((u, parse(v)?)),
            None => nodes.push(u),
        }
    }
    Ok(Graph::from_parts(nodes, pairs))
}

/// Writes the graph in the edge-list format accepted by [`parse_edge_list`].
pub fn to_edge_list(g: &Graph) -> String {
    let mut out = String::new();
    for &v in g.nodes() {
        if g.degree(v).unwrap_or(0) == 0 {
            out.push_str(&format!("{v}\n"));
        }
    }
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}
