//! DIMACS and plain edge-list graph formats.
//!
//! DIMACS: `c ...` comments, one `p edge <n> <m>` header, then `e <u> <v>`
//! lines with 1-based ids. Edge list: a `<n> <m>` header line followed by
//! `<u> <v>` pairs with 0-based ids. Both reject duplicate edges.

use std::io::{BufRead, Write};

use crate::error::GraphError;
use crate::graph::Graph;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Dimacs,
    EdgeList,
}

fn parse_err(line: usize, message: impl Into<String>) -> GraphError {
    GraphError::Parse {
        line,
        message: message.into(),
    }
}

fn parse_num(tok: Option<&str>, line: usize, what: &str) -> Result<usize, GraphError> {
    let tok = tok.ok_or_else(|| parse_err(line, format!("missing {what}")))?;
    tok.parse()
        .map_err(|_| parse_err(line, format!("invalid {what} `{tok}`")))
}

/// Picks the format from the first line that is neither blank nor a comment.
pub fn detect_format(text: &str) -> Format {
    let first = text
        .lines()
        .map(str::trim)
        .find(|l| !l.is_empty() && !l.starts_with('c') && !l.starts_with('#'));
    match first {
        Some(l) if l.starts_with('p') => Format::Dimacs,
        _ => Format::EdgeList,
    }
}

pub fn read_graph(text: &str) -> Result<Graph, GraphError> {
    match detect_format(text) {
        Format::Dimacs => read_dimacs(text.as_bytes()),
        Format::EdgeList => read_edge_list(text.as_bytes()),
    }
}

pub fn read_dimacs<R: BufRead>(reader: R) -> Result<Graph, GraphError> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges = Vec::new();
    for (idx, line) in reader.lines().enumerate() {
        let line = line?;
        let lineno = idx + 1;
        let mut toks = line.split_whitespace();
        match toks.next() {
            None | Some("c") => continue,
            Some("p") => {
                if header.is_some() {
                    return Err(parse_err(lineno, "second `p` line"));
                }
                match toks.next() {
                    Some("edge") | Some("col") => {}
                    other => {
                        return Err(parse_err(
                            lineno,
                            format!("unsupported problem type {other:?}"),
                        ))
                    }
                }
                let n = parse_num(toks.next(), lineno, "vertex count")?;
                let m = parse_num(toks.next(), lineno, "edge count")?;
                header = Some((n, m));
            }
            Some("e") => {
                let (n, _) = header.ok_or_else(|| parse_err(lineno, "edge before `p` line"))?;
                let u = parse_num(toks.next(), lineno, "endpoint")?;
                let v = parse_num(toks.next(), lineno, "endpoint")?;
                for x in [u, v] {
                    if x == 0 || x > n {
                        return Err(parse_err(lineno, format!("vertex {x} outside 1..={n}")));
                    }
                }
                edges.push((u - 1, v - 1));
            }
            Some(tag) => return Err(parse_err(lineno, format!("unknown line type `{tag}`"))),
        }
    }
    let (n, m) = header.ok_or_else(|| parse_err(0, "missing `p edge` line"))?;
    if edges.len() != m {
        return Err(GraphError::EdgeCount {
            expected: m,
            found: edges.len(),
        });
    }
    Graph::new(n, edges)
}

pub fn read_edge_list<R: BufRead>(reader: R) -> Result<Graph, GraphError> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges = Vec::new();
    for (idx, line) in reader.lines().enumerate() {
        let line = line?;
        let lineno = idx + 1;
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let mut toks = trimmed.split_whitespace();
        let a = parse_num(toks.next(), lineno, "first field")?;
        let b = parse_num(toks.next(), lineno, "second field")?;
        if toks.next().is_some() {
            return Err(parse_err(lineno, "trailing fields"));
        }
        match header {
            None => header = Some((a, b)),
            Some(_) => edges.push((a, b)),
        }
    }
    let (n, m) = header.ok_or_else(|| parse_err(0, "missing `<n> <m>` header"))?;
    if edges.len() != m {
        return Err(GraphError::EdgeCount {
            expected: m,
            found: edges.len(),
        });
    }
    Graph::new(n, edges)
}

pub fn write_dimacs<W: Write>(g: &Graph, mut out: W) -> std::io::Result<()> {
    writeln!(out, "p edge {} {}", g.n(), g.m())?;
    for (u, v) in g.edges() {
        writeln!(out, "e {} {}", u + 1, v + 1)?;
    }
    Ok(())
}

pub fn write_edge_list<W: Write>(g: &Graph, mut out: W) -> std::io::Result<()> {
    writeln!(out, "{} {}", g.n(), g.m())?;
    for (u, v) in g.edges() {
        writeln!(out, "{u} {v}")?;
    }
    Ok(())
}
