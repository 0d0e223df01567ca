//! Plain-text hypergraph and coloring files.
//!
//! Hypergraph file:
//!
//! ```text
//! # comment
//! n 5
//! 1 2
//! 3 4 5
//! ```
//!
//! `#` starts a comment anywhere on a line. The first significant line is the header
//! `n <count>`. Every later significant line is one edge: 1-based vertex ids separated by
//! whitespace, in any order, repeated ids collapsing. The literal `{}` denotes an empty edge
//! and is rejected. Edge order in the file is the vertex order of the Kneser graph.
//!
//! Coloring file: one positive integer per significant line, the i-th coloring the i-th edge.

use std::collections::HashMap;

use altermatic_core::{Coloring, Error, Hypergraph, VertexSet};

use crate::error::{CliError, CliResult};

fn significant_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let body = raw.split('#').next().unwrap_or("").trim();
        (!body.is_empty()).then_some((i + 1, body))
    })
}

fn parse_err(source_name: &str, line: usize, message: impl Into<String>) -> CliError {
    CliError::Parse {
        source_name: source_name.to_string(),
        line,
        message: message.into(),
    }
}

/// Parses a hypergraph file. A vertex count above `vertex_cap` is a resource error.
pub fn parse_hypergraph(text: &str, source_name: &str, vertex_cap: usize) -> CliResult<Hypergraph> {
    let mut lines = significant_lines(text);
    let (header_line, header) = lines
        .next()
        .ok_or_else(|| parse_err(source_name, 1, "missing header `n <count>`"))?;
    let n = match header.split_whitespace().collect::<Vec<_>>().as_slice() {
        ["n", count] => count
            .parse::<usize>()
            .map_err(|_| parse_err(source_name, header_line, format!("bad vertex count {count:?}")))?,
        _ => return Err(parse_err(source_name, header_line, "missing header `n <count>`")),
    };
    if n == 0 {
        return Err(parse_err(source_name, header_line, "vertex count must be positive"));
    }
    let cap = vertex_cap.min(altermatic_core::vset::MAX_VERTICES);
    if n > cap {
        return Err(Error::ResourceLimit(format!("vertex count {n} exceeds cap {cap}")).into());
    }

    let mut edges = Vec::new();
    let mut first_seen: HashMap<VertexSet, usize> = HashMap::new();
    for (line, body) in lines {
        if body == "{}" {
            return Err(parse_err(source_name, line, "empty edge"));
        }
        let mut e = VertexSet::EMPTY;
        for tok in body.split_whitespace() {
            let v: usize = tok
                .parse()
                .map_err(|_| parse_err(source_name, line, format!("bad vertex id {tok:?}")))?;
            if v == 0 || v > n {
                return Err(parse_err(source_name, line, format!("vertex {v} out of range 1..={n}")));
            }
            e.insert(v);
        }
        if let Some(prev) = first_seen.insert(e, line) {
            return Err(parse_err(source_name, line, format!("duplicate edge {e} (first on line {prev})")));
        }
        edges.push(e);
    }
    Ok(Hypergraph::with_cap(n, edges, cap)?)
}

pub fn serialize_hypergraph(h: &Hypergraph) -> String {
    let mut out = format!("n {}\n", h.n());
    for e in h.edges() {
        let ids: Vec<String> = e.iter().map(|v| v.to_string()).collect();
        out.push_str(&ids.join(" "));
        out.push('\n');
    }
    out
}

/// Parses a coloring of `expected_len` edges; the palette is the largest color.
pub fn parse_coloring(text: &str, source_name: &str, expected_len: usize) -> CliResult<Coloring> {
    let mut colors = Vec::new();
    let mut last_line = 0;
    for (line, body) in significant_lines(text) {
        let value: i64 = body
            .parse()
            .map_err(|_| parse_err(source_name, line, format!("bad color {body:?}")))?;
        if value <= 0 {
            return Err(parse_err(source_name, line, format!("color {value} is not positive")));
        }
        colors.push(value as usize);
        last_line = line;
    }
    if colors.len() != expected_len {
        return Err(parse_err(
            source_name,
            last_line.max(1),
            format!("coloring has {} entries, hypergraph has {expected_len} edges", colors.len()),
        ));
    }
    Ok(Coloring::from_assignment(colors)?)
}

pub fn serialize_coloring(c: &Coloring) -> String {
    c.as_slice().iter().map(|x| format!("{x}\n")).collect()
}
