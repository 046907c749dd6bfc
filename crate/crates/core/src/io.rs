//! Reading and writing Cayley tables (plain text and JSON) and exporting
//! power graphs in DOT format.
//!
//! The text format is: one line with the element count `N`, then `N` rows
//! of `N` whitespace-separated 0-based indices. Lines starting with `#` are
//! comments and may appear anywhere; the special form `# name: <index>
//! <display>` attaches a display name to an element, and when any name line
//! is present every element must get exactly one.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::coloring::Coloring;
use crate::graph::PowerGraph;
use crate::magma::{build_magma, Magma, MagmaError};

#[derive(Debug, Error)]
pub enum ParseError {
    #[error("input contains no table")]
    Empty,
    #[error("line {line}: bad element count: {detail}")]
    BadHeader { line: usize, detail: String },
    #[error("line {line}: bad row: {detail}")]
    BadRow { line: usize, detail: String },
    #[error("line {line}: bad name line: {detail}")]
    BadName { line: usize, detail: String },
    #[error("expected {expected} rows, found {found}")]
    RowCount { expected: usize, found: usize },
    #[error(transparent)]
    Magma(#[from] MagmaError),
    #[error("bad JSON: {0}")]
    Json(String),
}

/// Parses the plain-text Cayley format described in the module docs.
pub fn parse_magma(text: &str) -> Result<Magma, ParseError> {
    let mut size: Option<usize> = None;
    let mut rows: Vec<Vec<usize>> = Vec::new();
    let mut name_lines: Vec<(usize, usize, String)> = Vec::new(); // (line, index, display)

    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        if let Some(comment) = line.strip_prefix('#') {
            if let Some(rest) = comment.trim_start().strip_prefix("name:") {
                let rest = rest.trim();
                let (idx_token, display) = match rest.split_once(char::is_whitespace) {
                    Some((a, b)) => (a, b.trim()),
                    None => (rest, ""),
                };
                let index: usize = idx_token.parse().map_err(|_| ParseError::BadName {
                    line: line_no,
                    detail: format!("expected an element index, got {idx_token:?}"),
                })?;
                if display.is_empty() {
                    return Err(ParseError::BadName {
                        line: line_no,
                        detail: "missing display name".into(),
                    });
                }
                name_lines.push((line_no, index, display.to_string()));
            }
            continue;
        }
        match size {
            None => {
                let n: usize = line.parse().map_err(|_| ParseError::BadHeader {
                    line: line_no,
                    detail: format!("expected a single integer, got {line:?}"),
                })?;
                size = Some(n);
            }
            Some(n) => {
                if rows.len() == n {
                    return Err(ParseError::BadRow {
                        line: line_no,
                        detail: format!("unexpected extra row after {n} rows"),
                    });
                }
                let mut row = Vec::with_capacity(n);
                for token in line.split_whitespace() {
                    let v: usize = token.parse().map_err(|_| ParseError::BadRow {
                        line: line_no,
                        detail: format!("bad entry {token:?}"),
                    })?;
                    row.push(v);
                }
                if row.len() != n {
                    return Err(ParseError::BadRow {
                        line: line_no,
                        detail: format!("expected {n} entries, found {}", row.len()),
                    });
                }
                rows.push(row);
            }
        }
    }

    let size = size.ok_or(ParseError::Empty)?;
    if rows.len() != size {
        return Err(ParseError::RowCount { expected: size, found: rows.len() });
    }
    let names = if name_lines.is_empty() {
        None
    } else {
        let mut names: Vec<Option<String>> = vec![None; size];
        for (line, index, display) in name_lines {
            if index >= size {
                return Err(ParseError::BadName {
                    line,
                    detail: format!("element index {index} out of range for size {size}"),
                });
            }
            if names[index].is_some() {
                return Err(ParseError::BadName {
                    line,
                    detail: format!("element {index} named twice"),
                });
            }
            names[index] = Some(display);
        }
        let complete: Option<Vec<String>> = names.into_iter().collect();
        match complete {
            Some(v) => Some(v),
            None => {
                return Err(ParseError::BadName {
                    line: 0,
                    detail: "when name lines are used, every element needs one".into(),
                })
            }
        }
    };
    Ok(build_magma(rows, names)?)
}

/// Serializes a magma in the plain-text Cayley format. Metadata is
/// presentation-only and is not written; parsing the output reproduces the
/// size, table, and names exactly.
pub fn serialize_magma(m: &Magma) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{}", m.size());
    if let Some(names) = m.names() {
        for (i, name) in names.iter().enumerate() {
            let _ = writeln!(out, "# name: {i} {name}");
        }
    }
    for row in m.rows() {
        let rendered: Vec<String> = row.iter().map(usize::to_string).collect();
        let _ = writeln!(out, "{}", rendered.join(" "));
    }
    out
}

#[derive(Serialize, Deserialize)]
struct MagmaJson {
    size: usize,
    table: Vec<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    names: Option<Vec<String>>,
}

/// Parses the JSON form `{"size": N, "table": [[..]], "names": [..]?}`.
pub fn parse_magma_json(text: &str) -> Result<Magma, ParseError> {
    let raw: MagmaJson = serde_json::from_str(text).map_err(|e| ParseError::Json(e.to_string()))?;
    if raw.table.len() != raw.size {
        return Err(ParseError::Json(format!(
            "size field says {} but table has {} rows",
            raw.size,
            raw.table.len()
        )));
    }
    Ok(build_magma(raw.table, raw.names)?)
}

/// Serializes a magma as pretty-printed JSON (see [`parse_magma_json`]).
pub fn serialize_magma_json(m: &Magma) -> String {
    let raw = MagmaJson {
        size: m.size(),
        table: m.rows().map(<[usize]>::to_vec).collect(),
        names: m.names().map(<[String]>::to_vec),
    };
    let mut out = serde_json::to_string_pretty(&raw).expect("plain data serializes");
    out.push('\n');
    out
}

/// Rendering options for [`export_dot`].
#[derive(Default)]
pub struct DotOptions<'a> {
    /// Emit the orientation (`x -> y` when `y` is a power of `x`) instead of
    /// the undirected edge set.
    pub directed: bool,
    /// Vertex display names; defaults to the vertex index.
    pub labels: Option<&'a [String]>,
    /// When given, each assigned vertex gets its tag in a `color` attribute.
    pub tags: Option<&'a Coloring>,
}

fn dot_escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

/// Renders the graph in DOT format: vertices in ascending order, then edges
/// in lexicographic order. Self-loops are never emitted.
pub fn export_dot(pg: &PowerGraph, opts: &DotOptions) -> String {
    let mut out = String::new();
    let (kind, connector) = if opts.directed { ("digraph", "->") } else { ("graph", "--") };
    let _ = writeln!(out, "{kind} power {{");
    for v in 0..pg.n_vertices() {
        let label = match opts.labels {
            Some(labels) => dot_escape(&labels[v]),
            None => v.to_string(),
        };
        let tag = opts
            .tags
            .and_then(|c| c.get(v))
            .map(|t| format!(" color_tag=\"{t}\""))
            .unwrap_or_default();
        let _ = writeln!(out, "  {v} [label=\"{label}\"{tag}];");
    }
    if opts.directed {
        for x in 0..pg.n_vertices() {
            for y in pg.directed_row(x).iter() {
                if x != y {
                    let _ = writeln!(out, "  {x} {connector} {y};");
                }
            }
        }
    } else {
        for (u, v) in pg.edges() {
            let _ = writeln!(out, "  {u} {connector} {v};");
        }
    }
    out.push_str("}\n");
    out
}
