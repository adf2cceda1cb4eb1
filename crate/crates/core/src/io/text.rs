//! Line-oriented graph files.
//!
//! ```text
//! # comment
//! dims 3 2 2
//! edge 1 1 1  2 2 2
//! e 1 2
//! ```
//!
//! `edge` takes two one-based coordinate triples, `e` two flat indices.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::{vertex_index, Edge, Graph, TripartiteDims, VertexCoord};

/// Non-fatal observation made while parsing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseWarning {
    pub line: usize,
    pub message: String,
}

impl std::fmt::Display for ParseWarning {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "line {}: {}", self.line, self.message)
    }
}

fn numbers(line: usize, fields: &[&str]) -> Result<Vec<usize>> {
    fields
        .iter()
        .map(|f| {
            f.parse::<usize>().map_err(|_| Error::Parse {
                line,
                message: format!("expected a non-negative integer, found {f:?}"),
            })
        })
        .collect()
}

fn expect_arity(line: usize, keyword: &str, got: usize, want: usize) -> Result<()> {
    if got != want {
        return Err(Error::Parse {
            line,
            message: format!("`{keyword}` takes {want} numbers, found {got}"),
        });
    }
    Ok(())
}

/// Parses a graph file and returns the graph with any warnings.
pub fn parse_graph_with_warnings(text: &str) -> Result<(Graph, Vec<ParseWarning>)> {
    let mut graph: Option<Graph> = None;
    let mut warnings = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let fields: Vec<&str> = content.split_whitespace().collect();
        let (keyword, args) = (fields[0], &fields[1..]);
        let validated = |e: Error| Error::Validation {
            line,
            source: Box::new(e),
        };
        match keyword {
            "dims" => {
                if graph.is_some() {
                    return Err(Error::Parse {
                        line,
                        message: "duplicate `dims` line".into(),
                    });
                }
                let v = numbers(line, args)?;
                expect_arity(line, "dims", v.len(), 3)?;
                let dims = TripartiteDims::new(v[0], v[1], v[2]).map_err(validated)?;
                graph = Some(Graph::empty(dims));
            }
            "edge" | "e" => {
                let g = graph.as_mut().ok_or_else(|| Error::Parse {
                    line,
                    message: "edge before `dims` line".into(),
                })?;
                let v = numbers(line, args)?;
                let (a, b) = if keyword == "edge" {
                    expect_arity(line, "edge", v.len(), 6)?;
                    let dims = g.dims();
                    let x = vertex_index(VertexCoord::new(v[0], v[1], v[2]), dims)
                        .map_err(validated)?;
                    let y = vertex_index(VertexCoord::new(v[3], v[4], v[5]), dims)
                        .map_err(validated)?;
                    (x, y)
                } else {
                    expect_arity(line, "e", v.len(), 2)?;
                    (v[0], v[1])
                };
                let edge = Edge::new(a, b).map_err(validated)?;
                if !g.insert(edge).map_err(validated)? {
                    warnings.push(ParseWarning {
                        line,
                        message: format!("duplicate edge {edge} ignored"),
                    });
                }
            }
            other => {
                return Err(Error::Parse {
                    line,
                    message: format!("unknown directive {other:?}"),
                })
            }
        }
    }
    let graph = graph.ok_or(Error::Parse {
        line: text.lines().count().max(1),
        message: "missing `dims` line".into(),
    })?;
    Ok((graph, warnings))
}

pub fn parse_graph(text: &str) -> Result<Graph> {
    parse_graph_with_warnings(text).map(|(g, _)| g)
}

/// Canonical text form: the dims line, then one `edge` line per edge in
/// ascending flat order. Parsing the output gives back the same graph.
pub fn write_graph(g: &Graph) -> String {
    let d = g.dims();
    let mut out = format!("dims {} {} {}\n", d.m, d.p, d.q);
    for e in g.edges() {
        let (x, y) = g.edge_coords(e);
        writeln!(out, "edge {} {} {}  {} {} {}", x.i, x.j, x.k, y.i, y.j, y.k).unwrap();
    }
    out
}
