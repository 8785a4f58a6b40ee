//! Graph file formats.
//!
//! Text: one item per line, either `v <name>` or `<u> <v> <m>`; `#` starts a
//! comment. JSON: `{ "name"?, "vertices": [..], "edges": [{ "u", "v", "m" }] }`.

use std::fmt::Write;

use artin_core::{GraphBuilder, PresentationGraph};
use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
}

impl Format {
    /// JSON when the path ends in `.json` or the input starts with `{`.
    pub fn detect(path: Option<&str>, input: &str) -> Format {
        if path.is_some_and(|p| p.ends_with(".json")) || input.trim_start().starts_with('{') {
            Format::Json
        } else {
            Format::Text
        }
    }
}

#[derive(thiserror::Error, Debug)]
pub enum ParseError {
    #[error("line {line}: {source}")]
    Graph {
        line: usize,
        #[source]
        source: artin_core::Error,
    },
    #[error("line {line}: expected `v <name>` or `<u> <v> <m>`, got {text:?}")]
    Syntax { line: usize, text: String },
    #[error("line {line}: label {text:?} is not an integer")]
    BadLabel { line: usize, text: String },
    #[error("{0}")]
    Json(#[from] serde_json::Error),
    #[error("{what}: {source}")]
    JsonGraph {
        what: String,
        #[source]
        source: artin_core::Error,
    },
    #[error(transparent)]
    Build(artin_core::Error),
}

/// Edge endpoints paired with their source line or array index.
pub type EdgeLines = Vec<((String, String), usize)>;

/// A parsed graph with where it came from.
#[derive(Clone, Debug)]
pub struct GraphDocument {
    pub graph: PresentationGraph,
    pub source: String,
    pub format: Format,
    /// Source line (text) or array index (JSON) of each edge, by endpoint names.
    pub edge_lines: EdgeLines,
}

impl GraphDocument {
    pub fn line_of(&self, u: &str, v: &str) -> Option<usize> {
        self.edge_lines.iter().find(|((a, b), _)| (a == u && b == v) || (a == v && b == u)).map(|(_, l)| *l)
    }
}

pub fn parse(source: &str, input: &str, format: Format) -> Result<GraphDocument, ParseError> {
    match format {
        Format::Text => parse_text(source, input),
        Format::Json => parse_json(source, input),
    }
}

pub fn parse_text(source: &str, input: &str) -> Result<GraphDocument, ParseError> {
    let mut b = GraphBuilder::new();
    let mut edge_lines = Vec::new();
    for (i, raw) in input.lines().enumerate() {
        let line = i + 1;
        let content = raw.split('#').next().unwrap_or("");
        let words: Vec<&str> = content.split_whitespace().collect();
        let graph_err = |source| ParseError::Graph { line, source };
        match words.as_slice() {
            [] => {}
            ["v", name] => b.add_vertex(name).map_err(graph_err)?,
            [u, v, m] => {
                let m: i64 = m.parse().map_err(|_| ParseError::BadLabel { line, text: m.to_string() })?;
                for name in [u, v] {
                    if !b.has_vertex(name) {
                        b.add_vertex(name).map_err(graph_err)?;
                    }
                }
                b.add_edge(u, v, m).map_err(graph_err)?;
                edge_lines.push(((u.to_string(), v.to_string()), line));
            }
            _ => return Err(ParseError::Syntax { line, text: raw.trim().to_string() }),
        }
    }
    let graph = b.build().map_err(ParseError::Build)?;
    Ok(GraphDocument { graph, source: source.into(), format: Format::Text, edge_lines })
}

/// The JSON graph object.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphJson {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub vertices: Vec<String>,
    pub edges: Vec<EdgeJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EdgeJson {
    pub u: String,
    pub v: String,
    pub m: i64,
}

impl GraphJson {
    pub fn from_graph(g: &PresentationGraph) -> Self {
        GraphJson {
            name: g.name().map(str::to_string),
            vertices: g.vertices().to_vec(),
            edges: g
                .edges()
                .map(|(u, v, m)| EdgeJson { u: g.vertex_name(u).into(), v: g.vertex_name(v).into(), m: m.into() })
                .collect(),
        }
    }

    /// Validates and builds the graph; errors name the offending entry.
    pub fn to_graph(&self) -> Result<(PresentationGraph, EdgeLines), ParseError> {
        let mut b = GraphBuilder::new();
        b.set_name(self.name.clone());
        for (i, v) in self.vertices.iter().enumerate() {
            b.add_vertex(v).map_err(|source| ParseError::JsonGraph { what: format!("vertices[{i}]"), source })?;
        }
        let mut edge_lines = Vec::new();
        for (i, e) in self.edges.iter().enumerate() {
            b.add_edge(&e.u, &e.v, e.m).map_err(|source| ParseError::JsonGraph { what: format!("edges[{i}]"), source })?;
            edge_lines.push(((e.u.clone(), e.v.clone()), i));
        }
        Ok((b.build().map_err(ParseError::Build)?, edge_lines))
    }
}

pub fn parse_json(source: &str, input: &str) -> Result<GraphDocument, ParseError> {
    let doc: GraphJson = serde_json::from_str(input)?;
    let (graph, edge_lines) = doc.to_graph()?;
    Ok(GraphDocument { graph, source: source.into(), format: Format::Json, edge_lines })
}

/// Text rendering: every vertex declared, then every edge. The name is not
/// representable and is dropped.
pub fn render_text(g: &PresentationGraph) -> String {
    let mut out = String::new();
    for v in g.vertices() {
        let _ = writeln!(out, "v {v}");
    }
    for (u, v, m) in g.edges() {
        let _ = writeln!(out, "{} {} {m}", g.vertex_name(u), g.vertex_name(v));
    }
    out
}

pub fn render_json(g: &PresentationGraph) -> String {
    serde_json::to_string_pretty(&GraphJson::from_graph(g)).expect("graph JSON always serializes")
}
