//! Graphviz export.

use std::fmt::Write;

use artin_core::PresentationGraph;

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

/// Undirected DOT graph with `label=<m>` on every edge. With `highlight_odd`,
/// odd-labelled edges are drawn bold red.
pub fn to_dot(g: &PresentationGraph, highlight_odd: bool) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "graph {} {{", quote(g.name().unwrap_or("G")));
    for v in g.vertices() {
        let _ = writeln!(out, "  {};", quote(v));
    }
    for (u, v, m) in g.edges() {
        let extra = if highlight_odd && m % 2 == 1 { ", color=red, penwidth=2" } else { "" };
        let _ = writeln!(out, "  {} -- {} [label={m}{extra}];", quote(g.vertex_name(u)), quote(g.vertex_name(v)));
    }
    out.push_str("}\n");
    out
}
