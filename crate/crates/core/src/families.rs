//! Standard graph families: complete `K_n`, discrete `O_n`, paths `P_n` and
//! cycles `C_n`, with caller-chosen labels.
//!
//! Vertices are named `a, b, c, ...` (or `v00, v01, ...` beyond 26) so that
//! name order matches construction order.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::graph::{GraphBuilder, PresentationGraph};

pub fn vertex_names(n: usize) -> Vec<String> {
    if n <= 26 {
        (0..n).map(|i| String::from((b'a' + i as u8) as char)).collect()
    } else {
        (0..n).map(|i| format!("v{i:02}")).collect()
    }
}

fn build(n: usize, edges: impl IntoIterator<Item = (usize, usize, u32)>) -> PresentationGraph {
    let names = vertex_names(n);
    let mut b = GraphBuilder::new();
    for v in &names {
        b.add_vertex(v).expect("generated names are distinct");
    }
    for (u, v, m) in edges {
        b.add_edge(&names[u], &names[v], m as i64).expect("generated edges are valid");
    }
    b.build().expect("family graphs stay within size limits")
}

/// `K_n` with every label equal to `m`.
pub fn complete(n: usize, m: u32) -> PresentationGraph {
    build(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v, m))))
}

/// `O_n`, no edges.
pub fn discrete(n: usize) -> PresentationGraph {
    build(n, core::iter::empty())
}

/// The path on `labels.len() + 1` vertices with the given consecutive labels.
pub fn path(labels: &[u32]) -> PresentationGraph {
    build(labels.len() + 1, labels.iter().enumerate().map(|(i, &m)| (i, i + 1, m)))
}

/// The cycle on `labels.len()` vertices (at least 3); edge `i` joins vertex
/// `i` to `i + 1 mod n`.
pub fn cycle(labels: &[u32]) -> PresentationGraph {
    let n = labels.len();
    assert!(n >= 3, "a cycle needs at least three vertices");
    build(n, labels.iter().enumerate().map(|(i, &m)| (i.min((i + 1) % n), i.max((i + 1) % n), m)))
}

/// Arbitrary graph on `n` generated vertices from index-based edges.
pub fn from_index_edges(n: usize, edges: &[(usize, usize, u32)]) -> PresentationGraph {
    build(n, edges.iter().copied())
}
