//! Labelled presentation graphs and the combinatorial primitives on them.
//!
//! Vertices are stored in lexicographic order of their names, so vertex
//! indices, [`VertexSet`] iteration order and every tie-break in the crate
//! agree with the canonical name order.

use alloc::collections::{BTreeMap, VecDeque};
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::ops::{BitAnd, BitOr, Not, Sub};

use crate::{Error, MAX_LABEL, MAX_VERTICES};

/// A set of vertex indices of some ambient graph.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub const fn from_bits(bits: u64) -> Self {
        VertexSet(bits)
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    /// The set `{0, .., n-1}`.
    pub const fn full(n: usize) -> Self {
        if n >= 64 {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    pub const fn singleton(v: usize) -> Self {
        VertexSet(1u64 << v)
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        iter.into_iter().fold(Self::EMPTY, |s, v| s.with(v))
    }

    pub const fn contains(self, v: usize) -> bool {
        v < 64 && self.0 & (1u64 << v) != 0
    }

    #[must_use]
    pub const fn with(self, v: usize) -> Self {
        VertexSet(self.0 | (1u64 << v))
    }

    #[must_use]
    pub const fn without(self, v: usize) -> Self {
        VertexSet(self.0 & !(1u64 << v))
    }

    pub const fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub const fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub const fn is_subset(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub const fn intersects(self, other: VertexSet) -> bool {
        self.0 & other.0 != 0
    }

    /// Smallest member.
    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    pub fn iter(self) -> Members {
        Members(self.0)
    }

    /// Compares the ascending member sequences lexicographically (a proper
    /// prefix sorts first).
    pub fn lex_cmp(self, other: VertexSet) -> Ordering {
        self.iter().cmp(other.iter())
    }

    /// Every subset of `self`, in increasing order of the packed bits.
    pub fn subsets(self) -> impl Iterator<Item = VertexSet> {
        let full = self.0;
        let mut next = Some(0u64);
        core::iter::from_fn(move || {
            let cur = next?;
            next = if cur == full { None } else { Some((cur.wrapping_sub(full)) & full) };
            Some(VertexSet(cur))
        })
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl BitOr for VertexSet {
    type Output = VertexSet;
    fn bitor(self, rhs: Self) -> Self {
        VertexSet(self.0 | rhs.0)
    }
}

impl BitAnd for VertexSet {
    type Output = VertexSet;
    fn bitand(self, rhs: Self) -> Self {
        VertexSet(self.0 & rhs.0)
    }
}

impl Sub for VertexSet {
    type Output = VertexSet;
    fn sub(self, rhs: Self) -> Self {
        VertexSet(self.0 & !rhs.0)
    }
}

impl Not for VertexSet {
    type Output = VertexSet;
    fn not(self) -> Self {
        VertexSet(!self.0)
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        Self::from_indices(iter)
    }
}

impl IntoIterator for VertexSet {
    type Item = usize;
    type IntoIter = Members;
    fn into_iter(self) -> Members {
        self.iter()
    }
}

/// Ascending iterator over the members of a [`VertexSet`].
#[derive(Clone, Debug)]
pub struct Members(u64);

impl Iterator for Members {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Members {}

/// Graph diameter; disconnected and empty graphs have infinite diameter.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Diameter {
    Finite(usize),
    Infinite,
}

impl Diameter {
    pub fn at_least(self, d: usize) -> bool {
        match self {
            Diameter::Finite(n) => n >= d,
            Diameter::Infinite => true,
        }
    }
}

impl fmt::Display for Diameter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Diameter::Finite(n) => write!(f, "{n}"),
            Diameter::Infinite => f.write_str("infinite"),
        }
    }
}

/// Collects vertices and labelled edges, then freezes them into a
/// [`PresentationGraph`].
#[derive(Clone, Debug, Default)]
pub struct GraphBuilder {
    name: Option<String>,
    vertices: Vec<String>,
    edges: BTreeMap<(String, String), u32>,
}

impl GraphBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn set_name(&mut self, name: Option<String>) {
        self.name = name;
    }

    pub fn has_vertex(&self, name: &str) -> bool {
        self.vertices.iter().any(|v| v == name)
    }

    /// Declares a vertex; declaring the same name twice is an error.
    pub fn add_vertex(&mut self, name: &str) -> Result<(), Error> {
        if name.is_empty() {
            return Err(Error::EmptyVertexName);
        }
        if self.has_vertex(name) {
            return Err(Error::DuplicateVertex(name.into()));
        }
        self.vertices.push(name.into());
        Ok(())
    }

    /// Adds the edge `{u, v}` with label `m`; both endpoints must already be
    /// declared.
    pub fn add_edge(&mut self, u: &str, v: &str, m: i64) -> Result<(), Error> {
        for w in [u, v] {
            if !self.has_vertex(w) {
                return Err(Error::UnknownVertex(w.into()));
            }
        }
        if u == v {
            return Err(Error::SelfLoop(u.into()));
        }
        if m < 2 {
            return Err(Error::LabelTooSmall(m));
        }
        if m > MAX_LABEL as i64 {
            return Err(Error::LabelTooLarge(m));
        }
        let key = if u < v { (u.into(), v.into()) } else { (v.into(), u.into()) };
        if self.edges.contains_key(&key) {
            return Err(Error::DuplicateEdge(key.0, key.1));
        }
        self.edges.insert(key, m as u32);
        Ok(())
    }

    pub fn vertex(mut self, name: &str) -> Result<Self, Error> {
        self.add_vertex(name)?;
        Ok(self)
    }

    /// Adds an edge, declaring missing endpoints on the fly.
    pub fn edge(mut self, u: &str, v: &str, m: i64) -> Result<Self, Error> {
        for w in [u, v] {
            if !self.has_vertex(w) {
                self.add_vertex(w)?;
            }
        }
        self.add_edge(u, v, m)?;
        Ok(self)
    }

    pub fn build(self) -> Result<PresentationGraph, Error> {
        let n = self.vertices.len();
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices(n));
        }
        let mut vertices = self.vertices;
        vertices.sort();
        let index = |name: &str| vertices.binary_search_by(|v| v.as_str().cmp(name)).unwrap();
        let mut labels = vec![0u32; n * n];
        for ((u, v), m) in &self.edges {
            let (i, j) = (index(u), index(v));
            labels[i * n + j] = *m;
            labels[j * n + i] = *m;
        }
        Ok(PresentationGraph::from_parts(self.name, vertices, labels))
    }
}

/// A finite simple graph with edge labels `m >= 2`, presenting an Artin
/// group.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PresentationGraph {
    name: Option<String>,
    vertices: Vec<String>,
    labels: Vec<u32>,
    adjacency: Vec<VertexSet>,
    odd_adjacency: Vec<VertexSet>,
}

impl fmt::Debug for PresentationGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let edges: Vec<_> =
            self.edges().map(|(u, v, m)| (&self.vertices[u], &self.vertices[v], m)).collect();
        f.debug_struct("PresentationGraph")
            .field("name", &self.name)
            .field("vertices", &self.vertices)
            .field("edges", &edges)
            .finish()
    }
}

impl PresentationGraph {
    /// `vertices` must be sorted and `labels` a symmetric `n * n` matrix with
    /// zero meaning "no edge".
    fn from_parts(name: Option<String>, vertices: Vec<String>, labels: Vec<u32>) -> Self {
        let n = vertices.len();
        let mut adjacency = vec![VertexSet::EMPTY; n];
        let mut odd_adjacency = vec![VertexSet::EMPTY; n];
        for i in 0..n {
            for j in 0..n {
                let m = labels[i * n + j];
                if m != 0 {
                    adjacency[i] = adjacency[i].with(j);
                    if m % 2 == 1 {
                        odd_adjacency[i] = odd_adjacency[i].with(j);
                    }
                }
            }
        }
        PresentationGraph { name, vertices, labels, adjacency, odd_adjacency }
    }

    /// Builds a graph from a vertex list and `(u, v, m)` edges.
    pub fn new<'a, V, E>(vertices: V, edges: E) -> Result<Self, Error>
    where
        V: IntoIterator<Item = &'a str>,
        E: IntoIterator<Item = (&'a str, &'a str, u32)>,
    {
        let mut b = GraphBuilder::new();
        for v in vertices {
            b.add_vertex(v)?;
        }
        for (u, v, m) in edges {
            b.add_edge(u, v, m as i64)?;
        }
        b.build()
    }

    /// Builds a graph from edges alone; endpoints are declared implicitly.
    pub fn from_edges<'a, E>(edges: E) -> Result<Self, Error>
    where
        E: IntoIterator<Item = (&'a str, &'a str, u32)>,
    {
        edges.into_iter().try_fold(GraphBuilder::new(), |b, (u, v, m)| b.edge(u, v, m as i64))?.build()
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    #[must_use]
    pub fn with_name(mut self, name: Option<String>) -> Self {
        self.name = name;
        self
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn vertex_name(&self, v: usize) -> &str {
        &self.vertices[v]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.vertices.binary_search_by(|v| v.as_str().cmp(name)).ok()
    }

    /// Resolves vertex names into a set, rejecting unknown names.
    pub fn set_of<'a, I: IntoIterator<Item = &'a str>>(&self, names: I) -> Result<VertexSet, Error> {
        names.into_iter().try_fold(VertexSet::EMPTY, |s, name| {
            self.index_of(name).map(|i| s.with(i)).ok_or_else(|| Error::UnknownVertex(name.into()))
        })
    }

    pub fn names(&self, set: VertexSet) -> Vec<&str> {
        set.iter().map(|v| self.vertices[v].as_str()).collect()
    }

    pub fn all(&self) -> VertexSet {
        VertexSet::full(self.len())
    }

    /// Label of the edge `{u, v}`, if present.
    pub fn label(&self, u: usize, v: usize) -> Option<u32> {
        let m = self.labels[u * self.len() + v];
        (m != 0).then_some(m)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adjacency[u].contains(v)
    }

    /// Edges as `(u, v, m)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize, u32)> + '_ {
        let n = self.len();
        (0..n).flat_map(move |u| (u + 1..n).filter_map(move |v| self.label(u, v).map(|m| (u, v, m))))
    }

    pub fn edge_count(&self) -> usize {
        self.edges().count()
    }

    /// Neighbours of a single vertex.
    pub fn adjacent(&self, v: usize) -> VertexSet {
        self.adjacency[v]
    }

    /// Neighbours joined to `v` by an odd-labelled edge.
    pub fn odd_adjacent(&self, v: usize) -> VertexSet {
        self.odd_adjacency[v]
    }

    /// `link(A)`: vertices adjacent to every member of `A`. The empty
    /// intersection is the whole vertex set.
    pub fn link(&self, a: VertexSet) -> VertexSet {
        a.iter().fold(self.all(), |acc, v| acc & self.adjacency[v])
    }

    /// `N(A)`: the union of `link(v) ∪ {v}` over `v ∈ A`.
    pub fn neighbourhood(&self, a: VertexSet) -> VertexSet {
        a.iter().fold(VertexSet::EMPTY, |acc, v| acc | self.adjacency[v] | VertexSet::singleton(v))
    }

    /// Neighbourhood of `a` computed in the subgraph induced on `within`.
    pub fn neighbourhood_within(&self, a: VertexSet, within: VertexSet) -> VertexSet {
        debug_assert!(a.is_subset(within));
        self.neighbourhood(a) & within
    }

    /// `X^⊥`: vertices joined by a 2-labelled edge to every member of `X`.
    /// `∅^⊥` is the whole vertex set.
    pub fn perp(&self, x: VertexSet) -> VertexSet {
        x.iter().fold(self.all(), |acc, t| {
            let twos = (0..self.len()).filter(|&s| self.label(s, t) == Some(2)).collect::<VertexSet>();
            acc & twos
        })
    }

    /// The subgraph induced on `x`, with labels preserved. Member `k` of the
    /// result is the `k`-th smallest member of `x`.
    pub fn induced_subgraph(&self, x: VertexSet) -> PresentationGraph {
        let members: Vec<usize> = x.iter().collect();
        let n = members.len();
        let vertices = members.iter().map(|&v| self.vertices[v].clone()).collect();
        let mut labels = vec![0u32; n * n];
        for (i, &u) in members.iter().enumerate() {
            for (j, &v) in members.iter().enumerate() {
                labels[i * n + j] = self.labels[u * self.len() + v];
            }
        }
        PresentationGraph::from_parts(None, vertices, labels)
    }

    /// Lifts a set of the induced subgraph on `x` back into this graph.
    pub fn lift_from_induced(&self, x: VertexSet, local: VertexSet) -> VertexSet {
        x.iter().enumerate().filter(|(k, _)| local.contains(*k)).map(|(_, v)| v).collect()
    }

    /// Restricts a set of this graph to local indices of the induced subgraph
    /// on `x`.
    pub fn restrict_to_induced(&self, x: VertexSet, set: VertexSet) -> VertexSet {
        x.iter().enumerate().filter(|(_, v)| set.contains(*v)).map(|(k, _)| k).collect()
    }

    /// Connected components restricted to `within`, given a neighbour
    /// function. Components are ordered by their least member.
    fn components_by(&self, within: VertexSet, neighbours: impl Fn(usize) -> VertexSet) -> Vec<VertexSet> {
        let mut sets = DisjointSets::new(self.len());
        for u in within {
            for v in neighbours(u) & within {
                sets.union(u, v);
            }
        }
        let mut by_root: BTreeMap<usize, VertexSet> = BTreeMap::new();
        for v in within {
            let r = sets.find(v);
            let e = by_root.entry(r).or_default();
            *e = e.with(v);
        }
        let mut out: Vec<VertexSet> = by_root.into_values().collect();
        out.sort_by_key(|c| c.first());
        out
    }

    pub fn connected_components(&self) -> Vec<VertexSet> {
        self.components_within(self.all())
    }

    /// Components of the subgraph induced on `within`.
    pub fn components_within(&self, within: VertexSet) -> Vec<VertexSet> {
        self.components_by(within, |v| self.adjacency[v])
    }

    pub fn is_connected(&self) -> bool {
        self.connected_components().len() <= 1
    }

    /// Components of the subgraph keeping only odd-labelled edges.
    pub fn odd_components(&self) -> OddPartition {
        let classes = self.components_by(self.all(), |v| self.odd_adjacency[v]);
        let mut class_of = vec![0; self.len()];
        for (k, c) in classes.iter().enumerate() {
            for v in *c {
                class_of[v] = k;
            }
        }
        OddPartition { classes, class_of }
    }

    /// Whether some `a ∈ A` and `b ∈ B` are joined by an odd-labelled path
    /// (length zero allowed). Returns the lexicographically least such pair.
    pub fn joined_by_odd_path(&self, a: VertexSet, b: VertexSet) -> Option<(usize, usize)> {
        self.odd_components().joining_pair(a, b)
    }

    /// A shortest path from `from` to `to` using only odd-labelled edges,
    /// preferring lexicographically smaller vertices on ties.
    pub fn odd_path(&self, from: usize, to: usize) -> Option<Vec<usize>> {
        let mut parent = vec![usize::MAX; self.len()];
        parent[from] = from;
        let mut queue = VecDeque::from([from]);
        while let Some(u) = queue.pop_front() {
            if u == to {
                let mut path = vec![to];
                let mut cur = to;
                while cur != from {
                    cur = parent[cur];
                    path.push(cur);
                }
                path.reverse();
                return Some(path);
            }
            for v in self.odd_adjacency[u] {
                if parent[v] == usize::MAX {
                    parent[v] = u;
                    queue.push_back(v);
                }
            }
        }
        None
    }

    /// Breadth-first distances from `v`; `None` for unreachable vertices.
    pub fn distances_from(&self, v: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.len()];
        dist[v] = Some(0);
        let mut queue = VecDeque::from([v]);
        while let Some(u) = queue.pop_front() {
            let d = dist[u].unwrap();
            for w in self.adjacency[u] {
                if dist[w].is_none() {
                    dist[w] = Some(d + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    pub fn diameter(&self) -> Diameter {
        if self.is_empty() {
            return Diameter::Infinite;
        }
        let mut best = 0;
        for v in 0..self.len() {
            for d in self.distances_from(v) {
                match d {
                    Some(d) => best = best.max(d),
                    None => return Diameter::Infinite,
                }
            }
        }
        Diameter::Finite(best)
    }

    /// Whether `x` is a clique.
    pub fn is_clique(&self, x: VertexSet) -> bool {
        x.iter().all(|v| (x.without(v)).is_subset(self.adjacency[v]))
    }
}

/// Partition of the vertices into odd-labelled path classes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OddPartition {
    classes: Vec<VertexSet>,
    class_of: Vec<usize>,
}

impl OddPartition {
    pub fn classes(&self) -> &[VertexSet] {
        &self.classes
    }

    pub fn class_of(&self, v: usize) -> usize {
        self.class_of[v]
    }

    pub fn class_containing(&self, v: usize) -> VertexSet {
        self.classes[self.class_of[v]]
    }

    pub fn same_class(&self, u: usize, v: usize) -> bool {
        self.class_of[u] == self.class_of[v]
    }

    /// Lexicographically least `(a, b) ∈ A × B` lying in a common class.
    pub fn joining_pair(&self, a: VertexSet, b: VertexSet) -> Option<(usize, usize)> {
        a.iter().find_map(|u| b.iter().find(|&v| self.same_class(u, v)).map(|v| (u, v)))
    }
}

/// Union-find with path halving and union by size.
#[derive(Clone, Debug)]
pub(crate) struct DisjointSets {
    parent: Vec<usize>,
    size: Vec<usize>,
}

impl DisjointSets {
    pub(crate) fn new(n: usize) -> Self {
        DisjointSets { parent: (0..n).collect(), size: vec![1; n] }
    }

    pub(crate) fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    pub(crate) fn union(&mut self, a: usize, b: usize) {
        let (mut a, mut b) = (self.find(a), self.find(b));
        if a == b {
            return;
        }
        if self.size[a] < self.size[b] {
            core::mem::swap(&mut a, &mut b);
        }
        self.parent[b] = a;
        self.size[a] += self.size[b];
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    fn set(g: &PresentationGraph, names: &[&str]) -> VertexSet {
        g.set_of(names.iter().copied()).unwrap()
    }

    fn path_two_three() -> PresentationGraph {
        PresentationGraph::from_edges([("a", "b", 2), ("b", "c", 3)]).unwrap()
    }

    #[test]
    fn link_examples() {
        let k3 = families::complete(3, 5);
        assert_eq!(k3.link(set(&k3, &["a"])), set(&k3, &["b", "c"]));

        let p = PresentationGraph::from_edges([("a", "b", 2), ("b", "c", 2)]).unwrap();
        assert_eq!(p.link(set(&p, &["a", "c"])), set(&p, &["b"]));

        let k1 = families::complete(1, 2);
        assert_eq!(k1.link(k1.all()), VertexSet::EMPTY);
        assert_eq!(p.link(VertexSet::EMPTY), p.all());
    }

    #[test]
    fn neighbourhood_examples() {
        let g = path_two_three();
        assert_eq!(g.neighbourhood(set(&g, &["a"])), set(&g, &["a", "b"]));
        assert_eq!(g.neighbourhood(VertexSet::EMPTY), VertexSet::EMPTY);
    }

    #[test]
    fn perp_examples() {
        let g = families::complete(2, 2);
        assert_eq!(g.perp(VertexSet::EMPTY), g.all());
        assert_eq!(g.perp(set(&g, &["a"])), set(&g, &["b"]));
        let g3 = families::complete(2, 3);
        assert_eq!(g3.perp(set(&g3, &["a"])), VertexSet::EMPTY);
    }

    #[test]
    fn induced_subgraph_examples() {
        let g = path_two_three();
        assert_eq!(g.induced_subgraph(g.all()), g);
        assert!(g.induced_subgraph(VertexSet::EMPTY).is_empty());
        let sub = g.induced_subgraph(set(&g, &["a", "c"]));
        assert_eq!(sub.vertices(), ["a", "c"]);
        assert_eq!(sub.edge_count(), 0);
    }

    #[test]
    fn odd_components_examples() {
        let even = families::cycle(&[2, 4, 6, 2]);
        assert!(even.odd_components().classes().iter().all(|c| c.len() == 1));

        let g = path_two_three();
        let odd = g.odd_components();
        assert_eq!(odd.classes(), [set(&g, &["a"]), set(&g, &["b", "c"])]);
    }

    #[test]
    fn joined_by_odd_path_examples() {
        let g = path_two_three();
        let b = g.index_of("b").unwrap();
        assert_eq!(g.joined_by_odd_path(set(&g, &["a", "b"]), set(&g, &["b", "c"])), Some((b, b)));
        assert_eq!(g.joined_by_odd_path(set(&g, &["a"]), set(&g, &["c"])), None);
    }

    #[test]
    fn odd_path_is_shortest_and_odd() {
        let g = PresentationGraph::from_edges([("a", "b", 3), ("b", "c", 5), ("a", "d", 3), ("d", "c", 4)]).unwrap();
        let (a, c) = (g.index_of("a").unwrap(), g.index_of("c").unwrap());
        let p = g.odd_path(a, c).unwrap();
        assert_eq!(g.names(p.iter().copied().collect()), ["a", "b", "c"]);
        assert!(p.windows(2).all(|w| g.label(w[0], w[1]).unwrap() % 2 == 1));
        assert_eq!(g.odd_path(a, a), Some(vec![a]));
    }

    #[test]
    fn diameter_examples() {
        assert_eq!(families::complete(4, 2).diameter(), Diameter::Finite(1));
        assert_eq!(families::path(&[2, 2, 2]).diameter(), Diameter::Finite(3));
        assert_eq!(families::discrete(2).diameter(), Diameter::Infinite);
        assert_eq!(families::discrete(0).diameter(), Diameter::Infinite);
        assert_eq!(families::discrete(1).diameter(), Diameter::Finite(0));
        assert!(Diameter::Infinite.at_least(3));
    }

    #[test]
    fn builder_rejects_bad_input() {
        assert_eq!(GraphBuilder::new().edge("a", "a", 2).unwrap_err(), Error::SelfLoop("a".into()));
        assert_eq!(GraphBuilder::new().edge("a", "b", 1).unwrap_err(), Error::LabelTooSmall(1));
        assert_eq!(
            GraphBuilder::new().edge("a", "b", 1_000_001).unwrap_err(),
            Error::LabelTooLarge(1_000_001)
        );
        let dup = GraphBuilder::new().edge("a", "b", 2).unwrap().edge("b", "a", 3);
        assert_eq!(dup.unwrap_err(), Error::DuplicateEdge("a".into(), "b".into()));
        assert_eq!(GraphBuilder::new().vertex("").unwrap_err(), Error::EmptyVertexName);
        assert!(matches!(
            GraphBuilder::new().vertex("x").unwrap().vertex("x"),
            Err(Error::DuplicateVertex(_))
        ));
        let mut b = GraphBuilder::new();
        assert_eq!(b.add_edge("p", "q", 2).unwrap_err(), Error::UnknownVertex("p".into()));
        let mut big = GraphBuilder::new();
        for i in 0..65 {
            big.add_vertex(&alloc::format!("v{i}")).unwrap();
        }
        assert_eq!(big.build().unwrap_err(), Error::TooManyVertices(65));
    }

    #[test]
    fn vertices_are_sorted_and_case_sensitive() {
        let g = PresentationGraph::from_edges([("b", "B", 2), ("a", "b", 3)]).unwrap();
        assert_eq!(g.vertices(), ["B", "a", "b"]);
        assert_eq!(g.set_of(["z"]).unwrap_err(), Error::UnknownVertex("z".into()));
    }

    #[test]
    fn vertex_set_subsets_and_order() {
        let s = VertexSet::from_indices([1, 3]);
        let subs: Vec<_> = s.subsets().collect();
        assert_eq!(subs, [
            VertexSet::EMPTY,
            VertexSet::from_indices([1]),
            VertexSet::from_indices([3]),
            s
        ]);
        assert_eq!(VertexSet::EMPTY.subsets().count(), 1);
        assert_eq!(VertexSet::from_indices([0, 5]).lex_cmp(VertexSet::from_indices([0, 5, 6])), Ordering::Less);
        assert_eq!(VertexSet::from_indices([1]).lex_cmp(VertexSet::from_indices([0, 5])), Ordering::Greater);
    }
}
