//! Coxeter matrices, Dynkin diagrams and recognition of finite Coxeter types.
//!
//! The Dynkin diagram of `X` keeps the edges of `Γ_X` with label `>= 3` and
//! joins every non-adjacent pair by an `∞` edge. Its connected components
//! are the irreducible components of `X`; a component is spherical exactly
//! when its diagram is one of the finite types `A_n, B_n, D_n, E_6, E_7, E_8,
//! F_4, H_3, H_4, I_2(m)`.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::graph::{DisjointSets, PresentationGraph, VertexSet};
use crate::Error;

/// An entry of a Coxeter matrix.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CoxeterLabel {
    Finite(u32),
    Infinity,
}

impl CoxeterLabel {
    /// Whether the pair is joined in the Dynkin diagram.
    pub fn is_dynkin_edge(self) -> bool {
        !matches!(self, CoxeterLabel::Finite(1 | 2))
    }
}

impl fmt::Display for CoxeterLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoxeterLabel::Finite(m) => write!(f, "{m}"),
            CoxeterLabel::Infinity => f.write_str("∞"),
        }
    }
}

/// Symmetric Coxeter matrix over an ordered list of generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoxeterMatrix {
    names: Vec<String>,
    entries: Vec<CoxeterLabel>,
}

impl CoxeterMatrix {
    /// The Coxeter matrix of `Γ_X`: the edge label where there is an edge,
    /// `∞` where there is none.
    pub fn from_graph(g: &PresentationGraph, x: VertexSet) -> Self {
        let members: Vec<usize> = x.iter().collect();
        let n = members.len();
        let mut entries = vec![CoxeterLabel::Finite(1); n * n];
        for (i, &u) in members.iter().enumerate() {
            for (j, &v) in members.iter().enumerate() {
                if i != j {
                    entries[i * n + j] = graph_entry(g, u, v);
                }
            }
        }
        CoxeterMatrix { names: members.iter().map(|&v| g.vertex_name(v).into()).collect(), entries }
    }

    pub fn rank(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn get(&self, i: usize, j: usize) -> CoxeterLabel {
        self.entries[i * self.rank() + j]
    }

    /// Connected components of the Dynkin diagram, as sets of local indices.
    pub fn irreducible_components(&self) -> Vec<VertexSet> {
        components(self.rank(), |i, j| self.get(i, j))
    }

    /// The principal submatrix on the local indices in `set`.
    pub fn restrict(&self, set: VertexSet) -> CoxeterMatrix {
        let members: Vec<usize> = set.iter().collect();
        let n = members.len();
        let mut entries = Vec::with_capacity(n * n);
        for &u in &members {
            for &v in &members {
                entries.push(self.get(u, v));
            }
        }
        CoxeterMatrix { names: members.iter().map(|&v| self.names[v].clone()).collect(), entries }
    }

    /// Recognises an irreducible matrix as a finite type, or `Ok(None)` when
    /// the group is infinite. Reducible (or empty) input is a contract
    /// violation.
    pub fn recognize_finite_type(&self) -> Result<Option<FiniteType>, Error> {
        if self.irreducible_components().len() != 1 {
            return Err(Error::Contract("finite-type recognition needs an irreducible Coxeter matrix"));
        }
        let members: Vec<usize> = (0..self.rank()).collect();
        Ok(classify(&members, |i, j| self.get(i, j)))
    }

    /// Whether every irreducible component has finite type.
    pub fn is_finite(&self) -> bool {
        self.irreducible_components().into_iter().all(|c| {
            let members: Vec<usize> = c.iter().collect();
            classify(&members, |i, j| self.get(i, j)).is_some()
        })
    }
}

fn graph_entry(g: &PresentationGraph, u: usize, v: usize) -> CoxeterLabel {
    if u == v {
        return CoxeterLabel::Finite(1);
    }
    g.label(u, v).map_or(CoxeterLabel::Infinity, CoxeterLabel::Finite)
}

fn components(n: usize, entry: impl Fn(usize, usize) -> CoxeterLabel) -> Vec<VertexSet> {
    let mut sets = DisjointSets::new(n);
    for i in 0..n {
        for j in i + 1..n {
            if entry(i, j).is_dynkin_edge() {
                sets.union(i, j);
            }
        }
    }
    let mut out: Vec<VertexSet> = Vec::new();
    let mut root_slot = vec![usize::MAX; n];
    for v in 0..n {
        let r = sets.find(v);
        if root_slot[r] == usize::MAX {
            root_slot[r] = out.len();
            out.push(VertexSet::EMPTY);
        }
        out[root_slot[r]] = out[root_slot[r]].with(v);
    }
    out
}

/// An irreducible finite Coxeter type.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FiniteType {
    A(usize),
    B(usize),
    D(usize),
    E(usize),
    F4,
    H(usize),
    /// Rank two with edge label `m`; this also covers `A_2 = I_2(3)`,
    /// `B_2 = I_2(4)` and `G_2 = I_2(6)`.
    I2(u32),
}

impl FiniteType {
    pub fn rank(self) -> usize {
        match self {
            FiniteType::A(n) | FiniteType::B(n) | FiniteType::D(n) | FiniteType::E(n) | FiniteType::H(n) => n,
            FiniteType::F4 => 4,
            FiniteType::I2(_) => 2,
        }
    }

    /// Order of the corresponding finite Coxeter group.
    pub fn order(self) -> u128 {
        let fact = |n: usize| (1..=n as u128).product::<u128>();
        match self {
            FiniteType::A(n) => fact(n + 1),
            FiniteType::B(n) => (1u128 << n) * fact(n),
            FiniteType::D(n) => (1u128 << (n - 1)) * fact(n),
            FiniteType::E(6) => 51_840,
            FiniteType::E(7) => 2_903_040,
            FiniteType::E(_) => 696_729_600,
            FiniteType::F4 => 1_152,
            FiniteType::H(3) => 120,
            FiniteType::H(_) => 14_400,
            FiniteType::I2(m) => 2 * m as u128,
        }
    }
}

impl fmt::Display for FiniteType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FiniteType::A(n) => write!(f, "A{n}"),
            FiniteType::B(n) => write!(f, "B{n}"),
            FiniteType::D(n) => write!(f, "D{n}"),
            FiniteType::E(n) => write!(f, "E{n}"),
            FiniteType::F4 => f.write_str("F4"),
            FiniteType::H(n) => write!(f, "H{n}"),
            FiniteType::I2(m) => write!(f, "I2({m})"),
        }
    }
}

/// Pattern-matches a connected Dynkin diagram on `members` against the
/// finite-type classification.
fn classify(members: &[usize], entry: impl Fn(usize, usize) -> CoxeterLabel) -> Option<FiniteType> {
    let n = members.len();
    match n {
        0 => return None,
        1 => return Some(FiniteType::A(1)),
        _ => {}
    }
    // local adjacency of the Dynkin diagram, labels in a dense matrix
    let mut label = vec![0u32; n * n];
    let mut adj = vec![Vec::new(); n];
    let mut edge_count = 0;
    for i in 0..n {
        for j in i + 1..n {
            match entry(members[i], members[j]) {
                CoxeterLabel::Infinity => return None,
                CoxeterLabel::Finite(m) if m >= 3 => {
                    label[i * n + j] = m;
                    label[j * n + i] = m;
                    adj[i].push(j);
                    adj[j].push(i);
                    edge_count += 1;
                }
                CoxeterLabel::Finite(_) => {}
            }
        }
    }
    if n == 2 {
        assert_eq!(edge_count, 1, "rank-two irreducible component must carry a label >= 3");
        return Some(FiniteType::I2(label[1]));
    }
    // finite types are trees
    if edge_count != n - 1 {
        return None;
    }
    let branch: Vec<usize> = (0..n).filter(|&v| adj[v].len() >= 3).collect();
    if adj.iter().any(|a| a.len() > 3) || branch.len() > 1 {
        return None;
    }

    if let [centre] = branch[..] {
        if (0..n).any(|i| adj[i].iter().any(|&j| label[i * n + j] != 3)) {
            return None;
        }
        let mut arms: Vec<usize> = adj[centre]
            .iter()
            .map(|&start| {
                let (mut prev, mut cur, mut len) = (centre, start, 1);
                while let Some(&next) = adj[cur].iter().find(|&&w| w != prev) {
                    prev = cur;
                    cur = next;
                    len += 1;
                }
                len
            })
            .collect();
        arms.sort_unstable();
        return match arms[..] {
            [1, 1, _] => Some(FiniteType::D(n)),
            [1, 2, 2] => Some(FiniteType::E(6)),
            [1, 2, 3] => Some(FiniteType::E(7)),
            [1, 2, 4] => Some(FiniteType::E(8)),
            _ => None,
        };
    }

    // a path: read the labels from one end
    let start = (0..n).find(|&v| adj[v].len() == 1)?;
    let mut labels = Vec::with_capacity(n - 1);
    let (mut prev, mut cur) = (usize::MAX, start);
    while let Some(&next) = adj[cur].iter().find(|&&w| w != prev) {
        labels.push(label[cur * n + next]);
        prev = cur;
        cur = next;
    }
    let odd_ones: Vec<(usize, u32)> = labels.iter().copied().enumerate().filter(|&(_, m)| m != 3).collect();
    match odd_ones[..] {
        [] => Some(FiniteType::A(n)),
        [(pos, m)] if pos == 0 || pos == labels.len() - 1 => match (m, n) {
            (4, _) => Some(FiniteType::B(n)),
            (5, 3) => Some(FiniteType::H(3)),
            (5, 4) => Some(FiniteType::H(4)),
            _ => None,
        },
        [(1, 4)] if n == 4 => Some(FiniteType::F4),
        _ => None,
    }
}

/// Irreducible components of `X` in the ambient graph's indices.
pub fn irreducible_components(g: &PresentationGraph, x: VertexSet) -> Vec<VertexSet> {
    let members: Vec<usize> = x.iter().collect();
    components(members.len(), |i, j| graph_entry(g, members[i], members[j]))
        .into_iter()
        .map(|c| c.iter().map(|k| members[k]).collect())
        .collect()
}

/// Finite type of an irreducible component `c` of the ambient graph.
pub fn component_type(g: &PresentationGraph, c: VertexSet) -> Option<FiniteType> {
    let members: Vec<usize> = c.iter().collect();
    classify(&members, |u, v| graph_entry(g, u, v))
}

/// Whether the special subgroup on `X` is spherical. `∅` is spherical.
pub fn is_spherical(g: &PresentationGraph, x: VertexSet) -> bool {
    irreducible_components(g, x).into_iter().all(|c| component_type(g, c).is_some())
}

/// Irreducible components of `X` with their finite types (if any), and the
/// spherical / aspherical parts `X_s`, `X_as`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SphericityPartition {
    pub components: Vec<(VertexSet, Option<FiniteType>)>,
    pub spherical: VertexSet,
    pub aspherical: VertexSet,
}

pub fn sphericity_partition(g: &PresentationGraph, x: VertexSet) -> SphericityPartition {
    let components: Vec<_> =
        irreducible_components(g, x).into_iter().map(|c| (c, component_type(g, c))).collect();
    let (mut spherical, mut aspherical) = (VertexSet::EMPTY, VertexSet::EMPTY);
    for (c, t) in &components {
        if t.is_some() {
            spherical = spherical | *c;
        } else {
            aspherical = aspherical | *c;
        }
    }
    SphericityPartition { components, spherical, aspherical }
}
