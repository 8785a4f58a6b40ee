//! Graph-checkable classes of Artin groups and the registry of classes known
//! to have the parabolic intersection property (PIP) and the ribbon
//! property (RP).

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::coxeter::{irreducible_components, is_spherical};
use crate::graph::{PresentationGraph, VertexSet};
use crate::Error;

/// Checkable evidence that a class predicate fails (or, for reducibility,
/// that the Dynkin diagram is connected).
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    /// An edge whose label breaks the predicate.
    Edge { u: usize, v: usize, m: u32 },
    /// A vertex with two incident 2-labelled edges, to `first` and `second`.
    Vertex { v: usize, first: usize, second: usize },
    /// A spherical three-element subset.
    SphericalTriple(VertexSet),
    /// A clique whose special subgroup is not spherical.
    NonSphericalClique(VertexSet),
    /// An irreducible component that is not of finite type.
    NonSphericalComponent(VertexSet),
    /// Edges of a spanning tree of the Dynkin diagram.
    DynkinSpanningTree(Vec<(usize, usize)>),
}

/// A class predicate's value, with a witness whenever it is false.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassFlag {
    pub holds: bool,
    pub witness: Option<Witness>,
}

impl ClassFlag {
    fn from_witness(witness: Option<Witness>) -> Self {
        ClassFlag { holds: witness.is_none(), witness }
    }
}

/// Every class predicate evaluated on one graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassReport {
    pub right_angled: ClassFlag,
    pub even: ClassFlag,
    pub large_type: ClassFlag,
    pub two_two_free: ClassFlag,
    pub two_dimensional: ClassFlag,
    pub fc_type: ClassFlag,
    pub spherical: ClassFlag,
    /// Witness (a Dynkin spanning tree) is attached when this is false.
    pub reducible: ClassFlag,
}

pub fn classify(g: &PresentationGraph) -> ClassReport {
    let components = irreducible_components(g, g.all());
    let reducible = if components.len() > 1 {
        ClassFlag { holds: true, witness: None }
    } else {
        ClassFlag { holds: false, witness: Some(Witness::DynkinSpanningTree(dynkin_spanning_tree(g))) }
    };
    ClassReport {
        right_angled: ClassFlag::from_witness(right_angled_witness(g)),
        even: ClassFlag::from_witness(even_witness(g)),
        large_type: ClassFlag::from_witness(large_type_witness(g)),
        two_two_free: ClassFlag::from_witness(two_two_free_witness(g)),
        two_dimensional: ClassFlag::from_witness(two_dimensional_witness(g)),
        fc_type: ClassFlag::from_witness(fc_type_witness(g)),
        spherical: ClassFlag::from_witness(spherical_witness(g)),
        reducible,
    }
}

fn first_edge(g: &PresentationGraph, bad: impl Fn(u32) -> bool) -> Option<Witness> {
    g.edges().find(|&(_, _, m)| bad(m)).map(|(u, v, m)| Witness::Edge { u, v, m })
}

/// All labels are 2.
pub fn right_angled_witness(g: &PresentationGraph) -> Option<Witness> {
    first_edge(g, |m| m != 2)
}

/// All labels are even.
pub fn even_witness(g: &PresentationGraph) -> Option<Witness> {
    first_edge(g, |m| m % 2 == 1)
}

/// All labels are at least 3.
pub fn large_type_witness(g: &PresentationGraph) -> Option<Witness> {
    first_edge(g, |m| m == 2)
}

/// Every vertex meets at most one 2-labelled edge.
pub fn two_two_free_witness(g: &PresentationGraph) -> Option<Witness> {
    (0..g.len()).find_map(|v| {
        let mut twos = g.adjacent(v).iter().filter(|&u| g.label(u, v) == Some(2));
        match (twos.next(), twos.next()) {
            (Some(first), Some(second)) => Some(Witness::Vertex { v, first, second }),
            _ => None,
        }
    })
}

/// No spherical subset of size three. Any spherical subset of size at least
/// three contains a spherical triple, so triples suffice.
pub fn two_dimensional_witness(g: &PresentationGraph) -> Option<Witness> {
    let n = g.len();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                let t = VertexSet::from_indices([a, b, c]);
                // a non-adjacent pair is an ∞ edge, which is never spherical
                if g.is_clique(t) && is_spherical(g, t) {
                    return Some(Witness::SphericalTriple(t));
                }
            }
        }
    }
    None
}

/// Every clique is spherical. Checking maximal cliques is enough since
/// subsets of spherical sets are spherical.
///
/// The witness is an inclusion-minimal non-spherical clique; among the
/// candidates the smallest, then the one with the smallest sorted labels,
/// then the lexicographically least is reported.
pub fn fc_type_witness(g: &PresentationGraph) -> Option<Witness> {
    maximal_cliques(g)
        .into_iter()
        .filter(|&c| !is_spherical(g, c))
        .map(|c| shrink_non_spherical(g, c))
        .min_by(|&x, &y| {
            x.len()
                .cmp(&y.len())
                .then_with(|| clique_labels(g, x).cmp(&clique_labels(g, y)))
                .then_with(|| x.lex_cmp(y))
        })
        .map(Witness::NonSphericalClique)
}

fn shrink_non_spherical(g: &PresentationGraph, mut c: VertexSet) -> VertexSet {
    let mut changed = true;
    while changed {
        changed = false;
        for v in c {
            if !is_spherical(g, c.without(v)) {
                c = c.without(v);
                changed = true;
                break;
            }
        }
    }
    c
}

fn clique_labels(g: &PresentationGraph, c: VertexSet) -> Vec<u32> {
    let mut labels: Vec<u32> =
        c.iter().flat_map(|u| c.iter().filter(move |&v| u < v).map(move |v| (u, v))).filter_map(|(u, v)| g.label(u, v)).collect();
    labels.sort_unstable();
    labels
}

/// Maximal cliques (Bron–Kerbosch with pivoting), ordered lexicographically.
pub fn maximal_cliques(g: &PresentationGraph) -> Vec<VertexSet> {
    fn expand(g: &PresentationGraph, r: VertexSet, mut p: VertexSet, mut x: VertexSet, out: &mut Vec<VertexSet>) {
        if p.is_empty() {
            if x.is_empty() {
                out.push(r);
            }
            return;
        }
        let pivot = (p | x).iter().max_by_key(|&u| (p & g.adjacent(u)).len()).unwrap();
        for v in p - g.adjacent(pivot) {
            let nv = g.adjacent(v);
            expand(g, r.with(v), p & nv, x & nv, out);
            p = p.without(v);
            x = x.with(v);
        }
    }
    let mut out = Vec::new();
    if !g.is_empty() {
        expand(g, VertexSet::EMPTY, g.all(), VertexSet::EMPTY, &mut out);
    }
    out.sort_by(|a, b| a.lex_cmp(*b));
    out
}

/// The whole special subgroup is spherical.
pub fn spherical_witness(g: &PresentationGraph) -> Option<Witness> {
    irreducible_components(g, g.all())
        .into_iter()
        .find(|&c| crate::coxeter::component_type(g, c).is_none())
        .map(Witness::NonSphericalComponent)
}

fn dynkin_spanning_tree(g: &PresentationGraph) -> Vec<(usize, usize)> {
    let n = g.len();
    let mut seen = VertexSet::EMPTY;
    let mut tree = Vec::new();
    let mut stack = Vec::new();
    if n > 0 {
        seen = seen.with(0);
        stack.push(0);
    }
    while let Some(u) = stack.pop() {
        for v in 0..n {
            if !seen.contains(v) && g.label(u, v) != Some(2) {
                seen = seen.with(v);
                tree.push((u, v));
                stack.push(v);
            }
        }
    }
    tree
}

pub fn is_right_angled(g: &PresentationGraph) -> bool {
    right_angled_witness(g).is_none()
}

pub fn is_even(g: &PresentationGraph) -> bool {
    even_witness(g).is_none()
}

pub fn is_large_type(g: &PresentationGraph) -> bool {
    large_type_witness(g).is_none()
}

pub fn is_two_two_free(g: &PresentationGraph) -> bool {
    two_two_free_witness(g).is_none()
}

pub fn is_two_dimensional(g: &PresentationGraph) -> bool {
    two_dimensional_witness(g).is_none()
}

pub fn is_fc_type(g: &PresentationGraph) -> bool {
    fc_type_witness(g).is_none()
}

pub fn is_spherical_graph(g: &PresentationGraph) -> bool {
    is_spherical(g, g.all())
}

/// A class of Artin groups with both PIP and RP.
#[derive(Clone, Copy)]
pub enum PipRpRule {
    Spherical,
    /// Even and FC-type.
    EvenFc,
    /// 2-dimensional and (2,2)-free.
    TwoDimTwoTwoFree,
    /// Caller-supplied class.
    Custom { id: &'static str, citation: &'static str, predicate: fn(&PresentationGraph) -> bool },
}

impl PipRpRule {
    pub fn id(&self) -> &'static str {
        match self {
            PipRpRule::Spherical => "spherical",
            PipRpRule::EvenFc => "even_fc",
            PipRpRule::TwoDimTwoTwoFree => "two_dim_two_two_free",
            PipRpRule::Custom { id, .. } => id,
        }
    }

    pub fn citation(&self) -> &'static str {
        match self {
            PipRpRule::Spherical => "spherical Artin groups: Garside structure (Brieskorn–Saito; Deligne)",
            PipRpRule::EvenFc => "PIP: Antolín–Foniqi 2022, Thm 1.1; RP: Godelle (FC type), Thm 0.3",
            PipRpRule::TwoDimTwoTwoFree => "PIP: Blufstein, Thm 1.3; RP: Godelle 2007, Cor 4.12",
            PipRpRule::Custom { citation, .. } => citation,
        }
    }

    pub fn holds(&self, g: &PresentationGraph) -> bool {
        match self {
            PipRpRule::Spherical => is_spherical_graph(g),
            PipRpRule::EvenFc => is_even(g) && is_fc_type(g),
            PipRpRule::TwoDimTwoTwoFree => is_two_dimensional(g) && is_two_two_free(g),
            PipRpRule::Custom { predicate, .. } => predicate(g),
        }
    }
}

impl PartialEq for PipRpRule {
    fn eq(&self, other: &Self) -> bool {
        self.id() == other.id()
    }
}

impl Eq for PipRpRule {}

impl fmt::Debug for PipRpRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

/// Ordered list of PIP/RP rules consulted by [`pip_rp_certificate`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PipRpRegistry {
    rules: Vec<PipRpRule>,
}

impl Default for PipRpRegistry {
    fn default() -> Self {
        PipRpRegistry { rules: vec![PipRpRule::Spherical, PipRpRule::EvenFc, PipRpRule::TwoDimTwoTwoFree] }
    }
}

impl PipRpRegistry {
    pub fn empty() -> Self {
        PipRpRegistry { rules: Vec::new() }
    }

    pub fn rules(&self) -> &[PipRpRule] {
        &self.rules
    }

    /// Appends a rule, replacing one with the same id.
    #[must_use]
    pub fn with(mut self, rule: PipRpRule) -> Self {
        self.rules.retain(|r| r.id() != rule.id());
        self.rules.push(rule);
        self
    }

    #[must_use]
    pub fn without(mut self, id: &str) -> Self {
        self.rules.retain(|r| r.id() != id);
        self
    }

    pub fn find(&self, id: &str) -> Option<&PipRpRule> {
        self.rules.iter().find(|r| r.id() == id)
    }

    fn first_match(&self, g: &PresentationGraph) -> Option<PipRpRule> {
        self.rules.iter().find(|r| r.holds(g)).copied()
    }
}

/// The superset graph through which a hypothesis was certified.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SupersetWitness {
    pub graph: PresentationGraph,
    /// `embedding[v]` is the superset vertex that `v` maps to.
    pub embedding: Vec<usize>,
}

/// Whether the PIP/RP hypothesis holds for a side of a splitting.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PipRpEvidence {
    Certified { rule: PipRpRule, superset: Option<SupersetWitness> },
    Unknown,
}

impl PipRpEvidence {
    pub fn is_certified(&self) -> bool {
        matches!(self, PipRpEvidence::Certified { .. })
    }

    /// `spherical`, `even_fc`, `two_dim_two_two_free`, `user_superset`, or a
    /// custom id; `None` when unknown.
    pub fn rule_id(&self) -> Option<&'static str> {
        match self {
            PipRpEvidence::Certified { superset: Some(_), .. } => Some("user_superset"),
            PipRpEvidence::Certified { rule, .. } => Some(rule.id()),
            PipRpEvidence::Unknown => None,
        }
    }

    /// Re-runs the recorded rule (and the embedding check) on `g`.
    pub fn revalidate(&self, g: &PresentationGraph) -> bool {
        match self {
            PipRpEvidence::Certified { rule, superset: None } => rule.holds(g),
            PipRpEvidence::Certified { rule, superset: Some(s) } => {
                is_induced_embedding(g, &s.graph, &s.embedding) && rule.holds(&s.graph)
            }
            PipRpEvidence::Unknown => true,
        }
    }
}

/// Certifies PIP and RP for `A_g`, either directly or through a superset
/// graph containing `g` as an induced labelled subgraph.
pub fn pip_rp_certificate(
    g: &PresentationGraph,
    superset: Option<&PresentationGraph>,
    registry: &PipRpRegistry,
) -> Result<PipRpEvidence, Error> {
    let superset = match superset {
        Some(h) => {
            let embedding = induced_embedding(g, h).ok_or(Error::NotInducedSubgraph)?;
            Some(SupersetWitness { graph: h.clone(), embedding })
        }
        None => None,
    };
    if let Some(rule) = registry.first_match(g) {
        return Ok(PipRpEvidence::Certified { rule, superset: None });
    }
    if let Some(s) = superset {
        if let Some(rule) = registry.first_match(&s.graph) {
            return Ok(PipRpEvidence::Certified { rule, superset: Some(s) });
        }
    }
    Ok(PipRpEvidence::Unknown)
}

/// Direct check that `map` is an injective, label- and non-edge-preserving
/// map from `g` into `h`.
pub fn is_induced_embedding(g: &PresentationGraph, h: &PresentationGraph, map: &[usize]) -> bool {
    if map.len() != g.len() || map.iter().any(|&v| v >= h.len()) {
        return false;
    }
    let image: VertexSet = map.iter().copied().collect();
    if image.len() != map.len() {
        return false;
    }
    (0..g.len()).all(|u| (u + 1..g.len()).all(|v| g.label(u, v) == h.label(map[u], map[v])))
}

/// Backtracking search for an induced labelled embedding of `g` into `h`.
/// Vertices of `g` are placed in index order and candidates tried in
/// ascending order, so the first embedding found is lexicographically least.
pub fn induced_embedding(g: &PresentationGraph, h: &PresentationGraph) -> Option<Vec<usize>> {
    if g.len() > h.len() {
        return None;
    }
    let profile = |graph: &PresentationGraph, v: usize| {
        let mut p: Vec<u32> = graph.adjacent(v).iter().map(|u| graph.label(u, v).unwrap()).collect();
        p.sort_unstable();
        p
    };
    let g_profiles: Vec<Vec<u32>> = (0..g.len()).map(|v| profile(g, v)).collect();
    let h_profiles: Vec<Vec<u32>> = (0..h.len()).map(|v| profile(h, v)).collect();
    // candidate w for v needs every label at v available at w
    let fits = |small: &[u32], big: &[u32]| {
        let mut it = big.iter();
        small.iter().all(|x| it.by_ref().any(|y| y == x))
    };
    let candidates: Vec<Vec<usize>> = g_profiles
        .iter()
        .map(|gp| (0..h.len()).filter(|&w| fits(gp, &h_profiles[w])).collect())
        .collect();

    fn extend(
        g: &PresentationGraph,
        h: &PresentationGraph,
        candidates: &[Vec<usize>],
        map: &mut Vec<usize>,
        used: VertexSet,
    ) -> bool {
        let v = map.len();
        if v == g.len() {
            return true;
        }
        for &w in &candidates[v] {
            if used.contains(w) || (0..v).any(|u| g.label(u, v) != h.label(map[u], w)) {
                continue;
            }
            map.push(w);
            if extend(g, h, candidates, map, used.with(w)) {
                return true;
            }
            map.pop();
        }
        false
    }

    let mut map = Vec::with_capacity(g.len());
    extend(g, h, &candidates, &mut map, VertexSet::EMPTY).then_some(map)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    fn amalgam_left() -> PresentationGraph {
        PresentationGraph::from_edges([
            ("a", "e", 2),
            ("a", "f", 4),
            ("a", "b", 2),
            ("e", "f", 2),
            ("b", "c", 4),
            ("c", "g", 4),
            ("f", "g", 4),
            ("b", "f", 2),
        ])
        .unwrap()
    }

    fn amalgam_right() -> PresentationGraph {
        PresentationGraph::from_edges([
            ("c", "d", 3),
            ("g", "h", 3),
            ("d", "g", 3),
            ("d", "h", 3),
            ("b", "c", 4),
            ("c", "g", 4),
            ("f", "g", 4),
            ("b", "f", 2),
        ])
        .unwrap()
    }

    fn names(g: &PresentationGraph, s: VertexSet) -> Vec<&str> {
        g.names(s)
    }

    #[test]
    fn simple_class_examples() {
        assert!(is_right_angled(&families::complete(4, 2)));
        let p = families::path(&[2, 3]);
        assert_eq!(even_witness(&p), Some(Witness::Edge { u: 1, v: 2, m: 3 }));
        let x = amalgam_left();
        let a = x.index_of("a").unwrap();
        assert!(matches!(two_two_free_witness(&x), Some(Witness::Vertex { v, .. }) if v == a));
    }

    #[test]
    fn two_dimensional_examples() {
        let t = PresentationGraph::from_edges([("a", "b", 2), ("b", "c", 2), ("a", "c", 4)]).unwrap();
        assert_eq!(two_dimensional_witness(&t), Some(Witness::SphericalTriple(t.all())));
        assert!(is_two_dimensional(&families::complete(2, 2)));
        assert!(is_two_dimensional(&families::complete(5, 3)));
        assert!(is_two_dimensional(&amalgam_right()));
    }

    #[test]
    fn fc_type_examples() {
        assert!(is_fc_type(&families::complete(4, 2)));
        let h3 = PresentationGraph::from_edges([("a", "b", 2), ("b", "c", 3), ("a", "c", 5)]).unwrap();
        assert!(is_fc_type(&h3));
        let y = amalgam_right();
        match fc_type_witness(&y) {
            Some(Witness::NonSphericalClique(c)) => assert_eq!(names(&y, c), ["d", "g", "h"]),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn maximal_cliques_of_a_triangle_with_tail() {
        let g = PresentationGraph::from_edges([("a", "b", 2), ("b", "c", 2), ("a", "c", 2), ("c", "d", 3)]).unwrap();
        let cliques: Vec<_> = maximal_cliques(&g).into_iter().map(|c| names(&g, c)).collect();
        assert_eq!(cliques, [vec!["a", "b", "c"], vec!["c", "d"]]);
        assert!(maximal_cliques(&families::discrete(0)).is_empty());
    }

    #[test]
    fn pip_rp_examples() {
        let reg = PipRpRegistry::default();
        for m in 2..9 {
            let k2 = families::complete(2, m);
            assert_eq!(pip_rp_certificate(&k2, None, &reg).unwrap().rule_id(), Some("spherical"));
        }
        assert_eq!(pip_rp_certificate(&amalgam_left(), None, &reg).unwrap().rule_id(), Some("even_fc"));
        assert_eq!(
            pip_rp_certificate(&amalgam_right(), None, &reg).unwrap().rule_id(),
            Some("two_dim_two_two_free")
        );
        let t233 = PresentationGraph::from_edges([("a", "b", 2), ("b", "c", 3), ("a", "c", 3)]).unwrap();
        let cycle = families::cycle(&[2, 2, 3, 3]);
        let tail = PresentationGraph::from_edges([("a", "b", 2), ("b", "c", 3), ("a", "c", 3), ("c", "d", 2)]).unwrap();
        assert!(is_spherical_graph(&t233));
        assert_eq!(pip_rp_certificate(&cycle, None, &reg).unwrap(), PipRpEvidence::Unknown);
        // FC-type but neither even nor 2-dimensional
        assert!(is_fc_type(&tail) && !is_even(&tail) && !is_two_dimensional(&tail));
        assert_eq!(pip_rp_certificate(&tail, None, &reg).unwrap(), PipRpEvidence::Unknown);
    }

    #[test]
    fn registry_is_configurable() {
        let y = amalgam_right();
        let reg = PipRpRegistry::default().without("two_dim_two_two_free");
        assert_eq!(pip_rp_certificate(&y, None, &reg).unwrap(), PipRpEvidence::Unknown);
        let reg = reg.with(PipRpRule::Custom { id: "anything", citation: "test", predicate: |_| true });
        let ev = pip_rp_certificate(&y, None, &reg).unwrap();
        assert_eq!(ev.rule_id(), Some("anything"));
        assert!(ev.revalidate(&y));
    }

    #[test]
    fn superset_certification() {
        let reg = PipRpRegistry::default();
        // (2,2,3,3) 4-cycle: not certified by itself
        let c = families::cycle(&[2, 2, 3, 3]);
        assert_eq!(pip_rp_certificate(&c, None, &reg).unwrap(), PipRpEvidence::Unknown);
        // a graph that does not contain it
        assert_eq!(pip_rp_certificate(&c, Some(&families::complete(4, 2)), &reg), Err(Error::NotInducedSubgraph));
        // a superset certified by a custom rule
        let reg = reg.with(PipRpRule::Custom { id: "five_vertices", citation: "test", predicate: |g| g.len() == 5 });
        let h = PresentationGraph::from_edges([("a", "b", 2), ("b", "c", 2), ("c", "d", 3), ("a", "d", 3), ("d", "e", 7)]).unwrap();
        let ev = pip_rp_certificate(&c, Some(&h), &reg).unwrap();
        assert_eq!(ev.rule_id(), Some("user_superset"));
        assert!(ev.revalidate(&c));
    }

    #[test]
    fn induced_embedding_examples() {
        let g = amalgam_right();
        let id = induced_embedding(&g, &g).unwrap();
        assert_eq!(id, (0..g.len()).collect::<Vec<_>>());

        let k2 = families::complete(2, 3);
        let h3 = PresentationGraph::from_edges([("a", "b", 2), ("b", "c", 3), ("a", "c", 5)]).unwrap();
        let map = induced_embedding(&k2, &h3).unwrap();
        assert_eq!(h3.label(map[0], map[1]), Some(3));
        assert!(is_induced_embedding(&k2, &h3, &map));

        assert_eq!(induced_embedding(&families::complete(2, 5), &amalgam_left()), None);
        // induced: a path does not embed into a triangle
        assert_eq!(induced_embedding(&families::path(&[2, 2]), &families::complete(3, 2)), None);
    }

    #[test]
    fn report_implications_on_small_graphs() {
        let r = classify(&families::complete(3, 2));
        assert!(r.right_angled.holds && r.even.holds && r.spherical.holds && r.fc_type.holds);
        assert!(r.reducible.holds);
        let r = classify(&families::complete(3, 3));
        assert!(r.large_type.holds && r.two_dimensional.holds && r.two_two_free.holds);
        assert!(!r.reducible.holds);
        assert!(matches!(r.reducible.witness, Some(Witness::DynkinSpanningTree(ref t)) if t.len() == 2));
    }
}
