//! Certificates for the strong Tits alternative.
//!
//! A certificate is a tree: leaves name a base class known to satisfy the
//! strong Tits alternative, internal nodes carry an acylindrical visual
//! splitting whose two sides are certified recursively. `Unknown` marks a
//! search failure and never a disproof.

use alloc::boxed::Box;
use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;
use core::fmt::Write;

use crate::classes::{is_fc_type, is_large_type, is_spherical_graph, is_two_dimensional, PipRpRegistry};
use crate::graph::{PresentationGraph, VertexSet};
use crate::oracle;
use crate::splittings::{
    enumerate_splittings, theorem_verdict, AcylindricityVerdict, Criterion, EnumerationMode, Verdict,
    VisualSplitting, ACYLINDRICITY_C, ACYLINDRICITY_K, DEFAULT_SPLITTING_CAP,
};
use crate::Error;

/// A class of Artin groups known to satisfy the strong Tits alternative.
#[derive(Clone, Copy)]
pub struct BaseClass {
    pub tag: &'static str,
    pub citation: &'static str,
    pub predicate: fn(&PresentationGraph) -> bool,
}

impl fmt::Debug for BaseClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag)
    }
}

impl PartialEq for BaseClass {
    fn eq(&self, other: &Self) -> bool {
        self.tag == other.tag
    }
}

pub const SPHERICAL: BaseClass = BaseClass {
    tag: "spherical",
    citation: "linear in characteristic zero: Cohen–Wales 2002, Thm 1.1; Tits 1972, Thm 1.1",
    predicate: is_spherical_graph,
};

pub const FC_TYPE: BaseClass =
    BaseClass { tag: "fc_type", citation: "Martin–Przytycki (FC type), Thm B", predicate: is_fc_type };

pub const TWO_DIMENSIONAL: BaseClass =
    BaseClass { tag: "two_dimensional", citation: "Martin 2024, Thm A", predicate: is_two_dimensional };

pub const LARGE_TYPE: BaseClass =
    BaseClass { tag: "large_type", citation: "Osajda–Przytycki 2021, Thm A.2", predicate: is_large_type };

/// Ordered list of base classes tried at every node.
#[derive(Clone, Debug, PartialEq)]
pub struct BaseClassRegistry {
    classes: Vec<BaseClass>,
}

impl Default for BaseClassRegistry {
    fn default() -> Self {
        BaseClassRegistry { classes: alloc::vec![SPHERICAL, FC_TYPE, TWO_DIMENSIONAL, LARGE_TYPE] }
    }
}

impl BaseClassRegistry {
    pub fn empty() -> Self {
        BaseClassRegistry { classes: Vec::new() }
    }

    pub fn classes(&self) -> &[BaseClass] {
        &self.classes
    }

    /// Appends a class, replacing any class with the same tag in place.
    pub fn with(mut self, class: BaseClass) -> Self {
        match self.classes.iter_mut().find(|c| c.tag == class.tag) {
            Some(slot) => *slot = class,
            None => self.classes.push(class),
        }
        self
    }

    pub fn without(mut self, tag: &str) -> Self {
        self.classes.retain(|c| c.tag != tag);
        self
    }

    pub fn find(&self, tag: &str) -> Option<&BaseClass> {
        self.classes.iter().find(|c| c.tag == tag)
    }

    /// The default classes restricted to `tags`, in the order given.
    pub fn select<'a>(tags: impl IntoIterator<Item = &'a str>) -> Result<Self, String> {
        let defaults = BaseClassRegistry::default();
        let mut out = BaseClassRegistry::empty();
        for tag in tags {
            let class = defaults.find(tag).ok_or_else(|| tag.to_string())?;
            out = out.with(*class);
        }
        Ok(out)
    }

    pub fn first_match(&self, g: &PresentationGraph) -> Option<&BaseClass> {
        self.classes.iter().find(|c| (c.predicate)(g))
    }
}

/// What the search tried before giving up on a node.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SearchSummary {
    /// The depth budget ran out at this node.
    pub depth_limited: bool,
    /// Exhaustive enumeration was refused because of the size cap.
    pub size_capped: bool,
    pub splittings_examined: usize,
    pub acylindrical_splittings: usize,
    /// Acylindrical splittings abandoned because a side stayed unknown.
    pub incomplete_children: usize,
}

#[derive(Clone, Debug, PartialEq)]
pub enum CertificateNode {
    Base { tag: String, citation: String },
    Split { verdict: Box<AcylindricityVerdict>, children: Box<[TitsCertificate; 2]> },
    Unknown(SearchSummary),
}

#[derive(Clone, Debug, PartialEq)]
pub struct TitsCertificate {
    pub graph: PresentationGraph,
    pub node: CertificateNode,
}

impl TitsCertificate {
    pub fn depth(&self) -> usize {
        match &self.node {
            CertificateNode::Split { children, .. } => 1 + children[0].depth().max(children[1].depth()),
            _ => 0,
        }
    }

    /// No `Unknown` node anywhere in the tree.
    pub fn is_complete(&self) -> bool {
        match &self.node {
            CertificateNode::Base { .. } => true,
            CertificateNode::Split { children, .. } => children.iter().all(TitsCertificate::is_complete),
            CertificateNode::Unknown(_) => false,
        }
    }

    /// Some unknown node in the tree gave up because of the depth budget.
    pub fn depth_limited(&self) -> bool {
        match &self.node {
            CertificateNode::Base { .. } => false,
            CertificateNode::Split { children, .. } => children.iter().any(TitsCertificate::depth_limited),
            CertificateNode::Unknown(s) => s.depth_limited,
        }
    }

    pub fn splitting(&self) -> Option<&VisualSplitting> {
        match &self.node {
            CertificateNode::Split { verdict, .. } => Some(&verdict.splitting),
            _ => None,
        }
    }

    /// Indented text rendering, one node per line.
    pub fn render_text(&self) -> String {
        let mut out = String::new();
        self.render_into(&mut out, 0);
        out
    }

    fn render_into(&self, out: &mut String, indent: usize) {
        let g = &self.graph;
        let pad = "  ".repeat(indent);
        let vertices = format!("{{{}}}", g.vertices().join(","));
        let _ = match &self.node {
            CertificateNode::Base { tag, citation } => writeln!(out, "{pad}base {tag} {vertices} [{citation}]"),
            CertificateNode::Split { verdict, .. } => writeln!(
                out,
                "{pad}split {}: acylindrical (k={ACYLINDRICITY_K}, C={ACYLINDRICITY_C}); PIP/RP via X: {}, Y: {}",
                crate::splittings::describe(g, &verdict.splitting),
                verdict.hypothesis_x.rule_id().unwrap_or("?"),
                verdict.hypothesis_y.rule_id().unwrap_or("?"),
            ),
            CertificateNode::Unknown(s) => writeln!(
                out,
                "{pad}unknown {vertices}: {} splittings examined, {} acylindrical, {} with an unknown side{}{}",
                s.splittings_examined,
                s.acylindrical_splittings,
                s.incomplete_children,
                if s.depth_limited { ", depth limit reached" } else { "" },
                if s.size_capped { ", exhaustive enumeration refused by size cap" } else { "" },
            ),
        };
        if let CertificateNode::Split { children, .. } = &self.node {
            for c in children.iter() {
                c.render_into(out, indent + 1);
            }
        }
    }
}

#[derive(Clone, Debug)]
pub struct CertifyOptions {
    pub max_depth: usize,
    pub memoize: bool,
    pub pip_rp: PipRpRegistry,
    /// Vertex cap for exhaustive splitting enumeration.
    pub cap: usize,
}

impl Default for CertifyOptions {
    fn default() -> Self {
        CertifyOptions { max_depth: 8, memoize: true, pip_rp: PipRpRegistry::default(), cap: DEFAULT_SPLITTING_CAP }
    }
}

struct Search<'a> {
    root: &'a PresentationGraph,
    bases: &'a BaseClassRegistry,
    options: &'a CertifyOptions,
    memo: BTreeMap<(u64, usize), TitsCertificate>,
}

impl Search<'_> {
    fn graph_on(&self, x: VertexSet) -> PresentationGraph {
        if x == self.root.all() {
            self.root.clone()
        } else {
            self.root.induced_subgraph(x)
        }
    }

    fn run(&mut self, x: VertexSet, depth: usize) -> TitsCertificate {
        if self.options.memoize {
            if let Some(c) = self.memo.get(&(x.bits(), depth)) {
                return c.clone();
            }
        }
        let cert = self.explore(x, depth);
        if self.options.memoize {
            self.memo.insert((x.bits(), depth), cert.clone());
        }
        cert
    }

    fn explore(&mut self, x: VertexSet, depth: usize) -> TitsCertificate {
        let graph = self.graph_on(x);
        if let Some(class) = self.bases.first_match(&graph) {
            let node = CertificateNode::Base { tag: class.tag.into(), citation: class.citation.into() };
            return TitsCertificate { graph, node };
        }
        let mut summary = SearchSummary::default();
        if depth == 0 {
            summary.depth_limited = true;
            return TitsCertificate { graph, node: CertificateNode::Unknown(summary) };
        }

        let mut candidates =
            enumerate_splittings(&graph, EnumerationMode::VertexPairs, self.options.cap).unwrap_or_default();
        match enumerate_splittings(&graph, EnumerationMode::All, self.options.cap) {
            Ok(all) => {
                for s in all {
                    if !candidates.contains(&s) {
                        candidates.push(s);
                    }
                }
            }
            Err(_) => summary.size_capped = true,
        }

        for s in candidates {
            summary.splittings_examined += 1;
            let verdict = theorem_verdict(&graph, &s, (None, None), &self.options.pip_rp)
                .expect("no superset graphs, so certification cannot fail");
            if !verdict.is_acylindrical() {
                continue;
            }
            summary.acylindrical_splittings += 1;
            let left = self.run(self.root.lift_from_induced(x, s.x()), depth - 1);
            if !left.is_complete() {
                summary.incomplete_children += 1;
                summary.depth_limited |= left.depth_limited();
                continue;
            }
            let right = self.run(self.root.lift_from_induced(x, s.y()), depth - 1);
            if !right.is_complete() {
                summary.incomplete_children += 1;
                summary.depth_limited |= right.depth_limited();
                continue;
            }
            let node = CertificateNode::Split { verdict: Box::new(verdict), children: Box::new([left, right]) };
            return TitsCertificate { graph, node };
        }
        TitsCertificate { graph, node: CertificateNode::Unknown(summary) }
    }
}

/// Depth-first search for a complete certificate: base classes in registry
/// order, then vertex-pair splittings, then all splittings under the cap.
pub fn certify(g: &PresentationGraph, bases: &BaseClassRegistry, options: &CertifyOptions) -> TitsCertificate {
    let mut search = Search { root: g, bases, options, memo: BTreeMap::new() };
    search.run(g.all(), options.max_depth)
}

/// Why a certificate failed re-validation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvalidCertificate {
    /// Vertex names of the offending node.
    pub node: Vec<String>,
    pub reason: String,
}

impl fmt::Display for InvalidCertificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "node {{{}}}: {}", self.node.join(","), self.reason)
    }
}

/// Re-checks a certificate from scratch: base predicates, splitting
/// validity, both neighbourhoods, odd-path separation, PIP/RP evidence, the
/// constants, and that children are the induced subgraphs on each side.
/// Incomplete certificates are rejected.
pub fn validate_certificate(c: &TitsCertificate, bases: &BaseClassRegistry) -> Result<(), InvalidCertificate> {
    let g = &c.graph;
    let fail = |reason: &str| Err(InvalidCertificate { node: g.vertices().to_vec(), reason: reason.into() });
    match &c.node {
        CertificateNode::Unknown(_) => fail("incomplete certificate"),
        CertificateNode::Base { tag, citation } => match bases.find(tag) {
            None => fail("unknown base class"),
            Some(class) if class.citation != citation => fail("citation does not match the base class"),
            Some(class) if !(class.predicate)(g) => fail("base class predicate does not hold"),
            Some(_) => Ok(()),
        },
        CertificateNode::Split { verdict, children } => {
            let s = &verdict.splitting;
            let (x, y, z) = (s.x(), s.y(), s.z());
            let n = g.len();
            let label = |u: usize, v: usize| g.label(u, v);
            if (x | y) != g.all() || x == g.all() || y == g.all() || x.is_empty() || y.is_empty() {
                return fail("sides must cover the graph and both be proper");
            }
            for u in x - z {
                for v in y - z {
                    if label(u, v).is_some() {
                        return fail("Z does not separate the two sides");
                    }
                }
            }
            let neighbourhood = |side: VertexSet| -> VertexSet {
                let inner = side - z;
                (0..n).filter(|&v| side.contains(v) && (inner.contains(v) || inner.iter().any(|u| label(u, v).is_some()))).collect()
            };
            let (na, nb) = (neighbourhood(x), neighbourhood(y));
            if na != verdict.criterion.x_neighbourhood || nb != verdict.criterion.y_neighbourhood {
                return fail("recorded neighbourhoods are wrong");
            }
            if verdict.criterion.outcome != Criterion::Holds || odd_reachable(g, na, nb) {
                return fail("neighbourhoods are joined by an odd path");
            }
            if n <= oracle::ODD_JOIN_LIMIT && oracle::brute_force_odd_join(g, na, nb) != Ok(false) {
                return fail("brute-force path enumeration finds an odd path");
            }
            if !verdict.hypothesis_x.revalidate(&g.induced_subgraph(x))
                || !verdict.hypothesis_y.revalidate(&g.induced_subgraph(y))
            {
                return fail("PIP/RP evidence does not re-validate");
            }
            if verdict.verdict != (Verdict::Acylindrical { k: ACYLINDRICITY_K, c: ACYLINDRICITY_C }) {
                return fail("verdict must be acylindrical with constants (3, 1)");
            }
            for (child, side) in children.iter().zip([x, y]) {
                if child.graph != g.induced_subgraph(side) {
                    return fail("child graph is not the induced subgraph on its side");
                }
                validate_certificate(child, bases)?;
            }
            Ok(())
        }
    }
}

/// Plain depth-first reachability along odd edges, kept separate from the
/// union-find used by the search.
fn odd_reachable(g: &PresentationGraph, a: VertexSet, b: VertexSet) -> bool {
    let mut seen = a;
    let mut stack: Vec<usize> = a.iter().collect();
    while let Some(v) = stack.pop() {
        if b.contains(v) {
            return true;
        }
        for w in 0..g.len() {
            if !seen.contains(w) && g.label(v, w).is_some_and(|m| m % 2 == 1) {
                seen = seen.with(w);
                stack.push(w);
            }
        }
    }
    false
}

/// Rebuilds a split node from its graph and splitting sides, recomputing the
/// verdict. Used when reading certificates back from a serialized form.
pub fn split_node(
    g: &PresentationGraph,
    x: VertexSet,
    y: VertexSet,
    pip_rp: &PipRpRegistry,
    children: [TitsCertificate; 2],
) -> Result<CertificateNode, Error> {
    let s = crate::splittings::validate_splitting(g, x, y)?;
    let verdict = theorem_verdict(g, &s, (None, None), pip_rp)?;
    Ok(CertificateNode::Split { verdict: Box::new(verdict), children: Box::new(children) })
}
