//! Visual splittings `A_S = A_X *_{A_Z} A_Y` and the odd-path acylindricity
//! criterion.
//!
//! A splitting fails the criterion when `N_{Γ_X}(X∖Z)` and `N_{Γ_Y}(Y∖Z)` are
//! joined by an odd-labelled path. That direction is unconditional and comes
//! with an explicit [`WitnessWord`]. When the criterion holds, the splitting
//! is `(3, 1)`-acylindrical provided both sides have PIP and RP, which is
//! certified through the [`PipRpRegistry`].

use alloc::string::String;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt::Write;

use crate::classes::{is_even, pip_rp_certificate, PipRpEvidence, PipRpRegistry};
use crate::graph::{PresentationGraph, VertexSet};
use crate::Error;

/// Path length bound `k` of the acylindricity constants.
pub const ACYLINDRICITY_K: u32 = 3;
/// Stabiliser size bound `C` of the acylindricity constants.
pub const ACYLINDRICITY_C: u32 = 1;

/// Default vertex cap for exhaustive enumeration.
pub const DEFAULT_SPLITTING_CAP: usize = 16;

/// A non-trivial visual splitting, stored with the lexicographically smaller
/// side first.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct VisualSplitting {
    x: VertexSet,
    y: VertexSet,
}

impl VisualSplitting {
    fn canonical(x: VertexSet, y: VertexSet) -> Self {
        if x.lex_cmp(y) == Ordering::Greater {
            VisualSplitting { x: y, y: x }
        } else {
            VisualSplitting { x, y }
        }
    }

    pub fn x(&self) -> VertexSet {
        self.x
    }

    pub fn y(&self) -> VertexSet {
        self.y
    }

    pub fn z(&self) -> VertexSet {
        self.x & self.y
    }

    /// Order used for enumeration output: by `|Z|`, then `Z`, then `X`.
    pub fn enumeration_cmp(&self, other: &Self) -> Ordering {
        self.z()
            .len()
            .cmp(&other.z().len())
            .then_with(|| self.z().lex_cmp(other.z()))
            .then_with(|| self.x.lex_cmp(other.x))
    }
}

/// Checks that `(X, Y)` is a non-trivial visual splitting of `g`.
pub fn validate_splitting(g: &PresentationGraph, x: VertexSet, y: VertexSet) -> Result<VisualSplitting, Error> {
    let all = g.all();
    if !x.is_subset(all) || !y.is_subset(all) {
        return Err(Error::Contract("splitting sides must be vertex sets of the graph"));
    }
    if let Some(v) = (all - (x | y)).first() {
        return Err(Error::NotCovering(g.vertex_name(v).into()));
    }
    if x == all || y == all {
        return Err(Error::TrivialSplitting);
    }
    let z = x & y;
    for u in x - z {
        if let Some(v) = (g.adjacent(u) & (y - z)).first() {
            return Err(Error::NotSeparating(g.vertex_name(u).into(), g.vertex_name(v).into()));
        }
    }
    Ok(VisualSplitting::canonical(x, y))
}

/// Which splittings [`enumerate_splittings`] produces.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EnumerationMode {
    /// Every non-trivial visual splitting.
    All,
    /// Only `(S∖{b}, S∖{a})` for non-adjacent `a < b`.
    VertexPairs,
}

/// Enumerates visual splittings in a deterministic order. Exhaustive
/// enumeration refuses graphs with more than `cap` vertices.
pub fn enumerate_splittings(
    g: &PresentationGraph,
    mode: EnumerationMode,
    cap: usize,
) -> Result<Vec<VisualSplitting>, Error> {
    let all = g.all();
    match mode {
        EnumerationMode::VertexPairs => {
            let n = g.len();
            Ok((0..n)
                .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
                .filter(|&(a, b)| !g.has_edge(a, b))
                .map(|(a, b)| VisualSplitting::canonical(all.without(b), all.without(a)))
                .collect())
        }
        EnumerationMode::All => {
            if g.len() > cap {
                return Err(Error::SizeCap { vertices: g.len(), cap });
            }
            let mut out = Vec::new();
            for z in all.subsets().filter(|&z| z != all) {
                let rest = all - z;
                let comps = g.components_within(rest);
                if comps.len() < 2 {
                    continue;
                }
                // the first component always goes to the first side, so every
                // unordered bipartition is produced once
                let others = &comps[1..];
                for mask in 0u64..(1u64 << others.len()) {
                    let side = others
                        .iter()
                        .enumerate()
                        .filter(|(i, _)| mask & (1 << i) != 0)
                        .fold(comps[0], |acc, (_, c)| acc | *c);
                    if side == rest {
                        continue;
                    }
                    out.push(VisualSplitting::canonical(z | side, z | (rest - side)));
                }
            }
            out.sort_by(VisualSplitting::enumeration_cmp);
            Ok(out)
        }
    }
}

/// An odd-labelled path between the two neighbourhoods.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OddJoin {
    /// Endpoint in `N_{Γ_X}(X∖Z)`.
    pub x_prime: usize,
    /// Endpoint in `N_{Γ_Y}(Y∖Z)`.
    pub y_prime: usize,
    /// From `x_prime` to `y_prime`, odd labels only, all vertices in `Z`.
    pub path: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Criterion {
    Holds,
    Fails(OddJoin),
}

/// The two neighbourhoods and the outcome of the odd-path test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CriterionReport {
    /// `N_{Γ_X}(X∖Z)`.
    pub x_neighbourhood: VertexSet,
    /// `N_{Γ_Y}(Y∖Z)`.
    pub y_neighbourhood: VertexSet,
    pub outcome: Criterion,
}

impl CriterionReport {
    pub fn holds(&self) -> bool {
        self.outcome == Criterion::Holds
    }
}

/// Decides whether `N_{Γ_X}(X∖Z)` and `N_{Γ_Y}(Y∖Z)` are joined by an odd
/// path in `Γ_S`.
pub fn criterion(g: &PresentationGraph, s: &VisualSplitting) -> CriterionReport {
    let z = s.z();
    let (x_only, y_only) = (s.x - z, s.y - z);
    let a = g.neighbourhood_within(x_only, s.x);
    let b = g.neighbourhood_within(y_only, s.y);
    // Z separates, so the neighbourhoods are the same in Γ_S
    assert_eq!(a, g.neighbourhood(x_only), "Z must separate X∖Z from Y∖Z");
    assert_eq!(b, g.neighbourhood(y_only), "Z must separate X∖Z from Y∖Z");

    let outcome = match g.joined_by_odd_path(a, b) {
        None => Criterion::Holds,
        Some((from, to)) => {
            let path = g.odd_path(from, to).expect("vertices in one odd class are joined");
            // shorten to the segment between the last visit to A and the next
            // visit to B; everything on it then lies in Z
            let i = path.iter().rposition(|&v| a.contains(v)).unwrap();
            let j = i + path[i..].iter().position(|&v| b.contains(v)).unwrap();
            let path = path[i..=j].to_vec();
            debug_assert!(path.iter().all(|&v| z.contains(v)));
            Criterion::Fails(OddJoin { x_prime: path[0], y_prime: path[path.len() - 1], path })
        }
    };
    CriterionReport { x_neighbourhood: a, y_neighbourhood: b, outcome }
}

/// The final classification of a splitting.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    /// `(k, C)`-acylindrical; always `(3, 1)`.
    Acylindrical { k: u32, c: u32 },
    /// The criterion fails; no hypothesis is needed for this direction.
    NotAcylindrical(WitnessWord),
    /// The criterion holds but PIP/RP could not be certified for some side.
    CriterionHoldsHypothesisUnknown,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AcylindricityVerdict {
    pub splitting: VisualSplitting,
    pub criterion: CriterionReport,
    pub hypothesis_x: PipRpEvidence,
    pub hypothesis_y: PipRpEvidence,
    pub verdict: Verdict,
}

impl AcylindricityVerdict {
    pub fn is_acylindrical(&self) -> bool {
        matches!(self.verdict, Verdict::Acylindrical { .. })
    }
}

/// Combines the criterion with PIP/RP certification of `Γ_X` and `Γ_Y`,
/// optionally through user-supplied superset graphs.
pub fn theorem_verdict(
    g: &PresentationGraph,
    s: &VisualSplitting,
    supersets: (Option<&PresentationGraph>, Option<&PresentationGraph>),
    registry: &PipRpRegistry,
) -> Result<AcylindricityVerdict, Error> {
    let hypothesis_x = pip_rp_certificate(&g.induced_subgraph(s.x), supersets.0, registry)?;
    let hypothesis_y = pip_rp_certificate(&g.induced_subgraph(s.y), supersets.1, registry)?;
    let criterion = criterion(g, s);
    let verdict = match &criterion.outcome {
        Criterion::Fails(join) => Verdict::NotAcylindrical(witness_word(g, s, join)),
        Criterion::Holds if hypothesis_x.is_certified() && hypothesis_y.is_certified() => {
            Verdict::Acylindrical { k: ACYLINDRICITY_K, c: ACYLINDRICITY_C }
        }
        Criterion::Holds => Verdict::CriterionHoldsHypothesisUnknown,
    };
    Ok(AcylindricityVerdict { splitting: *s, criterion, hypothesis_x, hypothesis_y, verdict })
}

/// A generator or its inverse.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Letter {
    pub generator: usize,
    pub inverse: bool,
}

impl Letter {
    pub fn pos(generator: usize) -> Self {
        Letter { generator, inverse: false }
    }
}

fn inverse_word(word: &[Letter]) -> Vec<Letter> {
    word.iter().rev().map(|l| Letter { generator: l.generator, inverse: !l.inverse }).collect()
}

/// Alternating positive word `u v u ...` of length `m`.
pub fn alternating(u: usize, v: usize, m: u32) -> Vec<Letter> {
    (0..m).map(|i| Letter::pos(if i % 2 == 0 { u } else { v })).collect()
}

/// The Garside element `Δ_{uv}` of the dihedral Artin group on `{u, v}`,
/// spelled as the alternating word of length `m` starting with `u`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DihedralGarside {
    pub u: usize,
    pub v: usize,
    pub m: u32,
}

impl DihedralGarside {
    pub fn word(&self) -> Vec<Letter> {
        alternating(self.u, self.v, self.m)
    }

    /// Literal check of `Δ u = v Δ`. The left `Δ` is spelled from `v`
    /// (`vuv…`), which equals `uvu…` by the edge relation; for odd `m` both
    /// sides are then the same alternating string of length `m + 1`.
    pub fn conjugation_identity_holds(&self) -> bool {
        let mut lhs = alternating(self.v, self.u, self.m);
        lhs.push(Letter::pos(self.u));
        let mut rhs = alloc::vec![Letter::pos(self.v)];
        rhs.extend(alternating(self.u, self.v, self.m));
        lhs == rhs
    }
}

/// How `z_{x,x'}` is built from the dihedral group on `{x, x'}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CentralKind {
    /// `m = 2`: the group is `Z^2` and `x` itself is used.
    Generator,
    /// Even `m >= 4`: `Δ` generates the centre.
    Garside,
    /// Odd `m`: `Δ^2` generates the centre.
    GarsideSquared,
}

/// An element of `A_{x,x'}` outside `A_{x'}` that commutes with `x'`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CentralElement {
    pub generator: usize,
    pub partner: usize,
    pub m: u32,
    pub kind: CentralKind,
}

impl CentralElement {
    fn new(generator: usize, partner: usize, m: u32) -> Self {
        let kind = match m {
            2 => CentralKind::Generator,
            m if m % 2 == 0 => CentralKind::Garside,
            _ => CentralKind::GarsideSquared,
        };
        CentralElement { generator, partner, m, kind }
    }

    pub fn word(&self) -> Vec<Letter> {
        let delta = alternating(self.generator, self.partner, self.m);
        match self.kind {
            CentralKind::Generator => alloc::vec![Letter::pos(self.generator)],
            CentralKind::Garside => delta,
            CentralKind::GarsideSquared => delta.iter().chain(&delta).copied().collect(),
        }
    }
}

/// Role of each factor in `g⁻¹ · z_{y,y'} · g · z_{x,x'}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FactorRole {
    ConjugatorInverse,
    CentralY,
    Conjugator,
    CentralX,
}

/// The element `g⁻¹ z_{y,y'} g z_{x,x'}` witnessing non-acylindricity.
///
/// `g` conjugates `x'` to `y'` along the odd path: it is the product
/// `Δ_{p_{n-1} p_n} ⋯ Δ_{p_0 p_1}`, and `Δ_{uv} u Δ_{uv}⁻¹ = v` for odd labels.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WitnessWord {
    pub x: usize,
    pub x_prime: usize,
    pub y: usize,
    pub y_prime: usize,
    pub path: Vec<usize>,
    /// Factors of `g`, leftmost first.
    pub conjugator: Vec<DihedralGarside>,
    pub z_x: CentralElement,
    pub z_y: CentralElement,
}

impl WitnessWord {
    pub fn conjugator_word(&self) -> Vec<Letter> {
        self.conjugator.iter().flat_map(|d| d.word()).collect()
    }

    pub fn factors(&self) -> [(FactorRole, Vec<Letter>); 4] {
        let g = self.conjugator_word();
        [
            (FactorRole::ConjugatorInverse, inverse_word(&g)),
            (FactorRole::CentralY, self.z_y.word()),
            (FactorRole::Conjugator, g),
            (FactorRole::CentralX, self.z_x.word()),
        ]
    }

    pub fn letters(&self) -> Vec<Letter> {
        self.factors().into_iter().flat_map(|(_, w)| w).collect()
    }

    /// Space-separated letters, inverses written `u^-1`.
    pub fn render(&self, g: &PresentationGraph) -> String {
        render_letters(g, &self.letters())
    }

    /// Re-checks every structural invariant of the witness against `g` and
    /// the splitting it was built for.
    pub fn verify(&self, g: &PresentationGraph, s: &VisualSplitting) -> Result<(), &'static str> {
        let z = s.z();
        if !(s.x - z).contains(self.x) || !(s.y - z).contains(self.y) {
            return Err("x and y must lie outside Z on their sides");
        }
        if self.path.first() != Some(&self.x_prime) || self.path.last() != Some(&self.y_prime) {
            return Err("path must run from x' to y'");
        }
        if self.path.iter().any(|&v| !z.contains(v)) {
            return Err("path must stay in Z");
        }
        let edges: Vec<(usize, usize)> = self.path.windows(2).map(|w| (w[0], w[1])).collect();
        if self.conjugator.len() != edges.len() {
            return Err("one Garside factor per path edge");
        }
        for (d, &(p, q)) in self.conjugator.iter().zip(edges.iter().rev()) {
            if (d.u, d.v) != (p, q) || g.label(p, q) != Some(d.m) || d.m % 2 == 0 {
                return Err("Garside factors must follow the odd path in reverse");
            }
            if !d.conjugation_identity_holds() {
                return Err("Δu = vΔ fails");
            }
        }
        for (c, other) in [(&self.z_x, self.x_prime), (&self.z_y, self.y_prime)] {
            if c.partner != other || g.label(c.generator, c.partner) != Some(c.m) {
                return Err("central element must live on an edge at x' or y'");
            }
            if *c != CentralElement::new(c.generator, c.partner, c.m) {
                return Err("central element kind must match the label parity");
            }
        }
        if self.z_x.generator != self.x || self.z_y.generator != self.y {
            return Err("central elements must start at x and y");
        }
        let letters = self.letters();
        let expected = self.conjugator.iter().map(|d| d.m as usize).sum::<usize>() * 2
            + self.z_x.word().len()
            + self.z_y.word().len();
        if letters.len() != expected {
            return Err("word must be g⁻¹ z_y g z_x");
        }
        Ok(())
    }
}

pub fn render_letters(g: &PresentationGraph, letters: &[Letter]) -> String {
    let mut out = String::new();
    for (i, l) in letters.iter().enumerate() {
        if i > 0 {
            out.push(' ');
        }
        out.push_str(g.vertex_name(l.generator));
        if l.inverse {
            out.push_str("^-1");
        }
    }
    out
}

/// Builds the witness word for a failing criterion. `x` and `y` are the
/// least vertices of `X∖Z`, `Y∖Z` adjacent to `x'`, `y'`.
pub fn witness_word(g: &PresentationGraph, s: &VisualSplitting, join: &OddJoin) -> WitnessWord {
    let z = s.z();
    let x = (g.adjacent(join.x_prime) & (s.x - z)).first().expect("x' lies in N(X∖Z) ∩ Z");
    let y = (g.adjacent(join.y_prime) & (s.y - z)).first().expect("y' lies in N(Y∖Z) ∩ Z");
    let conjugator = join
        .path
        .windows(2)
        .rev()
        .map(|w| DihedralGarside { u: w[0], v: w[1], m: g.label(w[0], w[1]).unwrap() })
        .collect();
    WitnessWord {
        x,
        x_prime: join.x_prime,
        y,
        y_prime: join.y_prime,
        path: join.path.clone(),
        conjugator,
        z_x: CentralElement::new(x, join.x_prime, g.label(x, join.x_prime).unwrap()),
        z_y: CentralElement::new(y, join.y_prime, g.label(y, join.y_prime).unwrap()),
    }
}

/// Builds the witness word from a criterion report, refusing when the
/// criterion holds.
pub fn witness_for(g: &PresentationGraph, s: &VisualSplitting, report: &CriterionReport) -> Result<WitnessWord, Error> {
    match &report.outcome {
        Criterion::Fails(join) => Ok(witness_word(g, s, join)),
        Criterion::Holds => Err(Error::Contract("no witness word: the criterion holds")),
    }
}

/// Non-adjacent pairs `a < b` whose neighbourhoods are not joined by an odd
/// path.
pub fn pair_criterion(g: &PresentationGraph) -> Vec<(usize, usize)> {
    let odd = g.odd_components();
    let n = g.len();
    let mut out = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            if g.has_edge(a, b) {
                continue;
            }
            let (na, nb) = (g.neighbourhood(VertexSet::singleton(a)), g.neighbourhood(VertexSet::singleton(b)));
            if odd.joining_pair(na, nb).is_none() {
                let s = VisualSplitting::canonical(g.all().without(b), g.all().without(a));
                assert!(criterion(g, &s).holds(), "pair splitting must satisfy the criterion");
                out.push((a, b));
            }
        }
    }
    out
}

/// For even graphs: whether the diameter is at least 3.
pub fn even_diameter_criterion(g: &PresentationGraph) -> Result<bool, Error> {
    if !is_even(g) {
        let (u, v, m) = g.edges().find(|&(_, _, m)| m % 2 == 1).unwrap();
        return Err(Error::NotEven(g.vertex_name(u).into(), g.vertex_name(v).into(), m));
    }
    Ok(g.diameter().at_least(3))
}

/// One-line description of a splitting, e.g. `X={a,b} Y={b,c} Z={b}`.
pub fn describe(g: &PresentationGraph, s: &VisualSplitting) -> String {
    let mut out = String::new();
    for (label, set) in [("X", s.x), ("Y", s.y), ("Z", s.z())] {
        if !out.is_empty() {
            out.push(' ');
        }
        let _ = write!(out, "{label}={{{}}}", g.names(set).join(","));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    fn set(g: &PresentationGraph, names: &[&str]) -> VertexSet {
        g.set_of(names.iter().copied()).unwrap()
    }

    fn path_two_three() -> PresentationGraph {
        families::path(&[2, 3])
    }

    #[test]
    fn validate_examples() {
        let g = path_two_three();
        let s = validate_splitting(&g, set(&g, &["a", "b"]), set(&g, &["b", "c"])).unwrap();
        assert_eq!(s.z(), set(&g, &["b"]));

        let o2 = families::discrete(2);
        let s = validate_splitting(&o2, set(&o2, &["a"]), set(&o2, &["b"])).unwrap();
        assert!(s.z().is_empty());

        let k3 = families::complete(3, 2);
        assert!(matches!(
            validate_splitting(&k3, set(&k3, &["a", "b"]), set(&k3, &["b", "c"])),
            Err(Error::NotSeparating(..))
        ));
        assert_eq!(
            validate_splitting(&g, set(&g, &["a"]), set(&g, &["b"])),
            Err(Error::NotCovering("c".into()))
        );
        assert_eq!(validate_splitting(&g, g.all(), set(&g, &["b"])), Err(Error::TrivialSplitting));
    }

    #[test]
    fn canonical_order_is_symmetric() {
        let g = path_two_three();
        let s1 = validate_splitting(&g, set(&g, &["a", "b"]), set(&g, &["b", "c"])).unwrap();
        let s2 = validate_splitting(&g, set(&g, &["b", "c"]), set(&g, &["a", "b"])).unwrap();
        assert_eq!(s1, s2);
        assert_eq!(s1.x(), set(&g, &["a", "b"]));
    }

    #[test]
    fn enumeration_examples() {
        let g = path_two_three();
        let all = enumerate_splittings(&g, EnumerationMode::All, DEFAULT_SPLITTING_CAP).unwrap();
        assert_eq!(all.len(), 1);
        assert_eq!((all[0].x(), all[0].y()), (set(&g, &["a", "b"]), set(&g, &["b", "c"])));

        assert!(enumerate_splittings(&families::complete(5, 3), EnumerationMode::All, 16).unwrap().is_empty());
        assert!(enumerate_splittings(&families::complete(5, 3), EnumerationMode::VertexPairs, 16)
            .unwrap()
            .is_empty());

        let p4 = families::path(&[2, 2, 2]);
        let all = enumerate_splittings(&p4, EnumerationMode::All, 16).unwrap();
        let described: Vec<_> = all.iter().map(|s| describe(&p4, s)).collect();
        assert_eq!(described, [
            "X={a,b} Y={b,c,d} Z={b}",
            "X={a,b,c} Y={c,d} Z={c}",
            "X={a,b,c} Y={a,c,d} Z={a,c}",
            "X={a,b,c} Y={b,c,d} Z={b,c}",
            "X={a,b,d} Y={b,c,d} Z={b,d}",
        ]);

        let pairs = enumerate_splittings(&p4, EnumerationMode::VertexPairs, 16).unwrap();
        assert_eq!(pairs.len(), 3);
        assert!(pairs.iter().all(|s| all.contains(s)));

        assert_eq!(
            enumerate_splittings(&families::discrete(17), EnumerationMode::All, 16),
            Err(Error::SizeCap { vertices: 17, cap: 16 })
        );
    }

    #[test]
    fn criterion_path_two_three() {
        let g = path_two_three();
        let s = validate_splitting(&g, set(&g, &["a", "b"]), set(&g, &["b", "c"])).unwrap();
        let r = criterion(&g, &s);
        let b = g.index_of("b").unwrap();
        assert_eq!(r.outcome, Criterion::Fails(OddJoin { x_prime: b, y_prime: b, path: alloc::vec![b] }));
        assert_eq!(r.x_neighbourhood, set(&g, &["a", "b"]));
        assert_eq!(r.y_neighbourhood, set(&g, &["b", "c"]));
    }

    #[test]
    fn criterion_free_product_holds() {
        let o2 = families::discrete(2);
        let s = validate_splitting(&o2, set(&o2, &["a"]), set(&o2, &["b"])).unwrap();
        assert!(criterion(&o2, &s).holds());
        let v = theorem_verdict(&o2, &s, (None, None), &PipRpRegistry::default()).unwrap();
        assert_eq!(v.verdict, Verdict::Acylindrical { k: 3, c: 1 });
    }

    #[test]
    fn verdict_path_two_three() {
        let g = path_two_three();
        let s = validate_splitting(&g, set(&g, &["a", "b"]), set(&g, &["b", "c"])).unwrap();
        let v = theorem_verdict(&g, &s, (None, None), &PipRpRegistry::default()).unwrap();
        assert_eq!(v.hypothesis_x.rule_id(), Some("spherical"));
        assert_eq!(v.hypothesis_y.rule_id(), Some("spherical"));
        let Verdict::NotAcylindrical(w) = &v.verdict else { panic!("expected a witness") };
        assert_eq!(w.render(&g), "c b c c b c a");
        assert_eq!(w.z_y.kind, CentralKind::GarsideSquared);
        assert_eq!(w.z_x.kind, CentralKind::Generator);
        assert!(w.conjugator.is_empty());
        w.verify(&g, &s).unwrap();
        assert!(witness_for(&g, &s, &v.criterion).is_ok());
    }

    #[test]
    fn verdict_unknown_hypothesis() {
        // (2,3,3)-triangle on both sides of a cut vertex: criterion holds
        // (Z = {c}, no odd path from N(X∖Z) to N(Y∖Z)) but no rule applies
        let g = PresentationGraph::from_edges([
            ("a", "b", 2),
            ("a", "c", 3),
            ("b", "c", 3),
            ("c", "d", 2),
            ("c", "e", 2),
            ("d", "e", 4),
        ])
        .unwrap();
        let s = validate_splitting(&g, set(&g, &["a", "b", "c"]), set(&g, &["c", "d", "e"])).unwrap();
        let report = criterion(&g, &s);
        assert!(!report.holds(), "c is in both neighbourhoods");

        let g = PresentationGraph::from_edges([
            ("a", "b", 2),
            ("a", "c", 3),
            ("b", "c", 3),
            ("c", "d", 2),
            ("d", "e", 2),
            ("e", "f", 2),
            ("e", "g", 3),
            ("f", "g", 3),
            ("g", "h", 2),
        ])
        .unwrap();
        let s = validate_splitting(&g, set(&g, &["a", "b", "c", "d"]), set(&g, &["c", "d", "e", "f", "g", "h"])).unwrap();
        let v = theorem_verdict(&g, &s, (None, None), &PipRpRegistry::default()).unwrap();
        assert!(v.criterion.holds());
        assert_eq!(v.verdict, Verdict::CriterionHoldsHypothesisUnknown);
    }

    #[test]
    fn witness_with_right_angled_dihedrals() {
        // A ∩ B = {v} with both dihedrals commuting: word is `y x`
        let g = PresentationGraph::from_edges([("x", "v", 2), ("v", "y", 2)]).unwrap();
        let s = validate_splitting(&g, set(&g, &["v", "x"]), set(&g, &["v", "y"])).unwrap();
        let v = theorem_verdict(&g, &s, (None, None), &PipRpRegistry::default()).unwrap();
        let Verdict::NotAcylindrical(w) = &v.verdict else { panic!() };
        assert_eq!(w.render(&g), "y x");
    }

    #[test]
    fn witness_with_odd_path_of_length_one() {
        // Z = {u, v} with an odd edge; x hangs off u, y off v
        let g = PresentationGraph::from_edges([("x", "u", 2), ("u", "v", 3), ("v", "y", 2)]).unwrap();
        let s = validate_splitting(&g, set(&g, &["u", "v", "x"]), set(&g, &["u", "v", "y"])).unwrap();
        let r = criterion(&g, &s);
        let Criterion::Fails(join) = &r.outcome else { panic!() };
        // N(X∖Z) = {u, x}, N(Y∖Z) = {v, y}
        assert_eq!(g.names(join.path.iter().copied().collect()), ["u", "v"]);
        let w = witness_word(&g, &s, join);
        assert_eq!(render_letters(&g, &w.conjugator_word()), "u v u");
        assert_eq!(render_letters(&g, &w.factors()[0].1), "u^-1 v^-1 u^-1");
        assert_eq!(w.render(&g), "u^-1 v^-1 u^-1 y u v u x");
        w.verify(&g, &s).unwrap();
    }

    #[test]
    fn garside_identity_only_for_odd_labels() {
        for m in 2..12 {
            let d = DihedralGarside { u: 0, v: 1, m };
            assert_eq!(d.conjugation_identity_holds(), m % 2 == 1, "m = {m}");
        }
    }

    #[test]
    fn witness_contract() {
        let o2 = families::discrete(2);
        let s = validate_splitting(&o2, VertexSet::singleton(0), VertexSet::singleton(1)).unwrap();
        let r = criterion(&o2, &s);
        assert!(witness_for(&o2, &s, &r).is_err());
    }

    #[test]
    fn pair_criterion_examples() {
        assert!(pair_criterion(&path_two_three()).is_empty());
        let p4 = families::path(&[2, 2, 2]);
        assert_eq!(pair_criterion(&p4), [(0, 3)]);
        assert!(pair_criterion(&families::complete(4, 3)).is_empty());
    }

    #[test]
    fn even_diameter_examples() {
        assert_eq!(even_diameter_criterion(&families::path(&[2, 4, 6])), Ok(true));
        assert_eq!(even_diameter_criterion(&families::cycle(&[2, 4, 2, 4, 2])), Ok(false));
        assert_eq!(even_diameter_criterion(&families::discrete(2)), Ok(true));
        assert!(matches!(even_diameter_criterion(&path_two_three()), Err(Error::NotEven(..))));
    }
}
