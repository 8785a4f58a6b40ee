//! JSON documents produced by the commands, and the way back from a
//! certificate document to a [`TitsCertificate`].

use artin_core::classes::{ClassFlag, ClassReport, PipRpEvidence, PipRpRegistry, Witness};
use artin_core::coxeter::sphericity_partition;
use artin_core::splittings::{
    describe, AcylindricityVerdict, Criterion, CriterionReport, FactorRole, Verdict, VisualSplitting, WitnessWord,
};
use artin_core::tits::{split_node, CertificateNode, SearchSummary, TitsCertificate};
use artin_core::{PresentationGraph, VertexSet};
use serde::{Deserialize, Serialize};

use crate::format::{GraphJson, ParseError};

fn names(g: &PresentationGraph, set: VertexSet) -> Vec<String> {
    g.names(set).into_iter().map(str::to_string).collect()
}

fn name(g: &PresentationGraph, v: usize) -> String {
    g.vertex_name(v).to_string()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SplittingJson {
    pub x: Vec<String>,
    pub y: Vec<String>,
    pub z: Vec<String>,
}

impl SplittingJson {
    pub fn new(g: &PresentationGraph, s: &VisualSplitting) -> Self {
        SplittingJson { x: names(g, s.x()), y: names(g, s.y()), z: names(g, s.z()) }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HypothesisJson {
    /// `certified` or `unknown`.
    pub outcome: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rule: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub citation: Option<String>,
    /// For `user_superset`: the rule that holds on the superset.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub superset_rule: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub superset: Option<GraphJson>,
    /// Image of each vertex of the side, in vertex order.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub embedding: Option<Vec<String>>,
}

impl HypothesisJson {
    pub fn new(e: &PipRpEvidence) -> Self {
        match e {
            PipRpEvidence::Unknown => HypothesisJson {
                outcome: "unknown".into(),
                rule: None,
                citation: None,
                superset_rule: None,
                superset: None,
                embedding: None,
            },
            PipRpEvidence::Certified { rule, superset } => HypothesisJson {
                outcome: "certified".into(),
                rule: e.rule_id().map(str::to_string),
                citation: Some(rule.citation().into()),
                superset_rule: superset.as_ref().map(|_| rule.id().to_string()),
                superset: superset.as_ref().map(|s| GraphJson::from_graph(&s.graph)),
                embedding: superset.as_ref().map(|s| s.embedding.iter().map(|&v| name(&s.graph, v)).collect()),
            },
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CriterionJson {
    /// `holds` or `fails`.
    pub outcome: String,
    pub x_neighbourhood: Vec<String>,
    pub y_neighbourhood: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness_pair: Option<[String; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub odd_path: Option<Vec<String>>,
}

impl CriterionJson {
    pub fn new(g: &PresentationGraph, r: &CriterionReport) -> Self {
        let (outcome, pair, path) = match &r.outcome {
            Criterion::Holds => ("holds", None, None),
            Criterion::Fails(j) => (
                "fails",
                Some([name(g, j.x_prime), name(g, j.y_prime)]),
                Some(j.path.iter().map(|&v| name(g, v)).collect()),
            ),
        };
        CriterionJson {
            outcome: outcome.into(),
            x_neighbourhood: names(g, r.x_neighbourhood),
            y_neighbourhood: names(g, r.y_neighbourhood),
            witness_pair: pair,
            odd_path: path,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FactorJson {
    pub role: String,
    pub word: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WitnessWordJson {
    pub x: String,
    pub x_prime: String,
    pub y: String,
    pub y_prime: String,
    pub path: Vec<String>,
    pub word: String,
    pub factors: Vec<FactorJson>,
}

impl WitnessWordJson {
    pub fn new(g: &PresentationGraph, w: &WitnessWord) -> Self {
        let factors = w
            .factors()
            .into_iter()
            .map(|(role, letters)| FactorJson {
                role: match role {
                    FactorRole::ConjugatorInverse => "g_inverse",
                    FactorRole::CentralY => "z_y",
                    FactorRole::Conjugator => "g",
                    FactorRole::CentralX => "z_x",
                }
                .into(),
                word: artin_core::splittings::render_letters(g, &letters),
            })
            .collect();
        WitnessWordJson {
            x: name(g, w.x),
            x_prime: name(g, w.x_prime),
            y: name(g, w.y),
            y_prime: name(g, w.y_prime),
            path: w.path.iter().map(|&v| name(g, v)).collect(),
            word: w.render(g),
            factors,
        }
    }
}

/// One splitting with its full layered verdict.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct VerdictJson {
    pub splitting: SplittingJson,
    pub criterion: CriterionJson,
    pub hypothesis_x: HypothesisJson,
    pub hypothesis_y: HypothesisJson,
    /// `acylindrical`, `not_acylindrical` or `criterion_holds_hypothesis_unknown`.
    pub verdict: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub c: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<WitnessWordJson>,
}

impl VerdictJson {
    pub fn new(g: &PresentationGraph, v: &AcylindricityVerdict) -> Self {
        let (verdict, kc, witness) = match &v.verdict {
            Verdict::Acylindrical { k, c } => ("acylindrical", Some((*k, *c)), None),
            Verdict::NotAcylindrical(w) => ("not_acylindrical", None, Some(WitnessWordJson::new(g, w))),
            Verdict::CriterionHoldsHypothesisUnknown => ("criterion_holds_hypothesis_unknown", None, None),
        };
        VerdictJson {
            splitting: SplittingJson::new(g, &v.splitting),
            criterion: CriterionJson::new(g, &v.criterion),
            hypothesis_x: HypothesisJson::new(&v.hypothesis_x),
            hypothesis_y: HypothesisJson::new(&v.hypothesis_y),
            verdict: verdict.into(),
            k: kc.map(|p| p.0),
            c: kc.map(|p| p.1),
            witness,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SplittingsJson {
    pub graph: GraphJson,
    pub mode: String,
    pub splittings: Vec<VerdictJson>,
    /// Non-adjacent pairs whose vertex-pair splitting satisfies the criterion.
    pub criterion_pairs: Vec<[String; 2]>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum ClassWitnessJson {
    Edge { u: String, v: String, m: u32 },
    Vertex { v: String, first: String, second: String },
    SphericalTriple { vertices: Vec<String> },
    NonSphericalClique { vertices: Vec<String> },
    NonSphericalComponent { vertices: Vec<String> },
    DynkinSpanningTree { edges: Vec<[String; 2]> },
}

impl ClassWitnessJson {
    pub fn new(g: &PresentationGraph, w: &Witness) -> Self {
        match w {
            Witness::Edge { u, v, m } => ClassWitnessJson::Edge { u: name(g, *u), v: name(g, *v), m: *m },
            Witness::Vertex { v, first, second } => {
                ClassWitnessJson::Vertex { v: name(g, *v), first: name(g, *first), second: name(g, *second) }
            }
            Witness::SphericalTriple(s) => ClassWitnessJson::SphericalTriple { vertices: names(g, *s) },
            Witness::NonSphericalClique(s) => ClassWitnessJson::NonSphericalClique { vertices: names(g, *s) },
            Witness::NonSphericalComponent(s) => ClassWitnessJson::NonSphericalComponent { vertices: names(g, *s) },
            Witness::DynkinSpanningTree(edges) => ClassWitnessJson::DynkinSpanningTree {
                edges: edges.iter().map(|&(u, v)| [name(g, u), name(g, v)]).collect(),
            },
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ClassJson {
    pub holds: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<ClassWitnessJson>,
}

impl ClassJson {
    fn new(g: &PresentationGraph, f: &ClassFlag) -> Self {
        ClassJson { holds: f.holds, witness: f.witness.as_ref().map(|w| ClassWitnessJson::new(g, w)) }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ClassesJson {
    pub right_angled: ClassJson,
    pub even: ClassJson,
    pub large_type: ClassJson,
    pub two_two_free: ClassJson,
    pub two_dimensional: ClassJson,
    pub fc_type: ClassJson,
    pub spherical: ClassJson,
    pub reducible: ClassJson,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComponentJson {
    pub vertices: Vec<String>,
    /// Finite type such as `A3` or `I2(5)`; absent when infinite.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub finite_type: Option<String>,
    /// Coxeter group order, as a decimal string.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub order: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ClassifyJson {
    pub graph: GraphJson,
    pub classes: ClassesJson,
    pub components: Vec<ComponentJson>,
    pub odd_classes: Vec<Vec<String>>,
    pub diameter: String,
    pub pip_rp: HypothesisJson,
}

impl ClassifyJson {
    pub fn new(g: &PresentationGraph, r: &ClassReport, pip_rp: &PipRpEvidence) -> Self {
        let c = |f: &ClassFlag| ClassJson::new(g, f);
        ClassifyJson {
            graph: GraphJson::from_graph(g),
            classes: ClassesJson {
                right_angled: c(&r.right_angled),
                even: c(&r.even),
                large_type: c(&r.large_type),
                two_two_free: c(&r.two_two_free),
                two_dimensional: c(&r.two_dimensional),
                fc_type: c(&r.fc_type),
                spherical: c(&r.spherical),
                reducible: c(&r.reducible),
            },
            components: sphericity_partition(g, g.all())
                .components
                .iter()
                .map(|(set, t)| ComponentJson {
                    vertices: names(g, *set),
                    finite_type: t.map(|t| t.to_string()),
                    order: t.map(|t| t.order().to_string()),
                })
                .collect(),
            odd_classes: odd_classes(g),
            diameter: g.diameter().to_string(),
            pip_rp: HypothesisJson::new(pip_rp),
        }
    }
}

/// Odd-path classes, each sorted, ordered by least member.
pub fn odd_classes(g: &PresentationGraph) -> Vec<Vec<String>> {
    g.odd_components().classes().iter().map(|c| names(g, *c)).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CertificateVerdictJson {
    pub criterion: String,
    pub k: u32,
    pub c: u32,
    pub hypothesis_x: HypothesisJson,
    pub hypothesis_y: HypothesisJson,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SummaryJson {
    pub depth_limited: bool,
    pub size_capped: bool,
    pub splittings_examined: usize,
    pub acylindrical_splittings: usize,
    pub incomplete_children: usize,
}

/// A certificate node; children follow the same schema.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CertificateJson {
    pub graph: GraphJson,
    /// `base`, `split` or `unknown`.
    pub status: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub base_class: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub citation: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub splitting: Option<SplittingJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub verdict: Option<CertificateVerdictJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub children: Option<Vec<CertificateJson>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub summary: Option<SummaryJson>,
}

#[derive(thiserror::Error, Debug)]
pub enum CertificateError {
    #[error("invalid graph in certificate: {0}")]
    Graph(#[from] ParseError),
    #[error("invalid splitting in certificate: {0}")]
    Splitting(#[from] artin_core::Error),
    #[error("malformed certificate node: {0}")]
    Shape(&'static str),
    #[error("recorded verdict differs from the recomputed one")]
    VerdictMismatch,
}

impl CertificateJson {
    pub fn new(c: &TitsCertificate) -> Self {
        let g = &c.graph;
        let mut out = CertificateJson {
            graph: GraphJson::from_graph(g),
            status: String::new(),
            base_class: None,
            citation: None,
            splitting: None,
            verdict: None,
            children: None,
            summary: None,
        };
        match &c.node {
            CertificateNode::Base { tag, citation } => {
                out.status = "base".into();
                out.base_class = Some(tag.clone());
                out.citation = Some(citation.clone());
            }
            CertificateNode::Split { verdict, children } => {
                out.status = "split".into();
                out.splitting = Some(SplittingJson::new(g, &verdict.splitting));
                out.verdict = Some(certificate_verdict(verdict));
                out.children = Some(children.iter().map(CertificateJson::new).collect());
            }
            CertificateNode::Unknown(s) => {
                out.status = "unknown".into();
                out.summary = Some(SummaryJson {
                    depth_limited: s.depth_limited,
                    size_capped: s.size_capped,
                    splittings_examined: s.splittings_examined,
                    acylindrical_splittings: s.acylindrical_splittings,
                    incomplete_children: s.incomplete_children,
                });
            }
        }
        out
    }

    /// Rebuilds the certificate. Split verdicts are recomputed from the
    /// graph and splitting and must match what the document records.
    pub fn to_certificate(&self, pip_rp: &PipRpRegistry) -> Result<TitsCertificate, CertificateError> {
        let (graph, _) = self.graph.to_graph()?;
        let node = match self.status.as_str() {
            "base" => CertificateNode::Base {
                tag: self.base_class.clone().ok_or(CertificateError::Shape("base node without base_class"))?,
                citation: self.citation.clone().ok_or(CertificateError::Shape("base node without citation"))?,
            },
            "split" => {
                let s = self.splitting.as_ref().ok_or(CertificateError::Shape("split node without splitting"))?;
                let children = match self.children.as_deref() {
                    Some([a, b]) => [a.to_certificate(pip_rp)?, b.to_certificate(pip_rp)?],
                    _ => return Err(CertificateError::Shape("split node needs exactly two children")),
                };
                let x = graph.set_of(s.x.iter().map(String::as_str))?;
                let y = graph.set_of(s.y.iter().map(String::as_str))?;
                let node = split_node(&graph, x, y, pip_rp, children)?;
                let CertificateNode::Split { verdict, .. } = &node else { unreachable!() };
                if Some(certificate_verdict(verdict)) != self.verdict || Some(SplittingJson::new(&graph, &verdict.splitting)) != self.splitting {
                    return Err(CertificateError::VerdictMismatch);
                }
                node
            }
            "unknown" => {
                let s = self.summary.as_ref().ok_or(CertificateError::Shape("unknown node without summary"))?;
                CertificateNode::Unknown(SearchSummary {
                    depth_limited: s.depth_limited,
                    size_capped: s.size_capped,
                    splittings_examined: s.splittings_examined,
                    acylindrical_splittings: s.acylindrical_splittings,
                    incomplete_children: s.incomplete_children,
                })
            }
            _ => return Err(CertificateError::Shape("status must be base, split or unknown")),
        };
        Ok(TitsCertificate { graph, node })
    }
}

fn certificate_verdict(v: &AcylindricityVerdict) -> CertificateVerdictJson {
    let (k, c) = match v.verdict {
        Verdict::Acylindrical { k, c } => (k, c),
        _ => (0, 0),
    };
    CertificateVerdictJson {
        criterion: if v.criterion.holds() { "holds" } else { "fails" }.into(),
        k,
        c,
        hypothesis_x: HypothesisJson::new(&v.hypothesis_x),
        hypothesis_y: HypothesisJson::new(&v.hypothesis_y),
    }
}

/// Short human-readable line for a verdict.
pub fn verdict_line(g: &PresentationGraph, v: &AcylindricityVerdict) -> String {
    let head = describe(g, &v.splitting);
    match &v.verdict {
        Verdict::Acylindrical { k, c } => format!(
            "{head}: acylindrical (k={k}, C={c}); PIP/RP via X: {}, Y: {}",
            v.hypothesis_x.rule_id().unwrap_or("?"),
            v.hypothesis_y.rule_id().unwrap_or("?")
        ),
        Verdict::NotAcylindrical(w) => format!(
            "{head}: not acylindrical; witness pair ({},{}); word: {}",
            g.vertex_name(w.x_prime),
            g.vertex_name(w.y_prime),
            w.render(g)
        ),
        Verdict::CriterionHoldsHypothesisUnknown => format!(
            "{head}: criterion holds, PIP/RP unknown (X: {}, Y: {})",
            v.hypothesis_x.rule_id().unwrap_or("unknown"),
            v.hypothesis_y.rule_id().unwrap_or("unknown")
        ),
    }
}
