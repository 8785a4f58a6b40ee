//! Command definitions and their text/JSON output.

use std::fmt::Write;

use artin_core::classes::{classify, pip_rp_certificate, PipRpRegistry};
use artin_core::coxeter::{sphericity_partition, CoxeterMatrix};
use artin_core::oracle;
use artin_core::splittings::{
    describe, enumerate_splittings, pair_criterion, theorem_verdict, validate_splitting, AcylindricityVerdict,
    Criterion, EnumerationMode, Verdict, DEFAULT_SPLITTING_CAP,
};
use artin_core::tits::{certify, validate_certificate, BaseClassRegistry, CertifyOptions};
use artin_core::PresentationGraph;
use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::corpus::{load, LoadError};
use crate::dot::to_dot;
use crate::format::Format;
use crate::model::{
    odd_classes, verdict_line, CertificateError, CertificateJson, ClassWitnessJson, ClassifyJson, SplittingsJson,
    VerdictJson,
};

#[derive(Parser, Debug)]
#[command(name = "artin", version, about = "Visual splittings, acylindricity and Tits alternative certificates for Artin groups")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug)]
pub struct GraphArg {
    /// Graph file, `-` for stdin, `corpus:<name>` or `family:<K|O|P|C>:<params>`.
    pub graph: String,
    /// Input format; detected from the extension or content by default.
    #[arg(long, value_enum)]
    pub format: Option<InputFormat>,
}

#[derive(Copy, Clone, Debug, ValueEnum)]
pub enum InputFormat {
    Text,
    Json,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    All,
    Pairs,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Class predicates with witnesses, irreducible components and PIP/RP status.
    Classify {
        #[command(flatten)]
        input: GraphArg,
        #[arg(long)]
        json: bool,
    },
    /// Enumerate visual splittings with a verdict for each.
    Splittings {
        #[command(flatten)]
        input: GraphArg,
        #[arg(long, value_enum, default_value = "all")]
        mode: Mode,
        #[arg(long)]
        json: bool,
        /// Vertex cap for exhaustive enumeration.
        #[arg(long, default_value_t = DEFAULT_SPLITTING_CAP)]
        cap: usize,
    },
    /// Check one splitting given by its two sides.
    Check {
        #[command(flatten)]
        input: GraphArg,
        #[arg(long, value_delimiter = ',', num_args = 1.., required = true)]
        x: Vec<String>,
        #[arg(long, value_delimiter = ',', num_args = 1.., required = true)]
        y: Vec<String>,
        /// Graph containing Γ_X as an induced subgraph, used for PIP/RP.
        #[arg(long)]
        x_superset: Option<String>,
        #[arg(long)]
        y_superset: Option<String>,
        #[arg(long)]
        json: bool,
    },
    /// Search for a strong Tits alternative certificate.
    CertifyTits {
        #[command(flatten)]
        input: GraphArg,
        /// Base classes in order (spherical, fc_type, two_dimensional, large_type).
        #[arg(long, value_delimiter = ',')]
        bases: Option<Vec<String>>,
        #[arg(long, default_value_t = 8)]
        max_depth: usize,
        #[arg(long)]
        no_memo: bool,
        #[arg(long, default_value_t = DEFAULT_SPLITTING_CAP)]
        cap: usize,
        #[arg(long)]
        json: bool,
    },
    /// Graphviz DOT with edge labels.
    ExportDot {
        #[command(flatten)]
        input: GraphArg,
        /// Draw odd-labelled edges in bold red.
        #[arg(long)]
        highlight_odd: bool,
    },
    /// Re-validate a certificate JSON document.
    #[command(hide = true)]
    VerifyCertificate {
        file: String,
        #[arg(long, value_delimiter = ',')]
        bases: Option<Vec<String>>,
    },
    /// Brute-force cross-checks on one graph.
    #[command(hide = true)]
    Oracle {
        #[command(flatten)]
        input: GraphArg,
    },
}

#[derive(thiserror::Error, Debug)]
pub enum CliError {
    #[error(transparent)]
    Load(#[from] LoadError),
    #[error(transparent)]
    Graph(#[from] artin_core::Error),
    #[error("unknown base class {0:?} (available: spherical, fc_type, two_dimensional, large_type)")]
    UnknownBase(String),
    #[error(transparent)]
    Certificate(#[from] CertificateError),
    #[error("cannot read {0}: {1}")]
    Io(String, std::io::Error),
    #[error("invalid certificate JSON: {0}")]
    CertificateJson(serde_json::Error),
}

fn load_graph(input: &GraphArg) -> Result<PresentationGraph, CliError> {
    let format = input.format.map(|f| match f {
        InputFormat::Text => Format::Text,
        InputFormat::Json => Format::Json,
    });
    Ok(load(&input.graph, format)?.graph)
}

fn json<T: serde::Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("output models always serialize");
    s.push('\n');
    s
}

fn bases(tags: &Option<Vec<String>>) -> Result<BaseClassRegistry, CliError> {
    match tags {
        None => Ok(BaseClassRegistry::default()),
        Some(tags) => BaseClassRegistry::select(tags.iter().map(|t| t.trim())).map_err(CliError::UnknownBase),
    }
}

/// Runs a command and returns what it prints on stdout.
pub fn run(cli: &Cli) -> Result<String, CliError> {
    match &cli.command {
        Command::Classify { input, json: as_json } => {
            let g = load_graph(input)?;
            let report = classify(&g);
            let pip = pip_rp_certificate(&g, None, &PipRpRegistry::default())?;
            let doc = ClassifyJson::new(&g, &report, &pip);
            Ok(if *as_json { json(&doc) } else { classify_text(&g, &doc) })
        }
        Command::Splittings { input, mode, json: as_json, cap } => {
            let g = load_graph(input)?;
            let m = if *mode == Mode::All { EnumerationMode::All } else { EnumerationMode::VertexPairs };
            let registry = PipRpRegistry::default();
            let verdicts = enumerate_splittings(&g, m, *cap)?
                .iter()
                .map(|s| theorem_verdict(&g, s, (None, None), &registry))
                .collect::<Result<Vec<_>, _>>()?;
            let pairs: Vec<[String; 2]> = pair_criterion(&g)
                .into_iter()
                .map(|(a, b)| [g.vertex_name(a).into(), g.vertex_name(b).into()])
                .collect();
            if *as_json {
                let doc = SplittingsJson {
                    graph: crate::format::GraphJson::from_graph(&g),
                    mode: if *mode == Mode::All { "all" } else { "pairs" }.into(),
                    splittings: verdicts.iter().map(|v| VerdictJson::new(&g, v)).collect(),
                    criterion_pairs: pairs,
                };
                return Ok(json(&doc));
            }
            let mut out = format!("{} splitting{}\n", verdicts.len(), if verdicts.len() == 1 { "" } else { "s" });
            for v in &verdicts {
                let _ = writeln!(out, "{}", verdict_line(&g, v));
            }
            let pairs: Vec<String> = pairs.iter().map(|[a, b]| format!("({a},{b})")).collect();
            let _ = writeln!(out, "criterion pairs: {}", if pairs.is_empty() { "none".into() } else { pairs.join(" ") });
            Ok(out)
        }
        Command::Check { input, x, y, x_superset, y_superset, json: as_json } => {
            let g = load_graph(input)?;
            let xs = g.set_of(x.iter().map(String::as_str))?;
            let ys = g.set_of(y.iter().map(String::as_str))?;
            let s = validate_splitting(&g, xs, ys)?;
            let sx = x_superset.as_deref().map(|p| load(p, None)).transpose()?;
            let sy = y_superset.as_deref().map(|p| load(p, None)).transpose()?;
            let v = theorem_verdict(
                &g,
                &s,
                (sx.as_ref().map(|d| &d.graph), sy.as_ref().map(|d| &d.graph)),
                &PipRpRegistry::default(),
            )?;
            Ok(if *as_json { json(&VerdictJson::new(&g, &v)) } else { check_text(&g, &v) })
        }
        Command::CertifyTits { input, bases: tags, max_depth, no_memo, cap, json: as_json } => {
            let g = load_graph(input)?;
            let registry = bases(tags)?;
            let options = CertifyOptions { max_depth: *max_depth, memoize: !no_memo, cap: *cap, ..Default::default() };
            let c = certify(&g, &registry, &options);
            if c.is_complete() {
                if let Err(e) = validate_certificate(&c, &registry) {
                    panic!("certificate failed re-validation: {e}");
                }
            }
            if *as_json {
                return Ok(json(&CertificateJson::new(&c)));
            }
            let status = if c.is_complete() { "complete" } else { "incomplete" };
            Ok(format!("certificate: {status}, depth {}\n{}", c.depth(), c.render_text()))
        }
        Command::ExportDot { input, highlight_odd } => Ok(to_dot(&load_graph(input)?, *highlight_odd)),
        Command::VerifyCertificate { file, bases: tags } => {
            let text = std::fs::read_to_string(file).map_err(|e| CliError::Io(file.clone(), e))?;
            let doc: CertificateJson = serde_json::from_str(&text).map_err(CliError::CertificateJson)?;
            let c = doc.to_certificate(&PipRpRegistry::default())?;
            Ok(match validate_certificate(&c, &bases(tags)?) {
                Ok(()) => format!("valid: complete certificate, depth {}\n", c.depth()),
                Err(e) => format!("invalid: {e}\n"),
            })
        }
        Command::Oracle { input } => oracle_text(&load_graph(input)?),
    }
}

fn set(names: &[String]) -> String {
    format!("{{{}}}", names.join(","))
}

fn classify_text(g: &PresentationGraph, doc: &ClassifyJson) -> String {
    let mut out = format!(
        "graph {}: {} vertices, {} edges, diameter {}\n",
        g.name().unwrap_or("-"),
        g.len(),
        g.edge_count(),
        doc.diameter
    );
    let c = &doc.classes;
    for (label, class) in [
        ("right-angled", &c.right_angled),
        ("even", &c.even),
        ("large type", &c.large_type),
        ("(2,2)-free", &c.two_two_free),
        ("2-dimensional", &c.two_dimensional),
        ("FC type", &c.fc_type),
        ("spherical", &c.spherical),
        ("reducible", &c.reducible),
    ] {
        let witness = match &class.witness {
            None => String::new(),
            Some(w) => format!("  ({})", witness_text(w)),
        };
        let line = format!("{label:<14} {:<5}{witness}", if class.holds { "yes" } else { "no" });
        let _ = writeln!(out, "{}", line.trim_end());
    }
    let comps: Vec<String> = doc
        .components
        .iter()
        .map(|comp| match (&comp.finite_type, &comp.order) {
            (Some(t), Some(o)) => format!("{} {t} (order {o})", set(&comp.vertices)),
            _ => format!("{} infinite", set(&comp.vertices)),
        })
        .collect();
    let _ = writeln!(out, "components: {}", comps.join("; "));
    let classes: Vec<String> = doc.odd_classes.iter().map(|c| set(c)).collect();
    let _ = writeln!(out, "odd classes: {}", classes.join(" "));
    let _ = writeln!(out, "PIP/RP: {}", doc.pip_rp.rule.as_deref().unwrap_or("unknown"));
    out
}

fn witness_text(w: &ClassWitnessJson) -> String {
    match w {
        ClassWitnessJson::Edge { u, v, m } => format!("edge {u}-{v} label {m}"),
        ClassWitnessJson::Vertex { v, first, second } => format!("vertex {v} has 2-edges to {first} and {second}"),
        ClassWitnessJson::SphericalTriple { vertices } => format!("spherical triple {}", set(vertices)),
        ClassWitnessJson::NonSphericalClique { vertices } => format!("non-spherical clique {}", set(vertices)),
        ClassWitnessJson::NonSphericalComponent { vertices } => format!("non-spherical component {}", set(vertices)),
        ClassWitnessJson::DynkinSpanningTree { edges } => {
            let e: Vec<String> = edges.iter().map(|[u, v]| format!("{u}-{v}")).collect();
            format!("Dynkin diagram connected via {}", e.join(" "))
        }
    }
}

fn check_text(g: &PresentationGraph, v: &AcylindricityVerdict) -> String {
    let names = |s| set(&g.names(s).into_iter().map(String::from).collect::<Vec<_>>());
    let mut out = format!("splitting {}\n", describe(g, &v.splitting));
    let _ = writeln!(out, "N(X\\Z) in Γ_X: {}", names(v.criterion.x_neighbourhood));
    let _ = writeln!(out, "N(Y\\Z) in Γ_Y: {}", names(v.criterion.y_neighbourhood));
    let classes: Vec<String> = odd_classes(g).iter().map(|c| set(c)).collect();
    let _ = writeln!(out, "odd classes: {}", classes.join(" "));
    let _ = match &v.criterion.outcome {
        Criterion::Holds => writeln!(out, "criterion: holds"),
        Criterion::Fails(j) => writeln!(
            out,
            "criterion: fails; odd path {}",
            j.path.iter().map(|&p| g.vertex_name(p)).collect::<Vec<_>>().join(" ")
        ),
    };
    for (side, h) in [("X", &v.hypothesis_x), ("Y", &v.hypothesis_y)] {
        let _ = writeln!(out, "PIP/RP for Γ_{side}: {}", h.rule_id().map_or("unknown".into(), |r| format!("certified ({r})")));
    }
    let _ = match &v.verdict {
        Verdict::Acylindrical { k, c } => writeln!(out, "verdict: acylindrical (k={k}, C={c})"),
        Verdict::NotAcylindrical(w) => {
            let _ = writeln!(out, "verdict: not acylindrical");
            let _ = writeln!(out, "witness pair: ({},{})", g.vertex_name(w.x_prime), g.vertex_name(w.y_prime));
            writeln!(out, "witness word: {}", w.render(g))
        }
        Verdict::CriterionHoldsHypothesisUnknown => writeln!(out, "verdict: criterion holds, PIP/RP unknown"),
    };
    out
}

fn oracle_text(g: &PresentationGraph) -> Result<String, CliError> {
    let m = CoxeterMatrix::from_graph(g, g.all());
    let mut out = format!("gram positive definite: {}\n", oracle::gram_positive_definite(&m));
    let _ = writeln!(out, "recognizer spherical: {}", sphericity_partition(g, g.all()).aspherical.is_empty());
    let _ = match oracle::enumerate_coxeter(&m, oracle::DEFAULT_ENUMERATION_CAP) {
        Ok(t) => writeln!(out, "coxeter group order: {}", t.len()),
        Err(e) => writeln!(out, "coxeter group: more than {} elements", e.cap),
    };
    let _ = match oracle::brute_force_splittings(g) {
        Ok(s) => writeln!(out, "brute-force splittings: {}", s.len()),
        Err(e) => writeln!(out, "brute-force splittings: {e}"),
    };
    Ok(out)
}
