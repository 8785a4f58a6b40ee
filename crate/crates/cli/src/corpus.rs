//! Bundled example graphs and graph specifications.
//!
//! A graph argument is one of: a file path, `-` for stdin, `corpus:<name>`,
//! or `family:<K|O|P|C>:<params>` (`K:5:3` is `K_5` with labels 3, `O:4` is
//! four isolated vertices, `P:2,3` and `C:2,4,2,4` list consecutive labels).

use std::io::Read;

use artin_core::families;

use crate::format::{parse, parse_text, Format, GraphDocument, ParseError};

/// `(name, contents)` of every bundled graph.
pub const CORPUS: &[(&str, &str)] = &[
    ("example3_4", include_str!("../corpus/example3_4.txt")),
    ("figure2_as_printed", include_str!("../corpus/figure2_as_printed.txt")),
    ("figure3_union", include_str!("../corpus/figure3_union.txt")),
];

#[derive(thiserror::Error, Debug)]
pub enum LoadError {
    #[error("{origin}: {error}")]
    Parse { origin: String, error: ParseError },
    #[error("unknown corpus graph {0:?} (available: example3_4, figure2_as_printed, figure3_union)")]
    UnknownCorpus(String),
    #[error("bad family specification {0:?}")]
    BadFamily(String),
    #[error("cannot read {path}: {error}")]
    Io { path: String, error: std::io::Error },
}

pub fn corpus_graph(name: &str) -> Result<GraphDocument, LoadError> {
    let (_, text) = CORPUS.iter().find(|(n, _)| *n == name).ok_or_else(|| LoadError::UnknownCorpus(name.into()))?;
    let source = format!("corpus:{name}");
    let mut doc = parse_text(&source, text).map_err(|error| LoadError::Parse { origin: source.clone(), error })?;
    doc.graph = doc.graph.with_name(Some(name.into()));
    Ok(doc)
}

fn family(input: &str) -> Option<artin_core::PresentationGraph> {
    let parts: Vec<&str> = input.split(':').collect();
    let labels = |s: &str| -> Option<Vec<u32>> {
        s.split(',').map(|l| l.trim().parse().ok().filter(|&m| (2..=artin_core::MAX_LABEL).contains(&m))).collect()
    };
    let g = match parts.as_slice() {
        ["K", n, m] => {
            let (n, m) = (n.parse().ok()?, labels(m)?);
            (n <= artin_core::MAX_VERTICES && m.len() == 1).then(|| families::complete(n, m[0]))?
        }
        ["O", n] => n.parse().ok().filter(|&n| n <= artin_core::MAX_VERTICES).map(families::discrete)?,
        ["P", ls] => labels(ls).filter(|l| l.len() < artin_core::MAX_VERTICES).map(|l| families::path(&l))?,
        ["C", ls] => labels(ls).filter(|l| (3..=artin_core::MAX_VERTICES).contains(&l.len())).map(|l| families::cycle(&l))?,
        _ => return None,
    };
    Some(g.with_name(Some(format!("family:{input}"))))
}

/// Resolves a graph argument. `format` overrides detection for files.
pub fn load(input: &str, format: Option<Format>) -> Result<GraphDocument, LoadError> {
    if let Some(name) = input.strip_prefix("corpus:") {
        return corpus_graph(name);
    }
    if let Some(f) = input.strip_prefix("family:") {
        let graph = family(f).ok_or_else(|| LoadError::BadFamily(f.into()))?;
        return Ok(GraphDocument { graph, source: input.into(), format: Format::Text, edge_lines: Vec::new() });
    }
    let text = if input == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map_err(|error| LoadError::Io { path: input.into(), error })?;
        s
    } else {
        std::fs::read_to_string(input).map_err(|error| LoadError::Io { path: input.into(), error })?
    };
    let format = format.unwrap_or_else(|| Format::detect(Some(input), &text));
    parse(input, &text, format).map_err(|error| LoadError::Parse { origin: input.into(), error })
}
