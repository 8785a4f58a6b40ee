//! File formats, the bundled corpus and the `artin` command-line tool.

pub mod app;
pub mod corpus;
pub mod dot;
pub mod format;
pub mod model;
