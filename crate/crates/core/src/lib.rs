//! Visual splittings of Artin groups, their acylindricity, and recursive
//! certificates for the strong Tits alternative.
//!
//! An Artin group is given by a [`PresentationGraph`]: a finite simple graph
//! whose edges carry integer labels `m >= 2`. Everything in this crate is a
//! pure function of such graphs and of [`VertexSet`]s over them.
//!
//! - [`graph`]: neighbourhoods, links, perp sets, odd-labelled components.
//! - [`coxeter`]: Dynkin diagrams and finite-type recognition.
//! - [`classes`]: class predicates and the PIP/RP hypothesis registry.
//! - [`splittings`]: visual splittings, the odd-path criterion, witness words.
//! - [`tits`]: strong Tits alternative certificates and their checker.
//! - [`oracle`]: brute-force cross-checks (Gram form, group enumeration).
#![no_std]

extern crate alloc;

pub mod classes;
pub mod coxeter;
mod error;
pub mod families;
pub mod graph;
pub mod oracle;
pub mod splittings;
pub mod tits;

pub use classes::{ClassReport, PipRpEvidence, PipRpRegistry, PipRpRule};
pub use coxeter::{CoxeterLabel, CoxeterMatrix, FiniteType};
pub use error::Error;
pub use graph::{Diameter, GraphBuilder, OddPartition, PresentationGraph, VertexSet};
pub use splittings::{AcylindricityVerdict, Verdict, VisualSplitting, WitnessWord};
pub use tits::{BaseClassRegistry, TitsCertificate};

/// Largest number of vertices a presentation graph may have.
pub const MAX_VERTICES: usize = 64;

/// Largest accepted edge label.
pub const MAX_LABEL: u32 = 1_000_000;
