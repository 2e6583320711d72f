//! Squarefree powers of edge ideals: graphs, ideals, regularity and checks.

pub mod cameron_walker;
pub mod error;
pub mod even_connection;
pub mod graph;
pub mod graph6;
pub mod ideal;
pub mod order;
pub mod regularity;
pub mod report;
pub mod verify;

pub use cameron_walker::{classify_cameron_walker, CwClassification, CwKind};
pub use error::*;
pub use even_connection::{colon_graph, even_connection_witness, ColonGraph, WitnessPath};
pub use graph::{induced_matching_number, matching_number, Graph, Matching};
pub use graph6::{parse_graph6, parse_graph6_str, to_graph6};
pub use ideal::{edge_ideal, Ideal, Monomial};
pub use regularity::{BettiTable, HomologyConfig, RegularityOracle};
pub use report::{CheckId, Report, Summary, Verdict};
pub use verify::{run_sweep, Checker, RegCache, Subject};
