//! Agent-based citation-network growth simulator.
//!
//! A simulation grows a seed citation graph year by year. Each new node is an
//! agent that clones an existing "generator" node, always cites it, and spends
//! the rest of its reference quota on weighted random selections driven by
//! preferential attachment, recency, and fitness scores, split between the
//! generator's 1-hop neighborhood and the rest of the network by a locality
//! parameter alpha. The companion modules generate seed graphs, analyse the
//! output (clustering coefficients, degree percentiles, iterative k-core
//! clustering), and keep every run reproducible from a single master seed.

pub mod dist;
pub mod engine;
pub mod graph;
pub mod io;
pub mod metrics;
pub mod rng;
pub mod sampling;
pub mod scoring;
pub mod seedgen;

pub use dist::{FitnessLaw, OutDegreeDist, Phenotype, PhenotypeMode, RecencyTable};
pub use engine::{run_simulation, RunOutput, SimConfig};
pub use graph::{NodeId, NodeKind, NodeRecord, TemporalDiGraph};
