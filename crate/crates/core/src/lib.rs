//! Bridge-node centrality for targeted vaccination.
//!
//! Each node is scored by the tuple *(components of its neighborhood graph,
//! algebraic connectivity ratio of that graph, degree)* and ranked
//! lexicographically: more components first, then sparser neighborhoods,
//! then higher degree. The top fraction of the ranking is vaccinated and a
//! seeded discrete-round SIS epidemic measures how many nodes stay infected
//! per round, against a plain degree-centrality baseline.
//!
//! ```
//! use nbnc_core::{generators, rank_nodes, Strategy};
//!
//! let star = generators::star(4);
//! let ranking = rank_nodes(&star, Strategy::Nbnc).unwrap();
//! assert_eq!(ranking.order[0], 0);
//! ```

pub mod centrality;
pub mod error;
pub mod experiment;
pub mod generators;
pub mod graph;
pub mod rng;
pub mod sis;
pub mod spectral;

pub use centrality::{
    compare_nbnc, degree_centrality, nbnc_tuple, nbnc_tuples, rank_nodes, select_vaccinees,
    vaccinee_count, NbncTuple, Ranking, Strategy, VaccineeSet,
};
pub use error::{Error, Result};
pub use experiment::{
    compute_ratios, run_sweep, summarize_ratios, Network, RatioRecord, SweepGrid, SweepRecord,
};
pub use graph::{connected_components, parse_edge_list, ComponentLabeling, Graph, NodeId};
pub use rng::SplitMix64;
pub use sis::{run_simulation, run_trials, NodeState, SimConfig, SimResult};
pub use spectral::{acr, algebraic_connectivity, eigenvalues, laplacian, Spectrum};
