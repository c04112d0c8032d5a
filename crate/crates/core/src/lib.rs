//! Exact clique analytics for simple undirected graphs.
//!
//! The crate counts k-cliques globally and per node with a pivot-based
//! succinct clique tree, derives clique profiles and (higher-order)
//! clustering coefficients from those counts, follows how the
//! k-clustering coefficients evolve over snapshots of a timestamped edge
//! stream, and ships a small linear-SVM harness for classifying labeled
//! graph datasets by their clique profiles.
//!
//! ```
//! use cliquescope::{count_cliques, generators, metrics};
//!
//! let k5 = generators::complete(5);
//! let counts = count_cliques(&k5, 6).unwrap();
//! assert_eq!(counts.get(3).to_string(), "10");
//!
//! let profile = metrics::clique_profile(&counts, 4).unwrap();
//! assert!((profile.clique_norm() - 1.0).abs() < 1e-12);
//! ```

pub mod clique;
pub mod commands;
pub mod dataset;
mod error;
pub mod exact;
pub mod generators;
pub mod graph;
pub mod learn;
pub mod metrics;
pub mod oracle;
pub mod temporal;

pub use clique::{
    count_cliques, count_cliques_per_node, CliqueCountVector, CliqueCounter, NodeCliqueCounts,
};
pub use dataset::{load_tudataset, write_tudataset, DatasetBundle};
pub use error::{Error, Result};
pub use graph::{degeneracy_order, load_edge_list, DegeneracyOrder, EdgeListOptions, Graph};
pub use oracle::brute_force_counts;

/// Default maximum clique order used for feature extraction.
pub const DEFAULT_KMAX: usize = 10;
