//! Deterministic simulator for interest-guided search in unstructured
//! peer-to-peer overlays.
//!
//! Peers share files described by attribute lists. A log-linear interest
//! model estimates how likely a user sharing one file is to share another,
//! and that estimate drives two protocols: a greedy guided search that
//! forwards queries toward the most promising neighbor, and a routing-table
//! update rule that records successful providers while evicting entries
//! with probability proportional to interest distance. A density filter
//! keeps accepted updates spread over the whole distance range instead of
//! piling up near each peer's own interests.
//!
//! The crate is organized around the simulation pipeline:
//!
//! - [`interest`] — files, catalogs, feature functions, the conditional
//!   model, maximum-likelihood training, and interest distances;
//! - [`overlay`] — per-peer routing tables, the update protocol, the
//!   competing eviction strategies, and the density filter;
//! - [`search`] — greedy guided search and a random-walk baseline;
//! - [`sim`] — catalog/network generation and the batch experiment engine;
//! - [`metrics`] — success rate, hop counts, small-world graph statistics,
//!   and CSV output;
//! - [`config`] / [`runner`] — the TOML configuration schema and the
//!   multi-mode, multi-replica experiment orchestrator behind the CLI.
//!
//! Every run is fully reproducible: all randomness derives from one seed
//! through labeled child streams, and identical configurations produce
//! byte-identical output files.

pub mod config;
pub mod interest;
pub mod metrics;
pub mod overlay;
pub mod rng;
pub mod runner;
pub mod search;
pub mod sim;
