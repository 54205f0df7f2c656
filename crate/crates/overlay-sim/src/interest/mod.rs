//! User interest modeling.
//!
//! Files are described by attribute lists. A log-linear conditional model
//! over file pairs estimates the probability that a user sharing one file
//! also shares another; interest distances between files and between peers
//! are derived from it. Weights are fit to observed co-shared pairs by
//! gradient ascent on the log-likelihood.

mod catalog;
mod feature;
mod model;
mod train;

pub use catalog::{Catalog, FileId, FileRecord};
pub use feature::{FeatureClause, FeatureFunction};
pub use model::{InterestModel, ModelError, DEFAULT_MAX_DISTANCE};
pub use train::{train_weights, TrainOptions, TrainingPair};
