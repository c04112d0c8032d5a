//! Graph classification from clique profiles: feature assembly, a linear
//! SVM, stratified folds and repeated cross-validation.

mod cv;
mod features;
mod folds;
mod svm;

pub use cv::{cross_validate, CvConfig, CvReport, GridPoint};
pub use features::{assemble_features, FeatureCache, FeatureKind, FeatureMatrix, GraphStats};
pub use folds::stratified_folds;
pub use svm::{train_linear_svm, Penalty, SvmConfig, SvmModel};

/// Regularization grid `10^-3 ..= 10^3`.
pub fn default_grid() -> Vec<f64> {
    vec![1e-3, 1e-2, 1e-1, 1.0, 1e1, 1e2, 1e3]
}
