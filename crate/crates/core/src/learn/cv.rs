use rand::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::features::FeatureMatrix;
use super::folds::stratified_folds;
use super::svm::{train_linear_svm, SvmConfig};
use crate::error::{Error, Result};

/// Repeated stratified cross-validation over a grid of `C` values.
#[derive(Debug, Clone, PartialEq)]
pub struct CvConfig {
    pub grid: Vec<f64>,
    pub repeats: usize,
    pub n_folds: usize,
    pub seed: u64,
    /// Solver settings; `c` and `seed` are overwritten per run.
    pub svm: SvmConfig,
}

impl Default for CvConfig {
    fn default() -> Self {
        CvConfig {
            grid: super::default_grid(),
            repeats: 10,
            n_folds: 10,
            seed: 0,
            svm: SvmConfig::default(),
        }
    }
}

/// Mean test accuracy of one grid point.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GridPoint {
    #[serde(rename = "C")]
    pub c: f64,
    pub mean: f64,
    pub std: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CvReport {
    pub dataset: String,
    pub feature_spec: String,
    #[serde(rename = "chosen_C")]
    pub chosen_c: f64,
    /// Percent.
    pub mean: f64,
    /// Population standard deviation, percent.
    pub std: f64,
    /// Test accuracies in `(repeat, fold)` order.
    pub fold_accuracies: Vec<f64>,
    pub seed: u64,
    pub repeats: usize,
    pub folds: usize,
    pub grid: Vec<GridPoint>,
}

impl CvReport {
    /// `mean±std` with two decimals.
    pub fn summary(&self) -> String {
        format!("{:.2}±{:.2}", self.mean, self.std)
    }
}

pub(crate) fn mean_std(values: &[f64]) -> (f64, f64) {
    let n = values.len() as f64;
    let mean = values.iter().sum::<f64>() / n;
    let var = values.iter().map(|v| (v - mean).powi(2)).sum::<f64>() / n;
    (mean, var.sqrt())
}

/// Runs `repeats × n_folds` train/test splits for every `C` in the grid and
/// reports the grid point with the best mean test accuracy (ties keep the
/// earlier grid entry).
///
/// Fold assignments and solver seeds depend only on `cfg.seed`, the repeat
/// and the fold, so every `C` sees the same splits and the result does not
/// depend on the number of worker threads.
pub fn cross_validate(features: &FeatureMatrix, cfg: &CvConfig) -> Result<CvReport> {
    if cfg.grid.is_empty() {
        return Err(Error::Argument("C grid is empty".into()));
    }
    if cfg.repeats == 0 {
        return Err(Error::Argument("need at least one repeat".into()));
    }
    if features.rows.len() != features.labels.len() {
        return Err(Error::Validation(format!(
            "{} feature rows but {} labels",
            features.rows.len(),
            features.labels.len()
        )));
    }

    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let split_seeds: Vec<u64> = (0..cfg.repeats).map(|_| rng.next_u64()).collect();
    let solver_seeds: Vec<u64> = (0..cfg.repeats * cfg.n_folds)
        .map(|_| rng.next_u64())
        .collect();
    let splits: Vec<Vec<usize>> = split_seeds
        .iter()
        .map(|&s| stratified_folds(&features.labels, cfg.n_folds, s))
        .collect::<Result<_>>()?;

    let jobs: Vec<(usize, usize, usize)> = (0..cfg.grid.len())
        .flat_map(|g| (0..cfg.repeats).flat_map(move |r| (0..cfg.n_folds).map(move |f| (g, r, f))))
        .collect();

    let accuracies: Vec<f64> = jobs
        .par_iter()
        .map(|&(g, r, f)| {
            let split = &splits[r];
            let (mut train_x, mut train_y, mut test_x, mut test_y) =
                (Vec::new(), Vec::new(), Vec::new(), Vec::new());
            for (i, &fold) in split.iter().enumerate() {
                if fold == f {
                    test_x.push(features.rows[i].clone());
                    test_y.push(features.labels[i]);
                } else {
                    train_x.push(features.rows[i].clone());
                    train_y.push(features.labels[i]);
                }
            }
            let svm = SvmConfig {
                c: cfg.grid[g],
                seed: solver_seeds[r * cfg.n_folds + f],
                ..cfg.svm
            };
            let model = train_linear_svm(&train_x, &train_y, &svm).map_err(|e| {
                Error::Training(format!("C={} repeat {r} fold {f}: {e}", cfg.grid[g]))
            })?;
            Ok(model.accuracy(&test_x, &test_y))
        })
        .collect::<Result<_>>()?;

    let per_point = cfg.repeats * cfg.n_folds;
    let grid: Vec<GridPoint> = cfg
        .grid
        .iter()
        .zip(accuracies.chunks(per_point))
        .map(|(&c, accs)| {
            let (mean, std) = mean_std(accs);
            GridPoint { c, mean, std }
        })
        .collect();
    let mut best = 0;
    for (i, point) in grid.iter().enumerate() {
        if point.mean > grid[best].mean {
            best = i;
        }
    }

    Ok(CvReport {
        dataset: features.dataset.clone(),
        feature_spec: features.feature_spec.clone(),
        chosen_c: grid[best].c,
        mean: grid[best].mean,
        std: grid[best].std,
        fold_accuracies: accuracies[best * per_point..(best + 1) * per_point].to_vec(),
        seed: cfg.seed,
        repeats: cfg.repeats,
        folds: cfg.n_folds,
        grid,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn matrix(rows: Vec<Vec<f64>>, labels: Vec<usize>) -> FeatureMatrix {
        let class_count = labels.iter().max().unwrap() + 1;
        FeatureMatrix {
            dataset: "synthetic".into(),
            feature_spec: "test".into(),
            rows,
            labels,
            class_count,
        }
    }

    #[test]
    fn uninformative_features_sit_at_chance() {
        let labels: Vec<usize> = (0..1000).map(|i| usize::from(i >= 500)).collect();
        let m = matrix(vec![vec![0.5]; 1000], labels);
        let cfg = CvConfig {
            repeats: 2,
            ..CvConfig::default()
        };
        let r = cross_validate(&m, &cfg).unwrap();
        assert_eq!(r.fold_accuracies.len(), 20);
        assert!((r.mean - 50.0).abs() < 1e-9, "{}", r.mean);
    }

    #[test]
    fn separable_features_score_perfectly_and_report_is_consistent() {
        let labels: Vec<usize> = (0..120).map(|i| i % 3).collect();
        let rows = labels
            .iter()
            .enumerate()
            .map(|(i, &c)| {
                let jitter = (i as f64 * 0.37).sin() * 0.05;
                match c {
                    0 => vec![1.0 + jitter, 0.0],
                    1 => vec![0.0, 1.0 + jitter],
                    _ => vec![-1.0 - jitter, -1.0],
                }
            })
            .collect();
        let m = matrix(rows, labels);
        let cfg = CvConfig {
            repeats: 3,
            seed: 17,
            ..CvConfig::default()
        };
        let r = cross_validate(&m, &cfg).unwrap();
        assert_eq!(r.mean, 100.0);
        assert_eq!(r.grid.len(), 7);
        let (mean, std) = mean_std(&r.fold_accuracies);
        assert!((mean - r.mean).abs() < 1e-9 && (std - r.std).abs() < 1e-9);
        assert_eq!(r, cross_validate(&m, &cfg).unwrap());
    }

    #[test]
    fn stratification_errors_propagate() {
        let m = matrix(
            vec![vec![0.0]; 12],
            vec![0, 0, 0, 1, 1, 1, 1, 1, 1, 1, 1, 1],
        );
        assert!(matches!(
            cross_validate(&m, &CvConfig::default()),
            Err(Error::Stratification { class: 0, .. })
        ));
        let empty_grid = CvConfig {
            grid: vec![],
            ..CvConfig::default()
        };
        assert!(cross_validate(&m, &empty_grid).is_err());
    }

    #[test]
    fn json_field_names() {
        let m = matrix(
            (0..40).map(|i| vec![(i % 2) as f64]).collect(),
            (0..40).map(|i| i % 2).collect(),
        );
        let cfg = CvConfig {
            grid: vec![1.0],
            repeats: 1,
            ..CvConfig::default()
        };
        let r = cross_validate(&m, &cfg).unwrap();
        let v: serde_json::Value = serde_json::to_value(&r).unwrap();
        for key in [
            "dataset",
            "feature_spec",
            "chosen_C",
            "mean",
            "std",
            "fold_accuracies",
            "seed",
        ] {
            assert!(v.get(key).is_some(), "missing {key}");
        }
        assert_eq!(r.summary(), "100.00±0.00");
    }
}
