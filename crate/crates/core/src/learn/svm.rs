//! Linear soft-margin SVM.
//!
//! The L2-penalized problem is solved in the dual by coordinate descent
//! with shrinking, sweeping coordinates in a seeded random order. The bias
//! is an extra constant feature equal to 1, so it is regularized along
//! with the weights. The L1-penalized problem is solved in the primal by
//! normalized subgradient descent, keeping the best iterate.
//!
//! More than two classes are handled one-vs-rest.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Penalty {
    L2,
    L1,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SvmConfig {
    pub c: f64,
    pub penalty: Penalty,
    /// Outer sweeps (L2) or subgradient steps (L1).
    pub max_iterations: usize,
    pub tolerance: f64,
    pub seed: u64,
}

impl Default for SvmConfig {
    fn default() -> Self {
        SvmConfig {
            c: 1.0,
            penalty: Penalty::L2,
            max_iterations: 10_000,
            tolerance: 1e-4,
            seed: 0,
        }
    }
}

/// Trained linear classifier; one `(w, b)` per class, or a single one for
/// binary problems where class 1 is the positive side.
#[derive(Debug, Clone, PartialEq)]
pub struct SvmModel {
    pub class_count: usize,
    pub weights: Vec<Vec<f64>>,
    pub biases: Vec<f64>,
}

impl SvmModel {
    pub fn dimension(&self) -> usize {
        self.weights[0].len()
    }

    /// Score of every class.
    pub fn scores(&self, x: &[f64]) -> Vec<f64> {
        let raw: Vec<f64> = self
            .weights
            .iter()
            .zip(&self.biases)
            .map(|(w, b)| dot(w, x) + b)
            .collect();
        if self.class_count == 2 && raw.len() == 1 {
            vec![-raw[0], raw[0]]
        } else {
            raw
        }
    }

    /// Highest-scoring class; ties go to the lowest class id.
    pub fn predict(&self, x: &[f64]) -> usize {
        let scores = self.scores(x);
        let mut best = 0;
        for (c, &s) in scores.iter().enumerate() {
            if s > scores[best] {
                best = c;
            }
        }
        best
    }

    /// Percentage of rows predicted correctly.
    pub fn accuracy(&self, rows: &[Vec<f64>], labels: &[usize]) -> f64 {
        if rows.is_empty() {
            return 0.0;
        }
        let hits = rows
            .iter()
            .zip(labels)
            .filter(|(x, &y)| self.predict(x) == y)
            .count();
        100.0 * hits as f64 / rows.len() as f64
    }
}

/// Trains on rows `x` with class ids `y`.
pub fn train_linear_svm(x: &[Vec<f64>], y: &[usize], cfg: &SvmConfig) -> Result<SvmModel> {
    if x.len() != y.len() {
        return Err(Error::Validation(format!(
            "{} rows but {} labels",
            x.len(),
            y.len()
        )));
    }
    if !(cfg.c > 0.0 && cfg.c.is_finite()) {
        return Err(Error::Argument(format!(
            "C must be positive, got {}",
            cfg.c
        )));
    }
    let dim = x.first().map_or(0, Vec::len);
    for (i, row) in x.iter().enumerate() {
        if row.len() != dim {
            return Err(Error::Validation(format!(
                "row {i} has {} features, expected {dim}",
                row.len()
            )));
        }
        if row.iter().any(|v| !v.is_finite()) {
            return Err(Error::Validation(format!(
                "row {i} has a non-finite feature"
            )));
        }
    }
    let class_count = y.iter().copied().max().map_or(0, |m| m + 1);
    let mut present = vec![false; class_count];
    for &c in y {
        present[c] = true;
    }
    if present.iter().filter(|&&p| p).count() < 2 {
        return Err(Error::Training(
            "need samples from at least two classes".into(),
        ));
    }

    let targets: Vec<usize> = if class_count == 2 {
        vec![1]
    } else {
        (0..class_count).collect()
    };
    let mut weights = Vec::with_capacity(targets.len());
    let mut biases = Vec::with_capacity(targets.len());
    for &target in &targets {
        let signs: Vec<f64> = y
            .iter()
            .map(|&c| if c == target { 1.0 } else { -1.0 })
            .collect();
        let seed = cfg.seed.wrapping_add(target as u64);
        let (w, b) = match cfg.penalty {
            Penalty::L2 => dual_coordinate_descent(x, &signs, dim, cfg, seed),
            Penalty::L1 => l1_subgradient(x, &signs, dim, cfg),
        };
        weights.push(w);
        biases.push(b);
    }
    Ok(SvmModel {
        class_count,
        weights,
        biases,
    })
}

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Dual coordinate descent for `½‖(w, b)‖² + C Σ max(0, 1 − yᵢ(w·xᵢ + b))`.
fn dual_coordinate_descent(
    x: &[Vec<f64>],
    y: &[f64],
    dim: usize,
    cfg: &SvmConfig,
    seed: u64,
) -> (Vec<f64>, f64) {
    let l = x.len();
    let upper = cfg.c;
    let mut w = vec![0.0; dim];
    let mut b = 0.0;
    let mut alpha = vec![0.0; l];
    let diag: Vec<f64> = x.iter().map(|xi| dot(xi, xi) + 1.0).collect();
    let mut index: Vec<usize> = (0..l).collect();
    let mut active = l;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);

    // projected-gradient extremes from the previous sweep, for shrinking
    let mut pg_max_old = f64::INFINITY;
    let mut pg_min_old = f64::NEG_INFINITY;

    for _ in 0..cfg.max_iterations {
        let mut pg_max = f64::NEG_INFINITY;
        let mut pg_min = f64::INFINITY;

        for i in 0..active {
            let j = rng.gen_range(i..active);
            index.swap(i, j);
        }

        let mut s = 0;
        while s < active {
            let i = index[s];
            let g = y[i] * (dot(&w, &x[i]) + b) - 1.0;
            let mut pg = 0.0;
            if alpha[i] == 0.0 {
                if g > pg_max_old {
                    active -= 1;
                    index.swap(s, active);
                    continue;
                } else if g < 0.0 {
                    pg = g;
                }
            } else if alpha[i] == upper {
                if g < pg_min_old {
                    active -= 1;
                    index.swap(s, active);
                    continue;
                } else if g > 0.0 {
                    pg = g;
                }
            } else {
                pg = g;
            }
            pg_max = pg_max.max(pg);
            pg_min = pg_min.min(pg);

            if pg.abs() > 1e-12 {
                let old = alpha[i];
                alpha[i] = (old - g / diag[i]).clamp(0.0, upper);
                let step = (alpha[i] - old) * y[i];
                for (wk, xk) in w.iter_mut().zip(&x[i]) {
                    *wk += step * xk;
                }
                b += step;
            }
            s += 1;
        }

        if pg_max - pg_min <= cfg.tolerance {
            if active == l {
                break;
            }
            // converged on the shrunk set; re-check everything once more
            active = l;
            pg_max_old = f64::INFINITY;
            pg_min_old = f64::NEG_INFINITY;
            continue;
        }
        pg_max_old = if pg_max <= 0.0 { f64::INFINITY } else { pg_max };
        pg_min_old = if pg_min >= 0.0 {
            f64::NEG_INFINITY
        } else {
            pg_min
        };
    }
    (w, b)
}

/// Normalized subgradient descent on `‖w‖₁ + C Σ max(0, 1 − yᵢ(w·xᵢ + b))`.
fn l1_subgradient(x: &[Vec<f64>], y: &[f64], dim: usize, cfg: &SvmConfig) -> (Vec<f64>, f64) {
    let objective = |w: &[f64], b: f64| {
        let reg: f64 = w.iter().map(|v| v.abs()).sum();
        let loss: f64 = x
            .iter()
            .zip(y)
            .map(|(xi, yi)| (1.0 - yi * (dot(w, xi) + b)).max(0.0))
            .sum();
        reg + cfg.c * loss
    };

    let mut w = vec![0.0; dim];
    let mut b = 0.0;
    let mut best = (w.clone(), b, objective(&w, b));
    let mut grad = vec![0.0; dim];
    for t in 0..cfg.max_iterations {
        for (g, wk) in grad.iter_mut().zip(&w) {
            *g = if *wk > 0.0 {
                1.0
            } else if *wk < 0.0 {
                -1.0
            } else {
                0.0
            };
        }
        let mut grad_b = 0.0;
        for (xi, &yi) in x.iter().zip(y) {
            if yi * (dot(&w, xi) + b) < 1.0 {
                for (g, xk) in grad.iter_mut().zip(xi) {
                    *g -= cfg.c * yi * xk;
                }
                grad_b -= cfg.c * yi;
            }
        }
        let norm = (grad.iter().map(|g| g * g).sum::<f64>() + grad_b * grad_b).sqrt();
        if norm <= cfg.tolerance {
            break;
        }
        let step = 1.0 / ((t + 1) as f64).sqrt() / norm;
        for (wk, g) in w.iter_mut().zip(&grad) {
            *wk -= step * g;
        }
        b -= step * grad_b;
        let value = objective(&w, b);
        if value < best.2 {
            best = (w.clone(), b, value);
        }
    }
    (best.0, best.1)
}
