use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};

/// Assigns every sample to one of `n_folds` folds, preserving class
/// proportions.
///
/// Members of each class are shuffled with a generator seeded by `seed`
/// (classes in ascending id) and dealt round-robin; the dealing position
/// carries over from one class to the next so fold sizes differ by at most
/// one as well.
pub fn stratified_folds(labels: &[usize], n_folds: usize, seed: u64) -> Result<Vec<usize>> {
    if n_folds < 2 {
        return Err(Error::Argument(format!(
            "need at least 2 folds, got {n_folds}"
        )));
    }
    let class_count = labels.iter().copied().max().map_or(0, |m| m + 1);
    let mut members: Vec<Vec<usize>> = vec![Vec::new(); class_count];
    for (i, &c) in labels.iter().enumerate() {
        members[c].push(i);
    }
    for (class, m) in members.iter().enumerate() {
        if !m.is_empty() && m.len() < n_folds {
            return Err(Error::Stratification {
                class,
                count: m.len(),
                folds: n_folds,
            });
        }
    }

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut assignment = vec![0; labels.len()];
    let mut next = 0;
    for mut m in members {
        m.shuffle(&mut rng);
        for i in m {
            assignment[i] = next;
            next = (next + 1) % n_folds;
        }
    }
    Ok(assignment)
}
