use std::fmt;
use std::io::Write;
use std::str::FromStr;

use rayon::prelude::*;

use crate::clique::{CliqueCountVector, CliqueCounter};
use crate::dataset::DatasetBundle;
use crate::error::{Error, Result};
use crate::metrics::{clique_profile, clustering_summary, extended_profile, ClusteringSummary};
use crate::DEFAULT_KMAX;

/// Which embedding a feature row holds.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FeatureKind {
    /// Clique profile over orders `3..=k`.
    Profile(usize),
    /// Clique profile followed by the global clustering coefficient.
    Extended(usize),
    /// Average local clustering, one dimension.
    AverageClustering,
    /// Global clustering, one dimension.
    GlobalClustering,
}

impl FeatureKind {
    pub fn dimension(&self) -> usize {
        match *self {
            FeatureKind::Profile(k) => k - 2,
            FeatureKind::Extended(k) => k - 1,
            _ => 1,
        }
    }

    /// Profile order, if any.
    pub fn order(&self) -> Option<usize> {
        match *self {
            FeatureKind::Profile(k) | FeatureKind::Extended(k) => Some(k),
            _ => None,
        }
    }
}

impl fmt::Display for FeatureKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FeatureKind::Profile(k) => write!(f, "C_{k}"),
            FeatureKind::Extended(k) => write!(f, "D_{k}"),
            FeatureKind::AverageClustering => f.write_str("acc"),
            FeatureKind::GlobalClustering => f.write_str("cc"),
        }
    }
}

impl FromStr for FeatureKind {
    type Err = Error;

    /// Accepts `C_k`, `Ck`, `D_k`, `Dk`, `acc` and `cc`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Argument(format!("unknown feature spec {s:?}"));
        match s {
            "acc" => return Ok(FeatureKind::AverageClustering),
            "cc" => return Ok(FeatureKind::GlobalClustering),
            _ => {}
        }
        let (head, tail) = s.split_at(s.find(|c: char| c.is_ascii_digit()).ok_or_else(bad)?);
        let k: usize = tail.parse().map_err(|_| bad())?;
        match head.trim_end_matches('_') {
            "C" => Ok(FeatureKind::Profile(k)),
            "D" => Ok(FeatureKind::Extended(k)),
            _ => Err(bad()),
        }
    }
}

/// Per-graph statistics every feature kind is derived from.
#[derive(Debug, Clone)]
pub struct GraphStats {
    pub counts: CliqueCountVector,
    pub clustering: ClusteringSummary,
}

/// Clique counts and clustering of every graph of a dataset, computed once
/// and reused across feature kinds.
#[derive(Debug, Clone)]
pub struct FeatureCache {
    pub dataset: String,
    pub labels: Vec<usize>,
    pub class_count: usize,
    pub stats: Vec<GraphStats>,
}

impl FeatureCache {
    /// Counts cliques up to `kmax` in every graph; graphs are processed in
    /// parallel, each on one worker.
    pub fn build(bundle: &DatasetBundle, kmax: usize) -> Result<Self> {
        let counter = CliqueCounter::new(kmax)?.serial();
        let stats = bundle
            .graphs
            .par_iter()
            .map(|g| GraphStats {
                counts: counter.count(g),
                clustering: clustering_summary(g),
            })
            .collect();
        Ok(FeatureCache {
            dataset: bundle.name.clone(),
            labels: bundle.labels.clone(),
            class_count: bundle.class_count(),
            stats,
        })
    }

    pub fn matrix(&self, kind: FeatureKind) -> Result<FeatureMatrix> {
        if let Some(k) = kind.order() {
            let kmax = self.stats.first().map_or(DEFAULT_KMAX, |s| s.counts.kmax());
            if !(4..=kmax).contains(&k) {
                return Err(Error::Argument(format!(
                    "profile order {k} must lie in 4..={kmax}"
                )));
            }
        }
        let rows = self
            .stats
            .iter()
            .map(|s| feature_row(s, kind))
            .collect::<Result<_>>()?;
        Ok(FeatureMatrix {
            dataset: self.dataset.clone(),
            feature_spec: kind.to_string(),
            rows,
            labels: self.labels.clone(),
            class_count: self.class_count,
        })
    }
}

fn feature_row(s: &GraphStats, kind: FeatureKind) -> Result<Vec<f64>> {
    Ok(match kind {
        FeatureKind::Profile(k) => clique_profile(&s.counts, k)?.into_vec(),
        FeatureKind::Extended(k) => extended_profile(&s.counts, &s.clustering, k)?.into_vec(),
        FeatureKind::AverageClustering => vec![s.clustering.acc],
        FeatureKind::GlobalClustering => vec![s.clustering.cc],
    })
}

/// One feature row per graph plus class ids.
#[derive(Debug, Clone, PartialEq)]
pub struct FeatureMatrix {
    pub dataset: String,
    pub feature_spec: String,
    pub rows: Vec<Vec<f64>>,
    pub labels: Vec<usize>,
    pub class_count: usize,
}

impl FeatureMatrix {
    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn dimension(&self) -> usize {
        self.rows.first().map_or(0, Vec::len)
    }

    /// Writes `graph_id,label,f1..fd`.
    pub fn write_csv<W: Write>(&self, out: W) -> Result<()> {
        let mut w = csv::Writer::from_writer(out);
        let mut header = vec!["graph_id".to_string(), "label".to_string()];
        header.extend((1..=self.dimension()).map(|i| format!("f{i}")));
        w.write_record(&header)?;
        for (i, (row, label)) in self.rows.iter().zip(&self.labels).enumerate() {
            let mut record = vec![i.to_string(), label.to_string()];
            record.extend(row.iter().map(f64::to_string));
            w.write_record(&record)?;
        }
        w.flush().map_err(|e| Error::Output(e.to_string()))?;
        Ok(())
    }
}

/// Feature matrix of one kind for a whole dataset.
pub fn assemble_features(bundle: &DatasetBundle, kind: FeatureKind) -> Result<FeatureMatrix> {
    let kmax = kind.order().unwrap_or(3).max(3);
    if let Some(k) = kind.order() {
        if !(4..=DEFAULT_KMAX).contains(&k) {
            return Err(Error::Argument(format!(
                "profile order {k} must lie in 4..={DEFAULT_KMAX}"
            )));
        }
    }
    FeatureCache::build(bundle, kmax)?.matrix(kind)
}
