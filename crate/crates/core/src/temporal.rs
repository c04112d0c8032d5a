//! Cumulative snapshots of a timestamped edge stream and the trajectories
//! of k-clustering coefficients across them.

use std::collections::{HashMap, HashSet};
use std::io::{BufRead, Write};

use rayon::prelude::*;

use crate::clique::CliqueCounter;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::metrics::higher_order_cc;

pub const DEFAULT_STEPS: usize = 120;
pub const DEFAULT_TRAJECTORY_KMAX: usize = 25;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TemporalEdge {
    pub source: u64,
    pub target: u64,
    pub timestamp: i64,
}

/// Raw interaction records in input order.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct TemporalEdgeList {
    pub records: Vec<TemporalEdge>,
}

impl TemporalEdgeList {
    pub fn len(&self) -> usize {
        self.records.len()
    }

    pub fn is_empty(&self) -> bool {
        self.records.is_empty()
    }
}

/// Parses `src dst timestamp` lines; extra tokens are ignored, `#` lines
/// and blank lines skipped.
pub fn load_temporal_edge_list<R: BufRead>(reader: R) -> Result<TemporalEdgeList> {
    let mut records = Vec::new();
    for (idx, line) in reader.lines().enumerate() {
        let lineno = idx + 1;
        let line = line.map_err(|e| Error::Parse {
            line: lineno,
            message: e.to_string(),
        })?;
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let tokens: Vec<&str> = trimmed.split_whitespace().collect();
        if tokens.len() < 3 {
            return Err(Error::Parse {
                line: lineno,
                message: "expected `src dst timestamp`".into(),
            });
        }
        let id = |tok: &str| {
            tok.parse::<u64>().map_err(|_| Error::Parse {
                line: lineno,
                message: format!("invalid node id {tok:?}"),
            })
        };
        let timestamp = tokens[2].parse::<i64>().map_err(|_| Error::Parse {
            line: lineno,
            message: format!("invalid timestamp {:?}", tokens[2]),
        })?;
        records.push(TemporalEdge {
            source: id(tokens[0])?,
            target: id(tokens[1])?,
            timestamp,
        });
    }
    Ok(TemporalEdgeList { records })
}

/// Growing prefixes of a time-sorted edge stream over a fixed node set.
#[derive(Debug, Clone)]
pub struct SnapshotSeries {
    /// Raw records added per step; the final step also takes the remainder.
    pub increment: usize,
    pub snapshots: Vec<Graph>,
    /// Number of raw records behind each snapshot.
    pub prefix_lengths: Vec<usize>,
    /// Original id of every node, in first-seen order of the sorted stream.
    pub node_ids: Vec<u64>,
}

impl SnapshotSeries {
    pub fn step_count(&self) -> usize {
        self.snapshots.len()
    }
}

/// Sorts records stably by timestamp and cuts `steps` cumulative prefixes
/// of `floor(len / steps)` records each, the last prefix being the whole
/// stream. Every snapshot is simplified and spans all nodes of the stream.
pub fn build_snapshots(t: &TemporalEdgeList, steps: usize) -> Result<SnapshotSeries> {
    if t.is_empty() {
        return Err(Error::Argument("temporal edge list is empty".into()));
    }
    if steps == 0 || steps > t.len() {
        return Err(Error::Argument(format!(
            "cannot cut {} records into {steps} snapshots",
            t.len()
        )));
    }

    let mut sorted = t.records.clone();
    sorted.sort_by_key(|r| r.timestamp);

    let mut index: HashMap<u64, usize> = HashMap::new();
    let mut node_ids = Vec::new();
    let mut intern = |id: u64| {
        *index.entry(id).or_insert_with(|| {
            node_ids.push(id);
            node_ids.len() - 1
        })
    };
    let arcs: Vec<(usize, usize)> = sorted
        .iter()
        .map(|r| (intern(r.source), intern(r.target)))
        .collect();
    let n = node_ids.len();

    let increment = t.len() / steps;
    let prefix_lengths: Vec<usize> = (1..=steps)
        .map(|i| if i == steps { t.len() } else { i * increment })
        .collect();

    let mut seen: HashSet<(usize, usize)> = HashSet::new();
    let mut simple: Vec<(usize, usize)> = Vec::new();
    let mut consumed = 0;
    let mut snapshots = Vec::with_capacity(steps);
    for &end in &prefix_lengths {
        for &(u, v) in &arcs[consumed..end] {
            if u != v && seen.insert((u.min(v), u.max(v))) {
                simple.push((u, v));
            }
        }
        consumed = end;
        snapshots.push(Graph::from_edges(n, simple.iter().copied()));
    }

    Ok(SnapshotSeries {
        increment,
        snapshots,
        prefix_lengths,
        node_ids,
    })
}

/// `μ_k(G_i)` for `k = 3 ..= kmax` and every snapshot `i`.
#[derive(Debug, Clone, PartialEq)]
pub struct TrajectoryMatrix {
    pub kmax: usize,
    pub steps: usize,
    values: Vec<f64>,
}

impl TrajectoryMatrix {
    /// Entry for order `k` and 1-based snapshot index `i`.
    pub fn get(&self, k: usize, i: usize) -> f64 {
        self.values[(k - 3) * self.steps + (i - 1)]
    }

    /// Trajectory of one order across all snapshots.
    pub fn row(&self, k: usize) -> &[f64] {
        &self.values[(k - 3) * self.steps..(k - 2) * self.steps]
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    /// Writes `k,snapshot_index,mu` rows, ordered by `k` then snapshot.
    pub fn write_csv<W: Write>(&self, out: W) -> Result<()> {
        let mut w = csv::Writer::from_writer(out);
        w.write_record(["k", "snapshot_index", "mu"])?;
        for k in 3..=self.kmax {
            for (i, mu) in self.row(k).iter().enumerate() {
                w.write_record([k.to_string(), (i + 1).to_string(), mu.to_string()])?;
            }
        }
        w.flush().map_err(|e| Error::Output(e.to_string()))?;
        Ok(())
    }
}

/// k-clustering trajectories over a snapshot series. Snapshots are
/// processed concurrently; each one is counted on a single worker.
pub fn hocc_trajectories(series: &SnapshotSeries, kmax: usize) -> Result<TrajectoryMatrix> {
    let counter = CliqueCounter::new(kmax)?.serial();
    let columns: Vec<Vec<f64>> = series
        .snapshots
        .par_iter()
        .map(|g| {
            let nodes = counter.count_per_node(g);
            (3..=kmax)
                .map(|k| higher_order_cc(g, &nodes, k).map(|h| h.global))
                .collect::<Result<Vec<f64>>>()
        })
        .collect::<Result<_>>()?;

    let steps = series.step_count();
    let mut values = vec![0.0; (kmax - 2) * steps];
    for (i, column) in columns.iter().enumerate() {
        for (row, &mu) in column.iter().enumerate() {
            values[row * steps + i] = mu;
        }
    }
    Ok(TrajectoryMatrix {
        kmax,
        steps,
        values,
    })
}
