//! The operations behind the `cliquescope` binary, returning their output
//! as text so they can be driven from tests and other programs.

use std::fs::File;
use std::io::BufReader;
use std::path::Path;

use serde::Serialize;

use crate::clique::CliqueCounter;
use crate::dataset::load_tudataset;
use crate::error::{Error, Result};
use crate::graph::{load_edge_list_with_ids, EdgeListOptions, Graph};
use crate::learn::{cross_validate, CvConfig, CvReport, FeatureCache, FeatureKind, FeatureMatrix};
use crate::metrics::{clique_profile, clustering_summary, extended_profile};
use crate::temporal::{build_snapshots, hocc_trajectories, load_temporal_edge_list};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum OutputFormat {
    #[default]
    Json,
    Csv,
}

impl std::str::FromStr for OutputFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "json" => Ok(OutputFormat::Json),
            "csv" => Ok(OutputFormat::Csv),
            _ => Err(Error::Argument(format!("unknown format {s:?}"))),
        }
    }
}

fn open(path: &Path) -> Result<BufReader<File>> {
    File::open(path)
        .map(BufReader::new)
        .map_err(|e| Error::io(path, e))
}

/// Loads an edge-list file with default simplification.
pub fn read_graph(path: &Path) -> Result<(Graph, Vec<i64>)> {
    load_edge_list_with_ids(open(path)?, EdgeListOptions::default())
}

#[derive(Serialize)]
struct CountEntry {
    j: usize,
    count: String,
}

#[derive(Serialize)]
struct NodeRow {
    node: i64,
    counts: Vec<String>,
}

#[derive(Serialize)]
struct CountReport {
    nodes: usize,
    edges: usize,
    kmax: usize,
    counts: Vec<CountEntry>,
    #[serde(skip_serializing_if = "Option::is_none")]
    per_node: Option<Vec<NodeRow>>,
}

/// Exact clique counts of an edge-list file. Counts are written as decimal
/// strings. In CSV form the per-node table replaces the global one.
pub fn count(input: &Path, kmax: usize, per_node: bool, format: OutputFormat) -> Result<String> {
    let counter = CliqueCounter::new(kmax)?;
    let (g, ids) = read_graph(input)?;
    let (totals, nodes) = if per_node {
        let (t, n) = counter.count_all(&g);
        (t, Some(n))
    } else {
        (counter.count(&g), None)
    };

    match format {
        OutputFormat::Json => {
            let report = CountReport {
                nodes: g.node_count(),
                edges: g.edge_count(),
                kmax,
                counts: totals
                    .as_slice()
                    .iter()
                    .enumerate()
                    .map(|(i, c)| CountEntry {
                        j: i + 1,
                        count: c.to_string(),
                    })
                    .collect(),
                per_node: nodes.map(|nodes| {
                    ids.iter()
                        .enumerate()
                        .map(|(v, &id)| NodeRow {
                            node: id,
                            counts: nodes.node(v).iter().map(ToString::to_string).collect(),
                        })
                        .collect()
                }),
            };
            Ok(serde_json::to_string_pretty(&report)? + "\n")
        }
        OutputFormat::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            match nodes {
                Some(nodes) => {
                    let mut header = vec!["node".to_string()];
                    header.extend((1..=kmax).map(|j| format!("C_{j}")));
                    w.write_record(&header)?;
                    for (v, id) in ids.iter().enumerate() {
                        let mut row = vec![id.to_string()];
                        row.extend(nodes.node(v).iter().map(ToString::to_string));
                        w.write_record(&row)?;
                    }
                }
                None => {
                    w.write_record(["j", "count"])?;
                    for (i, c) in totals.as_slice().iter().enumerate() {
                        w.write_record([(i + 1).to_string(), c.to_string()])?;
                    }
                }
            }
            finish_csv(w)
        }
    }
}

fn finish_csv(w: csv::Writer<Vec<u8>>) -> Result<String> {
    let bytes = w.into_inner().map_err(|e| Error::Output(e.to_string()))?;
    String::from_utf8(bytes).map_err(|e| Error::Output(e.to_string()))
}

/// Where profile rows come from.
#[derive(Debug, Clone, Copy)]
pub enum ProfileSource<'a> {
    EdgeList(&'a Path),
    Dataset { dir: &'a Path, name: &'a str },
}

/// Clique-profile rows as `graph_id,label,f1..fd` CSV. A single edge list
/// yields one row with an empty label.
pub fn profile(source: ProfileSource<'_>, k: usize, extended: bool) -> Result<String> {
    if !(3..=crate::DEFAULT_KMAX).contains(&k) {
        return Err(Error::Argument(format!(
            "profile order {k} must lie in 3..={}",
            crate::DEFAULT_KMAX
        )));
    }
    match source {
        ProfileSource::EdgeList(path) => {
            let (g, _) = read_graph(path)?;
            let counts = CliqueCounter::new(k)?.count(&g);
            let row = if extended {
                extended_profile(&counts, &clustering_summary(&g), k)?
            } else {
                clique_profile(&counts, k)?
            };
            let mut w = csv::Writer::from_writer(Vec::new());
            let mut header = vec!["graph_id".to_string(), "label".to_string()];
            header.extend((1..=row.as_slice().len()).map(|i| format!("f{i}")));
            w.write_record(&header)?;
            let mut record = vec!["0".to_string(), String::new()];
            record.extend(row.as_slice().iter().map(f64::to_string));
            w.write_record(&record)?;
            finish_csv(w)
        }
        ProfileSource::Dataset { dir, name } => {
            let bundle = load_tudataset(dir, name)?;
            let cache = FeatureCache::build(&bundle, k)?;
            let kind = if extended {
                FeatureKind::Extended(k)
            } else {
                FeatureKind::Profile(k)
            };
            let rows = cache
                .stats
                .iter()
                .map(|s| {
                    if extended {
                        extended_profile(&s.counts, &s.clustering, k).map(|p| p.into_vec())
                    } else {
                        clique_profile(&s.counts, k).map(|p| p.into_vec())
                    }
                })
                .collect::<Result<_>>()?;
            let matrix = FeatureMatrix {
                dataset: bundle.name.clone(),
                feature_spec: kind.to_string(),
                rows,
                labels: bundle.labels.clone(),
                class_count: bundle.class_count(),
            };
            let mut buf = Vec::new();
            matrix.write_csv(&mut buf)?;
            String::from_utf8(buf).map_err(|e| Error::Output(e.to_string()))
        }
    }
}

/// `k,snapshot_index,mu` trajectory CSV for a temporal edge file.
pub fn hocc(input: &Path, kmax: usize, steps: usize) -> Result<String> {
    if kmax < 3 {
        return Err(Error::Argument(format!(
            "kmax must be at least 3, got {kmax}"
        )));
    }
    let stream = load_temporal_edge_list(open(input)?)?;
    let series = build_snapshots(&stream, steps)?;
    let matrix = hocc_trajectories(&series, kmax)?;
    let mut buf = Vec::new();
    matrix.write_csv(&mut buf)?;
    String::from_utf8(buf).map_err(|e| Error::Output(e.to_string()))
}

/// Cross-validated classification of a TUDataset directory. When
/// `export_features` is set the feature matrix is also written there.
pub fn classify(
    dir: &Path,
    name: &str,
    kind: FeatureKind,
    cfg: &CvConfig,
    export_features: Option<&Path>,
) -> Result<CvReport> {
    let bundle = load_tudataset(dir, name)?;
    let kmax = kind.order().unwrap_or(3).max(3);
    let features = FeatureCache::build(&bundle, kmax)?.matrix(kind)?;
    if let Some(path) = export_features {
        let file = File::create(path).map_err(|e| Error::io(path, e))?;
        features.write_csv(file)?;
    }
    cross_validate(&features, cfg)
}

/// Pretty JSON of a report, newline-terminated.
pub fn report_json(report: &CvReport) -> Result<String> {
    Ok(serde_json::to_string_pretty(report)? + "\n")
}
