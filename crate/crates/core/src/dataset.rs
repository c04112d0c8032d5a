//! Labeled graph collections in the TUDataset text layout.
//!
//! A dataset `NAME` lives in a directory holding
//!
//! * `NAME_A.txt`: one `i, j` line per arc, node ids 1-based and global
//!   across the whole collection;
//! * `NAME_graph_indicator.txt`: line `i` holds the 1-based graph id of node `i`;
//! * `NAME_graph_labels.txt`: line `g` holds the integer label of graph `g`.

use std::collections::BTreeSet;
use std::fs::File;
use std::io::{BufRead, BufReader};
use std::path::{Path, PathBuf};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Graphs with contiguous 0-based class ids.
#[derive(Debug, Clone)]
pub struct DatasetBundle {
    pub name: String,
    pub graphs: Vec<Graph>,
    pub labels: Vec<usize>,
    /// Original label of every class id, ascending.
    pub class_labels: Vec<i64>,
}

impl DatasetBundle {
    /// Builds a bundle from raw labels, remapping them to `0..classes` in
    /// ascending label order.
    pub fn new(name: impl Into<String>, graphs: Vec<Graph>, raw_labels: &[i64]) -> Result<Self> {
        if graphs.len() != raw_labels.len() {
            return Err(Error::Format(format!(
                "{} graphs but {} labels",
                graphs.len(),
                raw_labels.len()
            )));
        }
        let class_labels: Vec<i64> = raw_labels
            .iter()
            .copied()
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        let labels = raw_labels
            .iter()
            .map(|l| class_labels.binary_search(l).unwrap())
            .collect();
        Ok(DatasetBundle {
            name: name.into(),
            graphs,
            labels,
            class_labels,
        })
    }

    pub fn len(&self) -> usize {
        self.graphs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.graphs.is_empty()
    }

    pub fn class_count(&self) -> usize {
        self.class_labels.len()
    }

    /// Number of graphs per class id.
    pub fn class_sizes(&self) -> Vec<usize> {
        let mut sizes = vec![0; self.class_count()];
        for &l in &self.labels {
            sizes[l] += 1;
        }
        sizes
    }
}

fn open_lines(path: &Path) -> Result<Vec<(usize, String)>> {
    let file = File::open(path).map_err(|e| Error::io(path, e))?;
    let mut out = Vec::new();
    for (i, line) in BufReader::new(file).lines().enumerate() {
        let line = line.map_err(|e| Error::io(path, e))?;
        let trimmed = line.trim();
        if !trimmed.is_empty() {
            out.push((i + 1, trimmed.to_string()));
        }
    }
    Ok(out)
}

fn parse_int<T: std::str::FromStr>(tok: &str, path: &Path, line: usize) -> Result<T> {
    tok.trim().parse().map_err(|_| {
        Error::Format(format!(
            "{}:{line}: expected an integer, found {tok:?}",
            path.display()
        ))
    })
}

/// Loads `dir/name_*.txt` into a [`DatasetBundle`].
pub fn load_tudataset(dir: impl AsRef<Path>, name: &str) -> Result<DatasetBundle> {
    let dir = dir.as_ref();
    let file = |suffix: &str| -> PathBuf { dir.join(format!("{name}_{suffix}.txt")) };
    let (a_path, ind_path, lab_path) = (file("A"), file("graph_indicator"), file("graph_labels"));

    let indicator: Vec<usize> = open_lines(&ind_path)?
        .into_iter()
        .map(|(line, text)| {
            let g: usize = parse_int(&text, &ind_path, line)?;
            if g == 0 {
                return Err(Error::Format(format!(
                    "{}:{line}: graph ids are 1-based",
                    ind_path.display()
                )));
            }
            Ok(g - 1)
        })
        .collect::<Result<_>>()?;
    let raw_labels: Vec<i64> = open_lines(&lab_path)?
        .into_iter()
        .map(|(line, text)| parse_int(&text, &lab_path, line))
        .collect::<Result<_>>()?;
    let arcs = open_lines(&a_path)?;

    let graph_count = raw_labels.len();
    if let Some(&g) = indicator.iter().find(|&&g| g >= graph_count) {
        return Err(Error::Format(format!(
            "{} references graph {} but only {graph_count} labels exist",
            ind_path.display(),
            g + 1
        )));
    }

    // local ids follow file order within each graph
    let mut local = vec![0usize; indicator.len()];
    let mut sizes = vec![0usize; graph_count];
    for (node, &g) in indicator.iter().enumerate() {
        local[node] = sizes[g];
        sizes[g] += 1;
    }

    let mut edges: Vec<Vec<(usize, usize)>> = vec![Vec::new(); graph_count];
    for (line, text) in arcs {
        let mut parts = text.split(',');
        let (Some(a), Some(b)) = (parts.next(), parts.next()) else {
            return Err(Error::Format(format!(
                "{}:{line}: expected `i, j`",
                a_path.display()
            )));
        };
        let u: usize = parse_int(a, &a_path, line)?;
        let v: usize = parse_int(b, &a_path, line)?;
        for x in [u, v] {
            if x == 0 || x > indicator.len() {
                return Err(Error::Format(format!(
                    "{}:{line}: node {x} has no graph indicator",
                    a_path.display()
                )));
            }
        }
        let (gu, gv) = (indicator[u - 1], indicator[v - 1]);
        if gu != gv {
            return Err(Error::Format(format!(
                "{}:{line}: edge ({u}, {v}) joins graphs {} and {}",
                a_path.display(),
                gu + 1,
                gv + 1
            )));
        }
        edges[gu].push((local[u - 1], local[v - 1]));
    }

    let graphs = edges
        .into_iter()
        .zip(&sizes)
        .map(|(e, &n)| Graph::from_edges(n, e))
        .collect();
    DatasetBundle::new(name, graphs, &raw_labels)
}

/// Writes a bundle in the layout read by [`load_tudataset`], using the
/// original class labels.
pub fn write_tudataset(bundle: &DatasetBundle, dir: impl AsRef<Path>) -> Result<()> {
    use std::io::Write;

    let dir = dir.as_ref();
    let create = |suffix: &str| -> Result<(PathBuf, std::io::BufWriter<File>)> {
        let path = dir.join(format!("{}_{suffix}.txt", bundle.name));
        let file = File::create(&path).map_err(|e| Error::io(&path, e))?;
        Ok((path, std::io::BufWriter::new(file)))
    };
    let (a_path, mut a) = create("A")?;
    let (ind_path, mut ind) = create("graph_indicator")?;
    let (lab_path, mut lab) = create("graph_labels")?;

    let mut offset = 0;
    for (gi, (g, &label)) in bundle.graphs.iter().zip(&bundle.labels).enumerate() {
        for _ in 0..g.node_count() {
            writeln!(ind, "{}", gi + 1).map_err(|e| Error::io(&ind_path, e))?;
        }
        for u in 0..g.node_count() {
            for &v in g.neighbors(u) {
                writeln!(a, "{}, {}", offset + u + 1, offset + v + 1)
                    .map_err(|e| Error::io(&a_path, e))?;
            }
        }
        writeln!(lab, "{}", bundle.class_labels[label]).map_err(|e| Error::io(&lab_path, e))?;
        offset += g.node_count();
    }
    for (path, mut w) in [(a_path, a), (ind_path, ind), (lab_path, lab)] {
        w.flush().map_err(|e| Error::io(&path, e))?;
    }
    Ok(())
}
