#![allow(dead_code)]

use std::io::Write;
use std::path::Path;

use cliquescope::generators;
use cliquescope::{write_tudataset, DatasetBundle, Graph};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// The 60-graph corpus: n ∈ {10,15,20,25} × p ∈ {0.2,0.5,0.8} × 5 seeds.
pub fn random_corpus() -> Vec<(String, Graph)> {
    let mut out = Vec::new();
    for n in [10, 15, 20, 25] {
        for p in [0.2, 0.5, 0.8] {
            for seed in 0..5u64 {
                let tag = format!("G({n},{p}) seed {seed}");
                out.push((
                    tag,
                    generators::gnp(n, p, 1000 * n as u64 + (p * 10.0) as u64 * 10 + seed),
                ));
            }
        }
    }
    out
}

/// A timestamped interaction stream with community structure, repeated
/// interactions and runs of equal timestamps.
pub fn write_temporal_stream(path: &Path, nodes: u64, records: usize, seed: u64) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let groups = 12;
    let mut f = std::io::BufWriter::new(std::fs::File::create(path).unwrap());
    writeln!(f, "# src dst timestamp").unwrap();
    let mut t: i64 = 1_000_000;
    for _ in 0..records {
        let u = rng.gen_range(0..nodes);
        let v = if rng.gen_bool(0.8) {
            let g = u % groups;
            let k = rng.gen_range(0..nodes / groups);
            (k * groups + g) % nodes
        } else {
            rng.gen_range(0..nodes)
        };
        if rng.gen_bool(0.7) {
            t += rng.gen_range(1..60);
        }
        writeln!(f, "{u} {v} {t}").unwrap();
    }
}

/// Two-class dataset: sparse random graphs versus graphs with planted
/// cliques, 20 of each.
pub fn write_toy_dataset(dir: &Path, name: &str) {
    let mut graphs = Vec::new();
    let mut labels = Vec::new();
    for i in 0..40u64 {
        let class = (i % 2) as i64;
        let base = generators::gnp(18, 0.25, 500 + i);
        let g = if class == 0 {
            base
        } else {
            let mut edges: Vec<(usize, usize)> = base.edges().collect();
            for u in 0..6 {
                for v in u + 1..6 {
                    edges.push((u, v));
                }
            }
            Graph::from_edges(18, edges)
        };
        graphs.push(g);
        labels.push(class);
    }
    let bundle = DatasetBundle::new(name, graphs, &labels).unwrap();
    write_tudataset(&bundle, dir).unwrap();
}

pub fn write_edge_list(path: &Path, g: &Graph) {
    let text: String = g.edges().map(|(u, v)| format!("{u} {v}\n")).collect();
    std::fs::write(path, text).unwrap();
}
