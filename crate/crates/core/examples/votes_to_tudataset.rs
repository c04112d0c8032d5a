// Packs a directory of per-class edge lists into the TUDataset layout.
//
// ```text
// cargo run --release --example votes_to_tudataset -- raw/ data/SURVIVOR_BB SURVIVOR_BB
// ```
//
// `raw/` holds one subdirectory per integer class label, each containing
// one edge list per graph. Directed votes are symmetrized.

use std::error::Error;
use std::fs::{self, File};
use std::io::BufReader;
use std::path::Path;

use cliquescope::{
    load_edge_list, load_tudataset, write_tudataset, DatasetBundle, EdgeListOptions,
};

pub fn convert(raw: &Path, out: &Path, name: &str) -> Result<DatasetBundle, Box<dyn Error>> {
    let mut graphs = Vec::new();
    let mut labels = Vec::new();
    let mut classes: Vec<_> = fs::read_dir(raw)?.collect::<Result<_, _>>()?;
    classes.sort_by_key(|e| e.file_name());
    for class in classes.iter().filter(|e| e.path().is_dir()) {
        let label: i64 = class.file_name().to_string_lossy().parse()?;
        let mut files: Vec<_> = fs::read_dir(class.path())?.collect::<Result<_, _>>()?;
        files.sort_by_key(|e| e.file_name());
        for file in files {
            let reader = BufReader::new(File::open(file.path())?);
            graphs.push(load_edge_list(reader, EdgeListOptions::default())?);
            labels.push(label);
        }
    }
    fs::create_dir_all(out)?;
    let bundle = DatasetBundle::new(name, graphs, &labels)?;
    write_tudataset(&bundle, out)?;
    Ok(bundle)
}

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let scratch = tempfile::tempdir()?;
    let raw = scratch.path().join("raw");
    for (label, season, votes) in [
        (0, "s01", "1 2\n2 1\n3 1\n"),
        (0, "s02", "1 2\n2 3\n"),
        (1, "s03", "1 2\n2 3\n3 1\n4 1\n"),
    ] {
        fs::create_dir_all(raw.join(label.to_string()))?;
        fs::write(raw.join(label.to_string()).join(season), votes)?;
    }
    let out = scratch.path().join("VOTES");
    convert(&raw, &out, "VOTES")?;
    let back = load_tudataset(&out, "VOTES")?;
    for (g, l) in back.graphs.iter().zip(&back.labels) {
        println!(
            "class {l}: {} nodes, {} edges",
            g.node_count(),
            g.edge_count()
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    match args.as_slice() {
        [] => run_example(),
        [raw, out, name] => {
            let bundle = convert(Path::new(raw), Path::new(out), name)?;
            println!("wrote {} graphs to {out}", bundle.len());
            Ok(())
        }
        _ => Err("usage: votes_to_tudataset RAW_DIR OUT_DIR NAME".into()),
    }
}
