// Repeated 10-fold cross-validation on a TUDataset directory.
//
// ```text
// cargo run --release --example tudataset_classify -- data/IMDB-BINARY IMDB-BINARY C_5
// ```
//
// Without arguments a small dataset is written to a temporary directory
// and classified instead.

use std::error::Error;
use std::path::Path;

use cliquescope::learn::{cross_validate, CvConfig, FeatureCache, FeatureKind};
use cliquescope::{generators, load_tudataset, write_tudataset, DatasetBundle, Graph};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let scratch = tempfile::tempdir()?;
    demo_dataset(scratch.path())?;
    classify(
        scratch.path(),
        "DEMO",
        &[FeatureKind::Profile(5), FeatureKind::AverageClustering],
    )
}

fn classify(dir: &Path, name: &str, kinds: &[FeatureKind]) -> Result<(), Box<dyn Error>> {
    let bundle = load_tudataset(dir, name)?;
    println!(
        "{name}: {} graphs, class sizes {:?}",
        bundle.len(),
        bundle.class_sizes()
    );
    let kmax = kinds
        .iter()
        .filter_map(FeatureKind::order)
        .max()
        .unwrap_or(3)
        .max(3);
    let cache = FeatureCache::build(&bundle, kmax)?;
    for &kind in kinds {
        let report = cross_validate(&cache.matrix(kind)?, &CvConfig::default())?;
        println!("{kind}: {} (C={})", report.summary(), report.chosen_c);
    }
    Ok(())
}

/// Sparse graphs against denser ones, 30 of each.
fn demo_dataset(dir: &Path) -> Result<(), Box<dyn Error>> {
    let (graphs, labels): (Vec<Graph>, Vec<i64>) = (0..60)
        .map(|i| {
            let p = if i % 2 == 0 { 0.2 } else { 0.35 };
            (generators::gnp(16, p, i), if i % 2 == 0 { -1 } else { 1 })
        })
        .unzip();
    write_tudataset(&DatasetBundle::new("DEMO", graphs, &labels)?, dir)?;
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    match args.as_slice() {
        [] => run_example(),
        [dir, name] => classify(Path::new(dir), name, &[FeatureKind::Profile(4)]),
        [dir, name, specs @ ..] => {
            let kinds = specs
                .iter()
                .map(|s| s.parse())
                .collect::<Result<Vec<_>, _>>()?;
            classify(Path::new(dir), name, &kinds)
        }
        _ => Err("usage: tudataset_classify DIR NAME [FEATURE...]".into()),
    }
}
