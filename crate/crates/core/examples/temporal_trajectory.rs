// Higher-order clustering trajectories over a growing temporal network.
//
// ```text
// cargo run --release --example temporal_trajectory [stream.txt [steps]]
// ```
//
// Each input line is `source target timestamp`.

use std::error::Error;
use std::fs::File;
use std::io::{BufReader, Cursor};

use cliquescope::temporal::{
    build_snapshots, hocc_trajectories, load_temporal_edge_list, TemporalEdgeList,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Edges that mostly stay inside one of a few communities.
fn synthetic_stream(records: usize) -> String {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut out = String::new();
    for t in 0..records {
        let u: u64 = rng.gen_range(0..120);
        let v = if rng.gen_bool(0.8) {
            (u / 20) * 20 + rng.gen_range(0..20)
        } else {
            rng.gen_range(0..120)
        };
        out.push_str(&format!("{u} {v} {t}\n"));
    }
    out
}

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let stream = load_temporal_edge_list(Cursor::new(synthetic_stream(1500)))?;
    trajectories(&stream, 30)
}

fn trajectories(stream: &TemporalEdgeList, steps: usize) -> Result<(), Box<dyn Error>> {
    let series = build_snapshots(stream, steps)?;
    let trajectories = hocc_trajectories(&series, 6)?;
    println!(
        "{} records, {} per snapshot",
        stream.len(),
        series.increment
    );
    for k in 3..=6 {
        let row = trajectories.row(k);
        println!(
            "mu_{k}: first {:.4}, middle {:.4}, last {:.4}",
            row[0],
            row[row.len() / 2],
            row[row.len() - 1]
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    let mut args = std::env::args().skip(1);
    let Some(path) = args.next() else {
        return run_example();
    };
    let stream = load_temporal_edge_list(BufReader::new(File::open(path)?))?;
    let steps = args.next().map(|s| s.parse()).transpose()?.unwrap_or(120);
    trajectories(&stream, steps)
}
