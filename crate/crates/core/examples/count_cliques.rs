// Exact clique counts of a graph, globally and per node.
//
// ```text
// cargo run --release --example count_cliques [edge_list.txt]
// ```

use std::error::Error;
use std::fs::File;
use std::io::BufReader;

use cliquescope::{
    brute_force_counts, count_cliques, degeneracy_order, generators, load_edge_list, CliqueCounter,
    EdgeListOptions, Graph,
};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    report(&generators::gnp(30, 0.4, 7))
}

fn report(g: &Graph) -> Result<(), Box<dyn Error>> {
    let order = degeneracy_order(g);
    println!(
        "{} nodes, {} edges, degeneracy {}",
        g.node_count(),
        g.edge_count(),
        order.degeneracy()
    );

    let counts = count_cliques(g, 10)?;
    for j in 1..=counts.kmax() {
        println!("C_{j} = {}", counts.get(j));
    }
    println!(
        "largest clique (capped at 10): {}",
        counts.clique_number_capped()
    );

    let per_node = CliqueCounter::new(4)?.count_per_node(g);
    let busiest = (0..g.node_count()).max_by_key(|&v| per_node.get(v, 4).clone());
    if let Some(v) = busiest {
        println!("node {v} sits in {} 4-cliques", per_node.get(v, 4));
    }

    // small graphs can be cross-checked by plain enumeration
    if g.node_count() <= 40 {
        let (brute, _) = brute_force_counts(g, 10)?;
        assert_eq!(brute, counts);
        println!("matches brute-force enumeration");
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    match std::env::args().nth(1) {
        Some(path) => {
            let reader = BufReader::new(File::open(path)?);
            report(&load_edge_list(reader, EdgeListOptions::default())?)
        }
        None => run_example(),
    }
}
