// Clustering coefficients and their higher-order generalization.

use std::error::Error;

use cliquescope::metrics::{clustering_summary, higher_order_cc};
use cliquescope::{count_cliques_per_node, generators};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    for (name, g) in [
        ("paw", generators::paw()),
        ("petersen", generators::petersen()),
        ("gnp(60, 0.3)", generators::gnp(60, 0.3, 11)),
        ("K8", generators::complete(8)),
    ] {
        let s = clustering_summary(&g);
        println!("{name}: acc {:.4}, cc {:.4}", s.acc, s.cc);

        let counts = count_cliques_per_node(&g, 6)?;
        let mu: Vec<String> = (2..=6)
            .map(|k| higher_order_cc(&g, &counts, k).map(|h| format!("mu_{k} {:.4}", h.global)))
            .collect::<Result<_, _>>()?;
        println!("    {}", mu.join(", "));
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
