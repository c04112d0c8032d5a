// Scale-free clique profiles `C_k` and their clustering-extended form `D_k`.

use std::error::Error;

use cliquescope::metrics::{clique_profile, clustering_summary, extended_profile};
use cliquescope::{count_cliques, generators};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let g = generators::gnp(40, 0.45, 3);
    let counts = count_cliques(&g, 6)?;
    let summary = clustering_summary(&g);
    for k in 3..=6 {
        let c = clique_profile(&counts, k)?;
        let d = extended_profile(&counts, &summary, k)?;
        println!("C_{k} = {:.4?}", c.as_slice());
        println!("D_{k} = {:.4?}", d.as_slice());
    }

    // triangle-free graphs map to the zero profile
    let c = clique_profile(&count_cliques(&generators::cycle(9), 4)?, 4)?;
    println!("C_4 of a 9-cycle = {:?}", c.as_slice());
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
