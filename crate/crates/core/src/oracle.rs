//! Brute-force clique enumeration used as an independent test oracle.
//!
//! Lists every clique of order `<= kmax` explicitly through an adjacency
//! matrix. Shares nothing with the pivot engine beyond the `Graph` type.

use num_bigint::BigUint;

use crate::clique::{CliqueCountVector, NodeCliqueCounts};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest graph the oracle accepts.
pub const ORACLE_MAX_NODES: usize = 40;

/// Global and per-node counts by explicit enumeration.
pub fn brute_force_counts(g: &Graph, kmax: usize) -> Result<(CliqueCountVector, NodeCliqueCounts)> {
    let n = g.node_count();
    if n > ORACLE_MAX_NODES {
        return Err(Error::OracleRefused {
            n,
            limit: ORACLE_MAX_NODES,
        });
    }
    if kmax < 3 {
        return Err(Error::Argument(format!(
            "kmax must be at least 3, got {kmax}"
        )));
    }

    let mut matrix = vec![vec![false; n]; n];
    for (u, v) in g.edges() {
        matrix[u][v] = true;
        matrix[v][u] = true;
    }

    let mut totals = vec![0u64; kmax];
    let mut per_node = vec![0u64; n * kmax];
    let mut stack = Vec::with_capacity(kmax);
    for v in 0..n {
        stack.push(v);
        extend(&matrix, kmax, &mut stack, &mut totals, &mut per_node);
        stack.pop();
    }

    let global = CliqueCountVector::from_counts(totals.into_iter().map(BigUint::from).collect());
    let nodes =
        NodeCliqueCounts::from_rows(n, kmax, per_node.into_iter().map(BigUint::from).collect());
    Ok((global, nodes))
}

fn extend(
    matrix: &[Vec<bool>],
    kmax: usize,
    stack: &mut Vec<usize>,
    totals: &mut [u64],
    per_node: &mut [u64],
) {
    let size = stack.len();
    totals[size - 1] += 1;
    for &member in stack.iter() {
        per_node[member * kmax + size - 1] += 1;
    }
    if size == kmax {
        return;
    }
    let last = *stack.last().unwrap();
    for w in last + 1..matrix.len() {
        if stack.iter().all(|&u| matrix[u][w]) {
            stack.push(w);
            extend(matrix, kmax, stack, totals, per_node);
            stack.pop();
        }
    }
}
