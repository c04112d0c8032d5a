//! Clique profiles and clustering coefficients.

use num_bigint::BigUint;
use num_traits::Zero;

use crate::clique::{CliqueCountVector, NodeCliqueCounts};
use crate::error::{Error, Result};
use crate::exact::to_f64;
use crate::graph::Graph;

/// Local, average and global clustering of a graph.
#[derive(Debug, Clone, PartialEq)]
pub struct ClusteringSummary {
    /// `c(v)`; zero when `deg(v) < 2`.
    pub local: Vec<f64>,
    /// `|E_v|`, the number of edges among the neighbors of `v`.
    pub neighborhood_edges: Vec<u64>,
    /// Mean of `c(v)` over all nodes; zero on the empty graph.
    pub acc: f64,
    /// `Σ|E_v| / Σ binom(deg(v), 2)`; zero when no path of length two exists.
    pub cc: f64,
}

/// Clustering coefficients computed from neighborhood intersections.
pub fn clustering_summary(g: &Graph) -> ClusteringSummary {
    let n = g.node_count();
    let mut local = Vec::with_capacity(n);
    let mut neighborhood_edges = Vec::with_capacity(n);
    let mut closed: u128 = 0;
    let mut wedges: u128 = 0;

    for v in 0..n {
        let nbrs = g.neighbors(v);
        let twice: usize = nbrs
            .iter()
            .map(|&u| sorted_intersection_len(nbrs, g.neighbors(u)))
            .sum();
        let ev = (twice / 2) as u64;
        let deg = nbrs.len() as u64;
        let pairs = deg * deg.saturating_sub(1) / 2;
        local.push(if pairs == 0 {
            0.0
        } else {
            ev as f64 / pairs as f64
        });
        neighborhood_edges.push(ev);
        closed += ev as u128;
        wedges += pairs as u128;
    }

    let acc = if n == 0 {
        0.0
    } else {
        local.iter().sum::<f64>() / n as f64
    };
    let cc = if wedges == 0 {
        0.0
    } else {
        closed as f64 / wedges as f64
    };
    ClusteringSummary {
        local,
        neighborhood_edges,
        acc,
        cc,
    }
}

fn sorted_intersection_len(a: &[usize], b: &[usize]) -> usize {
    let (mut i, mut j, mut hits) = (0, 0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                hits += 1;
                i += 1;
                j += 1;
            }
        }
    }
    hits
}

/// Normalized clique-count embedding of a graph, optionally extended with
/// the global clustering coefficient as a trailing component.
#[derive(Debug, Clone, PartialEq)]
pub struct ProfileVector {
    k: usize,
    components: Vec<f64>,
    extended: bool,
}

impl ProfileVector {
    pub fn k(&self) -> usize {
        self.k
    }

    pub fn is_extended(&self) -> bool {
        self.extended
    }

    /// All components, including the trailing clustering entry if extended.
    pub fn as_slice(&self) -> &[f64] {
        &self.components
    }

    pub fn into_vec(self) -> Vec<f64> {
        self.components
    }

    /// Components for `j = 3 ..= k`.
    pub fn clique_part(&self) -> &[f64] {
        &self.components[..self.k - 2]
    }

    /// 2-norm of [`clique_part`](Self::clique_part): 1 or 0.
    pub fn clique_norm(&self) -> f64 {
        self.clique_part().iter().map(|x| x * x).sum::<f64>().sqrt()
    }
}

/// `(C_3, …, C_k) / ‖(C_3, …, C_k)‖₂`, or the zero vector when the graph has
/// no triangle.
pub fn clique_profile(counts: &CliqueCountVector, k: usize) -> Result<ProfileVector> {
    if k < 3 || k > counts.kmax() {
        return Err(Error::Argument(format!(
            "profile order {k} must lie in 3..={}",
            counts.kmax()
        )));
    }
    let raw: Vec<f64> = (3..=k).map(|j| to_f64(counts.get(j))).collect();
    let largest = raw.iter().copied().fold(0.0, f64::max);
    let components = if largest == 0.0 {
        raw
    } else {
        let scaled: Vec<f64> = raw.iter().map(|x| x / largest).collect();
        let norm = scaled.iter().map(|x| x * x).sum::<f64>().sqrt();
        scaled.into_iter().map(|x| x / norm).collect()
    };
    Ok(ProfileVector {
        k,
        components,
        extended: false,
    })
}

/// Clique profile with `cc(G)` appended, without renormalizing.
pub fn extended_profile(
    counts: &CliqueCountVector,
    summary: &ClusteringSummary,
    k: usize,
) -> Result<ProfileVector> {
    let mut profile = clique_profile(counts, k)?;
    profile.components.push(summary.cc);
    profile.extended = true;
    Ok(profile)
}

/// k-clustering coefficients of every node and of the whole graph.
#[derive(Debug, Clone, PartialEq)]
pub struct HoccResult {
    pub k: usize,
    pub per_node: Vec<f64>,
    pub global: f64,
}

/// `μ_k(G; v) = (k−1)·C_k(G; v) / (C_{k−1}(G; v)·(deg(v) − k + 2))` and the
/// graph-level ratio of sums.
///
/// A node with `C_{k−1}(G; v) = 0` or `deg(v) < k − 1` gets 0, and so does
/// the graph when its denominator vanishes.
pub fn higher_order_cc(g: &Graph, node_counts: &NodeCliqueCounts, k: usize) -> Result<HoccResult> {
    if k < 2 || k > node_counts.kmax() {
        return Err(Error::Argument(format!(
            "clustering order {k} must lie in 2..={}",
            node_counts.kmax()
        )));
    }
    if node_counts.node_count() != g.node_count() {
        return Err(Error::Argument(format!(
            "per-node counts cover {} nodes but the graph has {}",
            node_counts.node_count(),
            g.node_count()
        )));
    }

    let mut numerator_sum = BigUint::zero();
    let mut denominator_sum = BigUint::zero();
    let per_node = (0..g.node_count())
        .map(|v| {
            let deg = g.degree(v);
            let lower = node_counts.get(v, k - 1);
            if deg + 2 <= k || lower.is_zero() {
                return 0.0;
            }
            let num = node_counts.get(v, k) * BigUint::from(k - 1);
            let den = lower * BigUint::from(deg + 2 - k);
            let mu = ratio(&num, &den);
            numerator_sum += num;
            denominator_sum += den;
            mu
        })
        .collect();

    let global = if denominator_sum.is_zero() {
        0.0
    } else {
        ratio(&numerator_sum, &denominator_sum)
    };
    Ok(HoccResult {
        k,
        per_node,
        global,
    })
}

/// `a / b` in floating point, keeping precision for values beyond `f64`.
fn ratio(a: &BigUint, b: &BigUint) -> f64 {
    let excess = a.bits().max(b.bits()).saturating_sub(1000);
    if excess == 0 {
        to_f64(a) / to_f64(b)
    } else {
        to_f64(&(a >> excess)) / to_f64(&(b >> excess))
    }
}
