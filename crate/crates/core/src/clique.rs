//! Exact k-clique counting over a pivot-based succinct clique tree.
//!
//! Every node `v` is processed as the root of its own subproblem: the
//! candidates are the neighbors of `v` that come later in a degeneracy
//! order, so subproblems have at most `degeneracy` candidates. Inside a
//! subproblem the recursion picks a pivot `p` maximizing
//! `|N(p) ∩ candidates|` and branches only on `candidates \ N(p)`. The
//! branch on `p` itself marks `p` as a *pivot* vertex (optional member);
//! every other branch marks its vertex as *held* (mandatory member).
//!
//! A root-to-leaf path with `h` held and `q` pivot vertices encodes exactly
//! the cliques made of all held vertices plus any subset of the pivots, and
//! every clique is encoded by exactly one path. The path therefore adds
//! `binom(q, j - h)` to `C_j`, each held vertex takes that same amount toward
//! its per-node count, and each pivot vertex takes `binom(q - 1, j - h - 1)`.
//! No clique is ever listed.

use num_bigint::BigUint;
use num_traits::Zero;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::exact::{BinomialTable, ExactCounter};
use crate::graph::{degeneracy_order, Graph};

/// Exact global clique counts `C_1 ..= C_kmax`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliqueCountVector {
    kmax: usize,
    counts: Vec<BigUint>,
}

impl CliqueCountVector {
    /// Wraps explicit counts `C_1 ..= C_kmax` (`counts[j - 1]` is `C_j`).
    pub fn from_counts(counts: Vec<BigUint>) -> Self {
        CliqueCountVector {
            kmax: counts.len(),
            counts,
        }
    }

    pub fn kmax(&self) -> usize {
        self.kmax
    }

    /// `C_j`; zero for `j` outside `1..=kmax`.
    pub fn get(&self, j: usize) -> &BigUint {
        static ZERO: BigUint = BigUint::ZERO;
        if j == 0 || j > self.kmax {
            &ZERO
        } else {
            &self.counts[j - 1]
        }
    }

    /// Counts for `j = 1 ..= kmax`.
    pub fn as_slice(&self) -> &[BigUint] {
        &self.counts
    }

    /// Order of the largest clique that was seen, capped at `kmax`.
    pub fn clique_number_capped(&self) -> usize {
        self.counts.iter().take_while(|c| !c.is_zero()).count()
    }
}

/// Exact per-node counts `C_j(G; v)` for `j = 1 ..= kmax`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NodeCliqueCounts {
    n: usize,
    kmax: usize,
    counts: Vec<BigUint>,
}

impl NodeCliqueCounts {
    /// Wraps row-major counts: `counts[v * kmax + j - 1]` is `C_j(G; v)`.
    ///
    /// Panics if `counts.len() != n * kmax`.
    pub fn from_rows(n: usize, kmax: usize, counts: Vec<BigUint>) -> Self {
        assert_eq!(
            counts.len(),
            n * kmax,
            "per-node count table has wrong shape"
        );
        NodeCliqueCounts { n, kmax, counts }
    }

    pub fn node_count(&self) -> usize {
        self.n
    }

    pub fn kmax(&self) -> usize {
        self.kmax
    }

    /// `C_j(G; v)`; zero for `j` outside `1..=kmax`.
    pub fn get(&self, v: usize, j: usize) -> &BigUint {
        static ZERO: BigUint = BigUint::ZERO;
        if j == 0 || j > self.kmax {
            &ZERO
        } else {
            &self.counts[v * self.kmax + j - 1]
        }
    }

    /// Row of node `v`: `C_1(G; v) ..= C_kmax(G; v)`.
    pub fn node(&self, v: usize) -> &[BigUint] {
        &self.counts[v * self.kmax..(v + 1) * self.kmax]
    }

    /// `Σ_v C_j(G; v)`, which equals `j · C_j(G)`.
    pub fn column_sum(&self, j: usize) -> BigUint {
        (0..self.n).map(|v| self.get(v, j)).sum()
    }

    /// Global counts recovered from the per-node ones.
    pub fn totals(&self) -> CliqueCountVector {
        let counts = (1..=self.kmax)
            .map(|j| self.column_sum(j) / BigUint::from(j))
            .collect();
        CliqueCountVector::from_counts(counts)
    }
}

/// One root-to-leaf path of the succinct clique tree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliqueTreeLeaf {
    /// Held vertices; the first one is the subproblem root.
    pub held: Vec<usize>,
    pub pivots: Vec<usize>,
}

/// Configured clique counter.
#[derive(Debug, Clone, Copy)]
pub struct CliqueCounter {
    kmax: usize,
    parallel: bool,
}

impl CliqueCounter {
    /// Counter for cliques up to order `kmax` (at least 3). Runs over the
    /// current rayon pool unless switched to [`serial`](Self::serial).
    pub fn new(kmax: usize) -> Result<Self> {
        if kmax < 3 {
            return Err(Error::Argument(format!(
                "kmax must be at least 3, got {kmax}"
            )));
        }
        Ok(CliqueCounter {
            kmax,
            parallel: true,
        })
    }

    pub fn serial(mut self) -> Self {
        self.parallel = false;
        self
    }

    pub fn kmax(&self) -> usize {
        self.kmax
    }

    pub fn count(&self, g: &Graph) -> CliqueCountVector {
        let acc = self.run(g, false);
        CliqueCountVector::from_counts(acc.totals_values())
    }

    pub fn count_per_node(&self, g: &Graph) -> NodeCliqueCounts {
        self.count_all(g).1
    }

    /// Global and per-node counts from a single traversal.
    pub fn count_all(&self, g: &Graph) -> (CliqueCountVector, NodeCliqueCounts) {
        let acc = self.run(g, true);
        let totals = CliqueCountVector::from_counts(acc.totals_values());
        let nodes = NodeCliqueCounts {
            n: g.node_count(),
            kmax: self.kmax,
            counts: acc.nodes.iter().map(ExactCounter::value).collect(),
        };
        (totals, nodes)
    }

    /// All leaves of the clique tree, roots in ascending node id. Intended
    /// for inspection and testing on small graphs.
    pub fn clique_tree(&self, g: &Graph) -> Vec<CliqueTreeLeaf> {
        let ctx = Context::new(g, self.kmax);
        let mut sink = LeafCollector::default();
        let mut scratch = Scratch::new(g.node_count());
        for root in 0..g.node_count() {
            scratch.expand_root(&ctx, root, &mut sink);
        }
        sink.leaves
    }

    fn run(&self, g: &Graph, per_node: bool) -> Accumulator {
        let ctx = Context::new(g, self.kmax);
        let n = g.node_count();
        let fresh = || Accumulator::new(n, self.kmax, per_node);

        if !self.parallel || n < 64 {
            let mut acc = fresh();
            let mut scratch = Scratch::new(n);
            for root in 0..n {
                scratch.expand_root(&ctx, root, &mut acc);
            }
            return acc;
        }

        let chunk = n.div_ceil(rayon::current_num_threads() * 4).max(16);
        let roots: Vec<usize> = (0..n).collect();
        roots
            .par_chunks(chunk)
            .fold(
                || (fresh(), Scratch::new(n)),
                |(mut acc, mut scratch), block| {
                    for &root in block {
                        scratch.expand_root(&ctx, root, &mut acc);
                    }
                    (acc, scratch)
                },
            )
            .map(|(acc, _)| acc)
            .reduce(fresh, |mut a, b| {
                a.merge(&b);
                a
            })
    }
}

/// Global clique counts up to order `kmax`.
pub fn count_cliques(g: &Graph, kmax: usize) -> Result<CliqueCountVector> {
    Ok(CliqueCounter::new(kmax)?.count(g))
}

/// Per-node clique counts up to order `kmax`.
pub fn count_cliques_per_node(g: &Graph, kmax: usize) -> Result<NodeCliqueCounts> {
    Ok(CliqueCounter::new(kmax)?.count_per_node(g))
}

struct Context<'g> {
    graph: &'g Graph,
    kmax: usize,
    position: Vec<usize>,
    binom: BinomialTable,
}

impl<'g> Context<'g> {
    fn new(graph: &'g Graph, kmax: usize) -> Self {
        let order = degeneracy_order(graph);
        let position = order.positions();
        let max_pivots = order.degeneracy() + 1;
        Context {
            graph,
            kmax,
            position,
            binom: BinomialTable::new(max_pivots, kmax),
        }
    }
}

trait LeafSink {
    fn leaf(&mut self, ctx: &Context<'_>, held: &[usize], pivots: &[usize]);
}

struct Accumulator {
    kmax: usize,
    totals: Vec<ExactCounter>,
    nodes: Vec<ExactCounter>,
}

impl Accumulator {
    fn new(n: usize, kmax: usize, per_node: bool) -> Self {
        Accumulator {
            kmax,
            totals: vec![ExactCounter::default(); kmax],
            nodes: if per_node {
                vec![ExactCounter::default(); n * kmax]
            } else {
                Vec::new()
            },
        }
    }

    fn merge(&mut self, other: &Accumulator) {
        for (a, b) in self.totals.iter_mut().zip(&other.totals) {
            a.merge(b);
        }
        for (a, b) in self.nodes.iter_mut().zip(&other.nodes) {
            if !b.is_zero() {
                a.merge(b);
            }
        }
    }

    fn totals_values(&self) -> Vec<BigUint> {
        self.totals.iter().map(ExactCounter::value).collect()
    }
}

impl LeafSink for Accumulator {
    fn leaf(&mut self, ctx: &Context<'_>, held: &[usize], pivots: &[usize]) {
        let h = held.len();
        let q = pivots.len();
        let top = self.kmax.min(h + q);
        for j in h..=top {
            let ways = ctx.binom.get(q, (j - h) as isize);
            self.totals[j - 1].add_binom(ways);
        }
        if self.nodes.is_empty() {
            return;
        }
        let kmax = self.kmax;
        for &v in held {
            let row = &mut self.nodes[v * kmax..(v + 1) * kmax];
            for j in h..=top {
                row[j - 1].add_binom(ctx.binom.get(q, (j - h) as isize));
            }
        }
        if q > 0 {
            for &v in pivots {
                let row = &mut self.nodes[v * kmax..(v + 1) * kmax];
                for j in h + 1..=top {
                    row[j - 1].add_binom(ctx.binom.get(q - 1, (j - h - 1) as isize));
                }
            }
        }
    }
}

#[derive(Default)]
struct LeafCollector {
    leaves: Vec<CliqueTreeLeaf>,
}

impl LeafSink for LeafCollector {
    fn leaf(&mut self, _ctx: &Context<'_>, held: &[usize], pivots: &[usize]) {
        self.leaves.push(CliqueTreeLeaf {
            held: held.to_vec(),
            pivots: pivots.to_vec(),
        });
    }
}

const UNMAPPED: usize = usize::MAX;

/// Per-worker buffers for one root subproblem at a time.
struct Scratch {
    local_of: Vec<usize>,
    members: Vec<usize>,
    words: usize,
    adjacency: Vec<u64>,
    held: Vec<usize>,
    pivots: Vec<usize>,
}

impl Scratch {
    fn new(n: usize) -> Self {
        Scratch {
            local_of: vec![UNMAPPED; n],
            members: Vec::new(),
            words: 0,
            adjacency: Vec::new(),
            held: Vec::new(),
            pivots: Vec::new(),
        }
    }

    fn expand_root<S: LeafSink>(&mut self, ctx: &Context<'_>, root: usize, sink: &mut S) {
        let g = ctx.graph;
        let rank = ctx.position[root];
        self.members.clear();
        self.members.extend(
            g.neighbors(root)
                .iter()
                .copied()
                .filter(|&u| ctx.position[u] > rank),
        );
        self.held.clear();
        self.pivots.clear();
        self.held.push(root);

        // no recursion needed for out-degree 0 or 1
        if self.members.len() <= 1 {
            self.pivots.extend_from_slice(&self.members);
            sink.leaf(ctx, &self.held, &self.pivots);
            return;
        }

        let d = self.members.len();
        self.words = d.div_ceil(64);
        self.adjacency.clear();
        self.adjacency.resize(d * self.words, 0);
        for (i, &u) in self.members.iter().enumerate() {
            self.local_of[u] = i;
        }
        for i in 0..d {
            let u = self.members[i];
            for &w in g.neighbors(u) {
                let j = self.local_of[w];
                if j != UNMAPPED {
                    self.adjacency[i * self.words + j / 64] |= 1 << (j % 64);
                }
            }
        }
        for &u in &self.members {
            self.local_of[u] = UNMAPPED;
        }

        let mut all = vec![0u64; self.words];
        for i in 0..d {
            all[i / 64] |= 1 << (i % 64);
        }
        self.expand(ctx, &all, sink);
    }

    #[inline]
    fn row(&self, i: usize) -> &[u64] {
        &self.adjacency[i * self.words..(i + 1) * self.words]
    }

    fn expand<S: LeafSink>(&mut self, ctx: &Context<'_>, cand: &[u64], sink: &mut S) {
        if self.held.len() > ctx.kmax {
            return;
        }
        if cand.iter().all(|&w| w == 0) {
            sink.leaf(ctx, &self.held, &self.pivots);
            return;
        }

        // strict comparison over ascending ids keeps the smallest id on ties
        let mut pivot = 0;
        let mut best = None;
        for u in bits(cand) {
            let covered: u32 = self
                .row(u)
                .iter()
                .zip(cand)
                .map(|(a, b)| (a & b).count_ones())
                .sum();
            if best.is_none_or(|b| covered > b) {
                best = Some(covered);
                pivot = u;
            }
        }

        let branches: Vec<usize> = {
            let prow = self.row(pivot);
            let outside: Vec<u64> = cand.iter().zip(prow).map(|(c, p)| c & !p).collect();
            bits(&outside).collect()
        };
        let mut remaining = cand.to_vec();
        let mut next = vec![0u64; self.words];
        for u in branches {
            for ((dst, r), a) in next.iter_mut().zip(&remaining).zip(self.row(u)) {
                *dst = r & a;
            }
            let vertex = self.members[u];
            if u == pivot {
                self.pivots.push(vertex);
                self.expand(ctx, &next, sink);
                self.pivots.pop();
            } else {
                self.held.push(vertex);
                self.expand(ctx, &next, sink);
                self.held.pop();
            }
            remaining[u / 64] &= !(1 << (u % 64));
        }
    }
}

fn bits(words: &[u64]) -> impl Iterator<Item = usize> + '_ {
    words.iter().enumerate().flat_map(|(wi, &w)| {
        let mut rest = w;
        std::iter::from_fn(move || {
            if rest == 0 {
                return None;
            }
            let b = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            Some(wi * 64 + b)
        })
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators;

    fn small(counts: &CliqueCountVector) -> Vec<u64> {
        counts
            .as_slice()
            .iter()
            .map(|c| u64::try_from(c).unwrap())
            .collect()
    }

    #[test]
    fn complete_graph_counts_are_binomials() {
        let c = count_cliques(&generators::complete(5), 6).unwrap();
        assert_eq!(small(&c), vec![5, 10, 10, 5, 1, 0]);
    }

    #[test]
    fn cycle_is_triangle_free() {
        let c = count_cliques(&generators::cycle(5), 4).unwrap();
        assert_eq!(small(&c), vec![5, 5, 0, 0]);
    }

    #[test]
    fn kmax_below_three_is_rejected() {
        assert!(matches!(
            count_cliques(&generators::complete(3), 2),
            Err(Error::Argument(_))
        ));
    }

    #[test]
    fn per_node_on_k4_and_paw() {
        let k4 = count_cliques_per_node(&generators::complete(4), 4).unwrap();
        for v in 0..4 {
            assert_eq!(k4.get(v, 3), &BigUint::from(3u32));
            assert_eq!(k4.get(v, 4), &BigUint::from(1u32));
        }
        let paw = count_cliques_per_node(&generators::paw(), 3).unwrap();
        let tri: Vec<u64> = (0..4)
            .map(|v| u64::try_from(paw.get(v, 3)).unwrap())
            .collect();
        assert_eq!(tri, vec![1, 1, 1, 0]);
        let deg: Vec<u64> = (0..4)
            .map(|v| u64::try_from(paw.get(v, 2)).unwrap())
            .collect();
        assert_eq!(deg, vec![3, 2, 2, 1]);
    }

    #[test]
    fn isolated_nodes_still_count_as_one_cliques() {
        let g = Graph::from_edges(5, [(0, 1)]);
        let (c, nodes) = CliqueCounter::new(3).unwrap().count_all(&g);
        assert_eq!(small(&c), vec![5, 1, 0]);
        assert_eq!(nodes.get(4, 1), &BigUint::from(1u32));
        assert!(nodes.get(4, 2).is_zero());
    }

    #[test]
    fn serial_and_parallel_agree() {
        let g = generators::gnp(300, 0.1, 3);
        let par = CliqueCounter::new(6).unwrap().count_all(&g);
        let ser = CliqueCounter::new(6).unwrap().serial().count_all(&g);
        assert_eq!(par, ser);
    }

    #[test]
    fn dense_counts_escalate_past_u128() {
        // C_30(K_300) = binom(300, 30) does not fit in 128 bits
        let g = generators::complete(300);
        let c = CliqueCounter::new(30).unwrap().count(&g);
        let mut expect = BigUint::from(1u32);
        for i in 0..30u32 {
            expect *= 300 - i;
            expect /= i + 1;
        }
        assert!(expect > BigUint::from(u128::MAX));
        assert_eq!(c.get(30), &expect);
    }

    #[test]
    fn clique_tree_is_deterministic_and_exact_cover() {
        let g = generators::gnp(14, 0.6, 9);
        let counter = CliqueCounter::new(14).unwrap();
        let tree = counter.clique_tree(&g);
        assert_eq!(tree, counter.clique_tree(&g));

        // expand every leaf into its cliques; each clique must appear once
        let mut seen = std::collections::HashSet::new();
        for leaf in &tree {
            let q = leaf.pivots.len();
            for mask in 0u32..(1 << q) {
                let mut clique = leaf.held.clone();
                clique.extend(
                    (0..q)
                        .filter(|b| mask >> b & 1 == 1)
                        .map(|b| leaf.pivots[b]),
                );
                clique.sort_unstable();
                for (i, &a) in clique.iter().enumerate() {
                    for &b in &clique[i + 1..] {
                        assert!(g.has_edge(a, b));
                    }
                }
                assert!(seen.insert(clique), "clique encoded twice");
            }
        }
        let total: usize = seen.len();
        let c = counter.count(&g);
        let expect: u64 = c.as_slice().iter().map(|x| u64::try_from(x).unwrap()).sum();
        assert_eq!(total as u64, expect);
    }
}
