//! Simple undirected graphs, edge-list ingestion and degeneracy ordering.

use std::collections::HashMap;
use std::io::BufRead;

use crate::error::{Error, Result};

/// Immutable simple undirected graph in compressed sparse row form.
///
/// Neighbor lists are strictly ascending, symmetric and loop-free.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    offsets: Vec<usize>,
    targets: Vec<usize>,
}

impl Graph {
    /// Graph with `n` nodes and no edges.
    pub fn empty(n: usize) -> Self {
        Graph {
            offsets: vec![0; n + 1],
            targets: Vec::new(),
        }
    }

    /// Builds a simple graph on nodes `0..n`. Self-loops are dropped,
    /// repeated and reversed pairs collapse into a single edge.
    ///
    /// Panics if an endpoint is `>= n`.
    pub fn from_edges<I>(n: usize, edges: I) -> Self
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut pairs: Vec<(usize, usize)> = Vec::new();
        for (u, v) in edges {
            assert!(u < n && v < n, "edge ({u}, {v}) out of range for {n} nodes");
            if u != v {
                pairs.push((u, v));
                pairs.push((v, u));
            }
        }
        pairs.sort_unstable();
        pairs.dedup();

        let mut offsets = vec![0usize; n + 1];
        for &(u, _) in &pairs {
            offsets[u + 1] += 1;
        }
        for i in 0..n {
            offsets[i + 1] += offsets[i];
        }
        let targets = pairs.into_iter().map(|(_, v)| v).collect();
        Graph { offsets, targets }
    }

    pub fn node_count(&self) -> usize {
        self.offsets.len() - 1
    }

    pub fn edge_count(&self) -> usize {
        self.targets.len() / 2
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.targets[self.offsets[v]..self.offsets[v + 1]]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.offsets[v + 1] - self.offsets[v]
    }

    pub fn max_degree(&self) -> usize {
        (0..self.node_count())
            .map(|v| self.degree(v))
            .max()
            .unwrap_or(0)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.neighbors(u).binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` pairs with `u < v`, in ascending order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.node_count()).flat_map(move |u| {
            self.neighbors(u)
                .iter()
                .copied()
                .filter(move |&v| u < v)
                .map(move |v| (u, v))
        })
    }

    /// Checks the structural invariants: sorted, loop-free, symmetric lists.
    pub fn validate(&self) -> bool {
        (0..self.node_count()).all(|v| {
            let nbrs = self.neighbors(v);
            nbrs.windows(2).all(|w| w[0] < w[1])
                && nbrs
                    .iter()
                    .all(|&u| u != v && u < self.node_count() && self.has_edge(u, v))
        })
    }
}

/// How raw edge-list lines are turned into a simple graph.
#[derive(Debug, Clone, Copy)]
pub struct EdgeListOptions {
    /// Treat every line as an undirected edge. When false the input is read
    /// as directed and only reciprocated pairs become edges.
    pub symmetrize: bool,
    /// Silently drop `u u` lines. When false a self-loop is a parse error.
    pub drop_self_loops: bool,
}

impl Default for EdgeListOptions {
    fn default() -> Self {
        EdgeListOptions {
            symmetrize: true,
            drop_self_loops: true,
        }
    }
}

/// Reads a whitespace-separated edge list. See [`load_edge_list_with_ids`].
pub fn load_edge_list<R: BufRead>(reader: R, options: EdgeListOptions) -> Result<Graph> {
    load_edge_list_with_ids(reader, options).map(|(g, _)| g)
}

/// Reads an edge list and also returns the original id of every node.
///
/// Node ids are compacted to `0..n` in first-seen order. Lines starting with
/// `#` and blank lines are skipped; tokens after the first two are ignored.
pub fn load_edge_list_with_ids<R: BufRead>(
    reader: R,
    options: EdgeListOptions,
) -> Result<(Graph, Vec<i64>)> {
    let mut ids: HashMap<i64, usize> = HashMap::new();
    let mut original: Vec<i64> = Vec::new();
    let mut arcs: Vec<(usize, usize)> = Vec::new();

    for (idx, line) in reader.lines().enumerate() {
        let lineno = idx + 1;
        let line = line.map_err(|e| Error::Parse {
            line: lineno,
            message: e.to_string(),
        })?;
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let mut tokens = trimmed.split_whitespace();
        let mut endpoint = || -> Result<i64> {
            let tok = tokens.next().ok_or_else(|| Error::Parse {
                line: lineno,
                message: "expected two node ids".into(),
            })?;
            tok.parse::<i64>().map_err(|_| Error::Parse {
                line: lineno,
                message: format!("invalid node id {tok:?}"),
            })
        };
        let (a, b) = (endpoint()?, endpoint()?);
        let mut intern = |raw: i64| {
            *ids.entry(raw).or_insert_with(|| {
                original.push(raw);
                original.len() - 1
            })
        };
        let (u, v) = (intern(a), intern(b));
        if u == v && !options.drop_self_loops {
            return Err(Error::Parse {
                line: lineno,
                message: format!("self-loop on node {a}"),
            });
        }
        arcs.push((u, v));
    }

    let n = original.len();
    let graph = if options.symmetrize {
        Graph::from_edges(n, arcs)
    } else {
        let mut directed = arcs.clone();
        directed.sort_unstable();
        directed.dedup();
        let mutual = arcs
            .into_iter()
            .filter(|&(u, v)| u < v && directed.binary_search(&(v, u)).is_ok());
        Graph::from_edges(n, mutual)
    };
    Ok((graph, original))
}

/// Removal order of min-degree peeling together with core numbers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegeneracyOrder {
    pub order: Vec<usize>,
    pub coreness: Vec<usize>,
}

impl DegeneracyOrder {
    /// Largest core number, i.e. the degeneracy of the graph.
    pub fn degeneracy(&self) -> usize {
        self.coreness.iter().copied().max().unwrap_or(0)
    }

    /// `position[v]` is the index of `v` in `order`.
    pub fn positions(&self) -> Vec<usize> {
        let mut pos = vec![0; self.order.len()];
        for (i, &v) in self.order.iter().enumerate() {
            pos[v] = i;
        }
        pos
    }
}

/// Degeneracy ordering by bucketed min-degree peeling in O(n + m).
///
/// Buckets are seeded in ascending node id, so among nodes of equal initial
/// degree the smallest id is removed first; the whole procedure is
/// deterministic.
pub fn degeneracy_order(g: &Graph) -> DegeneracyOrder {
    let n = g.node_count();
    let mut degree: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let max_deg = degree.iter().copied().max().unwrap_or(0);

    // bucket start offsets, then counting sort by degree (stable in id)
    let mut bin = vec![0usize; max_deg + 2];
    for &d in &degree {
        bin[d + 1] += 1;
    }
    for d in 0..=max_deg {
        bin[d + 1] += bin[d];
    }
    let mut vert = vec![0usize; n];
    let mut pos = vec![0usize; n];
    {
        let mut next = bin.clone();
        for v in 0..n {
            let d = degree[v];
            pos[v] = next[d];
            vert[pos[v]] = v;
            next[d] += 1;
        }
    }

    for i in 0..n {
        let v = vert[i];
        for &u in g.neighbors(v) {
            if degree[u] > degree[v] {
                let du = degree[u];
                let pu = pos[u];
                let pw = bin[du];
                let w = vert[pw];
                if u != w {
                    vert.swap(pu, pw);
                    pos[u] = pw;
                    pos[w] = pu;
                }
                bin[du] += 1;
                degree[u] -= 1;
            }
        }
    }

    DegeneracyOrder {
        order: vert,
        coreness: degree,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators;

    fn parse(text: &str) -> Result<Graph> {
        load_edge_list(text.as_bytes(), EdgeListOptions::default())
    }

    #[test]
    fn dedupes_and_drops_loops() {
        let g = parse("0 1\n1 0\n1 1\n").unwrap();
        assert_eq!(g.node_count(), 2);
        assert_eq!(g.edge_count(), 1);
        assert!(g.validate());
    }

    #[test]
    fn path_from_two_lines() {
        let g = parse("0 1\n1 2\n").unwrap();
        assert_eq!((g.node_count(), g.edge_count()), (3, 2));
        assert_eq!(g.neighbors(1), &[0, 2]);
    }

    #[test]
    fn comments_extra_tokens_and_first_seen_ids() {
        let (g, ids) = load_edge_list_with_ids(
            "# header\n\n10 5 999\n5 7 x\n".as_bytes(),
            EdgeListOptions::default(),
        )
        .unwrap();
        assert_eq!(ids, vec![10, 5, 7]);
        assert!(g.has_edge(0, 1) && g.has_edge(1, 2) && !g.has_edge(0, 2));
    }

    #[test]
    fn empty_input_is_empty_graph() {
        let g = parse("").unwrap();
        assert_eq!(g.node_count(), 0);
        assert_eq!(g.edge_count(), 0);
    }

    #[test]
    fn malformed_line_reports_line_number() {
        match parse("0 1\n# ok\n2\n") {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 3),
            other => panic!("unexpected {other:?}"),
        }
        match parse("0 1\nx 2\n") {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 2),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn self_loop_rejected_when_not_dropping() {
        let opts = EdgeListOptions {
            symmetrize: true,
            drop_self_loops: false,
        };
        assert!(matches!(
            load_edge_list("0 1\n2 2\n".as_bytes(), opts),
            Err(Error::Parse { line: 2, .. })
        ));
    }

    #[test]
    fn directed_votes_collapse_to_one_edge_per_pair() {
        // co-voting style input: a voted for b and b for a, c voted for a twice
        let text = "1 2\n2 1\n3 1\n3 1\n";
        let g = parse(text).unwrap();
        assert_eq!(g.edge_count(), 2);

        let mutual = load_edge_list(
            text.as_bytes(),
            EdgeListOptions {
                symmetrize: false,
                drop_self_loops: true,
            },
        )
        .unwrap();
        assert_eq!(mutual.edge_count(), 1);
        assert!(mutual.has_edge(0, 1));
    }

    #[test]
    fn degeneracy_of_complete_and_star() {
        let k4 = degeneracy_order(&generators::complete(4));
        assert_eq!(k4.coreness, vec![3; 4]);
        let star = degeneracy_order(&generators::star(5));
        assert_eq!(star.coreness, vec![1; 6]);
        assert_eq!(star.degeneracy(), 1);
    }

    #[test]
    fn degeneracy_order_is_permutation_with_bounded_out_degree() {
        let g = generators::gnp(40, 0.3, 11);
        let d = degeneracy_order(&g);
        let mut sorted = d.order.clone();
        sorted.sort_unstable();
        assert_eq!(sorted, (0..40).collect::<Vec<_>>());
        let pos = d.positions();
        for v in 0..40 {
            let later = g.neighbors(v).iter().filter(|&&u| pos[u] > pos[v]).count();
            assert!(later <= d.degeneracy());
        }
    }

    /// k-core peeling straight from the definition: repeatedly delete nodes
    /// of degree < k; a node's core number is the largest k it survives.
    fn coreness_by_definition(g: &Graph) -> Vec<usize> {
        let n = g.node_count();
        let mut core = vec![0; n];
        for k in 1..=n {
            let mut alive = vec![true; n];
            loop {
                let doomed: Vec<usize> = (0..n)
                    .filter(|&v| {
                        alive[v] && g.neighbors(v).iter().filter(|&&u| alive[u]).count() < k
                    })
                    .collect();
                if doomed.is_empty() {
                    break;
                }
                for v in doomed {
                    alive[v] = false;
                }
            }
            for v in 0..n {
                if alive[v] {
                    core[v] = k;
                }
            }
        }
        core
    }

    #[test]
    fn coreness_matches_peeling_definition() {
        for seed in 0..5 {
            let g = generators::gnp(15, 0.4, seed);
            assert_eq!(degeneracy_order(&g).coreness, coreness_by_definition(&g));
        }
    }

    #[test]
    fn every_subgraph_has_a_node_of_degree_at_most_degeneracy() {
        for seed in 0..3 {
            let g = generators::gnp(12, 0.5, 100 + seed);
            let d = degeneracy_order(&g).degeneracy();
            for mask in 1u32..(1 << 12) {
                let min_deg = (0..12)
                    .filter(|v| mask >> v & 1 == 1)
                    .map(|v| {
                        g.neighbors(v)
                            .iter()
                            .filter(|&&u| mask >> u & 1 == 1)
                            .count()
                    })
                    .min()
                    .unwrap();
                assert!(min_deg <= d);
            }
        }
    }
}
