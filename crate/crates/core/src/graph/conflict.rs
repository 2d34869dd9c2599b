use super::{EdgeId, Graph};
use crate::error::{Error, Result};

/// The square of the line graph: one node per edge, two nodes adjacent iff
/// the edges share an endpoint or are joined by a third edge.
///
/// Rows are fixed-width bit sets. Node `i` corresponds to the `i`-th live
/// edge of the source graph in id order; for a graph without tombstones that
/// is simply `EdgeId(i)`.
#[derive(Clone, Debug)]
pub struct ConflictGraph {
    node_count: usize,
    words: usize,
    rows: Vec<u64>,
    degrees: Vec<usize>,
    edges: Vec<EdgeId>,
    endpoints: Vec<(usize, usize)>,
    // per source vertex: nodes of its incident edges
    stars: Vec<Vec<usize>>,
}

fn words_for(n: usize) -> usize {
    n.div_ceil(64)
}

impl ConflictGraph {
    fn empty(node_count: usize) -> Self {
        let words = words_for(node_count);
        ConflictGraph {
            node_count,
            words,
            rows: vec![0; node_count * words],
            degrees: vec![0; node_count],
            edges: Vec::new(),
            endpoints: Vec::new(),
            stars: Vec::new(),
        }
    }

    pub(crate) fn from_graph(graph: &Graph) -> Self {
        let live: Vec<(EdgeId, (usize, usize))> = graph.edges().collect();
        let mut node_of = vec![usize::MAX; graph.edge_slots()];
        for (node, &(id, _)) in live.iter().enumerate() {
            node_of[id.0] = node;
        }
        let mut cg = ConflictGraph::empty(live.len());
        cg.edges = live.iter().map(|&(id, _)| id).collect();
        cg.endpoints = live.iter().map(|&(_, uv)| uv).collect();
        cg.stars = (0..graph.vertex_count())
            .map(|v| {
                graph
                    .incident(v)
                    .iter()
                    .map(|&(_, id)| node_of[id.0])
                    .collect()
            })
            .collect();

        for (node, &(_, (u, v))) in live.iter().enumerate() {
            // edges within distance 1 are exactly the edges incident to the
            // closed neighborhoods of u and v
            for &end in &[u, v] {
                for &(w, _) in graph.incident(end) {
                    for &(_, id) in graph.incident(w) {
                        let other = node_of[id.0];
                        if other != node {
                            cg.set(node, other);
                        }
                    }
                }
            }
        }
        cg.refresh_degrees();
        cg
    }

    /// Builds an abstract conflict graph directly from node pairs.
    ///
    /// Such a graph carries no source-edge structure, so closed edge
    /// neighborhoods are unavailable for clique seeding.
    pub fn from_pairs(node_count: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        let mut cg = ConflictGraph::empty(node_count);
        for &(a, b) in pairs {
            if a >= node_count || b >= node_count {
                return Err(Error::VertexOutOfRange {
                    vertex: a.max(b),
                    count: node_count,
                });
            }
            if a == b {
                return Err(Error::SelfLoop(a));
            }
            cg.set(a, b);
            cg.set(b, a);
        }
        cg.edges = (0..node_count).map(EdgeId).collect();
        cg.refresh_degrees();
        Ok(cg)
    }

    fn set(&mut self, a: usize, b: usize) {
        self.rows[a * self.words + b / 64] |= 1 << (b % 64);
    }

    fn refresh_degrees(&mut self) {
        for node in 0..self.node_count {
            self.degrees[node] = self.row(node).iter().map(|w| w.count_ones() as usize).sum();
        }
    }

    pub fn node_count(&self) -> usize {
        self.node_count
    }

    /// Number of conflicting pairs.
    pub fn conflict_count(&self) -> usize {
        self.degrees.iter().sum::<usize>() / 2
    }

    /// Bit row of `node`; bit `j` set iff `j` conflicts with `node`.
    pub fn row(&self, node: usize) -> &[u64] {
        &self.rows[node * self.words..(node + 1) * self.words]
    }

    pub fn adjacent(&self, a: usize, b: usize) -> bool {
        self.rows[a * self.words + b / 64] >> (b % 64) & 1 == 1
    }

    pub fn degree(&self, node: usize) -> usize {
        self.degrees[node]
    }

    pub fn degrees(&self) -> &[usize] {
        &self.degrees
    }

    pub fn neighbors(&self, node: usize) -> impl Iterator<Item = usize> + '_ {
        self.row(node).iter().enumerate().flat_map(|(wi, &word)| {
            let mut bits = word;
            std::iter::from_fn(move || {
                if bits == 0 {
                    return None;
                }
                let tz = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(wi * 64 + tz)
            })
        })
    }

    /// Source-graph edge behind `node`.
    pub fn edge_id(&self, node: usize) -> EdgeId {
        self.edges[node]
    }

    /// Source-graph endpoints of each node, empty for abstract graphs.
    pub fn endpoints(&self) -> &[(usize, usize)] {
        &self.endpoints
    }

    pub fn has_source_structure(&self) -> bool {
        self.endpoints.len() == self.node_count
    }

    /// Nodes of the edges incident to source vertex `v`.
    pub fn star(&self, v: usize) -> &[usize] {
        &self.stars[v]
    }

    pub fn source_vertex_count(&self) -> usize {
        self.stars.len()
    }

    /// Closed edge neighborhood of `node` as conflict nodes, sorted.
    /// `None` for abstract graphs.
    pub fn closed_neighborhood(&self, node: usize) -> Option<Vec<usize>> {
        let &(u, v) = self.endpoints.get(node)?;
        let mut out: Vec<usize> = self.stars[u]
            .iter()
            .chain(&self.stars[v])
            .copied()
            .collect();
        out.sort_unstable();
        out.dedup();
        Some(out)
    }

    /// True iff every pair of distinct nodes in `nodes` conflicts.
    pub fn is_clique(&self, nodes: &[usize]) -> bool {
        nodes.iter().enumerate().all(|(i, &a)| {
            nodes[i + 1..]
                .iter()
                .all(|&b| a != b && self.adjacent(a, b))
        })
    }
}
