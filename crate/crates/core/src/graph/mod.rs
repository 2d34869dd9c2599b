//! Simple undirected graphs with stable edge identities.
//!
//! [`Graph`] is the general representation used by the solver and the
//! certification code. [`BipartiteGraph`] wraps it with an explicit two-sided
//! partition so bipartiteness holds by construction.

mod bipartite;
mod conflict;
mod distance;

pub use bipartite::{BipartiteGraph, Side};
pub use conflict::ConflictGraph;
pub use distance::DistanceOracle;

use std::collections::{HashMap, VecDeque};
use std::fmt;

use crate::error::{Error, Result};

/// Stable identifier of an edge: its slot in the edge list.
///
/// Ids survive removals of other edges. Only [`Graph::compact`] renumbers them.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EdgeId(pub usize);

impl EdgeId {
    pub fn index(self) -> usize {
        self.0
    }
}

impl fmt::Display for EdgeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "e{}", self.0)
    }
}

/// Length of a shortest cycle, or `Acyclic` for forests.
///
/// `Acyclic` compares greater than every finite girth.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Girth {
    Finite(usize),
    Acyclic,
}

impl Girth {
    pub fn at_least(self, g: usize) -> bool {
        match self {
            Girth::Finite(len) => len >= g,
            Girth::Acyclic => true,
        }
    }

    pub fn finite(self) -> Option<usize> {
        match self {
            Girth::Finite(len) => Some(len),
            Girth::Acyclic => None,
        }
    }
}

impl fmt::Display for Girth {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Girth::Finite(len) => write!(f, "{len}"),
            Girth::Acyclic => f.write_str("acyclic"),
        }
    }
}

/// A simple undirected graph on vertices `0..vertex_count()`.
///
/// Edges are stored in slots indexed by [`EdgeId`]; removal leaves a
/// tombstone so outstanding ids stay meaningful until [`Graph::compact`].
#[derive(Clone, Debug, Default)]
pub struct Graph {
    adjacency: Vec<Vec<(usize, EdgeId)>>,
    slots: Vec<Option<(usize, usize)>>,
    index: HashMap<(usize, usize), EdgeId>,
}

fn ordered(u: usize, v: usize) -> (usize, usize) {
    if u <= v {
        (u, v)
    } else {
        (v, u)
    }
}

impl Graph {
    pub fn new(vertex_count: usize) -> Self {
        Graph {
            adjacency: vec![Vec::new(); vertex_count],
            slots: Vec::new(),
            index: HashMap::new(),
        }
    }

    /// Builds a graph from an edge list, rejecting loops and duplicates.
    pub fn from_edges(vertex_count: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::new(vertex_count);
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn vertex_count(&self) -> usize {
        self.adjacency.len()
    }

    /// Number of live edges.
    pub fn edge_count(&self) -> usize {
        self.index.len()
    }

    /// Number of edge slots, including tombstones.
    pub fn edge_slots(&self) -> usize {
        self.slots.len()
    }

    pub fn has_tombstones(&self) -> bool {
        self.slots.len() != self.index.len()
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.vertex_count() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: v,
                count: self.vertex_count(),
            })
        }
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<EdgeId> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        let key = ordered(u, v);
        if self.index.contains_key(&key) {
            return Err(Error::DuplicateEdge { u: key.0, v: key.1 });
        }
        let id = EdgeId(self.slots.len());
        self.slots.push(Some(key));
        self.index.insert(key, id);
        self.adjacency[u].push((v, id));
        self.adjacency[v].push((u, id));
        Ok(id)
    }

    pub fn remove_edge(&mut self, e: EdgeId) -> Result<()> {
        let (u, v) = self.endpoints(e)?;
        self.slots[e.0] = None;
        self.index.remove(&(u, v));
        self.adjacency[u].retain(|&(_, id)| id != e);
        self.adjacency[v].retain(|&(_, id)| id != e);
        Ok(())
    }

    /// Endpoints `(u, v)` with `u < v`.
    pub fn endpoints(&self, e: EdgeId) -> Result<(usize, usize)> {
        self.slots
            .get(e.0)
            .copied()
            .flatten()
            .ok_or(Error::InvalidEdge(e.0))
    }

    pub fn contains_edge(&self, e: EdgeId) -> bool {
        matches!(self.slots.get(e.0), Some(Some(_)))
    }

    pub fn edge_between(&self, u: usize, v: usize) -> Option<EdgeId> {
        self.index.get(&ordered(u, v)).copied()
    }

    /// Live edges in id order.
    pub fn edges(&self) -> impl Iterator<Item = (EdgeId, (usize, usize))> + '_ {
        self.slots
            .iter()
            .enumerate()
            .filter_map(|(i, slot)| slot.map(|uv| (EdgeId(i), uv)))
    }

    /// `(neighbor, edge)` pairs at `v`.
    pub fn incident(&self, v: usize) -> &[(usize, EdgeId)] {
        &self.adjacency[v]
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adjacency[v].iter().map(|&(w, _)| w)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adjacency.iter().map(Vec::len).collect()
    }

    pub fn max_degree(&self) -> usize {
        self.adjacency.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// Checks that every vertex has degree exactly `k`.
    pub fn check_regular(&self, k: usize) -> Result<()> {
        match self
            .adjacency
            .iter()
            .enumerate()
            .find(|(_, adj)| adj.len() != k)
        {
            Some((vertex, adj)) => Err(Error::NotRegular {
                k,
                vertex,
                degree: adj.len(),
            }),
            None => Ok(()),
        }
    }

    /// The common degree if the graph is regular and non-empty.
    pub fn regular_degree(&self) -> Option<usize> {
        let first = self.adjacency.first()?.len();
        self.adjacency
            .iter()
            .all(|adj| adj.len() == first)
            .then_some(first)
    }

    /// Renumbers live edges densely in id order. Returns the old→new map.
    pub fn compact(&mut self) -> Vec<Option<EdgeId>> {
        let mut map = vec![None; self.slots.len()];
        let mut slots = Vec::with_capacity(self.index.len());
        for (i, slot) in self.slots.iter().enumerate() {
            if let Some(uv) = slot {
                map[i] = Some(EdgeId(slots.len()));
                slots.push(Some(*uv));
            }
        }
        self.slots = slots;
        for id in self.index.values_mut() {
            *id = map[id.0].expect("indexed edge is live");
        }
        for adj in &mut self.adjacency {
            for (_, id) in adj.iter_mut() {
                *id = map[id.0].expect("adjacent edge is live");
            }
        }
        map
    }

    /// Closed edge neighborhood: every edge sharing an endpoint with `e`,
    /// including `e`. Sorted by id.
    pub fn closed_edge_neighborhood(&self, e: EdgeId) -> Result<Vec<EdgeId>> {
        let (u, v) = self.endpoints(e)?;
        let mut out: Vec<EdgeId> = self.adjacency[u]
            .iter()
            .chain(&self.adjacency[v])
            .map(|&(_, id)| id)
            .collect();
        out.sort_unstable();
        out.dedup();
        Ok(out)
    }

    /// Exact hop distances from `sources`, explored up to depth `cutoff`.
    pub fn distances_from(&self, sources: &[usize], cutoff: usize) -> Result<DistanceOracle> {
        if sources.is_empty() {
            return Err(Error::invalid("distance query needs at least one source"));
        }
        for &s in sources {
            self.check_vertex(s)?;
        }
        Ok(DistanceOracle::bfs(self, sources, cutoff, None))
    }

    /// Length of a shortest cycle through `e`, if shorter than `limit`.
    ///
    /// Looks for a `u`–`v` path avoiding `e` with fewer than `limit - 1` edges.
    pub fn short_cycle_through(&self, e: EdgeId, limit: usize) -> Result<Option<usize>> {
        let (u, v) = self.endpoints(e)?;
        if limit < 3 {
            return Ok(None);
        }
        let oracle = DistanceOracle::bfs(self, &[u], limit - 2, Some(e));
        Ok(oracle.distance(v).map(|d| d + 1))
    }

    /// Shortest cycle length via one truncated BFS per vertex.
    pub fn girth(&self) -> Girth {
        self.shortest_cycle_below(usize::MAX)
            .map_or(Girth::Acyclic, Girth::Finite)
    }

    /// True iff the graph has no cycle shorter than `g`.
    pub fn girth_at_least(&self, g: usize) -> bool {
        self.shortest_cycle_below(g).is_none()
    }

    /// Shortest cycle of length `< bound`, if any.
    fn shortest_cycle_below(&self, bound: usize) -> Option<usize> {
        let n = self.vertex_count();
        let mut best = bound;
        let mut dist = vec![usize::MAX; n];
        let mut parent_edge = vec![EdgeId(usize::MAX); n];
        let mut touched = Vec::new();
        let mut queue = VecDeque::new();
        for root in 0..n {
            for &t in &touched {
                dist[t] = usize::MAX;
            }
            touched.clear();
            queue.clear();
            dist[root] = 0;
            touched.push(root);
            queue.push_back(root);
            'bfs: while let Some(u) = queue.pop_front() {
                // any cycle closed from u has length >= 2 * dist[u]
                if 2 * dist[u] >= best {
                    break;
                }
                for &(w, id) in &self.adjacency[u] {
                    if id == parent_edge[u] && u != root {
                        continue;
                    }
                    if dist[w] == usize::MAX {
                        dist[w] = dist[u] + 1;
                        parent_edge[w] = id;
                        touched.push(w);
                        queue.push_back(w);
                    } else {
                        let len = dist[u] + dist[w] + 1;
                        if len < best {
                            best = len;
                        }
                        if 2 * dist[u] >= best {
                            break 'bfs;
                        }
                    }
                }
            }
        }
        (best < bound).then_some(best)
    }

    /// Two-colors the graph if it is bipartite. `true` marks the side of
    /// the lowest vertex in each component.
    pub fn two_coloring(&self) -> Option<Vec<bool>> {
        let n = self.vertex_count();
        let mut side: Vec<Option<bool>> = vec![None; n];
        let mut queue = VecDeque::new();
        for root in 0..n {
            if side[root].is_some() {
                continue;
            }
            side[root] = Some(true);
            queue.push_back(root);
            while let Some(u) = queue.pop_front() {
                let su = side[u].expect("queued vertices are colored");
                for w in self.neighbors(u) {
                    match side[w] {
                        None => {
                            side[w] = Some(!su);
                            queue.push_back(w);
                        }
                        Some(sw) if sw == su => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        Some(side.into_iter().map(|s| s.unwrap_or(true)).collect())
    }

    pub fn conflict_graph(&self) -> ConflictGraph {
        ConflictGraph::from_graph(self)
    }
}
