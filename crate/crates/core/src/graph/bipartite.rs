use std::ops::Deref;

use super::{EdgeId, Graph};
use crate::error::{Error, Result};

/// Which side of the bipartition a vertex lies on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    X,
    Y,
}

/// A simple bipartite graph with parts `X = {0..n_left}` and
/// `Y = {0..n_right}`.
///
/// Side-local indices are used for construction. The underlying [`Graph`]
/// numbers X-vertices `0..n_left` and Y-vertices `n_left..n_left + n_right`;
/// every read-only graph query is reachable through `Deref`.
#[derive(Clone, Debug)]
pub struct BipartiteGraph {
    n_left: usize,
    n_right: usize,
    graph: Graph,
}

impl BipartiteGraph {
    pub fn new(n_left: usize, n_right: usize) -> Result<Self> {
        if n_left == 0 || n_right == 0 {
            return Err(Error::invalid(format!(
                "both sides need at least one vertex (got {n_left}, {n_right})"
            )));
        }
        Ok(BipartiteGraph {
            n_left,
            n_right,
            graph: Graph::new(n_left + n_right),
        })
    }

    /// Wraps a graph whose first `n_left` vertices form one side.
    pub fn from_graph(graph: Graph, n_left: usize) -> Result<Self> {
        let n = graph.vertex_count();
        if n_left == 0 || n_left >= n {
            return Err(Error::invalid(format!(
                "bipartition {n_left}/{} is not two non-empty sides",
                n.saturating_sub(n_left)
            )));
        }
        if let Some((_, (u, v))) = graph
            .edges()
            .find(|&(_, (u, v))| (u < n_left) == (v < n_left))
        {
            return Err(Error::NotBipartite(format!(
                "edge {{{u}, {v}}} lies inside one side"
            )));
        }
        Ok(BipartiteGraph {
            n_left,
            n_right: n - n_left,
            graph,
        })
    }

    pub fn n_left(&self) -> usize {
        self.n_left
    }

    pub fn n_right(&self) -> usize {
        self.n_right
    }

    pub fn as_graph(&self) -> &Graph {
        &self.graph
    }

    pub fn into_graph(self) -> Graph {
        self.graph
    }

    /// Global vertex id of X-vertex `x`.
    pub fn x_vertex(&self, x: usize) -> usize {
        x
    }

    /// Global vertex id of Y-vertex `y`.
    pub fn y_vertex(&self, y: usize) -> usize {
        self.n_left + y
    }

    /// Side and side-local index of a global vertex id.
    pub fn locate(&self, v: usize) -> (Side, usize) {
        if v < self.n_left {
            (Side::X, v)
        } else {
            (Side::Y, v - self.n_left)
        }
    }

    fn check_pair(&self, x: usize, y: usize) -> Result<()> {
        if x >= self.n_left {
            return Err(Error::VertexOutOfRange {
                vertex: x,
                count: self.n_left,
            });
        }
        if y >= self.n_right {
            return Err(Error::VertexOutOfRange {
                vertex: y,
                count: self.n_right,
            });
        }
        Ok(())
    }

    /// Adds the edge between X-vertex `x` and Y-vertex `y`.
    pub fn add_edge(&mut self, x: usize, y: usize) -> Result<EdgeId> {
        self.check_pair(x, y)?;
        let (u, v) = (x, self.n_left + y);
        self.graph.add_edge(u, v).map_err(|err| match err {
            Error::DuplicateEdge { .. } => Error::DuplicateEdge { u: x, v: y },
            other => other,
        })
    }

    pub fn remove_edge(&mut self, e: EdgeId) -> Result<()> {
        self.graph.remove_edge(e)
    }

    /// Side-local `(x, y)` endpoints of `e`.
    pub fn edge_xy(&self, e: EdgeId) -> Result<(usize, usize)> {
        let (u, v) = self.graph.endpoints(e)?;
        Ok((u, v - self.n_left))
    }

    pub fn xy_edge(&self, x: usize, y: usize) -> Option<EdgeId> {
        if x >= self.n_left || y >= self.n_right {
            return None;
        }
        self.graph.edge_between(x, self.n_left + y)
    }

    /// Live edges as side-local `(x, y)` pairs, in id order.
    pub fn xy_edges(&self) -> impl Iterator<Item = (EdgeId, (usize, usize))> + '_ {
        self.graph
            .edges()
            .map(move |(id, (u, v))| (id, (u, v - self.n_left)))
    }

    pub fn compact(&mut self) -> Vec<Option<EdgeId>> {
        self.graph.compact()
    }
}

impl Deref for BipartiteGraph {
    type Target = Graph;

    fn deref(&self) -> &Graph {
        &self.graph
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Girth;

    #[test]
    fn zero_sides_rejected() {
        assert!(matches!(
            BipartiteGraph::new(0, 3),
            Err(Error::InvalidArgument(_))
        ));
        assert!(matches!(
            BipartiteGraph::new(3, 0),
            Err(Error::InvalidArgument(_))
        ));
    }

    #[test]
    fn empty_shells() {
        let g = BipartiteGraph::new(3, 3).unwrap();
        assert_eq!(g.vertex_count(), 6);
        assert_eq!(g.edge_count(), 0);
        let mut one = BipartiteGraph::new(1, 1).unwrap();
        assert_eq!(one.add_edge(0, 0).unwrap(), EdgeId(0));
        let shell = BipartiteGraph::new(48, 48).unwrap();
        assert_eq!(shell.vertex_count(), 96);
    }

    #[test]
    fn duplicate_edge_rejected() {
        let mut g = BipartiteGraph::new(2, 2).unwrap();
        assert_eq!(g.add_edge(0, 0).unwrap(), EdgeId(0));
        assert!(matches!(
            g.add_edge(0, 0),
            Err(Error::DuplicateEdge { u: 0, v: 0 })
        ));
        assert!(matches!(
            g.add_edge(2, 0),
            Err(Error::VertexOutOfRange { .. })
        ));
    }

    #[test]
    fn eight_cycle_as_four_plus_four() {
        let mut g = BipartiteGraph::new(4, 4).unwrap();
        for i in 0..4 {
            g.add_edge(i, i).unwrap();
            g.add_edge((i + 1) % 4, i).unwrap();
        }
        assert_eq!(g.edge_count(), 8);
        assert!(g.degrees().iter().all(|&d| d == 2));
        assert_eq!(g.girth(), Girth::Finite(8));
    }

    #[test]
    fn remove_and_readd() {
        let mut g = BipartiteGraph::new(1, 1).unwrap();
        let e = g.add_edge(0, 0).unwrap();
        g.remove_edge(e).unwrap();
        assert_eq!(g.edge_count(), 0);
        assert!(matches!(g.remove_edge(e), Err(Error::InvalidEdge(0))));
        assert_eq!(g.add_edge(0, 0).unwrap(), EdgeId(1));
    }

    #[test]
    fn swap_on_six_cycle() {
        // C6 = x0 y0 x1 y1 x2 y2; remove one edge then add two chords
        let mut g = BipartiteGraph::new(3, 3).unwrap();
        for i in 0..3 {
            g.add_edge(i, i).unwrap();
            g.add_edge((i + 1) % 3, i).unwrap();
        }
        let e = g.xy_edge(0, 0).unwrap();
        g.remove_edge(e).unwrap();
        g.add_edge(0, 1).unwrap();
        g.add_edge(2, 0).unwrap();
        // (0,1) is absent from C6 (x0 neighbors y0, y2); (2,0) likewise
        assert_eq!(g.edge_count(), 7);
    }

    #[test]
    fn from_graph_checks_sides() {
        let g = Graph::from_edges(4, &[(0, 2), (1, 3)]).unwrap();
        let b = BipartiteGraph::from_graph(g, 2).unwrap();
        assert_eq!(b.edge_xy(EdgeId(1)).unwrap(), (1, 1));
        let bad = Graph::from_edges(4, &[(0, 1)]).unwrap();
        assert!(matches!(
            BipartiteGraph::from_graph(bad, 2),
            Err(Error::NotBipartite(_))
        ));
    }
}
