use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{ConflictGraph, Graph};

/// Assignment of a positive color to every conflict-graph node (one per
/// edge of the source graph).
///
/// The `verified` flag is only ever set by [`StrongColoring::verify`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StrongColoring {
    colors: Vec<u32>,
    verified: bool,
}

impl StrongColoring {
    pub fn new(colors: Vec<u32>) -> Result<Self> {
        if let Some(i) = colors.iter().position(|&c| c == 0) {
            return Err(Error::invalid(format!(
                "edge {i} has color 0; colors are 1-based"
            )));
        }
        Ok(StrongColoring {
            colors,
            verified: false,
        })
    }

    pub fn colors(&self) -> &[u32] {
        &self.colors
    }

    pub fn color(&self, node: usize) -> u32 {
        self.colors[node]
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    pub fn max_color(&self) -> u32 {
        self.colors.iter().copied().max().unwrap_or(0)
    }

    /// Number of distinct colors used.
    pub fn color_count(&self) -> usize {
        let mut seen = self.colors.clone();
        seen.sort_unstable();
        seen.dedup();
        seen.len()
    }

    /// Class sizes indexed by `color − 1`, up to the largest color.
    pub fn class_sizes(&self) -> Vec<usize> {
        let mut sizes = vec![0; self.max_color() as usize];
        for &c in &self.colors {
            sizes[c as usize - 1] += 1;
        }
        sizes
    }

    pub fn usage(&self, color: u32) -> usize {
        self.colors.iter().filter(|&&c| c == color).count()
    }

    /// Nodes colored `color`.
    pub fn class(&self, color: u32) -> Vec<usize> {
        (0..self.colors.len())
            .filter(|&i| self.colors[i] == color)
            .collect()
    }

    pub fn is_verified(&self) -> bool {
        self.verified
    }

    /// Checks the coloring against `cg` and records the result.
    pub fn verify(&mut self, cg: &ConflictGraph) -> Result<bool> {
        self.verified = verify(cg, self)?;
        Ok(self.verified)
    }

    /// Applies `map[c − 1]` to every color.
    pub(crate) fn relabel(&mut self, map: &[u32]) {
        for c in &mut self.colors {
            *c = map[*c as usize - 1];
        }
        self.verified = false;
    }
}

/// True iff no two conflicting nodes share a color.
pub fn verify(cg: &ConflictGraph, phi: &StrongColoring) -> Result<bool> {
    if phi.len() != cg.node_count() {
        return Err(Error::invalid(format!(
            "coloring has {} entries but the graph has {} edges",
            phi.len(),
            cg.node_count()
        )));
    }
    Ok((0..cg.node_count()).all(|a| {
        cg.neighbors(a)
            .filter(|&b| b > a)
            .all(|b| phi.color(a) != phi.color(b))
    }))
}

/// Convenience wrapper building the conflict graph of `graph`.
pub fn verify_on_graph(graph: &Graph, phi: &StrongColoring) -> Result<bool> {
    verify(&graph.conflict_graph(), phi)
}

/// On-disk coloring: edges as 1-based endpoint pairs plus their colors.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ColoringFile {
    pub edges: Vec<[usize; 2]>,
    pub colors: Vec<u32>,
    pub verified: bool,
}

impl ColoringFile {
    /// Pairs each live edge of `graph` (in id order) with its color.
    pub fn from_coloring(graph: &Graph, phi: &StrongColoring) -> Result<Self> {
        if phi.len() != graph.edge_count() {
            return Err(Error::invalid(
                "coloring does not match the graph's edge count",
            ));
        }
        Ok(ColoringFile {
            edges: graph.edges().map(|(_, (u, v))| [u + 1, v + 1]).collect(),
            colors: phi.colors().to_vec(),
            verified: phi.is_verified(),
        })
    }

    /// Reorders the file's colors to follow `graph`'s edge order. The stored
    /// `verified` flag is not trusted.
    pub fn to_coloring(&self, graph: &Graph) -> Result<StrongColoring> {
        if self.edges.len() != self.colors.len() {
            return Err(Error::invalid(format!(
                "{} edges but {} colors",
                self.edges.len(),
                self.colors.len()
            )));
        }
        if self.edges.len() != graph.edge_count() {
            return Err(Error::invalid(format!(
                "coloring lists {} edges but the graph has {}",
                self.edges.len(),
                graph.edge_count()
            )));
        }
        let position: std::collections::HashMap<usize, usize> = graph
            .edges()
            .enumerate()
            .map(|(pos, (id, _))| (id.0, pos))
            .collect();
        let mut colors = vec![0; graph.edge_count()];
        for (&[u, v], &c) in self.edges.iter().zip(&self.colors) {
            let id = (u >= 1 && v >= 1)
                .then(|| graph.edge_between(u - 1, v - 1))
                .flatten()
                .ok_or_else(|| Error::invalid(format!("edge {{{u}, {v}}} is not in the graph")))?;
            let pos = position[&id.0];
            if colors[pos] != 0 {
                return Err(Error::invalid(format!("edge {{{u}, {v}}} listed twice")));
            }
            colors[pos] = c;
        }
        StrongColoring::new(colors)
    }
}
