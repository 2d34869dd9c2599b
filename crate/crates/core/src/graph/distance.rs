use std::collections::VecDeque;

use super::{EdgeId, Graph};

const UNREACHED: u32 = u32::MAX;

/// Truncated breadth-first distances from a source set.
///
/// Distances up to `cutoff` are exact. A vertex not reached within the
/// cutoff is at distance at least `cutoff + 1` (possibly unreachable).
#[derive(Clone, Debug)]
pub struct DistanceOracle {
    sources: Vec<usize>,
    dist: Vec<u32>,
    cutoff: usize,
    reached: Vec<usize>,
}

impl DistanceOracle {
    pub(crate) fn bfs(
        graph: &Graph,
        sources: &[usize],
        cutoff: usize,
        skip: Option<EdgeId>,
    ) -> Self {
        let mut dist = vec![UNREACHED; graph.vertex_count()];
        let mut reached = Vec::new();
        let mut queue = VecDeque::new();
        for &s in sources {
            if dist[s] == UNREACHED {
                dist[s] = 0;
                reached.push(s);
                queue.push_back(s);
            }
        }
        while let Some(u) = queue.pop_front() {
            let du = dist[u] as usize;
            if du >= cutoff {
                continue;
            }
            for &(w, id) in graph.incident(u) {
                if Some(id) == skip || dist[w] != UNREACHED {
                    continue;
                }
                dist[w] = (du + 1) as u32;
                reached.push(w);
                queue.push_back(w);
            }
        }
        let mut sources = sources.to_vec();
        sources.sort_unstable();
        sources.dedup();
        DistanceOracle {
            sources,
            dist,
            cutoff,
            reached,
        }
    }

    pub fn sources(&self) -> &[usize] {
        &self.sources
    }

    pub fn cutoff(&self) -> usize {
        self.cutoff
    }

    /// Exact distance if it is at most the cutoff, else `None`.
    pub fn distance(&self, v: usize) -> Option<usize> {
        match self.dist[v] {
            UNREACHED => None,
            d => Some(d as usize),
        }
    }

    /// Whether `dist(sources, v) >= d`. Only decidable for `d <= cutoff + 1`.
    pub fn at_least(&self, v: usize, d: usize) -> bool {
        debug_assert!(d <= self.cutoff + 1, "threshold beyond cutoff");
        self.distance(v).is_none_or(|dv| dv >= d)
    }

    /// Vertices within the cutoff, in BFS order.
    pub fn reached(&self) -> &[usize] {
        &self.reached
    }

    pub fn is_reached(&self, v: usize) -> bool {
        self.dist[v] != UNREACHED
    }
}
