use crate::error::{Error, Result};
use crate::graph::ConflictGraph;

/// Largest instance [`brute_force_chi_s`] accepts.
pub const BRUTE_FORCE_MAX_EDGES: usize = 14;

/// Exact strong chromatic index by exhaustive search.
///
/// Walks nodes in index order over canonical labelings (each node may use a
/// color already seen or the next new one) and keeps the fewest colors of
/// any proper labeling. The only pruning is dropping labelings that cannot
/// beat the best found; there are no ordering heuristics or clique bounds,
/// so it stays a reference for the branch-and-bound solver.
pub fn brute_force_chi_s(cg: &ConflictGraph) -> Result<usize> {
    let n = cg.node_count();
    if n > BRUTE_FORCE_MAX_EDGES {
        return Err(Error::invalid(format!(
            "brute force is limited to {BRUTE_FORCE_MAX_EDGES} edges, got {n}"
        )));
    }
    let mut labels = vec![0usize; n];
    let mut best = n + 1;
    walk(cg, &mut labels, 0, 0, &mut best);
    Ok(best)
}

fn walk(cg: &ConflictGraph, labels: &mut [usize], i: usize, used: usize, best: &mut usize) {
    if i == labels.len() {
        *best = (*best).min(used);
        return;
    }
    for c in 1..=used + 1 {
        // only strictly better labelings matter
        if c >= *best {
            break;
        }
        if (0..i).any(|j| labels[j] == c && cg.adjacent(i, j)) {
            continue;
        }
        labels[i] = c;
        walk(cg, labels, i + 1, used.max(c), best);
    }
    labels[i] = 0;
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;

    fn cycle(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    #[test]
    fn small_values() {
        let p3 = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(brute_force_chi_s(&p3.conflict_graph()).unwrap(), 2);
        assert_eq!(brute_force_chi_s(&cycle(6).conflict_graph()).unwrap(), 3);
        assert_eq!(brute_force_chi_s(&cycle(5).conflict_graph()).unwrap(), 5);
        assert_eq!(
            brute_force_chi_s(&Graph::new(2).conflict_graph()).unwrap(),
            0
        );
    }

    #[test]
    fn size_cap() {
        assert!(matches!(
            brute_force_chi_s(&cycle(15).conflict_graph()),
            Err(Error::InvalidArgument(_))
        ));
    }
}
