use std::time::Duration;

use super::budget::{Budget, Meter};
use super::coloring::StrongColoring;
use super::greedy::{greedy_color, OrderPolicy};
use super::search::{decide, Decision, Palette};
use crate::graph::ConflictGraph;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SolveStatus {
    /// `chi_s` is proven: a coloring with that many colors exists and the
    /// search below it was exhausted (or met the clique bound).
    Exact,
    /// Budget ran out; only `lower_bound <= chi_s <= upper_bound` is known.
    UpperBoundOnly,
}

#[derive(Clone, Debug)]
pub struct SolveOutcome {
    pub status: SolveStatus,
    pub chi_s: Option<usize>,
    pub lower_bound: usize,
    pub upper_bound: usize,
    /// Best coloring found; uses `upper_bound` colors.
    pub best: StrongColoring,
    pub nodes: u64,
    pub elapsed: Duration,
}

/// Largest clique found by greedy extension of seed cliques.
///
/// Seeds are the closed edge neighborhoods when the source graph is known
/// (each is a clique: edges meeting `e` at its two ends are joined by `e`),
/// otherwise single nodes.
pub fn clique_lower_bound(cg: &ConflictGraph) -> Vec<usize> {
    let mut best: Vec<usize> = Vec::new();
    for node in 0..cg.node_count() {
        let seed = cg.closed_neighborhood(node).unwrap_or_else(|| vec![node]);
        debug_assert!(cg.is_clique(&seed));
        let clique = extend_clique(cg, seed);
        if clique.len() > best.len() {
            best = clique;
        }
    }
    best
}

fn extend_clique(cg: &ConflictGraph, mut clique: Vec<usize>) -> Vec<usize> {
    let words = cg.row(0).len();
    let mut common = vec![u64::MAX; words];
    for &v in &clique {
        for (c, r) in common.iter_mut().zip(cg.row(v)) {
            *c &= r;
        }
    }
    loop {
        let next = (0..cg.node_count())
            .filter(|&v| common[v / 64] >> (v % 64) & 1 == 1)
            .max_by_key(|&v| (cg.degree(v), std::cmp::Reverse(v)));
        let Some(v) = next else { break };
        clique.push(v);
        for (c, r) in common.iter_mut().zip(cg.row(v)) {
            *c &= r;
        }
    }
    clique.sort_unstable();
    clique
}

/// `⌈m / ⌊m/(2k − 1)⌋⌉` when the source graph is k-regular with `k >= 1`:
/// every color class meets each closed edge neighborhood at most once, so
/// it holds at most `⌊m/(2k − 1)⌋` edges. `None` otherwise.
pub fn class_size_lower_bound(cg: &ConflictGraph) -> Option<usize> {
    if !cg.has_source_structure() || cg.source_vertex_count() == 0 {
        return None;
    }
    let k = cg.star(0).len();
    if k == 0 || (1..cg.source_vertex_count()).any(|v| cg.star(v).len() != k) {
        return None;
    }
    let m = cg.node_count();
    let per_class = m / (2 * k - 1);
    (per_class > 0).then(|| m.div_ceil(per_class))
}

/// Exact strong chromatic index (as the chromatic number of `cg`).
///
/// Starts from the clique and class-size bounds and a DSATUR upper bound,
/// and closes the gap with decision searches at increasing color counts.
pub fn exact_chi_s(cg: &ConflictGraph, budget: Budget) -> SolveOutcome {
    let mut meter = Meter::new(budget);
    let mut best = greedy_color(cg, OrderPolicy::Saturation, 0);
    let mut upper = best.color_count();
    let clique = clique_lower_bound(cg).len();
    let counting = class_size_lower_bound(cg).unwrap_or(0);
    let mut lower = clique.max(counting).min(upper);
    let mut status = SolveStatus::UpperBoundOnly;

    while lower < upper {
        let palette = Palette {
            regular: lower as u32,
            special_cap: None,
        };
        match decide(cg, palette, &mut meter) {
            Decision::Found(phi) => {
                upper = phi.color_count();
                best = phi;
            }
            Decision::Infeasible => lower += 1,
            Decision::Unknown => break,
        }
    }
    if lower == upper {
        status = SolveStatus::Exact;
    }
    SolveOutcome {
        status,
        chi_s: (status == SolveStatus::Exact).then_some(upper),
        lower_bound: lower,
        upper_bound: upper,
        best,
        nodes: meter.used(),
        elapsed: meter.elapsed(),
    }
}

/// Decision form: a proper coloring with at most `colors` colors.
pub fn find_coloring(cg: &ConflictGraph, colors: usize, budget: Budget) -> Decision {
    let mut meter = Meter::new(budget);
    let palette = Palette {
        regular: colors as u32,
        special_cap: None,
    };
    decide(cg, palette, &mut meter)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;

    fn cycle(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    fn k33() -> Graph {
        let mut edges = Vec::new();
        for x in 0..3 {
            for y in 3..6 {
                edges.push((x, y));
            }
        }
        Graph::from_edges(6, &edges).unwrap()
    }

    #[test]
    fn anchors() {
        for (g, chi) in [(cycle(6), 3), (cycle(8), 4), (cycle(5), 5), (k33(), 9)] {
            let out = exact_chi_s(&g.conflict_graph(), Budget::unlimited());
            assert_eq!(out.status, SolveStatus::Exact);
            assert_eq!(out.chi_s, Some(chi));
            assert!(out.best.is_verified());
            assert_eq!(out.best.color_count(), chi);
        }
    }

    #[test]
    fn clique_seed_for_regular_graph() {
        let cg = cycle(10).conflict_graph();
        assert!(clique_lower_bound(&cg).len() >= 3);
        let cg = k33().conflict_graph();
        assert_eq!(clique_lower_bound(&cg).len(), 9);
    }

    #[test]
    fn decision_problem() {
        let cg = k33().conflict_graph();
        assert_eq!(
            find_coloring(&cg, 8, Budget::unlimited()),
            Decision::Infeasible
        );
        assert!(matches!(
            find_coloring(&cg, 9, Budget::unlimited()),
            Decision::Found(_)
        ));
        let c6 = cycle(6).conflict_graph();
        match find_coloring(&c6, 3, Budget::unlimited()) {
            Decision::Found(phi) => assert!(phi.color_count() <= 3 && phi.is_verified()),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn class_size_bound() {
        assert_eq!(class_size_lower_bound(&cycle(5).conflict_graph()), Some(5));
        assert_eq!(class_size_lower_bound(&cycle(9).conflict_graph()), Some(3));
        assert_eq!(class_size_lower_bound(&cycle(10).conflict_graph()), Some(4));
        assert_eq!(class_size_lower_bound(&k33().conflict_graph()), Some(9));
        let path = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(class_size_lower_bound(&path.conflict_graph()), None);
    }

    #[test]
    fn empty_graph() {
        let out = exact_chi_s(&Graph::new(0).conflict_graph(), Budget::unlimited());
        assert_eq!(out.chi_s, Some(0));
    }

    #[test]
    fn node_budget_yields_bounds_only() {
        // the 4-dimensional cube Q4 has a large gap between clique and greedy
        let mut edges = Vec::new();
        for v in 0..16usize {
            for b in 0..4 {
                let w = v ^ (1 << b);
                if v < w {
                    edges.push((v, w));
                }
            }
        }
        let cg = Graph::from_edges(16, &edges).unwrap().conflict_graph();
        let out = exact_chi_s(&cg, Budget::nodes(1));
        if out.status == SolveStatus::UpperBoundOnly {
            assert!(out.chi_s.is_none());
            assert!(out.lower_bound < out.upper_bound);
        }
        assert!(out.best.is_verified());
    }
}
