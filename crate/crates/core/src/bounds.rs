//! Counting bounds for strong colorings of k-regular graphs.
//!
//! In a k-regular simple graph every closed edge neighborhood `N(e)` has
//! `2k − 1` edges and is a clique of the conflict graph, so a color class
//! meets each `N(e)` at most once. Each edge lies in exactly `2k − 1` of the
//! neighborhoods, hence `(2k − 1)|C| = Σ_e |C ∩ N(e)| <= m` for every class
//! `C`. When `2k − 1` does not divide `m` the inequality is strict and at
//! least `2k` colors are needed.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{EdgeId, Graph};
use crate::solver::StrongColoring;

/// Arithmetic record of the class-size bound for one graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Lemma1Certificate {
    pub k: usize,
    pub m: usize,
    pub window: usize,
    pub max_class_size: usize,
    pub divisible: bool,
    pub chi_s_lower: usize,
    pub regularity_checked: bool,
}

impl Lemma1Certificate {
    /// The certificate for a k-regular graph with `m` edges, without
    /// looking at any graph. `regularity_checked` is false.
    pub fn from_counts(k: usize, m: usize) -> Result<Self> {
        if k < 2 {
            return Err(Error::invalid(format!("k must be at least 2, got {k}")));
        }
        let window = 2 * k - 1;
        let divisible = m.is_multiple_of(window);
        Ok(Lemma1Certificate {
            k,
            m,
            window,
            max_class_size: m / window,
            divisible,
            chi_s_lower: if divisible { window } else { 2 * k },
            regularity_checked: false,
        })
    }

    /// Re-derives every field from `k` and `m` and compares.
    pub fn is_consistent(&self) -> bool {
        let Ok(fresh) = Lemma1Certificate::from_counts(self.k, self.m) else {
            return false;
        };
        fresh.window == self.window
            && fresh.max_class_size == self.max_class_size
            && fresh.divisible == self.divisible
            && fresh.chi_s_lower == self.chi_s_lower
            && self.max_class_size * self.window <= self.m
            && (self.divisible || self.max_class_size * self.window < self.m)
    }
}

/// Certificate for `graph`, after checking it is k-regular.
pub fn lemma1_certificate(graph: &Graph, k: usize) -> Result<Lemma1Certificate> {
    if graph.vertex_count() == 0 {
        return Err(Error::invalid("the empty graph has no edges to bound"));
    }
    graph.check_regular(k)?;
    let mut cert = Lemma1Certificate::from_counts(k, graph.edge_count())?;
    cert.regularity_checked = true;
    Ok(cert)
}

fn regular_degree(graph: &Graph) -> Result<usize> {
    graph
        .regular_degree()
        .filter(|&k| k >= 1)
        .ok_or_else(|| Error::invalid("graph is not regular"))
}

fn check_sized(graph: &Graph, phi: &StrongColoring) -> Result<()> {
    if phi.len() != graph.edge_count() {
        return Err(Error::invalid(format!(
            "coloring has {} entries but the graph has {} edges",
            phi.len(),
            graph.edge_count()
        )));
    }
    Ok(())
}

/// Evaluates both sides of `(2k − 1)|C| = Σ_e |C ∩ N(e)|` for the class of
/// `color`, checking `|C ∩ N(e)| <= 1` along the way.
///
/// Neighborhoods come from the graph's incidence lists, not from the
/// conflict graph.
pub fn averaging_identity_check(
    graph: &Graph,
    phi: &StrongColoring,
    color: u32,
) -> Result<(usize, usize)> {
    let k = regular_degree(graph)?;
    check_sized(graph, phi)?;
    let mut position = vec![usize::MAX; graph.edge_slots()];
    for (pos, (id, _)) in graph.edges().enumerate() {
        position[id.0] = pos;
    }
    let in_class = |id: EdgeId| phi.color(position[id.0]) == color;

    let class_size = graph.edges().filter(|&(id, _)| in_class(id)).count();
    let lhs = (2 * k - 1) * class_size;
    let mut rhs = 0;
    for (e, (u, v)) in graph.edges() {
        let hits = graph
            .closed_edge_neighborhood(e)?
            .into_iter()
            .filter(|&f| in_class(f))
            .count();
        if hits > 1 {
            return Err(Error::IdentityViolation {
                color,
                detail: format!(
                    "N(e) for edge {{{}, {}}} holds {hits} edges of the class",
                    u + 1,
                    v + 1
                ),
            });
        }
        rhs += hits;
    }
    if lhs != rhs {
        return Err(Error::IdentityViolation {
            color,
            detail: format!("(2k-1)|C| = {lhs} but the neighborhood sum is {rhs}"),
        });
    }
    Ok((lhs, rhs))
}

/// Per-color edge counts against the certificate cap.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassSizeReport {
    /// `counts[c − 1]` edges have color `c`.
    pub counts: Vec<usize>,
    pub cap: usize,
    /// Colors whose class exceeds the cap.
    pub offending: Vec<u32>,
}

impl ClassSizeReport {
    pub fn is_within_cap(&self) -> bool {
        self.offending.is_empty()
    }
}

/// Compares every class size with `⌊m / (2k − 1)⌋`.
///
/// A violation is ordinary report content, unless the coloring has been
/// verified and the graph is k-regular: then the bound is a theorem and the
/// violation is reported as an invariant failure.
pub fn check_class_sizes(graph: &Graph, k: usize, phi: &StrongColoring) -> Result<ClassSizeReport> {
    check_sized(graph, phi)?;
    let cert = Lemma1Certificate::from_counts(k, graph.edge_count())?;
    let counts = phi.class_sizes();
    let offending: Vec<u32> = counts
        .iter()
        .enumerate()
        .filter(|&(_, &n)| n > cert.max_class_size)
        .map(|(i, _)| i as u32 + 1)
        .collect();
    if !offending.is_empty() && phi.is_verified() && graph.check_regular(k).is_ok() {
        return Err(Error::InvariantViolated(format!(
            "verified strong coloring has classes {offending:?} above the cap {}",
            cert.max_class_size
        )));
    }
    Ok(ClassSizeReport {
        counts,
        cap: cert.max_class_size,
        offending,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

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
    fn certificate_arithmetic() {
        let c = Lemma1Certificate::from_counts(3, 21).unwrap();
        assert_eq!(
            (c.window, c.max_class_size, c.divisible, c.chi_s_lower),
            (5, 4, false, 6)
        );
        let c = lemma1_certificate(&k33(), 3).unwrap();
        assert_eq!((c.m, c.max_class_size, c.chi_s_lower), (9, 1, 6));
        assert!(c.regularity_checked && c.is_consistent());
        let c = lemma1_certificate(&cycle(9), 2).unwrap();
        assert_eq!(
            (c.window, c.max_class_size, c.divisible, c.chi_s_lower),
            (3, 3, true, 3)
        );
    }

    #[test]
    fn irregular_graph_rejected() {
        let path = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        assert!(matches!(
            lemma1_certificate(&path, 2),
            Err(Error::NotRegular { .. })
        ));
        assert!(matches!(
            lemma1_certificate(&k33(), 2),
            Err(Error::NotRegular { .. })
        ));
    }

    #[test]
    fn tampered_certificate_is_inconsistent() {
        let mut c = Lemma1Certificate::from_counts(3, 144).unwrap();
        assert!(c.is_consistent());
        c.chi_s_lower = 7;
        assert!(!c.is_consistent());
    }

    #[test]
    fn singleton_class_in_k33() {
        let phi = StrongColoring::new((1..=9).collect()).unwrap();
        assert_eq!(averaging_identity_check(&k33(), &phi, 4).unwrap(), (5, 5));
        assert_eq!(averaging_identity_check(&k33(), &phi, 10).unwrap(), (0, 0));
    }

    #[test]
    fn improper_class_violates_identity() {
        let phi = StrongColoring::new(vec![1, 1, 2, 3, 4, 1, 2, 3]).unwrap();
        assert!(matches!(
            averaging_identity_check(&cycle(8), &phi, 1),
            Err(Error::IdentityViolation { color: 1, .. })
        ));
    }

    #[test]
    fn class_size_report() {
        let g = cycle(8);
        let phi = StrongColoring::new(vec![1, 2, 3, 4, 1, 2, 3, 4]).unwrap();
        let report = check_class_sizes(&g, 2, &phi).unwrap();
        assert_eq!(report.counts, vec![2, 2, 2, 2]);
        assert!(report.is_within_cap());

        let corrupted = StrongColoring::new(vec![1, 1, 1, 1, 1, 2, 3, 4]).unwrap();
        let report = check_class_sizes(&g, 2, &corrupted).unwrap();
        assert_eq!(report.offending, vec![1]);
    }
}
