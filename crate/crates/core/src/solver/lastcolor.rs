//! Colorings with `2k` colors that use the last color as little as possible.

use serde::Serialize;

use super::budget::{Budget, Meter};
use super::coloring::StrongColoring;
use super::search::{decide, Decision, Palette};
use crate::error::{Error, Result};
use crate::graph::ConflictGraph;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum UsageStatus {
    /// The reported usage is the minimum.
    Exact,
    /// A `2k`-coloring is known but optimality was not proven in budget.
    BestFound,
    /// No strong coloring with `2k` colors exists.
    Infeasible,
    /// Budget ran out before any `2k`-coloring was found or ruled out.
    Timeout,
}

/// Where the search over usage bounds `t = start, start + 1, …` begins.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum UsageStart {
    /// `t = 0`.
    Zero,
    /// `t = m mod (2k − 1)`. Each of the other `2k − 1` classes holds at
    /// most `⌊m/(2k − 1)⌋` edges in a k-regular graph, so no smaller usage
    /// is possible.
    #[default]
    CountingFloor,
}

#[derive(Clone, Debug)]
pub struct LastColorOutcome {
    pub k: usize,
    pub m: usize,
    /// `m − (2k − 1)⌊m/(2k − 1)⌋`.
    pub cap: usize,
    pub status: UsageStatus,
    /// Usage of color `2k` in `coloring`.
    pub usage: Option<usize>,
    pub coloring: Option<StrongColoring>,
    pub nodes: u64,
}

impl LastColorOutcome {
    /// An exact usage above the cap.
    pub fn exceeds_cap(&self) -> bool {
        self.status == UsageStatus::Exact && self.usage.is_some_and(|u| u > self.cap)
    }
}

/// Checks that the source graph behind `cg` is k-regular.
fn check_source_regular(cg: &ConflictGraph, k: usize) -> Result<()> {
    if !cg.has_source_structure() {
        return Err(Error::invalid(
            "conflict graph has no source graph to check regularity",
        ));
    }
    for v in 0..cg.source_vertex_count() {
        let d = cg.star(v).len();
        if d != k {
            return Err(Error::NotRegular {
                k,
                vertex: v,
                degree: d,
            });
        }
    }
    Ok(())
}

/// Relabels so the smallest class gets color `colors` (the last one).
fn smallest_class_last(mut phi: StrongColoring, colors: u32) -> StrongColoring {
    let mut sizes = phi.class_sizes();
    sizes.resize(colors as usize, 0);
    let smallest = (0..colors as usize)
        .min_by_key(|&i| (sizes[i], std::cmp::Reverse(i)))
        .expect("at least one color") as u32
        + 1;
    let map: Vec<u32> = (1..=colors)
        .map(|c| {
            if c == smallest {
                colors
            } else if c == colors {
                smallest
            } else {
                c
            }
        })
        .collect();
    phi.relabel(&map);
    phi
}

pub fn min_last_color_usage(
    cg: &ConflictGraph,
    k: usize,
    budget: Budget,
) -> Result<LastColorOutcome> {
    min_last_color_usage_from(cg, k, budget, UsageStart::default())
}

/// Minimizes the number of edges colored `2k` over strong colorings with
/// colors `1..=2k`.
///
/// First finds any `2k`-coloring and moves its smallest class to color `2k`;
/// then decides "usage <= t" for increasing `t` below that, with color `2k`
/// tried last and capped at `t`.
pub fn min_last_color_usage_from(
    cg: &ConflictGraph,
    k: usize,
    budget: Budget,
    start: UsageStart,
) -> Result<LastColorOutcome> {
    if k < 2 {
        return Err(Error::invalid(format!("k must be at least 2, got {k}")));
    }
    check_source_regular(cg, k)?;
    let m = cg.node_count();
    let window = 2 * k - 1;
    let cap = m % window;
    let colors = 2 * k as u32;
    let mut meter = Meter::new(budget);
    let mut outcome = LastColorOutcome {
        k,
        m,
        cap,
        status: UsageStatus::Timeout,
        usage: None,
        coloring: None,
        nodes: 0,
    };

    let any = Palette {
        regular: colors,
        special_cap: None,
    };
    let mut best = match decide(cg, any, &mut meter) {
        Decision::Found(phi) => {
            let mut phi = smallest_class_last(phi, colors);
            phi.verify(cg)?;
            phi
        }
        Decision::Infeasible => {
            outcome.status = UsageStatus::Infeasible;
            outcome.nodes = meter.used();
            return Ok(outcome);
        }
        Decision::Unknown => {
            outcome.nodes = meter.used();
            return Ok(outcome);
        }
    };
    let mut best_usage = best.usage(colors);
    let first = match start {
        UsageStart::Zero => 0,
        UsageStart::CountingFloor => cap,
    };
    outcome.status = UsageStatus::Exact;
    let initial_usage = best_usage;
    for t in first..initial_usage {
        let palette = Palette {
            regular: colors - 1,
            special_cap: Some(t),
        };
        match decide(cg, palette, &mut meter) {
            Decision::Found(phi) => {
                best_usage = phi.usage(colors);
                best = phi;
                break;
            }
            Decision::Infeasible => {}
            Decision::Unknown => {
                outcome.status = UsageStatus::BestFound;
                break;
            }
        }
    }
    debug_assert!(best.is_verified());
    outcome.usage = Some(best_usage);
    outcome.coloring = Some(best);
    outcome.nodes = meter.used();
    Ok(outcome)
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
    fn eight_cycle_meets_cap() {
        let cg = cycle(8).conflict_graph();
        for start in [UsageStart::Zero, UsageStart::CountingFloor] {
            let out = min_last_color_usage_from(&cg, 2, Budget::unlimited(), start).unwrap();
            assert_eq!(out.cap, 2);
            assert_eq!(out.status, UsageStatus::Exact);
            assert_eq!(out.usage, Some(2));
            let phi = out.coloring.unwrap();
            assert!(phi.is_verified());
            assert!(phi.max_color() <= 4);
            assert_eq!(phi.usage(4), 2);
        }
    }

    #[test]
    fn divisible_cycle_leaves_last_color_unused() {
        let out = min_last_color_usage(&cycle(9).conflict_graph(), 2, Budget::unlimited()).unwrap();
        assert_eq!(out.cap, 0);
        assert_eq!(out.usage, Some(0));
        assert!(!out.exceeds_cap());
    }

    #[test]
    fn five_cycle_has_no_four_coloring() {
        let out = min_last_color_usage(&cycle(5).conflict_graph(), 2, Budget::unlimited()).unwrap();
        assert_eq!(out.status, UsageStatus::Infeasible);
        assert!(out.coloring.is_none());
    }

    #[test]
    fn irregular_input_rejected() {
        let path = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        assert!(matches!(
            min_last_color_usage(&path.conflict_graph(), 2, Budget::unlimited()),
            Err(Error::NotRegular { .. })
        ));
    }
}
