use rand::seq::SliceRandom;

use super::coloring::StrongColoring;
use crate::graph::ConflictGraph;
use crate::rng::seeded;

/// Order in which [`greedy_color`] visits nodes.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum OrderPolicy {
    /// Edge id order.
    Natural,
    /// Decreasing conflict degree.
    LargestFirst,
    /// Seeded random permutation.
    Random,
    /// Dynamic: most distinct neighbor colors first (DSATUR).
    #[default]
    Saturation,
}

/// First-fit coloring in the given order. Always proper.
pub fn greedy_color(cg: &ConflictGraph, policy: OrderPolicy, seed: u64) -> StrongColoring {
    let n = cg.node_count();
    let mut colors = vec![0u32; n];
    match policy {
        OrderPolicy::Saturation => saturation(cg, &mut colors),
        _ => {
            let mut order: Vec<usize> = (0..n).collect();
            match policy {
                OrderPolicy::LargestFirst => {
                    order.sort_by_key(|&v| (std::cmp::Reverse(cg.degree(v)), v))
                }
                OrderPolicy::Random => order.shuffle(&mut seeded(seed)),
                _ => {}
            }
            for v in order {
                colors[v] = first_fit(cg, &colors, v);
            }
        }
    }
    let mut phi = StrongColoring::new(colors).expect("every node colored");
    let ok = phi.verify(cg).expect("coloring sized to the graph");
    debug_assert!(ok, "first-fit produced an improper coloring");
    phi
}

fn first_fit(cg: &ConflictGraph, colors: &[u32], v: usize) -> u32 {
    let mut taken: Vec<u32> = cg
        .neighbors(v)
        .map(|w| colors[w])
        .filter(|&c| c > 0)
        .collect();
    taken.sort_unstable();
    taken.dedup();
    let mut c = 1;
    for t in taken {
        if t == c {
            c += 1;
        } else if t > c {
            break;
        }
    }
    c
}

fn saturation(cg: &ConflictGraph, colors: &mut [u32]) {
    let n = cg.node_count();
    // distinct neighbor colors, kept as sorted small vectors
    let mut seen: Vec<Vec<u32>> = vec![Vec::new(); n];
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| colors[v] == 0)
            .max_by_key(|&v| (seen[v].len(), cg.degree(v), std::cmp::Reverse(v)))
            .expect("an uncolored node remains");
        let c = first_fit(cg, colors, v);
        colors[v] = c;
        for w in cg.neighbors(v) {
            if let Err(pos) = seen[w].binary_search(&c) {
                seen[w].insert(pos, c);
            }
        }
    }
}
