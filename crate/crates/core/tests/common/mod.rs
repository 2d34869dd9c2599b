//! Fixtures and brute-force oracles shared by the integration tests.
//!
//! The oracles deliberately avoid the library's BFS, girth and conflict-graph
//! code paths.

#![allow(dead_code)]

use rand::Rng;
use strongedge::{BipartiteGraph, Graph};

pub fn cycle(n: usize) -> Graph {
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Graph::from_edges(n, &edges).unwrap()
}

/// Path on `n` vertices.
pub fn path(n: usize) -> Graph {
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    Graph::from_edges(n, &edges).unwrap()
}

/// Star with `leaves` leaves.
pub fn star(leaves: usize) -> Graph {
    let edges: Vec<_> = (1..=leaves).map(|i| (0, i)).collect();
    Graph::from_edges(leaves + 1, &edges).unwrap()
}

pub fn k33() -> BipartiteGraph {
    let mut g = BipartiteGraph::new(3, 3).unwrap();
    for x in 0..3 {
        for y in 0..3 {
            g.add_edge(x, y).unwrap();
        }
    }
    g
}

/// The Heawood graph: a 14-cycle plus chords `2i — 2i + 5`. Even cycle
/// positions form the X side.
pub fn heawood() -> BipartiteGraph {
    let mut g = BipartiteGraph::new(7, 7).unwrap();
    let side = |v: usize| v / 2;
    for v in (0..14).step_by(2) {
        g.add_edge(side(v), side((v + 1) % 14)).unwrap();
        g.add_edge(side(v), side((v + 13) % 14)).unwrap();
        g.add_edge(side(v), side((v + 5) % 14)).unwrap();
    }
    g
}

pub fn petersen() -> Graph {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((i, i + 5));
        edges.push((i + 5, (i + 2) % 5 + 5));
    }
    Graph::from_edges(10, &edges).unwrap()
}

/// Random simple graph with at most `max_edges` edges.
pub fn random_graph(rng: &mut impl Rng, max_vertices: usize, max_edges: usize) -> Graph {
    let n = rng.gen_range(2..=max_vertices);
    let target = rng.gen_range(1..=max_edges);
    let mut g = Graph::new(n);
    for _ in 0..4 * target {
        if g.edge_count() == target {
            break;
        }
        let u = rng.gen_range(0..n);
        let v = rng.gen_range(0..n);
        if u != v && g.edge_between(u, v).is_none() {
            g.add_edge(u, v).unwrap();
        }
    }
    g
}

pub fn adjacency_matrix(g: &Graph) -> Vec<Vec<bool>> {
    let n = g.vertex_count();
    let mut m = vec![vec![false; n]; n];
    for (_, (u, v)) in g.edges() {
        m[u][v] = true;
        m[v][u] = true;
    }
    m
}

/// All-pairs hop distances by Floyd–Warshall; `usize::MAX` if unreachable.
pub fn all_pairs(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.vertex_count();
    let adj = adjacency_matrix(g);
    let inf = usize::MAX / 4;
    let mut d = vec![vec![inf; n]; n];
    for i in 0..n {
        d[i][i] = 0;
        for j in 0..n {
            if adj[i][j] {
                d[i][j] = 1;
            }
        }
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if d[i][k] + d[k][j] < d[i][j] {
                    d[i][j] = d[i][k] + d[k][j];
                }
            }
        }
    }
    for row in &mut d {
        for x in row.iter_mut() {
            if *x >= inf {
                *x = usize::MAX;
            }
        }
    }
    d
}

/// Shortest cycle length by enumerating simple cycles from each minimum
/// vertex. Exponential; small graphs only.
pub fn brute_girth(g: &Graph) -> Option<usize> {
    let n = g.vertex_count();
    let adj = adjacency_matrix(g);
    let mut best: Option<usize> = None;
    fn dfs(
        adj: &[Vec<bool>],
        start: usize,
        at: usize,
        len: usize,
        on_path: &mut Vec<bool>,
        best: &mut Option<usize>,
    ) {
        if best.is_some_and(|b| len >= b) {
            return;
        }
        for next in 0..adj.len() {
            if !adj[at][next] {
                continue;
            }
            if next == start && len >= 2 {
                let cyc = len + 1;
                if best.is_none_or(|b| cyc < b) {
                    *best = Some(cyc);
                }
            } else if next > start && !on_path[next] {
                on_path[next] = true;
                dfs(adj, start, next, len + 1, on_path, best);
                on_path[next] = false;
            }
        }
    }
    for s in 0..n {
        let mut on_path = vec![false; n];
        on_path[s] = true;
        dfs(&adj, s, s, 0, &mut on_path, &mut best);
    }
    best
}

/// Edges as endpoint pairs in id order.
pub fn edge_list(g: &Graph) -> Vec<(usize, usize)> {
    g.edges().map(|(_, uv)| uv).collect()
}

/// Whether two distinct edges are within distance one: they share an
/// endpoint or some edge joins an endpoint of one to an endpoint of the other.
pub fn brute_conflict(adj: &[Vec<bool>], e: (usize, usize), f: (usize, usize)) -> bool {
    let ends_e = [e.0, e.1];
    let ends_f = [f.0, f.1];
    ends_e
        .iter()
        .any(|&a| ends_f.iter().any(|&b| a == b || adj[a][b]))
}

/// Exhaustive check that every proper coloring uses at least `c` colors:
/// tries every assignment of `c - 1` colors. Tiny graphs only.
pub fn no_coloring_with(g: &Graph, colors: usize) -> bool {
    let edges = edge_list(g);
    let adj = adjacency_matrix(g);
    let m = edges.len();
    if colors == 0 {
        return m > 0;
    }
    let total = (colors as u64).pow(m as u32);
    (0..total).all(|mut code| {
        let mut assign = vec![0; m];
        for a in assign.iter_mut() {
            *a = (code % colors as u64) as usize;
            code /= colors as u64;
        }
        (0..m).any(|i| {
            (i + 1..m).any(|j| assign[i] == assign[j] && brute_conflict(&adj, edges[i], edges[j]))
        })
    })
}
