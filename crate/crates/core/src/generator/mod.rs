//! Construction of k-regular bipartite graphs with girth at least `g`.
//!
//! Degree is raised one level at a time starting from a Hamiltonian cycle on
//! `2n` vertices. Each level adds a perfect matching's worth of edges; an
//! edge joins two low-degree vertices when they are far enough apart, and
//! otherwise a previously added edge is split into two (see
//! [`AugmentState::apply_swap`]).

mod augment;
mod trace;

pub use augment::AugmentState;
pub use trace::{GeneratorTrace, Step, TraceLevel, TraceStep};

use crate::error::{Error, Result};
use crate::graph::BipartiteGraph;
use crate::rng::{seeded, StdRng};

/// Smallest side size for which the construction is guaranteed to succeed.
///
/// `g` for `k = 2`, otherwise `max(g, ⌈3(k−1)^(g−1) / (k−2)⌉)`.
pub fn min_n(k: usize, g: usize) -> Result<usize> {
    if k < 2 {
        return Err(Error::invalid(format!(
            "degree must be at least 2, got {k}"
        )));
    }
    if g < 3 {
        return Err(Error::invalid(format!("girth must be at least 3, got {g}")));
    }
    if k == 2 {
        return Ok(g);
    }
    let overflow = || Error::invalid(format!("bound for k={k}, g={g} overflows"));
    let exp = u32::try_from(g - 1).map_err(|_| overflow())?;
    let power = (k as u128 - 1).checked_pow(exp).ok_or_else(overflow)?;
    let numerator = power.checked_mul(3).ok_or_else(overflow)?;
    let bound = numerator.div_ceil(k as u128 - 2);
    let bound = usize::try_from(bound).map_err(|_| overflow())?;
    Ok(bound.max(g))
}

/// Smallest `n >= min_n(k, g)` with `(2k − 1) ∤ n`.
///
/// Since `gcd(k, 2k − 1) = 1`, the edge count `kn` is then also not a
/// multiple of `2k − 1`.
pub fn choose_n(k: usize, g: usize) -> Result<usize> {
    let window = 2 * k - 1;
    let mut n = min_n(k, g)?;
    while n % window == 0 {
        n += 1;
    }
    Ok(n)
}

/// The cycle `x0 y0 x1 y1 … x(n−1) y(n−1) x0` on `2n` vertices.
pub fn base_cycle(n: usize) -> Result<BipartiteGraph> {
    if n < 2 {
        return Err(Error::invalid(format!(
            "a bipartite cycle needs n >= 2, got {n}"
        )));
    }
    let mut g = BipartiteGraph::new(n, n)?;
    for i in 0..n {
        g.add_edge(i, i)?;
        g.add_edge((i + 1) % n, i)?;
    }
    Ok(g)
}

/// Knobs for [`generate_with`].
#[derive(Clone, Copy, Debug, Default)]
pub struct GenerateOptions {
    /// Accept `n < min_n(k, g)`. Failures then surface as
    /// [`Error::ConstructionFailed`] instead of an invariant violation.
    pub force: bool,
}

/// Builds a k-regular bipartite graph on `2n` vertices with girth `>= g`.
pub fn generate(
    k: usize,
    g: usize,
    n: usize,
    seed: u64,
) -> Result<(BipartiteGraph, GeneratorTrace)> {
    generate_with(k, g, n, seed, GenerateOptions::default())
}

pub fn generate_with(
    k: usize,
    g: usize,
    n: usize,
    seed: u64,
    options: GenerateOptions,
) -> Result<(BipartiteGraph, GeneratorTrace)> {
    let bound = min_n(k, g)?;
    if n < bound && !options.force {
        return Err(Error::invalid(format!(
            "n = {n} is below the guaranteed bound {bound} for k = {k}, g = {g} (use force to try anyway)"
        )));
    }
    if n < k.max(2) {
        return Err(Error::invalid(format!(
            "a {k}-regular bipartite graph needs n >= {}, got {n}",
            k.max(2)
        )));
    }
    if 2 * n < g {
        return Err(Error::invalid(format!(
            "the base cycle on {} vertices has girth below {g}",
            2 * n
        )));
    }

    let mut rng = seeded(seed);
    let mut graph = base_cycle(n)?;
    let mut trace = GeneratorTrace::new(k, g, n, seed);
    for degree in 3..=k {
        let (next, level) = augment_to_degree_with(graph, degree, g, &mut rng, options)?;
        graph = next;
        trace.levels.push(level);
    }
    graph.compact();
    Ok((graph, trace))
}

/// Raises a `(k−1)`-regular bipartite graph with girth `>= g` to a
/// `k`-regular one with girth `>= g` on the same vertex set.
///
/// A graph that is already `k`-regular is returned unchanged with an empty
/// level.
pub fn augment_to_degree(
    base: BipartiteGraph,
    k: usize,
    g: usize,
    rng: &mut StdRng,
) -> Result<(BipartiteGraph, TraceLevel)> {
    augment_to_degree_with(base, k, g, rng, GenerateOptions::default())
}

pub fn augment_to_degree_with(
    base: BipartiteGraph,
    k: usize,
    g: usize,
    rng: &mut StdRng,
    options: GenerateOptions,
) -> Result<(BipartiteGraph, TraceLevel)> {
    let mut level = TraceLevel {
        degree: k,
        steps: Vec::new(),
    };
    if base.check_regular(k).is_ok() {
        return Ok((base, level));
    }
    if k < 3 {
        return Err(Error::invalid(format!(
            "augmentation targets degree >= 3, got {k}"
        )));
    }
    let n = base.n_left();
    if base.n_right() != n {
        return Err(Error::invalid(format!(
            "sides differ in size ({} vs {})",
            n,
            base.n_right()
        )));
    }
    base.check_regular(k - 1)?;
    if !base.girth_at_least(g) {
        return Err(Error::invalid(format!(
            "input girth {} is below {g}",
            base.girth()
        )));
    }
    let bound = min_n(k, g)?;
    if n < bound && !options.force {
        return Err(Error::invalid(format!(
            "n = {n} is below the guaranteed bound {bound} for k = {k}, g = {g}"
        )));
    }

    let mut state = AugmentState::new(base, k, g)?;
    // each step grows A by one and A ends with exactly n edges
    for _ in 0..n {
        match state.step(rng) {
            Ok(Some(step)) => level.steps.push(TraceStep {
                step,
                girth_ok: true,
            }),
            Ok(None) => break,
            Err(err @ (Error::InvariantViolated(_) | Error::InvalidArgument(_)))
                if options.force =>
            {
                return Err(Error::ConstructionFailed(err.to_string()));
            }
            Err(err) => return Err(err),
        }
    }
    if !state.is_complete() {
        return Err(Error::InvariantViolated(format!(
            "degree level {k} incomplete after {n} steps"
        )));
    }
    Ok((state.into_graph(), level))
}
