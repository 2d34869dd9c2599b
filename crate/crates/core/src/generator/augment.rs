use rand::seq::SliceRandom;
use rand::Rng;

use super::Step;
use crate::error::{Error, Result};
use crate::graph::{BipartiteGraph, EdgeId};
use crate::rng::StdRng;

/// One degree level of the construction: a `(k−1)`-regular base graph plus
/// the added edge set `A`.
///
/// Every vertex has degree `k − 1` ("low") or `k` ("high"). Distances are
/// measured in the current graph `G + A`.
#[derive(Clone, Debug)]
pub struct AugmentState {
    graph: BipartiteGraph,
    added: Vec<EdgeId>,
    k: usize,
    girth: usize,
}

impl AugmentState {
    /// Starts a level with `A = ∅`.
    pub fn new(base: BipartiteGraph, k: usize, girth: usize) -> Result<Self> {
        AugmentState::with_added(base, &[], k, girth)
    }

    /// Starts a level from `base` with the side-local pairs `added` already in `A`.
    pub fn with_added(
        base: BipartiteGraph,
        added: &[(usize, usize)],
        k: usize,
        girth: usize,
    ) -> Result<Self> {
        if k < 3 || girth < 3 {
            return Err(Error::invalid(format!(
                "augmentation needs k >= 3 and g >= 3, got k = {k}, g = {girth}"
            )));
        }
        if base.n_left() != base.n_right() {
            return Err(Error::invalid("sides differ in size"));
        }
        base.check_regular(k - 1)?;
        let mut graph = base;
        let mut ids = Vec::with_capacity(added.len());
        for &(x, y) in added {
            ids.push(graph.add_edge(x, y)?);
        }
        if let Some(v) = (0..graph.vertex_count()).find(|&v| graph.degree(v) > k) {
            return Err(Error::invalid(format!(
                "vertex {v} has degree {} > {k}",
                graph.degree(v)
            )));
        }
        if !graph.girth_at_least(girth) {
            return Err(Error::invalid(format!(
                "girth {} is below {girth}",
                graph.girth()
            )));
        }
        Ok(AugmentState {
            graph,
            added: ids,
            k,
            girth,
        })
    }

    pub fn graph(&self) -> &BipartiteGraph {
        &self.graph
    }

    pub fn into_graph(self) -> BipartiteGraph {
        self.graph
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn girth_target(&self) -> usize {
        self.girth
    }

    pub fn added(&self) -> &[EdgeId] {
        &self.added
    }

    /// Side-local `(x, y)` pairs of `A`.
    pub fn added_pairs(&self) -> Vec<(usize, usize)> {
        self.added
            .iter()
            .map(|&e| self.graph.edge_xy(e).expect("A holds live edges"))
            .collect()
    }

    fn x_with_degree(&self, d: usize) -> Vec<usize> {
        (0..self.graph.n_left())
            .filter(|&x| self.graph.degree(self.graph.x_vertex(x)) == d)
            .collect()
    }

    fn y_with_degree(&self, d: usize) -> Vec<usize> {
        (0..self.graph.n_right())
            .filter(|&y| self.graph.degree(self.graph.y_vertex(y)) == d)
            .collect()
    }

    pub fn x_low(&self) -> Vec<usize> {
        self.x_with_degree(self.k - 1)
    }

    pub fn x_high(&self) -> Vec<usize> {
        self.x_with_degree(self.k)
    }

    pub fn y_low(&self) -> Vec<usize> {
        self.y_with_degree(self.k - 1)
    }

    pub fn y_high(&self) -> Vec<usize> {
        self.y_with_degree(self.k)
    }

    pub fn is_complete(&self) -> bool {
        self.x_low().is_empty()
    }

    /// BFS depth that separates "distance <= g − 2" from "distance >= g − 1".
    fn near_depth(&self) -> usize {
        self.girth - 2
    }

    /// Some `x ∈ X_low`, `y ∈ Y_low` at distance at least `g − 1`.
    ///
    /// X_low is scanned in random order; the first vertex with a far low
    /// partner is paired with a uniformly random such partner.
    pub fn find_distant_low_pair(&self, rng: &mut StdRng) -> Option<(usize, usize)> {
        let mut x_low = self.x_low();
        let y_low = self.y_low();
        x_low.shuffle(rng);
        for x in x_low {
            let near = self
                .graph
                .distances_from(&[self.graph.x_vertex(x)], self.near_depth())
                .expect("vertex in range");
            let far: Vec<usize> = y_low
                .iter()
                .copied()
                .filter(|&y| !near.is_reached(self.graph.y_vertex(y)))
                .collect();
            if !far.is_empty() {
                return Some((x, far[rng.gen_range(0..far.len())]));
            }
        }
        None
    }

    /// An edge `x_h y_h ∈ A` with both endpoints at distance at least
    /// `g − 1` from both `x_l` and `y_l`.
    ///
    /// Above the size bound such an edge always exists, so failing to find
    /// one is reported as an invariant violation.
    pub fn find_swap_edge(
        &self,
        x_l: usize,
        y_l: usize,
        rng: &mut StdRng,
    ) -> Result<(usize, usize)> {
        if self.added.is_empty() {
            return Err(Error::invalid("swap needs a non-empty added set"));
        }
        let near = self.graph.distances_from(
            &[self.graph.x_vertex(x_l), self.graph.y_vertex(y_l)],
            self.near_depth(),
        )?;
        let mut order: Vec<usize> = (0..self.added.len()).collect();
        order.shuffle(rng);
        for i in order {
            let (u, v) = self.graph.endpoints(self.added[i])?;
            if !near.is_reached(u) && !near.is_reached(v) {
                return self.graph.edge_xy(self.added[i]);
            }
        }
        Err(Error::InvariantViolated(format!(
            "no added edge is at distance >= {} from x{x_l}, y{y_l} (|A| = {})",
            self.girth - 1,
            self.added.len()
        )))
    }

    fn require_low(&self, x: usize, y: usize) -> Result<()> {
        if x >= self.graph.n_left() || y >= self.graph.n_right() {
            return Err(Error::invalid(format!("pair (x{x}, y{y}) out of range")));
        }
        let dx = self.graph.degree(self.graph.x_vertex(x));
        let dy = self.graph.degree(self.graph.y_vertex(y));
        if dx != self.k - 1 || dy != self.k - 1 {
            return Err(Error::invalid(format!(
                "x{x} (degree {dx}) and y{y} (degree {dy}) must both be low"
            )));
        }
        Ok(())
    }

    /// Fails if some cycle through `e` is shorter than the target girth.
    fn check_new_edge(&self, e: EdgeId) -> Result<()> {
        match self.graph.short_cycle_through(e, self.girth)? {
            None => Ok(()),
            Some(len) => {
                let (x, y) = self.graph.edge_xy(e)?;
                Err(Error::InvariantViolated(format!(
                    "edge (x{x}, y{y}) closes a cycle of length {len} < {}",
                    self.girth
                )))
            }
        }
    }

    /// Adds `x y` to `A`; requires both low and at distance `>= g − 1`.
    pub fn apply_add(&mut self, x: usize, y: usize) -> Result<()> {
        self.require_low(x, y)?;
        let near = self
            .graph
            .distances_from(&[self.graph.x_vertex(x)], self.near_depth())?;
        if near.is_reached(self.graph.y_vertex(y)) {
            return Err(Error::invalid(format!(
                "x{x} and y{y} are closer than {}",
                self.girth - 1
            )));
        }
        let e = self.graph.add_edge(x, y)?;
        if let Err(err) = self.check_new_edge(e) {
            self.graph.remove_edge(e)?;
            return Err(err);
        }
        self.added.push(e);
        Ok(())
    }

    /// Replaces `x_h y_h ∈ A` by `x_l y_h` and `x_h y_l`.
    ///
    /// Degrees of `x_h`, `y_h` are unchanged, `x_l` and `y_l` become high,
    /// and `|A|` grows by one. The girth is re-checked around both new edges.
    pub fn apply_swap(&mut self, x_l: usize, y_l: usize, x_h: usize, y_h: usize) -> Result<()> {
        self.require_low(x_l, y_l)?;
        let old = self
            .graph
            .xy_edge(x_h, y_h)
            .ok_or_else(|| Error::invalid(format!("(x{x_h}, y{y_h}) is not an edge")))?;
        let slot = self
            .added
            .iter()
            .position(|&e| e == old)
            .ok_or_else(|| Error::invalid(format!("(x{x_h}, y{y_h}) is not in A")))?;
        let near = self.graph.distances_from(
            &[self.graph.x_vertex(x_l), self.graph.y_vertex(y_l)],
            self.near_depth(),
        )?;
        if near.is_reached(self.graph.x_vertex(x_h)) || near.is_reached(self.graph.y_vertex(y_h)) {
            return Err(Error::invalid(format!(
                "(x{x_h}, y{y_h}) is closer than {} to x{x_l} or y{y_l}",
                self.girth - 1
            )));
        }

        self.graph.remove_edge(old)?;
        let first = self.graph.add_edge(x_l, y_h)?;
        let second = self.graph.add_edge(x_h, y_l)?;
        let checked = self
            .check_new_edge(first)
            .and_then(|()| self.check_new_edge(second));
        if let Err(err) = checked {
            self.graph.remove_edge(first)?;
            self.graph.remove_edge(second)?;
            let restored = self.graph.add_edge(x_h, y_h)?;
            self.added[slot] = restored;
            return Err(err);
        }
        self.added[slot] = first;
        self.added.push(second);
        Ok(())
    }

    /// Performs one growth step, or returns `None` if every vertex is high.
    pub fn step(&mut self, rng: &mut StdRng) -> Result<Option<Step>> {
        if self.is_complete() {
            return Ok(None);
        }
        if let Some((x, y)) = self.find_distant_low_pair(rng) {
            self.apply_add(x, y)?;
            return Ok(Some(Step::Add { x, y }));
        }
        let x_low = self.x_low();
        let y_low = self.y_low();
        let x_l = x_low[rng.gen_range(0..x_low.len())];
        let y_l = y_low[rng.gen_range(0..y_low.len())];
        let (x_h, y_h) = self.find_swap_edge(x_l, y_l, rng)?;
        self.apply_swap(x_l, y_l, x_h, y_h)?;
        Ok(Some(Step::Swap { x_h, y_h, x_l, y_l }))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generator::base_cycle;
    use crate::rng::seeded;

    #[test]
    fn ten_cycle_has_a_distant_pair() {
        let state = AugmentState::new(base_cycle(5).unwrap(), 3, 4).unwrap();
        let mut rng = seeded(3);
        let (x, y) = state.find_distant_low_pair(&mut rng).unwrap();
        let d = state
            .graph()
            .distances_from(&[state.graph().x_vertex(x)], 10)
            .unwrap();
        assert!(d.distance(state.graph().y_vertex(y)).unwrap() >= 3);
    }

    #[test]
    fn girth_three_only_needs_non_adjacency() {
        let state = AugmentState::new(base_cycle(2).unwrap(), 3, 3).unwrap();
        // C4: every x is adjacent to every y, so no pair is at distance >= 2
        let mut rng = seeded(0);
        assert!(state.find_distant_low_pair(&mut rng).is_none());
        let state = AugmentState::new(base_cycle(3).unwrap(), 3, 3).unwrap();
        let (x, y) = state.find_distant_low_pair(&mut rng).unwrap();
        assert!(state.graph().xy_edge(x, y).is_none());
    }

    #[test]
    fn empty_added_set_is_a_precondition_violation() {
        let state = AugmentState::new(base_cycle(3).unwrap(), 3, 4).unwrap();
        let mut rng = seeded(0);
        assert!(matches!(
            state.find_swap_edge(0, 0, &mut rng),
            Err(Error::InvalidArgument(_))
        ));
    }

    #[test]
    fn swap_bookkeeping() {
        // C20 plus A = {x0 y5}; x7 and y8 are both at distance >= 3 from x0 and y5
        let base = base_cycle(10).unwrap();
        let mut state = AugmentState::with_added(base, &[(0, 5)], 3, 4).unwrap();
        let before = state.added().len();
        assert!(state.x_high().contains(&0) && state.y_high().contains(&5));
        state
            .apply_swap(7, 8, 0, 5)
            .unwrap_or_else(|e| panic!("{e}"));
        assert_eq!(state.added().len(), before + 1);
        assert!(state.x_high().contains(&7));
        assert!(state.y_high().contains(&8));
        assert!(!state.x_low().contains(&7));
        assert_eq!(state.graph().degree(state.graph().x_vertex(0)), 3);
        assert_eq!(state.graph().degree(state.graph().y_vertex(5)), 3);
        assert!(state.graph().girth_at_least(4));
        let mut pairs = state.added_pairs();
        pairs.sort_unstable();
        assert_eq!(pairs, vec![(0, 8), (7, 5)]);
    }

    #[test]
    fn rejects_swap_against_near_edge() {
        let base = base_cycle(10).unwrap();
        let mut state = AugmentState::with_added(base, &[(0, 5)], 3, 6).unwrap();
        // x1 is adjacent to y0 which neighbors x0
        let err = state.apply_swap(1, 1, 0, 5).unwrap_err();
        assert!(matches!(err, Error::InvalidArgument(_)));
        assert_eq!(state.added().len(), 1);
    }
}
