//! Saturation-ordered branch and bound for the k-coloring decision problem.
//!
//! Colors `1..=regular` are interchangeable, so a node may only open the
//! next unused one (canonical introduction order). An optional special
//! color `regular + 1` is tried last and may be used on at most `cap` nodes.

use super::budget::Meter;
use super::coloring::StrongColoring;
use crate::graph::ConflictGraph;

/// Outcome of a decision search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Decision {
    Found(StrongColoring),
    /// The search space was exhausted without a coloring.
    Infeasible,
    /// The budget ran out first.
    Unknown,
}

#[derive(Clone, Copy, Debug)]
pub(crate) struct Palette {
    pub regular: u32,
    pub special_cap: Option<usize>,
}

struct Engine<'a, 'm> {
    cg: &'a ConflictGraph,
    regular: u32,
    special: Option<(u32, usize)>,
    stride: usize,
    colors: Vec<u32>,
    blocked: Vec<u32>,
    used_regular: u32,
    special_used: usize,
    uncolored: usize,
    meter: &'m mut Meter,
    aborted: bool,
}

impl<'a, 'm> Engine<'a, 'm> {
    fn new(cg: &'a ConflictGraph, palette: Palette, meter: &'m mut Meter) -> Self {
        let special = palette.special_cap.map(|cap| (palette.regular + 1, cap));
        let stride = palette.regular as usize + 2;
        let n = cg.node_count();
        Engine {
            cg,
            regular: palette.regular,
            special,
            stride,
            colors: vec![0; n],
            blocked: vec![0; n * stride],
            used_regular: 0,
            special_used: 0,
            uncolored: n,
            meter,
            aborted: false,
        }
    }

    fn is_blocked(&self, v: usize, c: u32) -> bool {
        self.blocked[v * self.stride + c as usize] > 0
    }

    fn special_open(&self, v: usize) -> Option<u32> {
        match self.special {
            Some((c, cap)) if self.special_used < cap && !self.is_blocked(v, c) => Some(c),
            _ => None,
        }
    }

    fn options(&self, v: usize) -> usize {
        let reused = (1..=self.used_regular)
            .filter(|&c| !self.is_blocked(v, c))
            .count();
        reused
            + usize::from(self.used_regular < self.regular)
            + usize::from(self.special_open(v).is_some())
    }

    /// Uncolored node with the fewest options; ties go to higher conflict
    /// degree, then lower index.
    fn choose(&self) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize)> = None;
        for v in 0..self.colors.len() {
            if self.colors[v] != 0 {
                continue;
            }
            let opts = self.options(v);
            let better = match best {
                None => true,
                Some((b, bopts)) => {
                    opts < bopts || (opts == bopts && self.cg.degree(v) > self.cg.degree(b))
                }
            };
            if better {
                best = Some((v, opts));
                if opts == 0 {
                    break;
                }
            }
        }
        best
    }

    fn assign(&mut self, v: usize, c: u32) {
        self.colors[v] = c;
        self.uncolored -= 1;
        if c == self.used_regular + 1 && c <= self.regular {
            self.used_regular = c;
        }
        if self.special.is_some_and(|(s, _)| s == c) {
            self.special_used += 1;
        }
        let cg = self.cg;
        for w in cg.neighbors(v) {
            self.blocked[w * self.stride + c as usize] += 1;
        }
    }

    fn unassign(&mut self, v: usize, fresh: bool) {
        let c = self.colors[v];
        self.colors[v] = 0;
        self.uncolored += 1;
        if fresh {
            self.used_regular -= 1;
        }
        if self.special.is_some_and(|(s, _)| s == c) {
            self.special_used -= 1;
        }
        let cg = self.cg;
        for w in cg.neighbors(v) {
            self.blocked[w * self.stride + c as usize] -= 1;
        }
    }

    fn solve(&mut self) -> bool {
        if self.uncolored == 0 {
            return true;
        }
        if !self.meter.tick() {
            self.aborted = true;
            return false;
        }
        let Some((v, opts)) = self.choose() else {
            return true;
        };
        if opts == 0 {
            return false;
        }
        let mut candidates: Vec<u32> = (1..=self.used_regular)
            .filter(|&c| !self.is_blocked(v, c))
            .collect();
        if self.used_regular < self.regular {
            candidates.push(self.used_regular + 1);
        }
        if let Some(c) = self.special_open(v) {
            candidates.push(c);
        }
        for c in candidates {
            let fresh = c == self.used_regular + 1 && c <= self.regular;
            self.assign(v, c);
            if self.solve() {
                return true;
            }
            self.unassign(v, fresh);
            if self.aborted {
                return false;
            }
        }
        false
    }
}

pub(crate) fn decide(cg: &ConflictGraph, palette: Palette, meter: &mut Meter) -> Decision {
    let mut engine = Engine::new(cg, palette, meter);
    if engine.solve() {
        let colors = std::mem::take(&mut engine.colors);
        let mut phi = StrongColoring::new(colors).expect("complete search assigns every node");
        let ok = phi.verify(cg).expect("coloring sized to the graph");
        assert!(ok, "search produced an improper coloring");
        Decision::Found(phi)
    } else if engine.aborted {
        Decision::Unknown
    } else {
        Decision::Infeasible
    }
}
