use std::fmt::Write as _;

use super::{base_cycle, AugmentState};
use crate::error::{Error, Result};
use crate::graph::BipartiteGraph;

/// One accepted growth step, in side-local indices.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Step {
    Add {
        x: usize,
        y: usize,
    },
    /// Remove `x_h y_h`, add `x_l y_h` and `x_h y_l`.
    Swap {
        x_h: usize,
        y_h: usize,
        x_l: usize,
        y_l: usize,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TraceStep {
    pub step: Step,
    /// Whether the girth check after this step passed.
    pub girth_ok: bool,
}

/// Steps that raised the degree from `degree − 1` to `degree`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TraceLevel {
    pub degree: usize,
    pub steps: Vec<TraceStep>,
}

/// Full record of a [`generate`](super::generate) run.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorTrace {
    pub k: usize,
    pub g: usize,
    pub n: usize,
    pub seed: u64,
    pub levels: Vec<TraceLevel>,
}

const MAGIC: &str = "strongedge-trace 1";

impl GeneratorTrace {
    pub fn new(k: usize, g: usize, n: usize, seed: u64) -> Self {
        GeneratorTrace {
            k,
            g,
            n,
            seed,
            levels: Vec::new(),
        }
    }

    pub fn step_count(&self) -> usize {
        self.levels.iter().map(|l| l.steps.len()).sum()
    }

    pub fn swap_count(&self) -> usize {
        self.levels
            .iter()
            .flat_map(|l| &l.steps)
            .filter(|s| matches!(s.step, Step::Swap { .. }))
            .count()
    }

    /// Line-oriented text form.
    ///
    /// ```text
    /// strongedge-trace 1
    /// k 3
    /// g 5
    /// n 48
    /// seed 7
    /// level 3
    /// ADD 12 40
    /// SWAP xh yh xl yl
    /// ```
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{MAGIC}");
        let _ = writeln!(out, "k {}", self.k);
        let _ = writeln!(out, "g {}", self.g);
        let _ = writeln!(out, "n {}", self.n);
        let _ = writeln!(out, "seed {}", self.seed);
        for level in &self.levels {
            let _ = writeln!(out, "level {}", level.degree);
            for s in &level.steps {
                match s.step {
                    Step::Add { x, y } => {
                        let _ = writeln!(out, "ADD {x} {y}");
                    }
                    Step::Swap { x_h, y_h, x_l, y_l } => {
                        let _ = writeln!(out, "SWAP {x_h} {y_h} {x_l} {y_l}");
                    }
                }
            }
        }
        out
    }

    pub fn from_text(text: &str) -> Result<Self> {
        let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l.trim()));
        match lines.next() {
            Some((_, MAGIC)) => {}
            _ => return Err(Error::parse(1, format!("expected `{MAGIC}`"))),
        }
        let mut header = |key: &str| -> Result<u64> {
            let (no, line) = lines
                .next()
                .ok_or_else(|| Error::parse(0, format!("missing `{key}` line")))?;
            let mut parts = line.split_whitespace();
            if parts.next() != Some(key) {
                return Err(Error::parse(no, format!("expected `{key}`")));
            }
            parts
                .next()
                .and_then(|v| v.parse().ok())
                .ok_or_else(|| Error::parse(no, format!("bad `{key}` value")))
        };
        let k = header("k")? as usize;
        let g = header("g")? as usize;
        let n = header("n")? as usize;
        let seed = header("seed")?;
        let mut trace = GeneratorTrace::new(k, g, n, seed);

        for (no, line) in lines {
            if line.is_empty() {
                continue;
            }
            let parts: Vec<&str> = line.split_whitespace().collect();
            let nums: Vec<usize> = parts[1..]
                .iter()
                .map(|t| {
                    t.parse()
                        .map_err(|_| Error::parse(no, format!("bad number `{t}`")))
                })
                .collect::<Result<_>>()?;
            let step = match (parts[0], nums.as_slice()) {
                ("level", &[degree]) => {
                    trace.levels.push(TraceLevel {
                        degree,
                        steps: Vec::new(),
                    });
                    continue;
                }
                ("ADD", &[x, y]) => Step::Add { x, y },
                ("SWAP", &[x_h, y_h, x_l, y_l]) => Step::Swap { x_h, y_h, x_l, y_l },
                _ => return Err(Error::parse(no, format!("unrecognized line `{line}`"))),
            };
            trace
                .levels
                .last_mut()
                .ok_or_else(|| Error::parse(no, "step before any `level` line"))?
                .steps
                .push(TraceStep {
                    step,
                    girth_ok: true,
                });
        }
        Ok(trace)
    }

    /// Rebuilds the graph from the base cycle by applying every step.
    ///
    /// After each step the full girth and the degree cap are re-checked from
    /// scratch, independently of the per-edge checks made during generation.
    pub fn replay(&self) -> Result<BipartiteGraph> {
        let mut graph = base_cycle(self.n)?;
        for level in &self.levels {
            let mut state = AugmentState::new(graph, level.degree, self.g)?;
            for (i, s) in level.steps.iter().enumerate() {
                match s.step {
                    Step::Add { x, y } => state.apply_add(x, y)?,
                    Step::Swap { x_h, y_h, x_l, y_l } => state.apply_swap(x_l, y_l, x_h, y_h)?,
                }
                let g = state.graph();
                if !g.girth_at_least(self.g) {
                    return Err(Error::InvariantViolated(format!(
                        "replay: girth {} < {} after step {i} of level {}",
                        g.girth(),
                        self.g,
                        level.degree
                    )));
                }
                if g.max_degree() > level.degree {
                    return Err(Error::InvariantViolated(format!(
                        "replay: degree above {} after step {i}",
                        level.degree
                    )));
                }
            }
            graph = state.into_graph();
        }
        graph.compact();
        Ok(graph)
    }
}
