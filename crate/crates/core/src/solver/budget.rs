use std::time::{Duration, Instant};

/// Limits on a search: wall-clock time and/or explored nodes.
///
/// The node limit is deterministic and is what reproducible runs should use.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Budget {
    pub time: Option<Duration>,
    pub nodes: Option<u64>,
}

impl Budget {
    pub fn unlimited() -> Self {
        Budget::default()
    }

    pub fn nodes(limit: u64) -> Self {
        Budget {
            time: None,
            nodes: Some(limit),
        }
    }

    pub fn time(limit: Duration) -> Self {
        Budget {
            time: Some(limit),
            nodes: None,
        }
    }
}

/// Running account against a [`Budget`], shared across consecutive searches.
#[derive(Debug)]
pub(crate) struct Meter {
    started: Instant,
    deadline: Option<Instant>,
    node_limit: Option<u64>,
    used: u64,
}

impl Meter {
    pub(crate) fn new(budget: Budget) -> Self {
        let started = Instant::now();
        Meter {
            started,
            deadline: budget.time.map(|d| started + d),
            node_limit: budget.nodes,
            used: 0,
        }
    }

    /// Charges one search node. Returns `false` once the budget is spent.
    pub(crate) fn tick(&mut self) -> bool {
        if self.node_limit.is_some_and(|limit| self.used >= limit) {
            return false;
        }
        self.used += 1;
        if self.used.is_multiple_of(1024) {
            if let Some(deadline) = self.deadline {
                if Instant::now() >= deadline {
                    self.node_limit = Some(self.used);
                    return false;
                }
            }
        }
        true
    }

    pub(crate) fn used(&self) -> u64 {
        self.used
    }

    pub(crate) fn elapsed(&self) -> Duration {
        self.started.elapsed()
    }
}
