//! Strong edge-coloring as vertex coloring of the conflict graph.

mod brute;
mod budget;
mod coloring;
mod exact;
mod greedy;
mod lastcolor;
mod search;

pub use brute::{brute_force_chi_s, BRUTE_FORCE_MAX_EDGES};
pub use budget::Budget;
pub use coloring::{verify, verify_on_graph, ColoringFile, StrongColoring};
pub use exact::{
    class_size_lower_bound, clique_lower_bound, exact_chi_s, find_coloring, SolveOutcome,
    SolveStatus,
};
pub use greedy::{greedy_color, OrderPolicy};
pub use lastcolor::{
    min_last_color_usage, min_last_color_usage_from, LastColorOutcome, UsageStart, UsageStatus,
};
pub use search::Decision;
