//! Seeded randomness shared by the generator and the solver.
//!
//! All randomized choices draw from ChaCha8 seeded through
//! `SeedableRng::seed_from_u64`, which is specified independently of the
//! platform, so a seed reproduces the same run everywhere.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub type StdRng = ChaCha8Rng;

pub fn seeded(seed: u64) -> StdRng {
    ChaCha8Rng::seed_from_u64(seed)
}
