//! Seeded generator streams.
//!
//! One 64-bit seed determines every draw. Replica `i` of a batch runs on
//! ChaCha8 seeded from the seed with its stream counter set to `i`, so
//! replicas are independent and reproducible regardless of how they are
//! scheduled across threads.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Identifier recorded in output metadata.
pub const RNG_ID: &str = "chacha8-seed_from_u64-stream_per_replica";

pub type ChainRng = ChaCha8Rng;

/// Generator for replica `replica` of a run seeded with `seed`.
pub fn replica_rng(seed: u64, replica: u64) -> ChainRng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(replica);
    rng
}

/// Generator for a single (non-replicated) run.
pub fn seeded_rng(seed: u64) -> ChainRng {
    replica_rng(seed, 0)
}
