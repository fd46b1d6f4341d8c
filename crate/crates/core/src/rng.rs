//! Seeded randomness keyed by `(seed, task)`.
//!
//! ChaCha is counter based: the seed picks the key and the task index picks
//! the stream, so every shard of an experiment draws from its own sequence
//! regardless of how shards are scheduled across threads.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub type TaskRng = ChaCha8Rng;

pub fn task_rng(seed: u64, task: u64) -> TaskRng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(task);
    rng
}
