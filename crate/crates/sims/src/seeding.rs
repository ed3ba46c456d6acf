//! Counter-based substream seeding.
//!
//! Every replicate gets its own generator, seeded by a strong 64-bit hash of
//! (master seed, stream index). Results therefore do not depend on how the
//! replicates are scheduled across threads: replicate `r` always consumes the
//! stream derived from `substream_seed(master, r)` and nothing else.

use rand_xoshiro::rand_core::SeedableRng;
use rand_xoshiro::Xoshiro256PlusPlus;

/// Name of the generator algorithm, echoed into every result for provenance.
pub const RNG_LABEL: &str = "xoshiro256++";

const GAMMA: u64 = 0x9E37_79B9_7F4A_7C15;

/// splitmix64 finalizer: a bijective avalanche mix on 64 bits.
fn mix(mut z: u64) -> u64 {
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// The `stream`-th output of a splitmix64 sequence started at `master`.
///
/// For a fixed master the map `stream -> seed` is injective (the finalizer is
/// a bijection applied to distinct states), so substreams never collide.
pub fn substream_seed(master: u64, stream: u64) -> u64 {
    mix(master.wrapping_add(stream.wrapping_add(1).wrapping_mul(GAMMA)))
}

/// Fresh generator for one replicate of an experiment.
pub fn replicate_rng(master: u64, replicate: u64) -> Xoshiro256PlusPlus {
    Xoshiro256PlusPlus::seed_from_u64(substream_seed(master, replicate))
}
