//! Deterministic derivation of independent random streams.
//!
//! Every trial, game, and tree in the crate draws from a ChaCha stream keyed
//! by `(master seed, context words)`. Derivation is a pure function of those
//! inputs, so results never depend on scheduling or thread count.

use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Rng used throughout the simulation code.
pub type SimRng = ChaCha8Rng;

/// SplitMix64 finalizer, a cheap well-mixed u64 -> u64 permutation.
pub fn splitmix64(mut x: u64) -> u64 {
    x = x.wrapping_add(0x9e37_79b9_7f4a_7c15);
    let mut z = x;
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// Order-sensitive combination of context words into one stream id.
pub fn mix(parts: &[u64]) -> u64 {
    let mut h = 0x6a09_e667_f3bc_c909; // arbitrary non-zero start
    for &p in parts {
        h = splitmix64(h ^ splitmix64(p));
    }
    h
}

/// Stable 64-bit FNV-1a hash of a label, for mixing strings into stream ids.
pub fn label_hash(label: &str) -> u64 {
    let mut h = 0xcbf2_9ce4_8422_2325u64;
    for b in label.as_bytes() {
        h ^= u64::from(*b);
        h = h.wrapping_mul(0x0000_0100_0000_01b3);
    }
    splitmix64(h)
}

/// ChaCha stream keyed by the master seed with a derived stream id.
pub fn substream(seed: u64, parts: &[u64]) -> SimRng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(mix(parts));
    rng
}
