//! Deterministic RNG derivation shared by code construction and the channel.

use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Derives an independent ChaCha stream from a seed, a stream index and a
/// single-byte domain tag, so distinct uses of the same seed never collide.
pub(crate) fn seeded_rng(seed: u64, stream: u64, tag: u8) -> ChaCha8Rng {
    let mut key = [0u8; 32];
    key[..8].copy_from_slice(&seed.to_le_bytes());
    key[8..16].copy_from_slice(&stream.to_le_bytes());
    key[16] = tag;
    ChaCha8Rng::from_seed(key)
}
