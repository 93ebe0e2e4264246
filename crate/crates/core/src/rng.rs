//! Seeded, labeled random streams.
//!
//! Generator `hyperramsey-chacha20-v1`: the stream for `(seed, label)` is
//! ChaCha20 keyed with `SHA-256("hyperramsey-chacha20-v1" || 0x00 || label ||
//! 0x00 || seed as little-endian u64)`. Bounded integers use Lemire's
//! multiply-and-reject on `next_u64`. Both steps are fixed here rather than
//! delegated to a distribution crate, so artifact files regenerate
//! bit-identically across platforms and dependency upgrades.

use rand_chacha::ChaCha20Rng;
use rand_core::{RngCore, SeedableRng};
use sha2::{Digest, Sha256};

pub const GENERATOR_NAME: &str = "hyperramsey-chacha20-v1";

pub struct Stream {
    rng: ChaCha20Rng,
}

impl Stream {
    pub fn new(seed: u64, label: &str) -> Self {
        let mut h = Sha256::new();
        h.update(GENERATOR_NAME.as_bytes());
        h.update([0u8]);
        h.update(label.as_bytes());
        h.update([0u8]);
        h.update(seed.to_le_bytes());
        let key: [u8; 32] = h.finalize().into();
        Stream {
            rng: ChaCha20Rng::from_seed(key),
        }
    }

    /// A child stream whose label extends this one's conceptual label.
    pub fn derive(seed: u64, label: &str, index: u64) -> Self {
        Stream::new(seed, &format!("{label}/{index}"))
    }

    #[inline]
    pub fn next_u64(&mut self) -> u64 {
        self.rng.next_u64()
    }

    /// Uniform integer in `0..n`. Panics if `n == 0`.
    pub fn below(&mut self, n: u64) -> u64 {
        assert!(n > 0, "empty range");
        let threshold = n.wrapping_neg() % n;
        loop {
            let m = (self.next_u64() as u128) * (n as u128);
            if (m as u64) >= threshold {
                return (m >> 64) as u64;
            }
        }
    }

    /// Uniform float in `[0, 1)` with 53 bits of precision.
    pub fn unit(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    pub fn shuffle<T>(&mut self, xs: &mut [T]) {
        for i in (1..xs.len()).rev() {
            let j = self.below(i as u64 + 1) as usize;
            xs.swap(i, j);
        }
    }
}
