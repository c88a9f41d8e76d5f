//! Deterministic pseudo-random points for genericity arguments.
//!
//! Every "for x in a non empty open subset" claim is realized at desk scale
//! by sampling seeded integer points and retrying. The generator is a fixed
//! splitmix64 so identical seeds give identical reports on every platform;
//! there is no global state.

use crate::rat::Rat;

/// Default seed used by the CLI and the verification pipelines.
pub const DEFAULT_SEED: u64 = 271828;

/// splitmix64; small, stable, and good enough for picking generic points.
#[derive(Clone, Debug)]
pub struct SeededRng {
    state: u64,
}

impl SeededRng {
    pub fn new(seed: u64) -> Self {
        SeededRng { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E3779B97F4A7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58476D1CE4E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D049BB133111EB);
        z ^ (z >> 31)
    }

    /// Uniform integer in `[lo, hi]` (inclusive).
    pub fn int_in(&mut self, lo: i64, hi: i64) -> i64 {
        assert!(lo <= hi);
        let span = (hi - lo + 1) as u64;
        lo + (self.next_u64() % span) as i64
    }

    /// A random integer point with coordinates in `[-999, 999]`.
    pub fn point(&mut self, dim: usize) -> Vec<Rat> {
        (0..dim)
            .map(|_| Rat::from_int(self.int_in(-999, 999)))
            .collect()
    }

    /// A random nonzero rational vector with small integer entries, used for
    /// basis changes and linear combinations.
    pub fn small_vector(&mut self, dim: usize) -> Vec<Rat> {
        loop {
            let v: Vec<Rat> = (0..dim)
                .map(|_| Rat::from_int(self.int_in(-9, 9)))
                .collect();
            if v.iter().any(|c| !c.is_zero()) {
                return v;
            }
        }
    }
}
