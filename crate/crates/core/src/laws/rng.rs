//! SplitMix64, the fixed generator behind every seeded run.
//!
//! `next` advances the state by the golden-ratio increment `0x9E3779B97F4A7C15`
//! and applies the standard finalizer. Ranges are reduced with `% n`.

#[derive(Clone, Debug)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub const GAMMA: u64 = 0x9E37_79B9_7F4A_7C15;

    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(Self::GAMMA);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Uniform-ish draw from `0..n`; `n` must be positive.
    pub fn below(&mut self, n: usize) -> usize {
        debug_assert!(n > 0);
        (self.next_u64() % n as u64) as usize
    }

    /// Seed for case `index` of a run seeded with `seed`.
    pub fn case_seed(seed: u64, index: u64) -> u64 {
        SplitMix64::new(seed.wrapping_add(index.wrapping_mul(Self::GAMMA))).next_u64()
    }
}
