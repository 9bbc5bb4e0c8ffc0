//! Seedable pseudorandom generator for reproducible sampling.
//!
//! The generator is pinned to **SplitMix64** (Steele–Lea–Flood mixer): the
//! state advances by the golden-gamma constant `0x9E3779B97F4A7C15` and each
//! output is finalized with two xor-shift-multiply rounds
//! (`0xBF58476D1CE4E5B9`, `0x94D049BB133111EB`) and a final 31-bit
//! xor-shift. Fixing the exact algorithm — not just a seed — is part of the
//! reproducibility contract: corpora and sampled candidate vectors must be
//! identical across machines and releases, so acceptance suites can pin
//! their contents.

/// SplitMix64 stream.
#[derive(Clone, Debug)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> SplitMix64 {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Uniform-enough draw in [0, bound) by reduction; bounds here are tiny
    /// (single digits), so the modulo bias is far below any pinned value's
    /// sensitivity.
    pub fn next_below(&mut self, bound: u64) -> u64 {
        assert!(bound > 0, "bound must be positive");
        self.next_u64() % bound
    }

    /// Derives an independent stream deterministically from this one's seed
    /// space, for per-configuration substreams.
    pub fn derive(&mut self) -> SplitMix64 {
        SplitMix64::new(self.next_u64())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pinned_first_outputs_for_seed_42() {
        // Frozen reference values for the documented algorithm; any change
        // to the mixer breaks corpus reproducibility and must show up here.
        let mut rng = SplitMix64::new(42);
        let first: Vec<u64> = (0..4).map(|_| rng.next_u64()).collect();
        assert_eq!(
            first,
            vec![
                13679457532755275413,
                2949826092126892291,
                5139283748462763858,
                6349198060258255764,
            ]
        );
    }

    #[test]
    fn streams_are_reproducible() {
        let mut a = SplitMix64::new(7);
        let mut b = SplitMix64::new(7);
        for _ in 0..100 {
            assert_eq!(a.next_u64(), b.next_u64());
        }
        assert_ne!(SplitMix64::new(1).next_u64(), SplitMix64::new(2).next_u64());
    }

    #[test]
    fn bounded_draws_stay_in_range() {
        let mut rng = SplitMix64::new(3);
        for _ in 0..200 {
            assert!(rng.next_below(5) < 5);
        }
    }
}
