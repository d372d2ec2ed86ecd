use rand_chacha::ChaCha20Rng;
use rand_core::{RngCore, SeedableRng};

/// Deterministic random stream: ChaCha20 keyed from a 64-bit seed.
///
/// Every variate transform is written out here rather than pulled from a
/// distributions crate, so the exact draw sequence is pinned: golden outputs
/// stay bit-identical across platforms and dependency upgrades.
pub struct SeedStream {
    rng: ChaCha20Rng,
}

impl SeedStream {
    pub fn new(seed: u64) -> Self {
        Self {
            rng: ChaCha20Rng::seed_from_u64(seed),
        }
    }

    /// Uniform on [0, 1): the top 53 bits of one 64-bit draw.
    pub fn uniform(&mut self) -> f64 {
        const SCALE: f64 = 1.0 / (1u64 << 53) as f64;
        (self.rng.next_u64() >> 11) as f64 * SCALE
    }

    /// Uniform on (0, 1]: shifted variant, safe as a log argument.
    fn uniform_open_closed(&mut self) -> f64 {
        const SCALE: f64 = 1.0 / (1u64 << 53) as f64;
        ((self.rng.next_u64() >> 11) + 1) as f64 * SCALE
    }

    /// Standard normal via the Box-Muller cosine branch.
    ///
    /// Consumes exactly two uniforms per call; the sine companion is discarded
    /// on purpose so the draw count per variate is fixed (no rejection, no
    /// cached state, hence no platform-dependent branch counts).
    pub fn normal(&mut self) -> f64 {
        let u1 = self.uniform_open_closed();
        let u2 = self.uniform();
        (-2.0 * u1.ln()).sqrt() * (2.0 * std::f64::consts::PI * u2).cos()
    }

    /// Categorical index by inverse CDF over cumulative weights.
    ///
    /// Weights must be nonnegative and sum to ~1. Zero-weight entries are
    /// never selected; boundary ties resolve toward the lower index. Consumes
    /// exactly one uniform.
    pub fn categorical(&mut self, weights: &[f64]) -> usize {
        let u = self.uniform();
        let mut cum = 0.0;
        let mut last_positive = 0;
        for (g, &w) in weights.iter().enumerate() {
            if w > 0.0 {
                cum += w;
                last_positive = g;
                if u <= cum {
                    return g;
                }
            }
        }
        // Cumulative rounding can leave u just above the final sum.
        last_positive
    }
}
