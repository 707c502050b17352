//! Seeded rational samples for pointwise checks over infinite carriers.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::linalg::Vector;
use crate::racks::PairSample;
use crate::scalar::Scalar;

pub const DEFAULT_SEED: u64 = 0;

/// Deterministic source of small rationals `p/q` with `p ∈ -2..=2`, `q ∈ 1..=3`.
pub struct Sampler {
    rng: ChaCha8Rng,
}

impl Sampler {
    pub fn new(seed: u64) -> Self {
        Sampler {
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    pub fn scalar(&mut self) -> Scalar {
        let p = self.rng.gen_range(-2..=2);
        let q = self.rng.gen_range(1..=3);
        Scalar::new(p, q)
    }

    pub fn vector(&mut self, dim: usize) -> Vector {
        (0..dim).map(|_| self.scalar()).collect()
    }

    pub fn pair_sample(&mut self, dim: usize) -> PairSample {
        [
            self.vector(dim),
            self.vector(dim),
            self.vector(dim),
            self.vector(dim),
        ]
    }
}

/// `count` samples `((x1,x2),(y1,y2))` in `dim` coordinates.
pub fn pair_samples(dim: usize, count: usize, seed: u64) -> Vec<PairSample> {
    let mut s = Sampler::new(seed);
    (0..count).map(|_| s.pair_sample(dim)).collect()
}
