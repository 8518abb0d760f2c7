//! Deterministic samplers for base points of lines through a direction.

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::kernel::rat::{dot, int};
use crate::kernel::Rat;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SamplerKind {
    Grid,
    Random,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Sampler {
    pub kind: SamplerKind,
    pub count: usize,
    pub seed: u64,
}

impl Default for Sampler {
    fn default() -> Self {
        Sampler { kind: SamplerKind::Random, count: 200, seed: 0 }
    }
}

/// Half-width of the integer box points are drawn from.
const RADIUS: i64 = 6;

impl Sampler {
    pub fn random(count: usize, seed: u64) -> Self {
        Sampler { kind: SamplerKind::Random, count, seed }
    }

    pub fn grid(count: usize) -> Self {
        Sampler { kind: SamplerKind::Grid, count, seed: 0 }
    }

    /// Raw integer points in `[-RADIUS, RADIUS]^nvars`, an endless stream.
    pub fn integer_points(&self, nvars: usize) -> Box<dyn Iterator<Item = Vec<i64>>> {
        match self.kind {
            SamplerKind::Random => {
                let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
                Box::new(std::iter::repeat_with(move || {
                    (0..nvars).map(|_| rng.gen_range(-RADIUS..=RADIUS)).collect()
                }))
            }
            SamplerKind::Grid => {
                // Kronecker sequence on square roots of primes, rounded into the box.
                const PRIMES: [f64; 12] = [2., 3., 5., 7., 11., 13., 17., 19., 23., 29., 31., 37.];
                let offset = self.seed;
                Box::new((1u64..).map(move |k| {
                    (0..nvars)
                        .map(|i| {
                            let alpha = PRIMES[i % PRIMES.len()].sqrt() * (1 + i / PRIMES.len()) as f64;
                            let x = ((k + offset) as f64 * alpha).fract();
                            (x * (2 * RADIUS + 1) as f64).floor() as i64 - RADIUS
                        })
                        .collect()
                }))
            }
        }
    }

    /// `count` nonzero base points in the hyperplane `x·e = 0`.
    pub fn chart_points(&self, e: &[Rat]) -> Vec<Vec<Rat>> {
        let n = e.len();
        let ee = dot(e, e);
        let mut out: Vec<Vec<Rat>> = Vec::with_capacity(self.count);
        let mut tries = 0usize;
        for raw in self.integer_points(n) {
            if out.len() == self.count || tries > 100 * self.count + 1000 {
                break;
            }
            tries += 1;
            let x: Vec<Rat> = raw.iter().map(|&v| int(v)).collect();
            let c = if ee.is_zero() { Rat::zero() } else { dot(&x, e) / &ee };
            let p: Vec<Rat> = x.iter().zip(e).map(|(xi, ei)| xi - &c * ei).collect();
            if p.iter().all(|v| v.is_zero()) {
                continue;
            }
            out.push(p);
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::rat::vec_of;

    #[test]
    fn chart_points_are_orthogonal_and_reproducible() {
        let e = vec_of(&[1, 2, 0]);
        for s in [Sampler::random(50, 7), Sampler::grid(50)] {
            let pts = s.chart_points(&e);
            assert_eq!(pts.len(), 50);
            assert!(pts.iter().all(|p| dot(p, &e).is_zero()));
            assert_eq!(pts, s.chart_points(&e));
        }
        assert_ne!(Sampler::random(5, 1).chart_points(&e), Sampler::random(5, 2).chart_points(&e));
    }
}
