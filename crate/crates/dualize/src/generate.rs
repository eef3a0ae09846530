//! Seeded random matrix generation.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::Error;
use crate::matrix::BoolMatrix;

/// Parameters for random matrix generation: i.i.d. Bernoulli(density)
/// entries, optionally redrawing all-zero rows.
#[derive(Debug, Clone, PartialEq)]
pub struct GenSpec {
    pub m: usize,
    pub n: usize,
    pub density: f64,
    pub forbid_zero_rows: bool,
    pub seed: u64,
}

impl GenSpec {
    pub fn new(m: usize, n: usize, seed: u64) -> Self {
        GenSpec {
            m,
            n,
            density: 0.5,
            forbid_zero_rows: true,
            seed,
        }
    }

    pub fn density(mut self, density: f64) -> Self {
        self.density = density;
        self
    }

    pub fn allow_zero_rows(mut self) -> Self {
        self.forbid_zero_rows = false;
        self
    }
}

/// Generates the matrix described by `spec`, deterministically in the seed.
/// Rows are drawn one at a time; with `forbid_zero_rows` an all-zero row is
/// redrawn until it has a unit entry.
pub fn generate_matrix(spec: &GenSpec) -> Result<BoolMatrix, Error> {
    if spec.m == 0 || spec.n == 0 {
        return Err(Error::InvalidShape {
            m: spec.m,
            n: spec.n,
        });
    }
    if !(spec.density > 0.0 && spec.density < 1.0) {
        return Err(Error::InvalidDensity(spec.density));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let mut rows: Vec<Vec<bool>> = Vec::with_capacity(spec.m);
    for _ in 0..spec.m {
        loop {
            let row: Vec<bool> = (0..spec.n)
                .map(|_| rng.random::<f64>() < spec.density)
                .collect();
            if row.iter().any(|&b| b) || !spec.forbid_zero_rows {
                rows.push(row);
                break;
            }
        }
    }
    BoolMatrix::from_fn(spec.m, spec.n, |i, j| rows[i - 1][j - 1])
}
