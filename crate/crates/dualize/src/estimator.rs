//! Statistical estimation of relative subtask sizes from random
//! row-submatrices, and the chi-squared test validating the estimator.
//!
//! The estimator draws `t` random r-row submatrices, fully dualizes each,
//! draws `u` irreducible coverings per submatrix uniformly with replacement,
//! and records each covering's least column index. The frequency vector of
//! those least indices estimates the relative subtask sizes of the full
//! matrix.
//!
//! Randomness comes from ChaCha8 streams: the s-th submatrix (1-based) owns
//! stream `s` of the seeded generator, so the `t` draws are independent and
//! the result does not depend on whether they run sequentially or in
//! parallel.

use std::ops::ControlFlow;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::Error;
use crate::generate::{generate_matrix, GenSpec};
use crate::matrix::{BoolMatrix, CoveringList};
use crate::oracle::exact_subtask_sizes;
use crate::runcm;
use crate::stats::chi_squared_sf;

/// Consecutive empty-submatrix redraws tolerated before giving up.
const MAX_CONSECUTIVE_DISCARDS: u64 = 1000;

/// Sampling parameters: submatrix row count `r`, submatrix count `t`,
/// coverings drawn per submatrix `u`, and the RNG seed. The sample size is
/// `N = t·u`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SampleConfig {
    pub r: usize,
    pub t: usize,
    pub u: usize,
    pub seed: u64,
}

impl SampleConfig {
    pub fn new(r: usize, t: usize, u: usize, seed: u64) -> Self {
        SampleConfig { r, t, u, seed }
    }

    pub fn sample_size(&self) -> usize {
        self.t * self.u
    }

    fn validate(&self, m: usize) -> Result<(), Error> {
        if self.r == 0 || self.r > m {
            return Err(Error::InvalidSampleConfig(format!(
                "r = {} out of range 1..={m}",
                self.r
            )));
        }
        if self.t == 0 || self.u == 0 {
            return Err(Error::InvalidSampleConfig(format!(
                "t = {} and u = {} must both be at least 1",
                self.t, self.u
            )));
        }
        Ok(())
    }
}

/// Default submatrix row count: half the rows, rounded up.
pub fn default_r(m: usize) -> usize {
    m.div_ceil(2)
}

/// The estimator output: `frequencies[j-1]` is the observed fraction of
/// sampled coverings whose least column index is j.
#[derive(Debug, Clone)]
pub struct FrequencyEstimate {
    pub frequencies: Vec<f64>,
    /// The N observed least indices, 1-based, in draw order.
    pub sample: Vec<u32>,
    pub config: SampleConfig,
    /// Row subsets redrawn because their submatrix had no irreducible
    /// covering (it contained an all-zero row).
    pub discarded: u64,
}

impl FrequencyEstimate {
    /// Estimate dump format: n lines `"j f_star_j"`.
    pub fn to_dump(&self) -> String {
        let mut out = String::new();
        for (j0, f) in self.frequencies.iter().enumerate() {
            out.push_str(&format!("{} {}\n", j0 + 1, f));
        }
        out
    }
}

/// One submatrix draw: the selected rows, the coverings drawn from its
/// dualization, and how many row subsets were discarded on the way.
pub(crate) struct StreamDraw {
    /// Read by the distribution tests; the estimate itself only needs the
    /// drawn coverings.
    #[cfg_attr(not(test), allow(dead_code))]
    pub rows: Vec<usize>,
    pub drawn: CoveringList,
    pub discarded: u64,
}

/// Uniform random r-subset of {1..m} by Floyd's algorithm; ascending.
fn floyd_subset(rng: &mut ChaCha8Rng, m: usize, r: usize) -> Vec<usize> {
    let mut chosen = vec![false; m + 1];
    let mut subset = Vec::with_capacity(r);
    for k in (m - r + 1)..=m {
        let pick = rng.random_range(1..=k);
        if chosen[pick] {
            chosen[k] = true;
            subset.push(k);
        } else {
            chosen[pick] = true;
            subset.push(pick);
        }
    }
    subset.sort_unstable();
    subset
}

/// Runs one substream: draw a row subset, dualize the submatrix, redraw on
/// empty P, then draw `u` coverings uniformly with replacement.
pub(crate) fn sample_stream(
    mat: &BoolMatrix,
    r: usize,
    u: usize,
    seed: u64,
    stream: u64,
) -> Result<StreamDraw, Error> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    let mut discarded = 0u64;
    let mut pool = CoveringList::new();
    loop {
        let rows = floyd_subset(&mut rng, mat.row_count(), r);
        let sub = mat.submatrix_from_sorted_rows(&rows);
        pool.clear();
        runcm::enumerate(&sub, |cols| {
            pool.push(cols);
            ControlFlow::Continue(())
        });
        if pool.is_empty() {
            discarded += 1;
            if discarded >= MAX_CONSECUTIVE_DISCARDS {
                return Err(Error::TooManyDiscards(discarded));
            }
            continue;
        }
        let mut drawn = CoveringList::new();
        for _ in 0..u {
            let pick = rng.random_range(0..pool.len());
            drawn.push(pool.get(pick));
        }
        return Ok(StreamDraw {
            rows,
            drawn,
            discarded,
        });
    }
}

/// Draws the least-index sample and frequency vector described by `cfg`.
///
/// The `t` submatrices are processed concurrently; each owns its RNG stream,
/// so the result is identical to a sequential run.
pub fn sample_eta(mat: &BoolMatrix, cfg: &SampleConfig) -> Result<FrequencyEstimate, Error> {
    cfg.validate(mat.row_count())?;
    let draws: Vec<Result<StreamDraw, Error>> = (1..=cfg.t as u64)
        .into_par_iter()
        .map(|stream| sample_stream(mat, cfg.r, cfg.u, cfg.seed, stream))
        .collect();
    let n = mat.col_count();
    let mut sample = Vec::with_capacity(cfg.sample_size());
    let mut discarded = 0u64;
    let mut counts = vec![0u64; n];
    for draw in draws {
        let draw = draw?;
        discarded += draw.discarded;
        for cols in draw.drawn.iter() {
            let least = cols[0];
            counts[least as usize - 1] += 1;
            sample.push(least);
        }
    }
    let total = sample.len() as f64;
    let frequencies = counts.iter().map(|&c| c as f64 / total).collect();
    Ok(FrequencyEstimate {
        frequencies,
        sample,
        config: cfg.clone(),
        discarded,
    })
}

fn check_probability_vector(v: &[f64]) -> Result<(), Error> {
    let sum: f64 = v.iter().sum();
    if (sum - 1.0).abs() > 1e-9 {
        return Err(Error::NotProbabilityVector { sum });
    }
    Ok(())
}

/// The goodness-of-fit statistic `Z = N · Σ_{j: ν_j > 0} (f*_j − ν_j)²/ν_j`.
///
/// Returns +∞ when the observed frequencies put mass on a cell where the
/// exact distribution is zero (the limit of the formula as ν_j → 0).
pub fn chi_squared_statistic(
    f_star: &[f64],
    nu: &[f64],
    n_samples: usize,
) -> Result<f64, Error> {
    if f_star.len() != nu.len() {
        return Err(Error::LengthMismatch {
            left: f_star.len(),
            right: nu.len(),
        });
    }
    check_probability_vector(f_star)?;
    check_probability_vector(nu)?;
    let mut acc = 0.0f64;
    for (&f, &v) in f_star.iter().zip(nu) {
        if v > 0.0 {
            let d = f - v;
            acc += d * d / v;
        } else if f > 0.0 {
            return Ok(f64::INFINITY);
        }
    }
    Ok(n_samples as f64 * acc)
}

/// Upper tail of the chi-squared distribution: `1 − CDF_{χ²,dof}(z)`.
/// `z = +∞` maps to exactly 0.
pub fn chi_squared_pvalue(z: f64, dof: usize) -> Result<f64, Error> {
    if dof == 0 {
        return Err(Error::ZeroDof);
    }
    if z.is_nan() || z < 0.0 {
        return Err(Error::NegativeStatistic(z));
    }
    if z.is_infinite() {
        return Ok(0.0);
    }
    Ok(chi_squared_sf(z, dof).clamp(0.0, 1.0))
}

/// Degrees of freedom used when turning Z into a p-value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum DofMode {
    /// One less than the number of cells where the exact distribution is
    /// positive. Empty cells carry no information, so this is the default.
    #[default]
    SupportMinusOne,
    /// One less than the column count, regardless of empty cells.
    ColumnsMinusOne,
}

/// A computed chi-squared test.
#[derive(Debug, Clone, PartialEq)]
pub struct ChiSquaredResult {
    pub statistic: f64,
    pub dof: usize,
    pub p_value: f64,
}

/// Computes Z and its p-value for an estimate against the exact sizes.
pub fn chi_squared_test(
    f_star: &[f64],
    nu: &[f64],
    n_samples: usize,
    mode: DofMode,
) -> Result<ChiSquaredResult, Error> {
    let statistic = chi_squared_statistic(f_star, nu, n_samples)?;
    let dof = match mode {
        DofMode::SupportMinusOne => nu.iter().filter(|&&v| v > 0.0).count().saturating_sub(1),
        DofMode::ColumnsMinusOne => nu.len().saturating_sub(1),
    }
    .max(1);
    let p_value = chi_squared_pvalue(statistic, dof)?;
    Ok(ChiSquaredResult {
        statistic,
        dof,
        p_value,
    })
}

/// One row of the validation experiment: medians over the generated
/// matrices of a shape, for one submatrix row count.
#[derive(Debug, Clone, PartialEq)]
pub struct ValidationRow {
    pub m: usize,
    pub n: usize,
    pub r: usize,
    pub median_z: f64,
    pub median_pvalue: f64,
}

/// Parameters of the estimator validation experiment.
#[derive(Debug, Clone)]
pub struct ValidationConfig {
    pub shapes: Vec<(usize, usize)>,
    pub r_values: Vec<usize>,
    pub matrices_per_shape: usize,
    pub t: usize,
    pub u: usize,
    pub density: f64,
    pub seed: u64,
}

/// Median of a nonempty list that may contain +∞ but no NaN.
fn median(values: &mut [f64]) -> f64 {
    values.sort_by(|a, b| a.partial_cmp(b).expect("no NaN in medians"));
    let k = values.len();
    if k % 2 == 1 {
        values[k / 2]
    } else {
        (values[k / 2 - 1] + values[k / 2]) / 2.0
    }
}

/// For each shape: generates matrices, computes their exact subtask sizes by
/// full dualization, samples the estimator at every `r ≤ m`, and reports the
/// median Z and p-value per (shape, r).
///
/// P-values use the literal `n − 1` degrees of freedom so the output mirrors
/// the tabulated form of the test.
pub fn validation_experiment(cfg: &ValidationConfig) -> Result<Vec<ValidationRow>, Error> {
    if cfg.matrices_per_shape == 0 {
        return Err(Error::InvalidSampleConfig(
            "matrices_per_shape must be at least 1".into(),
        ));
    }
    let mut seeder = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut rows = Vec::new();
    for &(m, n) in &cfg.shapes {
        let mut z_per_r: Vec<Vec<f64>> = vec![Vec::new(); cfg.r_values.len()];
        let mut p_per_r: Vec<Vec<f64>> = vec![Vec::new(); cfg.r_values.len()];
        for _ in 0..cfg.matrices_per_shape {
            let gen_seed: u64 = seeder.random();
            let sample_seed: u64 = seeder.random();
            let mat = generate_matrix(&GenSpec::new(m, n, gen_seed).density(cfg.density))?;
            let exact = exact_subtask_sizes(&mat);
            for (ri, &r) in cfg.r_values.iter().enumerate() {
                if r > m {
                    continue;
                }
                let estimate =
                    sample_eta(&mat, &SampleConfig::new(r, cfg.t, cfg.u, sample_seed))?;
                let test = chi_squared_test(
                    &estimate.frequencies,
                    &exact.fractions,
                    estimate.sample.len(),
                    DofMode::ColumnsMinusOne,
                )?;
                z_per_r[ri].push(test.statistic);
                p_per_r[ri].push(test.p_value);
            }
        }
        for (ri, &r) in cfg.r_values.iter().enumerate() {
            if z_per_r[ri].is_empty() {
                continue;
            }
            rows.push(ValidationRow {
                m,
                n,
                r,
                median_z: median(&mut z_per_r[ri]),
                median_pvalue: median(&mut p_per_r[ri]),
            });
        }
    }
    Ok(rows)
}

/// CSV rendering of the validation experiment.
pub fn validation_csv(rows: &[ValidationRow]) -> String {
    let mut out = String::from("shape,r,median_Z,median_pvalue\n");
    for row in rows {
        out.push_str(&format!(
            "{}x{},{},{},{:e}\n",
            row.m, row.n, row.r, row.median_z, row.median_pvalue
        ));
    }
    out
}

/// Parses the estimate dump format: n lines `"j value"`, j ascending from 1.
pub fn parse_estimate(text: &str) -> Result<Vec<f64>, crate::error::ParseEstimateError> {
    use crate::error::ParseEstimateError as E;
    let mut values = Vec::new();
    let mut expected = 1usize;
    for (li, line) in text.lines().enumerate() {
        if line.is_empty() && li > 0 {
            continue;
        }
        let mut fields = line.split_whitespace();
        let (Some(js), Some(vs), None) = (fields.next(), fields.next(), fields.next()) else {
            return Err(E::Fields { line: li + 1 });
        };
        let j: usize = js.parse().map_err(|_| E::Fields { line: li + 1 })?;
        if j != expected {
            return Err(E::IndexOrder {
                line: li + 1,
                expected,
                found: j,
            });
        }
        let v: f64 = vs.parse().map_err(|_| E::BadValue { line: li + 1 })?;
        if !v.is_finite() || v < 0.0 {
            return Err(E::BadValue { line: li + 1 });
        }
        values.push(v);
        expected += 1;
    }
    if values.is_empty() {
        return Err(E::Empty);
    }
    Ok(values)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::matrix_from_strs;
    use crate::oracle::brute_force_subtask_sizes;

    fn example() -> BoolMatrix {
        matrix_from_strs(&["1100", "0110", "0011"])
    }

    #[test]
    fn statistic_examples() {
        let nu = [1.0 / 3.0, 2.0 / 3.0];
        assert_eq!(chi_squared_statistic(&nu, &nu, 50).unwrap(), 0.0);
        let z = chi_squared_statistic(&[0.4, 0.6], &nu, 100).unwrap();
        assert!((z - 2.0).abs() < 1e-9, "z = {z}");
        let z = chi_squared_statistic(&[0.9, 0.1], &[1.0, 0.0], 10).unwrap();
        assert!(z.is_infinite());
        assert!(chi_squared_statistic(&[1.0], &[0.5, 0.5], 10).is_err());
        assert!(chi_squared_statistic(&[0.7, 0.7], &[0.5, 0.5], 10).is_err());
    }

    #[test]
    fn statistic_invariant_under_joint_permutation() {
        let f = [0.1, 0.5, 0.4];
        let nu = [0.2, 0.3, 0.5];
        let z1 = chi_squared_statistic(&f, &nu, 77).unwrap();
        let z2 = chi_squared_statistic(&[0.4, 0.1, 0.5], &[0.5, 0.2, 0.3], 77).unwrap();
        assert!((z1 - z2).abs() < 1e-12);
    }

    #[test]
    fn pvalue_examples() {
        assert_eq!(chi_squared_pvalue(0.0, 3).unwrap(), 1.0);
        assert_eq!(chi_squared_pvalue(f64::INFINITY, 3).unwrap(), 0.0);
        let p = chi_squared_pvalue(3.841, 1).unwrap();
        assert!((p - 0.05).abs() < 5e-4, "p = {p}");
        let p = chi_squared_pvalue(2.0 * 20f64.ln(), 2).unwrap();
        assert!((p - 0.05).abs() < 1e-12, "p = {p}");
        assert!(chi_squared_pvalue(1.0, 0).is_err());
        assert!(chi_squared_pvalue(-0.5, 1).is_err());
    }

    #[test]
    fn pvalue_strictly_decreasing_in_z() {
        for dof in [1usize, 2, 7, 59] {
            let mut last = chi_squared_pvalue(0.0, dof).unwrap();
            assert_eq!(last, 1.0);
            for i in 1..240 {
                let z = i as f64 * 0.25;
                let p = chi_squared_pvalue(z, dof).unwrap();
                assert!(p <= last, "dof={dof}, z={z}");
                // Strict except where f64 saturates at the tails.
                if p > 1e-12 && last < 1.0 - 1e-12 {
                    assert!(p < last, "dof={dof}, z={z}: {p} not below {last}");
                }
                last = p;
            }
        }
    }

    #[test]
    fn sample_eta_validates_config() {
        let mat = example();
        assert!(sample_eta(&mat, &SampleConfig::new(0, 1, 1, 0)).is_err());
        assert!(sample_eta(&mat, &SampleConfig::new(4, 1, 1, 0)).is_err());
        assert!(sample_eta(&mat, &SampleConfig::new(2, 0, 1, 0)).is_err());
        assert!(sample_eta(&mat, &SampleConfig::new(2, 1, 0, 0)).is_err());
    }

    #[test]
    fn sample_eta_is_deterministic() {
        let mat = example();
        let cfg = SampleConfig::new(2, 5, 7, 99);
        let a = sample_eta(&mat, &cfg).unwrap();
        let b = sample_eta(&mat, &cfg).unwrap();
        assert_eq!(a.sample, b.sample);
        assert_eq!(a.frequencies, b.frequencies);
        assert_eq!(a.discarded, b.discarded);
        let sum: f64 = a.frequencies.iter().sum();
        assert!((sum - 1.0).abs() < 1e-12);
        assert_eq!(a.sample.len(), 35);
    }

    #[test]
    fn r_equals_m_samples_exact_distribution() {
        // With r = m the only submatrix is the matrix itself, so the sample
        // is i.i.d. from the exact least-index distribution.
        let mat = example();
        let exact = brute_force_subtask_sizes(&mat).unwrap();
        let est = sample_eta(&mat, &SampleConfig::new(3, 1, 4000, 11)).unwrap();
        for (f, v) in est.frequencies.iter().zip(&exact.fractions) {
            assert!((f - v).abs() < 0.03, "f* = {f}, nu = {v}");
        }
    }

    #[test]
    fn all_ones_matrix_is_uniform() {
        let mat = matrix_from_strs(&["11111", "11111", "11111", "11111"]);
        let est = sample_eta(&mat, &SampleConfig::new(2, 10, 400, 5)).unwrap();
        for f in &est.frequencies {
            assert!((f - 0.2).abs() < 0.05, "f* = {f}");
        }
    }

    #[test]
    fn exhaustive_r2_expectation_on_example() {
        // Expected f_2(j) = mean over the three row pairs of the submatrix
        // subtask fractions; compare the sampler against it at large N.
        let mat = example();
        let mut expected = vec![0.0f64; 4];
        let pairs = [[1usize, 2], [1, 3], [2, 3]];
        for rows in &pairs {
            let sub = mat.submatrix_from_sorted_rows(rows.as_slice());
            let sizes = brute_force_subtask_sizes(&sub).unwrap();
            for (e, f) in expected.iter_mut().zip(&sizes.fractions) {
                *e += f / pairs.len() as f64;
            }
        }
        let est = sample_eta(&mat, &SampleConfig::new(2, 300, 40, 17)).unwrap();
        for (j0, (f, e)) in est.frequencies.iter().zip(&expected).enumerate() {
            // 3σ binomial bound at N = 12000.
            let sigma = (e * (1.0 - e) / 12000.0).sqrt();
            assert!(
                (f - e).abs() <= 3.0 * sigma + 1e-9,
                "j = {}: f* = {f}, expected {e}, sigma {sigma}",
                j0 + 1
            );
        }
    }

    #[test]
    fn pair_distribution_is_uniform_at_tiny_scale() {
        // The (submatrix, covering) pairs must be uniform over row subsets
        // and uniform over each P(L^w): P(pair) = 1/(3·|P(L^w)|) here.
        use std::collections::HashMap;
        let mat = example();
        let total = 10_000usize;
        let mut freq: HashMap<(Vec<usize>, Vec<u32>), usize> = HashMap::new();
        for stream in 1..=total as u64 {
            let draw = sample_stream(&mat, 2, 1, 4242, stream).unwrap();
            assert_eq!(draw.discarded, 0);
            let key = (draw.rows.clone(), draw.drawn.get(0).to_vec());
            *freq.entry(key).or_default() += 1;
        }
        // Every pair (w, H ∈ P(L^w)) must appear with its exact probability.
        let mut n_pairs = 0usize;
        for rows in [[1usize, 2], [1, 3], [2, 3]] {
            let sub = mat.submatrix_from_sorted_rows(rows.as_slice());
            let coverings = crate::oracle::brute_force_dualize(&sub).unwrap();
            for h in &coverings {
                n_pairs += 1;
                let p = 1.0 / (3.0 * coverings.len() as f64);
                let got = *freq
                    .get(&(rows.to_vec(), h.columns().to_vec()))
                    .unwrap_or(&0) as f64
                    / total as f64;
                let sigma = (p * (1.0 - p) / total as f64).sqrt();
                assert!(
                    (got - p).abs() <= 3.0 * sigma,
                    "pair ({rows:?}, {h}): got {got}, want {p}"
                );
            }
        }
        assert_eq!(freq.len(), n_pairs);
    }

    #[test]
    fn zero_row_matrix_fails_with_diagnostic() {
        // With r = m every submatrix contains the zero row, so every draw
        // is discarded until the limit trips.
        let mat = matrix_from_strs(&["1100", "0000", "0011"]);
        let err = sample_eta(&mat, &SampleConfig::new(3, 1, 1, 0)).unwrap_err();
        assert!(matches!(err, Error::TooManyDiscards(_)));
    }

    #[test]
    fn discards_are_counted_and_recovered_from() {
        // At r = 1 the subset {3} selects the all-zero row, dualizes to the
        // empty set, and must be discarded and redrawn.
        let mat = matrix_from_strs(&["1111", "1100", "0000"]);
        let est = sample_eta(&mat, &SampleConfig::new(1, 40, 5, 1)).unwrap();
        assert!(est.discarded > 0, "expected at least one discarded subset");
        let sum: f64 = est.frequencies.iter().sum();
        assert!((sum - 1.0).abs() < 1e-12);
    }

    #[test]
    fn validation_experiment_shapes_and_degenerate_r() {
        let cfg = ValidationConfig {
            shapes: vec![(6, 8)],
            r_values: vec![3, 6, 9],
            matrices_per_shape: 3,
            t: 4,
            u: 10,
            density: 0.5,
            seed: 2,
        };
        let rows = validation_experiment(&cfg).unwrap();
        // r = 9 > m is skipped; r = 6 = m is the degenerate exact case.
        assert_eq!(rows.len(), 2);
        assert_eq!(rows[0].r, 3);
        assert_eq!(rows[1].r, 6);
        for row in &rows {
            assert!(row.median_pvalue >= 0.0 && row.median_pvalue <= 1.0);
        }
        let csv = validation_csv(&rows);
        assert!(csv.starts_with("shape,r,median_Z,median_pvalue\n"));
        assert_eq!(csv.lines().count(), 3);
        assert!(csv.lines().nth(1).unwrap().starts_with("6x8,3,"));
    }

    #[test]
    fn estimate_dump_round_trips() {
        let est = FrequencyEstimate {
            frequencies: vec![0.4, 0.3, 0.2, 0.1],
            sample: vec![],
            config: SampleConfig::new(1, 1, 1, 0),
            discarded: 0,
        };
        let dump = est.to_dump();
        assert_eq!(dump, "1 0.4\n2 0.3\n3 0.2\n4 0.1\n");
        assert_eq!(parse_estimate(&dump).unwrap(), est.frequencies);
    }

    #[test]
    fn parse_estimate_rejects_malformed_input() {
        use crate::error::ParseEstimateError as E;
        assert_eq!(parse_estimate(""), Err(E::Empty));
        assert_eq!(parse_estimate("1\n"), Err(E::Fields { line: 1 }));
        assert_eq!(parse_estimate("1 0.5 9\n"), Err(E::Fields { line: 1 }));
        assert_eq!(
            parse_estimate("2 0.5\n"),
            Err(E::IndexOrder {
                line: 1,
                expected: 1,
                found: 2
            })
        );
        assert_eq!(
            parse_estimate("1 0.5\n3 0.5\n"),
            Err(E::IndexOrder {
                line: 2,
                expected: 2,
                found: 3
            })
        );
        assert_eq!(parse_estimate("1 -0.5\n"), Err(E::BadValue { line: 1 }));
        assert_eq!(parse_estimate("1 inf\n"), Err(E::BadValue { line: 1 }));
        assert_eq!(parse_estimate("1 x\n"), Err(E::BadValue { line: 1 }));
    }
}
