//! Parallel execution of scheduled subtasks over shared-memory workers,
//! wall-time measurement, scaling metrics, and the benchmark harness.
//!
//! Each worker owns its subtask list, result buffer and timer; the matrix is
//! shared read-only and nothing is locked during enumeration. Results are
//! merged single-threaded after every worker has finished, so the output is
//! independent of thread interleaving.

use std::ops::ControlFlow;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::Error;
use crate::estimator::{default_r, sample_eta, SampleConfig};
use crate::generate::{generate_matrix, GenSpec};
use crate::matrix::{BoolMatrix, Covering, CoveringList};
use crate::runcm;
use crate::scheduler::{distribute_tasks, Schedule};

/// Timing and output counts of one parallel run.
#[derive(Debug, Clone, PartialEq)]
pub struct RunReport {
    pub p: usize,
    /// Wall time of each worker's enumeration loop, seconds.
    pub per_worker_time: Vec<f64>,
    /// Coverings emitted by each worker.
    pub per_worker_count: Vec<u64>,
    pub total_coverings: u64,
}

impl RunReport {
    /// Builds a report from raw measurements.
    pub fn from_times(times: Vec<f64>, counts: Vec<u64>) -> Result<Self, Error> {
        if times.len() != counts.len() {
            return Err(Error::LengthMismatch {
                left: times.len(),
                right: counts.len(),
            });
        }
        if times.is_empty() {
            return Err(Error::WorkerCountOutOfRange { p: 0, n: 0 });
        }
        let total = counts.iter().sum();
        Ok(RunReport {
            p: times.len(),
            per_worker_time: times,
            per_worker_count: counts,
            total_coverings: total,
        })
    }

    /// T(p): the slowest worker's wall time.
    pub fn t(&self) -> f64 {
        self.per_worker_time.iter().copied().fold(0.0, f64::max)
    }

    /// T_Σ(p): summed worker wall time.
    pub fn t_sigma(&self) -> f64 {
        self.per_worker_time.iter().sum()
    }

    /// Realized load levels s_k = T_k / T_Σ.
    pub fn load_levels(&self) -> Result<Vec<f64>, Error> {
        let total = self.t_sigma();
        if total <= 0.0 {
            return Err(Error::ZeroRunTime);
        }
        Ok(self.per_worker_time.iter().map(|t| t / total).collect())
    }
}

/// Speedup, efficiency and realized load levels of a run against a serial
/// baseline.
#[derive(Debug, Clone, PartialEq)]
pub struct ScalingMetrics {
    /// S(p) = T(1) / T(p).
    pub speedup: f64,
    /// E(p) = S(p) / p.
    pub efficiency: f64,
    /// s_k = T_k / T_Σ, one per worker.
    pub load_levels: Vec<f64>,
}

/// Derives S(p), E(p) and s_k from a p = 1 baseline and a parallel run.
pub fn compute_metrics(baseline: &RunReport, run: &RunReport) -> Result<ScalingMetrics, Error> {
    if baseline.p != 1 {
        return Err(Error::BaselineNotSerial(baseline.p));
    }
    let t_run = run.t();
    if t_run <= 0.0 {
        return Err(Error::ZeroRunTime);
    }
    let speedup = baseline.t() / t_run;
    Ok(ScalingMetrics {
        speedup,
        efficiency: speedup / run.p as f64,
        load_levels: run.load_levels()?,
    })
}

/// Runs the schedule: worker k enumerates its subtasks sequentially in
/// ascending index order; the merged output is P(L) sorted
/// lexicographically.
///
/// A panicking worker fails the whole run; no partial results are reported.
pub fn run_parallel(
    mat: &BoolMatrix,
    schedule: &Schedule,
) -> Result<(Vec<Covering>, RunReport), Error> {
    let n = mat.col_count();
    if schedule.assignment.len() != n {
        return Err(Error::ScheduleMismatch {
            assigned: schedule.assignment.len(),
            columns: n,
        });
    }
    let p = schedule.p;
    if p == 0 {
        return Err(Error::WorkerCountOutOfRange { p, n });
    }
    let mut batches: Vec<Vec<usize>> = vec![Vec::new(); p];
    for (j0, &k) in schedule.assignment.iter().enumerate() {
        let k = k as usize;
        if k == 0 || k > p {
            return Err(Error::WorkerOutOfRange { worker: k, p });
        }
        batches[k - 1].push(j0 + 1);
    }

    let results: Vec<Result<(CoveringList, f64), Error>> = std::thread::scope(|scope| {
        let handles: Vec<_> = batches
            .iter()
            .map(|batch| {
                scope.spawn(move || {
                    let mut out = CoveringList::new();
                    let start = Instant::now();
                    for &j in batch {
                        runcm::enumerate_subtask(mat, j, |cols| {
                            out.push(cols);
                            ControlFlow::Continue(())
                        })
                        .expect("subtask indices come from the schedule");
                    }
                    let elapsed = start.elapsed().as_secs_f64();
                    (out, elapsed)
                })
            })
            .collect();
        handles
            .into_iter()
            .map(|h| {
                h.join().map_err(|payload| {
                    let msg = payload
                        .downcast_ref::<&str>()
                        .map(|s| s.to_string())
                        .or_else(|| payload.downcast_ref::<String>().cloned())
                        .unwrap_or_else(|| "unknown panic".to_string());
                    Error::WorkerPanic(msg)
                })
            })
            .collect()
    });

    let mut times = Vec::with_capacity(p);
    let mut counts = Vec::with_capacity(p);
    let mut merged: Vec<Covering> = Vec::new();
    for result in results {
        let (list, seconds) = result?;
        times.push(seconds);
        counts.push(list.len() as u64);
        merged.extend(
            list.iter()
                .map(|cols| Covering::from_sorted_unchecked(cols.to_vec())),
        );
    }
    merged.sort();
    let report = RunReport::from_times(times, counts)?;
    Ok((merged, report))
}

/// Benchmark parameters. Worker counts beyond the machine's available
/// parallelism are refused unless `allow_oversubscribe` is set, since
/// oversubscription invalidates speedup readings.
#[derive(Debug, Clone)]
pub struct BenchConfig {
    pub shapes: Vec<(usize, usize)>,
    pub workers: Vec<usize>,
    pub t: usize,
    pub u: usize,
    pub repetitions: usize,
    pub density: f64,
    pub seed: u64,
    pub allow_oversubscribe: bool,
}

impl BenchConfig {
    pub fn new(shapes: Vec<(usize, usize)>, workers: Vec<usize>, seed: u64) -> Self {
        BenchConfig {
            shapes,
            workers,
            t: 20,
            u: 50,
            repetitions: 3,
            density: 0.5,
            seed,
            allow_oversubscribe: false,
        }
    }
}

/// One (shape, p) cell of the benchmark summary.
#[derive(Debug, Clone)]
pub struct BenchCell {
    pub m: usize,
    pub n: usize,
    pub p: usize,
    /// Median over repetitions of T(p).
    pub t_seconds: f64,
    pub speedup: f64,
    pub efficiency: f64,
    pub estimation_seconds: f64,
    pub repetitions: usize,
}

/// One worker row of the median repetition of a (shape, p) cell.
#[derive(Debug, Clone)]
pub struct WorkerRow {
    pub m: usize,
    pub n: usize,
    pub p: usize,
    pub k: usize,
    pub t_k: f64,
    pub s_k: f64,
    pub count_k: u64,
}

#[derive(Debug, Clone, Default)]
pub struct BenchReport {
    pub cells: Vec<BenchCell>,
    pub worker_rows: Vec<WorkerRow>,
}

impl BenchReport {
    pub fn summary_csv(&self) -> String {
        let mut out =
            String::from("shape,n_cols,p,T_seconds,S,E,estimation_seconds,repetitions\n");
        for c in &self.cells {
            out.push_str(&format!(
                "{}x{},{},{},{:.6},{:.4},{:.4},{:.6},{}\n",
                c.m, c.n, c.n, c.p, c.t_seconds, c.speedup, c.efficiency, c.estimation_seconds,
                c.repetitions
            ));
        }
        out
    }

    pub fn per_worker_csv(&self) -> String {
        let mut out = String::from("shape,p,k,T_k,s_k,count_k\n");
        for w in &self.worker_rows {
            out.push_str(&format!(
                "{}x{},{},{},{:.6},{:.6},{}\n",
                w.m, w.n, w.p, w.k, w.t_k, w.s_k, w.count_k
            ));
        }
        out
    }
}

fn median_index(values: &[f64]) -> usize {
    let mut order: Vec<usize> = (0..values.len()).collect();
    order.sort_by(|&a, &b| values[a].partial_cmp(&values[b]).expect("no NaN timings"));
    order[values.len() / 2]
}

/// For each shape: generates a matrix, estimates subtask sizes with
/// r = ⌈m/2⌉, schedules for each worker count, runs the schedule
/// `repetitions` times and reports median timings with speedup and
/// efficiency against the p = 1 cell. Worker count 1 is always measured.
pub fn benchmark(cfg: &BenchConfig) -> Result<BenchReport, Error> {
    if cfg.repetitions == 0 {
        return Err(Error::InvalidSampleConfig(
            "repetitions must be at least 1".into(),
        ));
    }
    let cores = std::thread::available_parallelism()
        .map(|c| c.get())
        .unwrap_or(1);
    let mut workers: Vec<usize> = cfg.workers.clone();
    workers.push(1);
    workers.sort_unstable();
    workers.dedup();
    if let Some(&max_p) = workers.last() {
        if max_p > cores && !cfg.allow_oversubscribe {
            return Err(Error::Oversubscribed { p: max_p, cores });
        }
    }

    let mut seeder = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut report = BenchReport::default();
    for &(m, n) in &cfg.shapes {
        let gen_seed: u64 = seeder.random();
        let est_seed: u64 = seeder.random();
        let mat = generate_matrix(&GenSpec::new(m, n, gen_seed).density(cfg.density))?;

        let est_start = Instant::now();
        let estimate = sample_eta(
            &mat,
            &SampleConfig::new(default_r(m), cfg.t, cfg.u, est_seed),
        )?;
        let estimation_seconds = est_start.elapsed().as_secs_f64();

        // One untimed warmup pass so the first measured cell does not pay
        // for cold caches and first-touch page faults.
        let warmup = distribute_tasks(1, &estimate.frequencies)?;
        let _ = run_parallel(&mat, &warmup)?;

        let mut t1_median = None;
        for &p in &workers {
            let schedule = distribute_tasks(p, &estimate.frequencies)?;
            let mut reports = Vec::with_capacity(cfg.repetitions);
            for _ in 0..cfg.repetitions {
                let (_, rep) = run_parallel(&mat, &schedule)?;
                reports.push(rep);
            }
            let times: Vec<f64> = reports.iter().map(|r| r.t()).collect();
            let mid = median_index(&times);
            let t_med = times[mid];
            if p == 1 {
                t1_median = Some(t_med);
            }
            let t1 = t1_median.ok_or(Error::ZeroRunTime)?;
            if t_med <= 0.0 {
                return Err(Error::ZeroRunTime);
            }
            let speedup = t1 / t_med;
            report.cells.push(BenchCell {
                m,
                n,
                p,
                t_seconds: t_med,
                speedup,
                efficiency: speedup / p as f64,
                estimation_seconds,
                repetitions: cfg.repetitions,
            });
            let chosen = &reports[mid];
            let levels = chosen.load_levels()?;
            for k in 1..=p {
                report.worker_rows.push(WorkerRow {
                    m,
                    n,
                    p,
                    k,
                    t_k: chosen.per_worker_time[k - 1],
                    s_k: levels[k - 1],
                    count_k: chosen.per_worker_count[k - 1],
                });
            }
        }
    }
    Ok(report)
}
