//! Greedy static assignment of subtasks to workers.

use crate::error::Error;

/// An assignment of the n subtasks to p workers. `assignment[j-1]` is the
/// 1-based worker index of subtask j; `load[k-1]` is the summed estimated
/// size of worker k's subtasks.
#[derive(Debug, Clone, PartialEq)]
pub struct Schedule {
    pub assignment: Vec<u32>,
    pub load: Vec<f64>,
    pub p: usize,
}

impl Schedule {
    /// Schedule dump format: n lines `"j N_j"`, then p lines `"k sigma_k"`.
    pub fn to_dump(&self) -> String {
        let mut out = String::new();
        for (j0, k) in self.assignment.iter().enumerate() {
            out.push_str(&format!("{} {}\n", j0 + 1, k));
        }
        for (k0, sigma) in self.load.iter().enumerate() {
            out.push_str(&format!("{} {}\n", k0 + 1, sigma));
        }
        out
    }

    /// The subtasks of worker `k` (1-based), ascending.
    pub fn subtasks_of(&self, k: usize) -> Vec<usize> {
        self.assignment
            .iter()
            .enumerate()
            .filter(|(_, &w)| w as usize == k)
            .map(|(j0, _)| j0 + 1)
            .collect()
    }
}

fn validate(p: usize, sizes: &[f64]) -> Result<(), Error> {
    let n = sizes.len();
    if p == 0 || p > n {
        return Err(Error::WorkerCountOutOfRange { p, n });
    }
    for (j0, &f) in sizes.iter().enumerate() {
        if f.is_nan() || f.is_infinite() {
            return Err(Error::NonFiniteEstimate { index: j0 + 1 });
        }
        if f < 0.0 {
            return Err(Error::NegativeEstimate {
                index: j0 + 1,
                value: f,
            });
        }
    }
    Ok(())
}

fn assign(p: usize, order: impl Iterator<Item = usize>, sizes: &[f64]) -> Schedule {
    let mut load = vec![0.0f64; p];
    let mut assignment = vec![0u32; sizes.len()];
    for j0 in order {
        let mut k0 = 0usize;
        for k in 1..p {
            if load[k] < load[k0] {
                k0 = k;
            }
        }
        assignment[j0] = k0 as u32 + 1;
        load[k0] += sizes[j0];
    }
    Schedule {
        assignment,
        load,
        p,
    }
}

/// Greedy schedule: processes subtasks in ascending index order, assigning
/// each to the worker with the currently smallest load (lowest worker index
/// on ties). Deterministic.
pub fn distribute_tasks(p: usize, sizes: &[f64]) -> Result<Schedule, Error> {
    validate(p, sizes)?;
    Ok(assign(p, 0..sizes.len(), sizes))
}

/// Longest-processing-time-first variant: like [`distribute_tasks`] but
/// processing subtasks in descending estimated size (ascending index on
/// ties). Not the default; provided for experiments.
pub fn distribute_tasks_lpt(p: usize, sizes: &[f64]) -> Result<Schedule, Error> {
    validate(p, sizes)?;
    let mut order: Vec<usize> = (0..sizes.len()).collect();
    order.sort_by(|&a, &b| {
        sizes[b]
            .partial_cmp(&sizes[a])
            .expect("sizes validated finite")
            .then(a.cmp(&b))
    });
    Ok(assign(p, order.into_iter(), sizes))
}

/// The predicted makespan: the largest per-worker load.
pub fn schedule_makespan(schedule: &Schedule) -> f64 {
    schedule.load.iter().copied().fold(0.0, f64::max)
}
