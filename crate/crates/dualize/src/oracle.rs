//! Brute-force reference dualizer and exact subtask sizes.
//!
//! Deliberately naive: every column subset is tested for covering and for
//! minimality by direct removal of each column. This is the independent
//! check the enumeration is verified against at small scale.

use crate::error::Error;
use crate::matrix::{BoolMatrix, Covering};
use crate::runcm;

/// Default cap on columns for subset enumeration; 2^20 subsets complete in
/// seconds at desk scale.
pub const DEFAULT_COLUMN_CAP: usize = 20;

/// All irreducible coverings of `mat` by exhaustive subset search, sorted
/// lexicographically. Refuses matrices wider than [`DEFAULT_COLUMN_CAP`].
pub fn brute_force_dualize(mat: &BoolMatrix) -> Result<Vec<Covering>, Error> {
    brute_force_dualize_capped(mat, DEFAULT_COLUMN_CAP)
}

/// As [`brute_force_dualize`], with an explicit column cap (at most 32).
pub fn brute_force_dualize_capped(mat: &BoolMatrix, cap: usize) -> Result<Vec<Covering>, Error> {
    let n = mat.col_count();
    let cap = cap.min(32);
    if n > cap {
        return Err(Error::BruteForceCapExceeded { columns: n, cap });
    }
    let m = mat.row_count();
    // One u64 mask per row; n ≤ 32 keeps subset masks in u64 range.
    let row_masks: Vec<u64> = (0..m)
        .map(|i0| {
            let mut mask = 0u64;
            for j in 1..=n {
                if mat.get(i0 + 1, j) {
                    mask |= 1 << (j - 1);
                }
            }
            mask
        })
        .collect();
    let covers = |subset: u64| row_masks.iter().all(|&r| r & subset != 0);
    let mut found = Vec::new();
    for subset in 0u64..1u64 << n {
        if !covers(subset) {
            continue;
        }
        // Minimal by removal: dropping any single column uncovers some row.
        let mut minimal = true;
        let mut bits = subset;
        while bits != 0 {
            let bit = bits & bits.wrapping_neg();
            if covers(subset & !bit) {
                minimal = false;
                break;
            }
            bits &= bits - 1;
        }
        if minimal {
            let cols: Vec<u32> = (1..=n as u32)
                .filter(|j| subset >> (j - 1) & 1 == 1)
                .collect();
            found.push(Covering::from_sorted_unchecked(cols));
        }
    }
    found.sort();
    Ok(found)
}

/// Relative subtask sizes of a matrix: `fractions[j-1] = |P_j(L)| / |P(L)|`.
/// A matrix with no irreducible covering has `total = 0` and an all-zero
/// fraction vector.
#[derive(Debug, Clone, PartialEq)]
pub struct ExactSizes {
    pub fractions: Vec<f64>,
    pub total: u64,
}

impl ExactSizes {
    fn from_counts(counts: &[u64], total: u64) -> Self {
        let fractions = if total == 0 {
            vec![0.0; counts.len()]
        } else {
            counts.iter().map(|&c| c as f64 / total as f64).collect()
        };
        ExactSizes { fractions, total }
    }

    /// True when the matrix had no irreducible covering at all.
    pub fn is_degenerate(&self) -> bool {
        self.total == 0
    }
}

/// Exact subtask sizes via the full enumeration; usable at any width.
pub fn exact_subtask_sizes(mat: &BoolMatrix) -> ExactSizes {
    let (counts, total) = runcm::least_index_counts(mat);
    ExactSizes::from_counts(&counts, total)
}

/// Exact subtask sizes via the brute-force dualizer; capped like
/// [`brute_force_dualize`]. Kept separate so the two routes can be compared.
pub fn brute_force_subtask_sizes(mat: &BoolMatrix) -> Result<ExactSizes, Error> {
    let set = brute_force_dualize(mat)?;
    let mut counts = vec![0u64; mat.col_count()];
    for c in &set {
        counts[c.least().expect("solutions are nonempty") as usize - 1] += 1;
    }
    Ok(ExactSizes::from_counts(&counts, set.len() as u64))
}
