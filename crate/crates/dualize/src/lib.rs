//! Enumeration of irreducible coverings of Boolean matrices, with a
//! statically scheduled parallel executor.
//!
//! An irreducible covering of an m×n Boolean matrix is a minimal set of
//! columns hitting every row — a minimal hitting set. This crate provides:
//!
//! - [`matrix`]: bit-packed matrices, index sets, coverings, and the strict
//!   matrix text format.
//! - [`runcm`]: the RUNC-M enumeration of all irreducible coverings, with
//!   per-subtask entry points (subtask j holds the coverings whose least
//!   column index is j).
//! - [`oracle`]: a brute-force dualizer and exact subtask sizes, used to
//!   verify the enumeration at small scale.
//! - [`estimator`]: statistical estimation of relative subtask sizes from
//!   random row-submatrices, plus the chi-squared machinery validating it.
//! - [`scheduler`]: greedy assignment of subtasks to workers from estimated
//!   sizes.
//! - [`runner`]: multi-threaded execution of a schedule with wall-time
//!   measurement, speedup/efficiency metrics, and a benchmark harness.
//! - [`generate`]: seeded random matrix generation.
//!
//! Everything randomized is deterministic in a 64-bit seed. All indices at
//! the public surface are 1-based.
//!
//! ```
//! use dualize::{runcm, BoolMatrix};
//!
//! let mat = BoolMatrix::parse("3 4\n1100\n0110\n0011\n")?;
//! let coverings: Vec<String> = runcm::coverings(&mat).map(|c| c.to_string()).collect();
//! assert_eq!(coverings, ["1 3", "2 3", "2 4"]);
//! # Ok::<(), dualize::ParseMatrixError>(())
//! ```

pub mod error;
pub mod estimator;
pub mod generate;
pub mod matrix;
pub mod oracle;
pub mod runcm;
pub mod runner;
pub mod scheduler;
pub mod stats;

pub use error::{Error, ParseEstimateError, ParseMatrixError};
pub use matrix::{BoolMatrix, ColSet, Covering, IndexSet, RowSet};
