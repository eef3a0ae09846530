//! Recursive enumeration of all irreducible coverings (the RUNC-M
//! algorithm), with per-subtask entry points.
//!
//! The recursion works on tuples (H, R, C): the partial column set H, the
//! rows R not yet covered, and the candidate columns C. At each node the row
//! of R with the fewest unit entries over C is selected (ties broken toward
//! the lowest row index) and the node branches on that row's unit columns in
//! ascending order; both rules are fixed so that emission order is
//! reproducible. Descending with column j removes the rows j covers from R,
//! updates the supporting-row sets S(H,j) incrementally, and eliminates from
//! C the columns that can no longer extend H to an irreducible covering.
//!
//! The traversal is implemented iteratively with an explicit frame stack, so
//! it can be driven either push-style through a sink callback or pull-style
//! as an iterator; dropping the iterator aborts the enumeration cleanly.

use std::ops::ControlFlow;

use crate::error::Error;
use crate::matrix::{words, BoolMatrix, Covering, RowSet};

/// One node of the explicit recursion stack.
#[derive(Default)]
struct Frame {
    /// Rows not yet covered by the path columns.
    r: Vec<u64>,
    /// Candidate columns; shrinks as branches of this node are consumed.
    c: Vec<u64>,
    /// S(H,j) for every column j of the path, in path order.
    supports: Vec<Vec<u64>>,
    /// The branch columns C_0^min, fixed at node entry, ascending, 0-based.
    branches: Vec<u32>,
    next: usize,
}

/// Pull-style enumeration of irreducible coverings.
///
/// Yields every element of P(L) (or of one subtask P_j(L)) exactly once, in
/// the deterministic order fixed by the branching rules.
pub struct Coverings<'a> {
    mat: &'a BoolMatrix,
    frames: Vec<Frame>,
    /// 0-based columns of the current path H, in the order they were added.
    path: Vec<u32>,
    depth: usize,
    /// A covering emitted before the stack machine starts (the `{j}` case of
    /// a subtask whose column alone covers everything).
    pending: Option<Vec<u32>>,
    emit: Vec<u32>,
    done: bool,
}

impl<'a> Coverings<'a> {
    fn empty(mat: &'a BoolMatrix) -> Self {
        Coverings {
            mat,
            frames: Vec::new(),
            path: Vec::new(),
            depth: 0,
            pending: None,
            emit: Vec::new(),
            done: true,
        }
    }

    fn new_full(mat: &'a BoolMatrix) -> Self {
        let r = mat.full_row_words();
        // Zero columns can never join a covering; drop them at the root.
        let mut c = vec![0u64; mat.col_count().div_ceil(64)];
        for j0 in 0..mat.col_count() {
            if !words::is_zero(mat.col_bits(j0)) {
                words::set_bit(&mut c, j0);
            }
        }
        let mut branches = Vec::new();
        compute_branches(mat, &r, &c, &mut branches);
        let root = Frame {
            r,
            c,
            supports: Vec::new(),
            branches,
            next: 0,
        };
        Coverings {
            mat,
            frames: vec![root],
            path: Vec::new(),
            depth: 0,
            pending: None,
            emit: Vec::new(),
            done: false,
        }
    }

    fn new_subtask(mat: &'a BoolMatrix, j: usize) -> Result<Self, Error> {
        let n = mat.col_count();
        if j == 0 || j > n {
            return Err(Error::ColOutOfRange { index: j, max: n });
        }
        let j0 = j - 1;
        let col_j = mat.col_bits(j0);
        if words::is_zero(col_j) {
            return Ok(Self::empty(mat));
        }
        let full = mat.full_row_words();
        let mut r = Vec::new();
        let covers_all = !words::and_not_into(&mut r, &full, col_j);
        if covers_all {
            let mut it = Self::empty(mat);
            it.pending = Some(vec![j as u32]);
            it.done = false;
            return Ok(it);
        }
        let support = col_j.to_vec();
        // Candidates {j+1..n}, minus columns that are incompatible with {j}
        // or cover no remaining uncovered row.
        let mut c = vec![0u64; n.div_ceil(64)];
        for u0 in j0 + 1..n {
            let col_u = mat.col_bits(u0);
            if words::is_disjoint(col_u, &r) {
                continue;
            }
            if words::is_subset(&support, col_u) {
                continue;
            }
            words::set_bit(&mut c, u0);
        }
        let mut branches = Vec::new();
        compute_branches(mat, &r, &c, &mut branches);
        let root = Frame {
            r,
            c,
            supports: vec![support],
            branches,
            next: 0,
        };
        Ok(Coverings {
            mat,
            frames: vec![root],
            path: vec![j0 as u32],
            depth: 0,
            pending: None,
            emit: Vec::new(),
            done: false,
        })
    }

    /// Advances to the next irreducible covering. Returns its columns as a
    /// sorted, 1-based slice valid until the next call.
    fn step(&mut self) -> Option<&[u32]> {
        if let Some(single) = self.pending.take() {
            self.emit = single;
            self.done = true;
            return Some(&self.emit);
        }
        if self.done {
            return None;
        }
        loop {
            let d = self.depth;
            let frame = &mut self.frames[d];
            if frame.next == frame.branches.len() {
                if d == 0 {
                    self.done = true;
                    return None;
                }
                self.depth -= 1;
                self.path.pop();
                continue;
            }
            let j0 = frame.branches[frame.next] as usize;
            frame.next += 1;
            words::clear_bit(&mut frame.c, j0);

            if self.frames.len() == d + 1 {
                self.frames.push(Frame::default());
            }
            let (lo, hi) = self.frames.split_at_mut(d + 1);
            let parent = &lo[d];
            let child = &mut hi[0];
            let col_j = self.mat.col_bits(j0);

            let r_nonempty = words::and_not_into(&mut child.r, &parent.r, col_j);
            if !r_nonempty {
                // Leaf: H ∪ {j} covers every row and is consistent by
                // construction, hence irreducible.
                self.emit.clear();
                self.emit.extend(self.path.iter().map(|&c| c + 1));
                self.emit.push(j0 as u32 + 1);
                self.emit.sort_unstable();
                return Some(&self.emit);
            }

            // Supports: S(H∪{j}, l) = S(H, l) \ cov(j) for l ∈ H, and the
            // new column's own support is cov(j) ∩ R (rows covered by j and
            // by nothing in H). Compatibility of j guarantees none of the
            // existing supports empties out.
            let k = parent.supports.len();
            child.supports.resize_with(k + 1, Vec::new);
            for idx in 0..k {
                words::and_not_into(&mut child.supports[idx], &parent.supports[idx], col_j);
            }
            words::and_into(&mut child.supports[k], col_j, &parent.r);

            // Candidate columns: drop those covering all of some support
            // (H ∪ {u} would be inconsistent) and those covering no row of
            // the new R (they could never gain a supporting row).
            child.c.clone_from(&parent.c);
            let child_r = &child.r;
            let child_supports = &child.supports;
            let child_c = &mut child.c;
            let mat = self.mat;
            words::for_each_one(&parent.c, |u0| {
                let col_u = mat.col_bits(u0);
                if words::is_disjoint(col_u, child_r)
                    || child_supports.iter().any(|s| words::is_subset(s, col_u))
                {
                    words::clear_bit(child_c, u0);
                }
            });

            compute_branches(mat, &child.r, &child.c, &mut child.branches);
            child.next = 0;
            self.path.push(j0 as u32);
            self.depth += 1;
        }
    }
}

impl Iterator for Coverings<'_> {
    type Item = Covering;

    fn next(&mut self) -> Option<Covering> {
        self.step()
            .map(|cols| Covering::from_sorted_unchecked(cols.to_vec()))
    }
}

/// C_0^min: the unit columns (within `c`) of the row of `r` with the fewest
/// unit entries over `c`, lowest row index on ties. Empty when some row of
/// `r` cannot be covered by `c` at all, which prunes the node.
fn compute_branches(mat: &BoolMatrix, r: &[u64], c: &[u64], out: &mut Vec<u32>) {
    out.clear();
    let mut best: Option<(u32, usize)> = None;
    words::for_each_one(r, |i0| {
        let count = words::count_and(mat.row_bits(i0), c);
        match best {
            Some((bc, _)) if count >= bc => {}
            _ => best = Some((count, i0)),
        }
    });
    if let Some((_, i0)) = best {
        words::for_each_one_and(mat.row_bits(i0), c, |j0| out.push(j0 as u32));
    }
}

/// Push-style enumeration of P(L). The sink receives each covering as a
/// sorted 1-based column slice and may stop the enumeration by returning
/// `ControlFlow::Break(())`.
///
/// Emits nothing when the matrix has an all-zero row.
pub fn enumerate<F>(mat: &BoolMatrix, mut sink: F)
where
    F: FnMut(&[u32]) -> ControlFlow<()>,
{
    let mut it = Coverings::new_full(mat);
    while let Some(cols) = it.step() {
        if sink(cols).is_break() {
            break;
        }
    }
}

/// Push-style enumeration of the subtask P_j(L): the irreducible coverings
/// whose least column index is `j` (1-based).
pub fn enumerate_subtask<F>(mat: &BoolMatrix, j: usize, mut sink: F) -> Result<(), Error>
where
    F: FnMut(&[u32]) -> ControlFlow<()>,
{
    let mut it = Coverings::new_subtask(mat, j)?;
    while let Some(cols) = it.step() {
        if sink(cols).is_break() {
            break;
        }
    }
    Ok(())
}

/// Pull adapter over the full enumeration.
pub fn coverings(mat: &BoolMatrix) -> Coverings<'_> {
    Coverings::new_full(mat)
}

/// Pull adapter over one subtask.
pub fn subtask_coverings(mat: &BoolMatrix, j: usize) -> Result<Coverings<'_>, Error> {
    Coverings::new_subtask(mat, j)
}

/// |P(L)| without materializing the coverings.
pub fn count_coverings(mat: &BoolMatrix) -> u64 {
    let mut count = 0u64;
    enumerate(mat, |_| {
        count += 1;
        ControlFlow::Continue(())
    });
    count
}

/// Per-least-index covering counts: `counts[j-1] = |P_j(L)|` plus the total.
pub fn least_index_counts(mat: &BoolMatrix) -> (Vec<u64>, u64) {
    let mut counts = vec![0u64; mat.col_count()];
    let mut total = 0u64;
    enumerate(mat, |cols| {
        counts[cols[0] as usize - 1] += 1;
        total += 1;
        ControlFlow::Continue(())
    });
    (counts, total)
}

/// S(H,j): the rows covered by column j and by no other column of `h`.
/// Computed from scratch; the enumeration maintains these sets
/// incrementally, so this doubles as its correctness oracle.
pub fn supporting_rows(mat: &BoolMatrix, h: &Covering, j: usize) -> Result<RowSet, Error> {
    if !h.contains(j as u32) {
        return Err(Error::ColumnNotInCovering { column: j });
    }
    if let Some(&last) = h.columns().last() {
        if last as usize > mat.col_count() {
            return Err(Error::ColOutOfRange {
                index: last as usize,
                max: mat.col_count(),
            });
        }
    }
    let mut support = mat.col_bits(j - 1).to_vec();
    for &l in h.columns() {
        if l as usize == j {
            continue;
        }
        let col_l = mat.col_bits(l as usize - 1);
        for (s, &w) in support.iter_mut().zip(col_l) {
            *s &= !w;
        }
    }
    Ok(RowSet::from_words(mat.row_count(), support))
}

/// USM condition (b): every column of `h` has at least one supporting row,
/// i.e. the submatrix on `h` contains an identity submatrix of order |h|.
pub fn is_consistent(mat: &BoolMatrix, h: &Covering) -> Result<bool, Error> {
    if h.is_empty() {
        return Err(Error::EmptyColumnSet);
    }
    for &j in h.columns() {
        if !supporting_rows(mat, h, j as usize)?.is_empty() {
            continue;
        }
        return Ok(false);
    }
    Ok(true)
}

/// The USM criterion: `h` is an irreducible covering iff it covers every row
/// (condition (a)) and is consistent (condition (b)).
pub fn is_irreducible_covering(mat: &BoolMatrix, h: &Covering) -> Result<bool, Error> {
    if !mat.uncovered_rows(h)?.is_empty() {
        return Ok(false);
    }
    // A nonempty matrix is never covered by the empty set, so reaching this
    // point implies h is nonempty.
    is_consistent(mat, h)
}

/// Whether column `u` can extend the consistent set `h`, i.e. whether
/// `h ∪ {u}` is consistent: `u` must not cover all supporting rows of any
/// column of `h`, and must itself cover some row that `h` leaves uncovered.
pub fn is_compatible(mat: &BoolMatrix, h: &Covering, u: usize) -> Result<bool, Error> {
    if u == 0 || u > mat.col_count() {
        return Err(Error::ColOutOfRange {
            index: u,
            max: mat.col_count(),
        });
    }
    if h.contains(u as u32) {
        return Err(Error::ColumnInCovering { column: u });
    }
    let col_u = mat.col_bits(u - 1);
    let uncovered = mat.uncovered_words(h);
    if words::is_disjoint(col_u, &uncovered) {
        return Ok(false);
    }
    for &j in h.columns() {
        let support = supporting_rows(mat, h, j as usize)?;
        if words::is_subset(support.words(), col_u) {
            return Ok(false);
        }
    }
    Ok(true)
}
