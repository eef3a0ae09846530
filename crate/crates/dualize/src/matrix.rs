//! Bit-packed Boolean matrices and the index-set types built on them.
//!
//! A [`BoolMatrix`] stores both a row-major and a column-major copy of its
//! bits, so row operations cost O(n/64) and column operations cost O(m/64).
//! All indices at the public surface are 1-based; the bit positions inside
//! the word arrays are 0-based.

use std::fmt;

use crate::error::{Error, ParseMatrixError};

/// Word-level helpers shared by the enumeration hot path.
pub(crate) mod words {
    /// `dst = a & !b`; returns true when the result has any bit set.
    pub fn and_not_into(dst: &mut Vec<u64>, a: &[u64], b: &[u64]) -> bool {
        debug_assert_eq!(a.len(), b.len());
        dst.resize(a.len(), 0);
        let mut any = 0u64;
        for (d, (&x, &y)) in dst.iter_mut().zip(a.iter().zip(b)) {
            *d = x & !y;
            any |= *d;
        }
        any != 0
    }

    /// `dst = a & b`; returns true when the result has any bit set.
    pub fn and_into(dst: &mut Vec<u64>, a: &[u64], b: &[u64]) -> bool {
        debug_assert_eq!(a.len(), b.len());
        dst.resize(a.len(), 0);
        let mut any = 0u64;
        for (d, (&x, &y)) in dst.iter_mut().zip(a.iter().zip(b)) {
            *d = x & y;
            any |= *d;
        }
        any != 0
    }

    /// True when `a & !b == 0`, i.e. the bits of `a` are a subset of `b`.
    pub fn is_subset(a: &[u64], b: &[u64]) -> bool {
        a.iter().zip(b).all(|(&x, &y)| x & !y == 0)
    }

    /// True when `a & b == 0`.
    pub fn is_disjoint(a: &[u64], b: &[u64]) -> bool {
        a.iter().zip(b).all(|(&x, &y)| x & y == 0)
    }

    pub fn is_zero(a: &[u64]) -> bool {
        a.iter().all(|&x| x == 0)
    }

    pub fn set_bit(wordsv: &mut [u64], idx: usize) {
        wordsv[idx / 64] |= 1u64 << (idx % 64);
    }

    pub fn clear_bit(wordsv: &mut [u64], idx: usize) {
        wordsv[idx / 64] &= !(1u64 << (idx % 64));
    }

    pub fn test_bit(wordsv: &[u64], idx: usize) -> bool {
        wordsv[idx / 64] >> (idx % 64) & 1 == 1
    }

    pub fn count(a: &[u64]) -> u32 {
        a.iter().map(|w| w.count_ones()).sum()
    }

    pub fn count_and(a: &[u64], b: &[u64]) -> u32 {
        a.iter().zip(b).map(|(&x, &y)| (x & y).count_ones()).sum()
    }

    /// Calls `f` with each set bit position of `a`, in ascending order.
    pub fn for_each_one(a: &[u64], mut f: impl FnMut(usize)) {
        for (wi, &w) in a.iter().enumerate() {
            let mut w = w;
            while w != 0 {
                let bit = w.trailing_zeros() as usize;
                f(wi * 64 + bit);
                w &= w - 1;
            }
        }
    }

    /// Calls `f` with each set bit position of `a & b`, in ascending order.
    pub fn for_each_one_and(a: &[u64], b: &[u64], mut f: impl FnMut(usize)) {
        for (wi, (&x, &y)) in a.iter().zip(b).enumerate() {
            let mut w = x & y;
            while w != 0 {
                let bit = w.trailing_zeros() as usize;
                f(wi * 64 + bit);
                w &= w - 1;
            }
        }
    }
}

fn words_for(bits: usize) -> usize {
    bits.div_ceil(64)
}

/// A set of 1-based indices drawn from a fixed domain `{1..domain}`.
///
/// Membership, intersection-style updates and ascending iteration are all
/// word-parallel. `RowSet` and `ColSet` are aliases distinguished only by
/// which dimension of a matrix they index.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IndexSet {
    domain: usize,
    words: Vec<u64>,
}

/// Subset of the row indices `{1..m}` of a matrix.
pub type RowSet = IndexSet;
/// Subset of the column indices `{1..n}` of a matrix.
pub type ColSet = IndexSet;

impl IndexSet {
    pub fn empty(domain: usize) -> Self {
        IndexSet {
            domain,
            words: vec![0; words_for(domain)],
        }
    }

    pub fn full(domain: usize) -> Self {
        let mut s = Self::empty(domain);
        for idx in 0..domain {
            words::set_bit(&mut s.words, idx);
        }
        s
    }

    pub fn from_indices(domain: usize, indices: &[usize]) -> Result<Self, Error> {
        let mut s = Self::empty(domain);
        for &idx in indices {
            s.insert(idx)?;
        }
        Ok(s)
    }

    pub fn insert(&mut self, index: usize) -> Result<(), Error> {
        if index == 0 || index > self.domain {
            return Err(Error::IndexOutOfDomain {
                index,
                domain: self.domain,
            });
        }
        words::set_bit(&mut self.words, index - 1);
        Ok(())
    }

    pub fn contains(&self, index: usize) -> bool {
        index >= 1 && index <= self.domain && words::test_bit(&self.words, index - 1)
    }

    pub fn len(&self) -> usize {
        words::count(&self.words) as usize
    }

    pub fn is_empty(&self) -> bool {
        words::is_zero(&self.words)
    }

    pub fn domain(&self) -> usize {
        self.domain
    }

    /// Ascending iteration over the 1-based members.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        let wordsv = &self.words;
        (0..wordsv.len()).flat_map(move |wi| {
            let w = wordsv[wi];
            std::iter::successors(Some(w), |&w| Some(w & w.wrapping_sub(1)))
                .take_while(|&w| w != 0)
                .map(move |w| wi * 64 + w.trailing_zeros() as usize + 1)
        })
    }

    pub(crate) fn from_words(domain: usize, wordsv: Vec<u64>) -> Self {
        debug_assert_eq!(wordsv.len(), words_for(domain));
        IndexSet {
            domain,
            words: wordsv,
        }
    }

    pub(crate) fn words(&self) -> &[u64] {
        &self.words
    }
}

impl fmt::Debug for IndexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// A candidate or confirmed irreducible covering: strictly increasing
/// 1-based column indices. The empty covering is a legal query value but is
/// never emitted as a solution.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Covering {
    cols: Vec<u32>,
}

impl Covering {
    /// Builds a covering from strictly increasing 1-based column indices.
    pub fn new(cols: Vec<u32>) -> Result<Self, Error> {
        if !cols.is_empty() {
            if cols[0] == 0 {
                return Err(Error::InvalidCovering);
            }
            if cols.windows(2).any(|w| w[0] >= w[1]) {
                return Err(Error::InvalidCovering);
            }
        }
        Ok(Covering { cols })
    }

    pub fn empty() -> Self {
        Covering { cols: Vec::new() }
    }

    /// The columns, strictly increasing, 1-based.
    pub fn columns(&self) -> &[u32] {
        &self.cols
    }

    pub fn len(&self) -> usize {
        self.cols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cols.is_empty()
    }

    /// Least column index, i.e. the subtask this covering belongs to.
    pub fn least(&self) -> Option<u32> {
        self.cols.first().copied()
    }

    pub fn contains(&self, col: u32) -> bool {
        self.cols.binary_search(&col).is_ok()
    }

    pub(crate) fn from_sorted_unchecked(cols: Vec<u32>) -> Self {
        debug_assert!(cols.windows(2).all(|w| w[0] < w[1]));
        debug_assert!(cols.first().is_none_or(|&c| c >= 1));
        Covering { cols }
    }
}

impl fmt::Display for Covering {
    /// Covering line format: 1-based indices, ascending, space-separated.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.cols.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Covering {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Covering({self})")
    }
}

/// Flat storage for many coverings; avoids one heap allocation per covering
/// when enumerations emit hundreds of thousands of them.
#[derive(Clone, Default)]
pub(crate) struct CoveringList {
    cols: Vec<u32>,
    ends: Vec<usize>,
}

impl CoveringList {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, covering: &[u32]) {
        self.cols.extend_from_slice(covering);
        self.ends.push(self.cols.len());
    }

    pub fn len(&self) -> usize {
        self.ends.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ends.is_empty()
    }

    pub fn get(&self, i: usize) -> &[u32] {
        let start = if i == 0 { 0 } else { self.ends[i - 1] };
        &self.cols[start..self.ends[i]]
    }

    pub fn iter(&self) -> impl Iterator<Item = &[u32]> + '_ {
        (0..self.len()).map(move |i| self.get(i))
    }

    pub fn clear(&mut self) {
        self.cols.clear();
        self.ends.clear();
    }
}

/// An immutable bit-packed m×n Boolean matrix with row and column views.
#[derive(Clone, PartialEq, Eq)]
pub struct BoolMatrix {
    m: usize,
    n: usize,
    row_words: usize,
    col_words: usize,
    rows: Vec<u64>,
    cols: Vec<u64>,
}

impl BoolMatrix {
    /// Builds an m×n matrix from a predicate over 1-based `(row, col)`.
    pub fn from_fn(
        m: usize,
        n: usize,
        mut f: impl FnMut(usize, usize) -> bool,
    ) -> Result<Self, Error> {
        if m == 0 || n == 0 {
            return Err(Error::InvalidShape { m, n });
        }
        let row_words = words_for(n);
        let col_words = words_for(m);
        let mut rows = vec![0u64; m * row_words];
        let mut cols = vec![0u64; n * col_words];
        for i in 0..m {
            for j in 0..n {
                if f(i + 1, j + 1) {
                    words::set_bit(&mut rows[i * row_words..(i + 1) * row_words], j);
                    words::set_bit(&mut cols[j * col_words..(j + 1) * col_words], i);
                }
            }
        }
        Ok(BoolMatrix {
            m,
            n,
            row_words,
            col_words,
            rows,
            cols,
        })
    }

    /// Parses the strict matrix text format: a `"m n"` header line, then
    /// exactly m lines of exactly n characters from `{0,1}`. A single
    /// trailing newline is optional; anything else is rejected.
    pub fn parse(text: &str) -> Result<Self, ParseMatrixError> {
        let mut lines: Vec<&str> = text.split('\n').collect();
        if lines.last() == Some(&"") {
            lines.pop();
        }
        let header = lines.first().copied().unwrap_or("");
        let mut tokens = header.split_whitespace();
        let m: usize = tokens
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or(ParseMatrixError::Header)?;
        let n: usize = tokens
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or(ParseMatrixError::Header)?;
        if tokens.next().is_some() {
            return Err(ParseMatrixError::Header);
        }
        if m == 0 || n == 0 {
            return Err(ParseMatrixError::ZeroDimension);
        }
        let data = &lines[1..];
        if data.len() != m {
            return Err(ParseMatrixError::RowCount {
                expected: m,
                found: data.len(),
            });
        }
        // Validate every line before allocating the bit arrays.
        for (li, line) in data.iter().enumerate() {
            let mut count = 0usize;
            for ch in line.chars() {
                if ch != '0' && ch != '1' {
                    return Err(ParseMatrixError::BadChar {
                        line: li + 2,
                        found: ch,
                    });
                }
                count += 1;
            }
            if count != n {
                return Err(ParseMatrixError::LineLength {
                    line: li + 2,
                    expected: n,
                    found: count,
                });
            }
        }
        let mat = Self::from_fn(m, n, |i, j| data[i - 1].as_bytes()[j - 1] == b'1')
            .expect("dimensions already validated");
        Ok(mat)
    }

    /// Renders the matrix in the text format parsed by [`BoolMatrix::parse`],
    /// with a trailing newline.
    pub fn to_text(&self) -> String {
        let mut out = String::with_capacity((self.n + 1) * (self.m + 1) + 16);
        out.push_str(&format!("{} {}\n", self.m, self.n));
        for i in 1..=self.m {
            for j in 1..=self.n {
                out.push(if self.get(i, j) { '1' } else { '0' });
            }
            out.push('\n');
        }
        out
    }

    pub fn row_count(&self) -> usize {
        self.m
    }

    pub fn col_count(&self) -> usize {
        self.n
    }

    /// Entry a_{ij} with 1-based indices.
    ///
    /// Panics when an index is out of range; use the checked operations for
    /// untrusted indices.
    pub fn get(&self, i: usize, j: usize) -> bool {
        assert!(i >= 1 && i <= self.m, "row index {i} out of range");
        assert!(j >= 1 && j <= self.n, "column index {j} out of range");
        words::test_bit(self.row_bits(i - 1), j - 1)
    }

    /// Bits of row `i0` (0-based), one bit per column.
    pub(crate) fn row_bits(&self, i0: usize) -> &[u64] {
        &self.rows[i0 * self.row_words..(i0 + 1) * self.row_words]
    }

    /// Bits of column `j0` (0-based), one bit per row.
    pub(crate) fn col_bits(&self, j0: usize) -> &[u64] {
        &self.cols[j0 * self.col_words..(j0 + 1) * self.col_words]
    }

    /// True when column `j` (1-based) has at least one unit entry.
    pub fn column_nonzero(&self, j: usize) -> bool {
        assert!(j >= 1 && j <= self.n, "column index {j} out of range");
        !words::is_zero(self.col_bits(j - 1))
    }

    /// Number of unit entries in each column, 1-based positions 0..n-1.
    pub fn column_counts(&self) -> Vec<u32> {
        (0..self.n).map(|j0| words::count(self.col_bits(j0))).collect()
    }

    fn check_covering(&self, h: &Covering) -> Result<(), Error> {
        if let Some(&last) = h.columns().last() {
            if last as usize > self.n {
                return Err(Error::ColOutOfRange {
                    index: last as usize,
                    max: self.n,
                });
            }
        }
        Ok(())
    }

    /// The submatrix made of the rows in `w`, in ascending original order.
    pub fn submatrix_rows(&self, w: &RowSet) -> Result<BoolMatrix, Error> {
        if w.is_empty() {
            return Err(Error::EmptyRowSelection);
        }
        let rows: Vec<usize> = w.iter().collect();
        if let Some(&max) = rows.last() {
            if max > self.m {
                return Err(Error::RowOutOfRange {
                    index: max,
                    max: self.m,
                });
            }
        }
        Ok(self.submatrix_from_sorted_rows(&rows))
    }

    /// `rows` must be ascending, 1-based and in range.
    pub(crate) fn submatrix_from_sorted_rows(&self, rows: &[usize]) -> BoolMatrix {
        let m = rows.len();
        let n = self.n;
        let row_words = self.row_words;
        let col_words = words_for(m);
        let mut out_rows = vec![0u64; m * row_words];
        let mut out_cols = vec![0u64; n * col_words];
        for (i0, &src) in rows.iter().enumerate() {
            let src_bits = self.row_bits(src - 1);
            out_rows[i0 * row_words..(i0 + 1) * row_words].copy_from_slice(src_bits);
            words::for_each_one(src_bits, |j0| {
                words::set_bit(&mut out_cols[j0 * col_words..(j0 + 1) * col_words], i0);
            });
        }
        BoolMatrix {
            m,
            n,
            row_words,
            col_words,
            rows: out_rows,
            cols: out_cols,
        }
    }

    /// True when some column of `h` has a unit entry in row `i` (1-based).
    pub fn covers_row(&self, h: &Covering, i: usize) -> Result<bool, Error> {
        if i == 0 || i > self.m {
            return Err(Error::RowOutOfRange {
                index: i,
                max: self.m,
            });
        }
        self.check_covering(h)?;
        let row = self.row_bits(i - 1);
        Ok(h.columns()
            .iter()
            .any(|&j| words::test_bit(row, j as usize - 1)))
    }

    /// The rows with no unit entry in the columns of `h`; empty exactly when
    /// `h` is a covering.
    pub fn uncovered_rows(&self, h: &Covering) -> Result<RowSet, Error> {
        self.check_covering(h)?;
        Ok(RowSet::from_words(self.m, self.uncovered_words(h)))
    }

    pub(crate) fn uncovered_words(&self, h: &Covering) -> Vec<u64> {
        let mut covered = vec![0u64; self.col_words];
        for &j in h.columns() {
            for (acc, &w) in covered.iter_mut().zip(self.col_bits(j as usize - 1)) {
                *acc |= w;
            }
        }
        let mut out = vec![0u64; self.col_words];
        for (i, o) in out.iter_mut().enumerate() {
            *o = !covered[i];
        }
        // Mask off the bits past m.
        let tail = self.m % 64;
        if tail != 0 {
            out[self.col_words - 1] &= (1u64 << tail) - 1;
        }
        out
    }

    /// All-ones row mask over the m rows.
    pub(crate) fn full_row_words(&self) -> Vec<u64> {
        let mut out = vec![u64::MAX; self.col_words];
        let tail = self.m % 64;
        if tail != 0 {
            out[self.col_words - 1] = (1u64 << tail) - 1;
        }
        out
    }
}

impl fmt::Debug for BoolMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BoolMatrix({}x{})", self.m, self.n)
    }
}

/// Convenience constructor used throughout the tests: rows as `'0'`/`'1'`
/// strings.
pub fn matrix_from_strs(rows: &[&str]) -> BoolMatrix {
    let m = rows.len();
    let n = rows.first().map_or(0, |r| r.len());
    BoolMatrix::from_fn(m, n, |i, j| rows[i - 1].as_bytes()[j - 1] == b'1')
        .expect("valid test matrix")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn example() -> BoolMatrix {
        matrix_from_strs(&["1100", "0110", "0011"])
    }

    #[test]
    fn parse_example_round_trip() {
        let text = "3 4\n1100\n0110\n0011\n";
        let mat = BoolMatrix::parse(text).unwrap();
        assert_eq!(mat.row_count(), 3);
        assert_eq!(mat.col_count(), 4);
        assert_eq!(mat, example());
        assert_eq!(mat.to_text(), text);
        // Trailing newline is optional.
        let mat2 = BoolMatrix::parse("3 4\n1100\n0110\n0011").unwrap();
        assert_eq!(mat, mat2);
    }

    #[test]
    fn parse_rejects_malformed_input() {
        use ParseMatrixError::*;
        assert_eq!(BoolMatrix::parse(""), Err(Header));
        assert_eq!(BoolMatrix::parse("3\n111\n111\n111\n"), Err(Header));
        assert_eq!(BoolMatrix::parse("1 2 3\n11\n"), Err(Header));
        assert_eq!(BoolMatrix::parse("0 4\n"), Err(ZeroDimension));
        assert_eq!(
            BoolMatrix::parse("2 2\n11\n"),
            Err(RowCount {
                expected: 2,
                found: 1
            })
        );
        assert_eq!(
            BoolMatrix::parse("2 2\n11\n11\n11\n"),
            Err(RowCount {
                expected: 2,
                found: 3
            })
        );
        assert_eq!(
            BoolMatrix::parse("1 3\n101 \n"),
            Err(BadChar {
                line: 2,
                found: ' '
            })
        );
        assert_eq!(
            BoolMatrix::parse("1 3\n1011\n"),
            Err(LineLength {
                line: 2,
                expected: 3,
                found: 4
            })
        );
        assert_eq!(
            BoolMatrix::parse("1 3\n10\n"),
            Err(LineLength {
                line: 2,
                expected: 3,
                found: 2
            })
        );
        assert_eq!(
            BoolMatrix::parse("1 3\n102\n"),
            Err(BadChar {
                line: 2,
                found: '2'
            })
        );
        // CR is not in {0,1}: CRLF files are rejected.
        assert_eq!(
            BoolMatrix::parse("1 3\n101\r\n"),
            Err(BadChar {
                line: 2,
                found: '\r'
            })
        );
        // Double trailing newline leaves an empty data line behind.
        assert!(BoolMatrix::parse("1 3\n101\n\n").is_err());
    }

    #[test]
    fn row_and_column_views_agree() {
        let mat = example();
        for i in 1..=3 {
            for j in 1..=4 {
                let from_col = words::test_bit(mat.col_bits(j - 1), i - 1);
                assert_eq!(mat.get(i, j), from_col, "disagreement at ({i},{j})");
            }
        }
        let col_counts = mat.column_counts();
        assert_eq!(col_counts, vec![1, 2, 2, 1]);
    }

    #[test]
    fn submatrix_rows_examples() {
        let mat = example();
        let w = RowSet::from_indices(3, &[1, 3]).unwrap();
        let sub = mat.submatrix_rows(&w).unwrap();
        assert_eq!(sub, matrix_from_strs(&["1100", "0011"]));

        let all = RowSet::full(3);
        assert_eq!(mat.submatrix_rows(&all).unwrap(), mat);

        let w2 = RowSet::from_indices(3, &[2]).unwrap();
        assert_eq!(mat.submatrix_rows(&w2).unwrap(), matrix_from_strs(&["0110"]));

        assert_eq!(
            mat.submatrix_rows(&RowSet::empty(3)),
            Err(Error::EmptyRowSelection)
        );
        let oob = RowSet::from_indices(9, &[7]).unwrap();
        assert!(mat.submatrix_rows(&oob).is_err());
    }

    #[test]
    fn covers_row_examples() {
        let mat = example();
        let h1 = Covering::new(vec![1]).unwrap();
        assert!(mat.covers_row(&h1, 1).unwrap());
        assert!(!mat.covers_row(&h1, 2).unwrap());
        let h24 = Covering::new(vec![2, 4]).unwrap();
        assert!(mat.covers_row(&h24, 3).unwrap());
        assert!(mat.covers_row(&h1, 4).is_err());
        assert!(mat.covers_row(&Covering::new(vec![9]).unwrap(), 1).is_err());
    }

    #[test]
    fn uncovered_rows_examples() {
        let mat = example();
        let h23 = Covering::new(vec![2, 3]).unwrap();
        assert!(mat.uncovered_rows(&h23).unwrap().is_empty());

        let empty = Covering::empty();
        let un = mat.uncovered_rows(&empty).unwrap();
        assert_eq!(un.iter().collect::<Vec<_>>(), vec![1, 2, 3]);

        let h14 = Covering::new(vec![1, 4]).unwrap();
        let un = mat.uncovered_rows(&h14).unwrap();
        assert_eq!(un.iter().collect::<Vec<_>>(), vec![2]);
    }

    #[test]
    fn covering_validation_and_display() {
        assert!(Covering::new(vec![1, 3, 7]).is_ok());
        assert_eq!(Covering::new(vec![0, 1]), Err(Error::InvalidCovering));
        assert_eq!(Covering::new(vec![2, 2]), Err(Error::InvalidCovering));
        assert_eq!(Covering::new(vec![3, 1]), Err(Error::InvalidCovering));
        let c = Covering::new(vec![2, 4]).unwrap();
        assert_eq!(c.to_string(), "2 4");
        assert_eq!(c.least(), Some(2));
    }

    #[test]
    fn index_set_basics() {
        let mut s = IndexSet::empty(70);
        assert!(s.insert(0).is_err());
        assert!(s.insert(71).is_err());
        s.insert(1).unwrap();
        s.insert(64).unwrap();
        s.insert(65).unwrap();
        s.insert(70).unwrap();
        assert_eq!(s.len(), 4);
        assert!(s.contains(64));
        assert!(!s.contains(2));
        assert_eq!(s.iter().collect::<Vec<_>>(), vec![1, 64, 65, 70]);
        assert_eq!(IndexSet::full(70).len(), 70);
    }

    #[test]
    fn covering_list_roundtrip() {
        let mut list = CoveringList::new();
        list.push(&[1, 3]);
        list.push(&[2]);
        list.push(&[2, 3, 4]);
        assert_eq!(list.len(), 3);
        assert_eq!(list.get(0), &[1, 3]);
        assert_eq!(list.get(1), &[2]);
        assert_eq!(list.get(2), &[2, 3, 4]);
        assert_eq!(list.iter().count(), 3);
    }

    mod properties {
        use super::*;
        use proptest::prelude::*;

        prop_compose! {
            fn arb_matrix()(m in 1usize..8, n in 1usize..10)
                          (m in Just(m), n in Just(n),
                           bits in proptest::collection::vec(proptest::bool::ANY, m * n))
                          -> (usize, usize, Vec<bool>) {
                (m, n, bits)
            }
        }

        proptest! {
            #[test]
            fn uncovered_rows_matches_covers_row((m, n, bits) in arb_matrix(),
                                                 hmask in proptest::bits::u16::ANY) {
                let mat = BoolMatrix::from_fn(m, n, |i, j| bits[(i - 1) * n + (j - 1)]).unwrap();
                let cols: Vec<u32> = (1..=n as u32)
                    .filter(|j| hmask >> (j - 1) & 1 == 1)
                    .collect();
                let h = Covering::new(cols).unwrap();
                let uncovered = mat.uncovered_rows(&h).unwrap();
                for i in 1..=m {
                    prop_assert_eq!(uncovered.contains(i), !mat.covers_row(&h, i).unwrap());
                }
            }

            #[test]
            fn submatrix_of_full_range_is_identity((m, n, bits) in arb_matrix(),
                                                   wmask in proptest::bits::u8::ANY) {
                let mat = BoolMatrix::from_fn(m, n, |i, j| bits[(i - 1) * n + (j - 1)]).unwrap();
                let rows: Vec<usize> = (1..=m).filter(|i| wmask >> (i - 1) & 1 == 1).collect();
                prop_assume!(!rows.is_empty());
                let w = RowSet::from_indices(m, &rows).unwrap();
                let sub = mat.submatrix_rows(&w).unwrap();
                let again = sub.submatrix_rows(&RowSet::full(sub.row_count())).unwrap();
                prop_assert_eq!(&sub, &again);
                // Row and column views of the submatrix agree.
                let counts = sub.column_counts();
                for j in 1..=n {
                    let by_rows = (1..=sub.row_count()).filter(|&i| sub.get(i, j)).count();
                    prop_assert_eq!(by_rows as u32, counts[j - 1]);
                }
            }
        }
    }
}
