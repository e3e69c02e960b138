//! (0,1)-matrices with columns stored as row-subset bitmasks.
//!
//! The row count is capped at 62 so that every column fits a machine word.
//! Column order is preserved by all constructors but never consulted by
//! predicates; two matrices are the same object of study when their
//! canonical forms agree.

use std::fmt;

use itertools::Itertools;

use crate::error::{Error, ParseError, Result};

/// Largest supported row count; a column is a `u64` bitmask over rows.
pub const MAX_ROWS: u32 = 62;

/// A (0,1)-matrix. `cols[j]` has bit `i` set iff entry `(i, j)` is 1.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitMatrix {
    rows: u32,
    cols: Vec<u64>,
}

impl BitMatrix {
    /// Builds a matrix from column bitmasks, validating the row range and
    /// that every column stays inside the universe `{0..rows-1}`.
    pub fn new(rows: usize, cols: Vec<u64>) -> Result<Self> {
        if rows == 0 || rows > MAX_ROWS as usize {
            return Err(Error::RowCountOutOfRange(rows));
        }
        let mask = Self::universe_mask(rows as u32);
        if cols.iter().any(|&c| c & !mask != 0) {
            return Err(Error::BadParameter {
                op: "BitMatrix::new",
                param: "column outside row universe",
            });
        }
        Ok(Self {
            rows: rows as u32,
            cols,
        })
    }

    fn universe_mask(rows: u32) -> u64 {
        if rows == 64 {
            u64::MAX
        } else {
            (1u64 << rows) - 1
        }
    }

    /// The all-zero m x 0 matrix.
    pub fn empty(rows: usize) -> Result<Self> {
        Self::new(rows, Vec::new())
    }

    pub fn rows(&self) -> u32 {
        self.rows
    }

    /// Number of columns, written `||A||` in the literature.
    pub fn ncols(&self) -> usize {
        self.cols.len()
    }

    pub fn col(&self, j: usize) -> u64 {
        self.cols[j]
    }

    pub fn cols(&self) -> &[u64] {
        &self.cols
    }

    pub fn entry(&self, i: usize, j: usize) -> bool {
        self.cols[j] >> i & 1 == 1
    }

    pub fn row_sum(&self, i: usize) -> usize {
        self.cols.iter().filter(|&&c| c >> i & 1 == 1).count()
    }

    pub fn col_sum(&self, j: usize) -> u32 {
        self.cols[j].count_ones()
    }

    /// True iff no two columns are equal as row subsets.
    pub fn is_simple(&self) -> bool {
        let mut seen = self.cols.clone();
        seen.sort_unstable();
        seen.windows(2).all(|w| w[0] != w[1])
    }

    /// `[A | B]`: columns of `A` followed by columns of `B`.
    pub fn concat(&self, other: &BitMatrix) -> Result<BitMatrix> {
        if self.rows != other.rows {
            return Err(Error::RowCountMismatch {
                left: self.rows,
                right: other.rows,
            });
        }
        let mut cols = self.cols.clone();
        cols.extend_from_slice(&other.cols);
        Ok(BitMatrix {
            rows: self.rows,
            cols,
        })
    }

    /// `t . A`: `t` concatenated copies of `A`.
    pub fn t_fold(&self, t: usize) -> BitMatrix {
        let mut cols = Vec::with_capacity(self.cols.len() * t);
        for _ in 0..t {
            cols.extend_from_slice(&self.cols);
        }
        BitMatrix {
            rows: self.rows,
            cols,
        }
    }

    /// `A x B`: one column per ordered pair, the `A`-column stacked on top of
    /// the `B`-column. Fails when the combined row count exceeds [`MAX_ROWS`].
    pub fn product(&self, other: &BitMatrix) -> Result<BitMatrix> {
        let rows = self.rows as usize + other.rows as usize;
        if rows > MAX_ROWS as usize {
            return Err(Error::TooManyRows(rows));
        }
        let mut cols = Vec::with_capacity(self.cols.len() * other.cols.len());
        for &a in &self.cols {
            for &b in &other.cols {
                cols.push(a | b << self.rows);
            }
        }
        Ok(BitMatrix {
            rows: rows as u32,
            cols,
        })
    }

    /// Entrywise (0,1)-complement `A^c`.
    pub fn complement(&self) -> BitMatrix {
        let mask = Self::universe_mask(self.rows);
        BitMatrix {
            rows: self.rows,
            cols: self.cols.iter().map(|c| c ^ mask).collect(),
        }
    }

    /// `r(A)`: only the columns of column sum >= 2, order preserved.
    pub fn reduce_r(&self) -> BitMatrix {
        BitMatrix {
            rows: self.rows,
            cols: self
                .cols
                .iter()
                .copied()
                .filter(|c| c.count_ones() >= 2)
                .collect(),
        }
    }

    /// Deletes rows containing no 1 (keeps at least one row).
    pub fn strip_zero_rows(&self) -> BitMatrix {
        let live: Vec<usize> = (0..self.rows as usize)
            .filter(|&i| self.cols.iter().any(|c| c >> i & 1 == 1))
            .collect();
        if live.len() == self.rows as usize {
            return self.clone();
        }
        if live.is_empty() {
            return BitMatrix {
                rows: 1,
                cols: vec![0; self.cols.len()],
            };
        }
        let cols = self
            .cols
            .iter()
            .map(|&c| {
                live.iter()
                    .enumerate()
                    .fold(0u64, |acc, (new, &old)| acc | (c >> old & 1) << new)
            })
            .collect();
        BitMatrix {
            rows: live.len() as u32,
            cols,
        }
    }

    /// Appends zero rows until the matrix has `rows` rows.
    pub fn pad_rows(&self, rows: usize) -> Result<BitMatrix> {
        if rows < self.rows as usize {
            return Err(Error::BadParameter {
                op: "pad_rows",
                param: "rows",
            });
        }
        BitMatrix::new(rows, self.cols.clone())
    }

    /// Count of zero entries, the exponent of the Berge-family enumeration.
    pub fn zero_entries(&self) -> usize {
        self.rows as usize * self.ncols()
            - self
                .cols
                .iter()
                .map(|c| c.count_ones() as usize)
                .sum::<usize>()
    }

    /// Lexicographically least (sorted-column) matrix over all row
    /// permutations. Two matrices have equal canonical forms iff one is a
    /// row/column permutation of the other. Brute-force, so rows <= 10.
    pub fn canonical_form(&self) -> Result<BitMatrix> {
        if self.rows > 10 {
            return Err(Error::CanonicalRowLimit(self.rows));
        }
        let n = self.rows as usize;
        let mut best: Option<Vec<u64>> = None;
        for perm in (0..n).permutations(n) {
            let mut cols: Vec<u64> = self
                .cols
                .iter()
                .map(|&c| (0..n).fold(0u64, |acc, i| acc | (c >> i & 1) << perm[i]))
                .collect();
            cols.sort_unstable();
            if best.as_ref().is_none_or(|b| cols < *b) {
                best = Some(cols);
            }
        }
        Ok(BitMatrix {
            rows: self.rows,
            cols: best.unwrap_or_default(),
        })
    }

    /// Column multiset equality, ignoring column order.
    pub fn same_columns(&self, other: &BitMatrix) -> bool {
        if self.rows != other.rows || self.cols.len() != other.cols.len() {
            return false;
        }
        let mut a = self.cols.clone();
        let mut b = other.cols.clone();
        a.sort_unstable();
        b.sort_unstable();
        a == b
    }

    /// Equality up to row and column permutation.
    pub fn isomorphic_to(&self, other: &BitMatrix) -> Result<bool> {
        if self.rows != other.rows || self.cols.len() != other.cols.len() {
            return Ok(false);
        }
        Ok(self.canonical_form()?.cols == other.canonical_form()?.cols)
    }

    /// `S(A)`: one column per distinct proper subset of some column of `A`.
    pub fn strict_subcolumns(&self) -> BitMatrix {
        let mut out: Vec<u64> = Vec::new();
        for &c in &self.cols {
            // enumerate proper subsets of c
            let mut s = c;
            loop {
                s = s.wrapping_sub(1) & c;
                if s == c {
                    break; // wrapped around, only possible when c == 0
                }
                out.push(s);
                if s == 0 {
                    break;
                }
            }
        }
        out.sort_unstable();
        out.dedup();
        BitMatrix {
            rows: self.rows,
            cols: out,
        }
    }

    /// `B(F)`: every matrix obtained by flipping 0-entries of `F` to 1,
    /// deduplicated up to row/column permutation. Needs at most 20 zeros.
    pub fn berge_family(&self) -> Result<Vec<BitMatrix>> {
        let zeros = self.zero_entries();
        if zeros > 20 {
            return Err(Error::TooManyZeroEntries(zeros));
        }
        let mask = Self::universe_mask(self.rows);
        let mut positions = Vec::with_capacity(zeros);
        for (j, &c) in self.cols.iter().enumerate() {
            let mut z = !c & mask;
            while z != 0 {
                let i = z.trailing_zeros();
                positions.push((i, j));
                z &= z - 1;
            }
        }
        let mut seen: Vec<Vec<u64>> = Vec::new();
        let mut family = Vec::new();
        for flips in 0u32..1 << positions.len() {
            let mut cols = self.cols.clone();
            for (idx, &(i, j)) in positions.iter().enumerate() {
                if flips >> idx & 1 == 1 {
                    cols[j] |= 1 << i;
                }
            }
            let candidate = BitMatrix {
                rows: self.rows,
                cols,
            };
            let key = candidate.canonical_form()?.cols;
            if !seen.contains(&key) {
                seen.push(key);
                family.push(candidate);
            }
        }
        Ok(family)
    }

    // ---- text formats ----

    /// Parses the file format: line 1 `"<rows> <cols>"`, then `rows` lines of
    /// `cols` characters in `{0,1}`, row-major.
    pub fn parse_text(input: &str) -> std::result::Result<BitMatrix, ParseError> {
        let mut lines = input.lines();
        let header = lines.next().ok_or(ParseError::Empty)?;
        let mut it = header.split_whitespace();
        let rows: usize = it
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or(ParseError::BadHeader)?;
        let ncols: usize = it
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or(ParseError::BadHeader)?;
        if it.next().is_some() {
            return Err(ParseError::BadHeader);
        }
        if rows == 0 || rows > MAX_ROWS as usize {
            return Err(ParseError::RowsOutOfRange(rows));
        }
        let mut cols = vec![0u64; ncols];
        for i in 0..rows {
            let line = match lines.next() {
                Some(l) => l.trim_end_matches('\r'),
                None if ncols == 0 => "",
                None => return Err(ParseError::MissingRow(i + 2)),
            };
            if line.chars().count() != ncols {
                return Err(ParseError::BadRowLength(i + 2));
            }
            for (j, ch) in line.chars().enumerate() {
                match ch {
                    '0' => {}
                    '1' => cols[j] |= 1 << i,
                    _ => return Err(ParseError::BadChar { line: i + 2, ch }),
                }
            }
        }
        Ok(BitMatrix {
            rows: rows as u32,
            cols,
        })
    }

    /// Renders the file format accepted by [`BitMatrix::parse_text`].
    pub fn to_text(&self) -> String {
        let mut out = format!("{} {}\n", self.rows, self.ncols());
        for i in 0..self.rows as usize {
            for j in 0..self.ncols() {
                out.push(if self.entry(i, j) { '1' } else { '0' });
            }
            out.push('\n');
        }
        out
    }

    /// Parses the inline literal: columns as top-to-bottom bit strings joined
    /// by commas, e.g. `"110,101,011"`.
    pub fn parse_literal(input: &str) -> std::result::Result<BitMatrix, ParseError> {
        let input = input.trim();
        if input.is_empty() {
            return Err(ParseError::Empty);
        }
        // the zero-column matrix prints as "<rows>x0"
        if let Some(r) = input.strip_suffix("x0") {
            if let Ok(rows) = r.parse::<usize>() {
                if rows == 0 || rows > MAX_ROWS as usize {
                    return Err(ParseError::RowsOutOfRange(rows));
                }
                return Ok(BitMatrix {
                    rows: rows as u32,
                    cols: Vec::new(),
                });
            }
        }
        let mut rows = None;
        let mut cols = Vec::new();
        for tok in input.split(',') {
            let len = tok.chars().count();
            if len == 0 {
                return Err(ParseError::EmptyColumn);
            }
            match rows {
                None => {
                    if len > MAX_ROWS as usize {
                        return Err(ParseError::RowsOutOfRange(len));
                    }
                    rows = Some(len);
                }
                Some(r) if r != len => return Err(ParseError::RaggedColumns),
                _ => {}
            }
            let mut c = 0u64;
            for (i, ch) in tok.chars().enumerate() {
                match ch {
                    '0' => {}
                    '1' => c |= 1 << i,
                    _ => return Err(ParseError::BadChar { line: 1, ch }),
                }
            }
            cols.push(c);
        }
        Ok(BitMatrix {
            rows: rows.unwrap() as u32,
            cols,
        })
    }

    /// Renders the inline literal form; the zero-column matrix prints as
    /// `"<rows>x0"`.
    pub fn to_literal(&self) -> String {
        if self.cols.is_empty() {
            return format!("{}x0", self.rows);
        }
        self.cols
            .iter()
            .map(|&c| {
                (0..self.rows)
                    .map(|i| if c >> i & 1 == 1 { '1' } else { '0' })
                    .collect::<String>()
            })
            .join(",")
    }
}

impl fmt::Debug for BitMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "BitMatrix({}x{} {})",
            self.rows,
            self.ncols(),
            self.to_literal()
        )
    }
}

impl fmt::Display for BitMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_literal())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::named;

    fn m(lit: &str) -> BitMatrix {
        BitMatrix::parse_literal(lit).unwrap()
    }

    #[test]
    fn simplicity() {
        assert!(named::complete(2).is_simple());
        assert!(!named::ones(2, 0).t_fold(2).is_simple());
        assert!(named::make_h(1, 3, 1).unwrap().is_simple());
    }

    #[test]
    fn concat_basics() {
        let i2 = named::identity(2);
        let cc = i2.concat(&i2).unwrap();
        assert_eq!(cc.ncols(), 4);
        assert!(!cc.is_simple());
        let empty = BitMatrix::empty(2).unwrap();
        assert!(i2.concat(&empty).unwrap().same_columns(&i2));
        let t3 = named::identity(1).t_fold(3);
        assert!(t3.same_columns(&m("1,1,1")));
        assert!(i2.concat(&named::identity(3)).is_err());
    }

    #[test]
    fn product_basics() {
        let i1 = named::identity(1);
        let p = i1.product(&i1).unwrap();
        assert!(p.same_columns(&m("11")));
        let c4 = named::identity(2).product(&named::identity(2)).unwrap();
        assert!(c4.same_columns(&named::c4()));
        // p-fold product of I_{m/p}: m = 6, p = 2 gives 9 columns
        let i3 = named::identity(3);
        let p2 = i3.product(&i3).unwrap();
        assert_eq!(p2.rows(), 6);
        assert_eq!(p2.ncols(), 9);
    }

    #[test]
    fn complement_basics() {
        let i2c = named::identity(2).complement();
        assert!(i2c.same_columns(&m("01,10")));
        assert!(i2c.isomorphic_to(&named::identity(2)).unwrap());
        assert!(named::identity(3)
            .complement()
            .same_columns(&named::k_choose(3, 2)));
    }

    #[test]
    fn reduce_examples() {
        let g1 = named::g1();
        assert!(g1.reduce_r().same_columns(&g1));
        let a = m("000,100,010,001,111");
        assert!(a.reduce_r().same_columns(&m("111")));
        // derived: dropping the sum <= 1 columns of H(1,3,1) leaves G_1
        let h = named::make_h(1, 3, 1).unwrap();
        assert!(h.reduce_r().same_columns(&g1));
    }

    #[test]
    fn canonical_examples() {
        let i2 = named::identity(2);
        let swapped = m("01,10");
        assert_eq!(
            i2.canonical_form().unwrap().cols(),
            swapped.canonical_form().unwrap().cols()
        );
        let fam = i2.berge_family().unwrap();
        assert_eq!(fam.len(), 3);
        let c = named::h(7).canonical_form().unwrap();
        assert_eq!(c.canonical_form().unwrap().cols(), c.cols());
    }

    #[test]
    fn strict_subcolumns_examples() {
        assert!(m("11").strict_subcolumns().same_columns(&m("00,10,01")));
        assert!(named::identity(2)
            .strict_subcolumns()
            .same_columns(&m("00")));
        assert_eq!(named::c4().strict_subcolumns().ncols(), 5);
        assert_eq!(BitMatrix::empty(3).unwrap().strict_subcolumns().ncols(), 0);
    }

    #[test]
    fn canonical_rejects_wide_row_counts() {
        let tall = BitMatrix::new(11, vec![1]).unwrap();
        assert!(tall.canonical_form().is_err());
    }

    #[test]
    fn berge_family_examples() {
        assert_eq!(m("11").berge_family().unwrap().len(), 1);
        // a single zero entry flips two ways before dedup
        let fam = m("0").berge_family().unwrap();
        assert_eq!(fam.len(), 2);
        let too_big = BitMatrix::new(6, vec![0; 4]).unwrap();
        assert!(too_big.berge_family().is_err());
    }

    #[test]
    fn text_roundtrip() {
        let g2 = named::g2();
        let txt = g2.to_text();
        assert_eq!(txt, "3 3\n110\n101\n011\n");
        assert_eq!(BitMatrix::parse_text(&txt).unwrap(), g2);
        assert_eq!(g2.to_literal(), "110,101,011");
        let empty = BitMatrix::empty(2).unwrap();
        assert_eq!(BitMatrix::parse_text(&empty.to_text()).unwrap(), empty);
    }

    #[test]
    fn parse_rejects_garbage() {
        assert!(BitMatrix::parse_text("").is_err());
        assert!(BitMatrix::parse_text("2 2\n10\n2").is_err());
        assert!(BitMatrix::parse_text("0 3\n").is_err());
        assert!(BitMatrix::parse_text("2 2\n10").is_err());
        assert!(BitMatrix::parse_literal("10,1").is_err());
        assert!(BitMatrix::parse_literal("").is_err());
        assert!(BitMatrix::parse_literal("1,,1").is_err());
    }

    #[test]
    fn strip_and_pad() {
        let a = m("100,101").pad_rows(5).unwrap();
        assert_eq!(a.rows(), 5);
        let b = a.strip_zero_rows();
        assert_eq!(b.rows(), 2);
        assert!(b.same_columns(&m("10,11")));
        let z = m("00,00").strip_zero_rows();
        assert_eq!(z.rows(), 1);
        assert_eq!(z.ncols(), 2);
    }
}
