use std::fmt;

use super::bitvec::{dot_words, words_for, BitVec, Ones, WORD_BITS};
use super::subspace::Subspace;

/// Dense row-major matrix over F₂.
///
/// Matrices act on column vectors: an `r × c` matrix maps F₂^c to F₂^r.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitMatrix {
    rows: usize,
    cols: usize,
    stride: usize,
    data: Vec<u64>,
}

impl BitMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        let stride = words_for(cols);
        BitMatrix {
            rows,
            cols,
            stride,
            data: vec![0; rows * stride],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = BitMatrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, true);
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> bool) -> Self {
        let mut m = BitMatrix::zeros(rows, cols);
        for r in 0..rows {
            for c in 0..cols {
                if f(r, c) {
                    m.set(r, c, true);
                }
            }
        }
        m
    }

    /// Builds a matrix whose rows are the given vectors.
    pub fn from_rows(cols: usize, rows: &[BitVec]) -> Self {
        let mut m = BitMatrix::zeros(rows.len(), cols);
        for (i, r) in rows.iter().enumerate() {
            m.set_row(i, r);
        }
        m
    }

    /// Builds a matrix whose columns are the given vectors.
    pub fn from_columns(rows: usize, cols: &[BitVec]) -> Self {
        BitMatrix::from_rows(rows, cols).transpose()
    }

    /// Parses rows written as strings of `0`/`1`; handy in tests and fixtures.
    pub fn from_strs(rows: &[&str]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        BitMatrix::from_fn(rows.len(), cols, |r, c| rows[r].as_bytes()[c] == b'1')
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> bool {
        assert!(r < self.rows && c < self.cols, "index ({r},{c}) out of range");
        (self.data[r * self.stride + c / WORD_BITS] >> (c % WORD_BITS)) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, value: bool) {
        assert!(r < self.rows && c < self.cols, "index ({r},{c}) out of range");
        let w = &mut self.data[r * self.stride + c / WORD_BITS];
        let mask = 1u64 << (c % WORD_BITS);
        if value {
            *w |= mask;
        } else {
            *w &= !mask;
        }
    }

    #[inline]
    pub fn flip(&mut self, r: usize, c: usize) {
        assert!(r < self.rows && c < self.cols, "index ({r},{c}) out of range");
        self.data[r * self.stride + c / WORD_BITS] ^= 1u64 << (c % WORD_BITS);
    }

    #[inline]
    pub(crate) fn row_words(&self, r: usize) -> &[u64] {
        &self.data[r * self.stride..(r + 1) * self.stride]
    }

    pub fn row(&self, r: usize) -> BitVec {
        BitVec::from_words(self.cols, self.row_words(r).to_vec())
    }

    pub fn row_ones(&self, r: usize) -> Ones<'_> {
        Ones::new(self.row_words(r))
    }

    pub fn set_row(&mut self, r: usize, v: &BitVec) {
        assert_eq!(v.len(), self.cols, "row length mismatch");
        let s = self.stride;
        self.data[r * s..(r + 1) * s].copy_from_slice(v.words());
    }

    pub fn row_vecs(&self) -> Vec<BitVec> {
        (0..self.rows).map(|r| self.row(r)).collect()
    }

    pub fn column(&self, c: usize) -> BitVec {
        let mut v = BitVec::zeros(self.rows);
        for r in 0..self.rows {
            if self.get(r, c) {
                v.set(r, true);
            }
        }
        v
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        let s = self.stride;
        let (lo, hi) = if a < b { (a, b) } else { (b, a) };
        let (head, tail) = self.data.split_at_mut(hi * s);
        head[lo * s..(lo + 1) * s].swap_with_slice(&mut tail[..s]);
    }

    /// `row[dst] ^= row[src]`, touching words from `from_word` onward.
    #[inline]
    fn xor_row_from(&mut self, src: usize, dst: usize, from_word: usize) {
        debug_assert_ne!(src, dst);
        let s = self.stride;
        if src < dst {
            let (head, tail) = self.data.split_at_mut(dst * s);
            let src_row = &head[src * s + from_word..(src + 1) * s];
            for (d, x) in tail[from_word..s].iter_mut().zip(src_row) {
                *d ^= *x;
            }
        } else {
            let (head, tail) = self.data.split_at_mut(src * s);
            let src_row = &tail[from_word..s];
            for (d, x) in head[dst * s + from_word..(dst + 1) * s]
                .iter_mut()
                .zip(src_row)
            {
                *d ^= *x;
            }
        }
    }

    pub fn xor_row(&mut self, src: usize, dst: usize) {
        self.xor_row_from(src, dst, 0);
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&w| w == 0)
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols && *self == BitMatrix::identity(self.rows)
    }

    pub fn transpose(&self) -> BitMatrix {
        let mut t = BitMatrix::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in self.row_ones(r) {
                t.set(c, r, true);
            }
        }
        t
    }

    /// Matrix product `self · other`.
    pub fn mul(&self, other: &BitMatrix) -> BitMatrix {
        assert_eq!(
            self.cols, other.rows,
            "cannot multiply {}x{} by {}x{}",
            self.rows, self.cols, other.rows, other.cols
        );
        let mut out = BitMatrix::zeros(self.rows, other.cols);
        let s = out.stride;
        for r in 0..self.rows {
            let dst = r * s;
            for k in self.row_ones(r) {
                let src = other.row_words(k);
                for (d, x) in out.data[dst..dst + s].iter_mut().zip(src) {
                    *d ^= *x;
                }
            }
        }
        out
    }

    /// `self · x` for a column vector `x`.
    pub fn apply(&self, x: &BitVec) -> BitVec {
        assert_eq!(x.len(), self.cols, "vector length mismatch");
        let mut out = BitVec::zeros(self.rows);
        for r in 0..self.rows {
            if dot_words(self.row_words(r), x.words()) {
                out.set(r, true);
            }
        }
        out
    }

    pub fn add(&self, other: &BitMatrix) -> BitMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "shape mismatch");
        let mut out = self.clone();
        for (a, b) in out.data.iter_mut().zip(&other.data) {
            *a ^= *b;
        }
        out
    }

    /// Selects the given rows and columns, in the given order.
    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> BitMatrix {
        let mut out = BitMatrix::zeros(rows.len(), cols.len());
        for (i, &r) in rows.iter().enumerate() {
            for (j, &c) in cols.iter().enumerate() {
                if self.get(r, c) {
                    out.set(i, j, true);
                }
            }
        }
        out
    }

    /// Vertical concatenation.
    pub fn stack(&self, below: &BitMatrix) -> BitMatrix {
        assert_eq!(self.cols, below.cols, "column mismatch in stack");
        let mut data = self.data.clone();
        data.extend_from_slice(&below.data);
        BitMatrix {
            rows: self.rows + below.rows,
            cols: self.cols,
            stride: self.stride,
            data,
        }
    }

    /// Horizontal concatenation `[self | right]`.
    pub fn hconcat(&self, right: &BitMatrix) -> BitMatrix {
        assert_eq!(self.rows, right.rows, "row mismatch in hconcat");
        let mut out = BitMatrix::zeros(self.rows, self.cols + right.cols);
        for r in 0..self.rows {
            for c in self.row_ones(r) {
                out.set(r, c, true);
            }
            for c in right.row_ones(r) {
                out.set(r, self.cols + c, true);
            }
        }
        out
    }

    /// Gaussian elimination in place. Pivots are searched only among the
    /// first `pivot_cols` columns. With `reduced`, pivot columns are cleared
    /// above the pivot as well, giving reduced row-echelon form on that block.
    /// Returns the pivot columns; rows past their count are zero on the block.
    pub(crate) fn eliminate(&mut self, pivot_cols: usize, reduced: bool) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut rank = 0;
        for c in 0..pivot_cols.min(self.cols) {
            if rank == self.rows {
                break;
            }
            let w = c / WORD_BITS;
            let mask = 1u64 << (c % WORD_BITS);
            let Some(p) = (rank..self.rows).find(|&r| self.data[r * self.stride + w] & mask != 0)
            else {
                continue;
            };
            self.swap_rows(rank, p);
            let start = if reduced { 0 } else { rank + 1 };
            for r in start..self.rows {
                if r != rank && self.data[r * self.stride + w] & mask != 0 {
                    self.xor_row_from(rank, r, w);
                }
            }
            pivots.push(c);
            rank += 1;
        }
        pivots
    }

    /// Reduces to reduced row-echelon form, returning pivot columns.
    pub fn rref(&mut self) -> Vec<usize> {
        self.eliminate(self.cols, true)
    }

    pub fn rank(&self) -> usize {
        // eliminate along the shorter side
        if self.rows <= self.cols {
            self.clone().eliminate(self.cols, false).len()
        } else {
            self.transpose().eliminate(self.rows, false).len()
        }
    }

    /// `{x : self · x = 0}` as a subspace of F₂^cols.
    pub fn kernel(&self) -> Subspace {
        let mut r = self.clone();
        let pivots = r.eliminate(self.cols, true);
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let mut basis = Vec::new();
        for f in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut x = BitVec::zeros(self.cols);
            x.set(f, true);
            for (i, &p) in pivots.iter().enumerate() {
                if r.get(i, f) {
                    x.set(p, true);
                }
            }
            basis.push(x);
        }
        Subspace::from_vectors(self.cols, &basis)
    }

    /// `{self · x}` as a subspace of F₂^rows.
    pub fn image(&self) -> Subspace {
        self.transpose().row_space()
    }

    pub fn row_space(&self) -> Subspace {
        Subspace::from_matrix(self.cols, self.clone())
    }

    /// Kernel and image together; `dim kernel + dim image = cols`.
    pub fn decompose(&self) -> (Subspace, Subspace) {
        (self.kernel(), self.image())
    }
}

impl fmt::Debug for BitMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "BitMatrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            write!(f, "  ")?;
            for c in 0..self.cols {
                write!(f, "{}", u8::from(self.get(r, c)))?;
            }
            writeln!(f)?;
        }
        write!(f, "]")
    }
}
