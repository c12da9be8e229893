//! Dense bit-packed vectors and matrices over GF(2).
//!
//! Indices are 1-based throughout the public API so that `v.get(i)` lines up
//! with the subscripts used for symplectic bases (`σ₁ … σ₂g`). Packing is
//! little-endian inside each `u64` word: logical index `i` lives at bit
//! `(i - 1) % 64` of word `(i - 1) / 64`.

use std::fmt;
use std::ops::{Add, AddAssign};

use crate::error::{Error, Result};

const WORD: usize = 64;

#[inline]
fn words_for(len: usize) -> usize {
    len.div_ceil(WORD)
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BitVector {
    len: usize,
    words: Vec<u64>,
}

impl BitVector {
    pub fn zeros(len: usize) -> Self {
        BitVector {
            len,
            words: vec![0; words_for(len)],
        }
    }

    /// The standard basis vector `e_i` (1-based).
    pub fn unit(len: usize, i: usize) -> Self {
        let mut v = Self::zeros(len);
        v.set(i, true);
        v
    }

    pub fn from_bits(bits: &[bool]) -> Self {
        let mut v = Self::zeros(bits.len());
        for (k, &b) in bits.iter().enumerate() {
            if b {
                v.set(k + 1, true);
            }
        }
        v
    }

    /// Builds a vector from 0/1 entries, e.g. `BitVector::from_u8s(&[1, 0, 1])`.
    pub fn from_u8s(bits: &[u8]) -> Self {
        let mut v = Self::zeros(bits.len());
        for (k, &b) in bits.iter().enumerate() {
            if b & 1 == 1 {
                v.set(k + 1, true);
            }
        }
        v
    }

    /// Parses a big-endian bit string: the first character is entry 1.
    pub fn parse(s: &str) -> Result<Self> {
        let bits = s
            .chars()
            .map(|c| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                _ => Err(Error::InvalidBits(s.to_string())),
            })
            .collect::<Result<Vec<_>>>()?;
        if bits.is_empty() {
            return Err(Error::InvalidBits(s.to_string()));
        }
        Ok(Self::from_bits(&bits))
    }

    /// The vector whose bit string is the `len`-digit binary expansion of `k`
    /// (entry 1 is the most significant digit). Enumerating `k = 0, 1, …`
    /// walks all vectors in lexicographic order of their bit strings.
    pub fn from_lex_index(len: usize, k: u64) -> Self {
        let mut v = Self::zeros(len);
        for i in 1..=len {
            if (k >> (len - i)) & 1 == 1 {
                v.set(i, true);
            }
        }
        v
    }

    /// Every vector of length `len` in lexicographic order. Requires `len < 64`.
    pub fn all(len: usize) -> impl Iterator<Item = BitVector> {
        assert!(len < 64, "cannot enumerate 2^{len} vectors");
        (0..(1u64 << len)).map(move |k| Self::from_lex_index(len, k))
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    #[inline]
    fn check(&self, i: usize) {
        assert!(
            i >= 1 && i <= self.len,
            "bit index {i} out of range 1..={}",
            self.len
        );
    }

    /// Entry `i` (1-based). Panics when `i` is outside `1..=len`.
    #[inline]
    pub fn get(&self, i: usize) -> bool {
        self.check(i);
        (self.words[(i - 1) / WORD] >> ((i - 1) % WORD)) & 1 == 1
    }

    pub fn try_get(&self, i: usize) -> Result<bool> {
        if i == 0 || i > self.len {
            return Err(Error::IndexOutOfRange {
                index: i,
                len: self.len,
            });
        }
        Ok(self.get(i))
    }

    #[inline]
    pub fn set(&mut self, i: usize, value: bool) {
        self.check(i);
        let mask = 1u64 << ((i - 1) % WORD);
        let w = &mut self.words[(i - 1) / WORD];
        if value {
            *w |= mask;
        } else {
            *w &= !mask;
        }
    }

    pub fn try_set(&mut self, i: usize, value: bool) -> Result<()> {
        if i == 0 || i > self.len {
            return Err(Error::IndexOutOfRange {
                index: i,
                len: self.len,
            });
        }
        self.set(i, value);
        Ok(())
    }

    pub fn flip(&mut self, i: usize) {
        let b = self.get(i);
        self.set(i, !b);
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// The standard (non-symplectic) dot product `Σ x_i y_i` mod 2.
    pub fn dot(&self, other: &BitVector) -> Result<bool> {
        self.same_len(other)?;
        let ones: u32 = self
            .words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones())
            .sum();
        Ok(ones & 1 == 1)
    }

    pub fn xor(&self, other: &BitVector) -> Result<BitVector> {
        self.same_len(other)?;
        let mut out = self.clone();
        out.xor_assign_unchecked(other);
        Ok(out)
    }

    #[inline]
    pub(crate) fn xor_assign_unchecked(&mut self, other: &BitVector) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    fn same_len(&self, other: &BitVector) -> Result<()> {
        if self.len != other.len {
            return Err(Error::DimensionMismatch(format!(
                "vector lengths {} and {}",
                self.len, other.len
            )));
        }
        Ok(())
    }

    pub fn iter(&self) -> impl Iterator<Item = bool> + '_ {
        (1..=self.len).map(move |i| self.get(i))
    }

    /// 1-based positions of the set entries, ascending.
    pub fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        (1..=self.len).filter(move |&i| self.get(i))
    }

    /// Swaps the entries of each adjacent pair `(2k-1, 2k)`. Requires even length.
    pub fn pair_swap(&self) -> BitVector {
        assert!(self.len.is_multiple_of(2), "pair_swap needs an even length");
        const LOW: u64 = 0x5555_5555_5555_5555;
        BitVector {
            len: self.len,
            words: self
                .words
                .iter()
                .map(|&w| ((w & LOW) << 1) | ((w >> 1) & LOW))
                .collect(),
        }
    }

    /// Entries `from..=to` as a new vector.
    pub fn slice(&self, from: usize, to: usize) -> BitVector {
        let mut out = BitVector::zeros(to + 1 - from);
        for i in from..=to {
            if self.get(i) {
                out.set(i + 1 - from, true);
            }
        }
        out
    }

    /// Big-endian bit string, entry 1 first.
    pub fn to_bit_string(&self) -> String {
        self.iter().map(|b| if b { '1' } else { '0' }).collect()
    }
}

impl fmt::Debug for BitVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BitVector({})", self.to_bit_string())
    }
}

impl fmt::Display for BitVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_bit_string())
    }
}

impl Add for &BitVector {
    type Output = BitVector;

    /// Panics on length mismatch; use [`BitVector::xor`] for a checked sum.
    fn add(self, rhs: &BitVector) -> BitVector {
        self.xor(rhs).expect("BitVector addition length mismatch")
    }
}

impl AddAssign<&BitVector> for BitVector {
    fn add_assign(&mut self, rhs: &BitVector) {
        assert_eq!(self.len, rhs.len, "BitVector addition length mismatch");
        self.xor_assign_unchecked(rhs);
    }
}

/// Row-major packed matrix over GF(2).
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
        let mut m = Self::zeros(n, n);
        for i in 1..=n {
            m.set(i, i, true);
        }
        m
    }

    /// Builds a matrix from rows of 0/1 entries. Panics on ragged input.
    pub fn from_rows<R: AsRef<[u8]>>(rows: &[R]) -> Self {
        let r = rows.len();
        let c = rows.first().map(|row| row.as_ref().len()).unwrap_or(0);
        let mut m = Self::zeros(r, c);
        for (i, row) in rows.iter().enumerate() {
            let row = row.as_ref();
            assert_eq!(row.len(), c, "ragged rows");
            for (j, &b) in row.iter().enumerate() {
                if b & 1 == 1 {
                    m.set(i + 1, j + 1, true);
                }
            }
        }
        m
    }

    /// Parses `rows * cols` bits given row-major as a single string.
    pub fn parse(rows: usize, cols: usize, s: &str) -> Result<Self> {
        let v = BitVector::parse(s)?;
        if v.len() != rows * cols {
            return Err(Error::InvalidBits(format!(
                "{s} (expected {} bits for a {rows}x{cols} matrix)",
                rows * cols
            )));
        }
        let mut m = Self::zeros(rows, cols);
        for i in 1..=rows {
            for j in 1..=cols {
                if v.get((i - 1) * cols + j) {
                    m.set(i, j, true);
                }
            }
        }
        Ok(m)
    }

    /// Builds the matrix whose columns are the given vectors.
    pub fn from_columns(cols: &[BitVector]) -> Result<Self> {
        let rows = cols.first().map(|c| c.len()).unwrap_or(0);
        let mut m = Self::zeros(rows, cols.len());
        for (j, col) in cols.iter().enumerate() {
            if col.len() != rows {
                return Err(Error::DimensionMismatch(format!(
                    "column {} has length {}, expected {rows}",
                    j + 1,
                    col.len()
                )));
            }
            for i in col.ones() {
                m.set(i, j + 1, true);
            }
        }
        Ok(m)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    #[inline]
    fn check(&self, i: usize, j: usize) {
        assert!(
            i >= 1 && i <= self.rows && j >= 1 && j <= self.cols,
            "entry ({i},{j}) out of range for a {}x{} matrix",
            self.rows,
            self.cols
        );
    }

    #[inline]
    fn row_words(&self, i: usize) -> &[u64] {
        &self.data[(i - 1) * self.stride..i * self.stride]
    }

    #[inline]
    fn row_words_mut(&mut self, i: usize) -> &mut [u64] {
        &mut self.data[(i - 1) * self.stride..i * self.stride]
    }

    /// Entry `(i, j)`, 1-based. Panics outside `1..=rows × 1..=cols`.
    #[inline]
    pub fn get(&self, i: usize, j: usize) -> bool {
        self.check(i, j);
        (self.row_words(i)[(j - 1) / WORD] >> ((j - 1) % WORD)) & 1 == 1
    }

    pub fn try_get(&self, i: usize, j: usize) -> Result<bool> {
        if i == 0 || i > self.rows {
            return Err(Error::IndexOutOfRange {
                index: i,
                len: self.rows,
            });
        }
        if j == 0 || j > self.cols {
            return Err(Error::IndexOutOfRange {
                index: j,
                len: self.cols,
            });
        }
        Ok(self.get(i, j))
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, value: bool) {
        self.check(i, j);
        let mask = 1u64 << ((j - 1) % WORD);
        let w = &mut self.row_words_mut(i)[(j - 1) / WORD];
        if value {
            *w |= mask;
        } else {
            *w &= !mask;
        }
    }

    pub fn row(&self, i: usize) -> BitVector {
        assert!(i >= 1 && i <= self.rows, "row {i} out of range");
        BitVector {
            len: self.cols,
            words: self.row_words(i).to_vec(),
        }
    }

    pub fn col(&self, j: usize) -> BitVector {
        let mut v = BitVector::zeros(self.rows);
        for i in 1..=self.rows {
            if self.get(i, j) {
                v.set(i, true);
            }
        }
        v
    }

    pub fn set_row(&mut self, i: usize, v: &BitVector) {
        assert_eq!(v.len(), self.cols, "row length mismatch");
        self.row_words_mut(i).copy_from_slice(&v.words);
    }

    pub fn transpose(&self) -> BitMatrix {
        let mut t = BitMatrix::zeros(self.cols, self.rows);
        for i in 1..=self.rows {
            for j in 1..=self.cols {
                if self.get(i, j) {
                    t.set(j, i, true);
                }
            }
        }
        t
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&w| w == 0)
    }

    pub fn is_identity(&self) -> bool {
        self.is_square() && *self == BitMatrix::identity(self.rows)
    }

    pub fn add(&self, other: &BitMatrix) -> Result<BitMatrix> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} + {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = self.clone();
        for (a, b) in out.data.iter_mut().zip(&other.data) {
            *a ^= b;
        }
        Ok(out)
    }

    /// Matrix product over GF(2).
    pub fn mul(&self, other: &BitMatrix) -> Result<BitMatrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} * {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = BitMatrix::zeros(self.rows, other.cols);
        for i in 1..=self.rows {
            for k in 1..=self.cols {
                if self.get(i, k) {
                    let src = other.row_words(k);
                    for (d, s) in out.row_words_mut(i).iter_mut().zip(src) {
                        *d ^= s;
                    }
                }
            }
        }
        Ok(out)
    }

    /// `self · x` for a column vector `x`.
    pub fn mul_vec(&self, x: &BitVector) -> Result<BitVector> {
        if x.len() != self.cols {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} * vector of length {}",
                self.rows,
                self.cols,
                x.len()
            )));
        }
        let mut out = BitVector::zeros(self.rows);
        for i in 1..=self.rows {
            let ones: u32 = self
                .row_words(i)
                .iter()
                .zip(&x.words)
                .map(|(a, b)| (a & b).count_ones())
                .sum();
            if ones & 1 == 1 {
                out.set(i, true);
            }
        }
        Ok(out)
    }

    /// `xᵀ · self` for a row vector `x`.
    pub fn vec_mul(&self, x: &BitVector) -> Result<BitVector> {
        if x.len() != self.rows {
            return Err(Error::DimensionMismatch(format!(
                "vector of length {} * {}x{}",
                x.len(),
                self.rows,
                self.cols
            )));
        }
        let mut out = BitVector::zeros(self.cols);
        for i in x.ones() {
            for (a, b) in out.words.iter_mut().zip(self.row_words(i)) {
                *a ^= b;
            }
        }
        Ok(out)
    }

    /// Gauss–Jordan inverse. The pivot for each column is the first row at or
    /// below the diagonal with a nonzero entry, so results are reproducible.
    pub fn inverse(&self) -> Result<BitMatrix> {
        if !self.is_square() {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        let mut work = self.clone();
        let mut inv = BitMatrix::identity(n);
        for col in 1..=n {
            let pivot = (col..=n)
                .find(|&r| work.get(r, col))
                .ok_or(Error::Singular)?;
            if pivot != col {
                work.swap_rows(pivot, col);
                inv.swap_rows(pivot, col);
            }
            for r in 1..=n {
                if r != col && work.get(r, col) {
                    work.xor_row_into(col, r);
                    inv.xor_row_into(col, r);
                }
            }
        }
        Ok(inv)
    }

    /// Row rank over GF(2).
    pub fn rank(&self) -> usize {
        let mut work = self.clone();
        let mut rank = 0;
        for col in 1..=self.cols {
            if rank == self.rows {
                break;
            }
            let Some(pivot) = (rank + 1..=self.rows).find(|&r| work.get(r, col)) else {
                continue;
            };
            rank += 1;
            work.swap_rows(pivot, rank);
            for r in rank + 1..=self.rows {
                if work.get(r, col) {
                    work.xor_row_into(rank, r);
                }
            }
        }
        rank
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for w in 0..self.stride {
            self.data
                .swap((a - 1) * self.stride + w, (b - 1) * self.stride + w);
        }
    }

    /// `row[dst] += row[src]`.
    fn xor_row_into(&mut self, src: usize, dst: usize) {
        for w in 0..self.stride {
            let v = self.data[(src - 1) * self.stride + w];
            self.data[(dst - 1) * self.stride + w] ^= v;
        }
    }

    /// Copies `block` into `self` with its top-left corner at `(row, col)`.
    pub fn paste(&mut self, row: usize, col: usize, block: &BitMatrix) {
        for i in 1..=block.rows {
            for j in 1..=block.cols {
                self.set(row + i - 1, col + j - 1, block.get(i, j));
            }
        }
    }

    /// The sub-matrix of rows `r0..=r1` and columns `c0..=c1`.
    pub fn block(&self, r0: usize, r1: usize, c0: usize, c1: usize) -> BitMatrix {
        let mut out = BitMatrix::zeros(r1 + 1 - r0, c1 + 1 - c0);
        for i in r0..=r1 {
            for j in c0..=c1 {
                if self.get(i, j) {
                    out.set(i + 1 - r0, j + 1 - c0, true);
                }
            }
        }
        out
    }

    /// Packs a matrix of at most 8×8 into a `u64`, row `i` in byte `i - 1`.
    pub fn pack_small(&self) -> Option<u64> {
        if self.rows > 8 || self.cols > 8 {
            return None;
        }
        let mut key = 0u64;
        for i in 1..=self.rows {
            key |= (self.row_words(i)[0] & 0xff) << (8 * (i - 1));
        }
        Some(key)
    }

    pub fn unpack_small(rows: usize, cols: usize, key: u64) -> BitMatrix {
        assert!(rows <= 8 && cols <= 8);
        let mut m = BitMatrix::zeros(rows, cols);
        for i in 1..=rows {
            m.row_words_mut(i)[0] = (key >> (8 * (i - 1))) & 0xff & ((1u64 << cols) - 1);
        }
        m
    }

    /// Row-major bit string.
    pub fn to_bit_string(&self) -> String {
        (1..=self.rows)
            .map(|i| self.row(i).to_bit_string())
            .collect()
    }

    /// One bit string per row.
    pub fn row_strings(&self) -> Vec<String> {
        (1..=self.rows)
            .map(|i| self.row(i).to_bit_string())
            .collect()
    }
}

impl fmt::Debug for BitMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BitMatrix[{}]", self.row_strings().join("/"))
    }
}

impl fmt::Display for BitMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, row) in self.row_strings().iter().enumerate() {
            if k > 0 {
                writeln!(f)?;
            }
            f.write_str(row)?;
        }
        Ok(())
    }
}

/// Product of two packed `n × n` matrices (see [`BitMatrix::pack_small`]).
#[inline]
pub(crate) fn packed_mul(n: usize, a: u64, b: u64) -> u64 {
    let mut out = 0u64;
    for i in 0..n {
        let mut ra = (a >> (8 * i)) & 0xff;
        let mut acc = 0u64;
        while ra != 0 {
            let k = ra.trailing_zeros() as u64;
            acc ^= (b >> (8 * k)) & 0xff;
            ra &= ra - 1;
        }
        out |= acc << (8 * i);
    }
    out
}
