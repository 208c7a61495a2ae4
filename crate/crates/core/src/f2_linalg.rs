//! Bit-packed linear algebra over F2.
//!
//! Vectors pack coordinate `i` into bit `i % 64` of word `i / 64`. Elimination
//! always pivots on the leftmost (lowest-index) set coordinate and inserts rows
//! top to bottom, so every certificate this module returns is canonical for
//! its input.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

const WORD_BITS: usize = 64;

fn word_count(len: usize) -> usize {
    len.div_ceil(WORD_BITS)
}

/// A vector over F2 of fixed length.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct F2Vector {
    len: usize,
    words: Vec<u64>,
}

impl F2Vector {
    pub fn zeros(len: usize) -> Self {
        Self {
            len,
            words: vec![0; word_count(len)],
        }
    }

    pub fn unit(len: usize, i: usize) -> Self {
        let mut v = Self::zeros(len);
        v.set(i, true);
        v
    }

    pub fn from_bits<I: IntoIterator<Item = bool>>(bits: I) -> Self {
        let mut words = Vec::new();
        let mut len = 0;
        for bit in bits {
            if len % WORD_BITS == 0 {
                words.push(0);
            }
            if bit {
                words[len / WORD_BITS] |= 1 << (len % WORD_BITS);
            }
            len += 1;
        }
        Self { len, words }
    }

    /// Builds a vector of length `len` from the low bits of `mask`
    /// (bit `i` of the mask is coordinate `i`).
    pub fn from_mask(len: usize, mask: u64) -> Self {
        assert!(len <= WORD_BITS, "mask vectors hold at most 64 coordinates");
        let mut v = Self::zeros(len);
        if len > 0 {
            let keep = if len == WORD_BITS { u64::MAX } else { (1 << len) - 1 };
            v.words[0] = mask & keep;
        }
        v
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn words(&self) -> &[u64] {
        &self.words
    }

    /// # Panics
    /// Panics if `i >= len`.
    pub fn get(&self, i: usize) -> bool {
        assert!(i < self.len, "coordinate {i} out of range (len {})", self.len);
        (self.words[i / WORD_BITS] >> (i % WORD_BITS)) & 1 == 1
    }

    /// # Panics
    /// Panics if `i >= len`.
    pub fn set(&mut self, i: usize, bit: bool) {
        assert!(i < self.len, "coordinate {i} out of range (len {})", self.len);
        let mask = 1u64 << (i % WORD_BITS);
        if bit {
            self.words[i / WORD_BITS] |= mask;
        } else {
            self.words[i / WORD_BITS] &= !mask;
        }
    }

    pub fn flip(&mut self, i: usize) {
        assert!(i < self.len, "coordinate {i} out of range (len {})", self.len);
        self.words[i / WORD_BITS] ^= 1 << (i % WORD_BITS);
    }

    /// Adds `other` into `self` (coordinate-wise XOR).
    ///
    /// # Panics
    /// Panics if the lengths differ.
    pub fn xor_assign(&mut self, other: &F2Vector) {
        assert_eq!(self.len, other.len, "F2 vectors of different lengths");
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    pub fn xor(&self, other: &F2Vector) -> F2Vector {
        let mut out = self.clone();
        out.xor_assign(other);
        out
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Indices of the set coordinates, ascending.
    pub fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &word)| {
            let mut w = word;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let b = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(wi * WORD_BITS + b)
            })
        })
    }

    pub fn bits(&self) -> impl Iterator<Item = bool> + '_ {
        (0..self.len).map(move |i| self.get(i))
    }

    pub fn dot(&self, other: &F2Vector) -> bool {
        assert_eq!(self.len, other.len, "F2 vectors of different lengths");
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones())
            .sum::<u32>()
            % 2
            == 1
    }

    /// `self` followed by `other`.
    pub fn concat(&self, other: &F2Vector) -> F2Vector {
        F2Vector::from_bits(self.bits().chain(other.bits()))
    }

    /// Coordinates `start..end`.
    pub fn slice(&self, start: usize, end: usize) -> F2Vector {
        F2Vector::from_bits((start..end).map(|i| self.get(i)))
    }

    /// Low word, for vectors of at most 64 coordinates.
    pub fn to_mask(&self) -> u64 {
        assert!(self.len <= WORD_BITS);
        self.words.first().copied().unwrap_or(0)
    }
}

fn leading_bit(words: &[u64], from_word: usize) -> Option<usize> {
    words[from_word..]
        .iter()
        .position(|&w| w != 0)
        .map(|k| (from_word + k) * WORD_BITS + words[from_word + k].trailing_zeros() as usize)
}

/// Lexicographic on the bitstring, coordinate 0 first, after length.
impl Ord for F2Vector {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len.cmp(&other.len).then_with(|| {
            for (a, b) in self.words.iter().zip(&other.words) {
                if a != b {
                    let lowest = (a ^ b).trailing_zeros();
                    return ((a >> lowest) & 1).cmp(&((b >> lowest) & 1));
                }
            }
            Ordering::Equal
        })
    }
}

impl PartialOrd for F2Vector {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for F2Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for bit in self.bits() {
            f.write_str(if bit { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for F2Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F2Vector({self})")
    }
}

impl FromStr for F2Vector {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut bits = Vec::with_capacity(s.len());
        for (col, ch) in s.chars().enumerate() {
            match ch {
                '0' => bits.push(false),
                '1' => bits.push(true),
                _ => {
                    return Err(Error::Parse {
                        line: 1,
                        column: col + 1,
                        message: format!("expected '0' or '1', found {ch:?}"),
                    })
                }
            }
        }
        Ok(F2Vector::from_bits(bits))
    }
}

/// Row-major matrix over F2.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct F2Matrix {
    rows: Vec<F2Vector>,
    ncols: usize,
}

impl F2Matrix {
    pub fn new(ncols: usize) -> Self {
        Self {
            rows: Vec::new(),
            ncols,
        }
    }

    pub fn from_rows(ncols: usize, rows: Vec<F2Vector>) -> Result<Self> {
        if let Some(bad) = rows.iter().find(|r| r.len() != ncols) {
            return Err(Error::DimensionMismatch {
                expected: ncols,
                found: bad.len(),
            });
        }
        Ok(Self { rows, ncols })
    }

    pub fn identity(n: usize) -> Self {
        Self {
            rows: (0..n).map(|i| F2Vector::unit(n, i)).collect(),
            ncols: n,
        }
    }

    pub fn push_row(&mut self, row: F2Vector) -> Result<()> {
        if row.len() != self.ncols {
            return Err(Error::DimensionMismatch {
                expected: self.ncols,
                found: row.len(),
            });
        }
        self.rows.push(row);
        Ok(())
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rows(&self) -> &[F2Vector] {
        &self.rows
    }

    /// Sum of the rows selected by `coefficients`.
    pub fn combine(&self, coefficients: &F2Vector) -> F2Vector {
        assert_eq!(coefficients.len(), self.nrows());
        let mut acc = F2Vector::zeros(self.ncols);
        for i in coefficients.ones() {
            acc.xor_assign(&self.rows[i]);
        }
        acc
    }

    /// Rank of the row space.
    pub fn rank(&self) -> usize {
        let mut echelon = Echelon::new(self.ncols);
        self.rows.iter().filter(|row| echelon.insert(row)).count()
    }

    /// The first row dependency found when inserting rows top to bottom,
    /// as a coefficient vector over the rows. `None` iff the rows are
    /// linearly independent.
    pub fn dependency_certificate(&self) -> Option<F2Vector> {
        let mut echelon = TrackedEchelon::new(self.ncols, self.nrows());
        self.rows
            .iter()
            .enumerate()
            .find_map(|(i, row)| echelon.insert(i, row))
    }

    /// Some `c` with `c·rows = target`, if `target` lies in the row space.
    pub fn solve_left(&self, target: &F2Vector) -> Option<F2Vector> {
        assert_eq!(target.len(), self.ncols, "target length differs from ncols");
        let mut echelon = TrackedEchelon::new(self.ncols, self.nrows());
        for (i, row) in self.rows.iter().enumerate() {
            echelon.insert(i, row);
        }
        echelon.reduce(target)
    }

    /// A basis of the left kernel `{c : c·rows = 0}`: one certificate for
    /// every row that depends on the rows above it.
    pub fn left_kernel(&self) -> Vec<F2Vector> {
        let mut echelon = TrackedEchelon::new(self.ncols, self.nrows());
        self.rows
            .iter()
            .enumerate()
            .filter_map(|(i, row)| echelon.insert(i, row))
            .collect()
    }
}

/// Reduced basis indexed by leftmost pivot.
struct Echelon {
    pivot_row: Vec<Option<usize>>,
    basis: Vec<Vec<u64>>,
}

impl Echelon {
    fn new(ncols: usize) -> Self {
        Self {
            pivot_row: vec![None; ncols],
            basis: Vec::new(),
        }
    }

    /// Returns true if `row` was independent of the basis (and is now in it).
    fn insert(&mut self, row: &F2Vector) -> bool {
        let mut work = row.words.clone();
        let mut from = 0;
        while let Some(p) = leading_bit(&work, from) {
            from = p / WORD_BITS;
            match self.pivot_row[p] {
                Some(b) => {
                    for (a, b) in work[from..].iter_mut().zip(&self.basis[b][from..]) {
                        *a ^= b;
                    }
                }
                None => {
                    self.pivot_row[p] = Some(self.basis.len());
                    self.basis.push(work);
                    return true;
                }
            }
        }
        false
    }
}

/// Echelon basis that remembers which input rows each basis row combines.
struct TrackedEchelon {
    nrows: usize,
    pivot_row: Vec<Option<usize>>,
    basis: Vec<(Vec<u64>, F2Vector)>,
}

impl TrackedEchelon {
    fn new(ncols: usize, nrows: usize) -> Self {
        Self {
            nrows,
            pivot_row: vec![None; ncols],
            basis: Vec::new(),
        }
    }

    fn insert(&mut self, index: usize, row: &F2Vector) -> Option<F2Vector> {
        let mut work = row.words.clone();
        let mut combo = F2Vector::unit(self.nrows, index);
        let mut from = 0;
        while let Some(p) = leading_bit(&work, from) {
            from = p / WORD_BITS;
            match self.pivot_row[p] {
                Some(b) => {
                    let (bw, bc) = &self.basis[b];
                    for (a, b) in work[from..].iter_mut().zip(&bw[from..]) {
                        *a ^= b;
                    }
                    combo.xor_assign(bc);
                }
                None => {
                    self.pivot_row[p] = Some(self.basis.len());
                    self.basis.push((work, combo));
                    return None;
                }
            }
        }
        Some(combo)
    }

    /// Expresses `target` through the basis; `None` if it is outside the span.
    fn reduce(&self, target: &F2Vector) -> Option<F2Vector> {
        let mut work = target.words.clone();
        let mut combo = F2Vector::zeros(self.nrows);
        let mut from = 0;
        while let Some(p) = leading_bit(&work, from) {
            from = p / WORD_BITS;
            let (bw, bc) = &self.basis[self.pivot_row[p]?];
            for (a, b) in work[from..].iter_mut().zip(&bw[from..]) {
                *a ^= b;
            }
            combo.xor_assign(bc);
        }
        Some(combo)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&str]) -> F2Matrix {
        let rows: Vec<F2Vector> = rows.iter().map(|r| r.parse().unwrap()).collect();
        let ncols = rows.first().map_or(0, F2Vector::len);
        F2Matrix::from_rows(ncols, rows).unwrap()
    }

    #[test]
    fn rank_small_cases() {
        assert_eq!(F2Matrix::identity(3).rank(), 3);
        assert_eq!(m(&["00000", "00000"]).rank(), 0);
        // sym-coordinates (d0, d1, off01) of (1 0;0 0), (0 0;0 1), (1 1;1 1)
        assert_eq!(m(&["100", "010", "111"]).rank(), 3);
    }

    #[test]
    fn empty_matrix() {
        let e = F2Matrix::new(7);
        assert_eq!(e.rank(), 0);
        assert_eq!(e.dependency_certificate(), None);
        assert!(e.left_kernel().is_empty());
    }

    #[test]
    fn certificates() {
        assert_eq!(
            m(&["100", "010", "110"]).dependency_certificate(),
            Some("111".parse().unwrap())
        );
        assert_eq!(m(&["100", "010", "001"]).dependency_certificate(), None);
        // a zero row is its own certificate
        assert_eq!(
            m(&["100", "000", "010"]).dependency_certificate(),
            Some("010".parse().unwrap())
        );
    }

    #[test]
    fn ragged_rows_rejected() {
        let rows = vec![F2Vector::zeros(3), F2Vector::zeros(4)];
        assert_eq!(
            F2Matrix::from_rows(3, rows),
            Err(Error::DimensionMismatch { expected: 3, found: 4 })
        );
    }

    #[test]
    fn wide_rows_cross_word_boundaries() {
        let mut a = F2Vector::zeros(130);
        a.set(0, true);
        a.set(64, true);
        a.set(129, true);
        let mut b = F2Vector::zeros(130);
        b.set(64, true);
        let c = a.xor(&b);
        let mat = F2Matrix::from_rows(130, vec![a, b, c]).unwrap();
        assert_eq!(mat.rank(), 2);
        assert_eq!(mat.dependency_certificate(), Some("111".parse().unwrap()));
    }

    #[test]
    fn ordering_matches_bitstrings() {
        let mut v: Vec<F2Vector> = ["110", "001", "100", "011", "000"]
            .iter()
            .map(|s| s.parse().unwrap())
            .collect();
        v.sort();
        let s: Vec<String> = v.iter().map(ToString::to_string).collect();
        assert_eq!(s, ["000", "001", "011", "100", "110"]);
    }

    #[test]
    fn ones_and_display() {
        let v: F2Vector = "0110001".parse().unwrap();
        assert_eq!(v.ones().collect::<Vec<_>>(), [1, 2, 6]);
        assert_eq!(v.to_string(), "0110001");
        assert_eq!(v.count_ones(), 3);
        assert!("01x".parse::<F2Vector>().is_err());
    }

    #[test]
    fn solve_left_expresses_targets() {
        let mat = m(&["110", "011", "111"]);
        for t in ["100", "010", "001", "101"] {
            let target: F2Vector = t.parse().unwrap();
            let c = mat.solve_left(&target).unwrap();
            assert_eq!(mat.combine(&c), target);
        }
        let thin = m(&["110", "011"]);
        assert_eq!(thin.solve_left(&"100".parse().unwrap()), None);
    }

    #[test]
    fn left_kernel_dimension() {
        let mat = m(&["110", "011", "101", "000", "110"]);
        let kernel = mat.left_kernel();
        assert_eq!(kernel.len(), mat.nrows() - mat.rank());
        for c in &kernel {
            assert!(mat.combine(c).is_zero());
        }
    }
}
