//! Fixed-length binary vectors and a little GF(2) linear algebra.

use std::fmt;

use crate::poly::BinaryPolynomial;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitVector {
    len: usize,
    words: Vec<u64>,
}

impl BitVector {
    pub fn zeros(len: usize) -> Self {
        Self {
            len,
            words: vec![0; len.div_ceil(64)],
        }
    }

    pub fn ones(len: usize) -> Self {
        let mut v = Self::zeros(len);
        for w in v.words.iter_mut() {
            *w = u64::MAX;
        }
        v.mask_tail();
        v
    }

    /// From a slice of 0/1 values; anything nonzero counts as 1.
    pub fn from_bits(bits: &[u8]) -> Self {
        let mut v = Self::zeros(bits.len());
        for (i, &b) in bits.iter().enumerate() {
            if b != 0 {
                v.set(i, true);
            }
        }
        v
    }

    /// Coefficients of `p` as a vector of length `len`; higher terms are dropped.
    pub fn from_poly(p: &BinaryPolynomial, len: usize) -> Self {
        let mut v = Self::zeros(len);
        for (i, w) in v.words.iter_mut().enumerate() {
            *w = p.words().get(i).copied().unwrap_or(0);
        }
        v.mask_tail();
        v
    }

    pub fn to_poly(&self) -> BinaryPolynomial {
        BinaryPolynomial::from_words(self.words.clone())
    }

    fn mask_tail(&mut self) {
        let r = self.len % 64;
        if r != 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= (1u64 << r) - 1;
            }
        }
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

    pub fn get(&self, i: usize) -> bool {
        (self.words[i / 64] >> (i % 64)) & 1 == 1
    }

    pub fn set(&mut self, i: usize, bit: bool) {
        let mask = 1u64 << (i % 64);
        if bit {
            self.words[i / 64] |= mask;
        } else {
            self.words[i / 64] &= !mask;
        }
    }

    pub fn weight(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn xor_assign(&mut self, other: &Self) {
        debug_assert_eq!(self.len, other.len);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    /// Cyclic shift by one position: `(c_0..c_{n-1}) -> (c_{n-1}, c_0, ..)`.
    pub fn cyclic_shift(&self) -> Self {
        let mut out = Self::zeros(self.len);
        if self.len == 0 {
            return out;
        }
        for i in 0..self.len {
            if self.get(i) {
                out.set((i + 1) % self.len, true);
            }
        }
        out
    }

    /// Same vector with one more coordinate appended.
    pub fn push(&self, bit: bool) -> Self {
        let mut out = Self::zeros(self.len + 1);
        out.words[..self.words.len()].copy_from_slice(&self.words);
        out.set(self.len, bit);
        out
    }

    pub fn dot(&self, other: &Self) -> bool {
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones())
            .sum::<u32>()
            % 2
            == 1
    }
}

impl fmt::Debug for BitVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BitVector({self})")
    }
}

impl fmt::Display for BitVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.len {
            f.write_str(if self.get(i) { "1" } else { "0" })?;
        }
        Ok(())
    }
}

/// Reduced row echelon form; returns the nonzero rows and their pivot columns.
pub fn row_reduce(rows: &[BitVector]) -> (Vec<BitVector>, Vec<usize>) {
    let mut m: Vec<BitVector> = rows.to_vec();
    let ncols = m.first().map_or(0, BitVector::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..m.len()).find(|&i| m[i].get(c)) else {
            continue;
        };
        m.swap(r, p);
        let pivot = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i != r && row.get(c) {
                row.xor_assign(&pivot);
            }
        }
        pivots.push(c);
        r += 1;
        if r == m.len() {
            break;
        }
    }
    m.truncate(r);
    (m, pivots)
}

/// A basis of `{v : v . row = 0 for every row}` in GF(2)^ncols.
pub fn nullspace(rows: &[BitVector], ncols: usize) -> Vec<BitVector> {
    let (rref, pivots) = row_reduce(rows);
    let mut is_pivot = vec![false; ncols];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    let mut basis = Vec::new();
    for free in (0..ncols).filter(|&c| !is_pivot[c]) {
        let mut v = BitVector::zeros(ncols);
        v.set(free, true);
        for (row, &p) in rref.iter().zip(&pivots) {
            if row.get(free) {
                v.set(p, true);
            }
        }
        basis.push(v);
    }
    basis
}
