//! Dense bit vectors over GF(2).
//!
//! Bit `i` lives in word `i / 64` at position `i % 64`. Bits past `len` in the
//! last word are always zero, so word-level equality and popcounts are exact.

use std::fmt;

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct BitVec {
    len: usize,
    words: Vec<u64>,
}

fn word_count(len: usize) -> usize {
    len.div_ceil(64)
}

impl BitVec {
    pub fn zeros(len: usize) -> Self {
        BitVec {
            len,
            words: vec![0; word_count(len)],
        }
    }

    pub fn ones(len: usize) -> Self {
        let mut v = BitVec {
            len,
            words: vec![u64::MAX; word_count(len)],
        };
        v.clear_tail();
        v
    }

    /// Builds a vector with the listed bits set. Repeated indices toggle.
    pub fn from_indices<I: IntoIterator<Item = usize>>(len: usize, idx: I) -> Self {
        let mut v = BitVec::zeros(len);
        for i in idx {
            v.flip(i);
        }
        v
    }

    pub fn from_bools(bits: &[bool]) -> Self {
        let mut v = BitVec::zeros(bits.len());
        for (i, &b) in bits.iter().enumerate() {
            if b {
                v.set(i, true);
            }
        }
        v
    }

    /// Low `len` bits of `value`, bit 0 first.
    pub fn from_u64(len: usize, value: u64) -> Self {
        assert!(len <= 64);
        let mut v = BitVec::zeros(len);
        if len > 0 {
            v.words[0] = value;
            v.clear_tail();
        }
        v
    }

    fn clear_tail(&mut self) {
        let r = self.len % 64;
        if r != 0 {
            if let Some(w) = self.words.last_mut() {
                *w &= (1u64 << r) - 1;
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

    #[inline]
    pub fn get(&self, i: usize) -> bool {
        assert!(i < self.len, "bit {i} out of range {}", self.len);
        (self.words[i >> 6] >> (i & 63)) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, i: usize, b: bool) {
        assert!(i < self.len, "bit {i} out of range {}", self.len);
        let m = 1u64 << (i & 63);
        if b {
            self.words[i >> 6] |= m;
        } else {
            self.words[i >> 6] &= !m;
        }
    }

    #[inline]
    pub fn flip(&mut self, i: usize) {
        assert!(i < self.len, "bit {i} out of range {}", self.len);
        self.words[i >> 6] ^= 1u64 << (i & 63);
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Parity of the popcount.
    pub fn parity(&self) -> bool {
        self.words.iter().fold(0u32, |a, w| a ^ w.count_ones()) & 1 == 1
    }

    pub fn xor_assign(&mut self, other: &BitVec) {
        assert_eq!(self.len, other.len, "bit vector length mismatch");
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    pub fn and_assign(&mut self, other: &BitVec) {
        assert_eq!(self.len, other.len, "bit vector length mismatch");
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= b;
        }
    }

    pub fn or_assign(&mut self, other: &BitVec) {
        assert_eq!(self.len, other.len, "bit vector length mismatch");
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub fn xor(&self, other: &BitVec) -> BitVec {
        let mut r = self.clone();
        r.xor_assign(other);
        r
    }

    pub fn and(&self, other: &BitVec) -> BitVec {
        let mut r = self.clone();
        r.and_assign(other);
        r
    }

    pub fn or(&self, other: &BitVec) -> BitVec {
        let mut r = self.clone();
        r.or_assign(other);
        r
    }

    /// popcount(self AND other).
    pub fn and_count(&self, other: &BitVec) -> usize {
        assert_eq!(self.len, other.len, "bit vector length mismatch");
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    /// Parity of popcount(self AND other), the GF(2) inner product.
    pub fn dot(&self, other: &BitVec) -> bool {
        assert_eq!(self.len, other.len, "bit vector length mismatch");
        self.words
            .iter()
            .zip(&other.words)
            .fold(0u32, |acc, (a, b)| acc ^ (a & b).count_ones())
            & 1
            == 1
    }

    pub fn first_one(&self) -> Option<usize> {
        self.words
            .iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(k, w)| k * 64 + w.trailing_zeros() as usize)
    }

    pub fn iter_ones(&self) -> Ones<'_> {
        Ones {
            words: &self.words,
            k: 0,
            cur: self.words.first().copied().unwrap_or(0),
        }
    }

    pub fn to_indices(&self) -> Vec<usize> {
        self.iter_ones().collect()
    }

    /// Grows or truncates to `new_len`; new bits are zero.
    pub fn resize(&mut self, new_len: usize) {
        self.words.resize(word_count(new_len), 0);
        self.len = new_len;
        self.clear_tail();
    }

    /// Copy of bits `[start, start + len)`.
    pub fn slice(&self, start: usize, len: usize) -> BitVec {
        assert!(start + len <= self.len);
        BitVec::from_indices(
            len,
            self.iter_ones()
                .filter(|&i| i >= start && i < start + len)
                .map(|i| i - start),
        )
    }

    /// Copy with bits moved to `offset` inside a vector of length `len`.
    pub fn embed(&self, len: usize, offset: usize) -> BitVec {
        assert!(offset + self.len <= len);
        BitVec::from_indices(len, self.iter_ones().map(|i| i + offset))
    }

    /// Bit string, bit 0 leftmost.
    pub fn to_bit_string(&self) -> String {
        (0..self.len)
            .map(|i| if self.get(i) { '1' } else { '0' })
            .collect()
    }
}

impl fmt::Debug for BitVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BitVec({})", self.to_bit_string())
    }
}

pub struct Ones<'a> {
    words: &'a [u64],
    k: usize,
    cur: u64,
}

impl Iterator for Ones<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        loop {
            if self.cur != 0 {
                let b = self.cur.trailing_zeros() as usize;
                self.cur &= self.cur - 1;
                return Some(self.k * 64 + b);
            }
            self.k += 1;
            if self.k >= self.words.len() {
                return None;
            }
            self.cur = self.words[self.k];
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ones_clears_tail() {
        let v = BitVec::ones(70);
        assert_eq!(v.count_ones(), 70);
        assert_eq!(v.words()[1], (1 << 6) - 1);
    }

    #[test]
    fn iter_ones_crosses_words() {
        let v = BitVec::from_indices(130, [0, 63, 64, 129]);
        assert_eq!(v.to_indices(), vec![0, 63, 64, 129]);
        assert_eq!(v.first_one(), Some(0));
    }

    #[test]
    fn dot_and_parity() {
        let a = BitVec::from_indices(10, [1, 2, 3]);
        let b = BitVec::from_indices(10, [2, 3, 4]);
        assert!(!a.dot(&b));
        assert!(a.parity());
        assert_eq!(a.and_count(&b), 2);
    }

    #[test]
    fn slice_and_embed_round_trip() {
        let v = BitVec::from_indices(8, [1, 5, 7]);
        let e = v.embed(20, 6);
        assert_eq!(e.to_indices(), vec![7, 11, 13]);
        assert_eq!(e.slice(6, 8), v);
    }
}
