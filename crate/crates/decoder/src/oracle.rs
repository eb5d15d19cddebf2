//! Minimum-weight Z decoding of a single `D_t` from its X-face syndrome.
//!
//! The table is filled by enumerating supports in order of weight and, within
//! a weight, lexicographically; the first support reaching a syndrome is kept.

use colorcode::TriangularCode;
use itertools::Itertools;
use pauli_core::BitVec;

use crate::DecoderError;

/// Largest order with a precomputed table.
pub const MAX_ORACLE_ORDER: usize = 3;

#[derive(Clone, Debug)]
pub struct Oracle {
    t: usize,
    n_faces: usize,
    table: Vec<Vec<usize>>,
}

fn pack(bits: &BitVec) -> usize {
    bits.iter_ones().fold(0, |acc, i| acc | 1 << i)
}

impl Oracle {
    pub fn new(code: &TriangularCode) -> Result<Self, DecoderError> {
        if code.t > MAX_ORACLE_ORDER {
            return Err(DecoderError::OrderTooLarge {
                t: code.t,
                max: MAX_ORACLE_ORDER,
            });
        }
        let n_faces = code.faces.len();
        let mut cols = vec![0usize; code.n];
        for (k, f) in code.faces.iter().enumerate() {
            for &q in &f.qubits {
                cols[q] |= 1 << k;
            }
        }
        let size = 1usize << n_faces;
        let mut table: Vec<Option<Vec<usize>>> = vec![None; size];
        table[0] = Some(Vec::new());
        let mut filled = 1;
        'weights: for w in 1..=code.n {
            for support in (0..code.n).combinations(w) {
                let s = support.iter().fold(0, |acc, &q| acc ^ cols[q]);
                if table[s].is_none() {
                    table[s] = Some(support);
                    filled += 1;
                    if filled == size {
                        break 'weights;
                    }
                }
            }
        }
        let table = table
            .into_iter()
            .collect::<Option<Vec<_>>>()
            .ok_or(DecoderError::Unreachable)?;
        Ok(Oracle { t: code.t, n_faces, table })
    }

    pub fn t(&self) -> usize {
        self.t
    }

    /// Lightest Z support with this face syndrome (bit 1 for a -1 face).
    pub fn decode(&self, syndrome: &BitVec) -> Result<&[usize], DecoderError> {
        if syndrome.len() != self.n_faces {
            return Err(DecoderError::SyndromeLength {
                expected: self.n_faces,
                got: syndrome.len(),
            });
        }
        Ok(&self.table[pack(syndrome)])
    }

    /// Largest weight stored in the table.
    pub fn max_weight(&self) -> usize {
        self.table.iter().map(Vec::len).max().unwrap_or(0)
    }
}

/// One-shot [`Oracle`] lookup.
pub fn oracle_decode(code: &TriangularCode, syndrome: &BitVec) -> Result<Vec<usize>, DecoderError> {
    Ok(Oracle::new(code)?.decode(syndrome)?.to_vec())
}
