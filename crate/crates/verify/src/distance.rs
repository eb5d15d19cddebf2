//! Minimum logical weight.
//!
//! [`min_logical_weight`] walks supports in increasing weight with a running
//! syndrome, so each candidate costs one column XOR. The enumerated variant
//! walks the logical cosets of the commutant instead and is exact whenever
//! that space is small; the tests use it as an independent oracle.

use pauli_core::{left_kernel, BitVec, PauliString, PauliType, XorBasis};
use serde::{Deserialize, Serialize};

use crate::{CssCode, VerifyError};

/// Largest number of candidate supports a direct search may visit.
pub const SEARCH_BUDGET: u128 = 1_000_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Distance {
    Exact(usize),
    NoneUpTo { none_up_to: usize },
}

impl Distance {
    pub fn exact(self) -> Option<usize> {
        match self {
            Distance::Exact(d) => Some(d),
            Distance::NoneUpTo { .. } => None,
        }
    }
}

impl std::fmt::Display for Distance {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Distance::Exact(d) => write!(f, "{d}"),
            Distance::NoneUpTo { none_up_to } => write!(f, "none <= {none_up_to}"),
        }
    }
}

fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let mut r: u128 = 1;
    for i in 0..k {
        r = r * (n - i) as u128 / (i + 1) as u128;
    }
    r
}

fn columns(rows: &[BitVec], n: usize) -> Vec<BitVec> {
    let mut cols = vec![BitVec::zeros(rows.len()); n];
    for (r, row) in rows.iter().enumerate() {
        for q in row.iter_ones() {
            cols[q].set(r, true);
        }
    }
    cols
}

struct Walk {
    n: usize,
    cols: Vec<BitVec>,
    span: XorBasis,
    chosen: Vec<usize>,
}

impl Walk {
    fn go(&mut self, start: usize, left: usize, syn: &BitVec) -> bool {
        if left == 0 {
            if !syn.is_zero() {
                return false;
            }
            let m = BitVec::from_indices(self.n, self.chosen.iter().copied());
            return !self.span.contains(&m);
        }
        for q in start..=self.n - left {
            let next = syn.xor(&self.cols[q]);
            self.chosen.push(q);
            let hit = self.go(q + 1, left - 1, &next);
            self.chosen.pop();
            if hit {
                return true;
            }
        }
        false
    }
}

/// Exact minimum weight of a logical operator of type `kind`, or a certificate
/// that none exists up to `wmax`.
pub fn min_logical_weight(code: &CssCode, kind: PauliType, wmax: usize) -> Result<Distance, VerifyError> {
    let n = code.n;
    let wmax = wmax.min(n);
    let candidates: u128 = (1..=wmax).map(|w| binomial(n, w)).sum();
    if candidates > SEARCH_BUDGET {
        return Err(VerifyError::Budget {
            candidates,
            budget: SEARCH_BUDGET,
        });
    }
    let opp = code.gens(kind.dual());
    let mut walk = Walk {
        n,
        cols: columns(opp, n),
        span: XorBasis::from_rows(n, code.gens(kind)),
        chosen: Vec::new(),
    };
    let zero = BitVec::zeros(opp.len());
    for w in 1..=wmax {
        if walk.go(0, w, &zero) {
            return Ok(Distance::Exact(w));
        }
    }
    Ok(Distance::NoneUpTo { none_up_to: wmax })
}

/// Minimum logical weight by enumerating every element of every nontrivial
/// coset of the same-type group inside the commutant.
pub fn min_logical_weight_enumerated(code: &CssCode, kind: PauliType) -> Result<usize, VerifyError> {
    let n = code.n;
    let null = left_kernel(&columns(code.gens(kind.dual()), n));
    let mut basis = XorBasis::from_rows(n, code.gens(kind));
    let logical: Vec<BitVec> = null.into_iter().filter(|v| basis.insert(v)).collect();
    let group = code.group(kind);
    let mut best = usize::MAX;
    for mask in 1u64..(1u64 << logical.len()) {
        let mut rep = BitVec::zeros(n);
        for (i, l) in logical.iter().enumerate() {
            if mask >> i & 1 == 1 {
                rep.xor_assign(l);
            }
        }
        let dist = group.coset_weight_distribution(&PauliString::pure(kind, rep))?;
        if let Some(w) = dist.iter().position(|&c| c > 0) {
            best = best.min(w);
        }
    }
    Ok(best)
}
