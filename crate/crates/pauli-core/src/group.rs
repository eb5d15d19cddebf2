//! Groups generated by Pauli strings, with exact enumeration for small ranks.

use serde::{Deserialize, Serialize};

use crate::bits::BitVec;
use crate::gf2::XorBasis;
use crate::pauli::PauliString;
use crate::PauliError;

/// Largest generator count accepted by exhaustive enumeration (2^26 elements).
pub const MAX_ENUM_GENERATORS: usize = 26;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum GroupKind {
    XStabilizer,
    ZStabilizer,
    Gauge,
    Mixed,
}

/// A group stored by canonical generators: reduced row echelon form of the
/// symplectic vectors `[x | z]`, pivots on the lowest qubit index.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PauliGroup {
    n: usize,
    generators: Vec<PauliString>,
    kind: GroupKind,
}

impl PauliGroup {
    /// Canonicalizes `gens`, dropping dependent ones. Stabilizer kinds must
    /// pairwise commute.
    pub fn new(n: usize, gens: &[PauliString], kind: GroupKind) -> Result<Self, PauliError> {
        for g in gens {
            if g.n() != n {
                return Err(PauliError::LengthMismatch {
                    left: n,
                    right: g.n(),
                });
            }
        }
        if matches!(kind, GroupKind::XStabilizer | GroupKind::ZStabilizer) {
            for i in 0..gens.len() {
                for j in i + 1..gens.len() {
                    if !gens[i].commutes(&gens[j])? {
                        return Err(PauliError::NonCommuting { i, j });
                    }
                }
            }
        }
        let basis = XorBasis::from_rows(2 * n, gens.iter().map(|g| g.symplectic()).collect::<Vec<_>>().iter());
        let generators = basis
            .reduced_rows()
            .iter()
            .map(PauliString::from_symplectic)
            .collect();
        Ok(PauliGroup {
            n,
            generators,
            kind,
        })
    }

    pub fn trivial(n: usize, kind: GroupKind) -> Self {
        PauliGroup {
            n,
            generators: Vec::new(),
            kind,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn kind(&self) -> GroupKind {
        self.kind
    }

    pub fn generators(&self) -> &[PauliString] {
        &self.generators
    }

    pub fn rank(&self) -> usize {
        self.generators.len()
    }

    fn basis(&self) -> XorBasis {
        XorBasis::from_rows(
            2 * self.n,
            self.generators
                .iter()
                .map(|g| g.symplectic())
                .collect::<Vec<_>>()
                .iter(),
        )
    }

    /// Membership up to phase.
    pub fn contains(&self, p: &PauliString) -> bool {
        p.n() == self.n && self.basis().contains(&p.symplectic())
    }

    /// Group generated by `self` and `other`.
    pub fn join(&self, other: &PauliGroup, kind: GroupKind) -> Result<PauliGroup, PauliError> {
        let mut g = self.generators.clone();
        g.extend(other.generators.iter().cloned());
        PauliGroup::new(self.n, &g, kind)
    }

    fn check_enumerable(&self) -> Result<(), PauliError> {
        if self.rank() > MAX_ENUM_GENERATORS {
            return Err(PauliError::TooLarge {
                generators: self.rank(),
                bound: MAX_ENUM_GENERATORS,
            });
        }
        Ok(())
    }

    /// Visits `rep * g` for every group element `g` in Gray-code order, as
    /// `(x words, z words)`. Stops early when `f` returns false.
    pub fn for_each_in_coset<F>(&self, rep: &PauliString, mut f: F) -> Result<(), PauliError>
    where
        F: FnMut(&[u64], &[u64]) -> bool,
    {
        self.check_enumerable()?;
        if rep.n() != self.n {
            return Err(PauliError::LengthMismatch {
                left: self.n,
                right: rep.n(),
            });
        }
        let gx: Vec<&[u64]> = self.generators.iter().map(|g| g.xmask().words()).collect();
        let gz: Vec<&[u64]> = self.generators.iter().map(|g| g.zmask().words()).collect();
        let mut x = rep.xmask().words().to_vec();
        let mut z = rep.zmask().words().to_vec();
        if !f(&x, &z) {
            return Ok(());
        }
        let total: u64 = 1u64 << self.rank();
        for i in 1..total {
            let k = i.trailing_zeros() as usize;
            for (a, b) in x.iter_mut().zip(gx[k]) {
                *a ^= b;
            }
            for (a, b) in z.iter_mut().zip(gz[k]) {
                *a ^= b;
            }
            if !f(&x, &z) {
                break;
            }
        }
        Ok(())
    }

    /// Number of elements of `rep * G` with each weight `0..=n`.
    pub fn coset_weight_distribution(&self, rep: &PauliString) -> Result<Vec<u64>, PauliError> {
        let mut counts = vec![0u64; self.n + 1];
        self.for_each_in_coset(rep, |x, z| {
            let w: u32 = x.iter().zip(z).map(|(a, b)| (a | b).count_ones()).sum();
            counts[w as usize] += 1;
            true
        })?;
        Ok(counts)
    }

    pub fn weight_distribution(&self) -> Result<Vec<u64>, PauliError> {
        self.coset_weight_distribution(&PauliString::identity(self.n))
    }

    /// True iff every element has weight divisible by `modulus`.
    pub fn span_weights_mod(&self, modulus: usize) -> Result<bool, PauliError> {
        if modulus == 0 {
            return Err(PauliError::InvalidModulus);
        }
        let mut ok = true;
        self.for_each_in_coset(&PauliString::identity(self.n), |x, z| {
            let w: u32 = x.iter().zip(z).map(|(a, b)| (a | b).count_ones()).sum();
            ok = (w as usize).is_multiple_of(modulus);
            ok
        })?;
        Ok(ok)
    }

    /// Explicit element list; only for small groups.
    pub fn elements(&self) -> Result<Vec<PauliString>, PauliError> {
        let mut out = Vec::with_capacity(1usize << self.rank().min(MAX_ENUM_GENERATORS));
        let n = self.n;
        self.for_each_in_coset(&PauliString::identity(n), |x, z| {
            let mut xv = BitVec::zeros(n);
            let mut zv = BitVec::zeros(n);
            for i in 0..n {
                if (x[i >> 6] >> (i & 63)) & 1 == 1 {
                    xv.set(i, true);
                }
                if (z[i >> 6] >> (i & 63)) & 1 == 1 {
                    zv.set(i, true);
                }
            }
            out.push(PauliString::from_masks(xv, zv).expect("equal lengths"));
            true
        })?;
        Ok(out)
    }
}

pub fn span_weights_mod(g: &PauliGroup, modulus: usize) -> Result<bool, PauliError> {
    g.span_weights_mod(modulus)
}

pub fn in_group(g: &PauliGroup, p: &PauliString) -> bool {
    g.contains(p)
}
