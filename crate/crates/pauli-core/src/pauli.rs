//! Pauli strings without phase: an X mask and a Z mask over `n` qubits.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::bits::BitVec;
use crate::PauliError;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PauliString {
    n: usize,
    z: BitVec,
    x: BitVec,
}

/// Which pure type a CSS operator has.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum PauliType {
    X,
    Z,
}

impl PauliType {
    pub fn dual(self) -> PauliType {
        match self {
            PauliType::X => PauliType::Z,
            PauliType::Z => PauliType::X,
        }
    }
}

impl fmt::Display for PauliType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PauliType::X => "X",
            PauliType::Z => "Z",
        })
    }
}

impl PauliString {
    pub fn identity(n: usize) -> Self {
        PauliString {
            n,
            z: BitVec::zeros(n),
            x: BitVec::zeros(n),
        }
    }

    pub fn from_masks(x: BitVec, z: BitVec) -> Result<Self, PauliError> {
        if x.len() != z.len() {
            return Err(PauliError::LengthMismatch {
                left: x.len(),
                right: z.len(),
            });
        }
        Ok(PauliString { n: x.len(), z, x })
    }

    /// Pure operator of the given type on a support mask.
    pub fn pure(kind: PauliType, support: BitVec) -> Self {
        let n = support.len();
        match kind {
            PauliType::X => PauliString {
                n,
                x: support,
                z: BitVec::zeros(n),
            },
            PauliType::Z => PauliString {
                n,
                z: support,
                x: BitVec::zeros(n),
            },
        }
    }

    pub fn x_on<I: IntoIterator<Item = usize>>(n: usize, qubits: I) -> Self {
        Self::pure(PauliType::X, BitVec::from_indices(n, qubits))
    }

    pub fn z_on<I: IntoIterator<Item = usize>>(n: usize, qubits: I) -> Self {
        Self::pure(PauliType::Z, BitVec::from_indices(n, qubits))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn xmask(&self) -> &BitVec {
        &self.x
    }

    pub fn zmask(&self) -> &BitVec {
        &self.z
    }

    pub fn support(&self) -> BitVec {
        self.x.or(&self.z)
    }

    pub fn weight(&self) -> usize {
        self.x
            .words()
            .iter()
            .zip(self.z.words())
            .map(|(a, b)| (a | b).count_ones() as usize)
            .sum()
    }

    pub fn is_identity(&self) -> bool {
        self.x.is_zero() && self.z.is_zero()
    }

    pub fn is_pure_x(&self) -> bool {
        self.z.is_zero()
    }

    pub fn is_pure_z(&self) -> bool {
        self.x.is_zero()
    }

    /// The pure type, if any. The identity counts as both; X is reported.
    pub fn pure_type(&self) -> Option<PauliType> {
        if self.is_pure_x() {
            Some(PauliType::X)
        } else if self.is_pure_z() {
            Some(PauliType::Z)
        } else {
            None
        }
    }

    /// Mask of the given pure type (X mask for X, Z mask for Z).
    pub fn mask(&self, kind: PauliType) -> &BitVec {
        match kind {
            PauliType::X => &self.x,
            PauliType::Z => &self.z,
        }
    }

    pub fn commutes(&self, other: &PauliString) -> Result<bool, PauliError> {
        self.check_len(other)?;
        Ok(self.x.dot(&other.z) == self.z.dot(&other.x))
    }

    /// Product up to phase.
    pub fn mul(&self, other: &PauliString) -> Result<PauliString, PauliError> {
        self.check_len(other)?;
        Ok(PauliString {
            n: self.n,
            x: self.x.xor(&other.x),
            z: self.z.xor(&other.z),
        })
    }

    pub fn mul_assign(&mut self, other: &PauliString) -> Result<(), PauliError> {
        self.check_len(other)?;
        self.x.xor_assign(&other.x);
        self.z.xor_assign(&other.z);
        Ok(())
    }

    fn check_len(&self, other: &PauliString) -> Result<(), PauliError> {
        if self.n != other.n {
            return Err(PauliError::LengthMismatch {
                left: self.n,
                right: other.n,
            });
        }
        Ok(())
    }

    /// Symplectic vector `[x | z]` of length `2n`.
    pub fn symplectic(&self) -> BitVec {
        let mut v = self.x.clone();
        v.resize(2 * self.n);
        for i in self.z.iter_ones() {
            v.set(self.n + i, true);
        }
        v
    }

    pub fn from_symplectic(v: &BitVec) -> PauliString {
        let n = v.len() / 2;
        PauliString {
            n,
            x: v.slice(0, n),
            z: v.slice(n, n),
        }
    }

    /// Moves the operator into a register of `n` qubits at `offset`.
    pub fn embed(&self, n: usize, offset: usize) -> PauliString {
        PauliString {
            n,
            x: self.x.embed(n, offset),
            z: self.z.embed(n, offset),
        }
    }

    /// Relabels qubit `i` to `map[i]` inside a register of `n` qubits.
    pub fn remap(&self, n: usize, map: &[usize]) -> PauliString {
        assert_eq!(map.len(), self.n);
        PauliString {
            n,
            x: BitVec::from_indices(n, self.x.iter_ones().map(|i| map[i])),
            z: BitVec::from_indices(n, self.z.iter_ones().map(|i| map[i])),
        }
    }

    pub fn to_text(&self) -> String {
        (0..self.n)
            .map(|i| match (self.x.get(i), self.z.get(i)) {
                (false, false) => 'I',
                (true, false) => 'X',
                (true, true) => 'Y',
                (false, true) => 'Z',
            })
            .collect()
    }
}

impl FromStr for PauliString {
    type Err = PauliError;

    fn from_str(s: &str) -> Result<Self, PauliError> {
        let chars: Vec<char> = s.chars().collect();
        let n = chars.len();
        let mut p = PauliString::identity(n);
        for (i, c) in chars.into_iter().enumerate() {
            match c {
                'I' => {}
                'X' => p.x.set(i, true),
                'Z' => p.z.set(i, true),
                'Y' => {
                    p.x.set(i, true);
                    p.z.set(i, true);
                }
                other => return Err(PauliError::Parse { ch: other, pos: i }),
            }
        }
        Ok(p)
    }
}

impl fmt::Display for PauliString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl fmt::Debug for PauliString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Pauli({})", self.to_text())
    }
}

impl Serialize for PauliString {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_text())
    }
}

impl<'de> Deserialize<'de> for PauliString {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

pub fn weight(p: &PauliString) -> usize {
    p.weight()
}

pub fn commutes(p: &PauliString, q: &PauliString) -> Result<bool, PauliError> {
    p.commutes(q)
}
