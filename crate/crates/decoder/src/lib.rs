//! Z-error decoding for chained triply-even codes.
//!
//! Step one decodes the type-F syndrome of each bilayer as if it were the
//! syndrome of a single `D_mu`, which locates errors on vertical edges but not
//! their layer. Step two walks the type-B links left to right twice, once with
//! no error on the bare qubit and once with one, placing each bilayer's edge
//! errors in layer-a or layer-b to meet the link parity. A bilayer with no
//! edge errors that still needs odd parity in layer-b gets one vertical pair.
//! The two configurations differ by a logical Z; the lighter one wins.
//!
//! Type-B bits follow the generators of [`ChainedCode`]: bit `mu` is the parity
//! of errors on every qubit left of bilayer `mu` plus layer-b of bilayer `mu`.
//! [`ChainSyndrome::from_adjacent_links`] converts from link parities that only
//! span the neighbouring layer-a and layer-b.

mod oracle;

use chain::ChainedCode;
use pauli_core::{BitVec, PauliString, PauliType};
use serde::{Serialize, Serializer};

pub use oracle::{oracle_decode, Oracle, MAX_ORACLE_ORDER};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum DecoderError {
    #[error("no oracle table for order {t} (max {max})")]
    OrderTooLarge { t: usize, max: usize },
    #[error("syndrome has {got} bits, expected {expected}")]
    SyndromeLength { expected: usize, got: usize },
    #[error("syndrome has {got} bilayers, expected {expected}")]
    BilayerCount { expected: usize, got: usize },
    #[error("some syndrome has no Z error")]
    Unreachable,
}

fn bits<S: Serializer>(b: &BitVec, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&b.to_bit_string())
}

fn bits_vec<S: Serializer>(v: &[BitVec], s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(|b| b.to_bit_string()))
}

/// Syndrome bits, 1 for a -1 eigenvalue.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ChainSyndrome {
    #[serde(serialize_with = "bits_vec")]
    pub type_f: Vec<BitVec>,
    #[serde(serialize_with = "bits")]
    pub type_b: BitVec,
}

impl ChainSyndrome {
    pub fn of_error(code: &ChainedCode, error: &BitVec) -> Self {
        let (type_f, type_b) = code.x_syndrome(error);
        ChainSyndrome { type_f, type_b }
    }

    /// From parities of `X_L(previous layer-a) X_L(layer-b)` for each link.
    pub fn from_adjacent_links(type_f: Vec<BitVec>, adjacent: &BitVec) -> Self {
        let mut type_b = BitVec::zeros(adjacent.len());
        let mut acc = false;
        for mu in 0..adjacent.len() {
            acc ^= adjacent.get(mu);
            type_b.set(mu, acc);
        }
        ChainSyndrome { type_f, type_b }
    }

    /// Inverse of [`ChainSyndrome::from_adjacent_links`].
    pub fn adjacent_links(&self) -> BitVec {
        let mut out = BitVec::zeros(self.type_b.len());
        let mut prev = false;
        for mu in 0..self.type_b.len() {
            out.set(mu, self.type_b.get(mu) ^ prev);
            prev = self.type_b.get(mu);
        }
        out
    }

    pub fn is_null(&self) -> bool {
        self.type_b.is_zero() && self.type_f.iter().all(BitVec::is_zero)
    }

    fn check(&self, code: &ChainedCode) -> Result<(), DecoderError> {
        if self.type_f.len() != code.t {
            return Err(DecoderError::BilayerCount {
                expected: code.t,
                got: self.type_f.len(),
            });
        }
        for (f, gens) in self.type_f.iter().zip(&code.type_f) {
            if f.len() != gens.len() {
                return Err(DecoderError::SyndromeLength {
                    expected: gens.len(),
                    got: f.len(),
                });
            }
        }
        if self.type_b.len() != code.t {
            return Err(DecoderError::SyndromeLength {
                expected: code.t,
                got: self.type_b.len(),
            });
        }
        Ok(())
    }
}

/// Where one bilayer's errors were put, in local ids.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BilayerAssignment {
    pub in_a: Vec<usize>,
    pub in_b: Vec<usize>,
    /// Edge carrying an inserted vertical pair.
    pub vertical_pair: Option<usize>,
}

impl BilayerAssignment {
    pub fn weight(&self) -> usize {
        self.in_a.len() + self.in_b.len() + if self.vertical_pair.is_some() { 2 } else { 0 }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CandidateConfig {
    pub t0_error: bool,
    pub bilayers: Vec<BilayerAssignment>,
    pub weight: usize,
}

impl CandidateConfig {
    pub fn support(&self, code: &ChainedCode) -> BitVec {
        let mut m = BitVec::zeros(code.n);
        m.set(0, self.t0_error);
        for (bl, asg) in code.bilayers.iter().zip(&self.bilayers) {
            for &i in &asg.in_a {
                m.flip(bl.a(i));
            }
            for &i in &asg.in_b {
                m.flip(bl.b(i));
            }
            if let Some(i) = asg.vertical_pair {
                m.flip(bl.a(i));
                m.flip(bl.b(i));
            }
        }
        m
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DecodeResult {
    pub correction: PauliString,
    pub chosen_weight: usize,
    pub rejected_weight: usize,
    pub chosen: CandidateConfig,
    pub rejected: CandidateConfig,
    /// Vertical-edge errors found by the oracle in each bilayer.
    pub oracle_edges: Vec<Vec<usize>>,
}

/// Decoder for one chained code, with its oracle tables built once.
#[derive(Clone, Debug)]
pub struct ChainDecoder {
    code: ChainedCode,
    oracles: Vec<Oracle>,
}

impl ChainDecoder {
    pub fn new(code: &ChainedCode) -> Result<Self, DecoderError> {
        let oracles = code
            .bilayers
            .iter()
            .map(|bl| Oracle::new(&bl.code))
            .collect::<Result<_, _>>()?;
        Ok(ChainDecoder {
            code: code.clone(),
            oracles,
        })
    }

    pub fn code(&self) -> &ChainedCode {
        &self.code
    }

    fn cascade(&self, t0_error: bool, edges: &[Vec<usize>], links: &BitVec) -> CandidateConfig {
        let mut parity = t0_error;
        let mut weight = usize::from(t0_error);
        let mut bilayers = Vec::with_capacity(edges.len());
        for (mu, e) in edges.iter().enumerate() {
            let odd_b = links.get(mu) ^ parity;
            let asg = match (odd_b, e.split_last()) {
                (false, _) => BilayerAssignment {
                    in_a: e.clone(),
                    in_b: Vec::new(),
                    vertical_pair: None,
                },
                (true, Some((&last, rest))) => BilayerAssignment {
                    in_a: rest.to_vec(),
                    in_b: vec![last],
                    vertical_pair: None,
                },
                (true, None) => BilayerAssignment {
                    in_a: Vec::new(),
                    in_b: Vec::new(),
                    vertical_pair: Some(0),
                },
            };
            weight += asg.weight();
            parity ^= e.len() % 2 == 1;
            bilayers.push(asg);
        }
        CandidateConfig {
            t0_error,
            bilayers,
            weight,
        }
    }

    pub fn decode(&self, s: &ChainSyndrome) -> Result<DecodeResult, DecoderError> {
        s.check(&self.code)?;
        let oracle_edges: Vec<Vec<usize>> = self
            .oracles
            .iter()
            .zip(&s.type_f)
            .map(|(o, f)| o.decode(f).map(<[usize]>::to_vec))
            .collect::<Result<_, _>>()?;
        let a = self.cascade(false, &oracle_edges, &s.type_b);
        let b = self.cascade(true, &oracle_edges, &s.type_b);
        debug_assert_ne!(a.weight % 2, b.weight % 2);
        let (chosen, rejected) = if a.weight <= b.weight { (a, b) } else { (b, a) };
        Ok(DecodeResult {
            correction: PauliString::pure(PauliType::Z, chosen.support(&self.code)),
            chosen_weight: chosen.weight,
            rejected_weight: rejected.weight,
            chosen,
            rejected,
            oracle_edges,
        })
    }

    /// Decodes the syndrome of `error` and reports whether the correction
    /// leaves a logical Z behind.
    pub fn fails_on(&self, error: &BitVec) -> Result<bool, DecoderError> {
        let r = self.decode(&ChainSyndrome::of_error(&self.code, error))?;
        Ok(is_logical_fault(r.correction.zmask(), error))
    }
}

/// One-shot [`ChainDecoder`] run.
pub fn decode_chain(code: &ChainedCode, s: &ChainSyndrome) -> Result<DecodeResult, DecoderError> {
    ChainDecoder::new(code)?.decode(s)
}

/// For a correction with the same syndrome as the error, the residual is
/// either in the Z group (even weight) or a logical Z (odd weight).
pub fn is_logical_fault(correction: &BitVec, error: &BitVec) -> bool {
    correction.xor(error).parity()
}
