//! A pure CSS stabilizer state.
//!
//! Rows are kept as X-type and Z-type generator lists with one sign bit each
//! (`true` for -1). Every operation keeps exactly `n` independent rows, and
//! products of same-type rows carry no phase, so sign bookkeeping is plain XOR.

use pauli_core::{BitVec, GroupKind, PauliGroup, PauliString, PauliType, XorBasis};
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::{Sign, StabsimError};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Row {
    pub mask: BitVec,
    pub minus: bool,
}

/// A logical operator carried through measurements: `sign * op` has the same
/// expectation now as the original operator had when tracking began.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tracked {
    pub label: String,
    pub kind: PauliType,
    pub mask: BitVec,
    pub sign: Sign,
}

impl Tracked {
    pub fn op(&self) -> PauliString {
        PauliString::pure(self.kind, self.mask.clone())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "event", rename_all = "snake_case")]
pub enum Event {
    Measure { op: String, outcome: i8, random: bool },
    Frame { op: String },
    Note { text: String },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub sign: Sign,
    pub random: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CssTableau {
    n: usize,
    x_rows: Vec<Row>,
    z_rows: Vec<Row>,
    tracked: Vec<Tracked>,
    log: Vec<Event>,
    logging: bool,
}

fn odd(a: &BitVec, b: &BitVec) -> bool {
    a.dot(b)
}

impl CssTableau {
    /// `|0...0>` on `n` qubits.
    pub fn new(n: usize) -> Self {
        CssTableau {
            n,
            x_rows: Vec::new(),
            z_rows: (0..n)
                .map(|q| Row {
                    mask: BitVec::from_indices(n, [q]),
                    minus: false,
                })
                .collect(),
            tracked: Vec::new(),
            log: Vec::new(),
            logging: true,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rows(&self, kind: PauliType) -> &[Row] {
        match kind {
            PauliType::X => &self.x_rows,
            PauliType::Z => &self.z_rows,
        }
    }

    fn rows_mut(&mut self, kind: PauliType) -> &mut Vec<Row> {
        match kind {
            PauliType::X => &mut self.x_rows,
            PauliType::Z => &mut self.z_rows,
        }
    }

    pub fn set_logging(&mut self, on: bool) {
        self.logging = on;
    }

    pub fn transcript(&self) -> &[Event] {
        &self.log
    }

    /// The transcript as JSON lines.
    pub fn transcript_jsonl(&self) -> String {
        self.log
            .iter()
            .map(|e| serde_json::to_string(e).expect("events serialize") + "\n")
            .collect()
    }

    pub fn note(&mut self, text: impl Into<String>) {
        if self.logging {
            self.log.push(Event::Note { text: text.into() });
        }
    }

    /// Appends `k` qubits in `|0>`.
    pub fn add_qubits(&mut self, k: usize) -> std::ops::Range<usize> {
        let old = self.n;
        self.n += k;
        let n = self.n;
        for r in self.x_rows.iter_mut().chain(self.z_rows.iter_mut()) {
            r.mask.resize(n);
        }
        for t in &mut self.tracked {
            t.mask.resize(n);
        }
        for q in old..n {
            self.z_rows.push(Row {
                mask: BitVec::from_indices(n, [q]),
                minus: false,
            });
        }
        old..n
    }

    pub fn track(&mut self, label: impl Into<String>, op: &PauliString) -> Result<usize, StabsimError> {
        let kind = op.pure_type().ok_or(StabsimError::NotCss)?;
        self.check_len(op)?;
        self.tracked.push(Tracked {
            label: label.into(),
            kind,
            mask: op.mask(kind).clone(),
            sign: Sign::Plus,
        });
        Ok(self.tracked.len() - 1)
    }

    pub fn tracked(&self) -> &[Tracked] {
        &self.tracked
    }

    fn check_len(&self, p: &PauliString) -> Result<(), StabsimError> {
        if p.n() != self.n {
            return Err(StabsimError::Pauli(pauli_core::PauliError::LengthMismatch {
                left: self.n,
                right: p.n(),
            }));
        }
        Ok(())
    }

    fn same_type_sign(&self, kind: PauliType, mask: &BitVec) -> Option<Sign> {
        let rows = self.rows(kind);
        let mut basis = XorBasis::new(self.n);
        for r in rows {
            basis.insert(&r.mask);
        }
        let combo = basis.express(mask)?;
        let minus = combo
            .iter_ones()
            .fold(false, |acc, i| acc ^ rows[i].minus);
        Some(Sign::from_minus(minus))
    }

    /// `Some(sign)` when `sign * p` is in the stabilizer group, `None` when a
    /// measurement of `p` would be random.
    pub fn expectation(&self, p: &PauliString) -> Result<Option<Sign>, StabsimError> {
        let kind = p.pure_type().ok_or(StabsimError::NotCss)?;
        self.check_len(p)?;
        let mask = p.mask(kind);
        if mask.is_zero() {
            return Ok(Some(Sign::Plus));
        }
        if self.rows(kind.dual()).iter().any(|r| odd(&r.mask, mask)) {
            return Ok(None);
        }
        Ok(self.same_type_sign(kind, mask))
    }

    /// Projective measurement of a pure-X or pure-Z operator.
    pub fn measure<R: Rng + ?Sized>(
        &mut self,
        p: &PauliString,
        forced: Option<Sign>,
        rng: &mut R,
    ) -> Result<Outcome, StabsimError> {
        let kind = p.pure_type().ok_or(StabsimError::NotCss)?;
        self.check_len(p)?;
        let mask = p.mask(kind).clone();
        let dual = kind.dual();
        let hits: Vec<usize> = (0..self.rows(dual).len())
            .filter(|&i| odd(&self.rows(dual)[i].mask, &mask))
            .collect();
        let outcome = match hits.split_first() {
            None => {
                let sign = self.same_type_sign(kind, &mask).ok_or(StabsimError::Internal)?;
                if forced.is_some_and(|f| f != sign) {
                    return Err(StabsimError::ForcedImpossible { outcome: sign.value() });
                }
                Outcome { sign, random: false }
            }
            Some((&first, rest)) => {
                let pivot = self.rows(dual)[first].clone();
                for &i in rest {
                    let r = &mut self.rows_mut(dual)[i];
                    r.mask.xor_assign(&pivot.mask);
                    r.minus ^= pivot.minus;
                }
                for t in self.tracked.iter_mut().filter(|t| t.kind == dual) {
                    if odd(&t.mask, &mask) {
                        t.mask.xor_assign(&pivot.mask);
                        if pivot.minus {
                            t.sign = t.sign.flip();
                        }
                    }
                }
                self.rows_mut(dual).remove(first);
                let sign = forced.unwrap_or_else(|| Sign::from_minus(rng.gen()));
                self.rows_mut(kind).push(Row {
                    mask: mask.clone(),
                    minus: sign.is_minus(),
                });
                Outcome { sign, random: true }
            }
        };
        if self.logging {
            self.log.push(Event::Measure {
                op: p.to_text(),
                outcome: outcome.sign.value(),
                random: outcome.random,
            });
        }
        Ok(outcome)
    }

    /// Applies the Pauli `p`, flipping the sign of every row and tracked
    /// operator it anticommutes with.
    pub fn apply(&mut self, p: &PauliString) -> Result<(), StabsimError> {
        let kind = p.pure_type().ok_or(StabsimError::NotCss)?;
        self.check_len(p)?;
        let mask = p.mask(kind).clone();
        if mask.is_zero() {
            return Ok(());
        }
        let dual = kind.dual();
        for r in self.rows_mut(dual) {
            if odd(&r.mask, &mask) {
                r.minus ^= true;
            }
        }
        for t in self.tracked.iter_mut().filter(|t| t.kind == dual) {
            if odd(&t.mask, &mask) {
                t.sign = t.sign.flip();
            }
        }
        if self.logging {
            self.log.push(Event::Frame { op: p.to_text() });
        }
        Ok(())
    }

    pub fn apply_x<I: IntoIterator<Item = usize>>(&mut self, qubits: I) -> Result<(), StabsimError> {
        let p = PauliString::x_on(self.n, qubits);
        self.apply(&p)
    }

    pub fn apply_z<I: IntoIterator<Item = usize>>(&mut self, qubits: I) -> Result<(), StabsimError> {
        let p = PauliString::z_on(self.n, qubits);
        self.apply(&p)
    }

    /// Returns qubit `q` to `|0>`.
    pub fn reset<R: Rng + ?Sized>(&mut self, q: usize, rng: &mut R) -> Result<(), StabsimError> {
        let z = PauliString::z_on(self.n, [q]);
        if self.measure(&z, None, rng)?.sign.is_minus() {
            self.apply_x([q])?;
        }
        Ok(())
    }

    /// Unsigned stabilizer group.
    pub fn group(&self) -> PauliGroup {
        let gens: Vec<PauliString> = self
            .x_rows
            .iter()
            .map(|r| PauliString::pure(PauliType::X, r.mask.clone()))
            .chain(
                self.z_rows
                    .iter()
                    .map(|r| PauliString::pure(PauliType::Z, r.mask.clone())),
            )
            .collect();
        PauliGroup::new(self.n, &gens, GroupKind::Mixed).expect("rows have length n")
    }

    /// Rows commute pairwise, are independent and number exactly `n`.
    pub fn check_invariants(&self) -> Result<(), StabsimError> {
        for x in &self.x_rows {
            for z in &self.z_rows {
                if odd(&x.mask, &z.mask) {
                    return Err(StabsimError::Internal);
                }
            }
        }
        let rank_x = XorBasis::from_rows(self.n, self.x_rows.iter().map(|r| &r.mask)).rank();
        let rank_z = XorBasis::from_rows(self.n, self.z_rows.iter().map(|r| &r.mask)).rank();
        if rank_x != self.x_rows.len() || rank_z != self.z_rows.len() || rank_x + rank_z != self.n {
            return Err(StabsimError::Internal);
        }
        Ok(())
    }
}
