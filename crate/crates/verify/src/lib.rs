//! Exhaustive checks of code properties.
//!
//! A [`CssCode`] is just two generator lists. For a color code both are the
//! faces; for a chained code the X side is type-F plus type-B and the Z side
//! is the layer checks, fusion gauges and links. A logical Z commutes with
//! every X generator and is outside the span of the Z side, and vice versa.
//!
//! Transversal rotations: for a `k`-even code with odd `n` and `X_L = X^n`,
//! `R_Z(pi / 2^(k-1))^n` acts as logical `R_Z(m pi / 2^(k-1))` with
//! `m = n mod 2^k`. [`statevector_check`] confirms this on the amplitudes.

mod distance;
mod statevector;

use chain::ChainedCode;
use colorcode::TriangularCode;
use pauli_core::{BitVec, GroupKind, PauliError, PauliGroup, PauliString, PauliType};
use serde::{Deserialize, Serialize};

pub use distance::{min_logical_weight, min_logical_weight_enumerated, Distance, SEARCH_BUDGET};
pub use statevector::{statevector_check, MAX_STATEVECTOR_QUBITS};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum VerifyError {
    #[error(transparent)]
    Pauli(#[from] PauliError),
    #[error("distance search needs {candidates} candidates, budget is {budget}")]
    Budget { candidates: u128, budget: u128 },
    #[error("transversal rotation needs an odd qubit count, got {0}")]
    EvenQubits(usize),
    #[error("X on every qubit is not a logical operator")]
    NotTransversal,
    #[error("the X group is not even")]
    NotEven,
    #[error("statevector limited to {limit} qubits, got {n}")]
    TooManyQubits { n: usize, limit: usize },
    #[error("the rotation does not preserve the code space")]
    NotLogical,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CssCode {
    pub n: usize,
    pub x_gens: Vec<BitVec>,
    pub z_gens: Vec<BitVec>,
}

impl CssCode {
    pub fn gens(&self, kind: PauliType) -> &[BitVec] {
        match kind {
            PauliType::X => &self.x_gens,
            PauliType::Z => &self.z_gens,
        }
    }

    pub fn group(&self, kind: PauliType) -> PauliGroup {
        let ps: Vec<PauliString> = self
            .gens(kind)
            .iter()
            .map(|m| PauliString::pure(kind, m.clone()))
            .collect();
        PauliGroup::new(self.n, &ps, GroupKind::Gauge).expect("lengths match")
    }

    pub fn is_logical(&self, kind: PauliType, support: &BitVec) -> bool {
        self.gens(kind.dual()).iter().all(|g| !g.dot(support))
            && !self.group(kind).contains(&PauliString::pure(kind, support.clone()))
    }
}

impl From<&TriangularCode> for CssCode {
    fn from(c: &TriangularCode) -> Self {
        let faces = c.face_masks();
        CssCode {
            n: c.n,
            x_gens: faces.clone(),
            z_gens: faces,
        }
    }
}

impl From<&ChainedCode> for CssCode {
    fn from(c: &ChainedCode) -> Self {
        CssCode {
            n: c.n,
            x_gens: c.x_stabilizers().iter().map(|p| p.xmask().clone()).collect(),
            z_gens: c.z_generators().iter().map(|p| p.zmask().clone()).collect(),
        }
    }
}

/// Largest `k <= 3` with every X-group weight divisible by `2^k`.
pub fn k_even_level(xgroup: &PauliGroup) -> Result<u32, VerifyError> {
    for k in (1..=3).rev() {
        if xgroup.span_weights_mod(1 << k)? {
            return Ok(k);
        }
    }
    Ok(0)
}

/// `m = n mod 2^k`: the power of the logical rotation implemented by the
/// transversal `R_Z(pi / 2^(k-1))`.
pub fn predict_transversal_rz(code: &CssCode) -> Result<u64, VerifyError> {
    if code.n.is_multiple_of(2) {
        return Err(VerifyError::EvenQubits(code.n));
    }
    if !code.is_logical(PauliType::X, &BitVec::ones(code.n)) {
        return Err(VerifyError::NotTransversal);
    }
    let k = k_even_level(&code.group(PauliType::X))?;
    if k == 0 {
        return Err(VerifyError::NotEven);
    }
    Ok((code.n % (1 << k)) as u64)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CodeReport {
    pub n: usize,
    pub k_even_level: u32,
    pub z_distance: Distance,
    pub x_distance: Distance,
    pub transversal_rz_power: Option<u64>,
}

/// Runs every check with the given search radii.
pub fn code_report(code: &CssCode, z_wmax: usize, x_wmax: usize) -> Result<CodeReport, VerifyError> {
    let k = k_even_level(&code.group(PauliType::X))?;
    Ok(CodeReport {
        n: code.n,
        k_even_level: k,
        z_distance: min_logical_weight(code, PauliType::Z, z_wmax)?,
        x_distance: min_logical_weight(code, PauliType::X, x_wmax)?,
        transversal_rz_power: predict_transversal_rz(code).ok(),
    })
}
