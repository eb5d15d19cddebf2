//! Logical CNOT by lattice surgery through an ancilla block.
//!
//! The ancilla starts in `|+_L>`. A `Z_L Z_L` merge with the control and an
//! `X_L X_L` merge with the target are followed by a transversal Z readout of
//! the ancilla, and the three outcomes fix a logical Pauli frame.

use colorcode::Color;
use pauli_core::{PauliString, PauliType};
use rand::Rng;

use crate::{init_logical, surgery, Block, CssTableau, LogicalState, Sign, StabsimError};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CnotRun {
    /// `Z_L Z_L` outcome between control and ancilla.
    pub zz: Sign,
    /// `X_L X_L` outcome between ancilla and target.
    pub xx: Sign,
    /// `Z_L` of the ancilla read from single-qubit Z outcomes.
    pub ancilla_z: Sign,
}

/// Applies CNOT from `control` to `target`. `ancilla` must be on qubits in
/// `|0>`; it ends in a Z product state.
pub fn cnot_protocol<R: Rng + ?Sized>(
    tab: &mut CssTableau,
    control: &Block,
    ancilla: &Block,
    target: &Block,
    rng: &mut R,
) -> Result<CnotRun, StabsimError> {
    let ts = [control.t(), ancilla.t(), target.t()];
    if ts.iter().any(|&t| t != ts[0]) {
        return Err(StabsimError::MismatchedOrders(ts.to_vec()));
    }
    tab.note("cnot");
    init_logical(tab, ancilla, LogicalState::Plus, rng)?;
    let zz = surgery(tab, control, ancilla, Color::Green, PauliType::Z, rng)?;
    let xx = surgery(tab, ancilla, target, Color::Blue, PauliType::X, rng)?;
    let n = tab.n();
    let red = ancilla.side(Color::Red);
    let mut ancilla_z = Sign::Plus;
    for (local, &q) in ancilla.cols.iter().enumerate() {
        let s = tab.measure(&PauliString::z_on(n, [q]), None, rng)?.sign;
        if red.contains(&local) {
            ancilla_z = ancilla_z * s;
        }
    }
    if xx.is_minus() {
        tab.apply(&control.logical(PauliType::Z, n))?;
    }
    if (zz * ancilla_z).is_minus() {
        tab.apply(&target.logical(PauliType::X, n))?;
    }
    Ok(CnotRun { zz, xx, ancilla_z })
}
