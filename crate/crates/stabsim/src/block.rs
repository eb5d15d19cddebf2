//! Code blocks living on tableau columns, preparation, and frame fixing.

use colorcode::{Color, TriangularCode};
use pauli_core::{solve_linear, BitVec, PauliString, PauliType};
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::{CssTableau, Sign, StabsimError};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum LogicalState {
    Zero,
    Plus,
}

/// A copy of a color code whose local qubit `i` is tableau column `cols[i]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Block {
    pub code: TriangularCode,
    pub cols: Vec<usize>,
}

impl Block {
    /// A block on freshly appended `|0>` qubits.
    pub fn fresh(tab: &mut CssTableau, code: TriangularCode) -> Self {
        let cols = tab.add_qubits(code.n).collect();
        Block { code, cols }
    }

    pub fn on(code: TriangularCode, cols: Vec<usize>) -> Self {
        assert_eq!(code.n, cols.len());
        Block { code, cols }
    }

    pub fn t(&self) -> usize {
        self.code.t
    }

    /// Pure operator on the given local qubits, over `n` tableau columns.
    pub fn op<I: IntoIterator<Item = usize>>(&self, kind: PauliType, n: usize, local: I) -> PauliString {
        let globals: Vec<usize> = local.into_iter().map(|q| self.cols[q]).collect();
        match kind {
            PauliType::X => PauliString::x_on(n, globals),
            PauliType::Z => PauliString::z_on(n, globals),
        }
    }

    pub fn faces(&self, kind: PauliType, n: usize) -> Vec<PauliString> {
        self.code
            .faces
            .iter()
            .map(|f| self.op(kind, n, f.qubits.iter().copied()))
            .collect()
    }

    /// `X^n` or Z on the red boundary (the bare qubit for order 0).
    pub fn logical(&self, kind: PauliType, n: usize) -> PauliString {
        match kind {
            PauliType::X => self.op(kind, n, 0..self.code.n),
            PauliType::Z => self.op(kind, n, self.side(Color::Red)),
        }
    }

    /// Local ids of a colored boundary; the bare qubit is its own boundary.
    pub fn side(&self, color: Color) -> Vec<usize> {
        if self.code.t == 0 {
            vec![0]
        } else {
            self.code.boundary(color).expect("order >= 1").to_vec()
        }
    }

    /// Reads every face of type `kind` by measurement.
    pub fn measure_faces<R: Rng + ?Sized>(
        &self,
        tab: &mut CssTableau,
        kind: PauliType,
        rng: &mut R,
    ) -> Result<Vec<(PauliString, Sign)>, StabsimError> {
        let n = tab.n();
        let mut out = Vec::new();
        for f in self.faces(kind, n) {
            let s = tab.measure(&f, None, rng)?.sign;
            out.push((f, s));
        }
        Ok(out)
    }
}

/// Applies a correction of type `kind` that anticommutes with exactly the
/// `-1` checks and commutes with the `+1` checks and every `preserve`
/// operator. Returns the correction.
pub fn fix_frame(
    tab: &mut CssTableau,
    kind: PauliType,
    checks: &[(PauliString, Sign)],
    preserve: &[PauliString],
) -> Result<PauliString, StabsimError> {
    let all: Vec<usize> = (0..tab.n()).collect();
    fix_frame_within(tab, kind, checks, preserve, &all)
}

/// [`fix_frame`] with the correction restricted to the columns `support`.
pub fn fix_frame_within(
    tab: &mut CssTableau,
    kind: PauliType,
    checks: &[(PauliString, Sign)],
    preserve: &[PauliString],
    support: &[usize],
) -> Result<PauliString, StabsimError> {
    let n = tab.n();
    if !checks.iter().any(|(_, s)| s.is_minus()) {
        return Ok(PauliString::identity(n));
    }
    let dual = kind.dual();
    let restrict = |p: &PauliString| {
        let m = p.mask(dual);
        BitVec::from_bools(&support.iter().map(|&q| m.get(q)).collect::<Vec<_>>())
    };
    let mut rows = Vec::new();
    let mut rhs = Vec::new();
    for (c, s) in checks {
        rows.push(restrict(c));
        rhs.push(s.is_minus());
    }
    for p in preserve {
        rows.push(restrict(p));
        rhs.push(false);
    }
    let x = solve_linear(&rows, &rhs, support.len()).ok_or(StabsimError::NoCorrection)?;
    let corr = PauliString::pure(kind, BitVec::from_indices(n, x.iter_ones().map(|i| support[i])));
    tab.apply(&corr)?;
    Ok(corr)
}

/// Prepares `|0_L>` or `|+_L>` on a block whose qubits are all in `|0>`.
pub fn init_logical<R: Rng + ?Sized>(
    tab: &mut CssTableau,
    block: &Block,
    state: LogicalState,
    rng: &mut R,
) -> Result<(), StabsimError> {
    let n = tab.n();
    match state {
        LogicalState::Zero => {
            let checks = block.measure_faces(tab, PauliType::X, rng)?;
            fix_frame_within(tab, PauliType::Z, &checks, &[], &block.cols)?;
        }
        LogicalState::Plus => {
            let singles: Vec<(PauliString, Sign)> = block
                .cols
                .iter()
                .map(|&q| {
                    let x = PauliString::x_on(n, [q]);
                    let s = tab.measure(&x, None, rng).map(|o| o.sign);
                    s.map(|s| (x, s))
                })
                .collect::<Result<_, _>>()?;
            fix_frame_within(tab, PauliType::Z, &singles, &[], &block.cols)?;
            let checks = block.measure_faces(tab, PauliType::Z, rng)?;
            fix_frame_within(tab, PauliType::X, &checks, &[], &block.cols)?;
        }
    }
    Ok(())
}
