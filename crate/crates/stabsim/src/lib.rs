//! Stabilizer simulation of the code-conversion protocols.
//!
//! Everything runs on a [`CssTableau`] whose columns are shared by several
//! code [`Block`]s. A protocol measures Pauli operators, reads the outcomes,
//! and applies Pauli frame corrections chosen by a GF(2) solve so that every
//! check returns to +1 while the logical operators that survived the
//! measurements keep their values.
//!
//! Randomness is always injected by the caller. Outcomes can be forced.

mod block;
mod cnot;
mod expansion;
mod fusion;
mod gluing;
mod tableau;

use serde::{Deserialize, Serialize};

pub use block::{fix_frame, fix_frame_within, init_logical, Block, LogicalState};
pub use cnot::{cnot_protocol, CnotRun};
pub use expansion::{expansion_protocol, ExpansionRun};
pub use fusion::{assemble_chain, fusion_protocol, revert_protocol, ChainLayout, ChainRun};
pub use gluing::{bell_pair_on, bell_pair_protocol, merge, split, surgery, BellRun, GluingMap, SeamOp};
pub use tableau::{CssTableau, Event, Outcome, Row, Tracked};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn from_minus(minus: bool) -> Self {
        if minus {
            Sign::Minus
        } else {
            Sign::Plus
        }
    }

    pub fn is_minus(self) -> bool {
        self == Sign::Minus
    }

    pub fn flip(self) -> Self {
        Sign::from_minus(!self.is_minus())
    }

    pub fn value(self) -> i8 {
        if self.is_minus() {
            -1
        } else {
            1
        }
    }

    pub fn product<I: IntoIterator<Item = Sign>>(signs: I) -> Sign {
        signs.into_iter().fold(Sign::Plus, |a, b| a * b)
    }
}

#[allow(clippy::suspicious_arithmetic_impl)]
impl std::ops::Mul for Sign {
    type Output = Sign;

    fn mul(self, rhs: Sign) -> Sign {
        Sign::from_minus(self.is_minus() ^ rhs.is_minus())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum StabsimError {
    #[error(transparent)]
    Pauli(#[from] pauli_core::PauliError),
    #[error(transparent)]
    Code(#[from] colorcode::ColorCodeError),
    #[error("only pure X or pure Z operators are supported")]
    NotCss,
    #[error("outcome is deterministically {outcome}")]
    ForcedImpossible { outcome: i8 },
    #[error("codes of order {a} and {b} cannot be glued")]
    IncompatibleOrders { a: usize, b: usize },
    #[error("blocks must share one order, got {0:?}")]
    MismatchedOrders(Vec<usize>),
    #[error("seam operator {0} fails to commute with the merged checks")]
    BadSeam(usize),
    #[error("bell pair for link {0} is missing")]
    MissingBell(usize),
    #[error("plan does not match the code")]
    PlanMismatch,
    #[error("no frame correction satisfies the constraints")]
    NoCorrection,
    #[error("tableau invariant violated")]
    Internal,
}
