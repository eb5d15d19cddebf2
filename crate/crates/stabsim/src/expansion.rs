//! Growing a `D_t` block into `D_{t+1}` in place.
//!
//! Old qubits keep their tableau columns; the relocated corner only changes
//! its label. Fresh qubits are paired into `|Phi+>` states, then the changed
//! target faces are measured in the planned order and the frame is fixed.
//! Z fixes commute with `X^n` of the target; X fixes commute with a Z-type
//! representative of the old `Z_L` that commutes with every target X face.

use colorcode::{expansion_plan, ExpansionPlan};
use pauli_core::{solve_linear, BitVec, PauliString, PauliType};
use rand::Rng;

use crate::{fix_frame_within, Block, CssTableau, Sign, StabsimError};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExpansionRun {
    pub plan: ExpansionPlan,
    pub target: Block,
    /// Raw `X X` outcome of each fresh pair.
    pub pair_outcomes: Vec<Sign>,
    /// Raw outcome of each scheduled check.
    pub schedule_outcomes: Vec<Sign>,
    /// Expectation of every target face, X then Z in face order, just
    /// before the schedule is measured.
    pub pre_schedule: Vec<(usize, PauliType, Option<Sign>)>,
    /// The Z logical carried across, supported on target columns.
    pub logical_z: PauliString,
}

pub fn expansion_protocol<R: Rng + ?Sized>(
    tab: &mut CssTableau,
    block: &Block,
    rng: &mut R,
) -> Result<ExpansionRun, StabsimError> {
    let plan = expansion_plan(&block.code)?;
    let tgt = &plan.target;
    if plan.old_to_new.len() != block.code.n || plan.new_qubits.len() + block.code.n != tgt.n {
        return Err(StabsimError::PlanMismatch);
    }
    tab.note(format!("expand {} -> {}", block.t(), tgt.t));
    let fresh = tab.add_qubits(plan.new_qubits.len());
    let mut cols = vec![usize::MAX; tgt.n];
    for (old, &new) in plan.old_to_new.iter().enumerate() {
        cols[new] = block.cols[old];
    }
    for (&new, col) in plan.new_qubits.iter().zip(fresh) {
        cols[new] = col;
    }
    let target = Block::on(tgt.clone(), cols);
    let n = tab.n();

    let mut pair_outcomes = Vec::new();
    for &(p, q) in &plan.pairs {
        let s = tab.measure(&target.op(PauliType::X, n, [p, q]), None, rng)?.sign;
        if s.is_minus() {
            tab.apply(&target.op(PauliType::Z, n, [p]))?;
        }
        pair_outcomes.push(s);
    }

    let logical_z = carried_z(block, &target, &plan, n)?;

    let mut pre_schedule = Vec::new();
    for kind in [PauliType::X, PauliType::Z] {
        for (k, f) in target.faces(kind, n).iter().enumerate() {
            pre_schedule.push((k, kind, tab.expectation(f)?));
        }
    }

    let mut schedule_outcomes = Vec::new();
    for sc in &plan.schedule {
        let f = target.op(sc.basis, n, tgt.faces[sc.face].qubits.iter().copied());
        schedule_outcomes.push(tab.measure(&f, None, rng)?.sign);
    }

    let signed = |tab: &CssTableau, kind| -> Result<Vec<(PauliString, Sign)>, StabsimError> {
        target
            .faces(kind, n)
            .into_iter()
            .map(|f| {
                let s = tab.expectation(&f)?.ok_or(StabsimError::Internal)?;
                Ok((f, s))
            })
            .collect()
    };
    let xs = signed(tab, PauliType::X)?;
    fix_frame_within(tab, PauliType::Z, &xs, &[target.logical(PauliType::X, n)], &target.cols)?;
    let zs = signed(tab, PauliType::Z)?;
    fix_frame_within(tab, PauliType::X, &zs, std::slice::from_ref(&logical_z), &target.cols)?;

    Ok(ExpansionRun {
        plan,
        target,
        pair_outcomes,
        schedule_outcomes,
        pre_schedule,
        logical_z,
    })
}

/// Old `Z_L` times old Z faces and pair `Z Z` operators, chosen to commute
/// with every target X face.
fn carried_z(block: &Block, target: &Block, plan: &ExpansionPlan, n: usize) -> Result<PauliString, StabsimError> {
    let mut gens = block.faces(PauliType::Z, n);
    gens.extend(plan.pairs.iter().map(|&(p, q)| target.op(PauliType::Z, n, [p, q])));
    let base = block.logical(PauliType::Z, n);
    let xfaces = target.faces(PauliType::X, n);
    let rows: Vec<BitVec> = xfaces
        .iter()
        .map(|f| BitVec::from_bools(&gens.iter().map(|g| g.zmask().dot(f.xmask())).collect::<Vec<_>>()))
        .collect();
    let rhs: Vec<bool> = xfaces.iter().map(|f| base.zmask().dot(f.xmask())).collect();
    let c = solve_linear(&rows, &rhs, gens.len()).ok_or(StabsimError::NoCorrection)?;
    let mut r = base;
    for i in c.iter_ones() {
        r.mul_assign(&gens[i])?;
    }
    Ok(r)
}
