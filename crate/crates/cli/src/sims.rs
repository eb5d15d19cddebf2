//! Seeded runs of the surgery protocols with their logical checks.
//!
//! Logical action is read off a bare reference qubit entangled with the
//! input block: after the protocol the joint `X_R X_L` and `Z_R Z_L` must
//! still be +1 for the output logicals. Run `k` uses a ChaCha8 stream seeded
//! by the base seed with stream number `k`.

use chain::{build_chained, FusionMode};
use colorcode::{build_triangular_488, Color};
use pauli_core::{PauliString, PauliType};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use stabsim::{
    assemble_chain, bell_pair_protocol, cnot_protocol, expansion_protocol, init_logical, revert_protocol, Block,
    ChainLayout, CssTableau, LogicalState, Sign, StabsimError,
};

use crate::CliError;

pub fn run_rng(seed: u64, run: u64) -> ChaCha8Rng {
    let mut r = ChaCha8Rng::seed_from_u64(seed);
    r.set_stream(run);
    r
}

fn prod(a: &PauliString, b: &PauliString) -> Result<PauliString, StabsimError> {
    Ok(a.mul(b)?)
}

fn is_plus(tab: &CssTableau, p: &PauliString) -> Result<bool, StabsimError> {
    Ok(tab.expectation(p)? == Some(Sign::Plus))
}

fn faces_plus(tab: &CssTableau, b: &Block) -> Result<bool, StabsimError> {
    let n = tab.n();
    for kind in [PauliType::X, PauliType::Z] {
        for f in b.faces(kind, n) {
            if !is_plus(tab, &f)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Entangles the `|0>` qubit at `col` with `block` in `|0_L>`.
fn attach_reference(
    tab: &mut CssTableau,
    col: usize,
    block: &Block,
    rng: &mut ChaCha8Rng,
) -> Result<Block, StabsimError> {
    let refb = Block::on(build_triangular_488(0), vec![col]);
    let n = tab.n();
    let xx = prod(&refb.logical(PauliType::X, n), &block.logical(PauliType::X, n))?;
    if tab.measure(&xx, None, rng)?.sign.is_minus() {
        tab.apply(&refb.logical(PauliType::Z, n))?;
    }
    Ok(refb)
}

fn pair_holds(tab: &CssTableau, refb: &Block, xl: &PauliString, zl: &PauliString) -> Result<bool, StabsimError> {
    let n = tab.n();
    Ok(is_plus(tab, &prod(&refb.logical(PauliType::X, n), xl)?)?
        && is_plus(tab, &prod(&refb.logical(PauliType::Z, n), zl)?)?)
}

#[derive(Clone, Debug, Serialize)]
pub struct SimReport<R> {
    pub protocol: &'static str,
    pub t: usize,
    pub seed: u64,
    pub runs: Vec<R>,
    pub all_ok: bool,
}

impl<R> SimReport<R> {
    fn new(protocol: &'static str, t: usize, seed: u64, runs: Vec<R>, ok: impl Fn(&R) -> bool) -> Self {
        let all_ok = runs.iter().all(ok);
        SimReport {
            protocol,
            t,
            seed,
            runs,
            all_ok,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct BellRecord {
    pub run: u64,
    pub parity_xx: Sign,
    pub parity_zz: Sign,
    pub xx: Option<Sign>,
    pub zz: Option<Sign>,
    pub faces_plus: bool,
    pub ok: bool,
}

/// Bell pairs between `D_t` and `D_{t+1}` glued on `color`.
pub fn bell_sim(t: usize, color: Color, runs: u64, seed: u64) -> Result<SimReport<BellRecord>, CliError> {
    let (ca, cb) = (build_triangular_488(t), build_triangular_488(t + 1));
    let mut out = Vec::new();
    for run in 0..runs {
        let r = bell_pair_protocol(&ca, &cb, color, &mut run_rng(seed, run))?;
        let tab = &r.tableau;
        let n = tab.n();
        let xx = tab.expectation(&prod(&r.a.logical(PauliType::X, n), &r.b.logical(PauliType::X, n))?)?;
        let zz = tab.expectation(&prod(&r.a.logical(PauliType::Z, n), &r.b.logical(PauliType::Z, n))?)?;
        let faces_plus = faces_plus(tab, &r.a)? && faces_plus(tab, &r.b)?;
        out.push(BellRecord {
            run,
            parity_xx: r.parity_xx,
            parity_zz: r.parity_zz,
            xx,
            zz,
            faces_plus,
            ok: xx == Some(r.parity_xx) && zz == Some(r.parity_zz) && faces_plus,
        });
    }
    Ok(SimReport::new("bell", t, seed, out, |r| r.ok))
}

#[derive(Clone, Debug, Serialize)]
pub struct CnotRecord {
    pub run: u64,
    pub zz: Sign,
    pub xx: Sign,
    pub ancilla_z: Sign,
    /// `X_c -> X_c X_t`, `Z_c -> Z_c`, `X_t -> X_t`, `Z_t -> Z_c Z_t`.
    pub map: [bool; 4],
    pub ok: bool,
}

/// CNOT between two `D_t` blocks through a `D_t` ancilla.
pub fn cnot_sim(t: usize, runs: u64, seed: u64) -> Result<SimReport<CnotRecord>, CliError> {
    let code = build_triangular_488(t);
    let mut out = Vec::new();
    for run in 0..runs {
        let r = &mut run_rng(seed, run);
        let mut tab = CssTableau::new(0);
        let c = Block::fresh(&mut tab, code.clone());
        let a = Block::fresh(&mut tab, code.clone());
        let tg = Block::fresh(&mut tab, code.clone());
        let cols = tab.add_qubits(2);
        init_logical(&mut tab, &c, LogicalState::Zero, r)?;
        init_logical(&mut tab, &tg, LogicalState::Zero, r)?;
        let rc = attach_reference(&mut tab, cols.start, &c, r)?;
        let rt = attach_reference(&mut tab, cols.start + 1, &tg, r)?;
        let run_out = cnot_protocol(&mut tab, &c, &a, &tg, r)?;
        let n = tab.n();
        let (xc, zc) = (c.logical(PauliType::X, n), c.logical(PauliType::Z, n));
        let (xt, zt) = (tg.logical(PauliType::X, n), tg.logical(PauliType::Z, n));
        let (xrc, zrc) = (rc.logical(PauliType::X, n), rc.logical(PauliType::Z, n));
        let (xrt, zrt) = (rt.logical(PauliType::X, n), rt.logical(PauliType::Z, n));
        let map = [
            is_plus(&tab, &prod(&prod(&xrc, &xc)?, &xt)?)?,
            is_plus(&tab, &prod(&zrc, &zc)?)?,
            is_plus(&tab, &prod(&xrt, &xt)?)?,
            is_plus(&tab, &prod(&prod(&zrt, &zc)?, &zt)?)?,
        ];
        let ok = map.iter().all(|&b| b) && faces_plus(&tab, &c)? && faces_plus(&tab, &tg)?;
        out.push(CnotRecord {
            run,
            zz: run_out.zz,
            xx: run_out.xx,
            ancilla_z: run_out.ancilla_z,
            map,
            ok,
        });
    }
    Ok(SimReport::new("cnot", t, seed, out, |r| r.ok))
}

#[derive(Clone, Debug, Serialize)]
pub struct ExpandRecord {
    pub run: u64,
    pub pair_outcomes: Vec<Sign>,
    pub schedule_outcomes: Vec<Sign>,
    /// Every unscheduled target face was already +1 before the schedule.
    pub unscheduled_plus: bool,
    pub faces_plus: bool,
    pub logical_kept: bool,
    pub ok: bool,
}

/// Expansion of `D_t` into `D_{t+1}`.
pub fn expand_sim(t: usize, runs: u64, seed: u64) -> Result<SimReport<ExpandRecord>, CliError> {
    let code = build_triangular_488(t);
    let mut out = Vec::new();
    for run in 0..runs {
        let r = &mut run_rng(seed, run);
        let mut tab = CssTableau::new(0);
        let blk = Block::fresh(&mut tab, code.clone());
        let rc = tab.add_qubits(1).start;
        init_logical(&mut tab, &blk, LogicalState::Zero, r)?;
        let refb = attach_reference(&mut tab, rc, &blk, r)?;
        let e = expansion_protocol(&mut tab, &blk, r)?;
        let scheduled: Vec<(usize, PauliType)> = e.plan.schedule.iter().map(|s| (s.face, s.basis)).collect();
        let unscheduled_plus = e
            .pre_schedule
            .iter()
            .filter(|(k, kind, _)| !scheduled.contains(&(*k, *kind)))
            .all(|(_, _, s)| *s == Some(Sign::Plus));
        let n = tab.n();
        let xl = e.target.logical(PauliType::X, n);
        let logical_kept = pair_holds(&tab, &refb, &xl, &e.target.logical(PauliType::Z, n))?
            && pair_holds(&tab, &refb, &xl, &e.logical_z)?;
        let faces_plus = faces_plus(&tab, &e.target)?;
        out.push(ExpandRecord {
            run,
            pair_outcomes: e.pair_outcomes,
            schedule_outcomes: e.schedule_outcomes,
            unscheduled_plus,
            faces_plus,
            logical_kept,
            ok: unscheduled_plus && faces_plus && logical_kept,
        });
    }
    Ok(SimReport::new("expand", t, seed, out, |r| r.ok))
}

#[derive(Clone, Debug, Serialize)]
pub struct FuseRecord {
    pub run: u64,
    /// Raw link parities of each fusion round.
    pub link_parities: Vec<Vec<(Sign, Sign)>>,
    /// Per round: the chain carries the logical, then the reverted block does.
    pub chain_kept: Vec<bool>,
    pub revert_kept: Vec<bool>,
    pub ok: bool,
}

/// Repeated fuse-then-revert on `T_t` starting from the top `D_t`.
pub fn fuse_sim(t: usize, mode: FusionMode, rounds: usize, runs: u64, seed: u64) -> Result<SimReport<FuseRecord>, CliError> {
    let code = build_chained(t, mode);
    let layout = ChainLayout::new(&code);
    let mut out = Vec::new();
    for run in 0..runs {
        let r = &mut run_rng(seed, run);
        let mut tab = CssTableau::new(code.n + 1);
        let top = layout.top().clone();
        init_logical(&mut tab, &top, LogicalState::Zero, r)?;
        let refb = attach_reference(&mut tab, code.n, &top, r)?;
        let n = tab.n();
        let (cx, cz) = (code.logical_x.embed(n, 0), code.logical_z.embed(n, 0));
        let (mut link_parities, mut chain_kept, mut revert_kept) = (Vec::new(), Vec::new(), Vec::new());
        for _ in 0..rounds {
            let c = assemble_chain(&mut tab, &layout, None, r)?;
            link_parities.push(c.link_parities);
            let mut stab_ok = true;
            for s in code.x_stabilizers().iter().chain(&code.z_generators()) {
                stab_ok &= is_plus(&tab, &s.embed(n, 0))?;
            }
            chain_kept.push(stab_ok && pair_holds(&tab, &refb, &cx, &cz)?);
            let d = revert_protocol(&mut tab, &layout, r)?;
            revert_kept.push(
                faces_plus(&tab, &d)?
                    && pair_holds(&tab, &refb, &d.logical(PauliType::X, n), &d.logical(PauliType::Z, n))?,
            );
            for q in (0..code.n).filter(|q| !d.cols.contains(q)) {
                tab.reset(q, r)?;
            }
        }
        let ok = chain_kept.iter().chain(&revert_kept).all(|&b| b);
        out.push(FuseRecord {
            run,
            link_parities,
            chain_kept,
            revert_kept,
            ok,
        });
    }
    Ok(SimReport::new("fuse", t, seed, out, |r| r.ok))
}
