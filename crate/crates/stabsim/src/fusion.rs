//! Building `T_t` from blocks, and reverting it to `D_t`.
//!
//! Assembly: every block starts in `|0_L>` except the top layer-a, which
//! holds the logical qubit. Link `mu` is a logical Bell pair between the
//! previous layer-a (the bare qubit for `mu = 1`) and layer-b of bilayer
//! `mu`, brought to `+X_L X_L` and `+Z_L Z_L` by a logical Pauli on layer-b.
//! Fusion then measures the bilayer's Z gauges and fixes them to +1 with an X
//! correction inside the bilayer.
//!
//! Reversion measures X on every chain qubit outside the top layer-a. A layer-b
//! outcome of -1 is undone by Z on its mirror in layer-a, and `Z_L` of the
//! top layer-a fixes the parity of the outcomes left of bilayer `t`.

use chain::{Bilayer, ChainedCode};
use colorcode::{build_triangular_488, Color};
use pauli_core::{PauliString, PauliType};
use rand::Rng;

use crate::{bell_pair_on, fix_frame_within, init_logical, Block, CssTableau, LogicalState, Sign, StabsimError};

/// Seam color used for every chain link.
const LINK_SEAM: Color = Color::Blue;

/// Blocks of a chained code placed on tableau columns equal to the chain ids.
#[derive(Clone, Debug)]
pub struct ChainLayout {
    pub code: ChainedCode,
    pub t0: Block,
    pub a: Vec<Block>,
    pub b: Vec<Block>,
}

impl ChainLayout {
    pub fn new(code: &ChainedCode) -> Self {
        let t0 = Block::on(build_triangular_488(0), vec![0]);
        let layer = |bl: &Bilayer, f: fn(&Bilayer, usize) -> usize| {
            Block::on(bl.code.clone(), (0..bl.n_layer()).map(|i| f(bl, i)).collect())
        };
        ChainLayout {
            code: code.clone(),
            t0,
            a: code.bilayers.iter().map(|bl| layer(bl, Bilayer::a)).collect(),
            b: code.bilayers.iter().map(|bl| layer(bl, Bilayer::b)).collect(),
        }
    }

    pub fn t(&self) -> usize {
        self.code.t
    }

    /// The block holding the logical qubit: the top layer-a, or the bare qubit.
    pub fn top(&self) -> &Block {
        self.a.last().unwrap_or(&self.t0)
    }

    /// Block linked to layer-b of bilayer `mu`.
    pub fn link_partner(&self, mu: usize) -> &Block {
        if mu == 1 {
            &self.t0
        } else {
            &self.a[mu - 2]
        }
    }

    fn bilayer(&self, mu: usize) -> &Bilayer {
        &self.code.bilayers[mu - 1]
    }

    /// `X_L X_L` and `Z_L Z_L` of link `mu` on `n` columns.
    pub fn link_stabilizers(&self, mu: usize, n: usize) -> (PauliString, PauliString) {
        let (p, b) = (self.link_partner(mu), &self.b[mu - 1]);
        let mut x = p.logical(PauliType::X, n);
        x.mul_assign(&b.logical(PauliType::X, n)).expect("same length");
        let mut z = p.logical(PauliType::Z, n);
        z.mul_assign(&b.logical(PauliType::Z, n)).expect("same length");
        (x, z)
    }

    /// Z gauges of bilayer `mu`.
    pub fn gauges(&self, mu: usize, n: usize) -> Vec<PauliString> {
        let bl = self.bilayer(mu);
        bl.gauge_pairs(self.code.fusion_mode)
            .into_iter()
            .map(|(i, j)| PauliString::z_on(n, [bl.a(i), bl.a(j), bl.b(i), bl.b(j)]))
            .collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainRun {
    /// Raw `(X_L X_L, Z_L Z_L)` parities of each link before correction.
    pub link_parities: Vec<(Sign, Sign)>,
    /// Raw gauge outcomes of each bilayer before fixing.
    pub gauge_outcomes: Vec<Vec<Sign>>,
}

/// Measures the Z gauges of bilayer `mu` and fixes them to +1. The links
/// touching the bilayer must already be in place.
pub fn fusion_protocol<R: Rng + ?Sized>(
    tab: &mut CssTableau,
    layout: &ChainLayout,
    mu: usize,
    rng: &mut R,
) -> Result<Vec<Sign>, StabsimError> {
    let n = tab.n();
    let (lx, lz) = layout.link_stabilizers(mu, n);
    if tab.expectation(&lx)?.is_none() || tab.expectation(&lz)?.is_none() {
        return Err(StabsimError::MissingBell(mu));
    }
    tab.note(format!("fuse bilayer {mu}"));
    let mut checks = Vec::new();
    for g in layout.gauges(mu, n) {
        let s = tab.measure(&g, None, rng)?.sign;
        checks.push((g, s));
    }
    let outcomes = checks.iter().map(|c| c.1).collect();
    let (a, b) = (&layout.a[mu - 1], &layout.b[mu - 1]);
    let mut preserve = a.faces(PauliType::Z, n);
    preserve.extend(b.faces(PauliType::Z, n));
    preserve.push(a.logical(PauliType::Z, n));
    preserve.push(b.logical(PauliType::Z, n));
    let support: Vec<usize> = layout.bilayer(mu).qubits().collect();
    fix_frame_within(tab, PauliType::X, &checks, &preserve, &support)?;
    Ok(outcomes)
}

/// Prepares every block except the logical holder in `|0_L>`, links them and
/// fuses bilayers in ascending order. With `holder = Some(state)` the holder
/// is prepared too; with `None` it keeps whatever it already encodes.
pub fn assemble_chain<R: Rng + ?Sized>(
    tab: &mut CssTableau,
    layout: &ChainLayout,
    holder: Option<LogicalState>,
    rng: &mut R,
) -> Result<ChainRun, StabsimError> {
    let t = layout.t();
    let top = layout.top().clone();
    if let Some(state) = holder {
        init_logical(tab, &top, state, rng)?;
        if t == 0 && state == LogicalState::Plus {
            let x = top.logical(PauliType::X, tab.n());
            if tab.measure(&x, None, rng)?.sign.is_minus() {
                tab.apply(&top.logical(PauliType::Z, tab.n()))?;
            }
        }
    }
    let mut others: Vec<&Block> = std::iter::once(&layout.t0).chain(&layout.b).collect();
    others.extend(layout.a.iter().take(t.saturating_sub(1)));
    if t == 0 {
        others.clear();
    }
    for blk in others {
        init_logical(tab, blk, LogicalState::Zero, rng)?;
    }
    let mut link_parities = Vec::new();
    for mu in 1..=t {
        let (partner, b) = (layout.link_partner(mu), &layout.b[mu - 1]);
        let (px, pz) = bell_pair_on(tab, partner, b, LINK_SEAM, rng)?;
        let n = tab.n();
        if px.is_minus() {
            tab.apply(&b.logical(PauliType::Z, n))?;
        }
        if pz.is_minus() {
            tab.apply(&b.logical(PauliType::X, n))?;
        }
        link_parities.push((px, pz));
    }
    let mut gauge_outcomes = Vec::new();
    for mu in 1..=t {
        gauge_outcomes.push(fusion_protocol(tab, layout, mu, rng)?);
    }
    Ok(ChainRun {
        link_parities,
        gauge_outcomes,
    })
}

/// Collapses `T_t` onto its top layer-a and returns that block.
pub fn revert_protocol<R: Rng + ?Sized>(
    tab: &mut CssTableau,
    layout: &ChainLayout,
    rng: &mut R,
) -> Result<Block, StabsimError> {
    let t = layout.t();
    let top = layout.top().clone();
    if t == 0 {
        return Ok(top);
    }
    tab.note("revert");
    let n = tab.n();
    let bl = layout.bilayer(t);
    let mut left = Sign::Plus;
    let mut mirrors = Vec::new();
    for q in (0..layout.code.n).filter(|q| !bl.layer_a().contains(q)) {
        let s = tab.measure(&PauliString::x_on(n, [q]), None, rng)?.sign;
        if q < bl.offset {
            left = left * s;
        } else if s.is_minus() && bl.layer_b().contains(&q) {
            mirrors.push(q - bl.n_layer());
        }
    }
    tab.apply_z(mirrors)?;
    if left.is_minus() {
        tab.apply(&top.logical(PauliType::Z, n))?;
    }
    Ok(top)
}
