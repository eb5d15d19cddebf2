//! Chained triply-even codes.
//!
//! `T_0` is one bare qubit. `T_t` appends bilayer `t`, two copies of `D_t`
//! called layer-a and layer-b, to `T_{t-1}`:
//!
//! ```text
//! T_{t-1} | D_t^(b)  <=>  D_t^(a)   ->   T_t
//! ```
//!
//! The `|` is a logical Bell pair between the last layer-a of `T_{t-1}` (the
//! bare qubit when `t = 1`) and the new layer-b, contributing a type-B X
//! stabilizer and a Z link. The `<=>` is fusion: weight-4 Z gauges on vertical
//! edges turn every face of the bilayer into one type-F X stabilizer of
//! weight 8 or 16.
//!
//! Qubit ids run left to right: the bare qubit is 0, then each bilayer's
//! layer-a ids followed by its layer-b ids.

mod svg;

use std::ops::Range;

use colorcode::{build_triangular_488, Color, TriangularCode};
use pauli_core::{BitVec, GroupKind, PauliGroup, PauliString, PauliType};
use serde::{Deserialize, Serialize};

pub use svg::render_chain_svg;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ChainError {
    #[error("order must be at least 1, got {0}")]
    OrderZero(usize),
    #[error("bilayer {0} does not exist")]
    NoBilayer(usize),
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FusionMode {
    #[default]
    #[serde(rename = "lattice-edges")]
    Edges,
    #[serde(rename = "all-pairs")]
    AllPairs,
}

impl FusionMode {
    pub fn name(self) -> &'static str {
        match self {
            FusionMode::Edges => "edges",
            FusionMode::AllPairs => "all-pairs",
        }
    }
}

impl std::fmt::Display for FusionMode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

/// Two copies of `D_mu` side by side in the global numbering.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Bilayer {
    pub mu: usize,
    /// Global id of local qubit 0 of layer-a.
    pub offset: usize,
    pub code: TriangularCode,
}

impl Bilayer {
    pub fn n_layer(&self) -> usize {
        self.code.n
    }

    pub fn a(&self, local: usize) -> usize {
        self.offset + local
    }

    pub fn b(&self, local: usize) -> usize {
        self.offset + self.code.n + local
    }

    pub fn layer_a(&self) -> Range<usize> {
        self.offset..self.offset + self.code.n
    }

    pub fn layer_b(&self) -> Range<usize> {
        self.offset + self.code.n..self.offset + 2 * self.code.n
    }

    pub fn qubits(&self) -> Range<usize> {
        self.offset..self.offset + 2 * self.code.n
    }

    /// Local qubit pairs `(i, j)` with `i < j` that receive a Z gauge.
    pub fn gauge_pairs(&self, mode: FusionMode) -> Vec<(usize, usize)> {
        gauge_pairs(&self.code, mode)
    }

    /// Global ids of the red boundary of layer-a.
    pub fn red_a(&self) -> Vec<usize> {
        self.red().iter().map(|&q| self.a(q)).collect()
    }

    /// Global ids of the red boundary of layer-b.
    pub fn red_b(&self) -> Vec<usize> {
        self.red().iter().map(|&q| self.b(q)).collect()
    }

    fn red(&self) -> &[usize] {
        self.code.boundary(Color::Red).expect("bilayers have order >= 1")
    }
}

fn gauge_pairs(code: &TriangularCode, mode: FusionMode) -> Vec<(usize, usize)> {
    match mode {
        FusionMode::Edges => code.edges(),
        FusionMode::AllPairs => (0..code.n)
            .flat_map(|i| (i + 1..code.n).map(move |j| (i, j)))
            .collect(),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChainedCode {
    pub t: usize,
    pub n: usize,
    pub fusion_mode: FusionMode,
    pub bilayers: Vec<Bilayer>,
    /// Per bilayer, `(layer-a id, layer-b id)` at matching positions.
    pub vertical_edges: Vec<Vec<(usize, usize)>>,
    /// Per bilayer, one fused X check per face of `D_mu`, in face order.
    pub type_f: Vec<Vec<PauliString>>,
    /// Link `mu`: X on every qubit left of bilayer `mu` times X on its layer-b.
    pub type_b: Vec<PauliString>,
    /// Z face checks, per bilayer: layer-a faces then layer-b faces.
    pub z_checks: Vec<PauliString>,
    pub z_gauge: Vec<PauliString>,
    /// Link `mu`: `Z_L` of the previous layer-a (or the bare qubit) times
    /// `Z_L` of layer-b of bilayer `mu`.
    pub z_links: Vec<PauliString>,
    pub logical_x: PauliString,
    pub logical_z: PauliString,
}

/// `N(t) = 1 + 2 * sum_{mu=1..t} (2 mu^2 + 4 mu + 1)`.
pub fn chain_size(t: usize) -> usize {
    1 + 2 * (1..=t).map(|m| 2 * m * m + 4 * m + 1).sum::<usize>()
}

pub fn build_chained(t: usize, fusion_mode: FusionMode) -> ChainedCode {
    let n = chain_size(t);
    let mut bilayers = Vec::with_capacity(t);
    let mut offset = 1;
    for mu in 1..=t {
        let code = build_triangular_488(mu);
        let step = 2 * code.n;
        bilayers.push(Bilayer { mu, offset, code });
        offset += step;
    }
    debug_assert_eq!(offset, n);

    let mut vertical_edges = Vec::new();
    let mut type_f = Vec::new();
    let mut type_b = Vec::new();
    let mut z_checks = Vec::new();
    let mut z_gauge = Vec::new();
    let mut z_links = Vec::new();
    for (k, bl) in bilayers.iter().enumerate() {
        vertical_edges.push((0..bl.n_layer()).map(|i| (bl.a(i), bl.b(i))).collect());
        type_f.push(
            bl.code
                .faces
                .iter()
                .map(|f| PauliString::x_on(n, f.qubits.iter().flat_map(|&q| [bl.a(q), bl.b(q)])))
                .collect(),
        );
        type_b.push(PauliString::x_on(n, (0..bl.offset).chain(bl.layer_b())));
        for f in &bl.code.faces {
            z_checks.push(PauliString::z_on(n, f.qubits.iter().map(|&q| bl.a(q))));
        }
        for f in &bl.code.faces {
            z_checks.push(PauliString::z_on(n, f.qubits.iter().map(|&q| bl.b(q))));
        }
        for (i, j) in bl.gauge_pairs(fusion_mode) {
            z_gauge.push(PauliString::z_on(n, [bl.a(i), bl.a(j), bl.b(i), bl.b(j)]));
        }
        let prev: Vec<usize> = if k == 0 { vec![0] } else { bilayers[k - 1].red_a() };
        z_links.push(PauliString::z_on(n, prev.into_iter().chain(bl.red_b())));
    }
    let logical_z = match bilayers.last() {
        None => PauliString::z_on(n, [0]),
        Some(top) => PauliString::z_on(n, top.red_a()),
    };
    ChainedCode {
        t,
        n,
        fusion_mode,
        bilayers,
        vertical_edges,
        type_f,
        type_b,
        z_checks,
        z_gauge,
        z_links,
        logical_x: PauliString::x_on(n, 0..n),
        logical_z,
    }
}

/// Number of Z gauge measurements needed to fuse bilayer `t`.
pub fn fusion_gauge_count(t: usize, mode: FusionMode) -> Result<usize, ChainError> {
    if t == 0 {
        return Err(ChainError::OrderZero(t));
    }
    Ok(gauge_pairs(&build_triangular_488(t), mode).len())
}

impl ChainedCode {
    pub fn bilayer(&self, mu: usize) -> Result<&Bilayer, ChainError> {
        mu.checked_sub(1)
            .and_then(|k| self.bilayers.get(k))
            .ok_or(ChainError::NoBilayer(mu))
    }

    /// Type-F generators of every bilayer followed by the type-B links.
    pub fn x_stabilizers(&self) -> Vec<PauliString> {
        self.type_f
            .iter()
            .flatten()
            .chain(&self.type_b)
            .cloned()
            .collect()
    }

    pub fn x_stabilizer_group(&self) -> PauliGroup {
        PauliGroup::new(self.n, &self.x_stabilizers(), GroupKind::XStabilizer)
            .expect("X generators commute")
    }

    /// Z checks, Z gauges and Z links together.
    pub fn z_generators(&self) -> Vec<PauliString> {
        self.z_checks
            .iter()
            .chain(&self.z_gauge)
            .chain(&self.z_links)
            .cloned()
            .collect()
    }

    /// The group a Z correction may differ from the true error by.
    pub fn z_group(&self) -> PauliGroup {
        PauliGroup::new(self.n, &self.z_generators(), GroupKind::Gauge).expect("Z generators commute")
    }

    /// `Z Z` on vertical edge `local` of bilayer `mu`.
    pub fn vertical_pair(&self, mu: usize, local: usize) -> Result<PauliString, ChainError> {
        let bl = self.bilayer(mu)?;
        Ok(PauliString::z_on(self.n, [bl.a(local), bl.b(local)]))
    }

    /// The weight-`(2t+1)` logical Z forms: the red boundary of the top
    /// layer-a, the bare qubit plus one vertical pair per bilayer, and the
    /// previous order's boundary form plus one vertical pair in bilayer `t`.
    pub fn logical_z_forms(&self) -> Vec<PauliString> {
        let n = self.n;
        if self.t == 0 {
            return vec![self.logical_z.clone()];
        }
        let ladder = PauliString::z_on(
            n,
            std::iter::once(0).chain(self.vertical_edges.iter().flat_map(|e| [e[0].0, e[0].1])),
        );
        let top = &self.vertical_edges[self.t - 1][0];
        let prev: Vec<usize> = if self.t == 1 {
            vec![0]
        } else {
            self.bilayers[self.t - 2].red_a()
        };
        let recursive = PauliString::z_on(n, prev.into_iter().chain([top.0, top.1]));
        vec![self.logical_z.clone(), ladder, recursive]
    }

    /// `X^N`, the boundary Z form and the recursive Z form.
    pub fn logical_representatives(&self) -> Vec<PauliString> {
        let mut out = vec![self.logical_x.clone()];
        let forms = self.logical_z_forms();
        out.push(forms[0].clone());
        if let Some(last) = forms.get(2) {
            out.push(last.clone());
        }
        out
    }

    /// Type-F then type-B syndrome bits of a Z error mask.
    pub fn x_syndrome(&self, error: &BitVec) -> (Vec<BitVec>, BitVec) {
        let f = self
            .type_f
            .iter()
            .map(|layer| {
                let bits: Vec<bool> = layer.iter().map(|s| s.xmask().dot(error)).collect();
                BitVec::from_bools(&bits)
            })
            .collect();
        let b: Vec<bool> = self.type_b.iter().map(|s| s.xmask().dot(error)).collect();
        (f, BitVec::from_bools(&b))
    }

    /// True when the Z string is in the Z stabilizer, gauge and link group.
    pub fn is_z_trivial(&self, z: &BitVec) -> bool {
        self.z_group().contains(&PauliString::pure(PauliType::Z, z.clone()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("code serializes")
    }

    pub fn from_json(s: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(s)
    }
}
