//! Boundary seams between two triangular codes.
//!
//! Two codes are placed mirror-wise along boundaries of one color, read from
//! the same corner, so boundary qubit `a_i` faces `b_i`. With the shorter side
//! of length `2s + 1`, the seam carries the weight-4 operators
//! `{a_{2j-1}, a_{2j}, b_{2j-1}, b_{2j}}` for `j = 1..s` and one endpoint
//! operator `{a_{2s+1}} + {b_{2s+1}, ..}` that absorbs the longer side's tail.
//! Each support is measured both as X and as Z. Faces that anticommute with
//! the seam are replaced by the products of them that do not.
//!
//! The seam is abstract: no coordinates move, so no corner is repositioned.

use colorcode::{Color, TriangularCode};
use pauli_core::{left_kernel, BitVec, PauliString, PauliType};
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::{fix_frame_within, init_logical, Block, CssTableau, LogicalState, Sign, StabsimError};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeamOp {
    /// Local qubits of the first code.
    pub a: Vec<usize>,
    /// Local qubits of the second code.
    pub b: Vec<usize>,
}

impl SeamOp {
    pub fn weight(&self) -> usize {
        self.a.len() + self.b.len()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GluingMap {
    pub color: Color,
    pub t_a: usize,
    pub t_b: usize,
    pub side_a: Vec<usize>,
    pub side_b: Vec<usize>,
    /// Facing boundary qubits `(a_i, b_i)`.
    pub pairs: Vec<(usize, usize)>,
    pub boundary_ops: Vec<SeamOp>,
    /// Face index sets `(faces of a, faces of b)` multiplied into one check.
    pub merged_ops: Vec<(Vec<usize>, Vec<usize>)>,
    /// Moved corner qubit, if any; the abstract seam never moves one.
    pub relocated: Option<(usize, usize)>,
}

fn side(code: &TriangularCode, color: Color) -> Vec<usize> {
    if code.t == 0 {
        vec![0]
    } else {
        code.boundary(color).expect("order >= 1").to_vec()
    }
}

fn seam_supports(short: &[usize], long: &[usize]) -> Vec<(Vec<usize>, Vec<usize>)> {
    let s = short.len() / 2;
    let mut ops: Vec<(Vec<usize>, Vec<usize>)> = (0..s)
        .map(|j| {
            (
                vec![short[2 * j], short[2 * j + 1]],
                vec![long[2 * j], long[2 * j + 1]],
            )
        })
        .collect();
    ops.push((vec![short[2 * s]], long[2 * s..].to_vec()));
    ops
}

impl GluingMap {
    pub fn new(code_a: &TriangularCode, code_b: &TriangularCode, color: Color) -> Result<Self, StabsimError> {
        let (t_a, t_b) = (code_a.t, code_b.t);
        if t_a.abs_diff(t_b) > 1 {
            return Err(StabsimError::IncompatibleOrders { a: t_a, b: t_b });
        }
        let side_a = side(code_a, color);
        let side_b = side(code_b, color);
        let boundary_ops: Vec<SeamOp> = if side_a.len() <= side_b.len() {
            seam_supports(&side_a, &side_b)
                .into_iter()
                .map(|(a, b)| SeamOp { a, b })
                .collect()
        } else {
            seam_supports(&side_b, &side_a)
                .into_iter()
                .map(|(b, a)| SeamOp { a, b })
                .collect()
        };
        for (k, op) in boundary_ops.iter().enumerate() {
            if op.weight() % 2 != 0 {
                return Err(StabsimError::BadSeam(k));
            }
        }
        let pairs = side_a.iter().copied().zip(side_b.iter().copied()).collect();

        let overlaps = |code: &TriangularCode, pick: &dyn Fn(&SeamOp) -> &Vec<usize>| -> Vec<BitVec> {
            code.faces
                .iter()
                .map(|f| {
                    let bits: Vec<bool> = boundary_ops
                        .iter()
                        .map(|op| pick(op).iter().filter(|q| f.qubits.contains(q)).count() % 2 == 1)
                        .collect();
                    BitVec::from_bools(&bits)
                })
                .collect()
        };
        let ov_a = overlaps(code_a, &|op| &op.a);
        let ov_b = overlaps(code_b, &|op| &op.b);
        let touched: Vec<(bool, usize)> = ov_a
            .iter()
            .enumerate()
            .filter(|(_, v)| !v.is_zero())
            .map(|(i, _)| (false, i))
            .chain(ov_b.iter().enumerate().filter(|(_, v)| !v.is_zero()).map(|(i, _)| (true, i)))
            .collect();
        let rows: Vec<BitVec> = touched
            .iter()
            .map(|&(in_b, i)| if in_b { ov_b[i].clone() } else { ov_a[i].clone() })
            .collect();
        let merged_ops = left_kernel(&rows)
            .into_iter()
            .map(|combo| {
                let (mut fa, mut fb) = (Vec::new(), Vec::new());
                for k in combo.iter_ones() {
                    let (in_b, i) = touched[k];
                    if in_b {
                        fb.push(i)
                    } else {
                        fa.push(i)
                    }
                }
                (fa, fb)
            })
            .collect();
        Ok(GluingMap {
            color,
            t_a,
            t_b,
            side_a,
            side_b,
            pairs,
            boundary_ops,
            merged_ops,
            relocated: None,
        })
    }

    /// Seam operators of type `kind` on the tableau.
    pub fn seam_ops(&self, a: &Block, b: &Block, kind: PauliType, n: usize) -> Vec<PauliString> {
        self.boundary_ops
            .iter()
            .map(|op| {
                let mut p = a.op(kind, n, op.a.iter().copied());
                p.mul_assign(&b.op(kind, n, op.b.iter().copied())).expect("same length");
                p
            })
            .collect()
    }

    /// Checks of type `kind` of the merged code on `n_a + n_b` qubits, code a
    /// first: untouched faces, merged face products, and the seam operators.
    pub fn merged_checks(&self, code_a: &TriangularCode, code_b: &TriangularCode, kind: PauliType) -> Vec<PauliString> {
        let n = code_a.n + code_b.n;
        let a = Block::on(code_a.clone(), (0..code_a.n).collect());
        let b = Block::on(code_b.clone(), (code_a.n..n).collect());
        let commutes_with_seam = |code: &TriangularCode, f: usize, on_b: bool| {
            self.boundary_ops.iter().all(|op| {
                let s = if on_b { &op.b } else { &op.a };
                s.iter().filter(|q| code.faces[f].qubits.contains(q)).count() % 2 == 0
            })
        };
        let mut out = Vec::new();
        for (f, p) in a.faces(kind, n).into_iter().enumerate() {
            if commutes_with_seam(code_a, f, false) {
                out.push(p);
            }
        }
        for (f, p) in b.faces(kind, n).into_iter().enumerate() {
            if commutes_with_seam(code_b, f, true) {
                out.push(p);
            }
        }
        let fa = a.faces(kind, n);
        let fb = b.faces(kind, n);
        for (ia, ib) in &self.merged_ops {
            let mut p = PauliString::identity(n);
            for &i in ia {
                p.mul_assign(&fa[i]).expect("same length");
            }
            for &i in ib {
                p.mul_assign(&fb[i]).expect("same length");
            }
            out.push(p);
        }
        out.extend(self.seam_ops(&a, &b, kind, n));
        out
    }

    /// `X(side_a) X(side_b)` or the Z version: the joint logical the seam
    /// measures.
    pub fn side_product(&self, a: &Block, b: &Block, kind: PauliType, n: usize) -> PauliString {
        let mut p = a.op(kind, n, self.side_a.iter().copied());
        p.mul_assign(&b.op(kind, n, self.side_b.iter().copied())).expect("same length");
        p
    }
}

/// Measures the seam operators of each basis in `bases`, in order.
pub fn merge<R: Rng + ?Sized>(
    tab: &mut CssTableau,
    a: &Block,
    b: &Block,
    gm: &GluingMap,
    bases: &[PauliType],
    rng: &mut R,
) -> Result<Vec<Vec<Sign>>, StabsimError> {
    let n = tab.n();
    let mut out = Vec::new();
    for &kind in bases {
        let mut signs = Vec::new();
        for op in gm.seam_ops(a, b, kind, n) {
            signs.push(tab.measure(&op, None, rng)?.sign);
        }
        out.push(signs);
    }
    Ok(out)
}

/// Re-measures every face of both blocks and returns each to +1. Z fixes
/// commute with `preserve_x`, X fixes with `preserve_z`.
pub fn split<R: Rng + ?Sized>(
    tab: &mut CssTableau,
    a: &Block,
    b: &Block,
    preserve_x: &[PauliString],
    preserve_z: &[PauliString],
    rng: &mut R,
) -> Result<(), StabsimError> {
    for (kind, preserve) in [(PauliType::X, preserve_x), (PauliType::Z, preserve_z)] {
        let mut checks = a.measure_faces(tab, kind, rng)?;
        checks.extend(b.measure_faces(tab, kind, rng)?);
        let support: Vec<usize> = a.cols.iter().chain(&b.cols).copied().collect();
        fix_frame_within(tab, kind.dual(), &checks, preserve, &support)?;
    }
    Ok(())
}

/// Joint logical measurement of `X_L X_L` or `Z_L Z_L` through the seam of
/// `color`: merge in one basis, then split.
pub fn surgery<R: Rng + ?Sized>(
    tab: &mut CssTableau,
    a: &Block,
    b: &Block,
    color: Color,
    basis: PauliType,
    rng: &mut R,
) -> Result<Sign, StabsimError> {
    let gm = GluingMap::new(&a.code, &b.code, color)?;
    let n = tab.n();
    tab.note(format!("surgery {basis}{basis} on {color}"));
    let outcomes = merge(tab, a, b, &gm, &[basis], rng)?;
    let px = gm.side_product(a, b, PauliType::X, n);
    let pz = gm.side_product(a, b, PauliType::Z, n);
    split(tab, a, b, &[px], &[pz], rng)?;
    Ok(Sign::product(outcomes[0].iter().copied()))
}

/// Projects two blocks onto a logical Bell state by merging in both bases.
/// Returns the `X_L X_L` and `Z_L Z_L` parities.
pub fn bell_pair_on<R: Rng + ?Sized>(
    tab: &mut CssTableau,
    a: &Block,
    b: &Block,
    color: Color,
    rng: &mut R,
) -> Result<(Sign, Sign), StabsimError> {
    let gm = GluingMap::new(&a.code, &b.code, color)?;
    let n = tab.n();
    tab.note(format!("bell pair on {color}"));
    let outcomes = merge(tab, a, b, &gm, &[PauliType::X, PauliType::Z], rng)?;
    let px = gm.side_product(a, b, PauliType::X, n);
    let pz = gm.side_product(a, b, PauliType::Z, n);
    split(tab, a, b, &[px], &[pz], rng)?;
    Ok((
        Sign::product(outcomes[0].iter().copied()),
        Sign::product(outcomes[1].iter().copied()),
    ))
}

pub struct BellRun {
    pub tableau: CssTableau,
    pub a: Block,
    pub b: Block,
    pub gluing: GluingMap,
    pub parity_xx: Sign,
    pub parity_zz: Sign,
}

/// Two fresh `|0_L>` blocks joined into a logical Bell pair.
pub fn bell_pair_protocol<R: Rng + ?Sized>(
    code_a: &TriangularCode,
    code_b: &TriangularCode,
    color: Color,
    rng: &mut R,
) -> Result<BellRun, StabsimError> {
    let gluing = GluingMap::new(code_a, code_b, color)?;
    let mut tab = CssTableau::new(0);
    let a = Block::fresh(&mut tab, code_a.clone());
    let b = Block::fresh(&mut tab, code_b.clone());
    init_logical(&mut tab, &a, LogicalState::Zero, rng)?;
    init_logical(&mut tab, &b, LogicalState::Zero, rng)?;
    let (parity_xx, parity_zz) = bell_pair_on(&mut tab, &a, &b, color, rng)?;
    Ok(BellRun {
        tableau: tab,
        a,
        b,
        gluing,
        parity_xx,
        parity_zz,
    })
}
