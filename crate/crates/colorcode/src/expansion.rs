//! Growing `D_t` into `D_{t+1}` along its red boundary.
//!
//! Every qubit of `D_t` keeps its position in `D_{t+1}` except one corner
//! qubit, which is relabeled to a free site next to it. The `4t + 6` fresh
//! qubits pair up along diagonal octagon edges; with those pairs as Bell
//! pairs, every new blue and green face is already a product of old faces and
//! pair operators, so only the new red squares carry fresh information.

use std::collections::{BTreeSet, HashMap};

use pauli_core::{BitVec, PauliType, XorBasis};
use serde::{Deserialize, Serialize};

use crate::{build_triangular_488, tiling, Color, ColorCodeError, TriangularCode};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScheduledCheck {
    /// Index into the target code's face list.
    pub face: usize,
    pub basis: PauliType,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExpansionPlan {
    pub from_t: usize,
    /// Id in the target code of every old qubit.
    pub old_to_new: Vec<usize>,
    /// Target ids of the fresh qubits, ascending.
    pub new_qubits: Vec<usize>,
    pub new_coords: Vec<[i32; 2]>,
    /// Bell-pair edges among the fresh qubits (target ids).
    pub pairs: Vec<(usize, usize)>,
    /// Old qubits whose position changes, as (old id, target id).
    pub relocated: Vec<(usize, usize)>,
    /// Checks to measure, red squares first.
    pub schedule: Vec<ScheduledCheck>,
    pub target: TriangularCode,
}

fn diagonal(a: [i32; 2], b: [i32; 2]) -> bool {
    let (p, q) = (tiling(a), tiling(b));
    (p.0 - q.0).abs() == 2 && (p.1 - q.1).abs() == 2
}

struct Search<'a> {
    target: &'a TriangularCode,
    old_faces: Vec<BitVec>,
    goals: Vec<BitVec>,
}

impl Search<'_> {
    fn matchings(&self, rem: &[usize], pairs: &mut Vec<(usize, usize)>) -> Option<Vec<(usize, usize)>> {
        let Some((&a, rest)) = rem.split_first() else {
            let n = self.target.n;
            let mut basis = XorBasis::from_rows(n, &self.old_faces);
            for &(p, q) in pairs.iter() {
                basis.insert(&BitVec::from_indices(n, [p, q]));
            }
            return self
                .goals
                .iter()
                .all(|g| basis.contains(g))
                .then(|| pairs.clone());
        };
        for (k, &b) in rest.iter().enumerate() {
            if diagonal(self.target.coords[a], self.target.coords[b]) {
                let left: Vec<usize> = rest
                    .iter()
                    .enumerate()
                    .filter(|&(j, _)| j != k)
                    .map(|(_, &q)| q)
                    .collect();
                pairs.push((a, b));
                if let Some(found) = self.matchings(&left, pairs) {
                    return Some(found);
                }
                pairs.pop();
            }
        }
        None
    }
}

pub fn expansion_plan(code: &TriangularCode) -> Result<ExpansionPlan, ColorCodeError> {
    let t = code.t;
    if t == 0 {
        return Err(ColorCodeError::ExpansionOrder(t));
    }
    let target = build_triangular_488(t + 1);
    let at: HashMap<[i32; 2], usize> = target
        .coords
        .iter()
        .enumerate()
        .map(|(i, &c)| (c, i))
        .collect();
    let mut old_to_new: Vec<Option<usize>> = code.coords.iter().map(|c| at.get(c).copied()).collect();
    let taken: BTreeSet<usize> = old_to_new.iter().flatten().copied().collect();
    let free: Vec<usize> = (0..target.n).filter(|i| !taken.contains(i)).collect();
    let leftover: Vec<usize> = (0..code.n).filter(|&i| old_to_new[i].is_none()).collect();
    if leftover.len() != 1 {
        return Err(ColorCodeError::NoExpansion(t));
    }
    let moved = leftover[0];
    let mut candidates = free.clone();
    candidates.sort_by_key(|&q| {
        let (a, b) = (code.coords[moved], target.coords[q]);
        ((a[0] - b[0]).abs() + (a[1] - b[1]).abs(), q)
    });
    for img in candidates {
        old_to_new[moved] = Some(img);
        let map: Vec<usize> = old_to_new.iter().map(|o| o.unwrap()).collect();
        let old_faces: Vec<BitVec> = code
            .faces
            .iter()
            .map(|f| BitVec::from_indices(target.n, f.qubits.iter().map(|&q| map[q])))
            .collect();
        let old_set: BTreeSet<Vec<usize>> = old_faces.iter().map(|m| m.to_indices()).collect();
        let changed: Vec<usize> = (0..target.faces.len())
            .filter(|&k| !old_set.contains(&target.faces[k].qubits))
            .collect();
        let goals: Vec<BitVec> = changed
            .iter()
            .filter(|&&k| target.faces[k].color != Color::Red)
            .map(|&k| BitVec::from_indices(target.n, target.faces[k].qubits.iter().copied()))
            .collect();
        let fresh: Vec<usize> = free.iter().copied().filter(|&q| q != img).collect();
        let search = Search {
            target: &target,
            old_faces,
            goals,
        };
        if let Some(pairs) = search.matchings(&fresh, &mut Vec::new()) {
            let mut schedule = Vec::new();
            let (red, rest): (Vec<usize>, Vec<usize>) = changed
                .iter()
                .partition(|&&k| target.faces[k].color == Color::Red);
            for k in red.into_iter().chain(rest) {
                for basis in [PauliType::X, PauliType::Z] {
                    schedule.push(ScheduledCheck { face: k, basis });
                }
            }
            return Ok(ExpansionPlan {
                from_t: t,
                new_coords: fresh.iter().map(|&q| target.coords[q]).collect(),
                new_qubits: fresh,
                old_to_new: map,
                pairs,
                relocated: vec![(moved, img)],
                schedule,
                target,
            });
        }
    }
    Err(ColorCodeError::NoExpansion(t))
}
