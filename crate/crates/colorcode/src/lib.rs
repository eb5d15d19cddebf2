//! Triangular [4.8.8] color codes `D_t`.
//!
//! `build_triangular_488(t)` clips the square-octagon tiling to a triangle with
//! its corner at the top and returns `n = 2t^2 + 4t + 1` qubits, `(n - 1) / 2`
//! self-dual faces of weight 4 or 8, and three colored boundaries of `2t + 1`
//! qubits each. Squares are red; octagons alternate green and blue by tiling
//! parity.
//!
//! Coordinates are integer screen positions: `x` grows to the right, `y` grows
//! downward, and neighbouring qubits on a square differ by `(±2, ±2)`. Qubit
//! ids are row-major (sorted by `y`, then `x`).

mod expansion;
mod geometry;
mod svg;

use std::collections::BTreeMap;
use std::fmt;

use pauli_core::{BitVec, GroupKind, PauliGroup, PauliString, PauliType};
use serde::{Deserialize, Serialize};

pub use expansion::{expansion_plan, ExpansionPlan, ScheduledCheck};
pub use svg::{draw, extent, render_svg};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Color {
    Red,
    Green,
    Blue,
}

impl Color {
    pub const ALL: [Color; 3] = [Color::Red, Color::Green, Color::Blue];

    pub fn name(self) -> &'static str {
        match self {
            Color::Red => "red",
            Color::Green => "green",
            Color::Blue => "blue",
        }
    }
}

impl fmt::Display for Color {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for Color {
    type Err = ColorCodeError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "red" => Ok(Color::Red),
            "green" => Ok(Color::Green),
            "blue" => Ok(Color::Blue),
            _ => Err(ColorCodeError::UnknownColor(s.to_string())),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Shape {
    Square,
    Octagon,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FaceSpec {
    /// Sorted qubit ids.
    pub qubits: Vec<usize>,
    pub color: Color,
    pub shape: Shape,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ColorCodeError {
    #[error("order {0} code has no boundaries")]
    NoBoundaries(usize),
    #[error("unknown color {0:?}")]
    UnknownColor(String),
    #[error("expansion needs an order of at least 1, got {0}")]
    ExpansionOrder(usize),
    #[error("no relabeling of the order-{0} patch nests inside the next order")]
    NoExpansion(usize),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Logicals {
    pub x: PauliString,
    pub z: PauliString,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TriangularCode {
    pub t: usize,
    pub n: usize,
    pub coords: Vec<[i32; 2]>,
    pub faces: Vec<FaceSpec>,
    pub boundaries: BTreeMap<Color, Vec<usize>>,
    pub logicals: Logicals,
}

fn screen(p: (i32, i32)) -> [i32; 2] {
    [p.1 - p.0, p.0 + p.1]
}

/// Inverse of the screen map, back to tiling coordinates.
pub(crate) fn tiling(c: [i32; 2]) -> (i32, i32) {
    ((c[1] - c[0]) / 2, (c[0] + c[1]) / 2)
}

pub fn build_triangular_488(t: usize) -> TriangularCode {
    if t == 0 {
        return TriangularCode {
            t,
            n: 1,
            coords: vec![[0, 0]],
            faces: Vec::new(),
            boundaries: BTreeMap::new(),
            logicals: Logicals {
                x: PauliString::x_on(1, [0]),
                z: PauliString::z_on(1, [0]),
            },
        };
    }
    let patch = geometry::raw_patch(t);
    let n = patch.positions.len();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&i| {
        let s = screen(patch.positions[i]);
        (s[1], s[0])
    });
    let mut id = vec![0usize; n];
    for (k, &i) in order.iter().enumerate() {
        id[i] = k;
    }
    let coords: Vec<[i32; 2]> = order.iter().map(|&i| screen(patch.positions[i])).collect();
    let sets = geometry::face_sets(&patch);
    let mut faces: Vec<FaceSpec> = patch
        .faces
        .iter()
        .zip(&sets)
        .map(|(&v, qs)| {
            let mut qubits: Vec<usize> = qs.iter().map(|&q| id[q]).collect();
            qubits.sort_unstable();
            FaceSpec {
                qubits,
                color: geometry::face_color(v),
                shape: if geometry::is_square_centre(v) {
                    Shape::Square
                } else {
                    Shape::Octagon
                },
            }
        })
        .collect();
    faces.sort_by(|a, b| a.qubits.cmp(&b.qubits));
    let mut boundaries = BTreeMap::new();
    for (color, side) in [Color::Blue, Color::Red, Color::Green].iter().zip(&patch.sides) {
        boundaries.insert(*color, side.iter().map(|&q| id[q]).collect::<Vec<_>>());
    }
    let logicals = Logicals {
        x: PauliString::x_on(n, 0..n),
        z: PauliString::z_on(n, boundaries[&Color::Red].iter().copied()),
    };
    TriangularCode {
        t,
        n,
        coords,
        faces,
        boundaries,
        logicals,
    }
}

impl TriangularCode {
    pub fn distance(&self) -> usize {
        2 * self.t + 1
    }

    pub fn face_masks(&self) -> Vec<BitVec> {
        self.faces
            .iter()
            .map(|f| BitVec::from_indices(self.n, f.qubits.iter().copied()))
            .collect()
    }

    pub fn checks(&self, kind: PauliType) -> Vec<PauliString> {
        self.face_masks()
            .into_iter()
            .map(|m| PauliString::pure(kind, m))
            .collect()
    }

    pub fn x_checks(&self) -> Vec<PauliString> {
        self.checks(PauliType::X)
    }

    pub fn z_checks(&self) -> Vec<PauliString> {
        self.checks(PauliType::Z)
    }

    pub fn stabilizer_group(&self, kind: PauliType) -> PauliGroup {
        let gk = match kind {
            PauliType::X => GroupKind::XStabilizer,
            PauliType::Z => GroupKind::ZStabilizer,
        };
        PauliGroup::new(self.n, &self.checks(kind), gk).expect("faces of one type commute")
    }

    /// Qubits on the boundary of `color`, ordered along the edge. Blue starts
    /// at the top corner, red at the blue-red corner, green at the red-green
    /// corner, so the three lists run the same way around the triangle.
    pub fn boundary(&self, color: Color) -> Result<&[usize], ColorCodeError> {
        self.boundaries
            .get(&color)
            .map(|v| v.as_slice())
            .ok_or(ColorCodeError::NoBoundaries(self.t))
    }

    /// Syndrome bits (one per face) of an error mask, bit set when the face
    /// overlaps the error oddly.
    pub fn syndrome(&self, error: &BitVec) -> BitVec {
        let masks = self.face_masks();
        BitVec::from_bools(&masks.iter().map(|m| m.dot(error)).collect::<Vec<_>>())
    }

    /// Lattice edges: consecutive vertices around every face plus consecutive
    /// boundary qubits, deduplicated.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = std::collections::BTreeSet::new();
        for side in self.boundaries.values() {
            for w in side.windows(2) {
                out.insert((w[0].min(w[1]), w[0].max(w[1])));
            }
        }
        for f in &self.faces {
            let ring = self.face_ring(f);
            for k in 0..ring.len() {
                let (a, b) = (ring[k], ring[(k + 1) % ring.len()]);
                if self.adjacent(a, b) {
                    out.insert((a.min(b), a.max(b)));
                }
            }
        }
        out.into_iter().collect()
    }

    fn adjacent(&self, a: usize, b: usize) -> bool {
        let (p, q) = (tiling(self.coords[a]), tiling(self.coords[b]));
        let (dx, dy) = ((p.0 - q.0).abs(), (p.1 - q.1).abs());
        matches!((dx, dy), (2, 0) | (0, 2) | (2, 2))
    }

    /// Face qubits in cyclic order around the face centre.
    pub fn face_ring(&self, f: &FaceSpec) -> Vec<usize> {
        let (mut cx, mut cy) = (0.0, 0.0);
        for &q in &f.qubits {
            cx += self.coords[q][0] as f64;
            cy += self.coords[q][1] as f64;
        }
        let k = f.qubits.len() as f64;
        let (cx, cy) = (cx / k, cy / k);
        let mut ring = f.qubits.clone();
        ring.sort_by(|&a, &b| {
            let ta = (self.coords[a][1] as f64 - cy).atan2(self.coords[a][0] as f64 - cx);
            let tb = (self.coords[b][1] as f64 - cy).atan2(self.coords[b][0] as f64 - cx);
            ta.total_cmp(&tb)
        });
        ring
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("code serializes")
    }

    pub fn from_json(s: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(s)
    }
}

/// Boundary of `color`; errors for the bare qubit.
pub fn boundary(code: &TriangularCode, color: Color) -> Result<Vec<usize>, ColorCodeError> {
    code.boundary(color).map(|s| s.to_vec())
}
