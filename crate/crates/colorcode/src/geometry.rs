//! Lattice construction for the triangular patches.
//!
//! Work happens on the tetrakis dual of the square-octagon tiling, in doubled
//! coordinates: octagon centres sit at (even, even) points, square centres at
//! (odd, odd) points, and every qubit is a triangle made of a square centre
//! and two adjacent square corners. A patch is the set of triangles inside a
//! lattice polygon plus one triangle hanging off each polygon edge, plus three
//! corner qubits. The region vertices become the faces.
//!
//! The polygon has a square apex at (1, 1), two legs that wind through
//! alternating octagons, and a staircase closing the far side. Odd orders pinch
//! once at a weight-8 octagon; that is what makes the counts come out as
//! `2t^2 + 4t + 1` with distance `2t + 1`.

use std::collections::{BTreeSet, HashMap};

pub(crate) type P = (i32, i32);

fn is_square(p: P) -> bool {
    p.0.rem_euclid(2) == 1
}

fn rot(p: P) -> P {
    (p.1, 2 - p.0)
}

fn leg_a(t: usize) -> Vec<P> {
    let mut pts = vec![(1, 1)];
    for k in 1..(2 * t) as i32 {
        pts.push((1 + k, [2, 1, 0, 1][((k - 1) % 4) as usize]));
    }
    pts
}

pub(crate) struct Polygon {
    pub points: Vec<P>,
    pub a_end: P,
    pub b_end: P,
}

pub(crate) fn polygon(t: usize) -> Polygon {
    let a = leg_a(t);
    let b: Vec<P> = a.iter().map(|&p| rot(p)).collect();
    let (a_end, b_end) = (*a.last().unwrap(), *b.last().unwrap());
    let mut stair = vec![a_end];
    let mut p = a_end;
    let x_first = t.is_multiple_of(2);
    for k in 0..2 * t - 1 {
        if (k % 2 == 0) == x_first {
            p = (p.0 - 2, p.1);
        } else {
            p = (p.0, p.1 - 2);
        }
        stair.push(p);
    }
    assert_eq!(p, b_end, "staircase must close the polygon");
    let mut points = a.clone();
    points.extend_from_slice(&stair[1..]);
    let rb: Vec<P> = b.iter().rev().copied().collect();
    points.extend_from_slice(&rb[1..rb.len() - 1]);
    Polygon {
        points,
        a_end,
        b_end,
    }
}

type Tri = (P, P, P);

fn inside(poly: &[P], x: f64, y: f64) -> bool {
    let mut c = false;
    let n = poly.len();
    for i in 0..n {
        let (x1, y1) = (poly[i].0 as f64, poly[i].1 as f64);
        let (x2, y2) = (poly[(i + 1) % n].0 as f64, poly[(i + 1) % n].1 as f64);
        if (y1 > y) != (y2 > y) {
            let xi = x1 + (y - y1) * (x2 - x1) / (y2 - y1);
            if xi > x {
                c = !c;
            }
        }
    }
    c
}

fn contains(t: &Tri, p: P) -> bool {
    t.0 == p || t.1 == p || t.2 == p
}

/// Primal vertex of a triangle: the corner of its square nearest the midpoint
/// of the two octagon centres. Primal coordinates put octagon `(i, j)` at
/// `(4i, 4j)` with `i = (x + y) / 2`, `j = (x - y) / 2`.
fn primal_vertex(tri: &Tri) -> P {
    let s = tri.0;
    let (si, sj) = orig(s);
    let (cx, cy) = (4 * si, 4 * sj);
    let mx: i32 = 4 * (orig(tri.1).0 + orig(tri.2).0);
    let my: i32 = 4 * (orig(tri.1).1 + orig(tri.2).1);
    (
        cx + if mx > 2 * cx { 1 } else { -1 },
        cy + if my > 2 * cy { 1 } else { -1 },
    )
}

fn orig(p: P) -> P {
    ((p.0 + p.1) / 2, (p.0 - p.1) / 2)
}

/// Cyclic vertex list of the face centred at dual point `v`, in primal units.
pub(crate) fn face_vertices(v: P) -> Vec<P> {
    let (i, j) = orig(v);
    let (cx, cy) = (4 * i, 4 * j);
    let offs: &[P] = if is_square(v) {
        &[(-1, -1), (1, -1), (1, 1), (-1, 1)]
    } else {
        &[
            (1, -3),
            (3, -1),
            (3, 1),
            (1, 3),
            (-1, 3),
            (-3, 1),
            (-3, -1),
            (-1, -3),
        ]
    };
    offs.iter().map(|&(a, b)| (cx + a, cy + b)).collect()
}

pub(crate) fn face_color(v: P) -> crate::Color {
    if is_square(v) {
        crate::Color::Red
    } else if orig(v).0.rem_euclid(2) == 0 {
        crate::Color::Green
    } else {
        crate::Color::Blue
    }
}

pub(crate) struct RawPatch {
    /// Primal positions; the last three are the apex, leg-A and leg-B corners.
    pub positions: Vec<P>,
    /// Dual face centres.
    pub faces: Vec<P>,
    /// Boundary qubit indices (into `positions`) for blue, red, green.
    pub sides: [Vec<usize>; 3],
}

pub(crate) fn raw_patch(t: usize) -> RawPatch {
    assert!(t >= 1);
    let poly = polygon(t);
    let pts = &poly.points;
    let (x0, x1) = (
        pts.iter().map(|p| p.0).min().unwrap() - 3,
        pts.iter().map(|p| p.0).max().unwrap() + 3,
    );
    let (y0, y1) = (
        pts.iter().map(|p| p.1).min().unwrap() - 3,
        pts.iter().map(|p| p.1).max().unwrap() + 3,
    );
    let mut all: Vec<Tri> = Vec::new();
    for x in x0..=x1 {
        for y in y0..=y1 {
            if x.rem_euclid(2) == 1 && y.rem_euclid(2) == 1 {
                let cs = [(x - 1, y - 1), (x + 1, y - 1), (x + 1, y + 1), (x - 1, y + 1)];
                for k in 0..4 {
                    all.push(((x, y), cs[k], cs[(k + 1) % 4]));
                }
            }
        }
    }
    let ins: Vec<Tri> = all
        .iter()
        .copied()
        .filter(|t| {
            let cx = (t.0 .0 + t.1 .0 + t.2 .0) as f64 / 3.0 + 1e-7;
            let cy = (t.0 .1 + t.1 .1 + t.2 .1) as f64 / 3.0 + 2e-7;
            inside(pts, cx, cy)
        })
        .collect();
    let verts: BTreeSet<P> = ins.iter().flat_map(|t| [t.0, t.1, t.2]).collect();
    let ins_set: BTreeSet<Tri> = ins.iter().copied().collect();
    let mut edge_tris = Vec::new();
    for k in 0..pts.len() {
        let (a, b) = (pts[k], pts[(k + 1) % pts.len()]);
        let c: Vec<Tri> = all
            .iter()
            .copied()
            .filter(|t| contains(t, a) && contains(t, b) && !ins_set.contains(t))
            .collect();
        assert_eq!(c.len(), 1, "boundary edge must carry exactly one outside triangle");
        edge_tris.push(c[0]);
    }
    let mut positions: Vec<P> = ins.iter().chain(&edge_tris).map(primal_vertex).collect();
    let base = ins.len();

    let choice: [usize; 3] = if t.is_multiple_of(2) { [0, 0, 0] } else { [0, 1, 1] };
    let corners = [(1, 1), poly.a_end, poly.b_end];
    let present: BTreeSet<P> = positions.iter().copied().collect();
    for (ci, &c) in corners.iter().enumerate() {
        let fv = face_vertices(c);
        let m = fv.len();
        let have: Vec<bool> = fv.iter().map(|v| present.contains(v)).collect();
        let cands: Vec<usize> = (0..m)
            .filter(|&k| !have[k] && (have[(k + m - 1) % m] || have[(k + 1) % m]))
            .collect();
        positions.push(fv[cands[choice[ci] % cands.len()]]);
    }
    let n = positions.len();
    let (apex, ca, cb) = (n - 3, n - 2, n - 1);
    let leg = 2 * t - 1;
    let side = |from: usize, start: usize, to: usize| -> Vec<usize> {
        let mut s = vec![from];
        s.extend((0..leg).map(|k| base + start + k));
        s.push(to);
        s
    };
    let sides = [
        side(apex, 0, ca),
        side(ca, leg, cb),
        side(cb, 2 * leg, apex),
    ];
    RawPatch {
        positions,
        faces: verts.into_iter().collect(),
        sides,
    }
}

/// Qubit sets of every face, as indices into `positions`.
pub(crate) fn face_sets(patch: &RawPatch) -> Vec<Vec<usize>> {
    let index: HashMap<P, usize> = patch
        .positions
        .iter()
        .enumerate()
        .map(|(i, &p)| (p, i))
        .collect();
    patch
        .faces
        .iter()
        .map(|&v| {
            let mut q: Vec<usize> = face_vertices(v)
                .iter()
                .filter_map(|p| index.get(p).copied())
                .collect();
            q.sort_unstable();
            q
        })
        .collect()
}

pub(crate) fn is_square_centre(v: P) -> bool {
    is_square(v)
}
