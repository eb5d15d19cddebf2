use colorcode::{boundary, build_triangular_488, Color, ColorCodeError, Shape, TriangularCode};
use pauli_core::{BitVec, PauliString, PauliType};

/// Smallest weight of a Z string that commutes with every X face and is not a
/// product of Z faces, searching up to `wmax`.
fn brute_z_distance(code: &TriangularCode, wmax: usize) -> Option<usize> {
    let faces = code.face_masks();
    let zgroup = code.stabilizer_group(PauliType::Z);
    let n = code.n;
    for w in 1..=wmax {
        let mut idx: Vec<usize> = (0..w).collect();
        loop {
            let e = BitVec::from_indices(n, idx.iter().copied());
            if faces.iter().all(|f| !f.dot(&e)) && !zgroup.contains(&PauliString::pure(PauliType::Z, e)) {
                return Some(w);
            }
            let mut k = w;
            while k > 0 && idx[k - 1] == n - w + k - 1 {
                k -= 1;
            }
            if k == 0 {
                break;
            }
            idx[k - 1] += 1;
            for j in k..w {
                idx[j] = idx[j - 1] + 1;
            }
        }
    }
    None
}

#[test]
fn bare_qubit() {
    let d0 = build_triangular_488(0);
    assert_eq!(d0.n, 1);
    assert!(d0.faces.is_empty());
    assert_eq!(boundary(&d0, Color::Red), Err(ColorCodeError::NoBoundaries(0)));
}

#[test]
fn sizes_congruences_and_face_counts() {
    for t in 1..=6 {
        let c = build_triangular_488(t);
        assert_eq!(c.n, 2 * t * t + 4 * t + 1, "t = {t}");
        assert_eq!(c.n % 8, if t % 2 == 0 { 1 } else { 7 });
        assert_eq!(c.faces.len(), (c.n - 1) / 2);
        for f in &c.faces {
            let w = f.qubits.len();
            assert!(w == 4 || w == 8, "t = {t}: face weight {w}");
            if f.shape == Shape::Square {
                assert_eq!(f.color, Color::Red);
            } else {
                assert_ne!(f.color, Color::Red);
            }
        }
    }
}

#[test]
fn steane_has_one_square_per_color() {
    let c = build_triangular_488(1);
    let mut colors: Vec<Color> = c.faces.iter().map(|f| f.color).collect();
    colors.sort();
    assert_eq!(colors, vec![Color::Red, Color::Green, Color::Blue]);
    assert!(c.faces.iter().all(|f| f.qubits.len() == 4));
}

#[test]
fn checks_commute_and_color_classes_are_disjoint() {
    for t in 1..=4 {
        let c = build_triangular_488(t);
        let xs = c.x_checks();
        let zs = c.z_checks();
        for a in &xs {
            for b in &zs {
                assert!(a.commutes(b).unwrap());
            }
        }
        for color in Color::ALL {
            let mut seen = vec![false; c.n];
            for f in c.faces.iter().filter(|f| f.color == color) {
                for &q in &f.qubits {
                    assert!(!seen[q], "t = {t}: qubit {q} in two {color} faces");
                    seen[q] = true;
                }
            }
        }
        let rank = c.stabilizer_group(PauliType::X).rank();
        assert_eq!(c.n - 2 * rank, 1, "one logical qubit");
    }
}

#[test]
fn transversal_x_is_logical() {
    for t in 1..=4 {
        let c = build_triangular_488(t);
        for z in c.z_checks() {
            assert!(c.logicals.x.commutes(&z).unwrap());
        }
        assert!(!c.stabilizer_group(PauliType::X).contains(&c.logicals.x));
        assert_eq!(c.logicals.z.weight(), 2 * t + 1);
    }
}

#[test]
fn doubly_even_through_order_three() {
    for t in 1..=3 {
        let g = build_triangular_488(t).stabilizer_group(PauliType::X);
        assert!(g.span_weights_mod(4).unwrap(), "t = {t}");
        assert!(!g.span_weights_mod(8).unwrap(), "t = {t}");
    }
}

#[test]
fn brute_force_distances() {
    assert_eq!(brute_z_distance(&build_triangular_488(1), 3), Some(3));
    assert_eq!(brute_z_distance(&build_triangular_488(2), 5), Some(5));
}

#[test]
fn boundaries_are_logical_and_meet_at_corners() {
    for t in 1..=4 {
        let c = build_triangular_488(t);
        let zg = c.stabilizer_group(PauliType::Z);
        let faces = c.face_masks();
        for color in Color::ALL {
            let b = c.boundary(color).unwrap();
            assert_eq!(b.len(), 2 * t + 1);
            let m = BitVec::from_indices(c.n, b.iter().copied());
            assert!(faces.iter().all(|f| !f.dot(&m)), "t = {t} {color}");
            assert!(!zg.contains(&PauliString::pure(PauliType::Z, m)));
            for f in c.faces.iter().filter(|f| f.color == color) {
                assert!(f.qubits.iter().all(|q| !b.contains(q)), "t = {t}: {color} face on {color} edge");
            }
        }
        for (a, b) in [(Color::Red, Color::Green), (Color::Green, Color::Blue), (Color::Blue, Color::Red)] {
            let ba = c.boundary(a).unwrap();
            let bb = c.boundary(b).unwrap();
            let common: Vec<&usize> = ba.iter().filter(|q| bb.contains(q)).collect();
            assert_eq!(common.len(), 1, "t = {t}: {a}/{b}");
        }
        let red = c.boundary(Color::Red).unwrap();
        let blue = c.boundary(Color::Blue).unwrap();
        let green = c.boundary(Color::Green).unwrap();
        assert_eq!(blue.last(), red.first());
        assert_eq!(red.last(), green.first());
        assert_eq!(green.last(), blue.first());
    }
}

#[test]
fn row_major_ids() {
    for t in 1..=4 {
        let c = build_triangular_488(t);
        for w in c.coords.windows(2) {
            assert!((w[0][1], w[0][0]) < (w[1][1], w[1][0]));
        }
        let red = c.boundary(Color::Red).unwrap();
        let ymax = c.coords.iter().map(|p| p[1]).max().unwrap();
        assert!(red.iter().any(|&q| c.coords[q][1] == ymax));
    }
}

#[test]
fn deterministic_and_json_round_trip() {
    for t in 0..=3 {
        let a = build_triangular_488(t);
        let b = build_triangular_488(t);
        assert_eq!(a, b);
        let back = TriangularCode::from_json(&a.to_json()).unwrap();
        assert_eq!(back, a);
    }
}

#[test]
fn edges_per_face_ratio() {
    for t in 1..=4 {
        let c = build_triangular_488(t);
        assert_eq!(c.edges().len(), 3 * c.faces.len(), "t = {t}");
    }
}
