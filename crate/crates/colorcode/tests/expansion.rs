use colorcode::{build_triangular_488, expansion_plan, render_svg, Color, ColorCodeError};
use pauli_core::{BitVec, PauliType, XorBasis};

#[test]
fn bare_qubit_cannot_expand() {
    let d0 = build_triangular_488(0);
    assert_eq!(expansion_plan(&d0).unwrap_err(), ColorCodeError::ExpansionOrder(0));
}

#[test]
fn plans_exist_and_pairs_generate_new_faces() {
    for t in 1..=4 {
        let code = build_triangular_488(t);
        let plan = expansion_plan(&code).unwrap();
        let target = &plan.target;
        assert_eq!(target.t, t + 1);
        assert_eq!(plan.new_qubits.len(), 4 * t + 6, "t = {t}");
        assert_eq!(plan.pairs.len(), 2 * t + 3);
        assert_eq!(plan.relocated.len(), 1);

        let mut used: Vec<usize> = plan.old_to_new.clone();
        used.extend(&plan.new_qubits);
        used.sort_unstable();
        assert_eq!(used, (0..target.n).collect::<Vec<_>>());

        let mut basis = XorBasis::new(target.n);
        for f in &code.faces {
            basis.insert(&BitVec::from_indices(target.n, f.qubits.iter().map(|&q| plan.old_to_new[q])));
        }
        for &(a, b) in &plan.pairs {
            basis.insert(&BitVec::from_indices(target.n, [a, b]));
        }
        let scheduled: Vec<usize> = plan.schedule.iter().map(|s| s.face).collect();
        for (k, f) in target.faces.iter().enumerate() {
            let m = BitVec::from_indices(target.n, f.qubits.iter().copied());
            if f.color != Color::Red {
                assert!(basis.contains(&m), "t = {t}: face {k}");
            }
            if !basis.contains(&m) {
                assert!(scheduled.contains(&k));
            }
        }
        let first_other = plan
            .schedule
            .iter()
            .position(|s| target.faces[s.face].color != Color::Red)
            .unwrap_or(plan.schedule.len());
        assert!(plan.schedule[first_other..]
            .iter()
            .all(|s| target.faces[s.face].color != Color::Red));
        assert!(plan.schedule.chunks(2).all(|c| c[0].basis == PauliType::X && c[1].basis == PauliType::Z));
    }
}

#[test]
fn svg_mentions_every_face_and_qubit() {
    let code = build_triangular_488(2);
    let svg = render_svg(&code, 10.0);
    assert!(svg.starts_with("<svg"));
    assert_eq!(svg.matches("<polygon").count(), code.faces.len());
    assert_eq!(svg.matches("<circle").count(), code.n);
}
