use std::f64::consts::PI;

use chain::{build_chained, FusionMode};
use colorcode::build_triangular_488;
use pauli_core::{BitVec, GroupKind, PauliGroup, PauliString, PauliType};
use verify::{
    code_report, k_even_level, min_logical_weight, min_logical_weight_enumerated, predict_transversal_rz,
    statevector_check, CssCode, Distance, VerifyError,
};

fn d(t: usize) -> CssCode {
    CssCode::from(&build_triangular_488(t))
}

fn chained(t: usize) -> CssCode {
    CssCode::from(&build_chained(t, FusionMode::Edges))
}

#[test]
fn evenness_levels() {
    for t in 1..=3 {
        assert_eq!(k_even_level(&d(t).group(PauliType::X)).unwrap(), 2, "D_{t}");
    }
    for t in 1..=2 {
        assert_eq!(k_even_level(&chained(t).group(PauliType::X)).unwrap(), 3, "T_{t}");
    }
    let g = PauliGroup::new(4, &[PauliString::x_on(4, [0, 1])], GroupKind::XStabilizer).unwrap();
    assert_eq!(k_even_level(&g).unwrap(), 1);
    let g = PauliGroup::new(4, &[PauliString::x_on(4, [0])], GroupKind::XStabilizer).unwrap();
    assert_eq!(k_even_level(&g).unwrap(), 0);
}

#[test]
fn distances() {
    assert_eq!(min_logical_weight(&chained(1), PauliType::Z, 4).unwrap(), Distance::Exact(3));
    assert_eq!(min_logical_weight(&chained(1), PauliType::X, 7).unwrap(), Distance::Exact(7));
    assert_eq!(min_logical_weight(&d(1), PauliType::X, 3).unwrap(), Distance::Exact(3));
    assert_eq!(min_logical_weight(&d(2), PauliType::Z, 5).unwrap(), Distance::Exact(5));
    assert_eq!(min_logical_weight(&d(2), PauliType::X, 5).unwrap(), Distance::Exact(5));
    assert_eq!(
        min_logical_weight(&d(2), PauliType::Z, 4).unwrap(),
        Distance::NoneUpTo { none_up_to: 4 }
    );
}

#[test]
fn no_light_logical_z_on_t2() {
    assert_eq!(
        min_logical_weight(&chained(2), PauliType::Z, 4).unwrap(),
        Distance::NoneUpTo { none_up_to: 4 }
    );
}

#[test]
fn direct_search_matches_coset_enumeration() {
    for code in [d(1), d(2), chained(1)] {
        for kind in [PauliType::X, PauliType::Z] {
            let direct = min_logical_weight(&code, kind, code.n).unwrap().exact().unwrap();
            assert_eq!(direct, min_logical_weight_enumerated(&code, kind).unwrap());
        }
    }
}

#[test]
fn fixed_t1_protects_x_better_than_z() {
    let c = chained(1);
    let z = min_logical_weight_enumerated(&c, PauliType::Z).unwrap();
    let x = min_logical_weight_enumerated(&c, PauliType::X).unwrap();
    assert!(x > z);
    assert_eq!(x, 2 * 2 * 2 - 1);
}

#[test]
fn budget_is_enforced() {
    let err = min_logical_weight(&chained(3), PauliType::Z, 12).unwrap_err();
    assert!(matches!(err, VerifyError::Budget { .. }));
}

#[test]
fn rotation_predictions() {
    assert_eq!(predict_transversal_rz(&d(1)).unwrap(), 3);
    assert_eq!(predict_transversal_rz(&d(2)).unwrap(), 1);
    assert_eq!(predict_transversal_rz(&chained(1)).unwrap(), 7);
    assert_eq!(predict_transversal_rz(&chained(2)).unwrap(), 1);
    let even = CssCode {
        n: 2,
        x_gens: vec![],
        z_gens: vec![BitVec::from_indices(2, [0, 1])],
    };
    assert_eq!(predict_transversal_rz(&even), Err(VerifyError::EvenQubits(2)));
}

#[test]
fn statevector_confirms_prediction() {
    assert!(statevector_check(&d(1), 0.0).unwrap().abs() < 1e-9);
    let s = statevector_check(&d(1), PI / 2.0).unwrap();
    assert!((s - 3.0 * PI / 2.0).abs() < 1e-9, "got {s}");
    let t = statevector_check(&chained(1), PI / 4.0).unwrap();
    assert!((t - 7.0 * PI / 4.0).abs() < 1e-9, "got {t}");
    for (code, k) in [(d(1), 2), (d(2), 2), (chained(1), 3)] {
        let m = predict_transversal_rz(&code).unwrap() as f64;
        let unit = PI / f64::from(1u32 << (k - 1));
        let phase = statevector_check(&code, unit).unwrap();
        assert!((phase - m * unit).abs() < 1e-9);
    }
}

#[test]
fn non_transversal_angle_leaves_code_space() {
    assert_eq!(statevector_check(&d(1), PI / 4.0), Err(VerifyError::NotLogical));
    assert!(matches!(
        statevector_check(&chained(2), PI / 4.0),
        Err(VerifyError::TooManyQubits { n: 49, .. })
    ));
}

#[test]
fn reports() {
    let r = code_report(&chained(1), 4, 7).unwrap();
    assert_eq!((r.k_even_level, r.z_distance, r.x_distance), (3, Distance::Exact(3), Distance::Exact(7)));
    assert_eq!(r.transversal_rz_power, Some(7));
    let json = serde_json::to_string(&r).unwrap();
    assert!(json.contains("\"z_distance\":3"));
    let bare = code_report(&chained(0), 1, 1).unwrap();
    assert_eq!(bare.n, 1);
    assert_eq!(bare.z_distance, Distance::Exact(1));
    let none = serde_json::to_string(&Distance::NoneUpTo { none_up_to: 4 }).unwrap();
    assert_eq!(none, "{\"none_up_to\":4}");
}

#[test]
fn t2_x_distance_by_enumeration() {
    assert_eq!(min_logical_weight_enumerated(&chained(2), PauliType::X).unwrap(), 2 * 9 - 1);
}
