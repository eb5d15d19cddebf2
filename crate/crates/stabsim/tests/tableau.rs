use pauli_core::PauliString;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use stabsim::{CssTableau, Event, Sign, StabsimError};

#[test]
fn fresh_qubits_are_z_eigenstates() {
    let tab = CssTableau::new(3);
    assert_eq!(tab.expectation(&PauliString::z_on(3, [1])).unwrap(), Some(Sign::Plus));
    assert_eq!(tab.expectation(&PauliString::x_on(3, [1])).unwrap(), None);
    tab.check_invariants().unwrap();
}

#[test]
fn repeated_measurement_agrees() {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let mut tab = CssTableau::new(2);
    let xx = PauliString::x_on(2, [0, 1]);
    let first = tab.measure(&xx, None, &mut rng).unwrap();
    assert!(first.random);
    let again = tab.measure(&xx, None, &mut rng).unwrap();
    assert!(!again.random);
    assert_eq!(first.sign, again.sign);
    assert_eq!(tab.expectation(&PauliString::z_on(2, [0, 1])).unwrap(), Some(Sign::Plus));
    assert_eq!(tab.expectation(&PauliString::z_on(2, [0])).unwrap(), None);
    tab.check_invariants().unwrap();
}

#[test]
fn forced_outcomes() {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let mut tab = CssTableau::new(1);
    let x = PauliString::x_on(1, [0]);
    let o = tab.measure(&x, Some(Sign::Minus), &mut rng).unwrap();
    assert_eq!(o.sign, Sign::Minus);
    assert_eq!(
        tab.measure(&x, Some(Sign::Plus), &mut rng),
        Err(StabsimError::ForcedImpossible { outcome: -1 })
    );
}

#[test]
fn applying_paulis_flips_signs() {
    let mut tab = CssTableau::new(2);
    tab.apply_x([0]).unwrap();
    assert_eq!(tab.expectation(&PauliString::z_on(2, [0])).unwrap(), Some(Sign::Minus));
    assert_eq!(tab.expectation(&PauliString::z_on(2, [0, 1])).unwrap(), Some(Sign::Minus));
    assert_eq!(tab.expectation(&PauliString::z_on(2, [1])).unwrap(), Some(Sign::Plus));
}

#[test]
fn tracked_operators_follow_measurements() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let mut tab = CssTableau::new(2);
    let xx = PauliString::x_on(2, [0, 1]);
    tab.measure(&xx, Some(Sign::Minus), &mut rng).unwrap();
    let id = tab.track("x0", &PauliString::x_on(2, [0])).unwrap();
    tab.measure(&PauliString::z_on(2, [0]), None, &mut rng).unwrap();
    let tr = &tab.tracked()[id];
    assert_eq!(tab.expectation(&tr.op()).unwrap(), None);
    tab.check_invariants().unwrap();
}

#[test]
fn add_and_reset_qubits() {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let mut tab = CssTableau::new(1);
    tab.measure(&PauliString::x_on(1, [0]), None, &mut rng).unwrap();
    let r = tab.add_qubits(2);
    assert_eq!(r, 1..3);
    assert_eq!(tab.n(), 3);
    tab.reset(0, &mut rng).unwrap();
    for q in 0..3 {
        assert_eq!(tab.expectation(&PauliString::z_on(3, [q])).unwrap(), Some(Sign::Plus));
    }
    tab.check_invariants().unwrap();
}

#[test]
fn non_css_operators_are_rejected() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut tab = CssTableau::new(1);
    let mut y = PauliString::x_on(1, [0]);
    y.mul_assign(&PauliString::z_on(1, [0])).unwrap();
    assert_eq!(tab.measure(&y, None, &mut rng), Err(StabsimError::NotCss));
}

#[test]
fn transcript_is_json_lines() {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let mut tab = CssTableau::new(2);
    tab.note("start");
    tab.measure(&PauliString::x_on(2, [0, 1]), Some(Sign::Plus), &mut rng).unwrap();
    tab.apply_z([0]).unwrap();
    let text = tab.transcript_jsonl();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 3);
    for l in &lines {
        let v: serde_json::Value = serde_json::from_str(l).unwrap();
        assert!(v.get("event").is_some());
    }
    assert_eq!(
        tab.transcript()[1],
        Event::Measure { op: PauliString::x_on(2, [0, 1]).to_text(), outcome: 1, random: true }
    );
    tab.set_logging(false);
    tab.apply_z([1]).unwrap();
    assert_eq!(tab.transcript().len(), 3);
}
