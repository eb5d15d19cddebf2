use pauli_core::{
    commutes, in_group, span_weights_mod, weight, BitVec, GroupKind, PauliError, PauliGroup,
    PauliString, PauliType,
};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn steane(kind: PauliType) -> PauliGroup {
    let faces = [[0, 1, 2, 3], [1, 2, 4, 5], [2, 3, 5, 6]];
    let gens: Vec<PauliString> = faces
        .iter()
        .map(|f| PauliString::pure(kind, BitVec::from_indices(7, f.iter().copied())))
        .collect();
    let gk = match kind {
        PauliType::X => GroupKind::XStabilizer,
        PauliType::Z => GroupKind::ZStabilizer,
    };
    PauliGroup::new(7, &gens, gk).unwrap()
}

#[test]
fn weight_examples() {
    assert_eq!(weight(&PauliString::identity(7)), 0);
    assert_eq!(weight(&PauliString::z_on(7, [0, 3])), 2);
    let y: PauliString = "IYXZ".parse().unwrap();
    assert_eq!(y.weight(), 3);
}

#[test]
fn commutation_examples() {
    let xi: PauliString = "XI".parse().unwrap();
    let zi: PauliString = "ZI".parse().unwrap();
    let xx: PauliString = "XX".parse().unwrap();
    let zz: PauliString = "ZZ".parse().unwrap();
    assert!(commutes(&xi, &xi).unwrap());
    assert!(!commutes(&xi, &zi).unwrap());
    assert!(commutes(&xx, &zz).unwrap());
    let short: PauliString = "X".parse().unwrap();
    assert_eq!(
        commutes(&xi, &short),
        Err(PauliError::LengthMismatch { left: 2, right: 1 })
    );
}

#[test]
fn text_round_trip() {
    let p: PauliString = "IXYZZI".parse().unwrap();
    assert_eq!(p.to_text(), "IXYZZI");
    assert_eq!(p.to_string(), "IXYZZI");
    assert!("IXQ".parse::<PauliString>().is_err());
}

#[test]
fn empty_group_is_even_for_any_modulus() {
    let g = PauliGroup::trivial(5, GroupKind::XStabilizer);
    for m in [2, 4, 8, 16] {
        assert!(span_weights_mod(&g, m).unwrap());
    }
}

#[test]
fn steane_x_group_is_doubly_even_not_triply() {
    // All 8 elements: the identity and seven weight-4 operators.
    let g = steane(PauliType::X);
    let dist = g.weight_distribution().unwrap();
    assert_eq!(dist[0], 1);
    assert_eq!(dist[4], 7);
    assert!(span_weights_mod(&g, 4).unwrap());
    assert!(!span_weights_mod(&g, 8).unwrap());
}

#[test]
fn steane_membership() {
    let g = steane(PauliType::Z);
    assert!(in_group(&g, &PauliString::identity(7)));
    for q in 0..7 {
        assert!(!in_group(&g, &PauliString::z_on(7, [q])));
    }
    let a = &g.generators()[0];
    let b = &g.generators()[1];
    assert!(in_group(&g, &a.mul(b).unwrap()));
}

#[test]
fn anticommuting_stabilizers_rejected() {
    let gens = vec![PauliString::x_on(2, [0]), PauliString::z_on(2, [0])];
    assert!(matches!(
        PauliGroup::new(2, &gens, GroupKind::XStabilizer),
        Err(PauliError::NonCommuting { i: 0, j: 1 })
    ));
    assert!(PauliGroup::new(2, &gens, GroupKind::Mixed).is_ok());
}

#[test]
fn dependent_generators_are_dropped() {
    let a = PauliString::z_on(4, [0, 1]);
    let b = PauliString::z_on(4, [1, 2]);
    let c = a.mul(&b).unwrap();
    let g = PauliGroup::new(4, &[a, b, c], GroupKind::ZStabilizer).unwrap();
    assert_eq!(g.rank(), 2);
}

#[test]
fn oversized_group_is_rejected() {
    let gens: Vec<PauliString> = (0..27).map(|i| PauliString::z_on(27, [i])).collect();
    let g = PauliGroup::new(27, &gens, GroupKind::ZStabilizer).unwrap();
    assert!(matches!(
        g.span_weights_mod(2),
        Err(PauliError::TooLarge { generators: 27, .. })
    ));
}

#[test]
fn membership_matches_enumeration() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for trial in 0..30 {
        let n = 10 + trial % 7;
        let r = rng.gen_range(1..=n.min(16) - 4);
        let gens: Vec<PauliString> = (0..r)
            .map(|_| PauliString::pure(PauliType::Z, random_mask(&mut rng, n)))
            .collect();
        let g = PauliGroup::new(n, &gens, GroupKind::ZStabilizer).unwrap();
        let elems = g.elements().unwrap();
        assert_eq!(elems.len(), 1 << g.rank());
        for _ in 0..40 {
            let p = PauliString::pure(PauliType::Z, random_mask(&mut rng, n));
            assert_eq!(in_group(&g, &p), elems.contains(&p));
        }
        for e in elems.iter().take(20) {
            assert!(in_group(&g, e));
        }
    }
}

fn random_mask(rng: &mut ChaCha8Rng, n: usize) -> BitVec {
    BitVec::from_bools(&(0..n).map(|_| rng.gen_bool(0.5)).collect::<Vec<_>>())
}

fn arb_pauli(n: usize) -> impl Strategy<Value = PauliString> {
    proptest::collection::vec(0u8..4, n).prop_map(|v| {
        let s: String = v.iter().map(|c| ['I', 'X', 'Y', 'Z'][*c as usize]).collect();
        s.parse().unwrap()
    })
}

proptest! {
    #[test]
    fn weight_is_subadditive(p in arb_pauli(40), q in arb_pauli(40)) {
        let pq = p.mul(&q).unwrap();
        prop_assert!(pq.weight() <= p.weight() + q.weight());
        let disjoint = p.support().and(&q.support()).is_zero();
        prop_assert_eq!(pq.weight() == p.weight() + q.weight(), disjoint);
    }

    #[test]
    fn evenness_levels_nest(masks in proptest::collection::vec(proptest::collection::vec(any::<bool>(), 12), 1..6)) {
        let gens: Vec<PauliString> = masks
            .iter()
            .map(|m| PauliString::pure(PauliType::X, BitVec::from_bools(m)))
            .collect();
        let g = PauliGroup::new(12, &gens, GroupKind::XStabilizer).unwrap();
        for k in [2usize, 4] {
            if g.span_weights_mod(2 * k).unwrap() {
                prop_assert!(g.span_weights_mod(k).unwrap());
            }
        }
    }

    #[test]
    fn symplectic_round_trip(p in arb_pauli(70)) {
        prop_assert_eq!(PauliString::from_symplectic(&p.symplectic()), p);
    }
}
