use chain::{build_chained, chain_size, fusion_gauge_count, render_chain_svg, ChainError, ChainedCode, FusionMode};
use pauli_core::{BitVec, GroupKind, PauliGroup, PauliString};

fn all_commute(xs: &[PauliString], zs: &[PauliString]) -> bool {
    xs.iter().all(|x| zs.iter().all(|z| x.commutes(z).unwrap()))
}

fn is_logical_z(code: &ChainedCode, z: &PauliString) -> bool {
    all_commute(&code.x_stabilizers(), std::slice::from_ref(z))
        && !z.commutes(&code.logical_x).unwrap()
        && !code.z_group().contains(z)
}

#[test]
fn sizes() {
    assert_eq!(chain_size(0), 1);
    assert_eq!(chain_size(1), 15);
    assert_eq!(chain_size(2), 49);
    for t in 0..=4 {
        let c = build_chained(t, FusionMode::Edges);
        assert_eq!(c.n, chain_size(t));
        assert_eq!(c.bilayers.len(), t);
    }
    let t0 = build_chained(0, FusionMode::Edges);
    assert!(t0.x_stabilizers().is_empty());
    assert!(t0.z_generators().is_empty());
}

#[test]
fn layout_is_left_to_right() {
    let c = build_chained(3, FusionMode::Edges);
    let mut next = 1;
    for bl in &c.bilayers {
        assert_eq!(bl.layer_a().start, next);
        assert_eq!(bl.layer_a().end, bl.layer_b().start);
        next = bl.layer_b().end;
        for (i, &(a, b)) in c.vertical_edges[bl.mu - 1].iter().enumerate() {
            assert_eq!((a, b), (bl.a(i), bl.b(i)));
        }
    }
    assert_eq!(next, c.n);
}

#[test]
fn stabilizer_weights_mod_eight() {
    for t in 1..=4 {
        let c = build_chained(t, FusionMode::Edges);
        for f in c.type_f.iter().flatten() {
            assert_eq!(f.weight() % 8, 0);
        }
        for (k, b) in c.type_b.iter().enumerate() {
            let left = chain_size(k);
            let nb = 2 * (k + 1) * (k + 1) + 4 * (k + 1) + 1;
            assert_eq!(b.weight(), left + nb);
            assert_eq!(b.weight() % 8, 0, "t = {t} link {}", k + 1);
        }
    }
}

#[test]
fn x_and_z_generators_commute() {
    for mode in [FusionMode::Edges, FusionMode::AllPairs] {
        for t in 1..=3 {
            let c = build_chained(t, mode);
            assert!(all_commute(&c.x_stabilizers(), &c.z_generators()));
            assert!(all_commute(std::slice::from_ref(&c.logical_x), &c.z_generators()));
        }
    }
}

#[test]
fn triply_even_through_order_two() {
    for t in 1..=2 {
        let g = build_chained(t, FusionMode::Edges).x_stabilizer_group();
        assert!(g.span_weights_mod(8).unwrap(), "t = {t}");
        assert!(!g.span_weights_mod(16).unwrap());
    }
}

#[test]
fn pairwise_intersections_doubly_even() {
    for t in 1..=3 {
        let xs = build_chained(t, FusionMode::Edges).x_stabilizers();
        for (i, a) in xs.iter().enumerate() {
            for b in &xs[i + 1..] {
                assert_eq!(a.xmask().and_count(b.xmask()) % 4, 0);
            }
        }
    }
}

#[test]
fn one_logical_qubit() {
    for mode in [FusionMode::Edges, FusionMode::AllPairs] {
        for t in 1..=3 {
            let c = build_chained(t, mode);
            assert_eq!(c.x_stabilizer_group().rank() + c.z_group().rank(), c.n - 1, "t = {t}");
        }
    }
}

#[test]
fn logical_forms() {
    for t in 1..=3 {
        let c = build_chained(t, FusionMode::Edges);
        let forms = c.logical_z_forms();
        assert_eq!(forms.len(), 3);
        for z in &forms {
            assert_eq!(z.weight(), 2 * t + 1);
            assert!(is_logical_z(&c, z), "t = {t}");
            let bl = c.bilayer(t).unwrap();
            let in_b = z.zmask().to_indices().into_iter().filter(|q| bl.layer_b().contains(q)).count();
            assert!(in_b <= 1);
        }
        for pair in forms.windows(2) {
            let prod = pair[0].mul(&pair[1]).unwrap();
            assert!(c.z_group().contains(&prod), "forms differ by the Z group");
        }
        let reps = c.logical_representatives();
        assert_eq!(reps.len(), 3);
        assert_eq!(reps[0], c.logical_x);
        assert!(is_logical_z(&c, &reps[1]) && is_logical_z(&c, &reps[2]));
    }
}

#[test]
fn vertical_pairs_multiply_into_gauge_group() {
    for t in 1..=3 {
        let c = build_chained(t, FusionMode::Edges);
        let g = c.z_group();
        let bl = c.bilayer(t).unwrap();
        for i in 0..bl.n_layer() {
            for j in i + 1..bl.n_layer() {
                let p = c.vertical_pair(t, i).unwrap().mul(&c.vertical_pair(t, j).unwrap()).unwrap();
                assert!(g.contains(&p));
            }
            assert!(!g.contains(&c.vertical_pair(t, i).unwrap()));
        }
    }
}

fn bilayer_gauge_group(t: usize, mode: FusionMode) -> PauliGroup {
    let c = build_chained(t, mode);
    let start = c.z_gauge.len() - fusion_gauge_count(t, mode).unwrap();
    PauliGroup::new(c.n, &c.z_gauge[start..], GroupKind::Gauge).unwrap()
}

#[test]
fn gauge_counts_and_rank_equality() {
    assert_eq!(fusion_gauge_count(2, FusionMode::AllPairs), Ok(136));
    assert_eq!(fusion_gauge_count(1, FusionMode::AllPairs), Ok(21));
    assert_eq!(fusion_gauge_count(0, FusionMode::Edges), Err(ChainError::OrderZero(0)));
    for t in 1..=4 {
        let n = 2 * t * t + 4 * t + 1;
        let edges = fusion_gauge_count(t, FusionMode::Edges).unwrap();
        assert_eq!(edges, 3 * (t * t + 2 * t));
        let ge = bilayer_gauge_group(t, FusionMode::Edges);
        let ga = bilayer_gauge_group(t, FusionMode::AllPairs);
        assert_eq!(ge.rank(), ga.rank());
        assert_eq!(ge.rank(), n - 1);
        assert!(ga.generators().iter().all(|g| ge.contains(g)));

        // Modulo the fused face products already fixed by the layer checks,
        // the edge set is over-complete by a factor of three.
        let code = colorcode::build_triangular_488(t);
        let faces = code.faces.len();
        assert_eq!(edges, 3 * (ge.rank() - faces));
    }
}

#[test]
fn vertical_pair_flips_only_its_own_link() {
    let c = build_chained(2, FusionMode::Edges);
    let e = BitVec::from_indices(c.n, [c.vertical_edges[0][3].0, c.vertical_edges[0][3].1]);
    let (f, b) = c.x_syndrome(&e);
    assert!(f.iter().all(|v| v.is_zero()));
    assert!(b.get(0), "one qubit of the pair sits in layer-b of bilayer 1");
    assert!(!b.get(1), "both qubits sit left of bilayer 2");
    let e = BitVec::from_indices(c.n, [c.vertical_edges[1][0].1]);
    let (_, b) = c.x_syndrome(&e);
    assert!(b.get(1) && !b.get(0));
}

#[test]
fn json_round_trip_and_determinism() {
    for t in 0..=2 {
        for mode in [FusionMode::Edges, FusionMode::AllPairs] {
            let c = build_chained(t, mode);
            assert_eq!(c, build_chained(t, mode));
            assert_eq!(ChainedCode::from_json(&c.to_json()).unwrap(), c);
        }
    }
    let json = build_chained(1, FusionMode::AllPairs).to_json();
    assert!(json.contains("\"all-pairs\""));
}

#[test]
fn svg_draws_both_layers() {
    let c = build_chained(2, FusionMode::Edges);
    let svg = render_chain_svg(&c, 8.0);
    let faces: usize = c.bilayers.iter().map(|b| 2 * b.code.faces.len()).sum();
    assert_eq!(svg.matches("<polygon").count(), faces);
    assert_eq!(svg.matches("<line").count(), 2);
}
