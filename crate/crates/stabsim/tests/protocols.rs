use chain::{build_chained, FusionMode};
use colorcode::{build_triangular_488, Color};
use pauli_core::{PauliString, PauliType};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use stabsim::{
    assemble_chain, bell_pair_protocol, cnot_protocol, expansion_protocol, fusion_protocol,
    init_logical, merge, revert_protocol, Block, ChainLayout, CssTableau, GluingMap, LogicalState, Sign,
    StabsimError,
};

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn prod(a: &PauliString, b: &PauliString) -> PauliString {
    a.mul(b).unwrap()
}

fn all_faces_plus(tab: &CssTableau, b: &Block) -> bool {
    let n = tab.n();
    [PauliType::X, PauliType::Z]
        .iter()
        .flat_map(|&k| b.faces(k, n))
        .all(|f| tab.expectation(&f).unwrap() == Some(Sign::Plus))
}

/// Entangles a bare reference qubit in `|0>` with `block` in `|0_L>` into
/// `+XX`, `+ZZ` by measuring the joint logical X directly.
fn attach_reference(tab: &mut CssTableau, col: usize, block: &Block, r: &mut ChaCha8Rng) -> Block {
    let refb = Block::on(build_triangular_488(0), vec![col]);
    let n = tab.n();
    let xx = prod(&refb.logical(PauliType::X, n), &block.logical(PauliType::X, n));
    if tab.measure(&xx, None, r).unwrap().sign.is_minus() {
        tab.apply(&refb.logical(PauliType::Z, n)).unwrap();
    }
    refb
}

fn check_pair(tab: &CssTableau, refb: &Block, xl: &PauliString, zl: &PauliString, ctx: &str) {
    let n = tab.n();
    assert_eq!(tab.expectation(&prod(&refb.logical(PauliType::X, n), xl)).unwrap(), Some(Sign::Plus), "X {ctx}");
    assert_eq!(tab.expectation(&prod(&refb.logical(PauliType::Z, n), zl)).unwrap(), Some(Sign::Plus), "Z {ctx}");
}

fn bell_signs_hold(ta: usize, tb: usize, color: Color) {
    let (ca, cb) = (build_triangular_488(ta), build_triangular_488(tb));
    for seed in 0..100 {
        let run = bell_pair_protocol(&ca, &cb, color, &mut rng(seed)).unwrap();
        let tab = &run.tableau;
        let n = tab.n();
        let xx = prod(&run.a.logical(PauliType::X, n), &run.b.logical(PauliType::X, n));
        let zz = prod(&run.a.logical(PauliType::Z, n), &run.b.logical(PauliType::Z, n));
        assert_eq!(tab.expectation(&xx).unwrap(), Some(run.parity_xx), "seed {seed}");
        assert_eq!(tab.expectation(&zz).unwrap(), Some(run.parity_zz), "seed {seed}");
        assert_eq!(tab.expectation(&run.a.logical(PauliType::Z, n)).unwrap(), None);
        assert!(all_faces_plus(tab, &run.a) && all_faces_plus(tab, &run.b));
        tab.check_invariants().unwrap();
    }
}

#[test]
fn bell_pair_bare_and_d1() {
    bell_signs_hold(0, 1, Color::Blue);
}

#[test]
fn bell_pair_d1_d2() {
    bell_signs_hold(1, 2, Color::Blue);
    bell_signs_hold(1, 2, Color::Green);
}

#[test]
fn bell_pair_d2_d2() {
    bell_signs_hold(2, 2, Color::Red);
}

#[test]
fn merged_code_checks_are_determined() {
    let code = build_triangular_488(1);
    for seed in 0..20 {
        let mut r = rng(seed);
        let mut tab = CssTableau::new(0);
        let a = Block::fresh(&mut tab, code.clone());
        let b = Block::fresh(&mut tab, code.clone());
        init_logical(&mut tab, &a, LogicalState::Zero, &mut r).unwrap();
        init_logical(&mut tab, &b, LogicalState::Plus, &mut r).unwrap();
        let gm = GluingMap::new(&code, &code, Color::Green).unwrap();
        merge(&mut tab, &a, &b, &gm, &[PauliType::X, PauliType::Z], &mut r).unwrap();
        for kind in [PauliType::X, PauliType::Z] {
            for c in gm.merged_checks(&code, &code, kind) {
                assert!(tab.expectation(&c).unwrap().is_some());
            }
        }
        tab.check_invariants().unwrap();
    }
}

#[test]
fn cnot_maps_logical_paulis() {
    for t in [1, 2] {
        let code = build_triangular_488(t);
        for seed in 0..100 {
            let mut r = rng(1000 + seed);
            let mut tab = CssTableau::new(0);
            let c = Block::fresh(&mut tab, code.clone());
            let a = Block::fresh(&mut tab, code.clone());
            let tg = Block::fresh(&mut tab, code.clone());
            let cols = tab.add_qubits(2);
            init_logical(&mut tab, &c, LogicalState::Zero, &mut r).unwrap();
            init_logical(&mut tab, &tg, LogicalState::Zero, &mut r).unwrap();
            let rc = attach_reference(&mut tab, cols.start, &c, &mut r);
            let rt = attach_reference(&mut tab, cols.start + 1, &tg, &mut r);
            cnot_protocol(&mut tab, &c, &a, &tg, &mut r).unwrap();
            let n = tab.n();
            let (xc, zc) = (c.logical(PauliType::X, n), c.logical(PauliType::Z, n));
            let (xt, zt) = (tg.logical(PauliType::X, n), tg.logical(PauliType::Z, n));
            let (xrc, zrc) = (rc.logical(PauliType::X, n), rc.logical(PauliType::Z, n));
            let (xrt, zrt) = (rt.logical(PauliType::X, n), rt.logical(PauliType::Z, n));
            let plus = Some(Sign::Plus);
            assert_eq!(tab.expectation(&prod(&prod(&xrc, &xc), &xt)).unwrap(), plus, "t {t} seed {seed}");
            assert_eq!(tab.expectation(&prod(&zrc, &zc)).unwrap(), plus);
            assert_eq!(tab.expectation(&prod(&xrt, &xt)).unwrap(), plus);
            assert_eq!(tab.expectation(&prod(&prod(&zrt, &zc), &zt)).unwrap(), plus);
            assert!(all_faces_plus(&tab, &c) && all_faces_plus(&tab, &tg));
            tab.check_invariants().unwrap();
        }
    }
}

#[test]
fn cnot_rejects_mixed_orders() {
    let mut tab = CssTableau::new(0);
    let c = Block::fresh(&mut tab, build_triangular_488(1));
    let a = Block::fresh(&mut tab, build_triangular_488(1));
    let tg = Block::fresh(&mut tab, build_triangular_488(2));
    assert_eq!(
        cnot_protocol(&mut tab, &c, &a, &tg, &mut rng(0)),
        Err(StabsimError::MismatchedOrders(vec![1, 1, 2]))
    );
}

fn chain_state_matches(t: usize, mode: FusionMode, state: LogicalState, seed: u64) {
    let code = build_chained(t, mode);
    let layout = ChainLayout::new(&code);
    let mut tab = CssTableau::new(code.n);
    let run = assemble_chain(&mut tab, &layout, Some(state), &mut rng(seed)).unwrap();
    assert_eq!(run.link_parities.len(), t);
    let plus = Some(Sign::Plus);
    for s in code.x_stabilizers().iter().chain(&code.z_generators()) {
        assert_eq!(tab.expectation(s).unwrap(), plus, "t {t} seed {seed}");
    }
    let logical = match state {
        LogicalState::Zero => &code.logical_z,
        LogicalState::Plus => &code.logical_x,
    };
    assert_eq!(tab.expectation(logical).unwrap(), plus);
    tab.check_invariants().unwrap();
}

#[test]
fn assembled_chain_is_the_chained_code() {
    for t in [1, 2] {
        for seed in 0..20 {
            for state in [LogicalState::Zero, LogicalState::Plus] {
                chain_state_matches(t, FusionMode::Edges, state, seed);
            }
        }
    }
    for seed in 0..5 {
        chain_state_matches(2, FusionMode::AllPairs, LogicalState::Zero, seed);
    }
}

#[test]
fn fusion_needs_bell_links() {
    let code = build_chained(1, FusionMode::Edges);
    let layout = ChainLayout::new(&code);
    let mut tab = CssTableau::new(code.n);
    assert_eq!(
        fusion_protocol(&mut tab, &layout, 1, &mut rng(0)),
        Err(StabsimError::MissingBell(1))
    );
}

#[test]
fn fuse_revert_round_trip_keeps_the_logical_qubit() {
    for t in [1, 2] {
        let code = build_chained(t, FusionMode::Edges);
        let layout = ChainLayout::new(&code);
        for seed in 0..30 {
            let mut r = rng(5000 + seed);
            let mut tab = CssTableau::new(code.n + 1);
            let top = layout.top().clone();
            init_logical(&mut tab, &top, LogicalState::Zero, &mut r).unwrap();
            let refb = attach_reference(&mut tab, code.n, &top, &mut r);
            let n = tab.n();
            let expect_chain = |tab: &CssTableau| {
                check_pair(tab, &refb, &code.logical_x.embed(n, 0), &code.logical_z.embed(n, 0), &format!("chain t {t} seed {seed}"));
            };
            for _ in 0..2 {
                assemble_chain(&mut tab, &layout, None, &mut r).unwrap();
                expect_chain(&tab);
                let d = revert_protocol(&mut tab, &layout, &mut r).unwrap();
                assert!(all_faces_plus(&tab, &d));
                check_pair(&tab, &refb, &d.logical(PauliType::X, n), &d.logical(PauliType::Z, n), &format!("revert t {t} seed {seed}"));
                let keep: Vec<usize> = d.cols.clone();
                for q in (0..code.n).filter(|q| !keep.contains(q)) {
                    tab.reset(q, &mut r).unwrap();
                }
                tab.check_invariants().unwrap();
            }
        }
    }
}

fn expansion_keeps_logical(t: usize) {
    let code = build_triangular_488(t);
    for seed in 0..30 {
        let mut r = rng(9000 + seed);
        let mut tab = CssTableau::new(0);
        let blk = Block::fresh(&mut tab, code.clone());
        let rc = tab.add_qubits(1).start;
        init_logical(&mut tab, &blk, LogicalState::Zero, &mut r).unwrap();
        let refb = attach_reference(&mut tab, rc, &blk, &mut r);
        let run = expansion_protocol(&mut tab, &blk, &mut r).unwrap();
        let scheduled: Vec<(usize, PauliType)> = run.plan.schedule.iter().map(|s| (s.face, s.basis)).collect();
        for &(k, kind, e) in &run.pre_schedule {
            if !scheduled.contains(&(k, kind)) {
                assert_eq!(e, Some(Sign::Plus), "t {t} face {k} {kind}");
            }
        }
        assert!(all_faces_plus(&tab, &run.target));
        let n = tab.n();
        check_pair(&tab, &refb, &run.target.logical(PauliType::X, n), &run.target.logical(PauliType::Z, n), "target");
        check_pair(&tab, &refb, &run.target.logical(PauliType::X, n), &run.logical_z, "carried");
        tab.check_invariants().unwrap();
    }
}

#[test]
fn expansion_d1_to_d2() {
    expansion_keeps_logical(1);
}

#[test]
fn expansion_d2_to_d3() {
    expansion_keeps_logical(2);
}
