mod common;

use proptest::prelude::*;
use sigspread::solver::fast_replay;
use sigspread::{levels, mirror_trace, run, step, Info, Label, LabelState, Mode, Placement, SignedGraph, Strategy};

use common::{connected_graph, signed_graph};

/// Plays random placements on uninformed vertices until none are left.
fn random_strategy(g: &SignedGraph, picks: &[(u8, bool)], mode: Mode) -> Strategy {
    let mut state = LabelState::all_zero(g.n());
    let mut placements = Vec::new();
    let mut i = 0;
    while !state.is_complete() {
        let zeros = state.vertices_with(Label::Zero);
        let (pick, neg) = picks[i % picks.len()];
        i += 1;
        let info = if neg && mode == Mode::Relaxed { Info::NegA } else { Info::A };
        let p = Placement { vertex: zeros[pick as usize % zeros.len()], info };
        state = step(g, &state, p).unwrap();
        placements.push(p);
    }
    Strategy { mode, placements }
}

fn picks() -> impl proptest::strategy::Strategy<Value = Vec<(u8, bool)>> {
    proptest::collection::vec((any::<u8>(), any::<bool>()), 1..12)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn informed_vertices_stay_put(g in signed_graph(10), picks in picks(), relaxed in any::<bool>()) {
        let mode = if relaxed { Mode::Relaxed } else { Mode::Id };
        let trace = run(&g, &random_strategy(&g, &picks, mode)).unwrap();
        prop_assert!(trace.is_complete());
        for pair in trace.snapshots.windows(2) {
            for v in 0..g.n() {
                let before = pair[0].get(v);
                if before != Label::Zero {
                    prop_assert_eq!(pair[1].get(v), before);
                }
            }
        }
        for (i, p) in trace.strategy.placements.iter().enumerate() {
            prop_assert_eq!(trace.snapshots[i + 1].get(p.vertex), p.info.label());
        }
    }

    #[test]
    fn all_positive_id_never_confuses(g in signed_graph(10), picks in picks()) {
        let g = g.map_signs(|_| sigspread::Sign::Positive);
        let trace = run(&g, &random_strategy(&g, &picks, Mode::Id)).unwrap();
        prop_assert_eq!(trace.confused_count(), 0);
    }

    #[test]
    fn bit_planes_agree_with_engine(g in signed_graph(10), picks in picks(), relaxed in any::<bool>()) {
        let mode = if relaxed { Mode::Relaxed } else { Mode::Id };
        let s = random_strategy(&g, &picks, mode);
        let trace = run(&g, &s).unwrap();
        let mut prefix = Vec::new();
        for (i, &p) in s.placements.iter().enumerate() {
            prefix.push(p);
            let fast = fast_replay(&g, &prefix);
            prop_assert_eq!(fast.as_ref(), Some(&trace.snapshots[i + 1]));
        }
    }

    #[test]
    fn mirrored_trace_replays_on_negation(g in connected_graph(1, 10), picks in picks()) {
        let trace = run(&g, &random_strategy(&g, &picks, Mode::Relaxed)).unwrap();
        let mirrored = mirror_trace(&trace).unwrap();
        prop_assert_eq!(&mirrored.graph, &g.negate_signature());
        let replay = run(&mirrored.graph, &mirrored.strategy).unwrap();
        prop_assert_eq!(&replay, &mirrored);
        prop_assert_eq!(replay.confused(), trace.confused());
        let lv = levels(&trace).unwrap();
        let last = mirrored.final_state();
        for v in 0..g.n() {
            let own = trace.final_state().get(v);
            let expected = if lv.level(v) % 2 == 1 { own.negate() } else { own };
            prop_assert_eq!(last.get(v), expected);
        }
        prop_assert_eq!(mirror_trace(&mirrored).unwrap(), trace);
    }
}

#[test]
fn placing_on_an_informed_vertex_is_rejected() {
    let g = SignedGraph::all_positive(3, [(0, 1), (1, 2)]).unwrap();
    let err = run(&g, &Strategy::id([0, 1])).unwrap_err();
    assert_eq!(err, sigspread::Error::PlacementOnInformed { step: 2, vertex: 1 });
}
