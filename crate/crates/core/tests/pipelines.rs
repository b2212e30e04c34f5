use std::collections::BTreeSet;
use std::sync::Arc;

use num_traits::Zero;

use lasvegas_core::apps::{
    ivt_probabilistic, ivt_tree_sequence, nash_solve, nash_verify, pwl_zero_set, BimatrixGame, IvtMachine, PwlFunction,
};
use lasvegas_core::choice::{cn_select, interval_decode, interval_encode, wwkl_path, WwklOutcome};
use lasvegas_core::engine::{lv_estimate_success, lv_restart_loop, lv_run, RunOutcome, WwklMachine};
use lasvegas_core::formats::TreeJson;
use lasvegas_core::foundations::{advice_sample, pow2_neg, rat, AdviceSeed, AdviceSpace, FixedBits};
use lasvegas_core::sets::{ClosedInterval, CoTree, Word};
use lasvegas_core::{Rational, RunBudget};

fn tree(ws: &[&str]) -> CoTree {
    CoTree::parse(ws).unwrap()
}

#[test]
fn restart_loop_returns_a_path_in_the_tree() {
    let t = Arc::new(tree(&["0", "11"]));
    for s in 0..50 {
        let r = lv_restart_loop(&WwklMachine, t.clone(), AdviceSeed::new(s), 8, RunBudget(100), 1_000).unwrap();
        match &r.outcome {
            RunOutcome::Succeeding { output, .. } => {
                assert!((0..=8).all(|n| t.member(&output[..n])));
                // the advice of the last run reproduces the same path
                let advice = advice_sample(&AdviceSpace::CantorSpace, r.advice_seed).unwrap();
                assert_eq!(
                    lv_run(&WwklMachine, t.clone(), advice.raw(), 8, RunBudget(100)),
                    r.outcome
                );
            }
            other => panic!("{other:?}"),
        }
    }
}

#[test]
fn wwkl_estimates_cover_exact_measures() {
    let trees = [
        tree(&["00"]),
        tree(&["1", "01"]),
        tree(&["010", "11"]),
        tree(&["0001", "011", "10"]),
        tree(&[]),
    ];
    let mut covered = 0;
    for (i, t) in trees.iter().enumerate() {
        let len = t.max_excluded_len().max(1);
        let e = lv_estimate_success(
            &WwklMachine,
            &Arc::new(t.clone()),
            10_000,
            AdviceSeed::new(11).split(i as u64),
            RunBudget(64),
            len,
        )
        .unwrap();
        // oracle: surviving words at depth len, by enumeration
        let alive = Word::all_of_length(len).filter(|w| t.member(w.bits())).count();
        let exact = Rational::new((alive as i64).into(), (1i64 << len).into());
        assert_eq!(exact, t.measure_exact());
        if e.wilson_lo <= exact && exact <= e.wilson_hi {
            covered += 1;
        }
        assert_eq!(e.exhausted, 0);
    }
    assert!(covered >= 4, "{covered}");
}

#[test]
fn estimates_are_reproducible() {
    let t = Arc::new(tree(&["01", "110"]));
    let a = lv_estimate_success(&WwklMachine, &t, 3_000, AdviceSeed::new(3), RunBudget(64), 3).unwrap();
    let b = lv_estimate_success(&WwklMachine, &t, 3_000, AdviceSeed::new(3), RunBudget(64), 3).unwrap();
    assert_eq!(a, b);
    let json = serde_json::to_value(&a).unwrap();
    assert!(json["estimate"].is_string() && json["wilson_lo"].is_string());
}

#[test]
fn wwkl_path_agrees_with_machine() {
    let t = tree(&["00", "0110", "111"]);
    for w in Word::all_of_length(6) {
        let advice = FixedBits::new(w.0.clone(), false);
        let direct = wwkl_path(&t, &advice, RunBudget(6));
        let run = lv_run(&WwklMachine, Arc::new(t.clone()), &advice, 6, RunBudget(6));
        match direct {
            WwklOutcome::Failed(n) => assert_eq!(
                run,
                RunOutcome::Failed {
                    step: n as u64,
                    partial: w.0[..n - 1].to_vec()
                }
            ),
            WwklOutcome::Emitting(p) => assert_eq!(run, RunOutcome::Succeeding { output: p, steps: 6 }),
            WwklOutcome::Exhausted => unreachable!(),
        }
    }
}

#[test]
fn tree_json_round_trip() {
    let t = tree(&["0110", "01", "1"]);
    let j = serde_json::to_string(&TreeJson::from(&t)).unwrap();
    assert_eq!(j, r#"{"excluded":["1","01"]}"#);
    let back: CoTree = serde_json::from_str::<TreeJson>(&j).unwrap().into();
    assert_eq!(back.excluded(), t.excluded());
    assert!(serde_json::from_str::<TreeJson>(r#"{"excluded":["0x"]}"#).is_err());
}

#[test]
fn game_and_function_json() {
    let g: BimatrixGame = serde_json::from_str(r#"{"A": [["3","0"],["5","1"]], "B": [["3","5"],["0","1"]]}"#).unwrap();
    let s = nash_solve(&g).unwrap();
    assert!(nash_verify(&g, &s).unwrap());
    // prisoner's dilemma: both defect
    assert_eq!(s.x(), &[rat(0, 1), rat(1, 1)]);
    assert_eq!(s.y(), &[rat(0, 1), rat(1, 1)]);
    let round: BimatrixGame = serde_json::from_str(&serde_json::to_string(&g).unwrap()).unwrap();
    assert_eq!(round, g);
    assert!(serde_json::from_str::<BimatrixGame>(r#"{"A": [["1"]], "B": [["1","2"]]}"#).is_err());

    let f: PwlFunction =
        serde_json::from_str(r#"{"breakpoints": [["0","-1"],["2/5","0"],["3/5","0"],["1","1"]]}"#).unwrap();
    assert_eq!(
        pwl_zero_set(&f),
        vec![ClosedInterval::new(rat(2, 5), rat(3, 5)).unwrap()]
    );
    assert!(serde_json::from_str::<PwlFunction>(r#"{"breakpoints": [["0","1"],["0","2"]]}"#).is_err());
}

#[test]
fn ivt_outputs_feed_converging_trees() {
    let f: PwlFunction = serde_json::from_str(r#"{"breakpoints": [["0","-1"],["1","2"]]}"#).unwrap();
    let advice = FixedBits::new(vec![true], false);
    let out = ivt_probabilistic(&f, &advice, 20, RunBudget::DEFAULT).unwrap();
    let approx = match out {
        RunOutcome::Succeeding { output, .. } => output,
        other => panic!("{other:?}"),
    };
    for (j, iv) in approx.iter().enumerate() {
        assert!(iv.width() <= pow2_neg(j as u32));
        assert!(iv.contains(&rat(1, 3)));
    }
    let trees: Vec<CoTree> = (1..=20).map(|n| ivt_tree_sequence(&approx, n).unwrap()).collect();
    for len in 0..=6 {
        for w in Word::all_of_length(len) {
            let m: Vec<bool> = trees.iter().map(|t| t.member(w.bits())).collect();
            // membership changes at most once and settles well before n = 20
            let changes = m.windows(2).filter(|p| p[0] != p[1]).count();
            assert!(changes <= 1, "{w}: {m:?}");
            assert_eq!(m[18], m[19], "{w}");
        }
    }
    // the limit is a point: every word below 1 survives
    assert!(trees[19].member(&[true, false, true, true, false, true]));
}

#[test]
fn ivt_machine_success_lies_near_zero_set() {
    let f: PwlFunction =
        serde_json::from_str(r#"{"breakpoints": [["0","-1"],["1/4","1"],["1/2","-1"],["3/4","1"],["1","1"]]}"#)
            .unwrap();
    let k = 12;
    for i in 0..300 {
        let advice = advice_sample(&AdviceSpace::CantorSpace, AdviceSeed::new(8).split(i)).unwrap();
        let out = lv_run(&IvtMachine, Arc::new(f.clone()), advice.raw(), k + 1, RunBudget(400));
        if let RunOutcome::Succeeding { output, .. } = out {
            let last = output.last().unwrap();
            assert!(f.distance_to_zero_set(&last.midpoint()).unwrap() <= pow2_neg(k as u32));
        }
    }
}

#[test]
fn interval_code_with_mind_change_choice() {
    let c: BTreeSet<u64> = [1, 3, 4].into_iter().collect();
    let (code, name) = interval_encode(&c, 2, 5, rat(1, 4)).unwrap();
    assert!(name.measure() > rat(1, 4));
    for comp in name.components() {
        if comp.width().is_zero() {
            continue;
        }
        assert!(c.contains(&interval_decode(&code, &comp.midpoint()).unwrap()));
    }
    // the complement {0, 2} enumerated with pauses: the guess settles on 1
    let out = cn_select([None, Some(2), None, Some(0)], RunBudget::DEFAULT);
    assert_eq!(out.guess, 1);
    assert_eq!(out.log.mind_changes(), 1);
    assert!(!out.exhausted);
}
