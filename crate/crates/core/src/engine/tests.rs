use std::sync::Arc;

use num_traits::ToPrimitive;
use proptest::prelude::*;

use super::*;
use crate::foundations::{advice_sample, interleave, AdviceBits, AdviceSeed, AdviceSpace, FixedBits, RunBudget};
use crate::sets::{CoTree, Word};

fn tree(ws: &[&str]) -> Arc<CoTree> {
    Arc::new(CoTree::parse(ws).unwrap())
}

fn bits(s: &str, tail: bool) -> FixedBits {
    FixedBits::parse(s, tail).unwrap()
}

type Fixed = FixedInput<WwklMachine, bool>;

fn fixed(t: Arc<CoTree>) -> Fixed {
    FixedInput::new(WwklMachine, t)
}

#[test]
fn run_examples() {
    let t = tree(&["00"]);
    let out = lv_run(&WwklMachine, t.clone(), &bits("0", true), 8, RunBudget(100));
    let expected: Vec<bool> = "01111111".chars().map(|c| c == '1').collect();
    assert_eq!(
        out,
        RunOutcome::Succeeding {
            output: expected,
            steps: 8
        }
    );
    let out = lv_run(&WwklMachine, t.clone(), &bits("001", false), 8, RunBudget(100));
    assert_eq!(
        out,
        RunOutcome::Failed {
            step: 2,
            partial: vec![false]
        }
    );
    let out = lv_run(&WwklMachine, tree(&["0", "1"]), &bits("1", false), 8, RunBudget(100));
    assert_eq!(
        out,
        RunOutcome::Failed {
            step: 1,
            partial: vec![]
        }
    );
    let out = lv_run(&WwklMachine, t, &bits("1", false), 8, RunBudget(0));
    assert_eq!(out, RunOutcome::Exhausted { partial: vec![] });
    let out = lv_run(
        &Identity::<u8>::new(),
        Name::from_vec(vec![1, 2]),
        &bits("", false),
        3,
        RunBudget(10),
    );
    assert_eq!(out, RunOutcome::Exhausted { partial: vec![1, 2] });
}

fn word_strategy(max_len: usize) -> impl Strategy<Value = Word> {
    proptest::collection::vec(any::<bool>(), 0..=max_len).prop_map(Word)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]
    #[test]
    fn runs_are_deterministic_and_monotone_in_fuel(
        words in proptest::collection::vec(word_strategy(6), 0..5),
        advice in proptest::collection::vec(any::<bool>(), 0..12),
        out_len in 0usize..10,
        fuel in 0u64..12,
    ) {
        let t = Arc::new(CoTree::from_excluded(words));
        let r = FixedBits::new(advice, true);
        let a = lv_run(&WwklMachine, t.clone(), &r, out_len, RunBudget(fuel));
        let b = lv_run(&WwklMachine, t.clone(), &r, out_len, RunBudget(fuel));
        prop_assert_eq!(&a, &b);
        for more in fuel..fuel + 8 {
            let c = lv_run(&WwklMachine, t.clone(), &r, out_len, RunBudget(more));
            match &a {
                RunOutcome::Exhausted { partial } => prop_assert!(c.output().starts_with(partial)),
                _ => prop_assert_eq!(&c, &a),
            }
        }
    }
}

#[test]
fn restarts_follow_geometric_law() {
    let t = tree(&["00"]);
    let loops = 10_000u64;
    let total: u64 = (0..loops)
        .map(|i| {
            let res = lv_restart_loop(
                &WwklMachine,
                t.clone(),
                AdviceSeed::new(7).split(i),
                2,
                RunBudget(100),
                1000,
            )
            .unwrap();
            assert!(res.outcome.is_succeeding());
            res.restarts
        })
        .sum();
    let mean = total as f64 / loops as f64;
    assert!((mean - 1.0 / 3.0).abs() < 0.05, "mean restarts {mean}");
}

#[test]
fn restart_edge_cases() {
    let res = lv_restart_loop(&WwklMachine, tree(&[""]), AdviceSeed::new(1), 4, RunBudget(100), 25).unwrap();
    assert_eq!(res.restarts, 25);
    assert!(res.outcome.is_failed());
    let res = lv_restart_loop(&WwklMachine, tree(&[]), AdviceSeed::new(1), 4, RunBudget(100), 25).unwrap();
    assert_eq!(res.restarts, 0);
    // exhausted runs are not resampled
    let res = lv_restart_loop(&WwklMachine, tree(&["00"]), AdviceSeed::new(1), 4, RunBudget(1), 25).unwrap();
    assert_eq!(res.restarts, 0);
    assert!(matches!(res.outcome, RunOutcome::Exhausted { .. }));
}

#[test]
fn restart_uses_fresh_advice_and_reproduces() {
    let t = tree(&["0", "10"]);
    for s in 0..200u64 {
        let seed = AdviceSeed::new(s);
        let res = lv_restart_loop(&WwklMachine, t.clone(), seed, 6, RunBudget(100), 100).unwrap();
        let used: Vec<Vec<bool>> = (0..=res.restarts)
            .map(|j| {
                advice_sample(&AdviceSpace::CantorSpace, seed.split(j))
                    .unwrap()
                    .raw()
                    .prefix(64)
            })
            .collect();
        for i in 0..used.len() {
            for j in i + 1..used.len() {
                assert_ne!(used[i], used[j]);
            }
        }
        let advice = advice_sample(&AdviceSpace::CantorSpace, res.advice_seed).unwrap();
        let direct = lv_run(&WwklMachine, t.clone(), advice.raw(), 6, RunBudget(100));
        assert_eq!(direct, res.outcome);
    }
}

#[test]
fn estimates_match_exact_measure() {
    let seed = AdviceSeed::new(42);
    let est = lv_estimate_success(&WwklMachine, &tree(&["00"]), 10_000, seed, RunBudget(100), 2).unwrap();
    let p = est.estimate_f64().unwrap();
    assert!((0.73..=0.77).contains(&p), "{p}");
    assert_eq!(est.succeeded + est.failed + est.exhausted, est.trials);
    let full = lv_estimate_success(&WwklMachine, &tree(&[]), 1000, seed, RunBudget(100), 5).unwrap();
    assert_eq!((full.estimate_f64(), full.failed), (Some(1.0), 0));
    let empty = lv_estimate_success(&WwklMachine, &tree(&["0", "1"]), 1000, seed, RunBudget(100), 5).unwrap();
    assert_eq!((empty.estimate_f64(), empty.failed), (Some(0.0), 1000));
}

#[test]
fn wilson_interval_matches_float_formula() {
    let z = wilson_z();
    let zf = z.to_f64().unwrap();
    for (s, n) in [(0u64, 10u64), (7, 10), (10, 10), (7500, 10_000), (1, 3), (499, 1000)] {
        let (lo, hi) = wilson_interval(s, n, &z);
        let (lo, hi) = (lo.to_f64().unwrap(), hi.to_f64().unwrap());
        let p = s as f64 / n as f64;
        let nf = n as f64;
        let denom = 1.0 + zf * zf / nf;
        let center = (p + zf * zf / (2.0 * nf)) / denom;
        let half = zf / denom * (p * (1.0 - p) / nf + zf * zf / (4.0 * nf * nf)).sqrt();
        assert!(lo <= p && p <= hi);
        assert!((lo - (center - half).max(0.0)).abs() < 1e-9, "{s}/{n}");
        assert!((hi - (center + half).min(1.0)).abs() < 1e-9, "{s}/{n}");
    }
    assert_eq!(
        wilson_interval(0, 0, &z),
        (crate::foundations::rat(0, 1), crate::foundations::rat(1, 1))
    );
}

#[test]
fn composition_multiplies_success_measures() {
    let h = lv_compose(fixed(tree(&["00"])), WwklMachine);
    let est = lv_estimate_success(&h, &tree(&["1"]), 10_000, AdviceSeed::new(5), RunBudget(100), 2).unwrap();
    let p = est.estimate_f64().unwrap();
    assert!((p - 0.375).abs() < 0.02, "{p}");

    let with_identity = lv_compose(fixed(tree(&["00"])), Identity::<bool>::new());
    let input = Name::from_vec(vec![]);
    let est = lv_estimate_success(&with_identity, &input, 10_000, AdviceSeed::new(5), RunBudget(100), 2).unwrap();
    let p = est.estimate_f64().unwrap();
    assert!((p - 0.75).abs() < 0.02, "{p}");

    let doomed = lv_compose(fixed(tree(&[])), WwklMachine);
    let est = lv_estimate_success(&doomed, &tree(&[""]), 500, AdviceSeed::new(5), RunBudget(100), 2).unwrap();
    assert_eq!(est.failed, 500);
}

#[test]
fn composed_input_is_the_inner_output() {
    // F copies G's output, so the composed run emits G's path
    let h = lv_compose(Identity::<bool>::new(), WwklMachine);
    let r = bits("0000", false);
    let s = bits("0110", false);
    let advice = FixedBits::new(interleave(&r.prefix(8), &s.prefix(8)), false);
    let out = lv_run(&h, tree(&["00"]), &advice, 3, RunBudget(100));
    assert_eq!(
        out,
        RunOutcome::Succeeding {
            output: vec![false, true, true],
            steps: 3
        }
    );
}

#[test]
fn composition_monitor_law_on_small_advice() {
    let trees = [
        tree(&[]),
        tree(&["00"]),
        tree(&["1", "01"]),
        tree(&["010", "11"]),
        tree(&["0", "1"]),
    ];
    let fuel = RunBudget(100);
    for tf in &trees {
        for tg in &trees {
            let h = lv_compose(fixed(tf.clone()), WwklMachine);
            for r in Word::all_of_length(4) {
                for s in Word::all_of_length(4) {
                    let advice = FixedBits::new(interleave(r.bits(), s.bits()), false);
                    let composed = lv_run(&h, tg.clone(), &advice, 4, fuel);
                    let g = lv_run(&WwklMachine, tg.clone(), &FixedBits::new(s.0.clone(), false), 4, fuel);
                    let f = lv_run(&WwklMachine, tf.clone(), &FixedBits::new(r.0.clone(), false), 4, fuel);
                    assert_eq!(composed.is_failed(), g.is_failed() || f.is_failed(), "{r} {s}");
                    if !composed.is_failed() {
                        assert_eq!(composed.output(), r.bits());
                    }
                }
            }
        }
    }
}
