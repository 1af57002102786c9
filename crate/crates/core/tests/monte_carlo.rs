use std::collections::HashMap;

use tailix::estimators::{cadena_basic, variant_average, VariantAverageConfig};
use tailix::experiments::{lemma3_ratio_experiment, simulate_cell, Engine, KRule, ReplicationPlan};
use tailix::sampling::{sample_pareto, ParetoModel, RngStream};

fn share<F: Fn(u64) -> bool>(seeds: u64, hit: F) -> f64 {
    (0..seeds).filter(|&s| hit(s)).count() as f64 / seeds as f64
}

#[test]
fn basic_estimator_on_pareto_samples() {
    let model = ParetoModel::new(1.0, 1.0).unwrap();
    let inside = share(200, |s| {
        let os = sample_pareto(100_000, &model, &RngStream::new(s, 0))
            .unwrap()
            .sort();
        (0.8..=1.2).contains(&cadena_basic(&os, 316).unwrap())
    });
    assert!(inside >= 0.95, "{inside}");
}

#[test]
fn averaged_estimator_on_pareto_samples() {
    let model = ParetoModel::new(1.0, 1.0).unwrap();
    let cfg = VariantAverageConfig::new(300, 330).unwrap();
    let inside = share(200, |s| {
        let os = sample_pareto(100_000, &model, &RngStream::new(s, 1))
            .unwrap()
            .sort();
        (0.8..=1.2).contains(&variant_average(&os, cfg).unwrap())
    });
    assert!(inside >= 0.95, "{inside}");
}

#[test]
fn simulation_cell_near_truth_at_k_1000() {
    let rule = KRule::List { ks: vec![1000] };
    let inside = share(50, |s| {
        let cell = simulate_cell(1.5, 10.0, 100_000, &rule, s).unwrap();
        let v = cell
            .series("cadena-scaled")
            .unwrap()
            .value_at(1000)
            .unwrap();
        (v - 1.5).abs() <= 0.1
    });
    assert!(inside >= 0.9, "{inside}");
}

#[test]
fn ratio_concentrates_as_n_grows() {
    let engine = Engine::default();
    let big = lemma3_ratio_experiment(
        ReplicationPlan::new(1_000_000, 1000, 100, 8).unwrap(),
        &engine,
    )
    .unwrap()
    .summary;
    assert!((big.median - 1.0).abs() <= 0.02, "{big:?}");
    let small = lemma3_ratio_experiment(ReplicationPlan::new(1_000, 31, 100, 8).unwrap(), &engine)
        .unwrap()
        .summary;
    assert!(small.spread() > big.spread(), "{small:?} vs {big:?}");
}

#[test]
fn sorting_keeps_the_multiset() {
    let model = ParetoModel::new(1.0, 1.0).unwrap();
    let raw = sample_pareto(100_000, &model, &RngStream::new(3, 3)).unwrap();
    let count = |xs: &[f64]| {
        let mut m: HashMap<u64, usize> = HashMap::new();
        for x in xs {
            *m.entry(x.to_bits()).or_default() += 1;
        }
        m
    };
    let before = count(raw.values());
    let os = raw.sort();
    assert_eq!(before, count(os.as_slice()));
    assert!(os.as_slice().windows(2).all(|w| w[0] <= w[1]));
}
