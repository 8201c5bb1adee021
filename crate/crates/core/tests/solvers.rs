mod common;

use clusterfit::solvers::{
    local_search_min_conductance, min_conductance_unrestricted, optimize, Problem, SolveConfig,
};
use clusterfit::{
    best_density, decide, enumerate_cubic, enumerate_subsets, generate_random_cubic, max_cut, measures,
    min_bisection, min_conductance, min_editing, DecisionInstance, DensityKind, Graph, Rational,
};
use proptest::prelude::*;

use common::*;

#[test]
fn named_examples_match_brute_force() {
    let k4 = Graph::complete(4);
    let k33 = Graph::complete_bipartite(3, 3);
    let prism = Graph::prism();

    assert_eq!(brute_max_cut(&k4), Rational::from(4));
    assert_eq!(max_cut(&k4).unwrap().value, Rational::from(4));

    assert_eq!(brute_min_bisection(&k4), Rational::from(4));
    assert_eq!(brute_min_bisection(&k33), Rational::from(5));
    assert_eq!(brute_min_bisection(&prism), Rational::from(3));
    assert_eq!(min_bisection(&k33).unwrap().value, Rational::from(5));

    assert_eq!(brute_min_conductance(&k4), Rational::new(2, 3));
    assert_eq!(brute_min_conductance(&Graph::complete_bipartite(4, 4)), Rational::new(1, 2));

    assert_eq!(brute_best_relative_density(&k4, 2), Rational::new(1, 5));
    assert_eq!(brute_min_editing(&k4, 2), Rational::from(4));
    assert_eq!(brute_min_editing(&k33, 3), Rational::from(6));
    assert_eq!(min_editing(&k33, 3).unwrap().value, Rational::from(6));
}

#[test]
fn optimizers_agree_with_brute_force_on_random_graphs() {
    for seed in 0..60u64 {
        let n = 2 + (seed as usize % 9);
        let g = random_graph(n, 0.2 + (seed % 7) as f64 / 10.0, seed);
        assert_eq!(max_cut(&g).unwrap().value, brute_max_cut(&g), "seed {seed}");
        if n.is_multiple_of(2) {
            assert_eq!(min_bisection(&g).unwrap().value, brute_min_bisection(&g), "seed {seed}");
        }
        if g.edge_count() > 0 {
            assert_eq!(min_conductance(&g).unwrap().value, brute_min_conductance(&g), "seed {seed}");
        }
        for k in 1..=n {
            assert_eq!(
                best_density(&g, k, DensityKind::Relative).unwrap().value,
                brute_best_relative_density(&g, k)
            );
            assert_eq!(
                best_density(&g, k, DensityKind::Local).unwrap().value,
                brute_best_local_density(&g, k)
            );
            assert_eq!(min_editing(&g, k).unwrap().value, brute_min_editing(&g, k));
        }
    }
}

#[test]
fn witnesses_attain_reported_values() {
    for seed in 0..30u64 {
        let g = random_graph(8, 0.45, seed);
        let mc = max_cut(&g).unwrap();
        assert_eq!(Rational::from(g.cut_size(&mc.witness).unwrap() as i64), mc.value);
        let mb = min_bisection(&g).unwrap();
        assert_eq!(mb.witness.len(), 4);
        assert_eq!(Rational::from(g.cut_size(&mb.witness).unwrap() as i64), mb.value);
        if g.edge_count() > 0 {
            let c = min_conductance(&g).unwrap();
            assert_eq!(measures::conductance(&g, &c.witness).unwrap(), c.value);
        }
        let e = min_editing(&g, 3).unwrap();
        assert_eq!(measures::single_cluster_editing(&g, &e.witness).unwrap(), e.value);
        let d = best_density(&g, 3, DensityKind::Relative).unwrap();
        assert_eq!(measures::relative_density(&g, &d.witness).unwrap(), d.value);
    }
}

#[test]
fn canonical_witness_is_smallest_mask() {
    // smallest mask among k-subsets reaching the optimum
    for seed in 0..20u64 {
        let g = random_graph(7, 0.5, seed);
        let opt = min_editing(&g, 3).unwrap();
        let first = enumerate_subsets(7, Some(3))
            .unwrap()
            .find(|s| measures::single_cluster_editing(&g, s).unwrap() == opt.value)
            .unwrap();
        assert_eq!(opt.witness, first);
    }
}

#[test]
fn pinning_vertex_zero_preserves_conductance() {
    for seed in 0..40u64 {
        let n = 2 + (seed as usize % 9);
        let g = random_graph(n, 0.4, seed + 1000);
        if g.edge_count() == 0 {
            continue;
        }
        assert_eq!(
            min_conductance(&g).unwrap().value,
            min_conductance_unrestricted(&g).unwrap().value
        );
    }
}

#[test]
fn decide_agrees_with_independent_loop() {
    let mut checked = 0;
    for seed in 0..25u64 {
        let n = 4 + 2 * (seed as usize % 4);
        let g = random_graph(n, 0.5, seed + 77);
        let k = n / 2;
        let thresholds = [
            Rational::ZERO,
            Rational::new(1, 3),
            Rational::new(1, 2),
            Rational::new(2, 3),
            Rational::ONE,
            Rational::from(2),
            Rational::from(k as i64 + 1),
            Rational::from(3 * n as i64 / 2),
        ];
        for problem in Problem::ALL {
            if problem == Problem::Conductance && g.edge_count() == 0 {
                continue;
            }
            for &t in &thresholds {
                let inst = DecisionInstance {
                    graph: &g,
                    problem,
                    k: problem.needs_k().then_some(k),
                    threshold: t,
                };
                let got = decide(&inst).unwrap();
                let exists = enumerate_subsets(n, None).unwrap().any(|s| {
                    let value = match problem {
                        Problem::Conductance if s.is_empty() || s.is_full() => return false,
                        Problem::Conductance => measures::conductance(&g, &s).unwrap(),
                        Problem::LocalDensity | Problem::RelativeDensity | Problem::Editing
                            if s.len() != k =>
                        {
                            return false
                        }
                        Problem::LocalDensity => measures::local_density(&g, &s).unwrap(),
                        Problem::RelativeDensity => measures::relative_density(&g, &s).unwrap(),
                        Problem::Editing => measures::single_cluster_editing(&g, &s).unwrap(),
                        Problem::MaxCut => Rational::from(g.cut_size(&s).unwrap() as i64),
                        Problem::MinBisection if 2 * s.len() != n => return false,
                        Problem::MinBisection => Rational::from(g.cut_size(&s).unwrap() as i64),
                    };
                    if problem.maximizes() {
                        value >= t
                    } else {
                        value <= t
                    }
                });
                assert_eq!(got.answer, exists, "{problem} seed {seed} t {t}");
                assert_eq!(got.witness.is_some(), exists);
                checked += 1;
            }
        }
    }
    assert!(checked > 1000);
}

#[test]
fn bisection_cut_parity_on_cubic_graphs() {
    for g in enumerate_cubic(6).unwrap().chain(enumerate_cubic(8).unwrap().step_by(97)) {
        let n = g.vertex_count();
        for s in enumerate_subsets(n, Some(n / 2)).unwrap() {
            assert_eq!(g.cut_size(&s).unwrap() % 2, (3 * n / 2) % 2);
        }
    }
}

#[test]
fn max_cut_and_bisection_bound_samples() {
    for seed in 0..20u64 {
        let g = generate_random_cubic(10, seed).unwrap();
        let mc = max_cut(&g).unwrap().value;
        let mb = min_bisection(&g).unwrap().value;
        for s in enumerate_subsets(10, Some(5)).unwrap().step_by(11) {
            let c = Rational::from(g.cut_size(&s).unwrap() as i64);
            assert!(mc >= c && mb <= c);
        }
    }
}

#[test]
fn local_search_is_an_upper_bound() {
    for seed in 0..40u64 {
        let n = 4 + (seed as usize % 13);
        let g = random_graph(n, 0.35, seed + 5);
        if g.edge_count() == 0 {
            continue;
        }
        let exact = min_conductance(&g).unwrap().value;
        let heur = local_search_min_conductance(&g, seed, 4).unwrap();
        assert!(heur.value >= exact, "seed {seed}");
        assert_eq!(measures::conductance(&g, &heur.witness).unwrap(), heur.value);
    }
}

#[test]
fn local_search_finds_k4_optimum_and_component() {
    let k4 = Graph::complete(4);
    let best = local_search_min_conductance(&k4, 3, 20).unwrap();
    assert_eq!(best.value, Rational::new(2, 3));
    assert_eq!(best.witness.len(), 2);
    let tt = local_search_min_conductance(&two_triangles(), 11, 20).unwrap();
    assert_eq!(tt.value, Rational::ZERO);
}

#[test]
fn local_search_runs_past_mask_limit() {
    let g = generate_random_cubic(200, 9).unwrap();
    let got = local_search_min_conductance(&g, 1, 2).unwrap();
    assert!(got.value < Rational::ONE);
    assert!(max_cut(&g).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn worker_count_never_changes_answers(n in 2usize..=11, p in 0.1f64..0.9, seed in any::<u64>(), workers in 2usize..9) {
        let g = random_graph(n, p, seed);
        let k = (n / 2).max(1);
        for problem in Problem::ALL {
            if problem == Problem::MinBisection && n % 2 == 1 {
                continue;
            }
            let kk = problem.needs_k().then_some(k);
            let a = optimize(&g, problem, kk, SolveConfig::SEQUENTIAL).unwrap();
            let b = optimize(&g, problem, kk, SolveConfig::parallel(workers)).unwrap();
            prop_assert_eq!(a, b);
        }
    }
}
