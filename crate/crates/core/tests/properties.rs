use std::collections::BTreeMap;

use proptest::prelude::*;
use signed_maxcut::decomposition::switch_to_all_negative;
use signed_maxcut::format::{parse_instance, serialize, TraceLine};
use signed_maxcut::fpt::{self, SolveOptions};
use signed_maxcut::generate::{self, FocParams};
use signed_maxcut::kernel::{self, Verdict};
use signed_maxcut::mcwv::{self, WeightedInstance};
use signed_maxcut::oneway::{self, reduce_with};
use signed_maxcut::{oracle, Assignment, BalanceWitness, Side, Sign, SignedGraph, Vertex};

fn sign(b: bool) -> Sign {
    if b {
        Sign::Positive
    } else {
        Sign::Negative
    }
}

/// Connected signed graph: a random spanning tree plus random extra edges.
fn connected(max_n: usize) -> impl Strategy<Value = SignedGraph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        (
            proptest::collection::vec(any::<prop::sample::Index>(), n.saturating_sub(1)),
            proptest::collection::vec(prop::bool::weighted(0.35), pairs),
            proptest::collection::vec(any::<bool>(), pairs),
        )
            .prop_map(move |(parents, extra, signs)| {
                let mut chosen = BTreeMap::new();
                for (i, p) in parents.iter().enumerate() {
                    let v = i as Vertex + 2;
                    let u = p.index(i + 1) as Vertex + 1;
                    chosen.insert((u, v), ());
                }
                let mut idx = 0;
                for u in 1..=n as Vertex {
                    for v in u + 1..=n as Vertex {
                        if extra[idx] {
                            chosen.insert((u, v), ());
                        }
                        idx += 1;
                    }
                }
                let edges: Vec<_> = chosen
                    .keys()
                    .map(|&(u, v)| {
                        let i =
                            ((u - 1) as usize) * (2 * n - u as usize) / 2 + (v - u - 1) as usize;
                        (u, v, sign(signs[i]))
                    })
                    .collect();
                SignedGraph::build(n, &edges).unwrap()
            })
    })
}

fn subset(g: &SignedGraph, bits: &[bool]) -> Vec<Vertex> {
    g.vertices()
        .filter(|&v| bits[v as usize % bits.len()])
        .collect()
}

fn assignment(g: &SignedGraph, bits: &[bool]) -> Assignment {
    g.vertices()
        .map(|v| {
            (
                v,
                if bits[v as usize % bits.len()] {
                    Side::Two
                } else {
                    Side::One
                },
            )
        })
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn switching_preserves_beta_and_ptq(g in connected(8), bits in proptest::collection::vec(any::<bool>(), 8)) {
        let h = g.switch(&subset(&g, &bits)).unwrap();
        prop_assert_eq!(oracle::beta(&g).unwrap(), oracle::beta(&h).unwrap());
        prop_assert_eq!(g.ptq(), h.ptq());
    }

    #[test]
    fn switching_moves_consistency_with_the_assignment(
        g in connected(8),
        w in proptest::collection::vec(any::<bool>(), 8),
        a in proptest::collection::vec(any::<bool>(), 8),
    ) {
        let flip = subset(&g, &w);
        let h = g.switch(&flip).unwrap();
        let a = assignment(&g, &a);
        prop_assert_eq!(g.consistent_edges(&a).unwrap(), h.consistent_edges(&a.flipped(&flip)).unwrap());
    }

    #[test]
    fn balance_witness_is_checkable(g in connected(9)) {
        match g.is_balanced() {
            BalanceWitness::Balanced { switch_set } => {
                let h = g.switch(&switch_set).unwrap();
                prop_assert!(h.edges().all(|e| e.2 == Sign::Positive));
                prop_assert_eq!(oracle::beta(&g).unwrap(), g.edge_count());
            }
            BalanceWitness::Unbalanced { cycle } => {
                prop_assert!(cycle.len() >= 3);
                let mut negatives = 0;
                for i in 0..cycle.len() {
                    let s = g.sign(cycle[i], cycle[(i + 1) % cycle.len()]);
                    prop_assert!(s.is_some());
                    negatives += usize::from(s == Some(Sign::Negative));
                }
                prop_assert_eq!(negatives % 2, 1);
                prop_assert!(oracle::beta(&g).unwrap() < g.edge_count());
            }
        }
    }

    #[test]
    fn dual_is_an_involution(g in connected(8)) {
        let d = g.dual();
        prop_assert_eq!(&d.dual(), &g);
        prop_assert_eq!(d.positive_edge_count(), g.negative_edge_count());
        prop_assert_eq!(d.ptq(), g.ptq());
    }

    #[test]
    fn build_ignores_edge_order(g in connected(8), seed in any::<u64>()) {
        let mut edges: Vec<_> = g.edges().map(|(u, v, s)| if seed & 1 == 0 { (u, v, s) } else { (v, u, s) }).collect();
        let len = edges.len().max(1);
        edges.rotate_left(seed as usize % len);
        edges.reverse();
        prop_assert_eq!(SignedGraph::build(g.vertex_count(), &edges).unwrap(), g);
    }

    #[test]
    fn quarter_bound_never_exceeds_four_beta(g in connected(8)) {
        prop_assert!(4 * oracle::beta(&g).unwrap() as i64 >= g.ptq());
    }

    #[test]
    fn mcwv_matches_oracle_and_shifts(
        params in (1usize..=4, 1usize..=4, any::<u64>()),
        w in proptest::collection::vec((0u64..=10, 0u64..=10), 20),
        shift in 0u64..=5,
    ) {
        let (cliques, size, seed) = params;
        let g = generate::foc(&FocParams { cliques, size, s_count: 0, neg: 1.0, seed }).unwrap().graph;
        prop_assume!(g.vertex_count() <= 16);
        let w1: BTreeMap<_, _> = g.vertices().map(|v| (v, w[v as usize % 20].0)).collect();
        let w2: BTreeMap<_, _> = g.vertices().map(|v| (v, w[v as usize % 20].1)).collect();
        let inst = WeightedInstance::new(g.clone(), w1.clone(), w2.clone()).unwrap();
        let (value, a) = mcwv::solve(&inst).unwrap();
        prop_assert_eq!(value, oracle::mcwv(&inst).unwrap());
        prop_assert_eq!(inst.evaluate(&a).unwrap(), value);

        let up = |m: &BTreeMap<Vertex, u64>| m.iter().map(|(&v, &x)| (v, x + shift)).collect();
        let shifted = WeightedInstance::new(g.clone(), up(&w1), up(&w2)).unwrap();
        let (value2, _) = mcwv::solve(&shifted).unwrap();
        prop_assert_eq!(value2, value + shift * g.vertex_count() as u64);
    }

    #[test]
    fn one_way_rules_are_safe(g in connected(6), k in 0i64..=6) {
        for app in oneway::all_applications(&g) {
            prop_assert!(app.holds(&g));
            let (g2, k2) = oneway::apply(&g, k, &app).unwrap();
            prop_assert!(g2.is_connected());
            if oracle::decide(&g2, k2).unwrap() {
                prop_assert!(oracle::decide(&g, k).unwrap(), "{} at k={}", app, k);
            }
        }
    }

    #[test]
    fn two_way_rules_preserve_the_answer(g in connected(7), k in -1i64..=6) {
        let s = reduce_with(&g, 0, false).unwrap().s;
        let rest: Vec<Vertex> = g.vertices().filter(|v| !s.contains(v)).collect();
        let h = g.switch(&switch_to_all_negative(&g, &rest).unwrap()).unwrap();
        let want = oracle::decide(&h, k).unwrap();
        for rule in 8..=11 {
            for app in kernel::applications(&h, &s, rule) {
                let (h2, k2) = kernel::apply_two_way(&h, k, &s, &app).unwrap();
                prop_assert!(h2.is_connected());
                prop_assert_eq!(oracle::decide(&h2, k2).unwrap(), want, "{}", app);
            }
        }
    }

    #[test]
    fn instance_round_trip(g in connected(10), k in proptest::option::of(-5i64..=20)) {
        let (text, ids) = serialize(&g, k, &["seeded".to_string()]);
        prop_assert_eq!(ids.len(), g.vertex_count());
        let back = parse_instance(&text).unwrap();
        prop_assert_eq!(back.k, k);
        prop_assert_eq!(back.graph, g);
    }

    #[test]
    fn trace_round_trip(rule in 1u8..=11, deleted in proptest::collection::vec(1u32..100, 0..4),
                        other in proptest::collection::vec(1u32..100, 0..4), kdelta in -3i64..=3) {
        let line = if rule <= 7 {
            TraceLine::OneWay { rule, deleted, marked: other, kdelta }
        } else {
            TraceLine::TwoWay { rule, deleted, added: other, kdelta }
        };
        prop_assert_eq!(line.to_string().parse::<TraceLine>().unwrap(), line);
    }

    #[test]
    fn solver_matches_oracle(g in connected(7), k in -2i64..=10) {
        let opts = SolveOptions { exact_beta: true, ..Default::default() };
        let r = fpt::solve_with(&g, k, &opts).unwrap();
        prop_assert_eq!(r.answer, oracle::decide(&g, k).unwrap());
        prop_assert_eq!(r.beta, Some(oracle::beta(&g).unwrap()));
        prop_assert_eq!(fpt::solve(&g, k).unwrap().answer, r.answer);
    }

    #[test]
    fn kernel_preserves_the_answer(g in connected(8), k in 1i64..=6) {
        let want = oracle::decide(&g, k).unwrap();
        match kernel::kernelize(&g, k).unwrap().verdict {
            Verdict::Yes(_) => prop_assert!(want),
            Verdict::Kernel(kern) => {
                prop_assert!(kern.graph.is_connected());
                prop_assert!(kern.graph.vertex_count() as i64 <= kern.bound);
                prop_assert_eq!(oracle::decide(&kern.graph, kern.k).unwrap(), want);
            }
        }
    }

    #[test]
    fn planted_kernels_stay_equivalent(
        cliques in 1usize..=4, size in 2usize..=6, s_count in 0usize..=2,
        seed in any::<u64>(), k in 1i64..=4,
    ) {
        let g = generate::foc(&FocParams { cliques, size, s_count, neg: 0.6, seed }).unwrap().graph;
        prop_assume!(g.vertex_count() <= 20);
        let want = oracle::decide(&g, k).unwrap();
        prop_assert_eq!(fpt::solve(&g, k).unwrap().answer, want);
        match kernel::kernelize(&g, k).unwrap().verdict {
            Verdict::Yes(_) => prop_assert!(want),
            Verdict::Kernel(kern) => prop_assert_eq!(oracle::decide(&kern.graph, kern.k).unwrap(), want),
        }
    }
}

#[test]
fn three_large_cliques_with_two_marked_vertices() {
    // Three all-negative K30 joined through two attachment vertices.
    let mut edges = Vec::new();
    for c in 0..3u32 {
        let base = 30 * c;
        for u in 1..=30 {
            for v in u + 1..=30 {
                edges.push((base + u, base + v, Sign::Negative));
            }
        }
        edges.push((base + 1, 91, Sign::Positive));
        edges.push((base + 2, 92, Sign::Negative));
    }
    edges.push((91, 92, Sign::Negative));
    let g = SignedGraph::build(92, &edges).unwrap();
    let r = fpt::solve_with(
        &g,
        2,
        &SolveOptions {
            exact_beta: true,
            ..Default::default()
        },
    )
    .unwrap();
    let beta = r.beta.unwrap();
    assert_eq!(
        g.consistent_edges(r.witness.as_ref().unwrap()).unwrap(),
        beta
    );
    assert_eq!(r.answer, 4 * beta as i64 >= g.ptq() + 2);

    // every clique is cut evenly and every attachment edge can be kept
    assert_eq!(beta, 3 * 15 * 15 + 7);
    let out = kernel::kernelize(&g, 2).unwrap();
    match out.verdict {
        Verdict::Yes(_) => assert!(r.answer),
        Verdict::Kernel(kern) => {
            assert!(kern.graph.vertex_count() < g.vertex_count());
            let kb = fpt::solve(&kern.graph, kern.k).unwrap();
            assert_eq!(kb.answer, r.answer);
        }
    }
}
