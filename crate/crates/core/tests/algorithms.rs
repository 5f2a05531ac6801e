//! Coloring and independent set algorithms checked against oracles on
//! random instances.

mod common;

use chordal_local::chordal::{alpha_oracle, omega_oracle};
use chordal_local::forest::{classify_paths, clique_forest, path_diameter};
use chordal_local::graph::{verify_coloring, verify_is};
use chordal_local::interval::*;
use chordal_local::mis::{self, absorption, mis_distributed_with, mis_peel, MisParams, MisProgram, Route};
use chordal_local::mvc::{self, color_layers, correct_colors, layer_jobs, mvc_distributed_with, mvc_pipeline, mvc_round_cap, prune_layers};
use chordal_local::sim::RunOptions;
use chordal_local::NodeId;
use common::*;
use proptest::prelude::*;
use std::collections::BTreeSet;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(80))]

    #[test]
    fn interval_coloring_within_budget(g in interval(1..=250), k in 1usize..=4) {
        let c = color_interval(&g, k).unwrap();
        let r = verify_coloring(&g, &c).unwrap();
        prop_assert!(r.legal);
        prop_assert!(r.palette <= interval_budget(omega_oracle(&g).unwrap(), k) as usize);
    }

    #[test]
    fn interval_independent_set_ratio(g in interval(1..=250), eps in prop::sample::select(vec![0.1, 0.25, 0.5, 0.9])) {
        let s = mis_interval(&g, eps).unwrap();
        prop_assert!(verify_is(&g, &s).unwrap());
        prop_assert!((1.0 + eps) * s.len() as f64 >= alpha_oracle(&g).unwrap().len() as f64);
    }

    #[test]
    fn dominated_removal_keeps_alpha(g in interval(1..=120)) {
        let h = remove_dominated(&g);
        prop_assert_eq!(alpha_oracle(&h).unwrap().len(), alpha_oracle(&g).unwrap().len());
        if g.n() <= 14 {
            prop_assert_eq!(max_independent(&h), max_independent(&g));
        }
        // One pass drops exactly the nodes whose closed neighborhood strictly
        // contains a neighbor's, and leaves a claw-free interval graph.
        for v in g.nodes() {
            let nv = g.closed_nbhd(v);
            let dominating = g.neighbors(v).any(|u| {
                let nu = g.closed_nbhd(u);
                nu.is_subset(&nv) && nu != nv
            });
            prop_assert_eq!(h.contains(v), !dominating, "node {}", v);
        }
        prop_assert!(clique_path(&h).is_ok());
        for c in h.nodes() {
            let nb: Vec<NodeId> = h.neighbors(c).collect();
            for (i, &a) in nb.iter().enumerate() {
                for (j, &b) in nb.iter().enumerate().skip(i + 1) {
                    for &x in &nb[j + 1..] {
                        prop_assert!(h.has_edge(a, b) || h.has_edge(a, x) || h.has_edge(b, x), "claw at {}", c);
                    }
                }
            }
        }
    }

    #[test]
    fn distance_independent_sets_pack_and_cover(g in interval(1..=150), k in 1usize..=5) {
        let h = remove_dominated(&g);
        let s = distance_k_mis(&h, k).unwrap();
        let mut covered = BTreeSet::new();
        for &v in &s {
            let d = distances(&h, v);
            prop_assert!(s.iter().all(|u| *u == v || d.get(u).is_none_or(|&x| x > k)));
            covered.extend(d.into_iter().filter(|&(_, x)| x <= k).map(|(u, _)| u));
        }
        prop_assert_eq!(covered.len(), h.n());
    }

    #[test]
    fn anchors_are_close(g in interval(50..=300), k in 2usize..=6) {
        let h = remove_dominated(&g);
        let ap = anchor_pairs(&h, k).unwrap();
        for ((a, b), inner) in &ap.between {
            let (da, db) = (distances(&h, *a), distances(&h, *b));
            prop_assert!(da[b] > k && da[b] <= 2 * k + 1, "anchors {} {} at distance {}", a, b, da[b]);
            for w in inner {
                prop_assert!(da[w] > 1 && db[w] > 1);
            }
        }
    }

    #[test]
    fn interval_local_runs_match(g in interval(1..=60), k in 1usize..=3) {
        prop_assert_eq!(color_interval_distributed(&g, k, None).unwrap().0, color_interval(&g, k).unwrap());
        prop_assert_eq!(mis_interval_distributed(&g, 0.5, None).unwrap().0, mis_interval(&g, 0.5).unwrap());
        let h = remove_dominated(&g);
        prop_assert_eq!(distance_k_mis_distributed(&h, k, None).unwrap().0, distance_k_mis(&h, k).unwrap());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn coloring_invariants(g in chordal(1..=150, 2..=8), k in 2usize..=4) {
        let out = mvc_pipeline(&g, k).unwrap();
        mvc::check_invariants(&g, &out).map_err(|e| TestCaseError::fail(e.to_string()))?;
        let l = &out.layering;
        prop_assert_eq!(l.layer.len(), g.n());
        prop_assert_eq!((1..=l.count()).map(|i| l.nodes_in(i).len()).sum::<usize>(), g.n());
        let branch: Vec<usize> = l.forests.iter().map(|f| (0..f.len()).filter(|&c| f.degree(c) >= 3).count()).collect();
        for w in branch.windows(2) {
            prop_assert!(w[0] == 0 || 2 * w[1] < w[0], "branch cliques {:?}", branch);
        }
        for i in 1..=l.count() {
            for job in layer_jobs(&g, l, i) {
                // Layers below `i` were peeled earlier and are not part of
                // the graph this job sees.
                for &v in &job.w {
                    for u in g.neighbors(v).filter(|u| l.layer[u] >= i) {
                        prop_assert!(job.w.contains(&u) || l.layer[&u] > i, "{}-{} stays in layer {}", v, u, i);
                    }
                }
            }
        }
    }

    #[test]
    fn corrections_stay_near_the_border(g in chordal(1..=150, 2..=8), k in 2usize..=4) {
        let l = prune_layers(&g, k).unwrap();
        let tentative = color_layers(&l).unwrap();
        let fin = correct_colors(&g, &l, &tentative).unwrap();
        for i in 1..=l.count() {
            for job in layer_jobs(&g, &l, i) {
                let near = g.multi_bfs(job.w_prime.iter().copied(), k + 3);
                for v in job.w.iter().filter(|v| fin[v] != tentative[v]) {
                    prop_assert!(near.contains_key(v), "{} recolored far from the border", v);
                }
            }
        }
    }

    #[test]
    fn coloring_local_matches_central(g in chordal(1..=80, 2..=6), k in 2usize..=3) {
        let (c, _) = mvc_distributed_with(&g, k, RunOptions { round_cap: mvc_round_cap(k), parallel: true }).unwrap();
        prop_assert_eq!(c, mvc_pipeline(&g, k).unwrap().coloring);
    }

    #[test]
    fn independent_set_invariants(g in chordal(1..=200, 2..=8), eps in prop::sample::select(vec![0.4, 0.25])) {
        let p = MisParams::new(eps).unwrap();
        let st = mis_peel(&g, &p, true).unwrap();
        prop_assert_eq!(st.iterations.len(), p.k);
        mis::check_invariants(&g, &st).map_err(|e| TestCaseError::fail(e.to_string()))?;
    }

    #[test]
    fn peeling_selects_long_and_pendant_paths(g in chordal(1..=200, 2..=6), d in 2usize..=4, k in 2usize..=4) {
        let p = MisParams { eps: 0.4, d, k };
        let st = mis_peel(&g, &p, true).unwrap();
        prop_assert_eq!(st.iterations.len(), k);
        prop_assert!(verify_is(&g, &st.set).unwrap());
        for (i, it) in st.iterations.iter().enumerate() {
            prop_assert!(it.forest.same_shape(&clique_forest(&g.induced(&it.residual)).unwrap()));
            if i + 1 < k {
                let want: Vec<_> = classify_paths(&it.forest).into_iter().filter(|q| q.is_pendant() || path_diameter(&it.forest, q) >= 2 * d + 3).collect();
                prop_assert_eq!(&it.paths, &want);
            }
            let gi = g.induced(&it.residual);
            for c in it.components.iter().filter(|c| c.route == Route::Absorbing) {
                prop_assert!(i + 1 < k);
                prop_assert_eq!(absorption(&gi, &c.set, &it.blocked).unwrap(), c.set.len());
            }
        }
    }

    #[test]
    fn independent_set_local_matches_central(g in chordal(1..=80, 2..=6), d in 2usize..=4) {
        let p = MisParams { eps: 0.4, d, k: 3 };
        let cap = MisProgram::new(p).unwrap().finish() + 1;
        let (s, t) = mis_distributed_with(&g, &p, RunOptions { round_cap: cap, parallel: true }).unwrap();
        prop_assert_eq!(s, mis_peel(&g, &p, false).unwrap().set);
        prop_assert_eq!(t.rounds_elapsed, cap - 1);
    }
}
