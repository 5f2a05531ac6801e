//! Simulator semantics: locality of knowledge, delivery, forwarding past
//! finished nodes, determinism.

mod common;

use chordal_local::sim::{run, run_with, Ctx, NodeProgram, RunOptions, Step};
use chordal_local::{gen, Graph, NodeId};
use common::*;
use proptest::prelude::*;
use std::collections::hash_map::DefaultHasher;
use std::collections::BTreeSet;
use std::hash::{Hash, Hasher};

/// Folds everything a node can observe into its state every round: its
/// inbox, and the distance and published value of every node it can see.
/// Answers with the state in round `stop`.
struct Mixer {
    stop: u32,
}

fn mix(x: impl Hash) -> u64 {
    let mut h = DefaultHasher::new();
    x.hash(&mut h);
    h.finish()
}

impl NodeProgram for Mixer {
    type State = u64;
    type Msg = u64;
    type Public = u64;
    type Output = u64;

    fn init(&self, id: NodeId, neighbors: &[NodeId]) -> u64 {
        mix((id, neighbors))
    }

    fn step(&self, s: &mut u64, ctx: &Ctx<'_, Self>) -> Step<u64, u64> {
        let seen: Vec<(NodeId, u32, Option<u64>)> = ctx.view.ball(ctx.round).into_iter().map(|(u, d)| (u, d, ctx.view.public(u).copied())).collect();
        let inbox: Vec<(NodeId, u64)> = ctx.inbox.iter().map(|(&u, &m)| (u, m)).collect();
        *s = mix((*s, ctx.round, seen, inbox, ctx.view.subgraph(ctx.round)));
        if ctx.round == self.stop {
            return Step::output(*s);
        }
        Step { outbox: ctx.neighbors.iter().map(|&u| (u, *s)).collect(), output: None, wake: None }
    }

    fn publish(&self, s: &u64) -> u64 {
        *s
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn knowledge_stays_within_the_ball(g in chordal(2..=80, 1..=5), stop in 0u32..=4, pick: prop::sample::Index) {
        let nodes: Vec<NodeId> = g.nodes().collect();
        let v = nodes[pick.index(nodes.len())];
        // Agrees with `g` on everything within `stop` hops of `v`; beyond
        // that, adjacency is cut off.
        let near = g.induced(g.bfs(v, stop as usize + 1).keys());
        let whole = run(&g, &Mixer { stop }, stop + 1).unwrap();
        let cut = run(&near, &Mixer { stop }, stop + 1).unwrap();
        prop_assert_eq!(whole.outputs[&v], cut.outputs[&v]);
        prop_assert_eq!(whole.rounds_elapsed, stop);
    }

    #[test]
    fn runs_are_deterministic(g in chordal(1..=60, 1..=5), stop in 0u32..=5) {
        let p = Mixer { stop };
        let a = run(&g, &p, 10).unwrap();
        let b = run_with(&g, &p, RunOptions { round_cap: 10, parallel: true }).unwrap();
        prop_assert_eq!(a.to_text(true), b.to_text(true));
        prop_assert_eq!(&a, &b);
    }
}

#[test]
fn knowledge_grows_past_the_ball() {
    // Sanity check of the test above: with a longer run the cut shows.
    let g = gen::gen_path(12);
    let near = g.induced(g.bfs(1, 3).keys());
    let whole = run(&g, &Mixer { stop: 5 }, 6).unwrap();
    let cut = run(&near, &Mixer { stop: 5 }, 6).unwrap();
    assert_ne!(whole.outputs[&1], cut.outputs[&1]);
}

/// Sends `(round, id)` to every neighbor and checks that each round's inbox
/// holds exactly one message from each neighbor, sent the round before.
struct Delivery;

impl NodeProgram for Delivery {
    type State = bool;
    type Msg = (u32, NodeId);
    type Public = ();
    type Output = bool;

    fn init(&self, _: NodeId, _: &[NodeId]) -> bool {
        true
    }

    fn step(&self, ok: &mut bool, ctx: &Ctx<'_, Self>) -> Step<(u32, NodeId), bool> {
        if ctx.round > 0 {
            let from: BTreeSet<NodeId> = ctx.inbox.keys().copied().collect();
            *ok &= from == ctx.neighbors.iter().copied().collect::<BTreeSet<_>>();
            *ok &= ctx.inbox.iter().all(|(&u, &(r, id))| r + 1 == ctx.round && id == u);
        }
        if ctx.round == 5 {
            return Step::output(*ok);
        }
        Step { outbox: ctx.neighbors.iter().map(|&u| (u, (ctx.round, ctx.id))).collect(), output: None, wake: None }
    }
}

#[test]
fn messages_arrive_once_next_round() {
    for g in [gen::gen_chordal(60, 3, 5), gen::gen_spider(4, 5), Graph::from_edges(&[(1, 2)])] {
        let t = run(&g, &Delivery, 10).unwrap();
        assert!(t.outputs.values().all(|&ok| ok));
        assert_eq!(t.rounds_elapsed, 5);
    }
}

/// Node 1 publishes a value; every other node except the last answers at
/// once and sleeps. The last one reads node 1's value across them.
struct Relay {
    last: NodeId,
}

impl NodeProgram for Relay {
    type State = NodeId;
    type Msg = ();
    type Public = u32;
    type Output = Option<u32>;

    fn init(&self, id: NodeId, _: &[NodeId]) -> NodeId {
        id
    }

    fn step(&self, id: &mut NodeId, ctx: &Ctx<'_, Self>) -> Step<(), Option<u32>> {
        if *id != self.last {
            return Step::output(None).sleep(u32::MAX);
        }
        match ctx.view.public_at(1, 0) {
            Some(&v) => Step::output(Some(v)),
            None => Step::idle(),
        }
    }

    fn publish(&self, id: &NodeId) -> u32 {
        if *id == 1 {
            777
        } else {
            0
        }
    }
}

#[test]
fn finished_nodes_keep_forwarding() {
    let n = 40;
    let t = run(&gen::gen_path(n), &Relay { last: n as NodeId }, 100).unwrap();
    assert_eq!(t.outputs[&(n as NodeId)], Some(777));
    // Published after round 0, it is `n - 1` hops away.
    assert_eq!(t.output_round[&(n as NodeId)], n as u32 - 1);
    assert!(t.output_round.iter().filter(|(&v, _)| v != n as NodeId).all(|(_, &r)| r == 0));
}
