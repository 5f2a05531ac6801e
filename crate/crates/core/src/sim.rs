//! Synchronous LOCAL model simulator.
//!
//! Every node runs the same [`NodeProgram`]. Round 0 is local computation
//! before any communication; a message sent in round `t` is in the
//! recipient's inbox in round `t + 1`. The run ends in the first round after
//! which every node has an output. A node may ask to sleep until a later
//! round; it is not stepped before then unless a message reaches it.
//!
//! Besides explicit messages, every node keeps flooding everything it knows,
//! including after it has produced its output. The engine does not ship that
//! traffic as messages; it answers the equivalent queries through [`View`]:
//! in round `t` a node at distance `d` from `u` knows `u`'s adjacency when
//! `d <= t` and `u`'s published variables as they stood after round `t - d`.
//! A program therefore cannot observe anything beyond its radius-`t` ball.

use crate::error::Error;
use crate::graph::{Dense, Graph, NodeId};
use rayon::prelude::*;
use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};
use std::fmt::{self, Debug, Write};
use std::sync::{Arc, Mutex, OnceLock};

pub struct Step<M, O> {
    /// Messages to neighbors, delivered next round.
    pub outbox: Vec<(NodeId, M)>,
    /// Final output; once given it must not change.
    pub output: Option<O>,
    /// Skip rounds until this one unless a message arrives first. `None`
    /// means the next round.
    pub wake: Option<u32>,
}

impl<M, O> Step<M, O> {
    pub fn idle() -> Self {
        Step { outbox: Vec::new(), output: None, wake: None }
    }

    pub fn output(o: O) -> Self {
        Step { outbox: Vec::new(), output: Some(o), wake: None }
    }

    pub fn sleep(mut self, until: u32) -> Self {
        self.wake = Some(until);
        self
    }
}

pub trait NodeProgram: Sync {
    type State: Send;
    type Msg: Clone + Send + Sync + Debug;
    /// Variables a node publishes to the background flood.
    type Public: Clone + Send + Sync + PartialEq + Default;
    type Output: Clone + Send + Sync + PartialEq + Debug;

    fn init(&self, id: NodeId, neighbors: &[NodeId]) -> Self::State;

    fn step(&self, state: &mut Self::State, ctx: &Ctx<'_, Self>) -> Step<Self::Msg, Self::Output>;

    fn publish(&self, _state: &Self::State) -> Self::Public {
        Self::Public::default()
    }
}

/// Everything a node may look at in one round.
pub struct Ctx<'a, P: NodeProgram + ?Sized> {
    pub id: NodeId,
    pub round: u32,
    pub neighbors: &'a [NodeId],
    pub inbox: &'a BTreeMap<NodeId, P::Msg>,
    pub view: View<'a, P::Public>,
}

struct Net<V> {
    dense: Dense,
    /// Row-major hop distances, `u16::MAX` when unreachable.
    dist: Vec<u16>,
    /// Per node, `(round, value)` whenever the published value changed.
    history: Vec<Vec<(u32, V)>>,
    /// Value read before a node's first publication.
    initial: V,
}

impl<V> Net<V> {
    fn d(&self, a: usize, b: usize) -> u16 {
        self.dist[a * self.dense.len() + b]
    }
}

/// Background knowledge of one node in one round.
pub struct View<'a, V> {
    net: &'a Net<V>,
    me: usize,
    round: u32,
}

impl<'a, V> View<'a, V> {
    /// Hop distance to `u` when `u` is within the current round's horizon.
    pub fn dist(&self, u: NodeId) -> Option<u32> {
        let b = self.net.dense.index(u)?;
        let d = self.net.d(self.me, b) as u32;
        (d <= self.round).then_some(d)
    }

    /// Nodes within distance `r`, which must not exceed the round number.
    pub fn ball(&self, r: u32) -> BTreeMap<NodeId, u32> {
        assert!(r <= self.round, "radius {r} is beyond round {}", self.round);
        let mut out = BTreeMap::new();
        let mut q = VecDeque::from([(self.me, 0u32)]);
        let mut seen = BTreeSet::from([self.me]);
        while let Some((x, d)) = q.pop_front() {
            out.insert(self.net.dense.ids[x], d);
            if d < r {
                for &y in &self.net.dense.adj[x] {
                    if seen.insert(y) {
                        q.push_back((y, d + 1));
                    }
                }
            }
        }
        out
    }

    /// Smallest id of this node's component when the whole component lies
    /// within distance `r - 1`, as the radius-`r` ball reveals. `None` when
    /// the ball has a node at distance `r`.
    pub fn whole_component(&self, r: u32) -> Option<NodeId> {
        assert!(r <= self.round, "radius {r} is beyond round {}", self.round);
        let mut first = None;
        for b in 0..self.net.dense.len() {
            match self.net.d(self.me, b) {
                u16::MAX => continue,
                d if d as u32 >= r => return None,
                _ => {
                    first.get_or_insert(self.net.dense.ids[b]);
                }
            }
        }
        first
    }

    /// Subgraph induced by the radius-`r` ball.
    pub fn subgraph(&self, r: u32) -> Graph {
        let ball = self.ball(r);
        let mut g = Graph::new();
        for &v in ball.keys() {
            g.add_node(v);
            let x = self.net.dense.index(v).unwrap();
            for &y in &self.net.dense.adj[x] {
                let u = self.net.dense.ids[y];
                if ball.contains_key(&u) {
                    g.add_edge(v, u);
                }
            }
        }
        g
    }

    /// Published variables of `u` as they stood after round `at`, or `None`
    /// when that information has not reached this node yet. Rounds before
    /// the first step read the default value.
    pub fn public_at(&self, u: NodeId, at: u32) -> Option<&'a V> {
        let d = self.dist(u)?;
        if at + d.max(1) > self.round {
            return None;
        }
        let h = &self.net.history[self.net.dense.index(u)?];
        let i = h.partition_point(|(r, _)| *r <= at);
        Some(if i == 0 { &self.net.initial } else { &h[i - 1].1 })
    }

    /// Freshest published variables of `u` visible now.
    pub fn public(&self, u: NodeId) -> Option<&'a V> {
        let d = self.dist(u)?.max(1);
        self.round.checked_sub(d).and_then(|at| self.public_at(u, at))
    }
}

/// Analysis shared by the nodes of a component.
///
/// Views that cover a whole component are identical for all its nodes, so a
/// computation over such a view only needs to run once.
type Cells<T> = HashMap<(u32, NodeId), Arc<OnceLock<Arc<T>>>>;

pub struct Shared<T> {
    cells: Mutex<Cells<T>>,
}

impl<T> Default for Shared<T> {
    fn default() -> Self {
        Shared { cells: Mutex::default() }
    }
}

impl<T> Shared<T> {
    /// Runs `make` over the radius-`r` view, once per `tag` and component
    /// when the view is complete. `make` learns whether it is.
    pub fn get<V>(&self, view: &View<'_, V>, r: u32, tag: u32, make: impl FnOnce(bool) -> T) -> Arc<T> {
        match view.whole_component(r) {
            Some(first) => {
                let cell = self.cells.lock().unwrap().entry((tag, first)).or_default().clone();
                cell.get_or_init(|| Arc::new(make(true))).clone()
            }
            None => Arc::new(make(false)),
        }
    }
}

/// Program in which every node waits `radius` rounds and then answers from
/// the subgraph its view reveals. `rule` maps a ball to answers for its
/// nodes; only the center's answer is used.
type BallRule<T> = Box<dyn Fn(&Graph) -> BTreeMap<NodeId, T> + Send + Sync>;

pub struct BallProgram<T> {
    radius: u32,
    rule: BallRule<T>,
    shared: Shared<BTreeMap<NodeId, T>>,
}

impl<T> BallProgram<T> {
    pub fn new(radius: u32, rule: impl Fn(&Graph) -> BTreeMap<NodeId, T> + Send + Sync + 'static) -> Self {
        BallProgram { radius, rule: Box::new(rule), shared: Shared::default() }
    }
}

impl<T: Clone + Send + Sync + PartialEq + Debug> NodeProgram for BallProgram<T> {
    type State = NodeId;
    type Msg = ();
    type Public = ();
    type Output = T;

    fn init(&self, id: NodeId, _: &[NodeId]) -> NodeId {
        id
    }

    fn step(&self, id: &mut NodeId, ctx: &Ctx<'_, Self>) -> Step<(), T> {
        if ctx.round < self.radius {
            return Step::idle().sleep(self.radius);
        }
        let answers = self.shared.get(&ctx.view, self.radius, 0, |_| (self.rule)(&ctx.view.subgraph(self.radius)));
        Step::output(answers[id].clone()).sleep(u32::MAX)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RoundRecord {
    pub round: u32,
    pub messages: usize,
    pub outputs: usize,
}

#[derive(Debug, Clone, PartialEq)]
pub struct RoundTranscript<O> {
    pub rounds_elapsed: u32,
    pub outputs: BTreeMap<NodeId, O>,
    /// Round in which each node produced its output.
    pub output_round: BTreeMap<NodeId, u32>,
    pub message_log: Vec<RoundRecord>,
}

impl<O: Debug> RoundTranscript<O> {
    /// Plain text export: one line per round with activity, then outputs.
    pub fn to_text(&self, verbose: bool) -> String {
        let mut s = format!("rounds {}\n", self.rounds_elapsed);
        if verbose {
            for r in self.message_log.iter().filter(|r| r.messages + r.outputs > 0) {
                writeln!(s, "round {} messages {} outputs {}", r.round, r.messages, r.outputs).unwrap();
            }
        }
        for (v, o) in &self.outputs {
            writeln!(s, "output {v} {o:?}").unwrap();
        }
        s
    }
}

/// True when every node of the run produced an output.
pub fn quiescence_detect<O>(g: &Graph, t: &RoundTranscript<O>) -> bool {
    g.nodes().all(|v| t.outputs.contains_key(&v))
}

#[derive(Debug, Clone, PartialEq)]
pub struct CapExceeded<O> {
    pub cap: u32,
    pub partial: RoundTranscript<O>,
}

impl<O> From<CapExceeded<O>> for Error {
    fn from(e: CapExceeded<O>) -> Self {
        Error::RoundCapExceeded { cap: e.cap }
    }
}

impl<O> fmt::Display for CapExceeded<O> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "round cap {} exceeded", self.cap)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RunOptions {
    pub round_cap: u32,
    pub parallel: bool,
}

impl RunOptions {
    pub fn new(round_cap: u32) -> Self {
        RunOptions { round_cap, parallel: false }
    }
}

pub type RunResult<O> = std::result::Result<RoundTranscript<O>, CapExceeded<O>>;

/// Runs `program` on every node of `g` until all nodes have an output.
pub fn run<P: NodeProgram>(g: &Graph, program: &P, round_cap: u32) -> RunResult<P::Output> {
    run_with(g, program, RunOptions::new(round_cap))
}

pub fn run_with<P: NodeProgram>(g: &Graph, program: &P, opts: RunOptions) -> RunResult<P::Output> {
    let dense = Dense::new(g);
    let n = dense.len();
    let rows: Vec<Vec<u16>> = (0..n).into_par_iter().map(|s| dense.bfs(s).into_iter().map(|d| d.min(u16::MAX as usize) as u16).collect()).collect();
    let mut net = Net { dist: rows.concat(), history: vec![Vec::new(); n], initial: P::Public::default(), dense };
    let nbrs: Vec<Vec<NodeId>> = net.dense.adj.iter().map(|a| a.iter().map(|&y| net.dense.ids[y]).collect()).collect();
    let mut states: Vec<P::State> = (0..n).map(|i| program.init(net.dense.ids[i], &nbrs[i])).collect();
    let mut inbox: Vec<BTreeMap<NodeId, P::Msg>> = vec![BTreeMap::new(); n];
    let mut outputs: Vec<Option<P::Output>> = vec![None; n];
    let mut t = RoundTranscript { rounds_elapsed: 0, outputs: BTreeMap::new(), output_round: BTreeMap::new(), message_log: Vec::new() };
    let mut missing = n;
    let mut wake = vec![0u32; n];
    let mut round = 0u32;
    while missing > 0 && round <= opts.round_cap {
        let active: Vec<bool> = (0..n).map(|i| wake[i] <= round || !inbox[i].is_empty()).collect();
        let step_one = |(i, state): (usize, &mut P::State)| {
            let ctx = Ctx { id: net.dense.ids[i], round, neighbors: &nbrs[i], inbox: &inbox[i], view: View { net: &net, me: i, round } };
            let step = program.step(state, &ctx);
            (i, step, program.publish(state))
        };
        type Stepped<P> = (usize, Step<<P as NodeProgram>::Msg, <P as NodeProgram>::Output>, <P as NodeProgram>::Public);
        let steps: Vec<Stepped<P>> = if opts.parallel {
            states.par_iter_mut().enumerate().filter(|(i, _)| active[*i]).map(step_one).collect()
        } else {
            states.iter_mut().enumerate().filter(|(i, _)| active[*i]).map(step_one).collect()
        };
        let mut next: Vec<BTreeMap<NodeId, P::Msg>> = vec![BTreeMap::new(); n];
        let mut rec = RoundRecord { round, messages: 0, outputs: 0 };
        for (i, step, public) in steps {
            let me = net.dense.ids[i];
            for (to, msg) in step.outbox {
                let j = net.dense.index(to).filter(|j| net.dense.adj[i].contains(j));
                let j = j.unwrap_or_else(|| panic!("node {me} sent to non-neighbor {to}"));
                next[j].insert(me, msg);
                rec.messages += 1;
            }
            if let Some(o) = step.output {
                match &outputs[i] {
                    None => {
                        outputs[i] = Some(o.clone());
                        t.outputs.insert(me, o);
                        t.output_round.insert(me, round);
                        missing -= 1;
                        rec.outputs += 1;
                    }
                    Some(prev) => assert_eq!(prev, &o, "node {me} changed its output"),
                }
            }
            wake[i] = step.wake.unwrap_or(round + 1).max(round + 1);
            let h = &mut net.history[i];
            let changed = h.last().map_or(public != P::Public::default(), |(_, last)| *last != public);
            if changed {
                h.push((round, public));
            }
        }
        let pending = next.iter().any(|m| !m.is_empty());
        inbox = next;
        t.message_log.push(rec);
        if missing == 0 {
            t.rounds_elapsed = round;
        }
        // Nothing happens until the earliest wake-up when no message is in flight.
        round = if pending { round + 1 } else { wake.iter().copied().min().unwrap_or(u32::MAX).max(round + 1) };
    }
    if missing > 0 {
        t.rounds_elapsed = opts.round_cap;
        return Err(CapExceeded { cap: opts.round_cap, partial: t });
    }
    Ok(t)
}

/// Adjacency list and payload of every node heard of so far.
pub type Known<T> = BTreeMap<NodeId, (Vec<NodeId>, T)>;

/// Explicit flooding of adjacency lists and a payload per node.
///
/// Call [`Gather::outgoing`] every round and feed the inbox to
/// [`Gather::receive`]. After `r` rounds of exchange the node knows the
/// adjacency list and payload of every node within distance `r`, hence the
/// subgraph induced by its radius-`r` ball.
#[derive(Debug, Clone, PartialEq)]
pub struct Gather<T> {
    pub known: Known<T>,
}

impl<T: Clone> Gather<T> {
    pub fn new(id: NodeId, neighbors: &[NodeId], payload: T) -> Self {
        Gather { known: BTreeMap::from([(id, (neighbors.to_vec(), payload))]) }
    }

    pub fn outgoing(&self, neighbors: &[NodeId]) -> Vec<(NodeId, Known<T>)> {
        neighbors.iter().map(|&u| (u, self.known.clone())).collect()
    }

    pub fn receive<'a>(&mut self, inbox: impl IntoIterator<Item = &'a BTreeMap<NodeId, (Vec<NodeId>, T)>>)
    where
        T: 'a,
    {
        for m in inbox {
            for (v, entry) in m {
                self.known.entry(*v).or_insert_with(|| entry.clone());
            }
        }
    }

    /// Node ids seen so far, including neighbors of known nodes.
    pub fn ids(&self) -> BTreeSet<NodeId> {
        self.known.iter().flat_map(|(v, (adj, _))| std::iter::once(*v).chain(adj.iter().copied())).collect()
    }

    /// Subgraph induced by the nodes whose adjacency is known.
    pub fn graph(&self) -> Graph {
        let mut g = Graph::new();
        for (&v, (adj, _)) in &self.known {
            g.add_node(v);
            for u in adj {
                if self.known.contains_key(u) {
                    g.add_edge(v, *u);
                }
            }
        }
        g
    }
}

/// Floods for `radius` rounds, then outputs the ids it has heard of.
pub struct GatherProgram {
    pub radius: u32,
}

pub struct GatherState {
    neighbors: Vec<NodeId>,
    gather: Gather<()>,
}

impl NodeProgram for GatherProgram {
    type State = GatherState;
    type Msg = BTreeMap<NodeId, (Vec<NodeId>, ())>;
    type Public = ();
    type Output = BTreeSet<NodeId>;

    fn init(&self, id: NodeId, neighbors: &[NodeId]) -> GatherState {
        GatherState { neighbors: neighbors.to_vec(), gather: Gather::new(id, neighbors, ()) }
    }

    fn step(&self, s: &mut GatherState, ctx: &Ctx<'_, Self>) -> Step<Self::Msg, Self::Output> {
        s.gather.receive(ctx.inbox.values());
        if ctx.round >= self.radius {
            return Step::output(s.gather.graph().nodes().collect());
        }
        Step { outbox: s.gather.outgoing(&s.neighbors), output: None, wake: None }
    }
}
