//! Independent sets on chordal graphs within `1 + eps` of the maximum.
//!
//! A fixed number of peeling iterations removes binary paths of the clique
//! forest. The nodes of each removed path that are not next to the set built
//! so far split into interval components. Components with fewer than `d`
//! independent nodes are solved exactly, in a way that leaves no gain to a
//! later choice next to them; larger ones use the interval approximation.
//! Whatever survives the last iteration is dropped, and it holds only a
//! small share of any independent set.

use crate::chordal::{alpha_oracle, is_chordal};
use crate::error::{Error, Result};
use crate::forest::{classify_paths, clique_forest, covered_nodes, path_alpha, path_diameter, remove_paths, CliqueForest, ForestPath, SigmaWord};
use crate::graph::{Graph, IndependentSet, NodeId};
use crate::interval::{mis_interval, mis_interval_radius};
use crate::sim::{run_with, Ctx, NodeProgram, RoundTranscript, RunOptions, Shared, Step};
use std::collections::{BTreeMap, BTreeSet};
use std::slice;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MisParams {
    pub eps: f64,
    /// Independence number below which a component is solved exactly.
    pub d: usize,
    /// Number of peeling iterations.
    pub k: usize,
}

impl MisParams {
    /// `d = ceil(64 / eps)` and `k = ceil(log2(d / eps) + 2)` for `eps` in `(0, 1/2)`.
    pub fn new(eps: f64) -> Result<Self> {
        if !(eps > 0.0 && eps < 0.5) {
            return Err(Error::BadEpsilon(eps));
        }
        let d = (64.0 / eps - 1e-9).ceil() as usize;
        let k = ((d as f64 / eps).log2() + 2.0 - 1e-9).ceil() as usize;
        Ok(MisParams { eps, d, k })
    }

    /// Parameter handed to the interval approximation.
    pub fn interval_eps(&self) -> f64 {
        self.eps / 8.0
    }

    /// Internal paths shorter than this survive iterations before the last.
    pub fn long_path(&self) -> usize {
        2 * self.d + 3
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Route {
    /// Exact, and no larger set fits into its closed neighborhood.
    Absorbing,
    /// Exact, in the last iteration.
    Maximum,
    /// Interval approximation.
    Approximate,
}

/// One component solved during peeling.
#[derive(Debug, Clone, PartialEq)]
pub struct ComponentSolve {
    /// Index into the iteration's paths.
    pub path: usize,
    pub nodes: BTreeSet<NodeId>,
    /// Neighbors of the component in the residual graph outside the path.
    pub anchor: BTreeSet<NodeId>,
    pub route: Route,
    pub set: IndependentSet,
}

#[derive(Debug, Clone)]
pub struct PeelIteration {
    pub forest: CliqueForest,
    pub paths: Vec<ForestPath>,
    /// Nodes not removed before this iteration.
    pub residual: BTreeSet<NodeId>,
    /// Residual nodes in or next to the set built before this iteration.
    pub blocked: BTreeSet<NodeId>,
    pub components: Vec<ComponentSolve>,
}

#[derive(Debug, Clone)]
pub struct PeelState {
    pub params: MisParams,
    pub iterations: Vec<PeelIteration>,
    pub set: IndependentSet,
    /// Nodes left after the last iteration.
    pub left: BTreeSet<NodeId>,
}

impl PeelState {
    /// Cliques of degree at least three in each iteration's forest.
    pub fn branch_counts(&self) -> Vec<usize> {
        self.iterations.iter().map(|it| (0..it.forest.len()).filter(|&c| it.forest.degree(c) >= 3).count()).collect()
    }
}

/// Paths removed in one iteration: every pendant path, and the internal
/// ones that are long, or in the last iteration hold `d` independent nodes.
fn select_paths(gi: &Graph, f: &CliqueForest, p: &MisParams, last: bool) -> Vec<ForestPath> {
    classify_paths(f).into_iter().filter(|q| q.is_pendant() || if last { path_alpha(gi, f, q) >= p.d } else { path_diameter(f, q) >= p.long_path() }).collect()
}

/// Maximum independent set of the component `h` of `host` that no larger
/// set can replace inside its closed neighborhood.
///
/// `toward` lists the cliques of the path carrying `h`, ordered so that the
/// only outside clique `h` touches lies past the last one. Simplicial nodes
/// are taken furthest from that clique first, smaller id on ties, each
/// removing its neighbors. Without an outside clique every maximum set
/// qualifies and the elimination-order one is returned.
pub fn absorbing_mis(host: &Graph, h: &BTreeSet<NodeId>, toward: Option<&[SigmaWord]>, limit: usize) -> Result<IndependentSet> {
    let hg = host.induced(h);
    let best = alpha_oracle(&hg)?;
    if best.len() >= limit {
        return Err(Error::AlphaTooLarge { alpha: best.len(), limit });
    }
    let Some(toward) = toward else {
        return Ok(best);
    };
    // Index of the last clique holding each node: its end nearest the anchor.
    let mut near = BTreeMap::new();
    for (j, c) in toward.iter().enumerate() {
        for v in c.iter().filter(|v| h.contains(v)) {
            near.insert(*v, j);
        }
    }
    let mut alive = h.clone();
    let mut out = IndependentSet::new();
    while !alive.is_empty() {
        let simplicial = |v: NodeId| {
            let nb: Vec<NodeId> = hg.neighbors(v).filter(|u| alive.contains(u)).collect();
            nb.iter().enumerate().all(|(i, &a)| nb[i + 1..].iter().all(|&b| hg.has_edge(a, b)))
        };
        let v = alive
            .iter()
            .copied()
            .filter(|&v| simplicial(v))
            .min_by_key(|v| (near.get(v).copied().unwrap_or(0), *v))
            .expect("chordal graphs have simplicial nodes");
        out.insert(v);
        alive.remove(&v);
        for u in hg.neighbors(v) {
            alive.remove(&u);
        }
    }
    Ok(out)
}

/// Cliques of `path` ordered toward the attachment holding a node of
/// `anchor`, or `None` when `anchor` is empty.
fn orient(f: &CliqueForest, path: &ForestPath, anchor: &BTreeSet<NodeId>) -> Option<Vec<SigmaWord>> {
    if anchor.is_empty() {
        return None;
    }
    let mut cliques: Vec<SigmaWord> = path.cliques.iter().map(|&c| f.cliques[c].clone()).collect();
    let at_end = path.attach_e.is_some_and(|e| f.cliques[e].iter().any(|u| anchor.contains(u)));
    if !at_end {
        cliques.reverse();
    }
    Some(cliques)
}

/// Independence number of the closed neighborhood of `set` in `host`,
/// `forbidden` nodes left out. Equals `set.len()` for an absorbing set.
pub fn absorption(host: &Graph, set: &IndependentSet, forbidden: &BTreeSet<NodeId>) -> Result<usize> {
    let zone: BTreeSet<NodeId> = set.iter().flat_map(|&v| host.closed_nbhd(v)).filter(|u| !forbidden.contains(u)).collect();
    Ok(alpha_oracle(&host.induced(&zone))?.len())
}

/// Solves one component. `whole` is false when only a piece around some
/// node is known, which then must be large.
fn solve_component(
    host: &Graph,
    h: &BTreeSet<NodeId>,
    toward: Option<&[SigmaWord]>,
    p: &MisParams,
    last: bool,
    whole: bool,
) -> Result<(Route, IndependentSet)> {
    let hg = host.induced(h);
    if whole {
        let best = alpha_oracle(&hg)?;
        if best.len() < p.d {
            return Ok(if last { (Route::Maximum, best) } else { (Route::Absorbing, absorbing_mis(host, h, toward, p.d)?) });
        }
    }
    Ok((Route::Approximate, mis_interval(&hg, p.interval_eps())?))
}

/// Structural claims about a small component before the last iteration:
/// it touches at most one clique beside its path, and its diameter is below
/// `2d - 1`.
fn check_small(f: &CliqueForest, path: &ForestPath, c: &ComponentSolve, gi: &Graph, d: usize) -> Result<()> {
    let touched = path.attachments().filter(|&a| f.cliques[a].iter().any(|u| c.anchor.contains(u))).count();
    if touched > 1 {
        return Err(Error::VerificationFailed(format!("component at node {} touches {touched} outside cliques", c.nodes.first().unwrap())));
    }
    let diameter = gi.induced(&c.nodes).diameter();
    if diameter + 2 > 2 * d {
        return Err(Error::VerificationFailed(format!("component at node {} has diameter {diameter}", c.nodes.first().unwrap())));
    }
    Ok(())
}

/// Runs the peeling and keeps every intermediate result. With `checks` (or
/// in debug builds) the structural claims about small components are
/// verified as they are solved.
pub fn mis_peel(g: &Graph, p: &MisParams, checks: bool) -> Result<PeelState> {
    if !is_chordal(g) {
        return Err(Error::NotChordal);
    }
    let checks = checks || cfg!(debug_assertions);
    let mut f = clique_forest(g)?;
    let mut rest: BTreeSet<NodeId> = g.nodes().collect();
    let mut set = IndependentSet::new();
    let mut iterations = Vec::with_capacity(p.k);
    for i in 1..=p.k {
        let last = i == p.k;
        let gi = g.induced(&rest);
        let paths = select_paths(&gi, &f, p, last);
        let blocked: BTreeSet<NodeId> = rest.iter().copied().filter(|&v| g.closed_nbhd(v).iter().any(|u| set.contains(u))).collect();
        let mut components = Vec::new();
        for (pi, path) in paths.iter().enumerate() {
            let w = covered_nodes(&f, slice::from_ref(path));
            let free: Vec<NodeId> = w.iter().copied().filter(|v| !blocked.contains(v)).collect();
            for comp in gi.induced(&free).components() {
                let nodes: BTreeSet<NodeId> = comp.into_iter().collect();
                let anchor: BTreeSet<NodeId> = nodes.iter().flat_map(|&v| gi.neighbors(v)).filter(|u| !w.contains(u)).collect();
                let toward = orient(&f, path, &anchor);
                let (route, s) = solve_component(&gi, &nodes, toward.as_deref(), p, last, true)?;
                let c = ComponentSolve { path: pi, nodes, anchor, route, set: s };
                if checks && route == Route::Absorbing {
                    check_small(&f, path, &c, &gi, p.d)?;
                }
                components.push(c);
            }
        }
        let removed = covered_nodes(&f, &paths);
        let next = if last { None } else { Some(remove_paths(&f, &paths)?.0) };
        set.extend(components.iter().flat_map(|c| c.set.iter().copied()));
        iterations.push(PeelIteration { forest: f, paths, residual: rest.clone(), blocked, components });
        rest.retain(|v| !removed.contains(v));
        match next {
            Some(n) => f = n,
            None => break,
        }
    }
    Ok(PeelState { params: *p, iterations, set, left: rest })
}

pub fn mis_chordal_centralized(g: &Graph, eps: f64) -> Result<IndependentSet> {
    Ok(mis_peel(g, &MisParams::new(eps)?, false)?.set)
}

/// Independence number of what survives peeling over that of the input.
pub fn residual_alpha_check(g: &Graph, state: &PeelState) -> Result<f64> {
    let whole = alpha_oracle(g)?.len();
    if whole == 0 {
        return Ok(0.0);
    }
    Ok(alpha_oracle(&g.induced(&state.left))?.len() as f64 / whole as f64)
}

/// Recomputes what peeling claims: each maintained forest equals the clique
/// forest of the residual graph, absorbing components satisfy the absorption
/// equation, last-iteration exact solves are maximum, the result is
/// independent and within `1 + eps`, and the dropped rest holds at most an
/// `eps / 2` share of the independence number.
pub fn check_invariants(g: &Graph, st: &PeelState) -> Result<()> {
    let fail = |msg: String| Err(Error::VerificationFailed(msg));
    let p = st.params;
    for (i, it) in st.iterations.iter().enumerate() {
        let gi = g.induced(&it.residual);
        if !clique_forest(&gi)?.same_shape(&it.forest) {
            return fail(format!("forest of iteration {} differs from the recomputed one", i + 1));
        }
        for c in &it.components {
            let first = c.nodes.first().copied().unwrap_or_default();
            match c.route {
                Route::Absorbing => {
                    let alpha = absorption(&gi, &c.set, &it.blocked)?;
                    if i + 1 == p.k || alpha != c.set.len() {
                        return fail(format!("component at {first} in iteration {}: set of {} against {alpha}", i + 1, c.set.len()));
                    }
                }
                Route::Maximum => {
                    let alpha = alpha_oracle(&gi.induced(&c.nodes))?.len();
                    if alpha != c.set.len() {
                        return fail(format!("component at {first}: set of {} against maximum {alpha}", c.set.len()));
                    }
                }
                Route::Approximate => {}
            }
        }
    }
    if let Some(&v) = st.set.iter().find(|&&v| g.neighbors(v).any(|u| st.set.contains(&u))) {
        return fail(format!("node {v} has a neighbor in the set"));
    }
    let alpha = alpha_oracle(g)?.len();
    if (1.0 + p.eps) * (st.set.len() as f64) < alpha as f64 {
        return fail(format!("set of {} against alpha {alpha}", st.set.len()));
    }
    let rest = residual_alpha_check(g, st)?;
    if rest > p.eps / 2.0 {
        return fail(format!("residual share {rest} above {}", p.eps / 2.0));
    }
    Ok(())
}

/// View radius for choosing the removed paths.
pub fn select_radius(p: &MisParams) -> u32 {
    2 * p.long_path() as u32 + 10
}

/// View radius for solving the components of removed paths.
pub fn solve_radius(p: &MisParams) -> Result<u32> {
    Ok((2 * p.d + 2).max(mis_interval_radius(p.interval_eps())?) as u32 + 2)
}

#[derive(Debug, Clone, Default, PartialEq)]
pub struct MisPublic {
    /// Iteration that removed the node.
    pub layer: Option<u32>,
    /// In or next to the set when the node was removed.
    pub blocked: bool,
    pub in_set: bool,
}

#[derive(Debug)]
pub struct MisState {
    id: NodeId,
    layer: Option<u32>,
    blocked: bool,
    in_set: bool,
}

/// Node program of the distributed independent set.
///
/// Iteration `i` takes a fixed window: path selection at the start, with a
/// view reaching every path that could decide the node's removal, then
/// component solving once the removals have spread far enough. Every node
/// answers when the last window closes.
pub struct MisProgram {
    params: MisParams,
    select_r: u32,
    solve_r: u32,
    chosen: Shared<BTreeSet<NodeId>>,
    solved: Shared<IndependentSet>,
}

const CHORDAL: &str = "induced subgraphs of a chordal graph are chordal";

impl MisProgram {
    pub fn new(params: MisParams) -> Result<Self> {
        Ok(MisProgram { params, select_r: select_radius(&params), solve_r: solve_radius(&params)?, chosen: Shared::default(), solved: Shared::default() })
    }

    pub fn period(&self) -> u32 {
        self.select_r + self.solve_r
    }

    /// Round in which every node answers.
    pub fn finish(&self) -> u32 {
        self.params.k as u32 * self.period()
    }

    fn select(&self, s: &mut MisState, ctx: &Ctx<'_, Self>, i: u32) {
        let view = &ctx.view;
        let at = (i - 1) * self.period();
        let last = i as usize == self.params.k;
        let chosen = self.chosen.get(view, self.select_r, i, |_| {
            let g = view.subgraph(self.select_r);
            let rest: Vec<NodeId> = g.nodes().filter(|&u| view.public_at(u, at).unwrap().layer.is_none()).collect();
            let gi = g.induced(&rest);
            let f = clique_forest(&gi).expect(CHORDAL);
            covered_nodes(&f, &select_paths(&gi, &f, &self.params, last))
        });
        if chosen.contains(&s.id) {
            s.layer = Some(i);
            s.blocked = ctx.neighbors.iter().any(|&w| view.public(w).is_some_and(|x| x.in_set));
        }
    }

    fn solve(&self, s: &MisState, ctx: &Ctx<'_, Self>, i: u32) -> bool {
        let view = &ctx.view;
        let r = self.solve_r;
        let at = ctx.round - r;
        let last = i as usize == self.params.k;
        let set = self.solved.get(view, r, i, |whole| {
            let host = view.subgraph(r);
            let seen = |u: NodeId| view.public_at(u, at).unwrap();
            let rest: Vec<NodeId> = host.nodes().filter(|&u| seen(u).layer.is_none_or(|l| l == i)).collect();
            let gi = host.induced(&rest);
            let f = clique_forest(&gi).expect(CHORDAL);
            let paths = classify_paths(&f);
            let mut on_path = vec![usize::MAX; f.len()];
            for (pi, q) in paths.iter().enumerate() {
                for &c in &q.cliques {
                    on_path[c] = pi;
                }
            }
            let free: Vec<NodeId> = rest.iter().copied().filter(|&u| seen(u).layer == Some(i) && !seen(u).blocked).collect();
            let mut out = IndependentSet::new();
            for comp in gi.induced(&free).components() {
                if !whole && comp.binary_search(&s.id).is_err() {
                    continue;
                }
                let complete = whole || comp.iter().all(|&u| view.dist(u).unwrap() < r);
                let nodes: BTreeSet<NodeId> = comp.into_iter().collect();
                let toward = if complete {
                    let anchor = nodes.iter().flat_map(|&v| gi.neighbors(v)).filter(|&u| seen(u).layer.is_none()).collect();
                    let path = &paths[on_path[f.phi[nodes.first().unwrap()][0]]];
                    orient(&f, path, &anchor)
                } else {
                    None
                };
                let (_, part) = solve_component(&gi, &nodes, toward.as_deref(), &self.params, last, complete).expect("component solve failed");
                out.extend(part);
            }
            out
        });
        set.contains(&s.id)
    }
}

impl NodeProgram for MisProgram {
    type State = MisState;
    type Msg = ();
    type Public = MisPublic;
    type Output = bool;

    fn init(&self, id: NodeId, _: &[NodeId]) -> MisState {
        MisState { id, layer: None, blocked: false, in_set: false }
    }

    fn step(&self, s: &mut MisState, ctx: &Ctx<'_, Self>) -> Step<(), bool> {
        let t = ctx.round;
        let (first, per) = (self.select_r, self.period());
        if s.layer.is_none() && t >= first && (t - first).is_multiple_of(per) {
            let i = (t - first) / per + 1;
            if i as usize <= self.params.k {
                self.select(s, ctx, i);
            }
        }
        match s.layer {
            None => {
                let next = if t < first { first } else { first + ((t - first) / per + 1) * per };
                if next < self.finish() {
                    return Step::idle().sleep(next);
                }
            }
            Some(i) => {
                if t < i * per {
                    return Step::idle().sleep(i * per);
                }
                if t == i * per && !s.blocked {
                    s.in_set = self.solve(s, ctx, i);
                }
            }
        }
        if t < self.finish() {
            Step::idle().sleep(self.finish())
        } else {
            Step::output(s.in_set).sleep(u32::MAX)
        }
    }

    fn publish(&self, s: &MisState) -> MisPublic {
        MisPublic { layer: s.layer, blocked: s.blocked, in_set: s.in_set }
    }
}

pub fn mis_round_cap(p: &MisParams) -> Result<u32> {
    Ok(MisProgram::new(*p)?.finish() + 1)
}

/// Distributed run; the set equals [`mis_chordal_centralized`]'s.
pub fn mis_chordal_distributed(g: &Graph, eps: f64) -> Result<(IndependentSet, RoundTranscript<bool>)> {
    if !is_chordal(g) {
        return Err(Error::NotChordal);
    }
    let p = MisParams::new(eps)?;
    mis_distributed_with(g, &p, RunOptions { round_cap: mis_round_cap(&p)?, parallel: true })
}

pub fn mis_distributed_with(g: &Graph, p: &MisParams, opts: RunOptions) -> Result<(IndependentSet, RoundTranscript<bool>)> {
    let t = run_with(g, &MisProgram::new(*p)?, opts)?;
    let set = t.outputs.iter().filter(|(_, &b)| b).map(|(&v, _)| v).collect();
    Ok((set, t))
}
