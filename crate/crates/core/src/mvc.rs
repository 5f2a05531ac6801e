//! Coloring chordal graphs with at most `(1 + eps)` times the optimum.
//!
//! Pruning splits the nodes into layers. Every iteration removes all pendant
//! binary paths of the clique forest and the internal ones of diameter at
//! least `3k`, so each layer induces an interval graph. Layers are colored
//! on their own. Then, from the top layer down, every removed path is
//! recolored next to its higher-layer neighbors, whose colors are final.

use crate::chordal::{is_chordal, omega_oracle};
use crate::error::{Error, Result};
use crate::forest::{classify_paths, clique_forest, covered_nodes, maximal_cliques, path_diameter, remove_paths, CliqueForest, ForestPath, SigmaWord};
use crate::graph::{conflict_edge, verify_coloring, Coloring, Graph, NodeId};
use crate::interval::{clique_path, color_paths, color_radius, extend_coloring, interval_budget, CliquePath};
use crate::sim::{run_with, Ctx, NodeProgram, RoundTranscript, RunOptions, Shared, Step};
use std::collections::{BTreeMap, BTreeSet};

/// Pruning iterations allowed before giving up; the forest at least halves
/// every iteration, so real inputs stop far earlier.
const MAX_ITERATIONS: u32 = 64;

/// `k = ceil(2 / eps)`, at least 2.
pub fn mvc_k(eps: f64) -> Result<usize> {
    if !(eps > 0.0 && eps.is_finite()) {
        return Err(Error::BadEpsilon(eps));
    }
    Ok(((2.0 / eps) - 1e-9).ceil().max(2.0) as usize)
}

/// Checks the input and `eps >= 2 / omega`, returning `k`.
pub fn mvc_validate(g: &Graph, eps: f64) -> Result<usize> {
    if !is_chordal(g) {
        return Err(Error::NotChordal);
    }
    let k = mvc_k(eps)?;
    let omega = omega_oracle(g)?;
    if omega > 0 && eps < 2.0 / omega as f64 {
        return Err(Error::EpsilonTooSmall { eps, min: 2.0 / omega as f64 });
    }
    Ok(k)
}

#[derive(Debug, Clone, Default)]
pub struct Layering {
    pub k: usize,
    pub layer: BTreeMap<NodeId, u32>,
    pub parent: BTreeMap<NodeId, Option<NodeId>>,
    pub children: BTreeMap<NodeId, BTreeMap<u32, BTreeSet<NodeId>>>,
    /// Clique forest of the nodes not yet layered, as maintained by path
    /// removal, at the start of each iteration.
    pub forests: Vec<CliqueForest>,
    /// Paths removed in each iteration, indexing the matching forest.
    pub peeled_paths: Vec<Vec<ForestPath>>,
}

impl Layering {
    pub fn count(&self) -> u32 {
        self.forests.len() as u32
    }

    pub fn nodes_in(&self, i: u32) -> BTreeSet<NodeId> {
        self.layer.iter().filter(|(_, &l)| l == i).map(|(&v, _)| v).collect()
    }

    /// Nodes of layer `i` or higher.
    pub fn nodes_from(&self, i: u32) -> BTreeSet<NodeId> {
        self.layer.iter().filter(|(_, &l)| l >= i).map(|(&v, _)| v).collect()
    }
}

fn select_paths(f: &CliqueForest, k: usize) -> Vec<ForestPath> {
    classify_paths(f).into_iter().filter(|p| p.is_pendant() || path_diameter(f, p) >= 3 * k).collect()
}

/// Parents of the nodes of `layer`: the largest id of the nearest attachment
/// clique of the node's path, when that clique is within `k + 3`. Ties go to
/// the smaller clique.
fn assign_parents(g: &Graph, f: &CliqueForest, paths: &[ForestPath], layer: &BTreeSet<NodeId>, k: usize) -> BTreeMap<NodeId, NodeId> {
    let mut best: BTreeMap<NodeId, (usize, &SigmaWord)> = BTreeMap::new();
    for p in paths {
        let nodes = p.nodes(f);
        let members: Vec<NodeId> = nodes.iter().copied().filter(|v| layer.contains(v)).collect();
        // Every route into an attachment clique first meets its separator
        // with the path's end clique, and detours through the other end can
        // be shortcut, so the search stays on the path's own nodes.
        let inside = g.induced(&nodes);
        let ends = [(p.attach_s, p.cliques[0]), (p.attach_e, *p.cliques.last().unwrap())];
        for (c, end) in ends.into_iter().filter_map(|(c, e)| Some((c?, e))) {
            let word = &f.cliques[c];
            let sep = word.iter().copied().filter(|v| f.cliques[end].binary_search(v).is_ok());
            let near = inside.multi_bfs(sep, k + 3);
            for &w in &members {
                if let Some(&d) = near.get(&w) {
                    if best.get(&w).is_none_or(|b| (d, word) < *b) {
                        best.insert(w, (d, word));
                    }
                }
            }
        }
    }
    best.into_iter().map(|(w, (_, c))| (w, *c.last().unwrap())).collect()
}

/// Phase one: layers, parents and the forest of every iteration.
pub fn prune_layers(g: &Graph, k: usize) -> Result<Layering> {
    let mut out = Layering { k, ..Default::default() };
    out.parent = g.nodes().map(|v| (v, None)).collect();
    let mut f = clique_forest(g)?;
    let mut left = g.n();
    let mut i = 0;
    while left > 0 {
        i += 1;
        if i > MAX_ITERATIONS {
            return Err(Error::NonTermination(MAX_ITERATIONS as usize));
        }
        let paths = select_paths(&f, k);
        let (next, removed) = remove_paths(&f, &paths)?;
        if removed.is_empty() {
            return Err(Error::NonTermination(i as usize));
        }
        for (w, p) in assign_parents(g, &f, &paths, &removed, k) {
            out.parent.insert(w, Some(p));
            out.children.entry(p).or_default().entry(i).or_default().insert(w);
        }
        for &v in &removed {
            out.layer.insert(v, i);
        }
        left -= removed.len();
        out.forests.push(f);
        out.peeled_paths.push(paths);
        f = next;
    }
    Ok(out)
}

fn restrict(c: &[NodeId], keep: &BTreeSet<NodeId>) -> SigmaWord {
    c.iter().copied().filter(|v| keep.contains(v)).collect()
}

fn strict_subset(a: &[NodeId], b: &[NodeId]) -> bool {
    a.len() < b.len() && a.iter().all(|x| b.binary_search(x).is_ok())
}

/// Maximal cliques of the subgraph induced by a consecutive sequence of
/// clique restrictions, in the same order.
fn maximal_entries(seq: Vec<SigmaWord>) -> Vec<SigmaWord> {
    let mut s: Vec<SigmaWord> = seq.into_iter().filter(|c| !c.is_empty()).collect();
    s.dedup();
    (0..s.len())
        .filter(|&j| !(j > 0 && strict_subset(&s[j], &s[j - 1])) && !(j + 1 < s.len() && strict_subset(&s[j], &s[j + 1])))
        .map(|j| s[j].clone())
        .collect()
}

/// Clique paths of the components of `G[keep]`, read off the binary paths
/// that carry them.
fn layer_paths<'a>(f: &CliqueForest, paths: impl IntoIterator<Item = &'a ForestPath>, keep: &BTreeSet<NodeId>) -> Vec<CliquePath> {
    let mut out = Vec::new();
    for p in paths {
        let mut cur: Vec<SigmaWord> = Vec::new();
        for c in maximal_entries(p.cliques.iter().map(|&c| restrict(&f.cliques[c], keep)).collect()) {
            if cur.last().is_some_and(|l| !l.iter().any(|x| c.binary_search(x).is_ok())) {
                out.push(CliquePath { cliques: std::mem::take(&mut cur) });
            }
            cur.push(c);
        }
        if !cur.is_empty() {
            out.push(CliquePath { cliques: cur });
        }
    }
    out
}

/// Phase two: every layer colored as an interval graph.
pub fn color_layers(layering: &Layering) -> Result<Coloring> {
    let mut out = Coloring::new();
    for i in 1..=layering.count() {
        let idx = i as usize - 1;
        let pieces = layer_paths(&layering.forests[idx], &layering.peeled_paths[idx], &layering.nodes_in(i));
        out.extend(color_paths(pieces, layering.k)?);
    }
    Ok(out)
}

/// One removed path with layer nodes `W` and their higher-layer neighbors `W'`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CorrectionJob {
    /// Maximal cliques of `G[W ∪ W']` in path order.
    pub cliques: Vec<SigmaWord>,
    pub w: BTreeSet<NodeId>,
    pub w_prime: BTreeSet<NodeId>,
    /// Attachment clique at the first and at the last end of the path, with
    /// the part of `W'` inside it.
    pub ends: [Option<(SigmaWord, BTreeSet<NodeId>)>; 2],
}

/// Recoloring of one end: extend the colors of `fixed` over `free`.
#[derive(Debug, Clone)]
struct EndPlan {
    sub: CliquePath,
    fixed: BTreeSet<NodeId>,
    free: BTreeSet<NodeId>,
}

impl CorrectionJob {
    fn graph(&self) -> Graph {
        CliquePath { cliques: self.cliques.clone() }.graph()
    }

    fn border(&self, end: usize) -> Option<&BTreeSet<NodeId>> {
        self.ends[end].as_ref().map(|e| &e.1).filter(|b| !b.is_empty())
    }

    /// Whether `W'` lies inside the two attachment cliques.
    pub fn borders_cover(&self) -> bool {
        self.w_prime.iter().all(|v| self.ends.iter().flatten().any(|(c, _)| c.binary_search(v).is_ok()))
    }

    /// Whether the repairs at the two ends can touch a common node: each
    /// writes within `k + 3` of its border and reads within `k + 4`.
    fn interacting(&self, x: &Graph, k: usize) -> bool {
        match (self.border(0), self.border(1)) {
            (Some(a), Some(b)) => {
                let near = x.multi_bfs(a.iter().copied(), 2 * k + 8);
                b.iter().any(|v| near.contains_key(v))
            }
            _ => false,
        }
    }

    fn plan(&self, x: &Graph, end: usize, k: usize) -> Option<EndPlan> {
        let border = self.border(end)?;
        let mut seq = self.cliques.clone();
        if end == 1 {
            seq.reverse();
        }
        let near = x.multi_bfs(border.iter().copied(), k + 2);
        // The first clique entirely beyond distance k+2 keeps its colors and
        // closes the zone; without one the whole path is recolored.
        let (sub, free) = match seq.iter().position(|c| c.iter().all(|v| !near.contains_key(v))) {
            Some(i) => {
                let free = seq[..i].iter().flatten().copied().filter(|v| self.w.contains(v) && seq[i].binary_search(v).is_err()).collect();
                seq.truncate(i + 1);
                (seq, free)
            }
            None => (seq, self.w.clone()),
        };
        let sub = CliquePath { cliques: sub };
        let fixed = sub.nodes().difference(&free).copied().collect();
        Some(EndPlan { sub, fixed, free })
    }

    /// Plans for the listed ends, or for both ends when they interact.
    fn plans(&self, k: usize, ends: &[usize]) -> Vec<EndPlan> {
        let x = self.graph();
        let ends: &[usize] = if self.interacting(&x, k) { &[0, 1] } else { ends };
        ends.iter().filter_map(|&e| self.plan(&x, e, k)).collect()
    }
}

fn correction_jobs<'a>(
    g: &Graph,
    f: &CliqueForest,
    paths: impl IntoIterator<Item = &'a ForestPath>,
    layer: &BTreeSet<NodeId>,
    higher: &dyn Fn(NodeId) -> bool,
) -> Vec<CorrectionJob> {
    let mut out = Vec::new();
    for p in paths {
        if p.attach_s.is_none() && p.attach_e.is_none() {
            continue;
        }
        let w: BTreeSet<NodeId> = p.nodes(f).intersection(layer).copied().collect();
        if w.is_empty() {
            continue;
        }
        let w_prime: BTreeSet<NodeId> = w.iter().flat_map(|&v| g.neighbors(v)).filter(|&u| !w.contains(&u) && higher(u)).collect();
        let all: BTreeSet<NodeId> = w.union(&w_prime).copied().collect();
        let cliques = maximal_entries(p.cliques.iter().map(|&c| restrict(&f.cliques[c], &all)).collect());
        let end = |c: Option<usize>| {
            c.map(|c| {
                let word = f.cliques[c].clone();
                let part = w_prime.iter().copied().filter(|v| word.binary_search(v).is_ok()).collect();
                (word, part)
            })
        };
        out.push(CorrectionJob { cliques, ends: [end(p.attach_s), end(p.attach_e)], w, w_prime });
    }
    out
}

fn apply(plans: &[EndPlan], colors: &mut Coloring, k: usize) -> Result<()> {
    for p in plans {
        let fixed: Coloring = p.fixed.iter().map(|v| (*v, colors[v])).collect();
        let omega = p.sub.cliques.iter().map(|c| c.len()).max().unwrap_or(0);
        let budget = interval_budget(omega, k).max(fixed.values().copied().max().unwrap_or(0));
        let ext = extend_coloring(&p.sub, budget, &fixed)?;
        for v in &p.free {
            colors.insert(*v, ext[v]);
        }
    }
    Ok(())
}

/// Correction jobs of layer `i`, in forest order.
pub fn layer_jobs(g: &Graph, layering: &Layering, i: u32) -> Vec<CorrectionJob> {
    let idx = i as usize - 1;
    let higher = |u: NodeId| layering.layer[&u] > i;
    correction_jobs(g, &layering.forests[idx], &layering.peeled_paths[idx], &layering.nodes_in(i), &higher)
}

/// Phase three: top-down repair of conflicts with higher layers.
pub fn correct_colors(g: &Graph, layering: &Layering, tentative: &Coloring) -> Result<Coloring> {
    let k = layering.k;
    let mut colors = tentative.clone();
    for i in (1..=layering.count()).rev() {
        for job in layer_jobs(g, layering, i) {
            assert!(job.borders_cover(), "higher-layer neighbor outside the attachment cliques");
            apply(&job.plans(k, &[0, 1]), &mut colors, k)?;
        }
    }
    Ok(colors)
}

#[derive(Debug, Clone)]
pub struct MvcOutcome {
    pub k: usize,
    pub layering: Layering,
    pub tentative: Coloring,
    pub coloring: Coloring,
}

/// All three phases for a given `k`.
pub fn mvc_pipeline(g: &Graph, k: usize) -> Result<MvcOutcome> {
    let layering = prune_layers(g, k)?;
    let tentative = color_layers(&layering)?;
    let coloring = correct_colors(g, &layering, &tentative)?;
    Ok(MvcOutcome { k, layering, tentative, coloring })
}

pub fn mvc_centralized(g: &Graph, eps: f64) -> Result<Coloring> {
    let k = mvc_validate(g, eps)?;
    Ok(mvc_pipeline(g, k)?.coloring)
}

/// Recomputes what a run claims: at most `ceil(log2 #cliques)` layers, each
/// maintained forest equal to the clique forest of the nodes not yet layered,
/// interval layers, and a legal coloring within the palette bound.
pub fn check_invariants(g: &Graph, out: &MvcOutcome) -> Result<()> {
    let fail = |msg: String| Err(Error::VerificationFailed(msg));
    let l = &out.layering;
    let cliques = maximal_cliques(g)?.len();
    let bound = (cliques.max(2) as f64).log2().ceil() as u32;
    if l.count() > bound {
        return fail(format!("{} layers for {cliques} cliques", l.count()));
    }
    for i in 1..=l.count() {
        if !clique_forest(&g.induced(&l.nodes_from(i)))?.same_shape(&l.forests[i as usize - 1]) {
            return fail(format!("forest of iteration {i} differs from the recomputed one"));
        }
        if clique_path(&g.induced(&l.nodes_in(i))).is_err() {
            return fail(format!("layer {i} is not an interval graph"));
        }
    }
    if let Some((u, v)) = conflict_edge(g, &out.coloring) {
        return fail(format!("edge {u}-{v} is monochromatic"));
    }
    let report = verify_coloring(g, &out.coloring)?;
    let budget = interval_budget(omega_oracle(g)?, out.k) as usize;
    if !report.legal || report.palette > budget {
        return fail(format!("palette {} against budget {budget}, legal: {}", report.palette, report.legal));
    }
    Ok(())
}

/// Rounds per pruning iteration.
pub fn prune_rounds(k: usize) -> u32 {
    10 * k as u32
}

/// Radius of the view a parent uses to repair one layer of its children.
pub fn correction_radius(k: usize) -> u32 {
    3 * k as u32 + 18
}

#[derive(Debug, Clone, Default, PartialEq)]
pub struct MvcPublic {
    pub layer: Option<u32>,
    pub tentative: Option<u32>,
    pub color: Option<u32>,
    /// Final colors this node chose for its children.
    pub assigned: BTreeMap<NodeId, u32>,
}

#[derive(Debug)]
pub struct MvcState {
    id: NodeId,
    layer: Option<u32>,
    parent: Option<NodeId>,
    children: BTreeMap<u32, BTreeSet<NodeId>>,
    tentative: Option<u32>,
    color: Option<u32>,
    assigned: BTreeMap<NodeId, u32>,
    pending: Option<Pending>,
}

/// Repair of one layer of children, waiting for its inputs.
#[derive(Debug)]
struct Pending {
    layer: u32,
    plans: Vec<EndPlan>,
    finals: BTreeSet<NodeId>,
    tentatives: BTreeSet<NodeId>,
}

struct PruneView {
    layer: BTreeSet<NodeId>,
    parent: BTreeMap<NodeId, NodeId>,
}

/// Node program of the distributed coloring. A node's computations only read
/// its view.
pub struct MvcProgram {
    k: usize,
    prune: Shared<PruneView>,
    color: Shared<Coloring>,
    jobs: Shared<Vec<CorrectionJob>>,
}

impl MvcProgram {
    pub fn new(k: usize) -> Self {
        MvcProgram { k, prune: Shared::default(), color: Shared::default(), jobs: Shared::default() }
    }

    fn color_round(&self, i: u32) -> u32 {
        i * prune_rounds(self.k) + color_radius(self.k) as u32
    }
}

/// Nodes of the view not layered before iteration `i`.
fn residual(g: &Graph, layer_of: &dyn Fn(NodeId) -> Option<u32>, i: u32) -> Vec<NodeId> {
    g.nodes().filter(|&u| !layer_of(u).is_some_and(|l| l < i)).collect()
}

const CHORDAL: &str = "induced subgraphs of a chordal graph are chordal";

impl MvcProgram {
    fn prune_step(&self, s: &mut MvcState, ctx: &Ctx<'_, Self>, i: u32) {
        let r = prune_rounds(self.k);
        let view = &ctx.view;
        let pv = self.prune.get(view, r, i, |_| {
            let g = view.subgraph(r);
            let at = (i - 1) * r;
            let rest = residual(&g, &|u| view.public_at(u, at).unwrap().layer, i);
            let f = clique_forest(&g.induced(&rest)).expect(CHORDAL);
            let paths = select_paths(&f, self.k);
            let layer = covered_nodes(&f, &paths);
            let parent = assign_parents(&g, &f, &paths, &layer, self.k);
            PruneView { layer, parent }
        });
        if pv.layer.contains(&s.id) {
            s.layer = Some(i);
            s.parent = pv.parent.get(&s.id).copied();
        }
        for (&w, &p) in &pv.parent {
            if p == s.id {
                s.children.entry(i).or_default().insert(w);
            }
        }
    }

    fn tentative(&self, s: &MvcState, ctx: &Ctx<'_, Self>, i: u32) -> u32 {
        let r = color_radius(self.k) as u32;
        let view = &ctx.view;
        let colors = self.color.get(view, r, i, |complete| {
            let g = view.subgraph(r);
            let at = i * prune_rounds(self.k);
            let layer_of = |u| view.public_at(u, at).unwrap().layer;
            let rest = residual(&g, &layer_of, i);
            let layer: BTreeSet<NodeId> = rest.iter().copied().filter(|&u| layer_of(u) == Some(i)).collect();
            let f = clique_forest(&g.induced(&rest)).expect(CHORDAL);
            let mut pieces = layer_paths(&f, &classify_paths(&f), &layer);
            if !complete {
                pieces.retain(|p| p.cliques.iter().any(|c| c.binary_search(&s.id).is_ok()));
            }
            color_paths(pieces, self.k).expect("layer coloring failed")
        });
        colors[&s.id]
    }

    fn plan_layer(&self, s: &MvcState, ctx: &Ctx<'_, Self>, l: u32) -> Pending {
        let r = correction_radius(self.k);
        let view = &ctx.view;
        let jobs = self.jobs.get(view, r, l, |_| {
            let g = view.subgraph(r);
            let layer_of = |u| view.public(u).and_then(|p| p.layer);
            let rest = residual(&g, &layer_of, l);
            let layer: BTreeSet<NodeId> = rest.iter().copied().filter(|&u| layer_of(u) == Some(l)).collect();
            let f = clique_forest(&g.induced(&rest)).expect(CHORDAL);
            correction_jobs(&g, &f, &classify_paths(&f), &layer, &|u| layer_of(u).is_none_or(|x| x > l))
        });
        let mut plans = Vec::new();
        let mut finals = BTreeSet::new();
        let mut tentatives = s.children[&l].clone();
        for job in jobs.iter() {
            let mine: Vec<usize> = (0..2).filter(|&e| job.ends[e].as_ref().is_some_and(|(c, _)| c.last() == Some(&s.id))).collect();
            if mine.is_empty() {
                continue;
            }
            for p in job.plans(self.k, &mine) {
                for &v in &p.fixed {
                    if job.w_prime.contains(&v) {
                        finals.insert(v);
                    } else {
                        tentatives.insert(v);
                    }
                }
                plans.push(p);
            }
        }
        Pending { layer: l, plans, finals, tentatives }
    }

    /// Runs the pending repair when every input is visible.
    fn try_repair(&self, s: &mut MvcState, ctx: &Ctx<'_, Self>) -> bool {
        let p = s.pending.as_ref().unwrap();
        let mut colors = Coloring::new();
        for &v in &p.finals {
            match ctx.view.public(v).and_then(|x| x.color) {
                Some(c) => colors.insert(v, c),
                None => return false,
            };
        }
        for &v in &p.tentatives {
            match ctx.view.public(v).and_then(|x| x.tentative) {
                Some(c) => colors.insert(v, c),
                None => return false,
            };
        }
        apply(&p.plans, &mut colors, self.k).expect("correction failed");
        let l = p.layer;
        for c in s.children.remove(&l).unwrap() {
            s.assigned.insert(c, colors[&c]);
        }
        s.pending = None;
        true
    }
}

impl NodeProgram for MvcProgram {
    type State = MvcState;
    type Msg = ();
    type Public = MvcPublic;
    type Output = u32;

    fn init(&self, id: NodeId, _: &[NodeId]) -> MvcState {
        MvcState { id, layer: None, parent: None, children: BTreeMap::new(), tentative: None, color: None, assigned: BTreeMap::new(), pending: None }
    }

    fn step(&self, s: &mut MvcState, ctx: &Ctx<'_, Self>) -> Step<(), u32> {
        let t = ctx.round;
        let rp = prune_rounds(self.k);
        if s.layer.is_none() {
            if t > 0 && t.is_multiple_of(rp) {
                self.prune_step(s, ctx, t / rp);
            }
            if s.layer.is_none() {
                return Step::idle().sleep((t / rp + 1) * rp);
            }
        }
        let i = s.layer.unwrap();
        if s.tentative.is_none() {
            if t < self.color_round(i) {
                return Step::idle().sleep(self.color_round(i));
            }
            s.tentative = Some(self.tentative(s, ctx, i));
            if s.parent.is_none() {
                s.color = s.tentative;
            }
        }
        if s.color.is_none() {
            let assigned = ctx.view.public(s.parent.unwrap()).and_then(|p| p.assigned.get(&s.id).copied());
            match assigned {
                Some(c) => s.color = Some(c),
                None => return Step::idle(),
            }
        }
        while let Some(&l) = s.children.keys().next_back() {
            if s.pending.is_none() {
                s.pending = Some(self.plan_layer(s, ctx, l));
            }
            if !self.try_repair(s, ctx) {
                break;
            }
        }
        let out = Step::output(s.color.unwrap());
        if s.children.is_empty() {
            out.sleep(u32::MAX)
        } else {
            out
        }
    }

    fn publish(&self, s: &MvcState) -> MvcPublic {
        MvcPublic { layer: s.layer, tentative: s.tentative, color: s.color, assigned: s.assigned.clone() }
    }
}

/// Round cap generous enough for any input the pruning can handle.
pub fn mvc_round_cap(k: usize) -> u32 {
    MAX_ITERATIONS * (prune_rounds(k) + 4 * correction_radius(k)) + color_radius(k) as u32
}

/// Distributed run; the coloring equals [`mvc_centralized`]'s.
pub fn mvc_distributed(g: &Graph, eps: f64) -> Result<(Coloring, RoundTranscript<u32>)> {
    let k = mvc_validate(g, eps)?;
    mvc_distributed_with(g, k, RunOptions { round_cap: mvc_round_cap(k), parallel: true })
}

pub fn mvc_distributed_with(g: &Graph, k: usize, opts: RunOptions) -> Result<(Coloring, RoundTranscript<u32>)> {
    let t = run_with(g, &MvcProgram::new(k), opts)?;
    Ok((t.outputs.clone(), t))
}
