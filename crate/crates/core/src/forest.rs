//! Maximal cliques, the canonical clique forest, local views and binary paths.
//!
//! Cliques are identified by their index in the list of maximal cliques
//! sorted by sigma word (the sorted member list, compared lexicographically
//! with a proper prefix ordered first). Among all maximum weight spanning
//! forests of the weighted clique intersection graph we pick the unique one
//! that is maximal under the total edge order `(weight, lower word, higher word)`.

use crate::chordal::{is_peo, later, mcs_dense};
use crate::error::{Error, Result};
use crate::graph::{Dense, Graph, NodeId};
use crate::interval::{CliquePath, Layout};
use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write;

/// Sorted member list of a clique.
pub type SigmaWord = Vec<NodeId>;

/// Weighted clique intersection edge, `l <= h`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeTriple {
    pub w: usize,
    pub l: SigmaWord,
    pub h: SigmaWord,
}

impl EdgeTriple {
    pub fn new(a: &[NodeId], b: &[NodeId]) -> Self {
        let w = a.iter().filter(|x| b.binary_search(x).is_ok()).count();
        let (l, h) = if a <= b { (a, b) } else { (b, a) };
        EdgeTriple { w, l: l.to_vec(), h: h.to_vec() }
    }
}

/// Strict total order on edge triples: weight, then lower word, then higher word.
pub fn edge_less(e: &EdgeTriple, f: &EdgeTriple) -> bool {
    (e.w, &e.l, &e.h) < (f.w, &f.l, &f.h)
}

/// Maximal cliques of a chordal graph, sorted by sigma word.
pub fn maximal_cliques(g: &Graph) -> Result<Vec<SigmaWord>> {
    let d = Dense::new(g);
    let (order, pos) = mcs_dense(&d);
    if !is_peo(&d, &order, &pos) {
        return Err(Error::NotChordal);
    }
    Ok(cliques_from_peo(&d, &order, &pos))
}

fn cliques_from_peo(d: &Dense, order: &[usize], pos: &[usize]) -> Vec<SigmaWord> {
    let n = d.len();
    let lat: Vec<Vec<usize>> = (0..n).map(|v| later(d, pos, v)).collect();
    let mut dominated = vec![false; n];
    for &u in order {
        if let Some(&p) = lat[u].first() {
            if lat[u].len() == lat[p].len() + 1 {
                dominated[p] = true;
            }
        }
    }
    let mut out: Vec<SigmaWord> = (0..n)
        .filter(|&v| !dominated[v])
        .map(|v| {
            let mut c: Vec<NodeId> = std::iter::once(v).chain(lat[v].iter().copied()).map(|x| d.ids[x]).collect();
            c.sort_unstable();
            c
        })
        .collect();
    out.sort();
    out
}

/// Unique maximum spanning forest over sigma-sorted cliques, as index pairs `(i, j)`, `i < j`.
pub fn mwsf(cliques: &[SigmaWord]) -> BTreeSet<(usize, usize)> {
    let mut holders: BTreeMap<NodeId, Vec<usize>> = BTreeMap::new();
    for (i, c) in cliques.iter().enumerate() {
        for &v in c {
            holders.entry(v).or_default().push(i);
        }
    }
    let mut weight: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    for list in holders.values() {
        for (a, &i) in list.iter().enumerate() {
            for &j in &list[a + 1..] {
                *weight.entry((i, j)).or_default() += 1;
            }
        }
    }
    // Cliques are sigma-sorted, so for i < j the lower word is cliques[i];
    // comparing (w, i, j) is the same as comparing edge triples.
    let mut edges: Vec<(usize, usize, usize)> = weight.into_iter().map(|((i, j), w)| (w, i, j)).collect();
    edges.sort_unstable_by(|a, b| b.cmp(a));
    let mut uf: Vec<usize> = (0..cliques.len()).collect();
    fn find(uf: &mut [usize], mut x: usize) -> usize {
        while uf[x] != x {
            uf[x] = uf[uf[x]];
            x = uf[x];
        }
        x
    }
    let mut out = BTreeSet::new();
    for (_, i, j) in edges {
        let (a, b) = (find(&mut uf, i), find(&mut uf, j));
        if a != b {
            uf[a] = b;
            out.insert((i, j));
        }
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct CliqueForest {
    /// Maximal cliques in sigma order; the index is the clique id.
    pub cliques: Vec<SigmaWord>,
    pub edges: BTreeSet<(usize, usize)>,
    /// Cliques containing each node, ascending.
    pub phi: BTreeMap<NodeId, Vec<usize>>,
}

impl CliqueForest {
    pub fn from_cliques(cliques: Vec<SigmaWord>, edges: BTreeSet<(usize, usize)>) -> Self {
        let mut phi: BTreeMap<NodeId, Vec<usize>> = BTreeMap::new();
        for (i, c) in cliques.iter().enumerate() {
            for &v in c {
                phi.entry(v).or_default().push(i);
            }
        }
        CliqueForest { cliques, edges, phi }
    }

    pub fn len(&self) -> usize {
        self.cliques.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cliques.is_empty()
    }

    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.cliques.len()];
        for &(i, j) in &self.edges {
            adj[i].push(j);
            adj[j].push(i);
        }
        adj
    }

    pub fn degree(&self, i: usize) -> usize {
        self.edges.iter().filter(|&&(a, b)| a == i || b == i).count()
    }

    /// Index of a clique given its sigma word.
    pub fn find(&self, word: &[NodeId]) -> Option<usize> {
        self.cliques.binary_search_by(|c| c.as_slice().cmp(word)).ok()
    }

    /// Edges as sigma word pairs, lower word first.
    pub fn word_edges(&self) -> BTreeSet<(SigmaWord, SigmaWord)> {
        self.edges.iter().map(|&(i, j)| (self.cliques[i].clone(), self.cliques[j].clone())).collect()
    }

    /// Same cliques joined by the same edges, whatever the clique numbering.
    pub fn same_shape(&self, other: &CliqueForest) -> bool {
        let sorted = |f: &CliqueForest| {
            let mut c = f.cliques.clone();
            c.sort();
            c
        };
        sorted(self) == sorted(other) && self.word_edges() == other.word_edges()
    }

    pub fn dump(&self) -> String {
        let mut s = String::new();
        for (i, c) in self.cliques.iter().enumerate() {
            let ids: Vec<String> = c.iter().map(|v| v.to_string()).collect();
            writeln!(s, "C{i}: {}", ids.join(",")).unwrap();
        }
        for (i, j) in &self.edges {
            writeln!(s, "E: {i}-{j}").unwrap();
        }
        s
    }
}

pub fn clique_forest(g: &Graph) -> Result<CliqueForest> {
    let cliques = maximal_cliques(g)?;
    let edges = mwsf(&cliques);
    let mut f = CliqueForest::from_cliques(cliques, edges);
    for v in g.nodes() {
        f.phi.entry(v).or_default();
    }
    Ok(f)
}

/// Fragment of the clique forest visible from a ball, keyed by sigma words.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ForestFragment {
    pub cliques: BTreeSet<SigmaWord>,
    pub edges: BTreeSet<(SigmaWord, SigmaWord)>,
}

/// Clique forest fragment computed from the radius `d` ball around `v`.
///
/// For every node `u` within distance `d - 1` of `v` all cliques containing
/// `u` lie inside the ball, and the forest restricted to them is the maximum
/// spanning tree over just those cliques.
pub fn local_view(ball: &Graph, v: NodeId, d: usize) -> Result<ForestFragment> {
    if d < 2 {
        return Err(Error::RadiusTooSmall(d));
    }
    if !ball.contains(v) {
        return Err(Error::UnknownNode(v));
    }
    let mut frag = ForestFragment::default();
    for (u, du) in ball.bfs(v, d - 1) {
        debug_assert!(du < d);
        let star = ball.induced(&ball.closed_nbhd(u));
        let phi: Vec<SigmaWord> = maximal_cliques(&star)?.into_iter().filter(|c| c.binary_search(&u).is_ok()).collect();
        for &(i, j) in &mwsf(&phi) {
            frag.edges.insert((phi[i].clone(), phi[j].clone()));
        }
        frag.cliques.extend(phi);
    }
    Ok(frag)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PathKind {
    Pendant,
    Internal,
    /// A whole component of degree at most two cliques; treated as pendant.
    Component,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ForestPath {
    pub cliques: Vec<usize>,
    pub kind: PathKind,
    /// Clique of degree at least three next to the first clique.
    pub attach_s: Option<usize>,
    /// Clique of degree at least three next to the last clique.
    pub attach_e: Option<usize>,
}

impl ForestPath {
    pub fn is_pendant(&self) -> bool {
        self.kind != PathKind::Internal
    }

    /// Nodes of the path's cliques.
    pub fn nodes(&self, f: &CliqueForest) -> BTreeSet<NodeId> {
        self.cliques.iter().flat_map(|&c| f.cliques[c].iter().copied()).collect()
    }

    pub fn attachments(&self) -> impl Iterator<Item = usize> {
        self.attach_s.into_iter().chain(self.attach_e)
    }
}

/// All maximal binary paths: runs of cliques of degree at most two.
///
/// Pendant paths list their attached end last. Internal paths start at the
/// end with the smaller clique index. Paths are ordered by smallest clique.
pub fn classify_paths(f: &CliqueForest) -> Vec<ForestPath> {
    let adj = f.adjacency();
    let binary: Vec<bool> = adj.iter().map(|a| a.len() <= 2).collect();
    let mut seen = vec![false; f.len()];
    let mut out = Vec::new();
    for start in 0..f.len() {
        if !binary[start] || seen[start] {
            continue;
        }
        // Walk to one end of the run, then collect it in order.
        let mut end = start;
        let mut prev = usize::MAX;
        loop {
            match adj[end].iter().find(|&&x| x != prev && binary[x]) {
                Some(&next) if next != start => {
                    prev = end;
                    end = next;
                }
                _ => break,
            }
        }
        let mut run = vec![end];
        seen[end] = true;
        let mut prev = usize::MAX;
        let mut cur = end;
        while let Some(&next) = adj[cur].iter().find(|&&x| x != prev && binary[x] && !seen[x]) {
            run.push(next);
            seen[next] = true;
            prev = cur;
            cur = next;
        }
        let outside = |c: usize| -> Vec<usize> {
            let mut v: Vec<usize> = adj[c].iter().copied().filter(|&x| !binary[x]).collect();
            v.sort_unstable();
            v
        };
        let first = run[0];
        let last = *run.last().unwrap();
        let (mut at_first, at_last) = if run.len() == 1 { (outside(first), Vec::new()) } else { (outside(first), outside(last)) };
        match at_first.len() + at_last.len() {
            0 => {
                if first > last {
                    run.reverse();
                }
                out.push(ForestPath { cliques: run, kind: PathKind::Component, attach_s: None, attach_e: None })
            }
            1 => {
                if !at_first.is_empty() {
                    run.reverse();
                }
                let a = at_first.pop().or(at_last.first().copied());
                out.push(ForestPath { cliques: run, kind: PathKind::Pendant, attach_s: None, attach_e: a });
            }
            _ => {
                let (s, e) = if run.len() == 1 {
                    (at_first[0], at_first[1])
                } else {
                    if first > last {
                        run.reverse();
                        (at_last[0], at_first[0])
                    } else {
                        (at_first[0], at_last[0])
                    }
                };
                out.push(ForestPath { cliques: run, kind: PathKind::Internal, attach_s: Some(s), attach_e: Some(e) });
            }
        }
    }
    out.sort_by_key(|p| *p.cliques.iter().min().unwrap());
    out
}

/// Largest distance between nodes of the path, measured inside the path's
/// induced subgraph (clique separators make this equal to the distance in `g`).
pub fn path_diameter(f: &CliqueForest, p: &ForestPath) -> usize {
    let cliques = p.cliques.iter().map(|&c| f.cliques[c].clone()).collect();
    let lay = Layout::new(CliquePath { cliques });
    // On an interval graph the node ending first and the node starting last
    // realize the diameter.
    let first = lay.range.iter().min_by_key(|(v, r)| (r.1, **v)).map(|(v, _)| *v).unwrap();
    let last = lay.range.iter().max_by_key(|(v, r)| (r.0, std::cmp::Reverse(**v))).map(|(v, _)| *v).unwrap();
    if first == last {
        // That node meets every other one, so the path is a single clique.
        return usize::from(lay.range.len() > 1);
    }
    lay.node_dist(first, last)
}

pub fn path_alpha(g: &Graph, f: &CliqueForest, p: &ForestPath) -> usize {
    crate::chordal::alpha_oracle(&g.induced(&p.nodes(f))).map_or(0, |s| s.len())
}

/// Nodes whose cliques all lie on one of `paths`.
pub fn covered_nodes(f: &CliqueForest, paths: &[ForestPath]) -> BTreeSet<NodeId> {
    let on: BTreeSet<usize> = paths.iter().flat_map(|p| p.cliques.iter().copied()).collect();
    f.phi.iter().filter(|(_, cs)| !cs.is_empty() && cs.iter().all(|c| on.contains(c))).map(|(&v, _)| v).collect()
}

/// Removes the listed paths, returning the residual forest and removed nodes.
pub fn remove_paths(f: &CliqueForest, paths: &[ForestPath]) -> Result<(CliqueForest, BTreeSet<NodeId>)> {
    for p in paths.iter().filter(|p| p.kind == PathKind::Internal) {
        let diameter = path_diameter(f, p);
        if diameter < 4 {
            return Err(Error::DiameterTooSmall { diameter });
        }
    }
    Ok(remove_paths_unchecked(f, paths))
}

pub(crate) fn remove_paths_unchecked(f: &CliqueForest, paths: &[ForestPath]) -> (CliqueForest, BTreeSet<NodeId>) {
    let removed = covered_nodes(f, paths);
    let on: BTreeSet<usize> = paths.iter().flat_map(|p| p.cliques.iter().copied()).collect();
    let mut remap = vec![usize::MAX; f.len()];
    let mut cliques = Vec::new();
    for (i, c) in f.cliques.iter().enumerate() {
        if !on.contains(&i) {
            remap[i] = cliques.len();
            cliques.push(c.clone());
        }
    }
    let edges = f.edges.iter().filter(|(i, j)| remap[*i] != usize::MAX && remap[*j] != usize::MAX).map(|&(i, j)| (remap[i], remap[j])).collect();
    let mut out = CliqueForest::from_cliques(cliques, edges);
    for &v in f.phi.keys() {
        if !removed.contains(&v) {
            out.phi.entry(v).or_default();
        }
    }
    (out, removed)
}
