//! Undirected simple graphs keyed by raw node identifiers.

use crate::error::{Error, Result};
use std::collections::{BTreeMap, BTreeSet, VecDeque};

/// Node identifier. Identifiers are positive and never renumbered.
pub type NodeId = u32;

/// Color assignment, colors are positive.
pub type Coloring = BTreeMap<NodeId, u32>;

pub type IndependentSet = BTreeSet<NodeId>;

#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: BTreeMap<NodeId, BTreeSet<NodeId>>,
}

impl Graph {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_edges(edges: &[(NodeId, NodeId)]) -> Self {
        let mut g = Graph::new();
        for &(u, v) in edges {
            g.add_edge(u, v);
        }
        g
    }

    pub fn add_node(&mut self, v: NodeId) {
        self.adj.entry(v).or_default();
    }

    /// Adds the edge `u v`. Self loops are ignored.
    pub fn add_edge(&mut self, u: NodeId, v: NodeId) {
        self.add_node(u);
        self.add_node(v);
        if u != v {
            self.adj.get_mut(&u).unwrap().insert(v);
            self.adj.get_mut(&v).unwrap().insert(u);
        }
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.adj.values().map(|s| s.len()).sum::<usize>() / 2
    }

    pub fn is_empty(&self) -> bool {
        self.adj.is_empty()
    }

    pub fn contains(&self, v: NodeId) -> bool {
        self.adj.contains_key(&v)
    }

    pub fn nodes(&self) -> impl Iterator<Item = NodeId> + '_ {
        self.adj.keys().copied()
    }

    /// Neighbors of `v`; empty for unknown nodes.
    pub fn neighbors(&self, v: NodeId) -> impl Iterator<Item = NodeId> + '_ {
        self.adj.get(&v).into_iter().flat_map(|s| s.iter().copied())
    }

    pub fn neighbor_set(&self, v: NodeId) -> Option<&BTreeSet<NodeId>> {
        self.adj.get(&v)
    }

    pub fn degree(&self, v: NodeId) -> usize {
        self.adj.get(&v).map_or(0, |s| s.len())
    }

    pub fn has_edge(&self, u: NodeId, v: NodeId) -> bool {
        self.adj.get(&u).is_some_and(|s| s.contains(&v))
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (NodeId, NodeId)> + '_ {
        self.adj.iter().flat_map(|(&u, s)| s.range(u + 1..).map(move |&v| (u, v)))
    }

    pub fn induced<'a>(&self, keep: impl IntoIterator<Item = &'a NodeId>) -> Graph {
        let keep: BTreeSet<NodeId> = keep.into_iter().copied().filter(|v| self.contains(*v)).collect();
        let mut h = Graph::new();
        for &v in &keep {
            h.add_node(v);
            for u in self.neighbors(v) {
                if u > v && keep.contains(&u) {
                    h.add_edge(v, u);
                }
            }
        }
        h
    }

    /// Closed neighborhood.
    pub fn closed_nbhd(&self, v: NodeId) -> BTreeSet<NodeId> {
        let mut s: BTreeSet<NodeId> = self.neighbors(v).collect();
        s.insert(v);
        s
    }

    /// Connected components, each sorted, ordered by smallest member.
    pub fn components(&self) -> Vec<Vec<NodeId>> {
        let mut seen = BTreeSet::new();
        let mut out = Vec::new();
        for v in self.nodes() {
            if seen.contains(&v) {
                continue;
            }
            let comp: Vec<NodeId> = self.bfs(v, usize::MAX).into_keys().collect();
            seen.extend(comp.iter().copied());
            out.push(comp);
        }
        out
    }

    /// Hop distances from `src`, truncated at `limit`.
    pub fn bfs(&self, src: NodeId, limit: usize) -> BTreeMap<NodeId, usize> {
        self.multi_bfs(std::iter::once(src), limit)
    }

    /// Hop distances from the nearest source, truncated at `limit`.
    pub fn multi_bfs(&self, srcs: impl IntoIterator<Item = NodeId>, limit: usize) -> BTreeMap<NodeId, usize> {
        let mut dist = BTreeMap::new();
        let mut q = VecDeque::new();
        for s in srcs {
            if self.contains(s) && !dist.contains_key(&s) {
                dist.insert(s, 0);
                q.push_back(s);
            }
        }
        while let Some(v) = q.pop_front() {
            let d = dist[&v];
            if d >= limit {
                continue;
            }
            for u in self.neighbors(v) {
                if let std::collections::btree_map::Entry::Vacant(e) = dist.entry(u) {
                    e.insert(d + 1);
                    q.push_back(u);
                }
            }
        }
        dist
    }

    pub fn dist(&self, u: NodeId, v: NodeId) -> Option<usize> {
        self.bfs(u, usize::MAX).get(&v).copied()
    }

    /// Largest eccentricity over all nodes of a connected graph; over components otherwise.
    pub fn diameter(&self) -> usize {
        self.nodes().map(|v| self.bfs(v, usize::MAX).values().copied().max().unwrap_or(0)).max().unwrap_or(0)
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ColoringReport {
    pub legal: bool,
    pub palette: usize,
}

/// Legal means every node is colored and no edge is monochromatic.
pub fn verify_coloring(g: &Graph, c: &Coloring) -> Result<ColoringReport> {
    if let Some(&v) = c.keys().find(|v| !g.contains(**v)) {
        return Err(Error::UnknownNode(v));
    }
    let complete = g.nodes().all(|v| c.contains_key(&v));
    let proper = g.edges().all(|(u, v)| c.get(&u) != c.get(&v));
    let palette = c.values().collect::<BTreeSet<_>>().len();
    Ok(ColoringReport { legal: complete && proper, palette })
}

/// First monochromatic edge, if any.
pub fn conflict_edge(g: &Graph, c: &Coloring) -> Option<(NodeId, NodeId)> {
    g.edges().find(|(u, v)| c.contains_key(u) && c.get(u) == c.get(v))
}

pub fn verify_is(g: &Graph, set: &IndependentSet) -> Result<bool> {
    if let Some(&v) = set.iter().find(|v| !g.contains(**v)) {
        return Err(Error::UnknownNode(v));
    }
    Ok(set.iter().all(|&v| g.neighbors(v).all(|u| !set.contains(&u))))
}

/// Dense re-indexing of a graph for inner loops. Index order follows node order.
#[derive(Debug, Clone)]
pub struct Dense {
    pub ids: Vec<NodeId>,
    pub adj: Vec<Vec<usize>>,
}

impl Dense {
    pub fn new(g: &Graph) -> Self {
        let ids: Vec<NodeId> = g.nodes().collect();
        let adj = ids.iter().map(|&v| g.neighbors(v).map(|u| ids.binary_search(&u).unwrap()).collect()).collect();
        Dense { ids, adj }
    }

    pub fn index(&self, v: NodeId) -> Option<usize> {
        self.ids.binary_search(&v).ok()
    }

    pub fn len(&self) -> usize {
        self.ids.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ids.is_empty()
    }

    /// BFS distances from `src`, `usize::MAX` for unreachable.
    pub fn bfs(&self, src: usize) -> Vec<usize> {
        let mut dist = vec![usize::MAX; self.len()];
        let mut q = VecDeque::new();
        dist[src] = 0;
        q.push_back(src);
        while let Some(v) = q.pop_front() {
            for &u in &self.adj[v] {
                if dist[u] == usize::MAX {
                    dist[u] = dist[v] + 1;
                    q.push_back(u);
                }
            }
        }
        dist
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_counts() {
        let g = Graph::from_edges(&[(1, 2), (2, 3), (3, 1), (3, 4)]);
        assert_eq!(g.n(), 4);
        assert_eq!(g.m(), 4);
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(1, 2), (1, 3), (2, 3), (3, 4)]);
        assert_eq!(g.diameter(), 2);
    }

    #[test]
    fn coloring_reports() {
        let p = Graph::from_edges(&[(1, 2), (2, 3)]);
        let c: Coloring = [(1, 1), (2, 2), (3, 1)].into_iter().collect();
        assert_eq!(verify_coloring(&p, &c).unwrap(), ColoringReport { legal: true, palette: 2 });
        let e = Graph::from_edges(&[(1, 2)]);
        let c: Coloring = [(1, 1), (2, 1)].into_iter().collect();
        assert!(!verify_coloring(&e, &c).unwrap().legal);
        let c: Coloring = [(1, 1), (9, 2)].into_iter().collect();
        assert_eq!(verify_coloring(&e, &c), Err(Error::UnknownNode(9)));
    }

    #[test]
    fn independent_sets() {
        let p = Graph::from_edges(&[(1, 2), (2, 3)]);
        assert!(verify_is(&p, &[1, 3].into_iter().collect()).unwrap());
        assert!(!verify_is(&p, &[1, 2].into_iter().collect()).unwrap());
        assert_eq!(verify_is(&p, &[7].into_iter().collect()), Err(Error::UnknownNode(7)));
    }

    #[test]
    fn components_sorted() {
        let mut g = Graph::from_edges(&[(5, 6), (1, 2)]);
        g.add_node(3);
        assert_eq!(g.components(), vec![vec![1, 2], vec![3], vec![5, 6]]);
    }
}
