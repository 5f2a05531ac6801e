//! Clique paths of interval graphs and distance queries on them.

use crate::error::{Error, Result};
use crate::forest::{maximal_cliques, mwsf, SigmaWord};
use crate::graph::{Graph, NodeId};
use std::collections::{BTreeMap, BTreeSet, HashSet};

/// Maximal cliques of one connected interval graph in an order where every
/// node occupies a contiguous run. The end with the smaller sigma word comes first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliquePath {
    pub cliques: Vec<SigmaWord>,
}

impl CliquePath {
    pub fn len(&self) -> usize {
        self.cliques.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cliques.is_empty()
    }

    pub fn nodes(&self) -> BTreeSet<NodeId> {
        self.cliques.iter().flatten().copied().collect()
    }

    /// First and last clique index of every node.
    pub fn ranges(&self) -> BTreeMap<NodeId, (usize, usize)> {
        let mut r: BTreeMap<NodeId, (usize, usize)> = BTreeMap::new();
        for (i, c) in self.cliques.iter().enumerate() {
            for &v in c {
                r.entry(v).and_modify(|e| e.1 = i).or_insert((i, i));
            }
        }
        r
    }

    /// The graph whose maximal cliques are these.
    pub fn graph(&self) -> Graph {
        let mut g = Graph::new();
        for c in &self.cliques {
            for (i, &a) in c.iter().enumerate() {
                g.add_node(a);
                for &b in &c[i + 1..] {
                    g.add_edge(a, b);
                }
            }
        }
        g
    }

    /// Whether every node's cliques are contiguous.
    pub fn is_consecutive(&self) -> bool {
        let r = self.ranges();
        let count: usize = self.cliques.iter().map(|c| c.len()).sum();
        count == r.values().map(|&(a, b)| b - a + 1).sum::<usize>()
    }

    pub(crate) fn canonicalize(mut self) -> Self {
        if self.cliques.last() < self.cliques.first() {
            self.cliques.reverse();
        }
        self
    }
}

/// One clique path per connected component, components ordered by smallest node.
pub fn clique_path(h: &Graph) -> Result<Vec<CliquePath>> {
    h.components()
        .iter()
        .map(|comp| {
            let sub = h.induced(comp);
            let cliques = maximal_cliques(&sub).map_err(|_| Error::NotInterval)?;
            let order = order_cliques(&cliques).ok_or(Error::NotInterval)?;
            let path = CliquePath { cliques: order.into_iter().map(|i| cliques[i].clone()).collect() };
            Ok(path.canonicalize())
        })
        .collect()
}

/// Arranges the cliques of a connected chordal graph so that every node's
/// cliques are contiguous, or reports that no such order exists.
///
/// Depth-first search over partial orders. The next clique must contain every
/// node of the previous clique that still has unplaced cliques and no node
/// that was already closed off. Failed states are memoized on
/// `(placed set, last clique)`, which determines the rest of the search.
/// Candidates adjacent in the clique forest are tried first, so a forest that
/// is already a path is returned without backtracking.
fn order_cliques(cliques: &[SigmaWord]) -> Option<Vec<usize>> {
    let n = cliques.len();
    if n <= 1 {
        return Some((0..n).collect());
    }
    let mut holders: BTreeMap<NodeId, Vec<usize>> = BTreeMap::new();
    for (i, c) in cliques.iter().enumerate() {
        for &v in c {
            holders.entry(v).or_default().push(i);
        }
    }
    let mut tree = vec![Vec::new(); n];
    for (a, b) in mwsf(cliques) {
        tree[a].push(b);
        tree[b].push(a);
    }
    let mut starts: Vec<usize> = (0..n).collect();
    starts.sort_by_key(|&i| (tree[i].len() > 1, i));

    struct Search<'a> {
        cliques: &'a [SigmaWord],
        holders: BTreeMap<NodeId, Vec<usize>>,
        tree: Vec<Vec<usize>>,
        rem: BTreeMap<NodeId, usize>,
        seen: BTreeSet<NodeId>,
        placed: Vec<bool>,
        bits: Vec<u64>,
        seq: Vec<usize>,
        failed: HashSet<(usize, Vec<u64>)>,
    }

    impl Search<'_> {
        fn key(&self, last: usize) -> (usize, Vec<u64>) {
            (last, self.bits.clone())
        }

        fn place(&mut self, c: usize) -> Vec<NodeId> {
            self.placed[c] = true;
            self.bits[c / 64] |= 1 << (c % 64);
            self.seq.push(c);
            let mut fresh = Vec::new();
            for &v in &self.cliques[c] {
                *self.rem.get_mut(&v).unwrap() -= 1;
                if self.seen.insert(v) {
                    fresh.push(v);
                }
            }
            fresh
        }

        fn unplace(&mut self, c: usize, fresh: Vec<NodeId>) {
            self.placed[c] = false;
            self.bits[c / 64] &= !(1 << (c % 64));
            self.seq.pop();
            for &v in &self.cliques[c] {
                *self.rem.get_mut(&v).unwrap() += 1;
            }
            for v in fresh {
                self.seen.remove(&v);
            }
        }

        /// Clique orders that may follow `last`, most promising first.
        fn candidates(&self, last: usize) -> Vec<usize> {
            let active: Vec<NodeId> = self.cliques[last].iter().copied().filter(|v| self.rem[v] > 0).collect();
            let Some(&pivot) = active.iter().min_by_key(|v| self.holders[v].len()) else {
                return Vec::new();
            };
            let mut cand: Vec<usize> = self.holders[&pivot]
                .iter()
                .copied()
                .filter(|&c| !self.placed[c])
                .filter(|&c| {
                    let word = &self.cliques[c];
                    active.iter().all(|v| word.binary_search(v).is_ok())
                        && word.iter().all(|v| !self.seen.contains(v) || self.cliques[last].binary_search(v).is_ok())
                })
                .collect();
            cand.sort_by_key(|&c| {
                let shared = self.cliques[c].iter().filter(|v| self.rem[*v] > 1).count();
                (!self.tree[last].contains(&c), shared, c)
            });
            cand
        }

        /// Completes the order from the already placed `start`, with an
        /// explicit stack since paths can hold many thousands of cliques.
        fn extend(&mut self, start: usize) -> bool {
            struct Frame {
                key: (usize, Vec<u64>),
                cand: std::vec::IntoIter<usize>,
                child: Option<(usize, Vec<NodeId>)>,
            }
            let mut stack: Vec<Frame> = Vec::new();
            let mut entered = Some(start);
            loop {
                if let Some(last) = entered.take() {
                    if self.seq.len() == self.placed.len() {
                        return true;
                    }
                    let key = self.key(last);
                    if !self.failed.contains(&key) {
                        stack.push(Frame { key, cand: self.candidates(last).into_iter(), child: None });
                    }
                }
                let Some(top) = stack.last_mut() else {
                    return false;
                };
                if let Some((c, fresh)) = top.child.take() {
                    self.unplace(c, fresh);
                }
                match top.cand.next() {
                    Some(c) => {
                        top.child = Some((c, self.place(c)));
                        entered = Some(c);
                    }
                    None => {
                        let done = stack.pop().unwrap();
                        self.failed.insert(done.key);
                    }
                }
            }
        }
    }

    let rem = holders.iter().map(|(&v, l)| (v, l.len())).collect();
    let mut s = Search {
        cliques,
        holders,
        tree,
        rem,
        seen: BTreeSet::new(),
        placed: vec![false; n],
        bits: vec![0; n.div_ceil(64)],
        seq: Vec::new(),
        failed: HashSet::new(),
    };
    for start in starts {
        let fresh = s.place(start);
        if s.extend(start) {
            return Some(s.seq);
        }
        s.unplace(start, fresh);
    }
    None
}

/// Interval layout of one clique path with constant-time range lookups and
/// distance queries that hop along the path instead of running a search.
#[derive(Debug, Clone)]
pub(crate) struct Layout {
    pub path: CliquePath,
    pub range: BTreeMap<NodeId, (usize, usize)>,
    /// Largest last index among nodes whose first index is at most `c`.
    reach: Vec<usize>,
    /// Largest last index among members of clique `c`.
    clique_hi: Vec<usize>,
    /// Smallest first index among members of clique `c`.
    clique_lo: Vec<usize>,
}

impl Layout {
    pub fn new(path: CliquePath) -> Self {
        let range = path.ranges();
        let r = path.len();
        let mut reach = vec![0; r];
        for &(a, b) in range.values() {
            reach[a] = reach[a].max(b);
        }
        for c in 1..r {
            reach[c] = reach[c].max(reach[c - 1]).max(c);
        }
        let clique_hi = path.cliques.iter().map(|c| c.iter().map(|v| range[v].1).max().unwrap()).collect();
        let clique_lo = path.cliques.iter().map(|c| c.iter().map(|v| range[v].0).min().unwrap()).collect();
        Layout { path, range, reach, clique_hi, clique_lo }
    }

    /// Hops needed from a node ending at `from` to a node starting at `to`,
    /// counting the first hop.
    fn hops(&self, mut from: usize, to: usize) -> usize {
        let mut d = 1;
        while to > from {
            let next = self.reach[from];
            if next == from {
                return usize::MAX;
            }
            from = next;
            d += 1;
        }
        d
    }

    pub fn node_dist(&self, x: NodeId, y: NodeId) -> usize {
        if x == y {
            return 0;
        }
        let (mut a, mut b) = (self.range[&x], self.range[&y]);
        if a.0 <= b.1 && b.0 <= a.1 {
            return 1;
        }
        if a.1 > b.1 {
            std::mem::swap(&mut a, &mut b);
        }
        self.hops(a.1, b.0)
    }

    /// Smallest distance between a member of clique `a` and a member of clique `b`.
    pub fn clique_dist(&self, a: usize, b: usize) -> usize {
        let (a, b) = (a.min(b), a.max(b));
        if self.clique_hi[a] >= b {
            return 0;
        }
        self.hops(self.clique_hi[a], self.clique_lo[b])
    }
}

/// Drops every node whose closed neighborhood strictly contains another node's.
pub fn remove_dominated(h: &Graph) -> Graph {
    let keep: Vec<NodeId> = h.nodes().filter(|&v| !is_dominating(h, v)).collect();
    h.induced(&keep)
}

fn is_dominating(h: &Graph, v: NodeId) -> bool {
    let nv = h.closed_nbhd(v);
    h.neighbors(v).any(|u| {
        let nu = h.neighbor_set(u).unwrap();
        nu.len() + 1 < nv.len() && nu.iter().all(|w| nv.contains(w))
    })
}

/// Whether some node has three pairwise nonadjacent neighbors. On interval
/// graphs this is exactly the failure of being proper interval.
pub(crate) fn has_claw(h: &Graph) -> bool {
    h.nodes().any(|c| {
        let nb: Vec<NodeId> = h.neighbors(c).collect();
        nb.iter().enumerate().any(|(i, &a)| {
            nb[i + 1..].iter().enumerate().any(|(j, &b)| !h.has_edge(a, b) && nb[i + j + 2..].iter().any(|&d| !h.has_edge(a, d) && !h.has_edge(b, d)))
        })
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chordal::alpha_oracle;
    use crate::gen;

    #[test]
    fn path_and_clique() {
        let p = clique_path(&gen::gen_path(5)).unwrap();
        assert_eq!(p.len(), 1);
        assert_eq!(p[0].cliques, vec![vec![1, 2], vec![2, 3], vec![3, 4], vec![4, 5]]);
        let k4 = Graph::from_edges(&[(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)]);
        assert_eq!(clique_path(&k4).unwrap()[0].len(), 1);
    }

    #[test]
    fn nested_intervals_need_reordering() {
        // Long interval 1 containing short ones; the spanning forest may be a star.
        let g = Graph::from_edges(&[(1, 2), (1, 3), (1, 4), (1, 5), (5, 6), (4, 7)]);
        let p = clique_path(&g).unwrap();
        assert!(p[0].is_consecutive());
        assert_eq!(p[0].len(), 6);
    }

    #[test]
    fn non_interval_rejected() {
        // Three long legs around a triangle: chordal, asteroidal triple.
        let g = Graph::from_edges(&[(1, 2), (2, 3), (1, 3), (1, 4), (4, 5), (2, 6), (6, 7), (3, 8), (8, 9)]);
        assert_eq!(clique_path(&g), Err(Error::NotInterval));
        assert_eq!(clique_path(&Graph::from_edges(&[(1, 2), (2, 3), (3, 4), (4, 1)])), Err(Error::NotInterval));
    }

    #[test]
    fn random_interval_graphs_have_paths() {
        for seed in 0..30 {
            let g = gen::gen_interval(80, seed);
            for p in clique_path(&g).unwrap() {
                assert!(p.is_consecutive());
                assert_eq!(p.graph(), g.induced(&p.nodes()));
            }
        }
    }

    #[test]
    fn layout_distances_match_bfs() {
        for seed in 0..10 {
            let g = gen::gen_interval(60, seed);
            for p in clique_path(&g).unwrap() {
                let sub = g.induced(&p.nodes());
                let lay = Layout::new(p);
                for x in sub.nodes() {
                    let d = sub.bfs(x, usize::MAX);
                    for y in sub.nodes() {
                        assert_eq!(lay.node_dist(x, y), d[&y]);
                    }
                }
                for a in 0..lay.path.len() {
                    let d = sub.multi_bfs(lay.path.cliques[a].iter().copied(), usize::MAX);
                    for b in 0..lay.path.len() {
                        let want = lay.path.cliques[b].iter().map(|v| d[v]).min().unwrap();
                        assert_eq!(lay.clique_dist(a, b), want);
                    }
                }
            }
        }
    }

    #[test]
    fn dominated_removal() {
        let star = Graph::from_edges(&[(1, 2), (1, 3), (1, 4)]);
        let r = remove_dominated(&star);
        assert_eq!(r.nodes().collect::<Vec<_>>(), vec![2, 3, 4]);
        assert_eq!(r.m(), 0);
        // The second node's neighborhood strictly contains the end node's.
        let p = remove_dominated(&gen::gen_path(6));
        assert_eq!(p.nodes().collect::<Vec<_>>(), vec![1, 3, 4, 6]);
        assert_eq!(remove_dominated(&gen::gen_path(2)), gen::gen_path(2));
        for seed in 0..10 {
            let g = gen::gen_interval(30, seed);
            let r = remove_dominated(&g);
            assert_eq!(alpha_oracle(&g).unwrap().len(), alpha_oracle(&r).unwrap().len());
            assert!(has_claw(&g) || r == g);
            assert!(!has_claw(&r));
        }
    }
}
