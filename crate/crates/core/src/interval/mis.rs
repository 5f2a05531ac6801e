//! Independent sets on interval graphs.

use super::path::{clique_path, has_claw, remove_dominated, Layout};
use super::sparse::{sparse_radius, sparse_select};
use crate::error::{Error, Result};
use crate::graph::{Graph, IndependentSet, NodeId};
use std::collections::{BTreeMap, BTreeSet};

/// Proper interval component with twins merged: one entry per distinct clique
/// range, in path order, represented by its smallest member.
struct Line {
    lay: Layout,
    classes: Vec<Vec<NodeId>>,
}

impl Line {
    fn new(lay: Layout) -> Self {
        let mut by_range: BTreeMap<(usize, usize), Vec<NodeId>> = BTreeMap::new();
        for (&v, &r) in &lay.range {
            by_range.entry(r).or_default().push(v);
        }
        Line { lay, classes: by_range.into_values().collect() }
    }

    fn rep(&self, i: usize) -> NodeId {
        self.classes[i][0]
    }

    fn dist(&self, i: usize, j: usize) -> usize {
        self.lay.node_dist(self.rep(i), self.rep(j))
    }

    fn labels(&self) -> Vec<[NodeId; 1]> {
        (0..self.classes.len()).map(|i| [self.rep(i)]).collect()
    }

    fn sparse(&self, t: usize) -> Vec<usize> {
        let labels = self.labels();
        let refs: Vec<&[NodeId]> = labels.iter().map(|l| l.as_slice()).collect();
        sparse_select(&refs, &|i, j| self.dist(i, j), t)
    }

    /// Greedy maximum independent set over `idx`, scanning in the given order.
    fn greedy(&self, idx: impl Iterator<Item = usize>) -> Vec<usize> {
        let mut out: Vec<usize> = Vec::new();
        for i in idx {
            if out.last().is_none_or(|&j| self.dist(i.min(j), i.max(j)) > 1) {
                out.push(i);
            }
        }
        out
    }
}

fn proper_lines(h: &Graph) -> Result<Vec<Line>> {
    if has_claw(h) {
        return Err(Error::NotProperInterval);
    }
    let paths = clique_path(h).map_err(|_| Error::NotProperInterval)?;
    Ok(paths.into_iter().map(|p| Line::new(Layout::new(p))).collect())
}

/// Maximal set of nodes pairwise more than `k` apart, per component.
pub fn distance_k_mis(h: &Graph, k: usize) -> Result<IndependentSet> {
    let mut out = IndependentSet::new();
    for line in proper_lines(h)? {
        out.extend(line.sparse(k.max(1)).into_iter().map(|i| line.rep(i)));
    }
    Ok(out)
}

/// Anchors of the large-diameter branch and the node sets solved between them.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct AnchorPairs {
    pub anchors: IndependentSet,
    /// Consecutive anchors along each component, smaller position first.
    pub pairs: Vec<(NodeId, NodeId)>,
    /// Nodes strictly between the two anchors and adjacent to neither.
    pub between: BTreeMap<(NodeId, NodeId), BTreeSet<NodeId>>,
}

/// `k = ceil(2.5 / eps + 0.5)` for `eps` in `(0, 1)`.
pub fn mis_interval_k(eps: f64) -> Result<usize> {
    if !(eps > 0.0 && eps < 1.0) {
        return Err(Error::BadEpsilon(eps));
    }
    Ok((2.5 / eps + 0.5).ceil() as usize)
}

fn pair_ranges(line: &Line, anchors: &[usize]) -> Vec<(usize, usize, Vec<usize>)> {
    anchors
        .windows(2)
        .map(|w| {
            let (a, b) = (w[0], w[1]);
            let inner = (a + 1..b).filter(|&i| line.dist(a, i) > 1 && line.dist(i, b) > 1).collect();
            (a, b, inner)
        })
        .collect()
}

/// Hop radius that determines a node's membership under [`mis_interval`]:
/// enough to tell whether its component is short, and otherwise to see the
/// anchors on both sides together with everything between them.
pub fn mis_interval_radius(eps: f64) -> Result<usize> {
    let k = mis_interval_k(eps)?;
    Ok((sparse_radius(k) + 2 * k + 6).max(10 * k + 2) + 4)
}

/// Anchor bookkeeping of [`mis_interval`] on `remove_dominated(h)`.
pub fn anchor_pairs(h: &Graph, k: usize) -> Result<AnchorPairs> {
    let mut out = AnchorPairs::default();
    for line in proper_lines(&remove_dominated(h))? {
        let anchors = line.sparse(k);
        out.anchors.extend(anchors.iter().map(|&i| line.rep(i)));
        for (a, b, inner) in pair_ranges(&line, &anchors) {
            let pair = (line.rep(a), line.rep(b));
            out.pairs.push(pair);
            out.between.insert(pair, inner.iter().flat_map(|&i| line.classes[i].iter().copied()).collect());
        }
    }
    Ok(out)
}

/// Independent set of size at least `alpha / (1 + eps)`.
///
/// Works on the proper interval graph left by [`remove_dominated`]. A
/// component of diameter at most `10k` is solved exactly. A larger one gets
/// anchors pairwise more than `k` apart, an exact solution of the nodes
/// strictly between consecutive anchors that avoid both, and exact solutions
/// of the two end pieces.
pub fn mis_interval(h: &Graph, eps: f64) -> Result<IndependentSet> {
    let k = mis_interval_k(eps)?;
    clique_path(h)?;
    let lines = proper_lines(&remove_dominated(h)).map_err(|_| Error::NotInterval)?;
    let mut out = IndependentSet::new();
    for line in lines {
        let n = line.classes.len();
        let chosen: Vec<usize> = if line.dist(0, n - 1) <= 10 * k {
            line.greedy(0..n)
        } else {
            let anchors = line.sparse(k);
            let mut chosen = anchors.clone();
            for (a, b, inner) in pair_ranges(&line, &anchors) {
                assert!(line.dist(a, b) <= 2 * k + 1, "consecutive anchors too far apart");
                if line.rep(a) < line.rep(b) {
                    chosen.extend(line.greedy(inner.into_iter()));
                } else {
                    chosen.extend(line.greedy(inner.into_iter().rev()));
                }
            }
            let (lo, hi) = (anchors[0], *anchors.last().unwrap());
            chosen.extend(line.greedy((0..lo).filter(|&i| line.dist(i, lo) > 1)));
            chosen.extend(line.greedy((hi + 1..n).rev().filter(|&i| line.dist(hi, i) > 1)));
            chosen
        };
        out.extend(chosen.into_iter().map(|i| line.rep(i)));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chordal::alpha_oracle;
    use crate::gen;
    use crate::graph::verify_is;

    fn check_distance(h: &Graph, k: usize) {
        let s = distance_k_mis(h, k).unwrap();
        for &v in &s {
            let d = h.bfs(v, k);
            assert!(s.iter().all(|u| *u == v || !d.contains_key(u)));
        }
        let cover = h.multi_bfs(s.iter().copied(), k);
        assert_eq!(cover.len(), h.n());
    }

    #[test]
    fn distance_mis_on_paths_and_cliques() {
        check_distance(&gen::gen_path(10), 3);
        check_distance(&gen::gen_path(300), 7);
        let k4 = Graph::from_edges(&[(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)]);
        assert_eq!(distance_k_mis(&k4, 5).unwrap().len(), 1);
        let star = Graph::from_edges(&[(1, 2), (1, 3), (1, 4)]);
        assert_eq!(distance_k_mis(&star, 2), Err(Error::NotProperInterval));
    }

    #[test]
    fn distance_mis_on_random_proper() {
        for seed in 0..5 {
            check_distance(&remove_dominated(&gen::gen_interval(200, seed)), 6);
        }
    }

    #[test]
    fn epsilon_range() {
        assert_eq!(mis_interval_k(0.25).unwrap(), 11);
        assert!(mis_interval_k(1.0).is_err());
        assert!(mis_interval_k(0.0).is_err());
    }

    #[test]
    fn rejects_non_interval() {
        // Removing dominated nodes would leave isolated nodes here.
        let spider = gen::gen_spider(3, 2);
        assert_eq!(mis_interval(&spider, 0.5), Err(Error::NotInterval));
        let c4 = Graph::from_edges(&[(1, 2), (2, 3), (3, 4), (1, 4)]);
        assert_eq!(mis_interval(&c4, 0.5), Err(Error::NotInterval));
    }

    #[test]
    fn small_components_are_exact() {
        for seed in 0..10 {
            let g = gen::gen_interval(40, seed);
            let s = mis_interval(&g, 0.5).unwrap();
            assert!(verify_is(&g, &s).unwrap());
            assert_eq!(s.len(), alpha_oracle(&g).unwrap().len());
        }
    }

    #[test]
    fn long_path_ratio() {
        let g = gen::gen_path(500);
        let s = mis_interval(&g, 0.25).unwrap();
        assert!(verify_is(&g, &s).unwrap());
        assert!(s.len() >= 200);
        let ap = anchor_pairs(&g, 11).unwrap();
        for (pair, inner) in &ap.between {
            let (du, dv) = (g.bfs(pair.0, usize::MAX), g.bfs(pair.1, usize::MAX));
            let duv = du[&pair.1];
            assert!(duv <= 23);
            for w in inner {
                assert!(du[w] > 1 && dv[w] > 1 && du[w].max(dv[w]) <= duv);
            }
        }
    }
}
