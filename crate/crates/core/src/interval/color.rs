//! Coloring interval graphs with `omega + floor(omega / k) + 1` colors.

use super::path::{clique_path, CliquePath, Layout};
use super::sparse::{sparse_radius, sparse_select};
use crate::error::{Error, Result};
use crate::graph::{Coloring, Graph, NodeId};
use std::collections::{BTreeMap, BTreeSet, HashSet};

/// `floor((1 + 1/k) * omega) + 1`.
pub fn interval_budget(omega: usize, k: usize) -> u32 {
    (omega + omega / k.max(1) + 1) as u32
}

/// Hop radius that determines a node's color under [`color_interval`]:
/// the boundary selection, the segment between two boundaries, and slack
/// for cliques cut at the edge of a view.
pub fn color_radius(k: usize) -> usize {
    sparse_radius(k.max(1) + 2) + 2 * k + 16
}

/// Extends `fixed` to a legal coloring of the whole path graph with colors
/// `1..=budget`, scanning from the first clique toward the last.
pub fn extend_coloring(path: &CliquePath, budget: u32, fixed: &Coloring) -> Result<Coloring> {
    let g = path.graph();
    let range = path.ranges();
    let mut order: Vec<NodeId> = range.keys().copied().filter(|v| !fixed.contains_key(v)).collect();
    order.sort_by_key(|v| (range[v], *v));
    extend_in_order(&g, &range, &order, fixed, budget)
}

fn extend_in_order(g: &Graph, range: &BTreeMap<NodeId, (usize, usize)>, order: &[NodeId], fixed: &Coloring, budget: u32) -> Result<Coloring> {
    let infeasible = Err(Error::Infeasible { budget });
    if fixed.values().any(|&c| c == 0 || c > budget) || fixed.iter().any(|(v, c)| g.neighbors(*v).any(|u| fixed.get(&u) == Some(c))) {
        return infeasible;
    }
    let omega = range.values().fold(BTreeMap::<usize, usize>::new(), |mut m, &(a, b)| {
        for i in a..=b {
            *m.entry(i).or_default() += 1;
        }
        m
    });
    if omega.values().any(|&w| w > budget as usize) {
        return infeasible;
    }
    let pos: BTreeMap<NodeId, usize> = order.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let back: Vec<Vec<usize>> = order.iter().map(|v| g.neighbors(*v).filter_map(|u| pos.get(&u).copied()).filter(|&q| q < pos[v]).collect()).collect();
    let blocked: Vec<BTreeSet<u32>> = order.iter().map(|v| g.neighbors(*v).filter_map(|u| fixed.get(&u).copied()).collect()).collect();
    // Colors held by fixed nodes further along the scan; using them early is
    // what makes a greedy pass run out of colors at the far end.
    let ahead: Vec<BTreeSet<u32>> = order.iter().map(|v| fixed.iter().filter(|(u, _)| range[*u].0 > range[v].1).map(|(_, &c)| c).collect()).collect();
    let start: Vec<usize> = order.iter().map(|v| range[v].0).collect();

    struct Dfs<'a> {
        back: &'a [Vec<usize>],
        blocked: &'a [BTreeSet<u32>],
        ahead: &'a [BTreeSet<u32>],
        last: Vec<usize>,
        start: &'a [usize],
        budget: u32,
        color: Vec<u32>,
        failed: HashSet<(usize, Vec<u32>)>,
    }

    impl Dfs<'_> {
        fn key(&self, p: usize) -> (usize, Vec<u32>) {
            let s = self.start[p];
            (p, (0..p).filter(|&q| self.last[q] >= s).map(|q| self.color[q]).collect())
        }

        fn run(&mut self, p: usize) -> bool {
            if p == self.color.len() {
                return true;
            }
            let key = self.key(p);
            if self.failed.contains(&key) {
                return false;
            }
            let used: BTreeSet<u32> = self.back[p].iter().map(|&q| self.color[q]).collect();
            let mut cand: Vec<u32> = (1..=self.budget).filter(|c| !used.contains(c) && !self.blocked[p].contains(c)).collect();
            cand.sort_by_key(|c| (self.ahead[p].contains(c), *c));
            for c in cand {
                self.color[p] = c;
                if self.run(p + 1) {
                    return true;
                }
            }
            self.color[p] = 0;
            self.failed.insert(key);
            false
        }
    }

    let mut dfs = Dfs {
        back: &back,
        blocked: &blocked,
        ahead: &ahead,
        last: order.iter().map(|v| range[v].1).collect(),
        start: &start,
        budget,
        color: vec![0; order.len()],
        failed: HashSet::new(),
    };
    if !dfs.run(0) {
        return infeasible;
    }
    let mut out = fixed.clone();
    out.extend(order.iter().copied().zip(dfs.color));
    Ok(out)
}

/// Legal coloring with at most `floor((1 + 1/k) * omega) + 1` colors.
///
/// Cliques pairwise at distance at least `k + 3` are picked as boundaries by
/// [`sparse_select`] and colored by increasing id. Every segment between two
/// boundaries is then filled by [`extend_coloring`], and the two tails by a
/// greedy pass away from the outermost boundary.
pub fn color_interval(h: &Graph, k: usize) -> Result<Coloring> {
    color_paths(clique_path(h)?, k)
}

/// [`color_interval`] on components whose clique paths are already known.
pub fn color_paths(paths: Vec<CliquePath>, k: usize) -> Result<Coloring> {
    let mut out = Coloring::new();
    for p in paths {
        out.extend(color_component(&Layout::new(p), k.max(1))?);
    }
    Ok(out)
}

fn color_component(lay: &Layout, k: usize) -> Result<Coloring> {
    let cliques = &lay.path.cliques;
    let labels: Vec<&[NodeId]> = cliques.iter().map(|c| c.as_slice()).collect();
    let bounds = sparse_select(&labels, &|a, b| lay.clique_dist(a, b), k + 2);
    let mut color = Coloring::new();
    for &b in &bounds {
        color.extend(cliques[b].iter().copied().zip(1..));
    }
    for w in bounds.windows(2) {
        let (a, b) = (w[0], w[1]);
        let mut seg = CliquePath { cliques: cliques[a..=b].to_vec() };
        if labels[b] < labels[a] {
            seg.cliques.reverse();
        }
        let fixed: Coloring = cliques[a].iter().chain(&cliques[b]).map(|v| (*v, color[v])).collect();
        let omega = seg.cliques.iter().map(|c| c.len()).max().unwrap();
        let budget = interval_budget(omega, k).max(fixed.values().copied().max().unwrap());
        color.extend(extend_coloring(&seg, budget, &fixed)?);
    }
    let (lo, hi) = (bounds[0], *bounds.last().unwrap());
    let mut left: Vec<NodeId> = lay.range.iter().filter(|(_, r)| r.1 < lo).map(|(v, _)| *v).collect();
    left.sort_by_key(|v| (std::cmp::Reverse(lay.range[v]), *v));
    let mut right: Vec<NodeId> = lay.range.iter().filter(|(_, r)| r.0 > hi).map(|(v, _)| *v).collect();
    right.sort_by_key(|v| (lay.range[v], *v));
    let g = lay.path.graph();
    for v in left.into_iter().chain(right) {
        let used: BTreeSet<u32> = g.neighbors(v).filter_map(|u| color.get(&u).copied()).collect();
        color.insert(v, (1..).find(|c| !used.contains(c)).unwrap());
    }
    Ok(color)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chordal::omega_oracle;
    use crate::gen;
    use crate::graph::verify_coloring;

    fn single(p: Graph) -> CliquePath {
        clique_path(&p).unwrap().remove(0)
    }

    #[test]
    fn path_extension_with_slack() {
        let p = single(gen::gen_path(12));
        let fixed: Coloring = [(1, 1), (12, 1)].into_iter().collect();
        let c = extend_coloring(&p, 3, &fixed).unwrap();
        let r = verify_coloring(&gen::gen_path(12), &c).unwrap();
        assert!(r.legal && r.palette <= 3);
        assert_eq!((c[&1], c[&12]), (1, 1));
    }

    #[test]
    fn budget_below_clique_size() {
        let p = single(gen::gen_path(6));
        assert_eq!(extend_coloring(&p, 1, &Coloring::new()), Err(Error::Infeasible { budget: 1 }));
    }

    #[test]
    fn clique_gets_exactly_its_size() {
        let mut k5 = Graph::new();
        for a in 1..=5 {
            for b in a + 1..=5 {
                k5.add_edge(a, b);
            }
        }
        let c = color_interval(&k5, 3).unwrap();
        assert_eq!(verify_coloring(&k5, &c).unwrap().palette, 5);
    }

    #[test]
    fn random_interval_budget() {
        for seed in 0..15 {
            let g = gen::gen_interval(300, seed);
            let omega = omega_oracle(&g).unwrap();
            for k in [2, 4, 10] {
                let c = color_interval(&g, k).unwrap();
                let r = verify_coloring(&g, &c).unwrap();
                assert!(r.legal);
                assert!(r.palette as u32 <= interval_budget(omega, k), "seed {seed} k {k}");
            }
        }
    }
}
