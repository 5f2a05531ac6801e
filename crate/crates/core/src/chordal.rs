//! Maximum cardinality search, chordality, and exact oracles.

use crate::error::{Error, Result};
use crate::graph::{Coloring, Dense, Graph, IndependentSet, NodeId};
use std::cmp::Reverse;
use std::collections::BTreeSet;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EliminationOrder {
    /// Reverse of the maximum cardinality search visit sequence.
    pub order: Vec<NodeId>,
    /// Whether `order` is a perfect elimination ordering.
    pub is_perfect: bool,
}

/// Elimination order as dense indices, plus each index's position in it.
pub(crate) fn mcs_dense(d: &Dense) -> (Vec<usize>, Vec<usize>) {
    let n = d.len();
    let mut weight = vec![0usize; n];
    let mut done = vec![false; n];
    let mut queue: BTreeSet<(Reverse<usize>, usize)> = (0..n).map(|v| (Reverse(0), v)).collect();
    let mut visit = Vec::with_capacity(n);
    while let Some((_, v)) = queue.pop_first() {
        done[v] = true;
        visit.push(v);
        for &u in &d.adj[v] {
            if !done[u] {
                queue.remove(&(Reverse(weight[u]), u));
                weight[u] += 1;
                queue.insert((Reverse(weight[u]), u));
            }
        }
    }
    visit.reverse();
    let mut pos = vec![0; n];
    for (i, &v) in visit.iter().enumerate() {
        pos[v] = i;
    }
    (visit, pos)
}

/// Neighbors of `v` that come after it in the order.
pub(crate) fn later(d: &Dense, pos: &[usize], v: usize) -> Vec<usize> {
    let mut l: Vec<usize> = d.adj[v].iter().copied().filter(|&u| pos[u] > pos[v]).collect();
    l.sort_by_key(|&u| pos[u]);
    l
}

pub(crate) fn is_peo(d: &Dense, order: &[usize], pos: &[usize]) -> bool {
    let mut mark = vec![usize::MAX; d.len()];
    for &v in order {
        let l = later(d, pos, v);
        let Some((&p, rest)) = l.split_first() else { continue };
        for &u in &d.adj[p] {
            mark[u] = p;
        }
        if rest.iter().any(|&u| mark[u] != p) {
            return false;
        }
    }
    true
}

/// Maximum cardinality search with ties broken by smallest identifier.
pub fn mcs_order(g: &Graph) -> EliminationOrder {
    let d = Dense::new(g);
    let (order, pos) = mcs_dense(&d);
    let is_perfect = is_peo(&d, &order, &pos);
    EliminationOrder { order: order.into_iter().map(|v| d.ids[v]).collect(), is_perfect }
}

pub fn is_chordal(g: &Graph) -> bool {
    mcs_order(g).is_perfect
}

fn perfect_order(g: &Graph) -> Result<(Dense, Vec<usize>, Vec<usize>)> {
    let d = Dense::new(g);
    let (order, pos) = mcs_dense(&d);
    if !is_peo(&d, &order, &pos) {
        return Err(Error::NotChordal);
    }
    Ok((d, order, pos))
}

/// Clique number, equal to the chromatic number on chordal graphs.
pub fn omega_oracle(g: &Graph) -> Result<usize> {
    let (d, order, pos) = perfect_order(g)?;
    Ok(order.iter().map(|&v| 1 + later(&d, &pos, v).len()).max().unwrap_or(0))
}

/// Maximum independent set by greedy selection along the elimination order.
pub fn alpha_oracle(g: &Graph) -> Result<IndependentSet> {
    let (d, order, _) = perfect_order(g)?;
    let mut gone = vec![false; d.len()];
    let mut set = IndependentSet::new();
    for v in order {
        if gone[v] {
            continue;
        }
        set.insert(d.ids[v]);
        gone[v] = true;
        for &u in &d.adj[v] {
            gone[u] = true;
        }
    }
    Ok(set)
}

/// Greedy coloring along the reverse elimination order; optimal on chordal graphs.
pub fn greedy_peo_coloring(g: &Graph) -> Result<Coloring> {
    let (d, order, _) = perfect_order(g)?;
    let mut color = vec![0u32; d.len()];
    for &v in order.iter().rev() {
        let used: BTreeSet<u32> = d.adj[v].iter().map(|&u| color[u]).collect();
        color[v] = (1..).find(|c| !used.contains(c)).unwrap();
    }
    Ok(d.ids.iter().copied().zip(color).collect())
}

pub const BRUTE_ALPHA_LIMIT: usize = 20;
pub const BRUTE_CHROMATIC_LIMIT: usize = 12;

fn masks(g: &Graph) -> Vec<u32> {
    let d = Dense::new(g);
    d.adj.iter().map(|a| a.iter().fold(0u32, |m, &u| m | 1 << u)).collect()
}

/// Exact independence number by exhaustive branching.
pub fn brute_alpha(g: &Graph) -> Result<usize> {
    if g.n() > BRUTE_ALPHA_LIMIT {
        return Err(Error::TooLarge { n: g.n(), limit: BRUTE_ALPHA_LIMIT });
    }
    fn best(nb: &[u32], avail: u32) -> usize {
        if avail == 0 {
            return 0;
        }
        let v = avail.trailing_zeros() as usize;
        let without = best(nb, avail & !(1 << v));
        let with = 1 + best(nb, avail & !(1 << v) & !nb[v]);
        with.max(without)
    }
    let nb = masks(g);
    let all = if g.n() == 32 { u32::MAX } else { (1u32 << g.n()) - 1 };
    Ok(best(&nb, all))
}

/// Exact chromatic number by backtracking over increasing palettes.
pub fn brute_chromatic(g: &Graph) -> Result<usize> {
    if g.n() > BRUTE_CHROMATIC_LIMIT {
        return Err(Error::TooLarge { n: g.n(), limit: BRUTE_CHROMATIC_LIMIT });
    }
    fn fill(nb: &[u32], colors: &mut [usize], v: usize, k: usize) -> bool {
        if v == colors.len() {
            return true;
        }
        for c in 1..=k {
            let clash = (0..v).any(|u| nb[v] >> u & 1 == 1 && colors[u] == c);
            if !clash {
                colors[v] = c;
                if fill(nb, colors, v + 1, k) {
                    return true;
                }
            }
        }
        colors[v] = 0;
        false
    }
    let nb = masks(g);
    let mut colors = vec![0; g.n()];
    Ok((0..=g.n()).find(|&k| fill(&nb, &mut colors, 0, k)).unwrap_or(0))
}
