//! Exhaustive reference computations and generators shared by the
//! integration tests. Everything here is written independently of the
//! library routines it is compared against.

#![allow(dead_code)]

use chordal_local::{gen, Graph, NodeId};
use proptest::prelude::*;
use std::collections::{BTreeSet, VecDeque};

/// Graph on nodes `1..=n` with the pairs `(i, j)`, `i < j`, whose bit is set,
/// pairs listed row by row.
pub fn from_bits(n: usize, bits: &[bool]) -> Graph {
    let mut g = Graph::new();
    let mut it = bits.iter();
    for i in 1..=n as NodeId {
        g.add_node(i);
        for j in i + 1..=n as NodeId {
            if *it.next().unwrap_or(&false) {
                g.add_edge(i, j);
            }
        }
    }
    g
}

/// Arbitrary graphs on up to `max_n` nodes.
pub fn any_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |b| from_bits(n, &b)))
}

pub fn chordal(n: std::ops::RangeInclusive<usize>, w: std::ops::RangeInclusive<usize>) -> impl Strategy<Value = Graph> {
    (n, any::<u64>(), w).prop_map(|(n, seed, w)| gen::gen_chordal(n, seed, w))
}

pub fn interval(n: std::ops::RangeInclusive<usize>) -> impl Strategy<Value = Graph> {
    (n, any::<u64>()).prop_map(|(n, seed)| gen::gen_interval(n, seed))
}

fn subsets(g: &Graph) -> (Vec<NodeId>, impl Iterator<Item = Vec<NodeId>>) {
    let ids: Vec<NodeId> = g.nodes().collect();
    let n = ids.len();
    assert!(n <= 16, "exhaustive search on {n} nodes");
    let ids2 = ids.clone();
    (ids, (0u32..1 << n).map(move |m| (0..n).filter(|i| m >> i & 1 == 1).map(|i| ids2[i]).collect()))
}

pub fn is_clique(g: &Graph, s: &[NodeId]) -> bool {
    s.iter().enumerate().all(|(i, &a)| s[i + 1..].iter().all(|&b| g.has_edge(a, b)))
}

pub fn is_independent(g: &Graph, s: &[NodeId]) -> bool {
    s.iter().enumerate().all(|(i, &a)| s[i + 1..].iter().all(|&b| !g.has_edge(a, b)))
}

/// Some node subset of size at least four induces a cycle.
pub fn has_long_induced_cycle(g: &Graph) -> bool {
    let (_, all) = subsets(g);
    for s in all.filter(|s| s.len() >= 4) {
        let h = g.induced(&s);
        if s.iter().all(|&v| h.degree(v) == 2) && h.is_connected() {
            return true;
        }
    }
    false
}

pub fn max_clique(g: &Graph) -> usize {
    subsets(g).1.filter(|s| is_clique(g, s)).map(|s| s.len()).max().unwrap_or(0)
}

pub fn max_independent(g: &Graph) -> usize {
    subsets(g).1.filter(|s| is_independent(g, s)).map(|s| s.len()).max().unwrap_or(0)
}

/// Maximal cliques as sorted id lists, in lexicographic order.
pub fn brute_maximal_cliques(g: &Graph) -> Vec<Vec<NodeId>> {
    let (ids, all) = subsets(g);
    let mut out: Vec<Vec<NodeId>> =
        all.filter(|s| !s.is_empty() && is_clique(g, s)).filter(|s| ids.iter().all(|v| s.contains(v) || !s.iter().all(|&u| g.has_edge(u, *v)))).collect();
    out.sort();
    out
}

/// Every node's later neighbors in `order` are pairwise adjacent.
pub fn is_elimination_order(g: &Graph, order: &[NodeId]) -> bool {
    order.iter().enumerate().all(|(i, &v)| {
        let later: Vec<NodeId> = order[i + 1..].iter().copied().filter(|&u| g.has_edge(u, v)).collect();
        is_clique(g, &later)
    })
}

/// Hop distances from `s` by breadth-first search over `has_edge`.
pub fn distances(g: &Graph, s: NodeId) -> std::collections::BTreeMap<NodeId, usize> {
    let mut d = std::collections::BTreeMap::from([(s, 0)]);
    let mut q = VecDeque::from([s]);
    while let Some(x) = q.pop_front() {
        for y in g.nodes() {
            if g.has_edge(x, y) && !d.contains_key(&y) {
                d.insert(y, d[&x] + 1);
                q.push_back(y);
            }
        }
    }
    d
}

/// Number of connected pieces of the subgraph on `verts` with `edges`.
pub fn pieces(verts: &BTreeSet<usize>, edges: &[(usize, usize)]) -> usize {
    let mut parent: std::collections::BTreeMap<usize, usize> = verts.iter().map(|&v| (v, v)).collect();
    fn root(p: &mut std::collections::BTreeMap<usize, usize>, mut x: usize) -> usize {
        while p[&x] != x {
            x = p[&x];
        }
        x
    }
    let mut count = verts.len();
    for &(a, b) in edges {
        if verts.contains(&a) && verts.contains(&b) {
            let (ra, rb) = (root(&mut parent, a), root(&mut parent, b));
            if ra != rb {
                parent.insert(ra, rb);
                count -= 1;
            }
        }
    }
    count
}
