//! Deterministic instance generators.

use crate::graph::{Graph, NodeId};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Clique bound used when a caller does not pick one.
pub const DEFAULT_MAX_CLIQUE: usize = 5;

/// Random chordal graph built from a random clique tree.
///
/// The root bag holds `min(n, max_clique)` nodes, so the clique number is
/// exactly that value. Every further bag hangs off a uniformly chosen earlier
/// bag, keeps a random nonempty part of it and adds fresh nodes. Identifiers
/// are a random permutation of `1..=n`.
pub fn gen_chordal(n: usize, seed: u64, max_clique: usize) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let max_clique = max_clique.max(1);
    let mut g = Graph::new();
    if n == 0 {
        return g;
    }
    let mut label: Vec<NodeId> = (1..=n as NodeId).collect();
    label.shuffle(&mut rng);
    for &v in &label {
        g.add_node(v);
    }
    if max_clique == 1 {
        return g;
    }
    let mut bags: Vec<Vec<usize>> = Vec::new();
    let root = n.min(max_clique);
    bags.push((0..root).collect());
    let mut next = root;
    while next < n {
        let parent = &bags[rng.gen_range(0..bags.len())];
        let keep = rng.gen_range(1..=parent.len().min(max_clique - 1));
        let fresh = rng.gen_range(1..=(max_clique - keep).min(n - next));
        let mut bag: Vec<usize> = parent.choose_multiple(&mut rng, keep).copied().collect();
        bag.extend(next..next + fresh);
        next += fresh;
        bags.push(bag);
    }
    for bag in &bags {
        for (i, &a) in bag.iter().enumerate() {
            for &b in &bag[i + 1..] {
                g.add_edge(label[a], label[b]);
            }
        }
    }
    g
}

/// Intersection graph of `n` random integer intervals `[l, l + len]` with
/// `l` in `[0, n)` and `len` in `[1, 6]`. Node `i` is the `i`-th interval.
pub fn gen_interval(n: usize, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let iv: Vec<(u64, u64)> = (0..n)
        .map(|_| {
            let l = rng.gen_range(0..n.max(1) as u64);
            (l, l + rng.gen_range(1..=6))
        })
        .collect();
    let mut by_left: Vec<usize> = (0..n).collect();
    by_left.sort_by_key(|&i| iv[i]);
    let mut g = Graph::new();
    for i in 0..n {
        g.add_node(i as NodeId + 1);
    }
    for (a, &i) in by_left.iter().enumerate() {
        for &j in &by_left[a + 1..] {
            if iv[j].0 > iv[i].1 {
                break;
            }
            g.add_edge(i as NodeId + 1, j as NodeId + 1);
        }
    }
    g
}

pub fn gen_path(n: usize) -> Graph {
    let mut g = Graph::new();
    for v in 1..=n as NodeId {
        g.add_node(v);
        if v > 1 {
            g.add_edge(v - 1, v);
        }
    }
    g
}

/// Spine `1..=spine` with `legs` leaves on every spine node.
pub fn gen_caterpillar(spine: usize, legs: usize) -> Graph {
    let mut g = gen_path(spine);
    let mut next = spine as NodeId + 1;
    for s in 1..=spine as NodeId {
        for _ in 0..legs {
            g.add_edge(s, next);
            next += 1;
        }
    }
    g
}

/// Center node 1 with `legs` paths of `leg_len` nodes each.
pub fn gen_spider(legs: usize, leg_len: usize) -> Graph {
    let mut g = Graph::new();
    g.add_node(1);
    let mut next = 2;
    for _ in 0..legs {
        let mut prev = 1;
        for _ in 0..leg_len {
            g.add_edge(prev, next);
            prev = next;
            next += 1;
        }
    }
    g
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chordal::{is_chordal, omega_oracle};

    #[test]
    fn chordal_generator() {
        assert_eq!(gen_chordal(1, 42, 5).n(), 1);
        let g = gen_chordal(50, 9, 5);
        assert_eq!(g.n(), 50);
        assert!(is_chordal(&g));
        assert!(g.is_connected());
        assert_eq!(omega_oracle(&g).unwrap(), 5);
        assert_eq!(gen_chordal(50, 9, 5), g);
        assert_ne!(gen_chordal(50, 10, 5), g);
        assert_eq!(gen_chordal(7, 1, 1).m(), 0);
    }

    #[test]
    fn structured_generators() {
        assert_eq!(gen_path(4).edges().collect::<Vec<_>>(), vec![(1, 2), (2, 3), (3, 4)]);
        let s = gen_spider(3, 10);
        assert_eq!(s.n(), 31);
        assert_eq!(s.nodes().filter(|&v| s.degree(v) == 3).count(), 1);
        let c = gen_caterpillar(5, 3);
        assert_eq!(c.n(), 20);
        assert_eq!(c.m(), 19);
    }

    #[test]
    fn interval_generator() {
        let g = gen_interval(30, 2);
        assert_eq!(g.n(), 30);
        assert!(is_chordal(&g));
        assert_eq!(gen_interval(30, 2), g);
    }
}
