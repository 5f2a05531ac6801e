//! Sparse selection along a line.
//!
//! Elements sit on a line and carry unique labels. Two elements conflict when
//! their distance is at most `t`, where distance is monotone along the line.
//! [`sparse_select`] returns a maximal conflict-free subset. It only ever
//! compares labels and distances of nearby elements, never positions, so a
//! reversed line gives the same set and a truncated line agrees away from the
//! cut.

use crate::graph::NodeId;

/// Bit `i` of a word label. Each id contributes a set marker bit followed by
/// its 32 bits; the word ends with a clear marker bit.
fn word_bit(w: &[NodeId], i: usize) -> u64 {
    let (block, off) = (i / 33, i % 33);
    match w.get(block) {
        None => 0,
        Some(_) if off == 0 => 1,
        Some(&x) => (x as u64 >> (off - 1)) & 1,
    }
}

fn word_diff(a: &[NodeId], b: &[NodeId]) -> usize {
    for block in 0.. {
        match (a.get(block), b.get(block)) {
            (Some(x), Some(y)) if x == y => continue,
            (Some(x), Some(y)) => return block * 33 + 1 + (x ^ y).trailing_zeros() as usize,
            _ => return block * 33,
        }
    }
    unreachable!()
}

/// Rooted forest on a run: `parent[i]` is an index into the run.
fn cole_vishkin(labels: &[&[NodeId]], parent: &[Option<usize>]) -> Vec<u64> {
    let n = labels.len();
    let mut color: Vec<u64> = (0..n)
        .map(|i| {
            let idx = match parent[i] {
                Some(p) => word_diff(labels[i], labels[p]),
                None => 0,
            };
            2 * idx as u64 + word_bit(labels[i], idx)
        })
        .collect();
    // Five more halving steps take any 32-bit-block label below 6.
    for _ in 0..5 {
        color = (0..n)
            .map(|i| {
                let idx = match parent[i] {
                    Some(p) => (color[i] ^ color[p]).trailing_zeros() as u64,
                    None => 0,
                };
                2 * idx + ((color[i] >> idx) & 1)
            })
            .collect();
    }
    debug_assert!(color.iter().all(|&c| c < 6));
    let mut children = vec![Vec::new(); n];
    for (i, p) in parent.iter().enumerate() {
        if let Some(p) = *p {
            children[p].push(i);
        }
    }
    for high in [5, 4, 3] {
        color = (0..n)
            .map(|i| match parent[i] {
                Some(p) => color[p],
                None => (0..3).find(|&c| c != color[i]).unwrap(),
            })
            .collect();
        for i in 0..n {
            if color[i] == high {
                let used: Vec<u64> = parent[i].iter().chain(&children[i]).map(|&j| color[j]).collect();
                color[i] = (0..3).find(|c| !used.contains(c)).unwrap();
            }
        }
    }
    color
}

/// Maximal independent set of a path given by its labels in order.
fn path_mis(labels: &[&[NodeId]]) -> Vec<bool> {
    let n = labels.len();
    let nbrs = |i: usize| (i.checked_sub(1)).into_iter().chain((i + 1 < n).then_some(i + 1));
    // Orient every edge toward the larger label; each node keeps at most two
    // outgoing edges, split into two forests by label.
    let mut p1 = vec![None; n];
    let mut p2 = vec![None; n];
    for i in 0..n {
        let mut up: Vec<usize> = nbrs(i).filter(|&j| labels[j] > labels[i]).collect();
        up.sort_by_key(|&j| labels[j]);
        p1[i] = up.first().copied();
        p2[i] = up.get(1).copied();
    }
    let c1 = cole_vishkin(labels, &p1);
    let c2 = cole_vishkin(labels, &p2);
    let mut color: Vec<u64> = (0..n).map(|i| 3 * c1[i] + c2[i]).collect();
    for high in 3..9 {
        for i in 0..n {
            if color[i] == high {
                let used: Vec<u64> = nbrs(i).map(|j| color[j]).collect();
                color[i] = (0..3).find(|c| !used.contains(c)).unwrap();
            }
        }
    }
    let mut chosen = vec![false; n];
    for class in 0..3 {
        for i in 0..n {
            if color[i] == class && !nbrs(i).any(|j| chosen[j]) {
                chosen[i] = true;
            }
        }
    }
    chosen
}

fn scales(t: usize) -> Vec<usize> {
    let mut s = vec![1];
    while *s.last().unwrap() < t {
        s.push((s.last().unwrap() * 2).min(t));
    }
    s
}

/// Levels allowed at the first scale and at every later one. Each level
/// halves the density of linked members at least, so these cover any line
/// with fewer than 2^8 mutually close elements.
const FIRST_LEVELS: usize = 8;
const LEVELS: usize = 2;
/// Hops between run neighbors spent by one level: linking, six Cole–Vishkin
/// steps and three shift-downs of two hops, six reductions, three selections.
const LEVEL_HOPS: usize = 22;

/// Distance beyond which nothing influences an element's membership in the
/// output of [`sparse_select`], when `dist` exceeds hop distance by at most
/// two between run neighbors.
pub(crate) fn sparse_radius(t: usize) -> usize {
    let levels: usize = scales(t.max(1)).iter().map(|&s| if s == 1 { FIRST_LEVELS } else { LEVELS } * LEVEL_HOPS * (s + 2)).sum();
    levels + 2 * t + 4
}

/// Maximal subset of `0..labels.len()` whose members are pairwise at
/// distance greater than `t`, returned in ascending order. `dist(i, j)` is
/// only called with `i < j` and must be monotone along the line.
pub(crate) fn sparse_select(labels: &[&[NodeId]], dist: &dyn Fn(usize, usize) -> usize, t: usize) -> Vec<usize> {
    let n = labels.len();
    let mut members: Vec<usize> = (0..n).collect();
    for s in scales(t.max(1)) {
        for level in 0.. {
            debug_assert!(level <= if s == 1 { FIRST_LEVELS } else { LEVELS }, "too many levels at scale {s}");
            let linked: Vec<bool> = members.windows(2).map(|w| dist(w[0], w[1]) <= s).collect();
            if !linked.contains(&true) {
                break;
            }
            let mut keep = Vec::with_capacity(members.len());
            let mut i = 0;
            while i < members.len() {
                let mut j = i;
                while j < linked.len() && linked[j] {
                    j += 1;
                }
                let run: Vec<&[NodeId]> = members[i..=j].iter().map(|&m| labels[m]).collect();
                let chosen = path_mis(&run);
                keep.extend((i..=j).filter(|&x| chosen[x - i]).map(|x| members[x]));
                i = j + 1;
            }
            members = keep;
        }
    }
    let Some(&first) = members.first() else { return members };
    let last = *members.last().unwrap();
    let mut out = members.clone();
    let mut anchor = first;
    for x in (0..first).rev() {
        if dist(x, anchor) > t {
            out.push(x);
            anchor = x;
        }
    }
    anchor = last;
    for x in last + 1..n {
        if dist(anchor, x) > t {
            out.push(x);
            anchor = x;
        }
    }
    for w in members.windows(2) {
        let (a, b) = (w[0], w[1]);
        if labels[a] < labels[b] {
            let mut prev = a;
            for x in a + 1..b {
                if dist(prev, x) > t && dist(x, b) > t {
                    out.push(x);
                    prev = x;
                }
            }
        } else {
            let mut prev = b;
            for x in (a + 1..b).rev() {
                if dist(x, prev) > t && dist(a, x) > t {
                    out.push(x);
                    prev = x;
                }
            }
        }
    }
    out.sort_unstable();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ids(n: u32, perm: u32) -> Vec<Vec<NodeId>> {
        (0..n).map(|i| vec![(i * perm) % 1009 + 1]).collect()
    }

    #[test]
    fn bits_and_diffs() {
        assert_eq!(word_bit(&[5], 0), 1);
        assert_eq!(word_bit(&[5], 1), 1);
        assert_eq!(word_bit(&[5], 2), 0);
        assert_eq!(word_bit(&[5], 33), 0);
        assert_eq!(word_diff(&[4], &[5]), 1);
        assert_eq!(word_diff(&[4], &[4, 1]), 33);
        let (a, b) = ([7, 9], [7, 8]);
        let i = word_diff(&a, &b);
        assert_ne!(word_bit(&a, i), word_bit(&b, i));
    }

    #[test]
    fn path_mis_is_maximal() {
        for perm in [1, 7, 31, 101] {
            let l = ids(200, perm);
            let refs: Vec<&[NodeId]> = l.iter().map(|v| v.as_slice()).collect();
            let c = path_mis(&refs);
            for i in 0..c.len() {
                let left = i > 0 && c[i - 1];
                let right = i + 1 < c.len() && c[i + 1];
                assert!(!(c[i] && (left || right)));
                assert!(c[i] || left || right);
            }
        }
    }

    fn check(n: u32, t: usize, perm: u32) {
        let l = ids(n, perm);
        let refs: Vec<&[NodeId]> = l.iter().map(|v| v.as_slice()).collect();
        let d = |i: usize, j: usize| j - i;
        let s = sparse_select(&refs, &d, t);
        for w in s.windows(2) {
            assert!(w[1] - w[0] > t);
        }
        for x in 0..n as usize {
            assert!(s.iter().any(|&y| x.abs_diff(y) <= t), "{x} not covered");
        }
        let rev: Vec<&[NodeId]> = refs.iter().rev().copied().collect();
        let mut back: Vec<usize> = sparse_select(&rev, &d, t).into_iter().map(|i| n as usize - 1 - i).collect();
        back.sort_unstable();
        assert_eq!(back, s);
    }

    #[test]
    fn spacing_coverage_and_reversal() {
        for t in [1, 2, 5, 13] {
            for perm in [1, 3, 17, 211] {
                check(150, t, perm);
            }
        }
        check(1, 4, 1);
    }
}
