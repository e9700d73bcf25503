//! Maximum independent sets by branch and bound.

use crate::bitset::BitSet;
use crate::graph::{Graph, Vertex};

/// Size of a maximum independent set inside `cands`, plus the number of
/// branch-and-bound nodes visited.
pub fn max_independent_within(g: &Graph, cands: &BitSet) -> (usize, u64) {
    let mut best = 0;
    let mut nodes = 0;
    branch(g, cands.clone(), 0, &mut best, &mut nodes);
    (best, nodes)
}

/// Greedy clique partition of `cands`; its size bounds the independence
/// number of the induced subgraph from above.
fn clique_cover_bound(g: &Graph, cands: &BitSet) -> usize {
    let mut left = cands.clone();
    let mut cliques = 0;
    while let Some(v) = left.first() {
        cliques += 1;
        left.remove(v);
        let mut common = g.neighbor_set(v).clone();
        common.intersect_with(&left);
        while let Some(u) = common.first() {
            left.remove(u);
            common.remove(u);
            common.intersect_with(g.neighbor_set(u));
        }
    }
    cliques
}

fn branch(g: &Graph, mut cands: BitSet, size: usize, best: &mut usize, nodes: &mut u64) {
    *nodes += 1;
    let mut size = size;
    // Vertices of degree <= 1 within the candidates are always safe to take.
    loop {
        let mut taken = false;
        for v in cands.iter().collect::<Vec<_>>() {
            if !cands.contains(v) {
                continue;
            }
            let mut nb = g.neighbor_set(v).clone();
            nb.intersect_with(&cands);
            if nb.count() <= 1 {
                size += 1;
                cands.remove(v);
                cands.difference_with(&nb);
                taken = true;
            }
        }
        if !taken {
            break;
        }
    }
    if cands.is_empty() {
        *best = (*best).max(size);
        return;
    }
    if size + cands.count() <= *best || size + clique_cover_bound(g, &cands) <= *best {
        return;
    }
    let (v, _) = cands
        .iter()
        .map(|v| {
            let mut nb = g.neighbor_set(v).clone();
            nb.intersect_with(&cands);
            (v, nb.count())
        })
        .max_by_key(|&(v, d)| (d, std::cmp::Reverse(v)))
        .expect("non-empty candidates");

    let mut with_v = cands.clone();
    with_v.remove(v);
    with_v.difference_with(g.neighbor_set(v));
    branch(g, with_v, size + 1, best, nodes);

    let mut without_v = cands;
    without_v.remove(v);
    branch(g, without_v, size, best, nodes);
}

/// Independence number and the lexicographically least maximum independent
/// set, built greedily: each vertex in id order is taken when a maximum set
/// extending the current choice still exists.
pub fn maximum_independent_set(g: &Graph) -> (usize, Vec<Vertex>, u64) {
    let n = g.order();
    let all = BitSet::full(n);
    let (beta, mut nodes) = max_independent_within(g, &all);

    let mut chosen = Vec::with_capacity(beta);
    let mut open = all;
    for v in 0..n {
        if chosen.len() == beta {
            break;
        }
        if !open.contains(v) {
            continue;
        }
        let mut rest = open.clone();
        rest.difference_with(g.neighbor_set(v));
        for u in 0..=v {
            rest.remove(u);
        }
        let (extra, used) = max_independent_within(g, &rest);
        nodes += used;
        if chosen.len() + 1 + extra == beta {
            chosen.push(v);
            open = rest;
        } else {
            open.remove(v);
        }
    }
    debug_assert_eq!(chosen.len(), beta);
    (beta, chosen, nodes)
}
