//! Fixed-cardinality subset search over a [`PairCoverIndex`].
//!
//! Subsets of size `k` are visited in lexicographic order by a depth-first
//! search that picks vertices in increasing id order, so the first complete
//! set found is the lexicographically least one. Optional constraints:
//!
//! - `forced` vertices must all be members. The search never skips past an
//!   unchosen forced vertex, which keeps the lexicographic order intact.
//! - `independent` restricts to sets with no internal edge.
//!
//! Pruning uses suffix coverage: from candidate position `s` onward, the
//! vertices `s..n` can still raise each pair's multiplicity by the amounts in
//! `suffix_once[s]` / `suffix_twice[s]`. A branch is cut when some pair
//! cannot reach the required multiplicity even if all of them were added.
//!
//! The top level is split by first vertex across worker threads. The answer
//! is the successful branch with the smallest first vertex, which does not
//! depend on the worker count.

use std::sync::atomic::{AtomicUsize, Ordering};

use rayon::prelude::*;

use crate::bitset::BitSet;
use crate::graph::{Graph, Vertex};

use super::pairs::{accumulate, PairCoverIndex};

/// Required number of distinguishing landmarks per pair.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Multiplicity {
    Once,
    Twice,
}

pub(crate) struct SearchSpace<'a> {
    graph: &'a Graph,
    index: &'a PairCoverIndex,
    need: Multiplicity,
    independent: bool,
    forced: BitSet,
    suffix_once: Vec<BitSet>,
    suffix_twice: Vec<BitSet>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct LevelOutcome {
    pub witness: Option<Vec<Vertex>>,
    /// Search nodes visited. Only meaningful when `witness` is `None`: a
    /// successful level may stop early in some workers.
    pub nodes: u64,
}

struct State {
    chosen: Vec<Vertex>,
    once: Vec<BitSet>,
    twice: Vec<BitSet>,
    blocked: Vec<BitSet>,
    nodes: u64,
}

impl<'a> SearchSpace<'a> {
    pub fn new(
        graph: &'a Graph,
        index: &'a PairCoverIndex,
        need: Multiplicity,
        independent: bool,
        forced: &[Vertex],
    ) -> Self {
        let n = graph.order();
        let pairs = index.pair_count();
        let mut suffix_once = vec![BitSet::new(pairs); n + 1];
        let mut suffix_twice = vec![BitSet::new(pairs); n + 1];
        for v in (0..n).rev() {
            let mut once = suffix_once[v + 1].clone();
            let mut twice = suffix_twice[v + 1].clone();
            accumulate(&mut once, &mut twice, index.cover(v));
            suffix_once[v] = once;
            suffix_twice[v] = twice;
        }
        let mut forced_set = BitSet::new(n);
        for &f in forced {
            forced_set.insert(f);
        }
        SearchSpace {
            graph,
            index,
            need,
            independent,
            forced: forced_set,
            suffix_once,
            suffix_twice,
        }
    }

    fn complete(&self, once: &BitSet, twice: &BitSet) -> bool {
        let target = match self.need {
            Multiplicity::Once => once,
            Multiplicity::Twice => twice,
        };
        target.count() == self.index.pair_count()
    }

    /// Whether adding all of `start..n` could still complete the set.
    fn feasible(&self, once: &BitSet, twice: &BitSet, start: usize) -> bool {
        let so = self.suffix_once[start].words();
        let st = self.suffix_twice[start].words();
        let full = self.index.pair_count();
        let mut covered = 0usize;
        match self.need {
            Multiplicity::Once => {
                for (o, s) in once.words().iter().zip(so) {
                    covered += (o | s).count_ones() as usize;
                }
            }
            Multiplicity::Twice => {
                for (((o, t), s1), s2) in once.words().iter().zip(twice.words()).zip(so).zip(st) {
                    covered += (t | (o & s1) | s2).count_ones() as usize;
                }
            }
        }
        covered == full
    }

    /// Inclusive candidate range for the next pick, or `None` when the
    /// branch is dead.
    fn candidate_range(&self, start: usize, remaining: usize) -> Option<(usize, usize)> {
        let n = self.graph.order();
        if remaining == 0 || start + remaining > n {
            return None;
        }
        let mut forced_iter = self.forced.iter().filter(|&f| f >= start);
        let next_forced = forced_iter.next();
        let forced_left = next_forced.map_or(0, |_| 1 + forced_iter.count());
        if forced_left > remaining {
            return None;
        }
        let mut hi = n - remaining;
        if let Some(f) = next_forced {
            if forced_left == remaining {
                return Some((f, f));
            }
            hi = hi.min(f);
        }
        Some((start, hi))
    }

    fn new_state(&self, k: usize) -> State {
        let pairs = self.index.pair_count();
        let n = self.graph.order();
        State {
            chosen: Vec::with_capacity(k),
            once: vec![BitSet::new(pairs); k + 1],
            twice: vec![BitSet::new(pairs); k + 1],
            blocked: vec![BitSet::new(n); k + 1],
            nodes: 0,
        }
    }

    fn push(&self, st: &mut State, depth: usize, v: Vertex) {
        let (lo, hi) = st.once.split_at_mut(depth + 1);
        hi[0].clone_from(&lo[depth]);
        let (lo_t, hi_t) = st.twice.split_at_mut(depth + 1);
        hi_t[0].clone_from(&lo_t[depth]);
        accumulate(&mut hi[0], &mut hi_t[0], self.index.cover(v));
        if self.independent {
            let (lo_b, hi_b) = st.blocked.split_at_mut(depth + 1);
            hi_b[0].clone_from(&lo_b[depth]);
            hi_b[0].union_with(self.graph.neighbor_set(v));
        }
        st.chosen.push(v);
    }

    fn dfs(&self, st: &mut State, depth: usize, start: usize, k: usize, abort: &Abort) -> bool {
        st.nodes += 1;
        if depth == k {
            return self.complete(&st.once[depth], &st.twice[depth]);
        }
        if abort.cancelled() {
            return false;
        }
        if !self.feasible(&st.once[depth], &st.twice[depth], start) {
            return false;
        }
        let remaining = k - depth;
        if remaining == 1
            && self.need == Multiplicity::Twice
            && st.once[depth].count() != self.index.pair_count()
        {
            return false;
        }
        let Some((lo, hi)) = self.candidate_range(start, remaining) else {
            return false;
        };
        for v in lo..=hi {
            if self.independent && st.blocked[depth].contains(v) {
                continue;
            }
            self.push(st, depth, v);
            if self.dfs(st, depth + 1, v + 1, k, abort) {
                return true;
            }
            st.chosen.pop();
        }
        false
    }

    fn run_branch(
        &self,
        first: Vertex,
        k: usize,
        best: &AtomicUsize,
    ) -> (Option<Vec<Vertex>>, u64) {
        let mut st = self.new_state(k);
        self.push(&mut st, 0, first);
        let abort = Abort { best, mine: first };
        let found = self.dfs(&mut st, 1, first + 1, k, &abort);
        if found {
            best.fetch_min(first, Ordering::SeqCst);
            (Some(st.chosen), st.nodes)
        } else {
            (None, st.nodes)
        }
    }

    /// Lexicographically least size-`k` set meeting the constraints.
    pub fn search_level(&self, k: usize, workers: usize) -> LevelOutcome {
        if k == 0 {
            let ok = self.forced.is_empty()
                && self.complete(
                    &BitSet::new(self.index.pair_count()),
                    &BitSet::new(self.index.pair_count()),
                );
            return LevelOutcome {
                witness: ok.then(Vec::new),
                nodes: 1,
            };
        }
        let root = self.new_state(k);
        if !self.feasible(&root.once[0], &root.twice[0], 0) {
            return LevelOutcome {
                witness: None,
                nodes: 1,
            };
        }
        let Some((lo, hi)) = self.candidate_range(0, k) else {
            return LevelOutcome {
                witness: None,
                nodes: 1,
            };
        };
        let best = AtomicUsize::new(usize::MAX);
        let results: Vec<(Option<Vec<Vertex>>, u64)> = if workers <= 1 {
            let mut out = Vec::new();
            for first in lo..=hi {
                let r = self.run_branch(first, k, &best);
                let done = r.0.is_some();
                out.push(r);
                if done {
                    break;
                }
            }
            out
        } else {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(workers)
                .build()
                .expect("thread pool");
            pool.install(|| {
                (lo..=hi)
                    .into_par_iter()
                    .map(|first| self.run_branch(first, k, &best))
                    .collect()
            })
        };
        let nodes = 1 + results.iter().map(|r| r.1).sum::<u64>();
        let witness = results.into_iter().find_map(|r| r.0);
        LevelOutcome { witness, nodes }
    }
}

struct Abort<'a> {
    best: &'a AtomicUsize,
    mine: Vertex,
}

impl Abort<'_> {
    #[inline]
    fn cancelled(&self) -> bool {
        self.best.load(Ordering::Relaxed) < self.mine
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::distance::apsp;
    use crate::families::{gen_complete, gen_cycle, gen_path};

    fn level(
        g: &Graph,
        need: Multiplicity,
        ind: bool,
        forced: &[Vertex],
        k: usize,
        w: usize,
    ) -> LevelOutcome {
        let idx = PairCoverIndex::new(&apsp(g));
        SearchSpace::new(g, &idx, need, ind, forced).search_level(k, w)
    }

    #[test]
    fn path_resolved_by_endpoints() {
        let g = gen_path(5).unwrap();
        assert_eq!(
            level(&g, Multiplicity::Once, false, &[], 1, 1).witness,
            Some(vec![0])
        );
        assert_eq!(
            level(&g, Multiplicity::Twice, false, &[], 2, 1).witness,
            Some(vec![0, 4])
        );
    }

    #[test]
    fn cycle_eight_independent_ft() {
        let g = gen_cycle(8).unwrap();
        let out = level(&g, Multiplicity::Twice, true, &[], 3, 1);
        assert_eq!(out.witness, Some(vec![0, 2, 5]));
        for w in [2, 4] {
            assert_eq!(
                level(&g, Multiplicity::Twice, true, &[], 3, w).witness,
                Some(vec![0, 2, 5])
            );
        }
    }

    #[test]
    fn forced_vertices_are_included() {
        let g = gen_complete(4).unwrap();
        assert_eq!(
            level(&g, Multiplicity::Once, false, &[3], 3, 1).witness,
            Some(vec![0, 1, 3])
        );
        assert_eq!(
            level(&g, Multiplicity::Twice, false, &[0, 1, 2, 3], 3, 1).witness,
            None
        );
        assert_eq!(
            level(&g, Multiplicity::Twice, false, &[0, 1, 2, 3], 4, 1).witness,
            Some(vec![0, 1, 2, 3])
        );
    }

    #[test]
    fn exhausted_levels_count_deterministically() {
        let g = gen_cycle(9).unwrap();
        let a = level(&g, Multiplicity::Twice, false, &[], 2, 1);
        let b = level(&g, Multiplicity::Twice, false, &[], 2, 3);
        assert_eq!(a.witness, None);
        assert_eq!(a, b);
    }
}
