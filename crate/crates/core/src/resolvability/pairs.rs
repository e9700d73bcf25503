//! Pair-cover reformulation of the resolving condition.
//!
//! Vertex `v` distinguishes the unordered pair `{u, w}` when
//! `d(u, v) != d(w, v)`. A set resolves the graph iff every pair is
//! distinguished by at least one member, and it is fault tolerant iff every
//! pair is distinguished by at least two members.
//!
//! Pairs `{u < w}` are laid out in colex order: index `w * (w - 1) / 2 + u`.

use crate::bitset::BitSet;
use crate::distance::DistanceMatrix;
use crate::error::ResolveError;
use crate::graph::Vertex;

use super::LandmarkSet;

/// Colex index of the pair `{u, w}`, `u != w`.
#[inline]
pub fn pair_index(u: Vertex, w: Vertex) -> usize {
    let (u, w) = if u < w { (u, w) } else { (w, u) };
    debug_assert!(u != w);
    w * (w - 1) / 2 + u
}

/// Inverse of [`pair_index`].
pub fn pair_at(index: usize) -> (Vertex, Vertex) {
    let mut w = ((1.0 + (1.0 + 8.0 * index as f64).sqrt()) / 2.0) as usize;
    while w * (w - 1) / 2 > index {
        w -= 1;
    }
    while (w + 1) * w / 2 <= index {
        w += 1;
    }
    (index - w * (w - 1) / 2, w)
}

#[derive(Clone, Debug)]
pub struct PairCoverIndex {
    order: usize,
    pairs: usize,
    cover: Vec<BitSet>,
}

impl PairCoverIndex {
    pub fn new(d: &DistanceMatrix) -> Self {
        let n = d.order();
        let pairs = n * n.saturating_sub(1) / 2;
        let cover = (0..n)
            .map(|v| {
                let row = d.row(v);
                let mut bits = BitSet::new(pairs);
                for w in 1..n {
                    let base = w * (w - 1) / 2;
                    for u in 0..w {
                        if row[u] != row[w] {
                            bits.insert(base + u);
                        }
                    }
                }
                bits
            })
            .collect();
        PairCoverIndex {
            order: n,
            pairs,
            cover,
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn pair_count(&self) -> usize {
        self.pairs
    }

    /// Pairs distinguished by `v`.
    #[inline]
    pub fn cover(&self, v: Vertex) -> &BitSet {
        &self.cover[v]
    }

    /// Coverage of a vertex set: `(covered at least once, at least twice)`.
    pub fn coverage(&self, set: &[Vertex]) -> (BitSet, BitSet) {
        let mut once = BitSet::new(self.pairs);
        let mut twice = BitSet::new(self.pairs);
        for &v in set {
            accumulate(&mut once, &mut twice, &self.cover[v]);
        }
        (once, twice)
    }

    pub fn resolves(&self, set: &[Vertex]) -> bool {
        self.coverage(set).0.count() == self.pairs
    }

    pub fn resolves_fault_tolerantly(&self, set: &[Vertex]) -> bool {
        self.coverage(set).1.count() == self.pairs
    }
}

/// `twice |= once & add; once |= add`.
#[inline]
pub(crate) fn accumulate(once: &mut BitSet, twice: &mut BitSet, add: &BitSet) {
    let once_w = once.words_mut();
    let twice_w = twice.words_mut();
    for ((o, t), a) in once_w.iter_mut().zip(twice_w.iter_mut()).zip(add.words()) {
        *t |= *o & *a;
        *o |= *a;
    }
}

/// Fault tolerance via pair multiplicities: every pair distinguished by at
/// least two landmarks.
pub fn ft_check_by_count(index: &PairCoverIndex, r: &LandmarkSet) -> Result<bool, ResolveError> {
    if r.len() < 2 {
        return Err(ResolveError::TooFewLandmarks {
            min: 2,
            got: r.len(),
        });
    }
    if let Some(&v) = r.as_slice().iter().find(|&&v| v >= index.order()) {
        return Err(ResolveError::InvalidLandmark {
            vertex: v,
            order: index.order(),
        });
    }
    Ok(index.resolves_fault_tolerantly(r.as_slice()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::distance::apsp;
    use crate::families::{gen_cycle, gen_path};

    #[test]
    fn colex_layout() {
        assert_eq!(pair_index(0, 1), 0);
        assert_eq!(pair_index(0, 2), 1);
        assert_eq!(pair_index(2, 1), 2);
        assert_eq!(pair_index(0, 3), 3);
        for i in 0..500 {
            let (u, w) = pair_at(i);
            assert!(u < w);
            assert_eq!(pair_index(u, w), i);
        }
    }

    #[test]
    fn endpoints_own_their_pair() {
        let d = apsp(&gen_cycle(7).unwrap());
        let idx = PairCoverIndex::new(&d);
        for u in 0..7 {
            for w in u + 1..7 {
                assert!(idx.cover(u).contains(pair_index(u, w)));
                assert!(idx.cover(w).contains(pair_index(u, w)));
            }
        }
    }

    #[test]
    fn count_check_examples() {
        let c6 = apsp(&gen_cycle(6).unwrap());
        let idx = PairCoverIndex::new(&c6);
        let r = LandmarkSet::new(6, vec![0, 2, 4]).unwrap();
        assert!(ft_check_by_count(&idx, &r).unwrap());
        let p4 = apsp(&gen_path(4).unwrap());
        let idx = PairCoverIndex::new(&p4);
        let r = LandmarkSet::new(4, vec![0, 3]).unwrap();
        assert!(ft_check_by_count(&idx, &r).unwrap());
        let r = LandmarkSet::new(4, vec![0]).unwrap();
        assert!(ft_check_by_count(&idx, &r).is_err());
    }
}
