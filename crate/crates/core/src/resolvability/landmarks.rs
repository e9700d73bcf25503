//! Landmark sets, code vectors, and the definitional resolving checks.
//!
//! Everything here works directly from distance rows. The bitset-based
//! [`PairCoverIndex`](super::PairCoverIndex) path is kept separate so that the
//! two can be cross-checked.

use std::collections::HashSet;

use crate::distance::DistanceMatrix;
use crate::error::ResolveError;
use crate::graph::{Graph, Vertex};

/// An ordered set of distinct landmark vertices.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LandmarkSet(Vec<Vertex>);

impl LandmarkSet {
    pub fn new(order: usize, vertices: Vec<Vertex>) -> Result<Self, ResolveError> {
        let mut seen = HashSet::with_capacity(vertices.len());
        for &v in &vertices {
            if v >= order {
                return Err(ResolveError::InvalidLandmark { vertex: v, order });
            }
            if !seen.insert(v) {
                return Err(ResolveError::DuplicateLandmark(v));
            }
        }
        Ok(LandmarkSet(vertices))
    }

    /// Every vertex of a graph of the given order, in id order.
    pub fn all(order: usize) -> Self {
        LandmarkSet((0..order).collect())
    }

    pub fn as_slice(&self) -> &[Vertex] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// The set with the landmark at `index` removed, order otherwise kept.
    pub fn without(&self, index: usize) -> LandmarkSet {
        let mut v = self.0.clone();
        v.remove(index);
        LandmarkSet(v)
    }

    fn check_bound(&self, order: usize) -> Result<(), ResolveError> {
        match self.0.iter().find(|&&v| v >= order) {
            Some(&v) => Err(ResolveError::InvalidLandmark { vertex: v, order }),
            None => Ok(()),
        }
    }
}

/// Distances from one vertex to each landmark, in landmark order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CodeVector(pub Vec<u16>);

impl CodeVector {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl std::fmt::Display for CodeVector {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str("(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{x}")?;
        }
        f.write_str(")")
    }
}

/// One code vector per vertex, indexed by vertex id.
pub fn codes(d: &DistanceMatrix, r: &LandmarkSet) -> Result<Vec<CodeVector>, ResolveError> {
    if r.is_empty() {
        return Err(ResolveError::EmptyLandmarks);
    }
    r.check_bound(d.order())?;
    Ok((0..d.order())
        .map(|u| CodeVector(r.as_slice().iter().map(|&l| d.get(u, l)).collect()))
        .collect())
}

/// Whether the code vectors of all vertices are pairwise distinct.
pub fn is_resolving(d: &DistanceMatrix, r: &LandmarkSet) -> Result<bool, ResolveError> {
    if r.is_empty() {
        // The empty set resolves only the single-vertex graph.
        return Ok(d.order() <= 1);
    }
    let all = codes(d, r)?;
    let mut seen = HashSet::with_capacity(all.len());
    Ok(all.into_iter().all(|c| seen.insert(c)))
}

/// Fault tolerance by definition: `r` resolves, and so does `r` minus any
/// single landmark.
pub fn ft_check_by_deletion(d: &DistanceMatrix, r: &LandmarkSet) -> Result<bool, ResolveError> {
    if r.len() < 2 {
        return Err(ResolveError::TooFewLandmarks {
            min: 2,
            got: r.len(),
        });
    }
    if !is_resolving(d, r)? {
        return Ok(false);
    }
    for i in 0..r.len() {
        if !is_resolving(d, &r.without(i))? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// No two members adjacent. Ids out of range are treated as non-members of
/// the graph and make the set invalid.
pub fn is_independent(g: &Graph, s: &[Vertex]) -> bool {
    s.iter().all(|&v| v < g.order())
        && s.iter()
            .enumerate()
            .all(|(i, &u)| s[i + 1..].iter().all(|&v| u != v && !g.has_edge(u, v)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::distance::apsp;
    use crate::families::{gen_complete, gen_cycle, gen_path};

    fn ls(order: usize, v: &[Vertex]) -> LandmarkSet {
        LandmarkSet::new(order, v.to_vec()).unwrap()
    }

    #[test]
    fn landmark_validation() {
        assert_eq!(
            LandmarkSet::new(3, vec![0, 3]),
            Err(ResolveError::InvalidLandmark {
                vertex: 3,
                order: 3
            })
        );
        assert_eq!(
            LandmarkSet::new(3, vec![1, 1]),
            Err(ResolveError::DuplicateLandmark(1))
        );
        let d = apsp(&gen_path(3).unwrap());
        assert_eq!(
            codes(&d, &LandmarkSet(vec![])),
            Err(ResolveError::EmptyLandmarks)
        );
        assert!(matches!(
            codes(&d, &LandmarkSet(vec![7])),
            Err(ResolveError::InvalidLandmark { .. })
        ));
    }

    #[test]
    fn cycle_codes() {
        let d = apsp(&gen_cycle(6).unwrap());
        let c = codes(&d, &ls(6, &[0, 3])).unwrap();
        assert_eq!(c[1], CodeVector(vec![1, 2]));
        assert_eq!(c[0], CodeVector(vec![0, 3]));
        assert_eq!(c[1].to_string(), "(1,2)");
    }

    #[test]
    fn self_code_is_zero() {
        let d = apsp(&gen_cycle(5).unwrap());
        for v in 0..5 {
            assert_eq!(codes(&d, &ls(5, &[v])).unwrap()[v], CodeVector(vec![0]));
        }
    }

    #[test]
    fn resolving_examples() {
        let d = apsp(&gen_cycle(4).unwrap());
        assert!(!is_resolving(&d, &ls(4, &[0])).unwrap());
        assert!(is_resolving(&d, &LandmarkSet::all(4)).unwrap());
        let p = apsp(&gen_path(7).unwrap());
        assert!(is_resolving(&p, &ls(7, &[0])).unwrap());
    }

    #[test]
    fn deletion_check_on_cycles() {
        let c6 = apsp(&gen_cycle(6).unwrap());
        assert!(ft_check_by_deletion(&c6, &ls(6, &[0, 2, 4])).unwrap());
        let c8 = apsp(&gen_cycle(8).unwrap());
        assert!(!ft_check_by_deletion(&c8, &ls(8, &[0, 2, 4])).unwrap());
        assert!(ft_check_by_deletion(&c8, &ls(8, &[0, 2, 5])).unwrap());
        assert!(ft_check_by_deletion(&c8, &LandmarkSet::all(8)).unwrap());
        assert!(ft_check_by_deletion(&c8, &ls(8, &[0])).is_err());
    }

    #[test]
    fn independence() {
        let k3 = gen_complete(3).unwrap();
        assert!(!is_independent(&k3, &[0, 1]));
        assert!(is_independent(&k3, &[]));
        let c6 = gen_cycle(6).unwrap();
        assert!(is_independent(&c6, &[0, 2, 4]));
        assert!(!is_independent(&c6, &[0, 0]));
    }
}
