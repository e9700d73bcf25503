//! Resolving sets, their fault-tolerant and independent variants, and exact
//! minimum searches.
//!
//! [`Instance`] bundles a graph with the derived structures every search
//! needs (distances, pair-cover index, twin partition). All exact solvers
//! enumerate cardinalities in ascending order and return a [`Certificate`]
//! carrying the lexicographically least optimal witness.

mod certificate;
mod chain;
mod independence;
mod landmarks;
mod pairs;
mod search;

use std::time::Instant;

pub use certificate::{Certificate, Evidence, Invariant, Status};
pub use chain::{chain_check, ChainCheck, ChainReport};
pub use independence::{max_independent_within, maximum_independent_set};
pub use landmarks::{
    codes, ft_check_by_deletion, is_independent, is_resolving, CodeVector, LandmarkSet,
};
pub use pairs::{ft_check_by_count, pair_at, pair_index, PairCoverIndex};
pub use search::Multiplicity;

use crate::distance::{apsp, DistanceMatrix};
use crate::graph::{Graph, Vertex};
use crate::twins::{twin_classes, TwinKind, TwinPartition};

use search::SearchSpace;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolveOptions {
    /// Worker threads for the subset search. Results do not depend on it.
    pub workers: usize,
    /// Cardinality cap for `ir` and `ifr`; `None` means `beta`.
    pub max_k: Option<usize>,
    /// Use twin classes to seed forced vertices and to short-cut
    /// nonexistence. Disabling gives a plain exhaustive search.
    pub twin_shortcuts: bool,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions {
            workers: 1,
            max_k: None,
            twin_shortcuts: true,
        }
    }
}

/// Bounds derived from twin classes and the metric dimension.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundReport {
    /// Union of twin classes of size >= 2; every fault-tolerant resolving
    /// set contains all of them.
    pub forced: Vec<Vertex>,
    /// A resolving set keeps all but one vertex of each twin class.
    pub resolving_lower: usize,
    /// `dim + 1`, when the metric dimension is known.
    pub dim_plus_one: Option<usize>,
}

impl BoundReport {
    pub fn fdim_lower(&self) -> usize {
        self.forced.len().max(self.dim_plus_one.unwrap_or(0)).max(2)
    }
}

pub struct Instance<'g> {
    graph: &'g Graph,
    dist: DistanceMatrix,
    index: PairCoverIndex,
    twins: TwinPartition,
}

impl<'g> Instance<'g> {
    pub fn new(graph: &'g Graph) -> Self {
        let dist = apsp(graph);
        let index = PairCoverIndex::new(&dist);
        let twins = twin_classes(graph);
        Instance {
            graph,
            dist,
            index,
            twins,
        }
    }

    pub fn graph(&self) -> &Graph {
        self.graph
    }

    pub fn distances(&self) -> &DistanceMatrix {
        &self.dist
    }

    pub fn index(&self) -> &PairCoverIndex {
        &self.index
    }

    pub fn twins(&self) -> &TwinPartition {
        &self.twins
    }

    pub fn lower_bounds(&self, dim: Option<&Certificate>) -> BoundReport {
        let mut forced: Vec<Vertex> = self
            .twins
            .nontrivial()
            .flat_map(|c| c.members.iter().copied())
            .collect();
        forced.sort_unstable();
        let resolving_lower = self.twins.classes.iter().map(|c| c.len() - 1).sum();
        let dim_plus_one = dim
            .filter(|c| c.status == Status::Value)
            .and_then(|c| c.value)
            .map(|d| d + 1);
        BoundReport {
            forced,
            resolving_lower,
            dim_plus_one,
        }
    }

    /// Searches cardinalities `from..=to` in order; returns the first witness
    /// and the per-level node counts of the levels exhausted before it.
    fn ascend(
        &self,
        space: &SearchSpace<'_>,
        from: usize,
        to: usize,
        workers: usize,
    ) -> (Option<Vec<Vertex>>, Vec<(usize, u64)>) {
        let mut levels = Vec::new();
        for k in from..=to {
            let out = space.search_level(k, workers);
            match out.witness {
                Some(w) => return (Some(w), levels),
                None => levels.push((k, out.nodes)),
            }
        }
        (None, levels)
    }

    fn found(
        invariant: Invariant,
        witness: Vec<Vertex>,
        lower_bound: usize,
        levels: Vec<(usize, u64)>,
        search_limit: Option<usize>,
        start: Instant,
    ) -> Certificate {
        Certificate {
            invariant,
            status: Status::Value,
            value: Some(witness.len()),
            witness: Some(witness),
            lower_bound,
            levels,
            search_limit,
            evidence: None,
            wall_time: start.elapsed(),
        }
    }

    fn absent(
        invariant: Invariant,
        status: Status,
        lower_bound: usize,
        levels: Vec<(usize, u64)>,
        search_limit: Option<usize>,
        evidence: Option<Evidence>,
        start: Instant,
    ) -> Certificate {
        Certificate {
            invariant,
            status,
            value: None,
            witness: None,
            lower_bound,
            levels,
            search_limit,
            evidence,
            wall_time: start.elapsed(),
        }
    }

    /// Minimum resolving set. The single-vertex graph has dimension 0.
    pub fn metric_dimension(&self, opts: &SolveOptions) -> Certificate {
        let start = Instant::now();
        let n = self.graph.order();
        if n == 1 {
            return Self::found(Invariant::Dim, Vec::new(), 0, Vec::new(), None, start);
        }
        let lower = if opts.twin_shortcuts {
            self.lower_bounds(None).resolving_lower.max(1)
        } else {
            1
        };
        let space = SearchSpace::new(self.graph, &self.index, Multiplicity::Once, false, &[]);
        let (w, levels) = self.ascend(&space, lower, n, opts.workers);
        let w = w.expect("the full vertex set always resolves");
        Self::found(Invariant::Dim, w, lower, levels, None, start)
    }

    /// Minimum fault-tolerant resolving set.
    pub fn ftmd(&self, opts: &SolveOptions) -> Certificate {
        let start = Instant::now();
        let n = self.graph.order();
        if n < 2 {
            return Self::absent(
                Invariant::Fdim,
                Status::Undefined,
                2,
                Vec::new(),
                Some(n),
                Some(Evidence::TooFewVertices),
                start,
            );
        }
        let dim = self.metric_dimension(opts);
        let bounds = self.lower_bounds(Some(&dim));
        let (forced, lower) = if opts.twin_shortcuts {
            (bounds.forced.clone(), bounds.fdim_lower())
        } else {
            (Vec::new(), bounds.dim_plus_one.unwrap_or(2).max(2))
        };
        let space = SearchSpace::new(self.graph, &self.index, Multiplicity::Twice, false, &forced);
        let (w, levels) = self.ascend(&space, lower, n, opts.workers);
        let w = w.expect("the full vertex set is fault tolerant for n >= 2");
        Self::found(Invariant::Fdim, w, lower, levels, None, start)
    }

    fn clique_twin_class(&self, min_size: usize) -> Option<Vec<Vertex>> {
        self.twins
            .classes
            .iter()
            .find(|c| c.kind == TwinKind::Clique && c.len() >= min_size)
            .map(|c| c.members.clone())
    }

    /// Minimum independent resolving set, if any exists.
    pub fn ir(&self, opts: &SolveOptions) -> Certificate {
        let start = Instant::now();
        let n = self.graph.order();
        if n == 1 {
            return Self::found(Invariant::Ir, Vec::new(), 0, Vec::new(), Some(1), start);
        }
        let (beta, _, _) = maximum_independent_set(self.graph);
        let limit = opts.max_k.map_or(beta, |cap| cap.min(beta));
        let mut lower = 1;
        if opts.twin_shortcuts {
            if let Some(class) = self.clique_twin_class(3) {
                return Self::absent(
                    Invariant::Ir,
                    Status::Undefined,
                    lower,
                    Vec::new(),
                    Some(beta),
                    Some(Evidence::LargeCliqueTwinClass(class)),
                    start,
                );
            }
            lower = lower.max(self.lower_bounds(None).resolving_lower);
        }
        let space = SearchSpace::new(self.graph, &self.index, Multiplicity::Once, true, &[]);
        let (w, levels) = self.ascend(&space, lower, limit, opts.workers);
        match w {
            Some(w) => Self::found(Invariant::Ir, w, lower, levels, Some(limit), start),
            None => {
                let status = if limit >= beta {
                    Status::Undefined
                } else {
                    Status::UnknownBeyondCap
                };
                Self::absent(
                    Invariant::Ir,
                    status,
                    lower,
                    levels,
                    Some(limit),
                    None,
                    start,
                )
            }
        }
    }

    /// Minimum independent fault-tolerant resolving set, if any exists.
    ///
    /// Nonexistence is proven either by enumerating independent sets through
    /// `beta`, or by a twin class inducing a clique (all its members are
    /// forced into every fault-tolerant resolving set).
    pub fn ifr(&self, opts: &SolveOptions) -> Certificate {
        let start = Instant::now();
        let n = self.graph.order();
        let (beta, _, _) = maximum_independent_set(self.graph);
        if n < 2 {
            return Self::absent(
                Invariant::Ifr,
                Status::Undefined,
                2,
                Vec::new(),
                Some(beta),
                Some(Evidence::TooFewVertices),
                start,
            );
        }
        let limit = opts.max_k.map_or(beta, |cap| cap.min(beta));
        let mut forced = Vec::new();
        let mut lower = 2;
        if opts.twin_shortcuts {
            if let Some(class) = self.clique_twin_class(2) {
                return Self::absent(
                    Invariant::Ifr,
                    Status::Undefined,
                    lower,
                    Vec::new(),
                    Some(beta),
                    Some(Evidence::CliqueTwinClass(class)),
                    start,
                );
            }
            forced = self.lower_bounds(None).forced;
            lower = lower.max(forced.len());
        }
        let space = SearchSpace::new(self.graph, &self.index, Multiplicity::Twice, true, &forced);
        let (w, levels) = self.ascend(&space, lower, limit, opts.workers);
        match w {
            Some(w) => Self::found(Invariant::Ifr, w, lower, levels, Some(limit), start),
            None => {
                let status = if limit >= beta {
                    Status::Undefined
                } else {
                    Status::UnknownBeyondCap
                };
                Self::absent(
                    Invariant::Ifr,
                    status,
                    lower,
                    levels,
                    Some(limit),
                    None,
                    start,
                )
            }
        }
    }

    pub fn independence_number(&self) -> Certificate {
        let start = Instant::now();
        let (beta, witness, nodes) = maximum_independent_set(self.graph);
        let mut cert = Self::found(Invariant::Beta, witness, beta, Vec::new(), None, start);
        cert.value = Some(beta);
        cert.levels = vec![(beta + 1, nodes)];
        cert
    }

    pub fn solve(&self, invariant: Invariant, opts: &SolveOptions) -> Certificate {
        match invariant {
            Invariant::Dim => self.metric_dimension(opts),
            Invariant::Fdim => self.ftmd(opts),
            Invariant::Ir => self.ir(opts),
            Invariant::Ifr => self.ifr(opts),
            Invariant::Beta => self.independence_number(),
        }
    }

    /// Re-checks a certificate against the definitions, independently of the
    /// search that produced it.
    pub fn verify(&self, cert: &Certificate) -> bool {
        let g = self.graph;
        let d = &self.dist;
        match cert.status {
            Status::Value => {
                let Some(w) = &cert.witness else {
                    return false;
                };
                if cert.value != Some(w.len()) {
                    return false;
                }
                let Ok(r) = LandmarkSet::new(g.order(), w.clone()) else {
                    return false;
                };
                let resolves = || is_resolving(d, &r).unwrap_or(false);
                let ft = || w.len() >= 2 && ft_check_by_deletion(d, &r).unwrap_or(false);
                match cert.invariant {
                    Invariant::Dim => resolves(),
                    Invariant::Fdim => ft(),
                    Invariant::Ir => is_independent(g, w) && resolves(),
                    Invariant::Ifr => is_independent(g, w) && ft(),
                    Invariant::Beta => {
                        is_independent(g, w) && maximum_independent_set(g).0 == w.len()
                    }
                }
            }
            Status::Undefined => {
                let beta = maximum_independent_set(g).0;
                match &cert.evidence {
                    Some(Evidence::TooFewVertices) => g.order() < 2,
                    Some(Evidence::CliqueTwinClass(c)) => self.is_clique_twin_class(c, 2),
                    Some(Evidence::LargeCliqueTwinClass(c)) => self.is_clique_twin_class(c, 3),
                    None => {
                        cert.search_limit == Some(beta)
                            && cert.exhausted_through().is_some_and(|k| k >= beta)
                    }
                }
            }
            Status::UnknownBeyondCap => cert
                .search_limit
                .is_some_and(|lim| cert.exhausted_through().is_some_and(|k| k >= lim)),
        }
    }

    fn is_clique_twin_class(&self, members: &[Vertex], min: usize) -> bool {
        members.len() >= min
            && self
                .twins
                .classes
                .iter()
                .any(|c| c.members == members && c.kind == TwinKind::Clique)
    }
}

pub fn metric_dimension_exact(g: &Graph) -> Certificate {
    Instance::new(g).metric_dimension(&SolveOptions::default())
}

pub fn ftmd_exact(g: &Graph) -> Certificate {
    Instance::new(g).ftmd(&SolveOptions::default())
}

pub fn ir_exact(g: &Graph) -> Certificate {
    Instance::new(g).ir(&SolveOptions::default())
}

pub fn ifr_exact(g: &Graph, max_k: Option<usize>) -> Certificate {
    Instance::new(g).ifr(&SolveOptions {
        max_k,
        ..SolveOptions::default()
    })
}

pub fn independence_number_exact(g: &Graph) -> Certificate {
    Instance::new(g).independence_number()
}

pub fn lower_bounds(g: &Graph) -> BoundReport {
    let inst = Instance::new(g);
    let dim = inst.metric_dimension(&SolveOptions::default());
    inst.lower_bounds(Some(&dim))
}
