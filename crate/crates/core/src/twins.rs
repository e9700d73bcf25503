//! Distance-similar (twin) vertex classes.
//!
//! Two vertices are twins when every other vertex sees them at the same
//! distance. In a connected graph this holds exactly when they are adjacent
//! with equal closed neighborhoods, or non-adjacent with equal open
//! neighborhoods. The relation is an equivalence, and every class induces
//! either a clique or an independent set.

use crate::graph::{Graph, Vertex};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TwinKind {
    Singleton,
    Independent,
    Clique,
}

impl TwinKind {
    pub fn as_str(self) -> &'static str {
        match self {
            TwinKind::Singleton => "singleton",
            TwinKind::Independent => "independent",
            TwinKind::Clique => "clique",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwinClass {
    /// Sorted members.
    pub members: Vec<Vertex>,
    pub kind: TwinKind,
}

impl TwinClass {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

/// Classes ordered by their smallest member.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwinPartition {
    pub classes: Vec<TwinClass>,
}

impl TwinPartition {
    /// Classes with at least two members.
    pub fn nontrivial(&self) -> impl Iterator<Item = &TwinClass> {
        self.classes.iter().filter(|c| c.len() >= 2)
    }

    /// Index of the class containing each vertex.
    pub fn class_of(&self, order: usize) -> Vec<usize> {
        let mut out = vec![usize::MAX; order];
        for (ci, c) in self.classes.iter().enumerate() {
            for &v in &c.members {
                out[v] = ci;
            }
        }
        out
    }
}

pub fn are_twins(g: &Graph, u: Vertex, v: Vertex) -> bool {
    if u == v {
        return true;
    }
    if g.has_edge(u, v) {
        g.closed_neighbor_set(u) == g.closed_neighbor_set(v)
    } else {
        g.neighbor_set(u) == g.neighbor_set(v)
    }
}

pub fn twin_classes(g: &Graph) -> TwinPartition {
    let n = g.order();
    let mut assigned = vec![false; n];
    let mut classes = Vec::new();
    for u in 0..n {
        if assigned[u] {
            continue;
        }
        assigned[u] = true;
        let mut members = vec![u];
        for v in u + 1..n {
            if !assigned[v] && are_twins(g, u, v) {
                assigned[v] = true;
                members.push(v);
            }
        }
        let kind = match members.as_slice() {
            [_] => TwinKind::Singleton,
            [a, b, ..] if g.has_edge(*a, *b) => TwinKind::Clique,
            _ => TwinKind::Independent,
        };
        classes.push(TwinClass { members, kind });
    }
    TwinPartition { classes }
}
