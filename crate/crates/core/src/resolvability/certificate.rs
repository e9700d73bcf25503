//! Search certificates and their text serialization.
//!
//! A certificate is rendered as `key: value` lines in a fixed order:
//!
//! ```text
//! invariant: fdim
//! status: value
//! value: 4
//! witness: j^1_1+j^2_1+j^4_1+j^5_1
//! witness_ids: 0 1 3 4
//! lower_bound: 4
//! exhausted_through: 3
//! levels: 4:0
//! search_limit: -
//! evidence: -
//! order: 18
//! size: 42
//! input_sha256: ...
//! wall_time_ms: 3
//! ```
//!
//! `levels` lists `k:nodes` for every cardinality that was fully enumerated
//! without finding a set. `wall_time_ms` is omitted when timing is disabled,
//! and is the only field that may vary between identical runs.

use std::fmt::Write as _;
use std::time::Duration;

use crate::graph::{Graph, Vertex};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Invariant {
    Dim,
    Fdim,
    Ir,
    Ifr,
    Beta,
}

impl Invariant {
    pub fn name(self) -> &'static str {
        match self {
            Invariant::Dim => "dim",
            Invariant::Fdim => "fdim",
            Invariant::Ir => "ir",
            Invariant::Ifr => "ifr",
            Invariant::Beta => "beta",
        }
    }

    pub fn from_name(s: &str) -> Option<Self> {
        [
            Invariant::Dim,
            Invariant::Fdim,
            Invariant::Ir,
            Invariant::Ifr,
            Invariant::Beta,
        ]
        .into_iter()
        .find(|i| i.name() == s)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Status {
    Value,
    Undefined,
    UnknownBeyondCap,
}

impl Status {
    pub fn name(self) -> &'static str {
        match self {
            Status::Value => "value",
            Status::Undefined => "undefined",
            Status::UnknownBeyondCap => "unknown_beyond_cap",
        }
    }
}

/// Why a value is known not to exist without full enumeration.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Evidence {
    /// A twin class inducing a clique. Every fault-tolerant resolving set
    /// contains the whole class, so none is independent.
    CliqueTwinClass(Vec<Vertex>),
    /// A clique twin class of size >= 3: any resolving set holds at least two
    /// adjacent members.
    LargeCliqueTwinClass(Vec<Vertex>),
    /// Not enough vertices for any candidate set.
    TooFewVertices,
}

impl Evidence {
    pub fn render(&self, label: &dyn Fn(Vertex) -> String) -> String {
        let join = |vs: &[Vertex]| vs.iter().map(|&v| label(v)).collect::<Vec<_>>().join("+");
        match self {
            Evidence::CliqueTwinClass(c) => format!("clique_twin_class {}", join(c)),
            Evidence::LargeCliqueTwinClass(c) => format!("large_clique_twin_class {}", join(c)),
            Evidence::TooFewVertices => "too_few_vertices".to_string(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    pub invariant: Invariant,
    pub status: Status,
    pub value: Option<usize>,
    /// Sorted witness set, lexicographically least among optima.
    pub witness: Option<Vec<Vertex>>,
    /// Cardinality the search started from; sizes below it are excluded by
    /// a proven bound rather than by enumeration.
    pub lower_bound: usize,
    /// `(k, nodes)` for each fully enumerated cardinality without a solution.
    pub levels: Vec<(usize, u64)>,
    /// Largest cardinality the search was allowed to reach (`beta` or the
    /// cap for the independent invariants).
    pub search_limit: Option<usize>,
    pub evidence: Option<Evidence>,
    pub wall_time: Duration,
}

impl Certificate {
    /// Largest cardinality known to admit no feasible set.
    pub fn exhausted_through(&self) -> Option<usize> {
        let enumerated = self.levels.iter().map(|&(k, _)| k).max();
        let bounded = self.lower_bound.checked_sub(1);
        enumerated.max(bounded)
    }

    pub fn is_definite(&self) -> bool {
        self.status != Status::UnknownBeyondCap
    }

    /// Text form with vertices rendered by `label`.
    pub fn render(&self, g: &Graph, label: &dyn Fn(Vertex) -> String, timing: bool) -> String {
        let dash = || "-".to_string();
        let mut out = String::new();
        let _ = writeln!(out, "invariant: {}", self.invariant.name());
        let _ = writeln!(out, "status: {}", self.status.name());
        let _ = writeln!(
            out,
            "value: {}",
            self.value.map_or_else(dash, |v| v.to_string())
        );
        let (names, ids) = match &self.witness {
            Some(w) if w.is_empty() => ("{}".to_string(), "{}".to_string()),
            Some(w) => (
                w.iter().map(|&v| label(v)).collect::<Vec<_>>().join("+"),
                w.iter()
                    .map(|v| v.to_string())
                    .collect::<Vec<_>>()
                    .join(" "),
            ),
            None => (dash(), dash()),
        };
        let _ = writeln!(out, "witness: {names}");
        let _ = writeln!(out, "witness_ids: {ids}");
        let _ = writeln!(out, "lower_bound: {}", self.lower_bound);
        let _ = writeln!(
            out,
            "exhausted_through: {}",
            self.exhausted_through()
                .map_or_else(dash, |v| v.to_string())
        );
        let levels = if self.levels.is_empty() {
            dash()
        } else {
            self.levels
                .iter()
                .map(|(k, n)| format!("{k}:{n}"))
                .collect::<Vec<_>>()
                .join(",")
        };
        let _ = writeln!(out, "levels: {levels}");
        let _ = writeln!(
            out,
            "search_limit: {}",
            self.search_limit.map_or_else(dash, |v| v.to_string())
        );
        let _ = writeln!(
            out,
            "evidence: {}",
            self.evidence
                .as_ref()
                .map_or_else(dash, |e| e.render(label))
        );
        let _ = writeln!(out, "order: {}", g.order());
        let _ = writeln!(out, "size: {}", g.size());
        let _ = writeln!(out, "input_sha256: {}", g.edge_list_hash());
        if timing {
            let _ = writeln!(out, "wall_time_ms: {}", self.wall_time.as_millis());
        }
        out
    }
}
