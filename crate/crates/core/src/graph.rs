//! Simple undirected connected graphs with dense vertex ids.
//!
//! A [`Graph`] is validated once on construction and immutable afterwards:
//! no self-loops, no parallel edges, and exactly one connected component.
//! Every resolvability invariant in this crate presumes connectivity, so a
//! disconnected input is rejected instead of producing infinite distances.
//!
//! The canonical interchange format is a plain edge list:
//!
//! ```text
//! 4 4
//! 0 1
//! 0 3
//! 1 2
//! 2 3
//! ```
//!
//! The header holds the vertex count and edge count, each following line one
//! 0-based edge. [`Graph::to_edge_list`] always writes edges sorted with
//! `u < v`, so identical graphs serialize to identical bytes.

use std::collections::VecDeque;
use std::fmt::Write as _;

use sha2::{Digest, Sha256};

use crate::bitset::BitSet;
use crate::error::GraphError;

/// Dense vertex identifier in `0..order`.
pub type Vertex = usize;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    order: usize,
    edges: Vec<(Vertex, Vertex)>,
    adjacency: Vec<Vec<Vertex>>,
    neighbor_sets: Vec<BitSet>,
}

impl Graph {
    /// Validates `edges` over vertices `0..order` and builds the graph.
    ///
    /// Each pair may be given in either orientation; `(u, v)` and `(v, u)`
    /// in the same list are duplicates.
    pub fn new(order: usize, edges: &[(Vertex, Vertex)]) -> Result<Self, GraphError> {
        if order == 0 {
            return Err(GraphError::Empty);
        }
        if order > u16::MAX as usize {
            return Err(GraphError::TooLarge { order });
        }
        let mut canonical = Vec::with_capacity(edges.len());
        for &(u, v) in edges {
            if u >= order || v >= order || u == v {
                return Err(GraphError::InvalidEdge { u, v, order });
            }
            canonical.push((u.min(v), u.max(v)));
        }
        canonical.sort_unstable();
        if let Some(w) = canonical.windows(2).find(|w| w[0] == w[1]) {
            let (u, v) = w[0];
            return Err(GraphError::DuplicateEdge { u, v });
        }

        let mut adjacency = vec![Vec::new(); order];
        let mut neighbor_sets = vec![BitSet::new(order); order];
        for &(u, v) in &canonical {
            adjacency[u].push(v);
            adjacency[v].push(u);
            neighbor_sets[u].insert(v);
            neighbor_sets[v].insert(u);
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }

        let graph = Graph {
            order,
            edges: canonical,
            adjacency,
            neighbor_sets,
        };
        let components = graph.component_count();
        if components != 1 {
            return Err(GraphError::NotConnected { components });
        }
        Ok(graph)
    }

    fn component_count(&self) -> usize {
        let mut seen = vec![false; self.order];
        let mut components = 0;
        let mut stack = Vec::new();
        for start in 0..self.order {
            if seen[start] {
                continue;
            }
            components += 1;
            seen[start] = true;
            stack.push(start);
            while let Some(u) = stack.pop() {
                for &w in &self.adjacency[u] {
                    if !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
        }
        components
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn size(&self) -> usize {
        self.edges.len()
    }

    /// Edges as `(u, v)` with `u < v`, sorted.
    #[inline]
    pub fn edges(&self) -> &[(Vertex, Vertex)] {
        &self.edges
    }

    /// Sorted open neighborhood N(v).
    #[inline]
    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adjacency[v]
    }

    #[inline]
    pub fn neighbor_set(&self, v: Vertex) -> &BitSet {
        &self.neighbor_sets[v]
    }

    #[inline]
    pub fn degree(&self, v: Vertex) -> usize {
        self.adjacency[v].len()
    }

    #[inline]
    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.neighbor_sets[u].contains(v)
    }

    /// Closed neighborhood N[v] as a bitset.
    pub fn closed_neighbor_set(&self, v: Vertex) -> BitSet {
        let mut s = self.neighbor_sets[v].clone();
        s.insert(v);
        s
    }

    /// Hop distances from `source` by breadth-first search.
    pub fn bfs(&self, source: Vertex) -> Vec<u16> {
        let mut dist = vec![u16::MAX; self.order];
        let mut queue = VecDeque::with_capacity(self.order);
        dist[source] = 0;
        queue.push_back(source);
        while let Some(u) = queue.pop_front() {
            let next = dist[u] + 1;
            for &w in &self.adjacency[u] {
                if dist[w] == u16::MAX {
                    dist[w] = next;
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// Applies a vertex relabelling `perm[old] = new` and checks that the
    /// result has exactly the same edge set.
    pub fn is_automorphism(&self, perm: &[Vertex]) -> bool {
        if perm.len() != self.order {
            return false;
        }
        let mut mapped: Vec<_> = self
            .edges
            .iter()
            .map(|&(u, v)| {
                let (a, b) = (perm[u], perm[v]);
                (a.min(b), a.max(b))
            })
            .collect();
        mapped.sort_unstable();
        mapped == self.edges
    }

    /// Canonical edge-list text: header `n m`, then one sorted edge per line.
    pub fn to_edge_list(&self) -> String {
        let mut out = String::with_capacity(8 * (self.edges.len() + 1));
        let _ = writeln!(out, "{} {}", self.order, self.edges.len());
        for &(u, v) in &self.edges {
            let _ = writeln!(out, "{u} {v}");
        }
        out
    }

    /// Parses the edge-list format and validates the graph.
    pub fn from_edge_list(text: &str) -> Result<Self, GraphError> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty());
        let (hline, header) = lines.next().ok_or_else(|| GraphError::Parse {
            line: 1,
            message: "missing header".into(),
        })?;
        let (order, declared) = parse_pair(hline, header)?;
        let mut edges = Vec::with_capacity(declared);
        for (lineno, line) in lines {
            edges.push(parse_pair(lineno, line)?);
        }
        if edges.len() != declared {
            return Err(GraphError::Parse {
                line: hline,
                message: format!("header declares {declared} edges, found {}", edges.len()),
            });
        }
        Graph::new(order, &edges)
    }

    /// Hex SHA-256 of the canonical edge list.
    pub fn edge_list_hash(&self) -> String {
        hex::encode(Sha256::digest(self.to_edge_list().as_bytes()))
    }
}

fn parse_pair(line: usize, text: &str) -> Result<(usize, usize), GraphError> {
    let mut fields = text.split_whitespace();
    let mut next = |what: &str| -> Result<usize, GraphError> {
        let tok = fields.next().ok_or_else(|| GraphError::Parse {
            line,
            message: format!("missing {what}"),
        })?;
        tok.parse().map_err(|_| GraphError::Parse {
            line,
            message: format!("invalid integer {tok:?}"),
        })
    };
    let a = next("first field")?;
    let b = next("second field")?;
    if fields.next().is_some() {
        return Err(GraphError::Parse {
            line,
            message: "expected exactly two fields".into(),
        });
    }
    Ok((a, b))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_vertex_is_valid() {
        let g = Graph::new(1, &[]).unwrap();
        assert_eq!(g.order(), 1);
        assert_eq!(g.size(), 0);
    }

    #[test]
    fn four_cycle() {
        let g = Graph::new(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert_eq!(g.size(), 4);
        assert_eq!(g.neighbors(0), &[1, 3]);
        assert!((0..4).all(|v| g.degree(v) == 2));
        assert_eq!(g.edges(), &[(0, 1), (0, 3), (1, 2), (2, 3)]);
    }

    #[test]
    fn rejects_two_components() {
        assert_eq!(
            Graph::new(4, &[(0, 1), (2, 3)]),
            Err(GraphError::NotConnected { components: 2 })
        );
    }

    #[test]
    fn rejects_bad_edges() {
        assert!(matches!(
            Graph::new(3, &[(0, 0)]),
            Err(GraphError::InvalidEdge { .. })
        ));
        assert!(matches!(
            Graph::new(3, &[(0, 3)]),
            Err(GraphError::InvalidEdge { .. })
        ));
        assert_eq!(
            Graph::new(3, &[(0, 1), (1, 2), (1, 0)]),
            Err(GraphError::DuplicateEdge { u: 0, v: 1 })
        );
        assert_eq!(Graph::new(0, &[]), Err(GraphError::Empty));
    }

    #[test]
    fn edge_list_round_trip() {
        let g = Graph::new(4, &[(3, 0), (0, 1), (2, 1), (2, 3)]).unwrap();
        let text = g.to_edge_list();
        assert_eq!(text, "4 4\n0 1\n0 3\n1 2\n2 3\n");
        assert_eq!(Graph::from_edge_list(&text).unwrap(), g);
    }

    #[test]
    fn edge_list_errors() {
        assert!(matches!(
            Graph::from_edge_list(""),
            Err(GraphError::Parse { line: 1, .. })
        ));
        assert!(matches!(
            Graph::from_edge_list("3 2\n0 1\n"),
            Err(GraphError::Parse { .. })
        ));
        assert!(matches!(
            Graph::from_edge_list("3 2\n0 1\n1 x\n"),
            Err(GraphError::Parse { line: 3, .. })
        ));
        assert!(matches!(
            Graph::from_edge_list("4 2\n0 1\n2 3\n"),
            Err(GraphError::NotConnected { .. })
        ));
    }

    #[test]
    fn bfs_on_path() {
        let g = Graph::new(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(g.bfs(0), vec![0, 1, 2]);
    }
}
