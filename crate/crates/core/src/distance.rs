use crate::graph::{Graph, Vertex};

/// All-pairs hop distances of a connected graph, stored row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceMatrix {
    order: usize,
    dist: Vec<u16>,
}

impl DistanceMatrix {
    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn get(&self, u: Vertex, v: Vertex) -> u16 {
        self.dist[u * self.order + v]
    }

    #[inline]
    pub fn row(&self, u: Vertex) -> &[u16] {
        &self.dist[u * self.order..(u + 1) * self.order]
    }

    pub fn diameter(&self) -> u16 {
        self.dist.iter().copied().max().unwrap_or(0)
    }
}

/// Breadth-first search from every vertex.
pub fn apsp(g: &Graph) -> DistanceMatrix {
    let n = g.order();
    let mut dist = Vec::with_capacity(n * n);
    for s in 0..n {
        let row = g.bfs(s);
        assert!(
            row.iter().all(|&d| d != u16::MAX),
            "graph invariant violated: unreachable vertex from {s}"
        );
        dist.extend_from_slice(&row);
    }
    DistanceMatrix { order: n, dist }
}
