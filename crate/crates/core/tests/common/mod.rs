//! Naive reference implementations. Nothing here uses the library's
//! distance matrix, pair index or search; only the graph's edge list.

#![allow(dead_code)]

use std::collections::HashSet;

use ftres_core::Graph;

pub struct Oracle {
    pub n: usize,
    pub adj: Vec<Vec<bool>>,
    pub dist: Vec<Vec<u32>>,
}

impl Oracle {
    /// Floyd-Warshall over the adjacency matrix.
    pub fn new(g: &Graph) -> Self {
        let n = g.order();
        let mut adj = vec![vec![false; n]; n];
        for &(u, v) in g.edges() {
            adj[u][v] = true;
            adj[v][u] = true;
        }
        let inf = u32::MAX / 4;
        let mut dist = vec![vec![inf; n]; n];
        for u in 0..n {
            dist[u][u] = 0;
            for v in 0..n {
                if adj[u][v] {
                    dist[u][v] = 1;
                }
            }
        }
        for k in 0..n {
            for i in 0..n {
                for j in 0..n {
                    let via = dist[i][k] + dist[k][j];
                    if via < dist[i][j] {
                        dist[i][j] = via;
                    }
                }
            }
        }
        Oracle { n, adj, dist }
    }

    pub fn resolves(&self, set: &[usize]) -> bool {
        let mut seen = HashSet::new();
        (0..self.n).all(|v| seen.insert(set.iter().map(|&w| self.dist[v][w]).collect::<Vec<_>>()))
    }

    /// Straight from the definition: resolving, and still resolving after
    /// removing any one member.
    pub fn fault_tolerant(&self, set: &[usize]) -> bool {
        self.resolves(set)
            && (0..set.len()).all(|i| {
                let rest: Vec<usize> = set
                    .iter()
                    .enumerate()
                    .filter(|&(j, _)| j != i)
                    .map(|(_, &v)| v)
                    .collect();
                self.resolves(&rest)
            })
    }

    pub fn independent(&self, set: &[usize]) -> bool {
        set.iter().all(|&u| set.iter().all(|&v| !self.adj[u][v]))
    }

    /// Lexicographically least set of minimum size satisfying `pred`, sizes
    /// from `from` upward.
    pub fn least(&self, from: usize, pred: impl Fn(&[usize]) -> bool) -> Option<Vec<usize>> {
        for k in from..=self.n {
            if let Some(s) = combinations(self.n, k).into_iter().find(|s| pred(s)) {
                return Some(s);
            }
        }
        None
    }

    pub fn dim(&self) -> Option<Vec<usize>> {
        self.least(0, |s| self.resolves(s))
    }

    pub fn fdim(&self) -> Option<Vec<usize>> {
        self.least(2, |s| self.fault_tolerant(s))
    }

    pub fn ir(&self) -> Option<Vec<usize>> {
        self.least(0, |s| self.independent(s) && self.resolves(s))
    }

    pub fn ifr(&self) -> Option<Vec<usize>> {
        self.least(2, |s| self.independent(s) && self.fault_tolerant(s))
    }

    pub fn beta(&self) -> usize {
        (0..=self.n)
            .rev()
            .find(|&k| combinations(self.n, k).iter().any(|s| self.independent(s)))
            .unwrap_or(0)
    }

    /// Twin classes by the distance definition: d(u,w) = d(v,w) for every
    /// other w.
    pub fn twins(&self, u: usize, v: usize) -> bool {
        u != v
            && (0..self.n)
                .filter(|&w| w != u && w != v)
                .all(|w| self.dist[u][w] == self.dist[v][w])
    }
}

/// All `k`-subsets of `0..n` in lexicographic order.
pub fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for v in start..n {
            if n - v < k - cur.len() {
                break;
            }
            cur.push(v);
            go(v + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if k <= n {
        go(0, n, k, &mut Vec::new(), &mut out);
    }
    out
}
