//! Deterministic generators for the graph families used throughout the crate.
//!
//! The three layered convex-polytope families (the double antiprism `A_n`,
//! `S_n` and `T_n`) are built on vertices `j^l_r` with position `l` in
//! `1..=n` around the ring and layer `r`. They are stored at id
//! `(r - 1) * n + (l - 1)`, see [`polytope_vertex`]. Ring positions wrap, so
//! `j^{n+1}_r` is `j^1_r`.
//!
//! Every other family labels vertex id `i` as `v^{i+1}`.

use std::fmt;

use crate::error::FamilyError;
use crate::graph::{Graph, Vertex};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    Path,
    Cycle,
    Complete,
    CompleteBipartite,
    Petersen,
    Q3,
    DoubleAntiprism,
    SPoly,
    TPoly,
    GraphH,
}

impl Family {
    pub const ALL: [Family; 10] = [
        Family::Path,
        Family::Cycle,
        Family::Complete,
        Family::CompleteBipartite,
        Family::Petersen,
        Family::Q3,
        Family::DoubleAntiprism,
        Family::SPoly,
        Family::TPoly,
        Family::GraphH,
    ];

    pub const POLYTOPES: [Family; 3] = [Family::DoubleAntiprism, Family::SPoly, Family::TPoly];

    /// Command-line name.
    pub fn name(self) -> &'static str {
        match self {
            Family::Path => "path",
            Family::Cycle => "cycle",
            Family::Complete => "complete",
            Family::CompleteBipartite => "kmn",
            Family::Petersen => "petersen",
            Family::Q3 => "q3",
            Family::DoubleAntiprism => "antiprism2",
            Family::SPoly => "spoly",
            Family::TPoly => "tpoly",
            Family::GraphH => "graphH",
        }
    }

    pub fn from_name(name: &str) -> Result<Family, FamilyError> {
        Family::ALL
            .into_iter()
            .find(|f| f.name() == name)
            .ok_or_else(|| FamilyError::UnknownFamily(name.to_string()))
    }

    /// Number of layers for the polytope families.
    pub fn layers(self) -> Option<usize> {
        match self {
            Family::DoubleAntiprism => Some(3),
            Family::SPoly | Family::TPoly => Some(4),
            _ => None,
        }
    }

    pub fn is_polytope(self) -> bool {
        self.layers().is_some()
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A fully parameterized family member.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FamilySpec {
    Path(usize),
    Cycle(usize),
    Complete(usize),
    CompleteBipartite(usize, usize),
    Petersen,
    Q3,
    DoubleAntiprism(usize),
    SPoly(usize),
    TPoly(usize),
    /// Index into the list returned by [`reconstruct_graph_h`].
    GraphH(usize),
}

impl FamilySpec {
    /// Builds a spec from a family and its size parameters. `n` is ignored
    /// for the fixed graphs; for `kmn`, `m` defaults to `n`; for `graphH`,
    /// `n` selects the reconstruction variant (default 0).
    pub fn new(family: Family, n: Option<usize>, m: Option<usize>) -> Result<Self, FamilyError> {
        let need = |param: &'static str, v: Option<usize>| {
            v.ok_or(FamilyError::ParamTooSmall {
                family: family.name(),
                param,
                min: 1,
                got: 0,
            })
        };
        Ok(match family {
            Family::Path => FamilySpec::Path(need("n", n)?),
            Family::Cycle => FamilySpec::Cycle(need("n", n)?),
            Family::Complete => FamilySpec::Complete(need("n", n)?),
            Family::CompleteBipartite => {
                let n = need("n", n)?;
                FamilySpec::CompleteBipartite(m.unwrap_or(n), n)
            }
            Family::Petersen => FamilySpec::Petersen,
            Family::Q3 => FamilySpec::Q3,
            Family::DoubleAntiprism => FamilySpec::DoubleAntiprism(need("n", n)?),
            Family::SPoly => FamilySpec::SPoly(need("n", n)?),
            Family::TPoly => FamilySpec::TPoly(need("n", n)?),
            Family::GraphH => FamilySpec::GraphH(n.unwrap_or(0)),
        })
    }

    pub fn family(&self) -> Family {
        match self {
            FamilySpec::Path(_) => Family::Path,
            FamilySpec::Cycle(_) => Family::Cycle,
            FamilySpec::Complete(_) => Family::Complete,
            FamilySpec::CompleteBipartite(..) => Family::CompleteBipartite,
            FamilySpec::Petersen => Family::Petersen,
            FamilySpec::Q3 => Family::Q3,
            FamilySpec::DoubleAntiprism(_) => Family::DoubleAntiprism,
            FamilySpec::SPoly(_) => Family::SPoly,
            FamilySpec::TPoly(_) => Family::TPoly,
            FamilySpec::GraphH(_) => Family::GraphH,
        }
    }

    /// Ring length for the polytope families.
    pub fn ring(&self) -> Option<usize> {
        match *self {
            FamilySpec::DoubleAntiprism(n) | FamilySpec::SPoly(n) | FamilySpec::TPoly(n) => Some(n),
            _ => None,
        }
    }

    pub fn generate(&self) -> Result<Graph, FamilyError> {
        match *self {
            FamilySpec::Path(n) => gen_path(n),
            FamilySpec::Cycle(n) => gen_cycle(n),
            FamilySpec::Complete(n) => gen_complete(n),
            FamilySpec::CompleteBipartite(m, n) => gen_complete_bipartite(m, n),
            FamilySpec::Petersen => Ok(gen_petersen()),
            FamilySpec::Q3 => Ok(gen_q3()),
            FamilySpec::DoubleAntiprism(n) => gen_double_antiprism(n),
            FamilySpec::SPoly(n) => gen_s_poly(n),
            FamilySpec::TPoly(n) => gen_t_poly(n),
            FamilySpec::GraphH(i) => {
                let mut all = reconstruct_graph_h();
                let count = all.len();
                if i >= count {
                    return Err(FamilyError::ParamTooSmall {
                        family: "graphH",
                        param: "variant count",
                        min: i + 1,
                        got: count,
                    });
                }
                Ok(all.swap_remove(i))
            }
        }
    }

    /// Printable label for vertex `v` of this family's graph.
    pub fn label(&self, v: Vertex) -> String {
        match self.ring() {
            Some(n) => {
                let (l, r) = polytope_position(n, v);
                format!("j^{l}_{r}")
            }
            None => format!("v^{}", v + 1),
        }
    }

    /// Labels joined by `+`.
    pub fn label_set(&self, vs: &[Vertex]) -> String {
        vs.iter()
            .map(|&v| self.label(v))
            .collect::<Vec<_>>()
            .join("+")
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            FamilySpec::CompleteBipartite(m, n) => write!(f, "kmn(m={m},n={n})"),
            FamilySpec::Petersen | FamilySpec::Q3 => f.write_str(self.family().name()),
            FamilySpec::GraphH(i) => write!(f, "graphH(variant={i})"),
            FamilySpec::Path(n)
            | FamilySpec::Cycle(n)
            | FamilySpec::Complete(n)
            | FamilySpec::DoubleAntiprism(n)
            | FamilySpec::SPoly(n)
            | FamilySpec::TPoly(n) => write!(f, "{}(n={n})", self.family().name()),
        }
    }
}

/// Id of `j^l_r` (1-based `l` and `r`, `l` taken modulo `n`).
pub fn polytope_vertex(n: usize, l: usize, r: usize) -> Vertex {
    debug_assert!(r >= 1 && l >= 1);
    (r - 1) * n + (l - 1) % n
}

/// Inverse of [`polytope_vertex`]: `(l, r)`, both 1-based.
pub fn polytope_position(n: usize, v: Vertex) -> (usize, usize) {
    (v % n + 1, v / n + 1)
}

fn too_small(family: Family, param: &'static str, min: usize, got: usize) -> FamilyError {
    FamilyError::ParamTooSmall {
        family: family.name(),
        param,
        min,
        got,
    }
}

fn build(order: usize, edges: &[(Vertex, Vertex)]) -> Graph {
    Graph::new(order, edges).expect("family generators produce valid graphs")
}

pub fn gen_path(n: usize) -> Result<Graph, FamilyError> {
    if n < 1 {
        return Err(too_small(Family::Path, "n", 1, n));
    }
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    Ok(build(n, &edges))
}

pub fn gen_cycle(n: usize) -> Result<Graph, FamilyError> {
    if n < 3 {
        return Err(too_small(Family::Cycle, "n", 3, n));
    }
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Ok(build(n, &edges))
}

pub fn gen_complete(n: usize) -> Result<Graph, FamilyError> {
    if n < 1 {
        return Err(too_small(Family::Complete, "n", 1, n));
    }
    let mut edges = Vec::with_capacity(n * (n - 1) / 2);
    for u in 0..n {
        for v in u + 1..n {
            edges.push((u, v));
        }
    }
    Ok(build(n, &edges))
}

/// `K_{m,n}` with parts `0..m` and `m..m+n`.
pub fn gen_complete_bipartite(m: usize, n: usize) -> Result<Graph, FamilyError> {
    if m < 1 {
        return Err(too_small(Family::CompleteBipartite, "m", 1, m));
    }
    if n < 1 {
        return Err(too_small(Family::CompleteBipartite, "n", 1, n));
    }
    let mut edges = Vec::with_capacity(m * n);
    for u in 0..m {
        for v in m..m + n {
            edges.push((u, v));
        }
    }
    Ok(build(m + n, &edges))
}

/// Outer 5-cycle `0..5`, inner pentagram `5..10`, spokes `i ~ i + 5`.
pub fn gen_petersen() -> Graph {
    let mut edges = Vec::with_capacity(15);
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((5 + i, 5 + (i + 2) % 5));
        edges.push((i, i + 5));
    }
    build(10, &edges)
}

/// The 3-cube on ids `0..8`, adjacent when the ids differ in one bit.
pub fn gen_q3() -> Graph {
    let mut edges = Vec::with_capacity(12);
    for u in 0..8usize {
        for bit in 0..3 {
            let v = u ^ (1 << bit);
            if u < v {
                edges.push((u, v));
            }
        }
    }
    build(8, &edges)
}

fn ring_check(family: Family, n: usize) -> Result<(), FamilyError> {
    if n < 3 {
        Err(too_small(family, "n", 3, n))
    } else {
        Ok(())
    }
}

/// Double antiprism: three ring layers with
/// `j^l_1 j^l_2`, `j^l_2 j^l_3`, `j^l_2 j^{l+1}_1`, `j^l_3 j^{l+1}_2`.
pub fn gen_double_antiprism(n: usize) -> Result<Graph, FamilyError> {
    ring_check(Family::DoubleAntiprism, n)?;
    let j = |l: usize, r: usize| polytope_vertex(n, l, r);
    let mut edges = Vec::with_capacity(7 * n);
    for l in 1..=n {
        for r in 1..=3 {
            edges.push((j(l, r), j(l + 1, r)));
        }
        edges.push((j(l, 1), j(l, 2)));
        edges.push((j(l, 2), j(l, 3)));
        edges.push((j(l, 2), j(l + 1, 1)));
        edges.push((j(l, 3), j(l + 1, 2)));
    }
    Ok(build(3 * n, &edges))
}

/// `S_n`: four ring layers with spokes between consecutive layers and the
/// diagonal `j^l_3 j^{l+1}_2`.
pub fn gen_s_poly(n: usize) -> Result<Graph, FamilyError> {
    ring_check(Family::SPoly, n)?;
    let j = |l: usize, r: usize| polytope_vertex(n, l, r);
    let mut edges = Vec::with_capacity(8 * n);
    for l in 1..=n {
        for r in 1..=4 {
            edges.push((j(l, r), j(l + 1, r)));
        }
        edges.push((j(l, 1), j(l, 2)));
        edges.push((j(l, 2), j(l, 3)));
        edges.push((j(l, 3), j(l, 4)));
        edges.push((j(l, 3), j(l + 1, 2)));
    }
    Ok(build(4 * n, &edges))
}

/// `T_n`: ring layers 1, 2 and 4; layer 3 has no ring edges. Spokes between
/// consecutive layers plus diagonals `j^l_2 j^{l+1}_1` and `j^l_3 j^{l+1}_2`.
pub fn gen_t_poly(n: usize) -> Result<Graph, FamilyError> {
    ring_check(Family::TPoly, n)?;
    let j = |l: usize, r: usize| polytope_vertex(n, l, r);
    let mut edges = Vec::with_capacity(8 * n);
    for l in 1..=n {
        for r in [1, 2, 4] {
            edges.push((j(l, r), j(l + 1, r)));
        }
        edges.push((j(l, 1), j(l, 2)));
        edges.push((j(l, 2), j(l, 3)));
        edges.push((j(l, 3), j(l, 4)));
        edges.push((j(l, 2), j(l + 1, 1)));
        edges.push((j(l, 3), j(l + 1, 2)));
    }
    Ok(build(4 * n, &edges))
}

/// Landmarks of the worked example graph `H`: `v^2, v^5, v^6, v^8` (0-based ids).
pub const GRAPH_H_LANDMARKS: [Vertex; 4] = [1, 4, 5, 7];

/// Published code vectors of `v^1 .. v^9` against [`GRAPH_H_LANDMARKS`].
pub const GRAPH_H_CODES: [[u16; 4]; 9] = [
    [1, 4, 4, 2],
    [0, 3, 3, 2],
    [1, 2, 2, 2],
    [2, 1, 1, 2],
    [3, 0, 2, 3],
    [3, 2, 0, 3],
    [3, 2, 2, 1],
    [2, 3, 3, 0],
    [1, 3, 3, 1],
];

/// All 9-vertex connected simple graphs whose distances to the landmarks
/// reproduce [`GRAPH_H_CODES`].
///
/// Distance-1 entries fix every landmark-incident edge. The remaining
/// candidate edges lie among the five non-landmark vertices; all 1024 subsets
/// of those ten pairs are tried, in increasing bitmask order.
pub fn reconstruct_graph_h() -> Vec<Graph> {
    let n = 9;
    let is_landmark = |v: Vertex| GRAPH_H_LANDMARKS.contains(&v);
    let mut fixed = Vec::new();
    for (li, &l) in GRAPH_H_LANDMARKS.iter().enumerate() {
        for (v, code) in GRAPH_H_CODES.iter().enumerate() {
            if code[li] == 1 && (!is_landmark(v) || l < v) {
                fixed.push((l.min(v), l.max(v)));
            }
        }
    }
    let free: Vec<Vertex> = (0..n).filter(|&v| !is_landmark(v)).collect();
    let mut candidates = Vec::new();
    for (i, &u) in free.iter().enumerate() {
        for &v in &free[i + 1..] {
            candidates.push((u, v));
        }
    }

    let mut out = Vec::new();
    for mask in 0u32..(1 << candidates.len()) {
        let mut edges = fixed.clone();
        edges.extend(
            candidates
                .iter()
                .enumerate()
                .filter(|(i, _)| mask & (1 << i) != 0)
                .map(|(_, &e)| e),
        );
        let Ok(g) = Graph::new(n, &edges) else {
            continue;
        };
        let consistent = GRAPH_H_LANDMARKS.iter().enumerate().all(|(li, &l)| {
            let dist = g.bfs(l);
            (0..n).all(|v| dist[v] == GRAPH_H_CODES[v][li])
        });
        if consistent {
            out.push(g);
        }
    }
    out
}
