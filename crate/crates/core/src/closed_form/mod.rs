//! Witness sets and printed code tables for the fault-tolerant metric
//! dimension of `A_n`, `S_n` and `T_n`, checked against BFS.
//!
//! BFS distances are ground truth. The printed tables are data under test:
//! [`verify_tables`] reports every cell that disagrees and every range that
//! is covered twice or not at all, without trying to repair them.

mod report;
mod tables;

use std::fmt;

pub use report::{
    shifted_code_layers, verify_shifts, verify_tables, Anomaly, AnomalyKind, CellComparison,
    DiscrepancyReport, ShiftCheck, ShiftRelation, Verdict, VerdictCounts,
};
pub use tables::{layer_sources, Affine, LayerSource, PrintedRow};

use crate::distance::apsp;
use crate::error::{ClosedFormError, FamilyError};
use crate::families::{polytope_position, polytope_vertex, Family, FamilySpec};
use crate::graph::{Graph, Vertex};
use crate::resolvability::{ft_check_by_deletion, is_resolving, LandmarkSet};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Parity {
    /// `n = 2g`
    Even,
    /// `n = 2g + 1`
    Odd,
}

impl Parity {
    pub fn of(n: usize) -> Self {
        if n % 2 == 0 {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Parity::Even => "even",
            Parity::Odd => "odd",
        }
    }
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Half ring length: `g` with `n = 2g` or `n = 2g + 1`.
pub fn half(n: usize) -> usize {
    n / 2
}

fn spec_for(family: Family, n: usize) -> Result<FamilySpec, FamilyError> {
    match family {
        Family::DoubleAntiprism => Ok(FamilySpec::DoubleAntiprism(n)),
        Family::SPoly => Ok(FamilySpec::SPoly(n)),
        Family::TPoly => Ok(FamilySpec::TPoly(n)),
        other => Err(FamilyError::UnknownFamily(format!(
            "{other} has no closed-form witness"
        ))),
    }
}

fn check_n(family: Family, n: usize) -> Result<FamilySpec, FamilyError> {
    let spec = spec_for(family, n)?;
    if n < 6 {
        return Err(FamilyError::ParamTooSmall {
            family: family.name(),
            param: "n",
            min: 6,
            got: n,
        });
    }
    Ok(spec)
}

/// A four-landmark set on the first layer, in the printed order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilyWitness {
    pub family: Family,
    pub n: usize,
    pub parity: Parity,
    /// 1-based ring positions on layer 1.
    pub positions: [usize; 4],
    pub ids: Vec<Vertex>,
}

impl FamilyWitness {
    fn from_positions(family: Family, n: usize, positions: [usize; 4]) -> Self {
        FamilyWitness {
            family,
            n,
            parity: Parity::of(n),
            positions,
            ids: positions
                .iter()
                .map(|&l| polytope_vertex(n, l, 1))
                .collect(),
        }
    }

    pub fn landmarks(&self) -> LandmarkSet {
        LandmarkSet::new(self.n * self.family.layers().unwrap_or(0), self.ids.clone())
            .expect("witness ids lie on layer 1")
    }

    pub fn label(&self) -> String {
        self.positions
            .iter()
            .map(|l| format!("j^{l}_1"))
            .collect::<Vec<_>>()
            .join("+")
    }
}

/// The stated landmark set: `{j^1_1, j^2_1, j^{g+1}_1, j^{g+2}_1}` for even
/// `n` and for `S_n`; `{j^1_1, j^2_1, j^{g+1}_1, j^{g+3}_1}` for odd `n` in
/// `A_n` and `T_n`.
pub fn theorem_witness(family: Family, n: usize) -> Result<FamilyWitness, FamilyError> {
    check_n(family, n)?;
    let g = half(n);
    let fourth = match (family, Parity::of(n)) {
        (Family::DoubleAntiprism | Family::TPoly, Parity::Odd) => g + 3,
        _ => g + 2,
    };
    Ok(FamilyWitness::from_positions(
        family,
        n,
        [1, 2, g + 1, fourth],
    ))
}

/// Further candidate sets worth checking. For odd `T_n` the deletion
/// subsets printed alongside the witness use `j^{g+2}_1` instead of
/// `j^{g+3}_1`, so that set is checked as well.
pub fn alternate_witnesses(family: Family, n: usize) -> Result<Vec<FamilyWitness>, FamilyError> {
    check_n(family, n)?;
    let g = half(n);
    Ok(match (family, Parity::of(n)) {
        (Family::TPoly, Parity::Odd) => {
            vec![FamilyWitness::from_positions(
                family,
                n,
                [1, 2, g + 1, g + 2],
            )]
        }
        _ => Vec::new(),
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CandidateCheck {
    pub witness: FamilyWitness,
    /// Whether this is the stated witness (as opposed to an alternate).
    pub primary: bool,
    pub resolving: bool,
    /// Resolving status of the set minus each landmark, in order.
    pub deletions: Vec<bool>,
    pub fault_tolerant: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WitnessReport {
    pub family: Family,
    pub n: usize,
    pub parity: Parity,
    pub candidates: Vec<CandidateCheck>,
}

impl WitnessReport {
    /// At least one candidate is a fault-tolerant resolving set.
    pub fn passes(&self) -> bool {
        self.candidates.iter().any(|c| c.fault_tolerant)
    }

    pub fn primary_passes(&self) -> bool {
        self.candidates
            .iter()
            .any(|c| c.primary && c.fault_tolerant)
    }

    /// Labels of the candidates that pass.
    pub fn passing(&self) -> Vec<String> {
        self.candidates
            .iter()
            .filter(|c| c.fault_tolerant)
            .map(|c| c.witness.label())
            .collect()
    }
}

fn check_candidate(
    d: &crate::distance::DistanceMatrix,
    w: FamilyWitness,
    primary: bool,
) -> CandidateCheck {
    let r = w.landmarks();
    let resolving = is_resolving(d, &r).expect("valid landmarks");
    let deletions = (0..r.len())
        .map(|i| is_resolving(d, &r.without(i)).expect("valid landmarks"))
        .collect();
    let fault_tolerant = ft_check_by_deletion(d, &r).expect("four landmarks");
    CandidateCheck {
        witness: w,
        primary,
        resolving,
        deletions,
        fault_tolerant,
    }
}

/// Builds the graph and runs the deletion-based fault-tolerance check on the
/// stated witness and on any alternates.
pub fn verify_witness(family: Family, n: usize) -> Result<WitnessReport, FamilyError> {
    let spec = check_n(family, n)?;
    let g = spec.generate()?;
    let d = apsp(&g);
    let mut candidates = vec![check_candidate(&d, theorem_witness(family, n)?, true)];
    for alt in alternate_witnesses(family, n)? {
        candidates.push(check_candidate(&d, alt, false));
    }
    Ok(WitnessReport {
        family,
        n,
        parity: Parity::of(n),
        candidates,
    })
}

/// One printed row evaluated at a vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrintedCode {
    /// Layer the row is printed under (for shifted layers, the base layer).
    pub table_layer: usize,
    /// 1-based row number within that layer's table.
    pub row: usize,
    pub condition: String,
    /// Applied `+offset`, for layers stated as shifts of another layer.
    pub offset: Option<[i64; 4]>,
    pub values: [i64; 4],
}

impl PrintedCode {
    pub fn row_ref(&self) -> String {
        let mut s = format!("L{}R{}", self.table_layer, self.row);
        if let Some(o) = self.offset {
            s.push_str(&format!("+({},{},{},{})", o[0], o[1], o[2], o[3]));
        }
        s
    }
}

/// Evaluates the printed formulas for `vertex` exactly as published. Every
/// applicable row is returned when ranges overlap.
pub fn table_codes(
    family: Family,
    n: usize,
    vertex: Vertex,
) -> Result<Vec<PrintedCode>, ClosedFormError> {
    let spec = check_n(family, n)?;
    let layers = family.layers().expect("polytope family");
    if vertex >= layers * n {
        return Err(ClosedFormError::VertexOutOfRange(vertex));
    }
    let sources = layer_sources(family, Parity::of(n)).expect("polytope family");
    let (l, r) = polytope_position(n, vertex);
    let g = half(n) as i64;

    let mut layer = r;
    let mut offset = None;
    let rows = loop {
        match sources[layer - 1] {
            LayerSource::Printed(rows) => break rows,
            LayerSource::Shifted { base, offset: o } => {
                layer = base;
                offset = Some(o);
            }
        }
    };
    let hits: Vec<PrintedCode> = rows
        .iter()
        .enumerate()
        .filter(|(_, row)| row.applies(l as i64, g))
        .map(|(i, row)| {
            let mut values = row.eval(l as i64, g);
            if let Some(o) = offset {
                for (v, d) in values.iter_mut().zip(o) {
                    *v += d;
                }
            }
            PrintedCode {
                table_layer: layer,
                row: i + 1,
                condition: row.condition(),
                offset,
                values,
            }
        })
        .collect();
    if hits.is_empty() {
        return Err(ClosedFormError::RangeGap {
            vertex: spec.label(vertex),
        });
    }
    Ok(hits)
}

/// Exhaustive check that no `k`-subset of the family graph is a
/// fault-tolerant resolving set. Returns the number of subsets tried and the
/// first one that passes, if any.
pub fn exhaustive_ft_sweep(g: &Graph, k: usize) -> (u64, Option<Vec<Vertex>>) {
    let d = apsp(g);
    let n = g.order();
    if k == 0 || k > n {
        return (0, None);
    }
    let mut idx: Vec<usize> = (0..k).collect();
    let mut tried = 0u64;
    loop {
        tried += 1;
        let r = LandmarkSet::new(n, idx.clone()).expect("distinct ids");
        if k >= 2 && ft_check_by_deletion(&d, &r).expect("k >= 2") {
            return (tried, Some(idx));
        }
        // Next combination in lexicographic order.
        let mut i = k;
        loop {
            if i == 0 {
                return (tried, None);
            }
            i -= 1;
            if idx[i] < n - k + i {
                break;
            }
            if i == 0 {
                return (tried, None);
            }
        }
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn witness_positions() {
        let w = theorem_witness(Family::DoubleAntiprism, 6).unwrap();
        assert_eq!(w.positions, [1, 2, 4, 5]);
        assert_eq!(w.ids, vec![0, 1, 3, 4]);
        assert_eq!(w.label(), "j^1_1+j^2_1+j^4_1+j^5_1");
        assert_eq!(
            theorem_witness(Family::DoubleAntiprism, 7)
                .unwrap()
                .positions,
            [1, 2, 4, 6]
        );
        assert_eq!(
            theorem_witness(Family::SPoly, 7).unwrap().positions,
            [1, 2, 4, 5]
        );
        assert_eq!(
            theorem_witness(Family::TPoly, 9).unwrap().positions,
            [1, 2, 5, 7]
        );
        assert_eq!(
            alternate_witnesses(Family::TPoly, 9).unwrap()[0].positions,
            [1, 2, 5, 6]
        );
        assert!(alternate_witnesses(Family::TPoly, 8).unwrap().is_empty());
    }

    #[test]
    fn witness_rejects_small_or_foreign() {
        assert!(matches!(
            theorem_witness(Family::SPoly, 5),
            Err(FamilyError::ParamTooSmall { .. })
        ));
        assert!(theorem_witness(Family::Cycle, 8).is_err());
        assert!(verify_witness(Family::TPoly, 4).is_err());
    }

    #[test]
    fn verify_witness_examples() {
        assert!(verify_witness(Family::DoubleAntiprism, 6)
            .unwrap()
            .primary_passes());
        assert!(verify_witness(Family::SPoly, 8).unwrap().primary_passes());
        let t9 = verify_witness(Family::TPoly, 9).unwrap();
        assert_eq!(t9.candidates.len(), 2);
        assert!(t9.passes());
    }

    #[test]
    fn printed_code_examples() {
        let a = |v| table_codes(Family::DoubleAntiprism, 6, v).unwrap();
        assert_eq!(a(polytope_vertex(6, 1, 1))[0].values, [0, 1, 3, 2]);
        assert_eq!(a(polytope_vertex(6, 1, 2))[0].values, [1, 1, 3, 3]);
        let s = table_codes(Family::SPoly, 6, polytope_vertex(6, 2, 3)).unwrap();
        assert_eq!(s[0].values, [3, 2, 3, 4]);
        let s2 = table_codes(Family::SPoly, 6, polytope_vertex(6, 1, 2)).unwrap();
        assert_eq!(s2[0].values, [1, 2, 4, 3]);
        assert_eq!(s2[0].row_ref(), "L1R1+(1,1,1,1)");
    }

    #[test]
    fn duplicated_row_returns_both() {
        // n = 7, g = 3: outer vertex j^4_3 is covered by two printed rows.
        let hits = table_codes(Family::DoubleAntiprism, 7, polytope_vertex(7, 4, 3)).unwrap();
        assert_eq!(hits.len(), 2);
        assert_eq!(hits[0].condition, "l=g+1");
        assert_eq!(hits[1].condition, "l=g+1");
        assert_ne!(hits[0].values, hits[1].values);
    }

    #[test]
    fn sweep_on_small_cycle() {
        let c6 = FamilySpec::Cycle(6).generate().unwrap();
        assert_eq!(exhaustive_ft_sweep(&c6, 2), (15, None));
        let (_, found) = exhaustive_ft_sweep(&c6, 3);
        assert!(found.is_some());
    }
}
