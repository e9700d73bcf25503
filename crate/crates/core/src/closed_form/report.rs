//! Cell-by-cell comparison of printed codes against BFS.

use std::fmt::Write as _;

use super::{half, table_codes, theorem_witness, Parity, PrintedCode};
use crate::distance::{apsp, DistanceMatrix};
use crate::error::{ClosedFormError, FamilyError};
use crate::families::{polytope_vertex, Family, FamilySpec};
use crate::graph::Vertex;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Verdict {
    Match,
    Mismatch,
    /// No printed row covers the vertex.
    Gap,
    /// Several rows apply and all agree with BFS.
    OverlapMatch,
    /// Several rows apply and only some agree with BFS.
    OverlapPartial,
    /// Several rows apply and none agrees with BFS.
    OverlapMismatch,
}

impl Verdict {
    pub fn name(self) -> &'static str {
        match self {
            Verdict::Match => "match",
            Verdict::Mismatch => "mismatch",
            Verdict::Gap => "gap",
            Verdict::OverlapMatch => "overlap_match",
            Verdict::OverlapPartial => "overlap_partial",
            Verdict::OverlapMismatch => "overlap_mismatch",
        }
    }

    pub fn is_match(self) -> bool {
        matches!(self, Verdict::Match | Verdict::OverlapMatch)
    }

    fn of(printed: &[i64], bfs: i64) -> Self {
        let hits = printed.iter().filter(|&&p| p == bfs).count();
        match (printed.len(), hits) {
            (0, _) => Verdict::Gap,
            (1, 1) => Verdict::Match,
            (1, _) => Verdict::Mismatch,
            (k, h) if h == k => Verdict::OverlapMatch,
            (_, 0) => Verdict::OverlapMismatch,
            _ => Verdict::OverlapPartial,
        }
    }
}

/// One (vertex, landmark) entry.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CellComparison {
    pub vertex: Vertex,
    pub label: String,
    /// 0-based index into the witness.
    pub landmark: usize,
    /// Value from each applicable printed row, in row order.
    pub printed: Vec<i64>,
    pub rows: Vec<String>,
    pub bfs: i64,
    pub verdict: Verdict,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum AnomalyKind {
    Gap,
    Overlap,
    /// The same range printed more than once in one table.
    DuplicatedRow,
}

impl AnomalyKind {
    pub fn name(self) -> &'static str {
        match self {
            AnomalyKind::Gap => "gap",
            AnomalyKind::Overlap => "overlap",
            AnomalyKind::DuplicatedRow => "duplicated_row",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Anomaly {
    pub kind: AnomalyKind,
    pub vertex: Vertex,
    pub label: String,
    /// Rows involved, with their printed conditions.
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiscrepancyReport {
    pub family: Family,
    pub n: usize,
    pub parity: Parity,
    pub witness: Vec<Vertex>,
    pub cells: Vec<CellComparison>,
    pub anomalies: Vec<Anomaly>,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct VerdictCounts {
    pub matches: usize,
    pub mismatches: usize,
    pub gaps: usize,
    pub overlap_match: usize,
    pub overlap_partial: usize,
    pub overlap_mismatch: usize,
}

impl DiscrepancyReport {
    pub fn counts(&self) -> VerdictCounts {
        let mut c = VerdictCounts::default();
        for cell in &self.cells {
            match cell.verdict {
                Verdict::Match => c.matches += 1,
                Verdict::Mismatch => c.mismatches += 1,
                Verdict::Gap => c.gaps += 1,
                Verdict::OverlapMatch => c.overlap_match += 1,
                Verdict::OverlapPartial => c.overlap_partial += 1,
                Verdict::OverlapMismatch => c.overlap_mismatch += 1,
            }
        }
        c
    }

    /// Cells where no applicable printed row agrees with BFS.
    pub fn mismatch_count(&self) -> usize {
        self.cells
            .iter()
            .filter(|c| matches!(c.verdict, Verdict::Mismatch | Verdict::OverlapMismatch))
            .count()
    }

    pub fn has_anomaly(&self, kind: AnomalyKind) -> bool {
        self.anomalies.iter().any(|a| a.kind == kind)
    }

    /// One line per vertex: family, n, parity, vertex, printed 4-tuple, BFS
    /// 4-tuple, verdict. Overlapping printed values are joined with `/`.
    pub fn render_table(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "family\tn\tparity\tvertex\tprinted\tbfs\tverdict");
        for chunk in self.cells.chunks(4) {
            let printed = chunk
                .iter()
                .map(|c| {
                    if c.printed.is_empty() {
                        "?".to_string()
                    } else {
                        c.printed
                            .iter()
                            .map(i64::to_string)
                            .collect::<Vec<_>>()
                            .join("/")
                    }
                })
                .collect::<Vec<_>>()
                .join(",");
            let bfs = chunk
                .iter()
                .map(|c| c.bfs.to_string())
                .collect::<Vec<_>>()
                .join(",");
            let verdict = chunk.iter().map(|c| c.verdict).max().expect("four cells");
            let _ = writeln!(
                out,
                "{}\t{}\t{}\t{}\t({})\t({})\t{}",
                self.family.name(),
                self.n,
                self.parity,
                chunk[0].label,
                printed,
                bfs,
                verdict.name()
            );
        }
        for a in &self.anomalies {
            let _ = writeln!(out, "# {} at {}: {}", a.kind.name(), a.label, a.detail);
        }
        out
    }

    pub const CSV_HEADER: &'static str =
        "kind,family,n,parity,vertex,landmark,printed,bfs,rows,verdict";

    /// CSV rows without header: one `cell` row per comparison, then one
    /// `anomaly` row per anomaly.
    pub fn csv_rows(&self) -> Vec<String> {
        let mut rows = Vec::with_capacity(self.cells.len() + self.anomalies.len());
        for c in &self.cells {
            rows.push(format!(
                "cell,{},{},{},{},{},{},{},{},{}",
                self.family.name(),
                self.n,
                self.parity,
                c.label,
                c.landmark + 1,
                c.printed
                    .iter()
                    .map(i64::to_string)
                    .collect::<Vec<_>>()
                    .join(";"),
                c.bfs,
                c.rows.join(";"),
                c.verdict.name()
            ));
        }
        for a in &self.anomalies {
            rows.push(format!(
                "anomaly,{},{},{},{},,,,{},{}",
                self.family.name(),
                self.n,
                self.parity,
                a.label,
                a.detail,
                a.kind.name()
            ));
        }
        rows
    }
}

fn anomaly_for(hits: &[PrintedCode]) -> Option<AnomalyKind> {
    if hits.len() < 2 {
        return None;
    }
    let duplicated = hits.iter().enumerate().any(|(i, a)| {
        hits[i + 1..]
            .iter()
            .any(|b| a.table_layer == b.table_layer && a.condition == b.condition)
    });
    Some(if duplicated {
        AnomalyKind::DuplicatedRow
    } else {
        AnomalyKind::Overlap
    })
}

/// Compares the printed tables with BFS codes w.r.t. the stated witness for
/// every vertex. Vertices are visited layer by layer, ring position
/// ascending.
pub fn verify_tables(family: Family, n: usize) -> Result<DiscrepancyReport, FamilyError> {
    let witness = theorem_witness(family, n)?;
    let spec = FamilySpec::new(family, Some(n), None)?;
    let g = spec.generate()?;
    let d = apsp(&g);
    let layers = family.layers().expect("polytope family");

    let mut cells = Vec::with_capacity(layers * n * 4);
    let mut anomalies = Vec::new();
    for r in 1..=layers {
        for l in 1..=n {
            let v = polytope_vertex(n, l, r);
            let label = spec.label(v);
            let hits = match table_codes(family, n, v) {
                Ok(h) => h,
                Err(ClosedFormError::RangeGap { .. }) => {
                    anomalies.push(Anomaly {
                        kind: AnomalyKind::Gap,
                        vertex: v,
                        label: label.clone(),
                        detail: format!("no row for l={l} on layer {r}"),
                    });
                    Vec::new()
                }
                Err(e) => unreachable!("vertex in range: {e}"),
            };
            if let Some(kind) = anomaly_for(&hits) {
                anomalies.push(Anomaly {
                    kind,
                    vertex: v,
                    label: label.clone(),
                    detail: hits
                        .iter()
                        .map(|h| format!("{} [{}]", h.row_ref(), h.condition))
                        .collect::<Vec<_>>()
                        .join(";"),
                });
            }
            let rows: Vec<String> = hits.iter().map(PrintedCode::row_ref).collect();
            for (i, &w) in witness.ids.iter().enumerate() {
                let printed: Vec<i64> = hits.iter().map(|h| h.values[i]).collect();
                let bfs = i64::from(d.get(v, w));
                cells.push(CellComparison {
                    vertex: v,
                    label: label.clone(),
                    landmark: i,
                    verdict: Verdict::of(&printed, bfs),
                    printed,
                    rows: rows.clone(),
                    bfs,
                });
            }
        }
    }
    Ok(DiscrepancyReport {
        family,
        n,
        parity: Parity::of(n),
        witness: witness.ids,
        cells,
        anomalies,
    })
}

/// A claimed relation `code(j^l_to) = code(j^l_from) + offset` for all `l`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ShiftRelation {
    pub family: Family,
    pub from: usize,
    pub to: usize,
    pub offset: [i64; 4],
}

impl ShiftRelation {
    pub fn describe(&self) -> String {
        let o = self.offset;
        format!(
            "layer {} = layer {} + ({},{},{},{})",
            self.to, self.from, o[0], o[1], o[2], o[3]
        )
    }
}

pub fn shifted_code_layers(family: Family) -> Vec<ShiftRelation> {
    let rel = |from, to| ShiftRelation {
        family,
        from,
        to,
        offset: [1, 1, 1, 1],
    };
    match family {
        Family::SPoly => vec![rel(1, 2), rel(3, 4)],
        Family::TPoly => vec![rel(3, 4)],
        _ => Vec::new(),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShiftCheck {
    pub relation: ShiftRelation,
    pub n: usize,
    /// Ring positions where the relation fails under BFS.
    pub failures: Vec<usize>,
}

impl ShiftCheck {
    pub fn holds(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn csv_row(&self) -> String {
        let fails = self
            .failures
            .iter()
            .map(usize::to_string)
            .collect::<Vec<_>>()
            .join(";");
        format!(
            "shift,{},{},{},layer{}->layer{},,,,{},{}",
            self.relation.family.name(),
            self.n,
            Parity::of(self.n),
            self.relation.from,
            self.relation.to,
            fails,
            if self.holds() { "pass" } else { "fail" }
        )
    }
}

fn bfs_code(d: &DistanceMatrix, v: Vertex, witness: &[Vertex]) -> Vec<i64> {
    witness.iter().map(|&w| i64::from(d.get(v, w))).collect()
}

/// Checks each claimed shift relation against BFS codes w.r.t. the stated
/// witness.
pub fn verify_shifts(family: Family, n: usize) -> Result<Vec<ShiftCheck>, FamilyError> {
    let witness = theorem_witness(family, n)?;
    let g = FamilySpec::new(family, Some(n), None)?.generate()?;
    let d = apsp(&g);
    debug_assert!(half(n) >= 3);
    Ok(shifted_code_layers(family)
        .into_iter()
        .map(|relation| {
            let failures = (1..=n)
                .filter(|&l| {
                    let from = bfs_code(&d, polytope_vertex(n, l, relation.from), &witness.ids);
                    let to = bfs_code(&d, polytope_vertex(n, l, relation.to), &witness.ids);
                    from.iter()
                        .zip(&to)
                        .zip(relation.offset)
                        .any(|((a, b), o)| a + o != *b)
                })
                .collect();
            ShiftCheck {
                relation,
                n,
                failures,
            }
        })
        .collect())
}
