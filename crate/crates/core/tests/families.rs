use ftres_core::closed_form::{
    self, exhaustive_ft_sweep, verify_shifts, verify_witness, AnomalyKind,
};
use ftres_core::families::*;
use ftres_core::{apsp, Family, FamilySpec, Graph};

fn rotate(n: usize, layers: usize) -> Vec<usize> {
    (0..layers * n)
        .map(|v| {
            let (l, r) = polytope_position(n, v);
            polytope_vertex(n, l + 1, r)
        })
        .collect()
}

#[test]
fn polytope_counts_and_symmetry() {
    for n in 3..=200 {
        let a = gen_double_antiprism(n).unwrap();
        assert_eq!((a.order(), a.size()), (3 * n, 7 * n));
        let s = gen_s_poly(n).unwrap();
        assert_eq!((s.order(), s.size()), (4 * n, 8 * n));
        let t = gen_t_poly(n).unwrap();
        assert_eq!((t.order(), t.size()), (4 * n, 8 * n));
        assert!(a.is_automorphism(&rotate(n, 3)));
        assert!(s.is_automorphism(&rotate(n, 4)));
        assert!(t.is_automorphism(&rotate(n, 4)));
    }
}

#[test]
fn generators_are_deterministic_and_valid() {
    let specs = [
        FamilySpec::Path(7),
        FamilySpec::Cycle(9),
        FamilySpec::Complete(6),
        FamilySpec::CompleteBipartite(2, 5),
        FamilySpec::Petersen,
        FamilySpec::Q3,
        FamilySpec::DoubleAntiprism(11),
        FamilySpec::SPoly(10),
        FamilySpec::TPoly(13),
        FamilySpec::GraphH(0),
    ];
    for spec in specs {
        let g = spec.generate().unwrap();
        assert_eq!(g.to_edge_list(), spec.generate().unwrap().to_edge_list());
        assert_eq!(Graph::from_edge_list(&g.to_edge_list()).unwrap(), g);
        let total: usize = (0..g.order()).map(|v| g.degree(v)).sum();
        assert_eq!(total, 2 * g.size());
        let d = apsp(&g);
        for u in 0..g.order() {
            for v in 0..g.order() {
                assert_eq!(d.get(u, v) == 1, g.has_edge(u, v));
            }
        }
    }
}

#[test]
fn graph_h_matches_published_codes() {
    let hs = reconstruct_graph_h();
    assert!(!hs.is_empty());
    for h in &hs {
        let d = apsp(h);
        for (v, code) in GRAPH_H_CODES.iter().enumerate() {
            let got: Vec<u16> = GRAPH_H_LANDMARKS.iter().map(|&w| d.get(v, w)).collect();
            assert_eq!(got.as_slice(), code.as_slice(), "v^{}", v + 1);
        }
    }
}

#[test]
fn witnesses_hold_and_no_three_set_is_fault_tolerant() {
    for family in Family::POLYTOPES {
        for n in 6..=50 {
            assert!(
                verify_witness(family, n).unwrap().passes(),
                "{} n={n}",
                family.name()
            );
        }
        for n in 6..=10 {
            let g = FamilySpec::new(family, Some(n), None)
                .unwrap()
                .generate()
                .unwrap();
            assert_eq!(
                exhaustive_ft_sweep(&g, 3).1,
                None,
                "{} n={n}",
                family.name()
            );
        }
    }
}

#[test]
fn shift_relations_hold() {
    for family in [Family::SPoly, Family::TPoly] {
        for n in 6..=20 {
            for c in verify_shifts(family, n).unwrap() {
                assert!(
                    c.holds(),
                    "{} n={n} {}",
                    family.name(),
                    c.relation.describe()
                );
            }
        }
    }
}

#[test]
fn table_reports_are_stable() {
    for family in Family::POLYTOPES {
        for n in 6..=12 {
            let a = closed_form::verify_tables(family, n).unwrap();
            let b = closed_form::verify_tables(family, n).unwrap();
            assert_eq!(a, b);
            assert_eq!(a.cells.len(), family.layers().unwrap() * n * 4);
            let odd_antiprism = family == Family::DoubleAntiprism && n % 2 == 1;
            assert_eq!(a.has_anomaly(AnomalyKind::DuplicatedRow), odd_antiprism);
            assert!(!a.has_anomaly(AnomalyKind::Gap));
        }
    }
}
