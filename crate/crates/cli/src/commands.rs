use std::fmt::Write as _;
use std::fs;
use std::io::Write as _;
use std::ops::RangeInclusive;
use std::path::Path;
use std::time::Instant;

use anyhow::{bail, Context, Result};

use ftres_core::closed_form::{self, DiscrepancyReport};
use ftres_core::resolvability::chain_check;
use ftres_core::sample::GraphSampler;
use ftres_core::{
    Certificate, Family, FamilySpec, Graph, Instance, Invariant, SolveOptions, Status, Vertex,
};

use crate::{exit, Format, GraphInput, RunFlags};

struct Source {
    graph: Graph,
    spec: Option<FamilySpec>,
    name: String,
}

impl Source {
    fn label(&self, v: Vertex) -> String {
        match &self.spec {
            Some(s) => s.label(v),
            None => format!("v^{}", v + 1),
        }
    }
}

fn family_spec(name: &str, n: Option<usize>, m: Option<usize>) -> Result<FamilySpec> {
    let family = Family::from_name(name)?;
    Ok(FamilySpec::new(family, n, m)?)
}

fn load(input: &GraphInput) -> Result<Source> {
    match (&input.family, &input.input) {
        (Some(f), None) => {
            let spec = family_spec(f, input.n, input.m)?;
            Ok(Source {
                graph: spec.generate()?,
                name: spec.to_string(),
                spec: Some(spec),
            })
        }
        (None, Some(path)) => {
            let text =
                fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
            Ok(Source {
                graph: Graph::from_edge_list(&text)?,
                spec: None,
                name: path.display().to_string(),
            })
        }
        _ => bail!("give exactly one of --family or --input"),
    }
}

fn options(run: &RunFlags) -> SolveOptions {
    SolveOptions {
        workers: run.workers as usize,
        max_k: run.max_k,
        ..SolveOptions::default()
    }
}

fn polytope(name: &str) -> Result<Family> {
    let f = Family::from_name(name)?;
    if !f.is_polytope() {
        bail!("{name} is not one of antiprism2, spoly, tpoly");
    }
    Ok(f)
}

pub fn gen(family: &str, n: Option<usize>, m: Option<usize>, out: Option<&Path>) -> Result<u8> {
    let g = family_spec(family, n, m)?.generate()?;
    let text = g.to_edge_list();
    match out {
        Some(p) => fs::write(p, text).with_context(|| format!("writing {}", p.display()))?,
        None => std::io::stdout().write_all(text.as_bytes())?,
    }
    Ok(0)
}

fn value_cell(c: &Certificate) -> String {
    match (c.status, c.value) {
        (Status::Value, Some(v)) => v.to_string(),
        (Status::Undefined, _) => "-".into(),
        _ => "?".into(),
    }
}

pub fn solve(inv: Invariant, input: &GraphInput, run: &RunFlags, format: Format) -> Result<u8> {
    let src = load(input)?;
    let inst = Instance::new(&src.graph);
    let cert = inst.solve(inv, &options(run));
    let label = |v| src.label(v);
    let witness = cert.witness.as_ref().map_or("-".to_string(), |w| {
        w.iter().map(|&v| label(v)).collect::<Vec<_>>().join("+")
    });
    match format {
        Format::Cert => print!("{}", cert.render(&src.graph, &label, !run.no_time)),
        Format::Text => println!(
            "{}({}) = {} [{}] witness {}",
            inv.name(),
            src.name,
            value_cell(&cert),
            cert.status.name(),
            witness
        ),
        Format::Csv => {
            println!("graph,invariant,status,value,witness");
            println!(
                "{},{},{},{},{}",
                src.name,
                inv.name(),
                cert.status.name(),
                value_cell(&cert),
                witness
            );
        }
    }
    Ok(if cert.is_definite() { 0 } else { exit::UNKNOWN })
}

fn binomial(n: usize, k: usize) -> u64 {
    (0..k).fold(1u64, |acc, i| acc * (n - i) as u64 / (i as u64 + 1))
}

pub fn verify_theorem(family: &str, ns: RangeInclusive<usize>, sweep_max: usize) -> Result<u8> {
    let family = polytope(family)?;
    let mut all = true;
    for n in ns {
        let report = closed_form::verify_witness(family, n)?;
        let mut line = format!("{} n={} {}:", family.name(), n, report.parity);
        for c in &report.candidates {
            let role = if c.primary { "stated" } else { "alternate" };
            let dels = c
                .deletions
                .iter()
                .map(|&ok| if ok { '1' } else { '0' })
                .collect::<String>();
            let _ = write!(
                line,
                " {role} {} resolving={} deletions={} FT {}",
                c.witness.label(),
                c.resolving,
                dels,
                if c.fault_tolerant { "PASS" } else { "FAIL" }
            );
            line.push(';');
        }
        let mut ok = report.passes();
        if n <= sweep_max {
            let g = FamilySpec::new(family, Some(n), None)?.generate()?;
            let (tried, found) = closed_form::exhaustive_ft_sweep(&g, 3);
            match found {
                None => {
                    let _ = write!(
                        line,
                        " no FT 3-subset ({tried}/{} checked) PASS",
                        binomial(g.order(), 3)
                    );
                }
                Some(s) => {
                    ok = false;
                    let _ = write!(line, " FT 3-subset {s:?} found FAIL");
                }
            }
        }
        if report.candidates.len() > 1 {
            let _ = write!(line, " valid: {}", report.passing().join(" | "));
        }
        let _ = write!(line, " => {}", if ok { "PASS" } else { "FAIL" });
        println!("{line}");
        all &= ok;
    }
    println!("{}", if all { "all PASS" } else { "some FAIL" });
    Ok(if all { 0 } else { exit::FAILED })
}

pub fn verify_tables(family: &str, ns: RangeInclusive<usize>, format: Format) -> Result<u8> {
    let family = polytope(family)?;
    let mut reports: Vec<DiscrepancyReport> = Vec::new();
    let mut shifts = Vec::new();
    for n in ns {
        reports.push(closed_form::verify_tables(family, n)?);
        shifts.extend(closed_form::verify_shifts(family, n)?);
    }
    let mut out = String::new();
    match format {
        Format::Csv => {
            let _ = writeln!(out, "{}", DiscrepancyReport::CSV_HEADER);
            for r in &reports {
                for row in r.csv_rows() {
                    let _ = writeln!(out, "{row}");
                }
            }
            for s in &shifts {
                let _ = writeln!(out, "{}", s.csv_row());
            }
        }
        Format::Text | Format::Cert => {
            for r in &reports {
                out.push_str(&r.render_table());
                let c = r.counts();
                let _ = writeln!(
                    out,
                    "# n={} cells={} match={} mismatch={} overlap_match={} overlap_partial={} overlap_mismatch={} gap={} anomalies={}",
                    r.n,
                    r.cells.len(),
                    c.matches,
                    c.mismatches,
                    c.overlap_match,
                    c.overlap_partial,
                    c.overlap_mismatch,
                    c.gaps,
                    r.anomalies.len()
                );
            }
            for s in &shifts {
                let _ = writeln!(
                    out,
                    "# n={} {} {}",
                    s.n,
                    s.relation.describe(),
                    if s.holds() { "PASS" } else { "FAIL" }
                );
            }
        }
    }
    print!("{out}");
    Ok(0)
}

pub fn chain(input: &GraphInput, run: &RunFlags, format: Format) -> Result<u8> {
    let src = load(input)?;
    let report = chain_check(&src.graph, &options(run));
    println!("{}", report.summary());
    let label = |v| src.label(v);
    match format {
        Format::Cert => {
            for c in [
                &report.dim,
                &report.fdim,
                &report.ir,
                &report.ifr,
                &report.beta,
            ] {
                println!();
                print!("{}", c.render(&src.graph, &label, !run.no_time));
            }
        }
        _ => {
            for c in &report.checks {
                println!("{}: {}", c.name, if c.holds { "ok" } else { "FAIL" });
            }
            if let Some(b) = report.ifr_within_beta {
                println!("ifr<=beta: {}", if b { "yes" } else { "no" });
            }
            println!(
                "ifr defined => ir defined: {}",
                if report.ifr.status != Status::Value || report.ir.status == Status::Value {
                    "yes"
                } else {
                    "no"
                }
            );
            if let Some(q) = report.hernando_quantity {
                println!("dim*(1+2*5^(dim-1)): {q}");
            }
        }
    }
    let definite = [
        &report.dim,
        &report.fdim,
        &report.ir,
        &report.ifr,
        &report.beta,
    ]
    .iter()
    .all(|c| c.is_definite());
    Ok(if !definite {
        exit::UNKNOWN
    } else if report.holds() {
        0
    } else {
        exit::FAILED
    })
}

pub fn open_problem(family: Option<&str>, ns: RangeInclusive<usize>, run: &RunFlags) -> Result<u8> {
    let families = match family {
        Some(f) => vec![polytope(f)?],
        None => Family::POLYTOPES.to_vec(),
    };
    let opts = options(run);
    let mut code = 0;
    println!("family,n,status,value,witness,verified,time_ms");
    for family in families {
        for n in ns.clone() {
            let spec = FamilySpec::new(family, Some(n), None)?;
            let g = spec.generate()?;
            let inst = Instance::new(&g);
            let start = Instant::now();
            let cert = inst.ifr(&opts);
            let elapsed = start.elapsed();
            let verified = inst.verify(&cert);
            if !cert.is_definite() {
                code = exit::UNKNOWN;
            } else if !verified {
                code = exit::FAILED;
            }
            let witness = cert
                .witness
                .as_ref()
                .map_or("-".to_string(), |w| spec.label_set(w));
            let time = if run.no_time {
                "-".to_string()
            } else {
                elapsed.as_millis().to_string()
            };
            println!(
                "{},{},{},{},{},{},{}",
                family.name(),
                n,
                cert.status.name(),
                value_cell(&cert),
                witness,
                verified,
                time
            );
        }
    }
    Ok(code)
}

/// Statuses and values must agree between the shortcut and plain searches.
fn same_answer(a: &Certificate, b: &Certificate) -> bool {
    a.status == b.status && a.value == b.value && a.witness == b.witness
}

pub fn survey(
    seed: u64,
    count: usize,
    orders: RangeInclusive<usize>,
    run: &RunFlags,
) -> Result<u8> {
    if orders.is_empty() || *orders.start() == 0 {
        bail!("order range must be non-empty and start at 1 or more");
    }
    let mut sampler = GraphSampler::new(seed);
    let opts = options(run);
    let plain = SolveOptions {
        twin_shortcuts: false,
        ..opts.clone()
    };
    let mut chain_failures = 0;
    let mut disagreements = 0;
    println!("index,order,size,dim,fdim,ir,ifr,beta,chain,shortcuts_agree,sha256");
    for i in 0..count {
        let g = sampler.next_graph(*orders.start(), *orders.end());
        let report = chain_check(&g, &opts);
        let inst = Instance::new(&g);
        let agree = [Invariant::Fdim, Invariant::Ir, Invariant::Ifr]
            .into_iter()
            .all(|inv| same_answer(&inst.solve(inv, &opts), &inst.solve(inv, &plain)));
        chain_failures += usize::from(!report.holds());
        disagreements += usize::from(!agree);
        println!(
            "{},{},{},{},{},{},{},{},{},{},{}",
            i,
            g.order(),
            g.size(),
            value_cell(&report.dim),
            value_cell(&report.fdim),
            value_cell(&report.ir),
            value_cell(&report.ifr),
            value_cell(&report.beta),
            if report.holds() { "ok" } else { "FAIL" },
            agree,
            g.edge_list_hash()
        );
    }
    println!(
        "# graphs={count} chain_failures={chain_failures} shortcut_disagreements={disagreements}"
    );
    Ok(if chain_failures == 0 && disagreements == 0 {
        0
    } else {
        exit::FAILED
    })
}
