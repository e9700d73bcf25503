//! The inequality chain `1 + dim <= fdim <= ifr <= 1 + beta <= n`.

use crate::graph::Graph;

use super::{Certificate, Instance, SolveOptions, Status};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainCheck {
    pub name: &'static str,
    pub holds: bool,
}

#[derive(Clone, Debug)]
pub struct ChainReport {
    pub order: usize,
    pub dim: Certificate,
    pub fdim: Certificate,
    pub ir: Certificate,
    pub ifr: Certificate,
    pub beta: Certificate,
    /// Asserted relations; all must hold.
    pub checks: Vec<ChainCheck>,
    /// Whether `ifr <= beta`, when `ifr` exists. Recorded, not asserted.
    pub ifr_within_beta: Option<bool>,
    /// `dim * (1 + 2 * 5^(dim - 1))`, printed for inspection only.
    pub hernando_quantity: Option<u128>,
}

impl ChainReport {
    pub fn holds(&self) -> bool {
        self.checks.iter().all(|c| c.holds)
    }

    pub fn failures(&self) -> Vec<&'static str> {
        self.checks
            .iter()
            .filter(|c| !c.holds)
            .map(|c| c.name)
            .collect()
    }

    /// `dim fdim ir ifr beta | chain OK`, with `-` for undefined values.
    pub fn summary(&self) -> String {
        let show = |c: &Certificate| match (c.status, c.value) {
            (Status::Value, Some(v)) => v.to_string(),
            (Status::Undefined, _) => "-".to_string(),
            _ => "?".to_string(),
        };
        let verdict = if self.holds() {
            "chain OK".to_string()
        } else {
            format!("chain FAIL ({})", self.failures().join(","))
        };
        format!(
            "{} {} {} {} {} | {}",
            show(&self.dim),
            show(&self.fdim),
            show(&self.ir),
            show(&self.ifr),
            show(&self.beta),
            verdict
        )
    }
}

fn defined(c: &Certificate) -> Option<usize> {
    (c.status == Status::Value).then_some(c.value).flatten()
}

pub fn chain_check(g: &Graph, opts: &SolveOptions) -> ChainReport {
    let inst = Instance::new(g);
    let n = g.order();
    let dim = inst.metric_dimension(opts);
    let fdim = inst.ftmd(opts);
    let ir = inst.ir(opts);
    let ifr = inst.ifr(opts);
    let beta = inst.independence_number();

    let mut checks = Vec::new();
    let d = defined(&dim);
    let f = defined(&fdim);
    let b = defined(&beta);
    if let (Some(d), Some(f)) = (d, f) {
        checks.push(ChainCheck {
            name: "1+dim<=fdim",
            holds: d + 1 <= f,
        });
        checks.push(ChainCheck {
            name: "fdim<=n",
            holds: f <= n,
        });
    }
    let mut ifr_within_beta = None;
    if let Some(i) = defined(&ifr) {
        let f = f.unwrap_or(usize::MAX);
        let b = b.unwrap_or(0);
        checks.push(ChainCheck {
            name: "fdim<=ifr",
            holds: f <= i,
        });
        checks.push(ChainCheck {
            name: "ifr<=1+beta",
            holds: i <= b + 1,
        });
        checks.push(ChainCheck {
            name: "1+beta<=n",
            holds: b + 1 <= n,
        });
        checks.push(ChainCheck {
            name: "ifr=>ir",
            holds: defined(&ir).is_some(),
        });
        ifr_within_beta = Some(i <= b);
    }
    let hernando_quantity = d.filter(|&d| d >= 1 && d <= 50).map(|d| {
        let d = d as u128;
        d * (1 + 2 * 5u128.pow(d as u32 - 1))
    });

    ChainReport {
        order: n,
        dim,
        fdim,
        ir,
        ifr,
        beta,
        checks,
        ifr_within_beta,
        hernando_quantity,
    }
}
