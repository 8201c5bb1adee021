//! Exhaustive check that each reduction maps yes-instances to yes-instances and
//! no-instances to no-instances, over every labelled cubic graph of a given size.

use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;

use crate::enumerate::enumerate_cubic;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::measures::{conductance, relative_density, single_cluster_editing};
use crate::rational::Rational;
use crate::reductions::{
    build_conductance_instance, build_density_instance, build_editing_instance, lift_cut,
    ReductionKind,
};
use crate::solvers::{best_density, max_cut, min_bisection, min_conductance, min_editing, DensityKind};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationRow {
    pub a: u64,
    pub source: bool,
    pub target: bool,
    pub agree: bool,
    /// When both sides say yes: whether the source optimum, carried over to the
    /// target, meets the target threshold on its own.
    pub witness_check: Option<bool>,
}

/// All threshold rows for one source graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub kind: ReductionKind,
    pub n: usize,
    /// Position in the enumeration order for this `n`.
    pub graph_index: usize,
    pub graph_hash: String,
    /// Max cut (conductance) or min bisection (density, editing) of the source.
    pub source_optimum: Rational,
    /// Min conductance of the gadget, best relative density or min editing at `k = n/2`.
    pub target_optimum: Rational,
    pub rows: Vec<VerificationRow>,
    pub mismatches: usize,
    pub witness_failures: usize,
    #[serde(skip)]
    pub wall_time: Duration,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationSummary {
    pub kind: ReductionKind,
    pub n_max: usize,
    pub graphs: usize,
    pub rows: usize,
    pub mismatches: usize,
    pub witness_failures: usize,
    pub wall_ms: u128,
}

impl VerificationSummary {
    pub fn passed(&self) -> bool {
        self.mismatches == 0 && self.witness_failures == 0
    }
}

#[derive(Clone, Debug, Default)]
pub struct VerifyOptions {
    /// Threshold sweep; defaults to `1..=3n/2` for each source size.
    pub thresholds: Option<std::ops::RangeInclusive<u64>>,
    /// Verify distinct graphs on the rayon pool. Output order is unaffected.
    pub parallel: bool,
}

fn sizes(n_max: usize) -> Result<Vec<usize>> {
    if !matches!(n_max, 4 | 6 | 8) {
        return Err(Error::InvalidArgument(format!(
            "n-max must be 4, 6 or 8, got {n_max}"
        )));
    }
    Ok((4..=n_max).step_by(2).collect())
}

/// Checks one source graph against every threshold.
pub fn verify_graph(
    kind: ReductionKind,
    g: &Graph,
    graph_index: usize,
    thresholds: std::ops::RangeInclusive<u64>,
) -> Result<VerificationReport> {
    let start = Instant::now();
    let n = g.vertex_count();
    let mut rows = Vec::new();
    let (source_optimum, target_optimum);
    match kind {
        ReductionKind::Conductance => {
            let best_cut = max_cut(g)?;
            let gadget = build_conductance_instance(g, 1)?.target;
            let best_phi = min_conductance(&gadget)?;
            let lifted = lift_cut(&best_cut.witness, n)?;
            let lifted_value = conductance(&gadget, &lifted)?;
            for a in thresholds {
                let red = build_conductance_instance(g, a)?;
                let source = best_cut.value >= Rational::from(a as i64);
                let target = best_phi.value <= red.phi;
                rows.push(row(a, source, target, || lifted_value <= red.phi));
            }
            source_optimum = best_cut.value;
            target_optimum = best_phi.value;
        }
        ReductionKind::Density => {
            let bisection = min_bisection(g)?;
            let best = best_density(g, n / 2, DensityKind::Relative)?;
            let carried = relative_density(g, &bisection.witness)?;
            for a in thresholds {
                let red = build_density_instance(g, a)?;
                let source = bisection.value <= Rational::from(a as i64);
                let target = best.value >= red.r;
                rows.push(row(a, source, target, || carried >= red.r));
            }
            source_optimum = bisection.value;
            target_optimum = best.value;
        }
        ReductionKind::Editing => {
            let bisection = min_bisection(g)?;
            let best = min_editing(g, n / 2)?;
            let carried = single_cluster_editing(g, &bisection.witness)?;
            for a in thresholds {
                let red = build_editing_instance(g, a)?;
                let source = bisection.value <= Rational::from(a as i64);
                let target = best.value <= red.m;
                rows.push(row(a, source, target, || carried <= red.m));
            }
            source_optimum = bisection.value;
            target_optimum = best.value;
        }
    }
    let mismatches = rows.iter().filter(|r| !r.agree).count();
    let witness_failures = rows.iter().filter(|r| r.witness_check == Some(false)).count();
    Ok(VerificationReport {
        kind,
        n,
        graph_index,
        graph_hash: g.digest(),
        source_optimum,
        target_optimum,
        rows,
        mismatches,
        witness_failures,
        wall_time: start.elapsed(),
    })
}

fn row(a: u64, source: bool, target: bool, witness: impl FnOnce() -> bool) -> VerificationRow {
    VerificationRow {
        a,
        source,
        target,
        agree: source == target,
        witness_check: (source && target).then(witness),
    }
}

/// Reports for every labelled cubic graph with `4 <= n <= n_max`, in enumeration order.
pub fn verify_reduction(
    kind: ReductionKind,
    n_max: usize,
    opts: &VerifyOptions,
) -> Result<Vec<VerificationReport>> {
    let mut out = Vec::new();
    for n in sizes(n_max)? {
        let graphs: Vec<Graph> = enumerate_cubic(n)?.collect();
        let sweep = opts.thresholds.clone().unwrap_or(1..=(3 * n as u64 / 2));
        let one = |(i, g): (usize, &Graph)| verify_graph(kind, g, i, sweep.clone());
        let reports: Result<Vec<_>> = if opts.parallel {
            graphs.par_iter().enumerate().map(one).collect()
        } else {
            graphs.iter().enumerate().map(one).collect()
        };
        out.extend(reports?);
    }
    Ok(out)
}

pub fn verify_conductance_reduction(n_max: usize) -> Result<Vec<VerificationReport>> {
    verify_reduction(ReductionKind::Conductance, n_max, &VerifyOptions::default())
}

pub fn verify_density_reduction(n_max: usize) -> Result<Vec<VerificationReport>> {
    verify_reduction(ReductionKind::Density, n_max, &VerifyOptions::default())
}

pub fn verify_editing_reduction(n_max: usize) -> Result<Vec<VerificationReport>> {
    verify_reduction(ReductionKind::Editing, n_max, &VerifyOptions::default())
}

pub fn summarize(
    kind: ReductionKind,
    n_max: usize,
    reports: &[VerificationReport],
    wall: Duration,
) -> VerificationSummary {
    VerificationSummary {
        kind,
        n_max,
        graphs: reports.len(),
        rows: reports.iter().map(|r| r.rows.len()).sum(),
        mismatches: reports.iter().map(|r| r.mismatches).sum(),
        witness_failures: reports.iter().map(|r| r.witness_failures).sum(),
        wall_ms: wall.as_millis(),
    }
}

#[derive(Serialize)]
struct RowRecord<'a> {
    record: &'static str,
    kind: ReductionKind,
    n: usize,
    graph_index: usize,
    graph_hash: &'a str,
    source_optimum: Rational,
    target_optimum: Rational,
    #[serde(flatten)]
    row: &'a VerificationRow,
}

#[derive(Serialize)]
struct SummaryRecord<'a> {
    record: &'static str,
    #[serde(flatten)]
    summary: &'a VerificationSummary,
}

/// One JSON line per `(graph, a)` row, then the summary line.
pub fn report_lines(reports: &[VerificationReport], summary: &VerificationSummary) -> Vec<String> {
    let mut lines = Vec::with_capacity(summary.rows + 1);
    for rep in reports {
        for r in &rep.rows {
            let rec = RowRecord {
                record: "row",
                kind: rep.kind,
                n: rep.n,
                graph_index: rep.graph_index,
                graph_hash: &rep.graph_hash,
                source_optimum: rep.source_optimum,
                target_optimum: rep.target_optimum,
                row: r,
            };
            lines.push(serde_json::to_string(&rec).expect("serializable"));
        }
    }
    let rec = SummaryRecord { record: "summary", summary };
    lines.push(serde_json::to_string(&rec).expect("serializable"));
    lines
}
