//! Exhaustive optimizers and decision procedures over vertex subsets.
//!
//! Every optimizer walks the subsets of its search space in increasing bitmask
//! order and keeps the first best value it meets, so the reported witness is the
//! numerically smallest optimal mask. The space can be split into contiguous
//! chunks that run on the rayon pool; per-chunk bests are merged on
//! `(value, mask)`, which gives the same answer for any chunk count.
//!
//! Where a symmetry lets the search pin vertex 0, the canonical witness is the
//! smallest mask *within that restricted space*:
//! - [`max_cut`]: vertex 0 outside `S` (a cut equals its complement's cut);
//! - [`min_bisection`] and [`min_conductance`]: vertex 0 inside `S`.

use std::cmp::Reverse;
use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::enumerate::MaskRange;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSubset, MASK_LIMIT};
use crate::rational::{Frac, Rational};

/// Best subset found by a solver.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Optimum {
    pub witness: VertexSubset,
    pub value: Rational,
    /// Subsets evaluated.
    pub explored: u64,
    /// Set when every candidate is degenerate (conductance of an edgeless graph).
    pub degenerate: bool,
}

/// How the search space is partitioned. `workers == 1` runs inline on the caller.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SolveConfig {
    pub workers: usize,
}

impl SolveConfig {
    pub const SEQUENTIAL: SolveConfig = SolveConfig { workers: 1 };

    pub fn parallel(workers: usize) -> Self {
        SolveConfig { workers: workers.max(1) }
    }
}

impl Default for SolveConfig {
    fn default() -> Self {
        Self::SEQUENTIAL
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum DensityKind {
    Local,
    Relative,
}

/// The decision problems: which measure, and which way the threshold points.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Problem {
    /// min conductance <= threshold
    Conductance,
    /// max local density over `|S| = k` >= threshold
    LocalDensity,
    /// max relative density over `|S| = k` >= threshold
    RelativeDensity,
    /// min single-cluster editing over `|S| = k` <= threshold
    Editing,
    /// max cut >= threshold
    MaxCut,
    /// min bisection <= threshold
    MinBisection,
}

impl Problem {
    pub const ALL: [Problem; 6] = [
        Problem::Conductance,
        Problem::LocalDensity,
        Problem::RelativeDensity,
        Problem::Editing,
        Problem::MaxCut,
        Problem::MinBisection,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Problem::Conductance => "conductance",
            Problem::LocalDensity => "local-density",
            Problem::RelativeDensity => "relative-density",
            Problem::Editing => "editing",
            Problem::MaxCut => "max-cut",
            Problem::MinBisection => "min-bisection",
        }
    }

    pub fn needs_k(self) -> bool {
        matches!(self, Problem::LocalDensity | Problem::RelativeDensity | Problem::Editing)
    }

    /// Whether a larger optimum is better (and the question is `>= threshold`).
    pub fn maximizes(self) -> bool {
        matches!(self, Problem::LocalDensity | Problem::RelativeDensity | Problem::MaxCut)
    }
}

impl fmt::Display for Problem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Problem {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Problem::ALL
            .into_iter()
            .find(|p| p.name() == s)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown problem `{s}`")))
    }
}

#[derive(Clone, Debug)]
pub struct DecisionInstance<'g> {
    pub graph: &'g Graph,
    pub problem: Problem,
    pub k: Option<usize>,
    pub threshold: Rational,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decision {
    pub answer: bool,
    /// The canonical optimum when it meets the threshold.
    pub witness: Option<VertexSubset>,
    pub optimum: Optimum,
}

/// Adjacency rows as masks, for `n <= 63`.
pub(crate) struct BitGraph {
    n: usize,
    rows: Vec<u64>,
    total_degree: u64,
}

impl BitGraph {
    pub fn new(g: &Graph) -> Result<Self> {
        let n = g.vertex_count();
        if n > MASK_LIMIT {
            return Err(Error::TooManyVertices { n, limit: MASK_LIMIT });
        }
        Ok(BitGraph {
            n,
            rows: g.adjacency_masks()?,
            total_degree: 2 * g.edge_count() as u64,
        })
    }

    #[inline]
    fn for_each_member(s: u64, mut f: impl FnMut(usize)) {
        let mut rest = s;
        while rest != 0 {
            f(rest.trailing_zeros() as usize);
            rest &= rest - 1;
        }
    }

    #[inline]
    pub fn cut(&self, s: u64) -> u64 {
        let mut c = 0;
        Self::for_each_member(s, |v| c += (self.rows[v] & !s).count_ones() as u64);
        c
    }

    /// `(|E(S)|, c(S), d(S))`
    #[inline]
    pub fn profile(&self, s: u64) -> (u64, u64, u64) {
        let (mut twice_internal, mut cut) = (0u64, 0u64);
        Self::for_each_member(s, |v| {
            twice_internal += (self.rows[v] & s).count_ones() as u64;
            cut += (self.rows[v] & !s).count_ones() as u64;
        });
        (twice_internal / 2, cut, twice_internal + cut)
    }

    #[inline]
    pub fn conductance(&self, s: u64) -> Frac {
        let (_, cut, inside) = self.profile(s);
        let denom = inside.min(self.total_degree - inside);
        if denom == 0 {
            Frac::new(0, 1)
        } else {
            Frac::new(cut, denom)
        }
    }

    fn subset(&self, mask: u64) -> VertexSubset {
        VertexSubset::from_mask(self.n, mask).expect("mask within graph")
    }
}

struct Best<V> {
    value: V,
    mask: u64,
}

/// Minimizes `eval` over the masks of `width` bits (popcount `k` if given).
/// `eval` returns `None` for masks outside the feasible set.
fn search<V, F>(width: u32, k: Option<u32>, cfg: SolveConfig, eval: F) -> (Option<Best<V>>, u64)
where
    V: Ord + Copy + Send,
    F: Fn(u64) -> Option<V> + Sync,
{
    let scan = |lo: u64, hi: u64| {
        let mut best: Option<Best<V>> = None;
        let mut explored = 0u64;
        for mask in MaskRange::new(width, k, lo, hi) {
            if let Some(v) = eval(mask) {
                explored += 1;
                if best.as_ref().is_none_or(|b| v < b.value) {
                    best = Some(Best { value: v, mask });
                }
            }
        }
        (best, explored)
    };
    let merge = |a: (Option<Best<V>>, u64), b: (Option<Best<V>>, u64)| {
        let best = match (a.0, b.0) {
            (None, x) | (x, None) => x,
            (Some(x), Some(y)) => Some(if (y.value, y.mask) < (x.value, x.mask) { y } else { x }),
        };
        (best, a.1 + b.1)
    };

    let space = 1u64 << width;
    let chunks = (cfg.workers.max(1) as u64).min(space);
    if chunks <= 1 {
        return scan(0, space);
    }
    let step = space.div_ceil(chunks);
    let bounds: Vec<(u64, u64)> = (0..chunks)
        .map(|i| (i * step, ((i + 1) * step).min(space)))
        .filter(|(lo, hi)| lo < hi)
        .collect();
    bounds
        .into_par_iter()
        .map(|(lo, hi)| scan(lo, hi))
        .reduce(|| (None, 0), merge)
}

fn check_size(n: usize, min: usize) -> Result<()> {
    if n > MASK_LIMIT {
        return Err(Error::TooManyVertices { n, limit: MASK_LIMIT });
    }
    if n < min {
        return Err(Error::InvalidArgument(format!("need at least {min} vertices, got {n}")));
    }
    Ok(())
}

fn check_k(n: usize, k: usize) -> Result<()> {
    if k == 0 || k > n {
        return Err(Error::InvalidArgument(format!("cardinality k = {k} outside 1..={n}")));
    }
    Ok(())
}

pub fn max_cut(g: &Graph) -> Result<Optimum> {
    max_cut_with(g, SolveConfig::default())
}

/// Largest cut over all `S`, searched with vertex 0 fixed outside `S`.
pub fn max_cut_with(g: &Graph, cfg: SolveConfig) -> Result<Optimum> {
    let n = g.vertex_count();
    check_size(n, 1)?;
    let bg = BitGraph::new(g)?;
    let (best, explored) = search((n - 1) as u32, None, cfg, |free| {
        Some(Reverse(bg.cut(free << 1)))
    });
    let best = best.expect("search space is nonempty");
    Ok(Optimum {
        witness: bg.subset(best.mask << 1),
        value: Rational::from_integer(best.value.0 as i64),
        explored,
        degenerate: false,
    })
}

pub fn min_bisection(g: &Graph) -> Result<Optimum> {
    min_bisection_with(g, SolveConfig::default())
}

/// Smallest cut over `|S| = n/2`, searched with vertex 0 fixed inside `S`.
pub fn min_bisection_with(g: &Graph, cfg: SolveConfig) -> Result<Optimum> {
    let n = g.vertex_count();
    check_size(n, 2)?;
    if n % 2 == 1 {
        return Err(Error::InvalidArgument(format!("bisection needs an even vertex count, got {n}")));
    }
    let bg = BitGraph::new(g)?;
    let (best, explored) = search((n - 1) as u32, Some((n / 2 - 1) as u32), cfg, |free| {
        Some(bg.cut(free << 1 | 1))
    });
    let best = best.expect("search space is nonempty");
    Ok(Optimum {
        witness: bg.subset(best.mask << 1 | 1),
        value: Rational::from_integer(best.value as i64),
        explored,
        degenerate: false,
    })
}

pub fn min_conductance(g: &Graph) -> Result<Optimum> {
    min_conductance_with(g, SolveConfig::default())
}

/// Smallest conductance over proper nonempty `S` containing vertex 0.
///
/// An edgeless graph has no meaningful cut; it yields the singleton `{0}` with
/// value 0 and `degenerate` set.
pub fn min_conductance_with(g: &Graph, cfg: SolveConfig) -> Result<Optimum> {
    let n = g.vertex_count();
    check_size(n, 2)?;
    let bg = BitGraph::new(g)?;
    if g.edge_count() == 0 {
        return Ok(Optimum {
            witness: bg.subset(1),
            value: Rational::ZERO,
            explored: 0,
            degenerate: true,
        });
    }
    let all_free = (1u64 << (n - 1)) - 1;
    let (best, explored) = search((n - 1) as u32, None, cfg, |free| {
        (free != all_free).then(|| bg.conductance(free << 1 | 1))
    });
    let best = best.expect("n >= 2 leaves a proper subset");
    Ok(Optimum {
        witness: bg.subset(best.mask << 1 | 1),
        value: best.value.to_rational(),
        explored,
        degenerate: false,
    })
}

/// Reference search over all proper nonempty subsets with no symmetry pinning.
pub fn min_conductance_unrestricted(g: &Graph) -> Result<Optimum> {
    let n = g.vertex_count();
    check_size(n, 2)?;
    let bg = BitGraph::new(g)?;
    let full = (1u64 << n) - 1;
    let (best, explored) = search(n as u32, None, SolveConfig::SEQUENTIAL, |s| {
        (s != 0 && s != full).then(|| bg.conductance(s))
    });
    let best = best.expect("n >= 2 leaves a proper subset");
    Ok(Optimum {
        witness: bg.subset(best.mask),
        value: best.value.to_rational(),
        explored,
        degenerate: g.edge_count() == 0,
    })
}

pub fn best_density(g: &Graph, k: usize, kind: DensityKind) -> Result<Optimum> {
    best_density_with(g, k, kind, SolveConfig::default())
}

/// Largest local or relative density over `|S| = k`.
pub fn best_density_with(g: &Graph, k: usize, kind: DensityKind, cfg: SolveConfig) -> Result<Optimum> {
    let n = g.vertex_count();
    check_size(n, 1)?;
    check_k(n, k)?;
    let bg = BitGraph::new(g)?;
    let k64 = k as u64;
    let (best, explored) = search(n as u32, Some(k as u32), cfg, |s| {
        let (internal, cut, _) = bg.profile(s);
        let frac = match kind {
            DensityKind::Local if k64 < 2 => Frac::new(0, 1),
            DensityKind::Local => Frac::new(2 * internal, k64 * (k64 - 1)),
            DensityKind::Relative if internal + cut == 0 => Frac::new(0, 1),
            DensityKind::Relative => Frac::new(internal, internal + cut),
        };
        Some(Reverse(frac))
    });
    let best = best.expect("k-subsets exist");
    Ok(Optimum {
        witness: bg.subset(best.mask),
        value: best.value.0.to_rational(),
        explored,
        degenerate: false,
    })
}

pub fn min_editing(g: &Graph, k: usize) -> Result<Optimum> {
    min_editing_with(g, k, SolveConfig::default())
}

/// Fewest edge edits isolating some `|S| = k` as a clique.
pub fn min_editing_with(g: &Graph, k: usize, cfg: SolveConfig) -> Result<Optimum> {
    let n = g.vertex_count();
    check_size(n, 1)?;
    check_k(n, k)?;
    let bg = BitGraph::new(g)?;
    let pairs = (k * (k - 1) / 2) as u64;
    let (best, explored) = search(n as u32, Some(k as u32), cfg, |s| {
        let (internal, cut, _) = bg.profile(s);
        Some(pairs - internal + cut)
    });
    let best = best.expect("k-subsets exist");
    Ok(Optimum {
        witness: bg.subset(best.mask),
        value: Rational::from_integer(best.value as i64),
        explored,
        degenerate: false,
    })
}

/// Runs the optimizer behind `problem`. `k` is required exactly for the
/// cardinality-constrained problems.
pub fn optimize(g: &Graph, problem: Problem, k: Option<usize>, cfg: SolveConfig) -> Result<Optimum> {
    match (problem.needs_k(), k) {
        (true, None) => {
            return Err(Error::InvalidArgument(format!("{problem} requires a cardinality k")))
        }
        (false, Some(_)) => {
            return Err(Error::InvalidArgument(format!("{problem} does not take a cardinality k")))
        }
        _ => {}
    }
    match problem {
        Problem::Conductance => min_conductance_with(g, cfg),
        Problem::LocalDensity => best_density_with(g, k.unwrap(), DensityKind::Local, cfg),
        Problem::RelativeDensity => best_density_with(g, k.unwrap(), DensityKind::Relative, cfg),
        Problem::Editing => min_editing_with(g, k.unwrap(), cfg),
        Problem::MaxCut => max_cut_with(g, cfg),
        Problem::MinBisection => min_bisection_with(g, cfg),
    }
}

pub fn decide(inst: &DecisionInstance<'_>) -> Result<Decision> {
    decide_with(inst, SolveConfig::default())
}

/// Answers the instance by comparing the exact optimum to the threshold.
pub fn decide_with(inst: &DecisionInstance<'_>, cfg: SolveConfig) -> Result<Decision> {
    let optimum = optimize(inst.graph, inst.problem, inst.k, cfg)?;
    let answer = if inst.problem.maximizes() {
        optimum.value >= inst.threshold
    } else {
        optimum.value <= inst.threshold
    };
    Ok(Decision {
        answer,
        witness: answer.then(|| optimum.witness.clone()),
        optimum,
    })
}

/// Hill climbing on conductance by single-vertex moves, from `restarts` random
/// starting sets. The result is an upper bound on the true minimum and depends
/// only on `seed`. Works for any vertex count.
pub fn local_search_min_conductance(g: &Graph, seed: u64, restarts: usize) -> Result<Optimum> {
    let n = g.vertex_count();
    if n < 2 {
        return Err(Error::InvalidArgument(format!("need at least 2 vertices, got {n}")));
    }
    if g.edge_count() == 0 {
        return Err(Error::InvalidArgument("local search needs a graph with an edge".into()));
    }
    let total = 2 * g.edge_count() as u64;
    let value_of = |cut: u64, vol: u64| {
        let denom = vol.min(total - vol);
        if denom == 0 {
            Frac::new(0, 1)
        } else {
            Frac::new(cut, denom)
        }
    };

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut best: Option<(Frac, Vec<bool>)> = None;
    let mut explored = 0u64;

    for _ in 0..restarts.max(1) {
        let mut inside: Vec<bool> = (0..n).map(|_| rng.gen_bool(0.5)).collect();
        let mut size = inside.iter().filter(|&&b| b).count();
        if size == 0 || size == n {
            let v = rng.gen_range(0..n);
            inside[v] = !inside[v];
            size = if size == 0 { 1 } else { n - 1 };
        }
        let mut cut = g.edges().iter().filter(|&&(u, v)| inside[u] != inside[v]).count() as u64;
        let mut vol: u64 = (0..n).filter(|&v| inside[v]).map(|v| g.degree(v) as u64).sum();
        let mut current = value_of(cut, vol);
        explored += 1;

        loop {
            let mut step: Option<(Frac, usize, u64, u64)> = None;
            for v in 0..n {
                let leaving = inside[v];
                if (leaving && size == 1) || (!leaving && size == n - 1) {
                    continue;
                }
                let deg = g.degree(v) as u64;
                let nbrs_in = g.neighbors(v).iter().filter(|&&w| inside[w]).count() as u64;
                let (new_cut, new_vol) = if leaving {
                    (cut + nbrs_in - (deg - nbrs_in), vol - deg)
                } else {
                    (cut + (deg - nbrs_in) - nbrs_in, vol + deg)
                };
                let val = value_of(new_cut, new_vol);
                explored += 1;
                if val < current && step.as_ref().is_none_or(|s| val < s.0) {
                    step = Some((val, v, new_cut, new_vol));
                }
            }
            let Some((val, v, new_cut, new_vol)) = step else { break };
            if inside[v] {
                size -= 1;
            } else {
                size += 1;
            }
            inside[v] = !inside[v];
            cut = new_cut;
            vol = new_vol;
            current = val;
        }

        if best.as_ref().is_none_or(|b| current < b.0) {
            best = Some((current, inside));
        }
    }

    let (value, inside) = best.expect("at least one restart");
    let witness = VertexSubset::from_members(n, (0..n).filter(|&v| inside[v]))?;
    Ok(Optimum {
        witness,
        value: value.to_rational(),
        explored,
        degenerate: false,
    })
}
