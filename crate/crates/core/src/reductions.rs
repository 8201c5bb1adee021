//! Target-instance constructions from cubic max-cut and min-bisection sources.
//!
//! The conductance gadget on a cubic graph `G` with `n` vertices has `2n`
//! vertices: copy 1 of source vertex `v` is `v`, copy 2 is `v + n`. Each copy
//! carries the complement of `G`, and every copy-1 vertex is joined to every
//! copy-2 vertex (including its own twin). All degrees come out as `2n - 4`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSubset};
use crate::rational::Rational;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConductanceReduction {
    pub source: Graph,
    pub a: u64,
    pub target: Graph,
    /// `(n - 2a/n) / (2n - 4)`
    pub phi: Rational,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DensityReduction {
    pub source: Graph,
    pub a: u64,
    pub k: usize,
    /// `(3n - 2a) / (3n + 2a)`; negative once `a > 3n/2`.
    pub r: Rational,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EditingReduction {
    pub source: Graph,
    pub a: u64,
    pub k: usize,
    /// `(12a + n(n - 8)) / 8`, possibly non-integral.
    pub m: Rational,
}

/// Which target problem a reduction produces.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ReductionKind {
    Conductance,
    Density,
    Editing,
}

impl ReductionKind {
    pub const ALL: [ReductionKind; 3] =
        [ReductionKind::Conductance, ReductionKind::Density, ReductionKind::Editing];

    pub fn name(self) -> &'static str {
        match self {
            ReductionKind::Conductance => "conductance",
            ReductionKind::Density => "density",
            ReductionKind::Editing => "editing",
        }
    }
}

impl std::fmt::Display for ReductionKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for ReductionKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        ReductionKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown reduction `{s}`")))
    }
}

/// Source digest, parameters and threshold of a constructed instance, as emitted next
/// to the target graph file.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReductionMetadata {
    pub kind: ReductionKind,
    pub source_hash: String,
    pub source_n: usize,
    pub a: u64,
    /// Cardinality constraint of the target (absent for conductance).
    pub k: Option<usize>,
    /// `phi`, `r` or `m` depending on `kind`.
    pub threshold: Rational,
    pub target_n: usize,
    pub target_m: usize,
}

fn check_source(g: &Graph, a: u64) -> Result<i64> {
    if !g.is_cubic() {
        return Err(Error::NotCubic);
    }
    if a < 1 {
        return Err(Error::InvalidArgument("threshold a must be a positive integer".into()));
    }
    Ok(g.vertex_count() as i64)
}

pub fn build_conductance_instance(g: &Graph, a: u64) -> Result<ConductanceReduction> {
    let n64 = check_source(g, a)?;
    let n = g.vertex_count();
    let within = g.complement();
    let mut edges = Vec::with_capacity(n * (2 * n - 4));
    for copy in 0..2 {
        let off = copy * n;
        edges.extend(within.edges().iter().map(|&(u, v)| (u + off, v + off)));
    }
    for u in 0..n {
        edges.extend((0..n).map(|v| (u, v + n)));
    }
    let target = Graph::new(2 * n, edges)?;
    let a64 = a as i64;
    let phi = (Rational::from(n64) - Rational::new(2 * a64, n64)) / Rational::from(2 * n64 - 4);
    Ok(ConductanceReduction { source: g.clone(), a, target, phi })
}

/// `S^A`: copy-1 vertices of `A` together with copy-2 vertices of `V \ A`.
pub fn lift_cut(a_set: &VertexSubset, n: usize) -> Result<VertexSubset> {
    if a_set.universe() != n {
        return Err(Error::SubsetMismatch { subset: a_set.universe(), graph: n });
    }
    let mut out = VertexSubset::empty(2 * n);
    for v in 0..n {
        if a_set.contains(v) {
            out.insert(v);
        } else {
            out.insert(v + n);
        }
    }
    Ok(out)
}

/// Splits a gadget subset into its copy-1 and copy-2 source projections.
pub fn project_cut(s: &VertexSubset, n: usize) -> Result<(VertexSubset, VertexSubset)> {
    if s.universe() != 2 * n {
        return Err(Error::SubsetMismatch { subset: s.universe(), graph: 2 * n });
    }
    let mut first = VertexSubset::empty(n);
    let mut second = VertexSubset::empty(n);
    for v in s.iter() {
        if v < n {
            first.insert(v);
        } else {
            second.insert(v - n);
        }
    }
    Ok((first, second))
}

impl ConductanceReduction {
    pub fn source_n(&self) -> usize {
        self.source.vertex_count()
    }

    /// Gadget conductance from source cut sizes alone:
    /// `(2n - k - (c(S1) + c(S2)) / k) / (2n - 4)` with `k = |S|`. Sets larger than `n`
    /// are replaced by their complement first, which has the same conductance.
    pub fn predicted_conductance(&self, s: &VertexSubset) -> Result<Rational> {
        let n = self.source_n();
        if s.universe() != 2 * n {
            return Err(Error::SubsetMismatch { subset: s.universe(), graph: 2 * n });
        }
        if s.is_empty() {
            return Err(Error::EmptySubset);
        }
        if s.is_full() {
            return Err(Error::FullSubset);
        }
        let small = if s.len() > n { s.complement() } else { s.clone() };
        let (first, second) = project_cut(&small, n)?;
        let crossing = (self.source.cut_size(&first)? + self.source.cut_size(&second)?) as i64;
        let k = small.len() as i64;
        let n = n as i64;
        Ok((Rational::from(2 * n - k) - Rational::new(crossing, k)) / Rational::from(2 * n - 4))
    }

    /// `(n - 2 c(A) / n) / (2n - 4)`, the gadget conductance of `lift_cut(A)`.
    pub fn conductance_of_lift(&self, a_set: &VertexSubset) -> Result<Rational> {
        let n = self.source_n();
        if a_set.universe() != n {
            return Err(Error::SubsetMismatch { subset: a_set.universe(), graph: n });
        }
        let cut = self.source.cut_size(a_set)? as i64;
        let n = n as i64;
        Ok((Rational::from(n) - Rational::new(2 * cut, n)) / Rational::from(2 * n - 4))
    }

    pub fn metadata(&self) -> ReductionMetadata {
        ReductionMetadata {
            kind: ReductionKind::Conductance,
            source_hash: self.source.digest(),
            source_n: self.source_n(),
            a: self.a,
            k: None,
            threshold: self.phi,
            target_n: self.target.vertex_count(),
            target_m: self.target.edge_count(),
        }
    }
}

pub fn build_density_instance(g: &Graph, a: u64) -> Result<DensityReduction> {
    let n = check_source(g, a)?;
    let a64 = a as i64;
    Ok(DensityReduction {
        source: g.clone(),
        a,
        k: g.vertex_count() / 2,
        r: Rational::new(3 * n - 2 * a64, 3 * n + 2 * a64),
    })
}

impl DensityReduction {
    pub fn metadata(&self) -> ReductionMetadata {
        ReductionMetadata {
            kind: ReductionKind::Density,
            source_hash: self.source.digest(),
            source_n: self.source.vertex_count(),
            a: self.a,
            k: Some(self.k),
            threshold: self.r,
            target_n: self.source.vertex_count(),
            target_m: self.source.edge_count(),
        }
    }
}

pub fn build_editing_instance(g: &Graph, a: u64) -> Result<EditingReduction> {
    let n = check_source(g, a)?;
    Ok(EditingReduction {
        source: g.clone(),
        a,
        k: g.vertex_count() / 2,
        m: Rational::new(12 * a as i64 + n * (n - 8), 8),
    })
}

impl EditingReduction {
    pub fn metadata(&self) -> ReductionMetadata {
        ReductionMetadata {
            kind: ReductionKind::Editing,
            source_hash: self.source.digest(),
            source_n: self.source.vertex_count(),
            a: self.a,
            k: Some(self.k),
            threshold: self.m,
            target_n: self.source.vertex_count(),
            target_m: self.source.edge_count(),
        }
    }
}
