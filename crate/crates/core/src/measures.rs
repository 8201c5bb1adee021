//! Exact cluster fitness measures of a vertex subset.
//!
//! All four measures are evaluated straight from the edge list, so they double as the
//! reference the bitmask solvers are checked against.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSubset};
use crate::rational::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum MeasureKind {
    Conductance,
    LocalDensity,
    RelativeDensity,
    Editing,
}

impl MeasureKind {
    pub const ALL: [MeasureKind; 4] = [
        MeasureKind::Conductance,
        MeasureKind::LocalDensity,
        MeasureKind::RelativeDensity,
        MeasureKind::Editing,
    ];

    pub fn name(self) -> &'static str {
        match self {
            MeasureKind::Conductance => "conductance",
            MeasureKind::LocalDensity => "local-density",
            MeasureKind::RelativeDensity => "relative-density",
            MeasureKind::Editing => "editing",
        }
    }
}

impl fmt::Display for MeasureKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for MeasureKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        MeasureKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown measure `{s}`")))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MeasureValue {
    pub kind: MeasureKind,
    pub value: Rational,
}

fn nonempty(s: &VertexSubset) -> Result<()> {
    if s.is_empty() {
        Err(Error::EmptySubset)
    } else {
        Ok(())
    }
}

/// `c(S) / min(d(S), d(V \ S))`, or 0 when that minimum is 0 (only possible with no cut edges).
pub fn conductance(g: &Graph, s: &VertexSubset) -> Result<Rational> {
    let cut = g.cut_size(s)?;
    nonempty(s)?;
    if s.is_full() {
        return Err(Error::FullSubset);
    }
    let inside = g.degree_sum(s)?;
    let denom = inside.min(2 * g.edge_count() - inside);
    if denom == 0 {
        return Ok(Rational::ZERO);
    }
    Ok(Rational::new(cut as i64, denom as i64))
}

/// Fraction of the `|S|(|S|-1)/2` possible internal edges that are present; 0 for a singleton.
pub fn local_density(g: &Graph, s: &VertexSubset) -> Result<Rational> {
    let internal = g.induced_edge_count(s)?;
    nonempty(s)?;
    let k = s.len();
    if k == 1 {
        return Ok(Rational::ZERO);
    }
    Ok(Rational::new(2 * internal as i64, (k * (k - 1)) as i64))
}

/// `|E(S)| / (|E(S)| + c(S))`, or 0 when `S` touches no edges at all.
pub fn relative_density(g: &Graph, s: &VertexSubset) -> Result<Rational> {
    let internal = g.induced_edge_count(s)?;
    let cut = g.cut_size(s)?;
    nonempty(s)?;
    if internal + cut == 0 {
        return Ok(Rational::ZERO);
    }
    Ok(Rational::new(internal as i64, (internal + cut) as i64))
}

/// Edge insertions plus deletions turning `S` into an isolated clique:
/// missing internal pairs plus crossing edges.
pub fn single_cluster_editing(g: &Graph, s: &VertexSubset) -> Result<Rational> {
    let internal = g.induced_edge_count(s)?;
    let cut = g.cut_size(s)?;
    nonempty(s)?;
    let k = s.len();
    let missing = k * (k - 1) / 2 - internal;
    Ok(Rational::from_integer((missing + cut) as i64))
}

pub fn evaluate(g: &Graph, s: &VertexSubset, kind: MeasureKind) -> Result<MeasureValue> {
    let value = match kind {
        MeasureKind::Conductance => conductance(g, s)?,
        MeasureKind::LocalDensity => local_density(g, s)?,
        MeasureKind::RelativeDensity => relative_density(g, s)?,
        MeasureKind::Editing => single_cluster_editing(g, s)?,
    };
    Ok(MeasureValue { kind, value })
}
