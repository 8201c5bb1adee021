//! Simple undirected graphs, vertex subsets and the cut/degree primitives.

use std::fmt::Write as _;

use sha2::{Digest, Sha256};

use crate::error::{Error, Result};

/// Largest vertex count a subset can have and still be packed into a `u64` mask
/// alongside the spare high bit the solvers rely on.
pub const MASK_LIMIT: usize = 63;

/// Immutable undirected simple graph on vertices `0..n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    // sorted, u < v
    edges: Vec<(usize, usize)>,
    // sorted neighbor lists
    adj: Vec<Vec<usize>>,
}

impl Graph {
    /// Builds a graph from an edge list. Endpoints may come in either order;
    /// self-loops, duplicates and out-of-range ids are rejected.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut list = Vec::new();
        for (u, v) in edges {
            if u >= n {
                return Err(Error::VertexOutOfRange { vertex: u, n });
            }
            if v >= n {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            if u == v {
                return Err(Error::InvalidArgument(format!("self-loop at vertex {u}")));
            }
            list.push((u.min(v), u.max(v)));
        }
        list.sort_unstable();
        if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::InvalidArgument(format!(
                "duplicate edge {} {}",
                w[0].0, w[0].1
            )));
        }
        Ok(Self::from_sorted_unchecked(n, list))
    }

    fn from_sorted_unchecked(n: usize, edges: Vec<(usize, usize)>) -> Self {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        for row in &mut adj {
            row.sort_unstable();
        }
        Graph { n, edges, adj }
    }

    pub fn empty(n: usize) -> Self {
        Self::from_sorted_unchecked(n, Vec::new())
    }

    pub fn complete(n: usize) -> Self {
        let edges = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect();
        Self::from_sorted_unchecked(n, edges)
    }

    /// `K_{a,b}` with the first part on `0..a`.
    pub fn complete_bipartite(a: usize, b: usize) -> Self {
        let edges = (0..a)
            .flat_map(|u| (a..a + b).map(move |v| (u, v)))
            .collect();
        Self::from_sorted_unchecked(a + b, edges)
    }

    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "a cycle needs at least 3 vertices");
        Self::new(n, (0..n).map(|i| (i, (i + 1) % n))).expect("valid cycle")
    }

    pub fn path(n: usize) -> Self {
        Self::new(n, (1..n).map(|i| (i - 1, i))).expect("valid path")
    }

    /// Triangular prism: triangles `0,1,2` and `3,4,5` joined by `i -- i+3`.
    pub fn prism() -> Self {
        Self::new(
            6,
            [(0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5), (0, 3), (1, 4), (2, 5)],
        )
        .expect("valid prism")
    }

    /// Vertex-disjoint union, with `other` relabelled after `self`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let off = self.n;
        let edges = self
            .edges
            .iter()
            .copied()
            .chain(other.edges.iter().map(|&(u, v)| (u + off, v + off)))
            .collect();
        Self::from_sorted_unchecked(self.n + other.n, edges)
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].binary_search(&v).is_ok()
    }

    /// Every vertex has degree exactly 3.
    pub fn is_cubic(&self) -> bool {
        self.n > 0 && self.adj.iter().all(|row| row.len() == 3)
    }

    /// Same vertex set; `{u,v}` is an edge iff it is not one here.
    pub fn complement(&self) -> Graph {
        let mut edges = Vec::with_capacity(self.n * self.n.saturating_sub(1) / 2 - self.edges.len());
        for u in 0..self.n {
            let row = &self.adj[u];
            let mut it = row.iter().copied().peekable();
            for v in u + 1..self.n {
                while it.peek().is_some_and(|&w| w < v) {
                    it.next();
                }
                if it.peek() != Some(&v) {
                    edges.push((u, v));
                }
            }
        }
        Self::from_sorted_unchecked(self.n, edges)
    }

    /// Adjacency rows as bitmasks. Requires `n <= 64`.
    pub fn adjacency_masks(&self) -> Result<Vec<u64>> {
        if self.n > 64 {
            return Err(Error::TooManyVertices { n: self.n, limit: 64 });
        }
        Ok(self
            .adj
            .iter()
            .map(|row| row.iter().fold(0u64, |m, &v| m | (1 << v)))
            .collect())
    }

    /// Short hex digest of the canonical file text; identifies a labelled graph.
    pub fn digest(&self) -> String {
        let hash = Sha256::digest(write_graph(self).as_bytes());
        hex::encode(&hash[..8])
    }

    fn check_subset(&self, s: &VertexSubset) -> Result<()> {
        if s.universe() != self.n {
            return Err(Error::SubsetMismatch { subset: s.universe(), graph: self.n });
        }
        Ok(())
    }

    /// Number of edges with exactly one endpoint in `s`.
    pub fn cut_size(&self, s: &VertexSubset) -> Result<usize> {
        self.check_subset(s)?;
        Ok(self
            .edges
            .iter()
            .filter(|&&(u, v)| s.contains(u) != s.contains(v))
            .count())
    }

    /// Sum of degrees over `s`.
    pub fn degree_sum(&self, s: &VertexSubset) -> Result<usize> {
        self.check_subset(s)?;
        Ok(s.iter().map(|v| self.degree(v)).sum())
    }

    /// Number of edges with both endpoints in `s`.
    pub fn induced_edge_count(&self, s: &VertexSubset) -> Result<usize> {
        self.check_subset(s)?;
        Ok(self
            .edges
            .iter()
            .filter(|&&(u, v)| s.contains(u) && s.contains(v))
            .count())
    }
}

/// A set of vertices drawn from `0..n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VertexSubset {
    n: usize,
    words: Vec<u64>,
}

impl VertexSubset {
    pub fn empty(n: usize) -> Self {
        VertexSubset { n, words: vec![0; n.div_ceil(64)] }
    }

    pub fn full(n: usize) -> Self {
        let mut s = Self::empty(n);
        for v in 0..n {
            s.insert(v);
        }
        s
    }

    pub fn from_members(n: usize, members: impl IntoIterator<Item = usize>) -> Result<Self> {
        let mut s = Self::empty(n);
        for v in members {
            if v >= n {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            s.insert(v);
        }
        Ok(s)
    }

    /// Bit `i` of `mask` selects vertex `i`. Bits at or above `n` are rejected.
    pub fn from_mask(n: usize, mask: u64) -> Result<Self> {
        if n > 64 {
            return Err(Error::TooManyVertices { n, limit: 64 });
        }
        if n < 64 && mask >> n != 0 {
            let vertex = 63 - mask.leading_zeros() as usize;
            return Err(Error::VertexOutOfRange { vertex, n });
        }
        let mut s = Self::empty(n);
        if n > 0 {
            s.words[0] = mask;
        }
        Ok(s)
    }

    /// Parses a comma-separated id list such as `0,2,5`. An empty string is the empty set.
    pub fn parse(n: usize, text: &str) -> Result<Self> {
        let text = text.trim();
        if text.is_empty() {
            return Ok(Self::empty(n));
        }
        let mut ids = Vec::new();
        for tok in text.split(',') {
            let v: usize = tok
                .trim()
                .parse()
                .map_err(|_| Error::InvalidArgument(format!("bad vertex id `{}`", tok.trim())))?;
            ids.push(v);
        }
        Self::from_members(n, ids)
    }

    pub fn to_mask(&self) -> Option<u64> {
        match self.words.len() {
            0 => Some(0),
            1 => Some(self.words[0]),
            _ => None,
        }
    }

    /// Size of the ambient vertex set.
    pub fn universe(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn is_full(&self) -> bool {
        self.len() == self.n
    }

    pub fn contains(&self, v: usize) -> bool {
        v < self.n && self.words[v / 64] >> (v % 64) & 1 == 1
    }

    pub fn insert(&mut self, v: usize) {
        assert!(v < self.n, "vertex {v} out of range {}", self.n);
        self.words[v / 64] |= 1 << (v % 64);
    }

    pub fn remove(&mut self, v: usize) {
        if v < self.n {
            self.words[v / 64] &= !(1 << (v % 64));
        }
    }

    pub fn toggle(&mut self, v: usize) {
        assert!(v < self.n, "vertex {v} out of range {}", self.n);
        self.words[v / 64] ^= 1 << (v % 64);
    }

    pub fn complement(&self) -> Self {
        let mut out = Self::empty(self.n);
        for v in 0..self.n {
            if !self.contains(v) {
                out.insert(v);
            }
        }
        out
    }

    /// Members in increasing order.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.n).filter(move |&v| self.contains(v))
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl std::fmt::Display for VertexSubset {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut first = true;
        for v in self.iter() {
            if !first {
                f.write_char(',')?;
            }
            write!(f, "{v}")?;
            first = false;
        }
        Ok(())
    }
}

impl std::fmt::Debug for VertexSubset {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{{{self}}}/{}", self.n)
    }
}

/// Reads the `p <n> <m>` / `e <u> <v>` text format.
pub fn parse_graph(text: &str) -> Result<Graph> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let err = |msg: String| Error::Parse { line: line_no, msg };
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut toks = line.split_whitespace();
        let tag = toks.next().unwrap_or_default();
        let nums: Vec<&str> = toks.collect();
        let parse2 = |nums: &[&str]| -> Result<(usize, usize)> {
            if nums.len() != 2 {
                return Err(err(format!("expected two integers, got `{line}`")));
            }
            let a = nums[0].parse().map_err(|_| err(format!("bad integer `{}`", nums[0])))?;
            let b = nums[1].parse().map_err(|_| err(format!("bad integer `{}`", nums[1])))?;
            Ok((a, b))
        };
        match tag {
            "p" => {
                if header.is_some() {
                    return Err(err("repeated header".into()));
                }
                header = Some(parse2(&nums)?);
            }
            "e" => {
                let Some((n, _)) = header else {
                    return Err(err("edge before header".into()));
                };
                let (u, v) = parse2(&nums)?;
                if u >= n || v >= n {
                    return Err(err(format!("vertex id out of range in `{line}` (n = {n})")));
                }
                if u == v {
                    return Err(err(format!("self-loop at vertex {u}")));
                }
                edges.push((u.min(v), u.max(v), line_no));
            }
            _ => return Err(err(format!("unrecognised line `{line}`"))),
        }
    }
    let Some((n, m)) = header else {
        return Err(Error::Parse { line: 0, msg: "missing `p <n> <m>` header".into() });
    };
    if edges.len() != m {
        return Err(Error::Parse {
            line: 0,
            msg: format!("header declares {m} edges but {} were listed", edges.len()),
        });
    }
    let mut seen = std::collections::HashSet::with_capacity(edges.len());
    for &(u, v, line) in &edges {
        if !seen.insert((u, v)) {
            return Err(Error::Parse { line, msg: format!("duplicate edge {u} {v}") });
        }
    }
    let mut list: Vec<_> = edges.into_iter().map(|(u, v, _)| (u, v)).collect();
    list.sort_unstable();
    Ok(Graph::from_sorted_unchecked(n, list))
}

/// Canonical file text: header then edges sorted with `u < v`.
pub fn write_graph(g: &Graph) -> String {
    let mut out = String::with_capacity(16 + g.edge_count() * 10);
    let _ = writeln!(out, "p {} {}", g.vertex_count(), g.edge_count());
    for &(u, v) in g.edges() {
        let _ = writeln!(out, "e {u} {v}");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k4() -> Graph {
        Graph::complete(4)
    }

    fn subset(n: usize, m: &[usize]) -> VertexSubset {
        VertexSubset::from_members(n, m.iter().copied()).unwrap()
    }

    #[test]
    fn parses_k4() {
        let g = parse_graph("p 4 6\ne 0 1\ne 0 2\ne 0 3\ne 1 2\ne 1 3\ne 2 3\n").unwrap();
        assert_eq!(g, k4());
        assert_eq!(g.edge_count(), 6);
    }

    #[test]
    fn parses_edgeless_and_comments() {
        let g = parse_graph("# two isolated vertices\np 2 0\n").unwrap();
        assert_eq!(g.vertex_count(), 2);
        assert_eq!(g.edge_count(), 0);
    }

    #[test]
    fn rejects_bad_files() {
        let cases = [
            ("p 3 1\ne 0 0\n", "self-loop"),
            ("p 3 1\ne 0 3\n", "out of range"),
            ("p 3 2\ne 0 1\ne 1 0\n", "duplicate"),
            ("p 3 2\ne 0 1\n", "declares 2 edges"),
            ("e 0 1\n", "before header"),
            ("p 3\n", "two integers"),
            ("p x 1\n", "bad integer"),
            ("q 1 1\n", "unrecognised"),
            ("", "missing"),
        ];
        for (text, needle) in cases {
            let err = parse_graph(text).unwrap_err().to_string();
            assert!(err.contains(needle), "{text:?}: {err}");
        }
    }

    #[test]
    fn writes_sorted_canonical_text() {
        let g = Graph::new(4, [(2, 3), (1, 0), (3, 0), (0, 2), (2, 1), (1, 3)]).unwrap();
        assert_eq!(write_graph(&g), "p 4 6\ne 0 1\ne 0 2\ne 0 3\ne 1 2\ne 1 3\ne 2 3\n");
        assert_eq!(write_graph(&Graph::empty(2)), "p 2 0\n");
    }

    #[test]
    fn write_normalizes_once() {
        let messy = "# hi\np 5 3\ne 3 4\ne 0 4\ne 1 2\n";
        let once = write_graph(&parse_graph(messy).unwrap());
        let twice = write_graph(&parse_graph(&once).unwrap());
        assert_eq!(once, twice);
    }

    #[test]
    fn cut_degree_induced_on_k4() {
        let g = k4();
        let s = subset(4, &[0, 1]);
        assert_eq!(g.cut_size(&s).unwrap(), 4);
        assert_eq!(g.degree_sum(&s).unwrap(), 6);
        assert_eq!(g.induced_edge_count(&s).unwrap(), 1);
        assert_eq!(g.induced_edge_count(&subset(4, &[0, 1, 2])).unwrap(), 3);
        assert_eq!(g.induced_edge_count(&subset(4, &[2])).unwrap(), 0);
        assert_eq!(g.cut_size(&VertexSubset::empty(4)).unwrap(), 0);
        assert_eq!(g.cut_size(&VertexSubset::full(4)).unwrap(), 0);
        assert_eq!(g.degree_sum(&VertexSubset::empty(4)).unwrap(), 0);
    }

    #[test]
    fn degree_sum_on_k33_side() {
        let g = Graph::complete_bipartite(3, 3);
        assert_eq!(g.degree_sum(&subset(6, &[0, 1, 2])).unwrap(), 9);
    }

    #[test]
    fn subset_context_mismatch() {
        let g = k4();
        let s = subset(5, &[0]);
        assert_eq!(
            g.cut_size(&s).unwrap_err(),
            Error::SubsetMismatch { subset: 5, graph: 4 }
        );
        assert!(g.degree_sum(&s).is_err());
        assert!(g.induced_edge_count(&s).is_err());
    }

    #[test]
    fn complements() {
        assert_eq!(k4().complement(), Graph::empty(4));
        assert_eq!(Graph::empty(2).complement(), Graph::complete(2));
        let two_triangles = Graph::complete(3).disjoint_union(&Graph::complete(3));
        assert_eq!(Graph::complete_bipartite(3, 3).complement(), two_triangles);
        let p = Graph::prism();
        assert_eq!(p.complement().complement(), p);
    }

    #[test]
    fn cubic_check() {
        assert!(k4().is_cubic());
        assert!(Graph::complete_bipartite(3, 3).is_cubic());
        assert!(Graph::prism().is_cubic());
        assert!(!Graph::cycle(4).is_cubic());
        assert!(!Graph::empty(0).is_cubic());
    }

    #[test]
    fn subset_parse_and_display() {
        let s = VertexSubset::parse(6, "0, 2,5").unwrap();
        assert_eq!(s.to_vec(), vec![0, 2, 5]);
        assert_eq!(s.to_string(), "0,2,5");
        assert_eq!(s.to_mask(), Some(0b100101));
        assert!(VertexSubset::parse(6, "0,6").is_err());
        assert!(VertexSubset::parse(6, "a").is_err());
        assert!(VertexSubset::parse(3, "").unwrap().is_empty());
    }

    #[test]
    fn subset_mask_guard() {
        assert!(VertexSubset::from_mask(3, 0b1000).is_err());
        assert!(VertexSubset::from_mask(65, 0).is_err());
        let big = VertexSubset::from_members(100, [0, 70, 99]).unwrap();
        assert_eq!(big.len(), 3);
        assert_eq!(big.to_mask(), None);
        assert_eq!(big.complement().len(), 97);
    }
}
