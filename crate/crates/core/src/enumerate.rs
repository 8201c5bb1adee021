//! Subset enumeration and cubic graph generation.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSubset, MASK_LIMIT};

/// Smallest `x >= lo` with exactly `k` bits set, or `None` if it would need bit `width` or above.
pub(crate) fn first_with_popcount(lo: u64, k: u32, width: u32) -> Option<u64> {
    if k > width {
        return None;
    }
    let mut x = lo;
    loop {
        if width < 64 && x >> width != 0 {
            return None;
        }
        let p = x.count_ones();
        if p == k {
            return Some(x);
        }
        if p > k {
            // Everything in (x, x + lowbit) has even more bits set.
            x = x.checked_add(x & x.wrapping_neg())?;
        } else {
            x |= x + 1;
        }
    }
}

/// Gosper's hack: next larger integer with the same popcount.
#[inline]
pub(crate) fn next_same_popcount(x: u64) -> Option<u64> {
    if x == 0 {
        return None;
    }
    let c = x & x.wrapping_neg();
    let r = x.checked_add(c)?;
    Some((((r ^ x) >> 2) / c) | r)
}

/// Masks over `width` bits in increasing order, optionally restricted to popcount `k`,
/// within the half-open range `[lo, hi)`.
#[derive(Clone, Debug)]
pub(crate) struct MaskRange {
    next: Option<u64>,
    hi: u64,
    k: Option<u32>,
}

impl MaskRange {
    pub fn new(width: u32, k: Option<u32>, lo: u64, hi: u64) -> Self {
        debug_assert!(width <= MASK_LIMIT as u32);
        let end = (1u64 << width).min(hi);
        let next = match k {
            None => (lo < end).then_some(lo),
            Some(k) => first_with_popcount(lo, k, width).filter(|&x| x < end),
        };
        MaskRange { next, hi: end, k }
    }

    pub fn all(width: u32, k: Option<u32>) -> Self {
        Self::new(width, k, 0, u64::MAX)
    }
}

impl Iterator for MaskRange {
    type Item = u64;

    fn next(&mut self) -> Option<u64> {
        let cur = self.next?;
        let succ = match self.k {
            None => cur + 1,
            Some(0) => self.hi,
            Some(_) => next_same_popcount(cur).unwrap_or(self.hi),
        };
        self.next = (succ < self.hi).then_some(succ);
        Some(cur)
    }
}

/// All subsets of `0..n` (or only those of size `k`) in increasing bitmask order.
pub fn enumerate_subsets(
    n: usize,
    k: Option<usize>,
) -> Result<impl Iterator<Item = VertexSubset>> {
    if n > MASK_LIMIT {
        return Err(Error::TooManyVertices { n, limit: MASK_LIMIT });
    }
    if let Some(k) = k {
        if k > n {
            return Err(Error::InvalidArgument(format!("subset size {k} exceeds n = {n}")));
        }
    }
    Ok(MaskRange::all(n as u32, k.map(|k| k as u32))
        .map(move |m| VertexSubset::from_mask(n, m).expect("mask within range")))
}

/// Simple cubic graph on `n` vertices drawn from the pairing model: `3n` points are
/// shuffled and paired off, and any pairing with a loop or repeated edge is discarded.
/// Retries keep drawing from the same stream, so a seed fixes the output.
pub fn generate_random_cubic(n: usize, seed: u64) -> Result<Graph> {
    if n < 4 || n % 2 == 1 {
        return Err(Error::InvalidArgument(format!(
            "cubic graphs need an even vertex count >= 4, got {n}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut points: Vec<usize> = (0..3 * n).map(|p| p / 3).collect();
    'attempt: loop {
        points.shuffle(&mut rng);
        let mut seen = vec![0u64; n * n.div_ceil(64)];
        let words = n.div_ceil(64);
        let mut edges = Vec::with_capacity(3 * n / 2);
        for pair in points.chunks_exact(2) {
            let (u, v) = (pair[0].min(pair[1]), pair[0].max(pair[1]));
            if u == v {
                continue 'attempt;
            }
            let slot = &mut seen[u * words + v / 64];
            if *slot >> (v % 64) & 1 == 1 {
                continue 'attempt;
            }
            *slot |= 1 << (v % 64);
            edges.push((u, v));
        }
        return Graph::new(n, edges);
    }
}

/// Every labelled simple cubic graph on `n` vertices, `n` in {4, 6, 8}, ordered
/// lexicographically by sorted edge list.
pub fn enumerate_cubic(n: usize) -> Result<std::vec::IntoIter<Graph>> {
    if !matches!(n, 4 | 6 | 8) {
        return Err(Error::InvalidArgument(format!(
            "cubic enumeration supports n in {{4, 6, 8}}, got {n}"
        )));
    }
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    let mut state = Backtrack {
        n,
        pairs: &pairs,
        degree: vec![0; n],
        chosen: Vec::with_capacity(3 * n / 2),
        out: Vec::new(),
    };
    state.descend(0);
    Ok(state.out.into_iter())
}

struct Backtrack<'a> {
    n: usize,
    pairs: &'a [(usize, usize)],
    degree: Vec<u8>,
    chosen: Vec<(usize, usize)>,
    out: Vec<Graph>,
}

impl Backtrack<'_> {
    // Pairs are visited row by row of the upper triangle. Including a pair before
    // excluding it yields lexicographic order of the sorted edge lists.
    fn descend(&mut self, idx: usize) {
        if idx == self.pairs.len() {
            if self.degree.iter().all(|&d| d == 3) {
                let g = Graph::new(self.n, self.chosen.iter().copied()).expect("simple by construction");
                self.out.push(g);
            }
            return;
        }
        let (u, v) = self.pairs[idx];
        // Row u closes after its last pair; its degree must be final by then.
        let last_in_row = v == self.n - 1;
        if self.degree[u] < 3 && self.degree[v] < 3 {
            self.degree[u] += 1;
            self.degree[v] += 1;
            self.chosen.push((u, v));
            if !last_in_row || self.degree[u] == 3 {
                self.descend(idx + 1);
            }
            self.chosen.pop();
            self.degree[u] -= 1;
            self.degree[v] -= 1;
        }
        // Skipping (u, v): u still needs 3 - deg(u) of the remaining n - 1 - v pairs in its row.
        let remaining_in_row = self.n - 1 - v;
        if 3 - self.degree[u] as usize <= remaining_in_row {
            self.descend(idx + 1);
        }
    }
}
