#![allow(dead_code)]

use clusterfit::{enumerate_subsets, measures, Graph, Rational, VertexSubset};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Erdos-Renyi style graph with edge probability `p`.
pub fn random_graph(n: usize, p: f64, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, edges).unwrap()
}

pub fn random_subset(n: usize, rng: &mut impl Rng) -> VertexSubset {
    VertexSubset::from_members(n, (0..n).filter(|_| rng.gen_bool(0.5))).unwrap()
}

pub fn set(n: usize, m: &[usize]) -> VertexSubset {
    VertexSubset::from_members(n, m.iter().copied()).unwrap()
}

pub fn two_triangles() -> Graph {
    Graph::complete(3).disjoint_union(&Graph::complete(3))
}

/// Best value of `f` over the subsets accepted by `keep`, by a plain loop over every
/// subset. `better(a, b)` says whether `a` beats `b`; the first best is kept.
pub fn brute<F, K>(g: &Graph, keep: K, f: F, better: fn(&Rational, &Rational) -> bool) -> Option<(Rational, VertexSubset)>
where
    F: Fn(&VertexSubset) -> Rational,
    K: Fn(&VertexSubset) -> bool,
{
    let mut best: Option<(Rational, VertexSubset)> = None;
    for s in enumerate_subsets(g.vertex_count(), None).unwrap() {
        if !keep(&s) {
            continue;
        }
        let v = f(&s);
        if best.as_ref().is_none_or(|(b, _)| better(&v, b)) {
            best = Some((v, s));
        }
    }
    best
}

pub fn lt(a: &Rational, b: &Rational) -> bool {
    a < b
}

pub fn gt(a: &Rational, b: &Rational) -> bool {
    a > b
}

pub fn brute_max_cut(g: &Graph) -> Rational {
    brute(g, |_| true, |s| Rational::from(g.cut_size(s).unwrap() as i64), gt).unwrap().0
}

pub fn brute_min_bisection(g: &Graph) -> Rational {
    let n = g.vertex_count();
    brute(g, |s| 2 * s.len() == n, |s| Rational::from(g.cut_size(s).unwrap() as i64), lt).unwrap().0
}

pub fn brute_min_conductance(g: &Graph) -> Rational {
    brute(
        g,
        |s| !s.is_empty() && !s.is_full(),
        |s| measures::conductance(g, s).unwrap(),
        lt,
    )
    .unwrap()
    .0
}

pub fn brute_best_relative_density(g: &Graph, k: usize) -> Rational {
    brute(g, |s| s.len() == k, |s| measures::relative_density(g, s).unwrap(), gt).unwrap().0
}

pub fn brute_best_local_density(g: &Graph, k: usize) -> Rational {
    brute(g, |s| s.len() == k, |s| measures::local_density(g, s).unwrap(), gt).unwrap().0
}

pub fn brute_min_editing(g: &Graph, k: usize) -> Rational {
    brute(g, |s| s.len() == k, |s| measures::single_cluster_editing(g, s).unwrap(), lt).unwrap().0
}

/// Every labelled graph on `n` vertices (all `2^(n(n-1)/2)` edge sets) that is cubic,
/// in lexicographic order of their sorted edge lists.
pub fn cubic_by_filtration(n: usize) -> Vec<Graph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let mut out = Vec::new();
    for mask in 0u64..(1 << pairs.len()) {
        if mask.count_ones() as usize != 3 * n / 2 {
            continue;
        }
        let edges = pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e);
        let g = Graph::new(n, edges).unwrap();
        if g.is_cubic() {
            out.push(g);
        }
    }
    out.sort_by(|a, b| a.edges().cmp(b.edges()));
    out
}
