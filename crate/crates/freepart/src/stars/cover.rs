//! Covering sets of star-free bipartite graphs and the trace partition of
//! marked vertices.

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::bounds;
use crate::error::{Error, Result};
use crate::graph::{BipartiteGraph, Bits, VertexSet};

/// Above this many candidate subsets the max-coverage choice is greedy.
/// The greedy choice loses the covering guarantee; callers verify.
pub const EXACT_COVER_LIMIT: u128 = 1 << 22;

/// A `size`-subset of `pool` maximising `|N(S)|`, where `nbr` gives the
/// (already restricted) neighbourhood of a pool vertex. Ties go to the
/// lexicographically first subset.
pub(crate) fn max_cover_subset(nbr: &dyn Fn(usize) -> Bits, pool: &[usize], size: usize) -> Vec<usize> {
    if size >= pool.len() {
        return pool.to_vec();
    }
    let rows: Vec<Bits> = pool.iter().map(|&x| nbr(x)).collect();
    if bounds::binom(pool.len() as u128, size as u128) > EXACT_COVER_LIMIT {
        let mut chosen: Vec<usize> = Vec::new();
        let mut covered = Bits::new();
        for _ in 0..size {
            let best = (0..pool.len())
                .filter(|i| !chosen.contains(i))
                .max_by_key(|&i| (rows[i].difference_count(&covered), std::cmp::Reverse(i)))
                .expect("pool larger than size");
            covered.union_with(&rows[best]);
            chosen.push(best);
        }
        chosen.sort_unstable();
        return chosen.into_iter().map(|i| pool[i]).collect();
    }
    let mut best: Option<(usize, Vec<usize>)> = None;
    for idx in (0..pool.len()).combinations(size) {
        let mut u = Bits::new();
        for &i in &idx {
            u.union_with(&rows[i]);
        }
        let c = u.count_ones(..);
        if best.as_ref().is_none_or(|(bc, _)| c > *bc) {
            best = Some((c, idx));
        }
    }
    best.map(|(_, idx)| idx.into_iter().map(|i| pool[i]).collect())
        .unwrap_or_default()
}

/// `S_1..S_r` chosen greedily, each a max-coverage `size`-subset of what
/// is left of `pool`. Returns `W = ∪ S_h`, `W' = S_r` and `∩ N(S_h)`.
/// Needs `|pool| >= size * r`.
pub(crate) fn cover_sets(
    nbr: &dyn Fn(usize) -> Bits,
    pool: &[usize],
    size: usize,
    r: usize,
) -> (Vec<usize>, Vec<usize>, Bits) {
    let mut left: Vec<usize> = pool.to_vec();
    let mut w = Vec::new();
    let mut last = Vec::new();
    let mut common: Option<Bits> = None;
    for _ in 0..r {
        let s = max_cover_subset(nbr, &left, size);
        let mut reach = Bits::new();
        for &x in &s {
            reach.union_with(&nbr(x));
        }
        match &mut common {
            None => common = Some(reach),
            Some(c) => {
                c.grow(reach.len());
                c.intersect_with(&reach);
            }
        }
        left.retain(|x| !s.contains(x));
        w.extend(&s);
        last = s;
    }
    w.sort_unstable();
    (w, last, common.unwrap_or_default())
}

fn a_vertices(b: &BipartiteGraph) -> Vec<usize> {
    (0..b.a_size()).collect()
}

fn uncovered(b: &BipartiteGraph, x: usize, covered: &Bits) -> usize {
    b.nbr_top(x).difference_count(covered)
}

/// A set `S ⊆ A` of at most `n-1` vertices with `|N(a) \ N(S)| < k` for
/// every `a ∈ A`, chosen as an `(n-1)`-subset maximising `|N(S)|`. The
/// bound holds whenever `b` is `nΛ_k`-free; a contract error reports the
/// vertex otherwise.
pub fn lambda_cover_set(b: &BipartiteGraph, n: usize, k: usize) -> Result<VertexSet> {
    if n == 0 || k == 0 {
        return Err(Error::Argument("need n, k >= 1".into()));
    }
    let nbr = |x: usize| b.nbr_top(x).clone();
    let s = max_cover_subset(&nbr, &a_vertices(b), n - 1);
    let covered = b.nbr_top_set(s.iter().copied());
    if let Some(x) = (0..b.a_size()).find(|&x| uncovered(b, x, &covered) >= k) {
        return Err(Error::Contract(format!(
            "vertex {x} has {} neighbours outside N(S); the graph contains {n} Λ_{k} stars",
            uncovered(b, x, &covered)
        )));
    }
    Ok(VertexSet::top(s))
}

/// Result of the `r`-fold covering construction.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct CoverStructure {
    /// `(n-1)r` vertices of `A`.
    pub w: VertexSet,
    /// The last greedy layer: `n-1` vertices of `W` covering `bc`.
    pub w_prime: VertexSet,
    /// Vertices of `B` with a neighbour in every layer, hence `r`-covered
    /// by `W`.
    pub bc: VertexSet,
}

/// `W`, `W'` and `B^c` of the covering construction: every `a ∉ W` has
/// fewer than `kr` neighbours outside `B^c` and every `w ∈ W'` at most
/// `kr`. Both bounds need `b` to be `nΛ_k`-free and are checked here.
pub fn r_cover_structure(b: &BipartiteGraph, n: usize, k: usize, r: usize) -> Result<CoverStructure> {
    if n < 2 || k == 0 || r == 0 {
        return Err(Error::Argument("need n >= 2 and k, r >= 1".into()));
    }
    let need = (n - 1) * r;
    if b.a_size() < need {
        return Err(Error::SizeLimit {
            what: "covering needs |A| >= (n-1)r, |A|".into(),
            limit: need,
            got: b.a_size(),
        });
    }
    let nbr = |x: usize| b.nbr_top(x).clone();
    let (w, wp, mut bc) = cover_sets(&nbr, &a_vertices(b), n - 1, r);
    bc.grow(b.b_size());
    let kr = k * r;
    for x in 0..b.a_size() {
        let out = uncovered(b, x, &bc);
        let bad = if w.contains(&x) {
            wp.contains(&x) && out > kr
        } else {
            out >= kr
        };
        if bad {
            return Err(Error::Contract(format!(
                "vertex {x} has {out} neighbours outside B^c (kr = {kr}); the graph contains {n} Λ_{k} stars"
            )));
        }
    }
    Ok(CoverStructure {
        w: VertexSet::top(w),
        w_prime: VertexSet::top(wp),
        bc: VertexSet::bottom(bc.ones()),
    })
}

/// `{a ∈ A : deg(a) >= k}` for a graph whose `B`-degrees are at most
/// `bound_d`. For an `nΛ_k`-free graph the result has at most `nk·bound_d²`
/// vertices.
pub fn high_degree_vertices(b: &BipartiteGraph, k: usize, bound_d: usize) -> Result<VertexSet> {
    if let Some(y) = (0..b.b_size()).find(|&y| b.deg_bottom(y) > bound_d) {
        return Err(Error::Contract(format!(
            "bottom vertex {y} has degree {} > {bound_d}",
            b.deg_bottom(y)
        )));
    }
    Ok(VertexSet::top((0..b.a_size()).filter(|&x| b.deg_top(x) >= k)))
}

/// The bag interval `lo..=hi` of a marked vertex.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Trace {
    pub vertex: usize,
    pub lo: usize,
    pub hi: usize,
}

/// Splits marked vertices into at most `c` classes so that within a class
/// any two traces have at least two bag indices strictly between them
/// (`hi + 2 < lo'`). Greedy over traces sorted by `lo`. Every bag index may
/// lie in at most `c / 3` traces.
pub fn partition_marked(traces: &[Trace], c: usize) -> Result<Vec<Vec<usize>>> {
    let top = traces.iter().map(|t| t.hi + 1).max().unwrap_or(0);
    let mut load = vec![0usize; top];
    for t in traces {
        if t.lo > t.hi {
            return Err(Error::Argument(format!("trace of {} has lo > hi", t.vertex)));
        }
        for l in &mut load[t.lo..=t.hi] {
            *l += 1;
        }
    }
    if let Some((l, &cnt)) = load.iter().enumerate().find(|(_, &cnt)| cnt > c / 3) {
        return Err(Error::Contract(format!(
            "bag index {l} lies in {cnt} traces, more than {}",
            c / 3
        )));
    }
    let mut sorted = traces.to_vec();
    sorted.sort_by_key(|t| (t.lo, t.hi, t.vertex));
    let mut classes: Vec<(usize, Vec<usize>)> = Vec::new();
    for t in sorted {
        match classes.iter_mut().find(|(hi, _)| hi + 2 < t.lo) {
            Some((hi, members)) => {
                *hi = t.hi;
                members.push(t.vertex);
            }
            None => classes.push((t.hi, vec![t.vertex])),
        }
    }
    if classes.len() > c {
        return Err(Error::Contract(format!("{} classes exceed {c}", classes.len())));
    }
    Ok(classes.into_iter().map(|(_, m)| m).collect())
}
