#![allow(dead_code)]

use freepart::patterns::{find_induced, PatternSpec};
use freepart::{BipartiteGraph, Graph};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn contains_any_bip(b: &BipartiteGraph, specs: &[PatternSpec]) -> bool {
    specs.iter().any(|s| freepart::patterns::contains_bip(b, s))
}

pub fn contains_any(g: &Graph, specs: &[PatternSpec]) -> bool {
    specs.iter().any(|s| find_induced(g, s).is_some())
}

/// Random member of the bipartite class excluding `specs`: cross pairs are
/// visited in random order from a random start (edgeless or complete) and
/// flipped when the result stays in the class.
pub fn random_bip_member(r: &mut ChaCha8Rng, a: usize, b: usize, specs: &[PatternSpec]) -> BipartiteGraph {
    let mut g = if r.gen_bool(0.5) {
        BipartiteGraph::new(a, b)
    } else {
        BipartiteGraph::complete(a, b)
    };
    if contains_any_bip(&g, specs) {
        g = BipartiteGraph::new(a, b);
    }
    let mut pairs: Vec<(usize, usize)> = (0..a).flat_map(|x| (0..b).map(move |y| (x, y))).collect();
    pairs.shuffle(r);
    let stop = r.gen_range(pairs.len() / 3..=pairs.len());
    for &(x, y) in &pairs[..stop] {
        let mut edges = g.edges();
        if g.has_edge(x, y) {
            edges.retain(|&e| e != (x, y));
        } else {
            edges.push((x, y));
        }
        let h = BipartiteGraph::from_edges(a, b, &edges);
        if !contains_any_bip(&h, specs) {
            g = h;
        }
    }
    g
}

/// General-graph analogue of [`random_bip_member`].
pub fn random_member(r: &mut ChaCha8Rng, n: usize, specs: &[PatternSpec]) -> Graph {
    let mut g = if r.gen_bool(0.5) { Graph::new(n) } else { Graph::complete(n) };
    if contains_any(&g, specs) {
        g = Graph::new(n);
    }
    let mut pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    pairs.shuffle(r);
    let stop = r.gen_range(pairs.len() / 3..=pairs.len());
    for &(u, v) in &pairs[..stop] {
        let mut h = g.clone();
        if h.has_edge(u, v) {
            h.remove_edge(u, v);
        } else {
            h.add_edge(u, v);
        }
        if !contains_any(&h, specs) {
            g = h;
        }
    }
    g
}
