//! Random members of hereditary classes, for experiments and tests.
//!
//! Cross pairs are visited in random order from a random start (edgeless or
//! complete) and flipped whenever the result stays in the class.

use freepart::patterns::{self, PatternSpec};
use freepart::{BipartiteGraph, Graph};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn bip_in_class(b: &BipartiteGraph, specs: &[PatternSpec]) -> bool {
    patterns::first_bip_witness(b, specs).is_none()
}

fn in_class(g: &Graph, specs: &[PatternSpec]) -> bool {
    patterns::first_witness(g, specs).is_none()
}

pub fn random_bip_member<R: Rng>(r: &mut R, a: usize, b: usize, specs: &[PatternSpec]) -> BipartiteGraph {
    let mut g = if r.gen_bool(0.5) {
        BipartiteGraph::new(a, b)
    } else {
        BipartiteGraph::complete(a, b)
    };
    if !bip_in_class(&g, specs) {
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
        if bip_in_class(&h, specs) {
            g = h;
        }
    }
    g
}

pub fn random_member<R: Rng>(r: &mut R, n: usize, specs: &[PatternSpec]) -> Graph {
    let mut g = if r.gen_bool(0.5) { Graph::new(n) } else { Graph::complete(n) };
    if !in_class(&g, specs) {
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
        if in_class(&h, specs) {
            g = h;
        }
    }
    g
}
