mod common;

use freepart::matching::*;
use freepart::patterns::{twin_star_pair, PatternSpec};
use freepart::{BipartiteGraph, Graph};
use rand::Rng;

fn c6_3k2() -> Vec<PatternSpec> {
    vec![PatternSpec::matching(3), PatternSpec::comatching(3)]
}

#[test]
fn chain_and_refined_conditions_on_random_members() {
    let mut r = common::rng(7);
    for _ in 0..60 {
        let (a, b) = (r.gen_range(1..=10), r.gen_range(1..=10));
        let g = common::random_bip_member(&mut r, a, b, &c6_3k2());
        let t = build_chain_template(&g);
        assert_eq!(check_chain_conditions(&g, &t), None, "{g:?}");
        let t = refine_to_nm_template(&g, 3, 3).unwrap();
        assert_eq!(check_refined_conditions(&g, &t), None, "{g:?}");
        let p = bipartite_matching_partition(&g, 3, 3).unwrap();
        let tops = p.blocks.iter().filter(|bl| bl.vertices.iter().all(|&v| v < a)).count();
        assert!(tops <= 8 && p.blocks.len() - tops <= 8);
    }
}

#[test]
fn deeper_recursion_on_larger_classes() {
    let mut r = common::rng(11);
    let specs = vec![PatternSpec::matching(4), PatternSpec::comatching(3)];
    for _ in 0..20 {
        let g = common::random_bip_member(&mut r, 9, 9, &specs);
        let p = bipartite_matching_partition(&g, 4, 3).unwrap();
        let flat = g.to_graph();
        for gu in &p.guarantees {
            let cross = BipartiteGraph::between(&flat, &p.blocks[gu.i].vertices, &p.blocks[gu.j].vertices);
            assert!(twin_star_pair(&cross, 1).is_none());
        }
    }
}

#[test]
fn skew_join_reconstruction() {
    let mut r = common::rng(3);
    for _ in 0..100 {
        let (a, b) = (r.gen_range(0..=6), r.gen_range(0..=6));
        let edges: Vec<(usize, usize)> = (0..a)
            .flat_map(|x| (0..b).map(move |y| (x, y)))
            .filter(|_| r.gen_bool(0.5))
            .collect();
        let g = BipartiteGraph::from_edges(a, b, &edges);
        let parts = skew_join_parts(&g);
        let xs: Vec<usize> = parts.iter().flat_map(|p| p.0.clone()).collect();
        let ys: Vec<usize> = parts.iter().flat_map(|p| p.1.clone()).collect();
        assert_eq!(skew_join(&skew_join_decompose(&g)), g.induced(&xs, &ys));
    }
    let k22 = BipartiteGraph::complete(2, 2);
    let parts = skew_join_decompose(&k22);
    assert_eq!(skew_join(&parts), k22);
}

#[test]
fn cochromatic_matching_random() {
    let mut r = common::rng(5);
    for _ in 0..40 {
        let n = r.gen_range(2..=3);
        let m = r.gen_range(2..=3);
        let size = r.gen_range(1..=11);
        let g = common::random_member(&mut r, size, &[PatternSpec::nk2(n), PatternSpec::co_nk2(m)]);
        let p = cochromatic_matching(&g, n, m).unwrap();
        assert!(p.blocks.len() <= 18);
    }
}

#[test]
fn matching_partition_random() {
    let mut r = common::rng(9);
    for _ in 0..25 {
        let size = r.gen_range(1..=11);
        let g = common::random_member(&mut r, size, &PatternSpec::f_family(3, 1));
        matching_partition(&g, 3).unwrap();
    }
    assert_eq!(matching_partition(&Graph::complete(5), 2).unwrap().blocks.len(), 1);
}

