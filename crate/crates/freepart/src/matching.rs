//! Chain templates, their `(n,m,q)` refinement and collapse, the recursive
//! 2K2-free partition of bipartite graphs without a matching and a
//! co-matching, and cochromatic partitions of general graphs without a
//! matching and a co-matching.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bounds;
use crate::error::{Error, Result};
use crate::graph::{bits_from, BipartiteGraph, Bits, Graph, Side, VertexSet};
use crate::partition::{refine, Block, BlockKind, Guarantee, LabelledPartition};
use crate::patterns::{self, format_spec_list, PatternSpec};

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct NmParams {
    pub n: usize,
    pub m: usize,
    pub q: usize,
}

/// Bags `A_1..A_z`, `B_1..B_z` (0-based here), optionally split into
/// exactly `q` pieces each.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct ChainTemplate {
    pub bags_a: Vec<Vec<usize>>,
    pub bags_b: Vec<Vec<usize>>,
    /// Bag indices where a skew-join piece begins. The pair at such an
    /// index is a join (singleton `B` bag) or, for a trailing edge-empty
    /// piece, edgeless.
    pub starts: Vec<usize>,
    pub q: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub params: Option<NmParams>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub pieces_a: Option<Vec<Vec<Vec<usize>>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub pieces_b: Option<Vec<Vec<Vec<usize>>>>,
}

impl ChainTemplate {
    pub fn z(&self) -> usize {
        self.bags_a.len()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("template serializes")
    }
}

/// Pattern set excluded between `A_i` and `B_i` of a refined template.
pub fn same_index_class(n: usize, m: usize) -> Vec<PatternSpec> {
    vec![PatternSpec::matching(n - 1), PatternSpec::comatching(m)]
}

/// Pattern set excluded between `A_i` and `B_{i+1}` of a refined template.
pub fn next_index_class(n: usize, m: usize) -> Vec<PatternSpec> {
    vec![PatternSpec::matching(n), PatternSpec::comatching(m - 1)]
}

fn ones(s: &Bits) -> Vec<usize> {
    s.ones().collect()
}

/// One run of the chain procedure on `G[a_rem, b_rem]`, starting from a
/// minimum-degree vertex of `b_rem`. Returns the bags it creates.
fn chain_run(b: &BipartiteGraph, a_rem: &Bits, b_rem: &Bits) -> (Vec<Bits>, Vec<Bits>) {
    let b1 = b_rem
        .ones()
        .min_by_key(|&y| (b.deg_bottom_in(y, a_rem), y))
        .expect("b_rem is nonempty");
    let mut used_a = Bits::with_capacity(b.a_size());
    let mut used_b = bits_from(b.b_size(), [b1]);
    let mut bags_b = vec![used_b.clone()];
    let mut a1 = b.nbr_bottom(b1).clone();
    a1.intersect_with(a_rem);
    used_a.union_with(&a1);
    let mut bags_a = vec![a1];
    loop {
        let last = bags_a.last().unwrap();
        // Vertices with a non-neighbour in the last A bag.
        let mut next_b = Bits::with_capacity(b.b_size());
        for y in b_rem.ones() {
            if !used_b.contains(y) && b.nbr_bottom(y).intersection_count(last) < last.count_ones(..) {
                next_b.insert(y);
            }
        }
        if next_b.is_clear() {
            break;
        }
        let mut next_a = b.nbr_bottom_set(next_b.ones());
        next_a.intersect_with(a_rem);
        next_a.difference_with(&used_a);
        used_a.union_with(&next_a);
        used_b.union_with(&next_b);
        bags_a.push(next_a);
        bags_b.push(next_b);
    }
    (bags_a, bags_b)
}

fn has_edge_between(b: &BipartiteGraph, xs: &Bits, ys: &Bits) -> bool {
    xs.ones().any(|x| !b.nbr_top(x).is_disjoint(ys))
}

/// Splits `b` into `(A ids, B ids)` pieces with `G = G_1 ⊘ G_2 ⊘ ...`:
/// every earlier top vertex is adjacent to every later bottom vertex and no
/// earlier bottom vertex is adjacent to a later top vertex. Each piece but
/// the last is the vertex set of one run of the chain procedure; the last
/// may be edge-empty.
pub fn skew_join_parts(b: &BipartiteGraph) -> Vec<(Vec<usize>, Vec<usize>)> {
    let mut a_rem = bits_from(b.a_size(), 0..b.a_size());
    let mut b_rem = bits_from(b.b_size(), 0..b.b_size());
    let mut parts = Vec::new();
    while !a_rem.is_clear() || !b_rem.is_clear() {
        if !has_edge_between(b, &a_rem, &b_rem) {
            parts.push((ones(&a_rem), ones(&b_rem)));
            break;
        }
        let (ba, bb) = chain_run(b, &a_rem, &b_rem);
        let mut pa = Bits::with_capacity(b.a_size());
        let mut pb = Bits::with_capacity(b.b_size());
        for s in &ba {
            pa.union_with(s);
        }
        for s in &bb {
            pb.union_with(s);
        }
        a_rem.difference_with(&pa);
        b_rem.difference_with(&pb);
        parts.push((ones(&pa), ones(&pb)));
    }
    parts
}

pub fn skew_join_decompose(b: &BipartiteGraph) -> Vec<BipartiteGraph> {
    skew_join_parts(b)
        .iter()
        .map(|(xs, ys)| b.induced(xs, ys))
        .collect()
}

/// `G_1 ⊘ G_2 ⊘ ...` with the vertices of each side numbered piece by
/// piece.
pub fn skew_join(pieces: &[BipartiteGraph]) -> BipartiteGraph {
    let a: usize = pieces.iter().map(|p| p.a_size()).sum();
    let b: usize = pieces.iter().map(|p| p.b_size()).sum();
    let mut g = BipartiteGraph::new(a, b);
    let (mut oa, mut ob) = (0, 0);
    for (i, p) in pieces.iter().enumerate() {
        for (x, y) in p.edges() {
            g.add_edge(oa + x, ob + y);
        }
        let later_b: usize = pieces[i + 1..].iter().map(|q| q.b_size()).sum();
        for x in 0..p.a_size() {
            for y in ob + p.b_size()..ob + p.b_size() + later_b {
                g.add_edge(oa + x, y);
            }
        }
        oa += p.a_size();
        ob += p.b_size();
    }
    g
}

/// Chain template of `b`: the chain procedure run on each skew-join piece,
/// bags concatenated in piece order.
pub fn build_chain_template(b: &BipartiteGraph) -> ChainTemplate {
    let mut a_rem = bits_from(b.a_size(), 0..b.a_size());
    let mut b_rem = bits_from(b.b_size(), 0..b.b_size());
    let mut t = ChainTemplate {
        bags_a: vec![],
        bags_b: vec![],
        starts: vec![],
        q: 1,
        params: None,
        pieces_a: None,
        pieces_b: None,
    };
    while !a_rem.is_clear() || !b_rem.is_clear() {
        t.starts.push(t.bags_a.len());
        if !has_edge_between(b, &a_rem, &b_rem) {
            t.bags_a.push(ones(&a_rem));
            t.bags_b.push(ones(&b_rem));
            break;
        }
        let (ba, bb) = chain_run(b, &a_rem, &b_rem);
        for s in &ba {
            a_rem.difference_with(s);
            t.bags_a.push(ones(s));
        }
        for s in &bb {
            b_rem.difference_with(s);
            t.bags_b.push(ones(s));
        }
    }
    t
}

/// First violation of the template conditions: bags must partition both
/// sides, `A_i` must be joined to `B_j` for `j > i+1` and co-joined to
/// `B_j` for `j < i`.
pub fn check_chain_conditions(b: &BipartiteGraph, t: &ChainTemplate) -> Option<String> {
    if t.bags_a.len() != t.bags_b.len() {
        return Some("bag lists differ in length".into());
    }
    let mut seen_a = vec![false; b.a_size()];
    let mut seen_b = vec![false; b.b_size()];
    for (bags, seen) in [(&t.bags_a, &mut seen_a), (&t.bags_b, &mut seen_b)] {
        for &v in bags.iter().flatten() {
            if v >= seen.len() || seen[v] {
                return Some(format!("vertex {v} repeated or out of range"));
            }
            seen[v] = true;
        }
    }
    if seen_a.contains(&false) || seen_b.contains(&false) {
        return Some("bags do not cover every vertex".into());
    }
    for (i, ai) in t.bags_a.iter().enumerate() {
        for (j, bj) in t.bags_b.iter().enumerate() {
            for &x in ai {
                for &y in bj {
                    if j > i + 1 && !b.has_edge(x, y) {
                        return Some(format!("A{i} not joined to B{j}: {x},{y}"));
                    }
                    if j < i && b.has_edge(x, y) {
                        return Some(format!("A{i} not co-joined to B{j}: {x},{y}"));
                    }
                }
            }
        }
    }
    None
}

/// Greedy removal: start from the whole side and drop, in increasing id
/// order, every vertex whose neighbourhood (non-neighbourhood for
/// `cocover`) is covered by the rest.
pub fn cover_set(b: &BipartiteGraph, side: Side, cocover: bool) -> Result<VertexSet> {
    let g = match side {
        Side::Top => b.clone(),
        Side::Bottom => b.transpose(),
        Side::General => return Err(Error::Argument("cover_set needs a side".into())),
    };
    let rows: Vec<Bits> = (0..g.a_size())
        .map(|x| {
            let mut r = g.nbr_top(x).clone();
            if cocover {
                r.toggle_range(..);
            }
            r
        })
        .collect();
    let mut keep: Vec<usize> = (0..g.a_size()).collect();
    let mut i = 0;
    while i < keep.len() {
        let mut rest = Bits::with_capacity(g.b_size());
        for (j, &o) in keep.iter().enumerate() {
            if j != i {
                rest.union_with(&rows[o]);
            }
        }
        if rows[keep[i]].is_subset(&rest) {
            keep.remove(i);
        } else {
            i += 1;
        }
    }
    Ok(VertexSet::new(side, keep))
}

/// Splits `target` (ids of the far side) by the neighbourhoods (or
/// non-neighbourhoods) of the chosen vertices: piece `l` takes what vertex
/// `l` reaches and no earlier one did.
fn split_by(reach: impl Fn(usize) -> Bits, chosen: &[usize], target: &[usize], len: usize) -> Vec<Vec<usize>> {
    let mut left = bits_from(len, target.iter().copied());
    let mut out = Vec::new();
    for &c in chosen {
        let mut p = reach(c);
        p.intersect_with(&left);
        left.difference_with(&p);
        out.push(ones(&p));
    }
    debug_assert!(left.is_clear(), "chosen vertices must cover the target");
    out
}

fn pad(mut pieces: Vec<Vec<usize>>, q: usize, what: &str) -> Result<Vec<Vec<usize>>> {
    pieces.retain(|p| !p.is_empty());
    if pieces.len() > q {
        return Err(Error::Contract(format!(
            "{what} needs {} pieces, more than q = {q}",
            pieces.len()
        )));
    }
    pieces.resize(q, Vec::new());
    Ok(pieces)
}

/// `(n,m,q)` refinement with `q = (n-1)(m-1)`. Fails with a witness when
/// `b` contains the matching `nK2` or the bipartite co-matching of size `m`.
pub fn refine_to_nm_template(b: &BipartiteGraph, n: usize, m: usize) -> Result<ChainTemplate> {
    if n < 2 || m < 2 {
        return Err(Error::Argument("refinement needs n, m >= 2".into()));
    }
    patterns::require_bip_free(b, &[PatternSpec::matching(n), PatternSpec::comatching(m)])?;
    let q = (n - 1) * (m - 1);
    let mut t = build_chain_template(b);
    let z = t.z();
    let mut pieces_a = Vec::with_capacity(z);
    let mut pieces_b = Vec::with_capacity(z);
    let nb = |y: usize| b.nbr_bottom(y).clone();
    let nt = |x: usize| b.nbr_top(x).clone();
    let non_nt = |x: usize| {
        let mut r = b.nbr_top(x).clone();
        r.toggle_range(..);
        r
    };
    for i in 0..z {
        let start = t.starts.contains(&i);
        let (ai, bi) = (&t.bags_a[i], &t.bags_b[i]);
        if start {
            pieces_a.push(pad(vec![ai.clone()], q, "start bag")?);
            pieces_b.push(pad(vec![bi.clone()], q, "start bag")?);
            continue;
        }
        // A_i is covered by n-1 vertices of B_i.
        let cover_b = cover_set(&b.induced(ai, bi), Side::Bottom, false)?;
        let chosen: Vec<usize> = cover_b.members.iter().map(|&l| bi[l]).collect();
        pieces_a.push(pad(split_by(nb, &chosen, ai, b.a_size()), q, "A bag")?);

        // B_i is co-covered by m-1 vertices of A_{i-1}.
        let prev = &t.bags_a[i - 1];
        let co = cover_set(&b.induced(prev, bi), Side::Top, true)?;
        let chosen: Vec<usize> = co.members.iter().map(|&l| prev[l]).collect();
        let by_prev = split_by(non_nt, &chosen, bi, b.b_size());
        if t.starts.contains(&(i - 1)) {
            // Second bag of a run: B_i is also covered by n-1 vertices of
            // A_i; take the common refinement of both splits.
            let cov = cover_set(&b.induced(ai, bi), Side::Top, false)?;
            let chosen: Vec<usize> = cov.members.iter().map(|&l| ai[l]).collect();
            let by_next = split_by(nt, &chosen, bi, b.b_size());
            let mut meet = Vec::new();
            for y in &by_next {
                for p in &by_prev {
                    meet.push(y.iter().copied().filter(|v| p.contains(v)).collect());
                }
            }
            pieces_b.push(pad(meet, q, "second B bag")?);
        } else {
            pieces_b.push(pad(by_prev, q, "B bag")?);
        }
    }
    t.q = q;
    t.params = Some(NmParams { n, m, q });
    t.pieces_a = Some(pieces_a);
    t.pieces_b = Some(pieces_b);
    Ok(t)
}

/// First violation of the refined conditions, with the offending pattern.
/// Start pairs must be trivial (joined or co-joined); `G[A_ig, B_ih]` must
/// exclude [`same_index_class`] and `G[A_ig, B_(i+1)h]` must exclude
/// [`next_index_class`].
pub fn check_refined_conditions(b: &BipartiteGraph, t: &ChainTemplate) -> Option<String> {
    let (Some(p), Some(pa), Some(pb)) = (t.params, &t.pieces_a, &t.pieces_b) else {
        return Some("template is not refined".into());
    };
    for i in 0..t.z() {
        if pa[i].len() != p.q || pb[i].len() != p.q {
            return Some(format!("bag {i} does not have exactly q pieces"));
        }
        let flat_a: Vec<usize> = pa[i].iter().flatten().copied().collect();
        let flat_b: Vec<usize> = pb[i].iter().flatten().copied().collect();
        let (mut sa, mut sb) = (flat_a.clone(), flat_b.clone());
        sa.sort_unstable();
        sb.sort_unstable();
        if sa != t.bags_a[i] || sb != t.bags_b[i] {
            return Some(format!("pieces of bag {i} do not partition it"));
        }
        for ga in &pa[i] {
            for hb in &pb[i] {
                let g = b.induced(ga, hb);
                if t.starts.contains(&i) {
                    let e = g.edge_count();
                    if e != 0 && e != ga.len() * hb.len() {
                        return Some(format!("start pair {i} is not trivial"));
                    }
                } else if let Some((s, _)) = patterns::first_bip_witness(&g, &same_index_class(p.n, p.m)) {
                    return Some(format!("G[A{i}, B{i}] contains {s}"));
                }
            }
            if i + 1 < t.z() {
                for hb in &pb[i + 1] {
                    let g = b.induced(ga, hb);
                    if let Some((s, _)) = patterns::first_bip_witness(&g, &next_index_class(p.n, p.m)) {
                        return Some(format!("G[A{i}, B{}] contains {s}", i + 1));
                    }
                }
            }
        }
    }
    None
}

/// Odd/even unions of the pieces of a refined template: `2q` blocks per
/// side. Vertex ids are flat (`B` shifted by `|A|`); the first `2q` blocks
/// are top blocks. Each top/bottom pair is tagged with the pattern class it
/// excludes and the tag is checked before returning.
pub fn collapse_template(b: &BipartiteGraph, t: &ChainTemplate) -> Result<LabelledPartition> {
    let (Some(p), Some(pa), Some(pb)) = (t.params, &t.pieces_a, &t.pieces_b) else {
        return Err(Error::Argument("collapse needs a refined template".into()));
    };
    if p.n < 3 || p.m < 3 {
        return Err(Error::Argument("collapse needs n, m >= 3".into()));
    }
    let q = p.q;
    let union = |pieces: &Vec<Vec<Vec<usize>>>, parity: usize, g: usize| -> Vec<usize> {
        let mut v: Vec<usize> = (0..pieces.len())
            .filter(|i| i % 2 == parity)
            .flat_map(|i| pieces[i][g].iter().copied())
            .collect();
        v.sort_unstable();
        v
    };
    let mut tops = Vec::new();
    let mut bottoms = Vec::new();
    for parity in 0..2 {
        for g in 0..q {
            tops.push((parity, union(pa, parity, g)));
            bottoms.push((parity, union(pb, parity, g)));
        }
    }
    let a = b.a_size();
    let mut out = LabelledPartition::default();
    for (_, vs) in &tops {
        out.blocks.push(Block {
            kind: BlockKind::Independent,
            vertices: vs.clone(),
        });
    }
    for (_, vs) in &bottoms {
        out.blocks.push(Block {
            kind: BlockKind::Independent,
            vertices: vs.iter().map(|y| y + a).collect(),
        });
    }
    for (i, (pi, xs)) in tops.iter().enumerate() {
        for (j, (pj, ys)) in bottoms.iter().enumerate() {
            let class = if pi == pj {
                same_index_class(p.n, p.m)
            } else {
                next_index_class(p.n, p.m)
            };
            let g = b.induced(xs, ys);
            if let Some((s, e)) = patterns::first_bip_witness(&g, &class) {
                let w: Vec<usize> = e
                    .map
                    .iter()
                    .zip(&e.sides)
                    .map(|(&v, side)| if *side == Side::Top { xs[v] } else { ys[v] + a })
                    .collect();
                return Err(patterns::violation(&s, w));
            }
            out.guarantees.push(Guarantee {
                i,
                j: tops.len() + j,
                free: format_spec_list(&class),
            });
        }
    }
    Ok(out)
}

/// Labels of the top and bottom vertices of `b` by part.
type SideLabels = (Vec<usize>, Vec<usize>);

fn bmp_rec(b: &BipartiteGraph, n: usize, m: usize) -> Result<SideLabels> {
    if n <= 2 || m <= 2 || b.a_size() == 0 || b.b_size() == 0 {
        return Ok((vec![0; b.a_size()], vec![0; b.b_size()]));
    }
    let t = refine_to_nm_template(b, n, m)?;
    let col = collapse_template(b, &t)?;
    let half = col.blocks.len() / 2;
    let a = b.a_size();
    let tops: Vec<Vec<usize>> = col.blocks[..half].iter().map(|bl| bl.vertices.clone()).collect();
    let bottoms: Vec<Vec<usize>> = col.blocks[half..]
        .iter()
        .map(|bl| bl.vertices.iter().map(|y| y - a).collect())
        .collect();
    let q = half / 2;
    let pairs: Vec<(usize, usize)> = (0..half).flat_map(|i| (0..half).map(move |j| (i, j))).collect();
    let results: Vec<Result<SideLabels>> = pairs
        .par_iter()
        .map(|&(i, j)| {
            let (nn, mm) = if (i < q) == (j < q) { (n - 1, m) } else { (n, m - 1) };
            bmp_rec(&b.induced(&tops[i], &bottoms[j]), nn, mm)
        })
        .collect();
    // Every vertex is labelled by its block and its part in each pair.
    let mut lab_a: Vec<Vec<usize>> = vec![Vec::new(); a];
    let mut lab_b: Vec<Vec<usize>> = vec![Vec::new(); b.b_size()];
    for (i, xs) in tops.iter().enumerate() {
        for &x in xs {
            lab_a[x].push(i);
        }
    }
    for (j, ys) in bottoms.iter().enumerate() {
        for &y in ys {
            lab_b[y].push(j);
        }
    }
    for (&(i, j), r) in pairs.iter().zip(results) {
        let (la, lb) = r?;
        for (pos, &x) in tops[i].iter().enumerate() {
            lab_a[x].push(la[pos]);
        }
        for (pos, &y) in bottoms[j].iter().enumerate() {
            lab_b[y].push(lb[pos]);
        }
    }
    Ok((relabel(lab_a), relabel(lab_b)))
}

/// Dense part labels from label vectors, numbered by first appearance.
fn relabel(keys: Vec<Vec<usize>>) -> Vec<usize> {
    let mut ids: std::collections::HashMap<Vec<usize>, usize> = Default::default();
    keys.into_iter()
        .map(|k| {
            let next = ids.len();
            *ids.entry(k).or_insert(next)
        })
        .collect()
}

fn parts_of(labels: &[usize]) -> Vec<Vec<usize>> {
    let count = labels.iter().map(|&l| l + 1).max().unwrap_or(0);
    let mut parts = vec![Vec::new(); count];
    for (v, &l) in labels.iter().enumerate() {
        parts[l].push(v);
    }
    parts
}

/// Partition of both sides of a `Free(nK2, co-mK2)` bipartite graph with
/// 2K2-free graphs between all top and bottom parts. Output ids are flat
/// (`B` shifted by `|A|`), top parts first.
pub fn bipartite_matching_partition(b: &BipartiteGraph, n: usize, m: usize) -> Result<LabelledPartition> {
    if n < 2 || m < 2 {
        return Err(Error::Argument("need n, m >= 2".into()));
    }
    patterns::require_bip_free(b, &[PatternSpec::matching(n), PatternSpec::comatching(m)])?;
    let (la, lb) = bmp_rec(b, n, m)?;
    let a = b.a_size();
    let tops = parts_of(&la);
    let bottoms: Vec<Vec<usize>> = parts_of(&lb)
        .into_iter()
        .map(|p| p.into_iter().map(|y| y + a).collect())
        .collect();
    let mut out = LabelledPartition::default();
    for vertices in tops.iter().chain(&bottoms) {
        out.blocks.push(Block {
            kind: BlockKind::Independent,
            vertices: vertices.clone(),
        });
    }
    let tag = PatternSpec::matching(2).to_string();
    let g = b.to_graph();
    for i in 0..tops.len() {
        for j in 0..bottoms.len() {
            let cross = BipartiteGraph::between(&g, &tops[i], &bottoms[j]);
            if let Some((x, y)) = patterns::twin_star_pair(&cross, 1) {
                return Err(Error::Contract(format!(
                    "parts {i} and {j} contain 2K2 at top vertices {} {}",
                    tops[i][x], tops[i][y]
                )));
            }
            out.guarantees.push(Guarantee {
                i,
                j: tops.len() + j,
                free: tag.clone(),
            });
        }
    }
    Ok(out)
}

/// Maximal independent set of `G[vs]` with no 1-for-2 swap: no member
/// `x` has two non-adjacent outside vertices whose only neighbour in the
/// set is `x`. Greedy in increasing id order, then swaps until none
/// applies; each swap grows the set.
fn swap_free_independent_set(g: &Graph, vs: &[usize]) -> Vec<usize> {
    let mut x: Vec<usize> = Vec::new();
    let extend = |x: &mut Vec<usize>| {
        for &v in vs {
            if !x.contains(&v) && x.iter().all(|&u| !g.has_edge(u, v)) {
                x.push(v);
            }
        }
    };
    extend(&mut x);
    'outer: loop {
        let xs = bits_from(g.n(), x.iter().copied());
        for (pos, &c) in x.iter().enumerate() {
            let private: Vec<usize> = vs
                .iter()
                .copied()
                .filter(|&v| !xs.contains(v) && g.nbrs(v).intersection_count(&xs) == 1 && g.has_edge(v, c))
                .collect();
            for (i, &y1) in private.iter().enumerate() {
                if let Some(&y2) = private[i + 1..].iter().find(|&&y2| !g.has_edge(y1, y2)) {
                    x.remove(pos);
                    x.push(y1);
                    x.push(y2);
                    extend(&mut x);
                    continue 'outer;
                }
            }
        }
        break;
    }
    x.sort_unstable();
    x
}

/// A swap-free maximal independent set, then the vertices with exactly one
/// and with at least two neighbours in it.
fn cochrom_base(g: &Graph, vs: &[usize]) -> Vec<Block> {
    let x = swap_free_independent_set(g, vs);
    let xs = bits_from(g.n(), x.iter().copied());
    let (mut y, mut z) = (Vec::new(), Vec::new());
    for &v in vs {
        if xs.contains(v) {
            continue;
        }
        match g.nbrs(v).intersection_count(&xs) {
            1 => y.push(v),
            _ => z.push(v),
        }
    }
    let mut out = vec![Block {
        kind: BlockKind::Independent,
        vertices: x,
    }];
    for part in [y, z] {
        if !part.is_empty() {
            out.push(Block {
                kind: BlockKind::Clique,
                vertices: part,
            });
        }
    }
    out
}

/// Merges pairs of blocks whose union is still a clique or an independent
/// set, until no pair merges.
pub(crate) fn merge_blocks(g: &Graph, blocks: &mut Vec<Block>) {
    'outer: loop {
        for i in 0..blocks.len() {
            for j in i + 1..blocks.len() {
                let mut u = blocks[i].vertices.clone();
                u.extend(&blocks[j].vertices);
                u.sort_unstable();
                let kind = if g.is_clique(&u) {
                    BlockKind::Clique
                } else if g.is_independent(&u) {
                    BlockKind::Independent
                } else {
                    continue;
                };
                blocks[i] = Block { kind, vertices: u };
                blocks.remove(j);
                continue 'outer;
            }
        }
        break;
    }
}

fn check_kinds(g: &Graph, blocks: &[Block]) -> Result<()> {
    for (i, b) in blocks.iter().enumerate() {
        let ok = match b.kind {
            BlockKind::Clique => g.is_clique(&b.vertices),
            BlockKind::Independent => g.is_independent(&b.vertices),
            BlockKind::Unconstrained => true,
        };
        if !ok {
            return Err(Error::Contract(format!("block {i} is not a {:?}", b.kind)));
        }
    }
    Ok(())
}

/// At most three blocks (an independent set and two cliques) for a
/// `(2K2, C4)`-free graph.
pub fn cochromatic_2k2_c4(g: &Graph) -> Result<LabelledPartition> {
    patterns::require_free(g, &[PatternSpec::nk2(2), PatternSpec::co_nk2(2)])?;
    let vs: Vec<usize> = (0..g.n()).collect();
    let mut blocks = cochrom_base(g, &vs);
    blocks.retain(|b| !b.vertices.is_empty());
    merge_blocks(g, &mut blocks);
    check_kinds(g, &blocks)?;
    Ok(LabelledPartition {
        blocks,
        guarantees: vec![],
    })
}

fn cochrom_rec(g: &Graph, vs: &[usize], n: usize, m: usize, out: &mut Vec<Block>) {
    if vs.is_empty() {
        return;
    }
    let kind = if n <= 1 {
        Some(BlockKind::Independent)
    } else if m <= 1 {
        Some(BlockKind::Clique)
    } else {
        None
    };
    if let Some(kind) = kind {
        out.push(Block {
            kind,
            vertices: vs.to_vec(),
        });
        return;
    }
    let sub = g.induced(vs);
    // A 4-cycle v1 v2 v3 v4 of `h`, where `h` is `g` or its complement.
    let (cycle, in_complement) = if let Some(e) = patterns::find_induced(&sub, &PatternSpec::co_nk2(2)) {
        ([e.map[0], e.map[2], e.map[1], e.map[3]], false)
    } else if let Some(e) = patterns::find_induced(&sub, &PatternSpec::nk2(2)) {
        ([e.map[0], e.map[2], e.map[1], e.map[3]], true)
    } else {
        out.extend(cochrom_base(g, vs).into_iter().filter(|b| !b.vertices.is_empty()));
        return;
    };
    let c: Vec<usize> = cycle.iter().map(|&i| vs[i]).collect();
    let adj = |u: usize, v: usize| g.has_edge(u, v) != in_complement;
    let mut bags: [Vec<usize>; 6] = Default::default();
    for &v in vs {
        let a = |i: usize| v != c[i] && adj(v, c[i]);
        let slot = if a(0) && a(2) {
            0
        } else if a(1) && a(3) {
            1
        } else if !a(0) && !a(1) {
            2
        } else if !a(1) && !a(2) {
            3
        } else if !a(2) && !a(3) {
            4
        } else {
            5
        };
        bags[slot].push(v);
    }
    for (slot, bag) in bags.iter().enumerate() {
        let (nn, mm) = match (slot < 2, in_complement) {
            (true, false) | (false, true) => (n, m - 1),
            _ => (n - 1, m),
        };
        cochrom_rec(g, bag, nn, mm, out);
    }
}

/// Partition of a `Free(nK2, co-mK2)` graph into at most
/// `3 * 6^((n-2)+(m-2))` cliques and independent sets.
pub fn cochromatic_matching(g: &Graph, n: usize, m: usize) -> Result<LabelledPartition> {
    if n < 2 || m < 2 {
        return Err(Error::Argument("need n, m >= 2".into()));
    }
    patterns::require_free(g, &[PatternSpec::nk2(n), PatternSpec::co_nk2(m)])?;
    let vs: Vec<usize> = (0..g.n()).collect();
    let mut blocks = Vec::new();
    cochrom_rec(g, &vs, n, m, &mut blocks);
    merge_blocks(g, &mut blocks);
    check_kinds(g, &blocks)?;
    if blocks.len() as u128 > bounds::z_nm(n, m) {
        return Err(Error::Contract(format!("{} blocks exceed the bound", blocks.len())));
    }
    Ok(LabelledPartition {
        blocks,
        guarantees: vec![],
    })
}

/// Partition of a `Free(F_{n,1})` graph into cliques and independent sets
/// with 2K2-free bipartite graphs between every two blocks.
pub fn matching_partition(g: &Graph, n: usize) -> Result<LabelledPartition> {
    if n < 2 {
        return Err(Error::Argument("need n >= 2".into()));
    }
    patterns::require_free(g, &PatternSpec::f_family(n, 1))?;
    let coarse = cochromatic_matching(g, n, n)?;
    let z = coarse.blocks.len();
    let pairs: Vec<(usize, usize)> = (0..z).flat_map(|i| (i + 1..z).map(move |j| (i, j))).collect();
    let results: Vec<Result<LabelledPartition>> = pairs
        .par_iter()
        .map(|&(i, j)| {
            let (xs, ys) = (&coarse.blocks[i].vertices, &coarse.blocks[j].vertices);
            bipartite_matching_partition(&BipartiteGraph::between(g, xs, ys), n, n)
        })
        .collect();
    // For every coarse block, one labelling of its members per other block.
    let mut labels: Vec<Vec<Vec<usize>>> = coarse
        .blocks
        .iter()
        .map(|b| vec![Vec::new(); b.vertices.len()])
        .collect();
    for (&(i, j), r) in pairs.iter().zip(results) {
        let p = r?;
        let ni = coarse.blocks[i].vertices.len();
        for (part, block) in p.blocks.iter().enumerate() {
            for &v in &block.vertices {
                if v < ni {
                    labels[i][v].push(part);
                } else {
                    labels[j][v - ni].push(part);
                }
            }
        }
    }
    let mut out = LabelledPartition::default();
    for (i, block) in coarse.blocks.iter().enumerate() {
        let ground: Vec<usize> = (0..block.vertices.len()).collect();
        let columns: Vec<Vec<usize>> = (0..z.saturating_sub(1))
            .map(|c| labels[i].iter().map(|l| l[c]).collect())
            .collect();
        for part in refine(&ground, &columns) {
            out.blocks.push(Block {
                kind: block.kind,
                vertices: part.iter().map(|&p| block.vertices[p]).collect(),
            });
        }
    }
    let tag = PatternSpec::matching(2).to_string();
    for i in 0..out.blocks.len() {
        for j in i + 1..out.blocks.len() {
            let cross = BipartiteGraph::between(g, &out.blocks[i].vertices, &out.blocks[j].vertices);
            if patterns::twin_star_pair(&cross, 1).is_some() {
                return Err(Error::Contract(format!("blocks {i} and {j} contain 2K2")));
            }
            out.guarantees.push(Guarantee { i, j, free: tag.clone() });
        }
    }
    if out.blocks.len() as u128 > bounds::t_matching(n) {
        return Err(Error::Contract("block count exceeds the bound".into()));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn p4_splits_into_two_single_edges() {
        let p4 = BipartiteGraph::from_edges(2, 2, &[(0, 0), (0, 1), (1, 1)]);
        let parts = skew_join_decompose(&p4);
        assert_eq!(parts.len(), 2);
        assert!(parts.iter().all(|p| p.edge_count() == 1));
    }

    #[test]
    fn cover_set_examples() {
        let k33 = BipartiteGraph::complete(3, 3);
        assert_eq!(cover_set(&k33, Side::Top, false).unwrap().len(), 1);
        let m = BipartiteGraph::from_edges(2, 2, &[(0, 0), (1, 1)]);
        assert_eq!(cover_set(&m, Side::Top, false).unwrap().members, vec![0, 1]);
        let mut nested = BipartiteGraph::new(4, 4);
        for x in 0..4 {
            for y in 0..=x {
                nested.add_edge(x, y);
            }
        }
        assert_eq!(cover_set(&nested, Side::Top, false).unwrap().members, vec![3]);
    }

    #[test]
    fn cochromatic_c5() {
        let p = cochromatic_2k2_c4(&Graph::cycle(5)).unwrap();
        assert_eq!(p.blocks.len(), 3);
    }

    #[test]
    fn refine_rejects_matching() {
        let m = BipartiteGraph::from_edges(3, 3, &[(0, 0), (1, 1), (2, 2)]);
        let e = refine_to_nm_template(&m, 3, 3).unwrap_err();
        assert!(matches!(e, Error::Contains { ref pattern, .. } if pattern == "matching(3)"));
    }
}
