//! Partitions built on d-templates: the induction step, the recursion to
//! twin-star-free pairs, the two splitting passes and the general-graph
//! partition into cliques and independent sets.

use rayon::prelude::*;

use super::cover::{partition_marked, Trace};
use super::template::{collapse_parts, d_template_unchecked, refine_consecutive, CollapseTag, StarParams, TaggedParts};
use crate::bounds;
use crate::error::{Error, Result};
use crate::graph::{full_bits, BipartiteGraph, Bits, Graph};
use crate::matching::merge_blocks;
use crate::partition::{refine, Block, BlockKind, Guarantee, LabelledPartition};
use crate::patterns::{self, is_twin_star_free, Family, Orientation, PatternSpec};

fn to_usize(x: u128) -> usize {
    usize::try_from(x).unwrap_or(usize::MAX)
}

fn all(len: usize) -> Vec<usize> {
    (0..len).collect()
}

fn twin_free(b: &BipartiteGraph, s: usize) -> bool {
    is_twin_star_free(b, s, Orientation::Lambda) && is_twin_star_free(b, s, Orientation::Up)
}

/// Both-way guarantee string of a `(2Λ_s, 2⊓_s)`-free pair.
fn both_ways(s: usize) -> String {
    patterns::format_spec_list(&[PatternSpec::lambda(2, s), PatternSpec::up(2, s)])
}

impl TaggedParts {
    fn retain_nonempty(&mut self) {
        let keep_t: Vec<bool> = self.tops.iter().map(|v| !v.is_empty()).collect();
        let keep_b: Vec<bool> = self.bottoms.iter().map(|v| !v.is_empty()).collect();
        self.tags = self
            .tags
            .iter()
            .zip(&keep_t)
            .filter(|(_, &k)| k)
            .map(|(row, _)| row.iter().zip(&keep_b).filter(|(_, &k)| k).map(|(t, _)| *t).collect())
            .collect();
        self.tops.retain(|v| !v.is_empty());
        self.bottoms.retain(|v| !v.is_empty());
    }
}

fn induction_parts(b: &BipartiteGraph, p: &StarParams) -> Result<TaggedParts> {
    if p.min_multiplicity() < 3 {
        return Err(Error::Argument("the induction step needs all multiplicities >= 3".into()));
    }
    let t = d_template_unchecked(b, p)?;
    let refined = refine_consecutive(b, &t)?;
    let mut parts = collapse_parts(b, &refined)?;
    let d = p.d();
    let c = to_usize(bounds::marked_classes(p.n(), p.k, d));
    let s = d.saturating_mul(2);
    let marked_a = partition_marked(t.traces_a(), c)?;
    let marked_b = partition_marked(t.traces_b(), c)?;
    for class in &marked_a {
        if !is_twin_star_free(&b.induced(class, &all(b.b_size())), s, Orientation::Lambda) {
            return Err(Error::Contract(format!("marked class {class:?} contains 2Λ_{s}")));
        }
    }
    for class in &marked_b {
        if !is_twin_star_free(&b.induced(&all(b.a_size()), class), s, Orientation::Up) {
            return Err(Error::Contract(format!("marked class {class:?} contains 2⊓_{s}")));
        }
    }
    let width = parts.bottoms.len() + marked_b.len();
    for row in &mut parts.tags {
        row.resize(width, CollapseTag::Up);
    }
    parts.tags.resize(parts.tops.len() + marked_a.len(), vec![CollapseTag::CoLambda; width]);
    parts.tops.extend(marked_a);
    parts.bottoms.extend(marked_b);
    parts.retain_nonempty();
    parts.verify(b, p)?;
    let limit = bounds::step_blocks(p.n(), p.k, p.r, d);
    if parts.tops.len().max(parts.bottoms.len()) as u128 > limit {
        return Err(Error::Contract(format!("induction step produced more than {limit} blocks")));
    }
    Ok(parts)
}

/// One induction step: both sides split into at most `4π² + 3nkd²`
/// blocks, each pair free of `(n_up-1)⊓`, `co-(m_up-1)⊓` or
/// `co-(m_lambda-1)Λ` with star size `k + 2d`. Marked classes come last.
pub fn star_induction_step(b: &BipartiteGraph, p: &StarParams) -> Result<LabelledPartition> {
    if p.min_multiplicity() < 3 {
        return Err(Error::Argument("the induction step needs all multiplicities >= 3".into()));
    }
    patterns::require_bip_free(b, &p.class())?;
    Ok(induction_parts(b, p)?.to_partition(b.a_size(), p))
}

/// Pair guarantee of the either/or recursion.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum Either {
    Lambda(usize),
    Up(usize),
}

impl Either {
    fn spec(self) -> PatternSpec {
        match self {
            Either::Lambda(s) => PatternSpec::lambda(2, s),
            Either::Up(s) => PatternSpec::up(2, s),
        }
    }

    fn holds(self, b: &BipartiteGraph) -> bool {
        match self {
            Either::Lambda(s) => is_twin_star_free(b, s, Orientation::Lambda),
            Either::Up(s) => is_twin_star_free(b, s, Orientation::Up),
        }
    }
}

struct Sub {
    la: Vec<usize>,
    lb: Vec<usize>,
    tags: Vec<Vec<Either>>,
}

/// Dense labels numbered by first appearance.
fn relabel(keys: &[Vec<usize>]) -> Vec<usize> {
    let ground = all(keys.len());
    let cols: Vec<Vec<usize>> = (0..keys.first().map_or(0, Vec::len))
        .map(|c| keys.iter().map(|k| k[c]).collect())
        .collect();
    let mut out = vec![0; keys.len()];
    for (id, part) in refine(&ground, &cols).into_iter().enumerate() {
        for v in part {
            out[v] = id;
        }
    }
    out
}

fn parts_of(labels: &[usize]) -> Vec<Vec<usize>> {
    let count = labels.iter().map(|&l| l + 1).max().unwrap_or(0);
    let mut parts = vec![Vec::new(); count];
    for (v, &l) in labels.iter().enumerate() {
        parts[l].push(v);
    }
    parts
}

fn either_rec(b: &BipartiteGraph, p: &StarParams) -> Result<Sub> {
    if p.min_multiplicity() <= 2 || b.a_size() == 0 || b.b_size() == 0 {
        let tag = if p.n_up <= 2 || p.m_up <= 2 {
            Either::Up(p.k)
        } else {
            Either::Lambda(p.k)
        };
        return Ok(Sub {
            la: vec![0; b.a_size()],
            lb: vec![0; b.b_size()],
            tags: vec![vec![tag]],
        });
    }
    let parts = induction_parts(b, p)?;
    let (tops, bottoms) = (&parts.tops, &parts.bottoms);
    let pairs: Vec<(usize, usize)> = (0..tops.len())
        .flat_map(|i| (0..bottoms.len()).map(move |j| (i, j)))
        .collect();
    let subs: Vec<Sub> = pairs
        .par_iter()
        .map(|&(i, j)| either_rec(&b.induced(&tops[i], &bottoms[j]), &parts.tags[i][j].next_params(p)))
        .collect::<Result<_>>()?;
    let (na, nb) = (b.a_size(), b.b_size());
    let mut home_a = vec![(0, 0); na];
    let mut home_b = vec![(0, 0); nb];
    let mut key_a: Vec<Vec<usize>> = vec![Vec::new(); na];
    let mut key_b: Vec<Vec<usize>> = vec![Vec::new(); nb];
    for (i, xs) in tops.iter().enumerate() {
        for (pos, &x) in xs.iter().enumerate() {
            home_a[x] = (i, pos);
            key_a[x].push(i);
        }
    }
    for (j, ys) in bottoms.iter().enumerate() {
        for (pos, &y) in ys.iter().enumerate() {
            home_b[y] = (j, pos);
            key_b[y].push(j);
        }
    }
    for (&(i, j), sub) in pairs.iter().zip(&subs) {
        for (pos, &x) in tops[i].iter().enumerate() {
            key_a[x].push(sub.la[pos]);
        }
        for (pos, &y) in bottoms[j].iter().enumerate() {
            key_b[y].push(sub.lb[pos]);
        }
    }
    let la = relabel(&key_a);
    let lb = relabel(&key_b);
    let reps_a: Vec<usize> = parts_of(&la).iter().map(|p| p[0]).collect();
    let reps_b: Vec<usize> = parts_of(&lb).iter().map(|p| p[0]).collect();
    let tags = reps_a
        .iter()
        .map(|&x| {
            let (i, px) = home_a[x];
            reps_b
                .iter()
                .map(|&y| {
                    let (j, py) = home_b[y];
                    let sub = &subs[i * bottoms.len() + j];
                    sub.tags[sub.la[px]][sub.lb[py]]
                })
                .collect()
        })
        .collect();
    Ok(Sub { la, lb, tags })
}

impl StarParams {
    /// Worst case over all decrement paths of the block bound `U'` and the
    /// star size `s` of the either/or recursion. Each of the `c` blocks of a
    /// step is cut by `c` partitions of at most `U'` parts: `U' <= c U'^c`.
    pub fn either_bound(&self) -> (u128, usize) {
        if self.min_multiplicity() <= 2 {
            return (1, self.k);
        }
        let c = bounds::step_blocks(self.n(), self.k, self.r, self.d());
        [CollapseTag::Up, CollapseTag::CoUp, CollapseTag::CoLambda]
            .into_iter()
            .map(|t| {
                let (u, s) = t.next_params(self).either_bound();
                (bounds::sat_mul(c, bounds::sat_pow(u, c)), s)
            })
            .fold((1, self.k), |(u, s), (u2, s2)| (u.max(u2), s.max(s2)))
    }

    /// Block bound per side of the bipartite star partition.
    pub fn star_bound(&self) -> u128 {
        let (u1, s) = self.either_bound();
        let phi = bounds::phi(self.n(), self.k, s);
        let u2 = bounds::sat_mul(u1, bounds::sat_pow(phi, u1));
        bounds::sat_mul(u2, bounds::sat_pow(phi, u2))
    }
}

fn flat_blocks(tops: &[Vec<usize>], bottoms: &[Vec<usize>], a: usize) -> Vec<Block> {
    tops.iter()
        .cloned()
        .chain(bottoms.iter().map(|ys| ys.iter().map(|y| y + a).collect()))
        .map(|vertices| Block {
            kind: BlockKind::Independent,
            vertices,
        })
        .collect()
}

/// Partition of both sides such that every pair of blocks is `2Λ_s`-free
/// or `2⊓_s`-free. Each guarantee names the star size reached on the
/// recursion path of that pair, never more than `either_bound().1`.
pub fn partition_either(b: &BipartiteGraph, p: &StarParams) -> Result<LabelledPartition> {
    patterns::require_bip_free(b, &p.class())?;
    let sub = either_rec(b, p)?;
    let tops = parts_of(&sub.la);
    let bottoms = parts_of(&sub.lb);
    let mut out = LabelledPartition {
        blocks: flat_blocks(&tops, &bottoms, b.a_size()),
        guarantees: Vec::new(),
    };
    for (i, xs) in tops.iter().enumerate() {
        for (j, ys) in bottoms.iter().enumerate() {
            let tag = sub.tags[i][j];
            if !tag.holds(&b.induced(xs, ys)) {
                return Err(Error::Contract(format!("blocks {i}, {j} contain {}", tag.spec())));
            }
            out.guarantees.push(Guarantee {
                i,
                j: tops.len() + j,
                free: tag.spec().to_string(),
            });
        }
    }
    let limit = p.either_bound().0;
    if tops.len().max(bottoms.len()) as u128 > limit {
        return Err(Error::Contract(format!("more than {limit} blocks per side")));
    }
    Ok(out)
}

/// Splits `A` so that each class is `2Λ_{2k-1}`-free against all of `B`,
/// for `b` in `Free(2⊓_s, nΛ_k, co-nΛ_k)`. Output classes are verified.
fn orand_classes(b: &BipartiteGraph, s: usize, n: usize, k: usize) -> Result<Vec<Vec<usize>>> {
    let (na, nb) = (b.a_size(), b.b_size());
    let mut used_a = Bits::with_capacity(na);
    let mut rem_b = full_bits(nb);
    let mut bags_a: Vec<Vec<usize>> = Vec::new();
    let mut bags_b: Vec<usize> = Vec::new();
    while let Some(v) = {
        let mut rem_a = full_bits(na);
        rem_a.difference_with(&used_a);
        rem_b.ones().min_by_key(|&y| (b.deg_bottom_in(y, &rem_a), y))
    } {
        rem_b.set(v, false);
        bags_b.push(v);
        let bag: Vec<usize> = b
            .nbr_bottom(v)
            .ones()
            .filter(|&x| !used_a.contains(x) && rem_b.difference_count(b.nbr_top(x)) < k)
            .collect();
        for &x in &bag {
            used_a.insert(x);
        }
        bags_a.push(bag);
    }
    bags_a.push((0..na).filter(|&x| !used_a.contains(x)).collect());

    let two_k = (2 * k).saturating_sub(1).max(1);
    let mut traces = Vec::new();
    let mut unmarked = Vec::new();
    for (i, bag) in bags_a.iter().enumerate() {
        for &x in bag {
            let earlier = |j: usize| bags_b[..j].iter().filter(|&&y| b.has_edge(x, y)).count();
            if earlier(i) >= k {
                let lo = (0..=i).find(|&j| earlier(j) >= k).expect("i qualifies");
                traces.push(Trace { vertex: x, lo, hi: i });
            } else {
                unmarked.push(x);
            }
        }
    }
    let delta = n.saturating_mul(k).saturating_mul(s.saturating_mul(s));
    let c = to_usize(bounds::marked_classes(n, k, delta));
    let mut classes = partition_marked(&traces, c)?;
    for class in &mut classes {
        class.sort_unstable();
    }
    unmarked.sort_unstable();
    if !unmarked.is_empty() {
        classes.push(unmarked);
    }
    let all_b = all(nb);
    for class in &classes {
        let h = b.induced(class, &all_b);
        if !is_twin_star_free(&h, two_k, Orientation::Lambda) || !is_twin_star_free(&h, s, Orientation::Up) {
            return Err(Error::Contract(format!("class {class:?} is not (2⊓_{s}, 2Λ_{two_k})-free")));
        }
    }
    if classes.len() as u128 > bounds::phi(n, k, s) {
        return Err(Error::Contract("splitting produced more than phi classes".into()));
    }
    Ok(classes)
}

/// Splits `A` of a `Free(2⊓_s, nΛ_k, co-nΛ_k)` graph into at most
/// `3nk(nks²)² + 1` blocks, each `(2⊓_s, 2Λ_{2k-1})`-free against `B`.
/// `B` is returned as a single last block.
pub fn orand_refine(b: &BipartiteGraph, s: usize, n: usize, k: usize) -> Result<LabelledPartition> {
    if s == 0 || n == 0 || k == 0 {
        return Err(Error::Argument("need s, n, k >= 1".into()));
    }
    if let Some((x, y)) = patterns::twin_star_pair(&b.transpose(), s) {
        return Err(Error::Contains {
            pattern: PatternSpec::up(2, s).to_string(),
            witness: vec![b.a_size() + x, b.a_size() + y],
        });
    }
    patterns::require_bip_free(b, &[PatternSpec::lambda(n, k), PatternSpec::co_lambda(n, k)])?;
    let classes = orand_classes(b, s, n, k)?;
    let bottom = if b.b_size() > 0 { vec![all(b.b_size())] } else { vec![] };
    let free = patterns::format_spec_list(&[PatternSpec::up(2, s), PatternSpec::lambda(2, (2 * k - 1).max(1))]);
    let mut out = LabelledPartition {
        blocks: flat_blocks(&classes, &bottom, b.a_size()),
        guarantees: Vec::new(),
    };
    if !bottom.is_empty() {
        for i in 0..classes.len() {
            out.guarantees.push(Guarantee {
                i,
                j: classes.len(),
                free: free.clone(),
            });
        }
    }
    Ok(out)
}

/// Refines `parts` (tops of `b`): part `i` is split by the splitting
/// classes of `b[parts[i], others[j]]` for every `j` with `want(i, j)`.
/// Returns the new parts and the index of each one's parent.
fn split_pass(
    b: &BipartiteGraph,
    parts: &[Vec<usize>],
    others: &[Vec<usize>],
    want: &(dyn Fn(usize, usize) -> Option<usize> + Sync),
    n: usize,
    k: usize,
) -> Result<(Vec<Vec<usize>>, Vec<usize>)> {
    let split: Vec<Vec<Vec<usize>>> = parts
        .par_iter()
        .enumerate()
        .map(|(i, xs)| {
            let mut cols = Vec::new();
            for (j, ys) in others.iter().enumerate() {
                let Some(s) = want(i, j) else { continue };
                let classes = orand_classes(&b.induced(xs, ys), s, n, k)?;
                let mut col = vec![0; xs.len()];
                for (c, class) in classes.iter().enumerate() {
                    for &pos in class {
                        col[pos] = c;
                    }
                }
                cols.push(col);
            }
            Ok(refine(&all(xs.len()), &cols)
                .into_iter()
                .map(|part| part.into_iter().map(|pos| xs[pos]).collect())
                .collect())
        })
        .collect::<Result<_>>()?;
    let mut out = Vec::new();
    let mut parent = Vec::new();
    for (i, pieces) in split.into_iter().enumerate() {
        for piece in pieces {
            out.push(piece);
            parent.push(i);
        }
    }
    Ok((out, parent))
}

/// Greedily merges parts of `tops` while every pair with `bottoms` stays
/// `(2Λ_s, 2⊓_s)`-free.
fn coarsen(b: &BipartiteGraph, tops: Vec<Vec<usize>>, bottoms: &[Vec<usize>], s: usize) -> Vec<Vec<usize>> {
    let mut kept: Vec<Vec<usize>> = Vec::new();
    for xs in tops {
        let fit = kept.iter().position(|ks| {
            let mut u = ks.clone();
            u.extend(&xs);
            bottoms.iter().all(|ys| twin_free(&b.induced(&u, ys), s))
        });
        match fit {
            Some(i) => {
                kept[i].extend(xs);
                kept[i].sort_unstable();
            }
            None => kept.push(xs),
        }
    }
    kept
}

fn star_parts(b: &BipartiteGraph, p: &StarParams) -> Result<(Vec<Vec<usize>>, Vec<Vec<usize>>)> {
    let sub = either_rec(b, p)?;
    let tops0 = parts_of(&sub.la);
    let bottoms0 = parts_of(&sub.lb);
    let tag = |i: usize, j: usize| sub.tags[i][j];
    let (n, k) = (p.n(), p.k);
    let s2 = (2 * k - 1).max(1);
    let bt = b.transpose();

    let up_s = |i: usize, j: usize| match tag(i, j) {
        Either::Up(s) => Some(s),
        Either::Lambda(_) => None,
    };
    let lambda_s = |j: usize, i: usize| match tag(i, j) {
        Either::Lambda(s) => Some(s),
        Either::Up(_) => None,
    };
    let (tops1, pa1) = split_pass(b, &tops0, &bottoms0, &up_s, n, k)?;
    let (bottoms1, pb1) = split_pass(&bt, &bottoms0, &tops0, &lambda_s, n, k)?;

    let lambda_pair = |i: usize, j: usize| matches!(tag(pa1[i], pb1[j]), Either::Lambda(_)).then_some(s2);
    let up_pair = |j: usize, i: usize| matches!(tag(pa1[i], pb1[j]), Either::Up(_)).then_some(s2);
    let (tops2, _) = split_pass(b, &tops1, &bottoms1, &lambda_pair, n, k)?;
    let (bottoms2, _) = split_pass(&bt, &bottoms1, &tops1, &up_pair, n, k)?;

    let limit = p.star_bound();
    if tops2.len().max(bottoms2.len()) as u128 > limit {
        return Err(Error::Contract(format!("more than {limit} blocks per side")));
    }
    let tops = coarsen(b, tops2, &bottoms2, s2);
    let bottoms = coarsen(&bt, bottoms2, &tops, s2);
    for (i, xs) in tops.iter().enumerate() {
        for (j, ys) in bottoms.iter().enumerate() {
            if !twin_free(&b.induced(xs, ys), s2) {
                return Err(Error::Contract(format!("blocks {i}, {j} are not (2Λ_{s2}, 2⊓_{s2})-free")));
            }
        }
    }
    Ok((tops, bottoms))
}

/// Partition of both sides of a member of the class of `p` such that every
/// pair of blocks is `(2Λ_{2k-1}, 2⊓_{2k-1})`-free.
pub fn bipartite_star_partition(b: &BipartiteGraph, p: &StarParams) -> Result<LabelledPartition> {
    patterns::require_bip_free(b, &p.class())?;
    let (tops, bottoms) = star_parts(b, p)?;
    let free = both_ways((2 * p.k - 1).max(1));
    let mut out = LabelledPartition {
        blocks: flat_blocks(&tops, &bottoms, b.a_size()),
        guarantees: Vec::new(),
    };
    for i in 0..tops.len() {
        for j in 0..bottoms.len() {
            out.guarantees.push(Guarantee {
                i,
                j: tops.len() + j,
                free: free.clone(),
            });
        }
    }
    Ok(out)
}

/// Vertex counts up to this are partitioned exactly by `cochromatic_star`.
pub const EXACT_COCHROMATIC_LIMIT: usize = 16;

#[derive(Clone, Copy, PartialEq, Eq)]
enum Kind {
    Single,
    Clique,
    Indep,
}

struct Search {
    adj: Vec<u64>,
    best: Vec<(u64, Kind)>,
}

impl Search {
    fn go(&mut self, v: usize, blocks: &mut Vec<(u64, Kind)>) {
        if blocks.len() >= self.best.len() {
            return;
        }
        if v == self.adj.len() {
            self.best = blocks.clone();
            return;
        }
        let nb = self.adj[v];
        for i in 0..blocks.len() {
            let (mask, kind) = blocks[i];
            let next = match kind {
                Kind::Single if nb & mask != 0 => Kind::Clique,
                Kind::Single => Kind::Indep,
                Kind::Clique if nb & mask == mask => Kind::Clique,
                Kind::Indep if nb & mask == 0 => Kind::Indep,
                _ => continue,
            };
            blocks[i] = (mask | 1 << v, next);
            self.go(v + 1, blocks);
            blocks[i] = (mask, kind);
        }
        blocks.push((1 << v, Kind::Single));
        self.go(v + 1, blocks);
        blocks.pop();
    }
}

fn greedy_cochromatic(g: &Graph) -> Vec<Block> {
    let mut left: Vec<usize> = all(g.n());
    let mut out = Vec::new();
    let grow = |left: &[usize], want_edge: bool| {
        let mut set: Vec<usize> = Vec::new();
        let mut order = left.to_vec();
        order.sort_by_key(|&v| {
            let d = left.iter().filter(|&&u| g.has_edge(u, v)).count();
            (if want_edge { usize::MAX - d } else { d }, v)
        });
        for v in order {
            if set.iter().all(|&u| g.has_edge(u, v) == want_edge) {
                set.push(v);
            }
        }
        set
    };
    while !left.is_empty() {
        let clique = grow(&left, true);
        let indep = grow(&left, false);
        let (mut set, kind) = if clique.len() >= indep.len() {
            (clique, BlockKind::Clique)
        } else {
            (indep, BlockKind::Independent)
        };
        set.sort_unstable();
        left.retain(|v| !set.contains(v));
        out.push(Block { kind, vertices: set });
    }
    merge_blocks(g, &mut out);
    out
}

fn cochromatic_blocks(g: &Graph) -> Vec<Block> {
    let greedy = greedy_cochromatic(g);
    if g.n() > EXACT_COCHROMATIC_LIMIT {
        return greedy;
    }
    let as_mask = |vs: &[usize]| vs.iter().fold(0u64, |m, &v| m | 1 << v);
    let mut s = Search {
        adj: (0..g.n()).map(|v| as_mask(&g.nbrs(v).ones().collect::<Vec<_>>())).collect(),
        best: greedy
            .iter()
            .map(|bl| (as_mask(&bl.vertices), Kind::Single))
            .collect(),
    };
    let start = s.best.len();
    s.go(0, &mut Vec::new());
    if s.best.len() == start {
        return greedy;
    }
    s.best
        .into_iter()
        .map(|(mask, kind)| Block {
            kind: if kind == Kind::Indep {
                BlockKind::Independent
            } else {
                BlockKind::Clique
            },
            vertices: (0..g.n()).filter(|&v| mask >> v & 1 == 1).collect(),
        })
        .collect()
}

fn star_class_specs(n: usize, k: usize, l: usize) -> Vec<PatternSpec> {
    vec![
        PatternSpec::new(Family::G1, n, k),
        PatternSpec::new(Family::H1, n, k),
        PatternSpec::new(Family::NKl, n, l),
        PatternSpec::new(Family::CoNKl, n, l),
    ]
}

/// Partition of a `Free(nK_{1,k}, co-nK_{1,k}, nK_l, co-nK_l)` graph into
/// the fewest cliques and independent sets, by exhaustive search up to
/// [`EXACT_COCHROMATIC_LIMIT`] vertices and greedily above.
pub fn cochromatic_star(g: &Graph, n: usize, k: usize, l: usize) -> Result<LabelledPartition> {
    if n == 0 || k == 0 || l == 0 {
        return Err(Error::Argument("need n, k, l >= 1".into()));
    }
    patterns::require_free(g, &star_class_specs(n, k, l))?;
    let blocks = cochromatic_blocks(g);
    for (i, bl) in blocks.iter().enumerate() {
        let ok = match bl.kind {
            BlockKind::Clique => g.is_clique(&bl.vertices),
            _ => g.is_independent(&bl.vertices),
        };
        if !ok {
            return Err(Error::Contract(format!("block {i} is not a {:?}", bl.kind)));
        }
    }
    Ok(LabelledPartition {
        blocks,
        guarantees: vec![],
    })
}

/// Partition of a graph in `Free(F_{n,k}, nK_l, co-nK_l)` into cliques and
/// independent sets such that between any two blocks the bipartite graph
/// is `(2Λ_{2k-1}, 2⊓_{2k-1})`-free.
pub fn main_partition(g: &Graph, n: usize, k: usize, l: usize) -> Result<LabelledPartition> {
    if n < 1 || k < 1 || l < 1 {
        return Err(Error::Argument("need n, k, l >= 1".into()));
    }
    let mut specs = PatternSpec::f_family(n, k);
    specs.extend([PatternSpec::new(Family::NKl, n, l), PatternSpec::new(Family::CoNKl, n, l)]);
    patterns::require_free(g, &specs)?;
    let coarse = cochromatic_blocks(g);
    let z = coarse.len();
    let p = StarParams::uniform(n, k)?;
    let s = (2 * k - 1).max(1);
    let pairs: Vec<(usize, usize)> = (0..z).flat_map(|i| (i + 1..z).map(move |j| (i, j))).collect();
    let results: Vec<(Vec<Vec<usize>>, Vec<Vec<usize>>)> = pairs
        .par_iter()
        .map(|&(i, j)| {
            let h = BipartiteGraph::between(g, &coarse[i].vertices, &coarse[j].vertices);
            star_parts(&h, &p)
        })
        .collect::<Result<_>>()?;
    let mut cols: Vec<Vec<Vec<usize>>> = coarse.iter().map(|_| Vec::new()).collect();
    let column = |len: usize, parts: &[Vec<usize>]| {
        let mut col = vec![0; len];
        for (c, part) in parts.iter().enumerate() {
            for &pos in part {
                col[pos] = c;
            }
        }
        col
    };
    for (&(i, j), (tops, bottoms)) in pairs.iter().zip(&results) {
        cols[i].push(column(coarse[i].vertices.len(), tops));
        cols[j].push(column(coarse[j].vertices.len(), bottoms));
    }
    let mut groups: Vec<Vec<Vec<usize>>> = coarse
        .iter()
        .zip(&cols)
        .map(|(bl, c)| {
            refine(&all(bl.vertices.len()), c)
                .into_iter()
                .map(|part| part.into_iter().map(|pos| bl.vertices[pos]).collect())
                .collect()
        })
        .collect();
    // Greedy merge inside each coarse block while all cross pairs stay free.
    for i in 0..z {
        let others: Vec<Vec<usize>> = groups
            .iter()
            .enumerate()
            .filter(|&(o, _)| o != i)
            .flat_map(|(_, gs)| gs.iter().cloned())
            .collect();
        let pieces = std::mem::take(&mut groups[i]);
        let mut kept: Vec<Vec<usize>> = Vec::new();
        for xs in pieces {
            let fit = kept.iter().position(|ks| {
                let mut u = ks.clone();
                u.extend(&xs);
                others.iter().all(|ys| twin_free(&BipartiteGraph::between(g, &u, ys), s))
            });
            match fit {
                Some(f) => {
                    kept[f].extend(xs);
                    kept[f].sort_unstable();
                }
                None => kept.push(xs),
            }
        }
        groups[i] = kept;
    }
    let blocks: Vec<Block> = coarse
        .iter()
        .zip(groups)
        .flat_map(|(bl, gs)| {
            gs.into_iter().map(move |vertices| Block {
                kind: bl.kind,
                vertices,
            })
        })
        .collect();
    let free = both_ways(s);
    let mut out = LabelledPartition {
        blocks,
        guarantees: Vec::new(),
    };
    for i in 0..out.blocks.len() {
        for j in i + 1..out.blocks.len() {
            let h = BipartiteGraph::between(g, &out.blocks[i].vertices, &out.blocks[j].vertices);
            if !twin_free(&h, s) {
                return Err(Error::Contract(format!("blocks {i}, {j} are not (2Λ_{s}, 2⊓_{s})-free")));
            }
            out.guarantees.push(Guarantee { i, j, free: free.clone() });
        }
    }
    let u = p.star_bound();
    let limit = bounds::sat_mul(z as u128, bounds::sat_pow(u, z as u128));
    if out.blocks.len() as u128 > limit {
        return Err(Error::Contract(format!("more than {limit} blocks")));
    }
    Ok(out)
}
