//! d-templates: the bag procedure for bipartite graphs without star
//! forests and their bipartite complements, the marked vertices it leaves
//! behind, the refinement of consecutive bags and the collapse to `4q`
//! blocks per side.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use super::cover::{cover_sets, Trace};
use crate::bounds;
use crate::error::{Error, Result};
use crate::graph::{bits_from, full_bits, BipartiteGraph, Bits, Side};
use crate::partition::{Block, BlockKind, Guarantee, LabelledPartition};
use crate::patterns::{self, PatternSpec};

/// Forbidden multiplicities of the class `Free(n_up ⊓_k, n_lambda Λ_k,
/// co-m_up ⊓_k, co-m_lambda Λ_k)`. `⊓` stars have their centre in `B`,
/// `Λ` stars in `A`.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct StarParams {
    pub n_up: usize,
    pub n_lambda: usize,
    pub m_up: usize,
    pub m_lambda: usize,
    pub k: usize,
    /// Covering multiplicity. Defaults to `k * n`.
    pub r: usize,
}

impl StarParams {
    pub fn new(n_up: usize, n_lambda: usize, m_up: usize, m_lambda: usize, k: usize) -> Result<Self> {
        if [n_up, n_lambda, m_up, m_lambda, k].contains(&0) {
            return Err(Error::Argument("star parameters must be positive".into()));
        }
        let n = n_up.max(n_lambda).max(m_up).max(m_lambda);
        Ok(StarParams {
            n_up,
            n_lambda,
            m_up,
            m_lambda,
            k,
            r: k.saturating_mul(n),
        })
    }

    pub fn uniform(n: usize, k: usize) -> Result<Self> {
        Self::new(n, n, n, n, k)
    }

    pub fn with_r(self, r: usize) -> Self {
        StarParams { r, ..self }
    }

    pub fn n(&self) -> usize {
        self.n_up.max(self.n_lambda).max(self.m_up).max(self.m_lambda)
    }

    pub fn mu(&self) -> usize {
        self.n_up + self.n_lambda + self.m_up + self.m_lambda
    }

    /// Join slack `(n-1)r + kr`.
    pub fn d(&self) -> usize {
        (self.n() - 1)
            .saturating_mul(self.r)
            .saturating_add(self.k.saturating_mul(self.r))
    }

    pub fn class(&self) -> Vec<PatternSpec> {
        vec![
            PatternSpec::up(self.n_up, self.k),
            PatternSpec::lambda(self.n_lambda, self.k),
            PatternSpec::co_up(self.m_up, self.k),
            PatternSpec::co_lambda(self.m_lambda, self.k),
        ]
    }

    pub fn min_multiplicity(&self) -> usize {
        self.n_up.min(self.n_lambda).min(self.m_up).min(self.m_lambda)
    }
}

/// Covering layers recorded while building bag `i`: `(W, W')` of the step
/// that produced `A_i` and of the step that produced `B_i`.
#[derive(Clone, Default, PartialEq, Eq, Debug)]
struct BagCover {
    a: Option<(Vec<usize>, Vec<usize>)>,
    b: Option<(Vec<usize>, Vec<usize>)>,
}

/// Bags `A_0..A_{z-1}`, `B_0..B_{z-1}` with their construction supersets,
/// start indices and marked vertices, optionally split into `q` pieces.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct DTemplate {
    pub bags_a: Vec<Vec<usize>>,
    pub bags_b: Vec<Vec<usize>>,
    pub plus_a: Vec<Vec<usize>>,
    pub plus_b: Vec<Vec<usize>>,
    /// Bags whose `B` bag is a single start vertex.
    #[serde(rename = "I")]
    pub start_indices: Vec<usize>,
    pub d: usize,
    pub params: StarParams,
    pub q: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub pieces_a: Option<Vec<Vec<Vec<usize>>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub pieces_b: Option<Vec<Vec<Vec<usize>>>>,
    pub marked_a: Vec<usize>,
    pub marked_b: Vec<usize>,
    #[serde(skip)]
    traces_a: Vec<Trace>,
    #[serde(skip)]
    traces_b: Vec<Trace>,
    #[serde(skip)]
    covers: Vec<BagCover>,
}

impl DTemplate {
    pub fn z(&self) -> usize {
        self.bags_a.len()
    }

    pub fn is_start(&self, i: usize) -> bool {
        self.start_indices.contains(&i)
    }

    pub fn traces_a(&self) -> &[Trace] {
        &self.traces_a
    }

    pub fn traces_b(&self) -> &[Trace] {
        &self.traces_b
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("template serializes")
    }
}

fn ones(s: &Bits) -> Vec<usize> {
    s.ones().collect()
}

struct Builder<'a> {
    b: &'a BipartiteGraph,
    used_a: Bits,
    used_b: Bits,
    t: DTemplate,
}

impl Builder<'_> {
    fn rem_a(&self) -> Bits {
        let mut s = full_bits(self.b.a_size());
        s.difference_with(&self.used_a);
        s
    }

    fn rem_b(&self) -> Bits {
        let mut s = full_bits(self.b.b_size());
        s.difference_with(&self.used_b);
        s
    }

    fn slot(&mut self, i: usize) {
        let t = &mut self.t;
        while t.bags_a.len() <= i {
            t.bags_a.push(Vec::new());
            t.bags_b.push(Vec::new());
            t.plus_a.push(Vec::new());
            t.plus_b.push(Vec::new());
            t.covers.push(BagCover::default());
        }
    }

    /// `B_i = {v}` for a vertex of least degree into the unplaced part of
    /// `A`; returns `A_i^+`.
    fn start(&mut self, i: usize) -> Vec<usize> {
        let rem_a = self.rem_a();
        let v = self
            .rem_b()
            .ones()
            .min_by_key(|&y| (self.b.deg_bottom_in(y, &rem_a), y))
            .expect("start needs an unplaced B vertex");
        self.slot(i);
        self.t.bags_b[i] = vec![v];
        self.t.plus_b[i] = vec![v];
        self.t.start_indices.push(i);
        self.used_b.insert(v);
        let mut aplus = self.b.nbr_bottom(v).clone();
        aplus.intersect_with(&rem_a);
        ones(&aplus)
    }

    /// Last bag: everything still unplaced in `A`, nothing in `B`.
    fn finish(&mut self, i: usize) {
        self.slot(i);
        let rest = ones(&self.rem_a());
        self.t.bags_a[i] = rest.clone();
        self.t.plus_a[i] = rest;
        self.used_a.insert_range(..);
    }
}

fn run_procedure(b: &BipartiteGraph, p: &StarParams) -> Result<DTemplate> {
    let n = p.n();
    let r = p.r;
    let t = (n - 1).saturating_mul(r);
    let kr = p.k.saturating_mul(r);
    let mut bl = Builder {
        b,
        used_a: Bits::with_capacity(b.a_size()),
        used_b: Bits::with_capacity(b.b_size()),
        t: DTemplate {
            bags_a: Vec::new(),
            bags_b: Vec::new(),
            plus_a: Vec::new(),
            plus_b: Vec::new(),
            start_indices: Vec::new(),
            d: p.d(),
            params: *p,
            q: 1,
            pieces_a: None,
            pieces_b: None,
            marked_a: Vec::new(),
            marked_b: Vec::new(),
            traces_a: Vec::new(),
            traces_b: Vec::new(),
            covers: Vec::new(),
        },
    };
    if b.b_size() == 0 {
        bl.finish(0);
        return Ok(bl.t);
    }
    let guard = 2 * (b.a_size() + b.b_size()) + 4;
    let mut i = 0;
    let mut aplus = bl.start(0);
    loop {
        if i > guard {
            return Err(Error::Contract("bag procedure made no progress".into()));
        }
        // B_i and A_i^+ are built.
        bl.slot(i);
        bl.t.plus_a[i] = aplus.clone();
        if aplus.len() < t {
            if bl.rem_b().is_clear() {
                bl.finish(i + 1);
                break;
            }
            i += 1;
            aplus = bl.start(i);
            continue;
        }
        let rem_b = bl.rem_b();
        let non = |x: usize| {
            let mut s = rem_b.clone();
            s.difference_with(b.nbr_top(x));
            s
        };
        let (w, wp, mut bc) = cover_sets(&non, &aplus, n - 1, r);
        bc.grow(b.b_size());
        let dropped: Vec<usize> = w
            .iter()
            .copied()
            .filter(|&x| non(x).difference_count(&bc) > kr)
            .collect();
        let a_i: Vec<usize> = aplus.iter().copied().filter(|x| !dropped.contains(x)).collect();
        for &x in &a_i {
            bl.used_a.insert(x);
        }
        bl.t.bags_a[i] = a_i;
        bl.t.covers[i].a = Some((w, wp));

        // A_i and B_{i+1}^+ are built.
        let j = i + 1;
        bl.slot(j);
        let bplus = ones(&bc);
        bl.t.plus_b[j] = bplus.clone();
        if bplus.len() < t {
            if bl.rem_b().is_clear() {
                bl.finish(j + 1);
                break;
            }
            i = j + 1;
            aplus = bl.start(i);
            continue;
        }
        let rem_a = bl.rem_a();
        let nb = |y: usize| {
            let mut s = b.nbr_bottom(y).clone();
            s.intersect_with(&rem_a);
            s
        };
        let (w, wp, mut ac) = cover_sets(&nb, &bplus, n - 1, r);
        ac.grow(b.a_size());
        let dropped: Vec<usize> = w
            .iter()
            .copied()
            .filter(|&y| nb(y).difference_count(&ac) > kr)
            .collect();
        let b_j: Vec<usize> = bplus.iter().copied().filter(|y| !dropped.contains(y)).collect();
        for &y in &b_j {
            bl.used_b.insert(y);
        }
        bl.t.bags_b[j] = b_j;
        bl.t.covers[j].b = Some((w, wp));
        i = j;
        aplus = ones(&ac);
    }
    let mut t = bl.t;
    mark(b, &mut t);
    Ok(t)
}

fn union_bits(len: usize, bags: &[Vec<usize>]) -> Bits {
    bits_from(len, bags.iter().flatten().copied())
}

/// `M`: vertices of `A_i` with more than `d` neighbours in `B_0..B_{i-1}`.
/// `N`: vertices of `B_i` with more than `d` non-neighbours in
/// `A_0..A_{i-2}`. Traces run from the first bag index where the count
/// exceeds `d` to the owning bag.
fn mark(b: &BipartiteGraph, t: &mut DTemplate) {
    let z = t.z();
    let d = t.d;
    let (na, nb) = (b.a_size(), b.b_size());
    let pre_b: Vec<Bits> = (0..=z).map(|j| union_bits(nb, &t.bags_b[..j])).collect();
    let pre_a: Vec<Bits> = (0..=z).map(|j| union_bits(na, &t.bags_a[..j])).collect();
    let mut traces_a = Vec::new();
    let mut traces_b = Vec::new();
    for i in 0..z {
        for &x in &t.bags_a[i] {
            let over = |j: usize| b.deg_top_in(x, &pre_b[j]) > d;
            if over(i) {
                let lo = (0..=i).find(|&j| over(j)).expect("i qualifies");
                traces_a.push(Trace { vertex: x, lo, hi: i });
            }
        }
        for &y in &t.bags_b[i] {
            let over = |j: usize| {
                let upto = &pre_a[j.saturating_sub(1)];
                j >= 2 && upto.count_ones(..) - b.deg_bottom_in(y, upto) > d
            };
            if over(i) {
                let lo = (0..=i).find(|&j| over(j)).expect("i qualifies");
                traces_b.push(Trace { vertex: y, lo, hi: i });
            }
        }
    }
    t.marked_a = traces_a.iter().map(|tr| tr.vertex).collect();
    t.marked_b = traces_b.iter().map(|tr| tr.vertex).collect();
    t.marked_a.sort_unstable();
    t.marked_b.sort_unstable();
    t.traces_a = traces_a;
    t.traces_b = traces_b;
}

/// Runs the bag procedure on a member of the class of `p`. Needs
/// `max(n_up, n_lambda, m_up, m_lambda) >= 2`.
pub fn d_template_procedure(b: &BipartiteGraph, p: &StarParams) -> Result<DTemplate> {
    if p.n() < 2 {
        return Err(Error::Argument("the bag procedure needs n >= 2".into()));
    }
    patterns::require_bip_free(b, &p.class())?;
    run_procedure(b, p)
}

pub(crate) fn d_template_unchecked(b: &BipartiteGraph, p: &StarParams) -> Result<DTemplate> {
    run_procedure(b, p)
}

fn first_bad<'a>(vs: &'a [usize], bad: impl Fn(usize) -> bool) -> Option<&'a usize> {
    vs.iter().find(|&&v| bad(v))
}

/// Checks the degree conditions of the procedure at every bag index:
/// (P1) `A_{i-1}` has co-degree at most `d` in `B \ (B_0..B_i)`,
/// (P2) `B_i` has degree at most `kr` in `A \ (A_0..A_{i-1} ∪ A_i^+)`,
/// (P3) `B_i` has degree at most `d` in `A \ (A_0..A_i)`,
/// (P4) `A_i` has co-degree at most `kr` in `B \ (B_0..B_i ∪ B_{i+1}^+)`.
pub fn check_procedure_conditions(b: &BipartiteGraph, t: &DTemplate) -> Option<String> {
    let z = t.z();
    let (na, nb) = (b.a_size(), b.b_size());
    let d = t.d;
    let kr = t.params.k.saturating_mul(t.params.r);
    let outside = |len: usize, sets: &[&[usize]]| {
        let mut s = full_bits(len);
        for set in sets {
            for &v in *set {
                s.set(v, false);
            }
        }
        s
    };
    let flat_a = |j: usize| t.bags_a[..j].concat();
    let flat_b = |j: usize| t.bags_b[..j].concat();
    let empty: Vec<usize> = Vec::new();
    for i in 0..z {
        let bi = flat_b(i + 1);
        if i >= 1 {
            let rest = outside(nb, &[&bi]);
            if let Some(x) = first_bad(&t.bags_a[i - 1], |x| rest.difference_count(b.nbr_top(x)) > d) {
                return Some(format!("(P1) fails at {i}: vertex {x} of A_{}", i - 1));
            }
        }
        let rest2 = outside(na, &[&flat_a(i), &t.plus_a[i]]);
        if let Some(y) = first_bad(&t.bags_b[i], |y| b.deg_bottom_in(y, &rest2) > kr) {
            return Some(format!("(P2) fails at {i}: vertex {y}"));
        }
        let rest3 = outside(na, &[&flat_a(i + 1)]);
        if let Some(y) = first_bad(&t.bags_b[i], |y| b.deg_bottom_in(y, &rest3) > d) {
            return Some(format!("(P3) fails at {i}: vertex {y}"));
        }
        let next = t.plus_b.get(i + 1).unwrap_or(&empty);
        let rest4 = outside(nb, &[&bi, next]);
        if let Some(x) = first_bad(&t.bags_a[i], |x| rest4.difference_count(b.nbr_top(x)) > kr) {
            return Some(format!("(P4) fails at {i}: vertex {x}"));
        }
    }
    None
}

/// Checks the join conditions on the unmarked vertices: `A_i` is
/// `d`-joined to `B_{i+2}..` and `d`-co-joined to `B_0..B_{i-1}`; `B_i` is
/// `d`-joined to `A_0..A_{i-2}` and `d`-co-joined to `A_{i+1}..`.
pub fn check_join_conditions(b: &BipartiteGraph, t: &DTemplate) -> Option<String> {
    let z = t.z();
    let d = t.d;
    let keep_a = |bag: &Vec<usize>| -> Vec<usize> {
        bag.iter().copied().filter(|x| !t.marked_a.contains(x)).collect()
    };
    let keep_b = |bag: &Vec<usize>| -> Vec<usize> {
        bag.iter().copied().filter(|y| !t.marked_b.contains(y)).collect()
    };
    let ua: Vec<Vec<usize>> = t.bags_a.iter().map(keep_a).collect();
    let ub: Vec<Vec<usize>> = t.bags_b.iter().map(keep_b).collect();
    let (na, nb) = (b.a_size(), b.b_size());
    let range_b = |lo: usize, hi: usize| union_bits(nb, &ub[lo.min(z)..hi.min(z)]);
    let range_a = |lo: usize, hi: usize| union_bits(na, &ua[lo.min(z)..hi.min(z)]);
    for i in 0..z {
        let far = range_b(i + 2, z);
        let before = range_b(0, i);
        for &x in &ua[i] {
            if far.difference_count(b.nbr_top(x)) > d {
                return Some(format!("A_{i} vertex {x} has more than d non-neighbours in B_{}..", i + 2));
            }
            if b.deg_top_in(x, &before) > d {
                return Some(format!("A_{i} vertex {x} has more than d neighbours before B_{i}"));
            }
        }
        let early = range_a(0, i.saturating_sub(1));
        let after = range_a(i + 1, z);
        for &y in &ub[i] {
            if early.difference_count(b.nbr_bottom(y)) > d {
                return Some(format!("B_{i} vertex {y} has more than d non-neighbours in A_0..A_{}", i as isize - 2));
            }
            if b.deg_bottom_in(y, &after) > d {
                return Some(format!("B_{i} vertex {y} has more than d neighbours after A_{i}"));
            }
        }
    }
    None
}

/// Pattern excluded between pieces of `A_i` and `B_i`.
pub fn same_bag_class(p: &StarParams) -> PatternSpec {
    PatternSpec::up(p.n_up - 1, p.k)
}

/// Pattern excluded between pieces of `A_i` and `B_{i+1}`.
pub fn next_bag_class(p: &StarParams, start: bool) -> PatternSpec {
    if start {
        PatternSpec::co_up(p.m_up - 1, p.k)
    } else {
        PatternSpec::co_lambda(p.m_lambda - 1, p.k)
    }
}

/// First `count` members of `pool` (sorted) inside `set`, or `None`.
fn first_in(pool: &[usize], set: &Bits, count: usize) -> Option<Vec<usize>> {
    let f: Vec<usize> = pool.iter().copied().filter(|&v| set.contains(v)).take(count).collect();
    (f.len() == count).then_some(f)
}

/// Interns keys into dense ids.
#[derive(Default)]
struct Keys(HashMap<Vec<usize>, usize>);

impl Keys {
    fn id(&mut self, k: Vec<usize>) -> usize {
        let next = self.0.len();
        *self.0.entry(k).or_insert(next)
    }
}

const SINGLE: usize = usize::MAX;

/// Splits every bag so that consecutive pieces satisfy the refined
/// conditions: pieces of `A_i`, `B_i` exclude `(n_up-1)⊓_k`; pieces of
/// `A_i`, `B_{i+1}` exclude `co-(m_up-1)⊓_k` after a start bag and
/// `co-(m_lambda-1)Λ_k` otherwise. Every bag ends up with exactly `q`
/// pieces (padded with empty ones); the conditions are checked before
/// returning.
pub fn refine_consecutive(b: &BipartiteGraph, t: &DTemplate) -> Result<DTemplate> {
    let p = t.params;
    if p.min_multiplicity() < 2 {
        return Err(Error::Argument("refinement needs all multiplicities >= 2".into()));
    }
    let z = t.z();
    let n = p.n();
    let (k, r) = (p.k, p.r);
    let (na, nb) = (b.a_size(), b.b_size());
    let mut key_a: Vec<Vec<usize>> = vec![Vec::new(); na];
    let mut key_b: Vec<Vec<usize>> = vec![Vec::new(); nb];
    let mut keys = Keys::default();
    let contract = |what: &str, i: usize| Error::Contract(format!("{what} missing at bag {i}"));

    for i in 0..z {
        let (a_i, b_i) = (&t.bags_a[i], &t.bags_b[i]);
        // A_i against B_{i+1}.
        if i + 1 < z && !a_i.is_empty() && !t.bags_b[i + 1].is_empty() {
            let b_next = &t.bags_b[i + 1];
            if t.is_start(i) {
                // Split B_{i+1} by the k-sets of a k-fold cover from outside
                // A_0..A_{i-1} ∪ A_i^+.
                let mut out = full_bits(na);
                for &x in t.bags_a[..i].iter().flatten().chain(&t.plus_a[i]) {
                    out.set(x, false);
                }
                let pool = ones(&out);
                let target = bits_from(nb, t.plus_b[i + 1].iter().copied());
                let nbr = |x: usize| {
                    let mut s = b.nbr_top(x).clone();
                    s.intersect_with(&target);
                    s
                };
                let cover = (pool.len() >= (n - 1) * k).then(|| cover_sets(&nbr, &pool, n - 1, k));
                for &y in b_next {
                    let key = cover.as_ref().and_then(|(w, _, bc)| {
                        if !bc.contains(y) {
                            return None;
                        }
                        first_in(w, b.nbr_bottom(y), k)
                    });
                    key_b[y].push(match key {
                        Some(s) => keys.id(s),
                        None => SINGLE - y,
                    });
                }
            } else {
                let (b_prime, _) = t.covers[i].b.as_ref().ok_or_else(|| contract("B cover", i))?;
                let (_, a_cc) = t.covers[i - 1].a.as_ref().ok_or_else(|| contract("A cover", i - 1))?;
                for &x in a_i {
                    key_a[x].push(match first_in(b_prime, b.nbr_top(x), r) {
                        Some(f) => keys.id(f),
                        None => SINGLE - x,
                    });
                }
                let prev_plus = bits_from(nb, t.plus_b[i].iter().copied());
                for &y in b_next {
                    let exceptional = prev_plus.contains(y) || a_cc.iter().any(|&v| !b.has_edge(v, y));
                    key_b[y].push(if exceptional { SINGLE - y } else { 0 });
                }
            }
        }
        // A_i against B_i.
        if !t.is_start(i) && !a_i.is_empty() && !b_i.is_empty() {
            let (a_prime, _) = t.covers[i - 1].a.as_ref().ok_or_else(|| contract("A cover", i - 1))?;
            let b_cc: &Vec<usize> = if t.is_start(i - 1) {
                &t.bags_b[i - 1]
            } else {
                &t.covers[i - 1].b.as_ref().ok_or_else(|| contract("B cover", i - 1))?.1
            };
            for &y in b_i {
                let mut non = full_bits(na);
                non.difference_with(b.nbr_bottom(y));
                key_b[y].push(match first_in(a_prime, &non, r) {
                    Some(f) => keys.id(f),
                    None => SINGLE - y,
                });
            }
            let prev_plus = bits_from(na, t.plus_a[i - 1].iter().copied());
            for &x in a_i {
                let exceptional = prev_plus.contains(x) || b_cc.iter().any(|&u| b.has_edge(x, u));
                key_a[x].push(if exceptional { SINGLE - x } else { 0 });
            }
        }
    }

    let group = |bag: &Vec<usize>, key: &Vec<Vec<usize>>| -> Vec<Vec<usize>> {
        let mut ids: HashMap<&Vec<usize>, usize> = HashMap::new();
        let mut pieces: Vec<Vec<usize>> = Vec::new();
        for &v in bag {
            let id = *ids.entry(&key[v]).or_insert_with(|| {
                pieces.push(Vec::new());
                pieces.len() - 1
            });
            pieces[id].push(v);
        }
        pieces
    };
    let mut pieces_a: Vec<Vec<Vec<usize>>> = t.bags_a.iter().map(|bag| group(bag, &key_a)).collect();
    let mut pieces_b: Vec<Vec<Vec<usize>>> = t.bags_b.iter().map(|bag| group(bag, &key_b)).collect();
    let q = pieces_a
        .iter()
        .chain(&pieces_b)
        .map(|ps| ps.len())
        .max()
        .unwrap_or(0)
        .max(1);
    let limit = bounds::sat_pow(bounds::pi_max(n, k, r), 2);
    if q as u128 > limit {
        return Err(Error::Contract(format!("{q} pieces per bag exceed pi^2 = {limit}")));
    }
    for ps in pieces_a.iter_mut().chain(pieces_b.iter_mut()) {
        ps.resize(q, Vec::new());
    }
    let mut out = t.clone();
    out.q = q;
    out.pieces_a = Some(pieces_a);
    out.pieces_b = Some(pieces_b);
    if let Some(msg) = check_refined_conditions(b, &out) {
        return Err(Error::Contract(msg));
    }
    Ok(out)
}

/// Checks the refined conditions between pieces of consecutive bags.
pub fn check_refined_conditions(b: &BipartiteGraph, t: &DTemplate) -> Option<String> {
    let (Some(pa), Some(pb)) = (&t.pieces_a, &t.pieces_b) else {
        return Some("template is not refined".into());
    };
    let p = t.params;
    let z = t.z();
    for i in 0..z {
        for (g, xs) in pa[i].iter().enumerate() {
            if xs.is_empty() {
                continue;
            }
            let mut checks = vec![(i, same_bag_class(&p))];
            if i + 1 < z {
                checks.push((i + 1, next_bag_class(&p, t.is_start(i))));
            }
            for (j, spec) in checks {
                for (h, ys) in pb[j].iter().enumerate() {
                    if ys.is_empty() {
                        continue;
                    }
                    if patterns::contains_bip(&b.induced(xs, ys), &spec) {
                        return Some(format!("pieces A[{i}][{g}], B[{j}][{h}] contain {spec}"));
                    }
                }
            }
        }
    }
    None
}

/// Tag of a pair of collapsed blocks. The `k` of every tag is `k + 2d`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum CollapseTag {
    /// `(n_up-1)⊓`-free.
    Up,
    /// `co-(m_up-1)⊓`-free.
    CoUp,
    /// `co-(m_lambda-1)Λ`-free.
    CoLambda,
}

impl CollapseTag {
    pub fn spec(self, p: &StarParams) -> PatternSpec {
        let k = p.k.saturating_add(p.d().saturating_mul(2));
        match self {
            CollapseTag::Up => PatternSpec::up(p.n_up - 1, k),
            CollapseTag::CoUp => PatternSpec::co_up(p.m_up - 1, k),
            CollapseTag::CoLambda => PatternSpec::co_lambda(p.m_lambda - 1, k),
        }
    }

    /// Class parameters of a pair carrying this tag.
    pub fn next_params(self, p: &StarParams) -> StarParams {
        let k = p.k.saturating_add(p.d().saturating_mul(2));
        let q = match self {
            CollapseTag::Up => StarParams { n_up: p.n_up - 1, ..*p },
            CollapseTag::CoUp => StarParams { m_up: p.m_up - 1, ..*p },
            CollapseTag::CoLambda => StarParams { m_lambda: p.m_lambda - 1, ..*p },
        };
        StarParams {
            k,
            r: k.saturating_mul(q.n()),
            ..q
        }
    }
}

/// Top blocks, bottom blocks (local ids) and the tag of every pair.
pub(crate) struct TaggedParts {
    pub tops: Vec<Vec<usize>>,
    pub bottoms: Vec<Vec<usize>>,
    pub tags: Vec<Vec<CollapseTag>>,
}

impl TaggedParts {
    /// Flat-id partition with one guarantee per pair.
    pub fn to_partition(&self, a: usize, p: &StarParams) -> LabelledPartition {
        let mut out = LabelledPartition::default();
        for xs in &self.tops {
            out.blocks.push(Block {
                kind: BlockKind::Independent,
                vertices: xs.clone(),
            });
        }
        for ys in &self.bottoms {
            out.blocks.push(Block {
                kind: BlockKind::Independent,
                vertices: ys.iter().map(|y| y + a).collect(),
            });
        }
        let t = self.tops.len();
        for (i, row) in self.tags.iter().enumerate() {
            for (j, tag) in row.iter().enumerate() {
                out.guarantees.push(Guarantee {
                    i,
                    j: t + j,
                    free: tag.spec(p).to_string(),
                });
            }
        }
        out
    }

    /// Checks every tag, returning a witness error on the first failure.
    pub fn verify(&self, b: &BipartiteGraph, p: &StarParams) -> Result<()> {
        let a = b.a_size();
        for (i, xs) in self.tops.iter().enumerate() {
            for (j, ys) in self.bottoms.iter().enumerate() {
                let spec = self.tags[i][j].spec(p);
                if let Some(e) = patterns::find_bip(&b.induced(xs, ys), &spec) {
                    let w = e
                        .map
                        .iter()
                        .zip(&e.sides)
                        .map(|(&v, side)| if *side == Side::Top { xs[v] } else { ys[v] + a })
                        .collect();
                    return Err(patterns::violation(&spec, w));
                }
            }
        }
        Ok(())
    }
}

pub(crate) fn collapse_parts(b: &BipartiteGraph, t: &DTemplate) -> Result<TaggedParts> {
    let (Some(pa), Some(pb)) = (&t.pieces_a, &t.pieces_b) else {
        return Err(Error::Argument("collapse needs a refined template".into()));
    };
    let p = t.params;
    if p.min_multiplicity() < 2 {
        return Err(Error::Argument("collapse needs all multiplicities >= 2".into()));
    }
    let q = t.q;
    // Class c = 2 * parity + (not a start).
    let class_of = |i: usize| 2 * (i % 2) + usize::from(!t.is_start(i));
    let mut tops = vec![Vec::new(); 4 * q];
    let mut bottoms = vec![Vec::new(); 4 * q];
    for i in 0..t.z() {
        let c = class_of(i);
        for g in 0..q {
            tops[c * q + g].extend(pa[i][g].iter().copied().filter(|x| !t.marked_a.contains(x)));
            bottoms[c * q + g].extend(pb[i][g].iter().copied().filter(|y| !t.marked_b.contains(y)));
        }
    }
    for v in tops.iter_mut().chain(bottoms.iter_mut()) {
        v.sort_unstable();
    }
    let tags = (0..4 * q)
        .map(|x| {
            let (cx, parity_x) = (x / q, x / q / 2);
            (0..4 * q)
                .map(|y| {
                    if parity_x == y / q / 2 {
                        CollapseTag::Up
                    } else if cx % 2 == 0 {
                        CollapseTag::CoUp
                    } else {
                        CollapseTag::CoLambda
                    }
                })
                .collect()
        })
        .collect();
    let parts = TaggedParts { tops, bottoms, tags };
    parts.verify(b, &p)?;
    Ok(parts)
}

/// Collapses a refined template, restricted to the unmarked vertices, to
/// `4q` blocks per side: pieces with the same index are united over bags
/// of equal parity and equal start status. Blocks of equal parity exclude
/// `(n_up-1)⊓_{k+2d}`; otherwise the pair excludes `co-(m_up-1)⊓_{k+2d}`
/// when the top block comes from start bags and `co-(m_lambda-1)Λ_{k+2d}`
/// when not. Empty blocks are kept.
pub fn collapse_d_template(b: &BipartiteGraph, t: &DTemplate) -> Result<LabelledPartition> {
    Ok(collapse_parts(b, t)?.to_partition(b.a_size(), &t.params))
}
