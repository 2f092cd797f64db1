//! Forbidden patterns and induced-subgraph search.
//!
//! Every pattern here is a union of `n` identical units (stars, edges,
//! cliques) whose automorphisms permute the units and the leaves inside a
//! unit. The search embeds one unit at a time and only accepts embeddings
//! where unit minima increase and interchangeable leaves map to increasing
//! host ids, which removes the `n! (k!)^n` symmetric copies.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Bits, BipartiteGraph, Graph, Side};

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub enum Family {
    G1,
    G2,
    G3,
    G4,
    H1,
    H2,
    H3,
    H4,
    NK2,
    CoNK2,
    NKl,
    CoNKl,
    BipMatching,
    BipComatching,
    BipLambda,
    BipUp,
    BipCoLambda,
    BipCoUp,
}

impl Family {
    pub fn is_bipartite(self) -> bool {
        use Family::*;
        matches!(
            self,
            BipMatching | BipComatching | BipLambda | BipUp | BipCoLambda | BipCoUp
        )
    }

    fn takes_k(self) -> bool {
        use Family::*;
        !matches!(self, NK2 | CoNK2 | BipMatching | BipComatching)
    }
}

/// A pattern family with its multiplicity `n` and star or clique size `k`.
/// `k` is ignored (and kept at 1) for the matching families.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct PatternSpec {
    pub family: Family,
    pub n: usize,
    pub k: usize,
}

impl PatternSpec {
    pub fn new(family: Family, n: usize, k: usize) -> Self {
        let k = if family.takes_k() { k } else { 1 };
        PatternSpec { family, n, k }
    }

    pub fn matching(n: usize) -> Self {
        PatternSpec::new(Family::BipMatching, n, 1)
    }

    pub fn comatching(n: usize) -> Self {
        PatternSpec::new(Family::BipComatching, n, 1)
    }

    pub fn lambda(n: usize, k: usize) -> Self {
        PatternSpec::new(Family::BipLambda, n, k)
    }

    pub fn up(n: usize, k: usize) -> Self {
        PatternSpec::new(Family::BipUp, n, k)
    }

    pub fn co_lambda(n: usize, k: usize) -> Self {
        PatternSpec::new(Family::BipCoLambda, n, k)
    }

    pub fn co_up(n: usize, k: usize) -> Self {
        PatternSpec::new(Family::BipCoUp, n, k)
    }

    pub fn nk2(n: usize) -> Self {
        PatternSpec::new(Family::NK2, n, 1)
    }

    pub fn co_nk2(n: usize) -> Self {
        PatternSpec::new(Family::CoNK2, n, 1)
    }

    /// The eight members of `F_{n,k}`.
    pub fn f_family(n: usize, k: usize) -> Vec<PatternSpec> {
        use Family::*;
        [G1, G2, G3, G4, H1, H2, H3, H4]
            .into_iter()
            .map(|f| PatternSpec::new(f, n, k))
            .collect()
    }

    /// Complement for general families, bipartite complement for
    /// bipartite ones.
    pub fn complemented(self) -> PatternSpec {
        use Family::*;
        let f = match self.family {
            G1 => H1,
            G2 => H2,
            G3 => H3,
            G4 => H4,
            H1 => G1,
            H2 => G2,
            H3 => G3,
            H4 => G4,
            NK2 => CoNK2,
            CoNK2 => NK2,
            NKl => CoNKl,
            CoNKl => NKl,
            BipMatching => BipComatching,
            BipComatching => BipMatching,
            BipLambda => BipCoLambda,
            BipCoLambda => BipLambda,
            BipUp => BipCoUp,
            BipCoUp => BipUp,
        };
        PatternSpec { family: f, ..self }
    }

    /// The same pattern with the sides swapped.
    pub fn transposed(self) -> PatternSpec {
        use Family::*;
        let f = match self.family {
            BipLambda => BipUp,
            BipUp => BipLambda,
            BipCoLambda => BipCoUp,
            BipCoUp => BipCoLambda,
            f => f,
        };
        PatternSpec { family: f, ..self }
    }

    pub fn vertex_count(&self) -> usize {
        use Family::*;
        match self.family {
            NK2 | CoNK2 | BipMatching | BipComatching => self.n.saturating_mul(2),
            NKl | CoNKl => self.n.saturating_mul(self.k),
            _ => self.n.saturating_mul(self.k.saturating_add(1)),
        }
    }

    fn validate(&self) -> Result<()> {
        if self.n == 0 || self.k == 0 {
            return Err(Error::Argument(format!("{self}: parameters must be positive")));
        }
        Ok(())
    }
}

impl fmt::Display for PatternSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use Family::*;
        let (n, k) = (self.n, self.k);
        match self.family {
            G1 | G2 | G3 | G4 | H1 | H2 | H3 | H4 => write!(f, "{:?}({n},{k})", self.family),
            NK2 => write!(f, "nK2({n})"),
            CoNK2 => write!(f, "co-nK2({n})"),
            NKl => write!(f, "nKl({n},{k})"),
            CoNKl => write!(f, "co-nKl({n},{k})"),
            BipMatching => write!(f, "matching({n})"),
            BipComatching => write!(f, "co-matching({n})"),
            BipLambda => write!(f, "lambda({n},{k})"),
            BipUp => write!(f, "up({n},{k})"),
            BipCoLambda => write!(f, "co-lambda({n},{k})"),
            BipCoUp => write!(f, "co-up({n},{k})"),
        }
    }
}

impl FromStr for PatternSpec {
    type Err = Error;

    /// Accepts the canonical names plus the shorthands `<n>K2`, `co-<n>K2`
    /// and `C4`.
    fn from_str(s: &str) -> Result<Self> {
        use Family::*;
        let s = s.trim();
        let bad = || Error::Argument(format!("unknown pattern {s:?}"));
        if s == "C4" {
            return Ok(PatternSpec::co_nk2(2));
        }
        if let Some(num) = s.strip_suffix("K2") {
            let (co, num) = match num.strip_prefix("co-") {
                Some(rest) => (true, rest),
                None => (false, num),
            };
            if let Ok(n) = num.parse::<usize>() {
                let spec = if co { PatternSpec::co_nk2(n) } else { PatternSpec::nk2(n) };
                spec.validate()?;
                return Ok(spec);
            }
        }
        let open = s.find('(').ok_or_else(bad)?;
        let args = s[open + 1..].strip_suffix(')').ok_or_else(bad)?;
        let nums: Vec<usize> = args
            .split(',')
            .map(|t| t.trim().parse::<usize>())
            .collect::<std::result::Result<_, _>>()
            .map_err(|_| bad())?;
        let family = match &s[..open] {
            "G1" => G1,
            "G2" => G2,
            "G3" => G3,
            "G4" => G4,
            "H1" => H1,
            "H2" => H2,
            "H3" => H3,
            "H4" => H4,
            "nK2" => NK2,
            "co-nK2" => CoNK2,
            "nKl" => NKl,
            "co-nKl" => CoNKl,
            "matching" => BipMatching,
            "co-matching" => BipComatching,
            "lambda" => BipLambda,
            "up" => BipUp,
            "co-lambda" => BipCoLambda,
            "co-up" => BipCoUp,
            _ => return Err(bad()),
        };
        let spec = match (family.takes_k(), nums.as_slice()) {
            (true, &[n, k]) => PatternSpec::new(family, n, k),
            (false, &[n]) => PatternSpec::new(family, n, 1),
            _ => return Err(bad()),
        };
        spec.validate()?;
        Ok(spec)
    }
}

/// Parses a `;`-separated list of pattern names.
pub fn parse_spec_list(s: &str) -> Result<Vec<PatternSpec>> {
    s.split(';')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(str::parse)
        .collect()
}

pub fn format_spec_list(specs: &[PatternSpec]) -> String {
    specs.iter().map(|s| s.to_string()).collect::<Vec<_>>().join(";")
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Pattern {
    General(Graph),
    Bipartite(BipartiteGraph),
}

/// Pattern graph plus the symmetry information used by the search.
#[derive(Clone, Debug)]
struct Template {
    graph: Graph,
    /// Side of each vertex; `General` throughout for general patterns.
    sides: Vec<Side>,
    /// Vertices of each unit, in embedding order.
    units: Vec<Vec<usize>>,
    /// `twin_prev[v] = Some(u)` if `u` precedes `v` among interchangeable
    /// vertices of the same unit.
    twin_prev: Vec<Option<usize>>,
}

fn star_units(n: usize, k: usize) -> (Vec<Vec<usize>>, Vec<Option<usize>>) {
    let mut units = Vec::new();
    let mut prev = vec![None; n * (k + 1)];
    for t in 0..n {
        let c = t * (k + 1);
        units.push((c..c + k + 1).collect());
        for leaf in c + 2..c + k + 1 {
            prev[leaf] = Some(leaf - 1);
        }
    }
    (units, prev)
}

fn template(spec: &PatternSpec) -> Template {
    use Family::*;
    let (n, k) = (spec.n, spec.k);
    match spec.family {
        G1 | G2 | G3 | G4 | H1 | H2 | H3 | H4 => {
            let mut g = Graph::new(n * (k + 1));
            let centres: Vec<usize> = (0..n).map(|t| t * (k + 1)).collect();
            let leaves: Vec<usize> = (0..n * (k + 1)).filter(|v| v % (k + 1) != 0).collect();
            for &c in &centres {
                for l in 1..=k {
                    g.add_edge(c, c + l);
                }
            }
            if matches!(spec.family, G2 | G4 | H2 | H4) {
                for (i, &u) in centres.iter().enumerate() {
                    for &v in &centres[i + 1..] {
                        g.add_edge(u, v);
                    }
                }
            }
            if matches!(spec.family, G3 | G4 | H3 | H4) {
                for (i, &u) in leaves.iter().enumerate() {
                    for &v in &leaves[i + 1..] {
                        g.add_edge(u, v);
                    }
                }
            }
            if matches!(spec.family, H1 | H2 | H3 | H4) {
                g = g.complement();
            }
            let (units, twin_prev) = star_units(n, k);
            let mut t = Template {
                sides: vec![Side::General; g.n()],
                graph: g,
                units,
                twin_prev,
            };
            // A one-leaf star with no added clique is an edge whose ends
            // can be swapped.
            if k == 1 && matches!(spec.family, G1 | H1) {
                for u in &t.units {
                    t.twin_prev[u[1]] = Some(u[0]);
                }
            }
            t
        }
        NK2 | CoNK2 | NKl | CoNKl => {
            let size = if matches!(spec.family, NK2 | CoNK2) { 2 } else { k };
            let mut g = Graph::new(n * size);
            let mut units = Vec::new();
            let mut prev = vec![None; n * size];
            for t in 0..n {
                let base = t * size;
                for i in 0..size {
                    for j in i + 1..size {
                        g.add_edge(base + i, base + j);
                    }
                    if i > 0 {
                        prev[base + i] = Some(base + i - 1);
                    }
                }
                units.push((base..base + size).collect());
            }
            if matches!(spec.family, CoNK2 | CoNKl) {
                g = g.complement();
            }
            Template {
                sides: vec![Side::General; g.n()],
                graph: g,
                units,
                twin_prev: prev,
            }
        }
        BipMatching | BipComatching | BipLambda | BipUp | BipCoLambda | BipCoUp => {
            // Lay the pattern out as a Λ-type graph with centres on the
            // `centre_side`; the leaves of star t are consecutive.
            let kk = if matches!(spec.family, BipMatching | BipComatching) { 1 } else { k };
            let up = matches!(spec.family, BipUp | BipCoUp);
            let co = matches!(spec.family, BipComatching | BipCoLambda | BipCoUp);
            let (csize, lsize) = (n, n * kk);
            let (a, b) = if up { (lsize, csize) } else { (csize, lsize) };
            let mut bip = BipartiteGraph::new(a, b);
            for t in 0..n {
                for l in 0..kk {
                    let leaf = t * kk + l;
                    if up {
                        bip.add_edge(leaf, t);
                    } else {
                        bip.add_edge(t, leaf);
                    }
                }
            }
            if co {
                bip = bip.complement();
            }
            let g = bip.to_graph();
            let mut sides = vec![Side::Top; a];
            sides.extend(vec![Side::Bottom; b]);
            let (coff, loff) = if up { (a, 0) } else { (0, a) };
            let mut units = Vec::new();
            let mut prev = vec![None; a + b];
            for t in 0..n {
                let mut u = vec![coff + t];
                for l in 0..kk {
                    let v = loff + t * kk + l;
                    if l > 0 {
                        prev[v] = Some(v - 1);
                    }
                    u.push(v);
                }
                units.push(u);
            }
            Template {
                graph: g,
                sides,
                units,
                twin_prev: prev,
            }
        }
    }
}

/// The literal pattern graph.
pub fn build_pattern(spec: &PatternSpec) -> Pattern {
    let t = template(spec);
    if spec.family.is_bipartite() {
        let a = t.sides.iter().filter(|&&s| s == Side::Top).count();
        let b = t.sides.len() - a;
        let mut bip = BipartiteGraph::new(a, b);
        for (u, v) in t.graph.edges() {
            bip.add_edge(u, v - a);
        }
        Pattern::Bipartite(bip)
    } else {
        Pattern::General(t.graph)
    }
}

/// Injective map from pattern vertices to host vertices. For bipartite
/// searches pattern vertex `i` is the `i`-th vertex in the order A then B,
/// `sides[i]` is its side and `map[i]` is an id on that side of the host.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Embedding {
    pub map: Vec<usize>,
    pub sides: Vec<Side>,
}

impl Embedding {
    /// Host vertices as ids of the general graph where B is shifted by
    /// `a_size` (the layout of `BipartiteGraph::to_graph`).
    pub fn flat(&self, a_size: usize) -> Vec<usize> {
        self.map
            .iter()
            .zip(&self.sides)
            .map(|(&v, s)| if *s == Side::Bottom { v + a_size } else { v })
            .collect()
    }
}

struct Search<'a> {
    host: &'a Graph,
    pat: &'a Template,
    order: Vec<usize>,
    unit_of: Vec<usize>,
    eligible: Vec<Bits>,
    img: Vec<usize>,
    unit_min: Vec<usize>,
    used: Bits,
}

impl Search<'_> {
    fn run(&mut self, depth: usize) -> bool {
        if depth == self.order.len() {
            return true;
        }
        let p = self.order[depth];
        let u = self.unit_of[p];
        let mut cand = self.eligible[p].clone();
        cand.difference_with(&self.used);
        for &q in &self.order[..depth] {
            let h = self.host.nbrs(self.img[q]);
            if self.pat.graph.has_edge(p, q) {
                cand.intersect_with(h);
            } else {
                cand.difference_with(h);
            }
        }
        let mut floor = if u > 0 { Some(self.unit_min[u - 1]) } else { None };
        if let Some(t) = self.pat.twin_prev[p] {
            floor = Some(floor.map_or(self.img[t], |f| f.max(self.img[t])));
        }
        let first_in_unit = self.pat.units[u][0] == p;
        for v in cand.ones() {
            if floor.is_some_and(|f| v <= f) {
                continue;
            }
            self.img[p] = v;
            self.used.insert(v);
            let saved = self.unit_min[u];
            self.unit_min[u] = if first_in_unit { v } else { saved.min(v) };
            if self.run(depth + 1) {
                return true;
            }
            self.unit_min[u] = saved;
            self.used.set(v, false);
        }
        false
    }
}

fn search(host: &Graph, host_sides: Option<&[Side]>, pat: &Template) -> Option<Vec<usize>> {
    let p = pat.graph.n();
    let n = host.n();
    if p > n {
        return None;
    }
    let order: Vec<usize> = pat.units.iter().flatten().copied().collect();
    let mut unit_of = vec![0; p];
    for (i, u) in pat.units.iter().enumerate() {
        for &v in u {
            unit_of[v] = i;
        }
    }
    let side_count = |sides: &[Side], s: Side| sides.iter().filter(|&&x| x == s).count();
    let mut eligible = Vec::with_capacity(p);
    for v in 0..p {
        let deg = pat.graph.degree(v);
        let mut e = Bits::with_capacity(n);
        for h in 0..n {
            let hdeg = host.degree(h);
            let ok = match host_sides {
                None => hdeg >= deg && n - 1 - hdeg >= p - 1 - deg,
                Some(hs) => {
                    if hs[h] != pat.sides[v] {
                        false
                    } else {
                        let other = if hs[h] == Side::Top { Side::Bottom } else { Side::Top };
                        let pnon = side_count(&pat.sides, other) - deg;
                        let hnon = side_count(hs, other) - hdeg;
                        hdeg >= deg && hnon >= pnon
                    }
                }
            };
            if ok {
                e.insert(h);
            }
        }
        if e.is_clear() {
            return None;
        }
        eligible.push(e);
    }
    let mut s = Search {
        host,
        pat,
        order,
        unit_of,
        eligible,
        img: vec![usize::MAX; p],
        unit_min: vec![usize::MAX; pat.units.len()],
        used: Bits::with_capacity(n),
    };
    if s.run(0) {
        Some(s.img)
    } else {
        None
    }
}

/// Induced copy of the pattern in a general host. Bipartite families are
/// searched as plain graphs, ignoring sides.
///
/// Worst case exponential in the pattern size.
pub fn find_induced(host: &Graph, spec: &PatternSpec) -> Option<Embedding> {
    if spec.vertex_count() > host.n() {
        return None;
    }
    let t = template(spec);
    let map = search(host, None, &t)?;
    Some(Embedding {
        sides: vec![Side::General; map.len()],
        map,
    })
}

/// Side-respecting induced copy of a bipartite pattern.
pub fn find_induced_bipartite(host: &BipartiteGraph, spec: &PatternSpec) -> Result<Option<Embedding>> {
    if !spec.family.is_bipartite() {
        return Err(Error::Argument(format!("{spec} is not a bipartite pattern")));
    }
    Ok(find_bip(host, spec))
}

pub(crate) fn find_bip(host: &BipartiteGraph, spec: &PatternSpec) -> Option<Embedding> {
    if spec.vertex_count() > host.a_size() + host.b_size() {
        return None;
    }
    let t = template(spec);
    let a = host.a_size();
    let mut sides = vec![Side::Top; a];
    sides.extend(vec![Side::Bottom; host.b_size()]);
    let map = search(&host.to_graph(), Some(&sides), &t)?;
    Some(Embedding {
        map: map
            .iter()
            .zip(&t.sides)
            .map(|(&v, s)| if *s == Side::Bottom { v - a } else { v })
            .collect(),
        sides: t.sides.clone(),
    })
}

pub fn contains_bip(host: &BipartiteGraph, spec: &PatternSpec) -> bool {
    find_bip(host, spec).is_some()
}

/// First pattern of `specs` found in `host`, with its witness.
pub fn first_bip_witness(
    host: &BipartiteGraph,
    specs: &[PatternSpec],
) -> Option<(PatternSpec, Embedding)> {
    specs
        .iter()
        .find_map(|s| find_bip(host, s).map(|e| (*s, e)))
}

pub fn first_witness(host: &Graph, specs: &[PatternSpec]) -> Option<(PatternSpec, Embedding)> {
    specs
        .iter()
        .find_map(|s| find_induced(host, s).map(|e| (*s, e)))
}

/// Error value for a host that contains `spec`; witness ids are in the
/// host's flat numbering.
pub(crate) fn violation(spec: &PatternSpec, witness: Vec<usize>) -> Error {
    Error::Contains {
        pattern: spec.to_string(),
        witness,
    }
}

pub(crate) fn require_free(host: &Graph, specs: &[PatternSpec]) -> Result<()> {
    match first_witness(host, specs) {
        Some((s, e)) => Err(violation(&s, e.map)),
        None => Ok(()),
    }
}

pub(crate) fn require_bip_free(host: &BipartiteGraph, specs: &[PatternSpec]) -> Result<()> {
    match first_bip_witness(host, specs) {
        Some((s, e)) => Err(violation(&s, e.flat(host.a_size()))),
        None => Ok(()),
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Orientation {
    /// Star centres in A.
    Lambda,
    /// Star centres in B.
    Up,
}

/// Pair of top vertices witnessing `2Λ_s`: each has at least `s`
/// neighbours the other lacks.
pub fn twin_star_pair(host: &BipartiteGraph, s: usize) -> Option<(usize, usize)> {
    let a = host.a_size();
    for x in 0..a {
        let nx = host.nbr_top(x);
        if nx.count_ones(..) < s {
            continue;
        }
        for y in x + 1..a {
            let ny = host.nbr_top(y);
            if nx.difference_count(ny) >= s && ny.difference_count(nx) >= s {
                return Some((x, y));
            }
        }
    }
    None
}

/// No induced `2Λ_s` (or `2⊓_s` for `Up`), decided by the pairwise
/// neighbourhood-difference criterion.
pub fn is_twin_star_free(host: &BipartiteGraph, s: usize, orientation: Orientation) -> bool {
    assert!(s >= 1, "star size must be positive");
    match orientation {
        Orientation::Lambda => twin_star_pair(host, s).is_none(),
        Orientation::Up => twin_star_pair(&host.transpose(), s).is_none(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_roundtrip() {
        for name in [
            "G1(2,3)",
            "H4(1,1)",
            "nK2(3)",
            "co-nK2(2)",
            "nKl(2,3)",
            "co-nKl(3,2)",
            "lambda(2,1)",
            "up(3,2)",
            "co-lambda(2,2)",
            "co-up(1,4)",
            "matching(3)",
            "co-matching(3)",
        ] {
            let s: PatternSpec = name.parse().unwrap();
            assert_eq!(s.to_string(), name);
        }
        assert_eq!("2K2".parse::<PatternSpec>().unwrap(), PatternSpec::nk2(2));
        assert_eq!("C4".parse::<PatternSpec>().unwrap(), PatternSpec::co_nk2(2));
        assert!("G1(0,1)".parse::<PatternSpec>().is_err());
        assert!("lambda(2)".parse::<PatternSpec>().is_err());
    }

    #[test]
    fn g1_one_one_is_an_edge() {
        assert_eq!(
            build_pattern(&PatternSpec::new(Family::G1, 1, 1)),
            Pattern::General(Graph::from_edges(2, &[(0, 1)]))
        );
    }

    #[test]
    fn g2_four_three() {
        let Pattern::General(g) = build_pattern(&PatternSpec::new(Family::G2, 4, 3)) else {
            panic!()
        };
        assert_eq!(g.n(), 16);
        assert_eq!(g.edge_count(), 4 * 3 + 6);
        let centres = [0, 4, 8, 12];
        assert!(g.is_clique(&centres));
    }

    #[test]
    fn small_searches() {
        let p4 = Graph::path(4);
        assert!(find_induced(&p4, &PatternSpec::nk2(2)).is_none());
        let m = Graph::from_edges(4, &[(0, 1), (2, 3)]);
        assert!(find_induced(&m, &PatternSpec::nk2(2)).is_some());
        let c6 = Graph::cycle(6);
        let e = find_induced(&c6, &PatternSpec::nk2(2)).unwrap();
        let sub = c6.induced(&e.map);
        assert_eq!(sub.edge_count(), 2);
    }

    #[test]
    fn orientation_matters() {
        let up2 = BipartiteGraph::from_edges(2, 1, &[(0, 0), (1, 0)]);
        assert!(find_induced_bipartite(&up2, &PatternSpec::lambda(1, 2))
            .unwrap()
            .is_none());
        assert!(find_induced_bipartite(&up2, &PatternSpec::up(1, 2))
            .unwrap()
            .is_some());
        assert!(find_induced_bipartite(&up2, &PatternSpec::nk2(2)).is_err());
    }

    #[test]
    fn c6_contains_the_cocomatching() {
        let mut c6 = BipartiteGraph::new(3, 3);
        for i in 0..3 {
            c6.add_edge(i, i);
            c6.add_edge(i, (i + 1) % 3);
        }
        let e = find_induced_bipartite(&c6, &PatternSpec::comatching(3))
            .unwrap()
            .unwrap();
        assert_eq!(e.map.len(), 6);
    }

    #[test]
    fn twin_star_examples() {
        let m = BipartiteGraph::from_edges(2, 2, &[(0, 0), (1, 1)]);
        assert!(!is_twin_star_free(&m, 1, Orientation::Lambda));
        let k44 = BipartiteGraph::complete(4, 4);
        assert!(is_twin_star_free(&k44, 1, Orientation::Lambda));
        let stars = BipartiteGraph::from_edges(2, 4, &[(0, 0), (0, 1), (1, 2), (1, 3)]);
        assert!(!is_twin_star_free(&stars, 2, Orientation::Lambda));
        assert!(is_twin_star_free(&stars, 3, Orientation::Lambda));
        assert!(!is_twin_star_free(&stars, 1, Orientation::Up));
        assert!(is_twin_star_free(&stars, 2, Orientation::Up));
        let k22 = BipartiteGraph::complete(2, 2);
        assert!(find_induced_bipartite(&k22, &PatternSpec::lambda(2, 1))
            .unwrap()
            .is_none());
    }
}
