//! Simple graphs and bipartite graphs over dense integer ids, stored as
//! bitset adjacency rows.

use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Graphs above this many vertices are rejected by the command line tool
/// unless the caller raises the limit. The library itself has no cap.
pub const DEFAULT_VERTEX_LIMIT: usize = 64;

pub type Bits = FixedBitSet;

pub(crate) fn bits_from<I: IntoIterator<Item = usize>>(len: usize, it: I) -> Bits {
    let mut s = Bits::with_capacity(len);
    for v in it {
        s.insert(v);
    }
    s
}

pub(crate) fn full_bits(len: usize) -> Bits {
    let mut s = Bits::with_capacity(len);
    s.insert_range(..);
    s
}

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Graph {
    n: usize,
    adj: Vec<Bits>,
}

impl Graph {
    pub fn new(n: usize) -> Self {
        Graph {
            n,
            adj: vec![Bits::with_capacity(n); n],
        }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Self {
        let mut g = Graph::new(n);
        for &(u, v) in edges {
            g.add_edge(u, v);
        }
        g
    }

    pub fn complete(n: usize) -> Self {
        Graph::new(n).complement()
    }

    pub fn cycle(n: usize) -> Self {
        let mut g = Graph::new(n);
        for i in 0..n {
            g.add_edge(i, (i + 1) % n);
        }
        g
    }

    pub fn path(n: usize) -> Self {
        let mut g = Graph::new(n);
        for i in 1..n {
            g.add_edge(i - 1, i);
        }
        g
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Panics on a self-loop or an out-of-range id.
    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u != v, "self-loop at {u}");
        assert!(u < self.n && v < self.n, "edge {u}-{v} out of range");
        self.adj[u].insert(v);
        self.adj[v].insert(u);
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) {
        self.adj[u].set(v, false);
        self.adj[v].set(u, false);
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    pub fn nbrs(&self, v: usize) -> &Bits {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones(..)
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones(..)).sum::<usize>() / 2
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in self.adj[u].ones() {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn complement(&self) -> Graph {
        let mut g = self.clone();
        for v in 0..self.n {
            g.adj[v].toggle_range(..);
            g.adj[v].set(v, false);
        }
        g
    }

    /// Subgraph induced by `vs`; vertex `vs[i]` becomes `i`.
    pub fn induced(&self, vs: &[usize]) -> Graph {
        let mut g = Graph::new(vs.len());
        for i in 0..vs.len() {
            for j in i + 1..vs.len() {
                if self.has_edge(vs[i], vs[j]) {
                    g.add_edge(i, j);
                }
            }
        }
        g
    }

    pub fn is_clique(&self, vs: &[usize]) -> bool {
        vs.iter()
            .enumerate()
            .all(|(i, &u)| vs[i + 1..].iter().all(|&v| self.has_edge(u, v)))
    }

    pub fn is_independent(&self, vs: &[usize]) -> bool {
        vs.iter()
            .enumerate()
            .all(|(i, &u)| vs[i + 1..].iter().all(|&v| !self.has_edge(u, v)))
    }

    /// Disjoint union: the vertices of `other` are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let mut g = Graph::new(self.n + other.n);
        for (u, v) in self.edges() {
            g.add_edge(u, v);
        }
        for (u, v) in other.edges() {
            g.add_edge(u + self.n, v + self.n);
        }
        g
    }

    /// Reads the edges of the upper triangle in the fixed order
    /// (0,1),(0,2),(1,2),(0,3),... from the low bits of `code`.
    pub fn from_code(n: usize, code: u64) -> Graph {
        let mut g = Graph::new(n);
        let mut bit = 0;
        for j in 1..n {
            for i in 0..j {
                if code >> bit & 1 == 1 {
                    g.add_edge(i, j);
                }
                bit += 1;
            }
        }
        g
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Top,
    Bottom,
    General,
}

/// Bipartite graph with sides A (top) and B (bottom). Ids on each side are
/// dense and independent of each other.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct BipartiteGraph {
    a: usize,
    b: usize,
    top: Vec<Bits>,
    bottom: Vec<Bits>,
}

impl BipartiteGraph {
    pub fn new(a: usize, b: usize) -> Self {
        BipartiteGraph {
            a,
            b,
            top: vec![Bits::with_capacity(b); a],
            bottom: vec![Bits::with_capacity(a); b],
        }
    }

    pub fn from_edges(a: usize, b: usize, edges: &[(usize, usize)]) -> Self {
        let mut g = BipartiteGraph::new(a, b);
        for &(x, y) in edges {
            g.add_edge(x, y);
        }
        g
    }

    pub fn complete(a: usize, b: usize) -> Self {
        BipartiteGraph::new(a, b).complement()
    }

    pub fn a_size(&self) -> usize {
        self.a
    }

    pub fn b_size(&self) -> usize {
        self.b
    }

    pub fn add_edge(&mut self, x: usize, y: usize) {
        assert!(x < self.a && y < self.b, "edge {x}-{y} out of range");
        self.top[x].insert(y);
        self.bottom[y].insert(x);
    }

    pub fn has_edge(&self, x: usize, y: usize) -> bool {
        self.top[x].contains(y)
    }

    /// Neighbours of the top vertex `x`, as a subset of B.
    pub fn nbr_top(&self, x: usize) -> &Bits {
        &self.top[x]
    }

    /// Neighbours of the bottom vertex `y`, as a subset of A.
    pub fn nbr_bottom(&self, y: usize) -> &Bits {
        &self.bottom[y]
    }

    pub fn deg_top(&self, x: usize) -> usize {
        self.top[x].count_ones(..)
    }

    pub fn deg_bottom(&self, y: usize) -> usize {
        self.bottom[y].count_ones(..)
    }

    pub fn edge_count(&self) -> usize {
        self.top.iter().map(|r| r.count_ones(..)).sum()
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for x in 0..self.a {
            for y in self.top[x].ones() {
                out.push((x, y));
            }
        }
        out
    }

    /// Flips every cross pair; sides are unchanged.
    pub fn complement(&self) -> BipartiteGraph {
        let mut g = self.clone();
        for r in g.top.iter_mut().chain(g.bottom.iter_mut()) {
            r.toggle_range(..);
        }
        g
    }

    /// Swaps the roles of A and B.
    pub fn transpose(&self) -> BipartiteGraph {
        BipartiteGraph {
            a: self.b,
            b: self.a,
            top: self.bottom.clone(),
            bottom: self.top.clone(),
        }
    }

    /// `G[xs, ys]`, relabelled so that `xs[i]` becomes top `i` and `ys[j]`
    /// becomes bottom `j`.
    pub fn induced(&self, xs: &[usize], ys: &[usize]) -> BipartiteGraph {
        let mut g = BipartiteGraph::new(xs.len(), ys.len());
        for (i, &x) in xs.iter().enumerate() {
            for (j, &y) in ys.iter().enumerate() {
                if self.has_edge(x, y) {
                    g.add_edge(i, j);
                }
            }
        }
        g
    }

    /// Bipartite graph of the cross edges between two disjoint vertex sets
    /// of a general graph.
    pub fn between(g: &Graph, xs: &[usize], ys: &[usize]) -> BipartiteGraph {
        let mut h = BipartiteGraph::new(xs.len(), ys.len());
        for (i, &x) in xs.iter().enumerate() {
            for (j, &y) in ys.iter().enumerate() {
                if g.has_edge(x, y) {
                    h.add_edge(i, j);
                }
            }
        }
        h
    }

    /// General graph on `a + b` vertices: A keeps its ids, B is shifted by `a`.
    pub fn to_graph(&self) -> Graph {
        let mut g = Graph::new(self.a + self.b);
        for (x, y) in self.edges() {
            g.add_edge(x, self.a + y);
        }
        g
    }

    /// Union of the neighbourhoods of the top vertices in `xs`.
    pub fn nbr_top_set<I: IntoIterator<Item = usize>>(&self, xs: I) -> Bits {
        let mut s = Bits::with_capacity(self.b);
        for x in xs {
            s.union_with(&self.top[x]);
        }
        s
    }

    pub fn nbr_bottom_set<I: IntoIterator<Item = usize>>(&self, ys: I) -> Bits {
        let mut s = Bits::with_capacity(self.a);
        for y in ys {
            s.union_with(&self.bottom[y]);
        }
        s
    }

    /// Number of neighbours of top vertex `x` inside the bottom set `ys`.
    pub fn deg_top_in(&self, x: usize, ys: &Bits) -> usize {
        self.top[x].intersection_count(ys)
    }

    pub fn deg_bottom_in(&self, y: usize, xs: &Bits) -> usize {
        self.bottom[y].intersection_count(xs)
    }
}

#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct VertexSet {
    pub side: Side,
    pub members: Vec<usize>,
}

impl VertexSet {
    pub fn new<I: IntoIterator<Item = usize>>(side: Side, members: I) -> Self {
        let mut members: Vec<usize> = members.into_iter().collect();
        members.sort_unstable();
        members.dedup();
        VertexSet { side, members }
    }

    pub fn top<I: IntoIterator<Item = usize>>(members: I) -> Self {
        VertexSet::new(Side::Top, members)
    }

    pub fn bottom<I: IntoIterator<Item = usize>>(members: I) -> Self {
        VertexSet::new(Side::Bottom, members)
    }

    pub fn general<I: IntoIterator<Item = usize>>(members: I) -> Self {
        VertexSet::new(Side::General, members)
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Relation {
    /// Every cross pair is an edge.
    Joined,
    /// No cross pair is an edge.
    Cojoined,
    /// `N(V1) ⊇ V2`.
    Covers,
    /// Every vertex of `V2` has a non-neighbour in `V1`.
    Cocovers,
    /// Every vertex of `V2` has at least `r` neighbours in `V1`.
    RCovered(usize),
    /// Every vertex of `V2` has at least `r` non-neighbours in `V1`.
    RCocovered(usize),
}

/// Adjacency between vertices that carry a side tag.
pub trait Host {
    fn check(&self, s: &VertexSet) -> Result<()>;
    fn adjacent(&self, s1: Side, x: usize, s2: Side, y: usize) -> bool;
}

impl Host for Graph {
    fn check(&self, s: &VertexSet) -> Result<()> {
        if s.side != Side::General {
            return Err(Error::Argument(format!(
                "{:?} set passed for a general graph",
                s.side
            )));
        }
        match s.members.iter().find(|&&v| v >= self.n) {
            Some(v) => Err(Error::Argument(format!("vertex {v} out of range"))),
            None => Ok(()),
        }
    }

    fn adjacent(&self, _: Side, x: usize, _: Side, y: usize) -> bool {
        self.has_edge(x, y)
    }
}

impl Host for BipartiteGraph {
    fn check(&self, s: &VertexSet) -> Result<()> {
        let bound = match s.side {
            Side::Top => self.a,
            Side::Bottom => self.b,
            Side::General => {
                return Err(Error::Argument(
                    "general set passed for a bipartite graph".into(),
                ))
            }
        };
        match s.members.iter().find(|&&v| v >= bound) {
            Some(v) => Err(Error::Argument(format!("vertex {v} out of range"))),
            None => Ok(()),
        }
    }

    fn adjacent(&self, s1: Side, x: usize, s2: Side, y: usize) -> bool {
        match (s1, s2) {
            (Side::Top, Side::Bottom) => self.has_edge(x, y),
            (Side::Bottom, Side::Top) => self.has_edge(y, x),
            _ => false,
        }
    }
}

/// Decides the set relation between `v1` and `v2`. The sets must be
/// disjoint.
pub fn relation<H: Host>(g: &H, v1: &VertexSet, v2: &VertexSet, kind: Relation) -> Result<bool> {
    g.check(v1)?;
    g.check(v2)?;
    if v1.side == v2.side {
        if let Some(v) = v1.members.iter().find(|v| v2.members.binary_search(v).is_ok()) {
            return Err(Error::Argument(format!("sets overlap at vertex {v}")));
        }
    }
    let count = |y: usize| {
        v1.members
            .iter()
            .filter(|&&x| g.adjacent(v1.side, x, v2.side, y))
            .count()
    };
    let size = v1.members.len();
    let all = |p: &dyn Fn(usize) -> bool| v2.members.iter().all(|&y| p(y));
    Ok(match kind {
        Relation::Joined => all(&|y| count(y) == size),
        Relation::Cojoined => all(&|y| count(y) == 0),
        Relation::Covers => all(&|y| count(y) >= 1),
        Relation::Cocovers => all(&|y| count(y) < size),
        Relation::RCovered(r) => all(&|y| count(y) >= r),
        Relation::RCocovered(r) => all(&|y| size - count(y) >= r),
    })
}
