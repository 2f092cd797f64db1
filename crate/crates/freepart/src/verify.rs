//! Independent checks of labelled partitions and an exhaustive oracle for
//! the fewest blocks of a `(t, k)`-partition.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{BipartiteGraph, Graph};
use crate::partition::{BlockKind, LabelledPartition};
use crate::patterns::{self, Family, PatternSpec};

/// Largest graph accepted by [`brute_force_min_blocks`].
pub const BRUTE_FORCE_LIMIT: usize = 10;

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct BlockFailure {
    pub i: usize,
    pub kind: BlockKind,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct PairFailure {
    pub i: usize,
    pub j: usize,
    pub pattern: String,
    pub witness: Vec<usize>,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Report {
    pub verdict: bool,
    pub block_failures: Vec<BlockFailure>,
    pub pair_failures: Vec<PairFailure>,
}

impl Report {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

/// Witness of `2Λ_s` in `h` as local ids: two top centres, then `s`
/// leaves of each.
fn twin_witness(h: &BipartiteGraph, s: usize) -> Option<(Vec<usize>, Vec<usize>)> {
    let (x, y) = patterns::twin_star_pair(h, s)?;
    let mut only_x = h.nbr_top(x).clone();
    only_x.difference_with(h.nbr_top(y));
    let mut only_y = h.nbr_top(y).clone();
    only_y.difference_with(h.nbr_top(x));
    let leaves = only_x.ones().take(s).chain(only_y.ones().take(s)).collect();
    Some((vec![x, y], leaves))
}

/// Host vertices of an occurrence of `spec` in the cross graph of `xs`
/// (top) and `ys` (bottom), if any.
fn pair_witness(g: &Graph, xs: &[usize], ys: &[usize], spec: &PatternSpec) -> Option<Vec<usize>> {
    let h = BipartiteGraph::between(g, xs, ys);
    let lift = |tops: Vec<usize>, bottoms: Vec<usize>| -> Vec<usize> {
        tops.into_iter().map(|x| xs[x]).chain(bottoms.into_iter().map(|y| ys[y])).collect()
    };
    if spec.n == 2 {
        match spec.family {
            Family::BipLambda => return twin_witness(&h, spec.k).map(|(t, b)| lift(t, b)),
            Family::BipUp => return twin_witness(&h.transpose(), spec.k).map(|(b, t)| lift(t, b)),
            Family::BipMatching => return twin_witness(&h, 1).map(|(t, b)| lift(t, b)),
            _ => {}
        }
    }
    let e = patterns::find_induced_bipartite(&h, spec).ok()??;
    let a = h.a_size();
    Some(
        e.flat(a)
            .into_iter()
            .map(|v| if v < a { xs[v] } else { ys[v - a] })
            .collect(),
    )
}

/// Checks every block kind and every pair of blocks. A pair is checked
/// against its declared guarantees and, for `k >= 1`, against
/// `(2Λ_{2k-1}, 2⊓_{2k-1})` with the lower block index on top. `k = 0`
/// checks declared guarantees only.
pub fn verify_partition(g: &Graph, p: &LabelledPartition, k: usize) -> Result<Report> {
    p.owners(g.n())?;
    let mut block_failures = Vec::new();
    for (i, b) in p.blocks.iter().enumerate() {
        let ok = match b.kind {
            BlockKind::Clique => g.is_clique(&b.vertices),
            BlockKind::Independent => g.is_independent(&b.vertices),
            BlockKind::Unconstrained => true,
        };
        if !ok {
            block_failures.push(BlockFailure { i, kind: b.kind });
        }
    }
    let t = p.blocks.len();
    let mut declared: Vec<Vec<Vec<PatternSpec>>> = vec![vec![Vec::new(); t]; t];
    for gu in &p.guarantees {
        if gu.i >= t || gu.j >= t || gu.i == gu.j {
            return Err(Error::Argument(format!("guarantee names blocks {} and {}", gu.i, gu.j)));
        }
        declared[gu.i][gu.j].extend(patterns::parse_spec_list(&gu.free)?);
    }
    let default = if k >= 1 {
        vec![PatternSpec::lambda(2, 2 * k - 1), PatternSpec::up(2, 2 * k - 1)]
    } else {
        Vec::new()
    };
    let mut pair_failures = Vec::new();
    for i in 0..t {
        for j in 0..t {
            if i == j {
                continue;
            }
            let mut checks: Vec<PatternSpec> = declared[i][j].clone();
            if i < j {
                checks.extend(&default);
            }
            let (xs, ys) = (&p.blocks[i].vertices, &p.blocks[j].vertices);
            for spec in checks {
                if let Some(witness) = pair_witness(g, xs, ys, &spec) {
                    pair_failures.push(PairFailure {
                        i,
                        j,
                        pattern: spec.to_string(),
                        witness,
                    });
                    break;
                }
            }
        }
    }
    Ok(Report {
        verdict: block_failures.is_empty() && pair_failures.is_empty(),
        block_failures,
        pair_failures,
    })
}

struct Oracle<'a> {
    g: &'a Graph,
    s: Option<usize>,
    blocks: Vec<Vec<usize>>,
}

impl Oracle<'_> {
    fn block_ok(&self, b: &[usize]) -> bool {
        self.g.is_clique(b) || self.g.is_independent(b)
    }

    fn pair_ok(&self, i: usize, j: usize) -> bool {
        let Some(s) = self.s else { return true };
        let h = BipartiteGraph::between(self.g, &self.blocks[i], &self.blocks[j]);
        patterns::twin_star_pair(&h, s).is_none() && patterns::twin_star_pair(&h.transpose(), s).is_none()
    }

    /// Places vertices `v..` into at most `t` blocks.
    fn place(&mut self, v: usize, t: usize) -> bool {
        if v == self.g.n() {
            return true;
        }
        for i in 0..self.blocks.len().min(t) {
            self.blocks[i].push(v);
            let ok = self.block_ok(&self.blocks[i]) && (0..self.blocks.len()).all(|j| j == i || self.pair_ok(i, j));
            if ok && self.place(v + 1, t) {
                return true;
            }
            self.blocks[i].pop();
        }
        if self.blocks.len() < t {
            self.blocks.push(vec![v]);
            let i = self.blocks.len() - 1;
            if (0..i).all(|j| self.pair_ok(j, i)) && self.place(v + 1, t) {
                return true;
            }
            self.blocks.pop();
        }
        false
    }
}

/// Fewest blocks of a partition into cliques and independent sets with
/// `(2Λ_{2k-1}, 2⊓_{2k-1})`-free pairs, or `None` above `cap`. `k = 0`
/// imposes no pair condition (the cochromatic number).
pub fn brute_force_min_blocks(g: &Graph, k: usize, cap: usize) -> Result<Option<usize>> {
    if g.n() > BRUTE_FORCE_LIMIT {
        return Err(Error::SizeLimit {
            what: "brute force vertex count".into(),
            limit: BRUTE_FORCE_LIMIT,
            got: g.n(),
        });
    }
    if g.n() == 0 {
        return Ok(Some(0));
    }
    let mut o = Oracle {
        g,
        s: (k >= 1).then(|| 2 * k - 1),
        blocks: Vec::new(),
    };
    for t in 1..=cap.min(g.n()) {
        o.blocks.clear();
        if o.place(0, t) {
            return Ok(Some(t));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::{Block, Guarantee};

    #[test]
    fn k5_one_block() {
        let p = LabelledPartition {
            blocks: vec![Block {
                kind: BlockKind::Clique,
                vertices: (0..5).collect(),
            }],
            guarantees: vec![],
        };
        let r = verify_partition(&Graph::complete(5), &p, 3).unwrap();
        assert!(r.verdict);
        assert_eq!(brute_force_min_blocks(&Graph::complete(5), 1, 5).unwrap(), Some(1));
    }

    #[test]
    fn failures_are_reported() {
        // 2K2 split as {0,2} / {1,3}: both blocks independent, cross graph 2K2.
        let g = Graph::from_edges(4, &[(0, 1), (2, 3)]);
        let p = LabelledPartition {
            blocks: vec![
                Block {
                    kind: BlockKind::Independent,
                    vertices: vec![0, 2],
                },
                Block {
                    kind: BlockKind::Clique,
                    vertices: vec![1, 3],
                },
            ],
            guarantees: vec![Guarantee {
                i: 0,
                j: 1,
                free: "matching(2)".into(),
            }],
        };
        let r = verify_partition(&g, &p, 0).unwrap();
        assert!(!r.verdict);
        assert_eq!(r.block_failures, vec![BlockFailure { i: 1, kind: BlockKind::Clique }]);
        assert_eq!(r.pair_failures[0].witness, vec![0, 2, 1, 3]);
        let json: serde_json::Value = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(json["verdict"], false);
        let mut q = p.clone();
        q.blocks[1].vertices.pop();
        assert!(verify_partition(&g, &q, 1).is_err());
    }

    #[test]
    fn oracle_limits() {
        assert_eq!(brute_force_min_blocks(&Graph::cycle(5), 0, 5).unwrap(), Some(3));
        assert_eq!(brute_force_min_blocks(&Graph::cycle(5), 0, 2).unwrap(), None);
        assert!(matches!(
            brute_force_min_blocks(&Graph::new(11), 1, 3),
            Err(Error::SizeLimit { .. })
        ));
    }
}
