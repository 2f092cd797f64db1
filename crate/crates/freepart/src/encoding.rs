//! Neighbourhood-difference codec for bipartite graphs without `2Λ_s`.
//!
//! Top vertices are listed by non-decreasing degree; each record stores
//! the symmetric difference of its neighbourhood with the previous one.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{bits_from, BipartiteGraph, Bits};
use crate::patterns::{self, PatternSpec};

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Record {
    pub vertex: usize,
    /// `N(a_i) △ N(a_{i-1})`, or `N(a_1)` for the first record. Sorted.
    pub diff: Vec<usize>,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Code {
    pub s: usize,
    pub a_size: usize,
    pub b_size: usize,
    pub records: Vec<Record>,
}

impl Code {
    /// Vertex labels plus diff entries.
    pub fn token_count(&self) -> usize {
        self.records.iter().map(|r| 1 + r.diff.len()).sum()
    }

    /// `2sn` with `n = |A| + |B|`.
    pub fn token_bound(&self) -> usize {
        2 * self.s * (self.a_size + self.b_size)
    }

    pub fn within_bound(&self) -> bool {
        self.token_count() <= self.token_bound()
    }

    /// `code s |A| |B|`, then `a : j1 j2 ...` per record.
    pub fn to_wire(&self) -> String {
        let mut out = format!("code {} {} {}\n", self.s, self.a_size, self.b_size);
        for r in &self.records {
            out.push_str(&r.vertex.to_string());
            out.push_str(" :");
            for j in &r.diff {
                out.push(' ');
                out.push_str(&j.to_string());
            }
            out.push('\n');
        }
        out
    }

    /// Parses the wire format. Blank lines and `#` comments are skipped;
    /// ranges are checked by [`decode`].
    pub fn from_wire(text: &str) -> Result<Code> {
        let mut code: Option<Code> = None;
        let mut offset = 0;
        for line in text.split_inclusive('\n') {
            let start = offset;
            offset += line.len();
            let content = line.split('#').next().unwrap_or("");
            let toks: Vec<&str> = content.split_whitespace().collect();
            if toks.is_empty() {
                continue;
            }
            let perr = |msg: String| Error::Parse { offset: start, msg };
            let num = |s: &str| s.parse::<usize>().map_err(|_| perr(format!("expected an integer, got {s:?}")));
            match &mut code {
                None => {
                    if toks.len() != 4 || toks[0] != "code" {
                        return Err(perr("expected header `code <s> <|A|> <|B|>`".into()));
                    }
                    code = Some(Code {
                        s: num(toks[1])?,
                        a_size: num(toks[2])?,
                        b_size: num(toks[3])?,
                        records: Vec::new(),
                    });
                }
                Some(c) => {
                    if toks.len() < 2 || toks[1] != ":" {
                        return Err(perr("expected a record `a : j1 j2 ...`".into()));
                    }
                    c.records.push(Record {
                        vertex: num(toks[0])?,
                        diff: toks[2..].iter().map(|t| num(t)).collect::<Result<_>>()?,
                    });
                }
            }
        }
        code.ok_or_else(|| Error::Parse {
            offset: text.len(),
            msg: "missing `code` header".into(),
        })
    }
}

/// Encodes a `2Λ_s`-free bipartite graph. Degree ties go to the lower id.
pub fn encode(b: &BipartiteGraph, s: usize) -> Result<Code> {
    if s == 0 {
        return Err(Error::Argument("s must be positive".into()));
    }
    if let Some((x, y)) = patterns::twin_star_pair(b, s) {
        return Err(Error::Contains {
            pattern: PatternSpec::lambda(2, s).to_string(),
            witness: vec![x, y],
        });
    }
    let mut order: Vec<usize> = (0..b.a_size()).collect();
    order.sort_by_key(|&x| (b.deg_top(x), x));
    let mut prev = Bits::with_capacity(b.b_size());
    let mut records = Vec::with_capacity(order.len());
    for x in order {
        let cur = b.nbr_top(x);
        if prev.difference_count(cur) >= s {
            return Err(Error::Contract(format!("backward difference at vertex {x} reaches {s}")));
        }
        records.push(Record {
            vertex: x,
            diff: prev.symmetric_difference(cur).collect(),
        });
        prev = cur.clone();
    }
    Ok(Code {
        s,
        a_size: b.a_size(),
        b_size: b.b_size(),
        records,
    })
}

pub fn decode(c: &Code) -> Result<BipartiteGraph> {
    if c.records.len() != c.a_size {
        return Err(Error::Argument(format!(
            "{} records for {} top vertices",
            c.records.len(),
            c.a_size
        )));
    }
    let mut g = BipartiteGraph::new(c.a_size, c.b_size);
    let mut seen = vec![false; c.a_size];
    let mut cur = Bits::with_capacity(c.b_size);
    for r in &c.records {
        if r.vertex >= c.a_size || std::mem::replace(&mut seen[r.vertex], true) {
            return Err(Error::Argument(format!("label {} is out of range or repeated", r.vertex)));
        }
        if let Some(&j) = r.diff.iter().find(|&&j| j >= c.b_size) {
            return Err(Error::Argument(format!("bottom index {j} out of range")));
        }
        cur.symmetric_difference_with(&bits_from(c.b_size, r.diff.iter().copied()));
        for y in cur.ones() {
            g.add_edge(r.vertex, y);
        }
    }
    Ok(g)
}
